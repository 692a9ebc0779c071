//! Quadrature spaces against analytic integrals on [0, 1].

use ostrowski::{inner, norm_sq, ostrowski_bound, C64, Space, Vector};

fn trap(n: usize) -> Space<f64> {
    Space::trapezoid_rule(n, 0.0, 1.0).unwrap()
}

#[test]
fn constant_function_has_unit_norm() {
    let s = trap(3);
    let one: Vector<f64> = s.sample_function(|_| 1.0).unwrap();
    assert_eq!(one.coords(), &[1.0, 1.0, 1.0]);
    assert_eq!(norm_sq(&s, &one).unwrap(), 1.0);
}

#[test]
fn x_squared_norm_converges_quadratically() {
    // Trapezoid error for the integral of x^4 is h^2/3 + O(h^4).
    let err = |n: usize| {
        let s = trap(n);
        let f: Vector<f64> = s.sample_function(|x| x * x).unwrap();
        norm_sq(&s, &f).unwrap() - 0.2
    };
    let (e1, e2, e3) = (err(41), err(81), err(161));
    assert!(e1 > 0.0 && e2 > 0.0 && e3 > 0.0);
    for (coarse, fine) in [(e1, e2), (e2, e3)] {
        let ratio = coarse / fine;
        assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio}");
    }
    assert!((e3 - (1.0f64 / 160.0).powi(2) / 3.0).abs() < 1e-8);
}

#[test]
fn complex_inner_product_converges() {
    // int_0^1 x e^{i pi x} dx = -2/pi^2 + i/pi (by parts).
    let exact = C64::new(-2.0 / std::f64::consts::PI.powi(2), 1.0 / std::f64::consts::PI);
    let err = |n: usize| {
        let s = trap(n);
        let f: Vector<C64> = s
            .sample_function(|x| C64::from_polar(1.0, std::f64::consts::PI * x))
            .unwrap();
        let g: Vector<C64> = s.sample_function(|x| C64::new(x, 0.0)).unwrap();
        (inner(&s, &f, &g).unwrap() - exact).norm()
    };
    let ratio = err(101) / err(201);
    assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio}");
    assert!(err(201) < 1e-4);
}

#[test]
fn l2_bound_for_one_and_x() {
    // |f|^2 = 1, |g|^2 = 1/3, <f,g> = 1/2, det = 1/12.
    let s = trap(201);
    let f: Vector<f64> = s.sample_function(|_| 1.0).unwrap();
    let g: Vector<f64> = s.sample_function(|x| x).unwrap();
    let bound = ostrowski_bound(&s, &f, &g).unwrap();
    assert!((bound - 1.0 / 12.0).abs() < 2e-4);
}
