//! Independent reference computations for the integration tests. Everything
//! here works on raw `Complex64` slices and explicit weights, and does not
//! call into the library's arithmetic.

#![allow(dead_code)]

use num_complex::Complex64 as C;
use ostrowski::{Scalar, Space, Vector};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

pub fn to_c64<S: Scalar<Real = f64>>(v: &Vector<S>) -> Vec<C> {
    v.iter().map(|c| C::new(c.re(), c.im())).collect()
}

pub fn oracle_inner(w: &[f64], u: &[C], v: &[C]) -> C {
    let mut acc = C::new(0.0, 0.0);
    for i in 0..w.len() {
        acc += u[i] * v[i].conj() * w[i];
    }
    acc
}

pub fn oracle_norm_sq(w: &[f64], u: &[C]) -> f64 {
    oracle_inner(w, u, u).re
}

/// Gram determinant and bound straight from the definitions.
pub fn oracle_bound(w: &[f64], a: &[C], b: &[C]) -> (f64, f64) {
    let aa = oracle_norm_sq(w, a);
    let bb = oracle_norm_sq(w, b);
    let ab = oracle_inner(w, a, b);
    let det = aa * bb - ab.norm_sqr();
    (det, det / aa)
}

/// Minimizes |x|^2 subject to <x,a> = 0, <x,b> = 1 through the stationarity
/// condition x = l1 a + l2 b and Cramer's rule on the 2x2 Gram system
///
/// ```text
/// l1 <a,a> + l2 <b,a> = 0
/// l1 <a,b> + l2 <b,b> = 1
/// ```
pub fn lagrange_min_norm(w: &[f64], a: &[C], b: &[C]) -> Vec<C> {
    let g11 = oracle_inner(w, a, a);
    let g12 = oracle_inner(w, b, a);
    let g21 = oracle_inner(w, a, b);
    let g22 = oracle_inner(w, b, b);
    let det = g11 * g22 - g12 * g21;
    let (r1, r2) = (C::new(0.0, 0.0), C::new(1.0, 0.0));
    let l1 = (r1 * g22 - g12 * r2) / det;
    let l2 = (g11 * r2 - r1 * g21) / det;
    a.iter().zip(b).map(|(&ai, &bi)| l1 * ai + l2 * bi).collect()
}

/// Removes from `v` its component in span{a, b} (two passes).
pub fn oracle_complement(w: &[f64], a: &[C], b: &[C], v: &[C]) -> Vec<C> {
    let g11 = oracle_inner(w, a, a);
    let g12 = oracle_inner(w, b, a);
    let g21 = oracle_inner(w, a, b);
    let g22 = oracle_inner(w, b, b);
    let det = g11 * g22 - g12 * g21;
    let mut out = v.to_vec();
    for _ in 0..2 {
        // coefficients m with <out - m1 a - m2 b, a> = 0 and <.., b> = 0
        let ra = oracle_inner(w, &out, a);
        let rb = oracle_inner(w, &out, b);
        let m1 = (ra * g22 - g12 * rb) / det;
        let m2 = (g11 * rb - ra * g21) / det;
        for i in 0..out.len() {
            out[i] -= m1 * a[i] + m2 * b[i];
        }
    }
    out
}

/// Real-arithmetic extremizer with sign +1:
/// x_k = (b_k A - a_k C) / (sqrt(A) sqrt(A B - C^2)).
pub fn real_sign_plus_extremizer(w: &[f64], a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = w.len();
    let aa: f64 = (0..n).map(|i| w[i] * a[i] * a[i]).sum();
    let bb: f64 = (0..n).map(|i| w[i] * b[i] * b[i]).sum();
    let ab: f64 = (0..n).map(|i| w[i] * a[i] * b[i]).sum();
    let denom = aa.sqrt() * (aa * bb - ab * ab).sqrt();
    (0..n).map(|k| (b[k] * aa - a[k] * ab) / denom).collect()
}

pub fn random_vector<S: Scalar<Real = f64>, R: Rng>(dim: usize, rng: &mut R) -> Vector<S> {
    let coords = (0..dim)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            if S::IS_COMPLEX {
                let im: f64 = StandardNormal.sample(rng);
                S::from_parts(re, im).unwrap()
            } else {
                S::from_real(re)
            }
        })
        .collect();
    Vector::new(coords).unwrap()
}

pub fn random_scalar<S: Scalar<Real = f64>, R: Rng>(rng: &mut R) -> S {
    random_vector::<S, R>(1, rng)[0]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Dense,
    Weighted,
}

pub fn random_space<R: Rng>(kind: Kind, dim: usize, rng: &mut R) -> Space<f64> {
    match kind {
        Kind::Dense => Space::dense(dim).unwrap(),
        Kind::Weighted => {
            let u = Uniform::new(0.25, 4.0).unwrap();
            Space::weighted((0..dim).map(|_| u.sample(rng)).collect()).unwrap()
        }
    }
}
