//! Closed-form operations: inner products, Gram summaries, the extremal
//! bound for `|<x, b>|^2` over unit vectors orthogonal to `a`, its
//! extremizer, the minimum-norm solution of `<x, a> = 0, <x, b> = 1`, and the
//! Schwarz-type inequalities they rest on.
//!
//! Inner products are linear in the first argument and conjugate-linear in
//! the second.

use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};
use crate::space::Space;
use crate::vector::{check_same_len, Vector};

/// Numerical tolerances shared by the closed-form operations and the
/// verification harness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    /// Relative slack for constraint residuals and attainment.
    pub rel_eps: T,
    /// Pairs with `det <= dependence_eps * |a|^2 |b|^2` are rejected as
    /// linearly dependent.
    pub dependence_eps: T,
}

impl<T: Real> Tolerances<T> {
    pub fn new(rel_eps: T, dependence_eps: T) -> Result<Self> {
        check_unit_interval("rel_eps", rel_eps)?;
        check_unit_interval("dependence_eps", dependence_eps)?;
        Ok(Self {
            rel_eps,
            dependence_eps,
        })
    }

    pub fn with_rel_eps(rel_eps: T) -> Result<Self> {
        Self::new(rel_eps, T::lit(T::DEFAULT_DEPENDENCE_EPS))
    }
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            rel_eps: T::lit(T::DEFAULT_REL_EPS),
            dependence_eps: T::lit(T::DEFAULT_DEPENDENCE_EPS),
        }
    }
}

fn check_unit_interval<T: Real>(name: &'static str, value: T) -> Result<()> {
    if value > T::zero() && value < T::one() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance {
            name,
            value: value.to_f64_lossy(),
        })
    }
}

/// `|a|^2`, `|b|^2`, `<a, b>` and the Gram determinant
/// `|a|^2 |b|^2 - |<a, b>|^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GramSummary<S: Scalar> {
    pub norm_a_sq: S::Real,
    pub norm_b_sq: S::Real,
    pub inner_ab: S,
    /// Never negative; values within [`gram_rounding_band`] of zero are
    /// reported as exactly zero.
    pub det: S::Real,
}

impl<S: Scalar> GramSummary<S> {
    /// Independence test shared by the extremizer and the minimum-norm
    /// solver.
    pub fn check_independent(&self, tol: &Tolerances<S::Real>) -> Result<()> {
        let threshold = tol.dependence_eps * self.norm_a_sq * self.norm_b_sq;
        if self.det > threshold {
            Ok(())
        } else {
            Err(Error::DependentVectors {
                det: self.det.to_f64_lossy(),
                threshold: threshold.to_f64_lossy(),
            })
        }
    }
}

/// Minimum-norm vector satisfying `<x, a> = 0` and `<x, b> = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinNormSolution<S: Scalar> {
    pub x: Vector<S>,
    /// `|x|^2 = |a|^2 / det`.
    pub value: S::Real,
}

/// Both sides of the Schwarz inequality applied to the components of `z` and
/// `d` orthogonal to `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeflatedSides<T> {
    pub lhs: T,
    pub rhs: T,
}

fn check_operand<S: Scalar>(space: &Space<S::Real>, u: &Vector<S>) -> Result<()> {
    check_same_len(space.dim(), u.len())?;
    match u.first_non_finite() {
        Some(index) => Err(Error::NonFiniteInput { index }),
        None => Ok(()),
    }
}

/// Relative rounding band of the computed Gram determinant for `n`-term
/// sums: determinants within `band * |a|^2 |b|^2` of zero are set to zero.
pub fn gram_rounding_band<T: Real>(n: usize) -> T {
    T::lit(4.0 * (n as f64 + 2.0)) * <T as Float>::epsilon()
}

// Unchecked kernels; callers validate dimensions and finiteness once.

#[inline]
pub(crate) fn inner_raw<S: Scalar>(weights: &[S::Real], u: &[S], v: &[S]) -> S {
    weights
        .iter()
        .zip(u)
        .zip(v)
        .fold(S::zero(), |acc, ((&w, &ui), &vi)| acc + (ui * vi.conj()).scale(w))
}

#[inline]
pub(crate) fn norm_sq_raw<S: Scalar>(weights: &[S::Real], u: &[S]) -> S::Real {
    weights
        .iter()
        .zip(u)
        .fold(S::Real::zero(), |acc, (&w, &ui)| acc + w * ui.abs_sq())
}

/// `z - (<z, c>/|c|^2) c` for `norm_c_sq > 0`.
pub(crate) fn project_out_raw<S: Scalar>(
    weights: &[S::Real],
    z: &Vector<S>,
    c: &Vector<S>,
    norm_c_sq: S::Real,
) -> Vector<S> {
    let coef = inner_raw(weights, z.coords(), c.coords()).scale(norm_c_sq.recip());
    let mut out = z.clone();
    out.add_scaled_in_place(-coef, c);
    out
}

fn gram_raw<S: Scalar>(weights: &[S::Real], a: &[S], b: &[S]) -> GramSummary<S> {
    let norm_a_sq = norm_sq_raw(weights, a);
    let norm_b_sq = norm_sq_raw(weights, b);
    let inner_ab = inner_raw(weights, a, b);
    let scale = norm_a_sq * norm_b_sq;
    let raw = scale - inner_ab.abs_sq();
    debug_assert!(
        raw >= -(S::Real::epsilon().sqrt() * scale),
        "Gram determinant far below zero: {raw:?}"
    );
    let det = if raw.abs() <= gram_rounding_band::<S::Real>(weights.len()) * scale {
        S::Real::zero()
    } else {
        raw
    };
    GramSummary {
        norm_a_sq,
        norm_b_sq,
        inner_ab,
        det,
    }
}

/// `sum_i w_i u_i conj(v_i)`.
pub fn inner<S: Scalar>(space: &Space<S::Real>, u: &Vector<S>, v: &Vector<S>) -> Result<S> {
    check_operand(space, u)?;
    check_operand(space, v)?;
    Ok(inner_raw(space.weights(), u.coords(), v.coords()))
}

/// `Re <u, u>`, accumulated from `|u_i|^2` so it is exactly real and
/// nonnegative.
pub fn norm_sq<S: Scalar>(space: &Space<S::Real>, u: &Vector<S>) -> Result<S::Real> {
    check_operand(space, u)?;
    Ok(norm_sq_raw(space.weights(), u.coords()))
}

pub fn gram2<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
) -> Result<GramSummary<S>> {
    check_operand(space, a)?;
    check_operand(space, b)?;
    Ok(gram_raw(space.weights(), a.coords(), b.coords()))
}

/// Supremum of `|<x, b>|^2` over unit vectors `x` orthogonal to `a`:
/// `(|a|^2 |b|^2 - |<a, b>|^2) / |a|^2`.
pub fn ostrowski_bound<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
) -> Result<S::Real> {
    let g = gram2(space, a, b)?;
    bound_from_gram(&g)
}

pub(crate) fn bound_from_gram<S: Scalar>(g: &GramSummary<S>) -> Result<S::Real> {
    if g.norm_a_sq == S::Real::zero() {
        return Err(Error::ZeroVector { name: "a" });
    }
    Ok(g.det / g.norm_a_sq)
}

/// The unit vector orthogonal to `a` that attains [`ostrowski_bound`]:
/// `x = nu (b - (conj<a, b>/|a|^2) a)` with `nu = |a| / sqrt(det)` taken
/// real and positive.
pub fn extremizer<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
    tol: &Tolerances<S::Real>,
) -> Result<Vector<S>> {
    let g = gram2(space, a, b)?;
    if g.norm_a_sq == S::Real::zero() {
        return Err(Error::ZeroVector { name: "a" });
    }
    g.check_independent(tol)?;
    let coef = g.inner_ab.conj().scale(g.norm_a_sq.recip());
    let nu = g.norm_a_sq.sqrt() / g.det.sqrt();
    let mut x = b.clone();
    x.add_scaled_in_place(-coef, a);
    x.scale_in_place(nu);
    Ok(x)
}

/// `x = (|a|^2 b - <b, a> a) / det`, the smallest vector with
/// `<x, a> = 0` and `<x, b> = 1`; its squared norm is `|a|^2 / det`.
pub fn min_norm_solution<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
    tol: &Tolerances<S::Real>,
) -> Result<MinNormSolution<S>> {
    let g = gram2(space, a, b)?;
    if g.norm_a_sq == S::Real::zero() {
        return Err(Error::ZeroVector { name: "a" });
    }
    g.check_independent(tol)?;
    let inv_det = g.det.recip();
    // <b, a> = conj(<a, b>)
    let coef = -g.inner_ab.conj().scale(inv_det);
    let mut x = b.scaled(S::from_real(g.norm_a_sq * inv_det));
    x.add_scaled_in_place(coef, a);
    Ok(MinNormSolution {
        x,
        value: g.norm_a_sq * inv_det,
    })
}

/// `|u|^2 |v|^2 - |<u, v>|^2`, unclamped.
pub fn schwarz_gap<S: Scalar>(
    space: &Space<S::Real>,
    u: &Vector<S>,
    v: &Vector<S>,
) -> Result<S::Real> {
    check_operand(space, u)?;
    check_operand(space, v)?;
    let w = space.weights();
    let (u, v) = (u.coords(), v.coords());
    Ok(norm_sq_raw(w, u) * norm_sq_raw(w, v) - inner_raw(w, u, v).abs_sq())
}

/// `z - (<z, c>/|c|^2) c`.
pub fn project_out<S: Scalar>(
    space: &Space<S::Real>,
    z: &Vector<S>,
    c: &Vector<S>,
) -> Result<Vector<S>> {
    check_operand(space, z)?;
    check_operand(space, c)?;
    let norm_c_sq = norm_sq_raw(space.weights(), c.coords());
    if norm_c_sq == S::Real::zero() {
        return Err(Error::ZeroVector { name: "c" });
    }
    Ok(project_out_raw(space.weights(), z, c, norm_c_sq))
}

/// `lhs = (|z|^2|c|^2 - |<z,c>|^2)(|d|^2|c|^2 - |<d,c>|^2)` and
/// `rhs = |<z,d>|c|^2 - <z,c><c,d>|^2`; `lhs >= rhs` up to rounding.
pub fn deflated_schwarz<S: Scalar>(
    space: &Space<S::Real>,
    z: &Vector<S>,
    c: &Vector<S>,
    d: &Vector<S>,
) -> Result<DeflatedSides<S::Real>> {
    check_operand(space, z)?;
    check_operand(space, c)?;
    check_operand(space, d)?;
    let w = space.weights();
    let (z, c, d) = (z.coords(), c.coords(), d.coords());
    let cc = norm_sq_raw(w, c);
    if cc == S::Real::zero() {
        return Err(Error::ZeroVector { name: "c" });
    }
    let zz = norm_sq_raw(w, z);
    let dd = norm_sq_raw(w, d);
    let zc = inner_raw(w, z, c);
    let dc = inner_raw(w, d, c);
    let zd = inner_raw(w, z, d);
    let cd = dc.conj();
    let lhs = (zz * cc - zc.abs_sq()) * (dd * cc - dc.abs_sq());
    let rhs = (zd.scale(cc) - zc * cd).abs_sq();
    Ok(DeflatedSides { lhs, rhs })
}
