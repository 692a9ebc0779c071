//! Randomized verification of the closed forms.
//!
//! Each check draws its samples from a ChaCha stream determined by the seed,
//! a per-check salt and the trial index, so trials can run in parallel and
//! any trial can be replayed in isolation. Reports keep the worst trial; ties
//! go to the lowest trial index, which makes reports independent of thread
//! scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};
use crate::ops::{
    bound_from_gram, deflated_schwarz, extremizer, gram2, inner_raw, min_norm_solution,
    norm_sq_raw, ostrowski_bound, project_out_raw, Tolerances,
};
use crate::scalar::{Real, Scalar};
use crate::space::Space;
use crate::vector::{check_same_len, Vector};

/// Draws whose projected squared norm falls below this are discarded.
pub const MIN_SAMPLE_NORM_SQ: f64 = 1e-20;

/// Consecutive degenerate draws tolerated before giving up.
pub const MAX_RETRIES: usize = 100;

pub const CHECK_BOUND: &str = "bound";
pub const CHECK_MIN_NORM: &str = "min_norm";
pub const CHECK_DEFLATED: &str = "deflated_schwarz";
pub const CHECK_SCALE_COVARIANCE: &str = "scale_covariance";
pub const CHECK_REAL_CONSISTENCY: &str = "real_consistency";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

impl Default for RngSeed {
    fn default() -> Self {
        RngSeed(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Salt {
    Feasible = 1,
    MinNorm = 2,
    Deflated = 3,
}

fn trial_rng(seed: RngSeed, salt: Salt, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    rng.set_stream(((salt as u64) << 56) ^ trial as u64);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Passed => "passed",
            Status::Failed => "failed",
            Status::Skipped => "skipped",
        }
    }
}

/// Outcome of one verification check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<S: Scalar> {
    pub check_name: String,
    pub trials: usize,
    /// Largest violation over all trials (0 when nothing was violated).
    pub worst_violation: S::Real,
    pub tolerance: S::Real,
    /// `worst_violation <= tolerance`.
    pub passed: bool,
    /// Trial index of the worst case.
    pub worst_trial: Option<usize>,
    /// The worst-case vector; present whenever `trials > 0`.
    pub witness: Option<Vector<S>>,
    /// Set when the check could not run on this input.
    pub skipped: Option<String>,
}

impl<S: Scalar> VerificationReport<S> {
    fn from_worst(
        check_name: &str,
        trials: usize,
        tolerance: S::Real,
        worst: Option<(S::Real, usize, Vector<S>)>,
    ) -> Self {
        let (worst_violation, worst_trial, witness) = match worst {
            Some((v, t, w)) => (v, Some(t), Some(w)),
            None => (S::Real::zero(), None, None),
        };
        Self {
            check_name: check_name.to_owned(),
            trials,
            worst_violation,
            tolerance,
            passed: worst_violation <= tolerance,
            worst_trial,
            witness,
            skipped: None,
        }
    }

    pub fn skipped(check_name: &str, tolerance: S::Real, reason: String) -> Self {
        Self {
            check_name: check_name.to_owned(),
            trials: 0,
            worst_violation: S::Real::zero(),
            tolerance,
            passed: true,
            worst_trial: None,
            witness: None,
            skipped: Some(reason),
        }
    }

    pub fn status(&self) -> Status {
        if self.skipped.is_some() {
            Status::Skipped
        } else if self.passed {
            Status::Passed
        } else {
            Status::Failed
        }
    }
}

/// NaN counts as the worst possible violation.
fn violation_key<T: Real>(v: T) -> T {
    if v.is_nan() {
        T::infinity()
    } else {
        v
    }
}

fn worse<T: Real>(x: (T, usize), y: (T, usize)) -> (T, usize) {
    let (kx, ky) = (violation_key(x.0), violation_key(y.0));
    if kx > ky || (kx == ky && x.1 < y.1) {
        x
    } else {
        y
    }
}

/// Runs `trial` for every index in `range` in parallel and returns the worst
/// `(violation, index)`, or `None` for an empty range.
fn worst_trial<T, F>(range: std::ops::Range<usize>, trial: F) -> Result<Option<(T, usize)>>
where
    T: Real,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    range
        .into_par_iter()
        .map(|t| trial(t).map(|v| Some((v, t))))
        .try_reduce(
            || None,
            |x, y| {
                Ok(match (x, y) {
                    (Some(x), Some(y)) => Some(worse(x, y)),
                    (x, None) => x,
                    (None, y) => y,
                })
            },
        )
}

fn check_a<S: Scalar>(space: &Space<S::Real>, a: &Vector<S>) -> Result<S::Real> {
    let g = gram2(space, a, a)?;
    if g.norm_a_sq == S::Real::zero() {
        return Err(Error::ZeroVector { name: "a" });
    }
    Ok(g.norm_a_sq)
}

fn random_vector<S: Scalar, R: rand::Rng>(dim: usize, rng: &mut R) -> Vector<S> {
    Vector::from_vec_unchecked((0..dim).map(|_| S::sample_normal(rng)).collect())
}

fn feasible_from_rng<S: Scalar, R: rand::Rng>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    norm_a_sq: S::Real,
    rng: &mut R,
) -> Result<Vector<S>> {
    let w = space.weights();
    let floor = S::Real::lit(MIN_SAMPLE_NORM_SQ);
    for _ in 0..MAX_RETRIES {
        let g = random_vector::<S, _>(space.dim(), rng);
        let p = project_out_raw(w, &g, a, norm_a_sq);
        let n = norm_sq_raw(w, p.coords());
        if n < floor {
            continue;
        }
        // Second pass removes the cancellation residual of the first.
        let mut x = project_out_raw(w, &p, a, norm_a_sq);
        let n = norm_sq_raw(w, x.coords());
        x.scale_in_place(n.sqrt().recip());
        return Ok(x);
    }
    Err(Error::DegenerateSample {
        retries: MAX_RETRIES,
    })
}

/// Draws a unit vector orthogonal to `a`: standard normal coordinates,
/// projected off `a` and normalized.
pub fn sample_feasible<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    seed: RngSeed,
) -> Result<Vector<S>> {
    let norm_a_sq = check_a(space, a)?;
    feasible_from_rng(space, a, norm_a_sq, &mut trial_rng(seed, Salt::Feasible, 0))
}

/// Feasible sample for a given trial index; `sample_feasible` is trial 0.
pub fn sample_feasible_trial<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    seed: RngSeed,
    trial: usize,
) -> Result<Vector<S>> {
    let norm_a_sq = check_a(space, a)?;
    feasible_from_rng(space, a, norm_a_sq, &mut trial_rng(seed, Salt::Feasible, trial))
}

/// Checks `|<x, b>|^2 <= bound` over `trials` feasible samples. The
/// extremizer is evaluated as an extra trial (index 0) and must attain the
/// bound; dependent pairs omit it.
pub fn verify_bound<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
    trials: usize,
    tol: &Tolerances<S::Real>,
    seed: RngSeed,
) -> Result<VerificationReport<S>> {
    let g = gram2(space, a, b)?;
    let bound = bound_from_gram(&g)?;
    let one = S::Real::one();
    let tolerance = tol.rel_eps * (one + bound);
    let w = space.weights();

    let mut worst = None;
    let mut count = 0;
    match extremizer(space, a, b, tol) {
        Ok(x) => {
            let attained = inner_raw(w, x.coords(), b.coords()).abs_sq();
            let orth = inner_raw(w, x.coords(), a.coords()).abs() / g.norm_a_sq.sqrt();
            let unit = (norm_sq_raw(w, x.coords()).sqrt() - one).abs();
            let v = (attained - bound)
                .abs()
                .max((one + bound) * orth)
                .max((one + bound) * unit);
            worst = Some((v, 0usize, x));
            count += 1;
        }
        Err(Error::DependentVectors { .. }) => {}
        Err(e) => return Err(e),
    }

    let sampled = worst_trial(1..trials + 1, |t| {
        let x = feasible_from_rng(space, a, g.norm_a_sq, &mut trial_rng(seed, Salt::Feasible, t))?;
        let value = inner_raw(w, x.coords(), b.coords()).abs_sq();
        Ok((value - bound).max(S::Real::zero()))
    })?;
    count += trials;

    if let Some((v, t)) = sampled {
        let replace = match &worst {
            Some((wv, wt, _)) => worse((v, t), (*wv, *wt)).1 == t,
            None => true,
        };
        if replace {
            let x = sample_feasible_trial(space, a, seed, t)?;
            worst = Some((v, t, x));
        }
    }
    Ok(VerificationReport::from_worst(CHECK_BOUND, count, tolerance, worst))
}

/// Random competitor orthogonal to both `a` and `b`: project off `a`, then
/// off `b_perp = b - proj_a b`, then off `a` once more.
fn competitor_direction<S: Scalar, R: rand::Rng>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    norm_a_sq: S::Real,
    b_perp: &Vector<S>,
    norm_b_perp_sq: S::Real,
    rng: &mut R,
) -> Vector<S> {
    let w = space.weights();
    let g = random_vector::<S, _>(space.dim(), rng);
    let p = project_out_raw(w, &g, a, norm_a_sq);
    let p = project_out_raw(w, &p, b_perp, norm_b_perp_sq);
    project_out_raw(w, &p, a, norm_a_sq)
}

/// Checks the minimum-norm solution: its constraint residuals (trial 0) and
/// that no feasible competitor `x* + w`, `w` orthogonal to `a` and `b`, has a
/// smaller norm. Violations are scaled by `1 + |x*|^2`.
pub fn verify_min_norm<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
    trials: usize,
    tol: &Tolerances<S::Real>,
    seed: RngSeed,
) -> Result<VerificationReport<S>> {
    let sol = min_norm_solution(space, a, b, tol)?;
    let w = space.weights();
    let one = S::Real::one();
    let x = &sol.x;
    let norm_a_sq = norm_sq_raw(w, a.coords());
    let norm_x_sq = norm_sq_raw(w, x.coords());
    let scale = one + sol.value;

    let orth = inner_raw(w, x.coords(), a.coords()).abs() / (one + (norm_a_sq * norm_x_sq).sqrt());
    let unit = (inner_raw(w, x.coords(), b.coords()) - S::one()).abs();
    let value = (norm_x_sq - sol.value).abs() / scale;
    let base = orth.max(unit).max(value);

    let b_perp = project_out_raw(w, b, a, norm_a_sq);
    let norm_b_perp_sq = norm_sq_raw(w, b_perp.coords());

    let competitor = |t: usize| {
        let mut rng = trial_rng(seed, Salt::MinNorm, t);
        let dw = competitor_direction(space, a, norm_a_sq, &b_perp, norm_b_perp_sq, &mut rng);
        x.add_scaled(S::one(), &dw).map(|c| (c, dw))
    };

    let sampled = worst_trial(1..trials + 1, |t| {
        let (c, dw) = competitor(t)?;
        let nc = norm_sq_raw(w, c.coords());
        let nw = norm_sq_raw(w, dw.coords());
        let undercut = (norm_x_sq - nc).max(S::Real::zero()) / scale;
        let pythagoras = (nc - norm_x_sq - nw).abs() / (one + norm_x_sq + nw);
        Ok(undercut.max(pythagoras))
    })?;

    let worst = match sampled {
        Some((v, t)) if worse((v, t), (base, 0)).1 == t => Some((v, t, competitor(t)?.0)),
        _ => Some((base, 0, sol.x.clone())),
    };
    Ok(VerificationReport::from_worst(
        CHECK_MIN_NORM,
        trials + 1,
        tol.rel_eps,
        worst,
    ))
}

/// Checks the deflated Schwarz inequality on random triples `(z, c, d)`, and
/// its equality case on `z' = alpha c + beta (d - proj_c d)` with random
/// `alpha`, `beta`. Violations are `max(rhs - lhs, 0)/(1 + lhs)` and
/// `|lhs' - rhs'|/(1 + lhs')`.
pub fn verify_deflated<S: Scalar>(
    space: &Space<S::Real>,
    trials: usize,
    tol: &Tolerances<S::Real>,
    seed: RngSeed,
) -> Result<VerificationReport<S>> {
    let w = space.weights();
    let dim = space.dim();
    let one = S::Real::one();
    let floor = S::Real::lit(MIN_SAMPLE_NORM_SQ);

    // Returns (violation, witness z) for a trial.
    let run = |t: usize| -> Result<(S::Real, Vector<S>)> {
        let mut rng = trial_rng(seed, Salt::Deflated, t);
        let z = random_vector::<S, _>(dim, &mut rng);
        let mut c = random_vector::<S, _>(dim, &mut rng);
        let mut retries = 0;
        let mut norm_c_sq = norm_sq_raw(w, c.coords());
        while norm_c_sq < floor {
            retries += 1;
            if retries >= MAX_RETRIES {
                return Err(Error::DegenerateSample { retries });
            }
            c = random_vector::<S, _>(dim, &mut rng);
            norm_c_sq = norm_sq_raw(w, c.coords());
        }
        let d = random_vector::<S, _>(dim, &mut rng);
        let alpha = S::sample_normal(&mut rng);
        let beta = S::sample_normal(&mut rng);

        let sides = deflated_schwarz(space, &z, &c, &d)?;
        let ineq = (sides.rhs - sides.lhs).max(S::Real::zero()) / (one + sides.lhs);

        let d_perp = project_out_raw(w, &d, &c, norm_c_sq);
        let norm_d_sq = norm_sq_raw(w, d.coords());
        // Equality is only characterized for independent c, d.
        let independent = norm_sq_raw(w, d_perp.coords()) > tol.dependence_eps * norm_d_sq;
        let z_eq = c.scaled(alpha).add_scaled(beta, &d_perp)?;
        let eq = if independent {
            let s = deflated_schwarz(space, &z_eq, &c, &d)?;
            (s.lhs - s.rhs).abs() / (one + s.lhs)
        } else {
            S::Real::zero()
        };
        Ok(if eq > ineq { (eq, z_eq) } else { (ineq, z) })
    };

    let worst = worst_trial(0..trials, |t| run(t).map(|(v, _)| v))?;
    let worst = match worst {
        Some((v, t)) => Some((v, t, run(t)?.1)),
        None => None,
    };
    Ok(VerificationReport::from_worst(
        CHECK_DEFLATED,
        trials,
        tol.rel_eps,
        worst,
    ))
}

fn scale_factors<S: Scalar>(parts: &[(f64, f64)]) -> Vec<S> {
    parts
        .iter()
        .filter_map(|&(re, im)| S::from_parts(S::Real::lit(re), S::Real::lit(im)))
        .collect()
}

/// Checks `bound(lambda a, b) = bound(a, b)` and
/// `bound(a, mu b) = |mu|^2 bound(a, b)` for a fixed set of real and (in
/// complex fields) complex factors. Differences are scaled by
/// `1 + reference`.
pub fn verify_scale_covariance<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
    tol: &Tolerances<S::Real>,
) -> Result<VerificationReport<S>> {
    let one = S::Real::one();
    let bound = ostrowski_bound(space, a, b)?;
    let lambdas = scale_factors::<S>(&[(2.0, 0.0), (-0.5, 0.0), (1e3, 0.0), (0.6, 0.8), (1.0, -2.0)]);
    let mus = scale_factors::<S>(&[(3.0, 0.0), (-0.25, 0.0), (1e-2, 0.0), (1.0, 2.0), (0.0, -1.0)]);

    let mut worst: Option<(S::Real, usize, Vector<S>)> = None;
    let mut record = |v: S::Real, t: usize, witness: Vector<S>| {
        let better = match &worst {
            Some((wv, wt, _)) => worse((v, t), (*wv, *wt)).1 == t,
            None => true,
        };
        if better {
            worst = Some((v, t, witness));
        }
    };
    let mut trial = 0;
    for &lambda in &lambdas {
        let scaled = a.scaled(lambda);
        let got = ostrowski_bound(space, &scaled, b)?;
        record((got - bound).abs() / (one + bound), trial, scaled);
        trial += 1;
    }
    for &mu in &mus {
        let scaled = b.scaled(mu);
        let got = ostrowski_bound(space, a, &scaled)?;
        let want = mu.abs_sq() * bound;
        record((got - want).abs() / (one + want), trial, scaled);
        trial += 1;
    }
    Ok(VerificationReport::from_worst(
        CHECK_SCALE_COVARIANCE,
        trial,
        tol.rel_eps,
        worst,
    ))
}

/// Extremizer for real `a`, `b` written directly in real arithmetic with
/// sign `+1`: `x_k = (b_k A - a_k C)/(sqrt(A) sqrt(A B - C^2))` where
/// `A = |a|^2`, `B = |b|^2`, `C = <a, b>`.
pub fn real_extremizer<T: Real>(weights: &[T], a: &[T], b: &[T]) -> Vec<T> {
    let sum = |f: &dyn Fn(usize) -> T| (0..weights.len()).fold(T::zero(), |acc, i| acc + f(i));
    let aa = sum(&|i| weights[i] * a[i] * a[i]);
    let bb = sum(&|i| weights[i] * b[i] * b[i]);
    let ab = sum(&|i| weights[i] * a[i] * b[i]);
    let denom = aa.sqrt() * (aa * bb - ab * ab).sqrt();
    a.iter()
        .zip(b)
        .map(|(&ak, &bk)| (bk * aa - ak * ab) / denom)
        .collect()
}

/// On real inputs, compares the general extremizer with
/// [`real_extremizer`] coordinate-wise. Complex-valued inputs are skipped.
pub fn verify_real_consistency<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
    tol: &Tolerances<S::Real>,
) -> Result<VerificationReport<S>> {
    check_same_len(space.dim(), a.len())?;
    check_same_len(space.dim(), b.len())?;
    if !(a.is_real() && b.is_real()) {
        return Ok(VerificationReport::skipped(
            CHECK_REAL_CONSISTENCY,
            tol.rel_eps,
            "inputs have nonzero imaginary parts".to_owned(),
        ));
    }
    let x = extremizer(space, a, b, tol)?;
    let re = |v: &Vector<S>| v.iter().map(|c| c.re()).collect::<Vec<_>>();
    let expected = real_extremizer(space.weights(), &re(a), &re(b));
    let v = x
        .iter()
        .zip(&expected)
        .map(|(got, &want)| (got.re() - want).abs().max(got.im().abs()))
        .fold(S::Real::zero(), |m, d| if violation_key(d) > m { violation_key(d) } else { m });
    Ok(VerificationReport::from_worst(
        CHECK_REAL_CONSISTENCY,
        1,
        tol.rel_eps,
        Some((v, 0, x)),
    ))
}

fn skip_on_degenerate<S: Scalar>(
    name: &str,
    tolerance: S::Real,
    r: Result<VerificationReport<S>>,
) -> Result<VerificationReport<S>> {
    match r {
        Err(e @ (Error::DependentVectors { .. } | Error::DegenerateSample { .. })) => {
            Ok(VerificationReport::skipped(name, tolerance, e.to_string()))
        }
        r => r,
    }
}

/// Runs every check, in this order: [`CHECK_BOUND`], [`CHECK_MIN_NORM`],
/// [`CHECK_DEFLATED`], [`CHECK_SCALE_COVARIANCE`], [`CHECK_REAL_CONSISTENCY`].
///
/// Checks that cannot run on the input (dependent pair, no feasible sample)
/// come back as skipped reports; invalid inputs are errors.
pub fn verify_all<S: Scalar>(
    space: &Space<S::Real>,
    a: &Vector<S>,
    b: &Vector<S>,
    trials: usize,
    tol: &Tolerances<S::Real>,
    seed: RngSeed,
) -> Result<Vec<VerificationReport<S>>> {
    let bound = ostrowski_bound(space, a, b)?;
    let eps = tol.rel_eps;
    Ok(vec![
        skip_on_degenerate(
            CHECK_BOUND,
            eps * (S::Real::one() + bound),
            verify_bound(space, a, b, trials, tol, seed),
        )?,
        skip_on_degenerate(
            CHECK_MIN_NORM,
            eps,
            verify_min_norm(space, a, b, trials, tol, seed),
        )?,
        skip_on_degenerate(CHECK_DEFLATED, eps, verify_deflated(space, trials, tol, seed))?,
        skip_on_degenerate(
            CHECK_SCALE_COVARIANCE,
            eps,
            verify_scale_covariance(space, a, b, tol),
        )?,
        skip_on_degenerate(
            CHECK_REAL_CONSISTENCY,
            eps,
            verify_real_consistency(space, a, b, tol),
        )?,
    ])
}
