//! Scalar fields the inner-product machinery is generic over.
//!
//! [`Real`] covers the floating-point types used for norms, weights and
//! determinants. [`Scalar`] is the field of vector coordinates: either a real
//! type itself or a [`Complex`] over it.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, One, Zero};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Real floating-point type: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Default relative tolerance for constraint and attainment checks.
    const DEFAULT_REL_EPS: f64;
    /// Default threshold on `det / (|a|^2 |b|^2)` below which a pair is
    /// treated as linearly dependent.
    const DEFAULT_DEPENDENCE_EPS: f64;

    fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Lossy conversion from `f64`; constants in this crate are all exactly
    /// representable or only used as tolerances.
    fn lit(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("f64 literal fits in Real")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

macro_rules! impl_real {
    ($t:ty, $rel:expr, $dep:expr) => {
        impl Real for $t {
            const DEFAULT_REL_EPS: f64 = $rel;
            const DEFAULT_DEPENDENCE_EPS: f64 = $dep;

            fn sample_standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                <StandardNormal as Distribution<$t>>::sample(&StandardNormal, rng)
            }
        }
    };
}

impl_real!(f64, 1e-9, 1e-12);
impl_real!(f32, 1e-4, 1e-6);

/// Coordinate field of a vector: real or complex over a [`Real`].
pub trait Scalar:
    Copy
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    type Real: Real;

    /// `true` for complex fields.
    const IS_COMPLEX: bool;

    fn re(self) -> Self::Real;
    fn im(self) -> Self::Real;
    fn conj(self) -> Self;
    fn abs_sq(self) -> Self::Real;
    fn from_real(r: Self::Real) -> Self;

    /// Builds a scalar from real and imaginary parts; `None` when the field
    /// is real and `im != 0`.
    fn from_parts(re: Self::Real, im: Self::Real) -> Option<Self>;

    /// Draws a standard normal variate: one for real fields, independent real
    /// and imaginary parts for complex fields.
    fn sample_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn abs(self) -> Self::Real {
        self.abs_sq().sqrt()
    }

    fn scale(self, r: Self::Real) -> Self {
        self * Self::from_real(r)
    }

    fn is_finite(self) -> bool {
        self.re().is_finite() && self.im().is_finite()
    }
}

macro_rules! impl_real_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            type Real = $t;
            const IS_COMPLEX: bool = false;

            #[inline]
            fn re(self) -> $t {
                self
            }
            #[inline]
            fn im(self) -> $t {
                0.0
            }
            #[inline]
            fn conj(self) -> $t {
                self
            }
            #[inline]
            fn abs_sq(self) -> $t {
                self * self
            }
            #[inline]
            fn from_real(r: $t) -> $t {
                r
            }
            fn from_parts(re: $t, im: $t) -> Option<$t> {
                (im == 0.0).then_some(re)
            }
            fn sample_normal<R: Rng + ?Sized>(rng: &mut R) -> $t {
                <$t as Real>::sample_standard_normal(rng)
            }
            #[inline]
            fn scale(self, r: $t) -> $t {
                self * r
            }
        }
    };
}

impl_real_scalar!(f64);
impl_real_scalar!(f32);

impl<T: Real> Scalar for Complex<T> {
    type Real = T;
    const IS_COMPLEX: bool = true;

    #[inline]
    fn re(self) -> T {
        self.re
    }
    #[inline]
    fn im(self) -> T {
        self.im
    }
    #[inline]
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
    #[inline]
    fn abs_sq(self) -> T {
        self.norm_sqr()
    }
    #[inline]
    fn from_real(r: T) -> Self {
        Complex::new(r, T::zero())
    }
    fn from_parts(re: T, im: T) -> Option<Self> {
        Some(Complex::new(re, im))
    }
    fn sample_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let re = T::sample_standard_normal(rng);
        let im = T::sample_standard_normal(rng);
        Complex::new(re, im)
    }
    #[inline]
    fn scale(self, r: T) -> Self {
        Complex::new(self.re * r, self.im * r)
    }
}
