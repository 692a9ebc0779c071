use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Finite coordinate vector of dimension at least 1.
///
/// Finiteness of the coordinates is checked by the operations that consume
/// a vector, so a `Vector` can be built cheaply from raw data.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidDimension {
                dim: 0,
                reason: "vectors need at least one coordinate",
            });
        }
        Ok(Self { coords })
    }

    /// Vector of real coordinates, embedded into the field `S`.
    pub fn from_reals(values: &[S::Real]) -> Result<Self> {
        Self::new(values.iter().map(|&r| S::from_real(r)).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![S::zero(); dim])
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<S>) -> Self {
        debug_assert!(!coords.is_empty());
        Self { coords }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    /// Always `false`; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    #[inline]
    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.coords.iter()
    }

    /// Index of the first non-finite coordinate, if any.
    pub fn first_non_finite(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_finite())
    }

    /// Every coordinate has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.coords.iter().all(|c| c.im() == S::Real::default())
    }

    pub fn scaled(&self, alpha: S) -> Self {
        Self::from_vec_unchecked(self.coords.iter().map(|&c| alpha * c).collect())
    }

    /// `self + alpha * other`, coordinate-wise. Dimensions must agree.
    pub fn add_scaled(&self, alpha: S, other: &Self) -> Result<Self> {
        check_same_len(self.len(), other.len())?;
        Ok(Self::from_vec_unchecked(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&u, &v)| u + alpha * v)
                .collect(),
        ))
    }

    pub(crate) fn add_scaled_in_place(&mut self, alpha: S, other: &Self) {
        debug_assert_eq!(self.len(), other.len());
        for (u, &v) in self.coords.iter_mut().zip(&other.coords) {
            *u = *u + alpha * v;
        }
    }

    pub(crate) fn scale_in_place(&mut self, r: S::Real) {
        for c in &mut self.coords {
            *c = c.scale(r);
        }
    }

    /// Applies `idx` as a gather: output coordinate `k` is `self[idx[k]]`.
    pub fn permuted(&self, idx: &[usize]) -> Result<Self> {
        check_same_len(self.len(), idx.len())?;
        Ok(Self::from_vec_unchecked(
            idx.iter().map(|&i| self.coords[i]).collect(),
        ))
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;

    fn index(&self, i: usize) -> &S {
        &self.coords[i]
    }
}

impl<'a, S> IntoIterator for &'a Vector<S> {
    type Item = &'a S;
    type IntoIter = std::slice::Iter<'a, S>;

    fn into_iter(self) -> Self::IntoIter {
        self.coords.iter()
    }
}

pub(crate) fn check_same_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
