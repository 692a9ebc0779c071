//! Finite-dimensional inner-product spaces.
//!
//! Every space is described by a vector of positive weights, and the inner
//! product is `<u, v> = sum_i w_i u_i conj(v_i)`. Dense spaces use unit
//! weights (real or complex n-tuples, or a finite truncation of l^2).
//! Quadrature spaces additionally carry the nodes of a quadrature rule on a
//! real interval, so that sampled functions approximate L^2 on that interval.

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    Dense,
    Weighted,
    Quadrature,
}

impl SpaceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpaceKind::Dense => "dense",
            SpaceKind::Weighted => "weighted",
            SpaceKind::Quadrature => "quadrature",
        }
    }
}

/// Immutable description of an inner product on `dim`-dimensional vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Space<T> {
    kind: SpaceKind,
    weights: Vec<T>,
    nodes: Option<Vec<T>>,
}

impl<T: Real> Space<T> {
    /// Euclidean space of `dim`-tuples with unit weights.
    pub fn dense(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension {
                dim,
                reason: "dimension must be at least 1",
            });
        }
        Ok(Self {
            kind: SpaceKind::Dense,
            weights: vec![T::one(); dim],
            nodes: None,
        })
    }

    /// Space with inner product `sum_i w_i u_i conj(v_i)`.
    ///
    /// Weights spanning many orders of magnitude (e.g. `1e-300` next to `1`)
    /// are accepted but make the Gram quantities badly conditioned.
    pub fn weighted(weights: Vec<T>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDimension {
                dim: 0,
                reason: "weighted space needs at least one weight",
            });
        }
        check_weights(&weights)?;
        Ok(Self {
            kind: SpaceKind::Weighted,
            weights,
            nodes: None,
        })
    }

    /// Quadrature space from caller-supplied nodes and weights.
    pub fn quadrature(nodes: Vec<T>, weights: Vec<T>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidDimension {
                dim: 0,
                reason: "quadrature needs at least one node",
            });
        }
        if nodes.len() != weights.len() {
            return Err(Error::DimensionMismatch {
                expected: nodes.len(),
                found: weights.len(),
            });
        }
        check_nodes(&nodes)?;
        check_weights(&weights)?;
        Ok(Self {
            kind: SpaceKind::Quadrature,
            weights,
            nodes: Some(nodes),
        })
    }

    /// Composite trapezoid weights for arbitrary strictly increasing nodes:
    /// `w_0 = (x_1 - x_0)/2`, `w_i = (x_{i+1} - x_{i-1})/2`,
    /// `w_{n-1} = (x_{n-1} - x_{n-2})/2`.
    pub fn trapezoid_on_nodes(nodes: Vec<T>) -> Result<Self> {
        let n = nodes.len();
        if n < 2 {
            return Err(Error::InvalidDimension {
                dim: n,
                reason: "trapezoid rule needs at least 2 nodes",
            });
        }
        check_nodes(&nodes)?;
        let half = T::lit(0.5);
        let weights = (0..n)
            .map(|i| {
                let left = if i == 0 { nodes[0] } else { nodes[i - 1] };
                let right = if i + 1 == n { nodes[n - 1] } else { nodes[i + 1] };
                (right - left) * half
            })
            .collect();
        Self::quadrature(nodes, weights)
    }

    /// Uniform composite trapezoid rule with `n` nodes on `[lo, hi]`:
    /// step `h = (hi - lo)/(n - 1)`, weights `h * (1/2, 1, ..., 1, 1/2)`.
    pub fn trapezoid_rule(n: usize, lo: T, hi: T) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_f64_lossy(),
                hi: hi.to_f64_lossy(),
            });
        }
        if n < 2 {
            return Err(Error::InvalidDimension {
                dim: n,
                reason: "trapezoid rule needs at least 2 nodes",
            });
        }
        let steps = T::from_usize(n - 1).expect("node count fits in Real");
        let h = (hi - lo) / steps;
        let nodes = (0..n)
            .map(|i| {
                if i + 1 == n {
                    hi
                } else {
                    lo + h * T::from_usize(i).expect("index fits in Real")
                }
            })
            .collect();
        let half = h * T::lit(0.5);
        let weights = (0..n)
            .map(|i| if i == 0 || i + 1 == n { half } else { h })
            .collect();
        Self::quadrature(nodes, weights)
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Quadrature nodes; `None` for dense and weighted spaces.
    pub fn nodes(&self) -> Option<&[T]> {
        self.nodes.as_deref()
    }

    /// Samples `f` at every quadrature node, in node order.
    pub fn sample_function<S, F>(&self, f: F) -> Result<Vector<S>>
    where
        S: Scalar<Real = T>,
        F: Fn(T) -> S,
    {
        let nodes = self.nodes.as_ref().ok_or(Error::NotQuadrature)?;
        let coords = nodes
            .iter()
            .enumerate()
            .map(|(index, &x)| {
                let y = f(x);
                if y.is_finite() {
                    Ok(y)
                } else {
                    Err(Error::NonFiniteSample {
                        index,
                        node: x.to_f64_lossy(),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Vector::new(coords)
    }
}

fn check_weights<T: Real>(weights: &[T]) -> Result<()> {
    match weights
        .iter()
        .position(|&w| !(w.is_finite() && w > T::zero()))
    {
        Some(index) => Err(Error::NonPositiveWeight {
            index,
            value: weights[index].to_f64_lossy(),
        }),
        None => Ok(()),
    }
}

fn check_nodes<T: Real>(nodes: &[T]) -> Result<()> {
    if let Some(index) = nodes.iter().position(|x| !x.is_finite()) {
        return Err(Error::NodesNotIncreasing { index });
    }
    match nodes.windows(2).position(|w| w[0] >= w[1]) {
        Some(i) => Err(Error::NodesNotIncreasing { index: i + 1 }),
        None => Ok(()),
    }
}
