//! Deformation parameter and quadrature configuration.

use crate::error::{Error, Result};
use crate::scalar::{as_f64, flt, uint, Scalar};

/// The deformation parameter `q >= 1` together with its squeeze exponent
/// `lambda = ln q`. Every deformed formula in the crate is driven by this
/// pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QDeformation<T> {
    q: T,
    lambda: T,
}

impl<T: Scalar> QDeformation<T> {
    /// Threshold below which `lambda` denominators become badly conditioned.
    const CONDITIONING_EDGE: f64 = 1.001;

    /// Builds the parameter from `q >= 1`.
    pub fn new(q: T) -> Result<Self> {
        if !(q >= T::one()) || !q.is_finite() {
            return Err(Error::Domain(format!(
                "deformation parameter must satisfy q >= 1 (got {})",
                as_f64(q)
            )));
        }
        Ok(Self { q, lambda: q.ln() })
    }

    /// Builds the parameter from the squeeze exponent `lambda >= 0`.
    pub fn from_lambda(lambda: T) -> Result<Self> {
        if !(lambda >= T::zero()) || !lambda.is_finite() {
            return Err(Error::Domain(format!(
                "squeeze exponent must satisfy lambda >= 0 (got {})",
                as_f64(lambda)
            )));
        }
        Ok(Self {
            q: lambda.exp(),
            lambda,
        })
    }

    pub fn q(&self) -> T {
        self.q
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    /// `q = 1`: the deformed formulas collapse to the canonical closed forms
    /// (`x_n! = n!`, `E(t) = e^t`, weight `e^{-t}`), and `lambda` appears in
    /// denominators of the integral forms.
    pub fn is_degenerate(&self) -> bool {
        self.q == T::one()
    }

    /// `1 < q < 1.001`: the integral forms remain valid but `lambda`
    /// denominators are small; callers may want to warn.
    pub fn is_poorly_conditioned(&self) -> bool {
        self.q > T::one() && self.q < flt(Self::CONDITIONING_EDGE)
    }
}

/// The deformed level sequence `x_n = n q^n`.
pub fn x_seq<T: Scalar>(n: usize, q: &QDeformation<T>) -> T {
    let nf: T = uint(n);
    nf * (uint::<T>(n) * q.lambda()).exp()
}

/// Natural log of `x_n` for `n >= 1`: `ln n + n lambda`.
pub fn x_seq_ln<T: Scalar>(n: usize, q: &QDeformation<T>) -> Result<T> {
    if n == 0 {
        return Err(Error::Domain(
            "x_0 = 0 has no logarithm; the log-variant needs n >= 1".into(),
        ));
    }
    let nf: T = uint(n);
    Ok(nf.ln() + nf * q.lambda())
}

/// Node and tolerance budget for the weight-function and moment integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<T> {
    pub rel_tol: T,
    pub max_nodes: usize,
    pub node_doubling_start: usize,
}

impl<T: Scalar> QuadratureConfig<T> {
    pub fn new(rel_tol: T, node_doubling_start: usize, max_nodes: usize) -> Result<Self> {
        if !(rel_tol > T::zero()) {
            return Err(Error::Config(format!(
                "rel_tol must be positive (got {})",
                as_f64(rel_tol)
            )));
        }
        if node_doubling_start < 8 || max_nodes < node_doubling_start {
            return Err(Error::Config(format!(
                "node budget must satisfy max_nodes >= node_doubling_start >= 8 (got {max_nodes} and {node_doubling_start})"
            )));
        }
        Ok(Self {
            rel_tol,
            max_nodes,
            node_doubling_start,
        })
    }

    /// A copy with the tolerance tightened by `factor`; node budget kept.
    pub(crate) fn tightened(&self, factor: f64) -> Self {
        Self {
            rel_tol: self.rel_tol * flt(factor),
            ..*self
        }
    }
}

impl<T: Scalar> Default for QuadratureConfig<T> {
    /// `rel_tol = 1e-8`, doubling from 32 nodes up to `2^16`.
    fn default() -> Self {
        Self {
            rel_tol: flt(1e-8),
            max_nodes: 1 << 16,
            node_doubling_start: 32,
        }
    }
}
