//! Numerical toolkit for deformed coherent states of a charged particle in a
//! uniform magnetic field.
//!
//! The deformation is controlled by a single parameter `q >= 1` (squeeze
//! exponent `lambda = ln q`). The crate provides:
//!
//! - [`moments`]: the deformed level sequence `x_n = n q^n`, its generalized
//!   factorial and exponential, the moment-problem weight function evaluated
//!   through two independent numerical paths (a Laplace-transform form and a
//!   Mellin-Barnes contour integral), and verification of the moment identity
//!   `integral t^n w_q(t) dt = n! q^{n(n+1)/2}`.
//! - [`fock`]: truncated Fock-space ladder operators, number-like and
//!   position/momentum matrices, one- and two-mode coherent states, the
//!   squeezed displacement operator, and the physical-parameter map for the
//!   magnetic-field problem.
//! - [`quantization`]: the coherent-state quantization map for polynomial
//!   observables, the resolution-of-unity check, lower symbols, uncertainty
//!   products, and time-evolved symbols.
//! - [`quad`]: the quadrature kernels (Gauss-Hermite rules, adaptive Simpson,
//!   log-domain summation) backing the numerical paths.
//!
//! All numeric code is generic over the scalar type through [`scalar::Scalar`]
//! (any `num_traits` float works); the `*64` aliases at the crate root pin the
//! usual double-precision instantiations.

// Validation uses negated comparisons so that NaN arguments fall into the
// rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fock;
pub mod moments;
pub mod quad;
pub mod quantization;
pub mod scalar;

pub use error::{Error, Result};
pub use fock::{FockVector, OperatorMatrix, PhysicalParams};
pub use moments::{GeneralizedFactorial, MomentReport, QDeformation, QuadratureConfig};
pub use quantization::{RadialPolynomial, SymbolReport};
pub use scalar::Scalar;

/// Double-precision deformation parameter.
pub type QDeformation64 = moments::QDeformation<f64>;
/// Double-precision quadrature configuration.
pub type QuadratureConfig64 = moments::QuadratureConfig<f64>;
/// Double-precision generalized factorial table.
pub type GeneralizedFactorial64 = moments::GeneralizedFactorial<f64>;
/// Double-precision moment verification report.
pub type MomentReport64 = moments::MomentReport<f64>;
/// Double-precision dense operator matrix.
pub type OperatorMatrix64 = fock::OperatorMatrix<f64>;
/// Double-precision Fock coefficient vector.
pub type FockVector64 = fock::FockVector<f64>;
/// Double-precision physical parameters of the magnetic-field problem.
pub type PhysicalParams64 = fock::PhysicalParams<f64>;
/// Double-precision polynomial observable.
pub type RadialPolynomial64 = quantization::RadialPolynomial<f64>;
/// Double-precision lower-symbol sample.
pub type SymbolReport64 = quantization::SymbolReport<f64>;
