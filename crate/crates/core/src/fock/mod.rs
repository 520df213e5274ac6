//! Truncated Fock-space constructions: ladder, number and position/momentum
//! matrices for the deformed level sequence, one- and two-mode coherent
//! states, the squeezed displacement operator, and the physical-parameter map
//! of the magnetic-field problem.
//!
//! Conventions: `n_trunc = N` is the highest retained level, so matrices are
//! `(N + 1) x (N + 1)`; two-mode vectors flatten `(m, n)` row-major as
//! `m (N + 1) + n`. All constructors are pure and return immutable values.

mod coherent;
mod ladder;
mod matrix;
mod params;
mod squeeze;

pub use coherent::{cs_coeffs, truncation_for, truncation_tail_ln, two_mode_cs};
pub use ladder::{build_ladder, build_number, build_qp};
pub use matrix::{FockVector, OperatorMatrix};
pub use params::PhysicalParams;
pub use squeeze::{build_j, build_z_lambda, evolve_labels};
