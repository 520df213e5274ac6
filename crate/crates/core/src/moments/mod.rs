//! The deformed moment problem: level sequence `x_n = n q^n`, generalized
//! factorial and exponential, the weight function solving
//! `integral_0^inf t^n w_q(t) dt = n! q^{n(n+1)/2}`, and verification of that
//! identity.
//!
//! The weight is evaluated through two independent numerical paths:
//!
//! - [`weight_laplace`]: the Laplace-transform form, rewritten as a Gaussian
//!   expectation and integrated with node-doubling Gauss-Hermite rules;
//! - [`weight_mellin_barnes`]: inversion of the Mellin transform
//!   `Gamma(z) q^{z(z-1)/2}` along a vertical contour, sampled by trapezoid
//!   rule with spacing halved until convergence.
//!
//! Agreement of the two paths is the cross-check the rest of the crate leans
//! on. All factorial/moment magnitudes are carried as natural logs; only
//! ratios and discrepancies are exponentiated, since `n! q^{n(n+1)/2}`
//! overflows doubles near `n = 12` already for `q = e^2`.

mod deformation;
mod exp;
mod factorial;
mod gamma;
mod moment;
mod weight;

pub use deformation::{x_seq, x_seq_ln, QDeformation, QuadratureConfig};
pub use exp::{eq_exp, eq_exp_ln};
pub use factorial::GeneralizedFactorial;
pub use gamma::{complex_gamma, complex_ln_gamma, digamma};
pub use moment::{
    moment_exact_log, moment_fubini_log, moment_numeric_log, radial_moment_log, verify_moments,
    MomentCheck, MomentReport,
};
pub(crate) use moment::{moment_order_in_range, radial_moment_log_with};
pub use weight::{
    weight_laplace, weight_laplace_ln, weight_mellin_barnes, weight_mellin_barnes_ln,
};
