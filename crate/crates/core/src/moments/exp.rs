//! The generalized exponential `E_q(t) = sum_n t^n / x_n!`.

use crate::error::{Error, Result};
use crate::moments::deformation::QDeformation;
use crate::quad::LogSum;
use crate::scalar::{as_f64, uint, Scalar};

/// Hard cap on summed terms; the series converges long before this for any
/// `q >= 1` and representable `t`.
const MAX_TERMS: usize = 100_000;

/// Evaluates `E_q(t)` for `t >= 0`, summing in the log domain until the next
/// term falls below `tol` times the partial sum.
///
/// All terms are positive, so the partial sums increase monotonically; the
/// convergence radius is infinite for `q >= 1`. At `q = 1` the closed form
/// `e^t` is returned directly.
pub fn eq_exp<T: Scalar>(t: T, q: &QDeformation<T>, tol: T) -> Result<T> {
    eq_exp_ln(t, q, tol).map(|ln| ln.exp())
}

/// Natural log of [`eq_exp`]; the form the coherent-state constructors use.
pub fn eq_exp_ln<T: Scalar>(t: T, q: &QDeformation<T>, tol: T) -> Result<T> {
    if !(tol > T::zero()) {
        return Err(Error::Config(format!(
            "series tolerance must be positive (got {})",
            as_f64(tol)
        )));
    }
    if !(t >= T::zero()) {
        return Err(Error::Domain(format!(
            "generalized exponential needs t >= 0 (got {})",
            as_f64(t)
        )));
    }
    if q.is_degenerate() {
        return Ok(t);
    }
    if t == T::zero() {
        return Ok(T::zero());
    }

    let ln_t = t.ln();
    let ln_tol = tol.ln();
    let mut sum = LogSum::new();
    sum.add_ln(T::zero()); // n = 0 term is 1
    let mut ln_fact = T::zero();
    for n in 1..MAX_TERMS {
        let nf: T = uint(n);
        ln_fact += nf.ln() + q.lambda() * nf; // ln(x_n!)
        let ln_term = nf * ln_t - ln_fact;
        sum.add_ln(ln_term);
        // Terms shrink once x_{n+1} > t; only then is the stopping test sound.
        let decreasing = uint::<T>(n + 1).ln() + q.lambda() * uint::<T>(n + 1) > ln_t;
        if decreasing && ln_term < ln_tol + sum.ln_value() {
            return Ok(sum.ln_value());
        }
    }
    Err(Error::Accuracy {
        max_nodes: MAX_TERMS,
        last: as_f64(sum.ln_value()),
        previous: f64::NAN,
    })
}
