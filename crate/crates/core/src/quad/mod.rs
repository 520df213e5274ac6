//! Quadrature kernels: Gauss-Hermite rules, adaptive Simpson integration, and
//! log-domain accumulation helpers.

mod adaptive;
mod hermite;

pub use adaptive::adaptive_simpson;
pub use hermite::{GaussHermiteRule, HermiteBank};

use crate::scalar::Scalar;

/// Log-domain sum: returns `ln(sum_i exp(terms[i]))`.
///
/// Terms equal to negative infinity are skipped; if every term is, the result
/// is negative infinity.
pub fn log_sum_exp<T: Scalar>(terms: &[T]) -> T {
    let mut max = T::neg_infinity();
    for &t in terms {
        if t > max {
            max = t;
        }
    }
    if max == T::neg_infinity() {
        return T::neg_infinity();
    }
    let mut acc = T::zero();
    for &t in terms {
        acc += (t - max).exp();
    }
    max + acc.ln()
}

/// Streaming log-domain accumulator for sums of positive terms.
#[derive(Debug, Clone, Copy)]
pub struct LogSum<T> {
    ln_total: T,
}

impl<T: Scalar> LogSum<T> {
    /// Starts an empty sum (log of zero).
    pub fn new() -> Self {
        Self {
            ln_total: T::neg_infinity(),
        }
    }

    /// Adds a term given as its natural log.
    pub fn add_ln(&mut self, ln_term: T) {
        if ln_term == T::neg_infinity() {
            return;
        }
        if self.ln_total == T::neg_infinity() {
            self.ln_total = ln_term;
        } else if ln_term > self.ln_total {
            self.ln_total = ln_term + (self.ln_total - ln_term).exp().ln_1p();
        } else {
            self.ln_total = self.ln_total + (ln_term - self.ln_total).exp().ln_1p();
        }
    }

    /// Natural log of the accumulated sum.
    pub fn ln_value(&self) -> T {
        self.ln_total
    }
}

impl<T: Scalar> Default for LogSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_sum_exp_matches_direct() {
        let terms = [0.0_f64, -1.0, -2.0, -30.0];
        let direct: f64 = terms.iter().map(|t| t.exp()).sum();
        assert!((log_sum_exp(&terms) - direct.ln()).abs() < 1e-15);
    }

    #[test]
    fn log_sum_exp_all_negative_infinity() {
        let terms = [f64::NEG_INFINITY, f64::NEG_INFINITY];
        assert_eq!(log_sum_exp(&terms), f64::NEG_INFINITY);
    }

    #[test]
    fn streaming_matches_batch() {
        let terms = [-3.0_f64, 0.5, -700.0, 2.0, f64::NEG_INFINITY];
        let mut acc = LogSum::new();
        for &t in &terms {
            acc.add_ln(t);
        }
        assert!((acc.ln_value() - log_sum_exp(&terms)).abs() < 1e-14);
    }
}
