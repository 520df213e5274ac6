//! Log-domain table of the generalized factorial `x_n! = x_n x_{n-1} ... x_1`.

use crate::error::{Error, Result};
use crate::moments::deformation::QDeformation;
use crate::scalar::{uint, Scalar};

/// Precomputed values `ln(x_n!) = ln(n!) + lambda n(n+1)/2` for `n <= n_max`.
///
/// The table is built by the recurrence `ln(x_n!) = ln(x_{n-1}!) + ln n +
/// lambda n`, so magnitudes that overflow doubles in linear form (the moments
/// exceed 1e50 by `n` around 10 for `q = e^2`) stay exactly representable.
#[derive(Debug, Clone)]
pub struct GeneralizedFactorial<T> {
    lambda: T,
    log_values: Vec<T>,
}

impl<T: Scalar> GeneralizedFactorial<T> {
    pub fn new(q: &QDeformation<T>, n_max: usize) -> Self {
        let mut log_values = Vec::with_capacity(n_max + 1);
        log_values.push(T::zero()); // x_0! = 1 by convention
        let mut acc = T::zero();
        for n in 1..=n_max {
            let nf: T = uint(n);
            acc += nf.ln() + q.lambda() * nf;
            log_values.push(acc);
        }
        Self {
            lambda: q.lambda(),
            log_values,
        }
    }

    pub fn n_max(&self) -> usize {
        self.log_values.len() - 1
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    /// `ln(x_n!)`; errors past the table end.
    pub fn ln_factorial(&self, n: usize) -> Result<T> {
        self.log_values.get(n).copied().ok_or_else(|| {
            Error::Range(format!(
                "generalized factorial table holds n <= {} (asked for {n})",
                self.n_max()
            ))
        })
    }

    pub fn log_values(&self) -> &[T] {
        &self.log_values
    }
}

/// `ln(n!)` by direct summation; small `n` only appear here.
pub(crate) fn ln_factorial_plain<T: Scalar>(n: usize) -> T {
    let mut acc = T::zero();
    for k in 2..=n {
        acc += uint::<T>(k).ln();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn starts_at_zero() {
        let q = QDeformation::new(2.0_f64).unwrap();
        let table = GeneralizedFactorial::new(&q, 10);
        assert_eq!(table.ln_factorial(0).unwrap(), 0.0);
    }

    #[test]
    fn recurrence_holds_in_log_domain() {
        for qv in [1.0_f64, 1.5, (2.0_f64).exp(), 20.0] {
            let q = QDeformation::new(qv).unwrap();
            let table = GeneralizedFactorial::new(&q, 40);
            for n in 1..=40 {
                let nf = n as f64;
                let step = nf.ln() + q.lambda() * nf;
                let diff = table.ln_factorial(n).unwrap() - table.ln_factorial(n - 1).unwrap();
                assert_abs_diff_eq!(diff, step, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn matches_closed_form() {
        let q = QDeformation::new(1.5_f64).unwrap();
        let table = GeneralizedFactorial::new(&q, 20);
        for n in 0..=20 {
            let nf = n as f64;
            let expected = ln_factorial_plain::<f64>(n) + q.lambda() * nf * (nf + 1.0) / 2.0;
            assert_abs_diff_eq!(table.ln_factorial(n).unwrap(), expected, epsilon = 1e-11);
        }
    }

    #[test]
    fn out_of_range_is_error() {
        let q = QDeformation::new(2.0_f64).unwrap();
        let table = GeneralizedFactorial::new(&q, 5);
        assert!(table.ln_factorial(6).is_err());
    }

    #[test]
    fn q_one_reduces_to_plain_factorial() {
        let q = QDeformation::new(1.0_f64).unwrap();
        let table = GeneralizedFactorial::new(&q, 12);
        // 5! = 120
        assert_abs_diff_eq!(
            table.ln_factorial(5).unwrap(),
            120.0_f64.ln(),
            epsilon = 1e-12
        );
    }
}
