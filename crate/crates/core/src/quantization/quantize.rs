//! The coherent-state quantization map for polynomial observables.
//!
//! For a monomial `zeta^a conj(zeta)^b` the defining phase-space integral
//! reduces in polar coordinates: the normalization factors of the projector
//! cancel against the measure, the angular integral of `e^{i theta (m + a - n - b)}`
//! selects `m + a = n + b`, and the radial integral that remains is the
//! `(m + n + a + b)/2`-th power moment of the weight. Monomials therefore land
//! on the `(a - b)`-th diagonal, with entries
//! `M_{m+a} / sqrt(x_m! x_n!)` taken from the numeric moment machinery.

use num_complex::Complex;

use crate::error::Result;
use crate::fock::OperatorMatrix;
use crate::moments::{
    radial_moment_log_with, GeneralizedFactorial, QDeformation, QuadratureConfig,
};
use crate::quad::HermiteBank;
use crate::quantization::polynomial::RadialPolynomial;
use crate::scalar::{flt, Scalar};

/// Quantizes the polynomial observable `f` on the truncated basis of level
/// `n_trunc`. Radial moments are integrated numerically, so `quantize(1)`
/// deviates from the identity exactly by the moment-identity discrepancy.
pub fn quantize<T: Scalar>(
    f: &RadialPolynomial<T>,
    q: &QDeformation<T>,
    n_trunc: usize,
    cfg: &QuadratureConfig<T>,
) -> Result<OperatorMatrix<T>> {
    let dim = n_trunc + 1;
    let moment_horizon = n_trunc + f.max_raising() as usize;
    // Fail before integrating anything if the largest needed moment order is
    // beyond what the node budget can certify.
    crate::moments::moment_order_in_range(moment_horizon, q, cfg)?;
    let table = GeneralizedFactorial::new(q, n_trunc);

    // Each radial moment appears in several entries; integrate each order
    // once and share the Hermite rules across all of them.
    let mut bank = HermiteBank::new();
    let mut moments_ln: Vec<Option<T>> = vec![None; moment_horizon + 1];
    let mut moment_ln = |k: usize, bank: &mut HermiteBank<T>| -> Result<T> {
        if moments_ln[k].is_none() {
            moments_ln[k] = Some(radial_moment_log_with(bank, k, q, cfg)?);
        }
        Ok(moments_ln[k].unwrap())
    };

    let half = flt::<T>(0.5);
    let mut out = OperatorMatrix::zeros(dim);
    for term in f.terms() {
        let a = term.a as usize;
        let b = term.b as usize;
        for m in 0..dim {
            // Angular selection: only n with m + a = n + b survives.
            let n = match (m + a).checked_sub(b) {
                Some(n) if n < dim => n,
                _ => continue,
            };
            // The delta constraint makes the radial exponent integral.
            debug_assert_eq!((m + n + a + b) % 2, 0);
            let k = (m + n + a + b) / 2;
            let ln_entry = moment_ln(k, &mut bank)?
                - half * (table.ln_factorial(m)? + table.ln_factorial(n)?);
            out[(m, n)] += term.coeff * ln_entry.exp();
        }
    }
    Ok(out)
}

/// Max-norm deviation of `quantize(1)` from the identity on the truncated
/// block. Off-diagonal entries are zero by the angular selection, so the
/// returned value is the largest diagonal discrepancy, i.e. the moment
/// identity error mapped through `1/x_n!`.
pub fn resolution_check<T: Scalar>(
    q: &QDeformation<T>,
    n_trunc: usize,
    cfg: &QuadratureConfig<T>,
) -> Result<T> {
    let quantized = quantize(&RadialPolynomial::one(), q, n_trunc, cfg)?;
    let identity = OperatorMatrix::identity(n_trunc + 1);
    // Structural zero check: nothing off the main diagonal may be touched.
    for i in 0..=n_trunc {
        for j in 0..=n_trunc {
            if i != j {
                let e: Complex<T> = quantized[(i, j)];
                debug_assert!(e.re == T::zero() && e.im == T::zero());
            }
        }
    }
    quantized.max_diff(&identity)
}
