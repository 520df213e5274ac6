//! Lower symbols, uncertainty products, and the time-evolved symbol.

use num_complex::Complex;

use crate::error::Result;
use crate::fock::{build_qp, cs_coeffs, FockVector, OperatorMatrix};
use crate::moments::{eq_exp_ln, x_seq, GeneralizedFactorial, QDeformation};
use crate::scalar::{flt, uint, Scalar};

/// A lower-symbol sample: the coherent-state expectation value of an operator
/// at the given label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolReport<T> {
    pub zeta: Complex<T>,
    pub value: Complex<T>,
}

impl<T: Scalar> SymbolReport<T> {
    /// Samples the lower symbol of `op` at `zeta`.
    pub fn sample(op: &OperatorMatrix<T>, zeta: Complex<T>, q: &QDeformation<T>) -> Result<Self> {
        Ok(Self {
            zeta,
            value: lower_symbol(op, zeta, q)?,
        })
    }
}

/// `<zeta| op |zeta>`, computed through the coefficient vector truncated at
/// the operator's dimension.
pub fn lower_symbol<T: Scalar>(
    op: &OperatorMatrix<T>,
    zeta: Complex<T>,
    q: &QDeformation<T>,
) -> Result<Complex<T>> {
    let state = cs_coeffs(zeta, q, op.dim() - 1)?;
    expectation(op, &state)
}

/// `<state| op |state>` for an arbitrary normalized state.
pub fn expectation<T: Scalar>(op: &OperatorMatrix<T>, state: &FockVector<T>) -> Result<Complex<T>> {
    let applied = op.apply(state)?;
    state.inner(&applied)
}

/// Uncertainty product `(Delta q)(Delta p)` in the coherent state, via the
/// spectral formula: half the expectation of `diag(x_{n+1} - x_n)`.
pub fn uncertainty_product<T: Scalar>(
    zeta: Complex<T>,
    q: &QDeformation<T>,
    n_trunc: usize,
) -> Result<T> {
    let gap = OperatorMatrix::from_real_diagonal_fn(n_trunc + 1, |n| x_seq(n + 1, q) - x_seq(n, q));
    let value = lower_symbol(&gap, zeta, q)?;
    Ok(value.re * flt(0.5))
}

/// The same product assembled directly from the first and second moments of
/// the position and momentum matrices; equality with
/// [`uncertainty_product`] is a cross-check between the two routes.
pub fn uncertainty_product_direct<T: Scalar>(
    zeta: Complex<T>,
    q: &QDeformation<T>,
    n_trunc: usize,
) -> Result<T> {
    let (qhat, phat) = build_qp(q, n_trunc);
    let state = cs_coeffs(zeta, q, n_trunc)?;
    let var = |op: &OperatorMatrix<T>| -> Result<T> {
        let applied = op.apply(&state)?;
        // op is self-adjoint: <op^2> = ||op state||^2.
        let second = applied.inner(&applied)?.re;
        let first = state.inner(&applied)?.re;
        Ok(second - first * first)
    };
    Ok((var(&qhat)? * var(&phat)?).sqrt())
}

/// Time-evolved lower symbol of the quantized coordinate, by direct
/// summation of the series
/// `zeta E^{-1} sum_n (|zeta|^{2n} / x_n!) e^{-i (x_{n+2} - x_{n+1}) t}`:
/// magnitudes in the log domain, phases attached per term.
pub fn time_evolved_symbol<T: Scalar>(
    zeta: Complex<T>,
    t: T,
    q: &QDeformation<T>,
    n_trunc: usize,
) -> Result<Complex<T>> {
    let r2 = zeta.norm_sqr();
    if r2 == T::zero() {
        return Ok(Complex::new(T::zero(), T::zero()));
    }
    let ln_r2 = r2.ln();
    let ln_e = eq_exp_ln(r2, q, T::epsilon())?;
    let table = GeneralizedFactorial::new(q, n_trunc);
    let mut phase_average = Complex::new(T::zero(), T::zero());
    for n in 0..=n_trunc {
        let weight = (uint::<T>(n) * ln_r2 - table.ln_factorial(n)? - ln_e).exp();
        let angle = -(x_seq(n + 2, q) - x_seq(n + 1, q)) * t;
        phase_average += Complex::new(angle.cos(), angle.sin()) * weight;
    }
    Ok(zeta * phase_average)
}

/// The same symbol through matrices: the state is evolved by the diagonal
/// propagator of `H = A A^dag` (spectrum `x_{n+1}`) and the expectation of
/// the lowering operator is taken in the evolved state.
pub fn time_evolved_symbol_matrix<T: Scalar>(
    zeta: Complex<T>,
    t: T,
    q: &QDeformation<T>,
    n_trunc: usize,
) -> Result<Complex<T>> {
    let state = cs_coeffs(zeta, q, n_trunc)?;
    let propagator = {
        let mut m = OperatorMatrix::zeros(n_trunc + 1);
        for n in 0..=n_trunc {
            let angle = -x_seq(n + 1, q) * t;
            m[(n, n)] = Complex::new(angle.cos(), angle.sin());
        }
        m
    };
    let evolved = propagator.apply(&state)?;
    let (lowering, _) = crate::fock::build_ladder(q, n_trunc.max(2));
    expectation(&lowering, &evolved)
}
