//! Coherent-state coefficient vectors, one and two mode.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fock::matrix::FockVector;
use crate::moments::{eq_exp_ln, GeneralizedFactorial, QDeformation};
use crate::quad::LogSum;
use crate::scalar::{flt, uint, Scalar};

/// Series tolerance used for the normalization sums: one epsilon, i.e. sum to
/// completion.
fn series_tol<T: Scalar>() -> T {
    T::epsilon()
}

/// Smallest truncation level `N` whose tail is negligible for the state with
/// label modulus `|zeta|`:
///
/// - the first omitted normalization term `|zeta|^{2(N+1)} / x_{N+1}!` is
///   below `1e-16 E_q(|zeta|^2)`, and
/// - the lowering residual `|zeta|^2 |zeta|^{2N} / x_N!` is below
///   `1e-22 E_q(|zeta|^2)`, which keeps `||A |zeta> - zeta |zeta>||` under
///   1e-11.
///
/// Errors with a range error when no level up to `max_level` satisfies both.
pub fn truncation_for<T: Scalar>(
    zeta_abs: T,
    q: &QDeformation<T>,
    max_level: usize,
) -> Result<usize> {
    if !(zeta_abs >= T::zero()) || !zeta_abs.is_finite() {
        return Err(Error::Domain(
            "label modulus must be finite and non-negative".into(),
        ));
    }
    if max_level < 2 {
        return Err(Error::Config(
            "maximum truncation level must be at least 2".into(),
        ));
    }
    if zeta_abs == T::zero() {
        return Ok(2);
    }
    let t = zeta_abs * zeta_abs;
    let ln_t = t.ln();
    let ln_e = eq_exp_ln(t, q, series_tol())?;
    let norm_budget = flt::<T>(1e-16_f64.ln()) + ln_e;
    let residual_budget = flt::<T>(1e-22_f64.ln()) + ln_e;
    let table = GeneralizedFactorial::new(q, max_level + 1);
    for n in 2..=max_level {
        let ln_term = |k: usize| uint::<T>(k) * ln_t - table.ln_factorial(k).unwrap();
        let omitted_ok = ln_term(n + 1) < norm_budget;
        let residual_ok = ln_t + ln_term(n) < residual_budget;
        if omitted_ok && residual_ok {
            return Ok(n);
        }
    }
    Err(Error::Range(format!(
        "no truncation level up to {max_level} brings the coherent-state tail below budget"
    )))
}

/// Coefficient vector of the single-mode coherent state
/// `|zeta> = E_q(|zeta|^2)^{-1/2} sum_n zeta^n / sqrt(x_n!) |n>`,
/// truncated at level `n_trunc`. Magnitudes are assembled in the log domain
/// and exponentiated at the end.
pub fn cs_coeffs<T: Scalar>(
    zeta: Complex<T>,
    q: &QDeformation<T>,
    n_trunc: usize,
) -> Result<FockVector<T>> {
    let dim = n_trunc + 1;
    let r = zeta.norm();
    if !r.is_finite() {
        return Err(Error::Domain("coherent-state label must be finite".into()));
    }
    if r == T::zero() {
        return Ok(FockVector::basis(dim, 0));
    }
    let ln_r = r.ln();
    let phase = zeta.arg();
    let ln_e = eq_exp_ln(r * r, q, series_tol())?;
    let table = GeneralizedFactorial::new(q, n_trunc);
    let half = flt::<T>(0.5);
    let mut coeffs = Vec::with_capacity(dim);
    for n in 0..dim {
        let magnitude =
            (uint::<T>(n) * ln_r - half * table.ln_factorial(n).unwrap() - half * ln_e).exp();
        let angle = uint::<T>(n) * phase;
        coeffs.push(Complex::new(
            magnitude * angle.cos(),
            magnitude * angle.sin(),
        ));
    }
    Ok(FockVector::new(coeffs))
}

/// Coefficient vector of the two-mode state
/// `|z, zeta> = e^{-|z|^2/2} E_q(|zeta|^2)^{-1/2} sum_{m,n} z^m/sqrt(m!) zeta^n/sqrt(x_n!) |m, n>`
/// flattened row-major: index `m (N + 1) + n` for truncations `M = m_trunc`,
/// `N = n_trunc`.
pub fn two_mode_cs<T: Scalar>(
    z: Complex<T>,
    zeta: Complex<T>,
    q: &QDeformation<T>,
    m_trunc: usize,
    n_trunc: usize,
) -> Result<FockVector<T>> {
    let orbit = glauber_coeffs(z, m_trunc)?;
    let relative = cs_coeffs(zeta, q, n_trunc)?;
    let n_dim = n_trunc + 1;
    let mut coeffs = Vec::with_capacity((m_trunc + 1) * n_dim);
    for cm in orbit.coeffs() {
        for cn in relative.coeffs() {
            coeffs.push(cm * cn);
        }
    }
    Ok(FockVector::new(coeffs))
}

/// Standard (undeformed) coherent-state coefficients
/// `e^{-|z|^2/2} z^m / sqrt(m!)`, used for the orbit-center mode.
fn glauber_coeffs<T: Scalar>(z: Complex<T>, m_trunc: usize) -> Result<FockVector<T>> {
    let dim = m_trunc + 1;
    let r = z.norm();
    if !r.is_finite() {
        return Err(Error::Domain("coherent-state label must be finite".into()));
    }
    if r == T::zero() {
        return Ok(FockVector::basis(dim, 0));
    }
    let ln_r = r.ln();
    let phase = z.arg();
    let half = flt::<T>(0.5);
    let mut ln_fact = T::zero();
    let mut coeffs = Vec::with_capacity(dim);
    for m in 0..dim {
        if m > 0 {
            ln_fact += uint::<T>(m).ln();
        }
        let magnitude = (uint::<T>(m) * ln_r - half * ln_fact - half * r * r).exp();
        let angle = uint::<T>(m) * phase;
        coeffs.push(Complex::new(
            magnitude * angle.cos(),
            magnitude * angle.sin(),
        ));
    }
    Ok(FockVector::new(coeffs))
}

/// Tail mass `sum_{n > N} |zeta|^{2n} / x_n!` relative to the full series,
/// in the log domain. Used by tests to confirm truncation budgets.
pub fn truncation_tail_ln<T: Scalar>(
    zeta_abs: T,
    q: &QDeformation<T>,
    n_trunc: usize,
) -> Result<T> {
    let t = zeta_abs * zeta_abs;
    if t == T::zero() {
        return Ok(T::neg_infinity());
    }
    let ln_t = t.ln();
    let ln_e = eq_exp_ln(t, q, series_tol())?;
    let horizon = 4 * (n_trunc + 8);
    let table = GeneralizedFactorial::new(q, horizon);
    let mut tail = LogSum::new();
    for n in (n_trunc + 1)..=horizon {
        tail.add_ln(uint::<T>(n) * ln_t - table.ln_factorial(n).unwrap());
    }
    Ok(tail.ln_value() - ln_e)
}
