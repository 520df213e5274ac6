//! Adaptive Simpson integration over a finite interval.

use crate::error::{Error, Result};
use crate::scalar::{as_f64, flt, Scalar};

/// Number of uniform panels the interval is cut into before refinement
/// starts, so that a feature much narrower than the interval cannot slip
/// between the first sample points.
const PANELS: usize = 16;

/// Adaptively integrates `f` over `[a, b]` to the given absolute tolerance.
///
/// The interval is pre-split into uniform panels, each refined recursively by
/// the Richardson-controlled Simpson rule. Refinement is driven by sampled
/// values, so the caller must pick an interval whose panel subdivision
/// actually sees the integrand's features; mass hidden entirely between the
/// initial samples of a panel is invisible. The integrand may fail (for
/// example when an inner quadrature does not converge); such errors are
/// propagated. Exceeding the recursion budget is reported as an accuracy
/// error carrying the last two local estimates.
pub fn adaptive_simpson<T, F>(mut f: F, a: T, b: T, abs_tol: T, max_depth: usize) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    if !(abs_tol > T::zero()) {
        return Err(Error::Config(format!(
            "adaptive_simpson tolerance must be positive (got {})",
            as_f64(abs_tol)
        )));
    }
    if !(b > a) {
        return Err(Error::Config(
            "adaptive_simpson needs an ordered non-empty interval".into(),
        ));
    }
    let width = (b - a) / uint_t::<T>(PANELS);
    let panel_tol = abs_tol / uint_t::<T>(PANELS);
    let mut total = T::zero();
    for p in 0..PANELS {
        let lo = a + width * uint_t::<T>(p);
        let hi = if p == PANELS - 1 { b } else { lo + width };
        let m = (lo + hi) / flt::<T>(2.0);
        let flo = f(lo)?;
        let fm = f(m)?;
        let fhi = f(hi)?;
        let whole = simpson(lo, hi, flo, fm, fhi);
        total += recurse(&mut f, lo, hi, flo, fm, fhi, whole, panel_tol, max_depth)?;
    }
    Ok(total)
}

fn uint_t<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("panel count fits any float")
}

fn simpson<T: Scalar>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / flt::<T>(6.0) * (fa + flt::<T>(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<T, F>(
    f: &mut F,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: usize,
) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    let two = flt::<T>(2.0);
    let m = (a + b) / two;
    let lm = (a + m) / two;
    let rm = (m + b) / two;
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    // Standard Simpson refinement criterion (factor 15 from the Richardson step).
    if delta.abs() <= flt::<T>(15.0) * tol {
        return Ok(left + right + delta / flt::<T>(15.0));
    }
    if depth == 0 {
        return Err(Error::Accuracy {
            max_nodes: 0,
            last: as_f64(left + right),
            previous: as_f64(whole),
        });
    }
    let half_tol = tol / two;
    let l = recurse(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?;
    let r = recurse(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn integrates_polynomial() {
        let v = adaptive_simpson(|x: f64| Ok(x * x), 0.0, 1.0, 1e-12, 40).unwrap();
        assert_abs_diff_eq!(v, 1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn integrates_sine_over_period() {
        let v = adaptive_simpson(|x: f64| Ok(x.sin()), 0.0, PI, 1e-12, 48).unwrap();
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-11);
    }

    #[test]
    fn integrates_narrow_gaussian() {
        // A peak an order of magnitude narrower than one panel, but still
        // visible to the panel samples.
        let v = adaptive_simpson(
            |x: f64| Ok((-(x - 0.37).powi(2) * 100.0).exp()),
            -5.0,
            5.0,
            1e-13,
            48,
        )
        .unwrap();
        let expected = (PI / 100.0).sqrt();
        assert_abs_diff_eq!(v, expected, epsilon = expected * 1e-9);
    }

    #[test]
    fn propagates_integrand_errors() {
        let r = adaptive_simpson(
            |_x: f64| Err(Error::Domain("boom".into())),
            0.0,
            1.0,
            1e-8,
            10,
        );
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_bad_tolerance_and_interval() {
        assert!(matches!(
            adaptive_simpson(|x: f64| Ok(x), 0.0, 1.0, 0.0, 10),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            adaptive_simpson(|x: f64| Ok(x), 1.0, 0.0, 1e-8, 10),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn reports_depth_exhaustion() {
        // A needle the zero-depth budget cannot resolve.
        let r = adaptive_simpson(|x: f64| Ok((-(x * x) * 1e8).exp()), -1.0, 1.0, 1e-14, 0);
        assert!(matches!(r, Err(Error::Accuracy { .. })));
    }
}
