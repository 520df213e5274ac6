//! Power moments of the weight function: the exact closed form, two numeric
//! strategies, and the verification report pairing them.

use crate::error::{Error, Result};
use crate::moments::deformation::{QDeformation, QuadratureConfig};
use crate::moments::factorial::ln_factorial_plain;
use crate::moments::weight::weight_laplace_ln_with;
use crate::quad::{adaptive_simpson, HermiteBank};
use crate::scalar::{as_f64, flt, uint, Scalar};

/// Window edges are pushed out until the integrand has fallen this many nats
/// below its peak; e^-46 is below 1e-20, negligible against any sane rel_tol.
const TAIL_NATS: f64 = 46.0;

/// `ln(n! q^{n(n+1)/2})`, the log of the target moment.
pub fn moment_exact_log<T: Scalar>(n: usize, q: &QDeformation<T>) -> T {
    let nf: T = uint(n);
    ln_factorial_plain::<T>(n) + q.lambda() * nf * (nf + T::one()) / flt(2.0)
}

/// Log of the numerically integrated moment `integral t^n w_q(t) dt`,
/// obtained by outer adaptive quadrature of `t^n` against the Laplace-path
/// weight. Requires `q > 1`; at `q = 1` the moments are plainly `n!`.
pub fn moment_numeric_log<T: Scalar>(
    n: usize,
    q: &QDeformation<T>,
    cfg: &QuadratureConfig<T>,
) -> Result<T> {
    if q.is_degenerate() {
        return Err(Error::DegenerateQ(
            "moments of the q = 1 weight are the plain factorials n!".into(),
        ));
    }
    let mut bank = HermiteBank::new();
    radial_moment_log_with(&mut bank, n, q, cfg)
}

/// Radial moment integral shared with the quantization map. Handles `q = 1`
/// through the closed-form weight `exp(-t)`, so the resolution-of-unity check
/// stays a genuine quadrature there as well.
pub fn radial_moment_log<T: Scalar>(
    n: usize,
    q: &QDeformation<T>,
    cfg: &QuadratureConfig<T>,
) -> Result<T> {
    let mut bank = HermiteBank::new();
    radial_moment_log_with(&mut bank, n, q, cfg)
}

/// Checks that the walk for moment order `n` stays where the inner
/// Gauss-Hermite rules can reach: the weight evaluation at log-abscissa `s`
/// needs nodes out to about `s / sqrt(2 lambda)`, and the largest rule holds
/// `cfg.max_nodes` nodes.
pub(crate) fn moment_order_in_range<T: Scalar>(
    n: usize,
    q: &QDeformation<T>,
    cfg: &QuadratureConfig<T>,
) -> Result<()> {
    if q.is_degenerate() {
        return Ok(());
    }
    let lambda = as_f64(q.lambda());
    let edge = (n as f64 + 1.0) * lambda + 50.0;
    let nodes_needed = (edge / (2.0 * lambda).sqrt()).powi(2) / 2.0;
    if nodes_needed > cfg.max_nodes as f64 / 2.0 {
        return Err(Error::Range(format!(
            "moment order {n} at lambda = {lambda} needs about {nodes_needed:.0} quadrature nodes, beyond the budget of {}",
            cfg.max_nodes
        )));
    }
    Ok(())
}

pub(crate) fn radial_moment_log_with<T: Scalar>(
    bank: &mut HermiteBank<T>,
    n: usize,
    q: &QDeformation<T>,
    cfg: &QuadratureConfig<T>,
) -> Result<T> {
    let lambda = q.lambda();
    let order: T = uint(n);
    moment_order_in_range(n, q, cfg)?;
    // Inner weight evaluations run two decades tighter than the outer
    // quadrature so the verification tolerance is spent on the outer error.
    let inner_cfg = cfg.tightened(1e-2);
    let degenerate = q.is_degenerate();

    // Log-integrand of the substituted integral: t = e^s turns
    // integral t^n w(t) dt into integral e^{(n+1)s} w(e^s) ds.
    let mut ln_integrand = |s: T| -> Result<T> {
        let t = s.exp();
        let ln_w = if degenerate {
            -t
        } else {
            weight_laplace_ln_with(bank, t, q, &inner_cfg)?
        };
        Ok((order + T::one()) * s + ln_w)
    };

    // Locate the integrand's support by walking outward from the analytic
    // peak estimate until both tails sit TAIL_NATS below the running
    // maximum. Walking (rather than scanning a fixed wide window) keeps the
    // weight evaluations away from extreme log-abscissas where the inner
    // quadrature would need enormous node counts for mass that cannot
    // contribute.
    let center = if degenerate {
        (order + T::one()).ln()
    } else {
        (order + T::one()) * lambda
    };
    let step = (lambda.sqrt() * flt(0.5)).max(flt(0.5));
    let walk_budget = 10_000;
    let mut peak = ln_integrand(center)?;
    let mut lo = center;
    let mut hi = center;
    for steps_taken in 0.. {
        if steps_taken >= walk_budget {
            return Err(Error::Range(format!(
                "integrand support walk for moment order {n} did not close within {walk_budget} steps"
            )));
        }
        let s = hi + step;
        let v = ln_integrand(s)?;
        hi = s;
        if v > peak {
            peak = v;
        } else if v < peak - flt(TAIL_NATS) {
            break;
        }
    }
    for steps_taken in 0.. {
        if steps_taken >= walk_budget {
            return Err(Error::Range(format!(
                "integrand support walk for moment order {n} did not close within {walk_budget} steps"
            )));
        }
        let s = lo - step;
        let v = ln_integrand(s)?;
        lo = s;
        if v > peak {
            peak = v;
        } else if v < peak - flt(TAIL_NATS) {
            break;
        }
    }
    if !peak.is_finite() {
        return Err(Error::Accuracy {
            max_nodes: cfg.max_nodes,
            last: as_f64(peak),
            previous: f64::NAN,
        });
    }

    // Coarse composite estimate of the peak-normalized integral; it sets the
    // absolute budget for the adaptive pass.
    let mut shifted = |s: T| -> Result<T> { Ok((ln_integrand(s)? - peak).exp()) };
    let coarse_points = 129;
    let h = (hi - lo) / uint::<T>(coarse_points - 1);
    let mut coarse = T::zero();
    for i in 0..coarse_points {
        let s = lo + h * uint::<T>(i);
        let w = if i == 0 || i == coarse_points - 1 {
            flt::<T>(0.5)
        } else {
            T::one()
        };
        coarse += w * shifted(s)?;
    }
    coarse *= h;

    let abs_tol = coarse.max(flt(1e-3)) * cfg.rel_tol * flt(0.1);
    let integral = adaptive_simpson(&mut shifted, lo, hi, abs_tol, 40)?;
    Ok(peak + integral.ln())
}

/// Log of the moment via the Fubini reduction: integrating `t` out of the
/// defining double integral analytically leaves
/// `n! q^{(n+1)/2} (2 pi q lambda)^{-1/2} integral exp(-n v - v^2/(2 lambda)) dv`,
/// a single Gaussian integral evaluated here by trapezoid doubling. This is
/// the fast path; it reproduces the closed form to rounding.
pub fn moment_fubini_log<T: Scalar>(
    n: usize,
    q: &QDeformation<T>,
    cfg: &QuadratureConfig<T>,
) -> Result<T> {
    if q.is_degenerate() {
        return Err(Error::DegenerateQ(
            "moments of the q = 1 weight are the plain factorials n!".into(),
        ));
    }
    let lambda = q.lambda();
    let order: T = uint(n);
    // Complete the square: the remaining integrand is the centered Gaussian
    // exp(-(v + n lambda)^2 / (2 lambda)) with mass sqrt(2 pi lambda), carrying
    // an exact factor exp(lambda n^2 / 2).
    let mu = -order * lambda;
    let sigma = lambda.sqrt();
    let window = sigma * flt::<T>(2.0 * 70.0).sqrt();
    let gaussian = |v: T| (-(v - mu) * (v - mu) / (flt::<T>(2.0) * lambda)).exp();

    let trapezoid = |points: usize| -> T {
        let h = flt::<T>(2.0) * window / uint(points - 1);
        let mut acc = T::zero();
        for j in 0..points {
            let v = mu - window + h * uint(j);
            let w = if j == 0 || j == points - 1 {
                flt::<T>(0.5)
            } else {
                T::one()
            };
            acc += w * gaussian(v);
        }
        acc * h
    };

    let mut points = cfg.node_doubling_start.max(9) | 1;
    let mut prev = trapezoid(points);
    let mut prev_prev = f64::NAN;
    let integral = loop {
        points = points * 2 - 1;
        if points > cfg.max_nodes {
            return Err(Error::Accuracy {
                max_nodes: cfg.max_nodes,
                last: as_f64(prev),
                previous: prev_prev,
            });
        }
        let cur = trapezoid(points);
        if (cur - prev).abs() <= cfg.rel_tol * cur.abs() {
            break cur;
        }
        prev_prev = as_f64(prev);
        prev = cur;
    };

    let two_pi = flt::<T>(2.0 * std::f64::consts::PI);
    Ok(
        ln_factorial_plain::<T>(n) + (order + T::one()) * lambda / flt(2.0)
            - (two_pi * q.q() * lambda).ln() / flt(2.0)
            + lambda * order * order / flt(2.0)
            + integral.ln(),
    )
}

/// One row of a moment verification.
#[derive(Debug, Clone, Copy)]
pub struct MomentCheck<T> {
    pub n: usize,
    pub numeric_log: T,
    pub exact_log: T,
    pub discrepancy: T,
}

/// Verification of the moment identity up to `n_max`.
#[derive(Debug, Clone)]
pub struct MomentReport<T> {
    pub rows: Vec<MomentCheck<T>>,
    pub max_discrepancy: T,
    /// True when every log-domain discrepancy stayed below `cfg.rel_tol`.
    pub pass: bool,
}

/// Integrates every moment up to `n_max` and compares against the closed
/// form in the log domain (linear magnitudes reach 1e50 by `n` around 10).
pub fn verify_moments<T: Scalar>(
    q: &QDeformation<T>,
    n_max: usize,
    cfg: &QuadratureConfig<T>,
) -> Result<MomentReport<T>> {
    if q.is_degenerate() {
        return Err(Error::DegenerateQ(
            "moment verification needs q > 1; at q = 1 the identity is the plain factorial".into(),
        ));
    }
    let mut bank = HermiteBank::new();
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut max_disc = T::zero();
    for n in 0..=n_max {
        let numeric_log = radial_moment_log_with(&mut bank, n, q, cfg)?;
        let exact_log = moment_exact_log(n, q);
        let discrepancy = (numeric_log - exact_log).abs();
        if discrepancy > max_disc {
            max_disc = discrepancy;
        }
        rows.push(MomentCheck {
            n,
            numeric_log,
            exact_log,
            discrepancy,
        });
    }
    Ok(MomentReport {
        rows,
        max_discrepancy: max_disc,
        pass: max_disc < cfg.rel_tol,
    })
}
