//! The six verification/export commands.

use num_complex::Complex64;

use qcoherent::fock::{truncation_for, OperatorMatrix};
use qcoherent::moments::{
    verify_moments, weight_laplace, weight_mellin_barnes, QDeformation, QuadratureConfig,
};
use qcoherent::quantization::{
    quantize, time_evolved_symbol, time_evolved_symbol_matrix, uncertainty_product,
    uncertainty_product_direct, RadialPolynomial,
};
use qcoherent::Error;

use crate::output::{Cell, Payload, Row};

/// Failures of a command run, split by exit-code class.
#[derive(Debug)]
pub enum RunError {
    /// Bad flags or configuration: exit 1.
    Usage(String),
    /// The computation did not converge or an invariant could not be
    /// evaluated: exit 2, with the offending point named.
    Computation(String),
}

/// Library errors map onto the exit-code contract: accuracy failures are
/// verification problems (exit 2), everything else is a configuration
/// problem (exit 1).
fn classify(context: &str, err: Error) -> RunError {
    match err {
        Error::Accuracy { .. } | Error::ImaginaryResidue { .. } => {
            RunError::Computation(format!("{context}: {err}"))
        }
        other => RunError::Usage(format!("{context}: {other}")),
    }
}

fn deformation(q: f64) -> Result<QDeformation<f64>, RunError> {
    let q = QDeformation::new(q).map_err(|e| RunError::Usage(e.to_string()))?;
    if q.is_poorly_conditioned() {
        eprintln!(
            "warning: q = {} is within 1e-3 of the degenerate point q = 1; integral forms are poorly conditioned",
            q.q()
        );
    }
    Ok(q)
}

/// Highest truncation level the label-driven commands will grow to.
const MAX_AUTO_LEVEL: usize = 4096;

pub fn verify_moments_cmd(
    q_value: f64,
    n_max: usize,
    cfg: &QuadratureConfig<f64>,
    check_tol: f64,
) -> Result<Payload, RunError> {
    let q = deformation(q_value)?;
    let report = verify_moments(&q, n_max, cfg).map_err(|e| classify("moment verification", e))?;
    let rows: Vec<Row> = report
        .rows
        .iter()
        .map(|row| {
            vec![
                ("n", Cell::Int(row.n as u64)),
                ("numeric_log", Cell::Float(row.numeric_log)),
                ("exact_log", Cell::Float(row.exact_log)),
                ("discrepancy", Cell::Float(row.discrepancy)),
            ]
        })
        .collect();
    Ok(Payload {
        command: "verify-moments",
        q: q_value,
        rows,
        max_discrepancy: report.max_discrepancy,
        pass: report.max_discrepancy < check_tol,
        error: None,
    })
}

pub fn weight_cmd(
    q_value: f64,
    grid: (f64, f64, usize),
    cfg: &QuadratureConfig<f64>,
    check_tol: f64,
) -> Result<Payload, RunError> {
    let q = deformation(q_value)?;
    let (t_min, t_max, points) = grid;
    let mut rows = Vec::with_capacity(points);
    let mut max_disagreement = 0.0_f64;
    let mut positive = true;
    for i in 0..points {
        let t = t_min + (t_max - t_min) * i as f64 / (points - 1) as f64;
        let lap =
            weight_laplace(t, &q, cfg).map_err(|e| classify(&format!("weight at t = {t}"), e))?;
        let mb = weight_mellin_barnes(t, &q, cfg)
            .map_err(|e| classify(&format!("contour weight at t = {t}"), e))?;
        let disagreement = (lap - mb).abs() / lap.max(f64::MIN_POSITIVE);
        max_disagreement = max_disagreement.max(disagreement);
        positive &= lap > 0.0 && mb > 0.0;
        rows.push(vec![
            ("t", Cell::Float(t)),
            ("laplace", Cell::Float(lap)),
            ("mellin_barnes", Cell::Float(mb)),
            ("rel_disagreement", Cell::Float(disagreement)),
        ]);
    }
    Ok(Payload {
        command: "weight",
        q: q_value,
        rows,
        max_discrepancy: max_disagreement,
        pass: positive && max_disagreement < check_tol,
        error: None,
    })
}

pub fn resolution_cmd(
    q_value: f64,
    n_trunc: usize,
    cfg: &QuadratureConfig<f64>,
    check_tol: f64,
) -> Result<Payload, RunError> {
    let q = deformation(q_value)?;
    let op = quantize(&RadialPolynomial::one(), &q, n_trunc, cfg)
        .map_err(|e| classify("resolution of unity", e))?;
    let identity = OperatorMatrix::<f64>::identity(n_trunc + 1);
    let max_dev = op
        .max_diff(&identity)
        .map_err(|e| classify("resolution of unity", e))?;
    let rows: Vec<Row> = (0..=n_trunc)
        .map(|n| {
            let entry = op[(n, n)].re;
            vec![
                ("n", Cell::Int(n as u64)),
                ("diagonal", Cell::Float(entry)),
                ("deviation", Cell::Float((entry - 1.0).abs())),
            ]
        })
        .collect();
    Ok(Payload {
        command: "resolution",
        q: q_value,
        rows,
        max_discrepancy: max_dev,
        pass: max_dev < check_tol,
        error: None,
    })
}

pub fn quantize_cmd(
    q_value: f64,
    a: u32,
    b: u32,
    n_trunc: usize,
    cfg: &QuadratureConfig<f64>,
    check_tol: f64,
) -> Result<Payload, RunError> {
    let q = deformation(q_value)?;
    let f = RadialPolynomial::monomial(a, b, Complex64::new(1.0, 0.0));
    let g = RadialPolynomial::monomial(b, a, Complex64::new(1.0, 0.0));
    let op = quantize(&f, &q, n_trunc, cfg).map_err(|e| classify("quantization", e))?;
    let pair = quantize(&g, &q, n_trunc, cfg).map_err(|e| classify("quantization", e))?;
    // The conjugate monomial must quantize to the exact adjoint: both bands
    // draw on the same radial moments.
    let adjoint_gap = op
        .max_diff(&pair.adjoint())
        .map_err(|e| classify("quantization", e))?;
    let mut rows = Vec::new();
    let mut finite = true;
    for m in 0..=n_trunc {
        for n in 0..=n_trunc {
            let entry = op[(m, n)];
            if entry.re != 0.0 || entry.im != 0.0 {
                finite &= entry.re.is_finite() && entry.im.is_finite();
                rows.push(vec![
                    ("m", Cell::Int(m as u64)),
                    ("n", Cell::Int(n as u64)),
                    ("re", Cell::Float(entry.re)),
                    ("im", Cell::Float(entry.im)),
                ]);
            }
        }
    }
    Ok(Payload {
        command: "quantize",
        q: q_value,
        rows,
        max_discrepancy: adjoint_gap,
        pass: finite && adjoint_gap <= check_tol,
        error: None,
    })
}

pub fn symbol_evolution_cmd(
    q_value: f64,
    zeta: Complex64,
    t_max: f64,
    steps: usize,
    _cfg: &QuadratureConfig<f64>,
    check_tol: f64,
) -> Result<Payload, RunError> {
    if !(t_max > 0.0) || steps < 2 {
        return Err(RunError::Usage(
            "symbol evolution needs t_max > 0 and at least two steps".into(),
        ));
    }
    let q = deformation(q_value)?;
    let n_trunc = truncation_for(zeta.norm(), &q, MAX_AUTO_LEVEL)
        .map_err(|e| classify("truncation for the label", e))?;
    let mut rows = Vec::with_capacity(steps + 1);
    let mut max_diff = 0.0_f64;
    for k in 0..=steps {
        let t = t_max * k as f64 / steps as f64;
        let series = time_evolved_symbol(zeta, t, &q, n_trunc)
            .map_err(|e| classify(&format!("evolved symbol at t = {t}"), e))?;
        let matrix = time_evolved_symbol_matrix(zeta, t, &q, n_trunc)
            .map_err(|e| classify(&format!("evolved symbol at t = {t}"), e))?;
        let diff = (series - matrix).norm();
        max_diff = max_diff.max(diff);
        rows.push(vec![
            ("t", Cell::Float(t)),
            ("series_re", Cell::Float(series.re)),
            ("series_im", Cell::Float(series.im)),
            ("matrix_re", Cell::Float(matrix.re)),
            ("matrix_im", Cell::Float(matrix.im)),
            ("route_diff", Cell::Float(diff)),
        ]);
    }
    Ok(Payload {
        command: "symbol-evolution",
        q: q_value,
        rows,
        max_discrepancy: max_diff,
        pass: max_diff < check_tol,
        error: None,
    })
}

pub fn uncertainty_cmd(
    q_value: f64,
    zeta: Complex64,
    _cfg: &QuadratureConfig<f64>,
    check_tol: f64,
) -> Result<Payload, RunError> {
    let q = deformation(q_value)?;
    let n_trunc = truncation_for(zeta.norm(), &q, MAX_AUTO_LEVEL)
        .map_err(|e| classify("truncation for the label", e))?;
    let formula =
        uncertainty_product(zeta, &q, n_trunc).map_err(|e| classify("uncertainty product", e))?;
    let direct = uncertainty_product_direct(zeta, &q, n_trunc)
        .map_err(|e| classify("uncertainty product", e))?;
    let diff = (formula - direct).abs();
    let rows = vec![vec![
        ("zeta_re", Cell::Float(zeta.re)),
        ("zeta_im", Cell::Float(zeta.im)),
        ("product_formula", Cell::Float(formula)),
        ("product_direct", Cell::Float(direct)),
        ("route_diff", Cell::Float(diff)),
    ]];
    Ok(Payload {
        command: "uncertainty",
        q: q_value,
        rows,
        max_discrepancy: diff,
        pass: diff < check_tol,
        error: None,
    })
}
