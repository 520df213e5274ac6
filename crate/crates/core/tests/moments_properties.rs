//! Module-level properties of the weight function and the moment identity.

use qcoherent::moments::{
    eq_exp, moment_exact_log, verify_moments, weight_laplace, weight_laplace_ln,
    weight_mellin_barnes_ln, QDeformation, QuadratureConfig,
};

fn cfg() -> QuadratureConfig<f64> {
    QuadratureConfig::default()
}

/// Log-spaced grid on [lo, hi].
fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..points)
        .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
        .collect()
}

#[test]
fn weight_is_positive_on_log_grid() {
    for qv in [1.1_f64, 2.0, (2.0_f64).exp(), 20.0] {
        let q = QDeformation::new(qv).unwrap();
        for &t in &log_grid(1e-3, 1e3, 25) {
            let ln_w = weight_laplace_ln(t, &q, &cfg()).unwrap();
            assert!(ln_w.is_finite(), "q = {qv}, t = {t}: ln weight {ln_w}");
        }
    }
}

#[test]
fn weight_paths_agree_on_log_grid() {
    for qv in [1.1_f64, 2.0, (2.0_f64).exp(), 20.0] {
        let q = QDeformation::new(qv).unwrap();
        for &t in &log_grid(1e-3, 1e3, 25) {
            let lap = weight_laplace_ln(t, &q, &cfg()).unwrap();
            let mb = weight_mellin_barnes_ln(t, &q, &cfg()).unwrap();
            // A difference of logs is a relative difference of the weights.
            assert!(
                (lap - mb).abs() < 1e-6,
                "q = {qv}, t = {t}: laplace {lap} vs mellin-barnes {mb}"
            );
        }
    }
}

#[test]
fn moment_identity_holds_in_log_domain() {
    for qv in [1.5_f64, (2.0_f64).exp(), 20.0] {
        let q = QDeformation::new(qv).unwrap();
        let report = verify_moments(&q, 12, &cfg()).unwrap();
        assert!(
            report.max_discrepancy < 1e-6,
            "q = {qv}: max discrepancy {}",
            report.max_discrepancy
        );
        assert_eq!(report.rows.len(), 13);
        // The closed form itself grows past 1e50 in linear scale by n = 12.
        assert!(moment_exact_log(12, &q) > 0.0);
    }
}

#[test]
fn moment_identity_holds_to_fifteenth_order() {
    let q = QDeformation::new(1.5_f64).unwrap();
    let report = verify_moments(&q, 15, &cfg()).unwrap();
    assert!(report.max_discrepancy < 1e-6);

    let q = QDeformation::new(20.0_f64).unwrap();
    let report = verify_moments(&q, 8, &cfg()).unwrap();
    assert!(report.max_discrepancy < 1e-6);
}

#[test]
fn weight_approaches_exponential_as_q_drops_to_one() {
    // Checked at eps = 1e-3 and 1e-4 with tolerance scaling linearly in eps.
    for (eps, tol) in [(1e-3_f64, 1e-2_f64), (1e-4, 1e-3)] {
        let q = QDeformation::new(1.0 + eps).unwrap();
        for &t in &[0.5_f64, 1.0, 2.0] {
            let w = weight_laplace(t, &q, &cfg()).unwrap();
            let target = (-t).exp();
            assert!(
                (w - target).abs() < tol * target,
                "eps = {eps}, t = {t}: {w} vs {target}"
            );
        }
    }
}

#[test]
fn concurrent_invocations_agree_with_serial_ones() {
    // Pure functions of their arguments: evaluating from several threads
    // must reproduce the serial values bit for bit.
    let q = QDeformation::new(2.0_f64).unwrap();
    let ts = [0.3_f64, 1.0, 4.0, 30.0];
    let serial: Vec<f64> = ts
        .iter()
        .map(|&t| weight_laplace_ln(t, &q, &cfg()).unwrap())
        .collect();
    let handles: Vec<_> = ts
        .iter()
        .map(|&t| {
            std::thread::spawn(move || {
                let q = QDeformation::new(2.0_f64).unwrap();
                weight_laplace_ln(t, &q, &QuadratureConfig::default()).unwrap()
            })
        })
        .collect();
    for (handle, expected) in handles.into_iter().zip(serial) {
        assert_eq!(handle.join().unwrap(), expected);
    }
}

#[test]
fn generalized_exponential_increases_and_matches_exp_at_q_one() {
    let q1 = QDeformation::new(1.0_f64).unwrap();
    for &t in &[0.5_f64, 2.0, 10.0, 20.0] {
        let v = eq_exp(t, &q1, 1e-16).unwrap();
        assert!((v - t.exp()).abs() < 1e-12 * t.exp());
    }
    let q = QDeformation::new(2.0_f64).unwrap();
    let mut prev = 0.0_f64;
    for i in 0..50 {
        let t = 0.5 * i as f64;
        let v = eq_exp(t, &q, 1e-16).unwrap();
        assert!(v > prev);
        prev = v;
    }
}
