//! Operator algebra, coherent-state, and quantization properties across the
//! fock and quantization modules.

use num_complex::Complex;
use qcoherent::fock::{
    build_ladder, build_number, build_qp, build_z_lambda, cs_coeffs, evolve_labels, truncation_for,
    two_mode_cs, OperatorMatrix, PhysicalParams,
};
use qcoherent::moments::{x_seq, QDeformation, QuadratureConfig};
use qcoherent::quantization::{
    lower_symbol, quantize, resolution_check, time_evolved_symbol, time_evolved_symbol_matrix,
    uncertainty_product, uncertainty_product_direct, RadialPolynomial,
};

type C = Complex<f64>;

fn cfg() -> QuadratureConfig<f64> {
    QuadratureConfig::default()
}

#[test]
fn number_operator_equals_product_on_full_block() {
    for qv in [1.0_f64, 2.0, (2.0_f64).exp()] {
        let q = QDeformation::new(qv).unwrap();
        let n_trunc = 16;
        let (a, a_dag) = build_ladder(&q, n_trunc);
        let product = a_dag.mul(&a).unwrap();
        let number = build_number(&q, n_trunc);
        for n in 0..=n_trunc {
            let x = number[(n, n)].re;
            assert!(
                (product[(n, n)].re - x).abs() <= 4.0 * f64::EPSILON * x.max(1.0),
                "q = {qv}, n = {n}"
            );
        }
    }
}

#[test]
fn interior_commutator_matches_level_gaps() {
    for qv in [1.0_f64, 2.0, 20.0] {
        let q = QDeformation::new(qv).unwrap();
        let n_trunc = 12;
        let (a, a_dag) = build_ladder(&q, n_trunc);
        let comm = a.mul(&a_dag).unwrap().sub(&a_dag.mul(&a).unwrap()).unwrap();
        for n in 0..n_trunc {
            let gap = x_seq(n + 1, &q) - x_seq(n, &q);
            assert!(
                (comm[(n, n)].re - gap).abs() <= 4.0 * f64::EPSILON * x_seq(n + 1, &q),
                "q = {qv}, n = {n}"
            );
        }
    }
}

#[test]
fn coherent_state_is_lowering_eigenvector_under_truncation_rule() {
    for qv in [1.0_f64, 1.5, (2.0_f64).exp()] {
        let q = QDeformation::new(qv).unwrap();
        for zeta in [C::new(0.5, 0.0), C::new(0.8, -0.6), C::new(0.0, 1.5)] {
            let n_trunc = truncation_for(zeta.norm(), &q, 2048).unwrap();
            let state = cs_coeffs(zeta, &q, n_trunc).unwrap();
            let (a, _) = build_ladder(&q, n_trunc);
            let residual = a
                .apply(&state)
                .unwrap()
                .sub(&state.scale(zeta))
                .unwrap()
                .norm();
            assert!(residual < 1e-10, "q = {qv}, zeta = {zeta}: {residual}");
        }
    }
}

#[test]
fn displacement_bridge_and_self_adjointness() {
    for lambda in [0.0_f64, 0.5, 2.0] {
        let params = PhysicalParams::new(1.0, 1.0, 1.0, lambda).unwrap();
        let z = build_z_lambda(&params, 14);
        let q = QDeformation::from_lambda(lambda).unwrap();
        let (a, _) = build_ladder(&q, 14);
        let bridged = a.scale_real(params.ladder_scale());
        assert!(z.max_diff(&bridged).unwrap() <= 1e-12 * bridged.max_norm());
    }
    let q = QDeformation::from_lambda(2.0_f64).unwrap();
    let (qhat, phat) = build_qp(&q, 14);
    assert!(qhat.is_exactly_self_adjoint());
    assert!(phat.is_exactly_self_adjoint());
    assert!(build_number(&q, 14).is_exactly_self_adjoint());
}

#[test]
fn label_evolution_preserves_norm_and_period() {
    let params = PhysicalParams::new(1.0, 2.0, 1.5, 2.0).unwrap();
    let q = params.deformation();
    let z0 = C::new(0.4, 0.3);
    let zeta0 = C::new(0.9, -0.2);
    let m_trunc = truncation_for(z0.norm(), &QDeformation::new(1.0).unwrap(), 512).unwrap();
    let n_trunc = truncation_for(zeta0.norm(), &q, 512).unwrap();
    let period = 2.0 * std::f64::consts::PI / params.omega();
    for k in 0..8 {
        let t = period * k as f64 / 7.0;
        let (z, zeta) = evolve_labels(z0, zeta0, t, &params);
        assert_eq!(z, z0);
        let state = two_mode_cs(z, zeta, &q, m_trunc, n_trunc).unwrap();
        assert!((state.norm() - 1.0).abs() < 1e-12, "t = {t}");
    }
    let (_, zeta_p) = evolve_labels(z0, zeta0, period, &params);
    assert!((zeta_p - zeta0).norm() < 1e-14 * zeta0.norm());
}

#[test]
fn resolution_of_unity_within_tolerances() {
    let q1 = QDeformation::new(1.0_f64).unwrap();
    assert!(resolution_check(&q1, 10, &cfg()).unwrap() < 1e-8);
    let qe2 = QDeformation::from_lambda(2.0_f64).unwrap();
    assert!(resolution_check(&qe2, 8, &cfg()).unwrap() < 1e-6);
}

#[test]
fn quantized_conjugates_are_adjoint_pairs() {
    let q = QDeformation::new(2.0_f64).unwrap();
    for (a, b) in [(1u32, 0u32), (2, 1), (3, 0)] {
        let lhs = quantize(
            &RadialPolynomial::monomial(a, b, C::new(1.0, 0.0)),
            &q,
            10,
            &cfg(),
        )
        .unwrap();
        let rhs = quantize(
            &RadialPolynomial::monomial(b, a, C::new(1.0, 0.0)),
            &q,
            10,
            &cfg(),
        )
        .unwrap();
        assert_eq!(lhs.adjoint(), rhs, "a = {a}, b = {b}");
    }
}

#[test]
fn lower_symbols_reproduce_labels_and_energy() {
    let q = QDeformation::from_lambda(2.0_f64).unwrap();
    let zeta = C::new(1.2, -0.5);
    let n_trunc = truncation_for(zeta.norm(), &q, 2048).unwrap();
    let (a, _) = build_ladder(&q, n_trunc);
    let v = lower_symbol(&a, zeta, &q).unwrap();
    assert!((v - zeta).norm() < 1e-10);
    let number = build_number(&q, n_trunc);
    let e = lower_symbol(&number, zeta, &q).unwrap();
    assert!((e.re - zeta.norm_sqr()).abs() < 1e-10);
}

#[test]
fn uncertainty_product_routes_and_limits() {
    // Formula route equals q/2 at the origin, 1/2 everywhere at q = 1, and
    // matches the direct second-moment route.
    for qv in [1.0_f64, (2.0_f64).exp()] {
        let q = QDeformation::new(qv).unwrap();
        assert!((uncertainty_product(C::new(0.0, 0.0), &q, 8).unwrap() - qv / 2.0).abs() < 1e-12);
        for zeta in [C::new(0.5, 0.0), C::new(0.0, 1.0)] {
            let n_trunc = truncation_for(zeta.norm(), &q, 2048).unwrap();
            let formula = uncertainty_product(zeta, &q, n_trunc).unwrap();
            let direct = uncertainty_product_direct(zeta, &q, n_trunc).unwrap();
            assert!((formula - direct).abs() < 1e-10, "q = {qv}, zeta = {zeta}");
            if qv == 1.0 {
                assert!((formula - 0.5).abs() < 1e-13);
            }
        }
    }
}

#[test]
fn evolved_symbol_routes_agree_and_contract() {
    for qv in [1.0_f64, (2.0_f64).exp()] {
        let q = QDeformation::new(qv).unwrap();
        for zeta in [C::new(1.0, 0.0), C::new(0.0, 2.0)] {
            let n_trunc = truncation_for(zeta.norm(), &q, 2048).unwrap();
            for k in 0..=10 {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 10.0;
                let series = time_evolved_symbol(zeta, t, &q, n_trunc).unwrap();
                let matrix = time_evolved_symbol_matrix(zeta, t, &q, n_trunc).unwrap();
                assert!((series - matrix).norm() < 1e-10);
                assert!(series.norm() <= zeta.norm() * (1.0 + 1e-12));
            }
        }
    }
}

#[test]
fn lower_symbol_of_polynomial_is_smooth_in_the_label() {
    // Finite-difference gradients of the lower symbol converge under mesh
    // refinement; the operational stand-in for the smoothness requirement on
    // quantizable observables.
    let q = QDeformation::from_lambda(2.0_f64).unwrap();
    let f = RadialPolynomial::from_terms(vec![
        qcoherent::quantization::MonomialTerm {
            a: 1,
            b: 1,
            coeff: C::new(1.0, 0.0),
        },
        qcoherent::quantization::MonomialTerm {
            a: 1,
            b: 0,
            coeff: C::new(0.5, 0.0),
        },
    ]);
    let n_trunc = 24;
    let op = quantize(&f, &q, n_trunc, &cfg()).unwrap();
    let symbol = |re: f64, im: f64| -> f64 { lower_symbol(&op, C::new(re, im), &q).unwrap().re };
    for (x, y) in [(0.3, 0.1), (0.8, -0.4), (0.0, 0.6)] {
        let mut grads = Vec::new();
        for &h in &[1e-2, 5e-3, 2.5e-3] {
            let gx = (symbol(x + h, y) - symbol(x - h, y)) / (2.0 * h);
            let gy = (symbol(x, y + h) - symbol(x, y - h)) / (2.0 * h);
            assert!(gx.is_finite() && gy.is_finite());
            assert!(gx.abs() < 1e3 && gy.abs() < 1e3);
            grads.push((gx, gy));
        }
        // Central differences are second order: successive halvings must
        // agree ever more closely.
        let d01 = ((grads[0].0 - grads[1].0).powi(2) + (grads[0].1 - grads[1].1).powi(2)).sqrt();
        let d12 = ((grads[1].0 - grads[2].0).powi(2) + (grads[1].1 - grads[2].1).powi(2)).sqrt();
        assert!(d12 < d01 || d01 < 1e-9, "({x}, {y}): {d01} then {d12}");
    }
}

#[test]
fn operator_matrix_identity_sanity() {
    let id = OperatorMatrix::<f64>::identity(6);
    assert_eq!(id.max_diff(&OperatorMatrix::identity(6)).unwrap(), 0.0);
}
