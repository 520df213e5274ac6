//! Relative-motion machinery of the magnetic-field problem: the angular
//! momentum diagonal, the squeezed displacement operator, and the label
//! evolution law.

use num_complex::Complex;

use crate::fock::matrix::OperatorMatrix;
use crate::fock::params::PhysicalParams;
use crate::scalar::{flt, uint, Scalar};

/// Angular momentum of the relative motion on its Fock mode:
/// `J = diag(-(n + 1/2))`.
pub fn build_j<T: Scalar>(n_trunc: usize) -> OperatorMatrix<T> {
    OperatorMatrix::from_real_diagonal_fn(n_trunc + 1, |n| -(uint::<T>(n) + flt::<T>(0.5)))
}

/// Squeezed displacement operator
/// `Z_lambda = exp[(lambda/2)(1/2 - J)] r_plus`, built literally: the
/// exponential is diagonal (J is diagonal) and computed entrywise, and
/// `r_plus` is the ladder-scaled `sqrt(n)` lowering matrix. At `lambda = 0`
/// this is the plain scaled lowering matrix; entrywise it equals
/// `ladder_scale * A(q = e^lambda)`, the bridge between the physical
/// displacement operator and the deformed ladder algebra.
pub fn build_z_lambda<T: Scalar>(params: &PhysicalParams<T>, n_trunc: usize) -> OperatorMatrix<T> {
    let dim = n_trunc + 1;
    let lambda = params.lambda_squeeze();
    let half = flt::<T>(0.5);

    // exp((lambda/2)(1/2 - J)) with J = diag(-(n + 1/2)): entries e^{(lambda/2)(n + 1)}.
    let mut stretch = vec![T::zero(); dim];
    for (n, s) in stretch.iter_mut().enumerate() {
        *s = (lambda * half * (uint::<T>(n) + T::one())).exp();
    }

    let mut z = OperatorMatrix::zeros(dim);
    for n in 1..dim {
        let r_plus = params.ladder_scale() * uint::<T>(n).sqrt();
        z[(n - 1, n)] = Complex::new(stretch[n - 1] * r_plus, T::zero());
    }
    z
}

/// Time evolution of the coherent-state labels: the orbit-center label is a
/// constant of motion and the relative label rotates at the cyclotron
/// frequency, `(z, zeta) -> (z, zeta e^{-i omega t})`.
pub fn evolve_labels<T: Scalar>(
    z: Complex<T>,
    zeta: Complex<T>,
    t: T,
    params: &PhysicalParams<T>,
) -> (Complex<T>, Complex<T>) {
    let angle = -params.omega() * t;
    let rotation = Complex::new(angle.cos(), angle.sin());
    (z, zeta * rotation)
}
