//! Ladder, number and position/momentum matrices on the truncated basis.

use num_complex::Complex;

use crate::fock::matrix::OperatorMatrix;
use crate::moments::{x_seq, QDeformation};
use crate::scalar::{flt, Scalar};

/// Lowering and raising matrices `(A, A^dag)` of size `(N + 1) x (N + 1)` for
/// truncation level `n_trunc = N >= 2`:
/// `A[n-1, n] = sqrt(x_n)` and `A^dag[n+1, n] = sqrt(x_{n+1})`, with the
/// raising band cut at the top row. `A^dag` is exactly the conjugate
/// transpose of `A`.
pub fn build_ladder<T: Scalar>(
    q: &QDeformation<T>,
    n_trunc: usize,
) -> (OperatorMatrix<T>, OperatorMatrix<T>) {
    assert!(n_trunc >= 2, "truncation level must be at least 2");
    let dim = n_trunc + 1;
    let mut lowering = OperatorMatrix::zeros(dim);
    for n in 1..dim {
        lowering[(n - 1, n)] = Complex::new(x_seq(n, q).sqrt(), T::zero());
    }
    let raising = lowering.adjoint();
    (lowering, raising)
}

/// Diagonal number-like matrix `diag(x_0, ..., x_N)`. Equals the product
/// `A^dag A` on the whole retained block; lowering first means the product
/// picks up no truncation artifact, unlike `A A^dag` whose top corner loses
/// `x_{N+1}`.
pub fn build_number<T: Scalar>(q: &QDeformation<T>, n_trunc: usize) -> OperatorMatrix<T> {
    assert!(n_trunc >= 2, "truncation level must be at least 2");
    OperatorMatrix::from_real_diagonal_fn(n_trunc + 1, |n| x_seq(n, q))
}

/// Position/momentum pair `qhat = (A + A^dag)/sqrt 2`,
/// `phat = (A - A^dag)/(sqrt 2 i)`. Both are self-adjoint exactly: the ladder
/// entries are real, so conjugate-transposition only moves and negates bits.
pub fn build_qp<T: Scalar>(
    q: &QDeformation<T>,
    n_trunc: usize,
) -> (OperatorMatrix<T>, OperatorMatrix<T>) {
    let (lowering, raising) = build_ladder(q, n_trunc);
    let inv_sqrt2 = flt::<T>(1.0) / flt::<T>(2.0).sqrt();
    let qhat = lowering
        .add(&raising)
        .expect("same dimension by construction")
        .scale_real(inv_sqrt2);
    // 1/(sqrt 2 i) = -i/sqrt 2
    let phat = lowering
        .sub(&raising)
        .expect("same dimension by construction")
        .scale(Complex::new(T::zero(), -inv_sqrt2));
    (qhat, phat)
}
