//! Polynomial observables on the complex plane: finite sums of monomials
//! `coeff * zeta^a * conj(zeta)^b`.

use num_complex::Complex;

use crate::scalar::Scalar;

/// One monomial `coeff * zeta^a * conj(zeta)^b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonomialTerm<T> {
    pub a: u32,
    pub b: u32,
    pub coeff: Complex<T>,
}

/// A classical observable `f(zeta, conj zeta) = sum coeff zeta^a conj(zeta)^b`
/// with finitely many terms. The quantization map is defined termwise, each
/// monomial landing on the `(a - b)`-th diagonal of the operator.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPolynomial<T> {
    terms: Vec<MonomialTerm<T>>,
}

impl<T: Scalar> RadialPolynomial<T> {
    pub fn from_terms(terms: Vec<MonomialTerm<T>>) -> Self {
        Self { terms }
    }

    /// The constant function 1.
    pub fn one() -> Self {
        Self::monomial(0, 0, Complex::new(T::one(), T::zero()))
    }

    /// The coordinate function `zeta`.
    pub fn zeta() -> Self {
        Self::monomial(1, 0, Complex::new(T::one(), T::zero()))
    }

    /// The conjugate coordinate `conj(zeta)`.
    pub fn zeta_bar() -> Self {
        Self::monomial(0, 1, Complex::new(T::one(), T::zero()))
    }

    /// `|zeta|^2`, the classical oscillator energy.
    pub fn modulus_squared() -> Self {
        Self::monomial(1, 1, Complex::new(T::one(), T::zero()))
    }

    pub fn monomial(a: u32, b: u32, coeff: Complex<T>) -> Self {
        Self {
            terms: vec![MonomialTerm { a, b, coeff }],
        }
    }

    pub fn terms(&self) -> &[MonomialTerm<T>] {
        &self.terms
    }

    /// Largest `zeta` exponent appearing in any term.
    pub fn max_raising(&self) -> u32 {
        self.terms.iter().map(|t| t.a).max().unwrap_or(0)
    }

    /// Classical value `f(zeta, conj zeta)`.
    pub fn evaluate(&self, zeta: Complex<T>) -> Complex<T> {
        let conj = zeta.conj();
        let mut acc = Complex::new(T::zero(), T::zero());
        for term in &self.terms {
            acc += term.coeff * zeta.powu(term.a) * conj.powu(term.b);
        }
        acc
    }
}
