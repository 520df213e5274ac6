//! Dense complex matrices and coefficient vectors on the truncated Fock
//! basis. Truncations here are a few dozen levels and the ladder matrices
//! have bandwidth one, so a plain dense layout is the right tool.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense complex operator on the truncated basis, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix<T> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> OperatorMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "operator dimension must be positive");
        Self {
            dim,
            entries: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Diagonal matrix with real entries produced by `f(n)` for each level.
    pub fn from_real_diagonal_fn(dim: usize, f: impl Fn(usize) -> T) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(f(i), T::zero());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                op_dim: self.dim,
                vec_dim: rhs.dim,
            });
        }
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self[(i, k)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..self.dim {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Self,
        f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>,
    ) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                op_dim: self.dim,
                vec_dim: rhs.dim,
            });
        }
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&e| e * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    /// `self * v`.
    pub fn apply(&self, v: &FockVector<T>) -> Result<FockVector<T>> {
        if self.dim != v.dim() {
            return Err(Error::DimensionMismatch {
                op_dim: self.dim,
                vec_dim: v.dim(),
            });
        }
        let mut out = vec![Complex::new(T::zero(), T::zero()); self.dim];
        for i in 0..self.dim {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..self.dim {
                acc += self[(i, j)] * v.coeffs()[j];
            }
            out[i] = acc;
        }
        Ok(FockVector::new(out))
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, e| acc.max(e.norm()))
    }

    /// Largest entrywise difference `max |self - rhs|`.
    pub fn max_diff(&self, rhs: &Self) -> Result<T> {
        Ok(self.sub(rhs)?.max_norm())
    }

    /// Whether the matrix equals its conjugate transpose bit for bit.
    pub fn is_exactly_self_adjoint(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self[(i, j)];
                let b = self[(j, i)].conj();
                if a.re != b.re || a.im != b.im {
                    return false;
                }
            }
        }
        true
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for OperatorMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i * self.dim + j]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for OperatorMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i * self.dim + j]
    }
}

/// Coefficient vector on the truncated basis (single mode, or two modes
/// flattened row-major as `m * (N + 1) + n`).
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector<T> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> FockVector<T> {
    pub fn new(coeffs: Vec<Complex<T>>) -> Self {
        assert!(!coeffs.is_empty(), "coefficient vector must be non-empty");
        Self { coeffs }
    }

    /// Basis vector `e_k` of the given dimension.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim);
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); dim];
        coeffs[k] = Complex::new(T::one(), T::zero());
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Euclidean norm.
    pub fn norm(&self) -> T {
        self.coeffs
            .iter()
            .map(|c| c.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Inner product `<self | other>` (conjugate-linear in `self`).
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                op_dim: self.dim(),
                vec_dim: other.dim(),
            });
        }
        let mut acc = Complex::new(T::zero(), T::zero());
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            acc += a.conj() * b;
        }
        Ok(acc)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                op_dim: self.dim(),
                vec_dim: other.dim(),
            });
        }
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a - b)
                .collect(),
        ))
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * factor).collect())
    }
}
