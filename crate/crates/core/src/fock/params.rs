//! Physical parameters of the magnetic-field problem and their derived
//! scales.

use crate::error::{Error, Result};
use crate::moments::QDeformation;
use crate::scalar::{as_f64, flt, Scalar};

/// Mass, charge, field magnitude and squeeze parameter, with the derived
/// cyclotron frequency `omega = e B / mu` and the ladder scale
/// `sqrt(2 / (mu omega))` that converts between the dimensionless ladder
/// matrices and the physical raising/lowering combinations of the orbit
/// coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams<T> {
    mu: T,
    e_charge: T,
    b_field: T,
    lambda_squeeze: T,
    omega: T,
    ladder_scale: T,
}

impl<T: Scalar> PhysicalParams<T> {
    pub fn new(mu: T, e_charge: T, b_field: T, lambda_squeeze: T) -> Result<Self> {
        if !(mu > T::zero()) {
            return Err(Error::Domain(format!(
                "mass must be positive (got {})",
                as_f64(mu)
            )));
        }
        if e_charge == T::zero() || !e_charge.is_finite() {
            return Err(Error::Domain("charge must be non-zero and finite".into()));
        }
        if !(b_field > T::zero()) {
            return Err(Error::Domain(format!(
                "field magnitude must be positive (got {})",
                as_f64(b_field)
            )));
        }
        if !(lambda_squeeze >= T::zero()) {
            return Err(Error::Domain(format!(
                "squeeze parameter must satisfy lambda >= 0 (got {})",
                as_f64(lambda_squeeze)
            )));
        }
        let omega = e_charge * b_field / mu;
        if !(omega > T::zero()) {
            return Err(Error::Domain(format!(
                "cyclotron frequency e B / mu must be positive for the ladder scale (got {})",
                as_f64(omega)
            )));
        }
        let ladder_scale = (flt::<T>(2.0) / (mu * omega)).sqrt();
        Ok(Self {
            mu,
            e_charge,
            b_field,
            lambda_squeeze,
            omega,
            ladder_scale,
        })
    }

    pub fn mu(&self) -> T {
        self.mu
    }

    pub fn e_charge(&self) -> T {
        self.e_charge
    }

    pub fn b_field(&self) -> T {
        self.b_field
    }

    pub fn lambda_squeeze(&self) -> T {
        self.lambda_squeeze
    }

    /// `omega = e B / mu`.
    pub fn omega(&self) -> T {
        self.omega
    }

    /// `sqrt(2 / (mu omega))`; satisfies `scale^2 (mu omega / 2) = 1`.
    pub fn ladder_scale(&self) -> T {
        self.ladder_scale
    }

    /// The deformation `q = e^lambda` induced by the squeeze parameter.
    pub fn deformation(&self) -> QDeformation<T> {
        QDeformation::from_lambda(self.lambda_squeeze)
            .expect("lambda_squeeze >= 0 was validated at construction")
    }
}
