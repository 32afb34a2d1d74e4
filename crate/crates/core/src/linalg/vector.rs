use num_complex::Complex;
use num_traits::Zero;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{is_finite, Real};

/// Column vector of amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    amps: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    pub fn new(amps: Vec<Complex<T>>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::Malformed("empty state vector".into()));
        }
        if !amps.iter().all(|&z| is_finite(z)) {
            return Err(Error::Malformed("non-finite amplitude".into()));
        }
        Ok(Self { amps })
    }

    /// The standard basis vector with a single 1 at `index`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::out_of_range("basis index", index, format!("0..{dim}")));
        }
        let mut amps = vec![Complex::zero(); dim];
        amps[index] = Complex::new(T::one(), T::zero());
        Self::new(amps)
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm(&self) -> T {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Self { amps: self.amps.iter().map(|&z| z / norm).collect() })
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(a, &b)| a.conj() * b).sum())
    }

    /// Projector `|v><v| / <v|v>`.
    pub fn outer(&self) -> Result<Matrix<T>> {
        let norm_sqr = self.amps.iter().map(|z| z.norm_sqr()).sum::<T>();
        if norm_sqr.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Matrix::from_fn(self.dim(), |i, j| self.amps[i] * self.amps[j].conj() / norm_sqr))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let amps = self.amps.iter().flat_map(|&a| other.amps.iter().map(move |&b| a * b)).collect();
        Self { amps }
    }
}
