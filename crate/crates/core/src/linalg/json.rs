//! Wire format for matrices and state vectors.
//!
//! Matrices are `{"dim": D, "data": [[[re, im], ...], ...]}` row-major;
//! state vectors are `{"dim": D, "amplitudes": [[re, im], ...]}`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::{Matrix, StateVector};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub data: Vec<Vec<[f64; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateVectorJson {
    pub dim: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

fn to_pair<T: Real>(z: Complex<T>) -> [f64; 2] {
    [z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN)]
}

fn from_pair<T: Real>([re, im]: [f64; 2]) -> Result<Complex<T>> {
    if !(re.is_finite() && im.is_finite()) {
        return Err(Error::Malformed("non-finite entry".into()));
    }
    match (T::from_f64(re), T::from_f64(im)) {
        (Some(re), Some(im)) if re.is_finite() && im.is_finite() => Ok(Complex::new(re, im)),
        _ => Err(Error::Malformed(format!("entry ({re}, {im}) not representable"))),
    }
}

impl<T: Real> From<&Matrix<T>> for MatrixJson {
    fn from(m: &Matrix<T>) -> Self {
        Self { dim: m.dim(), data: (0..m.dim()).map(|i| m.row(i).iter().map(|&z| to_pair(z)).collect()).collect() }
    }
}

impl<T: Real> TryFrom<MatrixJson> for Matrix<T> {
    type Error = Error;

    fn try_from(json: MatrixJson) -> Result<Self> {
        if json.data.len() != json.dim {
            return Err(Error::Malformed(format!("dim is {} but data has {} rows", json.dim, json.data.len())));
        }
        let rows = json
            .data
            .into_iter()
            .map(|row| row.into_iter().map(from_pair).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }
}

impl<T: Real> From<&StateVector<T>> for StateVectorJson {
    fn from(v: &StateVector<T>) -> Self {
        Self { dim: v.dim(), amplitudes: v.amplitudes().iter().map(|&z| to_pair(z)).collect() }
    }
}

impl<T: Real> TryFrom<StateVectorJson> for StateVector<T> {
    type Error = Error;

    fn try_from(json: StateVectorJson) -> Result<Self> {
        if json.amplitudes.len() != json.dim {
            return Err(Error::Malformed(format!(
                "dim is {} but {} amplitudes given",
                json.dim,
                json.amplitudes.len()
            )));
        }
        StateVector::new(json.amplitudes.into_iter().map(from_pair).collect::<Result<_>>()?)
    }
}

impl<T: Real> Matrix<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixJson::from(self)).expect("matrix serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<MatrixJson>(text)?.try_into()
    }
}

impl<T: Real> StateVector<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&StateVectorJson::from(self)).expect("vector serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<StateVectorJson>(text)?.try_into()
    }
}
