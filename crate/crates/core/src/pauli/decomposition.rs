use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::PauliString;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Above this qubit count coefficient tables keep only nonzero entries.
pub const DENSE_MAX_QUBITS: usize = 6;

/// Magnitude below which a coefficient is reported as zero.
pub const REPORT_THRESHOLD: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
enum Coeffs<T> {
    Dense(Vec<T>),
    Sparse(BTreeMap<usize, T>),
}

/// Real coefficient table over all `4^n` Pauli strings.
#[derive(Clone, Debug, PartialEq)]
pub struct HsDecomposition<T> {
    n: usize,
    coeffs: Coeffs<T>,
}

impl<T: Real> HsDecomposition<T> {
    /// Takes a full table indexed by [`PauliString::index`].
    pub fn from_dense(n: usize, values: Vec<T>) -> Result<Self> {
        let len = 1usize << (2 * n);
        if values.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: values.len() });
        }
        if n == 0 {
            return Err(Error::EmptyPauliString);
        }
        let coeffs = if n <= DENSE_MAX_QUBITS {
            Coeffs::Dense(values)
        } else {
            Coeffs::Sparse(values.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
        };
        Ok(Self { n, coeffs })
    }

    /// Builds a table where every string not listed has coefficient zero.
    /// Repeated strings are summed.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (PauliString, T)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPauliString);
        }
        let mut map = BTreeMap::new();
        for (s, v) in entries {
            if s.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: s.len() });
            }
            if !v.is_finite() {
                return Err(Error::Malformed(format!("non-finite coefficient for {s}")));
            }
            let slot = map.entry(s.index()).or_insert_with(T::zero);
            *slot = *slot + v;
        }
        let coeffs = if n <= DENSE_MAX_QUBITS {
            let mut dense = vec![T::zero(); 1 << (2 * n)];
            for (i, v) in map {
                dense[i] = v;
            }
            Coeffs::Dense(dense)
        } else {
            map.retain(|_, v| !v.is_zero());
            Coeffs::Sparse(map)
        };
        Ok(Self { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.coeffs, Coeffs::Dense(_))
    }

    pub fn get_index(&self, index: usize) -> T {
        match &self.coeffs {
            Coeffs::Dense(v) => v.get(index).copied().unwrap_or_else(T::zero),
            Coeffs::Sparse(m) => m.get(&index).copied().unwrap_or_else(T::zero),
        }
    }

    pub fn get(&self, s: &PauliString) -> T {
        if s.len() != self.n {
            return T::zero();
        }
        self.get_index(s.index())
    }

    pub fn identity_coeff(&self) -> T {
        self.get_index(0)
    }

    /// Stored `(index, value)` pairs in index order; all `4^n` for dense
    /// tables, the nonzero ones otherwise.
    pub fn stored(&self) -> Box<dyn Iterator<Item = (usize, T)> + '_> {
        match &self.coeffs {
            Coeffs::Dense(v) => Box::new(v.iter().copied().enumerate()),
            Coeffs::Sparse(m) => Box::new(m.iter().map(|(&i, &v)| (i, v))),
        }
    }

    /// Full table, materialized densely.
    pub fn to_dense(&self) -> Vec<T> {
        match &self.coeffs {
            Coeffs::Dense(v) => v.clone(),
            Coeffs::Sparse(m) => {
                let mut out = vec![T::zero(); 1 << (2 * self.n)];
                for (&i, &v) in m {
                    out[i] = v;
                }
                out
            }
        }
    }

    /// Entries with `|value| >= threshold`, in index order.
    pub fn nonzero(&self, threshold: T) -> Vec<(PauliString, T)> {
        self.stored()
            .filter(|(_, v)| v.abs() >= threshold)
            .map(|(i, v)| (PauliString::from_index(i, self.n), v))
            .collect()
    }

    pub fn by_weight(&self, w: usize, include_zeros: bool) -> Result<Vec<(PauliString, T)>> {
        if w > self.n {
            return Err(Error::WeightOutOfRange { weight: w, n: self.n });
        }
        let threshold = T::lit(REPORT_THRESHOLD);
        if include_zeros {
            Ok((0..1usize << (2 * self.n))
                .map(|i| PauliString::from_index(i, self.n))
                .filter(|s| s.weight() == w)
                .map(|s| {
                    let v = self.get(&s);
                    (s, v)
                })
                .collect())
        } else {
            Ok(self.nonzero(threshold).into_iter().filter(|(s, _)| s.weight() == w).collect())
        }
    }

    /// Sum of `c_s^2` over all strings; equals `2^n Tr(rho^2)`.
    pub fn squared_norm(&self) -> T {
        self.stored().map(|(_, v)| v * v).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.n != other.n {
            return T::infinity();
        }
        let a = self.to_dense();
        let b = other.to_dense();
        a.iter().zip(&b).map(|(&x, &y)| (x - y).abs()).fold(T::zero(), T::max)
    }

    pub fn to_json(&self, threshold: T, full: bool) -> HsJson {
        let coeffs = self
            .stored()
            .filter(|(_, v)| full || v.abs() >= threshold)
            .map(|(i, v)| (PauliString::from_index(i, self.n).to_string(), v.to_f64().unwrap_or(f64::NAN)))
            .collect::<Vec<_>>();
        let coeffs = if full && !self.is_dense() {
            (0..1usize << (2 * self.n))
                .map(|i| {
                    (PauliString::from_index(i, self.n).to_string(), self.get_index(i).to_f64().unwrap_or(f64::NAN))
                })
                .collect()
        } else {
            coeffs
        };
        HsJson { n: self.n, coeffs: coeffs.into_iter().map(|(k, v)| (k, v.into())).collect() }
    }
}

/// `{"n": 3, "coeffs": {"XYY": -1.0, ...}}` with entries in table order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HsJson {
    pub n: usize,
    pub coeffs: serde_json::Map<String, serde_json::Value>,
}

impl<T: Real> TryFrom<HsJson> for HsDecomposition<T> {
    type Error = Error;

    fn try_from(json: HsJson) -> Result<Self> {
        let entries = json
            .coeffs
            .into_iter()
            .map(|(k, v)| {
                let s: PauliString = k.parse()?;
                let x = v.as_f64().ok_or_else(|| Error::Parse(format!("coefficient for {k} is not a number")))?;
                let x = T::from_f64(x).ok_or_else(|| Error::Parse(format!("coefficient for {k} not representable")))?;
                Ok((s, x))
            })
            .collect::<Result<Vec<_>>>()?;
        HsDecomposition::from_entries(json.n, entries)
    }
}
