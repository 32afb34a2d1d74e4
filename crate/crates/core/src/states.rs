//! Named states: computational basis, GHZ, singlet, and the string form
//! used to pick a state on the command line.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;

use crate::braid::{bell_state, MAX_BRAID_QUBITS};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, StateVector, MAX_QUBITS};
use crate::scalar::Real;
use crate::separability::werner_state;

fn check_qubits(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_QUBITS {
        return Err(Error::out_of_range("qubit count", n, format!("{min}..={MAX_QUBITS}")));
    }
    Ok(())
}

/// Basis column `i` (1-based): the binary expansion of `i - 1`, qubit 0 as
/// the most significant bit.
pub fn computational_basis<T: Real>(n: usize, i: usize) -> Result<StateVector<T>> {
    check_qubits(n, 1)?;
    let dim = 1usize << n;
    if i == 0 || i > dim {
        return Err(Error::out_of_range("basis index", i, format!("1..={dim}")));
    }
    StateVector::basis(dim, i - 1)
}

/// `(|0...0> + |1...1>) / sqrt(2)`.
pub fn ghz<T: Real>(n: usize) -> Result<StateVector<T>> {
    check_qubits(n, 2)?;
    let dim = 1usize << n;
    let amp = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
    let mut amps = vec![Complex::zero(); dim];
    amps[0] = amp;
    amps[dim - 1] = amp;
    StateVector::new(amps)
}

/// `(|01> - |10>) / sqrt(2)`.
pub fn bell_singlet<T: Real>() -> StateVector<T> {
    let h = T::FRAC_1_SQRT_2();
    let z = T::zero();
    StateVector::new(vec![Complex::new(z, z), Complex::new(h, z), Complex::new(-h, z), Complex::new(z, z)])
        .expect("finite amplitudes")
}

/// A state named on the command line: `ghz:3`, `singlet`, `werner:0.5`,
/// `basis:3:7`, `bell:3:1` or `file:PATH`.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Basis { n: usize, i: usize },
    Ghz(usize),
    Singlet,
    Werner(f64),
    BraidBell { n: usize, i: usize },
    File(PathBuf),
}

impl StateSpec {
    /// The density matrix of the named state. Files hold a matrix in the
    /// shared JSON format and must be a valid density matrix.
    pub fn density<T: Real>(&self) -> Result<Matrix<T>> {
        match self {
            StateSpec::Basis { n, i } => computational_basis::<T>(*n, *i)?.outer(),
            StateSpec::Ghz(n) => ghz::<T>(*n)?.outer(),
            StateSpec::Singlet => bell_singlet::<T>().outer(),
            StateSpec::Werner(p) => werner_state(T::from_f64(*p).ok_or_else(|| Error::Parse(format!("p = {p}")))?),
            StateSpec::BraidBell { n, i } => bell_state::<T>(*n, *i)?.outer(),
            StateSpec::File(path) => {
                let rho = Matrix::<T>::from_json(&std::fs::read_to_string(path)?)?;
                crate::separability::validate_density(&rho, crate::linalg::default_tol())?;
                Ok(rho)
            }
        }
    }

    /// The state vector, for every variant except the Werner family and files.
    pub fn vector<T: Real>(&self) -> Option<Result<StateVector<T>>> {
        match self {
            StateSpec::Basis { n, i } => Some(computational_basis(*n, *i)),
            StateSpec::Ghz(n) => Some(ghz(*n)),
            StateSpec::Singlet => Some(Ok(bell_singlet())),
            StateSpec::BraidBell { n, i } => Some(bell_state(*n, *i)),
            StateSpec::Werner(_) | StateSpec::File(_) => None,
        }
    }
}

fn parse_num<N: FromStr>(field: &str, what: &str) -> Result<N> {
    field.trim().parse().map_err(|_| Error::Parse(format!("invalid {what} {field:?}")))
}

impl FromStr for StateSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = match s.split_once(':') {
            Some((k, r)) => (k, Some(r)),
            None => (s, None),
        };
        let fields: Vec<&str> = rest.map(|r| r.split(':').collect()).unwrap_or_default();
        let spec = match (kind, fields.as_slice()) {
            ("singlet", []) => StateSpec::Singlet,
            ("ghz", [n]) => StateSpec::Ghz(parse_num(n, "qubit count")?),
            ("werner", [p]) => StateSpec::Werner(parse_num(p, "Werner parameter")?),
            ("basis", [n, i]) => StateSpec::Basis { n: parse_num(n, "qubit count")?, i: parse_num(i, "basis index")? },
            ("bell", [n, i]) => {
                StateSpec::BraidBell { n: parse_num(n, "qubit count")?, i: parse_num(i, "state index")? }
            }
            ("file", _) => {
                let path = rest.filter(|p| !p.is_empty()).ok_or_else(|| Error::Parse("file: needs a path".into()))?;
                StateSpec::File(PathBuf::from(path))
            }
            _ => return Err(Error::Parse(format!("unrecognized state {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl StateSpec {
    fn validate(&self) -> Result<()> {
        match *self {
            StateSpec::Ghz(n) => check_qubits(n, 2),
            StateSpec::Basis { n, i } => {
                check_qubits(n, 1)?;
                if i == 0 || i > 1 << n {
                    return Err(Error::out_of_range("basis index", i, format!("1..={}", 1usize << n)));
                }
                Ok(())
            }
            StateSpec::BraidBell { n, i } => {
                if !(2..=MAX_BRAID_QUBITS).contains(&n) {
                    return Err(Error::out_of_range("qubit count", n, format!("2..={MAX_BRAID_QUBITS}")));
                }
                if i == 0 || i > 1 << n {
                    return Err(Error::out_of_range("state index", i, format!("1..={}", 1usize << n)));
                }
                Ok(())
            }
            StateSpec::Werner(p) => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::out_of_range("Werner parameter", p, "[0, 1]"));
                }
                Ok(())
            }
            StateSpec::Singlet | StateSpec::File(_) => Ok(()),
        }
    }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpec::Basis { n, i } => write!(f, "basis:{n}:{i}"),
            StateSpec::Ghz(n) => write!(f, "ghz:{n}"),
            StateSpec::Singlet => write!(f, "singlet"),
            StateSpec::Werner(p) => write!(f, "werner:{p}"),
            StateSpec::BraidBell { n, i } => write!(f, "bell:{n}:{i}"),
            StateSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}
