use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{kron_all, Matrix};
use crate::scalar::Real;

/// Single-qubit Pauli operator. Discriminants give the base-4 digit used to
/// index Pauli strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn from_digit(d: usize) -> Self {
        Self::ALL[d & 3]
    }

    pub fn digit(self) -> usize {
        self as usize
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            _ => Err(Error::InvalidLetter(c)),
        }
    }

    pub fn as_char(self) -> char {
        ['I', 'X', 'Y', 'Z'][self.digit()]
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Pauli {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Pauli::from_char(c),
            (Some(c), Some(_)) => Err(Error::InvalidLetter(c)),
            (None, _) => Err(Error::EmptyPauliString),
        }
    }
}

/// The 2x2 matrix of a Pauli letter.
pub fn pauli_matrix<T: Real>(p: Pauli) -> Matrix<T> {
    let (o, z) = (Complex::<T>::one(), Complex::<T>::zero());
    let i = Complex::new(T::zero(), T::one());
    let rows = match p {
        Pauli::I => [[o, z], [z, o]],
        Pauli::X => [[z, o], [o, z]],
        Pauli::Y => [[z, -i], [i, z]],
        Pauli::Z => [[o, z], [z, -o]],
    };
    Matrix::from_fn(2, |r, c| rows[r][c])
}

/// Tensor product of Pauli letters; letter 0 acts on qubit 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString(Vec<Pauli>);

impl PauliString {
    pub fn new(letters: Vec<Pauli>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyPauliString);
        }
        Ok(Self(letters))
    }

    pub fn identity(n: usize) -> Self {
        Self(vec![Pauli::I; n])
    }

    /// Inverse of [`PauliString::index`].
    pub fn from_index(index: usize, n: usize) -> Self {
        Self((0..n).map(|q| Pauli::from_digit(index >> (2 * (n - 1 - q)))).collect())
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&p| p != Pauli::I).count()
    }

    /// Base-4 position of the string in a coefficient table, qubit 0 most
    /// significant.
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, p| acc * 4 + p.digit())
    }

    pub fn matrix<T: Real>(&self) -> Matrix<T> {
        let factors: Vec<Matrix<T>> = self.0.iter().map(|&p| pauli_matrix(p)).collect();
        kron_all(&factors)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|p| write!(f, "{p}"))
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.chars().map(Pauli::from_char).collect::<Result<_>>()?)
    }
}

pub fn string_matrix<T: Real>(s: &PauliString) -> Result<Matrix<T>> {
    if s.is_empty() {
        return Err(Error::EmptyPauliString);
    }
    Ok(s.matrix())
}
