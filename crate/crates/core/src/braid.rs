//! Braid-group representation on qubit registers and the Bell bases it
//! generates.
//!
//! Generator `g_i` acts as `R` on qubits `i - 1` and `i` (0-based) and as the
//! identity elsewhere, where `R = (I + i X⊗Y) / sqrt(2)`.

use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{involutory_exponential, Matrix, StateVector};
use crate::pauli::{pauli_matrix, Pauli};
use crate::scalar::Real;
use crate::states::computational_basis;

/// Largest register realized densely.
pub const MAX_BRAID_QUBITS: usize = 8;

/// The 4x4 braid matrix written out entry by entry.
pub fn r_matrix<T: Real>() -> Matrix<T> {
    let h = T::FRAC_1_SQRT_2();
    let rows: [[f64; 4]; 4] =
        [[1.0, 0.0, 0.0, 1.0], [0.0, 1.0, -1.0, 0.0], [0.0, 1.0, 1.0, 0.0], [-1.0, 0.0, 0.0, 1.0]];
    Matrix::from_fn(4, |i, j| Complex::new(T::lit(rows[i][j]) * h, T::zero()))
}

/// `X ⊗ Y`, the involution behind the braid matrix.
pub fn xy_generator<T: Real>() -> Matrix<T> {
    pauli_matrix::<T>(Pauli::X).kron(&pauli_matrix(Pauli::Y))
}

/// `(I ⊗ I + i X ⊗ Y) / sqrt(2)`.
pub fn r_from_pauli<T: Real>() -> Matrix<T> {
    let h = T::FRAC_1_SQRT_2();
    &Matrix::identity(4).scale_real(h) + &xy_generator::<T>().scale(Complex::new(T::zero(), h))
}

/// `exp(i pi/4 X ⊗ Y)`.
pub fn r_from_exponential<T: Real>() -> Matrix<T> {
    involutory_exponential(T::FRAC_PI_4(), &xy_generator()).expect("X⊗Y is involutory")
}

fn check_register(n: usize) -> Result<()> {
    if !(2..=MAX_BRAID_QUBITS).contains(&n) {
        return Err(Error::out_of_range("qubit count", n, format!("2..={MAX_BRAID_QUBITS}")));
    }
    Ok(())
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::out_of_range("generator index", i, format!("1..={}", n - 1)));
    }
    Ok(())
}

/// `I^{⊗(i-1)} ⊗ R ⊗ I^{⊗(n-i-1)}`.
pub fn generator<T: Real>(n: usize, i: usize) -> Result<Matrix<T>> {
    generator_with(&r_matrix(), n, i)
}

/// Like [`generator`] but with an arbitrary 4x4 two-qubit matrix in place of `R`.
pub fn generator_with<T: Real>(r: &Matrix<T>, n: usize, i: usize) -> Result<Matrix<T>> {
    check_register(n)?;
    check_index(n, i)?;
    if r.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: r.dim() });
    }
    let left = Matrix::identity(1 << (i - 1));
    let right = Matrix::identity(1 << (n - i - 1));
    Ok(left.kron(r).kron(&right))
}

/// One braid letter `g_i` or `g_i^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn new(index: usize) -> Self {
        Self { index, inverse: false }
    }

    pub fn inv(index: usize) -> Self {
        Self { index, inverse: true }
    }
}

/// Word in the generators of the braid group on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        check_register(n)?;
        for l in &letters {
            check_index(n, l.index)?;
        }
        Ok(Self { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// `g_1 g_2 ... g_{n-1}`, the word that builds the Bell basis.
    pub fn staircase(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(BraidLetter::new).collect())
    }

    /// Parses space-separated tokens such as `g1 g2^-1 g3`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let body = tok.strip_prefix('g').ok_or_else(|| Error::Parse(format!("bad braid token {tok:?}")))?;
                let (num, inverse) = match body.strip_suffix("^-1") {
                    Some(num) => (num, true),
                    None => (body, false),
                };
                let index = num.parse().map_err(|_| Error::Parse(format!("bad braid token {tok:?}")))?;
                Ok(BraidLetter { index, inverse })
            })
            .collect::<Result<_>>()?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(Self { n: self.n, letters: self.letters.iter().chain(&other.letters).copied().collect() })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.inverse { format!("g{}^-1", l.index) } else { format!("g{}", l.index) })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Left-to-right product of the word's generator matrices; inverses use the
/// adjoint of `R`.
pub fn realize<T: Real>(word: &BraidWord) -> Result<Matrix<T>> {
    realize_with(&r_matrix(), word)
}

pub fn realize_with<T: Real>(r: &Matrix<T>, word: &BraidWord) -> Result<Matrix<T>> {
    let r_inv = r.adjoint();
    let mut acc = Matrix::identity(1 << word.n());
    for l in word.letters() {
        let g = generator_with(if l.inverse { &r_inv } else { r }, word.n(), l.index)?;
        acc = acc.matmul(&g)?;
    }
    Ok(acc)
}

/// Largest element-wise deviation seen for each family of braid relations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BraidCheck<T> {
    /// `g_i g_j = g_j g_i` for `|i - j| > 1`.
    pub far_commutation: T,
    /// `g_i g_j g_i = g_j g_i g_j` for `|i - j| = 1`.
    pub adjacent: T,
    /// `g_i g_i^-1 = g_i^-1 g_i = I`.
    pub inverse: T,
}

impl<T: Real> BraidCheck<T> {
    pub fn max_deviation(&self) -> T {
        self.far_commutation.max(self.adjacent).max(self.inverse)
    }

    pub fn passes(&self, tol: T) -> bool {
        self.max_deviation() <= tol
    }
}

/// Relation deviations for the representation generated by `r` on `n` qubits.
pub fn braid_relation_deviations<T: Real>(r: &Matrix<T>, n: usize) -> Result<BraidCheck<T>> {
    check_register(n)?;
    let gens: Vec<Matrix<T>> = (1..n).map(|i| generator_with(r, n, i)).collect::<Result<_>>()?;
    let id = Matrix::identity(1 << n);
    let mut check = BraidCheck { far_commutation: T::zero(), adjacent: T::zero(), inverse: T::zero() };
    for (a, ga) in gens.iter().enumerate() {
        let ga_inv = ga.adjoint();
        check.inverse =
            check.inverse.max(ga.matmul(&ga_inv)?.max_abs_diff(&id)).max(ga_inv.matmul(ga)?.max_abs_diff(&id));
        for (b, gb) in gens.iter().enumerate().skip(a + 1) {
            let ab = ga.matmul(gb)?;
            let ba = gb.matmul(ga)?;
            if b - a > 1 {
                check.far_commutation = check.far_commutation.max(ab.max_abs_diff(&ba));
            } else {
                let aba = ab.matmul(ga)?;
                let bab = ba.matmul(gb)?;
                check.adjacent = check.adjacent.max(aba.max_abs_diff(&bab));
            }
        }
    }
    Ok(check)
}

/// True iff every braid relation holds for `R` on `n` qubits within `tol`.
/// Register sizes outside `2..=8` give `false`.
pub fn verify_braid_relations<T: Real>(n: usize, tol: T) -> bool {
    braid_relation_deviations(&r_matrix(), n).map(|c| c.passes(tol)).unwrap_or(false)
}

/// The two sides of `(R⊗I)(I⊗R)(R⊗I) = (I⊗R)(R⊗I)(I⊗R)`.
pub fn yang_baxter_sides<T: Real>(r: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    if r.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: r.dim() });
    }
    let id = Matrix::identity(2);
    let r1 = r.kron(&id);
    let r2 = id.kron(r);
    let lhs = r1.matmul(&r2)?.matmul(&r1)?;
    let rhs = r2.matmul(&r1)?.matmul(&r2)?;
    Ok((lhs, rhs))
}

pub fn yang_baxter_deviation<T: Real>(r: &Matrix<T>) -> Result<T> {
    let (lhs, rhs) = yang_baxter_sides(r)?;
    Ok(lhs.max_abs_diff(&rhs))
}

pub fn verify_yang_baxter<T: Real>(tol: T) -> bool {
    yang_baxter_deviation(&r_matrix::<T>()).map(|d| d <= tol).unwrap_or(false)
}

/// `|B_i> = g_1 g_2 ... g_{n-1} |C_i>` with `i` 1-based.
pub fn bell_state<T: Real>(n: usize, i: usize) -> Result<StateVector<T>> {
    check_register(n)?;
    let basis = computational_basis(n, i)?;
    realize::<T>(&BraidWord::staircase(n)?)?.apply(&basis)
}

/// All `2^n` braid Bell states in index order.
#[derive(Clone, Debug)]
pub struct BellBasis<T> {
    n: usize,
    states: Vec<StateVector<T>>,
}

impl<T: Real> BellBasis<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn states(&self) -> &[StateVector<T>] {
        &self.states
    }

    /// `G[a][b] = <B_a|B_b>`.
    pub fn gram(&self) -> Matrix<T> {
        let k = self.states.len();
        Matrix::from_fn(k, |a, b| self.states[a].inner(&self.states[b]).expect("equal dimensions"))
    }

    pub fn orthonormality_deviation(&self) -> T {
        self.gram().max_abs_diff(&Matrix::identity(self.states.len()))
    }
}

pub fn bell_basis<T: Real>(n: usize) -> Result<BellBasis<T>> {
    check_register(n)?;
    let u = realize::<T>(&BraidWord::staircase(n)?)?;
    let dim = 1usize << n;
    let states =
        (0..dim).map(|col| StateVector::new((0..dim).map(|row| u[(row, col)]).collect())).collect::<Result<_>>()?;
    Ok(BellBasis { n, states })
}
