//! Dense complex linear algebra over qubit-indexed spaces.
//!
//! Qubit 0 is the leftmost Kronecker factor, i.e. the most significant bit
//! of a computational-basis index.

mod eigen;
mod json;
mod subset;
mod vector;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{is_finite, Real};

pub use eigen::{eigh, eigvalsh};
pub use json::{MatrixJson, StateVectorJson};
pub use subset::QubitSubset;
pub use vector::StateVector;

/// Largest qubit count accepted by qubit-indexed operations.
pub const MAX_QUBITS: usize = 12;

/// Dense square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![Complex::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from rows, rejecting empty, ragged, non-square or
    /// non-finite input.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Malformed("empty matrix".into()));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Malformed(format!("row {i} has {} entries, expected {dim}", row.len())));
            }
            data.extend(row);
        }
        if !data.iter().all(|&z| is_finite(z)) {
            return Err(Error::Malformed("non-finite entry".into()));
        }
        Ok(Self { dim, data })
    }

    /// Real-valued convenience constructor, mostly for tests and constants.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Complex::new(T::lit(x), T::zero())).collect()).collect())
    }

    pub fn diag(entries: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of qubits `log2(dim)`; fails unless `dim` is an exact power of two.
    pub fn qubits(&self) -> Result<usize> {
        qubit_count(self.dim)
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        self.map(|z| z * k)
    }

    pub fn scale_real(&self, k: T) -> Self {
        self.map(|z| z * k)
    }

    /// Kronecker product; block `(i, j)` of the result is `self[i][j] * other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (da, db) = (self.dim, other.dim);
        let dim = da * db;
        let mut out = Self::zeros(dim);
        for i in 0..da {
            for j in 0..da {
                let a = self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..db {
                    let row = (i * db + k) * dim + j * db;
                    for (l, &b) in other.row(k).iter().enumerate() {
                        out.data[row + l] = a * b;
                    }
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(other.row(k)) {
                    *o = *o + a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &StateVector<T>) -> Result<StateVector<T>> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        let amps = (0..self.dim).map(|i| self.row(i).iter().zip(v.amplitudes()).map(|(&a, &b)| a * b).sum()).collect();
        StateVector::new(amps)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Largest element-wise modulus of `self - other`; infinite on a
    /// dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.dim != other.dim {
            return T::infinity();
        }
        self.data.iter().zip(&other.data).map(|(&a, &b)| (a - b).norm()).fold(T::zero(), T::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn hermitian_deviation(&self) -> T {
        let mut dev = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermitian_deviation() <= tol
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.adjoint().matmul(self).map(|p| p.approx_eq(&Self::identity(self.dim), tol)).unwrap_or(false)
    }

    /// Positive semidefinite test: Hermitian and every eigenvalue `>= -tol`.
    pub fn is_psd(&self, tol: T) -> bool {
        if !self.is_hermitian(tol) {
            return false;
        }
        match eigvalsh(self) {
            Ok(vals) => vals.first().is_none_or(|&v| v >= -tol),
            Err(_) => false,
        }
    }

    /// Traces out the qubits in `traced`, keeping the rest in their original
    /// order.
    pub fn partial_trace(&self, traced: &QubitSubset) -> Result<Self> {
        let n = self.qubits()?;
        traced.check_width(n)?;
        let kept = traced.complement();
        let kept_offsets = kept.scatter_table();
        let traced_offsets = traced.scatter_table();
        let rd = kept_offsets.len();
        let mut out = Self::zeros(rd);
        for (r, &ro) in kept_offsets.iter().enumerate() {
            for (c, &co) in kept_offsets.iter().enumerate() {
                out[(r, c)] = traced_offsets.iter().map(|&t| self[(ro | t, co | t)]).sum();
            }
        }
        Ok(out)
    }

    /// Transposes only the tensor factors belonging to qubits in `part`.
    pub fn partial_transpose(&self, part: &QubitSubset) -> Result<Self> {
        let n = self.qubits()?;
        part.check_width(n)?;
        let mask = part.mask();
        Ok(Self::from_fn(self.dim, |i, j| {
            let src_row = (i & !mask) | (j & mask);
            let src_col = (j & !mask) | (i & mask);
            self[(src_row, src_col)]
        }))
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }
}

pub(crate) fn qubit_count(dim: usize) -> Result<usize> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::NotQubitIndexed(dim));
    }
    let n = dim.trailing_zeros() as usize;
    if n > MAX_QUBITS {
        return Err(Error::out_of_range("qubit count", n, format!("0..={MAX_QUBITS}")));
    }
    Ok(n)
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Real> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        Matrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect() }
    }
}

impl<T: Real> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        Matrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect() }
    }
}

impl<T: Real> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|z| -z)
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix({}x{})", self.dim, self.dim)?;
        for row in self.data.chunks(self.dim.max(1)) {
            let row: Vec<String> = row.iter().map(|z| format!("{:?}{:+?}i", z.re, z.im)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn kron<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    a.kron(b)
}

/// Kronecker product of a sequence of factors, leftmost first.
pub fn kron_all<'a, T: Real>(factors: impl IntoIterator<Item = &'a Matrix<T>>) -> Matrix<T> {
    factors.into_iter().fold(Matrix::identity(1), |acc, f| acc.kron(f))
}

pub fn matmul<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    a.matmul(b)
}

pub fn adjoint<T: Real>(a: &Matrix<T>) -> Matrix<T> {
    a.adjoint()
}

pub fn trace<T: Real>(a: &Matrix<T>) -> Complex<T> {
    a.trace()
}

pub fn outer<T: Real>(v: &StateVector<T>) -> Result<Matrix<T>> {
    v.outer()
}

pub fn partial_trace<T: Real>(rho: &Matrix<T>, traced: &QubitSubset) -> Result<Matrix<T>> {
    rho.partial_trace(traced)
}

pub fn partial_transpose<T: Real>(rho: &Matrix<T>, part: &QubitSubset) -> Result<Matrix<T>> {
    rho.partial_transpose(part)
}

pub fn is_unitary<T: Real>(a: &Matrix<T>, tol: T) -> bool {
    a.is_unitary(tol)
}

pub fn is_hermitian<T: Real>(a: &Matrix<T>, tol: T) -> bool {
    a.is_hermitian(tol)
}

pub fn is_psd<T: Real>(a: &Matrix<T>, tol: T) -> bool {
    a.is_psd(tol)
}

/// `exp(i * theta * a) = cos(theta) I + i sin(theta) a` for an involutory `a`
/// (`a^2 = I`).
pub fn involutory_exponential<T: Real>(theta: T, a: &Matrix<T>) -> Result<Matrix<T>> {
    let id = Matrix::identity(a.dim());
    let dev = a.matmul(a)?.max_abs_diff(&id);
    let tol = T::lit(1e-9).max(T::epsilon() * T::lit(64.0));
    if dev > tol {
        return Err(Error::NotInvolutory(dev.to_f64().unwrap_or(f64::NAN)));
    }
    let (s, c) = theta.sin_cos();
    Ok(&id.scale_real(c) + &a.scale(Complex::new(T::zero(), s)))
}

/// Tolerance used when a caller does not supply one.
pub fn default_tol<T: Real>() -> T {
    T::lit(1e-9).max(T::epsilon().sqrt())
}
