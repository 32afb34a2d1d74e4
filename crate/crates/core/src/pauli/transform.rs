//! Coefficient extraction and reconstruction.
//!
//! The fast path peels one qubit per level: a block matrix
//! `[[B00, B01], [B10, B11]]` over the leading qubit contracts against the
//! four single-qubit Paulis into `B00 + B11`, `B01 + B10`, `i (B01 - B10)`
//! and `B00 - B11`. Each level maps `4^k` blocks of side `2^(n-k)` to
//! `4^(k+1)` blocks of half the side, so the whole transform is
//! `O(n 4^n)`.

use num_complex::Complex;
use num_traits::Zero;

use super::{HsDecomposition, PauliString};
use crate::error::{Error, Result};
use crate::linalg::{default_tol, Matrix};
use crate::scalar::Real;

fn check_input<T: Real>(rho: &Matrix<T>) -> Result<(usize, T)> {
    let n = rho.qubits()?;
    if n == 0 {
        return Err(Error::NotQubitIndexed(1));
    }
    let scale = rho.frobenius_norm().max(T::one());
    let dev = rho.hermitian_deviation();
    if dev > default_tol::<T>() * scale {
        return Err(Error::NotHermitian(dev.to_f64().unwrap_or(f64::NAN)));
    }
    let dim = T::from_usize(rho.dim()).expect("dimension fits");
    let imag_tol = (T::lit(1e-10).max(T::epsilon() * T::lit(64.0)) + dim * dev) * scale;
    Ok((n, imag_tol))
}

fn finish<T: Real>(n: usize, raw: Vec<Complex<T>>, imag_tol: T) -> Result<HsDecomposition<T>> {
    let worst = raw.iter().map(|z| z.im.abs()).fold(T::zero(), T::max);
    if worst > imag_tol {
        return Err(Error::NotHermitian(worst.to_f64().unwrap_or(f64::NAN)));
    }
    HsDecomposition::from_dense(n, raw.into_iter().map(|z| z.re).collect())
}

/// Pauli coefficients `Tr(rho P_s)` of a Hermitian qubit-indexed matrix
/// via the recursive contraction.
pub fn hs_decompose<T: Real>(rho: &Matrix<T>) -> Result<HsDecomposition<T>> {
    let (n, imag_tol) = check_input(rho)?;
    finish(n, forward(rho.as_slice(), n), imag_tol)
}

/// Reference path: one full trace per string, `O(16^n)`.
pub fn hs_decompose_naive<T: Real>(rho: &Matrix<T>) -> Result<HsDecomposition<T>> {
    let (n, imag_tol) = check_input(rho)?;
    let dim = rho.dim();
    let raw = (0..1usize << (2 * n))
        .map(|idx| {
            let p = PauliString::from_index(idx, n).matrix::<T>();
            let mut acc = Complex::zero();
            for i in 0..dim {
                for j in 0..dim {
                    acc = acc + rho[(i, j)] * p[(j, i)];
                }
            }
            acc
        })
        .collect();
    finish(n, raw, imag_tol)
}

fn forward<T: Real>(data: &[Complex<T>], n: usize) -> Vec<Complex<T>> {
    let i = Complex::new(T::zero(), T::one());
    let mut cur = data.to_vec();
    let mut side = 1usize << n;
    while side > 1 {
        let half = side / 2;
        let blocks = cur.len() / (side * side);
        let mut next = vec![Complex::zero(); cur.len()];
        for b in 0..blocks {
            let src = &cur[b * side * side..(b + 1) * side * side];
            let out = &mut next[b * 4 * half * half..(b + 1) * 4 * half * half];
            let (o_i, rest) = out.split_at_mut(half * half);
            let (o_x, rest) = rest.split_at_mut(half * half);
            let (o_y, o_z) = rest.split_at_mut(half * half);
            for r in 0..half {
                for c in 0..half {
                    let b00 = src[r * side + c];
                    let b01 = src[r * side + c + half];
                    let b10 = src[(r + half) * side + c];
                    let b11 = src[(r + half) * side + c + half];
                    let k = r * half + c;
                    o_i[k] = b00 + b11;
                    o_x[k] = b01 + b10;
                    o_y[k] = (b01 - b10) * i;
                    o_z[k] = b00 - b11;
                }
            }
        }
        cur = next;
        side = half;
    }
    cur
}

fn inverse<T: Real>(coeffs: Vec<T>, n: usize) -> Vec<Complex<T>> {
    let i = Complex::new(T::zero(), T::one());
    let mut cur: Vec<Complex<T>> = coeffs.into_iter().map(|v| Complex::new(v, T::zero())).collect();
    let mut half = 1usize;
    while half < 1 << n {
        let side = half * 2;
        let blocks = cur.len() / (side * side);
        let mut next = vec![Complex::zero(); cur.len()];
        for b in 0..blocks {
            let src = &cur[b * 4 * half * half..(b + 1) * 4 * half * half];
            let (m_i, rest) = src.split_at(half * half);
            let (m_x, rest) = rest.split_at(half * half);
            let (m_y, m_z) = rest.split_at(half * half);
            let out = &mut next[b * side * side..(b + 1) * side * side];
            for r in 0..half {
                for c in 0..half {
                    let k = r * half + c;
                    out[r * side + c] = m_i[k] + m_z[k];
                    out[r * side + c + half] = m_x[k] - m_y[k] * i;
                    out[(r + half) * side + c] = m_x[k] + m_y[k] * i;
                    out[(r + half) * side + c + half] = m_i[k] - m_z[k];
                }
            }
        }
        cur = next;
        half = side;
    }
    cur
}

fn check_identity<T: Real>(d: &HsDecomposition<T>) -> Result<()> {
    let id = d.identity_coeff();
    if (id - T::one()).abs() > default_tol::<T>() {
        return Err(Error::MissingIdentity(id.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// `2^-n * sum_s c_s P_s`. The identity coefficient must be 1.
pub fn hs_reconstruct<T: Real>(d: &HsDecomposition<T>) -> Result<Matrix<T>> {
    check_identity(d)?;
    let n = d.n();
    let data = inverse(d.to_dense(), n);
    let norm = T::one() / T::from_usize(1 << n).expect("dimension fits");
    let dim = 1usize << n;
    Ok(Matrix::from_fn(dim, |r, c| data[r * dim + c] * norm))
}

/// Explicit sum of scaled Kronecker products.
pub fn hs_reconstruct_naive<T: Real>(d: &HsDecomposition<T>) -> Result<Matrix<T>> {
    check_identity(d)?;
    let n = d.n();
    let mut acc = Matrix::zeros(1 << n);
    for (idx, v) in d.stored() {
        if v.is_zero() {
            continue;
        }
        acc = &acc + &PauliString::from_index(idx, n).matrix::<T>().scale_real(v);
    }
    Ok(acc.scale_real(T::one() / T::from_usize(1 << n).expect("dimension fits")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn maximally_mixed() {
        let d = hs_decompose(&Matrix::<f64>::identity(4).scale_real(0.25)).unwrap();
        assert_eq!(d.identity_coeff(), 1.0);
        assert_eq!(d.nonzero(1e-12).len(), 1);
    }

    #[test]
    fn every_single_string_is_recovered() {
        for idx in 0..16 {
            let s = PauliString::from_index(idx, 2);
            let d = hs_decompose(&s.matrix::<f64>()).unwrap();
            for j in 0..16 {
                let expected = if j == idx { 4.0 } else { 0.0 };
                assert_eq!(d.get_index(j), expected, "string {s}, coefficient {j}");
            }
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::<f64>::from_fn(2, |i, j| c((i * 2 + j) as f64, 0.0));
        assert!(matches!(hs_decompose(&m), Err(Error::NotHermitian(_))));
        assert!(matches!(hs_decompose(&Matrix::<f64>::identity(3)), Err(Error::NotQubitIndexed(3))));
    }

    #[test]
    fn reconstruct_examples() {
        let d = HsDecomposition::<f64>::from_entries(2, [(ps("II"), 1.0), (ps("ZZ"), 1.0)]).unwrap();
        let m = hs_reconstruct(&d).unwrap();
        let expected = Matrix::diag(&[c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)]);
        assert!(m.approx_eq(&expected, 1e-15));
        let id = HsDecomposition::<f64>::from_entries(2, [(ps("II"), 1.0)]).unwrap();
        assert!(hs_reconstruct(&id).unwrap().approx_eq(&Matrix::identity(4).scale_real(0.25), 1e-15));
    }

    #[test]
    fn reconstruct_requires_identity() {
        let d = HsDecomposition::<f64>::from_entries(2, [(ps("ZZ"), 1.0)]).unwrap();
        assert!(matches!(hs_reconstruct(&d), Err(Error::MissingIdentity(_))));
    }

    #[test]
    fn fast_and_naive_reconstruction_agree() {
        let d = HsDecomposition::<f64>::from_entries(
            3,
            [(ps("III"), 1.0), (ps("XYZ"), 0.3), (ps("IYI"), -0.2), (ps("ZIX"), 0.1)],
        )
        .unwrap();
        let fast = hs_reconstruct(&d).unwrap();
        let slow = hs_reconstruct_naive(&d).unwrap();
        assert!(fast.approx_eq(&slow, 1e-15));
    }
}
