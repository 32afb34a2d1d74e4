//! Cyclic Jacobi eigensolver for Hermitian matrices.

use num_complex::Complex;
use num_traits::Zero;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn eigvalsh<T: Real>(a: &Matrix<T>) -> Result<Vec<T>> {
    Ok(jacobi(a, false)?.0)
}

/// Eigenvalues (ascending) and the unitary whose columns are the matching
/// eigenvectors, so that `a = V diag(w) V^dagger`.
pub fn eigh<T: Real>(a: &Matrix<T>) -> Result<(Vec<T>, Matrix<T>)> {
    let (vals, vecs) = jacobi(a, true)?;
    Ok((vals, vecs.expect("vectors requested")))
}

fn off_diagonal_norm<T: Real>(a: &Matrix<T>) -> T {
    let n = a.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi<T: Real>(input: &Matrix<T>, want_vectors: bool) -> Result<(Vec<T>, Option<Matrix<T>>)> {
    let scale = input.frobenius_norm().max(T::one());
    let dev = input.hermitian_deviation();
    if dev > super::default_tol::<T>() * scale {
        return Err(Error::NotHermitian(dev.to_f64().unwrap_or(f64::NAN)));
    }
    let n = input.dim();
    // symmetrize so rounding asymmetry does not leak into the rotations
    let mut a = Matrix::from_fn(n, |i, j| (input[(i, j)] + input[(j, i)].conj()) * T::lit(0.5));
    let mut v = want_vectors.then(|| Matrix::identity(n));
    let threshold = T::jacobi_threshold() * scale;

    let mut sweep = 0;
    while off_diagonal_norm(&a) >= threshold {
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweep += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite eigenvalues"));
    let vals = order.iter().map(|&i| a[(i, i)].re).collect();
    let vecs = v.map(|v| Matrix::from_fn(n, |r, c| v[(r, order[c])]));
    Ok((vals, vecs))
}

/// Applies `A <- U^dagger A U` with the 2x2 unitary that zeroes `A[p][q]`.
fn rotate<T: Real>(a: &mut Matrix<T>, v: Option<&mut Matrix<T>>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag.is_zero() {
        return;
    }
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (mag + mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
    let cos = T::one() / (t * t + T::one()).sqrt();
    let sin = t * cos;

    // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
    let u_pp = Complex::new(cos, T::zero());
    let u_pq = Complex::new(sin, T::zero());
    let u_qp = -phase.conj() * sin;
    let u_qq = phase.conj() * cos;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
    a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * u_pp + vkq * u_qp;
            v[(k, q)] = vkp * u_pq + vkq * u_qq;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    #[test]
    fn identity_spectrum() {
        assert_eq!(eigvalsh(&Matrix::<f64>::identity(4)).unwrap(), vec![1.0; 4]);
    }

    #[test]
    fn pauli_z_spectrum() {
        let z = Matrix::<f64>::diag(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(eigvalsh(&z).unwrap(), vec![-1.0, 1.0]);
    }

    #[test]
    fn complex_two_by_two() {
        // [[2, 1-i], [1+i, 3]] has eigenvalues 1 and 4
        let m =
            Matrix::<f64>::from_rows(vec![vec![c(2.0, 0.0), c(1.0, -1.0)], vec![c(1.0, 1.0), c(3.0, 0.0)]]).unwrap();
        let (w, v) = eigh(&m).unwrap();
        assert!((w[0] - 1.0).abs() < 1e-14 && (w[1] - 4.0).abs() < 1e-14);
        let d = Matrix::diag(&[c(w[0], 0.0), c(w[1], 0.0)]);
        let back = v.matmul(&d).unwrap().matmul(&v.adjoint()).unwrap();
        assert!(back.approx_eq(&m, 1e-13));
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::<f64>::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]).unwrap();
        assert!(matches!(eigvalsh(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn degenerate_spectrum() {
        let m = Matrix::<f64>::from_real_rows(&[&[1.0, 1.0, 0.0], &[1.0, 1.0, 0.0], &[0.0, 0.0, 2.0]]).unwrap();
        let w = eigvalsh(&m).unwrap();
        assert!(w[0].abs() < 1e-14);
        assert!((w[1] - 2.0).abs() < 1e-14 && (w[2] - 2.0).abs() < 1e-14);
    }
}
