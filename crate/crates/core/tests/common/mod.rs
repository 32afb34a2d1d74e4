#![allow(dead_code)]

use hsbraid::linalg::{Matrix, StateVector};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;

pub type M = Matrix<f64>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_matrix(dim: usize, rng: &mut StdRng) -> M {
    M::from_fn(dim, |_, _| gaussian(rng))
}

pub fn random_hermitian(dim: usize, rng: &mut StdRng) -> M {
    let g = random_matrix(dim, rng);
    (&g + &g.adjoint()).scale_real(0.5)
}

pub fn random_unit_vector(dim: usize, rng: &mut StdRng) -> StateVector<f64> {
    StateVector::new((0..dim).map(|_| gaussian(rng)).collect()).unwrap().normalized().unwrap()
}

/// Random mixed state `G G^dagger / Tr` of full rank.
pub fn random_density(n: usize, rng: &mut StdRng) -> M {
    let g = random_matrix(1 << n, rng);
    let p = g.matmul(&g.adjoint()).unwrap();
    let tr = p.trace().re;
    p.scale_real(1.0 / tr)
}

/// `(I - i (X + Y + Z)) / 2`, the local unitary cycling X -> Y -> Z -> X.
pub fn cycle_unitary() -> M {
    M::from_rows(vec![
        vec![Complex64::new(0.5, -0.5), Complex64::new(-0.5, -0.5)],
        vec![Complex64::new(0.5, -0.5), Complex64::new(0.5, 0.5)],
    ])
    .unwrap()
}

/// Tensor power of a single-qubit matrix.
pub fn tensor_power(u: &M, n: usize) -> M {
    (0..n).fold(M::identity(1), |acc, _| acc.kron(u))
}
