//! Pauli strings and Hilbert-Schmidt (Pauli-basis) decompositions.
//!
//! An `n`-qubit operator `rho` expands as `rho = 2^-n * sum_s c_s * P_s`
//! over the `4^n` Pauli strings `P_s`, with `c_s = Tr(rho P_s)`.

mod decomposition;
mod string;
mod transform;

pub use decomposition::{HsDecomposition, HsJson, DENSE_MAX_QUBITS, REPORT_THRESHOLD};
pub use string::{pauli_matrix, string_matrix, Pauli, PauliString};
pub use transform::{hs_decompose, hs_decompose_naive, hs_reconstruct, hs_reconstruct_naive};

use crate::error::Result;
use crate::scalar::Real;

/// All strings of exactly weight `w` with their coefficients. Zero entries
/// are dropped unless `include_zeros` is set.
pub fn coefficients_by_weight<T: Real>(
    d: &HsDecomposition<T>,
    w: usize,
    include_zeros: bool,
) -> Result<Vec<(PauliString, T)>> {
    d.by_weight(w, include_zeros)
}

/// Three-qubit and two-qubit coefficient names (`r`, `s`, `t`, `o`, `f`,
/// `p`, `G` with indices 1, 2, 3 for X, Y, Z). `None` for the identity and
/// for other qubit counts.
///
/// For three qubits the single-qubit vector on C is named `p` so that it
/// does not clash with the A-B correlation matrix `f`.
pub fn conventional_label(s: &PauliString) -> Option<String> {
    let digits: Vec<usize> = s.letters().iter().map(|p| p.digit()).collect();
    let idx = |q: usize| digits[q].to_string();
    match (s.len(), digits.as_slice()) {
        (2, [a, 0]) if *a != 0 => Some(format!("r{}", idx(0))),
        (2, [0, b]) if *b != 0 => Some(format!("s{}", idx(1))),
        (2, [a, b]) if *a != 0 && *b != 0 => Some(format!("t{}{}", idx(0), idx(1))),
        (3, [a, 0, 0]) if *a != 0 => Some(format!("r{}", idx(0))),
        (3, [0, b, 0]) if *b != 0 => Some(format!("s{}", idx(1))),
        (3, [0, 0, c]) if *c != 0 => Some(format!("p{}", idx(2))),
        (3, [0, b, c]) if *b != 0 && *c != 0 => Some(format!("t{}{}", idx(1), idx(2))),
        (3, [a, 0, c]) if *a != 0 && *c != 0 => Some(format!("o{}{}", idx(0), idx(2))),
        (3, [a, b, 0]) if *a != 0 && *b != 0 => Some(format!("f{}{}", idx(0), idx(1))),
        (3, [a, b, c]) if *a != 0 && *b != 0 && *c != 0 => Some(format!("G{}{}{}", idx(0), idx(1), idx(2))),
        _ => None,
    }
}
