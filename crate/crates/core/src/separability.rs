//! Coefficient-sum separability criterion and explicit separable
//! decompositions.
//!
//! For a state whose Pauli expansion contains only the identity and
//! full-weight strings, `rho = 2^-n (I + sum_s T_s P_s)`, every term
//! `|T| I + T P_s` splits into `2^(n-1)` products of single-qubit
//! projectors `(I + a_k sigma_k) / 2` over the sign patterns with
//! `prod a_k = sign(T)`. When `sum |T_s| <= 1` the leftover identity weight
//! `1 - sum |T_s|` is non-negative and the whole state is a convex mixture
//! of products.

use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{default_tol, eigvalsh, kron_all, Matrix, QubitSubset};
use crate::pauli::{hs_decompose, pauli_matrix, HsDecomposition, Pauli, PauliString, REPORT_THRESHOLD};
use crate::scalar::Real;

/// Largest register accepted by [`correlation_report`].
pub const REPORT_MAX_QUBITS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Separable,
    EntangledByCriterion,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Separable => "separable",
            Verdict::EntangledByCriterion => "entangled_by_criterion",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeparabilityVerdict<T> {
    /// Sum of `|c_s|` over full-weight strings.
    pub sum_abs: T,
    pub verdict: Verdict,
    pub reason: String,
}

/// Sum of the absolute full-weight coefficients.
pub fn full_weight_sum<T: Real>(d: &HsDecomposition<T>) -> T {
    let n = d.n();
    d.stored().filter(|&(i, _)| PauliString::from_index(i, n).weight() == n).map(|(_, v)| v.abs()).sum()
}

/// Largest `|c_s|` over non-identity strings of weight below `n`.
pub fn lower_weight_max<T: Real>(d: &HsDecomposition<T>) -> T {
    let n = d.n();
    d.stored()
        .filter(|&(i, _)| {
            let w = PauliString::from_index(i, n).weight();
            w > 0 && w < n
        })
        .map(|(_, v)| v.abs())
        .fold(T::zero(), T::max)
}

/// Checks that `rho` is a qubit-indexed density matrix (Hermitian, unit
/// trace, positive semidefinite) and returns its qubit count.
pub fn validate_density<T: Real>(rho: &Matrix<T>, tol: T) -> Result<usize> {
    let n = rho.qubits()?;
    if n == 0 {
        return Err(Error::NotDensityMatrix("1x1 matrix carries no qubits".into()));
    }
    let dev = rho.hermitian_deviation();
    if dev > tol {
        return Err(Error::NotDensityMatrix(format!("not Hermitian (deviation {dev:e})")));
    }
    let tr = rho.trace();
    if (tr - Complex::new(T::one(), T::zero())).norm() > tol {
        return Err(Error::NotDensityMatrix(format!("trace is {}{:+}i", tr.re, tr.im)));
    }
    let min = eigvalsh(rho)?[0];
    if min < -tol {
        return Err(Error::NotDensityMatrix(format!("negative eigenvalue {min:e}")));
    }
    Ok(n)
}

/// Verdict from a coefficient table alone.
///
/// `sum_abs > 1 + tol` is reported as entangled by the criterion even when
/// lower-weight coefficients are present, since the full-weight sector is
/// what the sum quantifies. `sum_abs <= 1 + tol` certifies separability only
/// when no lower-weight coefficient exceeds `tol`; otherwise the verdict is
/// inapplicable.
pub fn verdict_from_decomposition<T: Real>(d: &HsDecomposition<T>, tol: T) -> SeparabilityVerdict<T> {
    let sum_abs = full_weight_sum(d);
    let lower = lower_weight_max(d);
    let in_family = lower <= tol;
    let (verdict, reason) = if sum_abs > T::one() + tol {
        let mut reason = format!("sum of |full-weight coefficients| = {sum_abs:.6} > 1");
        if !in_family {
            reason.push_str("; lower-weight coefficients present, full-weight sector only");
        }
        (Verdict::EntangledByCriterion, reason)
    } else if in_family {
        (Verdict::Separable, format!("only identity and full-weight terms with sum {sum_abs:.6} <= 1"))
    } else {
        (
            Verdict::Inapplicable,
            format!("lower-weight coefficient of magnitude {lower:.6} present; criterion does not apply"),
        )
    };
    SeparabilityVerdict { sum_abs, verdict, reason }
}

/// Applies the criterion to a density matrix. Outside the criterion's
/// family, a state equal to the product of its single-qubit marginals is
/// reported separable before the coefficient sum is consulted.
pub fn criterion_verdict<T: Real>(rho: &Matrix<T>, tol: T) -> Result<SeparabilityVerdict<T>> {
    validate_density(rho, tol)?;
    verdict_unchecked(rho, tol)
}

fn verdict_unchecked<T: Real>(rho: &Matrix<T>, tol: T) -> Result<SeparabilityVerdict<T>> {
    let d = hs_decompose(rho)?;
    let mut v = verdict_from_decomposition(&d, tol);
    if lower_weight_max(&d) > tol && product_certificate(rho, tol)?.is_some() {
        v.verdict = Verdict::Separable;
        v.reason = format!("equals the product of its single-qubit marginals (full-weight sum {:.6})", v.sum_abs);
    }
    Ok(v)
}

/// One weighted product `weight * (f_0 ⊗ f_1 ⊗ ... )` of single-qubit
/// density matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductTerm<T> {
    pub weight: T,
    pub factors: Vec<Matrix<T>>,
}

impl<T: Real> ProductTerm<T> {
    pub fn matrix(&self) -> Matrix<T> {
        kron_all(&self.factors).scale_real(self.weight)
    }
}

/// Convex mixture of product states.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableDecomposition<T> {
    n: usize,
    terms: Vec<ProductTerm<T>>,
}

/// Measured deviations of a [`SeparableDecomposition`] from its invariants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CertificateAudit<T> {
    /// `|sum of weights - 1|`.
    pub weight_sum_error: T,
    /// Most negative weight, as a positive number (zero if none).
    pub negative_weight: T,
    /// Worst deviation of any factor from Hermitian, unit trace, PSD.
    pub factor_error: T,
    /// Max element-wise distance between the mixture and the target.
    pub reconstruction_error: T,
}

impl<T: Real> CertificateAudit<T> {
    pub fn worst(&self) -> T {
        self.weight_sum_error.max(self.negative_weight).max(self.factor_error).max(self.reconstruction_error)
    }

    pub fn holds(&self, tol: T) -> bool {
        self.worst() <= tol
    }
}

impl<T: Real> SeparableDecomposition<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[ProductTerm<T>] {
        &self.terms
    }

    pub fn weight_sum(&self) -> T {
        self.terms.iter().map(|t| t.weight).sum()
    }

    pub fn reconstruct(&self) -> Matrix<T> {
        self.terms.iter().fold(Matrix::zeros(1 << self.n), |acc, t| &acc + &t.matrix())
    }

    pub fn audit(&self, target: &Matrix<T>) -> Result<CertificateAudit<T>> {
        let mut factor_error = T::zero();
        for f in self.terms.iter().flat_map(|t| &t.factors) {
            let herm = f.hermitian_deviation();
            let tr = (f.trace() - Complex::new(T::one(), T::zero())).norm();
            let min_eig = eigvalsh(f)?[0];
            factor_error = factor_error.max(herm).max(tr).max((-min_eig).max(T::zero()));
        }
        Ok(CertificateAudit {
            weight_sum_error: (self.weight_sum() - T::one()).abs(),
            negative_weight: self.terms.iter().map(|t| -t.weight).fold(T::zero(), T::max),
            factor_error,
            reconstruction_error: self.reconstruct().max_abs_diff(target),
        })
    }
}

fn half_projector<T: Real>(letter: Pauli, sign: T) -> Matrix<T> {
    let half = T::lit(0.5);
    &Matrix::identity(2).scale_real(half) + &pauli_matrix::<T>(letter).scale_real(sign * half)
}

/// Builds the explicit product-state mixture for a table with only identity
/// and full-weight coefficients whose absolute sum is at most 1.
pub fn build_separable_decomposition<T: Real>(d: &HsDecomposition<T>) -> Result<SeparableDecomposition<T>> {
    let tol = default_tol::<T>();
    let n = d.n();
    let id = d.identity_coeff();
    if (id - T::one()).abs() > tol {
        return Err(Error::MissingIdentity(id.to_f64().unwrap_or(f64::NAN)));
    }
    let lower = lower_weight_max(d);
    if lower > tol {
        return Err(Error::NoCertificate(format!("lower-weight coefficient of magnitude {lower:e} present")));
    }
    let sum_abs = full_weight_sum(d);
    if sum_abs > T::one() + tol {
        return Err(Error::NoCertificate(format!("full-weight sum {sum_abs} exceeds 1")));
    }

    let patterns = 1usize << (n - 1);
    let pattern_weight = T::one() / T::from_usize(patterns).expect("pattern count fits");
    let threshold = T::lit(REPORT_THRESHOLD);
    let mut terms = Vec::new();
    let mut used = T::zero();
    for (idx, coeff) in d.stored() {
        let s = PauliString::from_index(idx, n);
        if s.weight() != n || coeff.abs() < threshold {
            continue;
        }
        used = used + coeff.abs();
        let target_sign = coeff.signum();
        for bits in 0..patterns {
            // free signs on qubits 0..n-1, the last one fixes the product
            let mut signs: Vec<T> =
                (0..n - 1).map(|q| if bits >> (n - 2 - q) & 1 == 1 { -T::one() } else { T::one() }).collect();
            let prod = signs.iter().fold(T::one(), |a, &b| a * b);
            signs.push(target_sign * prod);
            let factors = s.letters().iter().zip(&signs).map(|(&p, &a)| half_projector(p, a)).collect();
            terms.push(ProductTerm { weight: coeff.abs() * pattern_weight, factors });
        }
    }
    let remainder = (T::one() - used).max(T::zero());
    let mixed = Matrix::identity(2).scale_real(T::lit(0.5));
    terms.push(ProductTerm { weight: remainder, factors: vec![mixed; n] });
    Ok(SeparableDecomposition { n, terms })
}

/// One-term certificate when `rho` equals the tensor product of its
/// single-qubit marginals within `tol`.
pub fn product_certificate<T: Real>(rho: &Matrix<T>, tol: T) -> Result<Option<SeparableDecomposition<T>>> {
    let n = rho.qubits()?;
    let marginals =
        (0..n).map(|q| rho.partial_trace(&QubitSubset::new(vec![q], n)?.complement())).collect::<Result<Vec<_>>>()?;
    if kron_all(&marginals).max_abs_diff(rho) > tol {
        return Ok(None);
    }
    Ok(Some(SeparableDecomposition { n, terms: vec![ProductTerm { weight: T::one(), factors: marginals }] }))
}

/// A separability certificate for `rho` if one can be produced: the
/// full-weight construction first, then the product-of-marginals check.
pub fn certify<T: Real>(rho: &Matrix<T>, tol: T) -> Result<Option<SeparableDecomposition<T>>> {
    validate_density(rho, tol)?;
    match build_separable_decomposition(&hs_decompose(rho)?) {
        Ok(cert) => Ok(Some(cert)),
        Err(Error::NoCertificate(_)) | Err(Error::MissingIdentity(_)) => product_certificate(rho, tol),
        Err(e) => Err(e),
    }
}

fn check_cut(part: &QubitSubset, n: usize) -> Result<()> {
    if part.width() != n {
        return Err(Error::InvalidSubset(format!("cut is over {} qubits, state has {n}", part.width())));
    }
    if part.is_empty() || part.len() == n {
        return Err(Error::InvalidSubset("cut must be a nonempty proper subset".into()));
    }
    Ok(())
}

/// Smallest eigenvalue of the partial transpose over `part`.
pub fn ppt_min_eigenvalue<T: Real>(rho: &Matrix<T>, part: &QubitSubset) -> Result<T> {
    check_cut(part, rho.qubits()?)?;
    Ok(eigvalsh(&rho.partial_transpose(part)?)?[0])
}

/// True when the partial transpose over `part` is positive semidefinite
/// within `tol`, i.e. no entanglement is detected across the cut.
pub fn ppt_check<T: Real>(rho: &Matrix<T>, part: &QubitSubset, tol: T) -> Result<bool> {
    validate_density(rho, tol)?;
    Ok(ppt_min_eigenvalue(rho, part)? >= -tol)
}

/// `(I⊗I - p (X⊗X + Y⊗Y + Z⊗Z)) / 4` for `0 <= p <= 1`.
pub fn werner_state<T: Real>(p: T) -> Result<Matrix<T>> {
    if !(p >= T::zero() && p <= T::one()) {
        return Err(Error::out_of_range("Werner parameter", p, "[0, 1]"));
    }
    let quarter = T::lit(0.25);
    let mut rho = Matrix::identity(4).scale_real(quarter);
    for letter in [Pauli::X, Pauli::Y, Pauli::Z] {
        let pp = pauli_matrix::<T>(letter);
        rho = &rho - &pp.kron(&pp).scale_real(p * quarter);
    }
    Ok(rho)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationEntry<T> {
    pub kept: QubitSubset,
    pub verdict: SeparabilityVerdict<T>,
}

/// Criterion verdict of every reduced state on two or more qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationReport<T> {
    pub n: usize,
    /// Ordered by subset size, then lexicographically; the last entry is the
    /// full register.
    pub entries: Vec<CorrelationEntry<T>>,
}

/// Text attached to the single-qubit marginals, which carry no correlations.
pub const SINGLE_QUBIT_NOTE: &str = "single qubit - no correlations";

pub fn correlation_report<T: Real>(rho: &Matrix<T>, tol: T) -> Result<CorrelationReport<T>> {
    let n = rho.qubits()?;
    if n > REPORT_MAX_QUBITS {
        return Err(Error::out_of_range("qubit count", n, format!("1..={REPORT_MAX_QUBITS}")));
    }
    validate_density(rho, tol)?;
    let entries = QubitSubset::enumerate(n, 2)
        .into_iter()
        .map(|kept| {
            let verdict = if kept.len() == n {
                verdict_unchecked(rho, tol)?
            } else {
                verdict_unchecked(&rho.partial_trace(&kept.complement())?, tol)?
            };
            Ok(CorrelationEntry { kept, verdict })
        })
        .collect::<Result<_>>()?;
    Ok(CorrelationReport { n, entries })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrelationEntryJson {
    pub kept: Vec<usize>,
    pub sum_abs: f64,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub reason: String,
}

/// `{"n": 3, "entries": [{"kept": [0, 1], "sum_abs": 1.0, "verdict": "separable"}, ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReportJson {
    pub n: usize,
    pub entries: Vec<CorrelationEntryJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub single_qubit: Option<String>,
}

impl<T: Real> From<&CorrelationReport<T>> for CorrelationReportJson {
    fn from(r: &CorrelationReport<T>) -> Self {
        Self {
            n: r.n,
            entries: r
                .entries
                .iter()
                .map(|e| CorrelationEntryJson {
                    kept: e.kept.indices().to_vec(),
                    sum_abs: e.verdict.sum_abs.to_f64().unwrap_or(f64::NAN),
                    verdict: e.verdict.verdict,
                    reason: e.verdict.reason.clone(),
                })
                .collect(),
            single_qubit: Some(SINGLE_QUBIT_NOTE.to_string()),
        }
    }
}
