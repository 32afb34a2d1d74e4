use std::fmt;

use crate::error::{Error, Result};

/// A set of qubit positions within an `n`-qubit register.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QubitSubset {
    indices: Vec<usize>,
    n: usize,
}

impl QubitSubset {
    /// Indices may be given in any order; duplicates and positions `>= n`
    /// are rejected.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if let Some(&bad) = indices.iter().find(|&&q| q >= n) {
            return Err(Error::InvalidSubset(format!("qubit {bad} out of range for {n} qubits")));
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!("duplicate qubit in {indices:?}")));
        }
        Ok(Self { indices, n })
    }

    pub fn empty(n: usize) -> Self {
        Self { indices: Vec::new(), n }
    }

    pub fn all(n: usize) -> Self {
        Self { indices: (0..n).collect(), n }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.indices.binary_search(&q).is_ok()
    }

    pub fn complement(&self) -> Self {
        Self { indices: (0..self.n).filter(|&q| !self.contains(q)).collect(), n: self.n }
    }

    /// Bit mask of the subset over computational indices (qubit `q` is bit
    /// `n - 1 - q`).
    pub fn mask(&self) -> usize {
        self.indices.iter().fold(0, |m, &q| m | (1 << (self.n - 1 - q)))
    }

    /// Offsets into the full index space for every assignment of the subset's
    /// qubits, enumerated with the first listed qubit as most significant.
    pub(crate) fn scatter_table(&self) -> Vec<usize> {
        let k = self.indices.len();
        (0..1usize << k)
            .map(|r| {
                self.indices.iter().enumerate().fold(0, |acc, (pos, &q)| {
                    let bit = (r >> (k - 1 - pos)) & 1;
                    acc | (bit << (self.n - 1 - q))
                })
            })
            .collect()
    }

    pub(crate) fn check_width(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::InvalidSubset(format!("subset is over {} qubits but the matrix has {n}", self.n)));
        }
        Ok(())
    }

    /// Every subset of `0..n` with at least `min_len` members, ordered by
    /// size and then lexicographically.
    pub fn enumerate(n: usize, min_len: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (0u32..1 << n)
            .filter(|m| m.count_ones() as usize >= min_len)
            .map(|m| Self { indices: (0..n).filter(|&q| m >> (n - 1 - q) & 1 == 1).collect(), n })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.indices.cmp(&b.indices)));
        out
    }
}

impl fmt::Display for QubitSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &q in &self.indices {
            write!(f, "{}", qubit_name(q))?;
        }
        Ok(())
    }
}

/// `A`, `B`, `C`, ... for the first 26 qubits, `q26`, `q27`, ... after that.
pub fn qubit_name(q: usize) -> String {
    if q < 26 {
        char::from(b'A' + q as u8).to_string()
    } else {
        format!("q{q}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_out_of_range() {
        assert!(QubitSubset::new(vec![0, 0], 2).is_err());
        assert!(QubitSubset::new(vec![3], 3).is_err());
        assert_eq!(QubitSubset::new(vec![2, 0], 3).unwrap().indices(), &[0, 2]);
    }

    #[test]
    fn mask_and_scatter() {
        let s = QubitSubset::new(vec![0, 2], 3).unwrap();
        assert_eq!(s.mask(), 0b101);
        assert_eq!(s.scatter_table(), vec![0b000, 0b001, 0b100, 0b101]);
        assert_eq!(s.complement().indices(), &[1]);
        assert_eq!(s.to_string(), "AC");
    }

    #[test]
    fn enumeration_order() {
        let subs: Vec<String> = QubitSubset::enumerate(3, 2).iter().map(|s| s.to_string()).collect();
        assert_eq!(subs, ["AB", "AC", "BC", "ABC"]);
    }
}
