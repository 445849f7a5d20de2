//! Combinatorial spectra of shifted multicomplexes.
//!
//! Indexing: every function here takes the *chain degree* `k`, the degree of the
//! monomials involved. The resulting partition is the nonzero spectrum of
//! `∂_k ∂_k^T`, which is `L'_{k-1}` (and, up to zeros, `L''_k`).

use std::fmt;

use crate::complex::{Multicomplex, VariableOrder};
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; zero parts are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Rejects sequences that are not weakly decreasing. Trailing zeros are trimmed.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Self::trimmed(parts))
    }

    /// Sorts an arbitrary multiset of parts.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::trimmed(parts)
    }

    fn trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ^T_j = #{ i : λ_i >= j }`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.parts.clone();
        v.extend_from_slice(&other.parts);
        Partition::from_multiset(v)
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.parts.iter().map(|&p| p as f64).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Conjugate of an arbitrary (not necessarily sorted) count vector.
pub fn conjugate_of_counts(counts: &[usize]) -> Partition {
    Partition::from_multiset(counts.to_vec()).conjugate()
}

/// Shifted as a multicomplex, or (for square-free input) shifted as a simplicial complex.
pub fn is_formula_applicable(m: &Multicomplex, order: &VariableOrder) -> bool {
    m.is_shifted(order) || (m.is_square_free() && m.is_shifted_simplicial(order))
}

fn require_shifted(m: &Multicomplex, order: &VariableOrder) -> Result<()> {
    if is_formula_applicable(m, order) {
        Ok(())
    } else {
        Err(Error::NotShifted)
    }
}

/// Conjugate of the degree sequence `d_k` of a shifted simplicial complex.
pub fn formula_spectrum_simplicial(
    complex: &Multicomplex,
    k: usize,
    order: &VariableOrder,
) -> Result<Partition> {
    if let Some(bad) = complex.iter().find(|m| !m.is_square_free()) {
        return Err(Error::NotSquareFree(bad.clone()));
    }
    require_shifted(complex, order)?;
    Ok(conjugate_of_counts(&complex.degree_sequence(k)))
}

/// Componentwise sum of the parity vectors of all monomials of degree `k`.
pub fn parity_sum(m: &Multicomplex, k: usize) -> Vec<usize> {
    let mut sum = vec![0; m.ambient_dim()];
    for x in m.layer(k) {
        for (s, a) in sum.iter_mut().zip(x.exponents()) {
            *s += (a % 2) as usize;
        }
    }
    sum
}

/// The conjugate of the (sorted) parity-vector sum over `M_k`, without checking shiftedness.
pub fn formula_spectrum_unchecked(m: &Multicomplex, k: usize) -> Partition {
    conjugate_of_counts(&parity_sum(m, k))
}

/// Parity-sum form of the spectrum of `∂_k ∂_k^T`; requires `M` shifted under `order`.
pub fn formula_spectrum(m: &Multicomplex, k: usize, order: &VariableOrder) -> Result<Partition> {
    require_shifted(m, order)?;
    Ok(formula_spectrum_unchecked(m, k))
}

/// Union over constituents of the conjugated degree sequences, without checking shiftedness.
pub fn master_spectrum_unchecked(m: &Multicomplex, k: usize) -> Partition {
    let mut total = Partition::default();
    for (p, c) in m.constituents().iter() {
        let shift = 2 * p.total_degree() as usize;
        if shift <= k {
            total = total.union(&conjugate_of_counts(&c.degree_sequence(k - shift)));
        }
    }
    total
}

/// Constituent form: `⋃_{p^2 ∈ M, 2 deg p <= k} d_{k - 2 deg p}(M^(p^2))^T`.
pub fn master_spectrum(m: &Multicomplex, k: usize, order: &VariableOrder) -> Result<Partition> {
    require_shifted(m, order)?;
    Ok(master_spectrum_unchecked(m, k))
}
