//! Laplacians `L'_d = ∂_{d+1} ∂*_{d+1}`, `L''_d = ∂*_d ∂_d`, `L_d = L'_d + L''_d` and their
//! spectra.
//!
//! Spectra are multisets of eigenvalues kept as weakly decreasing sequences. Most
//! comparisons are "up to zeros": only the parts above [`ZERO_THRESHOLD`] count.

use std::fmt;

use crate::chain::boundary_matrix;
use crate::complex::Multicomplex;
use crate::eigen::jacobi_eigenvalues;
use crate::error::Result;
use crate::matrix::{DenseMatrix, SparseMatrix};
use crate::monomial::Monomial;

/// Eigenvalues at or below this magnitude count as zero.
pub const ZERO_THRESHOLD: f64 = 1e-8;
/// Distance to the nearest integer below which a spectrum is snapped.
pub const SNAP_TOLERANCE: f64 = 1e-6;
/// Singular values above this count towards the rank.
pub const RANK_THRESHOLD: f64 = 1e-6;
/// Asymmetry accepted by the eigensolver.
pub const SYMMETRY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

impl Spectrum {
    /// Sorts weakly decreasing and clamps values in `(-tolerance, 0)` to zero.
    pub fn from_values(mut values: Vec<f64>, tolerance: f64) -> Self {
        for v in values.iter_mut() {
            if *v < 0.0 && *v > -tolerance {
                *v = 0.0;
            }
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, tolerance }
    }

    pub fn empty() -> Self {
        Spectrum {
            values: Vec::new(),
            tolerance: ZERO_THRESHOLD,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Values above `threshold`, still weakly decreasing.
    pub fn nonzero(&self, threshold: f64) -> Vec<f64> {
        self.values
            .iter()
            .copied()
            .filter(|&v| v > threshold)
            .collect()
    }

    pub fn zero_multiplicity(&self, threshold: f64) -> usize {
        self.values.iter().filter(|v| v.abs() <= threshold).count()
    }

    /// Nearest integers, provided every value lies within [`SNAP_TOLERANCE`] of one.
    pub fn snapped(&self) -> Option<Vec<i64>> {
        self.values
            .iter()
            .map(|&v| {
                let r = v.round();
                ((v - r).abs() <= SNAP_TOLERANCE).then_some(r as i64)
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.snapped().is_some()
    }

    /// Equality as multisets ignoring zero parts, with `tol` slack per value.
    pub fn eq_up_to_zeros(&self, other: &Spectrum, tol: f64) -> bool {
        parts_eq_up_to_zeros(&self.values, &other.values, tol)
    }

    /// Multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut v = self.values.clone();
        v.extend_from_slice(&other.values);
        Spectrum::from_values(v, self.tolerance.max(other.tolerance))
    }

    /// Multiset difference of the nonzero parts; `None` when some nonzero value of
    /// `other` has no partner in `self`.
    pub fn difference_up_to_zeros(&self, other: &Spectrum, tol: f64) -> Option<Spectrum> {
        let mut remaining = self.nonzero(ZERO_THRESHOLD);
        for v in other.nonzero(ZERO_THRESHOLD) {
            let k = remaining.iter().position(|&r| (r - v).abs() <= tol)?;
            remaining.remove(k);
        }
        Some(Spectrum::from_values(remaining, self.tolerance))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.snapped() {
            Some(ints) => write!(f, "{ints:?}"),
            None => write!(f, "{:?}", self.values),
        }
    }
}

/// Compares the parts above [`ZERO_THRESHOLD`] of two value lists (any order).
pub fn parts_eq_up_to_zeros(a: &[f64], b: &[f64], tol: f64) -> bool {
    let sorted_nonzero = |v: &[f64]| {
        let mut s: Vec<f64> = v.iter().copied().filter(|&x| x > ZERO_THRESHOLD).collect();
        s.sort_by(|x, y| y.total_cmp(x));
        s
    };
    let (a, b) = (sorted_nonzero(a), sorted_nonzero(b));
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LaplacianKind {
    Up,
    Down,
    Total,
}

impl LaplacianKind {
    pub fn name(self) -> &'static str {
        match self {
            LaplacianKind::Up => "up",
            LaplacianKind::Down => "down",
            LaplacianKind::Total => "total",
        }
    }
}

/// A Laplacian on the basis `M_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianMatrix {
    pub kind: LaplacianKind,
    pub degree: usize,
    pub basis: Vec<Monomial>,
    pub matrix: DenseMatrix,
}

pub fn laplacian_up(m: &Multicomplex, d: usize) -> LaplacianMatrix {
    LaplacianMatrix {
        kind: LaplacianKind::Up,
        degree: d,
        basis: m.layer(d).to_vec(),
        matrix: boundary_matrix(m, d + 1).matrix.gram_rows(),
    }
}

pub fn laplacian_down(m: &Multicomplex, d: usize) -> LaplacianMatrix {
    LaplacianMatrix {
        kind: LaplacianKind::Down,
        degree: d,
        basis: m.layer(d).to_vec(),
        matrix: boundary_matrix(m, d).matrix.gram_cols(),
    }
}

pub fn laplacian_total(m: &Multicomplex, d: usize) -> LaplacianMatrix {
    let up = laplacian_up(m, d);
    let down = laplacian_down(m, d);
    LaplacianMatrix {
        kind: LaplacianKind::Total,
        degree: d,
        matrix: up.matrix.add(&down.matrix),
        basis: up.basis,
    }
}

pub fn laplacian(m: &Multicomplex, d: usize, kind: LaplacianKind) -> LaplacianMatrix {
    match kind {
        LaplacianKind::Up => laplacian_up(m, d),
        LaplacianKind::Down => laplacian_down(m, d),
        LaplacianKind::Total => laplacian_total(m, d),
    }
}

/// Eigenvalues of a symmetric matrix as a [`Spectrum`] with zero threshold `tol`.
pub fn symmetric_eigenvalues(a: &[Vec<f64>], tol: f64) -> Result<Spectrum> {
    let values = jacobi_eigenvalues(a, SYMMETRY_TOLERANCE.max(tol))?;
    Ok(Spectrum::from_values(values, tol))
}

pub fn matrix_spectrum(a: &DenseMatrix) -> Result<Spectrum> {
    symmetric_eigenvalues(&a.to_f64_rows(), ZERO_THRESHOLD)
}

pub fn spectrum(m: &Multicomplex, d: usize, kind: LaplacianKind) -> Result<Spectrum> {
    matrix_spectrum(&laplacian(m, d, kind).matrix)
}

pub fn spectrum_up(m: &Multicomplex, d: usize) -> Result<Spectrum> {
    spectrum(m, d, LaplacianKind::Up)
}

pub fn spectrum_down(m: &Multicomplex, d: usize) -> Result<Spectrum> {
    spectrum(m, d, LaplacianKind::Down)
}

pub fn spectrum_total(m: &Multicomplex, d: usize) -> Result<Spectrum> {
    spectrum(m, d, LaplacianKind::Total)
}

/// Nonzero eigenvalues of `∂_k ∂_k^T`, i.e. of `L'_{k-1}` (equivalently `L''_k`).
pub fn chain_degree_spectrum(m: &Multicomplex, k: usize) -> Result<Spectrum> {
    matrix_spectrum(&boundary_matrix(m, k).matrix.gram_rows())
}

/// Outcome of checking `s''_d = s'_{d-1}`, `s_d = s'_d ∪ s''_d` and
/// `s'_d = s_d - s''_d`, all up to zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationsReport {
    pub degree: usize,
    pub up: Spectrum,
    pub down: Spectrum,
    pub total: Spectrum,
    pub previous_up: Spectrum,
    pub down_matches_previous_up: bool,
    pub total_is_union: bool,
    pub up_is_difference: bool,
}

impl RelationsReport {
    pub fn ok(&self) -> bool {
        self.down_matches_previous_up && self.total_is_union && self.up_is_difference
    }
}

/// Tolerance for comparing computed spectra to each other.
pub const RELATION_TOLERANCE: f64 = 1e-6;

pub fn verify_spectrum_relations(m: &Multicomplex, d: usize) -> Result<RelationsReport> {
    let up = spectrum_up(m, d)?;
    let down = spectrum_down(m, d)?;
    let total = spectrum_total(m, d)?;
    let previous_up = match d.checked_sub(1) {
        Some(prev) => spectrum_up(m, prev)?,
        None => Spectrum::empty(),
    };
    let tol = RELATION_TOLERANCE;
    let down_matches_previous_up = down.eq_up_to_zeros(&previous_up, tol);
    let total_is_union = total.eq_up_to_zeros(&up.union(&down), tol);
    let up_is_difference = total
        .difference_up_to_zeros(&down, tol)
        .is_some_and(|diff| diff.eq_up_to_zeros(&up, tol));
    Ok(RelationsReport {
        degree: d,
        up,
        down,
        total,
        previous_up,
        down_matches_previous_up,
        total_is_union,
        up_is_difference,
    })
}

/// Multiset union over constituents `p^2 ∈ M` with `2 deg p <= d` of the
/// `kind`-spectrum of `M^(p^2)` at degree `d - 2 deg p`.
pub fn constituent_spectrum_sum(
    m: &Multicomplex,
    d: usize,
    kind: LaplacianKind,
) -> Result<Spectrum> {
    let mut total = Spectrum::empty();
    for (p, c) in m.constituents().iter() {
        let shift = 2 * p.total_degree() as usize;
        if shift <= d {
            total = total.union(&spectrum(c, d - shift, kind)?);
        }
    }
    Ok(total)
}

/// Rank of an integer matrix from the eigenvalues of its smaller Gram matrix.
pub fn rank(a: &SparseMatrix) -> Result<usize> {
    if a.rows() == 0 || a.cols() == 0 {
        return Ok(0);
    }
    let gram = if a.rows() <= a.cols() {
        a.gram_rows()
    } else {
        a.gram_cols()
    };
    let s = matrix_spectrum(&gram)?;
    Ok(s.values()
        .iter()
        .filter(|&&v| v > 0.0 && v.sqrt() > RANK_THRESHOLD)
        .count())
}

/// Real Betti numbers `β_l = dim M_l - rank ∂_l - rank ∂_{l+1}` for `l = 0..=maxDegree`.
pub fn betti_numbers(m: &Multicomplex) -> Result<Vec<usize>> {
    let Some(top) = m.max_degree() else {
        return Ok(Vec::new());
    };
    let ranks = (0..=top + 1)
        .map(|d| rank(&boundary_matrix(m, d).matrix))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..=top)
        .map(|l| m.layer(l).len() - ranks[l] - ranks[l + 1])
        .collect())
}

/// `β_l(M) = Σ_p β_{l - 2 deg p}(M^(p^2))`.
pub fn constituent_betti_sum(m: &Multicomplex) -> Result<Vec<usize>> {
    let len = m.max_degree().map_or(0, |d| d + 1);
    let mut out = vec![0; len];
    for (p, c) in m.constituents().iter() {
        let shift = 2 * p.total_degree() as usize;
        for (l, b) in betti_numbers(c)?.into_iter().enumerate() {
            out[l + shift] += b;
        }
    }
    Ok(out)
}
