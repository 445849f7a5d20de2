//! Boundary maps `∂_d : Z M_d -> Z M_{d-1}` of a multicomplex and their duals.
//!
//! For `m = x_{i_0}^{a_0} ... x_{i_k}^{a_k}` with ascending support,
//! `∂(m) = Σ_j (-1)^{a_0 + ... + a_{j-1}} r_j m / x_{i_j}` where `r_j` is 1 for odd
//! `a_j` and 0 otherwise. On square-free monomials this is the simplicial boundary.

use crate::complex::Multicomplex;
use crate::error::Result;
use crate::matrix::SparseMatrix;
use crate::monomial::Monomial;

/// Matrix of `∂_d` (or its dual) together with its row and column bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub dual: bool,
    pub rows: Vec<Monomial>,
    pub cols: Vec<Monomial>,
    pub matrix: SparseMatrix,
}

impl BoundaryMatrix {
    pub fn apply(&self, chain: &[i64]) -> Result<Vec<i64>> {
        self.matrix.apply(chain)
    }

    pub fn get(&self, row: &Monomial, col: &Monomial) -> i64 {
        match (
            self.rows.iter().position(|m| m == row),
            self.cols.iter().position(|m| m == col),
        ) {
            (Some(r), Some(c)) => self.matrix.get(r, c),
            _ => 0,
        }
    }

    /// Swaps rows and columns.
    pub fn transpose(&self) -> BoundaryMatrix {
        BoundaryMatrix {
            degree: self.degree,
            dual: !self.dual,
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            matrix: self.matrix.transpose(),
        }
    }
}

/// Column of `∂(m)` as `(row monomial, coefficient)` pairs.
pub fn boundary_of(m: &Monomial) -> Vec<(Monomial, i64)> {
    let mut prefix = 0u64;
    let mut out = Vec::new();
    for (j, &a) in m.exponents().iter().enumerate() {
        if a % 2 == 1 {
            let sign = if prefix.is_multiple_of(2) { 1 } else { -1 };
            out.push((m.div_var(j).expect("odd exponent is positive"), sign));
        }
        prefix += a as u64;
    }
    out
}

/// `∂_d` restricted to `M`, rows `M_{d-1}` and columns `M_d` in basis order.
/// `d = 0` gives the zero map onto the empty basis.
pub fn boundary_matrix(m: &Multicomplex, d: usize) -> BoundaryMatrix {
    let cols = m.layer(d).to_vec();
    if d == 0 {
        return BoundaryMatrix {
            degree: 0,
            dual: false,
            rows: Vec::new(),
            matrix: SparseMatrix::zeros(0, cols.len()),
            cols,
        };
    }
    let rows = m.layer(d - 1).to_vec();
    let columns = cols
        .iter()
        .map(|t| {
            boundary_of(t)
                .into_iter()
                .map(|(face, sign)| {
                    let r = m.position(&face).expect("divisor-closed");
                    (r, sign)
                })
                .collect()
        })
        .collect();
    BoundaryMatrix {
        degree: d,
        dual: false,
        matrix: SparseMatrix::from_columns(rows.len(), columns),
        rows,
        cols,
    }
}

/// `∂*_d : R M_{d-1} -> R M_d`, built from the closed form
/// `∂*(m) = Σ_j (-1)^{a_1 + ... + a_{j-1}} s_j x_j m` with `s_j = 1` iff `a_j` is even
/// and `x_j m ∈ M`. Equal to the transpose of [`boundary_matrix`].
pub fn dual_boundary_matrix(m: &Multicomplex, d: usize) -> BoundaryMatrix {
    let rows = m.layer(d).to_vec();
    if d == 0 {
        return BoundaryMatrix {
            degree: 0,
            dual: true,
            matrix: SparseMatrix::zeros(rows.len(), 0),
            rows,
            cols: Vec::new(),
        };
    }
    let cols = m.layer(d - 1).to_vec();
    let columns = cols
        .iter()
        .map(|s| {
            let mut prefix = 0u64;
            let mut col = Vec::new();
            for (j, &a) in s.exponents().iter().enumerate() {
                if a % 2 == 0 {
                    if let Some(r) = m.position(&s.mul_var(j)) {
                        col.push((r, if prefix.is_multiple_of(2) { 1 } else { -1 }));
                    }
                }
                prefix += a as u64;
            }
            col
        })
        .collect();
    BoundaryMatrix {
        degree: d,
        dual: true,
        matrix: SparseMatrix::from_columns(rows.len(), columns),
        rows,
        cols,
    }
}

/// Whether `∂_{d-1} ∂_d = 0` exactly for every `2 <= d <= maxDegree`.
pub fn check_boundary_square_zero(m: &Multicomplex) -> bool {
    let top = m.max_degree().unwrap_or(0);
    (2..=top).all(|d| {
        let outer = boundary_matrix(m, d - 1);
        let inner = boundary_matrix(m, d);
        outer
            .matrix
            .mul(&inner.matrix)
            .expect("adjacent layers agree")
            .is_zero()
    })
}
