//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
pub const CONVERGENCE_FACTOR: f64 = 1e-12;

/// All eigenvalues of the symmetric matrix `a`, sorted weakly decreasing.
///
/// Converged once the off-diagonal Frobenius norm drops below
/// `1e-12 * (1 + ||diag||)`. `sym_tol` bounds the accepted asymmetry of the input.
pub fn jacobi_eigenvalues(a: &[Vec<f64>], sym_tol: f64) -> Result<Vec<f64>> {
    let n = a.len();
    if let Some(bad) = a.iter().find(|row| row.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    for r in 0..n {
        for c in 0..r {
            let gap = (a[r][c] - a[c][r]).abs();
            if gap > sym_tol {
                return Err(Error::NotSymmetric {
                    row: r,
                    col: c,
                    gap,
                });
            }
        }
    }

    // symmetrize so rounding in the input cannot bias the rotations
    let mut w: Vec<Vec<f64>> = (0..n)
        .map(|r| (0..n).map(|c| 0.5 * (a[r][c] + a[c][r])).collect())
        .collect();

    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|r| (0..n).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| w[r][c] * w[r][c])
            .sum::<f64>()
            .sqrt();
        let diag: f64 = (0..n).map(|i| w[i][i] * w[i][i]).sum::<f64>().sqrt();
        if off < CONVERGENCE_FACTOR * (1.0 + diag) {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut w, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut values: Vec<f64> = (0..n).map(|i| w[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

/// One Jacobi rotation annihilating `w[p][q]`.
fn rotate(w: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = w[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (w[q][q] - w[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let n = w.len();
    for row in w.iter_mut() {
        let (kp, kq) = (row[p], row[q]);
        row[p] = c * kp - s * kq;
        row[q] = s * kp + c * kq;
    }
    for k in 0..n {
        let (pk, qk) = (w[p][k], w[q][k]);
        w[p][k] = c * pk - s * qk;
        w[q][k] = s * pk + c * qk;
    }
    w[p][q] = 0.0;
    w[q][p] = 0.0;
}
