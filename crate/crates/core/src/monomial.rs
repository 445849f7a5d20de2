//! Exponent-vector monomials over a fixed, ordered set of variables `x1 < x2 < ... < xn`.
//!
//! A [`Monomial`] is a plain exponent vector. Its [`Ord`] implementation is the
//! basis order used for every matrix in this crate: total degree ascending, then
//! lexicographic on the exponent vector with larger exponents first. On three
//! variables in degree 3 this lists `x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3,
//! x1*x3^2, x2^3, x2^2*x3, x2*x3^2, x3^3`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest total degree accepted from external input.
pub const DEFAULT_DEGREE_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial `1` on `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` (zero-based index `i`) on `n` variables.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn ambient_dim(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&a| a as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&a| a <= 1)
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// Unique `(p, q)` with `self = p^2 * q` and `q` square-free.
    pub fn square_decompose(&self) -> (Monomial, Monomial) {
        let p = self.exps.iter().map(|a| a / 2).collect();
        (Monomial { exps: p }, self.parity())
    }

    /// Exponents reduced mod 2; the exponent vector of the square-free part.
    pub fn parity(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a % 2).collect(),
        }
    }

    pub fn square(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| 2 * a).collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// `self / x_i`, or `None` when `x_i` does not divide `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    /// Moves the exponent of variable `i` to position `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &a) in self.exps.iter().enumerate() {
            exps[perm[i]] = a;
        }
        Monomial { exps }
    }

    /// Keeps only the listed coordinates, in the listed order.
    pub fn project(&self, coords: &[usize]) -> Monomial {
        Monomial {
            exps: coords.iter().map(|&i| self.exps[i]).collect(),
        }
    }

    /// Symbolic rendering such as `x1^2*x2`; the unit renders as `1`.
    pub fn to_symbolic(&self) -> String {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, a)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Parses the exponent-vector form `"2 1 0"`.
    pub fn parse_exponents(s: &str) -> std::result::Result<Monomial, String> {
        let exps = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| format!("invalid exponent `{tok}`"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Monomial { exps })
    }

    /// Parses the symbolic form `"x1^2*x2"` (or `"1"`) on `n` variables.
    pub fn parse_symbolic(s: &str, n: usize) -> std::result::Result<Monomial, String> {
        let s = s.trim();
        let mut exps = vec![0u32; n];
        if s == "1" {
            return Ok(Monomial { exps });
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| format!("expected a variable like `x1`, found `{factor}`"))?;
            let (idx, pow) = match rest.split_once('^') {
                Some((i, p)) => (i, p),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| format!("invalid variable index in `{factor}`"))?;
            let pow: u32 = pow
                .trim()
                .parse()
                .map_err(|_| format!("invalid exponent in `{factor}`"))?;
            if idx == 0 || idx > n {
                return Err(format!("variable x{idx} outside x1..x{n}"));
            }
            exps[idx - 1] = exps[idx - 1]
                .checked_add(pow)
                .ok_or_else(|| format!("exponent overflow in `{s}`"))?;
        }
        Ok(Monomial { exps })
    }

    fn check_dim(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::DimensionMismatch {
                expected: self.exps.len(),
                found: other.exps.len(),
            });
        }
        Ok(())
    }
}

/// Exponent-vector form, the canonical output: `2 1 0`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in &self.exps {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_basis_order(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree ascending, then lexicographic with larger leading exponents first.
pub fn compare_basis_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| b.exps.cmp(&a.exps))
        .then_with(|| a.exps.len().cmp(&b.exps.len()))
}
