//! The multicomplex `M_N` of exponent vectors of `1..=N` over the primes `<= N`, its
//! Laplacian spectrum functions `t_k`, `s_k`, the matrices `Y_2(N)`, `U_2(N)`, and
//! Dirichlet convolution truncated at `N`.

use crate::complex::Multicomplex;
use crate::error::{Error, Result};
use crate::formula::Partition;
use crate::monomial::Monomial;

/// Largest `N` accepted.
pub const MAX_N: u64 = 100_000_000;

/// `spf[m]` is the smallest prime factor of `m` (0 for `m < 2`).
pub fn smallest_prime_factors(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            for j in (i..=n).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    spf
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    smallest_prime_factors(n)
        .iter()
        .enumerate()
        .filter(|&(i, &p)| i >= 2 && p as usize == i)
        .map(|(i, _)| i as u64)
        .collect()
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::RangeN { n, max: MAX_N });
    }
    Ok(())
}

/// Exponent vector of `m` over `2, 3, 5, ...`, trimmed after the largest prime factor.
pub fn log_map(m: u64) -> Result<Monomial> {
    check_n(m)?;
    let primes = primes_up_to(m);
    let mut rest = m;
    let mut exps = Vec::new();
    for &p in &primes {
        if rest == 1 {
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        exps.push(e);
    }
    Ok(Monomial::new(exps))
}

/// `p_1^{a_1} p_2^{a_2} ...`; fails on overflow.
pub fn exp_map(alpha: &Monomial) -> Result<u64> {
    let r = alpha.ambient_dim();
    let mut bound = 16u64;
    let primes = loop {
        let ps = primes_up_to(bound);
        if ps.len() >= r {
            break ps;
        }
        bound *= 2;
    };
    let overflow = || Error::Overflow(format!("p^({alpha}) does not fit in 64 bits"));
    alpha
        .exponents()
        .iter()
        .zip(&primes)
        .try_fold(1u64, |acc, (&a, &p)| {
            let pow = p.checked_pow(a).ok_or_else(overflow)?;
            acc.checked_mul(pow).ok_or_else(overflow)
        })
}

/// Integers `1..=N` viewed as monomials in the primes `p_1 < p_2 < ... <= N`.
#[derive(Clone, Debug)]
pub struct DirichletTruncation {
    n: u64,
    primes: Vec<u64>,
    spf: Vec<u32>,
    prime_index: Vec<u32>,
}

impl DirichletTruncation {
    pub fn new(n: u64) -> Result<Self> {
        check_n(n)?;
        let spf = smallest_prime_factors(n as usize);
        let mut primes = Vec::new();
        let mut prime_index = vec![u32::MAX; n as usize + 1];
        for (i, &p) in spf.iter().enumerate().skip(2) {
            if p as usize == i {
                prime_index[i] = primes.len() as u32;
                primes.push(i as u64);
            }
        }
        Ok(DirichletTruncation {
            n,
            primes,
            spf,
            prime_index,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `π(N)`.
    pub fn pi(&self) -> usize {
        self.primes.len()
    }

    /// `(prime index, exponent)` pairs of `m <= N`, ascending.
    pub fn factorize(&self, m: u64) -> Vec<(usize, u32)> {
        assert!(m >= 1 && m <= self.n, "{m} outside 1..={}", self.n);
        let mut out: Vec<(usize, u32)> = Vec::new();
        let mut rest = m as usize;
        while rest > 1 {
            let p = self.spf[rest] as usize;
            let idx = self.prime_index[p] as usize;
            match out.last_mut() {
                Some((i, e)) if *i == idx => *e += 1,
                _ => out.push((idx, 1)),
            }
            rest /= p;
        }
        out
    }

    /// `log(m)` padded to `π(N)` coordinates.
    pub fn log(&self, m: u64) -> Monomial {
        let mut exps = vec![0u32; self.pi()];
        for (i, e) in self.factorize(m) {
            exps[i] = e;
        }
        Monomial::new(exps)
    }

    /// Number of prime factors counted with multiplicity.
    pub fn omega(&self, m: u64) -> u32 {
        self.factorize(m).iter().map(|&(_, e)| e).sum()
    }

    /// Square-free part: the product of the primes dividing `m` to an odd power.
    pub fn sfp(&self, m: u64) -> u64 {
        self.factorize(m)
            .iter()
            .filter(|&&(_, e)| e % 2 == 1)
            .map(|&(i, _)| self.primes[i])
            .product()
    }

    /// `M_N = { log(m) : 1 <= m <= N }`.
    pub fn multicomplex(&self) -> Multicomplex {
        let all = (1..=self.n).map(|m| self.log(m));
        Multicomplex::from_monomials(all, self.pi())
            .expect("divisors of m <= N are themselves <= N")
    }

    /// `t_k^i = #{ 1 < m <= N : Ω(m) = k, p_i | sfp(m) }`, in prime order with trailing
    /// zeros trimmed.
    pub fn t_vector(&self, k: u32) -> Vec<usize> {
        let mut t = vec![0usize; self.pi()];
        for m in 2..=self.n {
            let f = self.factorize(m);
            if f.iter().map(|&(_, e)| e).sum::<u32>() != k {
                continue;
            }
            for (i, e) in f {
                if e % 2 == 1 {
                    t[i] += 1;
                }
            }
        }
        while t.last() == Some(&0) {
            t.pop();
        }
        t
    }

    /// `s_k^j = #{ i : t_k^i >= j }`, the conjugate of the sorted `t_k`.
    pub fn s_vector(&self, k: u32) -> Vec<usize> {
        Partition::from_multiset(self.t_vector(k))
            .conjugate()
            .parts()
            .to_vec()
    }

    /// Number of rows of `Y_2(N)`: the primes `p_a` with `2 p_a <= N` (at least one).
    pub fn y2_side(&self) -> usize {
        if self.n < 2 {
            return 0;
        }
        self.primes
            .iter()
            .filter(|&&p| 2 * p <= self.n)
            .count()
            .max(1)
    }

    /// `y_ab = 1` iff `a != b` and `p_a p_b <= N`.
    pub fn y2_matrix(&self) -> Vec<Vec<u8>> {
        let side = self.y2_side();
        (0..side)
            .map(|a| {
                (0..side)
                    .map(|b| u8::from(a != b && self.primes[a] * self.primes[b] <= self.n))
                    .collect()
            })
            .collect()
    }

    /// `u_ab = y_ab` for `b < a` and `y_{a,b+1}` otherwise: `Y_2` with its diagonal
    /// squeezed out, so every row is a run of ones of length `t_2^a`.
    pub fn u2_matrix(&self) -> Vec<Vec<u8>> {
        let y = self.y2_matrix();
        let side = y.len();
        (0..side)
            .map(|a| {
                (0..side)
                    .map(|b| {
                        if b < a {
                            y[a][b]
                        } else if b + 1 < side {
                            y[a][b + 1]
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn build_mn(n: u64) -> Result<(DirichletTruncation, Multicomplex)> {
    let d = DirichletTruncation::new(n)?;
    let m = d.multicomplex();
    Ok((d, m))
}

pub fn t_vector(n: u64, k: u32) -> Result<Vec<usize>> {
    Ok(DirichletTruncation::new(n)?.t_vector(k))
}

pub fn s_vector(n: u64, k: u32) -> Result<Vec<usize>> {
    Ok(DirichletTruncation::new(n)?.s_vector(k))
}

/// An arithmetical function supported on `1..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedFunction {
    n: usize,
    coeffs: Vec<f64>,
}

impl TruncatedFunction {
    pub fn zero(n: usize) -> Self {
        TruncatedFunction {
            n,
            coeffs: vec![0.0; n],
        }
    }

    /// `e_m`, the indicator of `m` (zero when `m > N`).
    pub fn indicator(m: usize, n: usize) -> Self {
        let mut f = Self::zero(n);
        if (1..=n).contains(&m) {
            f.coeffs[m - 1] = 1.0;
        }
        f
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> f64) -> Self {
        TruncatedFunction {
            n,
            coeffs: (1..=n).map(f).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Value at `k`; zero outside `1..=N`.
    pub fn get(&self, k: usize) -> f64 {
        if (1..=self.n).contains(&k) {
            self.coeffs[k - 1]
        } else {
            0.0
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }
}

/// `(f *_N g)(k) = Σ_{d | k} f(d) g(k/d)` for `k <= N`, zero above.
pub fn truncated_convolve(
    f: &TruncatedFunction,
    g: &TruncatedFunction,
) -> Result<TruncatedFunction> {
    if f.n != g.n {
        return Err(Error::DimensionMismatch {
            expected: f.n,
            found: g.n,
        });
    }
    let n = f.n;
    let mut h = TruncatedFunction::zero(n);
    for a in 1..=n {
        let fa = f.coeffs[a - 1];
        if fa == 0.0 {
            continue;
        }
        for b in 1..=n / a {
            h.coeffs[a * b - 1] += fa * g.coeffs[b - 1];
        }
    }
    Ok(h)
}
