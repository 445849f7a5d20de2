//! Random multicomplexes for property and acceptance testing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{Multicomplex, VariableOrder};
use crate::monomial::Monomial;

fn random_monomial<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A random antichain of up to `gens` monomials on `n` variables with degrees in `1..=max_degree`.
pub fn random_antichain<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    gens: usize,
) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for _ in 0..gens {
        let d = rng.gen_range(1..=max_degree);
        let m = random_monomial(rng, n, d);
        let comparable = out
            .iter()
            .any(|g| g.divides(&m).unwrap() || m.divides(g).unwrap());
        if !comparable {
            out.push(m);
        }
    }
    out
}

/// Divisor closure of a random antichain; not shifted in general.
pub fn random_multicomplex<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    max_len: usize,
) -> Multicomplex {
    loop {
        let g = rng.gen_range(1..=4);
        let gens = random_antichain(rng, n, max_degree, g);
        let c = Multicomplex::divisor_closure(gens, n).expect("generated with matching dimension");
        if c.len() <= max_len {
            return c;
        }
    }
}

/// Divisor closure of a random antichain, then closed under the shifted exchange
/// rule for `order` until stable. Retries until the result has at most `max_len` monomials.
pub fn random_shifted<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    max_len: usize,
    order: &VariableOrder,
) -> Multicomplex {
    loop {
        let g = rng.gen_range(1..=3);
        let gens = random_antichain(rng, n, max_degree, g);
        let c = Multicomplex::divisor_closure(gens, n)
            .expect("generated with matching dimension")
            .shift_closure(order);
        if c.len() <= max_len {
            return c;
        }
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_order<R: Rng>(rng: &mut R, n: usize) -> VariableOrder {
    VariableOrder::from_sequence(&random_permutation(rng, n)).expect("shuffle is a permutation")
}
