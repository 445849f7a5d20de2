//! Finite multicomplexes: divisor-closed sets of monomials.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, DEFAULT_DEGREE_CAP};

/// A total order on the variables. `rank[i]` is the position of `x_{i+1}`,
/// with rank 0 the smallest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableOrder {
    rank: Vec<usize>,
}

impl VariableOrder {
    /// `x1 < x2 < ... < xn`.
    pub fn natural(n: usize) -> Self {
        VariableOrder {
            rank: (0..n).collect(),
        }
    }

    /// `xn < ... < x2 < x1`.
    pub fn reverse(n: usize) -> Self {
        VariableOrder {
            rank: (0..n).rev().collect(),
        }
    }

    /// Builds the order listing the zero-based variable indices `seq` from smallest to largest.
    pub fn from_sequence(seq: &[usize]) -> Result<Self> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in seq.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidOrder(format!(
                    "{seq:?} is not a permutation of 0..{n}"
                )));
            }
            rank[v] = pos;
        }
        Ok(VariableOrder { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, var: usize) -> usize {
        self.rank[var]
    }

    /// Variable indices from smallest to largest.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.rank.len()];
        for (v, &r) in self.rank.iter().enumerate() {
            seq[r] = v;
        }
        seq
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn reversed(&self) -> Self {
        let n = self.rank.len();
        VariableOrder {
            rank: self.rank.iter().map(|r| n - 1 - r).collect(),
        }
    }

    /// The order induced on the sub-list of variables `coords` (renumbered `0..coords.len()`).
    pub fn restrict(&self, coords: &[usize]) -> Self {
        let mut idx: Vec<usize> = (0..coords.len()).collect();
        idx.sort_by_key(|&k| self.rank[coords[k]]);
        let mut rank = vec![0; coords.len()];
        for (pos, k) in idx.into_iter().enumerate() {
            rank[k] = pos;
        }
        VariableOrder { rank }
    }
}

/// A finite set of monomials on `n` variables, closed under taking divisors.
///
/// Immutable after construction. Layers are kept in basis order.
#[derive(Clone, Debug)]
pub struct Multicomplex {
    n: usize,
    layers: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
}

impl PartialEq for Multicomplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.layers == other.layers
    }
}

impl Eq for Multicomplex {}

impl Multicomplex {
    pub fn empty(n: usize) -> Self {
        Multicomplex {
            n,
            layers: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Validating constructor: rejects input that is not divisor-closed.
    pub fn from_monomials<I>(monomials: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let set = collect_checked(monomials, n)?;
        for t in &set {
            for i in 0..n {
                if let Some(m) = t.div_var(i) {
                    if !set.contains(&m) {
                        return Err(Error::NotDivisorClosed {
                            divisor: m,
                            multiple: t.clone(),
                        });
                    }
                }
            }
        }
        Ok(Self::from_closed_set(set, n))
    }

    /// The smallest multicomplex containing every input monomial.
    pub fn divisor_closure<I>(monomials: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut set = collect_checked(monomials, n)?;
        let mut stack: Vec<Monomial> = set.iter().cloned().collect();
        while let Some(t) = stack.pop() {
            for i in 0..n {
                if let Some(m) = t.div_var(i) {
                    if set.insert(m.clone()) {
                        stack.push(m);
                    }
                }
            }
        }
        Ok(Self::from_closed_set(set, n))
    }

    /// All monomials of total degree at most `d` on `n` variables.
    pub fn full(n: usize, d: u32) -> Self {
        let mut set = BTreeSet::new();
        let mut frontier = vec![Monomial::unit(n)];
        set.insert(Monomial::unit(n));
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &frontier {
                for i in 0..n {
                    let t = m.mul_var(i);
                    if set.insert(t.clone()) {
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        Self::from_closed_set(set, n)
    }

    fn from_closed_set(set: BTreeSet<Monomial>, n: usize) -> Self {
        let mut layers: Vec<Vec<Monomial>> = Vec::new();
        let mut index = HashMap::with_capacity(set.len());
        // BTreeSet iterates in basis order, so each layer comes out sorted.
        for m in set {
            let d = m.total_degree() as usize;
            if layers.len() <= d {
                layers.resize_with(d + 1, Vec::new);
            }
            index.insert(m.clone(), layers[d].len());
            layers[d].push(m);
        }
        Multicomplex { n, layers, index }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Largest total degree present, `None` for the empty multicomplex.
    pub fn max_degree(&self) -> Option<usize> {
        self.layers.len().checked_sub(1)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    /// Position of `m` within its layer.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `M_l` in basis order; empty above the top degree.
    pub fn layer(&self, l: usize) -> &[Monomial] {
        self.layers.get(l).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.layers.iter().flatten()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.iter().cloned().collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn is_square_free(&self) -> bool {
        self.iter().all(Monomial::is_square_free)
    }

    pub fn has_vertex(&self, i: usize) -> bool {
        self.contains(&Monomial::variable(self.n, i))
    }

    /// Variables `x_i` that belong to the multicomplex.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.has_vertex(i)).collect()
    }

    /// Whether `x_j m ∈ M`, `x_i < x_j` and `x_i ∈ M` always imply `x_i m ∈ M`.
    pub fn is_shifted(&self, order: &VariableOrder) -> bool {
        assert_eq!(order.len(), self.n, "variable order has the wrong length");
        let vertices = self.support();
        self.iter().all(|t| {
            (0..self.n).all(|j| match t.div_var(j) {
                None => true,
                Some(m) => vertices
                    .iter()
                    .filter(|&&i| order.less(i, j))
                    .all(|&i| self.contains(&m.mul_var(i))),
            })
        })
    }

    /// The simplicial exchange rule for square-free complexes: the swap `x_j -> x_i` is
    /// only required when `x_i` does not already divide the face.
    pub fn is_shifted_simplicial(&self, order: &VariableOrder) -> bool {
        assert_eq!(order.len(), self.n, "variable order has the wrong length");
        let vertices = self.support();
        self.iter().all(|t| {
            (0..self.n).all(|j| match t.div_var(j) {
                None => true,
                Some(m) => vertices
                    .iter()
                    .filter(|&&i| order.less(i, j) && m.exponents()[i] == 0)
                    .all(|&i| self.contains(&m.mul_var(i))),
            })
        })
    }

    /// Smallest shifted multicomplex (under `order`) containing `self`.
    pub fn shift_closure(&self, order: &VariableOrder) -> Multicomplex {
        let mut current = self.clone();
        loop {
            let vertices = current.support();
            let mut added: Vec<Monomial> = Vec::new();
            for t in current.iter() {
                for j in 0..self.n {
                    let Some(m) = t.div_var(j) else { continue };
                    for &i in vertices.iter().filter(|&&i| order.less(i, j)) {
                        let candidate = m.mul_var(i);
                        if !current.contains(&candidate) {
                            added.push(candidate);
                        }
                    }
                }
            }
            if added.is_empty() {
                return current;
            }
            let all = current.monomials().into_iter().chain(added);
            current = Multicomplex::divisor_closure(all, self.n)
                .expect("closure of same-dimension monomials");
        }
    }

    /// The constituent simplicial complexes `{ q square-free : p^2 q ∈ M }`, keyed by `p`.
    pub fn constituents(&self) -> ConstituentDecomposition {
        let mut parts: BTreeMap<Monomial, BTreeSet<Monomial>> = BTreeMap::new();
        for m in self.iter() {
            let (p, q) = m.square_decompose();
            parts.entry(p).or_default().insert(q);
        }
        let entries = parts
            .into_iter()
            .map(|(p, qs)| (p, Multicomplex::from_closed_set(qs, self.n)))
            .collect();
        ConstituentDecomposition { entries }
    }

    /// `d_j` = number of monomials of degree `k` divisible by `x_j`.
    pub fn degree_sequence(&self, k: usize) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for m in self.layer(k) {
            for (j, &a) in m.exponents().iter().enumerate() {
                if a > 0 {
                    d[j] += 1;
                }
            }
        }
        d
    }

    /// Minimal monomials of degree `<= through_degree` outside `M`; these generate the
    /// artinian monomial ideal whose standard monomials are `M`.
    pub fn complement_ideal_generators(&self, through_degree: usize) -> Result<Vec<Monomial>> {
        let required = self.max_degree().map_or(0, |d| d + 1);
        if through_degree < required {
            return Err(Error::DegreeBound {
                bound: through_degree,
                required,
            });
        }
        if self.is_empty() {
            return Ok(vec![Monomial::unit(self.n)]);
        }
        let mut gens = BTreeSet::new();
        for m in self.iter() {
            for i in 0..self.n {
                let t = m.mul_var(i);
                if self.contains(&t) || t.total_degree() as usize > through_degree {
                    continue;
                }
                let minimal = (0..self.n).all(|j| t.div_var(j).is_none_or(|s| self.contains(&s)));
                if minimal {
                    gens.insert(t);
                }
            }
        }
        Ok(gens.into_iter().collect())
    }

    /// Default generator bound `maxDegree + 1`.
    pub fn complement_ideal_generators_default(&self) -> Vec<Monomial> {
        let d = self.max_degree().map_or(0, |d| d + 1);
        self.complement_ideal_generators(d)
            .expect("default bound satisfies the precondition")
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Multicomplex {
        assert_eq!(perm.len(), self.n, "permutation has the wrong length");
        let set = self.iter().map(|m| m.relabel(perm)).collect();
        Self::from_closed_set(set, self.n)
    }

    /// Drops the variables outside the support, returning the projected multicomplex
    /// and the kept variable indices.
    pub fn restrict_to_support(&self) -> (Multicomplex, Vec<usize>) {
        let coords = self.support();
        let set = self.iter().map(|m| m.project(&coords)).collect();
        (Self::from_closed_set(set, coords.len()), coords)
    }
}

fn collect_checked<I>(monomials: I, n: usize) -> Result<BTreeSet<Monomial>>
where
    I: IntoIterator<Item = Monomial>,
{
    let mut set = BTreeSet::new();
    for m in monomials {
        if m.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.ambient_dim(),
            });
        }
        let degree = m.total_degree();
        if degree > DEFAULT_DEGREE_CAP {
            return Err(Error::DegreeCap {
                degree,
                cap: DEFAULT_DEGREE_CAP,
            });
        }
        set.insert(m);
    }
    Ok(set)
}

/// `M = ⊔_p p^2 · M^(p^2)`, keyed by `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstituentDecomposition {
    entries: BTreeMap<Monomial, Multicomplex>,
}

impl ConstituentDecomposition {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: &Monomial) -> Option<&Multicomplex> {
        self.entries.get(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Multicomplex)> {
        self.entries.iter()
    }

    /// `{ p^2 q }` over all entries, in iteration order (may contain repeats if the
    /// decomposition were not disjoint).
    pub fn reassemble(&self) -> Vec<Monomial> {
        self.entries
            .iter()
            .flat_map(|(p, c)| {
                let p2 = p.square();
                c.iter()
                    .map(move |q| p2.mul(q).expect("same ambient dimension"))
            })
            .collect()
    }

    /// `Σ_p S^{2 deg p} f(M^(p^2))`, where `S` prepends a zero.
    pub fn shifted_f_vector_sum(&self) -> Vec<usize> {
        let mut total: Vec<usize> = Vec::new();
        for (p, c) in &self.entries {
            let shift = 2 * p.total_degree() as usize;
            for (i, f) in c.f_vector().into_iter().enumerate() {
                if total.len() <= i + shift {
                    total.resize(i + shift + 1, 0);
                }
                total[i + shift] += f;
            }
        }
        total
    }
}

/// Whether the monomial ideal generated by `gens` is strongly stable (Borel-fixed):
/// `x_i | g` and `x_j < x_i` imply `(x_j / x_i) g` lies in the ideal.
pub fn is_strongly_stable(gens: &[Monomial], order: &VariableOrder) -> bool {
    let in_ideal = |m: &Monomial| gens.iter().any(|g| g.divides(m).unwrap_or(false));
    gens.iter().all(|g| {
        (0..g.ambient_dim()).all(|i| match g.div_var(i) {
            None => true,
            Some(h) => (0..g.ambient_dim())
                .filter(|&j| order.less(j, i))
                .all(|j| in_ideal(&h.mul_var(j))),
        })
    })
}
