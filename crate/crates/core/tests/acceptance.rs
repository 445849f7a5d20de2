//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;

use multilap::chain::check_boundary_square_zero;
use multilap::complex::{is_strongly_stable, Multicomplex, VariableOrder};
use multilap::dirichlet::{build_mn, primes_up_to, s_vector, DirichletTruncation};
use multilap::formula::{formula_spectrum, parity_sum, Partition};
use multilap::generate::{random_multicomplex, random_order, random_permutation, random_shifted};
use multilap::monomial::Monomial;
use multilap::spectra::{
    betti_numbers, chain_degree_spectrum, constituent_betti_sum, constituent_spectrum_sum,
    parts_eq_up_to_zeros, spectrum, verify_spectrum_relations, LaplacianKind, ZERO_THRESHOLD,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-6;
const KINDS: [LaplacianKind; 3] = [LaplacianKind::Up, LaplacianKind::Down, LaplacianKind::Total];

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn closure(gens: &[&[u32]], n: usize) -> Multicomplex {
    Multicomplex::divisor_closure(gens.iter().map(|e| Monomial::new(e.to_vec())), n).unwrap()
}

fn top(m: &Multicomplex) -> usize {
    m.max_degree().unwrap_or(0)
}

/// Instances shared by the derived criteria: shifted under a random order, and arbitrary.
struct Corpus {
    shifted: Vec<(Multicomplex, VariableOrder)>,
    general: Vec<Multicomplex>,
}

fn corpus() -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut shifted = Vec::new();
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=4);
        let order = random_order(&mut rng, n);
        shifted.push((random_shifted(&mut rng, n, d, 60, &order), order));
    }
    let mut general = Vec::new();
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=4);
        general.push(random_multicomplex(&mut rng, n, d, 60));
    }
    Corpus { shifted, general }
}

impl Corpus {
    fn all(&self) -> impl Iterator<Item = &Multicomplex> {
        self.shifted
            .iter()
            .map(|(m, _)| m)
            .chain(self.general.iter())
    }
}

fn paper_example(m: &Multicomplex, expected: &[usize]) -> Check {
    let s = chain_degree_spectrum(m, 3).map_err(|e| e.to_string())?;
    let mut want: Vec<f64> = expected.iter().map(|&v| v as f64).collect();
    want.resize(s.len(), 0.0);
    ensure(
        s.values()
            .iter()
            .zip(&want)
            .all(|(a, b)| (a - b).abs() <= 1e-8),
        || format!("eigenvalues {s}"),
    )?;
    let f = formula_spectrum(m, 3, &VariableOrder::natural(3)).map_err(|e| e.to_string())?;
    ensure(f.parts() == expected, || format!("formula {f}"))?;
    Ok(())
}

fn criterion_1() -> Check {
    let full = Multicomplex::full(3, 3);
    paper_example(&full, &[3, 3, 3, 3])?;
    let four = Partition::new(vec![3, 3, 3, 3]).unwrap().conjugate();
    ensure(four.parts() == [4, 4, 4], || format!("conjugate {four}"))?;
    let p = Partition::from_multiset(parity_sum(&full, 3));
    ensure(p.parts() == [4, 4, 4], || format!("parity sum {p}"))
}

fn criterion_2() -> Check {
    let m = closure(
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 2, 0],
            &[0, 3, 0],
            &[0, 2, 1],
            &[1, 1, 1],
            &[2, 0, 1],
        ],
        3,
    );
    paper_example(&m, &[3, 3, 3])?;
    let p = Partition::from_multiset(parity_sum(&m, 3));
    ensure(p.parts() == [3, 3, 3], || format!("parity sum {p}"))
}

fn criterion_3() -> Check {
    let m = closure(
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 2, 0],
            &[0, 3, 0],
            &[1, 1, 1],
            &[2, 0, 1],
        ],
        3,
    );
    paper_example(&m, &[3, 3, 2])?;
    let p = Partition::from_multiset(parity_sum(&m, 3));
    ensure(p.parts() == [3, 3, 2], || format!("parity sum {p}"))
}

fn criterion_4() -> Check {
    let d = DirichletTruncation::new(50).map_err(|e| e.to_string())?;
    ensure(d.t_vector(2) == [8, 5, 3, 3, 2, 2, 1, 1, 1], || {
        format!("t2 {:?}", d.t_vector(2))
    })?;
    ensure(d.s_vector(2) == [9, 6, 4, 2, 2, 1, 1, 1], || {
        format!("s2 {:?}", d.s_vector(2))
    })?;
    let y2: [[u8; 9]; 9] = [
        [0, 1, 1, 1, 1, 1, 1, 1, 1],
        [1, 0, 1, 1, 1, 1, 0, 0, 0],
        [1, 1, 0, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
    ];
    let u2: [[u8; 9]; 9] = [
        [1, 1, 1, 1, 1, 1, 1, 1, 0],
        [1, 1, 1, 1, 1, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
    ];
    ensure(d.y2_matrix() == y2.map(Vec::from).to_vec(), || {
        "Y2 differs".into()
    })?;
    ensure(d.u2_matrix() == u2.map(Vec::from).to_vec(), || {
        "U2 differs".into()
    })
}

fn criterion_5(c: &Corpus) -> Check {
    for (i, (m, order)) in c.shifted.iter().enumerate() {
        for k in 0..=top(m) + 1 {
            let f = formula_spectrum(m, k, order).map_err(|e| format!("instance {i}: {e}"))?;
            let s = chain_degree_spectrum(m, k).map_err(|e| e.to_string())?;
            ensure(parts_eq_up_to_zeros(s.values(), &f.as_f64(), TOL), || {
                format!("instance {i} k={k}: eig {s} formula {f}")
            })?;
            for kind in KINDS {
                let s = spectrum(m, k, kind).map_err(|e| e.to_string())?;
                ensure(s.is_integral(), || {
                    format!("instance {i} k={k}: non-integral {s}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6(c: &Corpus) -> Check {
    for (i, m) in c.all().enumerate() {
        ensure(check_boundary_square_zero(m), || format!("instance {i}"))?;
    }
    Ok(())
}

fn criterion_7(c: &Corpus) -> Check {
    for (i, m) in c.all().enumerate() {
        for d in 0..=top(m) + 1 {
            let r = verify_spectrum_relations(m, d).map_err(|e| e.to_string())?;
            ensure(r.ok(), || format!("instance {i} degree {d}: {r:?}"))?;
        }
    }
    Ok(())
}

#[allow(clippy::needless_range_loop)]
fn criterion_8(c: &Corpus) -> Check {
    for (i, m) in c.all().enumerate() {
        ensure(
            m.constituents().shifted_f_vector_sum() == m.f_vector(),
            || format!("instance {i}: f-vector identity"),
        )?;
        let betti = betti_numbers(m).map_err(|e| e.to_string())?;
        let split = constituent_betti_sum(m).map_err(|e| e.to_string())?;
        ensure(betti == split, || {
            format!("instance {i}: betti {betti:?} vs {split:?}")
        })?;
        for d in 0..=top(m) {
            for kind in KINDS {
                let whole = spectrum(m, d, kind).map_err(|e| e.to_string())?;
                let parts = constituent_spectrum_sum(m, d, kind).map_err(|e| e.to_string())?;
                ensure(whole.eq_up_to_zeros(&parts, TOL), || {
                    format!(
                        "instance {i} degree {d} {}: {whole} vs {parts}",
                        kind.name()
                    )
                })?;
            }
            let zeros = spectrum(m, d, LaplacianKind::Total)
                .map_err(|e| e.to_string())?
                .zero_multiplicity(ZERO_THRESHOLD);
            ensure(zeros == betti[d], || {
                format!(
                    "instance {i} degree {d}: betti {} vs harmonic {zeros}",
                    betti[d]
                )
            })?;
        }
    }
    Ok(())
}

fn stable_iff_reverse_shifted(m: &Multicomplex) -> bool {
    let (sub, _) = m.restrict_to_support();
    let gens = sub.complement_ideal_generators_default();
    let stable = is_strongly_stable(&gens, &VariableOrder::natural(sub.ambient_dim()));
    stable == m.is_shifted(&VariableOrder::reverse(m.ambient_dim()))
}

fn criterion_9() -> Check {
    let hand = closure(&[&[1, 0], &[0, 2]], 2);
    let gens = hand.complement_ideal_generators_default();
    let want = vec![
        Monomial::new(vec![2, 0]),
        Monomial::new(vec![1, 1]),
        Monomial::new(vec![0, 3]),
    ];
    ensure(gens == want, || format!("generators {gens:?}"))?;
    ensure(
        is_strongly_stable(&gens, &VariableOrder::natural(2)),
        || "hand ideal not stable".into(),
    )?;
    ensure(hand.is_shifted(&VariableOrder::reverse(2)), || {
        "hand complex not shifted".into()
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut positives = 0;
    for i in 0..100 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=4);
        let m = if i % 2 == 0 {
            random_shifted(&mut rng, n, d, 60, &VariableOrder::reverse(n))
        } else {
            random_multicomplex(&mut rng, n, d, 60)
        };
        positives += usize::from(m.is_shifted(&VariableOrder::reverse(n)));
        ensure(stable_iff_reverse_shifted(&m), || {
            format!("instance {i}: {m:?}")
        })?;
    }
    ensure(positives >= 50, || {
        format!("only {positives} shifted instances")
    })
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..50 {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=4);
        let m = random_multicomplex(&mut rng, n, d, 60);
        let base: Vec<_> = (0..=top(&m))
            .flat_map(|d| KINDS.map(|k| spectrum(&m, d, k)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for _ in 0..3 {
            let perm = random_permutation(&mut rng, n);
            let r = m.relabel(&perm);
            let other: Vec<_> = (0..=top(&r))
                .flat_map(|d| KINDS.map(|k| spectrum(&r, d, k)))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            ensure(
                base.len() == other.len()
                    && base
                        .iter()
                        .zip(&other)
                        .all(|(a, b)| a.eq_up_to_zeros(b, TOL)),
                || format!("instance {i} permutation {perm:?}"),
            )?;
        }
    }
    Ok(())
}

fn criterion_11() -> Check {
    let mut failures = Vec::new();
    for n in [20, 50, 100, 200] {
        let (d, m) = build_mn(n).map_err(|e| e.to_string())?;
        let mut t: Vec<f64> = d.t_vector(2).iter().map(|&v| v as f64).collect();
        t.sort_by(|a, b| b.total_cmp(a));
        let s = chain_degree_spectrum(&m, 2).map_err(|e| e.to_string())?;
        if !parts_eq_up_to_zeros(s.values(), &t, TOL) {
            let snapped: Vec<f64> = s
                .nonzero(ZERO_THRESHOLD)
                .iter()
                .map(|v| v.round())
                .collect();
            failures.push(format!(
                "N={n}: sorted t2 {:?} but spectrum {:?} (s2 = {:?})",
                d.t_vector(2),
                snapped,
                d.s_vector(2)
            ));
        }
    }
    let primes = primes_up_to(10_000);
    for n in 1..=10_000u64 {
        let pi = primes.partition_point(|&p| p <= n);
        let s1 = s_vector(n, 1).map_err(|e| e.to_string())?;
        let want: Vec<usize> = if pi == 0 { vec![] } else { vec![pi] };
        if s1 != want {
            failures.push(format!("N={n}: s1 {s1:?}, pi {pi}"));
            break;
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn main() -> ExitCode {
    let c = corpus();
    let results: Vec<(&str, Check)> = vec![
        ("1 full 3-variable complex, chain degree 3", criterion_1()),
        ("2 seven-monomial shifted example", criterion_2()),
        ("3 six-monomial shifted example", criterion_3()),
        ("4 Dirichlet N=50 vectors and matrices", criterion_4()),
        (
            "5 formula vs eigensolver on 200 shifted instances",
            criterion_5(&c),
        ),
        (
            "6 boundary squares to zero on 400 instances",
            criterion_6(&c),
        ),
        (
            "7 spectrum relations on every instance and degree",
            criterion_7(&c),
        ),
        (
            "8 constituent splits of spectra, f-vectors and Betti numbers",
            criterion_8(&c),
        ),
        (
            "9 strong stability vs reverse-order shiftedness",
            criterion_9(),
        ),
        ("10 relabeling invariance", criterion_10()),
        ("11 Dirichlet spectrum cross-check", criterion_11()),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(()) => println!("[PASS] {name}"),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {name}: {e}");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
