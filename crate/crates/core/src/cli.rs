//! The `multilap` command line.
//!
//! Exit codes: 0 success, 1 a computed cross-check disagreed, 2 invalid input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::chain::{boundary_matrix, dual_boundary_matrix};
use crate::complex::{is_strongly_stable, Multicomplex, VariableOrder};
use crate::dirichlet::DirichletTruncation;
use crate::error::Error;
use crate::formula::{formula_spectrum_unchecked, is_formula_applicable, Partition};
use crate::generate::random_permutation;
use crate::io::{parse_multicomplex, render_boundary_matrix, render_table};
use crate::spectra::{
    betti_numbers, parts_eq_up_to_zeros, verify_spectrum_relations, Spectrum, RELATION_TOLERANCE,
    ZERO_THRESHOLD,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "multilap",
    version,
    about = "Laplacian spectra of finite multicomplexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a multicomplex and report shiftedness and strong stability
    Check(CommonArgs),
    /// Dump the boundary matrix of one degree
    Matrix {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        degree: usize,
        /// Dump the dual (transposed) map instead
        #[arg(long)]
        dual: bool,
    },
    /// Laplacian spectra by eigensolver, by formula, or both
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Eig)]
        method: Method,
        /// Apply the formula even when the input is not shifted
        #[arg(long)]
        force: bool,
    },
    /// List the constituent simplicial complexes and check the f-vector identity
    Decompose(CommonArgs),
    /// Real Betti numbers with the harmonic cross-check
    Betti(CommonArgs),
    /// Spectrum functions of the multicomplex of the integers 1..=N
    Dirichlet {
        n: u64,
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Also print Y_2(N) and U_2(N)
        #[arg(long)]
        matrices: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    pub input: PathBuf,
    /// Read monomials as `x1^2*x2` instead of exponent vectors
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long)]
    pub json: bool,
    /// Comparison tolerance for spectra
    #[arg(long, default_value_t = RELATION_TOLERANCE)]
    pub tol: f64,
    /// Variable order used for shiftedness
    #[arg(long, value_enum, default_value_t = OrderChoice::Natural)]
    pub order: OrderChoice,
    /// Permute the variables with this seed before computing
    #[arg(long)]
    pub relabel_seed: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Eig,
    Formula,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderChoice {
    Natural,
    Reverse,
}

impl OrderChoice {
    fn order(self, n: usize) -> VariableOrder {
        match self {
            OrderChoice::Natural => VariableOrder::natural(n),
            OrderChoice::Reverse => VariableOrder::reverse(n),
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn execute(command: &Command) -> Outcome {
    match command {
        Command::Check(common) => with_input(common, |m| run_check(common, m)),
        Command::Matrix {
            common,
            degree,
            dual,
        } => with_input(common, |m| {
            let b = if *dual {
                dual_boundary_matrix(m, *degree)
            } else {
                boundary_matrix(m, *degree)
            };
            Outcome::ok(render_boundary_matrix(&b))
        }),
        Command::Spectrum {
            common,
            degree,
            method,
            force,
        } => with_input(common, |m| {
            run_spectrum(common, m, *degree, *method, *force)
        }),
        Command::Decompose(common) => with_input(common, |m| run_decompose(common, m)),
        Command::Betti(common) => with_input(common, |m| run_betti(common, m)),
        Command::Dirichlet {
            n,
            k,
            matrices,
            json,
        } => run_dirichlet(*n, *k, *matrices, *json),
    }
}

fn load(common: &CommonArgs) -> Result<Multicomplex, Error> {
    let text = std::fs::read_to_string(&common.input).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", common.input.display()),
    })?;
    let m = parse_multicomplex(&text, common.symbolic)?;
    Ok(match common.relabel_seed {
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let perm = random_permutation(&mut rng, m.ambient_dim());
            m.relabel(&perm)
        }
        None => m,
    })
}

fn with_input(common: &CommonArgs, f: impl FnOnce(&Multicomplex) -> Outcome) -> Outcome {
    if common.tol.is_nan() || common.tol <= 0.0 {
        return Outcome::invalid("--tol must be positive");
    }
    match load(common) {
        Ok(m) => f(&m),
        Err(e @ Error::NotDivisorClosed { .. }) => Outcome {
            code: EXIT_INVALID,
            stdout: "divisor-closed: no\n".to_string(),
            stderr: format!("error: {e}\n"),
        },
        Err(e) => Outcome::invalid(e),
    }
}

/// Rounds to 12 significant digits so JSON output is stable across platforms.
pub fn canonical_number(x: f64) -> Value {
    if x == 0.0 {
        return json!(0.0);
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    json!(rounded)
}

fn spectrum_json(s: &Spectrum) -> Value {
    Value::Array(s.values().iter().map(|&v| canonical_number(v)).collect())
}

fn snapped_json(s: &Spectrum) -> Value {
    match s.snapped() {
        Some(v) => json!(v),
        None => Value::Null,
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_check(common: &CommonArgs, m: &Multicomplex) -> Outcome {
    let n = m.ambient_dim();
    let natural = m.is_shifted(&VariableOrder::natural(n));
    let reverse = m.is_shifted(&VariableOrder::reverse(n));
    let gens = m.complement_ideal_generators_default();
    let stable = is_strongly_stable(&gens, &VariableOrder::natural(n));
    let stable_rev = is_strongly_stable(&gens, &VariableOrder::reverse(n));
    if common.json {
        let v = json!({
            "divisor_closed": true,
            "vars": n,
            "monomials": m.len(),
            "f_vector": m.f_vector(),
            "shifted_natural": natural,
            "shifted_reverse": reverse,
            "ideal_generators": gens.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "strongly_stable_natural": stable,
            "strongly_stable_reverse": stable_rev,
        });
        return Outcome::ok(render_json(&v));
    }
    let mut out = String::new();
    let _ = writeln!(out, "divisor-closed: yes");
    let _ = writeln!(out, "vars: {n}");
    let _ = writeln!(out, "monomials: {}", m.len());
    let _ = writeln!(out, "f-vector: {}", join(&m.f_vector()));
    let _ = writeln!(out, "shifted(natural): {}", yes(natural));
    let _ = writeln!(out, "shifted(reverse): {}", yes(reverse));
    let symbolic: Vec<String> = gens.iter().map(|g| g.to_symbolic()).collect();
    let _ = writeln!(out, "ideal generators: {}", symbolic.join(", "));
    let _ = writeln!(out, "strongly stable(natural): {}", yes(stable));
    let _ = writeln!(out, "strongly stable(reverse): {}", yes(stable_rev));
    Outcome::ok(out)
}

fn run_spectrum(
    common: &CommonArgs,
    m: &Multicomplex,
    degree: Option<usize>,
    method: Method,
    force: bool,
) -> Outcome {
    let order = common.order.order(m.ambient_dim());
    let applicable = is_formula_applicable(m, &order);
    if method != Method::Eig && !applicable && !force {
        return Outcome::invalid(format!(
            "{} (use --force to evaluate the formula anyway)",
            Error::NotShifted
        ));
    }
    let degrees: Vec<usize> = match degree {
        Some(d) => vec![d],
        None => (0..=m.max_degree().unwrap_or(0)).collect(),
    };
    let betti = match betti_numbers(m) {
        Ok(b) => b,
        Err(e) => return Outcome::invalid(e),
    };

    let mut reports = Vec::new();
    let mut text = String::new();
    let mut mismatch = false;
    for &d in &degrees {
        let mut r = Map::new();
        r.insert("degree".into(), json!(d));
        r.insert("chain_degree".into(), json!(d));
        r.insert(
            "laplacian_up_index".into(),
            d.checked_sub(1).map_or(Value::Null, |i| json!(i)),
        );
        match d.checked_sub(1) {
            Some(i) => {
                let _ = writeln!(text, "degree {d} (chain degree {d}, Laplacian index {i})");
            }
            None => {
                let _ = writeln!(text, "degree 0 (chain degree 0)");
            }
        }

        let mut down_for_match: Option<Spectrum> = None;
        if method != Method::Formula {
            let rel = match verify_spectrum_relations(m, d) {
                Ok(rel) => rel,
                Err(e) => return Outcome::invalid(e),
            };
            let b = betti.get(d).copied().unwrap_or(0);
            for (name, s) in [("up", &rel.up), ("down", &rel.down), ("total", &rel.total)] {
                r.insert(name.into(), spectrum_json(s));
                r.insert(format!("{name}_snapped"), snapped_json(s));
                let _ = writeln!(text, "  {name:<6}{s}");
            }
            r.insert("betti".into(), json!(b));
            r.insert("relations_ok".into(), json!(rel.ok()));
            let _ = writeln!(text, "  betti {b}");
            let _ = writeln!(
                text,
                "  relations {}",
                if rel.ok() { "ok" } else { "FAILED" }
            );
            mismatch |= !rel.ok();
            down_for_match = Some(rel.down);
        }
        if method != Method::Eig {
            let f: Partition = formula_spectrum_unchecked(m, d);
            r.insert("formula".into(), json!(f.parts()));
            r.insert("formula_verified".into(), json!(applicable));
            let _ = write!(text, "  formula {f}");
            if !applicable {
                let _ = write!(text, " (unverified: input not shifted)");
            }
            if let Some(down) = &down_for_match {
                let ok = parts_eq_up_to_zeros(down.values(), &f.as_f64(), common.tol);
                r.insert("match_up_to_zeros".into(), json!(ok));
                let _ = write!(text, "  match: {}", yes(ok));
                mismatch |= !ok;
            }
            let _ = writeln!(text);
        }
        reports.push(Value::Object(r));
    }

    let stdout = if common.json {
        render_json(&json!({
            "method": format!("{method:?}").to_lowercase(),
            "shifted": applicable,
            "zero_threshold": ZERO_THRESHOLD,
            "reports": reports,
        }))
    } else {
        text
    };
    Outcome {
        code: if mismatch { EXIT_MISMATCH } else { EXIT_OK },
        stdout,
        stderr: String::new(),
    }
}

fn run_decompose(common: &CommonArgs, m: &Multicomplex) -> Outcome {
    let dec = m.constituents();
    let identity = dec.shifted_f_vector_sum() == m.f_vector();
    let parts: Vec<(String, usize, Vec<usize>)> = dec
        .iter()
        .map(|(p, c)| (p.to_string(), 2 * p.total_degree() as usize, c.f_vector()))
        .collect();
    let code = if identity { EXIT_OK } else { EXIT_MISMATCH };
    let stdout = if common.json {
        let list: Vec<Value> = parts
            .iter()
            .map(|(p, shift, f)| json!({ "p": p, "shift": shift, "f_vector": f }))
            .collect();
        render_json(&json!({
            "constituents": list,
            "f_vector": m.f_vector(),
            "f_vector_identity": identity,
        }))
    } else {
        let mut out = format!("constituents: {}\n", parts.len());
        for (p, shift, f) in &parts {
            let _ = writeln!(out, "  p = [{p}]  shift {shift}  f-vector {}", join(f));
        }
        let _ = writeln!(out, "f-vector: {}", join(&m.f_vector()));
        let _ = writeln!(
            out,
            "f-vector identity: {}",
            if identity { "holds" } else { "FAILS" }
        );
        out
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn run_betti(common: &CommonArgs, m: &Multicomplex) -> Outcome {
    let betti = match betti_numbers(m) {
        Ok(b) => b,
        Err(e) => return Outcome::invalid(e),
    };
    let mut zeros = Vec::with_capacity(betti.len());
    for d in 0..betti.len() {
        match crate::spectra::spectrum_total(m, d) {
            Ok(s) => zeros.push(s.zero_multiplicity(ZERO_THRESHOLD)),
            Err(e) => return Outcome::invalid(e),
        }
    }
    let ok = zeros == betti;
    let stdout = if common.json {
        render_json(&json!({
            "betti": betti,
            "harmonic_zero_multiplicity": zeros,
            "cross_check_ok": ok,
        }))
    } else {
        format!(
            "betti: {}\nzero multiplicity of total spectrum: {}\ncross-check: {}\n",
            join(&betti),
            join(&zeros),
            if ok { "ok" } else { "FAILED" }
        )
    };
    Outcome {
        code: if ok { EXIT_OK } else { EXIT_MISMATCH },
        stdout,
        stderr: String::new(),
    }
}

fn run_dirichlet(n: u64, k: u32, matrices: bool, as_json: bool) -> Outcome {
    if k == 0 {
        return Outcome::invalid("--k must be at least 1");
    }
    let d = match DirichletTruncation::new(n) {
        Ok(d) => d,
        Err(e) => return Outcome::invalid(e),
    };
    let t = d.t_vector(k);
    let s = d.s_vector(k);
    let (y2, u2) = if matrices && n >= 2 {
        (Some(d.y2_matrix()), Some(d.u2_matrix()))
    } else {
        (None, None)
    };
    let stdout = if as_json {
        let mut v = json!({ "N": n, "k": k, "t": t, "s": s, "pi": d.pi() });
        if let (Some(y), Some(u)) = (&y2, &u2) {
            v["Y2"] = json!(y);
            v["U2"] = json!(u);
        }
        render_json(&v)
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "N {n}");
        let _ = writeln!(out, "pi {}", d.pi());
        let _ = writeln!(out, "k {k}");
        let _ = writeln!(out, "t {}", join(&t));
        let _ = writeln!(out, "s {}", join(&s));
        if let (Some(y), Some(u)) = (&y2, &u2) {
            let _ = writeln!(out, "Y2");
            out.push_str(&render_table(y));
            let _ = writeln!(out, "U2");
            out.push_str(&render_table(u));
        }
        out
    };
    Outcome::ok(stdout)
}
