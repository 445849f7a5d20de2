use multilap::cli::{run, Outcome, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn multilap(args: &[&str]) -> Outcome {
    run(std::iter::once("multilap").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = multilap(args);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn check_reports_paper_example() {
    let out = multilap(&["check", "--symbolic", &data("seven.txt")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("divisor-closed: yes"));
    assert!(out.stdout.contains("shifted(natural): yes"));
    assert!(out.stdout.contains("strongly stable(reverse): yes"));
}

#[test]
fn check_rejects_missing_divisor_with_witness() {
    let out = multilap(&["check", &data("missing_divisor.txt")]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stdout.contains("divisor-closed: no"));
    assert!(out.stderr.contains("0 1 divides 0 2"));
}

#[test]
fn check_accepts_empty_file() {
    let out = multilap(&["check", &data("empty.txt")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("monomials: 0"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let out = multilap(&["check", &data("six.txt")]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    let out = multilap(&["check", &data("does_not_exist.txt")]);
    assert_eq!(out.code, EXIT_INVALID);
}

#[test]
fn spectrum_full_complex_both_methods() {
    let v = json(&[
        "spectrum",
        "--json",
        "--degree",
        "3",
        "--method",
        "both",
        &data("full3.txt"),
    ]);
    let r = &v["reports"][0];
    assert_eq!(r["chain_degree"], 3);
    assert_eq!(r["laplacian_up_index"], 2);
    assert_eq!(r["formula"], serde_json::json!([3, 3, 3, 3]));
    assert_eq!(r["match_up_to_zeros"], true);
    assert_eq!(
        r["down_snapped"],
        serde_json::json!([3, 3, 3, 3, 0, 0, 0, 0, 0, 0])
    );
    assert_eq!(r["betti"], 6);
}

#[test]
fn spectrum_six_monomial_example() {
    let v = json(&[
        "spectrum",
        "--json",
        "--symbolic",
        "--degree",
        "3",
        "--method",
        "both",
        &data("six.txt"),
    ]);
    assert_eq!(v["reports"][0]["formula"], serde_json::json!([3, 3, 2]));
    assert_eq!(v["reports"][0]["match_up_to_zeros"], true);
}

#[test]
fn spectrum_beyond_top_degree_is_vacuous() {
    let v = json(&[
        "spectrum",
        "--json",
        "--degree",
        "9",
        "--method",
        "both",
        &data("full3.txt"),
    ]);
    let r = &v["reports"][0];
    assert_eq!(r["down"], serde_json::json!([]));
    assert_eq!(r["formula"], serde_json::json!([]));
    assert_eq!(r["match_up_to_zeros"], true);
}

#[test]
fn formula_requires_shifted_input() {
    // shifted only under the reverse order
    let path = std::env::temp_dir().join("multilap_cli_reverse.txt");
    std::fs::write(&path, "vars 2\n0 0\n1 0\n0 1\n0 2\n").unwrap();
    let p = path.to_str().unwrap();
    let out = multilap(&["spectrum", "--method", "formula", p]);
    assert_eq!(out.code, EXIT_INVALID);
    assert_eq!(
        multilap(&["spectrum", "--method", "formula", "--order", "reverse", p]).code,
        EXIT_OK
    );
    assert_eq!(
        multilap(&["spectrum", "--method", "both", "--force", p]).code,
        EXIT_OK
    );
}

#[test]
fn forced_formula_on_non_shifted_input_is_marked_unverified() {
    // not shifted under either order
    let path = std::env::temp_dir().join("multilap_cli_nonshifted.txt");
    std::fs::write(&path, "vars 3\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n1 1 0\n0 0 2\n").unwrap();
    let out = multilap(&[
        "spectrum",
        "--method",
        "both",
        "--force",
        path.to_str().unwrap(),
    ]);
    assert!(out.code == EXIT_OK || out.code == EXIT_MISMATCH);
    assert!(out.stdout.contains("unverified"));
}

#[test]
fn relabeling_preserves_spectra() {
    let base = json(&["spectrum", "--json", "--symbolic", &data("seven.txt")]);
    for seed in ["1", "2", "3"] {
        let other = json(&[
            "spectrum",
            "--json",
            "--symbolic",
            "--relabel-seed",
            seed,
            &data("seven.txt"),
        ]);
        for (a, b) in base["reports"]
            .as_array()
            .unwrap()
            .iter()
            .zip(other["reports"].as_array().unwrap())
        {
            for key in ["up_snapped", "down_snapped", "total_snapped"] {
                assert_eq!(a[key], b[key], "seed {seed} {key}");
            }
        }
    }
}

#[test]
fn rejects_non_positive_tolerance() {
    let out = multilap(&["spectrum", "--tol", "0", &data("full3.txt")]);
    assert_eq!(out.code, EXIT_INVALID);
}

#[test]
fn json_output_is_deterministic_with_sorted_keys() {
    let args = ["spectrum", "--json", &data("full3.txt")];
    let a = multilap(&args).stdout;
    assert_eq!(a, multilap(&args).stdout);
    let v: Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&String> = v["reports"][0].as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn decompose_full_complex() {
    let v = json(&["decompose", "--json", &data("full3.txt")]);
    assert_eq!(v["constituents"].as_array().unwrap().len(), 4);
    assert_eq!(v["f_vector_identity"], true);
}

#[test]
fn betti_full_complex() {
    let v = json(&["betti", "--json", &data("full3.txt")]);
    assert_eq!(v["betti"], serde_json::json!([0, 0, 0, 6]));
    assert_eq!(v["cross_check_ok"], true);
}

#[test]
fn dirichlet_fifty() {
    let v = json(&["dirichlet", "50", "--k", "2", "--matrices", "--json"]);
    assert_eq!(v["N"], 50);
    assert_eq!(v["pi"], 15);
    assert_eq!(v["t"], serde_json::json!([8, 5, 3, 3, 2, 2, 1, 1, 1]));
    assert_eq!(v["s"], serde_json::json!([9, 6, 4, 2, 2, 1, 1, 1]));
    assert_eq!(v["U2"][0], serde_json::json!([1, 1, 1, 1, 1, 1, 1, 1, 0]));
    assert_eq!(v["Y2"].as_array().unwrap().len(), 9);

    let text = multilap(&["dirichlet", "50", "--matrices"]).stdout;
    assert!(text.contains("t 8 5 3 3 2 2 1 1 1\n"));
    assert!(text.contains("U2\n1 1 1 1 1 1 1 1 0\n"));
}

#[test]
fn dirichlet_rejects_bad_arguments() {
    assert_eq!(
        multilap(&["dirichlet", "50", "--k", "0"]).code,
        EXIT_INVALID
    );
    assert_eq!(multilap(&["dirichlet", "1000000000"]).code, EXIT_INVALID);
    assert_eq!(multilap(&["nonsense"]).code, EXIT_INVALID);
}
