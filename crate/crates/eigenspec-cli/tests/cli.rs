//! Subcommand behavior and exit-code tests, driven through the library
//! entry point.

use eigenspec_cli::{run, Outcome};
use serde_json::Value;

fn invoke(args: &[&str]) -> Outcome {
    let argv = std::iter::once("eigenspec".to_string())
        .chain(args.iter().map(|s| s.to_string()));
    run(argv)
}

fn invoke_json(args: &[&str]) -> Value {
    let out = invoke(args);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("stdout must be valid JSON")
}

#[test]
fn spectrum_with_inferred_weights() {
    let v = invoke_json(&["spectrum", "--poly", "x^3 + y^2", "--vars", "x,y"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "spectrum");
    assert_eq!(v["weights_inferred"], true);
    assert_eq!(v["weights"], serde_json::json!(["1/3", "1/2"]));
    assert_eq!(v["milnor_number"], 2);
    assert_eq!(v["spectrum"][0]["alpha"], "5/6");
    assert_eq!(v["spectrum"][1]["alpha"], "7/6");
}

#[test]
fn spectrum_with_automorphism() {
    let v = invoke_json(&[
        "spectrum",
        "--poly",
        "x^4 + y^2",
        "--vars",
        "x,y",
        "--weights",
        "1/4,1/2",
        "--aut-c",
        "1,0",
        "--aut-order",
        "4",
    ]);
    assert_eq!(v["automorphism"]["order"], 4);
    let gammas: Vec<&str> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["gamma"].as_str().unwrap())
        .collect();
    assert_eq!(gammas, vec!["3/4", "1/2", "1/4"]);
}

#[test]
fn spectrum_error_paths() {
    // weight count mismatch is a usage error
    let out = invoke(&["spectrum", "--poly", "x + y", "--vars", "x,y", "--weights", "1/2"]);
    assert_eq!(out.code, 2);

    // mathematically inapplicable inputs exit 1
    let out = invoke(&[
        "spectrum", "--poly", "x^3 + y^2", "--vars", "x,y", "--weights", "1/2,1/2",
    ]);
    assert_eq!(out.code, 1, "non-quasi-homogeneous weights");

    let out = invoke(&[
        "spectrum", "--poly", "x^2*y^2", "--vars", "x,y", "--weights", "1/4,1/4",
    ]);
    assert_eq!(out.code, 1, "non-isolated singularity");
    assert!(out.stderr.contains("non-isolated"));

    // indeterminate inference
    let out = invoke(&["spectrum", "--poly", "x^2*y", "--vars", "x,y"]);
    assert_eq!(out.code, 1);

    // automorphism flags must come together
    let out = invoke(&["spectrum", "--poly", "x^2", "--vars", "x", "--aut-order", "2"]);
    assert_eq!(out.code, 2);

    // parse error with position lands on exit 2
    let out = invoke(&["spectrum", "--poly", "x^3 + + y", "--vars", "x,y"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("syntax error at byte 6"));
}

#[test]
fn bound_examples() {
    let v = invoke_json(&["bound", "--weights", "1,1,1,1,1", "--degree", "5"]);
    assert_eq!(v["spectral"], 135);
    assert_eq!(v["best"], 135);
    assert_eq!(v["naive"], Value::Null);

    let v = invoke_json(&[
        "bound", "--weights", "1,1,1,1", "--degree", "6", "--chi", "11", "--ksq", "24",
    ]);
    assert_eq!(v["naive"], 85);
    assert_eq!(v["spectral"], 68);
    assert_eq!(v["miyaoka"], 66);
    assert_eq!(v["best"], 66);
    assert_eq!(v["best_source"], "miyaoka");
}

#[test]
fn bound_error_paths() {
    let out = invoke(&["bound", "--weights", "1,1", "--degree", "3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("invalid dimension"));

    let out = invoke(&["bound", "--weights", "1,1,1,3", "--degree", "10"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("does not divide"));

    let out = invoke(&["bound", "--weights", "1,1,1,1", "--degree", "4", "--chi", "2"]);
    assert_eq!(out.code, 2);
}

#[test]
fn bound_warns_on_shared_factors() {
    let v = invoke_json(&["bound", "--weights", "2,2,2,1", "--degree", "4"]);
    let warnings = v["warnings"].as_array().unwrap();
    assert_eq!(warnings.len(), 1);
}

#[test]
fn symcheck_behavior() {
    let v = invoke_json(&["symcheck", "--n", "1"]);
    assert_eq!(v["total_sign_multiplicity"], 0);
    assert_eq!(v["verdict"], "obstructed");
    assert!(v.get("orbits").is_none());

    let v = invoke_json(&["symcheck", "--n", "3", "--orbits"]);
    assert_eq!(v["monomial_count"], 135);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 6);

    let out = invoke(&["symcheck", "--n", "2"]);
    assert_eq!(out.code, 1);
}

#[test]
fn hassett_behavior() {
    let v = invoke_json(&["hassett", "--m", "3", "--j", "1", "--stratum", "B"]);
    assert_eq!(v["h"]["11"], 1);
    assert_eq!(v["h"]["10"], 2);
    assert_eq!(v["h"]["01"], 0);
    assert_eq!(v["h"]["00"], 1);
    assert_eq!(v["n_rank"], 1);
    assert_eq!(v["consistency_flag"], false);

    let v = invoke_json(&["hassett", "--m", "4", "--j", "2", "--stratum", "A"]);
    assert_eq!(v["consistency_flag"], true);
    assert_eq!(v["rank_sum"], 8);

    let out = invoke(&["hassett", "--m", "4", "--j", "4", "--stratum", "A"]);
    assert_eq!(out.code, 2);

    let out = invoke(&["hassett", "--m", "4", "--j", "1", "--stratum", "C"]);
    assert_eq!(out.code, 2);
}

#[test]
fn hodge_cover_behavior() {
    let v = invoke_json(&["hodge-cover", "--n", "3"]);
    assert_eq!(v["hodge_numbers"], serde_json::json!([1, 9, 9, 1]));
    assert_eq!(v["total"], 20);

    let out = invoke(&["hodge-cover", "--n", "0"]);
    assert_eq!(out.code, 2);
}

#[test]
fn registry_lists_examples() {
    let v = invoke_json(&["registry"]);
    let examples = v["examples"].as_array().unwrap();
    assert_eq!(examples.len(), 9);
    assert!(examples.iter().any(|e| e["nodes"] == 130));
    assert!(examples.iter().any(|e| e["nodes"] == 168));
}

#[test]
fn basechange_behavior() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spectrum.json");

    let bp = invoke(&["bp", "--lambdas", "4,2", "--c", "1,0", "--l", "4"]);
    assert_eq!(bp.code, 0);
    std::fs::write(&path, &bp.stdout).unwrap();

    let k1 = invoke_json(&["basechange", "--spectrum", path.to_str().unwrap(), "--k", "1"]);
    let original: Value = serde_json::from_str(&bp.stdout).unwrap();
    assert_eq!(k1["spectrum"], original["spectrum"]);

    let k2 = invoke_json(&["basechange", "--spectrum", path.to_str().unwrap(), "--k", "2"]);
    let alphas: Vec<&str> = k2["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["alpha"].as_str().unwrap())
        .collect();
    // 3/4 -> 1/2, 1 -> 1, 5/4 -> 3/2
    assert_eq!(alphas, vec!["1/2", "1", "3/2"]);

    let out = invoke(&["basechange", "--spectrum", "/nonexistent.json", "--k", "2"]);
    assert_eq!(out.code, 2);
}

#[test]
fn usage_errors_from_the_argument_parser() {
    let out = invoke(&["bound", "--weights", "1,1,1,1"]);
    assert_eq!(out.code, 2, "missing required flag");

    let out = invoke(&["bound", "--weights", "1,1,1,1", "--degree", "4", "--bogus"]);
    assert_eq!(out.code, 2, "unknown option");

    let out = invoke(&["frobnicate"]);
    assert_eq!(out.code, 2, "unknown subcommand");

    let out = invoke(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("Usage"));
}

#[test]
fn table_format_is_available_everywhere() {
    for args in [
        vec!["spectrum", "--poly", "x^3 + y^2", "--vars", "x,y"],
        vec!["bp", "--lambdas", "3,3", "--c", "0,1", "--l", "3"],
        vec!["bound", "--weights", "1,1,1,1", "--degree", "4"],
        vec!["symcheck", "--n", "1"],
        vec!["hassett", "--m", "2", "--j", "1", "--stratum", "A"],
        vec!["hodge-cover", "--n", "2"],
        vec!["registry"],
    ] {
        let mut argv = args.clone();
        argv.push("--format");
        argv.push("table");
        let out = invoke(&argv);
        assert_eq!(out.code, 0, "args: {args:?}, stderr: {}", out.stderr);
        assert!(!out.stdout.trim().is_empty());
        assert!(
            serde_json::from_str::<Value>(&out.stdout).is_err(),
            "table output should not be JSON: {args:?}"
        );
    }
}
