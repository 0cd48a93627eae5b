use std::path::PathBuf;
use std::process::{Command, Output};

use num_bigint::BigInt;

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

fn hopfgal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfgal"))
        .args(args)
        .env_remove("HOPFGAL_MAX_DIM")
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn exit_codes_follow_the_verdicts() {
    let cases: &[(&[&str], &str, i32)] = &[
        (&["check", "hopf"], "qsqrt2.json", 0),
        (&["check", "hopf"], "sweedler_yd.json", 0),
        (&["check", "hopf"], "s3.json", 0),
        (&["check", "hopf"], "fp3_z2.json", 0),
        (&["check", "comodule-algebra"], "graded_toy.json", 0),
        (
            &["check", "comodule-algebra"],
            "dual_numbers_bundle.json",
            0,
        ),
        (&["check", "galois"], "qsqrt2.json", 0),
        (&["check", "galois"], "cyclic_cubic.json", 0),
        (&["check", "galois"], "group_z4.json", 0),
        (&["check", "galois"], "fp3_z2.json", 0),
        (&["check", "galois"], "qcbrt2_trivial.json", 1),
        (&["check", "galois"], "trivial_noncartesian.json", 1),
        (&["check", "galois"], "z_graded_dual_numbers.json", 1),
        (&["check", "cartesian"], "sweedler_yd.json", 0),
        (&["check", "cartesian"], "group_z4.json", 0),
        (&["check", "cartesian"], "trivial_noncartesian.json", 1),
        (&["check", "module"], "qsqrt2.json", 0),
        (&["check", "module"], "sweedler_yd.json", 0),
        (&["check", "module"], "cyclic_cubic.json", 0),
        (&["phi"], "qsqrt2.json", 0),
        (&["phi"], "group_z4.json", 0),
        (&["phi"], "trivial_noncartesian.json", 1),
        (&["bundle"], "qsqrt2.json", 0),
        (&["bundle"], "graded_toy.json", 0),
        (&["bundle"], "group_z4.json", 0),
        (&["bundle"], "z_graded_dual_numbers.json", 1),
        (&["bundle"], "dual_numbers_bundle.json", 3),
        (&["check", "cartesian"], "s3.json", 2),
    ];
    for (args, file, expected) in cases {
        let path = fixture(file);
        let mut full = args.to_vec();
        full.push(&path);
        let out = hopfgal(&full);
        assert_eq!(
            code(&out),
            *expected,
            "{args:?} {file}\n{}{}",
            stdout(&out),
            stderr(&out)
        );
    }
}

#[test]
fn invalid_documents_exit_2_with_a_path() {
    let cases = [
        ("malformed.json", "EOF while parsing"),
        ("unknown_section.json", "sections.coalgebra"),
        ("wrong_version.json", "schema_version"),
        ("bad_scalar.json", "sections.comodule.v.grouplike[1]"),
        ("entry_out_of_range.json", "sections.hopf.H.antipode[0]"),
        ("unknown_reference.json", "sections.comodule_algebra.A.hopf"),
        ("bad_field.json", "field"),
    ];
    for (file, needle) in cases {
        let out = hopfgal(&["check", "hopf", &fixture(&format!("invalid/{file}"))]);
        assert_eq!(code(&out), 2, "{file}");
        assert!(stderr(&out).contains(needle), "{file}: {}", stderr(&out));
        assert!(stdout(&out).is_empty(), "{file}");
    }
    let out = hopfgal(&["check", "hopf", &fixture("does_not_exist.json")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_keys_warn_without_failing() {
    let out = hopfgal(&["check", "hopf", &fixture("unknown_key.json")]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("warning: ignoring unknown key sections.hopf.H.comment"));
}

#[test]
fn dimension_cap_comes_from_the_environment() {
    let path = fixture("sweedler_yd.json");
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_hopfgal"))
            .args(["check", "hopf", &path])
            .env("HOPFGAL_MAX_DIM", cap)
            .output()
            .unwrap()
    };
    let capped = run("10");
    assert_eq!(code(&capped), 2);
    assert!(stderr(&capped).contains("HOPFGAL_MAX_DIM"));
    assert_eq!(code(&run("64")), 0);
    assert_eq!(code(&run("zero")), 2);
    assert_eq!(code(&run("0")), 2);
}

#[test]
fn at_prints_single_classes() {
    let out = hopfgal(&["at", "--n", "1", "--k", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2 [L1] - 1 [L0]\n");

    let out = hopfgal(&["at", "--n", "2", "--k", "-1", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"n\":2,\"k\":-1,\"coords\":[3,-3,1]}\n");
}

#[test]
fn at_tabulates_ranges() {
    let out = hopfgal(&["at", "--n", "1", "--k-range", "-1..1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n = 1");
    assert_eq!(lines.len(), 5);
    assert!(lines[2].starts_with("-1"));

    let out = hopfgal(&["at", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 3);
    assert_eq!(doc["rows"][0]["coords"], serde_json::json!([1, 0, 0]));
}

#[test]
fn at_emits_big_coordinates_as_bare_integers() {
    let out = hopfgal(&["at", "--n", "70", "--k", "71", "--format", "json"]);
    let text = stdout(&out);
    let mut binom = BigInt::from(1);
    for i in 0..35u32 {
        binom = binom * (71 - i) / (i + 1);
    }
    assert!(binom > BigInt::from(i64::MAX));
    assert!(text.contains(&format!(",-{binom},")), "{text}");
}

#[test]
fn at_self_check_passes_and_embeds_in_json() {
    let out = hopfgal(&["at", "--n", "64", "--self-check"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("overall: pass\n"));

    let out = hopfgal(&[
        "at",
        "--n",
        "3",
        "--k",
        "5",
        "--self-check",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["self_check"]["overall"], "pass");
}

#[test]
fn at_rejects_conflicting_selections() {
    let out = hopfgal(&["at", "--n", "1", "--k", "0", "--k-range", "0..1"]);
    assert_eq!(code(&out), 2);
    let out = hopfgal(&["at", "--n", "1", "--k-range", "3..1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn phi_on_the_sweedler_algebra_matches_golden_output() {
    let path = fixture("sweedler_yd.json");
    assert_eq!(
        stdout(&hopfgal(&["phi", &path])),
        golden("sweedler_yd_phi.txt")
    );
    assert_eq!(
        stdout(&hopfgal(&["phi", "--format", "json", &path])),
        golden("sweedler_yd_phi.json")
    );
}

#[test]
fn phi_is_the_flip_for_commutative_fixtures() {
    let out = hopfgal(&["phi", "--format", "json", &fixture("qsqrt2.json")]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = &doc["matrices"][0]["entries"];
    assert_eq!(
        *entries,
        serde_json::json!([[0, 0, "1"], [1, 2, "1"], [2, 1, "1"], [3, 3, "1"]])
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["bundle".to_string(), fixture("graded_toy.json")],
        vec!["check".into(), "module".into(), fixture("sweedler_yd.json")],
        vec![
            "phi".into(),
            "--format".into(),
            "json".into(),
            fixture("group_z4.json"),
        ],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (hopfgal(&args), hopfgal(&args));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}
