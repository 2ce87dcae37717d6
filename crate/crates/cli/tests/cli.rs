use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn relsyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relsyl")).args(args).env_remove("CI").output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = relsyl(&all);
    (code(&out), serde_json::from_str(&stdout(&out)).expect("json output"))
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn sat_prints_a_witness() {
    let (c, v) = json(&["sat", "EE(a,b)[r] & !AA(a,b)[r]", "--bound", "3"]);
    assert_eq!(c, 0);
    assert_eq!(v["verdict"], "Sat");
    assert_eq!(v["model"]["domain"].as_array().unwrap().len(), 2);
    let (c, v) = json(&["sat", "EE(a,b)[r] & AA(a,b)[-r]", "--bound", "3"]);
    assert_eq!((c, v["verdict"].as_str()), (1, Some("UnsatUpTo")));
}

#[test]
fn bounded_validity_is_affirmative() {
    let out = relsyl(&["valid", "EA(a,b)[r] -> AE(b,a)[r^]", "--bound", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("NoCountermodelUpTo(4)"));
    let (c, v) = json(&["valid", "AE(a,b)[r] -> EE(a,b)[r]"]);
    assert_eq!((c, v["verdict"].as_str()), (1, Some("CountermodelFound")));
    assert_eq!(v["model"]["domain"].as_array().unwrap().len(), 0);
}

#[test]
fn entails_with_premises() {
    let (c, _) = json(&["entails", "-p", "AA(a,b)[r]", "-p", "EE(c,a)[1]", "EE(a,b)[r] | b = 0"]);
    assert_eq!(c, 0);
    let (c, _) = json(&["entails", "-p", "EE(a,b)[r]", "AA(a,b)[r]"]);
    assert_eq!(c, 1);
}

#[test]
fn eval_and_minimize_use_model_files() {
    let model = file(
        r#"{"domain": ["x", "y", "z"], "set": {"a": ["x", "y"], "b": ["z"]}, "rel": {"r": [["x", "z"], ["y", "z"]]}}"#,
    );
    assert_eq!(code(&relsyl(&["eval", "AA(a,b)[r]", "--model", path(&model)])), 0);
    assert_eq!(code(&relsyl(&["eval", "EE(b,a)[r]", "--model", path(&model)])), 1);
    let (c, v) = json(&["minimize", "EE(a,b)[r] & !a <= b", "--model", path(&model)]);
    assert_eq!(c, 0);
    assert!(v["model"]["domain"].as_array().unwrap().len() <= 4);
    assert_eq!(code(&relsyl(&["minimize", "AE(a,b)[r]", "--model", path(&model)])), 2);
    let bad = file(r#"{"domain": ["x"], "set": {"a": ["q"]}}"#);
    assert_eq!(code(&relsyl(&["eval", "a <= b", "--model", path(&bad)])), 2);
}

#[test]
fn proof_files() {
    let good = file("mode: theorem\n1: AA(a,b)[r] -> (AA(a,b)[r] | EE(a,b)[r]) ; taut\n");
    assert_eq!(code(&relsyl(&["check-proof", path(&good)])), 0);
    let bad = file("mode: theorem\n1: AA(a,b)[r] ; taut\n");
    let (c, v) = json(&["check-proof", path(&bad)]);
    assert_eq!((c, v["verdict"].as_str(), v["line"].as_u64()), (1, Some("Rejected"), Some(1)));
    let malformed = file("1: a <= a ; magic\n");
    assert_eq!(code(&relsyl(&["check-proof", path(&malformed)])), 2);
}

#[test]
fn corpus_commands() {
    let out = relsyl(&["corpus", "run"]);
    assert_eq!(code(&out), 0);
    let (_, list) = json(&["corpus", "list"]);
    let names: Vec<&str> = list.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.len() >= 14);
    // a shown proof is a valid proof file
    let shown = relsyl(&["corpus", "show", names[0]]);
    let text = stdout(&shown);
    let proof = file(text.split("\nresult: ").next().unwrap());
    assert_eq!(code(&relsyl(&["check-proof", path(&proof)])), 0);
    assert_eq!(code(&relsyl(&["corpus", "show", "no-such-entry"])), 2);
}

#[test]
fn translate_and_parse() {
    let (c, v) = json(&["translate", "EE(a,b)[r*s^]"]);
    assert_eq!(c, 0);
    assert_eq!(v["bml"], "<1>(a & <r*s^>b)");
    let (c, v) = json(&["parse", "AE(a,b)[r] & a = b"]);
    assert_eq!((c, v["fragment"].as_str()), (0, Some("Full")));
    assert_eq!(code(&relsyl(&["parse", "EE(a,b)"])), 2);
    let formula = file("# comment\nEE(a,b)[r]\n");
    let arg = format!("@{}", path(&formula));
    assert_eq!(code(&relsyl(&["parse", &arg])), 0);
}

#[test]
fn copy_build_reports_the_contract() {
    let pre = file(
        r#"{"points": ["u", "v"], "kappa": 3, "conv": {"1": 2, "2": 1, "3": 3},
            "r0": {"1": [["u", "v"], ["u", "u"]], "2": [["v", "u"], ["u", "u"]], "3": [["u", "u"], ["v", "v"], ["u", "v"], ["v", "u"]]}}"#,
    );
    let (c, v) = json(&["copy-build", path(&pre)]);
    assert_eq!(c, 0, "{v}");
    assert_eq!(v["frame"]["w"].as_array().unwrap().len(), 14);
    assert_eq!(v["contract"]["checks"].as_array().unwrap().len(), 5);
    let a = stdout(&relsyl(&["copy-build", path(&pre), "--random", "--seed", "9"]));
    let b = stdout(&relsyl(&["copy-build", path(&pre), "--random", "--seed", "9"]));
    assert_eq!(a, b);
    let invalid = file(r#"{"points": ["u"], "kappa": 1, "conv": {"1": 1}, "r0": {"1": [["u", "w"]]}}"#);
    assert_eq!(code(&relsyl(&["copy-build", path(&invalid)])), 2);
}

#[test]
fn fuzz_is_deterministic_and_needs_a_seed_in_ci() {
    let args = ["fuzz", "--instances", "300", "--seed", "5"];
    let a = relsyl(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, relsyl(&args).stdout);
    let (c, v) = json(&["fuzz", "--formula", "AA(a,b)[r] -> EE(a,b)[r]", "--seed", "1", "--instances", "200"]);
    assert_eq!((c, v["falsified"].as_bool()), (1, Some(true)));
    assert_eq!(code(&relsyl(&["--ci", "fuzz", "--instances", "10"])), 2);
    assert_eq!(code(&relsyl(&["--ci", "fuzz", "--instances", "10", "--seed", "3"])), 0);
    assert_eq!(code(&relsyl(&["fuzz", "--scheme", "nope", "--seed", "1"])), 2);
}

#[test]
fn from_english_gives_both_readings() {
    let lex = file(r#"{"nouns": {"man": "m", "animal": "n"}, "verbs": {"likes": "l"}}"#);
    let (c, v) = json(&["from-english", "Every man likes some animal", "--lexicon", path(&lex)]);
    assert_eq!(c, 0);
    assert_eq!(v["sws"], "AE(m,n)[l]");
    assert_eq!(v["ows"], "EA(n,m)[l^]");
    let (_, v) = json(&["from-english", "No man likes every animal.", "--lexicon", path(&lex), "--reading", "sws"]);
    assert_eq!(v["sws"], "!EA(m,n)[l]");
    assert_eq!(code(&relsyl(&["from-english", "Every cat likes some animal", "--lexicon", path(&lex)])), 2);
}

#[test]
fn config_file_sets_the_bound() {
    let cfg = file("default_bound = 1\n");
    // two points are needed
    let f = "EE(a,b)[r] & !EE(a,a)[r]";
    let (c, v) = json(&["--config", path(&cfg), "sat", f]);
    assert_eq!((c, v["bound"].as_u64()), (1, Some(1)));
    let (c, _) = json(&["--config", path(&cfg), "--bound", "2", "sat", f]);
    assert_eq!(c, 0);
    let broken = file("default_bound = \"x\"\n");
    assert_eq!(code(&relsyl(&["--config", path(&broken), "sat", f])), 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["sat", "AE(a,b)[r] & AE(b,a)[-r] & EE(a,a)[1]"][..],
        &["valid", "AA(a,b)[r*s] -> AA(a,b)[r]"],
        &["corpus", "list"],
    ] {
        assert_eq!(relsyl(args).stdout, relsyl(args).stdout);
    }
}
