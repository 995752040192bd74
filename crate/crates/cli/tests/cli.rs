use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn adaptt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adaptt")).current_dir(root()).env_remove("ADAPTT_TRACE").args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const PRELUDE: &str = "corpus/prelude.adt";

#[test]
fn selftest_prints_one_ok_per_row() {
    let o = adaptt(&["selftest"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().count() >= 9);
    assert!(out.lines().all(|l| l.starts_with("OK ")), "{out}");
    assert!(out.contains("OK W.sup") && out.contains("OK Id.refl"));
}

#[test]
fn derive_list_json() {
    let o = adaptt(&["derive", PRELUDE, "List", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains(r#""conclusion": "List[f] : List A => List B""#), "{out}");
    assert!(out.contains(r#""rhs": "List::cons B (x <| f) (xs <| List[f])""#), "{out}");
}

#[test]
fn derive_output_is_stable() {
    for name in ["List", "Vec", "W", "Id", "Tree"] {
        let a = stdout(&adaptt(&["derive", PRELUDE, name]));
        let b = stdout(&adaptt(&["derive", PRELUDE, name]));
        assert!(!a.is_empty());
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn derive_unknown_datatype_fails() {
    let o = adaptt(&["derive", PRELUDE, "Nope"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("UnknownName"));
}

#[test]
fn broken_file_exits_with_a_type_error() {
    let o = adaptt(&["check", "corpus/broken.adt"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).trim(), "ERROR ClassifierMismatch corpus/broken.adt:8:7 expected B got A");
}

#[test]
fn corpus_checks() {
    let o = adaptt(&["check", "--prelude", PRELUDE, "corpus/computation.adt", "corpus/functions.adt"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempdir();
    let f = dir.join("bad.adt");
    std::fs::write(&f, "type A\ntype B ;\n").unwrap();
    let o = adaptt(&["check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("ERROR ParseError "), "{}", stderr(&o));
    assert!(stderr(&o).contains("bad.adt:2:1"), "{}", stderr(&o));
}

#[test]
fn failing_assertions_are_conversion_errors() {
    let dir = tempdir();
    let f = dir.join("neq.adt");
    std::fs::write(
        &f,
        "type A ;\ndata One { one : One }\npostulate adapter a0 : One => A ;\npostulate adapter a1 : One => A ;\n\
         assert one <| a0 == one <| a1 : A ;\n",
    )
    .unwrap();
    let o = adaptt(&["check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ERROR NotConvertible"), "{}", stderr(&o));
    assert!(stderr(&o).contains("neq.adt:5:1 expected one <| a1 got one <| a0"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_four() {
    assert_eq!(adaptt(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(adaptt(&[]).status.code(), Some(4));
    assert_eq!(adaptt(&["check", "no/such/file.adt"]).status.code(), Some(4));
    assert_eq!(adaptt(&["--help"]).status.code(), Some(0));
}

#[test]
fn norm_expression_in_file_scope() {
    let o = adaptt(&["norm", "--prelude", PRELUDE, "corpus/functions.adt", "-e", "fst (p <| Sigma[ab > {x. id}])"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "one <| a0 <| ab : B");
    let o = adaptt(&["norm", "--prelude", PRELUDE, "corpus/functions.adt", "-e", "fst ("]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn norm_prints_the_files_normalize_declarations() {
    let o = adaptt(&["norm", "--prelude", PRELUDE, "corpus/functions.adt"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn model_agrees_on_the_corpus() {
    let o = adaptt(&["model", "--prelude", PRELUDE, "corpus/computation.adt", "--bindings", "corpus/computation.bindings.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("AGREE corpus/computation.adt:22:1 cons c0 (cons c0 nil)"), "{out}");
    assert!(out.contains("SKIP corpus/computation.adt:29:1 UnboundAdapter w0"), "{out}");
    assert!(out.trim_end().ends_with("10 agreed, 1 skipped"), "{out}");
    let o = adaptt(&["model", "--prelude", PRELUDE, "corpus/functions.adt", "--bindings", "corpus/functions.bindings.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("{b0 -> cons b2 nil, b1 -> cons b2 nil, b2 -> cons b2 nil}"));
}

#[test]
fn bad_bindings_are_usage_errors() {
    let dir = tempdir();
    let b = dir.join("b.json");
    std::fs::write(&b, r#"{"types": {"A": ["a0"]}, "adapters": {"a0": {"One->A": {}}}}"#).unwrap();
    let o = adaptt(&["model", "corpus/broken.adt", "--bindings", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = adaptt(&["model", "--prelude", PRELUDE, "corpus/functions.adt", "--bindings", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("BadBinding"), "{}", stderr(&o));
}

#[test]
fn trace_flag_and_variable_agree() {
    let a = adaptt(&["--trace", "selftest"]);
    let b = Command::new(env!("CARGO_BIN_EXE_adaptt")).current_dir(root()).env("ADAPTT_TRACE", "1").arg("selftest").output().unwrap();
    assert_eq!(stderr(&a), stderr(&b));
    assert!(stderr(&a).lines().all(|l| adaptt_core::trace::parse_line(l).is_some_and(adaptt_core::trace::is_registered)));
    assert!(stderr(&a).contains("RULE IND_AD_EQ AT "));
    assert!(stderr(&adaptt(&["selftest"])).is_empty());
}

fn tempdir() -> PathBuf {
    let d = std::env::temp_dir().join(format!("adaptt-cli-{}-{:?}", std::process::id(), std::thread::current().id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
