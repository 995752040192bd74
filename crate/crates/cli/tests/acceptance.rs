//! One line per acceptance criterion, then a non-zero exit if any failed.

use adaptt_core::inductive::{builtin_descs, tree_desc};
use adaptt_core::laws::{dualization, functor_laws, naturality, pi_functoriality};
use adaptt_core::{golden, trace};
use adaptt_model::oracle;
use adaptt_surface::{elaborate, parse, pretty};
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

const TABLE_SECONDS: f64 = 1.0;
const TABLE_ROWS: &[&str] = &["List.nil", "List.cons", "Vec.nil", "Vec.cons", "Sum.inl", "Sum.inr", "W.sup", "Id.refl"];
const EXTRA_DATATYPE: &str = "Tree";
const LAW_TRIPLES: usize = 200;
const LAW_SECONDS: f64 = 10.0;
const NATURALITY_INSTANCES: usize = 100;
const PI_INSTANCES: usize = 20;
const ORACLE_PAIRS: usize = 500;
const ORACLE_BINDINGS: usize = 3;
const ORACLE_SIZES: &[usize] = &[1, 2, 3];
const ORACLE_AGREEMENT: f64 = 1.0;
const DUAL_CASES: usize = 1000;

const SEED: u64 = 0xacce;

struct Verdict {
    ok: bool,
    line: String,
}

fn verdict(ok: bool, line: String) -> Verdict {
    Verdict { ok, line }
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn constructor_table() -> Verdict {
    let t0 = Instant::now();
    let out = golden::run_all();
    let secs = t0.elapsed().as_secs_f64();
    let passed = out.iter().filter(|o| o.ok).count();
    let names: BTreeSet<&str> = out.iter().map(|o| o.name).collect();
    let covered = TABLE_ROWS.iter().all(|r| names.contains(r)) && names.iter().any(|n| n.starts_with(EXTRA_DATATYPE));
    let failed: Vec<String> = out.iter().filter(|o| !o.ok).map(|o| format!("{}: {}", o.name, o.detail)).collect();
    verdict(
        covered && failed.is_empty() && secs < TABLE_SECONDS,
        format!("constructor table: {passed}/{} rows convertible, {secs:.3} s (limit {TABLE_SECONDS} s){}", out.len(), tail(&failed)),
    )
}

fn tail(failures: &[String]) -> String {
    match failures.first() {
        Some(f) => format!("; first failure {f}"),
        None => String::new(),
    }
}

fn functor() -> Verdict {
    let t0 = Instant::now();
    let rep = functor_laws(SEED, LAW_TRIPLES);
    let secs = t0.elapsed().as_secs_f64();
    verdict(
        rep.passed() && rep.checked >= 4 * LAW_TRIPLES && secs < LAW_SECONDS,
        format!(
            "functor laws: {} equations on {} triples, {} failures, {secs:.2} s (limit {LAW_SECONDS} s){}",
            rep.checked,
            rep.checked / 4,
            rep.failures.len(),
            tail(&rep.failures)
        ),
    )
}

fn natural() -> Verdict {
    let rep = naturality(SEED, NATURALITY_INSTANCES);
    verdict(
        rep.passed() && rep.checked >= NATURALITY_INSTANCES,
        format!("naturality: {} instances, {} failures{}", rep.checked, rep.failures.len(), tail(&rep.failures)),
    )
}

fn pi() -> Verdict {
    let rep = pi_functoriality(SEED, PI_INSTANCES);
    verdict(
        rep.passed() && rep.checked >= PI_INSTANCES,
        format!("function adapters compose up to eta: {} instances, {} failures{}", rep.checked, rep.failures.len(), tail(&rep.failures)),
    )
}

fn model() -> Verdict {
    let bindings = oracle::gen_bindings(SEED);
    let sizes: BTreeSet<usize> = bindings.iter().map(|b| b.types["A"].len()).collect();
    let rep = oracle::run(SEED, ORACLE_PAIRS + ORACLE_PAIRS / 5);
    let ok = rep.agreed >= ORACLE_PAIRS
        && rep.bindings >= ORACLE_BINDINGS
        && ORACLE_SIZES.iter().all(|n| sizes.contains(n))
        && rep.disagreed.is_empty()
        && rep.agreement() >= ORACLE_AGREEMENT;
    verdict(
        ok,
        format!(
            "set model: {} of {} convertible pairs agree under {} bindings (|A| in {:?}), {} disagree, {} unevaluable, agreement {:.1}%{}",
            rep.agreed,
            rep.pairs,
            rep.bindings,
            sizes,
            rep.disagreed.len(),
            rep.skipped.len(),
            100.0 * rep.agreement(),
            tail(&rep.disagreed)
        ),
    )
}

fn dual() -> Verdict {
    let rep = dualization(SEED, DUAL_CASES);
    verdict(
        rep.passed() && rep.checked >= DUAL_CASES,
        format!("dualization: {} cases, {} failures{}", rep.checked, rep.failures.len(), tail(&rep.failures)),
    )
}

fn cli_trace(args: &[&str], env_var: bool) -> Vec<String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_adaptt"));
    cmd.current_dir(root()).args(args);
    if env_var {
        cmd.env("ADAPTT_TRACE", "1");
    }
    let out = cmd.output().expect("run adaptt");
    String::from_utf8_lossy(&out.stderr).lines().map(str::to_string).collect()
}

/// Rule names seen while rerunning every suite with tracing on, plus
/// the command line's own trace output.
fn trace_audit() -> Verdict {
    let docs = std::fs::read_to_string(root().join("docs/rules.md")).unwrap_or_default();
    let mut names: BTreeSet<String> = BTreeSet::new();
    let mut malformed = Vec::new();
    let mut lines = 0usize;
    let mut absorb = |ls: Vec<String>, names: &mut BTreeSet<String>| {
        for l in ls {
            lines += 1;
            match trace::parse_line(&l) {
                Some(n) => {
                    names.insert(n.to_string());
                }
                None => malformed.push(l),
            }
        }
    };
    absorb(trace::collect(golden::run_all).1, &mut names);
    absorb(trace::collect(|| functor_laws(SEED, LAW_TRIPLES)).1, &mut names);
    absorb(trace::collect(|| naturality(SEED, NATURALITY_INSTANCES)).1, &mut names);
    absorb(trace::collect(|| pi_functoriality(SEED, PI_INSTANCES)).1, &mut names);
    absorb(trace::collect(|| oracle::gen_pairs(SEED, ORACLE_PAIRS)).1, &mut names);
    absorb(trace::collect(|| dualization(SEED, DUAL_CASES)).1, &mut names);
    absorb(cli_trace(&["--trace", "selftest"], false), &mut names);
    let prelude = "corpus/prelude.adt";
    absorb(cli_trace(&["check", "--prelude", prelude, "corpus/computation.adt", "corpus/functions.adt"], true), &mut names);
    absorb(cli_trace(&["--trace", "norm", "--prelude", prelude, "corpus/functions.adt"], false), &mut names);
    let unregistered: Vec<&String> = names.iter().filter(|n| !trace::is_registered(n)).collect();
    let undocumented: Vec<&String> = names.iter().filter(|n| !docs.contains(&format!("`{n}`"))).collect();
    let ok = lines > 0 && malformed.is_empty() && unregistered.is_empty() && undocumented.is_empty();
    verdict(
        ok,
        format!(
            "trace audit: {lines} steps, {} distinct rules, {} unregistered {unregistered:?}, {} undocumented {undocumented:?}, {} malformed",
            names.len(),
            unregistered.len(),
            undocumented.len(),
            malformed.len()
        ),
    )
}

fn surface() -> Verdict {
    let dir = root().join("corpus");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map(|d| d.filter_map(|e| e.ok()).map(|e| e.path()).filter(|p| p.extension().is_some_and(|x| x == "adt")).collect())
        .unwrap_or_default();
    files.sort();
    let mut problems = Vec::new();
    for f in &files {
        let src = std::fs::read_to_string(f).unwrap_or_default();
        let name = f.file_name().unwrap().to_string_lossy().to_string();
        match parse(&src) {
            Ok(ds) => {
                let once = pretty(&ds);
                match parse(&once) {
                    Ok(again) if again == ds && pretty(&again) == once => {}
                    _ => problems.push(format!("{name} is not a fixed point")),
                }
            }
            Err(d) => problems.push(format!("{name}: {d}")),
        }
    }
    let prelude = std::fs::read_to_string(dir.join("prelude.adt")).unwrap_or_default();
    let (prog, diags) = elaborate(&parse(&prelude).unwrap_or_default());
    let mut want = builtin_descs();
    want.push(tree_desc());
    let got: Vec<_> = prog.sig.descs.values().cloned().collect();
    let same = diags.is_empty() && got == want;
    if !same {
        problems.push("prelude descriptions differ from the builtin ones".into());
    }
    verdict(
        problems.is_empty() && files.len() >= 3,
        format!(
            "surface round trip: {} corpus files, {} prelude datatypes equal to builtins{}",
            files.len(),
            if same { got.len() } else { 0 },
            tail(&problems)
        ),
    )
}

fn main() {
    let checks: [(&str, fn() -> Verdict); 8] = [
        ("constructor-table", constructor_table),
        ("functor-laws", functor),
        ("naturality", natural),
        ("pi-functoriality", pi),
        ("set-model", model),
        ("dualization", dual),
        ("trace-audit", trace_audit),
        ("surface-round-trip", surface),
    ];
    let mut failed = 0;
    for (i, (key, f)) in checks.iter().enumerate() {
        let v = f();
        if !v.ok {
            failed += 1;
        }
        println!("{} {}. [{key}] {}", if v.ok { "PASS" } else { "FAIL" }, i + 1, v.line);
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
