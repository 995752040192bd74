use adaptt_core::inductive::{builtin_descs, tree_desc};
use adaptt_core::ErrorKind;
use adaptt_surface::{elaborate, elaborate_with, parse};

fn corpus(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn prelude() -> String {
    corpus("prelude.adt")
}

fn with_prelude(name: &str) -> (adaptt_surface::Program, Vec<adaptt_surface::Diagnostic>) {
    let (base, diags) = run(&prelude());
    assert!(diags.is_empty());
    elaborate_with(base.sig, &parse(&corpus(name)).unwrap())
}

#[test]
fn corpus_programs_check() {
    for name in ["computation.adt", "functions.adt"] {
        let (prog, diags) = with_prelude(name);
        assert!(diags.is_empty(), "{name}: {diags:?}");
        for a in &prog.asserts {
            assert!(a.holds, "{name}:{}", a.span);
        }
    }
    let (prog, _) = with_prelude("computation.adt");
    assert_eq!(prog.asserts.len(), 11);
}

#[test]
fn broken_file_reports_a_mismatch() {
    let (_, diags) = run(&corpus("broken.adt"));
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].render("broken.adt"), "ERROR ClassifierMismatch broken.adt:8:7 expected B got A");
}

fn run(src: &str) -> (adaptt_surface::Program, Vec<adaptt_surface::Diagnostic>) {
    elaborate(&parse(src).unwrap())
}

#[test]
fn prelude_matches_builtin_descriptions() {
    let (prog, diags) = run(&prelude());
    assert!(diags.is_empty(), "{diags:?}");
    let mut want = builtin_descs();
    want.push(tree_desc());
    let got: Vec<_> = prog.sig.descs.values().cloned().collect();
    assert_eq!(got, want);
}

#[test]
fn list_declaration_alone() {
    let (prog, diags) = run("data List (X : Ty+) { nil : List X ; cons : (x : X)(xs : List X) -> List X }");
    assert!(diags.is_empty(), "{diags:?}");
    assert_eq!(prog.sig.descs["List"], adaptt_core::inductive::list_desc());
}

#[test]
fn negative_occurrence_is_rejected() {
    let src = format!("{}\ndata Bad (X : Ty+) (Y : (x : X) -> Ty-) {{ bad : (f : (Bad X Y -> X)) -> Bad X Y }}", prelude());
    let (_, diags) = run(&src);
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].code, ErrorKind::IllFormedDescription.code());
    assert_eq!(diags[0].span.line, prelude().lines().count() + 2);
}

const POINTS: &str = "type A ;\ntype B ;\ndata One { one : One }\npostulate adapter a0 : One => A ;\npostulate adapter ab : A => B ;\n";

#[test]
fn checks_casts_and_asserts() {
    let src = format!(
        "{}{POINTS}\
         def a : A = one <| a0 ;\n\
         def k : Nat -> List A = \\x. List::nil A ;\n\
         check List::cons A a (List::nil A) <| List[ab] : List B ;\n\
         assert List::cons A a (List::nil A) <| List[ab] == List::cons B (a <| ab) (List::nil B) : List B ;\n\
         assert k <| Pi[id > {{x. List[ab]}}] == \\y. List::nil B : Nat -> List B ;\n\
         normalize Vec::cons A a zero (Vec::nil A) <| Vec[ab > suc zero] ;\n\
         normalize Vec::cons A zero zero (Vec::nil A) ;\n",
        prelude()
    );
    let (prog, diags) = run(&src);
    assert_eq!(diags.len(), 1, "{diags:?}");
    assert_eq!(diags[0].code, "ClassifierMismatch");
    assert_eq!(prog.defs.len(), 2);
    assert_eq!(prog.checks.len(), 1);
    assert_eq!(prog.asserts.len(), 2);
    assert!(prog.asserts.iter().all(|a| a.holds));
    assert_eq!(prog.normals.len(), 1);
}

#[test]
fn variance_errors_surface() {
    let (_, diags) = run("type A ;\ncheck \\x. x : A -> A ;\n");
    assert_eq!(diags.len(), 1);
    assert_eq!(diags[0].code, "VarianceViolation");
    assert_eq!((diags[0].span.line, diags[0].span.col), (2, 11));
}

#[test]
fn classifier_mismatch_is_located() {
    let (_, diags) = run(&format!("{POINTS}data Box (X : Ty+) {{ box : (x : X) -> Box X }}\ncheck box A (one <| a0) : Box B ;\n"));
    assert_eq!(diags.len(), 1, "{diags:?}");
    assert_eq!(diags[0].code, "ClassifierMismatch");
    assert_eq!((diags[0].span.line, diags[0].span.col), (7, 7));
}

#[test]
fn elaborated_corpus_terms_reprint_and_recheck() {
    for name in ["computation.adt", "functions.adt"] {
        let (prog, _) = with_prelude(name);
        let el = adaptt_surface::elab::Elab::new(prog.sig.clone());
        let sc = adaptt_surface::elab::Scope::default();
        let empty = adaptt_core::Ctx::empty();
        for a in &prog.asserts {
            for t in [&a.lhs, &a.rhs, &prog.sig.nf_tm(&a.lhs)] {
                let text = prog.sig.show_tm(&empty, t);
                let e = adaptt_surface::parse_expr(&text).unwrap();
                let back = el.check(&sc, &e, &a.ty).unwrap_or_else(|d| panic!("{d}: {text}"));
                prog.sig.check_tm(&empty, &back, &a.ty).unwrap();
                assert!(prog.sig.conv_tm(&back, t), "{text}");
            }
        }
    }
}
