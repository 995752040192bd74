use adaptt_core::gen::{gen_sig, numeral};
use adaptt_core::golden::{golden_sig, rows, ty_arg};
use adaptt_core::*;
use adaptt_model::oracle::{agrees, environments, Pair};
use adaptt_model::{Binding, Env, Model, ModelError};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn golden_binding() -> Binding {
    Binding::from_json(
        r#"{
        "types": {"A": ["a0", "a1"], "A'": ["c0", "c1", "c2"], "B": ["b0", "b1"], "B'": ["d0"]},
        "adapters": {
            "f": {"A->A'": {"a0": "c2", "a1": "c0"}},
            "g": {"B->B'": {"b0": "d0", "b1": "d0"}},
            "h": {"B'->B": {"d0": "b1"}}
        }
    }"#,
    )
    .unwrap()
}

fn small_binding() -> Binding {
    Binding::from_json(
        r#"{
        "types": {"A": ["a0", "a1"], "B": ["b0", "b1", "b2"], "C": ["c0"]},
        "adapters": {
            "ab": {"A->B": {"a0": "b2", "a1": "b0"}},
            "ba": {"B->A": {"b0": "a1", "b1": "a1", "b2": "a0"}},
            "bc": {"B->C": {"b0": "c0", "b1": "c0", "b2": "c0"}},
            "ca": {"C->A": {"c0": "a0"}},
            "aa": {"A->A": {"a0": "a1", "a1": "a0"}}
        }
    }"#,
    )
    .unwrap()
}

fn list(x: Ty) -> Ty {
    Ty::Ind { desc: "List".into(), params: vec![ty_arg(Dir::Pos, x)], indices: vec![] }
}

fn list_ad(f: Ad, s: Ty, t: Ty) -> Ad {
    Ad::Ind {
        desc: "List".into(),
        trans: Trans { comps: vec![TransComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![], src: s, tgt: t, ad: f }] },
    }
}

/// Well-founded trees with inhabited branching are empty, so the second
/// binding leaves the branching types empty.
fn leafy_binding() -> Binding {
    Binding::from_json(
        r#"{
        "types": {"A": ["a0", "a1"], "A'": ["c0", "c1"], "B": [], "B'": []},
        "adapters": {"f": {"A->A'": {"a0": "c1", "a1": "c1"}}, "g": {"B->B'": {}}, "h": {"B'->B": {}}}
    }"#,
    )
    .unwrap()
}

#[test]
fn constructor_table_holds_in_the_model() {
    let sig = golden_sig();
    let models = [Model::new(&sig, &golden_binding()).unwrap(), Model::new(&sig, &leafy_binding()).unwrap()];
    let mut rng = StdRng::seed_from_u64(3);
    for row in rows() {
        let mut seen = 0;
        for m in &models {
            let envs = environments(m, &row.ctx, &mut rng).unwrap();
            seen += envs.len();
            let p = Pair { kind: "row", lhs: row.lhs.clone(), rhs: row.rhs.clone(), ty: row.ty.clone() };
            assert_eq!(agrees(m, &envs, &p), Ok(true), "{}", row.name);
        }
        assert!(seen > 0, "{}", row.name);
    }
}

#[test]
fn list_adapter_maps_elements() {
    let sig = gen_sig();
    let m = Model::new(&sig, &small_binding()).unwrap();
    let (la, lb) = (m.ty(&Env::default(), &list(Ty::base("A"))).unwrap(), m.ty(&Env::default(), &list(Ty::base("B"))).unwrap());
    let xs = m.parse_val("cons a0 (cons a1 (cons a0 nil))", &la).unwrap();
    let ys = m.cast(&Env::default(), &list_ad(Ad::post("ab", Ty::base("A"), Ty::base("B")), Ty::base("A"), Ty::base("B")), xs).unwrap();
    assert_eq!(ys.to_string(), "cons b2 (cons b0 (cons b2 nil))");
    assert!(m.eq(&ys, &m.parse_val("cons b2 (cons b0 (cons b2 nil))", &lb).unwrap(), &lb).unwrap());
}

#[test]
fn function_adapter_pre_and_post_composes() {
    let sig = gen_sig();
    let m = Model::new(&sig, &small_binding()).unwrap();
    let (a, b, c) = (Ty::base("A"), Ty::base("B"), Ty::base("C"));
    let ab = Ad::post("ab", a.clone(), b.clone());
    let ba = Ad::post("ba", b.clone(), a.clone());
    let bc = Ad::post("bc", b.clone(), c.clone());
    // (A -> B) adapted to (B -> C): precompose ba, postcompose bc.
    let pi = Ad::Pi { dom: Box::new(ba), cod: Box::new(bc), new_dom: Box::new(b.clone()) };
    let f = m.tm(&Env::default(), &Tm::lam(Tm::cast(Tm::Var(0), ab))).unwrap();
    let g = m.cast(&Env::default(), &pi, f).unwrap();
    for x in ["b0", "b1", "b2"] {
        assert_eq!(m.apply(&g, Val::Elem(x.into())).unwrap().to_string(), "c0");
    }
    let fun = m.ty(&Env::default(), &Ty::pi(b, c)).unwrap();
    assert_eq!(m.enumerate(&fun).unwrap().len(), 1);
    assert!(m.eq(&g, &m.enumerate(&fun).unwrap()[0], &fun).unwrap());
}

use adaptt_model::Val;

#[test]
fn inequivalent_terms_are_told_apart() {
    let sig = gen_sig();
    let m = Model::new(&sig, &small_binding()).unwrap();
    let ctx = Ctx::new(vec![Entry::Tm { dir: Dir::Pos, ty: Ty::base("A") }]);
    let envs = environments(&m, &ctx, &mut StdRng::seed_from_u64(0)).unwrap();
    assert_eq!(envs.len(), 2);
    let aa = Ad::post("aa", Ty::base("A"), Ty::base("A"));
    let once = Pair { kind: "swap", lhs: Tm::cast(Tm::Var(0), aa.clone()), rhs: Tm::Var(0), ty: Ty::base("A") };
    assert_eq!(agrees(&m, &envs, &once), Ok(false));
    let twice = Pair { kind: "swap", lhs: Tm::cast(Tm::Var(0), Ad::then(aa.clone(), aa)), rhs: Tm::Var(0), ty: Ty::base("A") };
    assert_eq!(agrees(&m, &envs, &twice), Ok(true));
}

#[test]
fn vectors_of_fixed_length_are_counted() {
    let sig = gen_sig();
    let m = Model::new(&sig, &small_binding()).unwrap();
    let vec2 = Ty::Ind { desc: "Vec".into(), params: vec![ty_arg(Dir::Pos, Ty::base("A"))], indices: vec![numeral(2)] };
    let t = m.ty(&Env::default(), &vec2).unwrap();
    assert_eq!(m.inhabitants(&t, 4, 100).unwrap().len(), 4);
    assert!(matches!(m.enumerate(&t), Err(ModelError::NonEnumerableDomain(_))));
}

#[test]
fn bindings_are_validated() {
    let sig = gen_sig();
    let mut b = small_binding();
    b.adapters["aa"]["A->A"].shift_remove("a1");
    assert!(matches!(Model::new(&sig, &b), Err(ModelError::BadBinding(_))));
    let mut b = small_binding();
    b.adapters["ab"]["A->B"]["a0"] = "c0".into();
    assert!(matches!(Model::new(&sig, &b), Err(ModelError::BadBinding(_))));
    let b = small_binding();
    assert_eq!(Binding::from_json(&b.to_json()).unwrap(), b);
}

#[test]
fn unbound_postulates_fail_only_when_reached() {
    let sig = gen_sig();
    let mut b = small_binding();
    b.adapters.shift_remove("ca");
    let m = Model::new(&sig, &b).unwrap();
    let c0 = Tm::cast(Tm::Var(0), Ad::post("ca", Ty::base("C"), Ty::base("A")));
    let env = Env::default().with_tm(Val::Elem("c0".into()));
    assert!(matches!(m.tm(&env, &c0), Err(ModelError::UnboundAdapter(_))));
    assert!(m.tm(&env, &Tm::Var(0)).is_ok());
}
