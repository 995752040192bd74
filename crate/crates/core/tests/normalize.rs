use adaptt_core::gen::*;

#[test]
fn normalization_is_idempotent_and_preserves_types() {
    let mut g = Gen::new(42);
    let amb = rich_ambient();
    let mut seen = 0;
    for _ in 0..400 {
        let ty = g.closed_ty(2);
        let Some(t) = g.tm(&amb, &ty, 3) else { continue };
        let n = g.sig.nf_tm(&t);
        assert_eq!(g.sig.nf_tm(&n), n, "{}", g.sig.show_tm(&amb, &t));
        g.sig.check_tm(&amb, &n, &ty).unwrap_or_else(|e| panic!("{e}: {} ~> {}", g.sig.show_tm(&amb, &t), g.sig.show_tm(&amb, &n)));
        assert!(g.sig.conv_tm(&t, &n));
        seen += 1;
    }
    assert!(seen > 300);
}

#[test]
fn adapter_normal_forms_are_stable() {
    let mut g = Gen::new(43);
    for _ in 0..400 {
        let ty = g.closed_ty(2);
        let (f, other) = g.ad(&ty, true, 2);
        let n = g.sig.nf_ad(&f);
        assert_eq!(g.sig.nf_ad(&n), n);
        g.sig.check_ad(&adaptt_core::Ctx::empty(), &n, &ty, &other).unwrap();
    }
}

#[test]
fn distinct_postulates_are_not_convertible() {
    let g = Gen::new(0);
    let amb = finite_ambient();
    let t = adaptt_core::Tm::Var(5);
    let ab = adaptt_core::Ad::post("ab", adaptt_core::Ty::base("A"), adaptt_core::Ty::base("B"));
    let aa = adaptt_core::Ad::post("aa", adaptt_core::Ty::base("A"), adaptt_core::Ty::base("A"));
    assert!(!g.sig.conv_tm(&adaptt_core::Tm::cast(t.clone(), aa.clone()), &t));
    assert!(!g.sig.conv_ad(&ab, &adaptt_core::Ad::then(aa, ab.clone())));
    g.sig.check_ctx(&amb).unwrap();
}
