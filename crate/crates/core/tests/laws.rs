use adaptt_core::laws::*;

#[test]
fn functor_laws_hold_on_generated_triples() {
    let rep = functor_laws(0x5eed, 200);
    assert!(rep.passed(), "{:#?}", rep.failures);
    assert!(rep.checked >= 800, "only {} instances", rep.checked);
}

#[test]
fn naturality_holds() {
    let rep = naturality(0xa7, 100);
    assert!(rep.passed(), "{:#?}", rep.failures);
    assert!(rep.checked >= 200, "only {} instances", rep.checked);
}

#[test]
fn function_adapters_compose_up_to_eta() {
    let rep = pi_functoriality(0x91, 40);
    assert!(rep.passed(), "{:#?}", rep.failures);
    assert!(rep.checked >= 40, "only {} instances", rep.checked);
}

#[test]
fn dualization_is_an_involution() {
    let rep = dualization(0xd0, 1000);
    assert!(rep.passed(), "{:#?}", rep.failures);
    assert_eq!(rep.checked, 1000);
}
