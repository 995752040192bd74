use adaptt_model::oracle::{gen_bindings, run};

#[test]
fn generated_bindings_cover_small_sizes() {
    let bs = gen_bindings(11);
    assert!(bs.len() >= 3);
    for n in 1..=3 {
        assert!(bs.iter().any(|b| b.types["A"].len() == n), "no binding with |A| = {n}");
    }
}

#[test]
fn convertible_pairs_denote_equal_values() {
    let rep = run(11, 600);
    println!(
        "pairs {} agreed {} disagreed {} skipped {} environments {}",
        rep.pairs,
        rep.agreed,
        rep.disagreed.len(),
        rep.skipped.len(),
        rep.environments
    );
    for d in rep.disagreed.iter().take(10) {
        println!("DISAGREE {d}");
    }
    for s in rep.skipped.iter().take(10) {
        println!("SKIP {s}");
    }
    assert!(rep.agreed >= 500);
    assert!(rep.disagreed.is_empty());
}
