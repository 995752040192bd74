use adaptt_core::gen::{rich_ambient, Gen};
use adaptt_core::print::Printer;
use adaptt_core::Ctx;
use adaptt_surface::elab::{Elab, Scope};
use adaptt_surface::{parse, parse_expr, pretty};
use std::path::Path;

fn corpus() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let mut out: Vec<(String, String)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "adt"))
        .map(|p| (p.display().to_string(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

#[test]
fn corpus_is_a_fixed_point_of_parse_and_pretty() {
    let files = corpus();
    assert!(files.len() >= 3);
    for (name, src) in files {
        let ds = parse(&src).unwrap_or_else(|e| panic!("{name}: {e}"));
        let once = pretty(&ds);
        let again = parse(&once).unwrap_or_else(|e| panic!("{name}: {e}\n{once}"));
        assert_eq!(again, ds, "{name}");
        assert_eq!(pretty(&again), once, "{name}");
    }
}

fn scope(g: &Gen, ctx: &Ctx) -> Scope {
    let p = Printer::for_ctx(&g.sig, ctx);
    let (tms, tys) = p.names();
    Scope { ctx: ctx.clone(), tms: tms.to_vec(), tys: tys.to_vec() }
}

#[test]
fn printed_terms_elaborate_back() {
    let mut g = Gen::new(0x7e57);
    let amb = rich_ambient();
    let sc = scope(&g, &amb);
    let mut done = 0;
    for _ in 0..300 {
        let ty = g.closed_ty(2);
        let Some(t) = g.tm(&amb, &ty, 3) else { continue };
        let text = g.sig.show_tm(&amb, &t);
        let ty_text = g.sig.show_ty(&amb, &ty);
        let el = Elab::new(g.sig.clone());
        let e = parse_expr(&text).unwrap_or_else(|d| panic!("{d}: {text}"));
        let ety = el.ty(&sc, &parse_expr(&ty_text).unwrap()).unwrap_or_else(|d| panic!("{d}: {ty_text}"));
        assert!(g.sig.eq_ty(&ety, &ty), "{ty_text}");
        let back = el.check(&sc, &e, &ty).unwrap_or_else(|d| panic!("{d}: {text}"));
        g.sig.check_tm(&amb, &back, &ty).unwrap();
        assert!(g.sig.conv_tm(&back, &t), "{text}");
        done += 1;
    }
    assert!(done > 200, "{done}");
}

#[test]
fn printed_adapters_elaborate_back() {
    let mut g = Gen::new(0xada);
    let mut done = 0;
    for _ in 0..300 {
        let ty = g.closed_ty(2);
        let fwd = g.coin(0.5);
        let (f, other) = g.ad(&ty, fwd, 2);
        let (s, t) = if fwd { (ty, other) } else { (other, ty) };
        let text = g.sig.show_ad(&Ctx::empty(), &f);
        let el = Elab::new(g.sig.clone());
        let e = parse_expr(&text).unwrap_or_else(|d| panic!("{d}: {text}"));
        let sc = Scope::default();
        let (back, tgt) = el.ad_fwd(&sc, &e, &s).unwrap_or_else(|d| panic!("forward {d}: {text}"));
        assert!(g.sig.conv_ty(&tgt, &t), "{text}");
        assert!(g.sig.conv_ad(&back, &f), "{text}");
        let (back, src) = el.ad_bwd(&sc, &e, &t).unwrap_or_else(|d| panic!("backward {d}: {text}"));
        assert!(g.sig.conv_ty(&src, &s), "{text}");
        assert!(g.sig.conv_ad(&back, &f), "{text}");
        done += 1;
    }
    assert_eq!(done, 300);
}
