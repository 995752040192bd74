//! Generated instances of the equational laws of the theory: functoriality
//! of the action on transformations, naturality, functoriality of Π up to
//! cast, and the involutions of dualization. Each checker returns a
//! report counting checked instances and describing failures.

use crate::functorial::TransE;
use crate::gen::{inferable, nat, rich_ambient, shift_down, Gen};
use crate::inductive::identity_spine;
use crate::subst::*;
use crate::syntax::*;

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Draw a target context with two composable transformations into it
/// and a type over it.
fn triple(g: &mut Gen, amb: &Ctx) -> Option<(Ctx, Ty, TransE, TransE)> {
    let delta = g.delta();
    let ty = g.open_ty(&delta, Dir::Pos, 2);
    g.sig.check_ty(&delta, &ty).ok()?;
    let mu = g.trans(amb, &delta)?;
    g.sig.check_trans(amb, &mu.trans(), &delta).ok()?;
    let nu = g.trans_after(amb, &delta, &mu)?;
    g.sig.check_trans(amb, &nu.trans(), &delta).ok()?;
    Some((delta, ty, mu, nu))
}

/// `t⟨id⟩ ≡ t`, `t⟨g ∘ f⟩ ≡ t⟨f⟩⟨g⟩`, `A⟦id⟧ ≡ id` and
/// `A⟦ν ∘ μ⟧ ≡ A⟦ν⟧ ∘ A⟦μ⟧` on `n` generated triples.
pub fn functor_laws(seed: u64, n: usize) -> Report {
    let mut g = Gen::new(seed);
    let amb = rich_ambient();
    let mut rep = Report::default();
    let mut tries = 0;
    while rep.checked < 4 * n && tries < 50 * n {
        tries += 1;
        let Some((delta, ty, mu, nu)) = triple(&mut g, &amb) else { continue };
        let sig = &g.sig;
        let (Ok(f), Ok(h)) = (sig.push_trans_ty(&ty, &mu), sig.push_trans_ty(&ty, &nu)) else { continue };
        let Ok(comp) = sig.vcomp(&nu, &mu) else { continue };
        let Ok(fh) = sig.push_trans_ty(&ty, &comp) else { continue };
        let src = sig.subst_ty_nf(&ty, &mu.src_subst());
        let tgt = sig.subst_ty_nf(&ty, &nu.tgt_subst());
        let Some(t) = g.tm(&amb, &src, 2).filter(inferable) else { continue };
        let sig = &g.sig;
        if sig.check_tm(&amb, &t, &src).is_err() {
            continue;
        }
        let show = |x: &Ad| sig.show_ad(&amb, x);
        rep.record(sig.check_ad(&amb, &fh, &src, &tgt).is_ok() && sig.conv_ad(&fh, &sig.compose_ad(&h, &f)), || {
            format!("action on composite: {} vs {} then {}", show(&fh), show(&f), show(&h))
        });
        let lhs = Tm::cast(t.clone(), sig.compose_ad(&h, &f));
        let rhs = Tm::cast(Tm::cast(t.clone(), f.clone()), h.clone());
        rep.record(sig.check_tm(&amb, &lhs, &tgt).is_ok() && sig.check_tm(&amb, &rhs, &tgt).is_ok() && sig.conv_tm(&lhs, &rhs), || {
            format!("cast by composite: {}", sig.show_tm(&amb, &lhs))
        });
        rep.record(sig.conv_tm(&Tm::cast(t.clone(), Ad::Id), &t), || format!("cast by identity: {}", sig.show_tm(&amb, &t)));
        let Some(spine) = g.subst(&amb, &delta) else { continue };
        let sig = &g.sig;
        let ok = sig
            .id_trans(&spine, &delta)
            .and_then(|m| sig.endpoints(&m))
            .and_then(|te| sig.push_trans_ty(&ty, &te))
            .map(|a| sig.conv_ad(&a, &Ad::Id))
            .unwrap_or(false);
        rep.record(ok, || format!("action of identity on {}", sig.show_ty(&delta, &ty)));
    }
    rep
}

/// Naturality of generated terms and adapters over a target context.
pub fn naturality(seed: u64, n: usize) -> Report {
    let mut g = Gen::new(seed);
    let amb = rich_ambient();
    let mut rep = Report::default();
    let (mut tms, mut ads) = (0, 0);
    let mut tries = 0;
    while (tms < n || ads < n) && tries < 50 * n {
        tries += 1;
        let delta = g.delta();
        let a = g.open_ty(&delta, Dir::Pos, 2);
        if g.sig.check_ty(&delta, &a).is_err() {
            continue;
        }
        let Some(mu) = g.trans(&amb, &delta) else { continue };
        if g.sig.check_trans(&amb, &mu.trans(), &delta).is_err() {
            continue;
        }
        if tms < n {
            if let Some(t) = g.tm(&delta, &a, 2).filter(|t| g.sig.check_tm(&delta, t, &a).is_ok()) {
                tms += 1;
                let sig = &g.sig;
                rep.record(sig.check_naturality_tm(&t, &a, &mu), || {
                    format!("term {} : {}", sig.show_tm(&delta, &t), sig.show_ty(&delta, &a))
                });
            }
        }
        if ads < n {
            let (f, b) = g.ad(&a, true, 2);
            let sig = &g.sig;
            if sig.check_ad(&delta, &f, &a, &b).is_ok() {
                ads += 1;
                rep.record(sig.check_naturality_ad(&f, &a, &b, &mu), || format!("adapter {}", sig.show_ad(&delta, &f)));
            }
        }
    }
    rep
}

/// Reindex an adapter over `ctx ▷ A` along `x ↦ x⟨d⟩` for `d : A' ⇒ A`.
fn precompose_var(cod: &Ad, d: &Ad) -> Ad {
    let s = Subst { shift_tm: 1, shift_ty: 0, comps: vec![SubComp::Tm { dir: Dir::Pos, tm: Tm::cast(Tm::Var(0), weaken_ad(d, 1, 0)) }] };
    subst_ad(cod, &s)
}

/// The composite of two function adapters, built componentwise.
pub fn pi_compose(p2: &Ad, p1: &Ad) -> Option<Ad> {
    let (Ad::Pi { dom: d1, cod: c1, .. }, Ad::Pi { dom: d2, cod: c2, new_dom }) = (p1, p2) else { return None };
    Some(Ad::Pi {
        dom: Box::new(Ad::then((**d2).clone(), (**d1).clone())),
        cod: Box::new(Ad::then(precompose_var(c1, d2), (**c2).clone())),
        new_dom: new_dom.clone(),
    })
}

/// `f⟨Π[a₁∘a₂ ▷ b₂∘b₁]⟩ ≡ f⟨Π[a₁ ▷ b₁]⟩⟨Π[a₂ ▷ b₂]⟩` on function variables,
/// decided by η.
pub fn pi_functoriality(seed: u64, n: usize) -> Report {
    let mut g = Gen::new(seed);
    let mut rep = Report::default();
    let mut tries = 0;
    while rep.checked < n && tries < 100 * n {
        tries += 1;
        let dependent = tries % 3 == 0;
        let pi = if dependent {
            let x = g.closed_ty(1);
            let vec = Ty::Ind {
                desc: "Vec".into(),
                params: vec![SubComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, arity: 0, ty: weaken_ty(&x, 1, 0) }],
                indices: vec![Tm::Var(0)],
            };
            Ty::pi(nat(), vec)
        } else {
            Ty::pi(g.closed_ty(1), weaken_ty(&g.closed_ty(1), 1, 0))
        };
        let (p1, mid, p2, end) = if dependent {
            let Ty::Pi(_, b) = &pi else { unreachable!() };
            let Ty::Ind { params, .. } = &**b else { unreachable!() };
            let x = shift_down(params[0].as_ty().unwrap());
            let (a1, y) = g.ad(&x, true, 1);
            let (a2, z) = g.ad(&y, true, 1);
            let vec_ad = |a: &Ad, s: &Ty, t: &Ty| Ad::Ind {
                desc: "Vec".into(),
                trans: Trans {
                    comps: vec![
                        TransComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![], src: weaken_ty(s, 1, 0), tgt: weaken_ty(t, 1, 0), ad: weaken_ad(a, 1, 0) },
                        TransComp::Tm { dir: Dir::Pos, ty: nat(), tm: Tm::Var(0) },
                    ],
                },
            };
            let vty = |t: &Ty| {
                Ty::pi(
                    nat(),
                    Ty::Ind {
                        desc: "Vec".into(),
                        params: vec![SubComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, arity: 0, ty: weaken_ty(t, 1, 0) }],
                        indices: vec![Tm::Var(0)],
                    },
                )
            };
            let p1 = Ad::Pi { dom: Box::new(Ad::Id), cod: Box::new(vec_ad(&a1, &x, &y)), new_dom: Box::new(nat()) };
            let p2 = Ad::Pi { dom: Box::new(Ad::Id), cod: Box::new(vec_ad(&a2, &y, &z)), new_dom: Box::new(nat()) };
            (p1, vty(&y), p2, vty(&z))
        } else {
            let (p1, mid) = g.ad(&pi, true, 1);
            let (p2, end) = g.ad(&mid, true, 1);
            (p1, mid, p2, end)
        };
        let Some(both) = pi_compose(&p2, &p1) else { continue };
        let amb = Ctx::new(vec![Entry::Tm { dir: Dir::Pos, ty: pi.clone() }]);
        let sig = &g.sig;
        if sig.check_ad(&amb, &p1, &pi, &mid).is_err() || sig.check_ad(&amb, &p2, &mid, &end).is_err() {
            continue;
        }
        let lhs = Tm::cast(Tm::Var(0), both.clone());
        let rhs = Tm::cast(Tm::cast(Tm::Var(0), p1.clone()), p2.clone());
        let typed = sig.check_ad(&amb, &both, &pi, &end).is_ok() && sig.check_tm(&amb, &lhs, &end).is_ok();
        rep.record(typed && sig.conv_tm(&lhs, &rhs), || format!("{} vs {}", sig.show_tm(&amb, &lhs), sig.show_tm(&amb, &rhs)));
    }
    rep
}

/// Dualizing twice is the identity on contexts, spines and
/// transformations, and identity spines have one component per entry,
/// preserve counts under dualization, and act as the identity.
pub fn dualization(seed: u64, n: usize) -> Report {
    let mut g = Gen::new(seed);
    let amb = rich_ambient();
    let mut rep = Report::default();
    let mut tries = 0;
    while rep.checked < n && tries < 50 * n {
        tries += 1;
        let delta = g.delta();
        let Some(mu) = g.trans(&amb, &delta) else { continue };
        let Some(spine) = g.subst(&amb, &delta) else { continue };
        let s = Subst::spine(spine);
        let twice = delta.dual().dual() == delta
            && s.dual().dual() == s
            && mu.trans().dual().dual() == mu.trans()
            && mu.dual().dual() == mu
            && dualize_ctx(&dualize_ctx(&delta, Dir::Neg), Dir::Neg) == delta;
        let id = identity_spine(&delta, 0);
        let dual_id = identity_spine(&delta.dual(), 0);
        let counts = id.len() == delta.len()
            && id.iter().filter(|c| c.as_tm().is_some()).count() == delta.tm_count()
            && dual_id.len() == id.len()
            && dual_id.iter().zip(&id).all(|(a, b)| a.dual() == *b)
            && delta.dual().tm_count() == delta.tm_count()
            && delta.dual().ty_count() == delta.ty_count();
        let a = g.open_ty(&delta, Dir::Pos, 2);
        let acts = subst_ty(&a, &Subst::spine(id)) == a;
        rep.record(twice && counts && acts, || {
            format!("context of {} entries: involution {twice}, counts {counts}, identity {acts}", delta.len())
        });
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for rep in [functor_laws(1, 20), naturality(2, 20), pi_functoriality(3, 10), dualization(4, 50)] {
            assert!(rep.passed(), "{:#?}", rep.failures);
            assert!(rep.checked > 0);
        }
    }
}
