//! Raw substitution application. Results are not normalized; callers
//! that need normal forms go through `normalize`.

use crate::error::{Error, ErrorKind};
use crate::syntax::*;

struct Applier<'a> {
    s: &'a Subst,
    tms: Vec<&'a Tm>,
    tys: Vec<(usize, &'a Ty)>,
}

impl<'a> Applier<'a> {
    fn new(s: &'a Subst) -> Self {
        let mut tms = Vec::new();
        let mut tys = Vec::new();
        for c in s.comps.iter().rev() {
            match c {
                SubComp::Tm { tm, .. } => tms.push(tm),
                SubComp::Ty { arity, ty, .. } => tys.push((*arity, ty)),
            }
        }
        Applier { s, tms, tys }
    }

    fn is_identity(&self) -> bool {
        self.s.comps.is_empty() && self.s.shift_tm == 0 && self.s.shift_ty == 0
    }

    fn tm(&self, t: &Tm, k: usize) -> Tm {
        match t {
            Tm::Var(i) => {
                if *i < k {
                    Tm::Var(*i)
                } else {
                    let j = i - k;
                    match self.tms.get(j) {
                        Some(u) => {
                            crate::trace::rule("SUB_VAR_TM");
                            shift(u, 0, k)
                        }
                        None => Tm::Var(j - self.tms.len() + self.s.shift_tm + k),
                    }
                }
            }
            Tm::Lam(b) => Tm::lam(self.tm(b, k + 1)),
            Tm::App(f, u) => Tm::app(self.tm(f, k), self.tm(u, k)),
            Tm::Pair(a, b) => Tm::pair(self.tm(a, k), self.tm(b, k)),
            Tm::Fst(p) => Tm::fst(self.tm(p, k)),
            Tm::Snd(p) => Tm::snd(self.tm(p, k)),
            Tm::Cast(t, f) => Tm::cast(self.tm(t, k), self.ad(f, k)),
            Tm::Constr { desc, con, params, args } => Tm::Constr {
                desc: desc.clone(),
                con: *con,
                params: params.iter().map(|c| self.comp(c, k)).collect(),
                args: args.iter().map(|a| self.tm(a, k)).collect(),
            },
        }
    }

    fn ty(&self, a: &Ty, k: usize) -> Ty {
        match a {
            Ty::Head { idx, inst } => {
                let inst: Vec<Tm> = inst.iter().map(|t| self.tm(t, k)).collect();
                match self.tys.get(*idx) {
                    Some((arity, body)) => {
                        crate::trace::rule("SUB_HD_TY");
                        let lifted = subst_ty_at(body, &Subst::weaken(k, 0), *arity);
                        subst_ty(&lifted, &Subst::terms(inst))
                    }
                    None => Ty::Head { idx: idx - self.tys.len() + self.s.shift_ty, inst },
                }
            }
            Ty::Pi(a, b) => Ty::pi(self.ty(a, k), self.ty(b, k + 1)),
            Ty::Sigma(a, b) => Ty::sigma(self.ty(a, k), self.ty(b, k + 1)),
            Ty::Ind { desc, params, indices } => Ty::Ind {
                desc: desc.clone(),
                params: params.iter().map(|c| self.comp(c, k)).collect(),
                indices: indices.iter().map(|t| self.tm(t, k)).collect(),
            },
            Ty::Base(n) => Ty::Base(n.clone()),
        }
    }

    fn comp(&self, c: &SubComp, k: usize) -> SubComp {
        match c {
            SubComp::Tm { dir, tm } => SubComp::Tm { dir: *dir, tm: self.tm(tm, k) },
            SubComp::Ty { dir, tel_dir, arity, ty } => {
                SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: *arity, ty: self.ty(ty, k + arity) }
            }
        }
    }

    fn ad(&self, f: &Ad, k: usize) -> Ad {
        match f {
            Ad::Id => Ad::Id,
            Ad::Comp(xs) => Ad::Comp(xs.iter().map(|x| self.ad(x, k)).collect()),
            Ad::Post { name, src, tgt } => Ad::Post { name: name.clone(), src: self.ty(src, k), tgt: self.ty(tgt, k) },
            Ad::Pi { dom, cod, new_dom } => Ad::Pi {
                dom: Box::new(self.ad(dom, k)),
                cod: Box::new(self.ad(cod, k + 1)),
                new_dom: Box::new(self.ty(new_dom, k)),
            },
            Ad::Sigma { fst, snd, new_cod } => Ad::Sigma {
                fst: Box::new(self.ad(fst, k)),
                snd: Box::new(self.ad(snd, k + 1)),
                new_cod: Box::new(self.ty(new_cod, k + 1)),
            },
            Ad::Ind { desc, trans } => Ad::Ind { desc: desc.clone(), trans: self.trans(trans, k) },
            Ad::Sym { name, inst, src, tgt } => Ad::Sym {
                name: name.clone(),
                inst: inst.iter().map(|t| self.tm(t, k)).collect(),
                src: self.ty(src, k),
                tgt: self.ty(tgt, k),
            },
        }
    }

    fn trans(&self, m: &Trans, k: usize) -> Trans {
        Trans {
            comps: m
                .comps
                .iter()
                .map(|c| match c {
                    TransComp::Tm { dir, ty, tm } => TransComp::Tm { dir: *dir, ty: ty.clone(), tm: self.tm(tm, k) },
                    TransComp::Ty { dir, tel_dir, tel, src, tgt, ad } => {
                        let n = tel.len();
                        TransComp::Ty {
                            dir: *dir,
                            tel_dir: *tel_dir,
                            tel: tel.clone(),
                            src: self.ty(src, k + n),
                            tgt: self.ty(tgt, k + n),
                            ad: self.ad(ad, k + n),
                        }
                    }
                })
                .collect(),
        }
    }
}

/// Shift free term variables (at or above `cutoff`) by `by`.
pub fn shift(t: &Tm, cutoff: usize, by: usize) -> Tm {
    if by == 0 {
        return t.clone();
    }
    subst_tm_at(t, &Subst::weaken(by, 0), cutoff)
}

pub fn subst_tm(t: &Tm, s: &Subst) -> Tm {
    subst_tm_at(t, s, 0)
}

pub fn subst_ty(a: &Ty, s: &Subst) -> Ty {
    subst_ty_at(a, s, 0)
}

pub fn subst_ad(f: &Ad, s: &Subst) -> Ad {
    subst_ad_at(f, s, 0)
}

pub fn subst_trans(m: &Trans, s: &Subst) -> Trans {
    let ap = Applier::new(s);
    if ap.is_identity() {
        return m.clone();
    }
    ap.trans(m, 0)
}

pub fn subst_comp(c: &SubComp, s: &Subst) -> SubComp {
    let ap = Applier::new(s);
    if ap.is_identity() {
        return c.clone();
    }
    ap.comp(c, 0)
}

/// Apply under `k` already-bound term variables.
pub fn subst_tm_at(t: &Tm, s: &Subst, k: usize) -> Tm {
    let ap = Applier::new(s);
    if ap.is_identity() {
        return t.clone();
    }
    ap.tm(t, k)
}

pub fn subst_ty_at(a: &Ty, s: &Subst, k: usize) -> Ty {
    let ap = Applier::new(s);
    if ap.is_identity() {
        return a.clone();
    }
    ap.ty(a, k)
}

pub fn subst_ad_at(f: &Ad, s: &Subst, k: usize) -> Ad {
    let ap = Applier::new(s);
    if ap.is_identity() {
        return f.clone();
    }
    ap.ad(f, k)
}

pub fn subst_tel(tel: &[Ty], s: &Subst) -> Vec<Ty> {
    tel.iter().enumerate().map(|(i, a)| subst_ty_at(a, s, i)).collect()
}

pub fn subst_inst(inst: &[Tm], s: &Subst) -> Vec<Tm> {
    inst.iter().map(|t| subst_tm(t, s)).collect()
}

/// Telescope adapters: the i-th adapter lives under the first i entries.
pub fn subst_tel_ad(ads: &[Ad], s: &Subst) -> Vec<Ad> {
    ads.iter().enumerate().map(|(i, f)| subst_ad_at(f, s, i)).collect()
}

pub fn weaken_ty(a: &Ty, tm: usize, ty: usize) -> Ty {
    subst_ty(a, &Subst::weaken(tm, ty))
}

pub fn weaken_tm(t: &Tm, tm: usize, ty: usize) -> Tm {
    subst_tm(t, &Subst::weaken(tm, ty))
}

pub fn weaken_ad(f: &Ad, tm: usize, ty: usize) -> Ad {
    subst_ad(f, &Subst::weaken(tm, ty))
}

pub fn weaken_comp(c: &SubComp, tm: usize, ty: usize) -> SubComp {
    subst_comp(c, &Subst::weaken(tm, ty))
}

/// Substitute the innermost term variable: `b[id ▷ u]`.
pub fn inst1_ty(b: &Ty, u: &Tm) -> Ty {
    subst_ty(b, &Subst::terms([u.clone()]))
}

pub fn inst1_tm(b: &Tm, u: &Tm) -> Tm {
    subst_tm(b, &Subst::terms([u.clone()]))
}

pub fn inst1_ad(b: &Ad, u: &Tm) -> Ad {
    subst_ad(b, &Subst::terms([u.clone()]))
}

/// Lift a substitution under `n` new term binders.
pub fn lift(s: &Subst, n: usize) -> Subst {
    let mut out = Subst {
        shift_tm: s.shift_tm,
        shift_ty: s.shift_ty,
        comps: s.comps.iter().map(|c| weaken_comp(c, n, 0)).collect(),
    };
    if out.comps.is_empty() && out.shift_tm == 0 && out.shift_ty == 0 {
        return out;
    }
    for i in 0..n {
        out.comps.push(SubComp::Tm { dir: Dir::Pos, tm: Tm::Var(n - 1 - i) });
    }
    out
}

/// `τ ∘ σ`, i.e. `x[τ ∘ σ] = x[τ][σ]`. The shifted tail of `τ` must land
/// beyond the explicit components of `σ`.
pub fn compose_sub(tau: &Subst, sigma: &Subst) -> Result<Subst, Error> {
    let d_tm = sigma.comps.iter().filter(|c| matches!(c, SubComp::Tm { .. })).count();
    let d_ty = sigma.comps.len() - d_tm;
    let comps: Vec<SubComp> = tau.comps.iter().map(|c| subst_comp(c, sigma)).collect();
    if tau.shift_tm >= d_tm && tau.shift_ty >= d_ty {
        return Ok(Subst {
            shift_tm: tau.shift_tm - d_tm + sigma.shift_tm,
            shift_ty: tau.shift_ty - d_ty + sigma.shift_ty,
            comps,
        });
    }
    if tau.shift_tm == 0 && tau.shift_ty == 0 {
        let mut all = sigma.comps.clone();
        all.extend(comps);
        return Ok(Subst { shift_tm: sigma.shift_tm, shift_ty: sigma.shift_ty, comps: all });
    }
    Err(Error::new(ErrorKind::ContextMismatch, "composite substitution is not a spine", ""))
}

/// Whether term variable `k` occurs free.
pub fn occurs_tm(t: &Tm, k: usize) -> bool {
    match t {
        Tm::Var(i) => *i == k,
        Tm::Lam(b) => occurs_tm(b, k + 1),
        Tm::App(a, b) | Tm::Pair(a, b) => occurs_tm(a, k) || occurs_tm(b, k),
        Tm::Fst(p) | Tm::Snd(p) => occurs_tm(p, k),
        Tm::Cast(t, f) => occurs_tm(t, k) || occurs_ad(f, k),
        Tm::Constr { params, args, .. } => params.iter().any(|c| occurs_comp(c, k)) || args.iter().any(|a| occurs_tm(a, k)),
    }
}

pub fn occurs_ty(a: &Ty, k: usize) -> bool {
    match a {
        Ty::Head { inst, .. } => inst.iter().any(|t| occurs_tm(t, k)),
        Ty::Pi(a, b) | Ty::Sigma(a, b) => occurs_ty(a, k) || occurs_ty(b, k + 1),
        Ty::Ind { params, indices, .. } => {
            params.iter().any(|c| occurs_comp(c, k)) || indices.iter().any(|t| occurs_tm(t, k))
        }
        Ty::Base(_) => false,
    }
}

pub fn occurs_comp(c: &SubComp, k: usize) -> bool {
    match c {
        SubComp::Tm { tm, .. } => occurs_tm(tm, k),
        SubComp::Ty { arity, ty, .. } => occurs_ty(ty, k + arity),
    }
}

pub fn occurs_ad(f: &Ad, k: usize) -> bool {
    match f {
        Ad::Id => false,
        Ad::Comp(xs) => xs.iter().any(|x| occurs_ad(x, k)),
        Ad::Post { src, tgt, .. } => occurs_ty(src, k) || occurs_ty(tgt, k),
        Ad::Sym { inst, src, tgt, .. } => inst.iter().any(|t| occurs_tm(t, k)) || occurs_ty(src, k) || occurs_ty(tgt, k),
        Ad::Pi { dom, cod, new_dom } => occurs_ad(dom, k) || occurs_ad(cod, k + 1) || occurs_ty(new_dom, k),
        Ad::Sigma { fst, snd, new_cod } => occurs_ad(fst, k) || occurs_ad(snd, k + 1) || occurs_ty(new_cod, k + 1),
        Ad::Ind { trans, .. } => trans.comps.iter().any(|c| match c {
            TransComp::Tm { tm, .. } => occurs_tm(tm, k),
            TransComp::Ty { tel, src, tgt, ad, .. } => {
                let n = tel.len();
                occurs_ty(src, k + n) || occurs_ty(tgt, k + n) || occurs_ad(ad, k + n)
            }
        }),
    }
}

/// Inverse of instantiating the innermost `pats.len()` variables by
/// `pats`: every occurrence of `pats[i]` becomes `Var(i)`. Fails when one
/// of those variables occurs outside a pattern.
pub fn abstract_ty(a: &Ty, pats: &[Tm]) -> Option<Ty> {
    Abstractor { pats }.ty(a, 0)
}

struct Abstractor<'a> {
    pats: &'a [Tm],
}

impl Abstractor<'_> {
    fn tm(&self, t: &Tm, k: usize) -> Option<Tm> {
        for (i, p) in self.pats.iter().enumerate() {
            if *t == shift(p, 0, k) {
                return Some(Tm::Var(i + k));
            }
        }
        Some(match t {
            Tm::Var(i) if *i >= k && *i < k + self.pats.len() => return None,
            Tm::Var(i) => Tm::Var(*i),
            Tm::Lam(b) => Tm::lam(self.tm(b, k + 1)?),
            Tm::App(f, u) => Tm::app(self.tm(f, k)?, self.tm(u, k)?),
            Tm::Pair(a, b) => Tm::pair(self.tm(a, k)?, self.tm(b, k)?),
            Tm::Fst(p) => Tm::fst(self.tm(p, k)?),
            Tm::Snd(p) => Tm::snd(self.tm(p, k)?),
            Tm::Cast(t, f) => Tm::cast(self.tm(t, k)?, self.ad(f, k)?),
            Tm::Constr { desc, con, params, args } => Tm::Constr {
                desc: desc.clone(),
                con: *con,
                params: params.iter().map(|c| self.comp(c, k)).collect::<Option<_>>()?,
                args: args.iter().map(|a| self.tm(a, k)).collect::<Option<_>>()?,
            },
        })
    }

    fn ty(&self, a: &Ty, k: usize) -> Option<Ty> {
        Some(match a {
            Ty::Head { idx, inst } => Ty::Head { idx: *idx, inst: inst.iter().map(|t| self.tm(t, k)).collect::<Option<_>>()? },
            Ty::Pi(a, b) => Ty::pi(self.ty(a, k)?, self.ty(b, k + 1)?),
            Ty::Sigma(a, b) => Ty::sigma(self.ty(a, k)?, self.ty(b, k + 1)?),
            Ty::Ind { desc, params, indices } => Ty::Ind {
                desc: desc.clone(),
                params: params.iter().map(|c| self.comp(c, k)).collect::<Option<_>>()?,
                indices: indices.iter().map(|t| self.tm(t, k)).collect::<Option<_>>()?,
            },
            Ty::Base(n) => Ty::Base(n.clone()),
        })
    }

    fn comp(&self, c: &SubComp, k: usize) -> Option<SubComp> {
        Some(match c {
            SubComp::Tm { dir, tm } => SubComp::Tm { dir: *dir, tm: self.tm(tm, k)? },
            SubComp::Ty { dir, tel_dir, arity, ty } => SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: *arity, ty: self.ty(ty, k + arity)? },
        })
    }

    fn ad(&self, f: &Ad, k: usize) -> Option<Ad> {
        Some(match f {
            Ad::Id => Ad::Id,
            Ad::Comp(xs) => Ad::Comp(xs.iter().map(|x| self.ad(x, k)).collect::<Option<_>>()?),
            Ad::Post { name, src, tgt } => Ad::Post { name: name.clone(), src: self.ty(src, k)?, tgt: self.ty(tgt, k)? },
            Ad::Pi { dom, cod, new_dom } => Ad::Pi {
                dom: Box::new(self.ad(dom, k)?),
                cod: Box::new(self.ad(cod, k + 1)?),
                new_dom: Box::new(self.ty(new_dom, k)?),
            },
            Ad::Sigma { fst, snd, new_cod } => Ad::Sigma {
                fst: Box::new(self.ad(fst, k)?),
                snd: Box::new(self.ad(snd, k + 1)?),
                new_cod: Box::new(self.ty(new_cod, k + 1)?),
            },
            Ad::Ind { desc, trans } => Ad::Ind {
                desc: desc.clone(),
                trans: Trans {
                    comps: trans
                        .comps
                        .iter()
                        .map(|c| match c {
                            TransComp::Tm { dir, ty, tm } => Some(TransComp::Tm { dir: *dir, ty: ty.clone(), tm: self.tm(tm, k)? }),
                            TransComp::Ty { dir, tel_dir, tel, src, tgt, ad } => {
                                let n = tel.len();
                                Some(TransComp::Ty {
                                    dir: *dir,
                                    tel_dir: *tel_dir,
                                    tel: tel.clone(),
                                    src: self.ty(src, k + n)?,
                                    tgt: self.ty(tgt, k + n)?,
                                    ad: self.ad(ad, k + n)?,
                                })
                            }
                        })
                        .collect::<Option<_>>()?,
                },
            },
            Ad::Sym { name, inst, src, tgt } => Ad::Sym {
                name: name.clone(),
                inst: inst.iter().map(|t| self.tm(t, k)).collect::<Option<_>>()?,
                src: self.ty(src, k)?,
                tgt: self.ty(tgt, k)?,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Ty {
        Ty::var(0)
    }

    #[test]
    fn type_variable_replaced_by_component() {
        let a = Ty::base("A");
        let s = Subst::spine(vec![SubComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, arity: 0, ty: a.clone() }]);
        assert_eq!(subst_ty(&x(), &s), a);
    }

    #[test]
    fn identity_is_neutral() {
        let t = Ty::pi(x(), Ty::Head { idx: 1, inst: vec![Tm::Var(0)] });
        assert_eq!(subst_ty(&t, &Subst::id()), t);
    }

    #[test]
    fn pi_substitution_lifts_codomain() {
        // (Π A. B(x, y))[y := c] with y the outer term variable
        let b = Ty::Head { idx: 0, inst: vec![Tm::Var(0), Tm::Var(1)] };
        let t = Ty::pi(x(), b);
        let c = Tm::Var(7);
        let r = subst_ty(&t, &Subst::terms([c]));
        assert_eq!(r, Ty::pi(x(), Ty::Head { idx: 0, inst: vec![Tm::Var(0), Tm::Var(8)] }));
    }

    #[test]
    fn instantiated_head_substitutes_arguments() {
        // Y(x) with Y := λz. Z(z, z) under one binder
        let body = Ty::Head { idx: 0, inst: vec![Tm::Var(0), Tm::Var(0)] };
        let s = Subst {
            shift_tm: 0,
            shift_ty: 1,
            comps: vec![SubComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, arity: 1, ty: body }],
        };
        let t = Ty::pi(Ty::base("A"), Ty::Head { idx: 0, inst: vec![Tm::Var(3)] });
        let r = subst_ty(&t, &s);
        assert_eq!(r, Ty::pi(Ty::base("A"), Ty::Head { idx: 0, inst: vec![Tm::Var(3), Tm::Var(3)] }));
    }

    #[test]
    fn composition_of_spines() {
        let a = Tm::Var(0);
        let tau = Subst::terms([Tm::app(a.clone(), Tm::Var(1))]);
        let sigma = Subst::terms([Tm::Var(5)]);
        let t = Tm::app(Tm::Var(0), Tm::Var(2));
        let lhs = subst_tm(&t, &compose_sub(&tau, &sigma).unwrap());
        let rhs = subst_tm(&subst_tm(&t, &tau), &sigma);
        assert_eq!(lhs, rhs);
        assert_eq!(compose_sub(&Subst::id(), &sigma).unwrap(), sigma);
    }

    #[test]
    fn lifting_preserves_bound_variables() {
        let s = Subst::terms([Tm::Var(4)]);
        let l = lift(&s, 2);
        assert_eq!(subst_tm(&Tm::Var(0), &l), Tm::Var(0));
        assert_eq!(subst_tm(&Tm::Var(1), &l), Tm::Var(1));
        assert_eq!(subst_tm(&Tm::Var(2), &l), Tm::Var(6));
    }

    #[test]
    fn abstraction_inverts_instantiation() {
        let f = Ad::post("f", Ty::base("A"), Ty::base("B"));
        let pat = Tm::cast(Tm::Var(0), f);
        let b = Ty::Ind { desc: "Vec".into(), params: vec![], indices: vec![Tm::Var(0), Tm::Var(3)] };
        let inst = subst_ty(&b, &Subst { shift_tm: 1, shift_ty: 0, comps: vec![SubComp::Tm { dir: Dir::Pos, tm: pat.clone() }] });
        assert_eq!(abstract_ty(&inst, &[pat.clone()]), Some(b));
        assert_eq!(abstract_ty(&Ty::Ind { desc: "Vec".into(), params: vec![], indices: vec![Tm::Var(0)] }, &[pat]), None);
    }
}
