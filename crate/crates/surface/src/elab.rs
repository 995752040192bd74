//! Elaboration of named surface syntax into kernel syntax. Terms are
//! elaborated bidirectionally; adapters are elaborated against a known
//! source (forward) or a known target (backward), which is what lets the
//! omitted annotations of Π, Σ and inductive adapters be reconstructed.

use crate::ast::*;
use crate::error::Diagnostic;
use adaptt_core::functorial::TransE;
use adaptt_core::subst::*;
use adaptt_core::*;
use indexmap::IndexMap;

type R<T> = Result<T, Diagnostic>;

/// A typing context with a name for every entry.
#[derive(Clone, Debug, Default)]
pub struct Scope {
    pub ctx: Ctx,
    pub tms: Vec<String>,
    pub tys: Vec<String>,
}

impl Scope {
    pub fn dual(&self) -> Scope {
        Scope { ctx: self.ctx.dual(), tms: self.tms.clone(), tys: self.tys.clone() }
    }

    pub fn dual_by(&self, d: Dir) -> Scope {
        match d {
            Dir::Pos => self.clone(),
            Dir::Neg => self.dual(),
        }
    }

    pub fn with_tm(&self, name: &str, dir: Dir, ty: Ty) -> Scope {
        let mut s = self.clone();
        s.ctx.push(Entry::Tm { dir, ty });
        s.tms.push(name.to_string());
        s
    }

    pub fn with_ty(&self, name: &str, entry: Entry) -> Scope {
        let mut s = self.clone();
        s.ctx.push(entry);
        s.tys.push(name.to_string());
        s
    }

    fn extend(&self, d: Dir, tel: &[Ty], names: &[String]) -> Scope {
        let mut s = self.clone();
        for (i, a) in tel.iter().enumerate() {
            s = s.with_tm(names.get(i).map(String::as_str).unwrap_or(""), d, a.clone());
        }
        s
    }

    fn tm_index(&self, n: &str) -> Option<usize> {
        self.tms.iter().rev().position(|m| m == n)
    }

    fn ty_index(&self, n: &str) -> Option<usize> {
        self.tys.iter().rev().position(|m| m == n)
    }
}

#[derive(Clone, Debug)]
pub struct Assertion {
    pub lhs: Tm,
    pub rhs: Tm,
    pub ty: Ty,
    pub holds: bool,
    pub span: Span,
}

/// The result of elaborating a file.
#[derive(Clone, Debug, Default)]
pub struct Program {
    pub sig: Sig,
    pub defs: IndexMap<String, (Tm, Ty)>,
    pub checks: Vec<(Tm, Ty, Span)>,
    pub asserts: Vec<Assertion>,
    pub normals: Vec<(Tm, Ty, Span)>,
}

pub fn elaborate(decls: &[Decl]) -> (Program, Vec<Diagnostic>) {
    elaborate_with(Sig::new(), decls)
}

/// Elaborate declarations on top of an existing signature. A failing
/// declaration is reported and skipped.
pub fn elaborate_with(sig: Sig, decls: &[Decl]) -> (Program, Vec<Diagnostic>) {
    let mut el = Elab { prog: Program { sig, ..Program::default() } };
    let mut diags = Vec::new();
    for d in decls {
        if let Err(e) = el.decl(d) {
            diags.push(e);
        }
    }
    (el.prog, diags)
}

fn err(span: Span, kind: ErrorKind, expected: impl Into<String>, got: impl Into<String>) -> Diagnostic {
    Diagnostic::at(span, Error::new(kind, expected, got))
}

fn at<T>(span: Span, r: adaptt_core::error::Result<T>) -> R<T> {
    r.map_err(|e| Diagnostic::at(span, e))
}

enum Head<'a> {
    Con(String, usize),
    Other(&'a Expr),
}

pub struct Elab {
    pub prog: Program,
}

impl Elab {
    pub fn new(sig: Sig) -> Elab {
        Elab { prog: Program { sig, ..Program::default() } }
    }

    fn sig(&self) -> &Sig {
        &self.prog.sig
    }

    fn fresh(&self, name: &str, span: Span) -> R<()> {
        let s = self.sig();
        if s.bases.contains(name) || s.posts.contains_key(name) || s.descs.contains_key(name) || self.prog.defs.contains_key(name) {
            return Err(err(span, ErrorKind::UnknownName, "a fresh name", name));
        }
        Ok(())
    }

    pub fn decl(&mut self, d: &Decl) -> R<()> {
        let empty = Scope::default();
        match d {
            Decl::Base { name, span } => {
                self.fresh(name, *span)?;
                at(*span, self.prog.sig.add_base(name))
            }
            Decl::Postulate { name, src, tgt, span } => {
                self.fresh(name, *span)?;
                let a = self.ty(&empty, src)?;
                let b = self.ty(&empty, tgt)?;
                at(*span, self.prog.sig.add_post(name, a, b))
            }
            Decl::Data(data) => {
                self.fresh(&data.name, data.span)?;
                let desc = self.data(data)?;
                at(data.span, self.prog.sig.add_desc(desc))
            }
            Decl::Def { name, ty, tm, span } => {
                self.fresh(name, *span)?;
                let (t, a) = self.closed(tm, ty)?;
                self.prog.defs.insert(name.clone(), (t, a));
                Ok(())
            }
            Decl::Check { tm, ty, span } => {
                let (t, a) = self.closed(tm, ty)?;
                self.prog.checks.push((t, a, *span));
                Ok(())
            }
            Decl::Assert { lhs, rhs, ty, span } => {
                let a = self.ty(&empty, ty)?;
                at(ty.span, self.sig().check_ty(&Ctx::empty(), &a))?;
                let l = self.check(&empty, lhs, &a)?;
                let r = self.check(&empty, rhs, &a)?;
                at(lhs.span, self.sig().check_tm(&Ctx::empty(), &l, &a))?;
                at(rhs.span, self.sig().check_tm(&Ctx::empty(), &r, &a))?;
                let holds = self.sig().conv_tm(&l, &r);
                self.prog.asserts.push(Assertion { lhs: l, rhs: r, ty: a, holds, span: *span });
                Ok(())
            }
            Decl::Normalize { tm, span } => {
                let (t, a) = self.infer(&empty, tm)?;
                at(tm.span, self.sig().check_tm(&Ctx::empty(), &t, &a))?;
                self.prog.normals.push((t, a, *span));
                Ok(())
            }
        }
    }

    fn closed(&self, tm: &Expr, ty: &Expr) -> R<(Tm, Ty)> {
        let empty = Scope::default();
        let a = self.ty(&empty, ty)?;
        at(ty.span, self.sig().check_ty(&Ctx::empty(), &a))?;
        let t = self.check(&empty, tm, &a)?;
        at(tm.span, self.sig().check_tm(&Ctx::empty(), &t, &a))?;
        Ok((t, self.sig().nf_ty(&a)))
    }

    // ---- types ----

    pub fn ty(&self, sc: &Scope, e: &Expr) -> R<Ty> {
        match &e.kind {
            ExprKind::Pi(bs, body) => {
                let mut s = sc.clone();
                let mut doms = Vec::new();
                for b in bs {
                    unmarked(b)?;
                    let a = self.ty(&s.dual(), &b.ty)?;
                    s = s.with_tm(&b.name, Dir::Neg, a.clone());
                    doms.push(a);
                }
                let cod = self.ty(&s, body)?;
                Ok(pi_tel(&doms, cod))
            }
            ExprKind::Arrow(a, b) => {
                let a = self.ty(&sc.dual(), a)?;
                let b = self.ty(&sc.with_tm("", Dir::Neg, a.clone()), b)?;
                Ok(Ty::pi(a, b))
            }
            ExprKind::Sigma(bs, body) => {
                let mut s = sc.clone();
                let mut fsts = Vec::new();
                for b in bs {
                    unmarked(b)?;
                    let a = self.ty(&s, &b.ty)?;
                    s = s.with_tm(&b.name, Dir::Pos, a.clone());
                    fsts.push(a);
                }
                let snd = self.ty(&s, body)?;
                Ok(fsts.into_iter().rev().fold(snd, |acc, a| Ty::sigma(a, acc)))
            }
            ExprKind::Times(a, b) => {
                let a = self.ty(sc, a)?;
                let b = self.ty(&sc.with_tm("", Dir::Pos, a.clone()), b)?;
                Ok(Ty::sigma(a, b))
            }
            ExprKind::Name(_) | ExprKind::App(..) => {
                let (head, args) = e.spine();
                let ExprKind::Name(n) = &head.kind else {
                    return Err(err(head.span, ErrorKind::ClassifierMismatch, "a type", "a term"));
                };
                if let Some(k) = sc.ty_index(n) {
                    let (tel_dir, tel) = at(head.span, self.sig().lookup_ty(&sc.ctx, k))?;
                    let inst = self.inst(&sc.dual_by(tel_dir), &args, &tel, head.span)?;
                    return Ok(Ty::Head { idx: k, inst });
                }
                if sc.tm_index(n).is_some() {
                    return Err(err(head.span, ErrorKind::ClassifierMismatch, "a type", format!("term variable {n}")));
                }
                if self.sig().bases.contains(n) {
                    if !args.is_empty() {
                        return Err(err(e.span, ErrorKind::ArityMismatch, "0 arguments", args.len().to_string()));
                    }
                    return Ok(Ty::Base(n.clone()));
                }
                if let Ok(d) = self.sig().desc(n) {
                    let d = d.clone();
                    return self.ind_ty(sc, &d, &args, e.span);
                }
                Err(err(head.span, ErrorKind::UnknownName, "a type", n.clone()))
            }
            _ => Err(err(e.span, ErrorKind::ClassifierMismatch, "a type", "a term or adapter")),
        }
    }

    fn ind_ty(&self, sc: &Scope, d: &IndDesc, args: &[&Expr], span: Span) -> R<Ty> {
        let np = d.params.len();
        let want = np + d.indices.len();
        if args.len() != want {
            return Err(err(span, ErrorKind::ArityMismatch, format!("{want} arguments to {}", d.name), args.len().to_string()));
        }
        let params = self.params(sc, d, &args[..np])?;
        let tel = subst_tel(&d.indices, &Subst::spine(params.clone()));
        let indices = self.inst(sc, &args[np..], &tel, span)?;
        Ok(Ty::Ind { desc: d.name.clone(), params, indices })
    }

    /// Elaborate parameter arguments of a description.
    fn params(&self, sc: &Scope, d: &IndDesc, args: &[&Expr]) -> R<Vec<SubComp>> {
        let mut comps: Vec<SubComp> = Vec::new();
        for (e, arg) in d.params.entries.iter().zip(args) {
            let pre = Subst::spine(comps.clone());
            match e {
                Entry::Tm { dir, ty } => {
                    let tm = self.check(&sc.dual_by(*dir), arg, &subst_ty(ty, &pre))?;
                    comps.push(SubComp::Tm { dir: *dir, tm });
                }
                Entry::Ty { dir, tel_dir, tel } => {
                    let n = tel.len();
                    let theta = subst_tel(tel, &pre);
                    let ty = match &arg.kind {
                        ExprKind::Fam(xs, body) => {
                            if xs.len() != n {
                                return Err(err(arg.span, ErrorKind::ArityMismatch, format!("{n} family binders"), xs.len().to_string()));
                            }
                            self.ty(&sc.extend(*tel_dir, &theta, xs).dual_by(*dir), body)?
                        }
                        ExprKind::Name(v) if n > 0 && sc.ty_index(v).is_some() => {
                            Ty::Head { idx: sc.ty_index(v).unwrap(), inst: vinst(n) }
                        }
                        _ => weaken_ty(&self.ty(&sc.dual_by(*dir), arg)?, n, 0),
                    };
                    comps.push(SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: n, ty });
                }
            }
        }
        Ok(comps)
    }

    /// Check an instantiation of a telescope, in the given scope.
    fn inst(&self, sc: &Scope, args: &[&Expr], tel: &[Ty], span: Span) -> R<Vec<Tm>> {
        if args.len() != tel.len() {
            return Err(err(span, ErrorKind::ArityMismatch, format!("{} arguments", tel.len()), args.len().to_string()));
        }
        let mut out: Vec<Tm> = Vec::new();
        for (i, a) in args.iter().enumerate() {
            let want = subst_ty_at(&tel[i], &Subst::terms(out.clone()), 0);
            out.push(self.check(sc, a, &want)?);
        }
        Ok(out)
    }

    // ---- terms ----

    pub fn check(&self, sc: &Scope, e: &Expr, want: &Ty) -> R<Tm> {
        let sig = self.sig();
        let want = sig.nf_ty(want);
        match (&e.kind, &want) {
            (ExprKind::Lam(xs, body), _) => {
                let mut s = sc.clone();
                let mut cur = want.clone();
                for x in xs {
                    let Ty::Pi(a, b) = sig.nf_ty(&cur) else {
                        return Err(err(e.span, ErrorKind::ClassifierMismatch, sig.show_ty(&s.ctx, &cur), "a function"));
                    };
                    s = s.with_tm(x, Dir::Neg, *a);
                    cur = *b;
                }
                let b = self.check(&s, body, &cur)?;
                Ok(xs.iter().fold(b, |acc, _| Tm::lam(acc)))
            }
            (ExprKind::Pair(a, b), Ty::Sigma(a0, b0)) => {
                let ta = self.check(sc, a, a0)?;
                let tb = self.check(sc, b, &inst1_ty(b0, &ta))?;
                Ok(Tm::pair(ta, tb))
            }
            (ExprKind::Pair(..), _) => Err(err(e.span, ErrorKind::ClassifierMismatch, sig.show_ty(&sc.ctx, &want), "a pair")),
            (ExprKind::Cast(t, f), _) if !inferable(t) => {
                let (ad, src) = self.ad_bwd(sc, f, &want)?;
                let t = self.check(sc, t, &src)?;
                Ok(sig.cast(t, &ad))
            }
            _ => {
                let (t, got) = self.infer(sc, e)?;
                if !sig.eq_ty(&got, &want) {
                    return Err(err(e.span, ErrorKind::ClassifierMismatch, sig.show_ty(&sc.ctx, &want), sig.show_ty(&sc.ctx, &got)));
                }
                Ok(t)
            }
        }
    }

    pub fn infer(&self, sc: &Scope, e: &Expr) -> R<(Tm, Ty)> {
        let sig = self.sig();
        match &e.kind {
            ExprKind::Name(_) | ExprKind::Qual(..) | ExprKind::App(..) => {
                let (head, args) = e.spine();
                match self.head(sc, head)? {
                    Head::Con(d, ic) => self.constr(sc, &d, ic, &args, e.span),
                    Head::Other(h) => {
                        let (mut t, mut ty) = self.atom(sc, h)?;
                        for u in args {
                            let Ty::Pi(a, b) = ty else {
                                return Err(err(u.span, ErrorKind::ClassifierMismatch, "a function type", sig.show_ty(&sc.ctx, &ty)));
                            };
                            let tu = self.check(&sc.dual(), u, &a)?;
                            ty = sig.nf_ty(&inst1_ty(&b, &tu));
                            t = if core_inferable(&t) { Tm::app(t, tu) } else { sig.app(t, tu) };
                        }
                        Ok((t, ty))
                    }
                }
            }
            ExprKind::Fst(p) => {
                let (tp, ty) = self.infer(sc, p)?;
                match ty {
                    Ty::Sigma(a, _) if core_inferable(&tp) => Ok((Tm::fst(tp), *a)),
                    Ty::Sigma(a, _) => Ok((sig.fst(tp), *a)),
                    other => Err(err(p.span, ErrorKind::ClassifierMismatch, "a pair type", sig.show_ty(&sc.ctx, &other))),
                }
            }
            ExprKind::Snd(p) => {
                let (tp, ty) = self.infer(sc, p)?;
                match ty {
                    Ty::Sigma(_, b) => {
                        let ty = sig.nf_ty(&inst1_ty(&b, &Tm::fst(tp.clone())));
                        Ok((if core_inferable(&tp) { Tm::snd(tp) } else { sig.snd(tp) }, ty))
                    }
                    other => Err(err(p.span, ErrorKind::ClassifierMismatch, "a pair type", sig.show_ty(&sc.ctx, &other))),
                }
            }
            ExprKind::Cast(t, f) => {
                let (tt, a) = self.infer(sc, t)?;
                let (ad, b) = self.ad_fwd(sc, f, &a)?;
                Ok((if core_inferable(&tt) { Tm::cast(tt, ad) } else { sig.cast(tt, &ad) }, b))
            }
            ExprKind::Lam(..) => Err(err(e.span, ErrorKind::CannotInfer, "an annotated function", "a bare lambda")),
            ExprKind::Pair(..) => Err(err(e.span, ErrorKind::CannotInfer, "an annotated pair", "a bare pair")),
            _ => Err(err(e.span, ErrorKind::ClassifierMismatch, "a term", "a type or adapter")),
        }
    }

    fn head<'a>(&self, sc: &Scope, h: &'a Expr) -> R<Head<'a>> {
        match &h.kind {
            ExprKind::Qual(d, c) => {
                let desc = at(h.span, self.sig().desc(d))?;
                let ic = desc
                    .con_index(c)
                    .ok_or_else(|| err(h.span, ErrorKind::UnknownName, format!("a constructor of {d}"), c.clone()))?;
                Ok(Head::Con(d.clone(), ic))
            }
            ExprKind::Name(n) if sc.tm_index(n).is_none() && !self.prog.defs.contains_key(n) => {
                let found: Vec<(String, usize)> = self
                    .sig()
                    .descs
                    .values()
                    .filter_map(|d| d.con_index(n).map(|i| (d.name.clone(), i)))
                    .collect();
                match found.len() {
                    0 => Ok(Head::Other(h)),
                    1 => Ok(Head::Con(found[0].0.clone(), found[0].1)),
                    _ => Err(err(h.span, ErrorKind::UnknownName, "a qualified constructor", n.clone())),
                }
            }
            _ => Ok(Head::Other(h)),
        }
    }

    fn atom(&self, sc: &Scope, h: &Expr) -> R<(Tm, Ty)> {
        match &h.kind {
            ExprKind::Name(n) => {
                if let Some(k) = sc.tm_index(n) {
                    let ty = at(h.span, self.sig().lookup_tm(&sc.ctx, k))?;
                    return Ok((Tm::Var(k), self.sig().nf_ty(&ty)));
                }
                if let Some((t, a)) = self.prog.defs.get(n) {
                    let (tm, ty) = (sc.ctx.tm_count(), sc.ctx.ty_count());
                    return Ok((weaken_tm(t, tm, ty), weaken_ty(a, tm, ty)));
                }
                Err(err(h.span, ErrorKind::UnboundVariable, "a term", n.clone()))
            }
            _ => self.infer(sc, h),
        }
    }

    fn constr(&self, sc: &Scope, desc: &str, ic: usize, args: &[&Expr], span: Span) -> R<(Tm, Ty)> {
        let sig = self.sig();
        let d = sig.desc(desc).unwrap().clone();
        let ec = at(span, sig.con(desc, ic))?.clone();
        let np = d.params.len();
        let want = np + ec.tied.len();
        if args.len() != want {
            let name = &d.cons[ic].name;
            return Err(err(span, ErrorKind::ArityMismatch, format!("{want} arguments to {name}"), args.len().to_string()));
        }
        let params = self.params(sc, &d, &args[..np])?;
        let tel = subst_tel(&ec.tied, &Subst::spine(params.clone()));
        let cargs = self.inst(sc, &args[np..], &tel, span)?;
        let ty = at(span, sig.constr_result(desc, ic, &params, &cargs))?;
        Ok((Tm::Constr { desc: desc.to_string(), con: ic, params, args: cargs }, sig.nf_ty(&ty)))
    }

    // ---- adapters ----

    /// Elaborate an adapter out of a known source; returns it with its target.
    pub fn ad_fwd(&self, sc: &Scope, e: &Expr, src: &Ty) -> R<(Ad, Ty)> {
        let sig = self.sig();
        let src = sig.nf_ty(src);
        match &e.kind {
            ExprKind::Id => Ok((Ad::Id, src)),
            ExprKind::Name(n) => {
                let (ps, pt) = self.post(n, e.span)?;
                if !sig.eq_ty(&ps, &src) {
                    return Err(err(e.span, ErrorKind::ClassifierMismatch, sig.show_ty(&sc.ctx, &ps), sig.show_ty(&sc.ctx, &src)));
                }
                Ok((Ad::post(n, ps, pt.clone()), pt))
            }
            ExprKind::Comp(g, f) => {
                let (f, mid) = self.ad_fwd(sc, f, &src)?;
                let (g, tgt) = self.ad_fwd(sc, g, &mid)?;
                Ok((Ad::then(f, g), tgt))
            }
            ExprKind::PiAd(d, c) => {
                let Ty::Pi(a0, b0) = &src else {
                    return Err(err(e.span, ErrorKind::ClassifierMismatch, "a function type", sig.show_ty(&sc.ctx, &src)));
                };
                let (dom, a1) = self.ad_bwd(&sc.dual(), d, a0)?;
                let (x, c) = fam1(c)?;
                let inner = sc.with_tm(x, Dir::Neg, a1.clone());
                let (cod, b1) = self.ad_fwd(&inner, c, &sig.reindex_var(b0, &dom))?;
                Ok((Ad::Pi { dom: Box::new(dom), cod: Box::new(cod), new_dom: Box::new(a1.clone()) }, Ty::pi(a1, b1)))
            }
            ExprKind::SigmaAd(f, s) => {
                let Ty::Sigma(a0, b0) = &src else {
                    return Err(err(e.span, ErrorKind::ClassifierMismatch, "a pair type", sig.show_ty(&sc.ctx, &src)));
                };
                let (fst, a1) = self.ad_fwd(sc, f, a0)?;
                let (x, s) = fam1(s)?;
                let (snd, b1r) = self.ad_fwd(&sc.with_tm(x, Dir::Pos, (**a0).clone()), s, b0)?;
                let new_cod = self.unreindex(&b1r, &[&fst], e.span)?;
                Ok((Ad::Sigma { fst: Box::new(fst), snd: Box::new(snd), new_cod: Box::new(new_cod.clone()) }, Ty::sigma(a1, new_cod)))
            }
            ExprKind::IndAd(d, comps) => self.ind_ad(sc, d, comps, &src, true, e.span),
            _ => Err(err(e.span, ErrorKind::ClassifierMismatch, "an adapter", "a term or type")),
        }
    }

    /// Elaborate an adapter into a known target; returns it with its source.
    pub fn ad_bwd(&self, sc: &Scope, e: &Expr, tgt: &Ty) -> R<(Ad, Ty)> {
        let sig = self.sig();
        let tgt = sig.nf_ty(tgt);
        match &e.kind {
            ExprKind::Id => Ok((Ad::Id, tgt)),
            ExprKind::Name(n) => {
                let (ps, pt) = self.post(n, e.span)?;
                if !sig.eq_ty(&pt, &tgt) {
                    return Err(err(e.span, ErrorKind::ClassifierMismatch, sig.show_ty(&sc.ctx, &tgt), sig.show_ty(&sc.ctx, &pt)));
                }
                Ok((Ad::post(n, ps.clone(), pt), ps))
            }
            ExprKind::Comp(g, f) => {
                let (g, mid) = self.ad_bwd(sc, g, &tgt)?;
                let (f, src) = self.ad_bwd(sc, f, &mid)?;
                Ok((Ad::then(f, g), src))
            }
            ExprKind::PiAd(d, c) => {
                let Ty::Pi(a1, b1) = &tgt else {
                    return Err(err(e.span, ErrorKind::ClassifierMismatch, "a function type", sig.show_ty(&sc.ctx, &tgt)));
                };
                let (dom, a0) = self.ad_fwd(&sc.dual(), d, a1)?;
                let (x, c) = fam1(c)?;
                let inner = sc.with_tm(x, Dir::Neg, (**a1).clone());
                let (cod, b0r) = self.ad_bwd(&inner, c, b1)?;
                let b0 = self.unreindex(&b0r, &[&dom], e.span)?;
                Ok((Ad::Pi { dom: Box::new(dom), cod: Box::new(cod), new_dom: a1.clone() }, Ty::pi(a0, b0)))
            }
            ExprKind::SigmaAd(f, s) => {
                let Ty::Sigma(a1, b1) = &tgt else {
                    return Err(err(e.span, ErrorKind::ClassifierMismatch, "a pair type", sig.show_ty(&sc.ctx, &tgt)));
                };
                let (fst, a0) = self.ad_bwd(sc, f, a1)?;
                let (x, s) = fam1(s)?;
                let want = sig.reindex_var(b1, &fst);
                let (snd, b0) = self.ad_bwd(&sc.with_tm(x, Dir::Pos, a0.clone()), s, &want)?;
                Ok((Ad::Sigma { fst: Box::new(fst), snd: Box::new(snd), new_cod: b1.clone() }, Ty::sigma(a0, b0)))
            }
            ExprKind::IndAd(d, comps) => self.ind_ad(sc, d, comps, &tgt, false, e.span),
            _ => Err(err(e.span, ErrorKind::ClassifierMismatch, "an adapter", "a term or type")),
        }
    }

    fn post(&self, n: &str, span: Span) -> R<(Ty, Ty)> {
        self.sig()
            .posts
            .get(n)
            .cloned()
            .ok_or_else(|| err(span, ErrorKind::UnknownName, "a postulated adapter", n))
    }

    /// Invert the reindexing of the innermost `ads.len()` variables along
    /// the given adapters.
    fn unreindex(&self, a: &Ty, ads: &[&Ad], span: Span) -> R<Ty> {
        let n = ads.len();
        let pats: Vec<Tm> = (0..n)
            .map(|i| {
                let j = n - 1 - i;
                self.sig().nf_tm(&self.sig().cast(Tm::Var(i), &weaken_ad(ads[j], i + 1, 0)))
            })
            .collect();
        abstract_ty(a, &pats).ok_or_else(|| err(span, ErrorKind::CannotInfer, "an endpoint recoverable from its reindexing", "a type mentioning the bound variables outside a cast"))
    }

    fn unreindex_subst(&self, a: &Ty, r: &Subst, span: Span) -> R<Ty> {
        let n = r.comps.len();
        let pats: Vec<Tm> = (0..n).map(|i| self.sig().nf_tm(r.comps[n - 1 - i].as_tm().unwrap())).collect();
        abstract_ty(a, &pats).ok_or_else(|| err(span, ErrorKind::CannotInfer, "an endpoint recoverable from its reindexing", "a type mentioning the bound variables outside a cast"))
    }

    /// An inductive adapter against a known endpoint: the source when
    /// `forward`, else the target.
    fn ind_ad(&self, sc: &Scope, name: &str, comps: &[Expr], known: &Ty, forward: bool, span: Span) -> R<(Ad, Ty)> {
        let sig = self.sig();
        let Ty::Ind { desc, params, indices } = known else {
            return Err(err(span, ErrorKind::ClassifierMismatch, format!("an instance of {name}"), sig.show_ty(&sc.ctx, known)));
        };
        if desc != name {
            return Err(err(span, ErrorKind::ClassifierMismatch, format!("an instance of {name}"), sig.show_ty(&sc.ctx, known)));
        }
        let d = sig.desc(name).unwrap();
        let target = d.params.extend_by_tel(Dir::Pos, &d.indices);
        if comps.len() != target.len() {
            return Err(err(span, ErrorKind::ArityMismatch, format!("{} components", target.len()), comps.len().to_string()));
        }
        let mut side = params.clone();
        side.extend(indices.iter().map(|t| SubComp::Tm { dir: Dir::Pos, tm: t.clone() }));
        let mut te = TransE::empty();
        for (j, (entry, ce)) in target.entries.iter().zip(comps).enumerate() {
            let comp = match entry {
                Entry::Tm { dir, ty } => {
                    let at_side = match dir {
                        Dir::Pos => te.src_subst(),
                        Dir::Neg => te.tgt_subst(),
                    };
                    let tm = self.check(&sc.dual_by(*dir), ce, &subst_ty(ty, &at_side))?;
                    TransComp::Tm { dir: *dir, ty: ty.clone(), tm }
                }
                Entry::Ty { dir, tel_dir, tel } => {
                    let Some(SubComp::Ty { ty: k, .. }) = side.get(j) else { unreachable!() };
                    let (names, body) = fam(ce, tel.len())?;
                    let (ad, src, tgt) = self.ind_ty_comp(sc, &te, *dir, *tel_dir, tel, &names, body, k, forward)?;
                    TransComp::Ty { dir: *dir, tel_dir: *tel_dir, tel: tel.clone(), src, tgt, ad }
                }
            };
            at(ce.span, sig.push_comp(&mut te, comp))?;
            let got = if forward { &te.src[j] } else { &te.tgt[j] };
            let ok = match (got, &side[j]) {
                (SubComp::Tm { tm: x, .. }, SubComp::Tm { tm: y, .. }) => sig.conv_tm(x, y),
                (SubComp::Ty { ty: x, .. }, SubComp::Ty { ty: y, .. }) => sig.conv_ty(x, y),
                _ => false,
            };
            if !ok {
                let what = if forward { "source" } else { "target" };
                return Err(err(ce.span, ErrorKind::EndpointMismatch, format!("a component whose {what} matches {}", sig.show_ty(&sc.ctx, known)), format!("component {j}")));
            }
        }
        let np = d.params.len();
        let other = if forward { &te.tgt } else { &te.src };
        let ty = sig.nf_ty(&Ty::Ind {
            desc: name.to_string(),
            params: other[..np].to_vec(),
            indices: other[np..].iter().map(|c| c.as_tm().cloned().unwrap()).collect(),
        });
        Ok((Ad::Ind { desc: name.to_string(), trans: te.trans() }, ty))
    }

    #[allow(clippy::too_many_arguments)]
    fn ind_ty_comp(
        &self,
        sc: &Scope,
        te: &TransE,
        dir: Dir,
        tel_dir: Dir,
        tel: &[Ty],
        names: &[String],
        body: &Expr,
        known: &Ty,
        forward: bool,
    ) -> R<(Ad, Ty, Ty)> {
        let sig = self.sig();
        let span = body.span;
        let nf_tel = |s: &Subst| -> Vec<Ty> { subst_tel(tel, s).iter().map(|a| sig.nf_ty(a)).collect() };
        let pushed = |m: &TransE| -> R<Subst> { Ok(sig.reindex(&at(span, sig.push_trans_tel(tel, m))?)) };
        match tel_dir {
            Dir::Pos => {
                let living = sc.extend(Dir::Pos, &nf_tel(&te.src_subst()), names).dual_by(dir);
                let r = pushed(te)?;
                if forward {
                    let (ad, tgt_r) = match dir {
                        Dir::Pos => self.ad_fwd(&living, body, known)?,
                        Dir::Neg => self.ad_bwd(&living, body, known)?,
                    };
                    let tgt = self.unreindex_subst(&tgt_r, &r, span)?;
                    Ok((ad, known.clone(), tgt))
                } else {
                    let tgt_r = sig.subst_ty_nf(known, &r);
                    let (ad, src) = match dir {
                        Dir::Pos => self.ad_bwd(&living, body, &tgt_r)?,
                        Dir::Neg => self.ad_fwd(&living, body, &tgt_r)?,
                    };
                    Ok((ad, src, known.clone()))
                }
            }
            Dir::Neg => {
                let living = sc.extend(Dir::Neg, &nf_tel(&te.tgt_subst()), names).dual_by(dir);
                let r = pushed(&te.dual())?;
                if forward {
                    let src_r = sig.subst_ty_nf(known, &r);
                    let (ad, tgt) = match dir {
                        Dir::Pos => self.ad_fwd(&living, body, &src_r)?,
                        Dir::Neg => self.ad_bwd(&living, body, &src_r)?,
                    };
                    Ok((ad, known.clone(), tgt))
                } else {
                    let (ad, src_r) = match dir {
                        Dir::Pos => self.ad_bwd(&living, body, known)?,
                        Dir::Neg => self.ad_fwd(&living, body, known)?,
                    };
                    let src = self.unreindex_subst(&src_r, &r, span)?;
                    Ok((ad, src, known.clone()))
                }
            }
        }
    }

    // ---- data declarations ----

    fn data(&self, data: &Data) -> R<IndDesc> {
        let mut sc = Scope::default();
        let mut param_names = Vec::new();
        for p in &data.params {
            match &p.kind {
                ParamKind::Ty { dir, tel } => {
                    let tel_dir = if tel.first().is_some_and(|b| b.neg) { Dir::Neg } else { Dir::Pos };
                    if let Some(b) = tel.iter().find(|b| b.neg != (tel_dir == Dir::Neg)) {
                        return Err(err(b.span, ErrorKind::IllFormedDescription, "one direction for a whole telescope", b.name.clone()));
                    }
                    let (tys, _) = self.tel(&sc.dual_by(tel_dir), tel)?;
                    sc = sc.with_ty(&p.name, Entry::Ty { dir: *dir, tel_dir, tel: tys });
                }
                ParamKind::Tm { ty, neg } => {
                    let dir = if *neg { Dir::Neg } else { Dir::Pos };
                    let a = self.ty(&sc.dual_by(dir), ty)?;
                    sc = sc.with_tm(&p.name, dir, a);
                }
            }
            param_names.push(p.name.clone());
        }
        for b in &data.indices {
            unmarked(b)?;
        }
        let (indices, _) = self.tel(&sc, &data.indices)?;
        let mut desc = IndDesc {
            name: data.name.clone(),
            param_names,
            params: sc.ctx.clone(),
            index_names: data.indices.iter().map(|b| b.name.clone()).collect(),
            indices,
            cons: Vec::new(),
        };
        for c in &data.cons {
            let con = self.con(&sc, &desc, c)?;
            desc.cons.push(con);
        }
        Ok(desc)
    }

    /// A telescope, each binder positive over the previous ones.
    fn tel(&self, sc: &Scope, bs: &[Binder]) -> R<(Vec<Ty>, Scope)> {
        let mut s = sc.clone();
        let mut out = Vec::new();
        for b in bs {
            let a = self.ty(&s, &b.ty)?;
            s = s.with_tm(&b.name, Dir::Pos, a.clone());
            out.push(a);
        }
        Ok((out, s))
    }

    fn con(&self, params: &Scope, d: &IndDesc, c: &Con) -> R<ConDesc> {
        let me = &d.name;
        let positivity = |span: Span| err(span, ErrorKind::IllFormedDescription, format!("a strictly positive occurrence of {me}"), c.name.clone());
        let (binders, result) = telescope(&c.ty);
        let mut with_nrec = params.clone();
        let mut con = ConDesc { name: c.name.clone(), nrec_names: Vec::new(), nrec: Vec::new(), rec: Vec::new(), ind: Vec::new() };
        for b in &binders {
            unmarked(b)?;
            if !b.ty.mentions(me) {
                if !con.rec.is_empty() {
                    return Err(err(b.span, ErrorKind::IllFormedDescription, "non-recursive arguments before recursive ones", b.name.clone()));
                }
                let a = self.ty(&with_nrec, &b.ty)?;
                with_nrec = with_nrec.with_tm(&b.name, Dir::Pos, a.clone());
                con.nrec_names.push(b.name.clone());
                con.nrec.push(a);
                continue;
            }
            let (arit_bs, head) = telescope(&b.ty);
            if let Some(x) = arit_bs.iter().find(|x| x.ty.mentions(me)) {
                return Err(positivity(x.span));
            }
            for x in &arit_bs {
                unmarked(x)?;
            }
            let (arit, _) = self.tel(&with_nrec.dual(), &arit_bs)?;
            let names: Vec<String> = arit_bs.iter().map(|x| x.name.clone()).collect();
            let inner = with_nrec.extend(Dir::Neg, &arit, &names);
            let rind = self.self_app(&inner, d, head, positivity)?;
            con.rec.push(RecDesc { name: b.name.clone(), arit_names: names, arit, rind });
        }
        con.ind = self.self_app(&with_nrec, d, result, positivity)?;
        Ok(con)
    }

    /// `Self p₁ … pₙ i₁ … iₖ` with the parameters verbatim; returns the
    /// elaborated indices.
    fn self_app(&self, sc: &Scope, d: &IndDesc, e: &Expr, positivity: impl Fn(Span) -> Diagnostic) -> R<Vec<Tm>> {
        let (head, args) = e.spine();
        if !matches!(&head.kind, ExprKind::Name(n) if *n == d.name) {
            return Err(if e.mentions(&d.name) {
                positivity(e.span)
            } else {
                err(e.span, ErrorKind::IllFormedDescription, format!("a result in {}", d.name), "another type")
            });
        }
        let np = d.param_names.len();
        if args.len() != np + d.indices.len() {
            return Err(err(e.span, ErrorKind::ArityMismatch, format!("{} arguments to {}", np + d.indices.len(), d.name), args.len().to_string()));
        }
        for (a, p) in args[..np].iter().zip(&d.param_names) {
            if !matches!(&a.kind, ExprKind::Name(n) if n == p) {
                return Err(err(a.span, ErrorKind::IllFormedDescription, format!("parameter {p} passed unchanged"), "another argument"));
            }
        }
        if let Some(a) = args[np..].iter().find(|a| a.mentions(&d.name)) {
            return Err(positivity(a.span));
        }
        let extra = sc.ctx.tm_count() - d.params.tm_count();
        let tel = subst_tel(&d.indices, &Subst::weaken(extra, 0));
        self.inst(sc, &args[np..], &tel, e.span)
    }
}

/// Leading binders of a Π or arrow chain, and its result.
fn telescope(e: &Expr) -> (Vec<Binder>, &Expr) {
    let mut bs = Vec::new();
    let mut cur = e;
    loop {
        match &cur.kind {
            ExprKind::Pi(xs, body) => {
                bs.extend(xs.iter().cloned());
                cur = body;
            }
            ExprKind::Arrow(a, b) => {
                bs.push(Binder { name: String::new(), ty: (**a).clone(), neg: false, span: a.span });
                cur = b;
            }
            _ => return (bs, cur),
        }
    }
}

fn unmarked(b: &Binder) -> R<()> {
    if b.neg {
        return Err(err(b.span, ErrorKind::VarianceViolation, "an unmarked binder", format!("{}^-", b.name)));
    }
    Ok(())
}

fn fam1(e: &Expr) -> R<(&str, &Expr)> {
    match &e.kind {
        ExprKind::Fam(xs, b) if xs.len() == 1 => Ok((&xs[0], b)),
        ExprKind::Fam(xs, _) => Err(err(e.span, ErrorKind::ArityMismatch, "1 family binder", xs.len().to_string())),
        _ => Ok(("", e)),
    }
}

fn fam(e: &Expr, n: usize) -> R<(Vec<String>, &Expr)> {
    match &e.kind {
        ExprKind::Fam(xs, b) if xs.len() == n => Ok((xs.clone(), b)),
        ExprKind::Fam(xs, _) => Err(err(e.span, ErrorKind::ArityMismatch, format!("{n} family binders"), xs.len().to_string())),
        _ => Ok((vec![String::new(); n], e)),
    }
}

fn inferable(e: &Expr) -> bool {
    !matches!(e.kind, ExprKind::Lam(..) | ExprKind::Pair(..))
}

/// Definitions are inlined, so a lambda or pair can reach an eliminator;
/// such redexes are contracted during elaboration.
fn core_inferable(t: &Tm) -> bool {
    !matches!(t, Tm::Lam(_) | Tm::Pair(..))
}
