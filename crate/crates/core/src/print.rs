//! Printing core syntax in the concrete surface syntax. Output reparses
//! to the same core term; binder names are chosen fresh.

use crate::sig::Sig;
use crate::subst::*;
use crate::syntax::*;
use std::collections::HashSet;

const P_EXPR: u8 = 0;
const P_SIGMA: u8 = 1;
const P_CAST: u8 = 2;
const P_COMP: u8 = 3;
const P_APP: u8 = 4;
const P_ATOM: u8 = 5;

pub const KEYWORDS: &[&str] = &[
    "type", "postulate", "adapter", "data", "def", "check", "assert", "normalize", "fst", "snd", "id", "Pi", "Sigma", "Ty",
];

fn paren(s: String, have: u8, want: u8) -> String {
    if have < want {
        format!("({s})")
    } else {
        s
    }
}

pub struct Printer<'a> {
    sig: &'a Sig,
    tms: Vec<String>,
    tys: Vec<String>,
    globals: HashSet<String>,
}

impl<'a> Printer<'a> {
    pub fn new(sig: &'a Sig) -> Self {
        let mut globals: HashSet<String> = KEYWORDS.iter().map(|s| s.to_string()).collect();
        globals.extend(sig.bases.iter().cloned());
        globals.extend(sig.posts.keys().cloned());
        for d in sig.descs.values() {
            globals.insert(d.name.clone());
            globals.extend(d.cons.iter().map(|c| c.name.clone()));
        }
        Printer { sig, tms: Vec::new(), tys: Vec::new(), globals }
    }

    /// A printer with names for every entry of `ctx`.
    pub fn for_ctx(sig: &'a Sig, ctx: &Ctx) -> Self {
        let mut p = Printer::new(sig);
        for e in &ctx.entries {
            match e {
                Entry::Tm { .. } => {
                    let n = p.fresh("x");
                    p.tms.push(n);
                }
                Entry::Ty { .. } => {
                    let n = p.fresh("X");
                    p.tys.push(n);
                }
            }
        }
        p
    }

    pub fn with_names(sig: &'a Sig, tms: Vec<String>, tys: Vec<String>) -> Self {
        let mut p = Printer::new(sig);
        p.tms = tms;
        p.tys = tys;
        p
    }

    /// Names of the term and type variables in scope, outermost first.
    pub fn names(&self) -> (&[String], &[String]) {
        (&self.tms, &self.tys)
    }

    fn taken(&self, n: &str) -> bool {
        self.globals.contains(n) || self.tms.iter().any(|m| m == n) || self.tys.iter().any(|m| m == n)
    }

    /// A name based on `hint` that clashes with nothing in scope.
    pub fn fresh(&self, hint: &str) -> String {
        let base: String = hint.trim_end_matches(|c: char| c.is_ascii_digit() || c == '\'').to_string();
        let base = if base.is_empty() || !base.chars().next().unwrap().is_alphabetic() { "x".to_string() } else { base };
        if !self.taken(&base) {
            return base;
        }
        let ladder: &[&str] = if base.chars().next().unwrap().is_uppercase() { &["X", "Y", "Z", "W"] } else { &["x", "y", "z", "w"] };
        for l in ladder {
            if !self.taken(l) {
                return l.to_string();
            }
        }
        (1..).map(|i| format!("{base}{i}")).find(|n| !self.taken(n)).unwrap()
    }

    pub fn push_tm(&mut self, hint: &str) -> String {
        let n = self.fresh(hint);
        self.tms.push(n.clone());
        n
    }

    pub fn push_tm_named(&mut self, n: &str) {
        self.tms.push(n.to_string());
    }

    pub fn pop_tm(&mut self, k: usize) {
        for _ in 0..k {
            self.tms.pop();
        }
    }

    pub fn push_ty_named(&mut self, n: &str) {
        self.tys.push(n.to_string());
    }

    fn tm_name(&self, k: usize) -> String {
        self.tms.get(self.tms.len().wrapping_sub(k + 1)).cloned().unwrap_or_else(|| format!("#{k}"))
    }

    fn ty_name(&self, k: usize) -> String {
        self.tys.get(self.tys.len().wrapping_sub(k + 1)).cloned().unwrap_or_else(|| format!("#T{k}"))
    }

    pub fn con_name(&self, desc: &str, con: usize) -> String {
        let Ok(d) = self.sig.desc(desc) else { return format!("{desc}::#{con}") };
        let c = &d.cons[con].name;
        let clashes = self.sig.descs.values().filter(|e| e.cons.iter().any(|k| &k.name == c)).count() > 1
            || self.sig.bases.contains(c)
            || self.sig.posts.contains_key(c)
            || self.sig.descs.contains_key(c)
            || self.tms.iter().any(|n| n == c)
            || self.tys.iter().any(|n| n == c);
        if clashes {
            format!("{desc}::{c}")
        } else {
            c.clone()
        }
    }

    pub fn ty(&mut self, a: &Ty) -> String {
        self.ty_p(a).0
    }

    pub fn tm(&mut self, t: &Tm) -> String {
        self.tm_p(t).0
    }

    pub fn ad(&mut self, f: &Ad) -> String {
        self.ad_p(f).0
    }

    fn at(&mut self, a: &Ty, want: u8) -> String {
        let (s, p) = self.ty_p(a);
        paren(s, p, want)
    }

    fn tat(&mut self, t: &Tm, want: u8) -> String {
        let (s, p) = self.tm_p(t);
        paren(s, p, want)
    }

    fn aat(&mut self, f: &Ad, want: u8) -> String {
        let (s, p) = self.ad_p(f);
        paren(s, p, want)
    }

    fn ty_p(&mut self, a: &Ty) -> (String, u8) {
        match a {
            Ty::Base(n) => (n.clone(), P_ATOM),
            Ty::Head { idx, inst } => {
                let mut s = self.ty_name(*idx);
                if inst.is_empty() {
                    return (s, P_ATOM);
                }
                for t in inst {
                    s.push(' ');
                    s.push_str(&self.tat(t, P_ATOM));
                }
                (s, P_APP)
            }
            Ty::Pi(a0, b0) => {
                if occurs_ty(b0, 0) {
                    let dom = self.at(a0, P_EXPR);
                    let x = self.push_tm("x");
                    let cod = self.at(b0, P_EXPR);
                    self.pop_tm(1);
                    (format!("({x} : {dom}) -> {cod}"), P_EXPR)
                } else {
                    let dom = self.at(a0, P_SIGMA);
                    self.push_tm("x");
                    let cod = self.at(b0, P_EXPR);
                    self.pop_tm(1);
                    (format!("{dom} -> {cod}"), P_EXPR)
                }
            }
            Ty::Sigma(a0, b0) => {
                if occurs_ty(b0, 0) {
                    let fst = self.at(a0, P_EXPR);
                    let x = self.push_tm("x");
                    let snd = self.at(b0, P_SIGMA);
                    self.pop_tm(1);
                    (format!("({x} : {fst}) * {snd}"), P_SIGMA)
                } else {
                    let fst = self.at(a0, P_CAST);
                    self.push_tm("x");
                    let snd = self.at(b0, P_SIGMA);
                    self.pop_tm(1);
                    (format!("{fst} * {snd}"), P_SIGMA)
                }
            }
            Ty::Ind { desc, params, indices } => {
                let mut s = desc.clone();
                if params.is_empty() && indices.is_empty() {
                    return (s, P_ATOM);
                }
                for c in params {
                    s.push(' ');
                    s.push_str(&self.comp_arg(c));
                }
                for t in indices {
                    s.push(' ');
                    s.push_str(&self.tat(t, P_ATOM));
                }
                (s, P_APP)
            }
        }
    }

    /// A substitution component in argument position.
    fn comp_arg(&mut self, c: &SubComp) -> String {
        match c {
            SubComp::Tm { tm, .. } => self.tat(tm, P_ATOM),
            SubComp::Ty { arity: 0, ty, .. } => self.at(ty, P_ATOM),
            SubComp::Ty { arity, ty, .. } => {
                let names: Vec<String> = (0..*arity).map(|_| self.push_tm("x")).collect();
                let body = self.at(ty, P_EXPR);
                self.pop_tm(*arity);
                format!("{{{}. {body}}}", names.join(" "))
            }
        }
    }

    fn tm_p(&mut self, t: &Tm) -> (String, u8) {
        match t {
            Tm::Var(k) => (self.tm_name(*k), P_ATOM),
            Tm::Lam(b) => {
                let x = self.push_tm("x");
                let body = self.tat(b, P_EXPR);
                self.pop_tm(1);
                (format!("\\{x}. {body}"), P_EXPR)
            }
            Tm::App(f, u) => {
                let f = self.tat(f, P_APP);
                let u = self.tat(u, P_ATOM);
                (format!("{f} {u}"), P_APP)
            }
            Tm::Pair(a, b) => {
                let a = self.tat(a, P_EXPR);
                let b = self.tat(b, P_EXPR);
                (format!("({a}, {b})"), P_ATOM)
            }
            Tm::Fst(p) => (format!("fst {}", self.tat(p, P_ATOM)), P_APP),
            Tm::Snd(p) => (format!("snd {}", self.tat(p, P_ATOM)), P_APP),
            Tm::Cast(t, f) => {
                let t = self.tat(t, P_CAST);
                let f = self.aat(f, P_COMP);
                (format!("{t} <| {f}"), P_CAST)
            }
            Tm::Constr { desc, con, params, args } => {
                let mut s = self.con_name(desc, *con);
                if params.is_empty() && args.is_empty() {
                    return (s, P_ATOM);
                }
                for c in params {
                    s.push(' ');
                    s.push_str(&self.comp_arg(c));
                }
                for a in args {
                    s.push(' ');
                    s.push_str(&self.tat(a, P_ATOM));
                }
                (s, P_APP)
            }
        }
    }

    fn ad_p(&mut self, f: &Ad) -> (String, u8) {
        match f {
            Ad::Id => ("id".into(), P_ATOM),
            Ad::Comp(xs) => {
                let parts: Vec<String> = xs.iter().rev().map(|x| self.aat(x, P_APP)).collect();
                (parts.join(" << "), P_COMP)
            }
            Ad::Post { name, .. } => (name.clone(), P_ATOM),
            Ad::Sym { name, inst, .. } => {
                let mut s = name.clone();
                if inst.is_empty() {
                    return (s, P_ATOM);
                }
                for t in inst {
                    s.push(' ');
                    s.push_str(&self.tat(t, P_ATOM));
                }
                (s, P_APP)
            }
            Ad::Pi { dom, cod, .. } => {
                let d = self.aat(dom, P_EXPR);
                let x = self.push_tm("x");
                let c = self.aat(cod, P_EXPR);
                self.pop_tm(1);
                (format!("Pi[{d} > {{{x}. {c}}}]"), P_ATOM)
            }
            Ad::Sigma { fst, snd, .. } => {
                let d = self.aat(fst, P_EXPR);
                let x = self.push_tm("x");
                let c = self.aat(snd, P_EXPR);
                self.pop_tm(1);
                (format!("Sigma[{d} > {{{x}. {c}}}]"), P_ATOM)
            }
            Ad::Ind { desc, trans } => {
                let parts: Vec<String> = trans.comps.iter().map(|c| self.trans_comp(c)).collect();
                (format!("{desc}[{}]", parts.join(" > ")), P_ATOM)
            }
        }
    }

    fn trans_comp(&mut self, c: &TransComp) -> String {
        match c {
            TransComp::Tm { tm, .. } => self.tat(tm, P_EXPR),
            TransComp::Ty { tel, ad, .. } => {
                if tel.is_empty() {
                    return self.aat(ad, P_EXPR);
                }
                let names: Vec<String> = tel.iter().map(|_| self.push_tm("x")).collect();
                let body = self.aat(ad, P_EXPR);
                self.pop_tm(tel.len());
                format!("{{{}. {body}}}", names.join(" "))
            }
        }
    }

    /// Print a context as a binder list, extending the printer's scope.
    pub fn ctx(&mut self, ctx: &Ctx, tm_names: &[String], ty_names: &[String]) -> String {
        let mut out = Vec::new();
        let (mut i_tm, mut i_ty) = (0, 0);
        for e in &ctx.entries {
            match e {
                Entry::Tm { dir, ty } => {
                    let body = self.ty(ty);
                    let n = tm_names.get(i_tm).cloned().unwrap_or_else(|| self.fresh("x"));
                    i_tm += 1;
                    let mark = if *dir == Dir::Neg { "^-" } else { "" };
                    out.push(format!("({n} : {body}){mark}"));
                    self.tms.push(n);
                }
                Entry::Ty { dir, tel_dir, tel } => {
                    let n = ty_names.get(i_ty).cloned().unwrap_or_else(|| self.fresh("X"));
                    i_ty += 1;
                    let kind = format!("Ty{}", dir.sign());
                    let s = if tel.is_empty() {
                        format!("({n} : {kind})")
                    } else {
                        let t = self.tel(tel, *tel_dir);
                        format!("({n} : {t} -> {kind})")
                    };
                    out.push(s);
                    self.tys.push(n);
                }
            }
        }
        out.join(" ")
    }

    /// Print a telescope as binders without leaving them in scope.
    pub fn tel(&mut self, tel: &[Ty], d: Dir) -> String {
        let mark = if d == Dir::Neg { "^-" } else { "" };
        let mut parts = Vec::new();
        for a in tel {
            let s = self.ty(a);
            let x = self.push_tm("x");
            parts.push(format!("({x} : {s}){mark}"));
        }
        self.pop_tm(tel.len());
        parts.join(" ")
    }

    /// Print a telescope with the given names, leaving them in scope.
    pub fn tel_named(&mut self, tel: &[Ty], names: &[String]) -> Vec<String> {
        let mut parts = Vec::new();
        for (i, a) in tel.iter().enumerate() {
            let s = self.ty(a);
            let x = names.get(i).cloned().unwrap_or_else(|| self.fresh("x"));
            let x = if self.taken(&x) && !self.tms.contains(&x) { self.fresh(&x) } else { x };
            parts.push(format!("({x} : {s})"));
            self.tms.push(x);
        }
        parts
    }

    /// Print a description as a `data` declaration.
    pub fn desc(&mut self, d: &IndDesc) -> String {
        let saved = (self.tms.len(), self.tys.len());
        let mut head = format!("data {}", d.name);
        let (mut i_tm, mut i_ty) = (0, 0);
        let mut tm_names = Vec::new();
        let mut ty_names = Vec::new();
        for e in &d.params.entries {
            let n = d.param_names.get(i_tm + i_ty).cloned().unwrap_or_default();
            if e.is_tm() {
                tm_names.push(n);
                i_tm += 1;
            } else {
                ty_names.push(n);
                i_ty += 1;
            }
        }
        let params = self.ctx(&d.params, &tm_names, &ty_names);
        if !params.is_empty() {
            head.push(' ');
            head.push_str(&params);
        }
        let self_head = {
            let mut s = d.name.clone();
            let (mut t, mut y) = (0usize, 0usize);
            for e in d.params.entries.iter() {
                s.push(' ');
                if e.is_tm() {
                    s.push_str(&tm_names[t]);
                    t += 1;
                } else {
                    s.push_str(&ty_names[y]);
                    y += 1;
                }
            }
            s
        };
        if !d.indices.is_empty() {
            let parts = self.tel_named(&d.indices, &d.index_names);
            self.pop_tm(d.indices.len());
            head.push_str(&format!(" : {} -> Ty", parts.join(" ")));
        }
        let mut cons = Vec::new();
        for c in &d.cons {
            let mut binders = self.tel_named(&c.nrec, &c.nrec_names);
            for r in &c.rec {
                let arit = self.tel_named(&r.arit, &r.arit_names);
                let mut target = self_head.clone();
                for t in &r.rind {
                    target.push(' ');
                    target.push_str(&self.tat(t, P_ATOM));
                }
                self.pop_tm(r.arit.len());
                let ty = if arit.is_empty() { target } else { format!("{} -> {target}", arit.join(" ")) };
                let n = if r.name.is_empty() { self.fresh("r") } else { r.name.clone() };
                binders.push(format!("({n} : {ty})"));
                self.tms.push(n);
            }
            let mut result = self_head.clone();
            for t in &c.ind {
                result.push(' ');
                result.push_str(&self.tat(&weaken_tm(t, c.rec.len(), 0), P_ATOM));
            }
            self.pop_tm(c.nrec.len() + c.rec.len());
            let sig = if binders.is_empty() { result } else { format!("{} -> {result}", binders.join(" ")) };
            cons.push(format!("  {} : {sig}", c.name));
        }
        self.tms.truncate(saved.0);
        self.tys.truncate(saved.1);
        if cons.is_empty() {
            format!("{head} {{}}")
        } else {
            format!("{head} {{\n{}\n}}", cons.join(" ;\n"))
        }
    }
}

impl Sig {
    pub fn show_ty(&self, ctx: &Ctx, a: &Ty) -> String {
        Printer::for_ctx(self, ctx).ty(a)
    }

    pub fn show_tm(&self, ctx: &Ctx, t: &Tm) -> String {
        Printer::for_ctx(self, ctx).tm(t)
    }

    pub fn show_ad(&self, ctx: &Ctx, f: &Ad) -> String {
        Printer::for_ctx(self, ctx).ad(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inductive::builtin_sig;

    #[test]
    fn prints_list_description() {
        let sig = builtin_sig();
        let d = sig.desc("List").unwrap().clone();
        let s = Printer::new(&sig).desc(&d);
        assert_eq!(s, "data List (X : Ty+) {\n  nil : List X ;\n  cons : (x : X) (xs : List X) -> List X\n}");
    }

    #[test]
    fn prints_w_description() {
        let sig = builtin_sig();
        let d = sig.desc("W").unwrap().clone();
        let s = Printer::new(&sig).desc(&d);
        assert_eq!(s, "data W (X : Ty+) (Y : (x : X) -> Ty-) {\n  sup : (x : X) (k : (y : Y x) -> W X Y) -> W X Y\n}");
    }

    #[test]
    fn arrows_and_binders() {
        let mut sig = Sig::new();
        sig.add_base("A").unwrap();
        let a = Ty::base("A");
        let t = Ty::pi(a.clone(), Ty::sigma(a.clone(), a.clone()));
        assert_eq!(sig.show_ty(&Ctx::empty(), &t), "A -> A * A");
        let u = Ty::sigma(Ty::pi(a.clone(), a.clone()), a.clone());
        assert_eq!(sig.show_ty(&Ctx::empty(), &u), "(A -> A) * A");
    }
}
