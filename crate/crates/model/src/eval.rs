//! Evaluation into finite sets and functions. Types become sets (with
//! dependent parts kept as closures), terms become values, adapters become
//! functions between values.

use crate::binding::Binding;
use crate::code::{AdCode, Code};
use crate::value::*;
use adaptt_core::print::Printer;
use adaptt_core::*;
use indexmap::IndexMap;
use std::cell::OnceCell;
use std::rc::Rc;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("NonEnumerableDomain {0}")]
    NonEnumerableDomain(String),
    #[error("UnboundBase {0}")]
    UnboundBase(String),
    #[error("UnboundAdapter {0}")]
    UnboundAdapter(String),
    #[error("BadBinding {0}")]
    BadBinding(String),
    #[error("Stuck {0}")]
    Stuck(String),
}

pub type R<T> = Result<T, ModelError>;

fn stuck(what: impl Into<String>) -> ModelError {
    ModelError::Stuck(what.into())
}

/// A signature interpreted in finite sets.
pub struct Model<'a> {
    pub sig: &'a Sig,
    bases: IndexMap<String, Rc<Vec<Val>>>,
    tables: IndexMap<String, (SemTy, Vec<(Val, Val)>)>,
    missing: IndexMap<String, String>,
}

impl<'a> Model<'a> {
    /// Interpret base types and postulated adapters by a binding. Tables
    /// must be total on enumerable sources and land in their targets.
    /// Unbound names only fail when evaluation reaches them.
    pub fn new(sig: &'a Sig, binding: &Binding) -> R<Model<'a>> {
        let mut m = Model { sig, bases: IndexMap::new(), tables: IndexMap::new(), missing: IndexMap::new() };
        for (name, elems) in &binding.types {
            if !sig.bases.contains(name) {
                return Err(ModelError::BadBinding(format!("{name} is not a base type")));
            }
            m.bases.insert(name.clone(), Rc::new(elems.iter().map(|e| Val::Elem(e.clone())).collect()));
        }
        for (name, (src, tgt)) in &sig.posts {
            let key = format!("{}->{}", show(sig, src), show(sig, tgt));
            let Some(by_ty) = binding.adapters.get(name) else {
                m.missing.insert(name.clone(), "no table".into());
                continue;
            };
            let Some(table) = by_ty.get(&key) else {
                return Err(ModelError::BadBinding(format!("{name}: expected a table for {key}")));
            };
            let (s, t) = match (m.ty(&Env::default(), src), m.ty(&Env::default(), tgt)) {
                (Ok(s), Ok(t)) => (s, t),
                (Err(e), _) | (_, Err(e)) => {
                    m.missing.insert(name.clone(), e.to_string());
                    continue;
                }
            };
            let mut entries = Vec::new();
            for (k, v) in table {
                let kv = m.parse_val(k, &s).map_err(|e| ModelError::BadBinding(format!("{name}: {e}")))?;
                let vv = m.parse_val(v, &t).map_err(|e| ModelError::BadBinding(format!("{name}: {e}")))?;
                entries.push((kv, vv));
            }
            if let Some(all) = m.finite_values(&s)? {
                for x in all {
                    let mut hit = false;
                    for (k, _) in &entries {
                        hit |= m.eq(&x, k, &s)?;
                    }
                    if !hit {
                        return Err(ModelError::BadBinding(format!("{name}: no entry for {x}")));
                    }
                }
            }
            m.tables.insert(name.clone(), (s, entries));
        }
        Ok(m)
    }

    // ---- types ----

    pub fn ty(&self, env: &Env, a: &Ty) -> R<SemTy> {
        match a {
            Ty::Base(n) => {
                let elems = self.bases.get(n).ok_or_else(|| ModelError::UnboundBase(n.clone()))?;
                Ok(SemTy::Base { name: n.clone(), elems: elems.clone() })
            }
            Ty::Head { idx, inst } => {
                let fam = env.ty(*idx).ok_or_else(|| stuck(format!("type variable #{idx}")))?.clone();
                let vals = inst.iter().map(|t| self.tm(env, t)).collect::<R<Vec<_>>>()?;
                self.fam_at(&fam, vals)
            }
            Ty::Pi(a0, b0) => Ok(SemTy::Pi(Rc::new(self.ty(env, a0)?), (**b0).clone(), env.clone())),
            Ty::Sigma(a0, b0) => Ok(SemTy::Sigma(Rc::new(self.ty(env, a0)?), (**b0).clone(), env.clone())),
            Ty::Ind { desc, params, indices } => {
                let mut ps = Env::default();
                for c in params {
                    ps = ps.with(match c {
                        SubComp::Tm { tm, .. } => EnvEntry::Tm(self.tm(env, tm)?),
                        SubComp::Ty { arity, ty, .. } => EnvEntry::Ty(Rc::new(Fam::Syn { arity: *arity, ty: ty.clone(), env: env.clone() })),
                    });
                }
                let indices = indices.iter().map(|t| self.tm(env, t)).collect::<R<Vec<_>>>()?;
                Ok(SemTy::Ind { desc: desc.clone(), params: ps, indices })
            }
        }
    }

    fn fam_at(&self, fam: &Fam, vals: Vec<Val>) -> R<SemTy> {
        match fam {
            Fam::Const(t) => Ok(t.clone()),
            Fam::Syn { arity, ty, env } => {
                if vals.len() != *arity {
                    return Err(stuck("family instantiated at the wrong arity"));
                }
                self.ty(&env.with_tms(vals), ty)
            }
        }
    }

    /// Codomain of a Π or second component of a Σ at a value.
    pub fn inst(&self, body: &Ty, env: &Env, v: Val) -> R<SemTy> {
        self.ty(&env.with_tm(v), body)
    }

    /// Every value of an enumerable type, in a fixed order.
    pub fn enumerate(&self, a: &SemTy) -> R<Vec<Val>> {
        match a {
            SemTy::Base { elems, .. } => Ok((**elems).clone()),
            SemTy::Sigma(a0, b, env) => {
                let mut out = Vec::new();
                for x in self.enumerate(a0)? {
                    for y in self.enumerate(&self.inst(b, env, x.clone())?)? {
                        out.push(Val::Pair(Rc::new(x.clone()), Rc::new(y)));
                    }
                }
                Ok(out)
            }
            SemTy::Pi(a0, b, env) => {
                let dom = self.enumerate(a0)?;
                let cods = dom.iter().map(|x| self.enumerate(&self.inst(b, env, x.clone())?)).collect::<R<Vec<_>>>()?;
                let mut tables: Vec<Vec<(Val, Val)>> = vec![Vec::new()];
                for (x, cod) in dom.iter().zip(&cods) {
                    let mut next = Vec::with_capacity(tables.len() * cod.len());
                    for t in &tables {
                        for y in cod {
                            let mut t2 = t.clone();
                            t2.push((x.clone(), y.clone()));
                            next.push(t2);
                        }
                    }
                    tables = next;
                }
                Ok(tables.into_iter().map(|entries| Val::Fun(Rc::new(Fun::Table { dom: (**a0).clone(), entries }))).collect())
            }
            SemTy::Ind { desc, .. } => Err(ModelError::NonEnumerableDomain(desc.clone())),
        }
    }

    /// All values of a type known to be finite: enumerable types, and
    /// inductive types whose bounded inhabitants stop growing early.
    fn finite_values(&self, a: &SemTy) -> R<Option<Vec<Val>>> {
        if a.enumerable() {
            return self.enumerate(a).map(Some);
        }
        let cap = 1 << 12;
        let mut last = self.inhabitants(a, 1, cap)?.len();
        for depth in 2..=4 {
            let vals = self.inhabitants(a, depth, cap)?;
            if vals.len() == last && vals.len() < cap {
                return Ok(Some(vals));
            }
            last = vals.len();
        }
        Ok(None)
    }

    /// Values of a type, with constructor trees cut off at `depth` and at
    /// most `cap` values kept per type. Agrees with `enumerate` on
    /// enumerable types small enough.
    pub fn inhabitants(&self, a: &SemTy, depth: usize, cap: usize) -> R<Vec<Val>> {
        let mut out = match a {
            SemTy::Base { .. } => self.enumerate(a)?,
            SemTy::Pi(a0, b, env) => {
                let dom = self.enumerate(a0)?;
                let mut tables: Vec<Vec<(Val, Val)>> = vec![Vec::new()];
                for x in &dom {
                    let cod = self.inhabitants(&self.inst(b, env, x.clone())?, depth, cap)?;
                    let mut next = Vec::new();
                    'grow: for t in &tables {
                        for y in &cod {
                            let mut t2 = t.clone();
                            t2.push((x.clone(), y.clone()));
                            next.push(t2);
                            if next.len() >= cap {
                                break 'grow;
                            }
                        }
                    }
                    tables = next;
                }
                tables.into_iter().map(|entries| Val::Fun(Rc::new(Fun::Table { dom: (**a0).clone(), entries }))).collect()
            }
            SemTy::Sigma(a0, b, env) => {
                let mut out = Vec::new();
                for x in self.inhabitants(a0, depth, cap)? {
                    for y in self.inhabitants(&self.inst(b, env, x.clone())?, depth, cap)? {
                        out.push(Val::Pair(Rc::new(x.clone()), Rc::new(y)));
                    }
                }
                out
            }
            SemTy::Ind { desc, params, indices } => {
                if depth == 0 {
                    return Ok(Vec::new());
                }
                let d = self.sig.desc(desc).map_err(|e| stuck(e.to_string()))?;
                let mut out = Vec::new();
                for (ic, c) in d.cons.iter().enumerate() {
                    let ec = self.sig.con(desc, ic).map_err(|e| stuck(e.to_string()))?;
                    let mut partial: Vec<Vec<Val>> = vec![Vec::new()];
                    for t in &ec.tied {
                        let mut next = Vec::new();
                        for args in &partial {
                            let ty = self.ty(&params.with_tms(args.iter().cloned()), t)?;
                            for v in self.inhabitants(&ty, depth - 1, cap)? {
                                let mut a2 = args.clone();
                                a2.push(v);
                                next.push(a2);
                            }
                        }
                        next.truncate(cap);
                        partial = next;
                    }
                    for args in partial {
                        let env = params.with_tms(args.iter().cloned());
                        let mut fits = true;
                        for (k, (r, want)) in ec.result_indices.iter().zip(indices).enumerate() {
                            let it = self.ty(&params.with_tms(indices[..k].iter().cloned()), &d.indices[k])?;
                            fits &= self.eq(&self.tm(&env, r)?, want, &it)?;
                        }
                        if fits {
                            out.push(Val::Con { desc: desc.as_str().into(), con: ic, name: c.name.as_str().into(), args });
                        }
                    }
                }
                out
            }
        };
        out.truncate(cap);
        Ok(out)
    }

    // ---- terms ----

    pub fn tm(&self, env: &Env, t: &Tm) -> R<Val> {
        self.run(env, &self.compile(t)?)
    }

    /// Apply the function an adapter denotes in `env` to a value.
    pub fn cast(&self, env: &Env, f: &Ad, v: Val) -> R<Val> {
        self.run_ad(env, &self.compile_ad(f)?, v)
    }

    pub fn compile(&self, t: &Tm) -> R<Rc<Code>> {
        Ok(Rc::new(match t {
            Tm::Var(k) => Code::Var(*k),
            Tm::Lam(b) => Code::Lam(self.compile(b)?),
            Tm::App(f, u) => Code::App(self.compile(f)?, self.compile(u)?),
            Tm::Pair(a, b) => Code::Pair(self.compile(a)?, self.compile(b)?),
            Tm::Fst(p) => Code::Fst(self.compile(p)?),
            Tm::Snd(p) => Code::Snd(self.compile(p)?),
            Tm::Cast(t, f) => Code::Cast(self.compile(t)?, self.compile_ad(f)?),
            Tm::Constr { desc, con, args, .. } => {
                let d = self.sig.desc(desc).map_err(|e| stuck(e.to_string()))?;
                Code::Constr {
                    desc: desc.as_str().into(),
                    con: *con,
                    name: d.cons[*con].name.as_str().into(),
                    args: args.iter().map(|a| self.compile(a)).collect::<R<_>>()?,
                }
            }
        }))
    }

    pub fn compile_ad(&self, f: &Ad) -> R<Rc<AdCode>> {
        Ok(Rc::new(match f {
            Ad::Id => AdCode::Id,
            Ad::Comp(xs) => AdCode::Comp(xs.iter().map(|x| self.compile_ad(x)).collect::<R<_>>()?),
            Ad::Post { name, .. } => AdCode::Post(name.clone()),
            Ad::Sym { name, .. } => AdCode::Sym(name.clone()),
            Ad::Pi { dom, cod, .. } => AdCode::Pi { dom: self.compile_ad(dom)?, cod: self.compile_ad(cod)? },
            Ad::Sigma { fst, snd, .. } => AdCode::Sigma { fst: self.compile_ad(fst)?, snd: self.compile_ad(snd)? },
            Ad::Ind { desc, trans } => {
                let n = self.sig.desc(desc).map_err(|e| stuck(e.to_string()))?.cons.len();
                AdCode::Ind { desc: desc.as_str().into(), trans: trans.clone(), args: (0..n).map(|_| OnceCell::new()).collect() }
            }
        }))
    }

    /// Evaluate compiled code; compile once to share work across environments.
    pub fn run(&self, env: &Env, t: &Rc<Code>) -> R<Val> {
        match &**t {
            Code::Var(k) => env.tm(*k).cloned().ok_or_else(|| stuck(format!("term variable #{k}"))),
            Code::Lam(b) => Ok(Val::Fun(Rc::new(Fun::Closure { body: b.clone(), env: env.clone() }))),
            Code::App(f, u) => {
                let f = self.run(env, f)?;
                let u = self.run(env, u)?;
                self.apply(&f, u)
            }
            Code::Pair(a, b) => Ok(Val::Pair(Rc::new(self.run(env, a)?), Rc::new(self.run(env, b)?))),
            Code::Fst(p) => match self.run(env, p)? {
                Val::Pair(a, _) => Ok((*a).clone()),
                v => Err(stuck(format!("fst of {v}"))),
            },
            Code::Snd(p) => match self.run(env, p)? {
                Val::Pair(_, b) => Ok((*b).clone()),
                v => Err(stuck(format!("snd of {v}"))),
            },
            Code::Cast(t, f) => {
                let v = self.run(env, t)?;
                self.run_ad(env, f, v)
            }
            Code::Constr { desc, con, name, args } => Ok(Val::Con {
                desc: desc.clone(),
                con: *con,
                name: name.clone(),
                args: args.iter().map(|a| self.run(env, a)).collect::<R<Vec<_>>>()?,
            }),
        }
    }

    pub fn apply(&self, f: &Val, u: Val) -> R<Val> {
        let Val::Fun(fun) = f else { return Err(stuck(format!("applying {f}"))) };
        match &**fun {
            Fun::Closure { body, env } => self.run(&env.with_tm(u), body),
            Fun::Table { dom, entries } => {
                for (k, v) in entries {
                    if self.eq(k, &u, dom)? {
                        return Ok(v.clone());
                    }
                }
                Err(stuck(format!("{u} outside a function table")))
            }
            Fun::Cast { inner, dom, cod, env } => {
                let x = self.run_ad(env, dom, u.clone())?;
                let y = self.apply(inner, x)?;
                self.run_ad(&env.with_tm(u), cod, y)
            }
        }
    }

    fn run_ad(&self, env: &Env, f: &Rc<AdCode>, v: Val) -> R<Val> {
        match &**f {
            AdCode::Id => Ok(v),
            AdCode::Comp(xs) => xs.iter().try_fold(v, |acc, x| self.run_ad(env, x, acc)),
            AdCode::Post(name) => {
                let Some((src, entries)) = self.tables.get(name) else {
                    let why = self.missing.get(name).cloned().unwrap_or_default();
                    return Err(ModelError::UnboundAdapter(format!("{name} ({why})")));
                };
                for (k, out) in entries {
                    if self.eq(k, &v, src)? {
                        return Ok(out.clone());
                    }
                }
                Err(ModelError::BadBinding(format!("{name}: no entry for {v}")))
            }
            AdCode::Sym(name) => Err(stuck(format!("schematic adapter {name}"))),
            AdCode::Pi { dom, cod } => {
                Ok(Val::Fun(Rc::new(Fun::Cast { inner: v, dom: dom.clone(), cod: cod.clone(), env: env.clone() })))
            }
            AdCode::Sigma { fst, snd } => {
                let Val::Pair(a, b) = v else { return Err(stuck(format!("pair adapter on {v}"))) };
                let a1 = self.run_ad(env, fst, (*a).clone())?;
                let b1 = self.run_ad(&env.with_tm((*a).clone()), snd, (*b).clone())?;
                Ok(Val::Pair(Rc::new(a1), Rc::new(b1)))
            }
            AdCode::Ind { desc, trans, args: per_con } => {
                // The structural map: keep the constructor and send every
                // argument along the action of its type.
                let Val::Con { con, name, args, .. } = v else { return Err(stuck(format!("{desc} adapter on {v}"))) };
                let cell = per_con.get(con).ok_or_else(|| stuck(format!("constructor #{con} of {desc}")))?;
                let alpha = match cell.get() {
                    Some(a) => a.clone(),
                    None => {
                        let a = self.arg_adapters(desc, con, trans)?;
                        cell.get_or_init(|| a).clone()
                    }
                };
                let mut out = Vec::with_capacity(args.len());
                for (i, (a, f)) in args.iter().zip(alpha.iter()).enumerate() {
                    let inner = env.with_tms(args[..i].iter().cloned());
                    out.push(self.run_ad(&inner, f, a.clone())?);
                }
                Ok(Val::Con { desc: desc.clone(), con, name, args: out })
            }
        }
    }

    fn arg_adapters(&self, desc: &str, con: usize, trans: &Trans) -> R<Rc<[Rc<AdCode>]>> {
        let sig = self.sig;
        let np = sig.desc(desc).map_err(|e| stuck(e.to_string()))?.params.len();
        let ec = sig.con(desc, con).map_err(|e| stuck(e.to_string()))?;
        let mu = sig.endpoints(&Trans { comps: trans.comps[..np].to_vec() }).map_err(|e| stuck(e.to_string()))?;
        let alpha = sig.push_trans_tel(&ec.tied, &mu).map_err(|e| stuck(e.to_string()))?;
        alpha.iter().map(|f| self.compile_ad(f)).collect()
    }

    // ---- equality ----

    /// Extensional equality at a type; functions are compared pointwise
    /// over their whole enumerated domain.
    pub fn eq(&self, x: &Val, y: &Val, a: &SemTy) -> R<bool> {
        match a {
            SemTy::Base { .. } => match (x, y) {
                (Val::Elem(p), Val::Elem(q)) => Ok(p == q),
                _ => Err(stuck(format!("comparing {x} and {y} at a base type"))),
            },
            SemTy::Pi(a0, b, env) => {
                if !a0.enumerable() {
                    return Err(ModelError::NonEnumerableDomain(self.describe(a0)));
                }
                for u in self.enumerate(a0)? {
                    let fx = self.apply(x, u.clone())?;
                    let fy = self.apply(y, u.clone())?;
                    if !self.eq(&fx, &fy, &self.inst(b, env, u)?)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            SemTy::Sigma(a0, b, env) => match (x, y) {
                (Val::Pair(x0, x1), Val::Pair(y0, y1)) => {
                    if !self.eq(x0, y0, a0)? {
                        return Ok(false);
                    }
                    self.eq(x1, y1, &self.inst(b, env, (**x0).clone())?)
                }
                _ => Err(stuck(format!("comparing {x} and {y} at a pair type"))),
            },
            SemTy::Ind { desc, params, .. } => match (x, y) {
                (Val::Con { con: c0, args: xs, .. }, Val::Con { con: c1, args: ys, .. }) => {
                    if c0 != c1 {
                        return Ok(false);
                    }
                    let ec = self.sig.con(desc, *c0).map_err(|e| stuck(e.to_string()))?;
                    for (i, (p, q)) in xs.iter().zip(ys).enumerate() {
                        let env = params.with_tms(xs[..i].iter().cloned());
                        if !self.eq(p, q, &self.ty(&env, &ec.tied[i])?)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }
                _ => Err(stuck(format!("comparing {x} and {y} at {desc}"))),
            },
        }
    }

    /// Print a value at a type, tabulating functions with enumerable domains.
    pub fn render(&self, v: &Val, a: &SemTy) -> String {
        let shown = (|| -> R<String> {
            match (v, a) {
                (Val::Fun(_), SemTy::Pi(a0, b, env)) => {
                    let mut parts = Vec::new();
                    for x in self.enumerate(a0)? {
                        let y = self.apply(v, x.clone())?;
                        let cod = self.inst(b, env, x.clone())?;
                        parts.push(format!("{x} -> {}", self.render(&y, &cod)));
                    }
                    Ok(format!("{{{}}}", parts.join(", ")))
                }
                (Val::Pair(x, y), SemTy::Sigma(a0, b, env)) => {
                    Ok(format!("({}, {})", self.render(x, a0), self.render(y, &self.inst(b, env, (**x).clone())?)))
                }
                (Val::Con { con, name, args, .. }, SemTy::Ind { desc, params, .. }) => {
                    let ec = self.sig.con(desc, *con).map_err(|e| stuck(e.to_string()))?;
                    let mut out = name.to_string();
                    for (i, x) in args.iter().enumerate() {
                        let t = self.ty(&params.with_tms(args[..i].iter().cloned()), &ec.tied[i])?;
                        match x {
                            Val::Con { args: inner, .. } if !inner.is_empty() => out.push_str(&format!(" ({})", self.render(x, &t))),
                            _ => out.push_str(&format!(" {}", self.render(x, &t))),
                        }
                    }
                    Ok(out)
                }
                _ => Ok(v.to_string()),
            }
        })();
        shown.unwrap_or_else(|_| v.to_string())
    }

    fn describe(&self, a: &SemTy) -> String {
        match a {
            SemTy::Base { name, .. } => name.clone(),
            SemTy::Ind { desc, .. } => desc.clone(),
            SemTy::Pi(..) => "a function type".into(),
            SemTy::Sigma(..) => "a pair type".into(),
        }
    }

    // ---- reading values ----

    /// Read a first-order value: a base element, a pair `(a, b)`, or a
    /// constructor applied to arguments, nested arguments in parentheses.
    pub fn parse_val(&self, s: &str, a: &SemTy) -> R<Val> {
        let toks = tokenize(s);
        let mut pos = 0;
        let v = self.read(&toks, &mut pos, a, true)?;
        if pos != toks.len() {
            return Err(ModelError::BadBinding(format!("trailing input in {s:?}")));
        }
        Ok(v)
    }

    fn read(&self, toks: &[String], pos: &mut usize, a: &SemTy, top: bool) -> R<Val> {
        let bad = |what: &str, at: usize| ModelError::BadBinding(format!("expected {what} at token {at}"));
        let tok = toks.get(*pos).ok_or_else(|| bad("a value", *pos))?.clone();
        if tok == "(" {
            *pos += 1;
            let v = match a {
                SemTy::Sigma(a0, b, env) => {
                    let x = self.read(toks, pos, a0, true)?;
                    if toks.get(*pos).map(String::as_str) != Some(",") {
                        return Err(bad("','", *pos));
                    }
                    *pos += 1;
                    let y = self.read(toks, pos, &self.inst(b, env, x.clone())?, true)?;
                    Val::Pair(Rc::new(x), Rc::new(y))
                }
                _ => self.read(toks, pos, a, true)?,
            };
            if toks.get(*pos).map(String::as_str) != Some(")") {
                return Err(bad("')'", *pos));
            }
            *pos += 1;
            return Ok(v);
        }
        *pos += 1;
        match a {
            SemTy::Base { name, elems } => {
                let v = Val::Elem(tok.clone());
                if !elems.iter().any(|e| matches!(e, Val::Elem(x) if *x == tok)) {
                    return Err(ModelError::BadBinding(format!("{tok} is not an element of {name}")));
                }
                Ok(v)
            }
            SemTy::Ind { desc, params, .. } => {
                let d = self.sig.desc(desc).map_err(|e| stuck(e.to_string()))?;
                let con = d.con_index(&tok).ok_or_else(|| ModelError::BadBinding(format!("{tok} is not a constructor of {desc}")))?;
                let ec = self.sig.con(desc, con).map_err(|e| stuck(e.to_string()))?;
                if !top && !ec.tied.is_empty() {
                    return Err(bad("parentheses around a constructor application", *pos));
                }
                let mut args = Vec::new();
                for i in 0..ec.tied.len() {
                    let env = params.with_tms(args.iter().cloned());
                    let t = self.ty(&env, &ec.tied[i])?;
                    args.push(self.read(toks, pos, &t, false)?);
                }
                Ok(Val::Con { desc: desc.as_str().into(), con, name: tok.into(), args })
            }
            _ => Err(ModelError::BadBinding(format!("functions cannot be written in bindings ({tok})"))),
        }
    }
}

fn tokenize(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if ch.is_whitespace() || "(),".contains(ch) {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            if !ch.is_whitespace() {
                out.push(ch.to_string());
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

pub fn show(sig: &Sig, a: &Ty) -> String {
    Printer::new(sig).ty(a)
}
