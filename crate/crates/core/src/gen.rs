//! Seeded random generation of well-formed contexts, types, terms,
//! adapters and transformations, for the property suites and the set-model
//! oracle. Everything produced is closed over the signature of
//! `gen_sig` and, for terms, over an ambient context of variables.

use crate::functorial::TransE;
use crate::inductive::{builtin_descs, tree_desc};
use crate::sig::Sig;
use crate::subst::*;
use crate::syntax::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub const BASES: &[&str] = &["A", "B", "C"];

/// Postulated adapters between the base types.
pub const POSTS: &[(&str, &str, &str)] = &[("ab", "A", "B"), ("ba", "B", "A"), ("bc", "B", "C"), ("ca", "C", "A"), ("aa", "A", "A")];

pub fn gen_sig() -> Sig {
    let mut sig = Sig::new();
    for d in builtin_descs() {
        sig.add_desc(d).expect("builtin");
    }
    sig.add_desc(tree_desc()).expect("tree");
    for b in BASES {
        sig.add_base(b).expect("base");
    }
    for (n, s, t) in POSTS {
        sig.add_post(n, Ty::base(s), Ty::base(t)).expect("postulate");
    }
    sig
}

fn ind(desc: &str, params: Vec<SubComp>, indices: Vec<Tm>) -> Ty {
    Ty::Ind { desc: desc.into(), params, indices }
}

fn ty_arg(dir: Dir, arity: usize, ty: Ty) -> SubComp {
    SubComp::Ty { dir, tel_dir: Dir::Pos, arity, ty }
}

pub fn nat() -> Ty {
    ind("Nat", vec![], vec![])
}

pub fn numeral(n: usize) -> Tm {
    (0..n).fold(Tm::Constr { desc: "Nat".into(), con: 0, params: vec![], args: vec![] }, |acc, _| Tm::Constr {
        desc: "Nat".into(),
        con: 1,
        params: vec![],
        args: vec![acc],
    })
}

fn as_numeral(t: &Tm) -> Option<usize> {
    match t {
        Tm::Constr { desc, con: 0, .. } if desc == "Nat" => Some(0),
        Tm::Constr { desc, con: 1, args, .. } if desc == "Nat" => as_numeral(&args[0]).map(|n| n + 1),
        _ => None,
    }
}

/// Variables of base and finite function types only: every value of such
/// a context can be enumerated by the set model.
pub fn finite_ambient() -> Ctx {
    let (a, b, c) = (Ty::base("A"), Ty::base("B"), Ty::base("C"));
    Ctx::new(vec![
        Entry::Tm { dir: Dir::Pos, ty: a.clone() },
        Entry::Tm { dir: Dir::Pos, ty: b.clone() },
        Entry::Tm { dir: Dir::Pos, ty: c.clone() },
        Entry::Tm { dir: Dir::Pos, ty: Ty::pi(a.clone(), b.clone()) },
        Entry::Tm { dir: Dir::Pos, ty: Ty::pi(b, c) },
        Entry::Tm { dir: Dir::Pos, ty: a },
    ])
}

/// Adds variables of inductive type to `finite_ambient`.
pub fn rich_ambient() -> Ctx {
    let mut ctx = finite_ambient();
    let a = || ty_arg(Dir::Pos, 0, Ty::base("A"));
    ctx.push(Entry::Tm { dir: Dir::Pos, ty: ind("List", vec![a()], vec![]) });
    ctx.push(Entry::Tm { dir: Dir::Pos, ty: ind("W", vec![a(), ty_arg(Dir::Neg, 1, Ty::base("B"))], vec![]) });
    ctx.push(Entry::Tm { dir: Dir::Pos, ty: Ty::sigma(Ty::base("A"), Ty::base("C")) });
    ctx
}

pub struct Gen {
    pub rng: StdRng,
    pub sig: Sig,
}

impl Gen {
    pub fn new(seed: u64) -> Gen {
        Gen { rng: StdRng::seed_from_u64(seed), sig: gen_sig() }
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn base(&mut self) -> Ty {
        Ty::base(BASES.choose(&mut self.rng).unwrap())
    }

    /// A closed type.
    pub fn closed_ty(&mut self, depth: usize) -> Ty {
        if depth == 0 {
            return self.base();
        }
        match self.rng.gen_range(0..11) {
            0..=2 => self.base(),
            3 => Ty::pi(self.closed_ty(0), self.closed_ty(depth - 1)),
            4 => Ty::sigma(self.closed_ty(depth - 1), self.closed_ty(depth - 1)),
            5 => ind("List", vec![ty_arg(Dir::Pos, 0, self.closed_ty(depth - 1))], vec![]),
            6 => {
                let (x, y) = (self.closed_ty(depth - 1), self.closed_ty(depth - 1));
                ind("Sum", vec![ty_arg(Dir::Pos, 0, x), ty_arg(Dir::Pos, 0, y)], vec![])
            }
            7 => {
                let n = self.rng.gen_range(0..3);
                ind("Vec", vec![ty_arg(Dir::Pos, 0, self.closed_ty(depth - 1))], vec![numeral(n)])
            }
            8 => {
                let (x, y) = (self.closed_ty(depth - 1), self.closed_ty(0));
                ind("W", vec![ty_arg(Dir::Pos, 0, x), ty_arg(Dir::Neg, 1, y)], vec![])
            }
            9 => {
                let (x, y) = (self.closed_ty(depth - 1), self.closed_ty(0));
                ind("Tree", vec![ty_arg(Dir::Pos, 0, x), ty_arg(Dir::Neg, 0, y)], vec![])
            }
            _ => nat(),
        }
    }

    /// A type whose values are all finite and whose function domains are
    /// enumerable: base types, pairs, functions between them, and sums
    /// and lists only in covariant positions.
    pub fn finite_ty(&mut self, depth: usize) -> Ty {
        if depth == 0 {
            return self.base();
        }
        match self.rng.gen_range(0..7) {
            0..=1 => self.base(),
            2 => Ty::pi(self.base(), self.finite_ty(depth - 1)),
            3 => Ty::sigma(self.finite_ty(depth - 1), self.finite_ty(depth - 1)),
            4 => ind("List", vec![ty_arg(Dir::Pos, 0, self.finite_ty(depth - 1))], vec![]),
            5 => {
                let (x, y) = (self.finite_ty(depth - 1), self.finite_ty(depth - 1));
                ind("Sum", vec![ty_arg(Dir::Pos, 0, x), ty_arg(Dir::Pos, 0, y)], vec![])
            }
            _ => {
                let n = self.rng.gen_range(0..3);
                ind("Vec", vec![ty_arg(Dir::Pos, 0, self.finite_ty(depth - 1))], vec![numeral(n)])
            }
        }
    }

    fn post_from(&mut self, b: &str) -> Option<(Ad, Ty)> {
        let outs: Vec<_> = POSTS.iter().filter(|(_, s, _)| *s == b).collect();
        let (n, s, t) = outs.choose(&mut self.rng)?;
        Some((Ad::post(n, Ty::base(s), Ty::base(t)), Ty::base(t)))
    }

    fn post_into(&mut self, b: &str) -> Option<(Ad, Ty)> {
        let ins: Vec<_> = POSTS.iter().filter(|(_, _, t)| *t == b).collect();
        let (n, s, t) = ins.choose(&mut self.rng)?;
        Some((Ad::post(n, Ty::base(s), Ty::base(t)), Ty::base(s)))
    }

    /// An adapter out of `ty` (forward) or into `ty` (backward), with its
    /// other endpoint. `ty` may mention type variables, which only admit
    /// the identity.
    pub fn ad(&mut self, ty: &Ty, forward: bool, depth: usize) -> (Ad, Ty) {
        let (f, other) = self.ad_once(ty, forward, depth);
        if depth > 0 && self.coin(0.2) {
            let (g, other2) = self.ad_once(&other, forward, depth - 1);
            let chain = if forward { Ad::then(f, g) } else { Ad::then(g, f) };
            return (chain, other2);
        }
        (f, other)
    }

    fn ad_once(&mut self, ty: &Ty, forward: bool, depth: usize) -> (Ad, Ty) {
        if self.coin(0.1) {
            return (Ad::Id, ty.clone());
        }
        let d = depth.saturating_sub(1);
        match ty {
            Ty::Base(b) => {
                let p = if forward { self.post_from(b) } else { self.post_into(b) };
                p.unwrap_or((Ad::Id, ty.clone()))
            }
            Ty::Head { .. } => (Ad::Id, ty.clone()),
            Ty::Pi(a0, b0) if !occurs_ty(b0, 0) => {
                let (a, a1) = self.ad(a0, !forward, d);
                let (b, b1) = self.ad(&shift_down(b0), forward, d);
                let new_dom = if forward { a1.clone() } else { (**a0).clone() };
                let out = Ad::Pi { dom: Box::new(a), cod: Box::new(weaken_ad(&b, 1, 0)), new_dom: Box::new(new_dom) };
                (out, Ty::pi(a1, weaken_ty(&b1, 1, 0)))
            }
            Ty::Sigma(a0, b0) if !occurs_ty(b0, 0) => {
                let (a, a1) = self.ad(a0, forward, d);
                let (b, b1) = self.ad(&shift_down(b0), forward, d);
                let new_cod = if forward { weaken_ty(&b1, 1, 0) } else { (**b0).clone() };
                let out = Ad::Sigma { fst: Box::new(a), snd: Box::new(weaken_ad(&b, 1, 0)), new_cod: Box::new(new_cod) };
                (out, Ty::sigma(a1, weaken_ty(&b1, 1, 0)))
            }
            Ty::Ind { desc, params, indices } => self.ind_ad(desc, params, indices, forward, d),
            _ => (Ad::Id, ty.clone()),
        }
    }

    /// An inductive adapter with a component per parameter, generated in
    /// the parameter's direction. Parameters of families are closed types
    /// weakened by their arity.
    fn ind_ad(&mut self, desc: &str, params: &[SubComp], indices: &[Tm], forward: bool, depth: usize) -> (Ad, Ty) {
        let d = self.sig.desc(desc).unwrap().clone();
        let mut comps = Vec::new();
        let mut other = Vec::new();
        for (e, c) in d.params.entries.iter().zip(params) {
            match (e, c) {
                (Entry::Ty { dir, tel_dir, tel }, SubComp::Ty { arity, ty, .. }) => {
                    let closed = (0..*arity).fold(ty.clone(), |acc, _| shift_down(&acc));
                    let fwd = forward == (*dir == Dir::Pos);
                    let (f, o) = self.ad(&closed, fwd, depth);
                    let o_w = weaken_ty(&o, *arity, 0);
                    let (src, tgt) = if forward { (ty.clone(), o_w.clone()) } else { (o_w.clone(), ty.clone()) };
                    comps.push(TransComp::Ty {
                        dir: *dir,
                        tel_dir: *tel_dir,
                        tel: tel.clone(),
                        src,
                        tgt,
                        ad: weaken_ad(&f, *arity, 0),
                    });
                    other.push(SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: *arity, ty: o_w });
                }
                (Entry::Tm { dir, ty }, SubComp::Tm { tm, .. }) => {
                    comps.push(TransComp::Tm { dir: *dir, ty: ty.clone(), tm: tm.clone() });
                    other.push(c.clone());
                }
                _ => return (Ad::Id, Ty::Ind { desc: desc.into(), params: params.to_vec(), indices: indices.to_vec() }),
            }
        }
        let tys: Vec<Ty> = d.indices.clone();
        for (k, t) in indices.iter().enumerate() {
            comps.push(TransComp::Tm { dir: Dir::Pos, ty: tys[k].clone(), tm: t.clone() });
        }
        let out_ty = Ty::Ind { desc: desc.into(), params: other, indices: indices.to_vec() };
        (Ad::Ind { desc: desc.into(), trans: Trans { comps } }, out_ty)
    }

    fn vars_of(&self, ctx: &Ctx, ty: &Ty) -> Vec<usize> {
        (0..ctx.tm_count()).filter(|k| self.sig.lookup_tm(ctx, *k).map(|a| self.sig.conv_ty(&a, ty)).unwrap_or(false)).collect()
    }

    /// A term of `ty` in `ctx`, if one is found within the depth bound.
    pub fn tm(&mut self, ctx: &Ctx, ty: &Ty, depth: usize) -> Option<Tm> {
        let ty = self.sig.nf_ty(ty);
        let vars = self.vars_of(ctx, &ty);
        if !vars.is_empty() && (depth == 0 || self.coin(0.4)) {
            return Some(Tm::Var(*vars.choose(&mut self.rng).unwrap()));
        }
        if depth > 0 && self.coin(0.2) {
            let (f, src) = self.ad(&ty, false, 1);
            if let Some(t) = self.tm(ctx, &src, depth - 1).filter(inferable) {
                return Some(Tm::cast(t, f));
            }
        }
        if depth > 0 && self.coin(0.2) {
            if let Some(t) = self.elim(ctx, &ty, depth - 1) {
                return Some(t);
            }
        }
        let d = depth.saturating_sub(1);
        let made = match &ty {
            Ty::Pi(a0, b0) => {
                let inner = ctx.with_tm(Dir::Neg, (**a0).clone());
                self.tm(&inner, b0, d).map(Tm::lam)
            }
            Ty::Sigma(a0, b0) => {
                let a = self.tm(ctx, a0, d)?;
                let b = self.tm(ctx, &inst1_ty(b0, &a), d)?;
                Some(Tm::pair(a, b))
            }
            Ty::Ind { desc, params, indices } => self.constr(ctx, desc, params, indices, depth),
            _ => None,
        };
        made.or_else(|| vars.choose(&mut self.rng).map(|k| Tm::Var(*k))).or_else(|| {
            if depth > 0 {
                let (f, src) = self.ad(&ty, false, 1);
                self.tm(ctx, &src, depth - 1).filter(inferable).map(|t| Tm::cast(t, f))
            } else {
                None
            }
        })
    }

    /// An elimination producing `ty`: application of a function variable
    /// or a projection of a pair variable.
    fn elim(&mut self, ctx: &Ctx, ty: &Ty, depth: usize) -> Option<Tm> {
        let mut options = Vec::new();
        for k in 0..ctx.tm_count() {
            let Ok(a) = self.sig.lookup_tm(ctx, k) else { continue };
            match &a {
                Ty::Pi(dom, cod) if !occurs_ty(cod, 0) && self.sig.conv_ty(&shift_down(cod), ty) => {
                    options.push((k, 0, (**dom).clone()))
                }
                Ty::Sigma(x, y) if self.sig.conv_ty(x, ty) => {
                    let _ = y;
                    options.push((k, 1, Ty::base("A")))
                }
                Ty::Sigma(_, y) if !occurs_ty(y, 0) && self.sig.conv_ty(&shift_down(y), ty) => options.push((k, 2, Ty::base("A"))),
                _ => {}
            }
        }
        let (k, how, dom) = options.choose(&mut self.rng)?.clone();
        match how {
            0 => {
                let arg = self.tm(&ctx.dual(), &dom, depth)?;
                Some(Tm::app(Tm::Var(k), arg))
            }
            1 => Some(Tm::fst(Tm::Var(k))),
            _ => Some(Tm::snd(Tm::Var(k))),
        }
    }

    fn constr(&mut self, ctx: &Ctx, desc: &str, params: &[SubComp], indices: &[Tm], depth: usize) -> Option<Tm> {
        let d = self.sig.desc(desc).ok()?.clone();
        let n_cons = d.cons.len();
        let order: Vec<usize> = {
            let mut v: Vec<usize> = (0..n_cons).collect();
            v.shuffle(&mut self.rng);
            // Without depth left, prefer constructors without recursive arguments.
            if depth == 0 {
                v.sort_by_key(|i| d.cons[*i].rec.len());
            }
            v
        };
        for ic in order {
            if depth == 0 && !d.cons[ic].rec.is_empty() {
                continue;
            }
            if let Some(args) = self.constr_args(ctx, desc, ic, params, indices, depth.saturating_sub(1)) {
                return Some(Tm::Constr { desc: desc.into(), con: ic, params: params.to_vec(), args });
            }
        }
        None
    }

    fn constr_args(&mut self, ctx: &Ctx, desc: &str, ic: usize, params: &[SubComp], indices: &[Tm], depth: usize) -> Option<Vec<Tm>> {
        let ec = self.sig.con(desc, ic).ok()?.clone();
        let forced = self.forced_args(desc, ic, indices)?;
        let mut args: Vec<Tm> = Vec::new();
        for (i, a) in ec.tied.iter().enumerate() {
            if let Some(Some(t)) = forced.get(i) {
                args.push(t.clone());
                continue;
            }
            let mut s = params.to_vec();
            s.extend(args.iter().map(|t| SubComp::Tm { dir: Dir::Pos, tm: t.clone() }));
            let want = self.sig.subst_ty_nf(a, &Subst::spine(s));
            args.push(self.tm(ctx, &want, depth)?);
        }
        let Ok(Ty::Ind { indices: got, .. }) = self.sig.constr_result(desc, ic, params, &args) else { return None };
        got.iter().zip(indices).all(|(x, y)| self.sig.conv_tm(x, y)).then_some(args)
    }

    /// Arguments fixed by the wanted indices, for the indexed builtins.
    fn forced_args(&self, desc: &str, ic: usize, indices: &[Tm]) -> Option<Vec<Option<Tm>>> {
        match (desc, ic) {
            ("Vec", 0) => (as_numeral(&indices[0])? == 0).then(Vec::new),
            ("Vec", 1) => {
                let n = as_numeral(&indices[0])?;
                (n > 0).then(|| vec![None, Some(numeral(n - 1)), None])
            }
            _ => Some(Vec::new()),
        }
    }

    /// A target context of type variables of both directions followed by
    /// covariant term variables over them.
    pub fn delta(&mut self) -> Ctx {
        let mut ctx = Ctx::empty();
        let n_ty = self.rng.gen_range(1..=3);
        for i in 0..n_ty {
            let dir = if i == 0 || self.coin(0.6) { Dir::Pos } else { Dir::Neg };
            ctx.push(Entry::Ty { dir, tel_dir: Dir::Pos, tel: vec![] });
        }
        let n_tm = self.rng.gen_range(1..=3);
        for _ in 0..n_tm {
            let d = self.rng.gen_range(0..=1);
            let ty = self.open_ty(&ctx, Dir::Pos, d);
            ctx.push(Entry::Tm { dir: Dir::Pos, ty });
        }
        ctx
    }

    /// A type over `ctx` at polarity `pol`: type variables are used only
    /// where their direction agrees with the polarity.
    pub fn open_ty(&mut self, ctx: &Ctx, pol: Dir, depth: usize) -> Ty {
        let heads: Vec<usize> = (0..ctx.ty_count())
            .filter(|k| {
                let pos = ctx.ty_position(*k).unwrap();
                matches!(&ctx.entries[pos], Entry::Ty { dir, tel, .. } if *dir == pol && tel.is_empty())
            })
            .collect();
        let leaf = |g: &mut Gen| -> Ty {
            if !heads.is_empty() && g.coin(0.7) {
                Ty::var(*heads.choose(&mut g.rng).unwrap())
            } else {
                g.base()
            }
        };
        if depth == 0 {
            return leaf(self);
        }
        let d = depth - 1;
        match self.rng.gen_range(0..9) {
            0..=2 => leaf(self),
            3 => Ty::pi(self.open_ty(ctx, pol.flip(), d), self.open_ty(ctx, pol, d)),
            4 => Ty::sigma(self.open_ty(ctx, pol, d), self.open_ty(ctx, pol, d)),
            5 => ind("List", vec![ty_arg(Dir::Pos, 0, self.open_ty(ctx, pol, d))], vec![]),
            6 => {
                let (x, y) = (self.open_ty(ctx, pol, d), self.open_ty(ctx, pol, d));
                ind("Sum", vec![ty_arg(Dir::Pos, 0, x), ty_arg(Dir::Pos, 0, y)], vec![])
            }
            7 => {
                let (x, y) = (self.open_ty(ctx, pol, d), self.open_ty(ctx, pol.flip(), 0));
                ind("W", vec![ty_arg(Dir::Pos, 0, x), ty_arg(Dir::Neg, 1, y)], vec![])
            }
            _ => {
                let (x, y) = (self.open_ty(ctx, pol, d), self.open_ty(ctx, pol.flip(), 0));
                ind("Tree", vec![ty_arg(Dir::Pos, 0, x), ty_arg(Dir::Neg, 0, y)], vec![])
            }
        }
    }

    /// A transformation into `delta` over `ambient`, with closed type
    /// components.
    pub fn trans(&mut self, ambient: &Ctx, delta: &Ctx) -> Option<TransE> {
        let mut te = TransE::empty();
        for e in &delta.entries {
            let c = match e {
                Entry::Ty { dir, tel_dir, tel } => {
                    let src = self.closed_ty(1);
                    let (ad, other) = self.ad(&src, *dir == Dir::Pos, 1);
                    TransComp::Ty { dir: *dir, tel_dir: *tel_dir, tel: tel.clone(), src, tgt: other, ad }
                }
                Entry::Tm { dir, ty } => {
                    let side = if *dir == Dir::Pos { te.src_subst() } else { te.tgt_subst() };
                    let want = self.sig.subst_ty_nf(ty, &side);
                    let amb = ambient.dual_by(*dir);
                    let tm = self.tm(&amb, &want, 2)?;
                    TransComp::Tm { dir: *dir, ty: ty.clone(), tm }
                }
            };
            self.sig.push_comp(&mut te, c).ok()?;
        }
        Some(te)
    }

    /// A transformation out of the target spine of `mu`.
    pub fn trans_after(&mut self, ambient: &Ctx, delta: &Ctx, mu: &TransE) -> Option<TransE> {
        let mut te = TransE::empty();
        for (i, e) in delta.entries.iter().enumerate() {
            let c = match e {
                Entry::Ty { dir, tel_dir, tel } => {
                    let SubComp::Ty { ty: mid, .. } = &mu.tgt[i] else { return None };
                    let (ad, other) = self.ad(mid, *dir == Dir::Pos, 1);
                    TransComp::Ty { dir: *dir, tel_dir: *tel_dir, tel: tel.clone(), src: mid.clone(), tgt: other, ad }
                }
                Entry::Tm { dir: Dir::Pos, ty } => {
                    let SubComp::Tm { tm, .. } = &mu.tgt[i] else { return None };
                    TransComp::Tm { dir: Dir::Pos, ty: ty.clone(), tm: tm.clone() }
                }
                Entry::Tm { dir: Dir::Neg, ty } => {
                    let want = self.sig.subst_ty_nf(ty, &te.tgt_subst());
                    let tm = self.tm(&ambient.dual(), &want, 2)?;
                    TransComp::Tm { dir: Dir::Neg, ty: ty.clone(), tm }
                }
            };
            self.sig.push_comp(&mut te, c).ok()?;
        }
        Some(te)
    }

    /// A substitution spine into `delta` with closed type components.
    pub fn subst(&mut self, ambient: &Ctx, delta: &Ctx) -> Option<Vec<SubComp>> {
        let mut comps: Vec<SubComp> = Vec::new();
        for e in &delta.entries {
            match e {
                Entry::Ty { dir, tel_dir, tel } => {
                    comps.push(SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: tel.len(), ty: self.closed_ty(1) })
                }
                Entry::Tm { dir, ty } => {
                    let want = self.sig.subst_ty_nf(ty, &Subst::spine(comps.clone()));
                    let tm = self.tm(&ambient.dual_by(*dir), &want, 2)?;
                    comps.push(SubComp::Tm { dir: *dir, tm });
                }
            }
        }
        Some(comps)
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        xs.choose(&mut self.rng).unwrap()
    }
}

pub fn inferable(t: &Tm) -> bool {
    !matches!(t, Tm::Lam(_) | Tm::Pair(..))
}

/// Drop an unused innermost term variable.
pub fn shift_down(a: &Ty) -> Ty {
    subst_ty(a, &Subst::terms([Tm::Var(0)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_terms_check() {
        let mut g = Gen::new(7);
        let amb = rich_ambient();
        g.sig.check_ctx(&amb).unwrap();
        let mut made = 0;
        for _ in 0..200 {
            let ty = g.closed_ty(2);
            g.sig.check_ty(&amb, &ty).unwrap();
            if let Some(t) = g.tm(&amb, &ty, 3) {
                g.sig.check_tm(&amb, &t, &ty).unwrap_or_else(|e| panic!("{e}: {}", g.sig.show_tm(&amb, &t)));
                made += 1;
            }
        }
        assert!(made > 150, "{made}");
    }

    #[test]
    fn generated_adapters_check() {
        let mut g = Gen::new(11);
        for _ in 0..200 {
            let ty = g.closed_ty(2);
            let fwd = g.coin(0.5);
            let (f, other) = g.ad(&ty, fwd, 2);
            let (s, t) = if fwd { (&ty, &other) } else { (&other, &ty) };
            g.sig.check_ty(&Ctx::empty(), &other).unwrap();
            g.sig.check_ad(&Ctx::empty(), &f, s, t).unwrap_or_else(|e| panic!("{e}: {}", g.sig.show_ad(&Ctx::empty(), &f)));
        }
    }

    #[test]
    fn generated_transformations_check() {
        let mut g = Gen::new(3);
        let amb = rich_ambient();
        for _ in 0..100 {
            let delta = g.delta();
            g.sig.check_ctx(&delta).unwrap();
            let Some(mu) = g.trans(&amb, &delta) else { continue };
            let te = g.sig.check_trans(&amb, &mu.trans(), &delta).unwrap();
            assert_eq!(te.tgt, mu.tgt);
        }
    }
}
