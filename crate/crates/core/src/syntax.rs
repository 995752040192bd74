//! Raw syntax. Term variables and type variables are de Bruijn indices
//! counted separately: `Tm::Var(k)` is the k-th term entry from the
//! innermost end, `Ty::Head { idx }` the idx-th type-variable entry.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    Pos,
    Neg,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Pos => Dir::Neg,
            Dir::Neg => Dir::Pos,
        }
    }

    /// Group multiplication of Z/2.
    pub fn mul(self, other: Dir) -> Dir {
        if self == other {
            Dir::Pos
        } else {
            Dir::Neg
        }
    }

    pub fn sign(self) -> &'static str {
        match self {
            Dir::Pos => "+",
            Dir::Neg => "-",
        }
    }
}

impl std::ops::Mul for Dir {
    type Output = Dir;
    fn mul(self, rhs: Dir) -> Dir {
        Dir::mul(self, rhs)
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.sign())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ty {
    Head { idx: usize, inst: Vec<Tm> },
    Pi(Box<Ty>, Box<Ty>),
    Sigma(Box<Ty>, Box<Ty>),
    Ind { desc: String, params: Vec<SubComp>, indices: Vec<Tm> },
    Base(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tm {
    Var(usize),
    Lam(Box<Tm>),
    App(Box<Tm>, Box<Tm>),
    Pair(Box<Tm>, Box<Tm>),
    Fst(Box<Tm>),
    Snd(Box<Tm>),
    Cast(Box<Tm>, Box<Ad>),
    Constr { desc: String, con: usize, params: Vec<SubComp>, args: Vec<Tm> },
}

/// Adapters. `Comp` lists its atoms in application order: the first
/// element is applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ad {
    Id,
    Comp(Vec<Ad>),
    Post { name: String, src: Ty, tgt: Ty },
    /// `dom : A' => A` lives in the dual context, `cod` over `ctx ▷₋ A'`.
    Pi { dom: Box<Ad>, cod: Box<Ad>, new_dom: Box<Ty> },
    /// `snd` lives over `ctx ▷ A`, `new_cod` over `ctx ▷ A'`.
    Sigma { fst: Box<Ad>, snd: Box<Ad>, new_cod: Box<Ty> },
    Ind { desc: String, trans: Trans },
    /// An opaque adapter family instantiated at `inst`, used to state rule
    /// schemata. Never produced by elaboration.
    Sym { name: String, inst: Vec<Tm>, src: Ty, tgt: Ty },
}

/// One component of a substitution spine. A type component for an entry
/// with a telescope of length `arity` lives under `arity` extra term binders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubComp {
    Tm { dir: Dir, tm: Tm },
    Ty { dir: Dir, tel_dir: Dir, arity: usize, ty: Ty },
}

impl SubComp {
    pub fn dual(&self) -> SubComp {
        match self {
            SubComp::Tm { dir, tm } => SubComp::Tm { dir: dir.flip(), tm: tm.clone() },
            SubComp::Ty { dir, tel_dir, arity, ty } => SubComp::Ty {
                dir: dir.flip(),
                tel_dir: tel_dir.flip(),
                arity: *arity,
                ty: ty.clone(),
            },
        }
    }

    pub fn as_tm(&self) -> Option<&Tm> {
        match self {
            SubComp::Tm { tm, .. } => Some(tm),
            _ => None,
        }
    }

    pub fn as_ty(&self) -> Option<&Ty> {
        match self {
            SubComp::Ty { ty, .. } => Some(ty),
            _ => None,
        }
    }
}

/// A substitution `Γ → Δ`: `comps` fill the innermost entries of `Δ`, every
/// variable beyond them is shifted by `shift_tm` / `shift_ty`. The identity
/// has no components and zero shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Subst {
    pub shift_tm: usize,
    pub shift_ty: usize,
    pub comps: Vec<SubComp>,
}

impl Subst {
    pub fn id() -> Subst {
        Subst::default()
    }

    pub fn weaken(tm: usize, ty: usize) -> Subst {
        Subst { shift_tm: tm, shift_ty: ty, comps: Vec::new() }
    }

    pub fn spine(comps: Vec<SubComp>) -> Subst {
        Subst { shift_tm: 0, shift_ty: 0, comps }
    }

    /// `id ▷ t₁ ▷ … ▷ tₙ` with positive term components.
    pub fn terms(tms: impl IntoIterator<Item = Tm>) -> Subst {
        Subst::spine(tms.into_iter().map(|tm| SubComp::Tm { dir: Dir::Pos, tm }).collect())
    }

    pub fn dual(&self) -> Subst {
        Subst {
            shift_tm: self.shift_tm,
            shift_ty: self.shift_ty,
            comps: self.comps.iter().map(SubComp::dual).collect(),
        }
    }
}

/// One component of a transformation spine.
///
/// A positive term component stores the source-side term, a negative one
/// the target-side term; the other endpoint is forced. `ty` is the entry's
/// classifier over the target context.
///
/// A type component stores both endpoint types and the adapter. For a
/// positive component the adapter runs source to target, for a negative
/// one target to source. It lives over `ctx ▷ tel[src]` when `tel_dir` is
/// positive and over `ctx ▷₋ tel[tgt]` otherwise (dualized when `dir` is
/// negative).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TransComp {
    Tm { dir: Dir, ty: Ty, tm: Tm },
    Ty { dir: Dir, tel_dir: Dir, tel: Vec<Ty>, src: Ty, tgt: Ty, ad: Ad },
}

impl TransComp {
    pub fn dual(&self) -> TransComp {
        match self {
            TransComp::Tm { dir, ty, tm } => TransComp::Tm { dir: dir.flip(), ty: ty.clone(), tm: tm.clone() },
            TransComp::Ty { dir, tel_dir, tel, src, tgt, ad } => TransComp::Ty {
                dir: dir.flip(),
                tel_dir: tel_dir.flip(),
                tel: tel.clone(),
                src: tgt.clone(),
                tgt: src.clone(),
                ad: ad.clone(),
            },
        }
    }

    pub fn dir(&self) -> Dir {
        match self {
            TransComp::Tm { dir, .. } | TransComp::Ty { dir, .. } => *dir,
        }
    }
}

/// A transformation, always a full spine over its target context.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Trans {
    pub comps: Vec<TransComp>,
}

impl Trans {
    pub fn dual(&self) -> Trans {
        Trans { comps: self.comps.iter().map(TransComp::dual).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    Tm { dir: Dir, ty: Ty },
    Ty { dir: Dir, tel_dir: Dir, tel: Vec<Ty> },
}

impl Entry {
    pub fn dual(&self) -> Entry {
        match self {
            Entry::Tm { dir, ty } => Entry::Tm { dir: dir.flip(), ty: ty.clone() },
            Entry::Ty { dir, tel_dir, tel } => Entry::Ty { dir: dir.flip(), tel_dir: tel_dir.flip(), tel: tel.clone() },
        }
    }

    pub fn dir(&self) -> Dir {
        match self {
            Entry::Tm { dir, .. } | Entry::Ty { dir, .. } => *dir,
        }
    }

    pub fn is_tm(&self) -> bool {
        matches!(self, Entry::Tm { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Ctx {
    pub entries: Vec<Entry>,
}

impl Ctx {
    pub fn empty() -> Ctx {
        Ctx::default()
    }

    pub fn new(entries: Vec<Entry>) -> Ctx {
        Ctx { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn tm_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_tm()).count()
    }

    pub fn ty_count(&self) -> usize {
        self.entries.len() - self.tm_count()
    }

    pub fn dual(&self) -> Ctx {
        Ctx { entries: self.entries.iter().map(Entry::dual).collect() }
    }

    pub fn dual_by(&self, d: Dir) -> Ctx {
        match d {
            Dir::Pos => self.clone(),
            Dir::Neg => self.dual(),
        }
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    pub fn with(&self, e: Entry) -> Ctx {
        let mut c = self.clone();
        c.push(e);
        c
    }

    pub fn with_tm(&self, dir: Dir, ty: Ty) -> Ctx {
        self.with(Entry::Tm { dir, ty })
    }

    pub fn prefix(&self, n: usize) -> Ctx {
        Ctx { entries: self.entries[..n].to_vec() }
    }

    /// Extension by a telescope: one term entry per type, all of direction `d`.
    pub fn extend_by_tel(&self, d: Dir, tel: &[Ty]) -> Ctx {
        let mut c = self.clone();
        for ty in tel {
            c.push(Entry::Tm { dir: d, ty: ty.clone() });
        }
        c
    }

    /// Position in `entries` of the k-th term entry from the innermost end.
    pub fn tm_position(&self, k: usize) -> Option<usize> {
        self.entries.iter().enumerate().rev().filter(|(_, e)| e.is_tm()).nth(k).map(|(i, _)| i)
    }

    pub fn ty_position(&self, k: usize) -> Option<usize> {
        self.entries.iter().enumerate().rev().filter(|(_, e)| !e.is_tm()).nth(k).map(|(i, _)| i)
    }

    /// Number of term and type entries strictly after position `pos`.
    pub fn counts_after(&self, pos: usize) -> (usize, usize) {
        let rest = &self.entries[pos + 1..];
        let tm = rest.iter().filter(|e| e.is_tm()).count();
        (tm, rest.len() - tm)
    }
}

/// The variable instantiation of a telescope of length `n`, as seen from
/// the context extended by it.
pub fn vinst(n: usize) -> Vec<Tm> {
    (0..n).map(|i| Tm::Var(n - 1 - i)).collect()
}

/// Iterated Π over a telescope.
pub fn pi_tel(tel: &[Ty], body: Ty) -> Ty {
    tel.iter().rev().fold(body, |acc, a| Ty::Pi(Box::new(a.clone()), Box::new(acc)))
}

pub fn dualize_ctx(c: &Ctx, d: Dir) -> Ctx {
    c.dual_by(d)
}

pub fn dualize_subst(s: &Subst, d: Dir) -> Subst {
    match d {
        Dir::Pos => s.clone(),
        Dir::Neg => s.dual(),
    }
}

pub fn dualize_trans(t: &Trans, d: Dir) -> Trans {
    match d {
        Dir::Pos => t.clone(),
        Dir::Neg => t.dual(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecDesc {
    pub name: String,
    pub arit_names: Vec<String>,
    /// Over `(params ▷ nrec)⁻`.
    pub arit: Vec<Ty>,
    /// Over `(params ▷ nrec) ▷₋ arit`.
    pub rind: Vec<Tm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConDesc {
    pub name: String,
    pub nrec_names: Vec<String>,
    /// Over `params`.
    pub nrec: Vec<Ty>,
    pub rec: Vec<RecDesc>,
    /// Over `params ▷ nrec`.
    pub ind: Vec<Tm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndDesc {
    pub name: String,
    pub param_names: Vec<String>,
    pub params: Ctx,
    pub index_names: Vec<String>,
    /// Over `params`.
    pub indices: Vec<Ty>,
    pub cons: Vec<ConDesc>,
}

impl IndDesc {
    /// Copy with every binder name erased, for comparisons up to renaming.
    pub fn erase_names(&self) -> IndDesc {
        let mut d = self.clone();
        d.param_names.iter_mut().for_each(|n| n.clear());
        d.index_names.iter_mut().for_each(|n| n.clear());
        for c in &mut d.cons {
            c.nrec_names.iter_mut().for_each(|n| n.clear());
            for r in &mut c.rec {
                r.name.clear();
                r.arit_names.iter_mut().for_each(|n| n.clear());
            }
        }
        d
    }

    pub fn same_shape(&self, other: &IndDesc) -> bool {
        self.erase_names() == other.erase_names()
    }

    pub fn con_index(&self, name: &str) -> Option<usize> {
        self.cons.iter().position(|c| c.name == name)
    }
}

// Convenience constructors used throughout the kernel and tests.
impl Tm {
    pub fn app(f: Tm, u: Tm) -> Tm {
        Tm::App(Box::new(f), Box::new(u))
    }
    pub fn lam(b: Tm) -> Tm {
        Tm::Lam(Box::new(b))
    }
    pub fn pair(a: Tm, b: Tm) -> Tm {
        Tm::Pair(Box::new(a), Box::new(b))
    }
    pub fn fst(p: Tm) -> Tm {
        Tm::Fst(Box::new(p))
    }
    pub fn snd(p: Tm) -> Tm {
        Tm::Snd(Box::new(p))
    }
    pub fn cast(t: Tm, f: Ad) -> Tm {
        Tm::Cast(Box::new(t), Box::new(f))
    }
}

impl Ty {
    pub fn pi(a: Ty, b: Ty) -> Ty {
        Ty::Pi(Box::new(a), Box::new(b))
    }
    pub fn sigma(a: Ty, b: Ty) -> Ty {
        Ty::Sigma(Box::new(a), Box::new(b))
    }
    pub fn base(n: &str) -> Ty {
        Ty::Base(n.to_string())
    }
    pub fn var(idx: usize) -> Ty {
        Ty::Head { idx, inst: Vec::new() }
    }
}

impl Ad {
    pub fn post(name: &str, src: Ty, tgt: Ty) -> Ad {
        Ad::Post { name: name.to_string(), src, tgt }
    }

    /// `g ∘ f`: flattened, identities dropped.
    pub fn then(f: Ad, g: Ad) -> Ad {
        let mut chain = Vec::new();
        for a in [f, g] {
            match a {
                Ad::Id => {}
                Ad::Comp(xs) => chain.extend(xs),
                other => chain.push(other),
            }
        }
        match chain.len() {
            0 => Ad::Id,
            1 => chain.pop().unwrap(),
            _ => Ad::Comp(chain),
        }
    }

    pub fn chain(xs: impl IntoIterator<Item = Ad>) -> Ad {
        xs.into_iter().fold(Ad::Id, Ad::then)
    }

    pub fn atoms(&self) -> Vec<&Ad> {
        match self {
            Ad::Id => Vec::new(),
            Ad::Comp(xs) => xs.iter().collect(),
            other => vec![other],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_group() {
        assert_eq!(Dir::Neg * Dir::Neg, Dir::Pos);
        assert_eq!(Dir::Pos * Dir::Neg, Dir::Neg);
        assert_eq!(Dir::Pos.flip().flip(), Dir::Pos);
    }

    #[test]
    fn dual_context_flips_flags() {
        let c = Ctx::new(vec![
            Entry::Ty { dir: Dir::Neg, tel_dir: Dir::Pos, tel: vec![] },
            Entry::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![] },
        ]);
        let d = c.dual();
        assert_eq!(d.entries[0], Entry::Ty { dir: Dir::Pos, tel_dir: Dir::Neg, tel: vec![] });
        assert_eq!(d.entries[1].dir(), Dir::Neg);
        assert_eq!(d.dual(), c);
        assert_eq!(Ctx::empty().dual(), Ctx::empty());
    }

    #[test]
    fn telescope_extension() {
        let x = Ctx::new(vec![Entry::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![] }]);
        assert_eq!(x.extend_by_tel(Dir::Pos, &[]), x);
        let e = x.extend_by_tel(Dir::Pos, &[Ty::var(0)]);
        assert_eq!(e.entries[1], Entry::Tm { dir: Dir::Pos, ty: Ty::var(0) });
        let n = x.extend_by_tel(Dir::Neg, &[Ty::var(0), Ty::var(0)]);
        assert_eq!(n.len(), 3);
        assert!(n.entries[1..].iter().all(|e| e.dir() == Dir::Neg));
    }

    #[test]
    fn variable_instantiation() {
        assert!(vinst(0).is_empty());
        assert_eq!(vinst(1), vec![Tm::Var(0)]);
        assert_eq!(vinst(2), vec![Tm::Var(1), Tm::Var(0)]);
    }

    #[test]
    fn pi_telescope() {
        let a = Ty::base("A");
        let b = Ty::base("B");
        let c = Ty::base("C");
        assert_eq!(pi_tel(&[], a.clone()), a);
        assert_eq!(pi_tel(&[a.clone()], b.clone()), Ty::pi(a.clone(), b.clone()));
        assert_eq!(pi_tel(&[a.clone(), b.clone()], c.clone()), Ty::pi(a, Ty::pi(b, c)));
    }

    #[test]
    fn composition_flattens() {
        let f = Ad::post("f", Ty::base("A"), Ty::base("B"));
        let g = Ad::post("g", Ty::base("B"), Ty::base("C"));
        let h = Ad::post("h", Ty::base("C"), Ty::base("D"));
        assert_eq!(Ad::then(Ad::Id, f.clone()), f);
        assert_eq!(Ad::then(Ad::Id, Ad::Id), Ad::Id);
        let left = Ad::then(Ad::then(f.clone(), g.clone()), h.clone());
        let right = Ad::then(f, Ad::then(g, h));
        assert_eq!(left, right);
    }
}
