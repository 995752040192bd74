//! Semantic values and types of the set model.

use crate::code::{AdCode, Code};
use adaptt_core::Ty;
use std::fmt;
use std::rc::Rc;

#[derive(Clone, Debug)]
pub enum Val {
    /// An element of a base type.
    Elem(String),
    Pair(Rc<Val>, Rc<Val>),
    /// A constructor tree. Parameters are carried by the type, not the value.
    Con { desc: Rc<str>, con: usize, name: Rc<str>, args: Vec<Val> },
    Fun(Rc<Fun>),
}

#[derive(Debug)]
pub enum Fun {
    Closure { body: Rc<Code>, env: Env },
    /// A finite table over an enumerated domain.
    Table { dom: SemTy, entries: Vec<(Val, Val)> },
    /// `a' ↦ cod(f(dom a'))`, a function cast along a Π adapter.
    Cast { inner: Val, dom: Rc<AdCode>, cod: Rc<AdCode>, env: Env },
}

#[derive(Clone, Debug)]
pub enum EnvEntry {
    Tm(Val),
    Ty(Rc<Fam>),
}

/// A type family over a telescope of `arity` values.
#[derive(Debug)]
pub enum Fam {
    Const(SemTy),
    /// `ty` over `env` extended by the telescope.
    Syn { arity: usize, ty: Ty, env: Env },
}

/// A persistent environment, innermost entry first. Term and type
/// variables are counted separately.
#[derive(Clone, Debug, Default)]
pub struct Env(Option<Rc<Node>>);

#[derive(Debug)]
struct Node {
    entry: EnvEntry,
    rest: Env,
}

impl Env {
    pub fn with(&self, entry: EnvEntry) -> Env {
        Env(Some(Rc::new(Node { entry, rest: self.clone() })))
    }

    pub fn with_tm(&self, v: Val) -> Env {
        self.with(EnvEntry::Tm(v))
    }

    pub fn with_tms(&self, vs: impl IntoIterator<Item = Val>) -> Env {
        vs.into_iter().fold(self.clone(), |e, v| e.with_tm(v))
    }

    fn iter(&self) -> impl Iterator<Item = &EnvEntry> {
        let mut cur = self.0.as_deref();
        std::iter::from_fn(move || {
            let n = cur?;
            cur = n.rest.0.as_deref();
            Some(&n.entry)
        })
    }

    pub fn tm(&self, k: usize) -> Option<&Val> {
        self.iter()
            .filter_map(|e| match e {
                EnvEntry::Tm(v) => Some(v),
                EnvEntry::Ty(_) => None,
            })
            .nth(k)
    }

    pub fn ty(&self, k: usize) -> Option<&Rc<Fam>> {
        self.iter()
            .filter_map(|e| match e {
                EnvEntry::Ty(f) => Some(f),
                EnvEntry::Tm(_) => None,
            })
            .nth(k)
    }
}

/// A type evaluated in an environment. Dependent parts stay closures.
#[derive(Clone, Debug)]
pub enum SemTy {
    Base { name: String, elems: Rc<Vec<Val>> },
    Pi(Rc<SemTy>, Ty, Env),
    Sigma(Rc<SemTy>, Ty, Env),
    /// Parameter entries in description order, and index values.
    Ind { desc: String, params: Env, indices: Vec<Val> },
}

impl SemTy {
    /// False when enumeration is sure to fail. Codomains are not inspected.
    pub fn enumerable(&self) -> bool {
        match self {
            SemTy::Base { .. } => true,
            SemTy::Pi(a, ..) | SemTy::Sigma(a, ..) => a.enumerable(),
            SemTy::Ind { .. } => false,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Elem(s) => f.write_str(s),
            Val::Pair(a, b) => write!(f, "({a}, {b})"),
            Val::Con { name, args, .. } => {
                f.write_str(name)?;
                for a in args {
                    match a {
                        Val::Con { args: inner, .. } if !inner.is_empty() => write!(f, " ({a})")?,
                        _ => write!(f, " {a}")?,
                    }
                }
                Ok(())
            }
            Val::Fun(fun) => match &**fun {
                Fun::Table { entries, .. } => {
                    f.write_str("{")?;
                    for (i, (k, v)) in entries.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{k} -> {v}")?;
                    }
                    f.write_str("}")
                }
                _ => f.write_str("<function>"),
            },
        }
    }
}
