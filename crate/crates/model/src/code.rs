//! Terms and adapters prepared for evaluation. Subtrees are shared, so
//! closures capture them without copying, and each inductive adapter node
//! computes its per-argument adapters at most once per constructor.

use adaptt_core::Trans;
use std::cell::OnceCell;
use std::rc::Rc;

#[derive(Debug)]
pub enum Code {
    Var(usize),
    Lam(Rc<Code>),
    App(Rc<Code>, Rc<Code>),
    Pair(Rc<Code>, Rc<Code>),
    Fst(Rc<Code>),
    Snd(Rc<Code>),
    Cast(Rc<Code>, Rc<AdCode>),
    Constr { desc: Rc<str>, con: usize, name: Rc<str>, args: Vec<Rc<Code>> },
}

#[derive(Debug)]
pub enum AdCode {
    Id,
    Comp(Vec<Rc<AdCode>>),
    Post(String),
    Sym(String),
    Pi { dom: Rc<AdCode>, cod: Rc<AdCode> },
    Sigma { fst: Rc<AdCode>, snd: Rc<AdCode> },
    Ind { desc: Rc<str>, trans: Trans, args: Vec<OnceCell<Rc<[Rc<AdCode>]>>> },
}
