//! Named surface syntax. Every node carries the position it was parsed
//! from; positions never take part in equality.

use adaptt_core::Dir;
use std::fmt;

#[derive(Clone, Copy, Debug, Default, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Name(String),
    /// `D::c`
    Qual(String, String),
    Id,
    App(Box<Expr>, Box<Expr>),
    Lam(Vec<String>, Box<Expr>),
    Pi(Vec<Binder>, Box<Expr>),
    Arrow(Box<Expr>, Box<Expr>),
    Sigma(Vec<Binder>, Box<Expr>),
    Times(Box<Expr>, Box<Expr>),
    Pair(Box<Expr>, Box<Expr>),
    Fst(Box<Expr>),
    Snd(Box<Expr>),
    Cast(Box<Expr>, Box<Expr>),
    /// `g << f`: `f` first.
    Comp(Box<Expr>, Box<Expr>),
    PiAd(Box<Expr>, Box<Expr>),
    SigmaAd(Box<Expr>, Box<Expr>),
    IndAd(String, Vec<Expr>),
    /// `{x y. e}`
    Fam(Vec<String>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binder {
    pub name: String,
    pub ty: Expr,
    pub neg: bool,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Ty { dir: Dir, tel: Vec<Binder> },
    Tm { ty: Expr, neg: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub kind: ParamKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Con {
    pub name: String,
    pub ty: Expr,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Data {
    pub name: String,
    pub params: Vec<Param>,
    pub indices: Vec<Binder>,
    pub cons: Vec<Con>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Base { name: String, span: Span },
    Postulate { name: String, src: Expr, tgt: Expr, span: Span },
    Data(Data),
    Def { name: String, ty: Expr, tm: Expr, span: Span },
    Check { tm: Expr, ty: Expr, span: Span },
    Assert { lhs: Expr, rhs: Expr, ty: Expr, span: Span },
    Normalize { tm: Expr, span: Span },
}

impl Decl {
    pub fn span(&self) -> Span {
        match self {
            Decl::Data(d) => d.span,
            Decl::Base { span, .. }
            | Decl::Postulate { span, .. }
            | Decl::Def { span, .. }
            | Decl::Check { span, .. }
            | Decl::Assert { span, .. }
            | Decl::Normalize { span, .. } => *span,
        }
    }
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Expr {
        Expr { kind, span }
    }

    /// Head and arguments of an application spine.
    pub fn spine(&self) -> (&Expr, Vec<&Expr>) {
        let mut args = Vec::new();
        let mut e = self;
        while let ExprKind::App(f, u) = &e.kind {
            args.push(&**u);
            e = f;
        }
        args.reverse();
        (e, args)
    }

    /// Whether `name` occurs free.
    pub fn mentions(&self, name: &str) -> bool {
        let binders_mention = |bs: &[Binder], body: &Expr| {
            for b in bs {
                if b.ty.mentions(name) {
                    return true;
                }
                if b.name == name {
                    return false;
                }
            }
            body.mentions(name)
        };
        match &self.kind {
            ExprKind::Name(n) => n == name,
            ExprKind::Qual(d, _) => d == name,
            ExprKind::IndAd(d, xs) => d == name || xs.iter().any(|x| x.mentions(name)),
            ExprKind::Id => false,
            ExprKind::Lam(xs, b) | ExprKind::Fam(xs, b) => !xs.iter().any(|x| x == name) && b.mentions(name),
            ExprKind::Pi(bs, body) | ExprKind::Sigma(bs, body) => binders_mention(bs, body),
            ExprKind::App(a, b)
            | ExprKind::Arrow(a, b)
            | ExprKind::Times(a, b)
            | ExprKind::Pair(a, b)
            | ExprKind::Cast(a, b)
            | ExprKind::Comp(a, b)
            | ExprKind::PiAd(a, b)
            | ExprKind::SigmaAd(a, b) => a.mentions(name) || b.mentions(name),
            ExprKind::Fst(a) | ExprKind::Snd(a) => a.mentions(name),
        }
    }
}
