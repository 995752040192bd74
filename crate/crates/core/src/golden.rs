//! The constructor computation table: for each builtin datatype (and the
//! rose tree) a cast of a constructor along the inductive adapter, paired
//! with its expected result written out by hand. Both sides are closed
//! over postulated base types and adapters.

use crate::error::Result;
use crate::inductive::{builtin_descs, tree_desc};
use crate::sig::Sig;
use crate::syntax::*;

pub struct Row {
    pub name: &'static str,
    pub ctx: Ctx,
    pub lhs: Tm,
    pub rhs: Tm,
    pub ty: Ty,
}

/// Builtins plus `Tree`, base types `A A' B B'` and postulates
/// `f : A => A'`, `g : B => B'`, `h : B' => B`.
pub fn golden_sig() -> Sig {
    let mut sig = Sig::new();
    for d in builtin_descs() {
        sig.add_desc(d).expect("builtin");
    }
    sig.add_desc(tree_desc()).expect("tree");
    for b in ["A", "A'", "B", "B'"] {
        sig.add_base(b).expect("base");
    }
    sig.add_post("f", a(), a2()).expect("f");
    sig.add_post("g", b(), b2()).expect("g");
    sig.add_post("h", b2(), b()).expect("h");
    sig
}

fn a() -> Ty {
    Ty::base("A")
}
fn a2() -> Ty {
    Ty::base("A'")
}
fn b() -> Ty {
    Ty::base("B")
}
fn b2() -> Ty {
    Ty::base("B'")
}
fn f() -> Ad {
    Ad::post("f", a(), a2())
}
fn g() -> Ad {
    Ad::post("g", b(), b2())
}
fn h() -> Ad {
    Ad::post("h", b2(), b())
}

pub fn ty_arg(dir: Dir, ty: Ty) -> SubComp {
    SubComp::Ty { dir, tel_dir: Dir::Pos, arity: 0, ty }
}

fn family(dir: Dir, ty: Ty) -> SubComp {
    SubComp::Ty { dir, tel_dir: Dir::Pos, arity: 1, ty }
}

pub fn ad_comp(dir: Dir, src: Ty, tgt: Ty, ad: Ad) -> TransComp {
    TransComp::Ty { dir, tel_dir: Dir::Pos, tel: vec![], src, tgt, ad }
}

fn constr(desc: &str, con: usize, params: Vec<SubComp>, args: Vec<Tm>) -> Tm {
    Tm::Constr { desc: desc.into(), con, params, args }
}

fn ind(desc: &str, params: Vec<SubComp>, indices: Vec<Tm>) -> Ty {
    Ty::Ind { desc: desc.into(), params, indices }
}

fn ind_ad(desc: &str, comps: Vec<TransComp>) -> Ad {
    Ad::Ind { desc: desc.into(), trans: Trans { comps } }
}

fn zero() -> Tm {
    constr("Nat", 0, vec![], vec![])
}

fn suc(n: Tm) -> Tm {
    constr("Nat", 1, vec![], vec![n])
}

fn nat() -> Ty {
    ind("Nat", vec![], vec![])
}

fn var_ctx(tys: Vec<Ty>) -> Ctx {
    Ctx::new(tys.into_iter().map(|ty| Entry::Tm { dir: Dir::Pos, ty }).collect())
}

pub fn rows() -> Vec<Row> {
    let pa = || vec![ty_arg(Dir::Pos, a())];
    let pa2 = || vec![ty_arg(Dir::Pos, a2())];
    let list_f = || ind_ad("List", vec![ad_comp(Dir::Pos, a(), a2(), f())]);
    let vec_f = |n: Tm| {
        ind_ad("Vec", vec![ad_comp(Dir::Pos, a(), a2(), f()), TransComp::Tm { dir: Dir::Pos, ty: nat(), tm: n }])
    };
    let pab = || vec![ty_arg(Dir::Pos, a()), ty_arg(Dir::Pos, b())];
    let pab2 = || vec![ty_arg(Dir::Pos, a2()), ty_arg(Dir::Pos, b2())];
    let sum_fg = || ind_ad("Sum", vec![ad_comp(Dir::Pos, a(), a2(), f()), ad_comp(Dir::Pos, b(), b2(), g())]);
    let w_p = || vec![ty_arg(Dir::Pos, a()), family(Dir::Neg, b())];
    let w_p2 = || vec![ty_arg(Dir::Pos, a2()), family(Dir::Neg, b2())];
    let w_fh = || {
        ind_ad(
            "W",
            vec![
                ad_comp(Dir::Pos, a(), a2(), f()),
                TransComp::Ty { dir: Dir::Neg, tel_dir: Dir::Pos, tel: vec![Ty::var(0)], src: b(), tgt: b2(), ad: h() },
            ],
        )
    };
    let t_p = || vec![ty_arg(Dir::Pos, a()), ty_arg(Dir::Neg, b())];
    let t_p2 = || vec![ty_arg(Dir::Pos, a2()), ty_arg(Dir::Neg, b2())];
    let tree_fh = || ind_ad("Tree", vec![ad_comp(Dir::Pos, a(), a2(), f()), ad_comp(Dir::Neg, b(), b2(), h())]);
    let x = |k| Tm::Var(k);
    let pi_ad = |dom: Ad, cod: Ad, new_dom: Ty| Ad::Pi { dom: Box::new(dom), cod: Box::new(cod), new_dom: Box::new(new_dom) };

    vec![
        Row {
            name: "List.nil",
            ctx: Ctx::empty(),
            lhs: Tm::cast(constr("List", 0, pa(), vec![]), list_f()),
            rhs: constr("List", 0, pa2(), vec![]),
            ty: ind("List", pa2(), vec![]),
        },
        Row {
            name: "List.cons",
            ctx: var_ctx(vec![a(), ind("List", pa(), vec![])]),
            lhs: Tm::cast(constr("List", 1, pa(), vec![x(1), x(0)]), list_f()),
            rhs: constr("List", 1, pa2(), vec![Tm::cast(x(1), f()), Tm::cast(x(0), list_f())]),
            ty: ind("List", pa2(), vec![]),
        },
        Row {
            name: "Vec.nil",
            ctx: Ctx::empty(),
            lhs: Tm::cast(constr("Vec", 0, pa(), vec![]), vec_f(zero())),
            rhs: constr("Vec", 0, pa2(), vec![]),
            ty: ind("Vec", pa2(), vec![zero()]),
        },
        Row {
            name: "Vec.cons",
            ctx: var_ctx(vec![a(), nat(), ind("Vec", pa(), vec![x(0)])]),
            lhs: Tm::cast(constr("Vec", 1, pa(), vec![x(2), x(1), x(0)]), vec_f(suc(x(1)))),
            rhs: constr("Vec", 1, pa2(), vec![Tm::cast(x(2), f()), x(1), Tm::cast(x(0), vec_f(x(1)))]),
            ty: ind("Vec", pa2(), vec![suc(x(1))]),
        },
        Row {
            name: "Sum.inl",
            ctx: var_ctx(vec![a()]),
            lhs: Tm::cast(constr("Sum", 0, pab(), vec![x(0)]), sum_fg()),
            rhs: constr("Sum", 0, pab2(), vec![Tm::cast(x(0), f())]),
            ty: ind("Sum", pab2(), vec![]),
        },
        Row {
            name: "Sum.inr",
            ctx: var_ctx(vec![b()]),
            lhs: Tm::cast(constr("Sum", 1, pab(), vec![x(0)]), sum_fg()),
            rhs: constr("Sum", 1, pab2(), vec![Tm::cast(x(0), g())]),
            ty: ind("Sum", pab2(), vec![]),
        },
        Row {
            name: "W.sup",
            ctx: var_ctx(vec![a(), Ty::pi(b(), ind("W", w_p(), vec![]))]),
            lhs: Tm::cast(constr("W", 0, w_p(), vec![x(1), x(0)]), w_fh()),
            rhs: constr("W", 0, w_p2(), vec![Tm::cast(x(1), f()), Tm::cast(x(0), pi_ad(h(), w_fh(), b2()))]),
            ty: ind("W", w_p2(), vec![]),
        },
        Row {
            name: "Id.refl",
            ctx: var_ctx(vec![a()]),
            lhs: Tm::cast(
                constr("Id", 0, vec![ty_arg(Dir::Pos, a()), SubComp::Tm { dir: Dir::Pos, tm: x(0) }], vec![]),
                ind_ad(
                    "Id",
                    vec![
                        ad_comp(Dir::Pos, a(), a2(), f()),
                        TransComp::Tm { dir: Dir::Pos, ty: Ty::var(0), tm: x(0) },
                        TransComp::Tm { dir: Dir::Pos, ty: Ty::var(0), tm: x(0) },
                    ],
                ),
            ),
            rhs: constr("Id", 0, vec![ty_arg(Dir::Pos, a2()), SubComp::Tm { dir: Dir::Pos, tm: Tm::cast(x(0), f()) }], vec![]),
            ty: ind(
                "Id",
                vec![ty_arg(Dir::Pos, a2()), SubComp::Tm { dir: Dir::Pos, tm: Tm::cast(x(0), f()) }],
                vec![Tm::cast(x(0), f())],
            ),
        },
        Row {
            name: "Tree.leaf",
            ctx: Ctx::empty(),
            lhs: Tm::cast(constr("Tree", 0, t_p(), vec![]), tree_fh()),
            rhs: constr("Tree", 0, t_p2(), vec![]),
            ty: ind("Tree", t_p2(), vec![]),
        },
        Row {
            name: "Tree.node",
            ctx: var_ctx(vec![a(), Ty::pi(b(), ind("Tree", t_p(), vec![]))]),
            lhs: Tm::cast(constr("Tree", 1, t_p(), vec![x(1), x(0)]), tree_fh()),
            rhs: constr("Tree", 1, t_p2(), vec![Tm::cast(x(1), f()), Tm::cast(x(0), pi_ad(h(), tree_fh(), b2()))]),
            ty: ind("Tree", t_p2(), vec![]),
        },
        Row {
            name: "Tree.node-eta",
            ctx: var_ctx(vec![a(), Ty::pi(b(), ind("Tree", t_p(), vec![]))]),
            lhs: Tm::cast(constr("Tree", 1, t_p(), vec![x(1), x(0)]), tree_fh()),
            rhs: constr(
                "Tree",
                1,
                t_p2(),
                vec![Tm::cast(x(1), f()), Tm::lam(Tm::cast(Tm::app(x(1), Tm::cast(x(0), h())), tree_fh()))],
            ),
            ty: ind("Tree", t_p2(), vec![]),
        },
    ]
}

#[derive(Debug)]
pub struct Outcome {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

/// Type both sides, normalize the left one and compare.
pub fn run_row(sig: &Sig, row: &Row) -> Outcome {
    let res: Result<bool> = (|| {
        sig.check_ctx(&row.ctx)?;
        sig.check_tm(&row.ctx, &row.lhs, &row.ty)?;
        sig.check_tm(&row.ctx, &row.rhs, &row.ty)?;
        Ok(sig.conv_tm(&row.lhs, &row.rhs))
    })();
    match res {
        Ok(true) => Outcome { name: row.name, ok: true, detail: String::new() },
        Ok(false) => Outcome {
            name: row.name,
            ok: false,
            detail: format!(
                "expected {} got {}",
                sig.show_tm(&row.ctx, &sig.nf_tm(&row.rhs)),
                sig.show_tm(&row.ctx, &sig.nf_tm(&row.lhs))
            ),
        },
        Err(e) => Outcome { name: row.name, ok: false, detail: e.to_string() },
    }
}

pub fn run_all() -> Vec<Outcome> {
    let sig = golden_sig();
    rows().iter().map(|r| run_row(&sig, r)).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn every_row_computes() {
        for o in super::run_all() {
            assert!(o.ok, "{}: {}", o.name, o.detail);
        }
    }

    #[test]
    fn a_wrong_row_is_rejected() {
        let sig = super::golden_sig();
        let mut rows = super::rows();
        let mut cons = rows.remove(1);
        let crate::Tm::Constr { args, .. } = &mut cons.rhs else { panic!() };
        args[1] = crate::Tm::Var(0);
        let o = super::run_row(&sig, &cons);
        assert!(!o.ok);
        let mut sup = rows.remove(5);
        let crate::Tm::Constr { args, .. } = &mut sup.rhs else { panic!() };
        args[0] = crate::Tm::Var(1);
        assert!(!super::run_row(&sig, &sup).ok);
    }
}
