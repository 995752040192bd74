//! Inductive descriptions: compilation of constructors, the cast rule on
//! constructors, and the builtin descriptions.

use crate::error::{Error, ErrorKind, Result};
use crate::sig::{ElaboratedCon, Sig};
use crate::subst::*;
use crate::syntax::*;

/// The identity spine on `ctx`, weakened by `extra` term variables.
pub fn identity_spine(ctx: &Ctx, extra: usize) -> Vec<SubComp> {
    let mut tm_seen = 0;
    let mut ty_seen = 0;
    let mut out: Vec<SubComp> = Vec::with_capacity(ctx.len());
    for e in ctx.entries.iter().rev() {
        match e {
            Entry::Tm { dir, .. } => {
                out.push(SubComp::Tm { dir: *dir, tm: Tm::Var(tm_seen + extra) });
                tm_seen += 1;
            }
            Entry::Ty { dir, tel_dir, tel } => {
                let n = tel.len();
                out.push(SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: n, ty: Ty::Head { idx: ty_seen, inst: vinst(n) } });
                ty_seen += 1;
            }
        }
    }
    out.reverse();
    out
}

impl Sig {
    /// `recData(r)` over `params ▶ R ▷ nrec`.
    pub fn elab_rec_data(&self, d: &IndDesc, r: &RecDesc) -> Result<Ty> {
        if r.rind.len() != d.indices.len() {
            return Err(Error::new(
                ErrorKind::IllFormedDescription,
                format!("{} recursive indices", d.indices.len()),
                format!("{}", r.rind.len()),
            ));
        }
        let arit: Vec<Ty> = r.arit.iter().map(|a| weaken_ty(a, 0, 1)).collect();
        let rind: Vec<Tm> = r.rind.iter().map(|t| weaken_tm(t, 0, 1)).collect();
        Ok(self.pi_tel(&arit, Ty::Head { idx: 0, inst: rind }))
    }

    /// `conData(c)` over `params ▶ R`.
    pub fn elab_con_data(&self, d: &IndDesc, c: &ConDesc) -> Result<Vec<Ty>> {
        let mut tel: Vec<Ty> = c.nrec.iter().map(|a| weaken_ty(a, 0, 1)).collect();
        for (k, r) in c.rec.iter().enumerate() {
            tel.push(weaken_ty(&self.elab_rec_data(d, r)?, k, 0));
        }
        Ok(tel)
    }

    /// Replace the placeholder type variable by the inductive type.
    pub fn tie(&self, d: &IndDesc, tel: &[Ty]) -> Vec<Ty> {
        let n = d.indices.len();
        let ind = Ty::Ind { desc: d.name.clone(), params: identity_spine(&d.params, n), indices: vinst(n) };
        let s = Subst::spine(vec![SubComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, arity: n, ty: ind }]);
        subst_tel(tel, &s).iter().map(|a| self.nf_ty(a)).collect()
    }

    pub fn elab_con(&self, d: &IndDesc, ic: usize) -> Result<ElaboratedCon> {
        let c = &d.cons[ic];
        if c.ind.len() != d.indices.len() {
            return Err(Error::new(
                ErrorKind::IllFormedDescription,
                format!("{} result indices", d.indices.len()),
                format!("{}", c.ind.len()),
            ));
        }
        let con_data = self.elab_con_data(d, c)?;
        let tied = self.tie(d, &con_data);
        let ctx = d.params.extend_by_tel(Dir::Pos, &tied);
        let result_indices = c.ind.iter().map(|t| weaken_tm(t, c.rec.len(), 0)).collect();
        Ok(ElaboratedCon { con_data, tied, ctx, result_indices })
    }

    /// Context and result type of a constructor.
    pub fn constr_type(&self, desc: &str, ic: usize) -> Result<(Ctx, Ty)> {
        let d = self.desc(desc)?;
        let ec = self.con(desc, ic)?;
        let ty = Ty::Ind {
            desc: desc.to_string(),
            params: identity_spine(&d.params, ec.tied.len()),
            indices: ec.result_indices.clone(),
        };
        Ok((ec.ctx.clone(), self.nf_ty(&ty)))
    }

    /// The type of a constructor applied to parameters and arguments.
    pub fn constr_result(&self, desc: &str, ic: usize, params: &[SubComp], args: &[Tm]) -> Result<Ty> {
        let ec = self.con(desc, ic)?;
        let mut s = params.to_vec();
        s.extend(args.iter().map(|t| SubComp::Tm { dir: Dir::Pos, tm: t.clone() }));
        let s = Subst::spine(s);
        Ok(Ty::Ind {
            desc: desc.to_string(),
            params: params.to_vec(),
            indices: ec.result_indices.iter().map(|t| self.subst_tm_nf(t, &s)).collect(),
        })
    }

    /// `c[p ▷ args]⟨I⟦μ⟧⟩` where `trans` covers `params ▷ indices`.
    pub fn cast_constr(&self, desc: &str, ic: usize, params: &[SubComp], args: &[Tm], trans: &Trans) -> Result<Tm> {
        let d = self.desc(desc)?;
        let ec = self.con(desc, ic)?;
        let np = d.params.len();
        if trans.comps.len() != np + d.indices.len() {
            return Err(Error::new(
                ErrorKind::ArityMismatch,
                format!("{} transformation components", np + d.indices.len()),
                format!("{}", trans.comps.len()),
            ));
        }
        if args.len() != ec.tied.len() || params.len() != np {
            return Err(Error::new(
                ErrorKind::ArityMismatch,
                format!("{} arguments", ec.tied.len()),
                format!("{}", args.len()),
            ));
        }
        let Ty::Ind { indices: expected, .. } = self.constr_result(desc, ic, params, args)? else { unreachable!() };
        for (k, (c, want)) in trans.comps[np..].iter().zip(&expected).enumerate() {
            let TransComp::Tm { tm, .. } = c else {
                return Err(Error::new(ErrorKind::IndexMismatch, "an index component", format!("component {k}")));
            };
            if !self.conv_tm(tm, want) {
                return Err(Error::new(ErrorKind::IndexMismatch, format!("{want:?}"), format!("{tm:?}")));
            }
        }
        let mu = self.endpoints(&Trans { comps: trans.comps[..np].to_vec() })?;
        let alpha = self.push_trans_tel(&ec.tied, &mu)?;
        let mut out: Vec<Tm> = Vec::with_capacity(args.len());
        for (i, (a, f)) in args.iter().zip(&alpha).enumerate() {
            let f = self.subst_ad_nf(f, &Subst::terms(args[..i].iter().cloned()));
            out.push(self.cast(self.nf_tm(a), &f));
        }
        Ok(Tm::Constr { desc: desc.to_string(), con: ic, params: mu.tgt.clone(), args: out })
    }
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn ty_param(name: &str) -> (String, Entry) {
    (name.to_string(), Entry::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![] })
}

fn nat() -> Ty {
    Ty::Ind { desc: "Nat".into(), params: vec![], indices: vec![] }
}

pub fn nat_desc() -> IndDesc {
    IndDesc {
        name: "Nat".into(),
        param_names: vec![],
        params: Ctx::empty(),
        index_names: vec![],
        indices: vec![],
        cons: vec![
            ConDesc { name: "zero".into(), nrec_names: vec![], nrec: vec![], rec: vec![], ind: vec![] },
            ConDesc {
                name: "suc".into(),
                nrec_names: vec![],
                nrec: vec![],
                rec: vec![RecDesc { name: "n".into(), arit_names: vec![], arit: vec![], rind: vec![] }],
                ind: vec![],
            },
        ],
    }
}

pub fn list_desc() -> IndDesc {
    let (x, e) = ty_param("X");
    IndDesc {
        name: "List".into(),
        param_names: vec![x],
        params: Ctx::new(vec![e]),
        index_names: vec![],
        indices: vec![],
        cons: vec![
            ConDesc { name: "nil".into(), nrec_names: vec![], nrec: vec![], rec: vec![], ind: vec![] },
            ConDesc {
                name: "cons".into(),
                nrec_names: names(&["x"]),
                nrec: vec![Ty::var(0)],
                rec: vec![RecDesc { name: "xs".into(), arit_names: vec![], arit: vec![], rind: vec![] }],
                ind: vec![],
            },
        ],
    }
}

pub fn vec_desc() -> IndDesc {
    let (x, e) = ty_param("X");
    IndDesc {
        name: "Vec".into(),
        param_names: vec![x],
        params: Ctx::new(vec![e]),
        index_names: names(&["n"]),
        indices: vec![nat()],
        cons: vec![
            ConDesc {
                name: "nil".into(),
                nrec_names: vec![],
                nrec: vec![],
                rec: vec![],
                ind: vec![Tm::Constr { desc: "Nat".into(), con: 0, params: vec![], args: vec![] }],
            },
            ConDesc {
                name: "cons".into(),
                nrec_names: names(&["x", "n"]),
                nrec: vec![Ty::var(0), nat()],
                rec: vec![RecDesc { name: "xs".into(), arit_names: vec![], arit: vec![], rind: vec![Tm::Var(0)] }],
                ind: vec![Tm::Constr { desc: "Nat".into(), con: 1, params: vec![], args: vec![Tm::Var(0)] }],
            },
        ],
    }
}

pub fn sum_desc() -> IndDesc {
    let (x, ex) = ty_param("X");
    let (y, ey) = ty_param("Y");
    IndDesc {
        name: "Sum".into(),
        param_names: vec![x, y],
        params: Ctx::new(vec![ex, ey]),
        index_names: vec![],
        indices: vec![],
        cons: vec![
            ConDesc { name: "inl".into(), nrec_names: names(&["x"]), nrec: vec![Ty::var(1)], rec: vec![], ind: vec![] },
            ConDesc { name: "inr".into(), nrec_names: names(&["y"]), nrec: vec![Ty::var(0)], rec: vec![], ind: vec![] },
        ],
    }
}

pub fn w_desc() -> IndDesc {
    let params = Ctx::new(vec![
        Entry::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![] },
        Entry::Ty { dir: Dir::Neg, tel_dir: Dir::Pos, tel: vec![Ty::var(0)] },
    ]);
    IndDesc {
        name: "W".into(),
        param_names: names(&["X", "Y"]),
        params,
        index_names: vec![],
        indices: vec![],
        cons: vec![ConDesc {
            name: "sup".into(),
            nrec_names: names(&["x"]),
            nrec: vec![Ty::var(1)],
            rec: vec![RecDesc {
                name: "k".into(),
                arit_names: names(&["y"]),
                arit: vec![Ty::Head { idx: 0, inst: vec![Tm::Var(0)] }],
                rind: vec![],
            }],
            ind: vec![],
        }],
    }
}

pub fn id_desc() -> IndDesc {
    let params = Ctx::new(vec![
        Entry::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![] },
        Entry::Tm { dir: Dir::Pos, ty: Ty::var(0) },
    ]);
    IndDesc {
        name: "Id".into(),
        param_names: names(&["X", "x"]),
        params,
        index_names: names(&["y"]),
        indices: vec![Ty::var(0)],
        cons: vec![ConDesc { name: "refl".into(), nrec_names: vec![], nrec: vec![], rec: vec![], ind: vec![Tm::Var(0)] }],
    }
}

/// A rose-tree-like type with a covariant label parameter and a
/// contravariant branching parameter.
pub fn tree_desc() -> IndDesc {
    let params = Ctx::new(vec![
        Entry::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![] },
        Entry::Ty { dir: Dir::Neg, tel_dir: Dir::Pos, tel: vec![] },
    ]);
    IndDesc {
        name: "Tree".into(),
        param_names: names(&["X", "Y"]),
        params,
        index_names: vec![],
        indices: vec![],
        cons: vec![
            ConDesc { name: "leaf".into(), nrec_names: vec![], nrec: vec![], rec: vec![], ind: vec![] },
            ConDesc {
                name: "node".into(),
                nrec_names: names(&["x"]),
                nrec: vec![Ty::var(1)],
                rec: vec![RecDesc { name: "r".into(), arit_names: names(&["y"]), arit: vec![Ty::var(0)], rind: vec![] }],
                ind: vec![],
            },
        ],
    }
}

/// Nat, List, Vec, Sum, W and Id, in dependency order.
pub fn builtin_descs() -> Vec<IndDesc> {
    vec![nat_desc(), list_desc(), vec_desc(), sum_desc(), w_desc(), id_desc()]
}

/// A signature with every builtin description registered.
pub fn builtin_sig() -> Sig {
    let mut sig = Sig::new();
    for d in builtin_descs() {
        sig.add_desc(d).expect("builtin descriptions are well formed");
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_constructor_data() {
        let sig = builtin_sig();
        let d = sig.desc("List").unwrap();
        assert!(sig.elab_con_data(d, &d.cons[0]).unwrap().is_empty());
        let cons = sig.elab_con_data(d, &d.cons[1]).unwrap();
        assert_eq!(cons, vec![Ty::var(1), Ty::var(0)]);
        let ec = sig.con("List", 1).unwrap();
        let list_x = Ty::Ind {
            desc: "List".into(),
            params: vec![SubComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, arity: 0, ty: Ty::var(0) }],
            indices: vec![],
        };
        assert_eq!(ec.tied, vec![Ty::var(0), list_x]);
    }

    #[test]
    fn w_recursive_argument() {
        let sig = builtin_sig();
        let d = sig.desc("W").unwrap();
        let r = sig.elab_rec_data(d, &d.cons[0].rec[0]).unwrap();
        assert_eq!(r, Ty::pi(Ty::Head { idx: 1, inst: vec![Tm::Var(0)] }, Ty::var(0)));
        let ec = sig.con("W", 0).unwrap();
        // x : X, k : Π (y : Y x). W X Y
        assert_eq!(ec.tied[0], Ty::var(1));
        let Ty::Pi(dom, cod) = &ec.tied[1] else { panic!() };
        assert_eq!(**dom, Ty::Head { idx: 0, inst: vec![Tm::Var(0)] });
        let Ty::Ind { params, .. } = &**cod else { panic!() };
        assert_eq!(params[1], SubComp::Ty { dir: Dir::Neg, tel_dir: Dir::Pos, arity: 1, ty: Ty::Head { idx: 0, inst: vec![Tm::Var(0)] } });
    }

    #[test]
    fn vec_recursive_index() {
        let sig = builtin_sig();
        let d = sig.desc("Vec").unwrap();
        let r = sig.elab_rec_data(d, &d.cons[1].rec[0]).unwrap();
        assert_eq!(r, Ty::Head { idx: 0, inst: vec![Tm::Var(0)] });
    }

    #[test]
    fn constructor_types() {
        let sig = builtin_sig();
        let (ctx, ty) = sig.constr_type("List", 0).unwrap();
        assert_eq!(ctx.len(), 1);
        assert!(matches!(ty, Ty::Ind { ref desc, .. } if desc == "List"));
        let (ctx, ty) = sig.constr_type("Vec", 1).unwrap();
        assert_eq!(ctx.len(), 4);
        let Ty::Ind { indices, .. } = ty else { panic!() };
        // suc y where y is the Nat argument, under the recursive argument
        assert_eq!(indices, vec![Tm::Constr { desc: "Nat".into(), con: 1, params: vec![], args: vec![Tm::Var(1)] }]);
        let (ctx, ty) = sig.constr_type("Id", 0).unwrap();
        assert_eq!(ctx.len(), 2);
        let Ty::Ind { indices, .. } = ty else { panic!() };
        assert_eq!(indices, vec![Tm::Var(0)]);
    }

    #[test]
    fn identity_spine_shapes() {
        let d = w_desc();
        let s = identity_spine(&d.params, 2);
        assert_eq!(s[0], SubComp::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, arity: 0, ty: Ty::var(1) });
        assert_eq!(s[1], SubComp::Ty { dir: Dir::Neg, tel_dir: Dir::Pos, arity: 1, ty: Ty::Head { idx: 0, inst: vec![Tm::Var(0)] } });
    }
}
