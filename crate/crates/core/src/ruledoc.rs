//! Specialized adapter rules for a description: the formation rule of its
//! inductive adapter, stated over generic source and target parameters,
//! and one computation equation per constructor.

use crate::error::{Error, ErrorKind, Result};
use crate::functorial::TransE;
use crate::print::Printer;
use crate::sig::Sig;
use crate::subst::*;
use crate::syntax::*;
use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ParamDoc {
    pub name: String,
    pub dir: String,
    pub telescope: Vec<String>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub ty: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IndexDoc {
    pub name: String,
    #[serde(rename = "type")]
    pub ty: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RecDoc {
    pub arit: Vec<String>,
    pub rind: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConDoc {
    pub name: String,
    pub nrec: Vec<String>,
    pub rec: Vec<RecDoc>,
    pub ind: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AdapterRule {
    pub premises: Vec<String>,
    pub conclusion: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Equation {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RuleDoc {
    pub name: String,
    pub params: Vec<ParamDoc>,
    pub indices: Vec<IndexDoc>,
    pub constructors: Vec<ConDoc>,
    #[serde(rename = "adapterRule")]
    pub adapter_rule: AdapterRule,
    pub computation: Vec<Equation>,
}

impl RuleDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rule documents serialize")
    }

    pub fn to_text(&self, decl: &str) -> String {
        let mut out = String::new();
        out.push_str(decl);
        out.push_str("\n\n");
        for p in &self.adapter_rule.premises {
            out.push_str(p);
            out.push('\n');
        }
        let bar = self.adapter_rule.conclusion.chars().count().max(8);
        out.push_str(&"-".repeat(bar));
        out.push('\n');
        out.push_str(&self.adapter_rule.conclusion);
        out.push_str("\n\n");
        for e in &self.computation {
            out.push_str(&format!("{}\n  == {}\n", e.lhs, e.rhs));
        }
        out
    }
}

/// The generic setting of a rule: a context holding a source and a target
/// copy of every type parameter and one variable for every term entry,
/// with the transformation between the two parameter spines.
struct Setting {
    ctx: Ctx,
    tm_names: Vec<String>,
    ty_names: Vec<String>,
    te: TransE,
    premises: Vec<String>,
}

fn weaken_te(te: &TransE, tm: usize, ty: usize) -> TransE {
    let w = Subst::weaken(tm, ty);
    TransE {
        comps: subst_trans(&te.trans(), &w).comps,
        src: te.src.iter().map(|c| subst_comp(c, &w)).collect(),
        tgt: te.tgt.iter().map(|c| subst_comp(c, &w)).collect(),
    }
}

const AD_NAMES: &[&str] = &["f", "g", "h", "k", "l", "m"];

impl Sig {
    fn rule_setting(&self, d: &IndDesc, target: &Ctx, names: &[String]) -> Result<Setting> {
        let n_ty = d.params.ty_count();
        let mut s = Setting { ctx: Ctx::empty(), tm_names: vec![], ty_names: vec![], te: TransE::empty(), premises: vec![] };
        let mut ty_seen = 0;
        for (j, e) in target.entries.iter().enumerate() {
            let pr = Printer::with_names(self, s.tm_names.clone(), s.ty_names.clone());
            match e {
                Entry::Tm { dir, ty } => {
                    let side = match dir {
                        Dir::Pos => s.te.src_subst(),
                        Dir::Neg => s.te.tgt_subst(),
                    };
                    let here = self.subst_ty_nf(ty, &side);
                    let name = pr.fresh(names.get(j).map(String::as_str).unwrap_or("x"));
                    let mut pp = Printer::with_names(self, s.tm_names.clone(), s.ty_names.clone());
                    s.premises.push(format!("{name} : {}", pp.ty(&here)));
                    s.ctx.push(Entry::Tm { dir: *dir, ty: here });
                    s.tm_names.push(name);
                    s.te = weaken_te(&s.te, 1, 0);
                    self.push_comp(&mut s.te, TransComp::Tm { dir: *dir, ty: ty.clone(), tm: Tm::Var(0) })?;
                }
                Entry::Ty { dir, tel_dir, tel } => {
                    let (src_hint, tgt_hint) = if n_ty == 1 {
                        ("A".to_string(), "B".to_string())
                    } else {
                        let l = (b'A' + (ty_seen as u8 % 26)) as char;
                        (l.to_string(), format!("{l}'"))
                    };
                    let src_name = pr.fresh(&src_hint);
                    let tgt_name = if pr.fresh(&tgt_hint) == tgt_hint && tgt_hint != src_name { tgt_hint } else { format!("{src_name}'") };
                    let ad_name = pr.fresh(AD_NAMES.get(ty_seen).copied().unwrap_or("f"));
                    ty_seen += 1;
                    let ts = subst_tel(tel, &s.te.src_subst()).iter().map(|a| self.nf_ty(a)).collect::<Vec<_>>();
                    let tt = subst_tel(tel, &s.te.tgt_subst()).iter().map(|a| self.nf_ty(a)).collect::<Vec<_>>();
                    s.ctx.push(Entry::Ty { dir: *dir, tel_dir: *tel_dir, tel: ts });
                    let tt = tt.iter().map(|a| weaken_ty(a, 0, 1)).collect();
                    s.ctx.push(Entry::Ty { dir: *dir, tel_dir: *tel_dir, tel: tt });
                    s.ty_names.push(src_name);
                    s.ty_names.push(tgt_name);
                    s.te = weaken_te(&s.te, 0, 2);
                    let n = tel.len();
                    let src = Ty::Head { idx: 1, inst: vinst(n) };
                    let tgt = Ty::Head { idx: 0, inst: vinst(n) };
                    let (living, from, to) = self.trans_ad_boundary(&s.ctx, &s.te, *dir, *tel_dir, tel, &src, &tgt)?;
                    let ad = Ad::Sym { name: ad_name.clone(), inst: vinst(n), src: from.clone(), tgt: to.clone() };
                    let mut pp = Printer::with_names(self, s.tm_names.clone(), s.ty_names.clone());
                    let extra = &living.entries[s.ctx.len()..];
                    let mut binders = Vec::new();
                    for e in extra {
                        let Entry::Tm { ty, .. } = e else { unreachable!() };
                        let b = pp.ty(ty);
                        let x = pp.push_tm("x");
                        binders.push(format!("({x} : {b})"));
                    }
                    let head = if n == 0 {
                        ad_name.clone()
                    } else {
                        let args: Vec<String> = (0..n).map(|i| pp.tm(&Tm::Var(n - 1 - i))).collect();
                        format!("{ad_name} {}", args.join(" "))
                    };
                    let judgment = format!("{head} : {} => {}", pp.ty(&from), pp.ty(&to));
                    s.premises.push(if binders.is_empty() { judgment } else { format!("{} |- {judgment}", binders.join(" ")) });
                    self.push_comp(
                        &mut s.te,
                        TransComp::Ty { dir: *dir, tel_dir: *tel_dir, tel: tel.clone(), src, tgt, ad },
                    )?;
                }
            }
        }
        Ok(s)
    }

    /// Formation rule and computation equations of the adapter of `name`.
    pub fn derive_adapter_rule(&self, name: &str) -> Result<RuleDoc> {
        let d = self.desc(name)?.clone();
        let np = d.params.len();
        let target = d.params.extend_by_tel(Dir::Pos, &d.indices);
        let mut names = d.param_names.clone();
        names.extend(d.index_names.iter().cloned());
        let full = self.rule_setting(&d, &target, &names)?;

        let mut pp = Printer::with_names(self, full.tm_names.clone(), full.ty_names.clone());
        let ind_ty = |spine: &[SubComp]| Ty::Ind {
            desc: name.to_string(),
            params: spine[..np].to_vec(),
            indices: spine[np..].iter().filter_map(|c| c.as_tm().cloned()).collect(),
        };
        let ad = Ad::Ind { desc: name.to_string(), trans: full.te.trans() };
        let src_ty = self.nf_ty(&ind_ty(&full.te.src));
        let tgt_ty = self.nf_ty(&ind_ty(&full.te.tgt));
        self.check_ad(&full.ctx, &ad, &src_ty, &tgt_ty)?;
        let conclusion = format!("{} : {} => {}", pp.ad(&ad), pp.ty(&src_ty), pp.ty(&tgt_ty));

        let mut computation = Vec::new();
        let base = self.rule_setting(&d, &d.params, &d.param_names)?;
        for (ic, c) in d.cons.iter().enumerate() {
            computation.push(self.computation_row(&d, ic, c, &base)?);
        }

        let mut params = Vec::new();
        let mut dp = Printer::with_names(self, vec![], vec![]);
        for (i, e) in d.params.entries.iter().enumerate() {
            let pname = d.param_names.get(i).cloned().unwrap_or_default();
            match e {
                Entry::Tm { dir, ty } => {
                    params.push(ParamDoc { name: pname.clone(), dir: dir.sign().into(), telescope: vec![], ty: Some(dp.ty(ty)) });
                    dp.push_tm_named(&pname);
                }
                Entry::Ty { dir, tel_dir, tel } => {
                    let mut inner = Vec::new();
                    let mark = if *tel_dir == Dir::Neg { "^-" } else { "" };
                    for (k, a) in tel.iter().enumerate() {
                        inner.push(format!("{}{mark}", dp.ty(a)));
                        dp.push_tm(&format!("x{k}"));
                    }
                    dp.pop_tm(tel.len());
                    params.push(ParamDoc { name: pname.clone(), dir: dir.sign().into(), telescope: inner, ty: None });
                    dp.push_ty_named(&pname);
                }
            }
        }
        let mut indices = Vec::new();
        for (i, a) in d.indices.iter().enumerate() {
            let iname = d.index_names.get(i).cloned().unwrap_or_default();
            indices.push(IndexDoc { name: iname.clone(), ty: dp.ty(a) });
            dp.push_tm_named(&iname);
        }
        dp.pop_tm(d.indices.len());
        let constructors = d.cons.iter().map(|c| con_doc(&mut dp, c)).collect();

        Ok(RuleDoc {
            name: name.to_string(),
            params,
            indices,
            constructors,
            adapter_rule: AdapterRule { premises: full.premises, conclusion },
            computation,
        })
    }

    fn computation_row(&self, d: &IndDesc, ic: usize, c: &ConDesc, base: &Setting) -> Result<Equation> {
        let np = d.params.len();
        let ec = self.con(&d.name, ic)?.clone();
        let tied_src = subst_tel(&ec.tied, &base.te.src_subst());
        let mut ctx = base.ctx.clone();
        let mut pr = Printer::with_names(self, base.tm_names.clone(), base.ty_names.clone());
        let mut arg_names: Vec<String> = c.nrec_names.clone();
        arg_names.extend(c.rec.iter().map(|r| r.name.clone()));
        for (i, a) in tied_src.iter().enumerate() {
            ctx.push(Entry::Tm { dir: Dir::Pos, ty: self.nf_ty(a) });
            let hint = arg_names.get(i).filter(|n| !n.is_empty()).cloned().unwrap_or_else(|| "x".into());
            pr.push_tm(&hint);
        }
        let n = tied_src.len();
        let te = weaken_te(&base.te, n, 0);
        let args: Vec<Tm> = (0..n).map(|i| Tm::Var(n - 1 - i)).collect();
        let params = te.src[..np].to_vec();
        let Ty::Ind { indices, .. } = self.constr_result(&d.name, ic, &params, &args)? else { unreachable!() };
        let mut comps = te.comps.clone();
        for (k, t) in indices.iter().enumerate() {
            comps.push(TransComp::Tm { dir: Dir::Pos, ty: d.indices[k].clone(), tm: t.clone() });
        }
        let lhs = Tm::cast(Tm::Constr { desc: d.name.clone(), con: ic, params, args }, Ad::Ind { desc: d.name.clone(), trans: Trans { comps } });
        self.infer_tm(&ctx, &lhs)?;
        let rhs = self.nf_tm(&lhs);
        if !matches!(rhs, Tm::Constr { .. }) {
            return Err(Error::new(ErrorKind::IllFormedDescription, "a computing constructor cast", pr.tm(&rhs)));
        }
        Ok(Equation { lhs: pr.tm(&lhs), rhs: pr.tm(&rhs) })
    }
}

fn con_doc(dp: &mut Printer, c: &ConDesc) -> ConDoc {
    let nrec = dp.tel_named(&c.nrec, &c.nrec_names);
    let rec = c
        .rec
        .iter()
        .map(|r| {
            let arit = dp.tel_named(&r.arit, &r.arit_names);
            let rind = r.rind.iter().map(|t| dp.tm(t)).collect();
            dp.pop_tm(r.arit.len());
            RecDoc { arit, rind }
        })
        .collect();
    let ind = c.ind.iter().map(|t| dp.tm(t)).collect();
    dp.pop_tm(c.nrec.len());
    ConDoc { name: c.name.clone(), nrec, rec, ind }
}

#[cfg(test)]
mod tests {
    use crate::inductive::{builtin_sig, tree_desc};

    #[test]
    fn list_rule() {
        let sig = builtin_sig();
        let doc = sig.derive_adapter_rule("List").unwrap();
        assert_eq!(doc.adapter_rule.premises, vec!["f : A => B"]);
        assert_eq!(doc.adapter_rule.conclusion, "List[f] : List A => List B");
        assert_eq!(doc.computation[0].lhs, "List::nil A <| List[f]");
        assert_eq!(doc.computation[0].rhs, "List::nil B");
        assert_eq!(doc.computation[1].rhs, "List::cons B (x <| f) (xs <| List[f])");
    }

    #[test]
    fn identity_rule() {
        let sig = builtin_sig();
        let doc = sig.derive_adapter_rule("Id").unwrap();
        assert_eq!(doc.adapter_rule.conclusion, "Id[f > x > y] : Id A x y => Id B (x <| f) (y <| f)");
        assert_eq!(doc.computation[0].rhs, "refl B (x <| f)");
    }

    #[test]
    fn w_rule_has_contravariant_premise() {
        let sig = builtin_sig();
        let doc = sig.derive_adapter_rule("W").unwrap();
        assert_eq!(doc.adapter_rule.premises[0], "f : A => A'");
        assert_eq!(doc.adapter_rule.premises[1], "(x : A) |- g x : B' (x <| f) => B x");
        let json = doc.to_json();
        assert!(json.contains("\"adapterRule\""));
    }

    #[test]
    fn tree_rule_is_derived() {
        let mut sig = builtin_sig();
        sig.add_desc(tree_desc()).unwrap();
        let doc = sig.derive_adapter_rule("Tree").unwrap();
        assert_eq!(doc.computation.len(), 2);
        assert!(doc.computation[1].rhs.contains("Pi["), "{}", doc.computation[1].rhs);
    }
}
