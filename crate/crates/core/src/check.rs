//! The type checker. Classifiers are returned in normal form; every
//! equality premise is discharged by conversion. Variables may only be
//! accessed covariantly: a contravariant entry becomes accessible in the
//! dual context.

use crate::error::{Error, ErrorKind, Result};
use crate::functorial::TransE;
use crate::sig::Sig;
use crate::subst::*;
use crate::syntax::*;

impl Sig {
    fn mismatch(&self, ctx: &Ctx, want: &Ty, got: &Ty) -> Error {
        Error::new(ErrorKind::ClassifierMismatch, self.show_ty(ctx, &self.nf_ty(want)), self.show_ty(ctx, &self.nf_ty(got)))
    }

    fn arity(want: usize, got: usize, what: &str) -> Result<()> {
        if want != got {
            return Err(Error::new(ErrorKind::ArityMismatch, format!("{want} {what}"), format!("{got}")));
        }
        Ok(())
    }

    /// Type of the k-th term variable, weakened to the whole context.
    pub fn lookup_tm(&self, ctx: &Ctx, k: usize) -> Result<Ty> {
        let pos = ctx
            .tm_position(k)
            .ok_or_else(|| Error::new(ErrorKind::UnboundVariable, "a bound term variable", format!("#{k}")))?;
        let Entry::Tm { dir, ty } = &ctx.entries[pos] else { unreachable!() };
        if *dir != Dir::Pos {
            return Err(Error::new(ErrorKind::VarianceViolation, "a covariant variable", format!("contravariant term variable #{k}")));
        }
        let (tm, tyv) = ctx.counts_after(pos);
        Ok(weaken_ty(ty, tm + 1, tyv))
    }

    /// Telescope of the k-th type variable, weakened to the whole context,
    /// together with its telescope direction.
    pub fn lookup_ty(&self, ctx: &Ctx, k: usize) -> Result<(Dir, Vec<Ty>)> {
        let pos = ctx
            .ty_position(k)
            .ok_or_else(|| Error::new(ErrorKind::UnboundVariable, "a bound type variable", format!("#{k}")))?;
        let Entry::Ty { dir, tel_dir, tel } = &ctx.entries[pos] else { unreachable!() };
        if *dir != Dir::Pos {
            return Err(Error::new(ErrorKind::VarianceViolation, "a covariant type variable", format!("contravariant type variable #{k}")));
        }
        let (tm, tyv) = ctx.counts_after(pos);
        Ok((*tel_dir, subst_tel(tel, &Subst::weaken(tm, tyv + 1))))
    }

    pub fn check_ctx(&self, ctx: &Ctx) -> Result<()> {
        for i in 0..ctx.len() {
            let pre = ctx.prefix(i);
            match &ctx.entries[i] {
                Entry::Tm { dir, ty } => self.check_ty(&pre.dual_by(*dir), ty)?,
                Entry::Ty { tel_dir, tel, .. } => self.check_tel(&pre.dual_by(*tel_dir), tel)?,
            }
        }
        Ok(())
    }

    pub fn check_tel(&self, ctx: &Ctx, tel: &[Ty]) -> Result<()> {
        for i in 0..tel.len() {
            self.check_ty(&ctx.extend_by_tel(Dir::Pos, &tel[..i]), &tel[i])?;
        }
        Ok(())
    }

    pub fn check_inst(&self, ctx: &Ctx, inst: &[Tm], tel: &[Ty]) -> Result<()> {
        Self::arity(tel.len(), inst.len(), "instantiation terms")?;
        for i in 0..tel.len() {
            let want = subst_ty_at(&tel[i], &Subst::terms(inst[..i].iter().cloned()), 0);
            self.check_tm(ctx, &inst[i], &want)?;
        }
        Ok(())
    }

    pub fn check_ty(&self, ctx: &Ctx, a: &Ty) -> Result<()> {
        match a {
            Ty::Base(n) => {
                if !self.bases.contains(n) {
                    return Err(Error::new(ErrorKind::UnknownName, "a declared base type", n.clone()));
                }
                Ok(())
            }
            Ty::Head { idx, inst } => {
                let (tel_dir, tel) = self.lookup_ty(ctx, *idx)?;
                self.check_inst(&ctx.dual_by(tel_dir), inst, &tel)
            }
            Ty::Pi(a0, b0) => {
                self.check_ty(&ctx.dual(), a0)?;
                self.check_ty(&ctx.with_tm(Dir::Neg, (**a0).clone()), b0)
            }
            Ty::Sigma(a0, b0) => {
                self.check_ty(ctx, a0)?;
                self.check_ty(&ctx.with_tm(Dir::Pos, (**a0).clone()), b0)
            }
            Ty::Ind { desc, params, indices } => {
                let d = self.desc(desc)?;
                self.check_sub(ctx, params, &d.params)?;
                let tel = subst_tel(&d.indices, &Subst::spine(params.clone()));
                self.check_inst(ctx, indices, &tel)
            }
        }
    }

    /// Check a substitution spine from `ctx` into `target`.
    pub fn check_sub(&self, ctx: &Ctx, comps: &[SubComp], target: &Ctx) -> Result<()> {
        Self::arity(target.len(), comps.len(), "substitution components")?;
        for (j, (e, c)) in target.entries.iter().zip(comps).enumerate() {
            let pre = Subst::spine(comps[..j].to_vec());
            match (e, c) {
                (Entry::Tm { dir, ty }, SubComp::Tm { dir: cd, tm }) if dir == cd => {
                    let want = subst_ty(ty, &pre);
                    self.check_tm(&ctx.dual_by(*dir), tm, &want)?;
                }
                (Entry::Ty { dir, tel_dir, tel }, SubComp::Ty { dir: cd, tel_dir: ctd, arity, ty })
                    if dir == cd && tel_dir == ctd =>
                {
                    Self::arity(tel.len(), *arity, "telescope entries")?;
                    let theta = subst_tel(tel, &pre);
                    self.check_ty(&ctx.extend_by_tel(*tel_dir, &theta).dual_by(*dir), ty)?;
                }
                _ => {
                    return Err(Error::new(
                        ErrorKind::ContextMismatch,
                        format!("a component for entry {j} of matching sort and direction"),
                        format!("{c:?}"),
                    ))
                }
            }
        }
        Ok(())
    }

    pub fn check_tm(&self, ctx: &Ctx, t: &Tm, want: &Ty) -> Result<()> {
        let want_nf = self.nf_ty(want);
        match (t, &want_nf) {
            (Tm::Lam(b), Ty::Pi(a0, b0)) => self.check_tm(&ctx.with_tm(Dir::Neg, (**a0).clone()), b, b0),
            (Tm::Pair(a, b), Ty::Sigma(a0, b0)) => {
                self.check_tm(ctx, a, a0)?;
                self.check_tm(ctx, b, &inst1_ty(b0, a))
            }
            _ => {
                let got = self.infer_tm(ctx, t)?;
                if !self.eq_ty(&got, &want_nf) {
                    return Err(self.mismatch(ctx, &want_nf, &got));
                }
                Ok(())
            }
        }
    }

    /// Infer the classifier of a term, in normal form.
    pub fn infer_tm(&self, ctx: &Ctx, t: &Tm) -> Result<Ty> {
        match t {
            Tm::Var(k) => Ok(self.nf_ty(&self.lookup_tm(ctx, *k)?)),
            Tm::Lam(_) => Err(Error::new(ErrorKind::CannotInfer, "an annotated function", "a bare lambda")),
            Tm::Pair(..) => Err(Error::new(ErrorKind::CannotInfer, "an annotated pair", "a bare pair")),
            Tm::App(f, u) => match self.infer_tm(ctx, f)? {
                Ty::Pi(a0, b0) => {
                    self.check_tm(&ctx.dual(), u, &a0)?;
                    Ok(self.nf_ty(&inst1_ty(&b0, u)))
                }
                other => Err(Error::new(ErrorKind::ClassifierMismatch, "a function type", self.show_ty(ctx, &other))),
            },
            Tm::Fst(p) => match self.infer_tm(ctx, p)? {
                Ty::Sigma(a0, _) => Ok(*a0),
                other => Err(Error::new(ErrorKind::ClassifierMismatch, "a pair type", self.show_ty(ctx, &other))),
            },
            Tm::Snd(p) => match self.infer_tm(ctx, p)? {
                Ty::Sigma(_, b0) => Ok(self.nf_ty(&inst1_ty(&b0, &Tm::fst((**p).clone())))),
                other => Err(Error::new(ErrorKind::ClassifierMismatch, "a pair type", self.show_ty(ctx, &other))),
            },
            Tm::Cast(t, f) => {
                let a = self.infer_tm(ctx, t)?;
                self.ad_target(ctx, f, &a)
            }
            Tm::Constr { desc, con, params, args } => {
                let d = self.desc(desc)?;
                let ec = self.con(desc, *con)?;
                self.check_sub(ctx, params, &d.params)?;
                let tel = subst_tel(&ec.tied, &Subst::spine(params.clone()));
                self.check_inst(ctx, args, &tel)?;
                Ok(self.nf_ty(&self.constr_result(desc, *con, params, args)?))
            }
        }
    }

    /// Check `f` against a known source type and return its target.
    pub fn ad_target(&self, ctx: &Ctx, f: &Ad, src: &Ty) -> Result<Ty> {
        let src = self.nf_ty(src);
        match f {
            Ad::Id => Ok(src),
            Ad::Comp(xs) => xs.iter().try_fold(src, |s, x| self.ad_target(ctx, x, &s)),
            Ad::Post { name, src: s, tgt } => {
                let Some((ps, pt)) = self.posts.get(name) else {
                    return Err(Error::new(ErrorKind::UnknownName, "a postulated adapter", name.clone()));
                };
                if !self.conv_ty(ps, s) || !self.conv_ty(pt, tgt) {
                    return Err(self.mismatch(ctx, ps, s));
                }
                if !self.eq_ty(&src, &self.nf_ty(s)) {
                    return Err(self.mismatch(ctx, s, &src));
                }
                Ok(self.nf_ty(tgt))
            }
            Ad::Sym { src: s, tgt, .. } => {
                if !self.eq_ty(&src, &self.nf_ty(s)) {
                    return Err(self.mismatch(ctx, s, &src));
                }
                Ok(self.nf_ty(tgt))
            }
            Ad::Pi { dom, cod, new_dom } => {
                let Ty::Pi(a0, b0) = &src else {
                    return Err(Error::new(ErrorKind::ClassifierMismatch, "a function type", self.show_ty(ctx, &src)));
                };
                let dual = ctx.dual();
                self.check_ty(&dual, new_dom)?;
                let back = self.ad_target(&dual, dom, new_dom)?;
                if !self.eq_ty(&back, a0) {
                    return Err(self.mismatch(&dual, a0, &back));
                }
                let inner = ctx.with_tm(Dir::Neg, (**new_dom).clone());
                let reindexed = self.reindex_var(b0, dom);
                let b1 = self.ad_target(&inner, cod, &reindexed)?;
                Ok(Ty::pi(self.nf_ty(new_dom), b1))
            }
            Ad::Sigma { fst, snd, new_cod } => {
                let Ty::Sigma(a0, b0) = &src else {
                    return Err(Error::new(ErrorKind::ClassifierMismatch, "a pair type", self.show_ty(ctx, &src)));
                };
                let a1 = self.ad_target(ctx, fst, a0)?;
                self.check_ty(&ctx.with_tm(Dir::Pos, a1.clone()), new_cod)?;
                let b1 = self.ad_target(&ctx.with_tm(Dir::Pos, (**a0).clone()), snd, b0)?;
                let want = self.reindex_var(new_cod, fst);
                if !self.eq_ty(&b1, &want) {
                    return Err(self.mismatch(ctx, &want, &b1));
                }
                Ok(Ty::sigma(a1, self.nf_ty(new_cod)))
            }
            Ad::Ind { desc, trans } => {
                let Ty::Ind { desc: d0, params, indices } = &src else {
                    return Err(Error::new(ErrorKind::ClassifierMismatch, format!("an instance of {desc}"), self.show_ty(ctx, &src)));
                };
                if d0 != desc {
                    return Err(Error::new(ErrorKind::ClassifierMismatch, format!("an instance of {desc}"), self.show_ty(ctx, &src)));
                }
                let d = self.desc(desc)?;
                let target = d.params.extend_by_tel(Dir::Pos, &d.indices);
                let te = self.check_trans(ctx, trans, &target)?;
                let mut expected = params.clone();
                expected.extend(indices.iter().map(|t| SubComp::Tm { dir: Dir::Pos, tm: t.clone() }));
                for (k, (a, b)) in expected.iter().zip(&te.src).enumerate() {
                    let ok = match (a, b) {
                        (SubComp::Tm { tm: x, .. }, SubComp::Tm { tm: y, .. }) => self.conv_tm(x, y),
                        (SubComp::Ty { ty: x, .. }, SubComp::Ty { ty: y, .. }) => self.conv_ty(x, y),
                        _ => false,
                    };
                    if !ok {
                        return Err(Error::new(
                            ErrorKind::EndpointMismatch,
                            format!("source component {k} matching {}", self.show_ty(ctx, &src)),
                            format!("{b:?}"),
                        ));
                    }
                }
                let np = d.params.len();
                Ok(self.nf_ty(&Ty::Ind {
                    desc: desc.clone(),
                    params: te.tgt[..np].to_vec(),
                    indices: te.tgt[np..].iter().map(|c| c.as_tm().cloned().unwrap_or(Tm::Var(0))).collect(),
                }))
            }
        }
    }

    /// `B[↑ ▷ x⟨a[↑]⟩]` for `B` over `ctx ▷ A` and `a : A' ⇒ A`.
    pub fn reindex_var(&self, b: &Ty, a: &Ad) -> Ty {
        let x = self.cast(Tm::Var(0), &weaken_ad(a, 1, 0));
        self.subst_ty_nf(b, &Subst { shift_tm: 1, shift_ty: 0, comps: vec![SubComp::Tm { dir: Dir::Pos, tm: x }] })
    }

    /// Check a full adapter judgment `f : a ⇒ b`.
    pub fn check_ad(&self, ctx: &Ctx, f: &Ad, a: &Ty, b: &Ty) -> Result<()> {
        let got = self.ad_target(ctx, f, a)?;
        if !self.conv_ty(&got, b) {
            return Err(self.mismatch(ctx, b, &got));
        }
        Ok(())
    }

    /// Check a transformation spine into `target` and return it with its
    /// endpoints.
    pub fn check_trans(&self, ctx: &Ctx, m: &Trans, target: &Ctx) -> Result<TransE> {
        Self::arity(target.len(), m.comps.len(), "transformation components")?;
        let mut te = TransE::empty();
        for (j, (e, c)) in target.entries.iter().zip(&m.comps).enumerate() {
            match (e, c) {
                (Entry::Tm { dir, ty }, TransComp::Tm { dir: cd, ty: cty, tm }) if dir == cd => {
                    if !self.conv_ty(ty, cty) {
                        return Err(self.mismatch(&target.prefix(j), ty, cty));
                    }
                    let side = match dir {
                        Dir::Pos => te.src_subst(),
                        Dir::Neg => te.tgt_subst(),
                    };
                    self.check_tm(&ctx.dual_by(*dir), tm, &subst_ty(ty, &side))?;
                }
                (Entry::Ty { dir, tel_dir, tel }, TransComp::Ty { dir: cd, tel_dir: ctd, tel: ctel, src, tgt, ad })
                    if dir == cd && tel_dir == ctd =>
                {
                    Self::arity(tel.len(), ctel.len(), "telescope entries")?;
                    let ts = self.subst_tel_nf(tel, &te.src_subst());
                    let tt = self.subst_tel_nf(tel, &te.tgt_subst());
                    self.check_ty(&ctx.extend_by_tel(*tel_dir, &ts).dual_by(*dir), src)?;
                    self.check_ty(&ctx.extend_by_tel(*tel_dir, &tt).dual_by(*dir), tgt)?;
                    let (living, from, to) = self.trans_ad_boundary(ctx, &te, *dir, *tel_dir, tel, src, tgt)?;
                    self.check_ad(&living, ad, &from, &to)?;
                }
                _ => {
                    return Err(Error::new(
                        ErrorKind::ContextMismatch,
                        format!("a component for entry {j} of matching sort and direction"),
                        format!("{c:?}"),
                    ))
                }
            }
            self.push_comp(&mut te, c.clone())?;
        }
        Ok(te)
    }

    fn subst_tel_nf(&self, tel: &[Ty], s: &Subst) -> Vec<Ty> {
        subst_tel(tel, s).iter().map(|a| self.nf_ty(a)).collect()
    }

    /// Context and boundary of the adapter stored in a type component,
    /// given the transformation prefix before it.
    #[allow(clippy::too_many_arguments)]
    pub fn trans_ad_boundary(
        &self,
        ctx: &Ctx,
        prefix: &TransE,
        dir: Dir,
        tel_dir: Dir,
        tel: &[Ty],
        src: &Ty,
        tgt: &Ty,
    ) -> Result<(Ctx, Ty, Ty)> {
        match tel_dir {
            Dir::Pos => {
                let theta = self.subst_tel_nf(tel, &prefix.src_subst());
                let living = ctx.extend_by_tel(Dir::Pos, &theta).dual_by(dir);
                let r = self.reindex(&self.push_trans_tel(tel, prefix)?);
                let tgt_r = self.subst_ty_nf(tgt, &r);
                Ok(match dir {
                    Dir::Pos => (living, src.clone(), tgt_r),
                    Dir::Neg => (living, tgt_r, src.clone()),
                })
            }
            Dir::Neg => {
                let theta = self.subst_tel_nf(tel, &prefix.tgt_subst());
                let living = ctx.extend_by_tel(Dir::Neg, &theta).dual_by(dir);
                let r = self.reindex(&self.push_trans_tel(tel, &prefix.dual())?);
                let src_r = self.subst_ty_nf(src, &r);
                Ok(match dir {
                    Dir::Pos => (living, src_r, tgt.clone()),
                    Dir::Neg => (living, tgt.clone(), src_r),
                })
            }
        }
    }

    /// Re-verify every formation premise of a registered description.
    pub fn check_desc(&self, name: &str) -> Result<()> {
        let d = self.desc(name)?;
        let ill = |what: String, e: Error| Error::new(ErrorKind::IllFormedDescription, what, e.to_string());
        self.check_ctx(&d.params).map_err(|e| ill(format!("{name}: parameter context"), e))?;
        self.check_tel(&d.params, &d.indices).map_err(|e| ill(format!("{name}: index telescope"), e))?;
        if d.param_names.len() != d.params.len() || d.index_names.len() != d.indices.len() {
            return Err(Error::new(ErrorKind::IllFormedDescription, format!("{name}: one name per binder"), "a name list of another length"));
        }
        for c in &d.cons {
            let cn = format!("{name}.{}", c.name);
            self.check_tel(&d.params, &c.nrec).map_err(|e| ill(format!("{cn}: non-recursive arguments"), e))?;
            let with_nrec = d.params.extend_by_tel(Dir::Pos, &c.nrec);
            let nn = c.nrec.len();
            let ind_tel = subst_tel(&d.indices, &Subst::weaken(nn, 0));
            self.check_inst(&with_nrec, &c.ind, &ind_tel).map_err(|e| ill(format!("{cn}: result indices"), e))?;
            for r in &c.rec {
                self.check_tel(&with_nrec.dual(), &r.arit).map_err(|e| ill(format!("{cn}: arity of {}", r.name), e))?;
                let inner = with_nrec.extend_by_tel(Dir::Neg, &r.arit);
                let rind_tel = subst_tel(&d.indices, &Subst::weaken(nn + r.arit.len(), 0));
                self.check_inst(&inner, &r.rind, &rind_tel).map_err(|e| ill(format!("{cn}: indices of {}", r.name), e))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inductive::builtin_sig;

    fn x_ctx() -> Ctx {
        Ctx::new(vec![Entry::Ty { dir: Dir::Pos, tel_dir: Dir::Pos, tel: vec![] }])
    }

    #[test]
    fn covariant_variable() {
        let sig = Sig::new();
        let ctx = x_ctx().with_tm(Dir::Pos, Ty::var(0));
        assert_eq!(sig.infer_tm(&ctx, &Tm::Var(0)).unwrap(), Ty::var(0));
    }

    #[test]
    fn contravariant_variable_rejected() {
        let sig = Sig::new();
        let ctx = Ctx::new(vec![Entry::Ty { dir: Dir::Neg, tel_dir: Dir::Pos, tel: vec![] }]);
        let ctx = ctx.dual().with_tm(Dir::Neg, Ty::var(0));
        let err = sig.infer_tm(&ctx, &Tm::Var(0)).unwrap_err();
        assert_eq!(err.kind, ErrorKind::VarianceViolation);
    }

    #[test]
    fn identity_function_is_untypeable() {
        let mut sig = Sig::new();
        sig.add_base("A").unwrap();
        let a = Ty::base("A");
        let err = sig.check_tm(&Ctx::empty(), &Tm::lam(Tm::Var(0)), &Ty::pi(a.clone(), a)).unwrap_err();
        assert_eq!(err.kind, ErrorKind::VarianceViolation);
    }

    #[test]
    fn builtin_descriptions_check() {
        let sig = builtin_sig();
        for d in sig.descs.keys() {
            sig.check_desc(d).unwrap();
        }
    }

    #[test]
    fn application_checks_argument_in_dual() {
        let mut sig = Sig::new();
        sig.add_base("A").unwrap();
        sig.add_base("B").unwrap();
        let a = Ty::base("A");
        let b = Ty::base("B");
        let f_ty = Ty::pi(a.clone(), b.clone());
        let t = Tm::app(Tm::Var(1), Tm::Var(0));
        let neg = Ctx::empty().with_tm(Dir::Pos, f_ty.clone()).with_tm(Dir::Neg, a.clone());
        assert_eq!(sig.infer_tm(&neg, &t).unwrap(), b);
        let pos = Ctx::empty().with_tm(Dir::Pos, f_ty).with_tm(Dir::Pos, a);
        assert_eq!(sig.infer_tm(&pos, &t).unwrap_err().kind, ErrorKind::VarianceViolation);
    }
}
