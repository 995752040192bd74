//! Functorial action of types and telescopes on transformations,
//! whiskering and vertical composition.

use crate::error::{Error, ErrorKind, Result};
use crate::sig::Sig;
use crate::subst::*;
use crate::syntax::*;
use crate::trace::rule;

/// A transformation together with its computed endpoint spines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransE {
    pub comps: Vec<TransComp>,
    pub src: Vec<SubComp>,
    pub tgt: Vec<SubComp>,
}

impl TransE {
    pub fn empty() -> TransE {
        TransE { comps: Vec::new(), src: Vec::new(), tgt: Vec::new() }
    }

    pub fn trans(&self) -> Trans {
        Trans { comps: self.comps.clone() }
    }

    pub fn src_subst(&self) -> Subst {
        Subst::spine(self.src.clone())
    }

    pub fn tgt_subst(&self) -> Subst {
        Subst::spine(self.tgt.clone())
    }

    pub fn dual(&self) -> TransE {
        TransE {
            comps: self.comps.iter().map(TransComp::dual).collect(),
            src: self.tgt.iter().map(SubComp::dual).collect(),
            tgt: self.src.iter().map(SubComp::dual).collect(),
        }
    }

    pub fn dual_by(&self, d: Dir) -> TransE {
        match d {
            Dir::Pos => self.clone(),
            Dir::Neg => self.dual(),
        }
    }

    pub fn prefix(&self, n: usize) -> TransE {
        TransE { comps: self.comps[..n].to_vec(), src: self.src[..n].to_vec(), tgt: self.tgt[..n].to_vec() }
    }

    /// Right whiskering by a weakening of the ambient context.
    pub fn weaken(&self, n: usize) -> TransE {
        if n == 0 {
            return self.clone();
        }
        let w = Subst::weaken(n, 0);
        TransE {
            comps: subst_trans(&self.trans(), &w).comps,
            src: self.src.iter().map(|c| subst_comp(c, &w)).collect(),
            tgt: self.tgt.iter().map(|c| subst_comp(c, &w)).collect(),
        }
    }
}

/// Position in `comps` of the k-th type component from the innermost end.
fn ty_comp_position(comps: &[TransComp], k: usize) -> Option<usize> {
    comps.iter().enumerate().rev().filter(|(_, c)| matches!(c, TransComp::Ty { .. })).nth(k).map(|(i, _)| i)
}

impl Sig {
    /// Compute the endpoints of a transformation spine.
    pub fn endpoints(&self, m: &Trans) -> Result<TransE> {
        let mut te = TransE::empty();
        for c in &m.comps {
            self.push_comp(&mut te, c.clone())?;
        }
        Ok(te)
    }

    /// Extend a transformation by one component, computing its forced endpoint.
    pub fn push_comp(&self, te: &mut TransE, c: TransComp) -> Result<()> {
        let (s, t) = match &c {
            TransComp::Tm { dir: Dir::Pos, ty, tm } => {
                rule("TRANS_TM_POS");
                let f = self.push_trans_ty(ty, te)?;
                let forced = self.cast(self.nf_tm(tm), &f);
                (SubComp::Tm { dir: Dir::Pos, tm: tm.clone() }, SubComp::Tm { dir: Dir::Pos, tm: forced })
            }
            TransComp::Tm { dir: Dir::Neg, ty, tm } => {
                rule("TRANS_TM_NEG");
                let f = self.push_trans_ty(ty, &te.dual())?;
                let forced = self.cast(self.nf_tm(tm), &f);
                (SubComp::Tm { dir: Dir::Neg, tm: forced }, SubComp::Tm { dir: Dir::Neg, tm: tm.clone() })
            }
            TransComp::Ty { dir, tel_dir, tel, src, tgt, .. } => {
                let n = tel.len();
                (
                    SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: n, ty: src.clone() },
                    SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: n, ty: tgt.clone() },
                )
            }
        };
        te.comps.push(c);
        te.src.push(s);
        te.tgt.push(t);
        Ok(())
    }

    /// `μ ∘ ↑_Θ ▷_d vinst`: lift over a telescope whose types are given over
    /// the target context of `m`.
    pub fn lift_tel(&self, m: &TransE, d: Dir, tel: &[Ty]) -> Result<TransE> {
        let n = tel.len();
        let mut te = m.weaken(n);
        for (i, a) in tel.iter().enumerate() {
            self.push_comp(&mut te, TransComp::Tm { dir: d, ty: a.clone(), tm: Tm::Var(n - 1 - i) })?;
        }
        Ok(te)
    }

    /// `A⟦μ⟧ : A[σ] ⇒ A[τ]`.
    pub fn push_trans_ty(&self, a: &Ty, m: &TransE) -> Result<Ad> {
        match a {
            Ty::Base(_) => {
                rule("BASE_TRANS");
                Ok(Ad::Id)
            }
            Ty::Head { idx, inst } => {
                let pos = ty_comp_position(&m.comps, *idx).ok_or_else(|| {
                    Error::new(ErrorKind::ContextMismatch, "a transformation covering the type", format!("type variable #{idx}"))
                })?;
                let TransComp::Ty { dir, tel_dir, ad, .. } = &m.comps[pos] else { unreachable!() };
                if *dir != Dir::Pos {
                    return Err(Error::new(
                        ErrorKind::VarianceViolation,
                        "a covariant type variable",
                        format!("contravariant type variable #{idx}"),
                    ));
                }
                rule("TRANS_HD_AD");
                let side = match tel_dir {
                    Dir::Pos => m.src_subst(),
                    Dir::Neg => m.tgt_subst(),
                };
                let inst: Vec<Tm> = inst.iter().map(|t| self.subst_tm_nf(t, &side)).collect();
                Ok(self.subst_ad_nf(ad, &Subst::terms(inst)))
            }
            Ty::Pi(a0, b0) => {
                rule("AD_FUN");
                let dom = self.push_trans_ty(a0, &m.dual())?;
                let new_dom = self.subst_ty_nf(a0, &m.tgt_subst());
                let lifted = self.lift_tel(m, Dir::Neg, std::slice::from_ref(a0))?;
                let cod = self.push_trans_ty(b0, &lifted)?;
                Ok(self.nf_ad(&Ad::Pi { dom: Box::new(dom), cod: Box::new(cod), new_dom: Box::new(new_dom) }))
            }
            Ty::Sigma(a0, b0) => {
                rule("AD_PAIR");
                let fst = self.push_trans_ty(a0, m)?;
                let lifted = self.lift_tel(m, Dir::Pos, std::slice::from_ref(a0))?;
                let snd = self.push_trans_ty(b0, &lifted)?;
                let new_cod = self.subst_ty_nf(b0, &lift(&m.tgt_subst(), 1));
                Ok(self.nf_ad(&Ad::Sigma { fst: Box::new(fst), snd: Box::new(snd), new_cod: Box::new(new_cod) }))
            }
            Ty::Ind { desc, params, indices } => {
                rule("IND_TY_TRANS");
                let d = self.desc(desc)?;
                let target = d.params.extend_by_tel(Dir::Pos, &d.indices);
                let mut spine = params.clone();
                spine.extend(indices.iter().map(|t| SubComp::Tm { dir: Dir::Pos, tm: t.clone() }));
                let trans = self.lwhisk(&spine, &target, m)?;
                Ok(self.nf_ad(&Ad::Ind { desc: desc.clone(), trans }))
            }
        }
    }

    /// `Θ⟦μ⟧`: the i-th adapter lives over the source-side prefix `Θ_<i`.
    pub fn push_trans_tel(&self, tel: &[Ty], m: &TransE) -> Result<Vec<Ad>> {
        (0..tel.len())
            .map(|i| {
                let lifted = self.lift_tel(m, Dir::Pos, &tel[..i])?;
                self.push_trans_ty(&tel[i], &lifted)
            })
            .collect()
    }

    /// `vinst⟨α⟩` over the source side of a telescope adapter, as a spine
    /// replacing the telescope's own variables.
    pub fn reindex(&self, alpha: &[Ad]) -> Subst {
        let n = alpha.len();
        Subst::terms((0..n).map(|i| self.cast(Tm::Var(n - 1 - i), &weaken_ad(&alpha[i], n - i, 0))))
    }

    /// Left whiskering `τ ∘ μ` of a transformation `μ` into `Δ` by a
    /// substitution spine `τ : Δ → target`.
    pub fn lwhisk(&self, spine: &[SubComp], target: &Ctx, m: &TransE) -> Result<Trans> {
        if spine.len() != target.len() {
            return Err(Error::new(
                ErrorKind::ArityMismatch,
                format!("{} components", target.len()),
                format!("{}", spine.len()),
            ));
        }
        let mut out = Vec::with_capacity(spine.len());
        for (j, (e, c)) in target.entries.iter().zip(spine).enumerate() {
            match (e, c) {
                (Entry::Tm { dir, ty }, SubComp::Tm { tm, .. }) => {
                    let side = match dir {
                        Dir::Pos => m.src_subst(),
                        Dir::Neg => m.tgt_subst(),
                    };
                    out.push(TransComp::Tm { dir: *dir, ty: ty.clone(), tm: self.subst_tm_nf(tm, &side) });
                }
                (Entry::Ty { dir, tel_dir, tel }, SubComp::Ty { ty: b, .. }) => {
                    let theta = subst_tel(tel, &Subst::spine(spine[..j].to_vec()));
                    let theta: Vec<Ty> = theta.iter().map(|a| self.nf_ty(a)).collect();
                    let n = theta.len();
                    let lifted = self.lift_tel(m, *tel_dir, &theta)?;
                    let ad = self.push_trans_ty(b, &lifted.dual_by(*dir))?;
                    let src = self.subst_ty_nf(b, &lift(&m.src_subst(), n));
                    let tgt = self.subst_ty_nf(b, &lift(&m.tgt_subst(), n));
                    out.push(TransComp::Ty { dir: *dir, tel_dir: *tel_dir, tel: tel.clone(), src, tgt, ad });
                }
                _ => {
                    return Err(Error::new(ErrorKind::ContextMismatch, "components matching the entry sorts", format!("component {j}")))
                }
            }
        }
        Ok(Trans { comps: out })
    }

    /// Right whiskering `μ ∘ δ` by a substitution of the ambient context.
    pub fn rwhisk(&self, m: &Trans, delta: &Subst) -> Trans {
        self.nf_trans(&subst_trans(m, delta))
    }

    /// The identity transformation on a substitution spine into `target`.
    pub fn id_trans(&self, spine: &[SubComp], target: &Ctx) -> Result<Trans> {
        if spine.len() != target.len() {
            return Err(Error::new(ErrorKind::ArityMismatch, format!("{} components", target.len()), format!("{}", spine.len())));
        }
        let mut out = Vec::new();
        for (j, (e, c)) in target.entries.iter().zip(spine).enumerate() {
            match (e, c) {
                (Entry::Tm { dir, ty }, SubComp::Tm { tm, .. }) => out.push(TransComp::Tm { dir: *dir, ty: ty.clone(), tm: tm.clone() }),
                (Entry::Ty { dir, tel_dir, tel }, SubComp::Ty { ty, .. }) => out.push(TransComp::Ty {
                    dir: *dir,
                    tel_dir: *tel_dir,
                    tel: tel.clone(),
                    src: ty.clone(),
                    tgt: ty.clone(),
                    ad: Ad::Id,
                }),
                _ => {
                    return Err(Error::new(ErrorKind::ContextMismatch, "components matching the entry sorts", format!("component {j}")))
                }
            }
        }
        Ok(Trans { comps: out })
    }

    /// `ν ∘ μ` for `μ : ρ ⇒ σ` and `ν : σ ⇒ τ`.
    pub fn vcomp(&self, nu: &TransE, mu: &TransE) -> Result<TransE> {
        if nu.comps.len() != mu.comps.len() {
            return Err(Error::new(
                ErrorKind::EndpointMismatch,
                format!("{} components", mu.comps.len()),
                format!("{}", nu.comps.len()),
            ));
        }
        let mut comps = Vec::with_capacity(mu.comps.len());
        for (i, (a, b)) in mu.comps.iter().zip(&nu.comps).enumerate() {
            match (a, b) {
                (TransComp::Tm { dir, ty, tm: tm_mu }, TransComp::Tm { tm: tm_nu, .. }) => {
                    let tm = if *dir == Dir::Pos { tm_mu } else { tm_nu };
                    comps.push(TransComp::Tm { dir: *dir, ty: ty.clone(), tm: tm.clone() });
                }
                (
                    TransComp::Ty { dir, tel_dir, tel, src, ad: f_mu, .. },
                    TransComp::Ty { tgt, ad: f_nu, .. },
                ) => {
                    let ad = match tel_dir {
                        Dir::Pos => {
                            let r = self.reindex(&self.push_trans_tel(tel, &mu.prefix(i))?);
                            let nu_r = self.subst_ad_nf(f_nu, &r);
                            match dir {
                                Dir::Pos => Ad::then(f_mu.clone(), nu_r),
                                Dir::Neg => Ad::then(nu_r, f_mu.clone()),
                            }
                        }
                        Dir::Neg => {
                            let r = self.reindex(&self.push_trans_tel(tel, &nu.prefix(i).dual())?);
                            let mu_r = self.subst_ad_nf(f_mu, &r);
                            match dir {
                                Dir::Pos => Ad::then(mu_r, f_nu.clone()),
                                Dir::Neg => Ad::then(f_nu.clone(), mu_r),
                            }
                        }
                    };
                    comps.push(TransComp::Ty {
                        dir: *dir,
                        tel_dir: *tel_dir,
                        tel: tel.clone(),
                        src: src.clone(),
                        tgt: tgt.clone(),
                        ad: self.nf_ad(&ad),
                    });
                }
                _ => {
                    return Err(Error::new(ErrorKind::EndpointMismatch, "components of the same sort", format!("component {i}")))
                }
            }
        }
        Ok(TransE { comps, src: mu.src.clone(), tgt: nu.tgt.clone() })
    }

    /// Naturality of a term: `t[σ]⟨A⟦μ⟧⟩ ≡ t[τ]` for `t : A` over the
    /// target of `μ`.
    pub fn check_naturality_tm(&self, t: &Tm, a: &Ty, m: &TransE) -> bool {
        let Ok(f) = self.push_trans_ty(a, m) else { return false };
        let lhs = self.cast(self.subst_tm_nf(t, &m.src_subst()), &f);
        let rhs = self.subst_tm_nf(t, &m.tgt_subst());
        self.eq_tm(&lhs, &rhs)
    }

    /// Naturality of an adapter `f : A ⇒ B`: `B⟦μ⟧ ∘ f[σ] ≡ f[τ] ∘ A⟦μ⟧`.
    pub fn check_naturality_ad(&self, f: &Ad, a: &Ty, b: &Ty, m: &TransE) -> bool {
        let (Ok(am), Ok(bm)) = (self.push_trans_ty(a, m), self.push_trans_ty(b, m)) else { return false };
        let fs = self.subst_ad_nf(f, &m.src_subst());
        let ft = self.subst_ad_nf(f, &m.tgt_subst());
        self.conv_ad(&Ad::then(fs, bm), &Ad::then(am, ft))
    }
}
