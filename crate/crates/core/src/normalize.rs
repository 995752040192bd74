//! Normalization and conversion. Substitution, identity and composition
//! laws are oriented towards flattened leaf forms; β, the adapter
//! computation rules and the constructor cast rule compute; η is used only
//! by conversion.

use crate::sig::Sig;
use crate::subst::*;
use crate::syntax::*;
use crate::trace::{self, rule};

impl Sig {
    pub fn nf_tm(&self, t: &Tm) -> Tm {
        match t {
            Tm::Var(_) => t.clone(),
            Tm::Lam(b) => {
                let _g = trace::at("lam");
                Tm::lam(self.nf_tm(b))
            }
            Tm::App(f, u) => {
                let f = {
                    let _g = trace::at("fn");
                    self.nf_tm(f)
                };
                let u = {
                    let _g = trace::at("arg");
                    self.nf_tm(u)
                };
                self.app(f, u)
            }
            Tm::Pair(a, b) => {
                let a = {
                    let _g = trace::at("fst");
                    self.nf_tm(a)
                };
                let _g = trace::at("snd");
                Tm::pair(a, self.nf_tm(b))
            }
            Tm::Fst(p) => {
                let p = {
                    let _g = trace::at("proj");
                    self.nf_tm(p)
                };
                self.fst(p)
            }
            Tm::Snd(p) => {
                let p = {
                    let _g = trace::at("proj");
                    self.nf_tm(p)
                };
                self.snd(p)
            }
            Tm::Cast(t, f) => {
                let t = {
                    let _g = trace::at("cast");
                    self.nf_tm(t)
                };
                let f = {
                    let _g = trace::at("adapter");
                    self.nf_ad(f)
                };
                self.cast(t, &f)
            }
            Tm::Constr { desc, con, params, args } => {
                let _g = trace::at("constr");
                Tm::Constr {
                    desc: desc.clone(),
                    con: *con,
                    params: params.iter().map(|c| self.nf_comp(c)).collect(),
                    args: args.iter().map(|a| self.nf_tm(a)).collect(),
                }
            }
        }
    }

    /// Application of two normal forms.
    pub fn app(&self, f: Tm, u: Tm) -> Tm {
        match f {
            Tm::Lam(b) => {
                rule("BETA");
                self.nf_tm(&inst1_tm(&b, &u))
            }
            Tm::Cast(g, ad) => match *ad {
                Ad::Pi { dom, cod, .. } => {
                    rule("AD_FUN_EQ");
                    let arg = self.cast(u.clone(), &dom);
                    let inner = self.app(*g, arg);
                    let cod = self.nf_ad(&inst1_ad(&cod, &u));
                    self.cast(inner, &cod)
                }
                other => Tm::app(Tm::Cast(g, Box::new(other)), u),
            },
            f => Tm::app(f, u),
        }
    }

    pub fn fst(&self, p: Tm) -> Tm {
        match p {
            Tm::Pair(a, _) => {
                rule("PROJ1_BETA");
                *a
            }
            Tm::Cast(q, ad) => match *ad {
                Ad::Sigma { fst, .. } => {
                    rule("AD_PAIR_EQ1");
                    let q1 = self.fst(*q);
                    self.cast(q1, &fst)
                }
                other => Tm::fst(Tm::Cast(q, Box::new(other))),
            },
            p => Tm::fst(p),
        }
    }

    pub fn snd(&self, p: Tm) -> Tm {
        match p {
            Tm::Pair(_, b) => {
                rule("PROJ2_BETA");
                *b
            }
            Tm::Cast(q, ad) => match *ad {
                Ad::Sigma { snd, .. } => {
                    rule("AD_PAIR_EQ2");
                    let q1 = self.fst((*q).clone());
                    let q2 = self.snd(*q);
                    let b = self.nf_ad(&inst1_ad(&snd, &q1));
                    self.cast(q2, &b)
                }
                other => Tm::snd(Tm::Cast(q, Box::new(other))),
            },
            p => Tm::snd(p),
        }
    }

    /// Cast of a normal term along a normal adapter.
    pub fn cast(&self, t: Tm, f: &Ad) -> Tm {
        match f {
            Ad::Id => {
                rule("ADAPT_ID");
                t
            }
            Ad::Comp(xs) => {
                rule("ADAPT_COMP");
                xs.iter().fold(t, |acc, x| self.cast(acc, x))
            }
            Ad::Ind { desc, trans } => match t {
                Tm::Constr { desc: d, con, params, args } if d == *desc => {
                    match self.cast_constr(desc, con, &params, &args, trans) {
                        Ok(r) => {
                            rule("IND_AD_EQ");
                            r
                        }
                        Err(_) => Tm::cast(Tm::Constr { desc: d, con, params, args }, f.clone()),
                    }
                }
                Tm::Cast(x, inner) => match *inner {
                    Ad::Ind { desc: d, trans: mu } if d == *desc => match self.fuse_ind(desc, &mu, trans) {
                        Some(fused) => {
                            rule("TY_TRANS_COMP");
                            self.cast(*x, &fused)
                        }
                        None => Tm::cast(Tm::Cast(x, Box::new(Ad::Ind { desc: d, trans: mu })), f.clone()),
                    },
                    other => Tm::cast(Tm::Cast(x, Box::new(other)), f.clone()),
                },
                t => Tm::cast(t, f.clone()),
            },
            Ad::Sigma { fst, snd, .. } => match t {
                Tm::Pair(a, b) => {
                    rule("AD_PAIR_CAST");
                    let g = self.nf_ad(&inst1_ad(snd, &a));
                    let a2 = self.cast((*a).clone(), fst);
                    Tm::pair(a2, self.cast(*b, &g))
                }
                t => Tm::cast(t, f.clone()),
            },
            Ad::Pi { dom, cod, .. } => match t {
                Tm::Lam(b) => {
                    rule("AD_FUN_CAST");
                    let s = Subst { shift_tm: 1, shift_ty: 0, comps: vec![SubComp::Tm { dir: Dir::Neg, tm: Tm::cast(Tm::Var(0), weaken_ad(dom, 1, 0)) }] };
                    let body = self.nf_tm(&subst_tm(&b, &s));
                    Tm::lam(self.cast(body, cod))
                }
                t => Tm::cast(t, f.clone()),
            },
            _ => Tm::cast(t, f.clone()),
        }
    }

    /// `I⟦ν⟧ ∘ I⟦μ⟧` as a single inductive adapter, already normalized.
    fn fuse_ind(&self, desc: &str, mu: &Trans, nu: &Trans) -> Option<Ad> {
        let mu = self.endpoints(mu).ok()?;
        let nu = self.endpoints(nu).ok()?;
        let c = self.vcomp(&nu, &mu).ok()?;
        Some(self.nf_ad(&Ad::Ind { desc: desc.to_string(), trans: Trans { comps: c.comps } }))
    }

    pub fn nf_ad(&self, f: &Ad) -> Ad {
        match f {
            Ad::Id => Ad::Id,
            Ad::Comp(xs) => {
                let mut chain: Vec<Ad> = Vec::new();
                for x in xs {
                    match self.nf_ad(x) {
                        Ad::Id => rule(if chain.is_empty() { "ID_RIGHT" } else { "ID_LEFT" }),
                        Ad::Comp(ys) => {
                            rule("ASSOC");
                            for y in ys {
                                self.push_atom(&mut chain, y);
                            }
                        }
                        a => self.push_atom(&mut chain, a),
                    }
                }
                match chain.len() {
                    0 => Ad::Id,
                    1 => chain.pop().unwrap(),
                    _ => Ad::Comp(chain),
                }
            }
            Ad::Post { name, src, tgt } => Ad::Post { name: name.clone(), src: self.nf_ty(src), tgt: self.nf_ty(tgt) },
            Ad::Sym { name, inst, src, tgt } => Ad::Sym {
                name: name.clone(),
                inst: inst.iter().map(|t| self.nf_tm(t)).collect(),
                src: self.nf_ty(src),
                tgt: self.nf_ty(tgt),
            },
            Ad::Pi { dom, cod, new_dom } => {
                let dom = self.nf_ad(dom);
                let cod = self.nf_ad(cod);
                if dom == Ad::Id && cod == Ad::Id {
                    rule("TY_TRANS_ID");
                    return Ad::Id;
                }
                Ad::Pi { dom: Box::new(dom), cod: Box::new(cod), new_dom: Box::new(self.nf_ty(new_dom)) }
            }
            Ad::Sigma { fst, snd, new_cod } => {
                let fst = self.nf_ad(fst);
                let snd = self.nf_ad(snd);
                if fst == Ad::Id && snd == Ad::Id {
                    rule("TY_TRANS_ID");
                    return Ad::Id;
                }
                Ad::Sigma { fst: Box::new(fst), snd: Box::new(snd), new_cod: Box::new(self.nf_ty(new_cod)) }
            }
            Ad::Ind { desc, trans } => {
                let trans = self.nf_trans(trans);
                let trivial = trans.comps.iter().all(|c| match c {
                    TransComp::Ty { ad, .. } => *ad == Ad::Id,
                    TransComp::Tm { .. } => true,
                });
                if trivial {
                    rule("TY_TRANS_ID");
                    return Ad::Id;
                }
                Ad::Ind { desc: desc.clone(), trans }
            }
        }
    }

    /// Append a normal atom, fusing adjacent inductive adapters of the same
    /// description. Postulates are never fused.
    fn push_atom(&self, chain: &mut Vec<Ad>, a: Ad) {
        if let (Some(Ad::Ind { desc: d1, trans: mu }), Ad::Ind { desc: d2, trans: nu }) = (chain.last(), &a) {
            if d1 == d2 {
                if let Some(fused) = self.fuse_ind(d1, mu, nu) {
                    rule("TY_TRANS_COMP");
                    chain.pop();
                    match fused {
                        Ad::Id => {}
                        Ad::Comp(ys) => chain.extend(ys),
                        x => chain.push(x),
                    }
                    return;
                }
            }
        }
        chain.push(a);
    }

    pub fn nf_trans(&self, m: &Trans) -> Trans {
        Trans {
            comps: m
                .comps
                .iter()
                .map(|c| match c {
                    TransComp::Tm { dir, ty, tm } => TransComp::Tm { dir: *dir, ty: self.nf_ty(ty), tm: self.nf_tm(tm) },
                    TransComp::Ty { dir, tel_dir, tel, src, tgt, ad } => TransComp::Ty {
                        dir: *dir,
                        tel_dir: *tel_dir,
                        tel: tel.iter().map(|a| self.nf_ty(a)).collect(),
                        src: self.nf_ty(src),
                        tgt: self.nf_ty(tgt),
                        ad: self.nf_ad(ad),
                    },
                })
                .collect(),
        }
    }

    pub fn nf_ty(&self, a: &Ty) -> Ty {
        match a {
            Ty::Head { idx, inst } => Ty::Head { idx: *idx, inst: inst.iter().map(|t| self.nf_tm(t)).collect() },
            Ty::Pi(a, b) => Ty::pi(self.nf_ty(a), self.nf_ty(b)),
            Ty::Sigma(a, b) => Ty::sigma(self.nf_ty(a), self.nf_ty(b)),
            Ty::Ind { desc, params, indices } => Ty::Ind {
                desc: desc.clone(),
                params: params.iter().map(|c| self.nf_comp(c)).collect(),
                indices: indices.iter().map(|t| self.nf_tm(t)).collect(),
            },
            Ty::Base(_) => a.clone(),
        }
    }

    pub fn nf_comp(&self, c: &SubComp) -> SubComp {
        match c {
            SubComp::Tm { dir, tm } => SubComp::Tm { dir: *dir, tm: self.nf_tm(tm) },
            SubComp::Ty { dir, tel_dir, arity, ty } => {
                SubComp::Ty { dir: *dir, tel_dir: *tel_dir, arity: *arity, ty: self.nf_ty(ty) }
            }
        }
    }

    pub fn nf_subst(&self, s: &Subst) -> Subst {
        Subst { shift_tm: s.shift_tm, shift_ty: s.shift_ty, comps: s.comps.iter().map(|c| self.nf_comp(c)).collect() }
    }

    /// Weak head normal form. Our normal forms are computed eagerly, so
    /// this is the full normal form; it exists for callers that only
    /// inspect the head.
    pub fn whnf(&self, t: &Tm) -> Tm {
        self.nf_tm(t)
    }

    pub fn subst_ty_nf(&self, a: &Ty, s: &Subst) -> Ty {
        self.nf_ty(&subst_ty(a, s))
    }

    pub fn subst_tm_nf(&self, t: &Tm, s: &Subst) -> Tm {
        self.nf_tm(&subst_tm(t, s))
    }

    pub fn subst_ad_nf(&self, f: &Ad, s: &Subst) -> Ad {
        self.nf_ad(&subst_ad(f, s))
    }

    /// `g ∘ f`, normalized.
    pub fn compose_ad(&self, g: &Ad, f: &Ad) -> Ad {
        self.nf_ad(&Ad::then(f.clone(), g.clone()))
    }

    pub fn pi_tel(&self, tel: &[Ty], body: Ty) -> Ty {
        if tel.is_empty() {
            rule("PI_TEL_EMPTY");
        } else {
            for _ in tel {
                rule("PI_TEL_EXT");
            }
        }
        pi_tel(tel, body)
    }

    // Conversion.

    pub fn conv_tm(&self, a: &Tm, b: &Tm) -> bool {
        let a = self.nf_tm(a);
        let b = self.nf_tm(b);
        self.eq_tm(&a, &b)
    }

    pub fn conv_ty(&self, a: &Ty, b: &Ty) -> bool {
        let a = self.nf_ty(a);
        let b = self.nf_ty(b);
        self.eq_ty(&a, &b)
    }

    pub fn conv_ad(&self, f: &Ad, g: &Ad) -> bool {
        let f = self.nf_ad(f);
        let g = self.nf_ad(g);
        self.eq_ad(&f, &g)
    }

    pub fn conv_subst(&self, s: &Subst, t: &Subst) -> bool {
        s.shift_tm == t.shift_tm
            && s.shift_ty == t.shift_ty
            && s.comps.len() == t.comps.len()
            && s.comps.iter().zip(&t.comps).all(|(a, b)| self.eq_comp(&self.nf_comp(a), &self.nf_comp(b)))
    }

    pub fn conv_trans(&self, m: &Trans, n: &Trans) -> bool {
        self.eq_trans(&self.nf_trans(m), &self.nf_trans(n))
    }

    fn known_pi(t: &Tm) -> bool {
        match t {
            Tm::Lam(_) => true,
            Tm::Cast(_, f) => matches!(**f, Ad::Pi { .. } | Ad::Post { tgt: Ty::Pi(..), .. } | Ad::Sym { tgt: Ty::Pi(..), .. }),
            _ => false,
        }
    }

    fn known_sigma(t: &Tm) -> bool {
        match t {
            Tm::Pair(..) => true,
            Tm::Cast(_, f) => {
                matches!(**f, Ad::Sigma { .. } | Ad::Post { tgt: Ty::Sigma(..), .. } | Ad::Sym { tgt: Ty::Sigma(..), .. })
            }
            _ => false,
        }
    }

    fn eta_body(&self, t: &Tm) -> Tm {
        match t {
            Tm::Lam(b) => (**b).clone(),
            _ => self.app(shift(t, 0, 1), Tm::Var(0)),
        }
    }

    /// Equality of normal forms up to η.
    pub fn eq_tm(&self, a: &Tm, b: &Tm) -> bool {
        if a == b {
            return true;
        }
        if Self::known_pi(a) || Self::known_pi(b) {
            rule("ETA_PI");
            return self.eq_tm(&self.eta_body(a), &self.eta_body(b));
        }
        if Self::known_sigma(a) || Self::known_sigma(b) {
            rule("ETA_SIGMA");
            return self.eq_tm(&self.fst(a.clone()), &self.fst(b.clone()))
                && self.eq_tm(&self.snd(a.clone()), &self.snd(b.clone()));
        }
        match (a, b) {
            (Tm::Var(i), Tm::Var(j)) => i == j,
            (Tm::App(f, u), Tm::App(g, v)) => self.eq_tm(f, g) && self.eq_tm(u, v),
            (Tm::Fst(p), Tm::Fst(q)) | (Tm::Snd(p), Tm::Snd(q)) => self.eq_tm(p, q),
            (Tm::Cast(t, f), Tm::Cast(u, g)) => self.eq_tm(t, u) && self.eq_atom(f, g),
            (
                Tm::Constr { desc: d1, con: c1, params: p1, args: a1 },
                Tm::Constr { desc: d2, con: c2, params: p2, args: a2 },
            ) => {
                d1 == d2
                    && c1 == c2
                    && p1.len() == p2.len()
                    && a1.len() == a2.len()
                    && p1.iter().zip(p2).all(|(x, y)| self.eq_comp(x, y))
                    && a1.iter().zip(a2).all(|(x, y)| self.eq_tm(x, y))
            }
            _ => false,
        }
    }

    fn eq_atom(&self, f: &Ad, g: &Ad) -> bool {
        match (f, g) {
            (Ad::Post { name: n1, src: s1, tgt: t1 }, Ad::Post { name: n2, src: s2, tgt: t2 }) => {
                n1 == n2 && self.eq_ty(s1, s2) && self.eq_ty(t1, t2)
            }
            (Ad::Ind { desc: d1, trans: m1 }, Ad::Ind { desc: d2, trans: m2 }) => d1 == d2 && self.eq_trans(m1, m2),
            (Ad::Sym { name: n1, inst: i1, .. }, Ad::Sym { name: n2, inst: i2, .. }) => {
                n1 == n2 && i1.len() == i2.len() && i1.iter().zip(i2).all(|(x, y)| self.eq_tm(x, y))
            }
            (Ad::Pi { dom: a1, cod: b1, new_dom: n1 }, Ad::Pi { dom: a2, cod: b2, new_dom: n2 }) => {
                self.eq_ty(n1, n2) && self.eq_ad(a1, a2) && self.eq_ad(b1, b2)
            }
            (Ad::Sigma { fst: a1, snd: b1, new_cod: n1 }, Ad::Sigma { fst: a2, snd: b2, new_cod: n2 }) => {
                self.eq_ty(n1, n2) && self.eq_ad(a1, a2) && self.eq_ad(b1, b2)
            }
            _ => false,
        }
    }

    /// Extensional comparison: cast a fresh variable along both sides.
    pub fn eq_ad(&self, f: &Ad, g: &Ad) -> bool {
        if f == g {
            return true;
        }
        let x = Tm::Var(0);
        let l = self.cast(x.clone(), &weaken_ad(f, 1, 0));
        let r = self.cast(x, &weaken_ad(g, 1, 0));
        self.eq_tm(&l, &r)
    }

    pub fn eq_trans(&self, m: &Trans, n: &Trans) -> bool {
        m.comps.len() == n.comps.len()
            && m.comps.iter().zip(&n.comps).all(|(a, b)| match (a, b) {
                (TransComp::Tm { dir: d1, tm: t1, .. }, TransComp::Tm { dir: d2, tm: t2, .. }) => {
                    d1 == d2 && self.eq_tm(t1, t2)
                }
                (
                    TransComp::Ty { dir: d1, src: s1, tgt: t1, ad: f1, .. },
                    TransComp::Ty { dir: d2, src: s2, tgt: t2, ad: f2, .. },
                ) => d1 == d2 && self.eq_ty(s1, s2) && self.eq_ty(t1, t2) && self.eq_ad(f1, f2),
                _ => false,
            })
    }

    pub fn eq_ty(&self, a: &Ty, b: &Ty) -> bool {
        if a == b {
            return true;
        }
        match (a, b) {
            (Ty::Head { idx: i, inst: u }, Ty::Head { idx: j, inst: v }) => {
                i == j && u.len() == v.len() && u.iter().zip(v).all(|(x, y)| self.eq_tm(x, y))
            }
            (Ty::Pi(a1, b1), Ty::Pi(a2, b2)) | (Ty::Sigma(a1, b1), Ty::Sigma(a2, b2)) => {
                self.eq_ty(a1, a2) && self.eq_ty(b1, b2)
            }
            (
                Ty::Ind { desc: d1, params: p1, indices: i1 },
                Ty::Ind { desc: d2, params: p2, indices: i2 },
            ) => {
                d1 == d2
                    && p1.len() == p2.len()
                    && i1.len() == i2.len()
                    && p1.iter().zip(p2).all(|(x, y)| self.eq_comp(x, y))
                    && i1.iter().zip(i2).all(|(x, y)| self.eq_tm(x, y))
            }
            (Ty::Base(x), Ty::Base(y)) => x == y,
            _ => false,
        }
    }

    fn eq_comp(&self, a: &SubComp, b: &SubComp) -> bool {
        match (a, b) {
            (SubComp::Tm { tm: x, .. }, SubComp::Tm { tm: y, .. }) => self.eq_tm(x, y),
            (SubComp::Ty { arity: n, ty: x, .. }, SubComp::Ty { arity: m, ty: y, .. }) => n == m && self.eq_ty(x, y),
            _ => false,
        }
    }
}
