//! Cross-checking the conversion checker against the set model: pairs the
//! kernel calls convertible must denote equal values under every binding
//! and every assignment of the ambient variables.

use crate::binding::Binding;
use crate::eval::{Model, ModelError, R};
use crate::value::Env;
use adaptt_core::gen::{finite_ambient, inferable, Gen, POSTS};
use adaptt_core::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Ambient assignments are enumerated up to this many, sampled beyond.
pub const ENUM_LIMIT: usize = 256;
pub const SAMPLES: usize = 64;
/// Constructor depth and per-type bound for values of inductive types.
pub const DEPTH: usize = 3;
pub const CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct Pair {
    pub kind: &'static str,
    pub lhs: Tm,
    pub rhs: Tm,
    pub ty: Ty,
}

#[derive(Clone, Debug, Default)]
pub struct OracleReport {
    pub bindings: usize,
    pub pairs: usize,
    /// Pairs compared under every environment of every binding.
    pub agreed: usize,
    pub disagreed: Vec<String>,
    /// Pairs the model could not evaluate, with the reason.
    pub skipped: Vec<String>,
    pub environments: usize,
}

impl OracleReport {
    pub fn agreement(&self) -> f64 {
        let n = self.agreed + self.disagreed.len();
        if n == 0 {
            0.0
        } else {
            self.agreed as f64 / n as f64
        }
    }
}

/// Assignments of values to the term variables of a context, all of them
/// when there are few enough, otherwise a seeded sample. Inductive values
/// are bounded by `DEPTH` and `CAP`.
pub fn environments(m: &Model, ctx: &Ctx, rng: &mut impl Rng) -> R<Vec<Env>> {
    let mut out = Vec::new();
    if enumerate_into(m, ctx, 0, Env::default(), &mut out)? {
        return Ok(out);
    }
    let mut samples = Vec::with_capacity(SAMPLES);
    for _ in 0..SAMPLES {
        let mut env = Env::default();
        for e in &ctx.entries {
            let Entry::Tm { ty, .. } = e else { return Err(ModelError::Stuck("type variable in ambient".into())) };
            let vals = m.inhabitants(&m.ty(&env, ty)?, DEPTH, CAP)?;
            let v = vals.choose(rng).ok_or_else(|| ModelError::Stuck("empty type in ambient".into()))?;
            env = env.with_tm(v.clone());
        }
        samples.push(env);
    }
    Ok(samples)
}

fn enumerate_into(m: &Model, ctx: &Ctx, i: usize, env: Env, out: &mut Vec<Env>) -> R<bool> {
    if i == ctx.entries.len() {
        out.push(env);
        return Ok(out.len() <= ENUM_LIMIT);
    }
    let Entry::Tm { ty, .. } = &ctx.entries[i] else { return Err(ModelError::Stuck("type variable in ambient".into())) };
    for v in m.inhabitants(&m.ty(&env, ty)?, DEPTH, CAP)? {
        if !enumerate_into(m, ctx, i + 1, env.with_tm(v), out)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Do both sides denote the same value in every environment?
pub fn agrees(m: &Model, envs: &[Env], p: &Pair) -> R<bool> {
    let (lhs, rhs) = (m.compile(&p.lhs)?, m.compile(&p.rhs)?);
    for env in envs {
        let a = m.ty(env, &p.ty)?;
        let x = m.run(env, &lhs)?;
        let y = m.run(env, &rhs)?;
        if !m.eq(&x, &y, &a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Draw well-typed pairs over `finite_ambient` that the kernel judges
/// convertible: a term and its normal form, a composite cast against two
/// casts, a cast along the identity, and a cast against one along the
/// normalized adapter.
pub fn gen_pairs(seed: u64, n: usize) -> (Sig, Vec<Pair>) {
    let mut g = Gen::new(seed);
    let ctx = finite_ambient();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < n && tries < 50 * n {
        tries += 1;
        let ty = g.finite_ty(2);
        let Some(t) = g.tm(&ctx, &ty, 3) else { continue };
        if g.sig.check_tm(&ctx, &t, &ty).is_err() {
            continue;
        }
        let sig = &g.sig;
        let pair = match tries % 4 {
            0 => Pair { kind: "normal form", lhs: t.clone(), rhs: sig.nf_tm(&t), ty },
            1 if inferable(&t) => {
                let (f, mid) = g.ad(&ty, true, 2);
                let (h, end) = g.ad(&mid, true, 2);
                let two = Tm::cast(Tm::cast(t.clone(), f.clone()), h.clone());
                Pair { kind: "composite", lhs: two, rhs: Tm::cast(t, Ad::then(f, h)), ty: end }
            }
            2 if inferable(&t) => Pair { kind: "identity", lhs: Tm::cast(t.clone(), Ad::Id), rhs: t, ty },
            3 if inferable(&t) => {
                let (f, end) = g.ad(&ty, true, 2);
                let nf = g.sig.nf_ad(&f);
                Pair { kind: "normal adapter", lhs: Tm::cast(t.clone(), f), rhs: Tm::cast(t, nf), ty: end }
            }
            _ => continue,
        };
        let sig = &g.sig;
        if sig.check_tm(&ctx, &pair.lhs, &pair.ty).is_err() || sig.check_tm(&ctx, &pair.rhs, &pair.ty).is_err() {
            continue;
        }
        if !sig.conv_tm(&pair.lhs, &pair.rhs) {
            continue;
        }
        out.push(pair);
    }
    (g.sig, out)
}

/// Bindings of `A`, `B`, `C` of sizes one to three with random tables for
/// the generator's postulates.
pub fn gen_bindings(seed: u64) -> Vec<Binding> {
    let mut rng = StdRng::seed_from_u64(seed);
    [[1, 1, 1], [2, 2, 2], [3, 2, 1], [1, 3, 2]]
        .iter()
        .map(|s| Binding::random(&mut rng, &[("A", s[0]), ("B", s[1]), ("C", s[2])], POSTS))
        .collect()
}

pub fn run(seed: u64, n: usize) -> OracleReport {
    let (sig, pairs) = gen_pairs(seed, n);
    let bindings = gen_bindings(seed);
    let ctx = finite_ambient();
    let mut rng = StdRng::seed_from_u64(seed ^ 0x5e7);
    let mut rep = OracleReport { bindings: bindings.len(), pairs: pairs.len(), ..Default::default() };
    let mut models = Vec::new();
    for b in &bindings {
        let m = Model::new(&sig, b).expect("generated bindings are total");
        let envs = environments(&m, &ctx, &mut rng).expect("finite ambient enumerates");
        rep.environments += envs.len();
        models.push((m, envs));
    }
    'pairs: for p in &pairs {
        for (m, envs) in &models {
            match agrees(m, envs, p) {
                Ok(true) => {}
                Ok(false) => {
                    rep.disagreed.push(format!("{}: {}  vs  {}", p.kind, show_tm(&sig, &p.lhs), show_tm(&sig, &p.rhs)));
                    continue 'pairs;
                }
                Err(e) => {
                    rep.skipped.push(format!("{}: {e}", p.kind));
                    continue 'pairs;
                }
            }
        }
        rep.agreed += 1;
    }
    rep
}

fn show_tm(sig: &Sig, t: &Tm) -> String {
    sig.show_tm(&finite_ambient(), t)
}
