//! The signature: base types, postulated adapters and inductive
//! descriptions. Passed explicitly to every kernel operation.

use crate::error::{Error, ErrorKind, Result};
use crate::syntax::*;
use indexmap::{IndexMap, IndexSet};

/// A constructor compiled against its description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElaboratedCon {
    /// Argument telescope over `params ▶ R`, with `R` the placeholder
    /// type variable standing for the inductive type.
    pub con_data: Vec<Ty>,
    /// Argument telescope over `params`, the placeholder replaced by the
    /// inductive type itself.
    pub tied: Vec<Ty>,
    /// `params ▷ tied`.
    pub ctx: Ctx,
    /// Result indices over `ctx`.
    pub result_indices: Vec<Tm>,
}

#[derive(Clone, Debug, Default)]
pub struct Sig {
    pub bases: IndexSet<String>,
    pub posts: IndexMap<String, (Ty, Ty)>,
    pub descs: IndexMap<String, IndDesc>,
    pub cons: IndexMap<String, Vec<ElaboratedCon>>,
}

impl Sig {
    pub fn new() -> Sig {
        Sig::default()
    }

    pub fn add_base(&mut self, name: &str) -> Result<()> {
        self.fresh(name)?;
        self.bases.insert(name.to_string());
        Ok(())
    }

    /// Register a postulated adapter between two closed types.
    pub fn add_post(&mut self, name: &str, src: Ty, tgt: Ty) -> Result<()> {
        self.fresh(name)?;
        self.check_ty(&Ctx::empty(), &src)?;
        self.check_ty(&Ctx::empty(), &tgt)?;
        let src = self.nf_ty(&src);
        let tgt = self.nf_ty(&tgt);
        self.posts.insert(name.to_string(), (src, tgt));
        Ok(())
    }

    /// Check a description and register it with its compiled constructors.
    pub fn add_desc(&mut self, desc: IndDesc) -> Result<()> {
        self.fresh(&desc.name)?;
        let name = desc.name.clone();
        self.descs.insert(name.clone(), desc);
        let res = self.check_desc(&name).and_then(|_| {
            let d = &self.descs[&name];
            (0..d.cons.len()).map(|i| self.elab_con(d, i)).collect::<Result<Vec<_>>>()
        });
        match res {
            Ok(cons) => {
                self.cons.insert(name.clone(), cons);
                let d = self.descs[&name].clone();
                for i in 0..d.cons.len() {
                    let ec = self.cons[&name][i].clone();
                    if let Err(e) = self.check_ctx(&ec.ctx) {
                        self.descs.shift_remove(&name);
                        self.cons.shift_remove(&name);
                        return Err(Error::new(ErrorKind::IllFormedDescription, format!("constructor {}", d.cons[i].name), e.to_string()));
                    }
                }
                Ok(())
            }
            Err(e) => {
                self.descs.shift_remove(&name);
                Err(e)
            }
        }
    }

    fn fresh(&self, name: &str) -> Result<()> {
        if self.bases.contains(name) || self.posts.contains_key(name) || self.descs.contains_key(name) {
            return Err(Error::new(ErrorKind::UnknownName, "a fresh name", name));
        }
        Ok(())
    }

    pub fn desc(&self, name: &str) -> Result<&IndDesc> {
        self.descs.get(name).ok_or_else(|| Error::new(ErrorKind::UnknownName, "a declared inductive type", name))
    }

    pub fn con(&self, desc: &str, con: usize) -> Result<&ElaboratedCon> {
        self.cons
            .get(desc)
            .and_then(|cs| cs.get(con))
            .ok_or_else(|| Error::new(ErrorKind::UnknownName, "a declared constructor", format!("{desc}#{con}")))
    }
}
