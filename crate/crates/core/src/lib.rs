//! Kernel of a directed dependent type theory with adapters: syntax,
//! substitution, normalization, functorial action of types on
//! transformations, inductive descriptions and the type checker.

pub mod check;
pub mod error;
pub mod functorial;
pub mod gen;
pub mod golden;
pub mod inductive;
pub mod laws;
pub mod normalize;
pub mod print;
pub mod ruledoc;
pub mod sig;
pub mod subst;
pub mod syntax;
pub mod trace;

pub use error::{Error, ErrorKind};
pub use sig::Sig;
pub use syntax::*;
