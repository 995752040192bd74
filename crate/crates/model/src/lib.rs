//! A finite set-theoretic model. Base types are interpreted as finite
//! sets, postulated adapters as tables, and everything else by the
//! evident functions. Used as an oracle for the conversion checker.

pub mod binding;
pub mod code;
pub mod eval;
pub mod oracle;
pub mod value;

pub use binding::Binding;
pub use eval::{Model, ModelError};
pub use value::{Env, SemTy, Val};
