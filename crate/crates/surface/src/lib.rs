//! Concrete syntax for the kernel: lexer, parser, pretty-printer and the
//! elaborator from named syntax to de Bruijn terms.

pub mod ast;
pub mod elab;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod pretty;

pub use elab::{elaborate, elaborate_with, Elab, Program, Scope};
pub use error::Diagnostic;
pub use parser::{parse, parse_expr};
pub use pretty::pretty;
