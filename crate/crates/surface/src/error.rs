use crate::ast::Span;
use adaptt_core::Error;
use std::fmt;

/// A located diagnostic. `code` is a kernel error kind or `ParseError`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: String,
    pub span: Span,
    pub expected: String,
    pub got: String,
}

impl Diagnostic {
    pub fn parse(span: Span, expected: impl Into<String>, got: impl Into<String>) -> Diagnostic {
        Diagnostic { code: "ParseError".into(), span, expected: expected.into(), got: got.into() }
    }

    pub fn at(span: Span, e: Error) -> Diagnostic {
        Diagnostic { code: e.kind.code().into(), span, expected: e.expected, got: e.got }
    }

    pub fn is_parse(&self) -> bool {
        self.code == "ParseError"
    }

    pub fn render(&self, file: &str) -> String {
        format!("ERROR {} {}:{}:{} expected {} got {}", self.code, file, self.span.line, self.span.col, self.expected, self.got)
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} expected {} got {}", self.code, self.span, self.expected, self.got)
    }
}
