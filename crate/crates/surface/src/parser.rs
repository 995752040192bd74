//! Recursive descent parser. Precedence, loosest first: lambda and
//! binder arrows, `->`, `*`, `<|`, `<<`, application, atoms.

use crate::ast::*;
use crate::error::Diagnostic;
use crate::lexer::{lex, Tok};
use adaptt_core::Dir;

pub fn parse(src: &str) -> Result<Vec<Decl>, Diagnostic> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let mut decls = Vec::new();
    while p.peek() != &Tok::Eof {
        decls.push(p.decl()?);
    }
    Ok(decls)
}

/// Parse a single expression, for command-line input.
pub fn parse_expr(src: &str) -> Result<Expr, Diagnostic> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

type R<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(x) if *x == s)
    }

    fn is_kw(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Kw(x) if *x == s)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, expected: &str) -> R<T> {
        Err(Diagnostic::parse(self.span(), expected, self.peek().describe()))
    }

    fn sym(&mut self, s: &str) -> R<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            self.fail(&format!("'{s}'"))
        }
    }

    fn kw(&mut self, s: &str) -> R<()> {
        if self.is_kw(s) {
            self.bump();
            Ok(())
        } else {
            self.fail(&format!("'{s}'"))
        }
    }

    fn ident(&mut self) -> R<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.fail("an identifier"),
        }
    }

    fn expect_eof(&self) -> R<()> {
        if self.peek() == &Tok::Eof {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }

    fn decl(&mut self) -> R<Decl> {
        let span = self.span();
        match self.peek() {
            Tok::Kw("type") => {
                self.bump();
                let name = self.ident()?;
                self.sym(";")?;
                Ok(Decl::Base { name, span })
            }
            Tok::Kw("postulate") => {
                self.bump();
                self.kw("adapter")?;
                let name = self.ident()?;
                self.sym(":")?;
                let src = self.expr()?;
                self.sym("=>")?;
                let tgt = self.expr()?;
                self.sym(";")?;
                Ok(Decl::Postulate { name, src, tgt, span })
            }
            Tok::Kw("data") => self.data().map(Decl::Data),
            Tok::Kw("def") => {
                self.bump();
                let name = self.ident()?;
                self.sym(":")?;
                let ty = self.expr()?;
                self.sym("=")?;
                let tm = self.expr()?;
                self.sym(";")?;
                Ok(Decl::Def { name, ty, tm, span })
            }
            Tok::Kw("check") => {
                self.bump();
                let tm = self.expr()?;
                self.sym(":")?;
                let ty = self.expr()?;
                self.sym(";")?;
                Ok(Decl::Check { tm, ty, span })
            }
            Tok::Kw("assert") => {
                self.bump();
                let lhs = self.expr()?;
                self.sym("==")?;
                let rhs = self.expr()?;
                self.sym(":")?;
                let ty = self.expr()?;
                self.sym(";")?;
                Ok(Decl::Assert { lhs, rhs, ty, span })
            }
            Tok::Kw("normalize") => {
                self.bump();
                let tm = self.expr()?;
                self.sym(";")?;
                Ok(Decl::Normalize { tm, span })
            }
            _ => self.fail("a declaration"),
        }
    }

    fn data(&mut self) -> R<Data> {
        let span = self.span();
        self.kw("data")?;
        let name = self.ident()?;
        let mut params = Vec::new();
        while self.is_sym("(") {
            params.push(self.param()?);
        }
        let mut indices = Vec::new();
        if self.eat_sym(":") {
            if !self.is_kw("Ty") {
                indices = self.binders()?;
                self.sym("->")?;
            }
            self.kw("Ty")?;
        }
        self.sym("{")?;
        let mut cons = Vec::new();
        if !self.is_sym("}") {
            loop {
                let span = self.span();
                let name = self.ident()?;
                self.sym(":")?;
                let ty = self.expr()?;
                cons.push(Con { name, ty, span });
                if !self.eat_sym(";") {
                    break;
                }
            }
        }
        self.sym("}")?;
        Ok(Data { name, params, indices, cons, span })
    }

    fn sign(&mut self) -> R<Dir> {
        if self.eat_sym("+") {
            Ok(Dir::Pos)
        } else if self.eat_sym("-") {
            Ok(Dir::Neg)
        } else {
            self.fail("'+' or '-'")
        }
    }

    fn param(&mut self) -> R<Param> {
        let span = self.span();
        self.sym("(")?;
        let name = self.ident()?;
        self.sym(":")?;
        let kind = if self.is_kw("Ty") {
            self.bump();
            ParamKind::Ty { dir: self.sign()?, tel: Vec::new() }
        } else if self.binder_ahead() {
            let tel = self.binders()?;
            self.sym("->")?;
            if self.is_kw("Ty") {
                self.bump();
                ParamKind::Ty { dir: self.sign()?, tel }
            } else {
                let body = self.expr()?;
                let ty = Expr::new(ExprKind::Pi(tel, Box::new(body)), span);
                ParamKind::Tm { ty, neg: false }
            }
        } else {
            ParamKind::Tm { ty: self.expr()?, neg: false }
        };
        self.sym(")")?;
        let neg = self.mark()?;
        let kind = match kind {
            ParamKind::Tm { ty, .. } => ParamKind::Tm { ty, neg },
            _ if neg => return Err(Diagnostic::parse(span, "no mark on a type parameter", "'^-'")),
            k => k,
        };
        Ok(Param { name, kind, span })
    }

    fn mark(&mut self) -> R<bool> {
        if self.eat_sym("^") {
            self.sym("-")?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn binder_ahead(&self) -> bool {
        self.is_sym("(") && matches!(self.peek_at(1), Tok::Ident(_)) && matches!(self.peek_at(2), Tok::Sym(":"))
    }

    /// One or more `(x : A)` groups, each optionally marked `^-`.
    fn binders(&mut self) -> R<Vec<Binder>> {
        let mut out = Vec::new();
        if !self.binder_ahead() {
            return self.fail("a binder");
        }
        while self.binder_ahead() {
            let span = self.span();
            self.sym("(")?;
            let name = self.ident()?;
            self.sym(":")?;
            let ty = self.expr()?;
            self.sym(")")?;
            let neg = self.mark()?;
            out.push(Binder { name, ty, neg, span });
        }
        Ok(out)
    }

    pub fn expr(&mut self) -> R<Expr> {
        let span = self.span();
        if self.eat_sym("\\") {
            let mut xs = vec![self.ident()?];
            while let Tok::Ident(_) = self.peek() {
                xs.push(self.ident()?);
            }
            self.sym(".")?;
            let body = self.expr()?;
            return Ok(Expr::new(ExprKind::Lam(xs, Box::new(body)), span));
        }
        if self.binder_ahead() {
            let bs = self.binders()?;
            if self.eat_sym("->") {
                let body = self.expr()?;
                return Ok(Expr::new(ExprKind::Pi(bs, Box::new(body)), span));
            }
            self.sym("*")?;
            let body = self.sigma()?;
            let lhs = Expr::new(ExprKind::Sigma(bs, Box::new(body)), span);
            return self.arrow_rest(lhs);
        }
        let lhs = self.sigma()?;
        self.arrow_rest(lhs)
    }

    fn arrow_rest(&mut self, lhs: Expr) -> R<Expr> {
        if self.eat_sym("->") {
            let span = lhs.span;
            let rhs = self.expr()?;
            return Ok(Expr::new(ExprKind::Arrow(Box::new(lhs), Box::new(rhs)), span));
        }
        Ok(lhs)
    }

    fn sigma(&mut self) -> R<Expr> {
        let span = self.span();
        if self.binder_ahead() {
            let bs = self.binders()?;
            self.sym("*")?;
            let body = self.sigma()?;
            return Ok(Expr::new(ExprKind::Sigma(bs, Box::new(body)), span));
        }
        let lhs = self.cast()?;
        if self.eat_sym("*") {
            let rhs = self.sigma()?;
            return Ok(Expr::new(ExprKind::Times(Box::new(lhs), Box::new(rhs)), span));
        }
        Ok(lhs)
    }

    fn cast(&mut self) -> R<Expr> {
        let span = self.span();
        let mut e = self.comp()?;
        while self.eat_sym("<|") {
            let f = self.comp()?;
            e = Expr::new(ExprKind::Cast(Box::new(e), Box::new(f)), span);
        }
        Ok(e)
    }

    fn comp(&mut self) -> R<Expr> {
        let span = self.span();
        let mut e = self.app()?;
        while self.eat_sym("<<") {
            let f = self.app()?;
            e = Expr::new(ExprKind::Comp(Box::new(e), Box::new(f)), span);
        }
        Ok(e)
    }

    fn atom_ahead(&self) -> bool {
        match self.peek() {
            Tok::Ident(_) => true,
            Tok::Kw(k) => matches!(*k, "id" | "Pi" | "Sigma"),
            Tok::Sym(s) => matches!(*s, "(" | "{"),
            Tok::Eof => false,
        }
    }

    fn app(&mut self) -> R<Expr> {
        let span = self.span();
        let mut e = if self.is_kw("fst") || self.is_kw("snd") {
            let fst = self.is_kw("fst");
            self.bump();
            let a = Box::new(self.atom()?);
            Expr::new(if fst { ExprKind::Fst(a) } else { ExprKind::Snd(a) }, span)
        } else {
            self.atom()?
        };
        while self.atom_ahead() {
            let a = self.atom()?;
            e = Expr::new(ExprKind::App(Box::new(e), Box::new(a)), span);
        }
        Ok(e)
    }

    fn bracket_pair(&mut self) -> R<(Expr, Expr)> {
        self.sym("[")?;
        let a = self.expr()?;
        self.sym(">")?;
        let b = self.expr()?;
        self.sym("]")?;
        Ok((a, b))
    }

    fn atom(&mut self) -> R<Expr> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                if self.eat_sym("::") {
                    let c = self.ident()?;
                    return Ok(Expr::new(ExprKind::Qual(name, c), span));
                }
                if self.eat_sym("[") {
                    let mut comps = Vec::new();
                    if !self.is_sym("]") {
                        comps.push(self.expr()?);
                        while self.eat_sym(">") {
                            comps.push(self.expr()?);
                        }
                    }
                    self.sym("]")?;
                    return Ok(Expr::new(ExprKind::IndAd(name, comps), span));
                }
                Ok(Expr::new(ExprKind::Name(name), span))
            }
            Tok::Kw("id") => {
                self.bump();
                Ok(Expr::new(ExprKind::Id, span))
            }
            Tok::Kw("Pi") => {
                self.bump();
                let (a, b) = self.bracket_pair()?;
                Ok(Expr::new(ExprKind::PiAd(Box::new(a), Box::new(b)), span))
            }
            Tok::Kw("Sigma") => {
                self.bump();
                let (a, b) = self.bracket_pair()?;
                Ok(Expr::new(ExprKind::SigmaAd(Box::new(a), Box::new(b)), span))
            }
            Tok::Sym("(") => {
                self.bump();
                let a = self.expr()?;
                if self.eat_sym(",") {
                    let b = self.expr()?;
                    self.sym(")")?;
                    return Ok(Expr::new(ExprKind::Pair(Box::new(a), Box::new(b)), span));
                }
                self.sym(")")?;
                Ok(a)
            }
            Tok::Sym("{") => {
                self.bump();
                let mut xs = vec![self.ident()?];
                while let Tok::Ident(_) = self.peek() {
                    xs.push(self.ident()?);
                }
                self.sym(".")?;
                let body = self.expr()?;
                self.sym("}")?;
                Ok(Expr::new(ExprKind::Fam(xs, Box::new(body)), span))
            }
            _ => self.fail("an expression"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_declaration() {
        let ds = parse("data List (X : Ty+) { nil : List X ; cons : (x : X)(xs : List X) -> List X }").unwrap();
        let Decl::Data(d) = &ds[0] else { panic!() };
        assert_eq!(d.cons.len(), 2);
        assert!(matches!(d.params[0].kind, ParamKind::Ty { dir: Dir::Pos, .. }));
    }

    #[test]
    fn postulate() {
        let ds = parse("postulate adapter f : A => B ;").unwrap();
        assert!(matches!(&ds[0], Decl::Postulate { name, .. } if name == "f"));
    }

    #[test]
    fn unterminated_declaration() {
        let e = parse("data List (X : Ty+").unwrap_err();
        assert!(e.is_parse());
        assert_eq!(e.got, "end of input");
    }

    #[test]
    fn arrows_associate_right_and_bind_loosest() {
        let e = parse_expr("A * B -> C -> D").unwrap();
        let ExprKind::Arrow(l, r) = &e.kind else { panic!() };
        assert!(matches!(l.kind, ExprKind::Times(..)));
        assert!(matches!(r.kind, ExprKind::Arrow(..)));
    }

    #[test]
    fn casts_and_composition() {
        let e = parse_expr("t <| g << f <| h").unwrap();
        let ExprKind::Cast(inner, h) = &e.kind else { panic!() };
        assert!(matches!(h.kind, ExprKind::Name(_)));
        let ExprKind::Cast(_, gf) = &inner.kind else { panic!() };
        assert!(matches!(gf.kind, ExprKind::Comp(..)));
    }

    #[test]
    fn comments_are_skipped() {
        let ds = parse("-- a base\ntype A ; -- trailing\n").unwrap();
        assert_eq!(ds.len(), 1);
    }
}
