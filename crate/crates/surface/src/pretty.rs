//! Printing surface syntax. Layout matches the kernel printer, so text
//! printed from core terms is a fixed point of `parse` then `pretty`.

use crate::ast::*;

const P_EXPR: u8 = 0;
const P_SIGMA: u8 = 1;
const P_CAST: u8 = 2;
const P_COMP: u8 = 3;
const P_APP: u8 = 4;
const P_ATOM: u8 = 5;

pub fn pretty(decls: &[Decl]) -> String {
    let mut out = String::new();
    for d in decls {
        out.push_str(&pretty_decl(d));
        out.push('\n');
    }
    out
}

pub fn pretty_decl(d: &Decl) -> String {
    match d {
        Decl::Base { name, .. } => format!("type {name} ;"),
        Decl::Postulate { name, src, tgt, .. } => format!("postulate adapter {name} : {} => {} ;", expr(src), expr(tgt)),
        Decl::Data(d) => data(d),
        Decl::Def { name, ty, tm, .. } => format!("def {name} : {} = {} ;", expr(ty), expr(tm)),
        Decl::Check { tm, ty, .. } => format!("check {} : {} ;", expr(tm), expr(ty)),
        Decl::Assert { lhs, rhs, ty, .. } => format!("assert {} == {} : {} ;", expr(lhs), expr(rhs), expr(ty)),
        Decl::Normalize { tm, .. } => format!("normalize {} ;", expr(tm)),
    }
}

fn binders(bs: &[Binder]) -> String {
    bs.iter()
        .map(|b| format!("({} : {}){}", b.name, expr(&b.ty), if b.neg { "^-" } else { "" }))
        .collect::<Vec<_>>()
        .join(" ")
}

fn data(d: &Data) -> String {
    let mut head = format!("data {}", d.name);
    for p in &d.params {
        head.push(' ');
        head.push_str(&match &p.kind {
            ParamKind::Ty { dir, tel } if tel.is_empty() => format!("({} : Ty{})", p.name, dir.sign()),
            ParamKind::Ty { dir, tel } => format!("({} : {} -> Ty{})", p.name, binders(tel), dir.sign()),
            ParamKind::Tm { ty, neg } => format!("({} : {}){}", p.name, expr(ty), if *neg { "^-" } else { "" }),
        });
    }
    if !d.indices.is_empty() {
        head.push_str(&format!(" : {} -> Ty", binders(&d.indices)));
    }
    if d.cons.is_empty() {
        return format!("{head} {{}}");
    }
    let cons: Vec<String> = d.cons.iter().map(|c| format!("  {} : {}", c.name, expr(&c.ty))).collect();
    format!("{head} {{\n{}\n}}", cons.join(" ;\n"))
}

pub fn expr(e: &Expr) -> String {
    go(e).0
}

fn at(e: &Expr, want: u8) -> String {
    let (s, p) = go(e);
    if p < want {
        format!("({s})")
    } else {
        s
    }
}

fn go(e: &Expr) -> (String, u8) {
    match &e.kind {
        ExprKind::Name(n) => (n.clone(), P_ATOM),
        ExprKind::Qual(d, c) => (format!("{d}::{c}"), P_ATOM),
        ExprKind::Id => ("id".into(), P_ATOM),
        ExprKind::App(f, u) => (format!("{} {}", at(f, P_APP), at(u, P_ATOM)), P_APP),
        ExprKind::Lam(xs, b) => (format!("\\{}. {}", xs.join(" "), at(b, P_EXPR)), P_EXPR),
        ExprKind::Pi(bs, b) => (format!("{} -> {}", binders(bs), at(b, P_EXPR)), P_EXPR),
        ExprKind::Arrow(a, b) => (format!("{} -> {}", at(a, P_SIGMA), at(b, P_EXPR)), P_EXPR),
        ExprKind::Sigma(bs, b) => (format!("{} * {}", binders(bs), at(b, P_SIGMA)), P_SIGMA),
        ExprKind::Times(a, b) => (format!("{} * {}", at(a, P_CAST), at(b, P_SIGMA)), P_SIGMA),
        ExprKind::Pair(a, b) => (format!("({}, {})", at(a, P_EXPR), at(b, P_EXPR)), P_ATOM),
        ExprKind::Fst(p) => (format!("fst {}", at(p, P_ATOM)), P_APP),
        ExprKind::Snd(p) => (format!("snd {}", at(p, P_ATOM)), P_APP),
        ExprKind::Cast(t, f) => (format!("{} <| {}", at(t, P_CAST), at(f, P_COMP)), P_CAST),
        ExprKind::Comp(g, f) => (format!("{} << {}", at(g, P_COMP), at(f, P_APP)), P_COMP),
        ExprKind::PiAd(a, b) => (format!("Pi[{} > {}]", at(a, P_EXPR), at(b, P_EXPR)), P_ATOM),
        ExprKind::SigmaAd(a, b) => (format!("Sigma[{} > {}]", at(a, P_EXPR), at(b, P_EXPR)), P_ATOM),
        ExprKind::IndAd(d, xs) => (format!("{d}[{}]", xs.iter().map(|x| at(x, P_EXPR)).collect::<Vec<_>>().join(" > ")), P_ATOM),
        ExprKind::Fam(xs, b) => (format!("{{{}. {}}}", xs.join(" "), at(b, P_EXPR)), P_ATOM),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse, parse_expr};

    #[test]
    fn fixed_points() {
        for s in [
            "A -> A * A",
            "(A -> A) * A",
            "(x : A) * B x -> C",
            "((x : A) -> B x) * C",
            "\\x y. (x, fst y) <| Sigma[id > {z. ab << ba}]",
            "List::cons A x xs <| List[ab]",
            "W[f > {x. g x}]",
            "(t <| f) x",
            "Nat[]",
        ] {
            assert_eq!(expr(&parse_expr(s).unwrap()), s);
        }
    }

    #[test]
    fn declarations_round_trip() {
        let src = "data W (X : Ty+) (Y : (x : X) -> Ty-) {\n  sup : (x : X) (k : (y : Y x) -> W X Y) -> W X Y\n}\n\
                   data Id (X : Ty+) (x : X) : (y : X) -> Ty {\n  refl : Id X x x\n}\n";
        let ds = parse(src).unwrap();
        assert_eq!(pretty(&ds), src);
    }
}
