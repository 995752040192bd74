//! Rewrite tracing. When enabled, every rewrite step taken by the
//! normalizer or the functorial action appends `RULE <name> AT <path>` to a
//! thread-local sink.

use std::cell::{Cell, RefCell};

/// Every rule name a trace line may carry, with the equation it implements.
pub const RULES: &[(&str, &str)] = &[
    ("BETA", "(\\b) u = b[id > u]"),
    ("ETA_PI", "f = \\(f[wk] 0) at function types"),
    ("ETA_SIGMA", "p = (fst p, snd p) at pair types"),
    ("PROJ1_BETA", "fst (a, b) = a"),
    ("PROJ2_BETA", "snd (a, b) = b"),
    ("ADAPT_ID", "a<id> = a"),
    ("ADAPT_COMP", "a<g . f> = a<f><g>"),
    ("ID_LEFT", "id . f = f"),
    ("ID_RIGHT", "f . id = f"),
    ("ASSOC", "h . (g . f) = (h . g) . f"),
    ("AD_FUN_EQ", "(f<Pi[a > b]>) u = (f u<a>)<b[id > u]>"),
    ("AD_PAIR_EQ1", "fst (p<Sigma[a > b]>) = (fst p)<a>"),
    ("AD_PAIR_EQ2", "snd (p<Sigma[a > b]>) = (snd p)<b[id > fst p]>"),
    ("AD_FUN_CAST", "(\\b)<Pi[a > c]> = \\(b[wk > 0<a>])<c>"),
    ("AD_PAIR_CAST", "(a, b)<Sigma[f > g]> = (a<f>, b<g[id > a]>)"),
    ("IND_AD_EQ", "c[p > args]<I[mu]> = c[p' > args<conData[mu]>]"),
    ("TY_TRANS_ID", "A[[id]] = id"),
    ("TY_TRANS_COMP", "A[[nu . mu]] = A[[nu]] . A[[mu]]"),
    ("TRANS_HD_AD", "X(i)[[mu]] = mu_X[id > i]"),
    ("AD_FUN", "(Pi A. B)[[mu]] = Pi[A[[mu-]] > B[[mu > x]]]"),
    ("AD_PAIR", "(Sigma A. B)[[mu]] = Sigma[A[[mu]] > B[[mu > x]]]"),
    ("IND_TY_TRANS", "I[p > i][[mu]] = I[[(p > i) . mu]]"),
    ("BASE_TRANS", "K[[mu]] = id for a closed base type"),
    ("TRANS_TM_POS", "forced target of a covariant term component: t<A[[mu]]>"),
    ("TRANS_TM_NEG", "forced source of a contravariant term component: t<A[[mu-]]>"),
    ("SUB_HD_TY", "X(i)[s > A] = A[id > i]"),
    ("SUB_VAR_TM", "0[s > t] = t"),
    ("PI_TEL_EMPTY", "Pi(). A = A"),
    ("PI_TEL_EXT", "Pi(T > A). B = Pi T. Pi A. B"),
];

pub fn is_registered(name: &str) -> bool {
    RULES.iter().any(|(n, _)| *n == name)
}

thread_local! {
    static ENABLED: Cell<bool> = const { Cell::new(false) };
    static PATH: RefCell<Vec<&'static str>> = const { RefCell::new(Vec::new()) };
    static SINK: RefCell<Vec<String>> = const { RefCell::new(Vec::new()) };
}

pub fn enable(on: bool) {
    ENABLED.with(|e| e.set(on));
}

pub fn enabled() -> bool {
    ENABLED.with(|e| e.get())
}

pub fn take() -> Vec<String> {
    SINK.with(|s| std::mem::take(&mut *s.borrow_mut()))
}

pub fn rule(name: &'static str) {
    if !enabled() {
        return;
    }
    debug_assert!(is_registered(name), "unregistered rule {name}");
    let path = PATH.with(|p| {
        let p = p.borrow();
        if p.is_empty() {
            ".".to_string()
        } else {
            p.join("/")
        }
    });
    SINK.with(|s| s.borrow_mut().push(format!("RULE {name} AT {path}")));
}

pub struct Scope(bool);

impl Drop for Scope {
    fn drop(&mut self) {
        if self.0 {
            PATH.with(|p| {
                p.borrow_mut().pop();
            });
        }
    }
}

/// Push a path segment for the lifetime of the returned guard.
pub fn at(seg: &'static str) -> Scope {
    if !enabled() {
        return Scope(false);
    }
    PATH.with(|p| p.borrow_mut().push(seg));
    Scope(true)
}

/// Run `f` with tracing on and return its result with the collected lines.
pub fn collect<T>(f: impl FnOnce() -> T) -> (T, Vec<String>) {
    let was = enabled();
    enable(true);
    let _ = take();
    let r = f();
    let lines = take();
    enable(was);
    (r, lines)
}

/// Rule name of a trace line, if it is well formed.
pub fn parse_line(line: &str) -> Option<&str> {
    let rest = line.strip_prefix("RULE ")?;
    let (name, path) = rest.split_once(" AT ")?;
    if path.is_empty() {
        return None;
    }
    Some(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_are_well_formed() {
        let ((), lines) = collect(|| {
            let _g = at("app");
            rule("BETA");
        });
        assert_eq!(lines, vec!["RULE BETA AT app".to_string()]);
        assert_eq!(parse_line(&lines[0]), Some("BETA"));
    }

    #[test]
    fn disabled_tracing_is_silent() {
        enable(false);
        rule("BETA");
        assert!(take().is_empty());
    }
}
