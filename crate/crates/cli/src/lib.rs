//! The `adaptt` command line: check, normalize, derive adapter rules, run
//! the set model over a file's assertions, and the constructor self test.

use adaptt_core::golden;
use adaptt_core::print::Printer;
use adaptt_core::trace;
use adaptt_model::{Binding, Env, Model};
use adaptt_surface::{parse, parse_expr, Diagnostic, Elab, Program, Scope};
use clap::{Parser, Subcommand};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const OK: i32 = 0;
pub const TYPE_ERROR: i32 = 1;
pub const PARSE_ERROR: i32 = 2;
pub const ORACLE_FAILURE: i32 = 3;
pub const USAGE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "adaptt", version, about = "A checker for a type theory with adapters")]
struct Cli {
    /// Print every rewrite step to stderr (also ADAPTT_TRACE=1).
    #[arg(long, global = true)]
    trace: bool,
    /// Declarations loaded before each FILE; may be repeated.
    #[arg(long, global = true, value_name = "FILE")]
    prelude: Vec<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse, elaborate and check files, reporting diagnostics.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print normal forms: of EXPR in FILE's scope, or of FILE's normalize declarations.
    Norm {
        file: PathBuf,
        #[arg(short = 'e', long = "expr")]
        expr: Option<String>,
    },
    /// Print the adapter rule derived for a datatype.
    Derive {
        file: PathBuf,
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate FILE's assertions in the finite set model.
    Model {
        file: PathBuf,
        #[arg(long, value_name = "B.json")]
        bindings: PathBuf,
    },
    /// Check the constructor computation table.
    Selftest,
}

/// Status from diagnostics: parse errors win over type errors.
pub fn status(diags: &[Diagnostic]) -> i32 {
    if diags.iter().any(Diagnostic::is_parse) {
        PARSE_ERROR
    } else if diags.is_empty() {
        OK
    } else {
        TYPE_ERROR
    }
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let text = e.render().to_string();
            if code == OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let tracing = cli.trace || std::env::var("ADAPTT_TRACE").map(|v| v == "1").unwrap_or(false);
    trace::enable(tracing);
    let _ = trace::take();
    let code = match dispatch(&cli, out, err) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "{msg}");
            USAGE
        }
    };
    if tracing {
        for line in trace::take() {
            let _ = writeln!(err, "{line}");
        }
        trace::enable(false);
    }
    code
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match &cli.cmd {
        Cmd::Check { files } => {
            let mut worst = OK;
            for f in files {
                let code = check(&cli.prelude, f, out, err)?;
                worst = worst.max(code);
            }
            Ok(worst)
        }
        Cmd::Norm { file, expr } => norm(&cli.prelude, file, expr.as_deref(), out, err),
        Cmd::Derive { file, name, json } => derive(&cli.prelude, file, name, *json, out, err),
        Cmd::Model { file, bindings } => model(&cli.prelude, file, bindings, out, err),
        Cmd::Selftest => Ok(selftest(out)),
    }
}

/// A program elaborated from the preludes and one file. `first_assert`
/// and `first_normal` index the file's own declarations.
struct Loaded {
    prog: Program,
    first_assert: usize,
    first_normal: usize,
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

fn read(p: &Path) -> Result<String, String> {
    std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
}

/// Elaborate the preludes then `file`, printing diagnostics. Returns the
/// program and the status so far.
fn load(preludes: &[PathBuf], file: &Path, err: &mut dyn Write) -> Result<(Loaded, i32), String> {
    let mut el = Elab::new(Default::default());
    let mut worst = OK;
    let mut first = (0, 0);
    for (i, path) in preludes.iter().map(PathBuf::as_path).chain([file]).enumerate() {
        if i == preludes.len() {
            first = (el.prog.asserts.len(), el.prog.normals.len());
        }
        let src = read(path)?;
        let decls = match parse(&src) {
            Ok(d) => d,
            Err(d) => {
                let _ = writeln!(err, "{}", d.render(&display(path)));
                worst = worst.max(PARSE_ERROR);
                continue;
            }
        };
        let mut diags = Vec::new();
        for d in &decls {
            if let Err(e) = el.decl(d) {
                diags.push(e);
            }
        }
        for d in &diags {
            let _ = writeln!(err, "{}", d.render(&display(path)));
        }
        worst = worst.max(status(&diags));
    }
    Ok((Loaded { prog: el.prog, first_assert: first.0, first_normal: first.1 }, worst))
}

fn check(preludes: &[PathBuf], file: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let (l, mut code) = load(preludes, file, err)?;
    let sig = &l.prog.sig;
    for a in &l.prog.asserts[l.first_assert..] {
        if !a.holds {
            let mut p = Printer::new(sig);
            let (want, got) = (p.tm(&sig.nf_tm(&a.rhs)), p.tm(&sig.nf_tm(&a.lhs)));
            let _ = writeln!(err, "ERROR NotConvertible {}:{}:{} expected {want} got {got}", display(file), a.span.line, a.span.col);
            code = code.max(TYPE_ERROR);
        }
    }
    if code == OK {
        let p = &l.prog;
        let _ = writeln!(
            out,
            "OK {} ({} definitions, {} checks, {} assertions)",
            display(file),
            p.defs.len(),
            p.checks.len(),
            p.asserts.len() - l.first_assert
        );
    }
    Ok(code)
}

fn norm(preludes: &[PathBuf], file: &Path, expr: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let (l, code) = load(preludes, file, err)?;
    if code != OK {
        return Ok(code);
    }
    let el = Elab { prog: l.prog };
    let sig = &el.prog.sig;
    match expr {
        Some(src) => {
            let e = match parse_expr(src) {
                Ok(e) => e,
                Err(d) => {
                    let _ = writeln!(err, "{}", d.render("<expr>"));
                    return Ok(PARSE_ERROR);
                }
            };
            match el.infer(&Scope::default(), &e) {
                Ok((t, a)) => {
                    let mut p = Printer::new(sig);
                    let _ = writeln!(out, "{} : {}", p.tm(&sig.nf_tm(&t)), p.ty(&sig.nf_ty(&a)));
                    Ok(OK)
                }
                Err(d) => {
                    let _ = writeln!(err, "{}", d.render("<expr>"));
                    Ok(TYPE_ERROR)
                }
            }
        }
        None => {
            for (t, a, _) in &el.prog.normals[l.first_normal..] {
                let mut p = Printer::new(sig);
                let _ = writeln!(out, "{} : {}", p.tm(&sig.nf_tm(t)), p.ty(&sig.nf_ty(a)));
            }
            Ok(OK)
        }
    }
}

fn derive(preludes: &[PathBuf], file: &Path, name: &str, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let (l, code) = load(preludes, file, err)?;
    if code != OK {
        return Ok(code);
    }
    let sig = &l.prog.sig;
    let doc = match sig.derive_adapter_rule(name) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "ERROR {e}");
            return Ok(TYPE_ERROR);
        }
    };
    if json {
        let _ = writeln!(out, "{}", doc.to_json());
    } else {
        let decl = Printer::new(sig).desc(sig.desc(name).map_err(|e| e.to_string())?);
        let _ = write!(out, "{}", doc.to_text(&decl));
    }
    Ok(OK)
}

fn model(preludes: &[PathBuf], file: &Path, bindings: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let binding = Binding::from_json(&read(bindings)?).map_err(|e| format!("{}: {e}", bindings.display()))?;
    let (l, mut code) = load(preludes, file, err)?;
    if code != OK {
        return Ok(code);
    }
    let sig = &l.prog.sig;
    let m = Model::new(sig, &binding).map_err(|e| format!("{}: {e}", bindings.display()))?;
    let env = Env::default();
    let (mut agree, mut skip) = (0, 0);
    for a in &l.prog.asserts[l.first_assert..] {
        let at = format!("{}:{}:{}", display(file), a.span.line, a.span.col);
        let evaluated = (|| {
            let ty = m.ty(&env, &a.ty)?;
            let (x, y) = (m.tm(&env, &a.lhs)?, m.tm(&env, &a.rhs)?);
            let same = m.eq(&x, &y, &ty)?;
            Ok::<_, adaptt_model::ModelError>((m.render(&x, &ty), m.render(&y, &ty), same))
        })();
        match evaluated {
            Err(e) => {
                skip += 1;
                let _ = writeln!(out, "SKIP {at} {e}");
            }
            Ok((x, _, true)) if a.holds => {
                agree += 1;
                let _ = writeln!(out, "AGREE {at} {x}");
            }
            Ok((x, y, false)) if a.holds => {
                let _ = writeln!(out, "DISAGREE {at} {x} against {y}");
                code = code.max(ORACLE_FAILURE);
            }
            Ok((x, y, same)) => {
                let how = if same { "equal in the model" } else { "distinct in the model" };
                let _ = writeln!(err, "ERROR NotConvertible {at} expected {y} got {x} ({how})");
                code = code.max(TYPE_ERROR);
            }
        }
    }
    let _ = writeln!(out, "{agree} agreed, {skip} skipped");
    Ok(code)
}

fn selftest(out: &mut dyn Write) -> i32 {
    let mut code = OK;
    for o in golden::run_all() {
        if o.ok {
            let _ = writeln!(out, "OK {}", o.name);
        } else {
            let _ = writeln!(out, "FAIL {} {}", o.name, o.detail);
            code = TYPE_ERROR;
        }
    }
    code
}
