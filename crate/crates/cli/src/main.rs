use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use nilmetric::catalog::{verify_entry, Catalog, CatalogEntry};
use nilmetric::constructions::{cotangent, family_in};
use nilmetric::derivations::nikolayevsky;
use nilmetric::free::build;
use nilmetric::io::script::{parse_script, run_script, Outcome};
use nilmetric::io::text::{emit_algebra, AlgebraDocument};
use nilmetric::nice::series_line;
use nilmetric::report::acceptance_report;
use nilmetric::Error;

/// Exit codes: 0 success, 1 a check failed, 2 bad usage, 3 unknown name,
/// 4 malformed input, 5 a proof step failed, 6 proof inconclusive,
/// 7 any other error.
mod code {
    pub const FAILED: u8 = 1;
    pub const UNKNOWN: u8 = 3;
    pub const MALFORMED: u8 = 4;
    pub const STEP: u8 = 5;
    pub const INCONCLUSIVE: u8 = 6;
    pub const OTHER: u8 = 7;
}

#[derive(Parser)]
#[command(name = "nilmetric", version, about = "Exact computations on nilpotent metric Lie algebras")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Accept algebra files that fail the Jacobi identity.
    #[arg(long, global = true)]
    no_jacobi: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the recorded invariants of an entry, a file, or `all`.
    Verify { name: String },
    /// Nikolayevsky derivation spectrum.
    Nik { name: String },
    /// Dimensions of the lower and upper central series.
    Series { name: String },
    /// The free nilpotent Lie algebra on `m` generators of step `s`.
    Free { m: usize, s: usize },
    /// Cotangent with its pairing metric. Accepts `free:M:S`.
    Cotangent { name: String },
    /// The family member of dimension `k` with its quotient certificate.
    Family { k: usize },
    /// Replay a proof script.
    Replay { script: String },
    /// Every acceptance criterion with PASS/FAIL.
    Report,
}

struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let c = match &e {
            Error::Catalog(m) if m.starts_with("unknown entry") => code::UNKNOWN,
            Error::Parse { .. } | Error::Jacobi { .. } | Error::IndexOutOfRange { .. } => code::MALFORMED,
            Error::Script { .. } => code::STEP,
            _ => code::OTHER,
        };
        Failure(c, e.to_string())
    }
}

type Run = Result<u8, Failure>;

fn resolve(cat: &Catalog, name: &str, check_jacobi: bool) -> Result<CatalogEntry, Failure> {
    if let Ok(e) = cat.load(name) {
        return Ok(e.clone());
    }
    if Path::new(name).is_file() {
        let text = std::fs::read_to_string(name).map_err(Error::from)?;
        return Ok(CatalogEntry::from_text(&text, check_jacobi)?);
    }
    Err(Failure(code::UNKNOWN, format!("unknown entry or file `{name}`")))
}

fn verify(cli: &Cli, cat: &Catalog, name: &str) -> Run {
    let entries: Vec<CatalogEntry> = if name == "all" {
        cat.entries().cloned().collect()
    } else {
        vec![resolve(cat, name, !cli.no_jacobi)?]
    };
    let reports: Vec<_> = entries.iter().map(verify_entry).collect();
    let ok = reports.iter().all(|r| r.pass());
    if cli.json {
        println!("{}", json!({ "pass": ok, "entries": reports }));
    } else {
        for r in &reports {
            println!("{} {}", if r.pass() { "PASS" } else { "FAIL" }, r.name);
            for c in &r.checks {
                let mark = if c.pass { "ok" } else { "FAIL" };
                if c.pass || c.detail.is_empty() {
                    println!("  {mark} {}", c.what);
                } else {
                    println!("  {mark} {}: {}", c.what, c.detail);
                }
            }
        }
    }
    Ok(if ok { 0 } else { code::FAILED })
}

fn emit(cli: &Cli, doc: &AlgebraDocument, extra: serde_json::Value) {
    let text = emit_algebra(doc);
    if cli.json {
        let mut v = json!({ "name": doc.name, "dim": doc.dim, "document": text });
        if let (Some(o), serde_json::Value::Object(x)) = (v.as_object_mut(), extra) {
            o.extend(x);
        }
        println!("{v}");
    } else {
        print!("{text}");
    }
}

fn cotangent_of(cli: &Cli, cat: &Catalog, name: &str) -> Run {
    let (label, g) = match name.strip_prefix("free:") {
        Some(ms) => {
            let parts: Vec<&str> = ms.split(':').collect();
            let parse = |s: &str| s.parse::<usize>().map_err(|_| Failure(code::MALFORMED, format!("bad `{name}`")));
            if parts.len() != 2 {
                return Err(Failure(code::MALFORMED, format!("expected free:M:S, got `{name}`")));
            }
            let (m, s) = (parse(parts[0])?, parse(parts[1])?);
            (format!("T*n_{m}_{s}"), build(m, s)?.lie().clone())
        }
        None => {
            let e = resolve(cat, name, !cli.no_jacobi)?;
            (format!("T*{}", e.name), e.algebra)
        }
    };
    let t = cotangent(&g);
    emit(cli, &AlgebraDocument::from_algebra(&label, &t.algebra, Some(&t.metric)), json!({}));
    Ok(0)
}

fn family(cli: &Cli, cat: &Catalog, k: usize) -> Run {
    let f = family_in(cat, k)?;
    let c = &f.certificate;
    let doc = AlgebraDocument::from_algebra(&format!("g{k}"), &f.algebra.algebra, Some(&f.algebra.metric))
        .with_source(&f.recipe);
    let basis: Vec<String> = c.basis.row_vecs().iter().map(|r| nilmetric::io::text::format_vector(r)).collect();
    let quotient = emit_algebra(&AlgebraDocument::from_algebra(&format!("g{k}/z"), &c.quotient, None));
    if cli.json {
        emit(
            cli,
            &doc,
            json!({ "certificate": { "core": c.core, "abelian_dim": c.abelian_dim, "basis": basis, "quotient": quotient, "matches": c.matches } }),
        );
    } else {
        emit(cli, &doc, json!({}));
        println!();
        println!("# g{k}/z(g{k}) = {} + R^{}: {}", c.core, c.abelian_dim, if c.matches { "verified" } else { "MISMATCH" });
        for (i, b) in basis.iter().enumerate() {
            println!("# f{} = {b}", i + 1);
        }
        print!("{quotient}");
    }
    Ok(if c.matches { 0 } else { code::FAILED })
}

fn replay(cli: &Cli, cat: &Catalog, path: &str) -> Run {
    let text = std::fs::read_to_string(path).map_err(Error::from)?;
    let script = parse_script(&text)?;
    let t = run_script(&script, cat)?;
    let code = match &t.outcome {
        Outcome::Contradiction { .. } | Outcome::Qed => 0,
        Outcome::Inconclusive => code::INCONCLUSIVE,
        Outcome::Failed { .. } => code::STEP,
    };
    if cli.json {
        let outcome = match &t.outcome {
            Outcome::Contradiction { step } => json!({ "result": "contradiction", "step": step }),
            Outcome::Qed => json!({ "result": "qed" }),
            Outcome::Inconclusive => json!({ "result": "inconclusive" }),
            Outcome::Failed { step, reason } => json!({ "result": "failed", "step": step, "reason": reason }),
        };
        println!("{}", json!({ "target": t.target, "transcript": t.lines, "outcome": outcome }));
    } else {
        print!("{t}");
    }
    Ok(code)
}

fn run(cli: &Cli) -> Run {
    let cat = Catalog::load_default()?;
    match &cli.command {
        Command::Verify { name } => verify(cli, &cat, name),
        Command::Nik { name } => {
            let e = resolve(&cat, name, !cli.no_jacobi)?;
            let s = nikolayevsky(&e.algebra)?.spectrum();
            if cli.json {
                println!("{}", json!({ "name": e.name, "spectrum": s.to_string() }));
            } else {
                println!("{s}");
            }
            Ok(0)
        }
        Command::Series { name } => {
            let e = resolve(&cat, name, !cli.no_jacobi)?;
            if cli.json {
                let (l, u) = nilmetric::nice::fingerprint::series_dims(&e.algebra);
                println!("{}", json!({ "name": e.name, "lcs": l, "ucs": u }));
            } else {
                println!("{}", series_line(&e.algebra));
            }
            Ok(0)
        }
        Command::Free { m, s } => {
            let f = build(*m, *s)?;
            let doc = AlgebraDocument::from_algebra(&format!("n_{m}_{s}"), f.lie(), None)
                .with_source("Hall basis");
            emit(cli, &doc, json!({ "layers": f.layer_dims }));
            Ok(0)
        }
        Command::Cotangent { name } => cotangent_of(cli, &cat, name),
        Command::Family { k } => family(cli, &cat, *k),
        Command::Replay { script } => replay(cli, &cat, script),
        Command::Report => {
            let r = acceptance_report(&cat);
            if cli.json {
                println!("{}", json!({ "pass": r.pass(), "criteria": r.criteria }));
            } else {
                print!("{r}");
            }
            Ok(if r.pass() { 0 } else { code::FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(c) => ExitCode::from(c),
        Err(Failure(c, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(c)
        }
    }
}
