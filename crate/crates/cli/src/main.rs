use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use g2forms::catalog::{self, Family};
use g2forms::constructor::{self, construct_for};
use g2forms::g2::{verify_certificate, Certificate, Evidence};
use g2forms::{decide, explain};

#[derive(Parser)]
#[command(name = "g2forms", version, about = "Closed G2 four-forms on sums of 4d and 3d Lie algebras")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide existence for `<g4>+<g3>`.
    Classify {
        pair: String,
        /// Print the decision trace.
        #[arg(long)]
        explain: bool,
        /// Also build a certificate and write it here.
        #[arg(long, value_name = "FILE")]
        certificate: Option<PathBuf>,
    },
    /// Build a certificate for `<g4>+<g3>`.
    Construct {
        pair: String,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Print the construction route.
        #[arg(long)]
        route: bool,
    },
    /// Check a certificate file.
    Verify { file: PathBuf },
    /// Betti numbers of a catalog algebra or a sum of them.
    Cohomology { name: String },
    /// Inspect the catalog.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Decide and construct over the catalog pair grid.
    Sweep {
        /// File with one `<g4>+<g3>` pair per line, replacing the default grid.
        #[arg(long, value_name = "FILE")]
        params: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
}

fn write_cert(path: &PathBuf, cert: &Certificate) -> Result<()> {
    fs::write(path, cert.to_json()).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    let as_json = cli.json;
    match cli.cmd {
        Cmd::Classify { pair, explain: want_trace, certificate } => {
            let (g4, g3) = catalog::parse_pair(&pair)?;
            let v = decide(&g4, &g3)?;
            if as_json {
                println!("{}", v.to_json());
            } else if want_trace {
                println!("{}", explain(&v));
            } else if v.exists {
                println!("Exists (branch {}, route {})", v.branch, v.route.map(|r| r.tag()).unwrap_or("?"));
            } else {
                println!("NotExists (branch {}, {})", v.branch, v.obstruction.map(|o| o.tag()).unwrap_or("?"));
            }
            if let (Some(path), true) = (&certificate, v.exists) {
                write_cert(path, &construct_for(&v, &g4, &g3)?.certificate)?;
            }
            Ok(if v.exists { 0 } else { 1 })
        }
        Cmd::Construct { pair, output, route } => {
            let (g4, g3) = catalog::parse_pair(&pair)?;
            let v = decide(&g4, &g3)?;
            if !v.exists {
                eprintln!("{}: no structure ({})", v.algebra, v.obstruction.map(|o| o.tag()).unwrap_or("?"));
                return Ok(1);
            }
            let c = construct_for(&v, &g4, &g3)?;
            if route {
                if as_json {
                    println!("{}", json!({ "route": c.route, "lambda": c.lambda.to_string(), "doublings": c.doublings }));
                } else {
                    println!("{}", c.route.tag());
                }
            }
            match &output {
                Some(path) => write_cert(path, &c.certificate)?,
                None if !route => println!("{}", c.certificate.to_json()),
                None => {}
            }
            Ok(0)
        }
        Cmd::Verify { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let cert = Certificate::from_json(&text)?;
            let ok = verify_certificate(&cert.algebra, &cert)?;
            let kind = match cert.evidence {
                Evidence::Coframe { .. } => "coframe",
                Evidence::Numeric { .. } => "numeric",
            };
            if as_json {
                println!("{}", json!({ "valid": ok, "evidence": kind, "algebra": cert.algebra.name }));
            } else {
                println!("{} ({kind} evidence)", if ok { "valid" } else { "INVALID" });
            }
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Cohomology { name } => {
            let ids = catalog::parse_sum(&name)?;
            let h = catalog::instantiate_sum(&ids)?.cohomology();
            if as_json {
                println!("{}", serde_json::to_string(&h)?);
            } else {
                let parts: Vec<String> = h.iter().map(|b| b.to_string()).collect();
                println!("({})", parts.join(","));
            }
            Ok(0)
        }
        Cmd::Catalog { cmd: CatalogCmd::List } => {
            let fixtures: Vec<_> = catalog::fixtures_3d().into_iter().chain(catalog::fixtures_4d()).collect();
            if as_json {
                let fams: Vec<_> = Family::all()
                    .map(|f| json!({ "name": f.name(), "dim": f.dim(), "params": f.param_count(), "range": f.param_range() }))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&json!({ "families": fams, "fixtures": fixtures }))?);
                return Ok(0);
            }
            println!("families:");
            for f in Family::all() {
                let range = if f.param_count() == 0 { String::new() } else { format!("  [{}]", f.param_range()) };
                println!("  {:<12} dim {}{range}", f.name(), f.dim());
            }
            println!("fixtures:");
            println!("  {:<26} {:<10} {:<5} {:<18} {:<10} last", "algebra", "h*", "unim", "u", "[g,g]");
            for fx in &fixtures {
                let h: Vec<String> = fx.cohomology.iter().map(|b| b.to_string()).collect();
                let last: Vec<String> = fx.kernel_quantity.iter().map(|b| b.to_string()).collect();
                println!(
                    "  {:<26} {:<10} {:<5} {:<18} {:<10} {}",
                    fx.id,
                    format!("({})", h.join(",")),
                    if fx.unimodular { "yes" } else { "no" },
                    fx.kernel.join(","),
                    fx.commutator,
                    last.join(",")
                );
            }
            Ok(0)
        }
        Cmd::Sweep { params } => {
            let pairs = match &params {
                Some(path) => fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(catalog::parse_pair)
                    .collect::<g2forms::Result<Vec<_>>>()?,
                None => catalog::sweep_pairs(),
            };
            let rows = constructor::sweep(&pairs)?;
            let exists = rows.iter().filter(|r| r.verdict.exists).count();
            let passed = rows.iter().filter(|r| matches!(r.built, Some(Ok(_)))).count();
            let failed = rows.iter().filter(|r| matches!(r.built, Some(Err(_)))).count();
            if as_json {
                let table: Vec<_> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "g4": r.g4.to_string(), "g3": r.g3.to_string(), "verdict": r.verdict,
                            "certificate": match &r.built { None => json!(null), Some(Ok(_)) => json!("pass"), Some(Err(e)) => json!({ "fail": e }) },
                        })
                    })
                    .collect();
                let summary = json!({ "pairs": rows.len(), "exists": exists, "passed": passed, "failed": failed });
                println!("{}", serde_json::to_string_pretty(&json!({ "summary": summary, "rows": table }))?);
            } else {
                for r in &rows {
                    let what = match (&r.verdict.route, &r.verdict.obstruction) {
                        (Some(route), _) => route.tag(),
                        (None, Some(o)) => o.tag(),
                        _ => "?",
                    };
                    let cert = match &r.built {
                        None => "-".to_string(),
                        Some(Ok(_)) => "pass".to_string(),
                        Some(Err(e)) => format!("FAIL {e}"),
                    };
                    println!("{:<30} {:<9} {:<30} {}", format!("{}+{}", r.g4, r.g3), if r.verdict.exists { "Exists" } else { "NotExists" }, what, cert);
                }
                println!("{} pairs, {exists} exist, {passed} certificates verified, {failed} failed", rows.len());
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
