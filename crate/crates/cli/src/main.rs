use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use liftcount::query::{run_document, run_query, RunOptions};
use liftcount::report::{render_human, Outcome, QueryRecord, Report};
use liftcount::spec::{parse_spec, GroupExpr, Query, SpecDocument, Workspace};
use liftcount::{builtin_spec, engine_config};
use liftcount_core::group::CATALOG_NAMES;

#[derive(Parser)]
#[command(
    name = "liftcount",
    version,
    about = "Count commuting lifts and surface-group homomorphisms in finite group extensions"
)]
struct Cli {
    /// Spec file defining groups, sequences and queries (default: built-in fixtures)
    #[arg(long, global = true, value_name = "FILE")]
    spec: Option<PathBuf>,
    /// Engine seed (default: $LIFTCOUNT_SEED, then a fixed constant)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Snapping tolerance for roots of unity and integers
    #[arg(long, global = true, value_name = "X")]
    tol: Option<f64>,
    /// Also write the report as JSON
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Keep commuting lift pairs in lift counts
    #[arg(long, global = true)]
    witnesses: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes of a named group (spec or catalog name)
    Classes { group: String },
    /// Irreducible representations of a named group
    Irreps { group: String },
    /// Commuting lifts of a commuting pair of quotient elements
    CountLifts { sequence: String, alpha: String, beta: String },
    /// Lifts of a surface datum: pairs a1 b1 a2 b2 ...
    CountHoms {
        sequence: String,
        #[arg(required = true, num_args = 2..)]
        elements: Vec<String>,
    },
    /// Five-term obstruction report, optionally with a lift count
    Obstruction { sequence: String, alpha: Option<String>, beta: Option<String> },
    /// Built-in verification suite
    VerifyPaper,
    /// Higher-genus counts over the built-in Q8 extensions
    ExploreGenus {
        #[arg(long, default_value_t = 4)]
        max_genus: usize,
    },
    /// Every query in the spec file
    Run,
}

fn load(spec: &Option<PathBuf>) -> Result<SpecDocument, String> {
    match spec {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_spec(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => builtin_spec().map_err(|e| format!("built-in spec: {e}")),
    }
}

/// Lets `classes Q8` work without a spec entry for Q8.
fn with_catalog_group(mut doc: SpecDocument, name: &str) -> SpecDocument {
    if !doc.groups.iter().any(|(n, _)| n == name) && CATALOG_NAMES.contains(&name) {
        doc.groups.push((name.to_string(), GroupExpr::Catalog(name.to_string())));
    }
    doc
}

fn run(cli: &Cli) -> Result<Report, String> {
    let cfg = engine_config(cli.seed, cli.tol)?;
    let opts = RunOptions { witnesses: cli.witnesses };
    let single = |doc: SpecDocument, q: Query| -> Result<Report, String> {
        let ws = Workspace::build(&doc).map_err(|e| e.to_string())?;
        Ok(Report::new(&cfg, vec![run_query(&ws, &q, 0, &cfg, opts)]))
    };
    match &cli.command {
        Command::Classes { group } => {
            single(with_catalog_group(load(&cli.spec)?, group), Query::Classes { group: group.clone() })
        }
        Command::Irreps { group } => single(with_catalog_group(load(&cli.spec)?, group), Query::Irreps { group: group.clone() }),
        Command::CountLifts { sequence, alpha, beta } => single(
            load(&cli.spec)?,
            Query::Lifts { sequence: sequence.clone(), alpha: alpha.clone(), beta: beta.clone(), witnesses: cli.witnesses },
        ),
        Command::CountHoms { sequence, elements } => {
            if elements.len() % 2 != 0 {
                return Err("count-homs needs an even number of elements".to_string());
            }
            let pairs = elements.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect();
            single(load(&cli.spec)?, Query::Homs { sequence: sequence.clone(), pairs })
        }
        Command::Obstruction { sequence, alpha, beta } => {
            let pair = match (alpha, beta) {
                (Some(a), Some(b)) => Some((a.clone(), b.clone())),
                (None, None) => None,
                _ => return Err("obstruction takes either no pair or both elements".to_string()),
            };
            single(load(&cli.spec)?, Query::Obstruction { sequence: sequence.clone(), pair })
        }
        Command::VerifyPaper => single(SpecDocument::default(), Query::VerifyPaper),
        Command::ExploreGenus { max_genus } => {
            if *max_genus < 2 {
                return Err("--max-genus must be at least 2".to_string());
            }
            let start = Instant::now();
            let result = liftcount::explore::explore_genus(&cfg, 2..=*max_genus);
            let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let record = match result {
                Ok(e) => QueryRecord {
                    query: format!("explore-genus 2..{max_genus}"),
                    line: 0,
                    elapsed_ms,
                    ok: true,
                    error: None,
                    outcome: Some(Outcome::Explore(e)),
                },
                Err(e) => QueryRecord {
                    query: format!("explore-genus 2..{max_genus}"),
                    line: 0,
                    elapsed_ms,
                    ok: false,
                    error: Some(e.to_string()),
                    outcome: None,
                },
            };
            Ok(Report::new(&cfg, vec![record]))
        }
        Command::Run => {
            let doc = load(&cli.spec)?;
            run_document(&doc, &cfg, opts).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", render_human(&report));
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
