//! Command-line surface for the Biggs tree group toolkit. Every subcommand
//! emits a machine-readable document (JSON or CSV) on stdout or to `--out`.
//!
//! Exit codes: 0 success; 1 parameter or usage error; 2 capacity or budget
//! exhaustion where exactness was demanded; 3 internal contradiction (a
//! certified invariant failed, which means a bug, or a failed `check` run).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use biggs_core::arith::{landau, projective_matches};
use biggs_core::cayley::{diameter, girth, OutcomeKind, SearchBudget, SearchOutcome};
use biggs_core::checks::{run_checks, CheckScope};
use biggs_core::classify::{self, FigureId, TableColor};
use biggs_core::group::{classify_alt_sym, schreier_sims};
use biggs_core::perm::generators;
use biggs_core::tree::ColoredTree;
use biggs_core::word::{track, Word};
use biggs_core::Error;

#[derive(Parser)]
#[command(name = "biggs", version, about = "Biggs tree groups: build, search, classify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the emitted document to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GensFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build the mirrored colored ball and emit it as JSON.
    Tree {
        #[arg(short = 'C', long)]
        colors: u32,
        #[arg(short = 'R', long)]
        radius: u32,
    },
    /// Emit the color involutions, in image-array and disjoint-cycle form.
    Gens {
        #[arg(short = 'C', long)]
        colors: u32,
        #[arg(short = 'R', long)]
        radius: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: GensFormat,
    },
    /// Evaluate a color word (e.g. `0.1.2`) to a permutation.
    Word {
        #[arg(short = 'C', long)]
        colors: u32,
        #[arg(short = 'R', long)]
        radius: u32,
        /// Dot-separated color indices; the empty string is the identity.
        #[arg(long, default_value = "")]
        word: String,
        /// Also emit the track of the raw word from this vertex.
        #[arg(long)]
        track_from: Option<u32>,
    },
    /// Girth of the Cayley graph by breadth-first search.
    Girth {
        #[arg(short = 'C', long)]
        colors: u32,
        #[arg(short = 'R', long)]
        radius: u32,
        #[arg(long, default_value_t = 20_000_000)]
        max_states: usize,
        #[arg(long, default_value_t = 64)]
        max_depth: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Fail (exit 2) unless the outcome is exact.
        #[arg(long)]
        exact: bool,
    },
    /// Diameter of the Cayley graph by full breadth-first search.
    Diameter {
        #[arg(short = 'C', long)]
        colors: u32,
        #[arg(short = 'R', long)]
        radius: u32,
        #[arg(long, default_value_t = 20_000_000)]
        max_states: usize,
        #[arg(long, default_value_t = 256)]
        max_depth: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        exact: bool,
    },
    /// Exact group order from the stabilizer chain.
    Order {
        #[arg(short = 'C', long)]
        colors: u32,
        #[arg(short = 'R', long)]
        radius: u32,
    },
    /// Predict the isomorphism type, with conditions and witnesses.
    Classify {
        #[arg(short = 'C', long)]
        colors: u64,
        #[arg(short = 'R', long)]
        radius: u64,
        /// Certify the prediction with a stabilizer chain when feasible.
        #[arg(long)]
        verify: bool,
        /// Largest degree the verification is willing to handle.
        #[arg(long, default_value_t = 1000)]
        verify_max_degree: usize,
    },
    /// The factorization/coloring table as CSV.
    Table1 {
        #[arg(long, default_value_t = 7)]
        c_max: u64,
        #[arg(long, default_value_t = 12)]
        r_max: u64,
    },
    /// Bound-comparison figure data as CSV (`x,series,value`).
    Figure {
        /// One of fig3, fig4, fig5, fig6.
        id: String,
    },
    /// Scan for projective degrees (q^d-1)/(q-1) equal to N.
    Projective {
        /// The degree, as a decimal integer.
        n: String,
    },
    /// The Landau function: maximal permutation order on n points.
    Landau { n: u64 },
    /// Run the invariant suites.
    Check {
        /// `fast` runs in seconds; `full` adds search, table, and figures.
        scope: String,
        /// Corrupt a generator first, as a negative control.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command, &cli.out) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Capacity(_) => 2,
        Error::Contradiction(_) => 3,
        _ => 1,
    }
}

fn emit(out: &Option<PathBuf>, doc: &str) -> Result<(), Error> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(doc.as_bytes())
                .and_then(|_| stdout.write_all(b"\n"))
                .map_err(|e| Error::Parameter(format!("cannot write output: {e}")))
        }
        Some(path) => std::fs::write(path, format!("{doc}\n"))
            .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display()))),
    }
}

fn search_json(c: u32, r: u32, out: &SearchOutcome, wall: f64) -> serde_json::Value {
    json!({
        "C": c,
        "R": r,
        "kind": match out.kind { OutcomeKind::Exact => "exact", OutcomeKind::LowerBoundOnly => "lower_bound_only" },
        "value": out.value,
        "states_explored": out.states_explored,
        "depth_reached": out.depth_reached,
        "wall_seconds": wall,
    })
}

fn color_name(color: TableColor) -> &'static str {
    match color {
        TableColor::Violet => "violet",
        TableColor::Blue => "blue",
        TableColor::Red => "red",
        TableColor::Uncolored => "none",
    }
}

fn run(command: &Command, out: &Option<PathBuf>) -> Result<u8, Error> {
    match command {
        Command::Tree { colors, radius } => {
            let tree = ColoredTree::build(*colors, *radius)?;
            let doc = serde_json::to_string(&tree.to_json()).expect("serializable");
            emit(out, &doc)?;
            Ok(0)
        }
        Command::Gens {
            colors,
            radius,
            format,
        } => {
            let tree = ColoredTree::build(*colors, *radius)?;
            let gens = generators(&tree);
            let doc = match format {
                GensFormat::Json => {
                    let items: Vec<serde_json::Value> = gens
                        .iter()
                        .enumerate()
                        .map(|(i, g)| {
                            json!({
                                "color": i,
                                "images": g.to_string(),
                                "cycles": g.cycle_string(),
                            })
                        })
                        .collect();
                    serde_json::to_string(&json!({
                        "C": colors,
                        "R": radius,
                        "N": tree.vertex_count(),
                        "generators": items,
                    }))
                    .expect("serializable")
                }
                GensFormat::Text => gens
                    .iter()
                    .enumerate()
                    .map(|(i, g)| format!("{i}: {}", g.cycle_string()))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(out, &doc)?;
            Ok(0)
        }
        Command::Word {
            colors,
            radius,
            word,
            track_from,
        } => {
            let tree = ColoredTree::build(*colors, *radius)?;
            let parsed = Word::parse(word)?;
            for letter in parsed.letters() {
                if usize::from(letter.0) >= tree.color_count() {
                    return Err(Error::Parameter(format!(
                        "color {} out of range for C={colors}",
                        letter.0
                    )));
                }
            }
            let p = parsed.evaluate(&tree);
            let mut doc = json!({
                "C": colors,
                "R": radius,
                "word": parsed.to_string(),
                "length": parsed.len(),
                "images": p.to_string(),
                "cycles": p.cycle_string(),
                "order": p.order().to_string(),
                "sign": p.sign(),
                "fixed_points": p.fixed_points().len(),
            });
            if let Some(v) = track_from {
                if *v as usize >= tree.vertex_count() {
                    return Err(Error::Parameter(format!("vertex {v} out of range")));
                }
                let (path, endpoint) = track(&tree, parsed.letters(), *v);
                doc["track"] = json!({ "path": path, "endpoint": endpoint });
            }
            emit(out, &serde_json::to_string(&doc).expect("serializable"))?;
            Ok(0)
        }
        Command::Girth {
            colors,
            radius,
            max_states,
            max_depth,
            threads,
            exact,
        } => {
            let tree = ColoredTree::build(*colors, *radius)?;
            let budget = SearchBudget {
                max_states: *max_states,
                max_depth: *max_depth,
            };
            let start = Instant::now();
            let outcome = girth(&generators(&tree), &budget, *threads)?;
            let doc = search_json(*colors, *radius, &outcome, start.elapsed().as_secs_f64());
            emit(out, &serde_json::to_string(&doc).expect("serializable"))?;
            Ok(if *exact && outcome.kind != OutcomeKind::Exact {
                2
            } else {
                0
            })
        }
        Command::Diameter {
            colors,
            radius,
            max_states,
            max_depth,
            threads,
            exact,
        } => {
            let tree = ColoredTree::build(*colors, *radius)?;
            let budget = SearchBudget {
                max_states: *max_states,
                max_depth: *max_depth,
            };
            let start = Instant::now();
            let outcome = diameter(&generators(&tree), &budget, *threads)?;
            let doc = search_json(*colors, *radius, &outcome, start.elapsed().as_secs_f64());
            emit(out, &serde_json::to_string(&doc).expect("serializable"))?;
            Ok(if *exact && outcome.kind != OutcomeKind::Exact {
                2
            } else {
                0
            })
        }
        Command::Order { colors, radius } => {
            let tree = ColoredTree::build(*colors, *radius)?;
            let gens = generators(&tree);
            let bsgs = schreier_sims(&gens)?;
            let verdict = classify_alt_sym(&bsgs, &gens);
            let doc = json!({
                "C": colors,
                "R": radius,
                "N": tree.vertex_count(),
                "order": verdict.order.to_string(),
                "type": format!("{:?}", verdict.group_type),
                "transitivity": verdict.transitivity,
            });
            emit(out, &serde_json::to_string(&doc).expect("serializable"))?;
            Ok(0)
        }
        Command::Classify {
            colors,
            radius,
            verify,
            verify_max_degree,
        } => {
            let report = if *verify {
                classify::verify(*colors, *radius, *verify_max_degree)?
            } else {
                classify::classify(*colors, *radius)?
            };
            let mut doc = serde_json::to_value(&report).expect("serializable");
            doc["table_color"] = json!(color_name(report.table_color));
            if let Some(v) = &report.verified {
                doc["verified"] = json!({
                    "order": v.order.to_string(),
                    "type": format!("{:?}", v.group_type),
                    "transitivity": v.transitivity,
                });
            }
            emit(out, &serde_json::to_string(&doc).expect("serializable"))?;
            Ok(0)
        }
        Command::Table1 { c_max, r_max } => {
            let cells = classify::table1_report(*c_max, *r_max)?;
            let mut doc = String::from("C,R,N,factorization,color,projective_matches");
            for cell in &cells {
                let matches = cell
                    .projective
                    .as_ref()
                    .map(|ms| {
                        ms.iter()
                            .map(|m| format!("q={} d={}", m.q, m.d))
                            .collect::<Vec<_>>()
                            .join(";")
                    })
                    .unwrap_or_default();
                doc.push_str(&format!(
                    "\n{},{},{},{},{},{}",
                    cell.c,
                    cell.r,
                    cell.n,
                    cell.factorization.to_display(),
                    color_name(cell.color),
                    matches
                ));
            }
            emit(out, &doc)?;
            Ok(0)
        }
        Command::Figure { id } => {
            let id: FigureId = id.parse()?;
            let rows = classify::figure_data(id);
            let mut doc = String::from("x,series,value");
            for row in rows {
                doc.push_str(&format!("\n{},{},{}", row.x, row.series, row.value));
            }
            emit(out, &doc)?;
            Ok(0)
        }
        Command::Projective { n } => {
            let n: BigUint = n
                .parse()
                .map_err(|_| Error::Parameter(format!("not a decimal integer: {n:?}")))?;
            if n < BigUint::from(3u32) {
                return Err(Error::Parameter("need N >= 3".into()));
            }
            let matches: Vec<serde_json::Value> = projective_matches(&n)
                .iter()
                .map(|m| {
                    json!({
                        "q": m.q.to_string(),
                        "d": m.d,
                        "p": m.p.to_string(),
                        "e": m.e,
                    })
                })
                .collect();
            let doc = json!({ "N": n.to_string(), "matches": matches });
            emit(out, &serde_json::to_string(&doc).expect("serializable"))?;
            Ok(0)
        }
        Command::Landau { n } => {
            let value = landau(*n);
            let doc = json!({ "n": n, "landau": value.to_string() });
            emit(out, &serde_json::to_string(&doc).expect("serializable"))?;
            Ok(0)
        }
        Command::Check {
            scope,
            inject_fault,
        } => {
            let scope = match scope.as_str() {
                "fast" => CheckScope::Fast,
                "full" => CheckScope::Full,
                other => {
                    return Err(Error::Parameter(format!(
                        "unknown scope {other:?}; expected fast or full"
                    )))
                }
            };
            let results = run_checks(scope, *inject_fault);
            let mut all_ok = true;
            let mut doc = String::new();
            for r in &results {
                all_ok &= r.passed;
                doc.push_str(&format!(
                    "{} {}{}\n",
                    if r.passed { "ok  " } else { "FAIL" },
                    r.name,
                    if r.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", r.detail)
                    }
                ));
            }
            doc.push_str(if all_ok {
                "all checks passed"
            } else {
                "CHECKS FAILED"
            });
            emit(out, &doc)?;
            if all_ok {
                Ok(0)
            } else {
                Err(Error::Contradiction("invariant suite failed".into()))
            }
        }
    }
}
