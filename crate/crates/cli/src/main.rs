//! Single executable binding all engines: machine-readable JSON on
//! stdout, human-readable notes on stderr.
//!
//! Exit codes: 0 = found / choosable / all passed, 1 = none / witness /
//! failed criterion, 2 = invalid input, 3 = budget or cap exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use thetacolor::classify::classify;
use thetacolor::cycle::{color_odd_cycle, CycleInstance};
use thetacolor::io;
use thetacolor::lemma::{self, Floor};
use thetacolor::lists::{verify_coloring, ColorSet};
use thetacolor::oracle::{self, SampleMode, SamplerConfig};
use thetacolor::pairs;
use thetacolor::path;
use thetacolor::solver;
use thetacolor::suite::{run_suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "thetacolor", version, about = "exact list-colouring toolkit")]
struct Cli {
    /// Write the JSON report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Brute-force ground truth
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Residual-sequence calculus on a single path
    Path {
        #[command(subcommand)]
        cmd: PathCmd,
    },
    /// Constructive odd-cycle colouring
    Cycle {
        #[command(subcommand)]
        cmd: CycleCmd,
    },
    /// Couples, conditions, and the pair search on a theta graph
    Pairs {
        #[command(subcommand)]
        cmd: PairsCmd,
    },
    /// End-to-end theta solving and verification
    Theta {
        #[command(subcommand)]
        cmd: ThetaCmd,
    },
    /// Exact binomial sweeps
    Lemma {
        #[command(subcommand)]
        cmd: LemmaCmd,
    },
    /// Structural classification of a graph
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run the acceptance suite
    Suite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Reduced ranges for a fast signal
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 12)]
        lemma_lmax: u64,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Find an (L,b)-colouring or prove none exists
    Color {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Test (a,b)-choosability over a palette
    Choosable {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Palette size; defaults to min(|V|*a, 12)
        #[arg(long)]
        palette: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args)]
struct PathLists {
    /// Ordered lists file: {"lists": [[...], ...]}
    #[arg(long)]
    lists: PathBuf,
}

#[derive(Subcommand)]
enum PathCmd {
    /// Residual sets, S_L(P), and (for odd paths) the hat sets
    Slp(PathLists),
    /// Damage of (S,T), both definitional and closed form
    Damage {
        #[command(flatten)]
        lists: PathLists,
        /// Comma-separated colours removed from the head list
        #[arg(long = "S", value_delimiter = ',')]
        s: Vec<u32>,
        /// Comma-separated colours removed from the tail list
        #[arg(long = "T", value_delimiter = ',')]
        t: Vec<u32>,
    },
    /// Construct an m-fold colouring of the path
    Color {
        #[command(flatten)]
        lists: PathLists,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum CycleCmd {
    Color {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Ordered lists for v0..v2k
        #[arg(long)]
        lists: PathBuf,
    },
}

#[derive(Subcommand)]
enum PairsCmd {
    /// Heavy/light/safe classification of the consistent indexing
    Classify {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        lists: PathBuf,
    },
    /// Search for a pair within the per-path damage budgets
    Find {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        tau: usize,
    },
}

#[derive(Subcommand)]
enum ThetaCmd {
    Solve {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        m: usize,
    },
    Verify {
        #[arg(long)]
        theta: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        coloring: PathBuf,
    },
}

#[derive(Subcommand)]
enum LemmaCmd {
    /// Sweep the main inequality (and optionally the section identities)
    Sweep {
        #[arg(long, default_value_t = 12)]
        lmax: u64,
        /// Use the strict k+2 floor
        #[arg(long)]
        floor_k2: bool,
        /// Also sweep the section identity families
        #[arg(long)]
        section5: bool,
    },
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn emit(out: &Option<PathBuf>, value: &serde_json::Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Oracle { cmd } => oracle_cmd(cli, cmd),
        Command::Path { cmd } => path_cmd(cli, cmd),
        Command::Cycle { cmd } => cycle_cmd(cli, cmd),
        Command::Pairs { cmd } => pairs_cmd(cli, cmd),
        Command::Theta { cmd } => theta_cmd(cli, cmd),
        Command::Lemma { cmd } => lemma_cmd(cli, cmd),
        Command::Classify { graph } => {
            let g = io::graph_from_json(&read(graph)?).map_err(|e| e.to_string())?;
            let c = classify(&g);
            emit(
                &cli.out,
                &json!({
                    "core_vertices": c.core.vertex_count(),
                    "core_edges": c.core.edge_count(),
                    "two_choosable": c.two_choosable,
                    "three_choice_critical": c.three_choice_critical,
                    "family": c.family,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Suite {
            seed,
            quick,
            lemma_lmax,
        } => {
            let report = run_suite(&SuiteConfig {
                seed: *seed,
                quick: *quick,
                lemma_lmax: *lemma_lmax,
            });
            for c in &report.criteria {
                eprintln!(
                    "criterion {:>2} [{}] {} — {}",
                    c.id,
                    if c.passed { "pass" } else { "FAIL" },
                    c.name,
                    c.details
                );
            }
            emit(&cli.out, &serde_json::to_value(&report).unwrap())?;
            Ok(if report.all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn oracle_cmd(cli: &Cli, cmd: &OracleCmd) -> Result<ExitCode, String> {
    match cmd {
        OracleCmd::Color {
            graph,
            lists,
            b,
            budget,
        } => {
            let g = io::graph_from_json(&read(graph)?).map_err(|e| e.to_string())?;
            let l = io::named_lists_from_json(&read(lists)?).map_err(|e| e.to_string())?;
            match oracle::find_lb_coloring(&g, &l, *b, *budget) {
                Ok(Some(phi)) => {
                    emit(
                        &cli.out,
                        &serde_json::to_value(io::coloring_to_json(&phi)).unwrap(),
                    )?;
                    Ok(ExitCode::SUCCESS)
                }
                Ok(None) => {
                    emit(&cli.out, &json!({"found": false}))?;
                    Ok(ExitCode::from(1))
                }
                Err(oracle::OracleError::BudgetExceeded(n)) => {
                    eprintln!("node budget {n} exceeded");
                    Ok(ExitCode::from(3))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        OracleCmd::Choosable {
            graph,
            a,
            b,
            mode,
            palette,
            samples,
            seed,
        } => {
            let g = io::graph_from_json(&read(graph)?).map_err(|e| e.to_string())?;
            let cfg = match mode.as_str() {
                "exhaustive" => SamplerConfig {
                    mode: SampleMode::Exhaustive,
                    palette_size: palette.unwrap_or_else(|| (g.vertex_count() * a).min(12)),
                    ..SamplerConfig::exhaustive(0)
                },
                "random" => SamplerConfig::random(palette.unwrap_or(12), *samples, *seed),
                other => return Err(format!("unknown mode {other:?}")),
            };
            match oracle::check_choosable(&g, *a, *b, &cfg) {
                Ok(report) => {
                    let (code, value) = match &report.verdict {
                        oracle::ChoosableVerdict::ChoosableOverPalette { palette } => (
                            ExitCode::SUCCESS,
                            json!({
                                "verdict": "choosable_over_palette",
                                "palette": palette,
                                "caveat": format!(
                                    "full choosability would need a palette of |V|*a = {} colours",
                                    g.vertex_count() * a
                                ),
                                "assignments_checked": report.assignments_checked,
                            }),
                        ),
                        oracle::ChoosableVerdict::Witness(w) => (
                            ExitCode::from(1),
                            json!({
                                "verdict": "witness",
                                "witness": serde_json::to_value(io::lists_to_json(w)).unwrap(),
                                "assignments_checked": report.assignments_checked,
                            }),
                        ),
                        oracle::ChoosableVerdict::NoCounterexampleFound { samples } => (
                            ExitCode::SUCCESS,
                            json!({
                                "verdict": "no_counterexample_found",
                                "samples": samples,
                                "seed": report.seed,
                            }),
                        ),
                    };
                    emit(&cli.out, &value)?;
                    Ok(code)
                }
                Err(oracle::OracleError::CapExceeded(msg)) => {
                    eprintln!("cap exceeded: {msg}");
                    Ok(ExitCode::from(3))
                }
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

fn path_cmd(cli: &Cli, cmd: &PathCmd) -> Result<ExitCode, String> {
    match cmd {
        PathCmd::Slp(args) => {
            let lists =
                io::ordered_lists_from_json(&read(&args.lists)?).map_err(|e| e.to_string())?;
            let res = path::residual_sequence(&lists).map_err(|e| e.to_string())?;
            let mut value = json!({
                "residuals": res.sets.iter().map(|s| s.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>(),
                "slp": res.slp,
            });
            if lists.len() % 2 == 1 {
                let hats = path::hat_sets(&lists).map_err(|e| e.to_string())?;
                value["lambda"] = json!(hats.lambda.iter().copied().collect::<Vec<_>>());
                value["hat_head"] = json!(hats.hat_head.iter().copied().collect::<Vec<_>>());
                value["hat_tail"] = json!(hats.hat_tail.iter().copied().collect::<Vec<_>>());
            }
            emit(&cli.out, &value)?;
            Ok(ExitCode::SUCCESS)
        }
        PathCmd::Damage { lists, s, t } => {
            let lists =
                io::ordered_lists_from_json(&read(&lists.lists)?).map_err(|e| e.to_string())?;
            let s: ColorSet = s.iter().copied().collect();
            let t: ColorSet = t.iter().copied().collect();
            let dam = path::damage(&lists, &s, &t).map_err(|e| e.to_string())?;
            let reduced =
                path::slp(&path::reduce_lists(&lists, &s, &t)).map_err(|e| e.to_string())?;
            emit(
                &cli.out,
                &json!({
                    "damage": dam,
                    "slp": path::slp(&lists).map_err(|e| e.to_string())?,
                    "reduced_slp": reduced,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        PathCmd::Color { lists, m } => {
            let lists =
                io::ordered_lists_from_json(&read(&lists.lists)?).map_err(|e| e.to_string())?;
            match path::color_path(&lists, *m).map_err(|e| e.to_string())? {
                Some(phi) => {
                    emit(
                        &cli.out,
                        &json!({
                            "found": true,
                            "coloring": phi.iter().map(|s| s.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>(),
                        }),
                    )?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    emit(&cli.out, &json!({"found": false}))?;
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn cycle_cmd(cli: &Cli, cmd: &CycleCmd) -> Result<ExitCode, String> {
    let CycleCmd::Color { k, a, b, lists } = cmd;
    let lists = io::ordered_lists_from_json(&read(lists)?).map_err(|e| e.to_string())?;
    let inst = CycleInstance::new(*k, *a, *b, lists).map_err(|e| e.to_string())?;
    let phi = color_odd_cycle(&inst).map_err(|e| e.to_string())?;
    let report = verify_coloring(&inst.graph(), &inst.list_assignment(), *b, &phi);
    if !report.is_valid() {
        return Err(format!("internal: produced colouring invalid: {report:?}"));
    }
    emit(
        &cli.out,
        &serde_json::to_value(io::coloring_to_json(&phi)).unwrap(),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn pairs_cmd(cli: &Cli, cmd: &PairsCmd) -> Result<ExitCode, String> {
    match cmd {
        PairsCmd::Classify { theta, lists } => {
            let theta = io::theta_from_json(&read(theta)?).map_err(|e| e.to_string())?;
            let lists = io::named_lists_from_json(&read(lists)?).map_err(|e| e.to_string())?;
            let lu = lists.get("u").ok_or("missing list for u")?;
            let lv = lists.get("v").ok_or("missing list for v")?;
            let index = pairs::consistent_indexing(lu, lv).map_err(|e| e.to_string())?;
            let cls = pairs::classify_couples(&theta, &lists, &index).map_err(|e| e.to_string())?;
            emit(
                &cli.out,
                &json!({
                    "couples": index.couples,
                    "per_path": cls.per_path.iter().map(|p| json!({
                        "labels": p.labels,
                        "heavy": p.heavy,
                        "light": p.light,
                        "safe": p.safe,
                    })).collect::<Vec<_>>(),
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        PairsCmd::Find {
            theta,
            lists,
            m,
            tau,
        } => {
            let theta = io::theta_from_json(&read(theta)?).map_err(|e| e.to_string())?;
            let lists = io::named_lists_from_json(&read(lists)?).map_err(|e| e.to_string())?;
            let ctx = pairs::ThetaContext::build(&theta, &lists).map_err(|e| e.to_string())?;
            let index = pairs::consistent_indexing(&ctx.lu, &ctx.lv).map_err(|e| e.to_string())?;
            let budgets = ctx.budgets(*m);
            if *tau > *m {
                return Err("tau must not exceed m".into());
            }
            match pairs::find_pair(&ctx, &index, *m - *tau, &budgets, false)
                .map_err(|e| e.to_string())?
            {
                Some(pair) => {
                    emit(
                        &cli.out,
                        &json!({
                            "found": true,
                            "S": pair.s.iter().copied().collect::<Vec<_>>(),
                            "T": pair.t.iter().copied().collect::<Vec<_>>(),
                            "damages": pair.damages,
                            "budgets": budgets,
                            "simple": pair.simple,
                            "stage": pair.stage,
                        }),
                    )?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    emit(&cli.out, &json!({"found": false, "budgets": budgets}))?;
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn theta_cmd(cli: &Cli, cmd: &ThetaCmd) -> Result<ExitCode, String> {
    match cmd {
        ThetaCmd::Solve { theta, lists, m } => {
            let theta = io::theta_from_json(&read(theta)?).map_err(|e| e.to_string())?;
            let lists = io::named_lists_from_json(&read(lists)?).map_err(|e| e.to_string())?;
            match solver::solve(&theta, &lists, *m) {
                Ok(out) => {
                    let mut value =
                        serde_json::to_value(io::coloring_to_json(&out.coloring)).unwrap();
                    value["certificate"] = json!(out.certificate);
                    emit(&cli.out, &value)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(solver::SolveError::NoColoring) => {
                    emit(&cli.out, &json!({"found": false}))?;
                    Ok(ExitCode::from(1))
                }
                Err(solver::SolveError::Oracle(oracle::OracleError::BudgetExceeded(n))) => {
                    eprintln!("node budget {n} exceeded");
                    Ok(ExitCode::from(3))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        ThetaCmd::Verify {
            theta,
            lists,
            m,
            coloring,
        } => {
            let theta = io::theta_from_json(&read(theta)?).map_err(|e| e.to_string())?;
            let lists = io::named_lists_from_json(&read(lists)?).map_err(|e| e.to_string())?;
            let phi = io::coloring_from_json(&read(coloring)?).map_err(|e| e.to_string())?;
            let report = verify_coloring(&theta.to_graph(), &lists, *m, &phi);
            emit(
                &cli.out,
                &json!({
                    "valid": report.is_valid(),
                    "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                }),
            )?;
            Ok(if report.is_valid() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn lemma_cmd(cli: &Cli, cmd: &LemmaCmd) -> Result<ExitCode, String> {
    let LemmaCmd::Sweep {
        lmax,
        floor_k2,
        section5,
    } = cmd;
    let floor = if *floor_k2 {
        Floor::KPlus2
    } else {
        Floor::KPlus1
    };
    let main = lemma::verify_main_lemma(*lmax, floor).map_err(|e| e.to_string())?;
    let mut value = serde_json::to_value(&main).unwrap();
    let mut clean = main.clean();
    if *section5 {
        let identities = lemma::verify_section_identities(*lmax).map_err(|e| e.to_string())?;
        clean = clean && identities.clean();
        value["section_identities"] = serde_json::to_value(&identities).unwrap();
    }
    emit(&cli.out, &value)?;
    Ok(if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
