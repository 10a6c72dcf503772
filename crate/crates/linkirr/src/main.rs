use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use linkirr::construct::{
    complete_labeling, g_family, h_family, unique_li6, wheel_labeling, ConstructError,
};
use linkirr::graph::{Graph, LabeledGraph};
use linkirr::io::{export_dot, parse_graph6, parse_labeled, write_graph6, write_labeled};
use linkirr::iso::{are_isomorphic, are_isomorphic_graphs};
use linkirr::links::admits_labeling;
use linkirr::solver::{
    check_labeling, eta_with_config, exists_labeling_with_config, Eta, SearchConfig, SolverError,
};
use linkirr::verify::run_verification;

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_RESOURCES: u8 = 2;
const EXIT_PROPERTY_FALSE: u8 = 3;
const EXIT_INFEASIBLE_PARAMETER: u8 = 4;

#[derive(Parser)]
#[command(
    name = "linkirr",
    about = "Link-irregular edge labelings of graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimum number of distinct labels for a graph
    Eta {
        path: PathBuf,
        /// Stop after this many labels and report exhaustion
        #[arg(long)]
        max_labels: Option<usize>,
        /// Abort the search after this many nodes
        #[arg(long)]
        node_budget: Option<u64>,
        /// Write the witness labeling here
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        verbose: bool,
    },
    /// Validate that a labeled graph is link-irregular
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide whether any link-irregular labeling exists
    Feasible {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a known family member or its optimal labeling
    Construct {
        /// One of: kn, wheel, hn, gn, li6
        kind: String,
        /// Size parameter (ignored for li6)
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test two graph files for (label-preserving) isomorphism
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Render a labeled graph as DOT
    Dot {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Feasibility and eta summary over many graph files
    Survey {
        paths: Vec<PathBuf>,
        #[arg(long)]
        max_labels: Option<usize>,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Write the JSON report here (witness files go next to it)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run the full verification suite
    VerifyPaper {
        /// Skip checks that need graphs larger than this
        #[arg(long, default_value = "16")]
        max_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Input {
    Unlabeled(Graph),
    Labeled(LabeledGraph),
}

impl Input {
    fn graph(&self) -> &Graph {
        match self {
            Input::Unlabeled(g) => g,
            Input::Labeled(l) => l.graph(),
        }
    }
}

fn read_input(path: &Path) -> Result<Input, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let labeled = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("n ") || l.starts_with("e "));
    if labeled {
        parse_labeled(&text)
            .map(Input::Labeled)
            .map_err(|e| format!("{}: {e}", path.display()))
    } else {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        parse_graph6(line)
            .map(Input::Unlabeled)
            .map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn solver_exit(e: &SolverError) -> u8 {
    match e {
        SolverError::BudgetExhausted(_)
        | SolverError::SearchSpaceTooLarge(_)
        | SolverError::OrderTooLarge(..)
        | SolverError::Inconclusive { .. } => EXIT_RESOURCES,
    }
}

fn cmd_eta(
    path: &Path,
    max_labels: Option<usize>,
    node_budget: Option<u64>,
    out: &Option<PathBuf>,
    format: Format,
    verbose: bool,
) -> Result<u8, (u8, String)> {
    let input = read_input(path).map_err(|e| (EXIT_INPUT, e))?;
    let g = input.graph().clone();
    let cfg = SearchConfig {
        node_budget,
        verbose,
        ..Default::default()
    };

    let result = if let Some(cap) = max_labels {
        let report = admits_labeling(&g);
        if !report.feasible {
            Ok(linkirr::solver::EtaResult {
                value: Eta::Infinite,
                witness: None,
                evidence: linkirr::solver::EtaEvidence::InfeasibleByTheorem1,
            })
        } else {
            let mut found = None;
            for r in 1..=cap.min(g.size().max(1)) {
                match exists_labeling_with_config(&g, r, &cfg) {
                    Ok(Some(w)) => {
                        found = Some((r, w));
                        break;
                    }
                    Ok(None) => {}
                    Err(e) => return Err((solver_exit(&e), e.to_string())),
                }
            }
            match found {
                Some((r, w)) => Ok(linkirr::solver::EtaResult {
                    value: Eta::Finite(r),
                    witness: Some(w),
                    evidence: linkirr::solver::EtaEvidence::ExhaustedRMinus1,
                }),
                None => Err(SolverError::Inconclusive { r_max: cap }),
            }
        }
    } else {
        eta_with_config(&g, &cfg)
    };
    let result = result.map_err(|e| (solver_exit(&e), e.to_string()))?;

    let witness_text = result.witness.as_ref().map(write_labeled);
    if let (Some(w), Some(p)) = (&witness_text, out) {
        fs::write(p, w).map_err(|e| (EXIT_INPUT, format!("{}: {e}", p.display())))?;
    }
    match format {
        Format::Text => match result.value {
            Eta::Finite(v) => {
                println!("eta = {v}");
                match (out, &witness_text) {
                    (Some(p), _) => println!("witness written to {}", p.display()),
                    (None, Some(w)) => print!("{w}"),
                    (None, None) => {}
                }
            }
            Eta::Infinite => {
                let pair = admits_labeling(&g).witness_pair;
                match pair {
                    Some((x, y)) => {
                        println!("eta = infinity (no labeling can separate vertices {x} and {y})")
                    }
                    None => println!("eta = infinity"),
                }
            }
        },
        Format::Json => {
            let value = json!({
                "eta": result.value.finite(),
                "infinite": !result.value.is_finite(),
                "witness": witness_text,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check(path: &Path, format: Format) -> Result<u8, (u8, String)> {
    let Input::Labeled(l) = read_input(path).map_err(|e| (EXIT_INPUT, e))? else {
        return Err((
            EXIT_INPUT,
            "check requires a labeled edge-list file".to_string(),
        ));
    };
    let res = check_labeling(&l);
    match format {
        Format::Text => match res.violating_pair {
            None => println!("link-irregular"),
            Some((x, y)) => {
                println!("not link-irregular: vertices {x} and {y} have isomorphic labeled links")
            }
        },
        Format::Json => println!(
            "{}",
            json!({ "irregular": res.irregular, "violating_pair": res.violating_pair })
        ),
    }
    Ok(if res.irregular {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FALSE
    })
}

fn cmd_feasible(path: &Path, format: Format) -> Result<u8, (u8, String)> {
    let input = read_input(path).map_err(|e| (EXIT_INPUT, e))?;
    let report = admits_labeling(input.graph());
    match format {
        Format::Text => match report.witness_pair {
            None => println!("feasible"),
            Some((x, y)) => println!("infeasible: vertices {x} and {y} cannot be separated"),
        },
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
    }
    Ok(if report.feasible {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FALSE
    })
}

fn construct_exit(e: &ConstructError) -> u8 {
    match e {
        ConstructError::InfeasibleParameter(_) => EXIT_INFEASIBLE_PARAMETER,
        _ => EXIT_RESOURCES,
    }
}

fn cmd_construct(kind: &str, n: Option<usize>, out: &Option<PathBuf>) -> Result<u8, (u8, String)> {
    let need_n = || {
        n.ok_or((
            EXIT_INPUT,
            format!("construct {kind} requires a size parameter"),
        ))
    };
    let content = match kind {
        "kn" => {
            let l =
                complete_labeling(need_n()?).map_err(|e| (construct_exit(&e), e.to_string()))?;
            write_labeled(&l)
        }
        "wheel" => {
            let l = wheel_labeling(need_n()?).map_err(|e| (construct_exit(&e), e.to_string()))?;
            write_labeled(&l)
        }
        "hn" => {
            let (_, l) = h_family(need_n()?).map_err(|e| (construct_exit(&e), e.to_string()))?;
            write_labeled(&l)
        }
        "gn" => {
            let g = g_family(need_n()?).map_err(|e| (construct_exit(&e), e.to_string()))?;
            write_graph6(&g).map_err(|e| (EXIT_INPUT, e.to_string()))? + "\n"
        }
        "li6" => write_graph6(unique_li6()).map_err(|e| (EXIT_INPUT, e.to_string()))? + "\n",
        other => {
            return Err((
                EXIT_INPUT,
                format!("unknown kind {other:?} (expected kn, wheel, hn, gn, li6)"),
            ))
        }
    };
    write_out(out, &content).map_err(|e| (EXIT_INPUT, e))?;
    Ok(EXIT_OK)
}

fn cmd_iso(a: &Path, b: &Path, format: Format) -> Result<u8, (u8, String)> {
    let ia = read_input(a).map_err(|e| (EXIT_INPUT, e))?;
    let ib = read_input(b).map_err(|e| (EXIT_INPUT, e))?;
    let isomorphic = match (&ia, &ib) {
        (Input::Labeled(x), Input::Labeled(y)) => are_isomorphic(x, y),
        (Input::Unlabeled(x), Input::Unlabeled(y)) => are_isomorphic_graphs(x, y),
        _ => {
            return Err((
                EXIT_INPUT,
                "cannot compare a labeled file with an unlabeled one".to_string(),
            ))
        }
    };
    match format {
        Format::Text => println!(
            "{}",
            if isomorphic {
                "isomorphic"
            } else {
                "not isomorphic"
            }
        ),
        Format::Json => println!("{}", json!({ "isomorphic": isomorphic })),
    }
    Ok(if isomorphic {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FALSE
    })
}

fn cmd_dot(path: &Path, out: &Option<PathBuf>) -> Result<u8, (u8, String)> {
    let input = read_input(path).map_err(|e| (EXIT_INPUT, e))?;
    let labeled = match input {
        Input::Labeled(l) => l,
        Input::Unlabeled(g) => LabeledGraph::uniform(g, 1),
    };
    write_out(out, &export_dot(&labeled)).map_err(|e| (EXIT_INPUT, e))?;
    Ok(EXIT_OK)
}

fn cmd_survey(
    paths: &[PathBuf],
    max_labels: Option<usize>,
    node_budget: Option<u64>,
    out: &Option<PathBuf>,
) -> Result<u8, (u8, String)> {
    if paths.is_empty() {
        return Err((
            EXIT_INPUT,
            "survey requires at least one graph file".to_string(),
        ));
    }
    let cfg = SearchConfig {
        node_budget,
        ..Default::default()
    };
    let mut entries = Vec::new();
    let mut wall_times = Vec::new();
    for (i, path) in paths.iter().enumerate() {
        let input = read_input(path).map_err(|e| (EXIT_INPUT, e))?;
        let g = input.graph().clone();
        let feasible = admits_labeling(&g).feasible;
        let start = Instant::now();
        let (eta_str, witness) = if !feasible {
            ("infinity".to_string(), None)
        } else {
            let cap = max_labels.unwrap_or(g.size().max(1)).min(g.size().max(1));
            let mut found = None;
            let mut exhausted = false;
            for r in 1..=cap {
                match exists_labeling_with_config(&g, r, &cfg) {
                    Ok(Some(w)) => {
                        found = Some((r, w));
                        break;
                    }
                    Ok(None) => {}
                    Err(_) => {
                        exhausted = true;
                        break;
                    }
                }
            }
            match found {
                Some((r, w)) => (r.to_string(), Some(w)),
                None if exhausted => ("unknown (budget exhausted)".to_string(), None),
                None => ("unknown (label cap reached)".to_string(), None),
            }
        };
        wall_times.push(json!({
            "graph": path.display().to_string(),
            "ms": start.elapsed().as_millis() as u64,
        }));
        let witness_file = match (&witness, out) {
            (Some(w), Some(report_path)) => {
                let file = report_path.with_extension(format!("witness-{i}.labels"));
                fs::write(&file, write_labeled(w))
                    .map_err(|e| (EXIT_INPUT, format!("{}: {e}", file.display())))?;
                Some(file.display().to_string())
            }
            _ => None,
        };
        entries.push(json!({
            "graph": path.display().to_string(),
            "order": g.order(),
            "size": g.size(),
            "feasible": feasible,
            "eta": eta_str,
            "witness_file": witness_file,
        }));
    }
    let report = json!({
        "suite": linkirr::verify::SUITE_VERSION,
        "entries": entries,
        "discrepancies": [],
        "wall_times": wall_times,
    });
    let text = serde_json::to_string_pretty(&report).expect("json") + "\n";
    match out {
        Some(p) => {
            fs::write(p, &text).map_err(|e| (EXIT_INPUT, format!("{}: {e}", p.display())))?
        }
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn cmd_verify_paper(max_order: usize, out: &Option<PathBuf>) -> Result<u8, (u8, String)> {
    let report = run_verification(max_order);
    for check in &report.checks {
        println!(
            "{} {} — {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.details
        );
    }
    for d in &report.discrepancies {
        println!("DIAG {}: {} ({})", d.check, d.graph, d.details);
    }
    if let Some(p) = out {
        let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        fs::write(p, text).map_err(|e| (EXIT_INPUT, format!("{}: {e}", p.display())))?;
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FALSE
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eta {
            path,
            max_labels,
            node_budget,
            out,
            format,
            verbose,
        } => cmd_eta(path, *max_labels, *node_budget, out, *format, *verbose),
        Command::Check { path, format } => cmd_check(path, *format),
        Command::Feasible { path, format } => cmd_feasible(path, *format),
        Command::Construct { kind, n, out } => cmd_construct(kind, *n, out),
        Command::Iso { a, b, format } => cmd_iso(a, b, *format),
        Command::Dot { path, out } => cmd_dot(path, out),
        Command::Survey {
            paths,
            max_labels,
            node_budget,
            out,
        } => cmd_survey(paths, *max_labels, *node_budget, out),
        Command::VerifyPaper { max_order, out } => cmd_verify_paper(*max_order, out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
