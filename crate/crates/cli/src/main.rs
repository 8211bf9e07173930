use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cospec::census::{census, CensusOptions, DEFAULT_MAX_N, MAX_EXPLAIN_M};
use cospec::construct::{check_hypotheses, swap_construct, verify_similarity, HypothesisReport};
use cospec::cousins::{enumerate_cousin_pairs, Classifier, CousinFlag};
use cospec::graph::{emit_edge_list, emit_graph6, parse_graph};
use cospec::spectra::spectral_polynomial;
use cospec::{cospectral, parse_plan, Graph, MatrixKind};

const EXIT_DIFFERENT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(name = "cospec", version, about = "Exact cospectral graph construction and checking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact characteristic polynomial of one graph.
    Charpoly {
        /// graph6 or edge-list file; stdin when omitted or `-`.
        input: Option<PathBuf>,
        #[arg(long, short, default_value = "adjacency", value_parser = parse_kind)]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value_t = Format::Coeffs)]
        format: Format,
    },
    /// Compare two graphs kind by kind.
    Verify {
        first: PathBuf,
        second: PathBuf,
        /// Comma-separated matrix kinds.
        #[arg(long, short, default_value = "adjacency", value_delimiter = ',', value_parser = parse_kind)]
        matrix: Vec<MatrixKind>,
        /// Also check the block similarity exactly. Needs --plan or --order.
        #[arg(long)]
        similarity: bool,
        /// Plan file whose swap order is used for --similarity.
        #[arg(long, conflicts_with = "order")]
        plan: Option<PathBuf>,
        /// Swap order for --similarity: V1 in order, then V2 reflected.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
    /// Build the two graphs described by a plan file.
    Construct {
        plan: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::G6)]
        emit: Emit,
        /// Report licensed kinds and verify every kind.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// List pairs of disjoint vertex sets satisfying a cousin flag.
    FindCousins {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value = "relaxed", value_parser = parse_flag)]
        require: CousinFlag,
        #[arg(long)]
        json: bool,
    },
    /// Group a graph6 stream into cospectral classes.
    Census {
        /// graph6 lines; stdin when omitted or `-`.
        input: Option<PathBuf>,
        #[arg(long, short, default_value = "adjacency", value_parser = parse_kind)]
        matrix: MatrixKind,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Try to certify each class as coming from a set swap.
        #[arg(long)]
        explain: bool,
        /// Largest cousin set size tried by --explain.
        #[arg(long, default_value_t = MAX_EXPLAIN_M)]
        m: usize,
        /// Emit single-member classes too.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Coefficients highest degree first.
    Coeffs,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    G6,
    Edgelist,
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: cospec::Error| e.to_string())
}

fn parse_flag(s: &str) -> Result<CousinFlag, String> {
    s.parse().map_err(|e: cospec::Error| e.to_string())
}

enum Failure {
    Core(cospec::Error),
    Input(String),
}

impl From<cospec::Error> for Failure {
    fn from(e: cospec::Error) -> Self {
        Failure::Core(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => e.fmt(f),
            Failure::Input(s) => f.write_str(s),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(e) if !e.is_input_error() => EXIT_PRECONDITION,
            _ => EXIT_INPUT,
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    Ok(parse_graph(&read_text(path)?)?)
}

fn charpoly(input: Option<&Path>, kind: MatrixKind, format: Format) -> Outcome {
    let g = read_graph(input)?;
    let p = spectral_polynomial(&g, kind)?;
    match format {
        Format::Coeffs => println!("{p}"),
        Format::Json => println!("{}", json!({"kind": kind, "n": g.order(), "charpoly": p.to_string()})),
    }
    Ok(0)
}

fn verdict(same: bool) -> &'static str {
    if same {
        "cospectral"
    } else {
        "different"
    }
}

fn verify(
    first: &Path,
    second: &Path,
    kinds: &[MatrixKind],
    similarity: bool,
    plan: Option<&Path>,
    order: Option<Vec<usize>>,
    as_json: bool,
) -> Outcome {
    let g1 = read_graph(Some(first))?;
    let g2 = read_graph(Some(second))?;
    let order = match (similarity, plan, order) {
        (false, _, _) => None,
        (true, Some(p), _) => Some(parse_plan(&read_text(Some(p))?)?.swap_order()),
        (true, None, Some(o)) => Some(o),
        (true, None, None) => return Err(Failure::Input("--similarity needs --plan or --order".into())),
    };
    let mut all_same = true;
    let mut records = Vec::new();
    for &kind in kinds {
        let same = cospectral(&g1, &g2, kind)?;
        all_same &= same;
        if as_json {
            records.push(json!({"kind": kind, "verdict": verdict(same)}));
        } else {
            println!("{kind}: {}", verdict(same));
        }
    }
    if let Some(order) = order {
        let mut verified = true;
        for &kind in kinds {
            verified &= verify_similarity(&g1, &g2, &order, kind)?;
        }
        all_same &= verified;
        let word = if verified { "verified" } else { "failed" };
        if as_json {
            records.push(json!({"similarity": word}));
        } else {
            println!("similarity: {word}");
        }
    }
    for r in records {
        println!("{r}");
    }
    Ok(if all_same { 0 } else { EXIT_DIFFERENT })
}

/// Why a kind is not licensed, for the stderr notes of `construct --check`.
fn unlicensed_reason(kind: MatrixKind, r: &HypothesisReport) -> &'static str {
    let c = &r.classification;
    match kind {
        MatrixKind::DistanceLaplacian if c.co_transmission.is_none() => "base graph is disconnected",
        MatrixKind::DistanceLaplacian => "sets are not co-transmission cousins",
        MatrixKind::Distance if c.cousins.is_none() => "base graph is disconnected",
        MatrixKind::Distance if c.cousins == Some(false) => "sets are not cousins",
        MatrixKind::Distance => "distances from V1 ∪ V2 into V1 ∪ V2 in G1 do not have constant sums",
        MatrixKind::Adjacency if !c.relaxed => "sets are not relaxed cousins",
        _ if !c.co_degree && kind != MatrixKind::Adjacency => "sets are not co-degree cousins",
        _ if !r.g1_induced_regular => "G1[V1 ∪ V2] is not regular",
        _ => "G1 has an isolated vertex",
    }
}

fn construct(plan_path: &Path, emit: Emit, check: bool, as_json: bool) -> Outcome {
    let plan = parse_plan(&read_text(Some(plan_path))?)?;
    let (g1, g2) = swap_construct(&plan)?;
    let render = |g: &Graph| match emit {
        Emit::G6 => emit_graph6(g),
        Emit::Edgelist => emit_edge_list(g),
    };
    let mut status = 0;
    let mut record = json!({"g1": render(&g1), "g2": render(&g2)});
    if !as_json {
        match emit {
            Emit::G6 => println!("{}\n{}", render(&g1), render(&g2)),
            Emit::Edgelist => println!("{}\n{}", render(&g1), render(&g2).trim_end()),
        }
    }
    if check {
        let report = check_hypotheses(&plan, &g1)?;
        let order = plan.swap_order();
        let mut results = Vec::new();
        for kind in MatrixKind::ALL {
            let licensed = report.licensed.contains(&kind);
            let same = match cospectral(&g1, &g2, kind) {
                Ok(same) => Some(same),
                Err(e) if !e.is_input_error() => None,
                Err(e) => return Err(e.into()),
            };
            let similar = if licensed {
                Some(verify_similarity(&g1, &g2, &order, kind)?)
            } else {
                None
            };
            if licensed && (same != Some(true) || similar != Some(true)) {
                status = EXIT_DIFFERENT;
            }
            if !licensed {
                eprintln!("note: {kind} not licensed: {}", unlicensed_reason(kind, &report));
            }
            results.push((kind, licensed, same, similar));
        }
        if as_json {
            record["report"] = serde_json::to_value(&report).expect("report serializes");
            record["verification"] = results
                .iter()
                .map(|&(kind, licensed, same, similar)| {
                    json!({
                        "kind": kind,
                        "licensed": licensed,
                        "verdict": same.map(verdict).unwrap_or("n/a"),
                        "similarity": similar,
                    })
                })
                .collect();
        } else {
            let names: Vec<&str> = report.licensed.iter().map(|k| k.name()).collect();
            println!("licensed: {}", if names.is_empty() { "none".into() } else { names.join(", ") });
            for (kind, licensed, same, similar) in results {
                let mut line = format!("{kind}: {}", same.map(verdict).unwrap_or("n/a"));
                if licensed {
                    line.push_str(if similar == Some(true) {
                        " (licensed, similarity verified)"
                    } else {
                        " (licensed, similarity failed)"
                    });
                }
                println!("{line}");
            }
        }
    }
    if as_json {
        println!("{record}");
    }
    Ok(status)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn find_cousins(input: Option<&Path>, m: usize, require: CousinFlag, as_json: bool) -> Outcome {
    let g = read_graph(input)?;
    let pairs = enumerate_cousin_pairs(&g, m, require)?;
    let classifier = Classifier::new(&g);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (v1, v2) in pairs {
        let c = classifier.classify(&v1, &v2)?;
        let line = if as_json {
            json!({
                "v1": v1,
                "v2": v2,
                "relaxed": c.relaxed,
                "co_degree": c.co_degree,
                "cousins": c.cousins,
                "co_transmission": c.co_transmission,
            })
            .to_string()
        } else {
            let flags: Vec<&str> = [
                CousinFlag::Relaxed,
                CousinFlag::CoDegree,
                CousinFlag::Cousins,
                CousinFlag::CoTransmission,
            ]
            .into_iter()
            .filter(|&f| c.holds(f))
            .map(CousinFlag::name)
            .collect();
            format!("{} | {}  {}", join(&v1), join(&v2), flags.join(" "))
        };
        writeln!(out, "{line}").map_err(|e| Failure::Input(e.to_string()))?;
    }
    Ok(0)
}

fn run_census(input: Option<&Path>, opts: CensusOptions, as_json: bool) -> Outcome {
    let text = read_text(input)?;
    let result = census(&text, &opts)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut emit = |line: String| writeln!(out, "{line}").map_err(|e| Failure::Input(e.to_string()));
    for r in &result.records {
        if as_json {
            emit(serde_json::to_string(r).expect("record serializes"))?;
        } else {
            let explained = match r.explained_by_swap {
                Some(true) => "  swap: found",
                Some(false) => "  swap: not found",
                None => "",
            };
            emit(format!(
                "class {} ({} members): {}{explained}\n  key: {}",
                r.class_id,
                r.members.len(),
                r.members.join(" "),
                r.charpoly_key
            ))?;
        }
    }
    let s = &result.summary;
    if as_json {
        emit(json!({"summary": s}).to_string())?;
    } else {
        emit(format!(
            "# read {}, classified {}, classes {}, cospectral classes {}, skipped: {} oversize, {} disconnected, {} isolated vertex, {} parse errors",
            s.graphs_read,
            s.graphs_classified,
            s.classes,
            s.cospectral_classes,
            s.skipped_oversize,
            s.skipped_disconnected,
            s.skipped_isolated_vertex,
            s.parse_errors
        ))?;
    }
    for e in &s.errors {
        eprintln!("line {}: {}", e.line, e.message);
    }
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Charpoly { input, matrix, format } => charpoly(input.as_deref(), matrix, format),
        Command::Verify {
            first,
            second,
            matrix,
            similarity,
            plan,
            order,
            json,
        } => verify(&first, &second, &matrix, similarity, plan.as_deref(), order, json),
        Command::Construct { plan, emit, check, json } => construct(&plan, emit, check, json),
        Command::FindCousins { input, m, require, json } => find_cousins(input.as_deref(), m, require, json),
        Command::Census {
            input,
            matrix,
            max_n,
            explain,
            m,
            all,
            json,
        } => {
            let opts = CensusOptions {
                kind: matrix,
                max_n,
                explain_m: explain.then_some(m),
                keep_singletons: all,
            };
            run_census(input.as_deref(), opts, json)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("cospec: {e}");
            ExitCode::from(e.code())
        }
    }
}
