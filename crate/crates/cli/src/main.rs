use std::fs;
use std::io::{self, Read};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rainbow_planar::codec::{read_graph6_lines, read_graph_text, ColoredGraphDoc};
use rainbow_planar::colorer::{find_coloring_within, Budget, SearchStatus};
use rainbow_planar::constructions::{make, validate_construction, Construction, FAMILIES};
use rainbow_planar::extremal::{
    compute_extremal, refute_level, CandidateSource, ExtremalOptions, Filters, LevelVerdict,
    Refutation, RunConfig,
};
use rainbow_planar::lemmas::{refute, verify_lemma, LemmaId, LemmaVerdict};
use rainbow_planar::rainbow::find_rainbow_path;
use rainbow_planar::{Color, ColoredGraph, Graph};
use serde_json::{json, Value};

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

/// Rainbow path problems on planar graphs: detection, coloring search,
/// lemma checks, constructions and exhaustive extremal numbers.
#[derive(Debug, Parser)]
#[command(name = "rainbow-planar", version)]
struct Cli {
    /// Worker threads for `extremal` and `refute` [default: all cores]
    #[arg(long, global = true, env = "RAINBOW_PLANAR_JOBS")]
    jobs: Option<NonZeroUsize>,

    /// Node cap for each coloring search
    #[arg(long, global = true, env = "RAINBOW_PLANAR_BUDGET_NODES")]
    budget_nodes: Option<u64>,

    /// Wall-clock cap in seconds for each coloring search
    #[arg(long, global = true, env = "RAINBOW_PLANAR_BUDGET_SECONDS")]
    budget_seconds: Option<f64>,

    /// Candidates per work chunk
    #[arg(
        long,
        global = true,
        env = "RAINBOW_PLANAR_CHUNK_SIZE",
        default_value_t = 16
    )]
    chunk_size: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a colored graph for properness and a rainbow path
    Detect {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Search for a proper coloring with no rainbow path
    Color {
        #[arg(short)]
        k: usize,
        /// Palette size [default: number of edges]
        #[arg(long)]
        max_colors: Option<Color>,
        #[command(flatten)]
        input: Input,
    },
    /// Verify a coloring-scheme lemma by complete enumeration
    Lemma {
        /// bowtie-5.2, fish-5.4, medium-5.5, heavy-5.7 or all
        id: String,
    },
    /// Emit one of the explicit colored constructions
    Construct {
        /// k4-blocks, g5, g7, gn, double-wheel, k2-path, octahedron, icosahedron
        family: String,
        #[arg(short)]
        n: Option<usize>,
        /// Emit this many disjoint copies
        #[arg(long)]
        copies: Option<usize>,
        /// Path length for --validate [default: the construction's own]
        #[arg(short)]
        k: Option<usize>,
        /// Run the gate check and fail if it does not pass
        #[arg(long)]
        validate: bool,
    },
    /// Compute the largest edge count with a valid coloring
    Extremal {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        /// Skip the reduction filter (only used for k = 5)
        #[arg(long)]
        no_reduce: bool,
        /// Read candidates from a graph6 file
        #[arg(long, value_name = "FILE")]
        from_graph6: Option<PathBuf>,
        /// Exit 1 unless the value equals this
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Refute one level (n, m), or a single graph with --input
    Refute {
        #[arg(short)]
        k: usize,
        #[arg(short, required_unless_present_any = ["input", "graph6"])]
        n: Option<usize>,
        #[arg(short, required_unless_present_any = ["input", "graph6"])]
        m: Option<usize>,
        /// Keep graphs that the reduction would discard
        #[arg(long)]
        no_reduce: bool,
        #[arg(long, value_name = "FILE")]
        from_graph6: Option<PathBuf>,
        #[command(flatten)]
        input: OptionalInput,
    },
    /// Gate-check a colored graph: edges, properness, planarity, no rainbow path
    Validate {
        /// Path length [default: from the document's construction metadata]
        #[arg(short)]
        k: Option<usize>,
        /// Required edge count [default: from metadata, else the actual count]
        #[arg(long)]
        edges: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// JSON document or graph6 file, `-` for standard input
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Inline graph6 string
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct OptionalInput {
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long)]
    graph6: Option<String>,
}

struct Outcome {
    code: u8,
    report: Value,
    summary: String,
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Run = std::result::Result<Outcome, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let doc = json!({
                "tool": "rainbow-planar",
                "version": env!("CARGO_PKG_VERSION"),
                "command": command_name(&cli.command),
                "config": config(&cli),
                "report": out.report,
            });
            println!("{doc}");
            eprintln!("{}", out.summary);
            ExitCode::from(out.code)
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Detect { .. } => "detect",
        Command::Color { .. } => "color",
        Command::Lemma { .. } => "lemma",
        Command::Construct { .. } => "construct",
        Command::Extremal { .. } => "extremal",
        Command::Refute { .. } => "refute",
        Command::Validate { .. } => "validate",
    }
}

// Everything that can change a result. The worker count cannot, so it is
// left out and stdout stays identical across --jobs.
fn config(cli: &Cli) -> Value {
    let mut c = json!({
        "budget_nodes": cli.budget_nodes,
        "budget_seconds": cli.budget_seconds,
    });
    let args = match &cli.command {
        Command::Detect { k, input } => {
            json!({ "k": k, "input": input_label(input.input.as_deref(), input.graph6.as_deref()) })
        }
        Command::Color {
            k,
            max_colors,
            input,
        } => json!({
            "k": k,
            "max_colors": max_colors,
            "input": input_label(input.input.as_deref(), input.graph6.as_deref()),
        }),
        Command::Lemma { id } => json!({ "id": id }),
        Command::Construct {
            family,
            n,
            copies,
            k,
            validate,
        } => json!({
            "family": family, "n": n, "copies": copies, "k": k, "validate": validate,
        }),
        Command::Extremal {
            n,
            k,
            no_reduce,
            from_graph6,
            expect,
        } => json!({
            "n": n,
            "k": k,
            "reduce": reduce_flag(*k, *no_reduce),
            "from_graph6": from_graph6.as_ref().map(|p| p.display().to_string()),
            "expect": expect,
        }),
        Command::Refute {
            k,
            n,
            m,
            no_reduce,
            from_graph6,
            input,
        } => json!({
            "k": k,
            "n": n,
            "m": m,
            "reduce": reduce_flag(*k, *no_reduce),
            "from_graph6": from_graph6.as_ref().map(|p| p.display().to_string()),
            "input": input_label(input.input.as_deref(), input.graph6.as_deref()),
        }),
        Command::Validate { k, edges, input } => json!({
            "k": k,
            "edges": edges,
            "input": input_label(input.input.as_deref(), input.graph6.as_deref()),
        }),
    };
    if let (Some(c), Some(a)) = (c.as_object_mut(), args.as_object()) {
        c.extend(a.clone());
    }
    c
}

fn input_label(path: Option<&Path>, g6: Option<&str>) -> Value {
    match (path, g6) {
        (Some(p), _) => json!(p.display().to_string()),
        (_, Some(s)) => json!(format!("graph6:{s}")),
        _ => Value::Null,
    }
}

fn reduce_flag(k: usize, no_reduce: bool) -> bool {
    k == 5 && !no_reduce
}

fn budget(cli: &Cli) -> Budget {
    Budget {
        max_nodes: cli.budget_nodes,
        max_time: cli.budget_seconds.map(Duration::from_secs_f64),
    }
}

fn run_config(cli: &Cli) -> RunConfig {
    let jobs = cli
        .jobs
        .or_else(|| std::thread::available_parallelism().ok())
        .map_or(1, NonZeroUsize::get);
    RunConfig {
        jobs,
        budget: budget(cli),
        chunk_size: cli.chunk_size.max(1),
    }
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn input_text(path: Option<&Path>, g6: Option<&str>) -> std::result::Result<String, Failure> {
    match (path, g6) {
        (Some(p), _) => read_text(p),
        (_, Some(s)) => Ok(s.to_string()),
        _ => Err(Failure("no input given".into())),
    }
}

/// A colored-graph document, either bare or inside one of our own reports.
fn find_doc(value: &Value) -> Option<&Value> {
    if value.get("edges").is_some() {
        return Some(value);
    }
    let report = value.get("report")?;
    ["graph", "certificate", "achiever"]
        .iter()
        .find_map(|key| report.get(*key).filter(|v| !v.is_null()))
}

fn read_colored(text: &str) -> std::result::Result<(ColoredGraph, Option<Value>), Failure> {
    let value: Value = serde_json::from_str(text).map_err(|e| Failure(format!("bad JSON: {e}")))?;
    let doc = find_doc(&value).ok_or_else(|| Failure("no colored graph in document".into()))?;
    let doc = rainbow_planar::codec::parse_doc(&doc.to_string())?;
    Ok((doc.to_colored()?, doc.meta))
}

fn read_graph(text: &str) -> std::result::Result<Graph, Failure> {
    if let Ok(value) = serde_json::from_str::<Value>(text) {
        if let Some(doc) = find_doc(&value) {
            return Ok(read_graph_text(&doc.to_string())?);
        }
    }
    Ok(read_graph_text(text)?)
}

fn doc(cg: &ColoredGraph, meta: Option<Value>) -> Value {
    serde_json::to_value(ColoredGraphDoc::from_colored(cg, meta)).expect("document serializes")
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Detect { k, input } => detect(*k, input),
        Command::Color {
            k,
            max_colors,
            input,
        } => color(cli, *k, *max_colors, input),
        Command::Lemma { id } => lemma(id),
        Command::Construct {
            family,
            n,
            copies,
            k,
            validate,
        } => construct(family, *n, *copies, *k, *validate),
        Command::Extremal {
            n,
            k,
            no_reduce,
            from_graph6,
            expect,
        } => extremal(
            cli,
            *n,
            *k,
            reduce_flag(*k, *no_reduce),
            from_graph6.as_deref(),
            *expect,
        ),
        Command::Refute {
            k,
            n,
            m,
            no_reduce,
            from_graph6,
            input,
        } => {
            if input.input.is_some() || input.graph6.is_some() {
                refute_one(*k, input)
            } else {
                let (n, m) = (n.expect("required by clap"), m.expect("required by clap"));
                refute_many(
                    cli,
                    n,
                    m,
                    *k,
                    reduce_flag(*k, *no_reduce),
                    from_graph6.as_deref(),
                )
            }
        }
        Command::Validate { k, edges, input } => validate(*k, *edges, input),
    }
}

fn detect(k: usize, input: &Input) -> Run {
    let text = input_text(input.input.as_deref(), input.graph6.as_deref())?;
    let (cg, _) = read_colored(&text)?;
    let proper = cg.is_proper();
    let witness = find_rainbow_path(&cg, k)?;
    let ok = proper && witness.is_none();
    let summary = match (&witness, proper) {
        (Some(w), _) => format!(
            "rainbow P{k}: {}",
            w.vertices
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("-")
        ),
        (None, true) => format!("no rainbow P{k}"),
        (None, false) => format!("no rainbow P{k}, but the coloring is not proper"),
    };
    Ok(Outcome {
        code: if ok { PASS } else { FAIL },
        report: json!({
            "k": k,
            "proper": proper,
            "rainbow_free": witness.is_none(),
            "witness": witness,
            "verdict": if ok { "PASS" } else { "FAIL" },
        }),
        summary,
    })
}

fn color(cli: &Cli, k: usize, max_colors: Option<Color>, input: &Input) -> Run {
    let text = input_text(input.input.as_deref(), input.graph6.as_deref())?;
    let g = read_graph(&text)?;
    let palette = max_colors.unwrap_or(g.edge_count().max(1) as Color);
    let out = find_coloring_within(&g, k, palette, budget(cli))?;
    let (code, summary) = match out.status {
        SearchStatus::Sat => (PASS, format!("SAT: {} colors", out.stats.max_colors_used)),
        SearchStatus::Unsat => (FAIL, format!("UNSAT with at most {palette} colors")),
        SearchStatus::BudgetExceeded => (BUDGET, "budget exceeded".to_string()),
    };
    Ok(Outcome {
        code,
        report: json!({
            "k": k,
            "max_colors": palette,
            "status": out.status,
            "certificate": out.certificate.as_ref().map(|c| doc(c, None)),
            "stats": out.stats,
        }),
        summary: format!("{summary} ({} nodes)", out.stats.nodes),
    })
}

fn lemma(id: &str) -> Run {
    let ids: Vec<LemmaId> = if id == "all" {
        LemmaId::ALL.to_vec()
    } else {
        vec![id.parse()?]
    };
    let mut reports = Vec::new();
    let mut lines = Vec::new();
    let mut all_pass = true;
    for id in ids {
        let r = verify_lemma(id)?;
        let pass = r.verdict == LemmaVerdict::Pass;
        all_pass &= pass;
        lines.push(format!(
            "{id}: {} ({} classes)",
            if pass { "PASS" } else { "FAIL" },
            r.class_count
        ));
        reports.push(serde_json::to_value(&r)?);
    }
    let report = if reports.len() == 1 {
        reports.pop().unwrap()
    } else {
        json!({ "lemmas": reports })
    };
    Ok(Outcome {
        code: if all_pass { PASS } else { FAIL },
        report,
        summary: lines.join("\n"),
    })
}

fn construct(
    family: &str,
    n: Option<usize>,
    copies: Option<usize>,
    k: Option<usize>,
    validate: bool,
) -> Run {
    if !FAMILIES.contains(&family) {
        return Err(Failure(format!(
            "unknown family {family}; expected one of {}",
            FAMILIES.join(", ")
        )));
    }
    let spec = Construction::from_family(family, n, copies)?;
    let cg = make(&spec)?;
    let meta = json!({ "construction": spec });
    let k = k.unwrap_or(spec.path_length());
    let mut summary = format!(
        "{family}: {} vertices, {} edges, {} colors",
        cg.graph().n(),
        cg.graph().edge_count(),
        cg.colors_used()
    );
    let mut code = PASS;
    let validation = if validate {
        let r = validate_construction(&cg, k, spec.expected_edges())?;
        let colors_ok = spec.expected_colors().is_none_or(|c| c == r.colors_used);
        if !(r.pass && colors_ok) {
            code = FAIL;
        }
        summary.push_str(if code == PASS {
            "; gate PASS"
        } else {
            "; gate FAIL"
        });
        Some(json!({ "gate": r, "expected_colors": spec.expected_colors(), "pass": code == PASS }))
    } else {
        None
    };
    Ok(Outcome {
        code,
        report: json!({ "graph": doc(&cg, Some(meta)), "validation": validation }),
        summary,
    })
}

fn source(from_graph6: Option<&Path>) -> std::result::Result<CandidateSource, Failure> {
    Ok(match from_graph6 {
        None => CandidateSource::BuiltIn,
        Some(path) => CandidateSource::Graph6File {
            label: path.display().to_string(),
            graphs: read_graph6_lines(&read_text(path)?)?,
        },
    })
}

fn extremal(
    cli: &Cli,
    n: usize,
    k: usize,
    reduce: bool,
    from_graph6: Option<&Path>,
    expect: Option<usize>,
) -> Run {
    let opts = ExtremalOptions {
        reduce,
        source: source(from_graph6)?,
        run: run_config(cli),
    };
    let report = compute_extremal(n, k, &opts)?;
    let (code, summary) = match (report.value, expect) {
        (None, _) => (
            BUDGET,
            format!("ex*(n={n}, P{k}) undetermined: budget exceeded"),
        ),
        (Some(v), Some(e)) if v != e => (FAIL, format!("ex*(n={n}, P{k}) = {v}, expected {e}")),
        (Some(v), _) => (PASS, format!("ex*(n={n}, P{k}) = {v}")),
    };
    let refuted = match &report.refutation {
        Some(Refutation::Level(l)) => format!(
            "; level m = {} refuted over {} candidates ({} planar, {} UNSAT)",
            l.m, l.counts.candidates, l.counts.planar, l.unsat
        ),
        Some(Refutation::Vacuous { m, .. }) => format!("; m = {m} is above the planar maximum"),
        None => String::new(),
    };
    Ok(Outcome {
        code,
        report: serde_json::to_value(&report)?,
        summary: format!("{summary}{refuted} [{}]", report.provenance),
    })
}

fn refute_many(
    cli: &Cli,
    n: usize,
    m: usize,
    k: usize,
    reduce: bool,
    from_graph6: Option<&Path>,
) -> Run {
    let filters = if reduce {
        Filters::reduced_planar()
    } else {
        Filters::planar_only()
    };
    let report = refute_level(n, m, k, filters, &source(from_graph6)?, &run_config(cli))?;
    let (code, verdict) = match report.verdict {
        LevelVerdict::Pass => (PASS, "PASS"),
        LevelVerdict::Fail => (FAIL, "FAIL"),
        LevelVerdict::Inconclusive => (BUDGET, "INCONCLUSIVE"),
    };
    let summary = format!(
        "level ({n}, {m}) for P{k}: {verdict}; {} candidates, {} reduced, {} planar; {} UNSAT, {} SAT, {} over budget",
        report.counts.candidates,
        report.counts.reduced,
        report.counts.planar,
        report.unsat,
        report.sat,
        report.budget_exceeded
    );
    Ok(Outcome {
        code,
        report: serde_json::to_value(&report)?,
        summary,
    })
}

fn refute_one(k: usize, input: &OptionalInput) -> Run {
    let text = input_text(input.input.as_deref(), input.graph6.as_deref())?;
    let g = read_graph(&text)?;
    let refuted = refute(&g, k)?;
    Ok(Outcome {
        code: if refuted { PASS } else { FAIL },
        report: json!({
            "k": k,
            "n": g.n(),
            "m": g.edge_count(),
            "refuted": refuted,
        }),
        summary: if refuted {
            format!("every proper coloring has a rainbow P{k}")
        } else {
            format!("some proper coloring avoids a rainbow P{k}")
        },
    })
}

fn validate(k: Option<usize>, edges: Option<usize>, input: &Input) -> Run {
    let text = input_text(input.input.as_deref(), input.graph6.as_deref())?;
    let (cg, meta) = read_colored(&text)?;
    let spec: Option<Construction> = meta
        .as_ref()
        .and_then(|m| m.get("construction"))
        .and_then(|c| serde_json::from_value(c.clone()).ok());
    let k = k
        .or(spec.as_ref().map(Construction::path_length))
        .ok_or_else(|| {
            Failure("-k is required when the document has no construction metadata".into())
        })?;
    let expected = edges
        .or(spec.as_ref().map(Construction::expected_edges))
        .unwrap_or(cg.graph().edge_count());
    let r = validate_construction(&cg, k, expected)?;
    let summary = format!(
        "{}: {} edges (expected {}), proper {}, planar {}, rainbow-P{k}-free {}, {} colors",
        if r.pass { "PASS" } else { "FAIL" },
        r.edge_count,
        r.expected_edges,
        r.proper,
        r.planar,
        r.rainbow_free,
        r.colors_used
    );
    Ok(Outcome {
        code: if r.pass { PASS } else { FAIL },
        report: serde_json::to_value(&r)?,
        summary,
    })
}
