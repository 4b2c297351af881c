//! Computing the largest edge count of an n-vertex planar graph that admits
//! a proper edge-coloring without a rainbow `P_k`.
//!
//! Candidates for a level (n, m) come from the built-in enumerator or from a
//! graph6 file. They are filtered (reduction, Euler bound, planarity) and
//! each survivor goes to the colorer with `max_colors = m`. Work is split
//! into fixed chunks by candidate index; results are merged in index order,
//! so reports do not depend on the worker count.
//!
//! For k = 5 the reduction filter can be switched on. It discards graphs
//! with a vertex of degree at most one or an edge between two degree-2
//! vertices. Deleting such a vertex (or pair) from a colorable planar graph
//! with more than floor(3n/2) edges leaves a colorable planar graph with
//! more than floor(3n'/2) edges on fewer vertices: one vertex costs at most
//! one edge while the bound drops by at least one, a pair costs at most
//! three edges while the bound drops by exactly three. So if every reduced
//! planar graph at m = floor(3n'/2) + 1 is refuted for all n' <= n, no planar
//! graph on n vertices beats floor(3n/2). The chain of smaller levels is
//! always run and reported alongside the main level.

mod canon;
mod enumerate;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub use canon::{canonical_form, canonical_graph, canonical_labeling, CanonicalForm};
pub use enumerate::{GraphCatalog, BUILTIN_MAX_N};

use crate::codec::{encode_graph6, ColoredGraphDoc};
use crate::colorer::{find_coloring_within, Budget, SearchStatus};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph};
use crate::planarity::{exceeds_euler_bound, planar};

/// Minimum degree at least two and no edge joining two degree-2 vertices.
pub fn is_reduced(g: &Graph) -> bool {
    let deg = g.degrees();
    deg.iter().all(|&d| d >= 2) && g.edges().iter().all(|&(u, v)| deg[u] != 2 || deg[v] != 2)
}

/// The k = 5 bound, floor(3n/2).
pub fn path5_bound(n: usize) -> usize {
    3 * n / 2
}

/// Most edges a simple planar graph on `n` vertices can have.
pub fn max_planar_edges(n: usize) -> usize {
    if n >= 3 {
        3 * n - 6
    } else {
        n * n.saturating_sub(1) / 2
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Filters {
    pub reduced: bool,
    pub planar: bool,
}

impl Filters {
    pub fn planar_only() -> Self {
        Filters {
            reduced: false,
            planar: true,
        }
    }

    pub fn reduced_planar() -> Self {
        Filters {
            reduced: true,
            planar: true,
        }
    }
}

/// Where candidate graphs come from.
#[derive(Debug, Clone, Default)]
pub enum CandidateSource {
    #[default]
    BuiltIn,
    /// Graphs read from a graph6 file. Levels whose vertex count appears in
    /// the file use it; other vertex counts fall back to the built-in
    /// enumerator.
    Graph6File { label: String, graphs: Vec<Graph> },
}

impl CandidateSource {
    fn covers(&self, n: usize) -> bool {
        match self {
            CandidateSource::BuiltIn => false,
            CandidateSource::Graph6File { graphs, .. } => graphs.iter().any(|g| g.n() == n),
        }
    }
}

/// Candidate counts as they pass the filters in cost order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct FunnelCounts {
    pub candidates: usize,
    pub reduced: usize,
    pub planar: usize,
}

/// The graphs of one level (n, m) that survived the requested filters.
#[derive(Debug, Clone)]
pub struct CandidateStream {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub filters: Filters,
    pub counts: FunnelCounts,
    graphs: Vec<Graph>,
}

impl CandidateStream {
    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }
}

impl<'a> IntoIterator for &'a CandidateStream {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

pub fn enumerate_candidates(
    n: usize,
    m: usize,
    filters: Filters,
    source: &CandidateSource,
    catalog: &mut GraphCatalog,
) -> Result<CandidateStream> {
    let (label, raw): (String, Vec<Graph>) = match source {
        CandidateSource::Graph6File { label, graphs } if source.covers(n) => {
            (format!("graph6:{label}"), dedup_file_level(graphs, n, m)?)
        }
        _ => ("built-in".to_string(), catalog.level(n, m)?.to_vec()),
    };
    let mut counts = FunnelCounts {
        candidates: raw.len(),
        ..Default::default()
    };
    let after_reduction: Vec<Graph> = raw
        .into_iter()
        .filter(|g| !filters.reduced || is_reduced(g))
        .collect();
    counts.reduced = after_reduction.len();
    let survivors: Vec<Graph> = after_reduction
        .into_iter()
        .filter(|g| !filters.planar || (!exceeds_euler_bound(g.n(), g.edge_count()) && planar(g)))
        .collect();
    counts.planar = survivors.len();
    Ok(CandidateStream {
        source: label,
        n,
        m,
        filters,
        counts,
        graphs: survivors,
    })
}

// file graphs of one level, canonically relabeled, duplicates dropped
fn dedup_file_level(graphs: &[Graph], n: usize, m: usize) -> Result<Vec<Graph>> {
    let mut unique = BTreeMap::new();
    for g in graphs.iter().filter(|g| g.n() == n && g.edge_count() == m) {
        let (labeling, form) = canonical_labeling(g)?;
        unique.entry(form).or_insert(g.relabel(&labeling)?);
    }
    Ok(unique.into_values().collect())
}

/// Worker count, per-instance budget and chunking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub jobs: usize,
    pub budget: Budget,
    pub chunk_size: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            jobs: 1,
            budget: Budget::unlimited(),
            chunk_size: 16,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LevelVerdict {
    /// Every surviving candidate is UNSAT.
    Pass,
    /// Some candidate admits a valid coloring.
    Fail,
    /// No SAT found but some search ran out of budget.
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelWitness {
    pub index: usize,
    pub graph6: String,
    pub certificate: ColoredGraphDoc,
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub source: String,
    pub filters: Filters,
    #[serde(flatten)]
    pub counts: FunnelCounts,
    pub unsat: usize,
    pub sat: usize,
    pub budget_exceeded: usize,
    pub nodes: u64,
    pub verdict: LevelVerdict,
    pub first_sat: Option<LevelWitness>,
    /// SHA-256 over one `index graph6 STATUS` line per candidate.
    pub digest: String,
}

struct Evaluated {
    status: SearchStatus,
    nodes: u64,
    certificate: Option<ColoredGraph>,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))
}

fn evaluate(g: &Graph, k: usize, budget: Budget) -> Result<Evaluated> {
    let max_colors = g.edge_count().max(1) as Color;
    let out = find_coloring_within(g, k, max_colors, budget)?;
    Ok(Evaluated {
        status: out.status,
        nodes: out.stats.nodes,
        certificate: out.certificate,
    })
}

/// Runs the colorer on every candidate of the level.
pub fn refute_stream(stream: &CandidateStream, k: usize, cfg: &RunConfig) -> Result<LevelReport> {
    let graphs = stream.graphs();
    let chunk = cfg.chunk_size.max(1);
    let results: Vec<Result<Vec<Evaluated>>> = pool(cfg.jobs)?.install(|| {
        graphs
            .par_chunks(chunk)
            .map(|part| part.iter().map(|g| evaluate(g, k, cfg.budget)).collect())
            .collect()
    });
    let mut outcomes = Vec::with_capacity(graphs.len());
    for r in results {
        outcomes.extend(r?);
    }
    level_report(stream, k, &outcomes)
}

fn level_report(stream: &CandidateStream, k: usize, outcomes: &[Evaluated]) -> Result<LevelReport> {
    let mut hasher = Sha256::new();
    let (mut unsat, mut sat, mut budget, mut nodes) = (0, 0, 0, 0);
    let mut first_sat = None;
    for (i, (g, o)) in stream.graphs().iter().zip(outcomes).enumerate() {
        let g6 = encode_graph6(g)?;
        let tag = match o.status {
            SearchStatus::Sat => "SAT",
            SearchStatus::Unsat => "UNSAT",
            SearchStatus::BudgetExceeded => "BUDGET_EXCEEDED",
        };
        hasher.update(format!("{i} {g6} {tag}\n").as_bytes());
        nodes += o.nodes;
        match o.status {
            SearchStatus::Unsat => unsat += 1,
            SearchStatus::BudgetExceeded => budget += 1,
            SearchStatus::Sat => {
                sat += 1;
                if first_sat.is_none() {
                    let cert = o.certificate.as_ref().expect("SAT carries a certificate");
                    first_sat = Some(LevelWitness {
                        index: i,
                        graph6: g6,
                        certificate: ColoredGraphDoc::from_colored(cert, None),
                    });
                }
            }
        }
    }
    let verdict = if sat > 0 {
        LevelVerdict::Fail
    } else if budget > 0 {
        LevelVerdict::Inconclusive
    } else {
        LevelVerdict::Pass
    };
    Ok(LevelReport {
        n: stream.n,
        m: stream.m,
        k,
        source: stream.source.clone(),
        filters: stream.filters,
        counts: stream.counts,
        unsat,
        sat,
        budget_exceeded: budget,
        nodes,
        verdict,
        first_sat,
        digest: hex(&hasher.finalize()),
    })
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Refutes one level: PASS iff every candidate surviving `filters` is UNSAT
/// with `max_colors = m`.
pub fn refute_level(
    n: usize,
    m: usize,
    k: usize,
    filters: Filters,
    source: &CandidateSource,
    cfg: &RunConfig,
) -> Result<LevelReport> {
    let mut catalog = GraphCatalog::new();
    let stream = enumerate_candidates(n, m, filters, source, &mut catalog)?;
    refute_stream(&stream, k, cfg)
}

/// Lowest-index SAT candidate of a stream, if any. Searching stops early,
/// but chunks before the winner are always fully examined, so the answer
/// does not depend on scheduling.
pub fn first_sat(
    stream: &CandidateStream,
    k: usize,
    cfg: &RunConfig,
) -> Result<(Option<(usize, ColoredGraph)>, usize)> {
    let graphs = stream.graphs();
    let chunk = cfg.chunk_size.max(1);
    let best = AtomicUsize::new(usize::MAX);
    type ChunkResult = Result<(Option<(usize, ColoredGraph)>, usize)>;
    let results: Vec<ChunkResult> = pool(cfg.jobs)?.install(|| {
        graphs
            .par_chunks(chunk)
            .enumerate()
            .map(|(ci, part)| {
                let start = ci * chunk;
                let mut budget_hits = 0;
                if start > best.load(Ordering::Relaxed) {
                    return Ok((None, 0));
                }
                for (off, g) in part.iter().enumerate() {
                    let o = evaluate(g, k, cfg.budget)?;
                    match o.status {
                        SearchStatus::Sat => {
                            best.fetch_min(start + off, Ordering::Relaxed);
                            return Ok((Some((start + off, o.certificate.unwrap())), budget_hits));
                        }
                        SearchStatus::BudgetExceeded => budget_hits += 1,
                        SearchStatus::Unsat => {}
                    }
                }
                Ok((None, budget_hits))
            })
            .collect()
    });
    let mut budget_hits = 0;
    for r in results {
        let (found, hits) = r?;
        budget_hits += hits;
        if let Some(hit) = found {
            return Ok((Some(hit), budget_hits));
        }
    }
    Ok((None, budget_hits))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Reduced candidates at floor(3n'/2) + 1 for every n' <= n.
    ReducedChain,
    /// Every planar candidate, level by level from m = 0.
    Exhaustive,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Refutation {
    /// `m` exceeds the planar edge maximum, nothing to refute.
    Vacuous {
        m: usize,
        max_planar_edges: usize,
    },
    Level(Box<LevelReport>),
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    /// None when a budget stopped the computation.
    pub value: Option<usize>,
    pub method: Method,
    pub provenance: String,
    pub achiever: Option<ColoredGraphDoc>,
    pub achiever_graph6: Option<String>,
    pub refutation: Option<Refutation>,
    /// Levels for smaller vertex counts that the reduced chain relies on.
    pub chain: Vec<Refutation>,
    pub fallback: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct ExtremalOptions {
    /// Use the reduction filter and the floor(3n/2) chain. Only k = 5.
    pub reduce: bool,
    pub source: CandidateSource,
    pub run: RunConfig,
}

pub fn compute_extremal(n: usize, k: usize, opts: &ExtremalOptions) -> Result<ExtremalReport> {
    if k < 2 {
        return Err(Error::InvalidPathLength { k, min: 2 });
    }
    if opts.reduce && k != 5 {
        return Err(Error::Construction(
            "the reduction filter is only sound for k = 5".into(),
        ));
    }
    let mut catalog = GraphCatalog::new();
    if opts.reduce {
        match reduced_chain(n, k, opts, &mut catalog)? {
            Ok(report) => return Ok(report),
            Err(reason) => {
                let mut report = exhaustive(n, k, opts, &mut catalog)?;
                report.fallback = Some(reason);
                return Ok(report);
            }
        }
    }
    exhaustive(n, k, opts, &mut catalog)
}

fn provenance(n: usize, source: &CandidateSource) -> String {
    match source {
        CandidateSource::Graph6File { label, .. } if source.covers(n) => format!("graph6:{label}"),
        _ => "built-in".into(),
    }
}

fn achiever_fields(cg: &ColoredGraph) -> Result<(Option<ColoredGraphDoc>, Option<String>)> {
    Ok((
        Some(ColoredGraphDoc::from_colored(cg, None)),
        Some(encode_graph6(cg.graph())?),
    ))
}

// Ok(Err(reason)) asks the caller to fall back to the exhaustive method.
fn reduced_chain(
    n: usize,
    k: usize,
    opts: &ExtremalOptions,
    catalog: &mut GraphCatalog,
) -> Result<std::result::Result<ExtremalReport, String>> {
    let mut chain = Vec::new();
    for size in 1..=n {
        let m = path5_bound(size) + 1;
        let cap = max_planar_edges(size);
        let entry = if m > cap {
            Refutation::Vacuous {
                m,
                max_planar_edges: cap,
            }
        } else {
            let stream =
                enumerate_candidates(size, m, Filters::reduced_planar(), &opts.source, catalog)?;
            let level = refute_stream(&stream, k, &opts.run)?;
            match level.verdict {
                LevelVerdict::Pass => {}
                LevelVerdict::Fail => {
                    return Ok(Err(format!(
                        "reduced level ({size}, {m}) has a colorable candidate"
                    )))
                }
                LevelVerdict::Inconclusive => {
                    let mut report = empty_report(n, k, Method::ReducedChain, opts);
                    chain.push(Refutation::Level(Box::new(level)));
                    report.chain = chain;
                    return Ok(Ok(report));
                }
            }
            Refutation::Level(Box::new(level))
        };
        chain.push(entry);
    }
    let refutation = chain.pop();

    // the bound holds; find the largest colorable level at or below it
    let top = path5_bound(n).min(max_planar_edges(n));
    let mut report = empty_report(n, k, Method::ReducedChain, opts);
    report.chain = chain;
    report.refutation = refutation;
    for m in (0..=top).rev() {
        let stream = enumerate_candidates(n, m, Filters::planar_only(), &opts.source, catalog)?;
        let (hit, budget_hits) = first_sat(&stream, k, &opts.run)?;
        match hit {
            Some((_, cg)) => {
                report.value = Some(m);
                (report.achiever, report.achiever_graph6) = achiever_fields(&cg)?;
                return Ok(Ok(report));
            }
            None if budget_hits > 0 => return Ok(Ok(report)),
            None => {}
        }
    }
    unreachable!("the edgeless graph is always colorable")
}

fn empty_report(n: usize, k: usize, method: Method, opts: &ExtremalOptions) -> ExtremalReport {
    ExtremalReport {
        n,
        k,
        value: None,
        method,
        provenance: provenance(n, &opts.source),
        achiever: None,
        achiever_graph6: None,
        refutation: None,
        chain: Vec::new(),
        fallback: None,
    }
}

fn exhaustive(
    n: usize,
    k: usize,
    opts: &ExtremalOptions,
    catalog: &mut GraphCatalog,
) -> Result<ExtremalReport> {
    let mut report = empty_report(n, k, Method::Exhaustive, opts);
    let cap = max_planar_edges(n);
    for m in 0..=cap {
        let stream = enumerate_candidates(n, m, Filters::planar_only(), &opts.source, catalog)?;
        let (hit, budget_hits) = first_sat(&stream, k, &opts.run)?;
        if let Some((_, cg)) = hit {
            report.value = Some(m);
            (report.achiever, report.achiever_graph6) = achiever_fields(&cg)?;
            continue;
        }
        if budget_hits > 0 {
            report.value = None;
            return Ok(report);
        }
        // nothing colorable here, so nothing above either; record the level
        report.refutation = Some(Refutation::Level(Box::new(refute_stream(
            &stream, k, &opts.run,
        )?)));
        return Ok(report);
    }
    report.refutation = Some(Refutation::Vacuous {
        m: cap + 1,
        max_planar_edges: cap,
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_examples() {
        assert!(is_reduced(&Graph::complete(4)));
        assert!(!is_reduced(&Graph::path(3)));
        assert!(!is_reduced(&Graph::cycle(4)));
    }

    #[test]
    fn candidates_for_k4() {
        let mut cat = GraphCatalog::new();
        let none = Filters::default();
        let s = enumerate_candidates(4, 6, none, &CandidateSource::BuiltIn, &mut cat).unwrap();
        assert_eq!(s.graphs(), &[Graph::complete(4)]);
        let s = enumerate_candidates(4, 7, none, &CandidateSource::BuiltIn, &mut cat).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn vacuous_level_passes() {
        let r = refute_level(
            4,
            7,
            5,
            Filters::reduced_planar(),
            &CandidateSource::BuiltIn,
            &RunConfig::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, LevelVerdict::Pass);
        assert_eq!(r.counts.candidates, 0);
    }

    #[test]
    fn file_source_dedups_and_falls_back() {
        let k4 = Graph::complete(4);
        let relabeled = k4.relabel(&[3, 2, 1, 0]).unwrap();
        let src = CandidateSource::Graph6File {
            label: "mem".into(),
            graphs: vec![k4.clone(), relabeled, Graph::cycle(5)],
        };
        let mut cat = GraphCatalog::new();
        let s = enumerate_candidates(4, 6, Filters::default(), &src, &mut cat).unwrap();
        assert_eq!(s.counts.candidates, 1);
        assert_eq!(s.source, "graph6:mem");
        let s = enumerate_candidates(3, 3, Filters::default(), &src, &mut cat).unwrap();
        assert_eq!(s.source, "built-in");
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn k5_rejects_reduction_for_other_k() {
        let opts = ExtremalOptions {
            reduce: true,
            ..Default::default()
        };
        assert!(compute_extremal(4, 4, &opts).is_err());
    }
}
