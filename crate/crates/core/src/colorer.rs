//! Complete backtracking search for proper edge-colorings without a rainbow
//! `P_k`.
//!
//! Edges are colored in a fixed order (decreasing endpoint-degree sum, ties
//! by canonical index). The color given to the i-th edge is at most one more
//! than the largest color used so far, so each class of colorings that
//! differ only by renaming colors is visited exactly once. With
//! `max_colors >= e(g)` the search covers every coloring up to renaming.
//! After each assignment the new edge is checked for a conflict at its
//! endpoints and for a rainbow `P_k` through it among the colored edges.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{normalize_colors, Color, ColoredGraph, Graph};
use crate::rainbow::PathFinder;

mod oracle;

pub use oracle::{oracle_classes, oracle_enumerate, ORACLE_EDGE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchStatus {
    Sat,
    Unsat,
    BudgetExceeded,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_colors_used: Color,
    /// Not serialized, so reports stay byte-identical between runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Normalized certificate, present iff the status is SAT.
    pub certificate: Option<ColoredGraph>,
    pub stats: SearchStats,
}

/// Per-instance limits. A search that hits one reports `BudgetExceeded`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

/// Result of a full enumeration pass.
#[derive(Debug, Clone)]
pub struct EnumerationSummary {
    /// True if the visitor asked to stop.
    pub stopped: bool,
    pub budget_exceeded: bool,
    pub stats: SearchStats,
}

pub fn find_coloring(g: &Graph, k: usize, max_colors: Color) -> Result<SearchOutcome> {
    find_coloring_within(g, k, max_colors, Budget::unlimited())
}

pub fn find_coloring_within(
    g: &Graph,
    k: usize,
    max_colors: Color,
    budget: Budget,
) -> Result<SearchOutcome> {
    let mut found = None;
    let summary = for_each_coloring(g, k, max_colors, budget, |colors| {
        found = Some(colors.to_vec());
        ControlFlow::Break(())
    })?;
    let mut stats = summary.stats;
    let (status, certificate) = match found {
        Some(colors) => {
            let cg = ColoredGraph::new(g.clone(), normalize_colors(&colors))
                .expect("search assigns every edge a positive color");
            stats.max_colors_used = cg.colors_used() as Color;
            (SearchStatus::Sat, Some(cg))
        }
        None if summary.budget_exceeded => (SearchStatus::BudgetExceeded, None),
        None => (SearchStatus::Unsat, None),
    };
    Ok(SearchOutcome {
        status,
        certificate,
        stats,
    })
}

/// Calls `visit` once per renaming class of valid colorings. The slice is
/// indexed like `g.edges()`; colors are in search order, not normalized.
pub fn for_each_coloring<F>(
    g: &Graph,
    k: usize,
    max_colors: Color,
    budget: Budget,
    visit: F,
) -> Result<EnumerationSummary>
where
    F: FnMut(&[Color]) -> ControlFlow<()>,
{
    if k < 2 {
        return Err(Error::InvalidPathLength { k, min: 2 });
    }
    if max_colors == 0 {
        return Err(Error::InvalidColorBound);
    }
    let m = g.edge_count();
    let mut search = Search {
        g,
        k,
        max_colors: max_colors.min(m.max(1) as Color),
        order: edge_order(g),
        colors: vec![0; m],
        finder: PathFinder::new(g.n(), max_colors.min(m.max(1) as Color)),
        budget,
        start: Instant::now(),
        nodes: 0,
        top_color: 0,
        visit,
    };
    let flow = search.dfs(0, 0);
    let stats = SearchStats {
        nodes: search.nodes,
        max_colors_used: search.top_color,
        wall_time: search.start.elapsed(),
    };
    Ok(EnumerationSummary {
        stopped: flow == Flow::Stop,
        budget_exceeded: flow == Flow::Budget,
        stats,
    })
}

/// Static edge order: decreasing sum of endpoint degrees, ties by
/// canonical edge index.
pub fn edge_order(g: &Graph) -> Vec<usize> {
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&i| {
        let (u, v) = g.edges()[i];
        (std::cmp::Reverse(deg[u] + deg[v]), i)
    });
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
    Budget,
}

struct Search<'g, F> {
    g: &'g Graph,
    k: usize,
    max_colors: Color,
    order: Vec<usize>,
    colors: Vec<Color>,
    finder: PathFinder,
    budget: Budget,
    start: Instant,
    nodes: u64,
    top_color: Color,
    visit: F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&[Color]) -> ControlFlow<()>,
{
    fn out_of_budget(&self) -> bool {
        if let Some(limit) = self.budget.max_nodes {
            if self.nodes > limit {
                return true;
            }
        }
        if let Some(limit) = self.budget.max_time {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed() > limit {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, pos: usize, max_used: Color) -> Flow {
        if pos == self.order.len() {
            return match (self.visit)(&self.colors) {
                ControlFlow::Break(()) => Flow::Stop,
                ControlFlow::Continue(()) => Flow::Continue,
            };
        }
        self.nodes += 1;
        if self.out_of_budget() {
            return Flow::Budget;
        }
        let e = self.order[pos];
        let (u, v) = self.g.edges()[e];
        let limit = (max_used + 1).min(self.max_colors);
        for c in 1..=limit {
            if self.clashes(u, c) || self.clashes(v, c) {
                continue;
            }
            self.colors[e] = c;
            self.top_color = self.top_color.max(c);
            let adj = self.g.adjacency();
            if !self.finder.find_through(adj, &self.colors, u, v, self.k) {
                let flow = self.dfs(pos + 1, max_used.max(c));
                if flow != Flow::Continue {
                    self.colors[e] = 0;
                    return flow;
                }
            }
            self.colors[e] = 0;
        }
        Flow::Continue
    }

    #[inline]
    fn clashes(&self, v: usize, c: Color) -> bool {
        self.g.incident(v).iter().any(|&(_, e)| self.colors[e] == c)
    }
}
