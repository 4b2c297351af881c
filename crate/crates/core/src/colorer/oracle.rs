//! Brute-force reference enumerator.
//!
//! Walks every restricted-growth color string over the canonical edge order
//! (one string per renaming class), then checks properness pair by pair and
//! looks for a rainbow `P_k` by listing every simple path of k vertices.
//! Nothing here shares code with the backtracking search or the rainbow
//! detector; it exists to cross-check them.

use crate::error::{Error, Result};
use crate::graph::{Color, Graph};

/// Explosion guard: Bell(12) is about four million strings.
pub const ORACLE_EDGE_LIMIT: usize = 12;

/// Number of renaming classes of proper colorings with no rainbow `P_k`.
pub fn oracle_enumerate(g: &Graph, k: usize) -> Result<u64> {
    let mut count = 0;
    walk(g, k, &mut |_| count += 1)?;
    Ok(count)
}

/// The valid colorings themselves, each in first-occurrence normal form,
/// in lexicographic order.
pub fn oracle_classes(g: &Graph, k: usize) -> Result<Vec<Vec<Color>>> {
    let mut out = Vec::new();
    walk(g, k, &mut |c| out.push(c.to_vec()))?;
    Ok(out)
}

fn walk(g: &Graph, k: usize, emit: &mut dyn FnMut(&[Color])) -> Result<()> {
    let m = g.edge_count();
    if m > ORACLE_EDGE_LIMIT {
        return Err(Error::OracleGuard {
            edges: m,
            limit: ORACLE_EDGE_LIMIT,
        });
    }
    if k < 2 {
        return Err(Error::InvalidPathLength { k, min: 2 });
    }
    let paths = all_paths(g, k);
    let mut colors = vec![0; m];
    rgs(g, &paths, 0, 0, &mut colors, emit);
    Ok(())
}

fn rgs(
    g: &Graph,
    paths: &[Vec<usize>],
    i: usize,
    top: Color,
    colors: &mut Vec<Color>,
    emit: &mut dyn FnMut(&[Color]),
) {
    if i == colors.len() {
        if proper(g, colors) && !paths.iter().any(|p| rainbow(p, colors)) {
            emit(colors);
        }
        return;
    }
    for c in 1..=top + 1 {
        colors[i] = c;
        rgs(g, paths, i + 1, top.max(c), colors, emit);
    }
}

fn proper(g: &Graph, colors: &[Color]) -> bool {
    let edges = g.edges();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (p, q) = (edges[a], edges[b]);
            let touch = p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1;
            if touch && colors[a] == colors[b] {
                return false;
            }
        }
    }
    true
}

fn rainbow(path_edges: &[usize], colors: &[Color]) -> bool {
    for a in 0..path_edges.len() {
        for b in a + 1..path_edges.len() {
            if colors[path_edges[a]] == colors[path_edges[b]] {
                return false;
            }
        }
    }
    true
}

// every simple path on k vertices, as its list of edge indices
fn all_paths(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seq = Vec::new();
    for s in 0..g.n() {
        seq.push(s);
        grow(g, k, &mut seq, &mut out);
        seq.pop();
    }
    out
}

fn grow(g: &Graph, k: usize, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if seq.len() == k {
        let edges = seq
            .windows(2)
            .map(|w| g.edge_index(w[0], w[1]).unwrap())
            .collect();
        out.push(edges);
        return;
    }
    let last = *seq.last().unwrap();
    for w in 0..g.n() {
        if g.has_edge(last, w) && !seq.contains(&w) {
            seq.push(w);
            grow(g, k, seq, out);
            seq.pop();
        }
    }
}
