//! Canonical labeling by individualization and refinement.
//!
//! Cells of an ordered partition are split by neighbor counts until the
//! partition is equitable; a non-discrete partition branches on each vertex
//! of its first non-singleton cell. Every discrete leaf gives a relabeled
//! adjacency matrix and the smallest one is the canonical form. Branches on
//! a twin of an already explored vertex are skipped, since swapping twins is
//! an automorphism that fixes every other cell.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Adjacency rows after canonical relabeling. Two graphs are isomorphic iff
/// their forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

/// `labeling[v]` is the canonical id of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<(Vec<Vertex>, CanonicalForm)> {
    let n = g.n();
    if n > 64 {
        return Err(Error::CanonTooLarge(n));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |acc, w| acc | 1 << w))
        .collect();
    let mut search = Canon {
        adj: &adj,
        best: None,
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    if n == 0 {
        cells.clear();
    }
    search.explore(cells);
    let (rows, labeling) = search.best.unwrap_or_default();
    Ok((labeling, CanonicalForm { n, rows }))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.1)
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (labeling, _) = canonical_labeling(g)?;
    g.relabel(&labeling)
}

struct Canon<'a> {
    adj: &'a [u64],
    best: Option<(Vec<u64>, Vec<Vertex>)>,
}

impl Canon<'_> {
    fn explore(&mut self, mut cells: Vec<Vec<Vertex>>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<_> = cell.iter().copied().filter(|&w| w != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            self.explore(next);
        }
    }

    fn twins(&self, a: Vertex, b: Vertex) -> bool {
        let mask = !(1u64 << a | 1u64 << b);
        self.adj[a] & mask == self.adj[b] & mask
    }

    // split cells by neighbor counts into earlier cells until stable
    fn refine(&self, cells: &mut Vec<Vec<Vertex>>) {
        let mut changed = true;
        while changed {
            changed = false;
            'splitters: for s in 0..cells.len() {
                let splitter = cells[s].iter().fold(0u64, |acc, &v| acc | 1 << v);
                for i in 0..cells.len() {
                    if cells[i].len() < 2 {
                        continue;
                    }
                    let count = |v: &Vertex| (self.adj[*v] & splitter).count_ones();
                    let first = count(&cells[i][0]);
                    if cells[i].iter().all(|v| count(v) == first) {
                        continue;
                    }
                    let mut cell = std::mem::take(&mut cells[i]);
                    cell.sort_by_key(|v| (count(v), *v));
                    let mut parts: Vec<Vec<Vertex>> = Vec::new();
                    let mut last = None;
                    for v in cell {
                        let c = count(&v);
                        if last != Some(c) {
                            parts.push(Vec::new());
                            last = Some(c);
                        }
                        parts.last_mut().unwrap().push(v);
                    }
                    cells.splice(i..=i, parts);
                    changed = true;
                    break 'splitters;
                }
            }
        }
    }

    fn leaf(&mut self, cells: &[Vec<Vertex>]) {
        let n = self.adj.len();
        let mut label = vec![0; n];
        for (i, cell) in cells.iter().enumerate() {
            label[cell[0]] = i;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            let mut bits = self.adj[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows[label[v]] |= 1 << label[w];
            }
        }
        if self.best.as_ref().is_none_or(|(b, _)| rows < *b) {
            self.best = Some((rows, label));
        }
    }
}
