//! Isomorph-free generation of all graphs on a fixed vertex set, one edge
//! count at a time.
//!
//! Level m+1 is built from level m by adding each missing edge to each graph
//! and keeping one canonical representative per isomorphism class. Every
//! graph with m+1 edges has an (m)-edge subgraph on the same vertices, so
//! the levels are complete. Levels are sorted by canonical form, which makes
//! candidate indices reproducible.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::canon::{canonical_labeling, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count generated in-process.
pub const BUILTIN_MAX_N: usize = 8;

/// Lazily generated levels, cached per vertex count.
#[derive(Debug, Default)]
pub struct GraphCatalog {
    levels: HashMap<usize, Vec<Vec<Graph>>>,
}

impl GraphCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every graph on `n` vertices with `m` edges, up to isomorphism, in
    /// canonical labeling and canonical order.
    pub fn level(&mut self, n: usize, m: usize) -> Result<&[Graph]> {
        if n > BUILTIN_MAX_N {
            return Err(Error::EnumerationCap {
                n,
                cap: BUILTIN_MAX_N,
            });
        }
        let max_m = n * n.saturating_sub(1) / 2;
        let levels = self
            .levels
            .entry(n)
            .or_insert_with(|| vec![vec![Graph::empty(n)]]);
        if m > max_m {
            return Ok(&[]);
        }
        while levels.len() <= m {
            let next = augment(levels.last().unwrap());
            levels.push(next);
        }
        Ok(&levels[m])
    }
}

fn augment(level: &[Graph]) -> Vec<Graph> {
    let children: Vec<Vec<(CanonicalForm, Graph)>> = level
        .par_iter()
        .map(|g| {
            let n = g.n();
            let mut out = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let h = g.with_edge(u, v).expect("new edge is valid");
                    let (labeling, form) = canonical_labeling(&h).expect("n is within range");
                    out.push((
                        form,
                        h.relabel(&labeling).expect("labeling is a permutation"),
                    ));
                }
            }
            out
        })
        .collect();
    let mut unique = BTreeMap::new();
    for (form, g) in children.into_iter().flatten() {
        unique.entry(form).or_insert(g);
    }
    unique.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_for_small_n() {
        let mut cat = GraphCatalog::new();
        // numbers of graphs on n unlabeled vertices
        for (n, total) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let max_m = n * (n - 1) / 2;
            let sum: usize = (0..=max_m).map(|m| cat.level(n, m).unwrap().len()).sum();
            assert_eq!(sum, total, "n = {n}");
        }
        assert_eq!(cat.level(4, 6).unwrap(), &[Graph::complete(4)]);
        assert!(cat.level(4, 7).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            GraphCatalog::new().level(9, 3),
            Err(Error::EnumerationCap { n: 9, cap: 8 })
        ));
    }
}
