//! Rainbow path detection.
//!
//! A path is rainbow when its edges carry pairwise distinct colors. The
//! search is a depth-first extension carrying the used colors as a bitmap
//! over normalized color ids; neighbors are tried in ascending order so the
//! first witness found is the lexicographically least vertex sequence.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{normalize_colors, Color, ColoredGraph, Vertex};

/// A rainbow path on `vertices.len()` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowWitness {
    pub vertices: Vec<Vertex>,
    pub colors: Vec<Color>,
}

impl RainbowWitness {
    /// Replays the witness: distinct vertices, consecutive pairs are edges
    /// whose colors match the recorded ones, and those colors are distinct.
    pub fn verify(&self, cg: &ColoredGraph) -> bool {
        let vs = &self.vertices;
        if vs.len() < 2 || self.colors.len() + 1 != vs.len() {
            return false;
        }
        let mut seen_v = vs.clone();
        seen_v.sort_unstable();
        seen_v.dedup();
        let mut seen_c = self.colors.clone();
        seen_c.sort_unstable();
        seen_c.dedup();
        seen_v.len() == vs.len()
            && seen_c.len() == self.colors.len()
            && vs
                .windows(2)
                .zip(&self.colors)
                .all(|(w, &c)| cg.color(w[0], w[1]) == Some(c))
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidPathLength { k, min: 2 });
    }
    Ok(())
}

pub fn find_rainbow_path(cg: &ColoredGraph, k: usize) -> Result<Option<RainbowWitness>> {
    check_k(k)?;
    let colors = normalize_colors(cg.colors());
    let top = colors.iter().copied().max().unwrap_or(0);
    let mut finder = PathFinder::new(cg.graph().n(), top);
    Ok(finder
        .find_any(cg.graph().adjacency(), &colors, k)
        .then(|| witness(cg, finder.path())))
}

/// Rainbow `P_k` that uses the edge `{u, v}`.
pub fn find_rainbow_path_through(
    cg: &ColoredGraph,
    edge: (Vertex, Vertex),
    k: usize,
) -> Result<Option<RainbowWitness>> {
    check_k(k)?;
    let (u, v) = edge;
    if cg.graph().edge_index(u, v).is_none() {
        return Err(Error::MissingEdge(u, v));
    }
    let colors = normalize_colors(cg.colors());
    let top = colors.iter().copied().max().unwrap_or(0);
    let mut finder = PathFinder::new(cg.graph().n(), top);
    Ok(finder
        .find_through(cg.graph().adjacency(), &colors, u, v, k)
        .then(|| witness(cg, finder.path())))
}

pub fn is_rainbow_free(cg: &ColoredGraph, k: usize) -> Result<bool> {
    Ok(find_rainbow_path(cg, k)?.is_none())
}

fn witness(cg: &ColoredGraph, path: &[Vertex]) -> RainbowWitness {
    RainbowWitness {
        vertices: path.to_vec(),
        colors: path
            .windows(2)
            .map(|w| cg.color(w[0], w[1]).expect("path follows edges"))
            .collect(),
    }
}

/// Reusable search state. Color 0 in the edge color slice marks an edge as
/// absent, which lets the colorer search partially colored graphs.
pub(crate) struct PathFinder {
    used: Vec<u64>,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    right: Vec<Vertex>,
}

impl PathFinder {
    pub(crate) fn new(n: usize, max_color: Color) -> Self {
        PathFinder {
            used: vec![0; max_color as usize / 64 + 1],
            on_path: vec![false; n],
            path: Vec::with_capacity(n),
            right: Vec::with_capacity(n),
        }
    }

    pub(crate) fn path(&self) -> &[Vertex] {
        &self.path
    }

    #[inline]
    fn color_used(&self, c: Color) -> bool {
        self.used[c as usize >> 6] >> (c & 63) & 1 == 1
    }

    #[inline]
    fn toggle_color(&mut self, c: Color) {
        self.used[c as usize >> 6] ^= 1 << (c & 63);
    }

    pub(crate) fn find_any(
        &mut self,
        adj: &[Vec<(Vertex, usize)>],
        colors: &[Color],
        k: usize,
    ) -> bool {
        self.path.clear();
        for s in 0..adj.len() {
            self.on_path[s] = true;
            self.path.push(s);
            if self.extend(adj, colors, s, k - 1) {
                self.on_path[s] = false;
                for &v in &self.path {
                    self.on_path[v] = false;
                }
                return true;
            }
            self.path.pop();
            self.on_path[s] = false;
        }
        false
    }

    // extends `self.path` from `end` by exactly `remaining` edges
    fn extend(
        &mut self,
        adj: &[Vec<(Vertex, usize)>],
        colors: &[Color],
        end: Vertex,
        remaining: usize,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        for &(w, e) in &adj[end] {
            let c = colors[e];
            if c == 0 || self.on_path[w] || self.color_used(c) {
                continue;
            }
            self.on_path[w] = true;
            self.toggle_color(c);
            self.path.push(w);
            let found = self.extend(adj, colors, w, remaining - 1);
            self.toggle_color(c);
            if found {
                return true;
            }
            self.path.pop();
            self.on_path[w] = false;
        }
        false
    }

    /// On success the path lists the left extension, then `a`, `b`, then
    /// the right extension.
    pub(crate) fn find_through(
        &mut self,
        adj: &[Vec<(Vertex, usize)>],
        colors: &[Color],
        a: Vertex,
        b: Vertex,
        k: usize,
    ) -> bool {
        let e = adj[a]
            .iter()
            .find(|&&(w, _)| w == b)
            .map(|&(_, e)| e)
            .expect("edge exists");
        let c = colors[e];
        if c == 0 {
            return false;
        }
        self.path.clear();
        self.right.clear();
        self.on_path[a] = true;
        self.on_path[b] = true;
        self.toggle_color(c);
        self.path.push(a);
        let found = self.grow_left(adj, colors, a, b, k - 2);
        self.toggle_color(c);
        if found {
            // path holds a, then left vertices outward; right holds b onward
            self.path.reverse();
            let right = std::mem::take(&mut self.right);
            self.path.extend_from_slice(&right);
            self.right = right;
            for &v in &self.path {
                self.on_path[v] = false;
            }
        } else {
            self.on_path[a] = false;
            self.on_path[b] = false;
        }
        found
    }

    fn grow_left(
        &mut self,
        adj: &[Vec<(Vertex, usize)>],
        colors: &[Color],
        end: Vertex,
        b: Vertex,
        remaining: usize,
    ) -> bool {
        self.right.clear();
        self.right.push(b);
        if self.grow_right(adj, colors, b, remaining) {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        for &(w, e) in &adj[end] {
            let c = colors[e];
            if c == 0 || self.on_path[w] || self.color_used(c) {
                continue;
            }
            self.on_path[w] = true;
            self.toggle_color(c);
            self.path.push(w);
            let found = self.grow_left(adj, colors, w, b, remaining - 1);
            self.toggle_color(c);
            if found {
                return true;
            }
            self.path.pop();
            self.on_path[w] = false;
        }
        false
    }

    fn grow_right(
        &mut self,
        adj: &[Vec<(Vertex, usize)>],
        colors: &[Color],
        end: Vertex,
        remaining: usize,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        for &(w, e) in &adj[end] {
            let c = colors[e];
            if c == 0 || self.on_path[w] || self.color_used(c) {
                continue;
            }
            self.on_path[w] = true;
            self.toggle_color(c);
            self.right.push(w);
            let found = self.grow_right(adj, colors, w, remaining - 1);
            self.toggle_color(c);
            self.on_path[w] = false;
            if found {
                return true;
            }
            self.right.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn figure_k4() -> ColoredGraph {
        ColoredGraph::from_triples(
            4,
            &[
                (0, 1, 1),
                (0, 2, 2),
                (0, 3, 3),
                (1, 2, 3),
                (1, 3, 2),
                (2, 3, 1),
            ],
        )
        .unwrap()
    }

    fn rainbow_p5() -> ColoredGraph {
        ColoredGraph::from_triples(5, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 4, 4)]).unwrap()
    }

    #[test]
    fn finds_colored_path() {
        let w = find_rainbow_path(&rainbow_p5(), 5).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.colors, vec![1, 2, 3, 4]);
        assert!(w.verify(&rainbow_p5()));
        assert!(find_rainbow_path(&rainbow_p5(), 6).unwrap().is_none());
    }

    #[test]
    fn figure_k4_has_no_rainbow_p4() {
        let k4 = figure_k4();
        assert!(find_rainbow_path(&k4, 4).unwrap().is_none());
        for &(u, v) in k4.graph().edges() {
            assert!(find_rainbow_path_through(&k4, (u, v), 4).unwrap().is_none());
        }
        // but P3 is everywhere
        assert!(find_rainbow_path(&k4, 3).unwrap().is_some());
    }

    #[test]
    fn through_edge() {
        let p5 = rainbow_p5();
        let w = find_rainbow_path_through(&p5, (2, 1), 5).unwrap().unwrap();
        assert!(w.verify(&p5));
        assert_eq!(w.k(), 5);
        let w = find_rainbow_path_through(&p5, (3, 4), 2).unwrap().unwrap();
        assert_eq!(w.vertices, vec![3, 4]);
        assert_eq!(
            find_rainbow_path_through(&p5, (0, 4), 3),
            Err(Error::MissingEdge(0, 4))
        );
    }

    #[test]
    fn lexicographically_least_witness() {
        // two rainbow P3s; 0-1-2 and 1-2-3 etc.
        let cg = ColoredGraph::from_triples(4, &[(2, 3, 1), (1, 2, 2), (0, 3, 5)]).unwrap();
        let w = find_rainbow_path(&cg, 3).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 3, 2]);
    }

    #[test]
    fn rejects_tiny_k() {
        assert!(find_rainbow_path(&rainbow_p5(), 1).is_err());
        let single = ColoredGraph::new(Graph::empty(1), vec![]).unwrap();
        assert!(find_rainbow_path(&single, 2).unwrap().is_none());
    }

    #[test]
    fn verify_rejects_forged_witness() {
        let k4 = figure_k4();
        let forged = RainbowWitness {
            vertices: vec![1, 0, 2, 3],
            colors: vec![1, 2, 1],
        };
        assert!(!forged.verify(&k4));
        let wrong_color = RainbowWitness {
            vertices: vec![1, 0, 2],
            colors: vec![1, 3],
        };
        assert!(!wrong_color.verify(&k4));
    }
}
