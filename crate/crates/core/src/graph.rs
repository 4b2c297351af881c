//! Simple graphs and edge-colored graphs.
//!
//! Vertices are dense ids `0..n`. Edges are stored canonically: each pair
//! has its smaller endpoint first and the list is sorted lexicographically,
//! so two graphs with the same edge set compare equal no matter how they
//! were built. Edge-indexed data (colors, search state) uses positions in
//! that canonical list.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Color = u32;

/// An undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // (neighbor, edge index), sorted by neighbor
    adj: Vec<Vec<(Vertex, usize)>>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, edges))
    }

    /// Edges must already be canonical, sorted and free of duplicates.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_sorted(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Neighbors of `v` paired with the index of the connecting edge.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[Vec<(Vertex, usize)>] {
        &self.adj
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n || u == v {
            return None;
        }
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Vertices at distance exactly one and exactly two from `v`.
    pub fn neighborhoods(&self, v: Vertex) -> Result<(BTreeSet<Vertex>, BTreeSet<Vertex>)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let first: BTreeSet<_> = self.neighbors(v).collect();
        let second = first
            .iter()
            .flat_map(|&w| self.neighbors(w))
            .filter(|&x| x != v && !first.contains(&x))
            .collect();
        Ok((first, second))
    }

    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut list = self.edges.clone();
        list.push((u, v));
        Graph::new(self.n, &list)
    }

    pub fn without_edge(&self, index: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Self::from_sorted(self.n, edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let list: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &list)
    }

    /// Removes the given vertices and compacts the remaining ids in order.
    pub fn remove_vertices(&self, gone: &BTreeSet<Vertex>) -> Graph {
        let mut id = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in id.iter_mut().enumerate() {
            if !gone.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|(u, v)| !gone.contains(u) && !gone.contains(v))
            .map(|&(u, v)| (id[u], id[v]))
            .collect();
        edges.sort_unstable();
        Self::from_sorted(next, edges)
    }

    /// Connected components, each sorted, in order of smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// A graph together with a color for every edge.
///
/// `colors[i]` is the color of `graph.edges()[i]`. Colors are positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    graph: Graph,
    colors: Vec<Color>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != graph.edge_count() {
            return Err(Error::ColorCountMismatch {
                expected: graph.edge_count(),
                got: colors.len(),
            });
        }
        if colors.contains(&0) {
            return Err(Error::NonPositiveColor(0));
        }
        Ok(ColoredGraph { graph, colors })
    }

    /// Builds from `(u, v, color)` triples in any order.
    pub fn from_triples(n: usize, triples: &[(Vertex, Vertex, Color)]) -> Result<Self> {
        let pairs: Vec<_> = triples.iter().map(|&(u, v, _)| (u, v)).collect();
        let graph = Graph::new(n, &pairs)?;
        let mut colors = vec![0; graph.edge_count()];
        for &(u, v, c) in triples {
            let i = graph.edge_index(u, v).expect("edge was just inserted");
            colors[i] = c;
        }
        ColoredGraph::new(graph, colors)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.graph.edge_index(u, v).map(|i| self.colors[i])
    }

    pub fn triples(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// True iff no two edges sharing an endpoint have the same color.
    pub fn is_proper(&self) -> bool {
        let mut seen = BTreeSet::new();
        (0..self.graph.n()).all(|v| {
            seen.clear();
            self.graph
                .incident(v)
                .iter()
                .all(|&(_, e)| seen.insert(self.colors[e]))
        })
    }

    /// Renames colors to `1..=t` in order of first occurrence along the
    /// canonical edge order.
    pub fn normalized(&self) -> ColoredGraph {
        ColoredGraph {
            graph: self.graph.clone(),
            colors: normalize_colors(&self.colors),
        }
    }

    pub fn is_normalized(&self) -> bool {
        normalize_colors(&self.colors) == self.colors
    }

    /// Applies a color bijection. Every used color needs an image and no two
    /// used colors may share one.
    pub fn permute_colors(&self, map: &BTreeMap<Color, Color>) -> Result<ColoredGraph> {
        let mut inverse: BTreeMap<Color, Color> = BTreeMap::new();
        for &c in self.colors.iter().collect::<BTreeSet<_>>() {
            let image = *map.get(&c).ok_or(Error::IncompleteColorMap(c))?;
            if image == 0 {
                return Err(Error::NonPositiveColor(0));
            }
            if let Some(&prev) = inverse.get(&image) {
                return Err(Error::NonInjectiveColorMap(prev, c, image));
            }
            inverse.insert(image, c);
        }
        Ok(ColoredGraph {
            graph: self.graph.clone(),
            colors: self.colors.iter().map(|c| map[c]).collect(),
        })
    }

    /// Restriction to all edges but `index`.
    pub fn without_edge(&self, index: usize) -> ColoredGraph {
        let mut colors = self.colors.clone();
        colors.remove(index);
        ColoredGraph {
            graph: self.graph.without_edge(index),
            colors,
        }
    }

    pub fn with_color(&self, index: usize, color: Color) -> ColoredGraph {
        assert!(color > 0);
        let mut colors = self.colors.clone();
        colors[index] = color;
        ColoredGraph {
            graph: self.graph.clone(),
            colors,
        }
    }

    pub fn relabel(&self, perm: &[Vertex]) -> Result<ColoredGraph> {
        let triples: Vec<_> = self
            .triples()
            .map(|(u, v, c)| (perm[u], perm[v], c))
            .collect();
        ColoredGraph::from_triples(self.graph.n(), &triples)
    }

    pub fn into_parts(self) -> (Graph, Vec<Color>) {
        (self.graph, self.colors)
    }
}

pub(crate) fn normalize_colors(colors: &[Color]) -> Vec<Color> {
    let mut names: BTreeMap<Color, Color> = BTreeMap::new();
    colors
        .iter()
        .map(|&c| {
            let next = names.len() as Color + 1;
            *names.entry(c).or_insert(next)
        })
        .collect()
}

/// Disjoint union. Part `i` has its vertices shifted past parts `0..i` and
/// its colors shifted past every color used by parts `0..i`.
pub fn disjoint_union(parts: &[ColoredGraph]) -> ColoredGraph {
    let mut n = 0;
    let mut color_base = 0;
    let mut triples = Vec::new();
    for part in parts {
        let top = part.colors.iter().copied().max().unwrap_or(0);
        triples.extend(
            part.triples()
                .map(|(u, v, c)| (u + n, v + n, c + color_base)),
        );
        n += part.graph.n();
        color_base += top;
    }
    ColoredGraph::from_triples(n, &triples).expect("parts are valid and vertex-disjoint")
}
