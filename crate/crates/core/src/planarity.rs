//! Planarity via the left-right criterion.
//!
//! The graph is oriented by a depth-first search; every back edge must then
//! be assigned to the left or the right of the tree path it closes, and the
//! test fails exactly when the constraints between return edges cannot be
//! satisfied. Constraints are kept as a stack of conflict pairs of
//! intervals of return edges. Each DFS tree (connected component) is tested
//! on its own. Only the verdict is computed, no embedding.

use serde::Serialize;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanarityReason {
    EulerBound,
    CombinatorialTest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub reason: PlanarityReason,
}

/// True when the edge count alone rules out planarity (`e > 3n - 6`, n >= 3).
pub fn exceeds_euler_bound(n: usize, e: usize) -> bool {
    n >= 3 && e > 3 * n - 6
}

pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    if exceeds_euler_bound(g.n(), g.edge_count()) {
        return PlanarityVerdict {
            planar: false,
            reason: PlanarityReason::EulerBound,
        };
    }
    PlanarityVerdict {
        planar: LrState::new(g).run(),
        reason: PlanarityReason::CombinatorialTest,
    }
}

pub fn planar(g: &Graph) -> bool {
    is_planar(g).planar
}

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'g> {
    g: &'g Graph,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    // per undirected edge, filled in once the DFS orients it
    oriented: Vec<bool>,
    src: Vec<Vertex>,
    dst: Vec<Vertex>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    ordered: Vec<Vec<usize>>,
    // testing phase
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    refs: Vec<Option<usize>>,
}

impl<'g> LrState<'g> {
    fn new(g: &'g Graph) -> Self {
        let (n, m) = (g.n(), g.edge_count());
        LrState {
            g,
            height: vec![NONE; n],
            parent_edge: vec![None; n],
            oriented: vec![false; m],
            src: vec![0; m],
            dst: vec![0; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            ordered: vec![Vec::new(); n],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![0; m],
            refs: vec![None; m],
        }
    }

    fn run(mut self) -> bool {
        let mut roots = Vec::new();
        for v in 0..self.g.n() {
            if self.height[v] == NONE {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.g.n() {
            let mut out: Vec<usize> = self
                .g
                .incident(v)
                .iter()
                .map(|&(_, e)| e)
                .filter(|&e| self.src[e] == v)
                .collect();
            out.sort_by_key(|&e| self.nesting[e]);
            self.ordered[v] = out;
        }
        for root in roots {
            if !self.test(root) {
                return false;
            }
            self.stack.clear();
        }
        true
    }

    fn orient(&mut self, v: Vertex) {
        let parent = self.parent_edge[v];
        for i in 0..self.g.incident(v).len() {
            let (w, ei) = self.g.incident(v)[i];
            if self.oriented[ei] {
                continue;
            }
            self.oriented[ei] = true;
            self.src[ei] = v;
            self.dst[ei] = w;
            self.lowpt[ei] = self.height[v];
            self.lowpt2[ei] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = Some(ei);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[ei] = self.height[w];
            }

            self.nesting[ei] = 2 * self.lowpt[ei];
            if self.lowpt2[ei] < self.height[v] {
                // chordal
                self.nesting[ei] += 1;
            }

            if let Some(e) = parent {
                if self.lowpt[ei] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[ei]);
                    self.lowpt[e] = self.lowpt[ei];
                } else if self.lowpt[ei] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[ei]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[ei]);
                }
            }
        }
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        match iv.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => NONE,
        }
    }

    fn set_ref(&mut self, key: Option<usize>, value: Option<usize>) {
        if let Some(k) = key {
            self.refs[k] = value;
        }
    }

    fn test(&mut self, v: Vertex) -> bool {
        let parent = self.parent_edge[v];
        for idx in 0..self.ordered[v].len() {
            let ei = self.ordered[v][idx];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }

            if self.lowpt[ei] < self.height[v] {
                let e = parent.expect("a return edge below the root is impossible");
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("nonempty right interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.refs[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        let hu = self.height[u];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high.filter(|&h| self.dst[h] == u) {
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() && p.left.low.is_some() {
                self.set_ref(p.left.low, p.right.low);
                p.left.low = None;
            }
            while let Some(h) = p.right.high.filter(|&h| self.dst[h] == u) {
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() && p.right.low.is_some() {
                self.set_ref(p.right.low, p.left.low);
                p.right.low = None;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = *self.stack.last().expect("return edges remain on the stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                (Some(l), None) => Some(l),
                _ => hr,
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        let edges: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        Graph::new(6, &edges).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(planar(&Graph::complete(4)));
        let k5 = is_planar(&Graph::complete(5));
        assert_eq!(
            k5,
            PlanarityVerdict {
                planar: false,
                reason: PlanarityReason::EulerBound
            }
        );
        let v = is_planar(&k33());
        assert!(!v.planar);
        assert_eq!(v.reason, PlanarityReason::CombinatorialTest);
    }

    #[test]
    fn k5_minus_edge_and_subdivisions() {
        let k5 = Graph::complete(5);
        assert!(planar(&k5.without_edge(0)));
        // subdivide one edge of K5: 6 vertices, 11 edges, passes the Euler bound
        let mut edges: Vec<_> = k5.edges()[1..].to_vec();
        edges.extend([(0, 5), (1, 5)]);
        assert!(!planar(&Graph::new(6, &edges).unwrap()));
        // Petersen graph
        let mut pe = Vec::new();
        for i in 0..5 {
            pe.push((i, (i + 1) % 5));
            pe.push((i, i + 5));
            pe.push((i + 5, (i + 2) % 5 + 5));
        }
        assert!(!planar(&Graph::new(10, &pe).unwrap()));
    }

    #[test]
    fn disconnected_inputs() {
        let mut edges: Vec<_> = k33().edges().to_vec();
        edges.extend([(6, 7), (7, 8), (6, 8)]);
        assert!(!planar(&Graph::new(9, &edges).unwrap()));
        let mut two_k4 = Graph::complete(4).edges().to_vec();
        two_k4.extend(
            Graph::complete(4)
                .edges()
                .iter()
                .map(|&(u, v)| (u + 4, v + 4)),
        );
        assert!(planar(&Graph::new(8, &two_k4).unwrap()));
        assert!(planar(&Graph::empty(0)));
        assert!(planar(&Graph::empty(7)));
    }

    #[test]
    fn maximal_planar_graphs() {
        // octahedron
        let mut oct = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 1 || u % 2 == 1 {
                    oct.push((u, v));
                }
            }
        }
        let g = Graph::new(6, &oct).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert!(planar(&g));
        // adding any edge to a triangulation breaks planarity
        let k6 = Graph::complete(6);
        assert!(!planar(&k6));
    }
}
