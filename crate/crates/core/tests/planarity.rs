//! The left-right test against a slow oracle: a graph is planar iff no
//! sequence of edge deletions and contractions reaches K5 or K3,3.

use std::collections::HashMap;

use proptest::prelude::*;
use rainbow_planar::extremal::GraphCatalog;
use rainbow_planar::planarity::planar;
use rainbow_planar::Graph;

// adjacency bitmasks, isolated vertices dropped
#[derive(Clone, PartialEq, Eq, Hash)]
struct Small(Vec<u16>);

impl Small {
    fn from_graph(g: &Graph) -> Small {
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).fold(0u16, |a, w| a | 1 << w))
            .collect();
        Small(adj).compact()
    }

    fn compact(self) -> Small {
        let keep: Vec<usize> = (0..self.0.len()).filter(|&v| self.0[v] != 0).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.0[v] >> w & 1 == 1)
                    .fold(0u16, |a, (i, _)| a | 1 << i)
            })
            .collect();
        Small(adj)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.0.len();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.0[u] >> v & 1 == 1)
            .collect()
    }

    fn delete(&self, u: usize, v: usize) -> Small {
        let mut adj = self.0.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Small(adj).compact()
    }

    // merge v into u, then drop v
    fn contract(&self, u: usize, v: usize) -> Small {
        let n = self.0.len();
        let mut adj = self.0.clone();
        let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
        adj[u] = merged;
        for (w, row) in adj.iter_mut().enumerate() {
            if merged >> w & 1 == 1 {
                *row |= 1 << u;
            }
            *row &= !(1 << v);
        }
        adj[v] = 0;
        let adj = (0..n)
            .filter(|&w| w != v)
            .map(|w| {
                let row = adj[w];
                let low = row & ((1 << v) - 1);
                let high = (row >> (v + 1)) << v;
                low | high
            })
            .collect();
        Small(adj).compact()
    }

    fn is_kuratowski(&self) -> bool {
        let n = self.0.len();
        let deg: Vec<u32> = self.0.iter().map(|r| r.count_ones()).collect();
        if n == 5 {
            return deg.iter().all(|&d| d == 4);
        }
        if n == 6 && deg.iter().all(|&d| d == 3) {
            // 3-regular on six vertices is K3,3 iff bipartite
            let mut side = [None::<bool>; 6];
            side[0] = Some(false);
            let mut stack = vec![0];
            while let Some(x) = stack.pop() {
                for y in 0..6 {
                    if self.0[x] >> y & 1 == 1 {
                        match side[y] {
                            None => {
                                side[y] = Some(!side[x].unwrap());
                                stack.push(y);
                            }
                            Some(s) if s == side[x].unwrap() => return false,
                            _ => {}
                        }
                    }
                }
            }
            return true;
        }
        false
    }
}

struct Oracle {
    memo: HashMap<Small, bool>,
}

impl Oracle {
    fn has_kuratowski_minor(&mut self, g: &Small) -> bool {
        let e = g.edges();
        if e.len() < 9 || g.0.len() < 5 {
            return false;
        }
        if let Some(&r) = self.memo.get(g) {
            return r;
        }
        let r = g.is_kuratowski()
            || e.iter().any(|&(u, v)| {
                self.has_kuratowski_minor(&g.delete(u, v))
                    || self.has_kuratowski_minor(&g.contract(u, v))
            });
        self.memo.insert(g.clone(), r);
        r
    }

    fn planar(&mut self, g: &Graph) -> bool {
        !self.has_kuratowski_minor(&Small::from_graph(g))
    }
}

#[test]
fn agrees_with_minor_oracle_on_all_small_graphs() {
    let mut oracle = Oracle {
        memo: HashMap::new(),
    };
    let mut cat = GraphCatalog::new();
    let mut checked = 0;
    for n in 1..=7 {
        for m in 0..=n * (n - 1) / 2 {
            for g in cat.level(n, m).unwrap() {
                assert_eq!(
                    planar(g),
                    oracle.planar(g),
                    "n = {n}, edges {:?}",
                    g.edges()
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

fn arb_graph(max_n: usize, p: f64) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p), m).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| p)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn agrees_with_oracle_on_random_graphs(g in arb_graph(9, 0.35)) {
        let mut oracle = Oracle { memo: HashMap::new() };
        if g.edge_count() <= 15 {
            prop_assert_eq!(planar(&g), oracle.planar(&g));
        }
    }

    #[test]
    fn relabeling_keeps_planarity(
        (g, perm) in arb_graph(16, 0.3)
            .prop_flat_map(|g| { let n = g.n(); (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle()) })
    ) {
        prop_assert_eq!(planar(&g), planar(&g.relabel(&perm).unwrap()));
    }

    #[test]
    fn subgraphs_of_planar_graphs_are_planar(g in arb_graph(14, 0.3), pick in any::<prop::sample::Index>()) {
        if planar(&g) && g.edge_count() > 0 {
            let idx = pick.index(g.edge_count());
            prop_assert!(planar(&g.without_edge(idx)));
        }
    }
}
