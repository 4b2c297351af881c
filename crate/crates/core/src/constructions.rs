//! Explicit colored graphs: the lower-bound constructions and their gate
//! check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Color, ColoredGraph, Graph, Vertex};
use crate::planarity::planar;
use crate::rainbow::is_rainbow_free;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Construction {
    /// n/4 disjoint copies of the 3-colored K4 with no rainbow `P_4`.
    K4Blocks {
        n: usize,
    },
    G5,
    G7,
    /// floor(3n/2) edges, no rainbow `P_5`.
    Gn {
        n: usize,
    },
    /// Two hubs joined to every vertex of an (n-2)-cycle.
    DoubleWheel {
        n: usize,
    },
    /// K2 joined to a path on n-2 vertices.
    K2Path {
        n: usize,
    },
    Octahedron,
    Icosahedron,
    DisjointCopies {
        base: Box<Construction>,
        copies: usize,
    },
}

/// Family names; disjoint copies of any of them are asked for separately.
pub const FAMILIES: [&str; 8] = [
    "k4-blocks",
    "g5",
    "g7",
    "gn",
    "double-wheel",
    "k2-path",
    "octahedron",
    "icosahedron",
];

impl Construction {
    /// Builds a spec from a family name and optional parameters.
    pub fn from_family(family: &str, n: Option<usize>, copies: Option<usize>) -> Result<Self> {
        let need_n = || n.ok_or_else(|| Error::Construction(format!("{family} needs n")));
        Ok(match family {
            "k4-blocks" => Construction::K4Blocks { n: need_n()? },
            "g5" => Construction::G5,
            "g7" => Construction::G7,
            "gn" => Construction::Gn { n: need_n()? },
            "double-wheel" => Construction::DoubleWheel { n: need_n()? },
            "k2-path" => Construction::K2Path { n: need_n()? },
            "octahedron" => Construction::Octahedron,
            "icosahedron" => Construction::Icosahedron,
            other => return Err(Error::Construction(format!("unknown family {other}"))),
        }
        .with_copies(copies))
    }

    fn with_copies(self, copies: Option<usize>) -> Self {
        match copies {
            Some(c) => Construction::DisjointCopies {
                base: Box::new(self),
                copies: c,
            },
            None => self,
        }
    }

    /// Edge count the construction must have.
    pub fn expected_edges(&self) -> usize {
        match *self {
            Construction::K4Blocks { n } | Construction::Gn { n } => 3 * n / 2,
            Construction::G5 => 7,
            Construction::G7 => 10,
            Construction::DoubleWheel { n } | Construction::K2Path { n } => 3 * n - 6,
            Construction::Octahedron => 12,
            Construction::Icosahedron => 30,
            Construction::DisjointCopies { ref base, copies } => copies * base.expected_edges(),
        }
    }

    /// Number of vertices on a rainbow-free path that the construction
    /// rules out.
    pub fn path_length(&self) -> usize {
        match self {
            Construction::K4Blocks { .. } => 4,
            Construction::G5 | Construction::G7 | Construction::Gn { .. } => 5,
            Construction::DoubleWheel { .. } | Construction::K2Path { .. } => 8,
            Construction::Octahedron => 6,
            Construction::Icosahedron => 7,
            Construction::DisjointCopies { base, .. } => base.path_length(),
        }
    }

    /// Color count fixed by the construction, where it is.
    pub fn expected_colors(&self) -> Option<usize> {
        match *self {
            Construction::DoubleWheel { n } => Some(2 * n - 2),
            Construction::K2Path { n } => Some(2 * n - 3),
            Construction::Octahedron => Some(4),
            Construction::Icosahedron => Some(5),
            Construction::K4Blocks { .. } => Some(3),
            _ => None,
        }
    }
}

pub fn make(spec: &Construction) -> Result<ColoredGraph> {
    match *spec {
        Construction::K4Blocks { n } => {
            if n == 0 || n % 4 != 0 {
                return Err(Error::Construction(format!(
                    "k4-blocks needs n divisible by 4, got {n}"
                )));
            }
            Ok(same_color_copies(&k4(), n / 4))
        }
        Construction::G5 => Ok(g5()),
        Construction::G7 => Ok(g7()),
        Construction::Gn { n } => gn(n),
        Construction::DoubleWheel { n } => double_wheel(n),
        Construction::K2Path { n } => k2_path(n),
        Construction::Octahedron => Ok(from_table(6, OCTAHEDRON)),
        Construction::Icosahedron => Ok(from_table(12, ICOSAHEDRON)),
        Construction::DisjointCopies { ref base, copies } => {
            if copies == 0 {
                return Err(Error::Construction(
                    "disjoint-copies needs at least one copy".into(),
                ));
            }
            Ok(same_color_copies(&make(base)?, copies))
        }
    }
}

// copies that reuse the same palette, which is fine across components
fn same_color_copies(base: &ColoredGraph, copies: usize) -> ColoredGraph {
    let n = base.graph().n();
    let triples: Vec<_> = (0..copies)
        .flat_map(|i| {
            base.triples()
                .map(move |(u, v, c)| (u + i * n, v + i * n, c))
        })
        .collect();
    ColoredGraph::from_triples(n * copies, &triples).expect("copies are simple")
}

fn from_table(n: usize, table: &[(Vertex, Vertex, Color)]) -> ColoredGraph {
    ColoredGraph::from_triples(n, table).expect("table is a simple graph")
}

/// K4 colored by its three perfect matchings, vertex 0 in the middle.
fn k4() -> ColoredGraph {
    from_table(
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
}

// a1..a5 are 0..4
fn g5() -> ColoredGraph {
    from_table(
        5,
        &[
            (0, 1, 1),
            (0, 2, 2),
            (0, 3, 3),
            (2, 3, 4),
            (4, 1, 4),
            (4, 2, 3),
            (4, 3, 2),
        ],
    )
}

// a1..a7 are 0..6
fn g7() -> ColoredGraph {
    from_table(
        7,
        &[
            (0, 1, 1),
            (0, 3, 2),
            (0, 4, 3),
            (0, 5, 4),
            (1, 2, 3),
            (2, 3, 4),
            (6, 1, 2),
            (6, 3, 1),
            (6, 4, 4),
            (6, 5, 3),
        ],
    )
}

fn gn(n: usize) -> Result<ColoredGraph> {
    match n {
        0..=3 => Err(Error::Construction(format!("gn needs n >= 4, got {n}"))),
        4 => Ok(k4()),
        5 => Ok(g5()),
        7 => Ok(g7()),
        _ if n.is_multiple_of(2) => Ok(prism(n / 2)),
        _ => Ok(disjoint_union(&[gn(n - 5)?, g5()])),
    }
}

/// Two h-cycles a_1..a_h and b_1..b_h with rungs a_i b_i, 3-colored.
fn prism(h: usize) -> ColoredGraph {
    let a = |i: usize| i - 1;
    let b = |i: usize| h + i - 1;
    let mut t = Vec::with_capacity(3 * h);
    for i in 1..h {
        let c = if i % 2 == 1 { 1 } else { 2 };
        t.push((a(i), a(i + 1), c));
        t.push((b(i), b(i + 1), c));
    }
    if h.is_multiple_of(2) {
        t.push((a(1), a(h), 2));
        t.push((b(1), b(h), 2));
        t.extend((1..=h).map(|i| (a(i), b(i), 3)));
    } else {
        t.push((a(1), a(h), 3));
        t.push((b(1), b(h), 3));
        t.push((a(1), b(1), 2));
        t.push((a(h), b(h), 1));
        t.extend((2..h).map(|i| (a(i), b(i), 3)));
    }
    from_table(2 * h, &t)
}

// u = 0, w = 1, v_i = i + 1
fn double_wheel(n: usize) -> Result<ColoredGraph> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(Error::Construction(format!(
            "double-wheel needs even n >= 6, got {n}"
        )));
    }
    let r = n - 2;
    let v = |i: usize| i + 1;
    let (ca, cb) = (2 * r + 1, 2 * r + 2);
    let mut t = Vec::with_capacity(3 * r);
    for i in 1..=r {
        t.push((0, v(i), i as Color));
        t.push((1, v(i), (r + i) as Color));
        let next = if i == r { 1 } else { i + 1 };
        t.push((v(i), v(next), if i % 2 == 1 { ca } else { cb } as Color));
    }
    Ok(from_table(n, &t))
}

// u = 0, w = 1, v_i = i + 1. The even cycle u v_1 .. v_{n-2} u alternates
// a, b starting with a on u v_1, so u v_{n-2} gets b.
fn k2_path(n: usize) -> Result<ColoredGraph> {
    if n < 5 || n % 2 != 1 {
        return Err(Error::Construction(format!(
            "k2-path needs odd n >= 5, got {n}"
        )));
    }
    let r = n - 2;
    let v = |i: usize| i + 1;
    let b_i = |i: usize| i as Color;
    let a_i = |i: usize| (r + i - 1) as Color;
    let d = (2 * r - 1) as Color;
    let (ca, cb) = (d + 1, d + 2);
    let mut t = vec![(0, 1, d), (0, v(1), ca), (0, v(r), cb)];
    for i in 1..=r {
        t.push((1, v(i), b_i(i)));
        if (2..r).contains(&i) {
            t.push((0, v(i), a_i(i)));
        }
        if i < r {
            t.push((v(i), v(i + 1), if i % 2 == 1 { cb } else { ca }));
        }
    }
    Ok(from_table(n, &t))
}

// Found by the colorer with max_colors = 4 and frozen; the tests rerun it.
// Parts {0,1}, {2,3}, {4,5}.
pub(crate) const OCTAHEDRON: &[(Vertex, Vertex, Color)] = &[
    (0, 2, 1),
    (0, 3, 2),
    (0, 4, 3),
    (0, 5, 4),
    (1, 2, 3),
    (1, 3, 4),
    (1, 4, 2),
    (1, 5, 1),
    (2, 4, 4),
    (2, 5, 2),
    (3, 4, 1),
    (3, 5, 3),
];

// Same, max_colors = 5. Top 0, upper ring 1..5, lower ring 6..10, bottom 11.
pub(crate) const ICOSAHEDRON: &[(Vertex, Vertex, Color)] = &[
    (0, 1, 1),
    (0, 2, 2),
    (0, 3, 3),
    (0, 4, 4),
    (0, 5, 5),
    (1, 2, 3),
    (1, 5, 2),
    (1, 6, 4),
    (1, 7, 5),
    (2, 3, 1),
    (2, 7, 4),
    (2, 8, 5),
    (3, 4, 2),
    (3, 8, 4),
    (3, 9, 5),
    (4, 5, 1),
    (4, 9, 3),
    (4, 10, 5),
    (5, 6, 3),
    (5, 10, 4),
    (6, 7, 1),
    (6, 10, 2),
    (6, 11, 5),
    (7, 8, 3),
    (7, 11, 2),
    (8, 9, 2),
    (8, 11, 1),
    (9, 10, 1),
    (9, 11, 4),
    (10, 11, 3),
];

/// Uncolored octahedron and icosahedron, as used to regenerate the tables.
pub fn platonic_graph(spec: &Construction) -> Option<Graph> {
    let mut edges = Vec::new();
    match spec {
        Construction::Octahedron => {
            for u in 0..6 {
                for v in u + 1..6 {
                    if !(u % 2 == 0 && v == u + 1) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(6, &edges).ok()
        }
        Construction::Icosahedron => {
            for j in 0..5 {
                let (up, low) = (1 + j, 6 + j);
                let (up_next, low_next) = (1 + (j + 1) % 5, 6 + (j + 1) % 5);
                edges.extend([(0, up), (low, 11), (up, up_next), (low, low_next)]);
                edges.extend([(up, low), (up, low_next)]);
            }
            Graph::new(12, &edges).ok()
        }
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub k: usize,
    pub edge_count: usize,
    pub expected_edges: usize,
    pub proper: bool,
    pub planar: bool,
    pub rainbow_free: bool,
    pub colors_used: usize,
    pub pass: bool,
}

/// Edge count, properness, planarity and absence of a rainbow `P_k`.
pub fn validate_construction(
    cg: &ColoredGraph,
    k: usize,
    expected_edges: usize,
) -> Result<ValidationReport> {
    let edge_count = cg.graph().edge_count();
    let proper = cg.is_proper();
    let is_planar = planar(cg.graph());
    let rainbow_free = is_rainbow_free(cg, k)?;
    Ok(ValidationReport {
        k,
        edge_count,
        expected_edges,
        proper,
        planar: is_planar,
        rainbow_free,
        colors_used: cg.colors_used(),
        pass: proper && is_planar && rainbow_free && edge_count == expected_edges,
    })
}
