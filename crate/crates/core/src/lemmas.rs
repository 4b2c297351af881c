//! Coloring schemes of small templates, checked by complete enumeration.
//!
//! Each template is a fixed labeled graph. Its proper colorings with no
//! rainbow `P_k` are enumerated up to renaming of colors (not up to graph
//! automorphisms), and every class is tested against the clauses of the
//! corresponding lemma.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;

use crate::codec::ColoredGraphDoc;
use crate::colorer::{find_coloring, for_each_coloring, Budget, SearchStatus};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TemplateId {
    BowTie,
    Fish,
    MediumPair,
    HeavyPair,
}

impl TemplateId {
    pub const ALL: [TemplateId; 4] = [
        TemplateId::BowTie,
        TemplateId::Fish,
        TemplateId::MediumPair,
        TemplateId::HeavyPair,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TemplateId::BowTie => "bow-tie",
            TemplateId::Fish => "fish",
            TemplateId::MediumPair => "medium-pair",
            TemplateId::HeavyPair => "heavy-pair",
        }
    }
}

/// A labeled template graph. `labels[v]` names vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub id: TemplateId,
    pub graph: Graph,
    pub labels: Vec<&'static str>,
}

impl Template {
    pub fn new(id: TemplateId) -> Template {
        let (labels, edges): (Vec<&'static str>, Vec<(Vertex, Vertex)>) = match id {
            // two triangles u u1 u2 and u u3 u4
            TemplateId::BowTie => (
                vec!["u", "u1", "u2", "u3", "u4"],
                vec![(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)],
            ),
            // triangle u u1 u2 and 4-cycle u u3 w u4
            TemplateId::Fish => (
                vec!["u", "u1", "u2", "u3", "u4", "w"],
                vec![(0, 1), (0, 2), (1, 2), (0, 3), (3, 5), (4, 5), (0, 4)],
            ),
            TemplateId::MediumPair => (vec!["v", "w", "u1", "u2", "u3"], k2_side(3)),
            TemplateId::HeavyPair => (vec!["v", "w", "u1", "u2", "u3", "u4"], k2_side(4)),
        };
        let graph = Graph::new(labels.len(), &edges).expect("template edges are valid");
        Template { id, graph, labels }
    }

    /// Vertex with the given role name.
    pub fn vertex(&self, label: &str) -> Vertex {
        self.labels
            .iter()
            .position(|&l| l == label)
            .unwrap_or_else(|| panic!("no vertex {label} in {}", self.id.as_str()))
    }
}

// K_{2,t} with sides {v, w} and {u1..ut}
fn k2_side(t: usize) -> Vec<(Vertex, Vertex)> {
    (0..t).flat_map(|i| [(0, 2 + i), (1, 2 + i)]).collect()
}

/// One color-renaming class, with the clauses it satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeClass {
    /// Colors in first-occurrence normal form.
    pub representative: ColoredGraph,
    pub predicate_flags: Vec<&'static str>,
}

/// Every renaming class of proper colorings of the template with no rainbow
/// `P_k`, in lexicographic order of normalized colors.
pub fn enumerate_schemes(t: &Template, k: usize) -> Result<Vec<SchemeClass>> {
    let g = &t.graph;
    let m = g.edge_count().max(1) as Color;
    let mut reps = Vec::new();
    let summary = for_each_coloring(g, k, m, Budget::unlimited(), |colors| {
        let cg = ColoredGraph::new(g.clone(), colors.to_vec()).expect("search colors are positive");
        reps.push(cg.normalized());
        ControlFlow::Continue(())
    })?;
    debug_assert!(!summary.budget_exceeded);
    reps.sort_by(|a, b| a.colors().cmp(b.colors()));
    Ok(reps
        .into_iter()
        .map(|cg| SchemeClass {
            predicate_flags: flags(t, &cg),
            representative: cg,
        })
        .collect())
}

fn flags(t: &Template, cg: &ColoredGraph) -> Vec<&'static str> {
    let c = |a: &str, b: &str| {
        cg.color(t.vertex(a), t.vertex(b))
            .expect("template edge is present")
    };
    let mut out = Vec::new();
    match t.id {
        TemplateId::BowTie => {
            let tip = c("u1", "u2");
            if tip == c("u3", "u4") {
                out.push("tips-share-color");
            }
            if ["u1", "u2", "u3", "u4"].iter().all(|x| c("u", x) != tip) {
                out.push("tip-color-fresh");
            }
        }
        TemplateId::Fish => {
            if c("w", "u3") == c("u", "u4") && c("w", "u4") == c("u", "u3") {
                out.push("cycle-colors-swap");
            }
            let tip = c("u1", "u2");
            if tip == c("u", "u3") || tip == c("u", "u4") {
                out.push("tip-color-on-cycle");
            }
        }
        TemplateId::MediumPair | TemplateId::HeavyPair => {
            let t_count = t.labels.len() - 2;
            let side =
                |s: &str| -> Vec<Color> { (1..=t_count).map(|i| c(s, &format!("u{i}"))).collect() };
            let (vs, ws) = (side("v"), side("w"));
            let swapped = |i: usize, j: usize| vs[i] == ws[j] && vs[j] == ws[i];
            let used = cg.colors_used();
            if t.id == TemplateId::MediumPair {
                let some_swap = (0..3).any(|i| (i + 1..3).any(|j| swapped(i, j)));
                if used == 4 && some_swap {
                    out.push("four-color-scheme");
                }
                if used == 3 && vs.iter().all(|x| ws.contains(x)) {
                    out.push("three-color-scheme");
                    // the matching v-side -> w-side is then a cyclic shift
                    let cyclic = (0..3).all(|i| vs[i] != ws[i]);
                    if cyclic {
                        out.push("cyclic-matching");
                    }
                }
            } else {
                if used == 4 {
                    out.push("four-colors");
                }
                // the four cherries split into two swapped pairs
                let pairing = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]]
                    .iter()
                    .any(|p| p.iter().all(|&(i, j)| swapped(i, j)));
                if pairing {
                    out.push("full-swap-pairing");
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LemmaId {
    #[serde(rename = "bowtie-5.2")]
    BowTie,
    #[serde(rename = "fish-5.4")]
    Fish,
    #[serde(rename = "medium-5.5")]
    Medium,
    #[serde(rename = "heavy-5.7")]
    Heavy,
}

impl LemmaId {
    pub const ALL: [LemmaId; 4] = [
        LemmaId::BowTie,
        LemmaId::Fish,
        LemmaId::Medium,
        LemmaId::Heavy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::BowTie => "bowtie-5.2",
            LemmaId::Fish => "fish-5.4",
            LemmaId::Medium => "medium-5.5",
            LemmaId::Heavy => "heavy-5.7",
        }
    }

    pub fn template(self) -> TemplateId {
        match self {
            LemmaId::BowTie => TemplateId::BowTie,
            LemmaId::Fish => TemplateId::Fish,
            LemmaId::Medium => TemplateId::MediumPair,
            LemmaId::Heavy => TemplateId::HeavyPair,
        }
    }

    /// Does a class with these flags satisfy the lemma?
    pub fn holds(self, flags: &[&str]) -> bool {
        let has = |f: &str| flags.contains(&f);
        match self {
            LemmaId::BowTie => has("tips-share-color") && has("tip-color-fresh"),
            LemmaId::Fish => has("cycle-colors-swap") && has("tip-color-on-cycle"),
            LemmaId::Medium => has("four-color-scheme") || has("three-color-scheme"),
            LemmaId::Heavy => has("four-colors") && has("full-swap-pairing"),
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LemmaVerdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchemeDoc {
    pub coloring: ColoredGraphDoc,
    pub flags: Vec<&'static str>,
}

impl From<&SchemeClass> for SchemeDoc {
    fn from(s: &SchemeClass) -> Self {
        SchemeDoc {
            coloring: ColoredGraphDoc::from_colored(&s.representative, None),
            flags: s.predicate_flags.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub template: TemplateId,
    pub labels: Vec<&'static str>,
    pub k: usize,
    pub class_count: usize,
    pub verdict: LemmaVerdict,
    /// First class violating the lemma, if any.
    pub counterexample: Option<SchemeDoc>,
    pub representatives: Vec<SchemeDoc>,
}

/// Checks a lemma at k = 5.
pub fn verify_lemma(id: LemmaId) -> Result<LemmaReport> {
    verify_lemma_at(id, 5)
}

/// Same check with another path length, for experiments.
pub fn verify_lemma_at(id: LemmaId, k: usize) -> Result<LemmaReport> {
    let t = Template::new(id.template());
    let classes = enumerate_schemes(&t, k)?;
    let bad = classes.iter().find(|c| !id.holds(&c.predicate_flags));
    Ok(LemmaReport {
        lemma: id,
        template: t.id,
        labels: t.labels.clone(),
        k,
        class_count: classes.len(),
        verdict: if bad.is_some() {
            LemmaVerdict::Fail
        } else {
            LemmaVerdict::Pass
        },
        counterexample: bad.map(SchemeDoc::from),
        representatives: classes.iter().map(SchemeDoc::from).collect(),
    })
}

/// True iff `g` has no proper coloring without a rainbow `P_k`.
pub fn refute(g: &Graph, k: usize) -> Result<bool> {
    let m = g.edge_count().max(1) as Color;
    Ok(find_coloring(g, k, m)?.status == SearchStatus::Unsat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorer::oracle_enumerate;

    #[test]
    fn templates_have_the_right_shape() {
        let sizes = [(5, 6), (6, 7), (5, 6), (6, 8)];
        for (id, (n, m)) in TemplateId::ALL.into_iter().zip(sizes) {
            let t = Template::new(id);
            assert_eq!(
                (t.graph.n(), t.graph.edge_count()),
                (n, m),
                "{}",
                id.as_str()
            );
        }
    }

    #[test]
    fn bow_tie_has_a_single_scheme() {
        let t = Template::new(TemplateId::BowTie);
        let classes = enumerate_schemes(&t, 5).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(oracle_enumerate(&t.graph, 5).unwrap(), 1);
        let flags = &classes[0].predicate_flags;
        assert!(flags.contains(&"tips-share-color") && flags.contains(&"tip-color-fresh"));
    }

    #[test]
    fn every_lemma_passes() {
        for id in LemmaId::ALL {
            let r = verify_lemma(id).unwrap();
            assert_eq!(r.verdict, LemmaVerdict::Pass, "{id}");
            assert!(r.class_count > 0);
        }
    }

    #[test]
    fn lemma_ids_parse() {
        assert_eq!("heavy-5.7".parse::<LemmaId>().unwrap(), LemmaId::Heavy);
        assert!(matches!(
            "nope".parse::<LemmaId>(),
            Err(Error::UnknownLemma(_))
        ));
    }

    #[test]
    fn wrong_k_can_fail() {
        // at k = 6 the bow tie has colorings whose tips differ
        let r = verify_lemma_at(LemmaId::BowTie, 6).unwrap();
        assert_eq!(r.verdict, LemmaVerdict::Fail);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn refutations() {
        // pendant edge at the tip u2
        let mut e = Template::new(TemplateId::BowTie).graph.edges().to_vec();
        e.push((2, 5));
        assert!(refute(&Graph::new(6, &e).unwrap(), 5).unwrap());
        // two pendant edges at v
        let mut e = Template::new(TemplateId::MediumPair).graph.edges().to_vec();
        e.extend([(0, 5), (0, 6)]);
        assert!(refute(&Graph::new(7, &e).unwrap(), 5).unwrap());
        assert!(!refute(&Graph::complete(4), 5).unwrap());
    }
}
