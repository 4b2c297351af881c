use rainbow_planar::codec::decode_graph6;
use rainbow_planar::colorer::{find_coloring, SearchStatus};
use rainbow_planar::extremal::{
    compute_extremal, enumerate_candidates, refute_level, CandidateSource, ExtremalOptions,
    Filters, GraphCatalog, LevelVerdict, Method, Refutation, RunConfig,
};
use rainbow_planar::planarity::planar;
use rainbow_planar::rainbow::is_rainbow_free;

// (n, m, all classes, planar, planar and reduced), frozen from an independent
// atlas-based enumeration
const GOLDEN: &[(usize, usize, usize, usize, usize)] = &[
    (4, 4, 2, 2, 0),
    (4, 5, 1, 1, 1),
    (4, 6, 1, 1, 1),
    (5, 5, 6, 6, 0),
    (5, 6, 6, 6, 1),
    (5, 7, 4, 4, 3),
    (5, 8, 2, 2, 2),
    (5, 9, 1, 1, 1),
    (5, 10, 1, 0, 0),
    (6, 8, 24, 24, 6),
    (6, 9, 21, 20, 12),
    (6, 10, 15, 13, 11),
    (6, 11, 9, 5, 5),
    (6, 12, 5, 2, 2),
    (6, 13, 2, 0, 0),
    (7, 9, 131, 130, 7),
    (7, 10, 148, 144, 37),
    (7, 11, 148, 135, 71),
    (7, 12, 131, 98, 74),
    (7, 13, 97, 51, 47),
    (7, 14, 65, 16, 16),
    (7, 15, 41, 5, 5),
    (7, 16, 21, 0, 0),
];

#[test]
fn funnel_counts_match_golden_table() {
    let mut cat = GraphCatalog::new();
    for &(n, m, all, pl, red) in GOLDEN {
        let s = enumerate_candidates(
            n,
            m,
            Filters::default(),
            &CandidateSource::BuiltIn,
            &mut cat,
        )
        .unwrap();
        assert_eq!(s.len(), all, "({n}, {m}) all");
        let s = enumerate_candidates(
            n,
            m,
            Filters::planar_only(),
            &CandidateSource::BuiltIn,
            &mut cat,
        )
        .unwrap();
        assert_eq!(s.len(), pl, "({n}, {m}) planar");
        let s = enumerate_candidates(
            n,
            m,
            Filters::reduced_planar(),
            &CandidateSource::BuiltIn,
            &mut cat,
        )
        .unwrap();
        assert_eq!(s.len(), red, "({n}, {m}) reduced");
        assert_eq!(s.counts.candidates, all);
    }
}

#[test]
fn small_levels_refute() {
    let cfg = RunConfig::default();
    for (n, m) in [(5, 8), (6, 10)] {
        let r = refute_level(
            n,
            m,
            5,
            Filters::reduced_planar(),
            &CandidateSource::BuiltIn,
            &cfg,
        )
        .unwrap();
        assert_eq!(r.verdict, LevelVerdict::Pass, "({n}, {m})");
        assert_eq!(r.unsat, r.counts.planar);
    }
}

#[test]
fn reduction_agrees_with_unfiltered_refutation() {
    let cfg = RunConfig::default();
    for n in 4..=6 {
        let m = 3 * n / 2 + 1;
        let with = refute_level(
            n,
            m,
            5,
            Filters::reduced_planar(),
            &CandidateSource::BuiltIn,
            &cfg,
        )
        .unwrap();
        let without = refute_level(
            n,
            m,
            5,
            Filters::planar_only(),
            &CandidateSource::BuiltIn,
            &cfg,
        )
        .unwrap();
        assert_eq!(with.verdict, without.verdict, "n = {n}");
    }
}

#[test]
fn levels_are_downward_monotone() {
    let mut cat = GraphCatalog::new();
    for n in 4..=6 {
        let mut sat_above = false;
        for m in (0..=3 * n - 6).rev() {
            let s = enumerate_candidates(
                n,
                m,
                Filters::planar_only(),
                &CandidateSource::BuiltIn,
                &mut cat,
            )
            .unwrap();
            let sat = s
                .iter()
                .any(|g| find_coloring(g, 5, m.max(1) as u32).unwrap().status == SearchStatus::Sat);
            assert!(!sat_above || sat, "({n}, {m})");
            sat_above |= sat;
        }
    }
}

fn check_report(n: usize, k: usize, reduce: bool, expected: usize) {
    let opts = ExtremalOptions {
        reduce,
        ..Default::default()
    };
    let r = compute_extremal(n, k, &opts).unwrap();
    assert_eq!(r.value, Some(expected), "n = {n}, k = {k}");
    let cg = r.achiever.as_ref().unwrap().to_colored().unwrap();
    assert_eq!(cg.graph().edge_count(), expected);
    assert!(cg.is_proper());
    assert!(planar(cg.graph()));
    assert!(is_rainbow_free(&cg, k).unwrap());
    let g6 = decode_graph6(r.achiever_graph6.as_ref().unwrap()).unwrap();
    assert_eq!(&g6, cg.graph());
    match r.refutation.as_ref().unwrap() {
        Refutation::Vacuous { m, .. } => assert_eq!(*m, expected + 1),
        Refutation::Level(l) => {
            assert_eq!(l.m, expected + 1);
            assert_eq!(l.verdict, LevelVerdict::Pass);
            assert_eq!(l.unsat, l.counts.planar);
        }
    }
}

#[test]
fn path5_values() {
    for n in 4..=6 {
        check_report(n, 5, true, 3 * n / 2);
        check_report(n, 5, false, 3 * n / 2);
    }
}

#[test]
fn short_path_values() {
    for n in 3..=6 {
        check_report(n, 3, false, n / 2);
    }
    check_report(4, 4, false, 6);
}

#[test]
fn reduced_chain_reports_its_method() {
    let opts = ExtremalOptions {
        reduce: true,
        ..Default::default()
    };
    let r = compute_extremal(5, 5, &opts).unwrap();
    assert_eq!(r.method, Method::ReducedChain);
    assert!(r.fallback.is_none());
    assert_eq!(r.chain.len(), 4);
    assert_eq!(r.provenance, "built-in");
}

#[test]
fn worker_count_does_not_change_reports() {
    let mut runs = Vec::new();
    for jobs in [1, 3, 8] {
        let opts = ExtremalOptions {
            reduce: true,
            run: RunConfig {
                jobs,
                chunk_size: 2,
                ..Default::default()
            },
            ..Default::default()
        };
        let r = compute_extremal(6, 5, &opts).unwrap();
        runs.push(serde_json::to_string(&r).unwrap());
    }
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}
