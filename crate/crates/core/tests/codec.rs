use proptest::prelude::*;
use rainbow_planar::codec::{colored_from_json, colored_to_json, decode_graph6, encode_graph6};
use rainbow_planar::{ColoredGraph, Graph};

const REFERENCE: &str = include_str!("data/graph6_reference.txt");

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::new(n, &edges).unwrap()
}

#[test]
fn byte_exact_against_reference_encoder() {
    let mut seen = 0;
    for line in REFERENCE.lines().filter(|l| !l.starts_with('#')) {
        let mut it = line.split(' ');
        let n: usize = it.next().unwrap().parse().unwrap();
        let mask: u64 = it.next().unwrap().parse().unwrap();
        let text = it.next().unwrap();
        let g = from_mask(n, mask);
        assert_eq!(encode_graph6(&g).unwrap(), text, "n = {n}, mask = {mask}");
        assert_eq!(decode_graph6(text).unwrap(), g, "{text}");
        seen += 1;
    }
    // every labeled graph on at most six vertices
    let expected: usize = (0..=6).map(|n| 1usize << (n * (n.max(1) - 1) / 2)).sum();
    assert_eq!(seen, expected);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let edges: Vec<_> = pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| p)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_roundtrips(g in arb_graph(62)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode_graph6(&text).unwrap(), g);
    }

    #[test]
    fn colored_json_roundtrips(g in arb_graph(10), seed in proptest::collection::vec(1u32..20, 45)) {
        let colors: Vec<u32> = (0..g.edge_count()).map(|i| seed[i]).collect();
        let cg = ColoredGraph::new(g, colors).unwrap();
        let text = colored_to_json(&cg, None);
        prop_assert_eq!(colored_from_json(&text).unwrap(), cg);
    }
}

#[test]
fn oversized_graphs_are_refused() {
    assert!(encode_graph6(&Graph::empty(63)).is_err());
}
