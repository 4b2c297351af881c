use rainbow_planar::constructions::{make, validate_construction, Construction};
use rainbow_planar::rainbow::is_rainbow_free;

fn passes(spec: &Construction, k: usize) -> bool {
    let cg = make(spec).unwrap();
    validate_construction(&cg, k, spec.expected_edges())
        .unwrap()
        .pass
}

#[test]
fn gn_for_every_n_up_to_sixty() {
    for n in 4..=60 {
        let spec = Construction::Gn { n };
        assert_eq!(spec.expected_edges(), 3 * n / 2);
        assert!(passes(&spec, 5), "n = {n}");
        assert_eq!(make(&spec).unwrap().graph().n(), n);
    }
}

#[test]
fn dense_constructions_avoid_rainbow_p8() {
    for n in (8..=40).step_by(2) {
        let spec = Construction::DoubleWheel { n };
        let cg = make(&spec).unwrap();
        assert!(passes(&spec, 8), "double wheel {n}");
        assert_eq!(cg.colors_used(), 2 * n - 2);
        assert_eq!(cg.graph().edge_count(), 3 * n - 6);
    }
    for n in (9..=39).step_by(2) {
        let spec = Construction::K2Path { n };
        let cg = make(&spec).unwrap();
        assert!(passes(&spec, 8), "K2 + path {n}");
        assert_eq!(cg.colors_used(), 2 * n - 3);
        assert_eq!(cg.graph().edge_count(), 3 * n - 6);
    }
}

#[test]
fn class_one_witnesses() {
    let oct = make(&Construction::Octahedron).unwrap();
    assert!(passes(&Construction::Octahedron, 6));
    assert_eq!((oct.graph().edge_count(), oct.colors_used()), (12, 4));
    let ico = make(&Construction::Icosahedron).unwrap();
    assert!(passes(&Construction::Icosahedron, 7));
    assert_eq!((ico.graph().edge_count(), ico.colors_used()), (30, 5));
    assert!(ico.graph().degrees().iter().all(|&d| d == 5));
}

#[test]
fn disjoint_copies_stay_rainbow_free() {
    for base in [
        Construction::G5,
        Construction::Gn { n: 10 },
        Construction::Octahedron,
        Construction::K4Blocks { n: 4 },
    ] {
        let k = base.path_length();
        for copies in 1..=4 {
            let spec = Construction::DisjointCopies {
                base: Box::new(base.clone()),
                copies,
            };
            let cg = make(&spec).unwrap();
            assert!(is_rainbow_free(&cg, k).unwrap());
            assert!(passes(&spec, k));
        }
    }
}

#[test]
fn k4_blocks_have_no_rainbow_p4() {
    for n in (4..=40).step_by(4) {
        assert!(passes(&Construction::K4Blocks { n }, 4));
    }
}
