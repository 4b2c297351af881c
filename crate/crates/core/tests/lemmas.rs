use rainbow_planar::colorer::oracle_enumerate;
use rainbow_planar::lemmas::{
    enumerate_schemes, verify_lemma, LemmaId, LemmaVerdict, Template, TemplateId,
};
use rainbow_planar::rainbow::is_rainbow_free;

#[test]
fn class_counts_match_oracle() {
    // golden values from the brute-force oracle
    let golden = [
        (TemplateId::BowTie, 1),
        (TemplateId::Fish, 2),
        (TemplateId::MediumPair, 5),
        (TemplateId::HeavyPair, 3),
    ];
    for (id, count) in golden {
        let t = Template::new(id);
        let classes = enumerate_schemes(&t, 5).unwrap();
        assert_eq!(classes.len(), count, "{}", id.as_str());
        assert_eq!(oracle_enumerate(&t.graph, 5).unwrap(), count as u64);
        for c in &classes {
            assert!(c.representative.is_proper());
            assert!(is_rainbow_free(&c.representative, 5).unwrap());
            assert!(c.representative.is_normalized());
        }
    }
}

#[test]
fn every_lemma_passes_and_reports() {
    for id in LemmaId::ALL {
        let r = verify_lemma(id).unwrap();
        assert_eq!(r.verdict, LemmaVerdict::Pass, "{id}");
        assert!(r.counterexample.is_none());
        assert_eq!(r.representatives.len(), r.class_count);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["lemma"], id.as_str());
        assert_eq!(json["verdict"], "PASS");
    }
}

#[test]
fn medium_pair_uses_both_schemes() {
    let classes = enumerate_schemes(&Template::new(TemplateId::MediumPair), 5).unwrap();
    let three = classes
        .iter()
        .filter(|c| c.predicate_flags.contains(&"three-color-scheme"))
        .count();
    let four = classes
        .iter()
        .filter(|c| c.predicate_flags.contains(&"four-color-scheme"))
        .count();
    assert_eq!((three, four), (2, 3));
}
