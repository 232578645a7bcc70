use hyperbasis::format::{
    from_json, inline_hg, parse_any, parse_colouring, parse_decomposition, parse_hg, parse_inline_hg, parse_motif,
    serialize_colouring, serialize_decomposition, serialize_hg, serialize_motif, to_json,
};
use hyperbasis::model::basis::{expansion, ExpansionKind};
use hyperbasis::model::invariants::TreeDecomposition;
use hyperbasis::model::{Hypergraph, VertexSet};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=6).prop_flat_map(|n| {
        let subsets: Vec<u64> = (1..1u64 << n).collect();
        let len = subsets.len();
        subsequence(subsets, 0..=len.min(10))
            .prop_map(move |masks| Hypergraph::new(n, masks.into_iter().map(VertexSet)).unwrap())
    })
}

proptest! {
    #[test]
    fn text_json_and_inline_round_trip(h in hypergraph()) {
        let text = serialize_hg(&h);
        let parsed = parse_hg(&text).unwrap();
        prop_assert!(parsed.warnings.is_empty());
        prop_assert_eq!(&parsed.value, &h);
        prop_assert_eq!(&from_json(&to_json(&h)).unwrap(), &h);
        prop_assert_eq!(&parse_inline_hg(&inline_hg(&h)).unwrap().value, &h);
        prop_assert_eq!(&parse_any(&to_json(&h)).unwrap().value, &h);
        // serialization is canonical for a labelled hypergraph
        prop_assert_eq!(serialize_hg(&parsed.value), text);
    }

    #[test]
    fn colouring_round_trip(c in proptest::collection::vec(0usize..5, 0..8)) {
        prop_assert_eq!(parse_colouring(&serialize_colouring(&c), c.len()).unwrap(), c);
    }
}

#[test]
fn motif_round_trip() {
    let h = Hypergraph::from_lists(3, &[&[0, 1], &[1, 2]]).unwrap();
    for kind in ExpansionKind::ALL {
        let gamma = expansion(kind, &h).unwrap();
        assert_eq!(parse_motif(&serialize_motif(&gamma)).unwrap(), gamma, "{}", kind.name());
    }
}

#[test]
fn decomposition_round_trip() {
    let d = TreeDecomposition {
        bags: vec![VertexSet::from_vertices([0, 1]), VertexSet::from_vertices([1, 2]), VertexSet::from_vertices([2])],
        tree: vec![(0, 1), (1, 2)],
    };
    assert_eq!(parse_decomposition(&serialize_decomposition(&d)).unwrap(), d);
}

#[test]
fn malformed_inputs_name_the_line() {
    let cases = [
        ("p hg 2\ne 0 1\n", 1, "malformed header"),
        ("# c\np hg 2 1\ne 0 2\n", 3, "out of range"),
        ("p hg 2 1\ne\n", 2, "empty edge"),
        ("e 0\np hg 1 1\n", 1, "before"),
    ];
    for (text, line, fragment) in cases {
        let e = parse_hg(text).unwrap_err();
        assert_eq!(e.line, line, "{text:?}");
        assert!(e.message.contains(fragment), "{text:?}: {}", e.message);
    }
}
