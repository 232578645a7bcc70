use hyperbasis_core::basis::{evaluate, expansion, ExpansionKind};
use hyperbasis_core::canon::{brute_force_isomorphic, canonical_key, count_automorphisms, is_isomorphic};
use hyperbasis_core::counting::{count_morphisms, count_patterns_direct, Budget, MorphismKind, PatternKind};
use hyperbasis_core::invariants::{fractional_invariant, integral_invariant, FractionalKind, IntegralKind};
use hyperbasis_core::partition::{partitions, quotient, Partition};
use hyperbasis_core::tensor::{tensor, VertexPairIndex};
use hyperbasis_core::{Hypergraph, Rational, VertexSet};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(|n| {
        let subsets: Vec<u64> = (1..1u64 << n).collect();
        let len = subsets.len();
        subsequence(subsets, 0..=len.min(8))
            .prop_map(move |masks| Hypergraph::new(n, masks.into_iter().map(VertexSet)).unwrap())
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Hypergraph, Vec<usize>)> {
    hypergraph(max_n).prop_flat_map(|h| {
        let perm = Just((0..h.vertex_count()).collect::<Vec<_>>()).prop_shuffle();
        (Just(h), perm)
    })
}

fn with_partition(max_n: usize) -> impl Strategy<Value = (Hypergraph, Partition)> {
    hypergraph(max_n).prop_flat_map(|h| {
        let n = h.vertex_count();
        let assignment = proptest::collection::vec(0..n, n);
        (Just(h), assignment.prop_map(|a| Partition::from_assignment(&a)))
    })
}

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_key_ignores_labels((h, perm) in with_permutation(6)) {
        let relabelled = h.relabel(&perm);
        prop_assert_eq!(canonical_key(&h).unwrap(), canonical_key(&relabelled).unwrap());
        prop_assert!(is_isomorphic(&h, &relabelled).unwrap());
        prop_assert_eq!(count_automorphisms(&h).unwrap(), count_automorphisms(&relabelled).unwrap());
    }

    #[test]
    fn canonical_key_agrees_with_brute_force(a in hypergraph(4), b in hypergraph(4)) {
        let keys_equal = canonical_key(&a).unwrap() == canonical_key(&b).unwrap();
        prop_assert_eq!(keys_equal, brute_force_isomorphic(&a, &b));
    }

    #[test]
    fn quotient_edges_are_merged_images((h, tau) in with_partition(5)) {
        let q = quotient(&h, &tau).unwrap();
        prop_assert_eq!(q.vertex_count(), tau.block_count());
        let images: std::collections::BTreeSet<u64> =
            h.edges().iter().map(|&e| tau.quotient_set(e).bits()).collect();
        let edges: std::collections::BTreeSet<u64> = q.edges().iter().map(|e| e.bits()).collect();
        prop_assert_eq!(images, edges);
        // the quotient map is a homomorphism onto the quotient
        let hom = count_morphisms(MorphismKind::Hom, &h, &q, &Budget::default()).unwrap();
        prop_assert!(hom >= 1);
    }

    #[test]
    fn embeddings_are_automorphisms_times_copies(h in hypergraph(3), g in hypergraph(4)) {
        let budget = Budget::default();
        let aut = count_automorphisms(&h).unwrap();
        for kind in PatternKind::ALL {
            let emb = count_morphisms(kind.embedding_kind(), &h, &g, &budget).unwrap();
            let copies = count_patterns_direct(kind, &h, &g, &budget).unwrap();
            prop_assert_eq!(emb, aut * copies, "{}", kind.name());
        }
    }

    #[test]
    fn emb_expansion_evaluates_to_embeddings(h in hypergraph(3), g in hypergraph(4)) {
        let budget = Budget::default();
        for kind in [ExpansionKind::Emb, ExpansionKind::StrEmb, ExpansionKind::Sub, ExpansionKind::IndSub] {
            let gamma = expansion(kind, &h).unwrap();
            let value = evaluate(&gamma, &g, MorphismKind::Hom, &budget).unwrap();
            prop_assert_eq!(value, int(kind.count(&h, &g, &budget).unwrap()), "{}", kind.name());
        }
    }

    #[test]
    fn tensor_multiplies_hom_counts(f in hypergraph(3), g in hypergraph(3), h in hypergraph(3)) {
        let budget = Budget::default();
        let t = tensor(&g, &h).unwrap();
        prop_assert_eq!(t.vertex_count(), g.vertex_count() * h.vertex_count());
        let left = count_morphisms(MorphismKind::Hom, &f, &g, &budget).unwrap();
        let right = count_morphisms(MorphismKind::Hom, &f, &h, &budget).unwrap();
        prop_assert_eq!(count_morphisms(MorphismKind::Hom, &f, &t, &budget).unwrap(), left * right);
        // every edge projects onto an edge of each factor
        let index = VertexPairIndex::new(g.vertex_count(), h.vertex_count());
        for &e in t.edges() {
            let (a, b) = index.projections(e);
            prop_assert!(g.has_edge(a) && h.has_edge(b));
        }
    }

    #[test]
    fn cover_and_independence_are_dual(h in hypergraph(7)) {
        let budget = Budget::default();
        let rho_star = fractional_invariant(FractionalKind::RhoStar, &h, None).unwrap();
        let alpha_star = fractional_invariant(FractionalKind::AlphaStar, &h, None).unwrap();
        prop_assert_eq!(&rho_star, &alpha_star);
        let rho = integral_invariant(IntegralKind::Rho, &h, &budget).unwrap();
        let alpha = integral_invariant(IntegralKind::Alpha, &h, &budget).unwrap();
        prop_assert!(int(alpha as u64) <= alpha_star);
        prop_assert!(rho_star <= int(rho as u64));
    }
}

#[test]
fn partition_refinement_is_a_lattice_order() {
    let all: Vec<Partition> = partitions(4).unwrap().collect();
    for a in &all {
        assert!(a.refines(a));
        assert!(Partition::discrete(4).refines(a));
        assert!(a.refines(&Partition::single_block(4)));
        for b in &all {
            if a.refines(b) && b.refines(a) {
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn quotients_compose() {
    // (H/σ)/τ' equals H/τ when τ is σ coarsened by τ'
    let h = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2, 3], &[3]]).unwrap();
    for sigma in partitions(4).unwrap() {
        let hs = quotient(&h, &sigma).unwrap();
        for outer in partitions(sigma.block_count()).unwrap() {
            let tau = sigma.coarsen(&outer);
            assert_eq!(quotient(&hs, &outer).unwrap(), quotient(&h, &tau).unwrap());
        }
    }
}
