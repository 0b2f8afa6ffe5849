use bondkit::graph::{random, two_sum, wheel, Graph};
use bondkit::spqr::{spr_tree, spr_tree_reference, validate, SkeletonKind};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn agree(g: &Graph) {
    let fast = spr_tree(g).unwrap();
    let report = validate(&fast, g);
    assert!(report.ok, "{:?}\n{:?}", report.diagnostics, g.edges());
    let slow = spr_tree_reference(g).unwrap();
    assert_eq!(fast.canonical_form(), slow.canonical_form(), "{:?}", g.edges());
}

#[test]
fn fast_matches_reference_on_random_two_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3000 {
        let n = rng.gen_range(3..13);
        let extra = rng.gen_range(0..n);
        agree(&random::two_connected_graph(&mut rng, n, extra));
    }
}

#[test]
fn fast_matches_reference_on_glued_wheels() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let mut g = wheel(rng.gen_range(3..6)).unwrap();
        for _ in 0..rng.gen_range(1..4) {
            let h = wheel(rng.gen_range(3..6)).unwrap();
            let (e1, e2) = (rng.gen_range(0..g.edge_count()), rng.gen_range(0..h.edge_count()));
            let strict = rng.gen_bool(0.5);
            g = two_sum(&g, e1, &h, e2, rng.gen_bool(0.5), strict).unwrap().0;
        }
        agree(&g);
    }
}

#[test]
fn long_wheel_chain_is_handled_iteratively() {
    let rims: Vec<usize> = (0..10_000).map(|i| 3 + i % 5).collect();
    let g = random::wheel_chain(&rims);
    let t = spr_tree(&g).unwrap();
    assert_eq!(t.count(SkeletonKind::R), 10_000);
    assert_eq!(t.count(SkeletonKind::P), 9_999);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_tree_validates(seed in any::<u64>(), n in 3usize..11, extra in 0usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random::two_connected_graph(&mut rng, n, extra);
        let t = spr_tree(&g).unwrap();
        let report = validate(&t, &g);
        prop_assert!(report.ok, "{:?}", report.diagnostics);
    }
}
