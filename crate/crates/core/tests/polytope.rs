use bondkit::graph::{
    cycle_edges, fixture, induced_cycles, random, simple_cycles, Fixture, Graph,
};
use bondkit::oracle::{is_interleaved, InterleaveMethod, Oracle};
use bondkit::polytope::*;
use bondkit::suite::corpus;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Corpus graphs small enough for facet enumeration.
fn small_corpus() -> Vec<(String, Graph)> {
    corpus()
        .into_iter()
        .filter(|(_, g)| g.node_count() <= 8 && g.edge_count() <= 11)
        .step_by(2)
        .collect()
}

fn three_connected_corpus() -> Vec<(String, Graph)> {
    corpus()
        .into_iter()
        .filter(|(_, g)| g.node_count() <= 8 && g.is_k_connected(3))
        .collect()
}

#[test]
fn enumerated_facets_are_facets_and_hold_on_all_bonds() {
    for (name, g) in small_corpus() {
        let facets = facet_enumeration(&g).unwrap();
        let bonds = bond_vectors(&g).unwrap();
        for f in &facets {
            let r = check_inequality(&g, f).unwrap();
            assert!(r.facet_defining, "{name}: {f}");
            let tight = bonds.iter().filter(|x| f.eval(x) == *f.rhs()).count();
            assert_eq!(tight, r.tight_bond_count, "{name}: {f}");
            assert!(bonds.iter().all(|x| f.eval(x) <= *f.rhs()));
        }
    }
}

#[test]
fn homogeneous_facets_of_bond_and_cut_polytopes_coincide() {
    for (name, g) in small_corpus().into_iter().filter(|(_, g)| g.edge_count() <= 9) {
        let homog = |v: Vec<LinearInequality>| -> Vec<LinearInequality> {
            v.into_iter().filter(|f| f.rhs().is_zero()).collect()
        };
        let bond = homog(facet_enumeration(&g).unwrap());
        let cut = homog(cut_facet_enumeration(&g).unwrap());
        assert_eq!(bond, cut, "{name}");
    }
}

fn cut_of(g: &Graph, side: u64) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            (side >> u & 1) != (side >> v & 1)
        })
        .collect()
}

fn is_bond_side(o: &Oracle, side: u64, n: usize) -> bool {
    let canon = if side & 1 == 1 { !side & ((1 << n) - 1) } else { side };
    o.is_bond_mask(canon >> 1)
}

#[test]
fn zero_coefficient_from_four_tight_bonds() {
    let mut applied = 0;
    for (name, g) in small_corpus() {
        let n = g.node_count();
        let o = Oracle::new(&g).unwrap();
        for f in facet_enumeration(&g).unwrap() {
            let tight = |side: u64| is_bond_side(&o, side, n) && f.lhs_on(&cut_of(&g, side)) == *f.rhs();
            for (pq, &(p, q)) in g.edges().iter().enumerate() {
                let rest = ((1u64 << n) - 1) & !(1 << p) & !(1 << q);
                let mut s = rest;
                loop {
                    // s ranges over the subsets of rest, including rest itself
                    let sp = s | 1 << p;
                    let sq = s | 1 << q;
                    if s != rest && tight(s) && tight(sp) && tight(sq) && tight(sp | 1 << q) {
                        applied += 1;
                        assert!(f.coeffs()[pq].is_zero(), "{name}: {f} at edge {pq}");
                    }
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & rest;
                }
            }
        }
    }
    assert!(applied > 0);
}

#[test]
fn tight_bond_through_every_supported_edge() {
    for (name, g) in small_corpus() {
        for f in facet_enumeration(&g).unwrap() {
            if f.is_nonnegativity().is_some() {
                continue;
            }
            let tight = tight_bonds(&g, &f).unwrap();
            for e in f.support() {
                assert!(tight.iter().any(|b| b.contains(e)), "{name}: {f} edge {e}");
            }
        }
    }
}

/// Chordless paths with at least two edges and inner nodes of degree 2,
/// each listed once.
fn induced_paths(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        for &(w, _) in g.neighbors(u) {
            if path.contains(&w) {
                continue;
            }
            let chord = path[..path.len() - 1].iter().any(|&x| g.edge_between(x, w).is_some());
            if chord {
                continue;
            }
            if path.len() >= 2 && g.degree(u) != 2 {
                continue;
            }
            path.push(w);
            if path.len() >= 3 && path[0] < w {
                out.push(path.clone());
            }
            grow(g, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..g.node_count() {
        grow(g, &mut vec![s], &mut out);
    }
    out
}

#[test]
fn path_coefficients_are_flat_or_have_one_peak() {
    let mut applied = 0;
    for (name, g) in small_corpus() {
        let paths = induced_paths(&g);
        for f in facet_enumeration(&g).unwrap() {
            for p in &paths {
                let pe: Vec<usize> = p.windows(2).map(|w| g.edge_between(w[0], w[1]).unwrap()).collect();
                let a: Vec<&BigInt> = pe.iter().map(|&e| &f.coeffs()[e]).collect();
                if a.iter().all(|x| x.is_zero()) || f.is_nonnegativity().is_some_and(|e| pe.contains(&e)) {
                    continue;
                }
                applied += 1;
                let max = *a.iter().max().unwrap();
                let peaks = a.iter().filter(|x| **x == max).count();
                let rest: Vec<&&BigInt> = a.iter().filter(|x| **x != max).collect();
                let flat = peaks == a.len();
                let one_peak = peaks == 1 && rest.windows(2).all(|w| w[0] == w[1]);
                assert!(flat || one_peak, "{name}: {f} on path {p:?}");
            }
        }
    }
    assert!(applied > 0);
}

#[test]
fn non_interleaved_cycles_give_facets_in_three_connected_graphs() {
    for (name, g) in three_connected_corpus() {
        for c in simple_cycles(&g, g.node_count()) {
            if !is_interleaved(&g, &c, InterleaveMethod::Bonds).unwrap().interleaved {
                let r = check_inequality(&g, &cycle_sum(&g, &c).unwrap()).unwrap();
                assert!(r.facet_defining, "{name}: {c:?}");
                let k = induced_cycles(&g, c.len()).contains(&c);
                assert!(k, "{name}: non-interleaved cycle {c:?} has a chord");
            }
        }
    }
}

#[test]
fn facet_cycles_are_maximal_non_interleaved() {
    let mut graphs = three_connected_corpus();
    let sq = fixture(Fixture::TwoSquares);
    graphs.push(("two-squares".into(), sq.graph.clone()));
    for (name, g) in graphs {
        let cycles = simple_cycles(&g, g.node_count());
        let edges: Vec<Vec<usize>> = cycles.iter().map(|c| cycle_edges(&g, c).unwrap()).collect();
        let open: Vec<bool> = cycles
            .iter()
            .map(|c| !is_interleaved(&g, c, InterleaveMethod::Bonds).unwrap().interleaved)
            .collect();
        for (i, c) in cycles.iter().enumerate() {
            if !check_inequality(&g, &cycle_sum(&g, c).unwrap()).unwrap().facet_defining {
                continue;
            }
            for (j, e2) in edges.iter().enumerate() {
                let missing = edges[i].iter().filter(|e| !e2.contains(e)).count();
                assert!(!(missing == 1 && open[j]), "{name}: {c:?} vs {:?}", cycles[j]);
            }
        }
    }
    // both marked cycles are non-interleaved; the square is not a facet,
    // the hexagon through both connecting edges is
    for (name, facet, dim) in [("outer", false, 8), ("mixed", true, 9)] {
        let c = sq.cycle(name).unwrap();
        assert!(!is_interleaved(&sq.graph, c, InterleaveMethod::Bonds).unwrap().interleaved);
        let r = check_inequality(&sq.graph, &cycle_sum(&sq.graph, c).unwrap()).unwrap();
        assert!(r.valid && r.tight, "{name}");
        assert_eq!((r.facet_defining, r.face_dim), (facet, dim), "{name}");
    }
}

#[test]
fn upper_bounds_on_non_interleaved_cycles_are_not_facets() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.node_count() <= 7) {
        let mut on_open = vec![false; g.edge_count()];
        for c in simple_cycles(&g, g.node_count()) {
            if !is_interleaved(&g, &c, InterleaveMethod::Bonds).unwrap().interleaved {
                for e in cycle_edges(&g, &c).unwrap() {
                    on_open[e] = true;
                }
            }
        }
        for e in (0..g.edge_count()).filter(|&e| on_open[e]) {
            assert!(!check_inequality(&g, &edge_upper(&g, e).unwrap()).unwrap().facet_defining, "{name}: {e}");
        }
    }
}

#[test]
fn smallest_valid_cycle_bound_is_tight() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.node_count() <= 7).step_by(3) {
        for c in simple_cycles(&g, g.node_count()) {
            let mut k = 1;
            while !check_inequality(&g, &gen_cycle_sum(&g, &c, k).unwrap()).unwrap().valid {
                k += 1;
            }
            let r = check_inequality(&g, &gen_cycle_sum(&g, &c, k).unwrap()).unwrap();
            assert!(r.tight, "{name}: {c:?} k={k}");
            let mut a = vec![0; g.edge_count()];
            for e in cycle_edges(&g, &c).unwrap() {
                a[e] = 1;
            }
            let below = LinearInequality::from_ints(&a, 2 * (k as i64 - 1)).unwrap();
            assert!(!check_inequality(&g, &below).unwrap().valid, "{name}: {c:?}");
        }
    }
}

#[test]
fn triangle_polytope_is_the_cut_polytope() {
    let g = bondkit::graph::triangle();
    assert_eq!(facet_enumeration(&g).unwrap(), cut_facet_enumeration(&g).unwrap());
    assert_eq!(facet_enumeration(&g).unwrap(), cn_description(3).unwrap());
}

#[test]
fn facet_counts() {
    let cases = [
        (bondkit::graph::cycle(4).unwrap(), 9),
        (bondkit::graph::cycle(6).unwrap(), 13),
        (bondkit::graph::prism(), 26),
        (bondkit::graph::k5_minus_e(), 37),
    ];
    for (g, want) in cases {
        assert_eq!(facet_enumeration(&g).unwrap().len(), want);
    }
    let big = bondkit::graph::wagner(8).unwrap();
    assert!(matches!(
        facet_enumeration_with_cap(&big, 11),
        Err(bondkit::Error::SizeCapExceeded { .. })
    ));
}

#[test]
fn lifting_examples() {
    let w4 = bondkit::graph::wheel(4).unwrap();
    let rim: Vec<usize> = (0..4).collect();
    let f = cycle_sum(&w4, &rim).unwrap();
    // rim node 0 has rim edges 0, 3 and spoke 4
    let r = lift_node_split(&w4, &f, 0, [&[0, 4], &[3]]).unwrap();
    assert_eq!(r.verified(), Some(true));
    assert_eq!(r.coeffs[8], BigRational::from_integer((2 - r.omegas[0]).into()));
    let c5 = bondkit::graph::cycle(5).unwrap();
    let nodes: Vec<usize> = (0..5).collect();
    let h = cycle_homog(&c5, &nodes, 2).unwrap();
    for v in 0..5 {
        let es: Vec<usize> = c5.neighbors(v).iter().map(|&(_, e)| e).collect();
        let r = lift_triangle(&c5, &h, v, [&es[..1], &es[1..], &[]]).unwrap();
        assert_eq!(r.verified(), Some(true));
    }
    let lifted = lifting_trials_ok();
    assert!(lifted);
}

fn lifting_trials_ok() -> bool {
    ["node-split", "triangle", "subdivide", "contract-path"].iter().all(|op| {
        let (done, checked, facets) = bondkit::suite::lifting_trials(op, 30, 7).unwrap();
        done == 30 && checked == facets
    })
}

#[test]
fn contraction_examples() {
    let w4 = bondkit::graph::wheel(4).unwrap();
    assert!(contraction_polytope_check(&w4, 5).unwrap());
    let k4 = bondkit::graph::complete(4).unwrap();
    for e in 0..6 {
        assert!(contraction_polytope_check(&k4, e).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_ignores_positive_scaling(a in prop::collection::vec(-9i64..10, 1..8), b in -9i64..10, k in 1i64..50) {
        prop_assume!(a.iter().any(|&x| x != 0));
        let x = LinearInequality::from_ints(&a, b).unwrap();
        let scaled: Vec<i64> = a.iter().map(|&v| v * k).collect();
        let y = LinearInequality::from_ints(&scaled, b * k).unwrap();
        prop_assert_eq!(&x, &y);
        let q: Vec<BigRational> = a.iter().map(|&v| BigRational::new(v.into(), k.into())).collect();
        let z = LinearInequality::new(&q, &BigRational::new(b.into(), k.into())).unwrap();
        prop_assert_eq!(&x, &z);
        if k > 1 {
            let neg: Vec<i64> = a.iter().map(|&v| -v).collect();
            prop_assert_ne!(x, LinearInequality::from_ints(&neg, -b).unwrap());
        }
    }

    #[test]
    fn switching_twice_is_the_identity(seed in any::<u64>(), n in 3usize..8, mask in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random::connected_graph(&mut rng, n, 2 * n);
        let w: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let a: Vec<i64> = (0..g.edge_count()).map(|i| (seed >> (i % 60) & 3) as i64 - 1).collect();
        prop_assume!(a.iter().any(|&x| x != 0));
        let f = LinearInequality::from_ints(&a, 3).unwrap();
        let once = switch(&f, &g, &w).unwrap();
        prop_assert_eq!(switch(&once, &g, &w).unwrap(), f);
    }

    #[test]
    fn enumeration_on_random_graphs_is_sound(seed in any::<u64>(), n in 2usize..6, extra in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random::connected_graph(&mut rng, n, n - 1 + extra);
        let facets = facet_enumeration(&g).unwrap();
        let bonds = bond_vectors(&g).unwrap();
        prop_assert_eq!(affine_dim(&bonds), g.edge_count() as i64);
        for f in &facets {
            prop_assert!(check_inequality(&g, f).unwrap().facet_defining);
            prop_assert!(f.coeffs().iter().any(|c| !c.is_zero()));
            prop_assert!(!f.rhs().is_negative());
        }
        let mut sorted = facets.clone();
        sorted.sort();
        prop_assert_eq!(sorted, facets);
    }
}
