use bondkit::graph::{random, wheel, Graph};
use bondkit::oracle::{max_bond_oracle, Constraint, Oracle};
use bondkit::solver::{
    k5e_max_bond, max_bond, solve, solve_skeleton_p, solve_skeleton_s, wheel_max_bond, SolveMode,
};
use bondkit::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn per_component_oracle(g: &Graph, w: &[i64]) -> i64 {
    let mut best = 0;
    for comp in g.connected_components() {
        let (h, ids) = g.induced_subgraph(&comp).unwrap();
        let hw: Vec<i64> = ids.iter().map(|&e| w[e]).collect();
        best = best.max(max_bond_oracle(&h, &hw, &Constraint::none()).unwrap().value);
    }
    best
}

fn assert_is_bond(g: &Graph, edges: &[usize]) {
    if edges.is_empty() {
        return;
    }
    // removing a bond splits exactly one component into two
    let before = g.connected_components().len();
    let mut seen = vec![false; g.node_count()];
    let mut after = 0;
    for s in 0..g.node_count() {
        if !seen[s] {
            g.reach(s, &mut seen, |e| !edges.contains(&e));
            after += 1;
        }
    }
    assert_eq!(after, before + 1, "{edges:?} is not a bond");
    for &e in edges {
        let (u, v) = g.edge(e);
        let mut seen = vec![false; g.node_count()];
        g.reach(u, &mut seen, |f| !edges.contains(&f) || f == e);
        assert!(seen[v]);
    }
}

#[test]
fn solver_matches_oracle_on_random_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..600 {
        let n = rng.gen_range(1..11);
        let m = rng.gen_range(0..21);
        let g = random::connected_graph(&mut rng, n, m);
        let w = random::weights(&mut rng, g.edge_count(), -20, 20);
        let fast = max_bond(&g, &w).unwrap();
        let slow = max_bond_oracle(&g, &w, &Constraint::none()).unwrap();
        assert_eq!(fast.value, slow.value, "{:?} {w:?}", g.edges());
        assert_eq!(fast.bond.weight(&w), fast.value);
        assert_is_bond(&g, &fast.bond.edges);
        assert!(!fast.bond.side.contains(&0));
        let direct = solve(&g, &w, SolveMode::Oracle).unwrap().result;
        assert_eq!(direct.value, slow.value);
    }
}

#[test]
fn solver_handles_disconnected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..200 {
        let a = random::connected_graph(&mut rng, 5, 7);
        let b = random::connected_graph(&mut rng, 4, 5);
        let mut pairs = a.edges().to_vec();
        pairs.extend(b.edges().iter().map(|&(u, v)| (u + 5, v + 5)));
        let g = Graph::new(10, &pairs).unwrap();
        let w = random::weights(&mut rng, g.edge_count(), -10, 10);
        let r = max_bond(&g, &w).unwrap();
        assert_eq!(r.value, per_component_oracle(&g, &w));
        assert_is_bond(&g, &r.bond.edges);
    }
}

#[test]
fn k5e_solver_matches_oracle_on_small_wheel_chains() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let count = rng.gen_range(1..4);
        let rims: Vec<usize> = (0..count).map(|_| rng.gen_range(3..6)).collect();
        let g = random::wheel_chain(&rims);
        if g.node_count() > 16 {
            continue;
        }
        let w = random::weights(&mut rng, g.edge_count(), -20, 20);
        let fast = k5e_max_bond(&g, &w).unwrap();
        let slow = max_bond_oracle(&g, &w, &Constraint::none()).unwrap();
        assert_eq!(fast.value, slow.value);
        assert_eq!(fast.bond.weight(&w), fast.value);
    }
}

fn random_wheel_constraint(rng: &mut ChaCha8Rng, n: usize) -> Constraint {
    let mut c = Constraint::none();
    for e in 0..2 * n {
        match rng.gen_range(0..10) {
            0 => c.forced_in.push(e),
            1 => c.forced_out.push(e),
            _ => {}
        }
    }
    c
}

#[test]
fn wheel_solver_matches_oracle_with_constraints() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..3000 {
        let n = rng.gen_range(3..13);
        let g = wheel(n).unwrap();
        let w = random::weights(&mut rng, 2 * n, -20, 20);
        let c = if rng.gen_bool(0.3) {
            Constraint::none()
        } else {
            random_wheel_constraint(&mut rng, n)
        };
        let fast = wheel_max_bond(&w[..n], &w[n..], &c);
        let slow = max_bond_oracle(&g, &w, &c);
        match (fast, slow) {
            (Ok(f), Ok(s)) => {
                assert_eq!(f.value, s.value, "n={n} w={w:?} c={c:?}");
                let chosen: i64 = f.edges.iter().map(|&e| w[e]).sum();
                assert_eq!(chosen, f.value);
                assert_is_bond(&g, &f.edges);
                assert!(c.forced_in.iter().all(|e| f.edges.contains(e)));
                assert!(c.forced_out.iter().all(|e| !f.edges.contains(e)));
            }
            (Err(Error::Infeasible), Err(Error::Infeasible)) => {}
            (f, s) => panic!("n={n} w={w:?} c={c:?}: {f:?} vs {s:?}"),
        }
    }
}

/// Forcing an edge in by adding a large weight picks the same optimum as
/// the native constraint.
fn big_m_value(g: &Graph, w: &[i64], e: usize) -> i64 {
    let big = 1 + 2 * w.iter().map(|x| x.abs()).sum::<i64>();
    let mut wb = w.to_vec();
    wb[e] += big;
    max_bond_oracle(g, &wb, &Constraint::none()).unwrap().value - big
}

#[test]
fn forced_in_agrees_with_big_m_weighting() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..300 {
        let g = match rng.gen_range(0..3) {
            0 => wheel(rng.gen_range(3..8)).unwrap(),
            1 => random::two_connected_graph(&mut rng, 7, 4),
            _ => bondkit::graph::cycle(rng.gen_range(3..9)).unwrap(),
        };
        let w = random::weights(&mut rng, g.edge_count(), -15, 15);
        let e = rng.gen_range(0..g.edge_count());
        let c = Constraint {
            forced_in: vec![e],
            ..Constraint::none()
        };
        let native = max_bond_oracle(&g, &w, &c).unwrap().value;
        assert_eq!(native, big_m_value(&g, &w, e));
        if let Some(n) = (3..).take(10).find(|&n| g == wheel(n).unwrap()) {
            assert_eq!(wheel_max_bond(&w[..n], &w[n..], &c).unwrap().value, native);
        }
        if g.edge_count() == g.node_count() {
            assert_eq!(solve_skeleton_s(&w, &c).unwrap().value, native);
        }
    }
}

#[test]
fn bond_skeleton_is_all_or_nothing() {
    let w = [3, -1, -4];
    assert_eq!(solve_skeleton_p(&w, &Constraint::none()).unwrap().value, 0);
    let c = Constraint {
        forced_in: vec![1],
        ..Constraint::none()
    };
    assert_eq!(solve_skeleton_p(&w, &c).unwrap().value, -2);
    let both = Constraint {
        forced_in: vec![0],
        forced_out: vec![2],
        separate: None,
    };
    assert_eq!(solve_skeleton_p(&w, &both), Err(Error::Infeasible));
}

#[test]
fn forced_out_equals_contraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..300 {
        let g = random::two_connected_graph(&mut rng, 7, 3);
        let w = random::weights(&mut rng, g.edge_count(), -10, 10);
        let e = rng.gen_range(0..g.edge_count());
        let c = Constraint {
            forced_out: vec![e],
            ..Constraint::none()
        };
        let kept = max_bond_oracle(&g, &w, &c).unwrap().value;
        let con = g.contract_edge(e).unwrap();
        let mut cw = vec![0; con.graph.edge_count()];
        for (f, img) in con.edge_map.iter().enumerate() {
            if let Some(i) = img {
                cw[*i] += w[f];
            }
        }
        let contracted = Oracle::new(&con.graph).unwrap().max_bond(&cw, &Constraint::none()).unwrap();
        assert_eq!(kept, contracted.value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn result_is_a_bond_of_its_value(seed in any::<u64>(), n in 2usize..10, extra in 0usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random::connected_graph(&mut rng, n, n - 1 + extra);
        let w = random::weights(&mut rng, g.edge_count(), -20, 20);
        let r = max_bond(&g, &w).unwrap();
        prop_assert!(r.value >= 0);
        prop_assert_eq!(r.bond.weight(&w), r.value);
        prop_assert_eq!(r.value, max_bond_oracle(&g, &w, &Constraint::none()).unwrap().value);
    }
}
