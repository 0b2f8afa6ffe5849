//! Reproduction checks run by `bondkit suite` and the acceptance tests.

use crate::error::{Error, Result};
use crate::graph::{
    complete, cycle, fixture, generate, k33, k5_minus_e, outer_cycle, prism, random, simple_cycles,
    triangle, wagner, wheel, Fixture, Graph, GraphFamilyTag,
};
use crate::oracle::{is_interleaved, max_bond_oracle, Constraint, InterleaveMethod};
use crate::polytope::{
    affine_dim, bond_vectors, check_inequality, cn_description, contract_path_to_edge, contraction_polytope_check,
    edge_cycle_description, edge_upper, facet_enumeration, gen_cycle_sum, cycle_sum, lift_node_split,
    lift_subdivide, lift_triangle, verify_description, wheel_description, Lifted, LinearInequality,
};
use crate::solver::{k5e_max_bond, max_bond, wheel_max_bond};
use crate::spqr::{spr_tree, validate, SkeletonKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub number: usize,
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

pub struct Check {
    pub number: usize,
    pub id: &'static str,
    pub title: &'static str,
    run: fn() -> Result<(bool, String)>,
}

impl Check {
    pub fn run(&self) -> CheckOutcome {
        let start = Instant::now();
        let (passed, detail) = match (self.run)() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        CheckOutcome {
            number: self.number,
            id: self.id,
            title: self.title,
            passed,
            detail,
            elapsed: start.elapsed(),
        }
    }
}

pub fn checks() -> Vec<Check> {
    let list: [(&'static str, &'static str, fn() -> Result<(bool, String)>); 12] = [
        ("oracle-equivalence", "solver agrees with the bond oracle on random graphs", oracle_equivalence),
        ("cycle-facets", "facets of cycle bond polytopes", cycle_facets),
        ("wheel-prism-facets", "facets of wheel and prism bond polytopes", wheel_prism_facets),
        ("k5e-facet", "mixed-sign facet of K5 - e", k5e_facet),
        ("wagner-facets", "Wagner cycle and edge facets, K5 non-facet", wagner_facets),
        ("cycle-sum-examples", "cycle sums on K3,3, C6 and the hexagon fixtures", cycle_sum_examples),
        ("interleave-methods", "path and bond interleaving tests agree", interleave_methods),
        ("dimension", "bond polytopes are full-dimensional", dimension),
        ("lifting", "lifting operations produce facets", lifting),
        ("linear-time", "wheel and wheel-chain solvers: speed and exactness", linear_time),
        ("spr-tree", "SPR trees validate and have the expected shapes", spr_trees),
        ("contraction", "contraction matches the x_e = 0 face", contraction),
    ];
    list.into_iter()
        .enumerate()
        .map(|(i, (id, title, run))| Check {
            number: i + 1,
            id,
            title,
            run,
        })
        .collect()
}

/// Runs every check whose id contains `filter`, in order.
pub fn run(filter: Option<&str>) -> Vec<CheckOutcome> {
    checks()
        .iter()
        .filter(|c| filter.is_none_or(|f| c.id.contains(f) || c.number.to_string() == f))
        .map(Check::run)
        .collect()
}

/// Named generator graphs with at most `max_nodes` nodes.
pub fn generator_corpus(max_nodes: usize) -> Vec<(String, Graph)> {
    let mut tags = vec![GraphFamilyTag::K3, GraphFamilyTag::Prism, GraphFamilyTag::K33, GraphFamilyTag::K5MinusE];
    tags.extend((3..=max_nodes).map(GraphFamilyTag::Cycle));
    tags.extend((3..max_nodes).map(GraphFamilyTag::Wheel));
    tags.extend((6..=max_nodes).step_by(2).map(GraphFamilyTag::Wagner));
    tags.extend((4..=max_nodes).map(GraphFamilyTag::Complete));
    tags.into_iter()
        .map(|t| (t.to_string(), generate(t).expect("valid tag")))
        .filter(|(_, g)| g.node_count() <= max_nodes)
        .collect()
}

/// Generators on up to 9 nodes, the fixtures and seeded random graphs.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = generator_corpus(9);
    for f in Fixture::ALL {
        out.push((f.name().to_string(), fixture(f).graph));
    }
    out.extend(random_corpus(200, 8));
    out
}

/// Seeded random connected graphs with 3 to `max_nodes` nodes.
pub fn random_corpus(count: usize, max_nodes: usize) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb0d5);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(3..=max_nodes);
            let m = rng.gen_range(n - 1..=(2 * n).min(n * (n - 1) / 2));
            (format!("random-{i}"), random::connected_graph(&mut rng, n, m))
        })
        .collect()
}

fn oracle_equivalence() -> Result<(bool, String)> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut bad = Vec::new();
    for i in 0..500 {
        let n = rng.gen_range(2..=10);
        let m = rng.gen_range(n - 1..=20);
        let g = random::connected_graph(&mut rng, n, m);
        let w = random::weights(&mut rng, g.edge_count(), -20, 20);
        let fast = max_bond(&g, &w)?;
        let slow = max_bond_oracle(&g, &w, &Constraint::none())?;
        if fast.value != slow.value || fast.bond.weight(&w) != fast.value {
            bad.push(i);
        }
    }
    let t = start.elapsed();
    Ok((
        bad.is_empty() && t < Duration::from_secs(60),
        format!("500 graphs, {} mismatches {:?}, {:.2?} (limit 60 s)", bad.len(), bad, t),
    ))
}

fn cycle_facets() -> Result<(bool, String)> {
    let start = Instant::now();
    let mut wrong = Vec::new();
    for n in 3..=8 {
        if !verify_description(&cycle(n)?, &cn_description(n)?)?.equal {
            wrong.push(n);
        }
    }
    let t = start.elapsed();
    Ok((
        wrong.is_empty() && t < Duration::from_secs(30),
        format!("C3..C8, mismatching n: {wrong:?}, {t:.2?} (limit 30 s)"),
    ))
}

fn wheel_prism_facets() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 3..=5 {
        let d = verify_description(&wheel(n)?, &wheel_description(n)?)?;
        ok &= d.equal;
        parts.push(format!("W{n}: {}", if d.equal { "equal" } else { "differs" }));
    }
    let p = prism();
    let d = verify_description(&p, &edge_cycle_description(&p)?)?;
    ok &= d.equal;
    parts.push(format!(
        "prism: {} ({} missing, {} extra)",
        if d.equal { "equal" } else { "differs" },
        d.missing.len(),
        d.extra.len()
    ));
    Ok((ok, parts.join(", ")))
}

fn k5e_facet() -> Result<(bool, String)> {
    let g = k5_minus_e();
    let ineq = LinearInequality::from_ints(&[1, 1, 0, 1, 1, 0, 1, -1, -1], 2)?;
    let r = check_inequality(&g, &ineq)?;
    let facets = facet_enumeration(&g)?;
    let listed = facets.contains(&ineq);
    Ok((
        r.facet_defining && listed,
        format!(
            "{ineq}: facet {}, among the {} enumerated facets: {listed}",
            r.facet_defining,
            facets.len()
        ),
    ))
}

fn wagner_facets() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [6, 8] {
        let g = wagner(n)?;
        let outer = outer_cycle(GraphFamilyTag::Wagner(n)).expect("Wagner graphs have an outer cycle");
        let cyc = check_inequality(&g, &gen_cycle_sum(&g, &outer, 2)?)?.facet_defining;
        let mut edges_ok = true;
        for e in 0..g.edge_count() {
            edges_ok &= check_inequality(&g, &edge_upper(&g, e)?)?.facet_defining;
        }
        ok &= cyc && edges_ok;
        parts.push(format!("V{n}: outer sum <= 4 facet {cyc}, all x_e <= 1 facets {edges_ok}"));
    }
    let k5 = complete(5)?;
    let r = check_inequality(&k5, &gen_cycle_sum(&k5, &[0, 1, 2, 3, 4], 2)?)?;
    let k5_ok = r.valid && r.tight && !r.facet_defining;
    ok &= k5_ok;
    parts.push(format!(
        "K5 5-cycle sum <= 4: valid {}, tight {}, facet {}",
        r.valid, r.tight, r.facet_defining
    ));
    Ok((ok, parts.join("; ")))
}

fn cycle_sum_examples() -> Result<(bool, String)> {
    let g = k33();
    let c6 = outer_cycle(GraphFamilyTag::K33).expect("K3,3 has an outer cycle");
    let a = check_inequality(&g, &gen_cycle_sum(&g, &c6, 2)?)?;
    let c = cycle(6)?;
    let b = check_inequality(&c, &gen_cycle_sum(&c, &(0..6).collect::<Vec<_>>(), 2)?)?;
    let hex = fixture(Fixture::HexFacet);
    let outer = hex.cycle("outer").expect("fixture cycle");
    let h = check_inequality(&hex.graph, &cycle_sum(&hex.graph, outer)?)?;
    let plus = fixture(Fixture::HexFacetPlusEdge);
    let p = check_inequality(&plus.graph, &cycle_sum(&plus.graph, plus.cycle("outer").expect("fixture cycle"))?)?;
    let witness = p.violating_bond.as_ref().map(|v| v.edges.clone());
    let ok = a.facet_defining && b.valid && !b.tight && h.facet_defining && !p.valid && witness.is_some();
    Ok((
        ok,
        format!(
            "K3,3 sum <= 4 facet {}; C6 sum <= 4 valid {} tight {}; hexagon sum <= 2 facet {}; with extra edge valid {} (violated by edges {:?})",
            a.facet_defining, b.valid, b.tight, h.facet_defining, p.valid, witness
        ),
    ))
}

fn interleave_methods() -> Result<(bool, String)> {
    let mut graphs = generator_corpus(9);
    graphs.extend(random_corpus(200, 8));
    let mut cycles = 0;
    let mut bad = Vec::new();
    for (name, g) in &graphs {
        for c in simple_cycles(g, g.node_count()) {
            cycles += 1;
            let p = is_interleaved(g, &c, InterleaveMethod::Paths)?.interleaved;
            let b = is_interleaved(g, &c, InterleaveMethod::Bonds)?.interleaved;
            if p != b {
                bad.push(format!("{name} {c:?}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} graphs, {cycles} cycles, {} disagreements {:?}", graphs.len(), bad.len(), bad.first()),
    ))
}

fn dimension() -> Result<(bool, String)> {
    let graphs = corpus();
    let bad: Vec<String> = graphs
        .iter()
        .filter(|(_, g)| bond_vectors(g).map(|v| affine_dim(&v)) != Ok(g.edge_count() as i64))
        .map(|(n, _)| n.clone())
        .collect();
    Ok((bad.is_empty(), format!("{} graphs, wrong dimension: {bad:?}", graphs.len())))
}

/// Seeded lifting runs: `(attempts that met the hypotheses, outputs checked, facets among them)`.
pub fn lifting_trials(op: &str, applications: usize, seed: u64) -> Result<(usize, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bases: Vec<(Graph, Vec<LinearInequality>)> = Vec::new();
    let sizes: Vec<GraphFamilyTag> = if op == "contract-path" {
        (4..=6).map(GraphFamilyTag::Cycle).collect()
    } else {
        (3..=6)
            .map(GraphFamilyTag::Cycle)
            .chain((3..=4).map(GraphFamilyTag::Wheel))
            .collect()
    };
    for t in sizes {
        let g = generate(t)?;
        let f = facet_enumeration(&g)?;
        bases.push((g, f));
    }
    let (mut done, mut checked, mut facets) = (0, 0, 0);
    let mut tries = 0;
    while done < applications {
        tries += 1;
        if tries > 100 * applications {
            return Err(Error::InvalidParameter(format!("{op}: too few applicable instances")));
        }
        let (g, fs) = bases.choose(&mut rng).expect("bases");
        let ineq = fs.choose(&mut rng).expect("facets");
        let out: Result<Lifted> = match op {
            "node-split" => {
                let v = rng.gen_range(0..g.node_count());
                let mut groups = [Vec::new(), Vec::new()];
                for &(_, e) in g.neighbors(v) {
                    groups[rng.gen_range(0..2)].push(e);
                }
                lift_node_split(g, ineq, v, [&groups[0], &groups[1]])
            }
            "triangle" => {
                let v = rng.gen_range(0..g.node_count());
                let mut groups = [Vec::new(), Vec::new(), Vec::new()];
                for &(_, e) in g.neighbors(v) {
                    groups[rng.gen_range(0..3)].push(e);
                }
                lift_triangle(g, ineq, v, [&groups[0], &groups[1], &groups[2]])
            }
            "subdivide" => lift_subdivide(g, ineq, rng.gen_range(0..g.edge_count()), rng.gen_range(2..=3)),
            "contract-path" => {
                let n = g.node_count();
                let len = rng.gen_range(2..=n - 2);
                let s = rng.gen_range(0..n);
                let path: Vec<usize> = (0..=len).map(|i| (s + i) % n).collect();
                contract_path_to_edge(g, ineq, &path)
            }
            _ => return Err(Error::InvalidParameter(format!("unknown lifting {op}"))),
        };
        let lifted = match out {
            Ok(l) => l,
            Err(Error::HypothesisViolated(_)) => continue,
            Err(e) => return Err(e),
        };
        done += 1;
        if let Some(f) = lifted.verified() {
            checked += 1;
            facets += usize::from(f);
        }
    }
    Ok((done, checked, facets))
}

fn lifting() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (i, op) in ["node-split", "triangle", "subdivide", "contract-path"].into_iter().enumerate() {
        let (done, checked, facets) = lifting_trials(op, 50, 100 + i as u64)?;
        ok &= done == 50 && facets == checked;
        parts.push(format!("{op} {facets}/{checked}"));
    }
    Ok((ok, format!("facets among checked outputs: {}", parts.join(", "))))
}

fn linear_time() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let n = 1_000_000;
    let rim = random::weights(&mut rng, n, -100, 100);
    let spokes = random::weights(&mut rng, n, -100, 100);
    let start = Instant::now();
    let big = wheel_max_bond(&rim, &spokes, &Constraint::none())?;
    let t_wheel = start.elapsed();
    let big_ok = big.edges.iter().map(|&e| if e < n { rim[e] } else { spokes[e - n] }).sum::<i64>() == big.value;

    let mut small_ok = true;
    for k in 3..=12 {
        let g = wheel(k)?;
        for _ in 0..20 {
            let w = random::weights(&mut rng, 2 * k, -20, 20);
            let s = wheel_max_bond(&w[..k], &w[k..], &Constraint::none())?;
            small_ok &= s.value == max_bond_oracle(&g, &w, &Constraint::none())?.value;
        }
    }

    let rims: Vec<usize> = (0..10_000).map(|_| rng.gen_range(3..=6)).collect();
    let chain = random::wheel_chain(&rims);
    let w = random::weights(&mut rng, chain.edge_count(), -50, 50);
    let start = Instant::now();
    let r = k5e_max_bond(&chain, &w)?;
    let t_chain = start.elapsed();
    let chain_ok = r.bond.weight(&w) == r.value;

    let mut chains_ok = true;
    for _ in 0..30 {
        let len = rng.gen_range(1..=3);
        let rims: Vec<usize> = (0..len).map(|_| rng.gen_range(3..=4)).collect();
        let g = random::wheel_chain(&rims);
        let w = random::weights(&mut rng, g.edge_count(), -20, 20);
        chains_ok &= k5e_max_bond(&g, &w)?.value == max_bond_oracle(&g, &w, &Constraint::none())?.value;
    }
    let ok = big_ok
        && small_ok
        && chain_ok
        && chains_ok
        && t_wheel < Duration::from_secs(1)
        && t_chain < Duration::from_secs(5);
    Ok((
        ok,
        format!(
            "W_1e6 in {t_wheel:.2?} (limit 1 s), W3..W12 match {small_ok}; chain of 1e4 wheels ({} edges) in {t_chain:.2?} (limit 5 s), small chains match {chains_ok}",
            chain.edge_count()
        ),
    ))
}

fn spr_trees() -> Result<(bool, String)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (name, g) in corpus() {
        if g.node_count() < 3 || spr_tree(&g).is_err() {
            continue;
        }
        checked += 1;
        if !validate(&spr_tree(&g)?, &g).ok {
            bad.push(name);
        }
    }
    let k4e = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (2, 3)])?;
    let t = spr_tree(&k4e)?;
    let k4e_ok = t.count(SkeletonKind::S) == 2 && t.count(SkeletonKind::P) == 1 && t.skeletons.len() == 3;
    let mut cycles_ok = true;
    for n in 3..=9 {
        let t = spr_tree(&cycle(n)?)?;
        cycles_ok &= t.skeletons.len() == 1 && t.count(SkeletonKind::S) == 1;
    }
    let t = spr_tree(&wagner(8)?)?;
    let v8_ok = t.skeletons.len() == 1 && t.count(SkeletonKind::R) == 1;
    let tri_ok = spr_tree(&triangle())?.count(SkeletonKind::S) == 1;
    Ok((
        bad.is_empty() && k4e_ok && cycles_ok && v8_ok && tri_ok,
        format!(
            "{checked} 2-connected graphs validated, failures {bad:?}; K4-e 2S+1P {k4e_ok}; cycles single S {cycles_ok}; V8 single R {v8_ok}"
        ),
    ))
}

fn contraction() -> Result<(bool, String)> {
    let mut edges = 0;
    let mut bad = Vec::new();
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.node_count() <= 8) {
        for e in 0..g.edge_count() {
            edges += 1;
            if !contraction_polytope_check(&g, e)? {
                bad.push(format!("{name}/{e}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{edges} edges checked, failures {bad:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_edges;

    #[test]
    fn check_ids_are_unique_and_numbered() {
        let c = checks();
        assert_eq!(c.len(), 12);
        for (i, x) in c.iter().enumerate() {
            assert_eq!(x.number, i + 1);
            assert!(c.iter().filter(|y| y.id == x.id).count() == 1);
        }
        assert_eq!(run(Some("k5e")).len(), 1);
    }

    #[test]
    fn cycle_edges_of_outer_cycles() {
        let g = wagner(8).unwrap();
        let c = outer_cycle(GraphFamilyTag::Wagner(8)).unwrap();
        assert_eq!(cycle_edges(&g, &c).unwrap(), (0..8).collect::<Vec<_>>());
    }
}
