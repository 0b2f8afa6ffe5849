//! Seeded random graph builders for tests and benchmarks.

use super::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// A connected graph on `n` nodes with `m` edges: a random spanning tree
/// plus distinct random extra edges. `m` is clamped to the feasible range.
pub fn connected_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let max_m = n * n.saturating_sub(1) / 2;
    let m = m.clamp(n.saturating_sub(1), max_m);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = vec![vec![false; n]; n];
    let mut pairs = Vec::with_capacity(m);
    for i in 1..n {
        let (u, v) = (order[i], order[rng.gen_range(0..i)]);
        present[u][v] = true;
        present[v][u] = true;
        pairs.push((u, v));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[u][v])
        .collect();
    rest.shuffle(rng);
    pairs.extend(rest.into_iter().take(m - pairs.len()));
    pairs.shuffle(rng);
    Graph::new(n, &pairs).expect("distinct pairs")
}

/// A 2-connected graph grown from a cycle by random ears. Stops once at
/// least `n` nodes exist and `extra` chords have been tried.
pub fn two_connected_graph<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let start = rng.gen_range(3..=n.max(3));
    let mut pairs: Vec<(usize, usize)> = (0..start).map(|i| (i, (i + 1) % start)).collect();
    let mut nodes = start;
    while nodes < n {
        let a = rng.gen_range(0..nodes);
        let mut b = rng.gen_range(0..nodes - 1);
        if b >= a {
            b += 1;
        }
        let len = rng.gen_range(1..=(n - nodes).min(3));
        let mut prev = a;
        for _ in 0..len {
            pairs.push((prev, nodes));
            prev = nodes;
            nodes += 1;
        }
        pairs.push((prev, b));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..nodes);
        let b = rng.gen_range(0..nodes);
        if a != b && !pairs.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b)) {
            pairs.push((a, b));
        }
    }
    Graph::new(nodes, &pairs).expect("ears keep the graph simple")
}

pub fn weights<R: Rng>(rng: &mut R, m: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..m).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// Wheels glued in a chain: wheel `i + 1` shares its rim edge `0-1` with
/// rim edge `1-2` of wheel `i`, and the shared edge is kept once.
/// `rims[i]` is the rim length of wheel `i` (at least 3).
pub fn wheel_chain(rims: &[usize]) -> Graph {
    let mut pairs = Vec::new();
    let mut nodes = 0;
    let mut link: Option<(usize, usize)> = None;
    for &k in rims {
        assert!(k >= 3, "rim length must be at least 3");
        let mut local = vec![0; k + 1];
        for (i, slot) in local.iter_mut().enumerate() {
            *slot = match (link, i) {
                (Some((a, _)), 0) => a,
                (Some((_, b)), 1) => b,
                _ => {
                    nodes += 1;
                    nodes - 1
                }
            };
        }
        for i in 0..k {
            if i == 0 && link.is_some() {
                continue;
            }
            pairs.push((local[i], local[(i + 1) % k]));
        }
        for &r in &local[..k] {
            pairs.push((r, local[k]));
        }
        link = Some((local[1], local[2]));
    }
    Graph::new(nodes, &pairs).expect("chain is simple")
}
