use super::{BondCut, Oracle};
use crate::error::{Error, Result};
use crate::graph::{cycle_edges, Graph};
use std::collections::HashSet;

pub const PATHS_NODE_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterleaveMethod {
    /// Search for disjoint crossing paths off the cycle.
    Paths,
    /// Search for a bond meeting the cycle more than twice.
    Bonds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InterleaveWitness {
    /// Distinct cycle nodes `v1..v4` in cyclic order with node-disjoint
    /// paths `v1 -> v3` and `v2 -> v4` avoiding the cycle's edges.
    Paths {
        quad: [usize; 4],
        first: Vec<usize>,
        second: Vec<usize>,
    },
    Bond(BondCut),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterleaveResult {
    pub interleaved: bool,
    pub witness: Option<InterleaveWitness>,
}

/// Decides whether `cycle` (a node sequence) is interleaved in `g`.
pub fn is_interleaved(g: &Graph, cycle: &[usize], method: InterleaveMethod) -> Result<InterleaveResult> {
    match method {
        InterleaveMethod::Bonds => {
            let (k, bond) = Oracle::new(g)?.max_cycle_intersection(cycle)?;
            Ok(InterleaveResult {
                interleaved: k > 2,
                witness: (k > 2).then_some(InterleaveWitness::Bond(bond)),
            })
        }
        InterleaveMethod::Paths => by_paths(g, cycle),
    }
}

fn by_paths(g: &Graph, cycle: &[usize]) -> Result<InterleaveResult> {
    let n = g.node_count();
    if n > PATHS_NODE_CAP {
        return Err(Error::SizeCapExceeded {
            what: "path interleaving search",
            size: n,
            cap: PATHS_NODE_CAP,
        });
    }
    let on_cycle: HashSet<usize> = cycle_edges(g, cycle)?.into_iter().collect();
    // adjacency of G - E(C)
    let mut adj = vec![0u32; n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if !on_cycle.contains(&i) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let k = cycle.len();
    for a in 0..k {
        for c in a + 2..k {
            let (v1, v3) = (cycle[a], cycle[c]);
            let paths = all_path_masks(&adj, v1, v3);
            if paths.is_empty() {
                continue;
            }
            // v2 strictly between a and c, v4 strictly outside
            for b in a + 1..c {
                for d in (c + 1..k).chain(0..a) {
                    let (v2, v4) = (cycle[b], cycle[d]);
                    let avoid = (1u32 << v2) | (1u32 << v4);
                    for (mask, path) in &paths {
                        if mask & avoid != 0 {
                            continue;
                        }
                        if let Some(q) = bfs_path(&adj, v2, v4, *mask) {
                            let quad = [v1, v2, v3, v4];
                            return Ok(InterleaveResult {
                                interleaved: true,
                                witness: Some(InterleaveWitness::Paths {
                                    quad,
                                    first: path.clone(),
                                    second: q,
                                }),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(InterleaveResult {
        interleaved: false,
        witness: None,
    })
}

/// Distinct node sets of simple `s -> t` paths, each with one path
/// realising it.
fn all_path_masks(adj: &[u32], s: usize, t: usize) -> Vec<(u32, Vec<usize>)> {
    let mut out = Vec::new();
    let mut masks = HashSet::new();
    let mut explored = HashSet::new();
    let mut path = vec![s];
    // explicit stack of (node, remaining neighbour bits)
    let mut stack = vec![(s, adj[s])];
    let mut visited = 1u32 << s;
    while let Some((u, rest)) = stack.last_mut() {
        if *rest == 0 {
            visited &= !(1 << *u);
            stack.pop();
            path.pop();
            continue;
        }
        let w = rest.trailing_zeros() as usize;
        *rest &= *rest - 1;
        if visited >> w & 1 == 1 {
            continue;
        }
        let next_visited = visited | 1 << w;
        if w == t {
            if masks.insert(next_visited) {
                let mut p = path.clone();
                p.push(t);
                out.push((next_visited, p));
            }
            continue;
        }
        if !explored.insert((w, next_visited)) {
            continue;
        }
        visited = next_visited;
        path.push(w);
        stack.push((w, adj[w] & !visited));
    }
    out
}

fn bfs_path(adj: &[u32], s: usize, t: usize, blocked: u32) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut seen = blocked | 1 << s;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut p = vec![t];
            while *p.last().expect("non-empty") != s {
                p.push(parent[*p.last().expect("non-empty")]);
            }
            p.reverse();
            return Some(p);
        }
        let mut f = adj[u] & !seen;
        seen |= f;
        while f != 0 {
            let w = f.trailing_zeros() as usize;
            f &= f - 1;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixture, k33, wheel, Fixture};

    #[test]
    fn methods_agree_on_fixtures() {
        let fx = fixture(Fixture::TwoSquares);
        for (name, expect) in [("outer", false), ("mixed", false)] {
            let c = fx.cycle(name).unwrap();
            for m in [InterleaveMethod::Paths, InterleaveMethod::Bonds] {
                assert_eq!(is_interleaved(&fx.graph, c, m).unwrap().interleaved, expect, "{name} {m:?}");
            }
        }
    }

    #[test]
    fn wheel_rim_is_not_interleaved_but_hexagon_of_k33_is() {
        let g = wheel(6).unwrap();
        let rim: Vec<usize> = (0..6).collect();
        assert!(!is_interleaved(&g, &rim, InterleaveMethod::Paths).unwrap().interleaved);
        let g = k33();
        let r = is_interleaved(&g, &[0, 3, 1, 4, 2, 5], InterleaveMethod::Paths).unwrap();
        assert!(r.interleaved);
        let Some(InterleaveWitness::Paths { quad, first, second }) = r.witness else {
            panic!("missing witness");
        };
        assert_eq!((first[0], *first.last().unwrap()), (quad[0], quad[2]));
        assert_eq!((second[0], *second.last().unwrap()), (quad[1], quad[3]));
        assert!(first.iter().all(|v| !second.contains(v)));
    }
}
