use super::Graph;
use crate::error::{Error, Result};

/// Edge ids of the cycle visiting `nodes` in order and closing back to the
/// first node. Fails unless the nodes are distinct and consecutive ones are
/// adjacent.
pub fn cycle_edges(g: &Graph, nodes: &[usize]) -> Result<Vec<usize>> {
    if nodes.len() < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 nodes, got {}",
            nodes.len()
        )));
    }
    let mut seen = vec![false; g.node_count()];
    for &v in nodes {
        g.check_node(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidParameter(format!("node {v} repeats in cycle")));
        }
    }
    (0..nodes.len())
        .map(|i| {
            let (u, v) = (nodes[i], nodes[(i + 1) % nodes.len()]);
            g.edge_between(u, v)
                .ok_or_else(|| Error::InvalidParameter(format!("{u}-{v} is not an edge")))
        })
        .collect()
}

/// Every simple cycle with at most `max_len` nodes, as node sequences that
/// start at their smallest node and continue to the smaller of its two
/// cycle neighbours. Sorted by length, then lexicographically.
pub fn simple_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    for s in 0..g.node_count() {
        let mut path = vec![s];
        on_path[s] = true;
        extend(g, s, &mut path, &mut on_path, max_len, &mut out);
        on_path[s] = false;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn extend(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    max_len: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let u = *path.last().expect("non-empty path");
    for &(w, _) in g.neighbors(u) {
        if w == s && path.len() >= 3 && path[1] < u {
            out.push(path.clone());
        }
        if w <= s || on_path[w] || path.len() >= max_len {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        extend(g, s, path, on_path, max_len, out);
        path.pop();
        on_path[w] = false;
    }
}

/// Chordless cycles with at most `max_len` nodes, ordered like
/// [`simple_cycles`].
pub fn induced_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    simple_cycles(g, max_len)
        .into_iter()
        .filter(|c| {
            let k = c.len();
            (0..k).all(|i| {
                (i + 2..k).all(|j| (i == 0 && j == k - 1) || g.edge_between(c[i], c[j]).is_none())
            })
        })
        .collect()
}

/// All triangles `[a, b, c]` with `a < b < c`, sorted.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for &(c, _) in g.neighbors(b) {
            if c > b && g.edge_between(a, c).is_some() {
                out.push([a, b, c]);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, prism, wheel};

    #[test]
    fn counts() {
        // K4 has 4 triangles and 3 Hamiltonian cycles
        let k4 = complete(4).unwrap();
        assert_eq!(simple_cycles(&k4, 4).len(), 7);
        assert_eq!(induced_cycles(&k4, 4).len(), 4);
        assert_eq!(simple_cycles(&cycle(6).unwrap(), 6), vec![vec![0, 1, 2, 3, 4, 5]]);
        assert!(simple_cycles(&cycle(6).unwrap(), 5).is_empty());
        // W5: 5 triangles, the rim, 5 quads through the centre, ... all induced
        // cycles are the triangles plus the rim
        assert_eq!(induced_cycles(&wheel(5).unwrap(), 6).len(), 6);
        assert_eq!(triangles(&prism()).len(), 2);
        assert_eq!(induced_cycles(&prism(), 6).len(), 5);
    }

    #[test]
    fn cycle_edges_checks() {
        let g = wheel(4).unwrap();
        assert_eq!(cycle_edges(&g, &[0, 1, 2, 3]).unwrap(), vec![0, 1, 2, 3]);
        assert!(cycle_edges(&g, &[0, 2, 1]).is_err());
        assert!(cycle_edges(&g, &[0, 1, 0]).is_err());
    }
}
