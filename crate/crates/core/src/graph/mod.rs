//! Simple undirected graphs with stable edge ids.

mod classify;
mod cycles;
mod fixtures;
mod generators;
pub mod io;
pub mod random;

pub use classify::{classify_3connected_k5e, classify_family, Classification, FamilyTag};
pub use cycles::{cycle_edges, induced_cycles, simple_cycles, triangles};
pub use fixtures::{fixture, Fixture, FixtureGraph};
pub use generators::{
    complete, cycle, generate, k33, k5_minus_e, outer_cycle, prism, triangle, two_sum, wagner,
    wheel, GraphFamilyTag,
};

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// An undirected simple graph on nodes `0..n`.
///
/// Edge `i` is the `i`-th pair passed to [`Graph::new`], stored with the
/// smaller endpoint first. Ids never change for the lifetime of the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // per node: (neighbour, edge id), sorted by neighbour
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and bad endpoints.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        for (id, &(a, b)) in pairs.iter().enumerate() {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::NodeOutOfRange { node: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { node: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            edges.push((u, v));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                let v = w[0].0;
                return Err(Error::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs sorted by neighbour.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.edges.len() {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                m: self.edges.len(),
            });
        }
        Ok(())
    }

    pub fn check_node(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::NodeOutOfRange { node: v, n: self.n });
        }
        Ok(())
    }

    /// Edges with exactly one endpoint in `side`.
    pub fn cut_edges(&self, side: &[bool]) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| side[u] != side[v])
            .map(|(i, _)| i)
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest node.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            out.push(self.reach(s, &mut seen, |_| true));
        }
        out
    }

    /// Nodes reachable from `s` using only edges accepted by `keep`,
    /// sorted. `seen` is updated in place.
    pub fn reach(
        &self,
        s: usize,
        seen: &mut [bool],
        keep: impl Fn(usize) -> bool,
    ) -> Vec<usize> {
        let mut comp = vec![s];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in &self.adj[u] {
                if !seen[w] && keep(e) {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.connected_components().len() == 1
    }

    /// Whether the graph stays connected after deleting any `k - 1` nodes
    /// and has more than `k` nodes. Complete graphs on `k + 1` nodes count
    /// as `k`-connected.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.n <= k {
            return false;
        }
        if self.edges.len() == self.n * (self.n - 1) / 2 {
            return true;
        }
        let mut removed = vec![false; self.n];
        self.connected_without(&mut removed, 0, k - 1)
    }

    fn connected_without(&self, removed: &mut [bool], from: usize, left: usize) -> bool {
        if !self.connected_avoiding(removed) {
            return false;
        }
        if left == 0 {
            return true;
        }
        for v in from..self.n {
            removed[v] = true;
            let ok = self.connected_without(removed, v + 1, left - 1);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    fn connected_avoiding(&self, removed: &[bool]) -> bool {
        let Some(s) = (0..self.n).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        let got = self.reach(s, &mut seen, |_| true).len();
        got == removed.iter().filter(|&&r| !r).count()
    }

    /// Contracts edge `e`, merging parallel edges and dropping the loop.
    pub fn contract_edge(&self, e: usize) -> Result<Contraction> {
        self.check_edge(e)?;
        let (a, b) = self.edges[e];
        // b disappears; later nodes shift down by one
        let node_map: Vec<usize> = (0..self.n)
            .map(|v| match v.cmp(&b) {
                std::cmp::Ordering::Less => v,
                std::cmp::Ordering::Equal => a,
                std::cmp::Ordering::Greater => v - 1,
            })
            .collect();
        let mut pairs = Vec::new();
        let mut edge_map = vec![None; self.edges.len()];
        let mut index = std::collections::HashMap::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if i == e {
                continue;
            }
            let (x, y) = (node_map[u], node_map[v]);
            let key = (x.min(y), x.max(y));
            let id = *index.entry(key).or_insert_with(|| {
                pairs.push(key);
                pairs.len() - 1
            });
            edge_map[i] = Some(id);
        }
        let graph = Graph::new(self.n - 1, &pairs)?;
        Ok(Contraction {
            graph,
            node_map,
            edge_map,
        })
    }

    /// The subgraph induced by `nodes` (relabelled in the given order)
    /// together with the original id of each kept edge.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in nodes.iter().enumerate() {
            self.check_node(v)?;
            local[v] = i;
        }
        let mut pairs = Vec::new();
        let mut ids = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                pairs.push((local[u], local[v]));
                ids.push(i);
            }
        }
        Ok((Graph::new(nodes.len(), &pairs)?, ids))
    }
}

/// Result of [`Graph::contract_edge`].
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    /// Old node to new node; both endpoints of the contracted edge map to
    /// the same node.
    pub node_map: Vec<usize>,
    /// Old edge to new edge; `None` for the contracted edge.
    pub edge_map: Vec<Option<usize>>,
}
