//! Block decomposition and SPR trees (triconnected component trees).

mod assemble;
mod blocks;
mod naive;
mod tricomp;

pub use blocks::{blocks, Block};

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SkeletonKind {
    /// A cycle.
    S,
    /// Two nodes joined by at least three edges.
    P,
    /// A simple 3-connected graph.
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    /// An edge of the input graph, by id.
    Real(usize),
    /// A virtual edge, by index into [`SprTree::links`].
    Virtual(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SkeletonEdge {
    /// Endpoints as nodes of the input graph, smaller first.
    pub ends: (usize, usize),
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub kind: SkeletonKind,
    /// Sorted nodes of the input graph present in this skeleton.
    pub nodes: Vec<usize>,
    /// Real edges by id, then virtual edges by link index.
    pub edges: Vec<SkeletonEdge>,
}

impl Skeleton {
    pub fn real_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(|e| match e.kind {
            EdgeKind::Real(id) => Some(id),
            EdgeKind::Virtual(_) => None,
        })
    }

    /// The skeleton as a simple graph on local ids `0..nodes.len()`.
    /// Fails for P skeletons, which have parallel edges.
    pub fn local_graph(&self) -> Result<Graph> {
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| (self.local(e.ends.0), self.local(e.ends.1)))
            .collect();
        Graph::new(self.nodes.len(), &pairs)
    }

    /// Local id of an input node of this skeleton.
    pub fn local(&self, v: usize) -> usize {
        self.nodes.binary_search(&v).expect("node of skeleton")
    }
}

/// The virtual edge pair shared by two adjacent skeletons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeLink {
    pub skeletons: (usize, usize),
    pub ends: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SprTree {
    /// Ordered by smallest real edge id; skeleton 0 holds edge 0.
    pub skeletons: Vec<Skeleton>,
    pub links: Vec<TreeLink>,
}

/// Skeleton signature used to compare trees built by different methods:
/// kind, node set, real edges and number of virtual edges.
pub type SkeletonSignature = (SkeletonKind, Vec<usize>, Vec<usize>, usize);

impl SprTree {
    pub fn count(&self, kind: SkeletonKind) -> usize {
        self.skeletons.iter().filter(|s| s.kind == kind).count()
    }

    /// Neighbouring skeletons of each skeleton, as `(skeleton, link)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.skeletons.len()];
        for (l, link) in self.links.iter().enumerate() {
            let (a, b) = link.skeletons;
            adj[a].push((b, l));
            adj[b].push((a, l));
        }
        adj
    }

    /// An order-independent description of the tree.
    pub fn canonical_form(&self) -> (Vec<SkeletonSignature>, Vec<(SkeletonSignature, SkeletonSignature)>) {
        let sig = |s: &Skeleton| -> SkeletonSignature {
            let reals: Vec<usize> = s.real_edges().collect();
            let virt = s.edges.len() - reals.len();
            (s.kind, s.nodes.clone(), reals, virt)
        };
        let sigs: Vec<SkeletonSignature> = self.skeletons.iter().map(sig).collect();
        let mut nodes = sigs.clone();
        nodes.sort();
        let mut edges: Vec<_> = self
            .links
            .iter()
            .map(|l| {
                let (a, b) = (sigs[l.skeletons.0].clone(), sigs[l.skeletons.1].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort();
        (nodes, edges)
    }
}

fn require_two_connected(g: &Graph) -> Result<()> {
    let b = blocks(g);
    if g.node_count() < 3 || b.len() != 1 || b[0].nodes.len() != g.node_count() {
        return Err(Error::NotTwoConnected);
    }
    Ok(())
}

/// SPR tree of a simple 2-connected graph in linear time.
pub fn spr_tree(g: &Graph) -> Result<SprTree> {
    require_two_connected(g)?;
    Ok(assemble::assemble(&tricomp::split_components(g)))
}

/// SPR tree by exhaustive separation-pair search; cubic or worse, meant
/// for cross-checking [`spr_tree`] on small graphs.
pub fn spr_tree_reference(g: &Graph) -> Result<SprTree> {
    require_two_connected(g)?;
    Ok(assemble::assemble(&naive::split_components(g)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub diagnostics: Vec<String>,
}

/// Checks the structural invariants of `t` against `g`: skeleton shapes,
/// paired virtual edges, tree shape, no S-S or P-P neighbours, and that
/// gluing the skeletons back gives `g`.
pub fn validate(t: &SprTree, g: &Graph) -> ValidationReport {
    let mut diag = Vec::new();
    let k = t.skeletons.len();
    for (i, s) in t.skeletons.iter().enumerate() {
        let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
        for e in &s.edges {
            if e.ends.0 >= e.ends.1 {
                diag.push(format!("skeleton {i}: edge {:?} is not normalised", e.ends));
            }
            *degree.entry(e.ends.0).or_default() += 1;
            *degree.entry(e.ends.1).or_default() += 1;
        }
        let nodes: Vec<usize> = degree.keys().copied().collect();
        if nodes != s.nodes {
            diag.push(format!("skeleton {i}: node list does not match its edges"));
        }
        match s.kind {
            SkeletonKind::S => {
                let simple = s.local_graph();
                let cyc = s.edges.len() >= 3
                    && degree.values().all(|&d| d == 2)
                    && simple.as_ref().is_ok_and(|h| h.is_connected());
                if !cyc {
                    diag.push(format!("skeleton {i}: S skeleton is not a cycle"));
                }
            }
            SkeletonKind::P => {
                if s.nodes.len() != 2 || s.edges.len() < 3 {
                    diag.push(format!("skeleton {i}: P skeleton is not a bond of 3+ edges"));
                }
            }
            SkeletonKind::R => match s.local_graph() {
                Ok(h) if h.is_k_connected(3) => {}
                Ok(_) => diag.push(format!("skeleton {i}: R skeleton is not 3-connected")),
                Err(_) => diag.push(format!("skeleton {i}: R skeleton has parallel edges")),
            },
        }
    }
    // links
    let mut seen = vec![Vec::new(); t.links.len()];
    for (i, s) in t.skeletons.iter().enumerate() {
        for e in &s.edges {
            if let EdgeKind::Virtual(l) = e.kind {
                match t.links.get(l) {
                    Some(link) if link.ends == e.ends => seen[l].push(i),
                    Some(_) => diag.push(format!("skeleton {i}: link {l} has mismatched ends")),
                    None => diag.push(format!("skeleton {i}: unknown link {l}")),
                }
            }
        }
    }
    for (l, link) in t.links.iter().enumerate() {
        let (a, b) = link.skeletons;
        let mut want = vec![a, b];
        want.sort_unstable();
        seen[l].sort_unstable();
        if seen[l] != want || a == b {
            diag.push(format!("link {l}: twins found in {:?}, expected {want:?}", seen[l]));
        } else {
            let (ka, kb) = (t.skeletons[a].kind, t.skeletons[b].kind);
            if ka == kb && ka != SkeletonKind::R {
                diag.push(format!("link {l}: adjacent {ka:?} skeletons {a} and {b}"));
            }
        }
    }
    // tree shape
    if k == 0 || t.links.len() + 1 != k {
        diag.push(format!("{k} skeletons but {} links", t.links.len()));
    } else {
        let adj = t.adjacency();
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(y, _) in &adj[x] {
                if !std::mem::replace(&mut seen[y], true) {
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            diag.push("skeleton tree is disconnected".into());
        }
    }
    // reassembly: every real edge exactly once with its own endpoints
    let mut count = vec![0usize; g.edge_count()];
    for (i, s) in t.skeletons.iter().enumerate() {
        for e in &s.edges {
            if let EdgeKind::Real(id) = e.kind {
                if id >= g.edge_count() || g.edge(id) != e.ends {
                    diag.push(format!("skeleton {i}: real edge {id} does not match the graph"));
                } else {
                    count[id] += 1;
                }
            }
        }
    }
    for (id, &c) in count.iter().enumerate() {
        if c != 1 {
            diag.push(format!("edge {id} appears {c} times"));
        }
    }
    if t.skeletons.first().is_some_and(|s| !s.real_edges().any(|e| e == 0)) && g.edge_count() > 0 {
        diag.push("skeleton 0 does not hold edge 0".into());
    }
    ValidationReport {
        ok: diag.is_empty(),
        diagnostics: diag,
    }
}
