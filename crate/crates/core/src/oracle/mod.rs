//! Exhaustive cut and bond enumeration for small graphs.
//!
//! A cut is written by its side `S`, always chosen to exclude node 0. It is
//! a bond when it is empty or when both `G[S]` and `G - S` are connected.
//! Everything here is exponential in the node count and capped.

mod interleave;

pub use interleave::{is_interleaved, InterleaveMethod, InterleaveResult, InterleaveWitness};

use crate::error::{Error, Result};
use crate::graph::{cycle_edges, Graph};

pub const DEFAULT_NODE_CAP: usize = 24;

/// A cut `δ(S)` with `S` excluding node 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BondCut {
    /// Sorted nodes of `S`.
    pub side: Vec<usize>,
    /// Sorted edge ids of `δ(S)`.
    pub edges: Vec<usize>,
    pub is_bond: bool,
}

impl BondCut {
    pub fn empty() -> Self {
        BondCut {
            side: Vec::new(),
            edges: Vec::new(),
            is_bond: true,
        }
    }

    /// Builds the cut with the given edge set. `S` is everything not
    /// reachable from node 0 once the edges are removed, so this only
    /// round-trips for bonds of connected graphs.
    pub fn from_edges(g: &Graph, mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut removed = vec![false; g.edge_count()];
        for &e in &edges {
            removed[e] = true;
        }
        let mut seen = vec![false; g.node_count()];
        if g.node_count() > 0 {
            g.reach(0, &mut seen, |e| !removed[e]);
        }
        let side = (0..g.node_count()).filter(|&v| !seen[v]).collect();
        BondCut {
            side,
            edges,
            is_bond: true,
        }
    }

    pub fn weight(&self, w: &[i64]) -> i64 {
        self.edges.iter().map(|&e| w[e]).sum()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// 0/1 incidence vector of length `m`.
    pub fn indicator(&self, m: usize) -> Vec<u8> {
        let mut x = vec![0; m];
        for &e in &self.edges {
            x[e] = 1;
        }
        x
    }
}

/// Side constraints on which bonds are admissible.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Constraint {
    /// Edges that must lie in the bond.
    pub forced_in: Vec<usize>,
    /// Edges that must not lie in the bond.
    pub forced_out: Vec<usize>,
    /// Two nodes that must end up on different sides.
    pub separate: Option<(usize, usize)>,
}

impl Constraint {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.forced_in.is_empty() && self.forced_out.is_empty() && self.separate.is_none()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &e in self.forced_in.iter().chain(&self.forced_out) {
            g.check_edge(e)?;
        }
        if let Some(e) = self.forced_in.iter().find(|e| self.forced_out.contains(e)) {
            return Err(Error::InvalidParameter(format!(
                "edge {e} is both forced in and forced out"
            )));
        }
        if let Some((a, b)) = self.separate {
            g.check_node(a)?;
            g.check_node(b)?;
            if a == b {
                return Err(Error::InvalidParameter("cannot separate a node from itself".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: i64,
    pub bond: BondCut,
}

/// Rejects weight vectors of the wrong length or whose absolute sum does
/// not fit in `i64`; after this every bond weight is representable.
pub fn check_weights(g: &Graph, w: &[i64]) -> Result<()> {
    if w.len() != g.edge_count() {
        return Err(Error::InvalidParameter(format!(
            "expected {} weights, got {}",
            g.edge_count(),
            w.len()
        )));
    }
    w.iter()
        .try_fold(0i64, |acc, &x| acc.checked_add(x.checked_abs()?))
        .map(|_| ())
        .ok_or(Error::ArithmeticOverflow)
}

/// Brute-force enumerator over the `2^(n-1)` cuts of a connected graph.
#[derive(Debug, Clone)]
pub struct Oracle<'g> {
    graph: &'g Graph,
    threads: usize,
    adj: Vec<u64>,
    ends: Vec<(u64, u64)>,
}

impl<'g> Oracle<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        Self::with_cap(g, DEFAULT_NODE_CAP)
    }

    pub fn with_cap(g: &'g Graph, cap: usize) -> Result<Self> {
        let n = g.node_count();
        if n > cap.min(63) {
            return Err(Error::SizeCapExceeded {
                what: "bond enumeration",
                size: n,
                cap: cap.min(63),
            });
        }
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut adj = vec![0u64; n];
        let ends = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                (1u64 << u, 1u64 << v)
            })
            .collect();
        Ok(Oracle {
            graph: g,
            threads: 1,
            adj,
            ends,
        })
    }

    /// Splits the search for [`Oracle::max_bond`] over `threads` workers.
    /// Results do not depend on the thread count.
    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    fn mask_count(&self) -> u64 {
        1u64 << self.graph.node_count().saturating_sub(1)
    }

    fn all_nodes(&self) -> u64 {
        (1u64 << self.graph.node_count()) - 1
    }

    fn connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let mut reached = set & set.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros();
                f &= f - 1;
                next |= self.adj[v as usize];
            }
            frontier = next & set & !reached;
            reached |= frontier;
        }
        reached == set
    }

    /// Whether the side encoded by `mask` (bit `i` is node `i + 1`) yields
    /// a bond.
    pub fn is_bond_mask(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let side = mask << 1;
        self.connected(side) && self.connected(self.all_nodes() & !side)
    }

    fn cut(&self, mask: u64, is_bond: bool) -> BondCut {
        let side = mask << 1;
        BondCut {
            side: (0..self.graph.node_count())
                .filter(|&v| side >> v & 1 == 1)
                .collect(),
            edges: self
                .ends
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| (side & a != 0) != (side & b != 0))
                .map(|(i, _)| i)
                .collect(),
            is_bond,
        }
    }

    /// Every cut, in increasing order of the side bitmask.
    pub fn cuts(&self) -> impl Iterator<Item = BondCut> + '_ {
        (0..self.mask_count()).map(|mask| self.cut(mask, self.is_bond_mask(mask)))
    }

    /// Every bond, in increasing order of the side bitmask.
    pub fn bonds(&self) -> impl Iterator<Item = BondCut> + '_ {
        (0..self.mask_count())
            .filter(|&mask| self.is_bond_mask(mask))
            .map(|mask| self.cut(mask, true))
    }

    /// Side bitmasks (node `i + 1` at bit `i`) of every bond.
    pub fn bond_masks(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.mask_count()).filter(|&mask| self.is_bond_mask(mask))
    }

    /// Maximum weight bond under `c`; ties go to the smallest side bitmask.
    pub fn max_bond(&self, w: &[i64], c: &Constraint) -> Result<SolveResult> {
        check_weights(self.graph, w)?;
        c.validate(self.graph)?;
        let total = self.mask_count();
        let chunks = (self.threads as u64).min(total).max(1);
        let step = total.div_ceil(chunks);
        let best = if chunks == 1 {
            self.best_in(0, total, w, c)
        } else {
            std::thread::scope(|s| {
                let handles: Vec<_> = (0..chunks)
                    .map(|i| {
                        let (lo, hi) = (i * step, ((i + 1) * step).min(total));
                        s.spawn(move || self.best_in(lo, hi, w, c))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("worker panicked"))
                    .fold(None, |acc: Option<(i64, u64)>, cur| match (acc, cur) {
                        (Some(a), Some(b)) if b.0 > a.0 => Some(b),
                        (None, b) => b,
                        (a, _) => a,
                    })
            })
        };
        let (value, mask) = best.ok_or(Error::Infeasible)?;
        Ok(SolveResult {
            value,
            bond: self.cut(mask, true),
        })
    }

    fn best_in(&self, lo: u64, hi: u64, w: &[i64], c: &Constraint) -> Option<(i64, u64)> {
        let crosses = |side: u64, e: usize| {
            let (a, b) = self.ends[e];
            (side & a != 0) != (side & b != 0)
        };
        let mut best: Option<(i64, u64)> = None;
        for mask in lo..hi {
            let side = mask << 1;
            if !c.forced_in.iter().all(|&e| crosses(side, e))
                || c.forced_out.iter().any(|&e| crosses(side, e))
            {
                continue;
            }
            if let Some((a, b)) = c.separate {
                if (side >> a & 1) == (side >> b & 1) {
                    continue;
                }
            }
            if !self.is_bond_mask(mask) {
                continue;
            }
            let value: i64 = (0..self.ends.len())
                .filter(|&e| crosses(side, e))
                .map(|e| w[e])
                .sum();
            if best.is_none_or(|(b, _)| value > b) {
                best = Some((value, mask));
            }
        }
        best
    }

    /// Largest number of edges of `cycle` (a node sequence) met by a bond,
    /// with the first bond attaining it.
    pub fn max_cycle_intersection(&self, cycle: &[usize]) -> Result<(usize, BondCut)> {
        let ce = cycle_edges(self.graph, cycle)?;
        let mut w = vec![0; self.graph.edge_count()];
        for e in ce {
            w[e] = 1;
        }
        let r = self.max_bond(&w, &Constraint::none())?;
        Ok((r.value as usize, r.bond))
    }
}

pub fn enumerate_cuts(g: &Graph) -> Result<Vec<BondCut>> {
    Ok(Oracle::new(g)?.cuts().collect())
}

pub fn enumerate_bonds(g: &Graph) -> Result<Vec<BondCut>> {
    Ok(Oracle::new(g)?.bonds().collect())
}

pub fn max_bond_oracle(g: &Graph, w: &[i64], c: &Constraint) -> Result<SolveResult> {
    Oracle::new(g)?.max_bond(w, c)
}

pub fn max_cycle_intersection(g: &Graph, cycle: &[usize]) -> Result<usize> {
    Ok(Oracle::new(g)?.max_cycle_intersection(cycle)?.0)
}
