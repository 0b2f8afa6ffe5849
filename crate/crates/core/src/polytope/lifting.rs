//! Facet-preserving graph operations: node splitting, replacing a node by
//! a triangle, subdividing an edge and replacing an induced path by an
//! edge.
//!
//! Each operation checks that its input is a facet, builds the new graph
//! and inequality, and re-checks the result when the new graph is small
//! enough to enumerate.

use super::check::{check_inequality, tight_bonds, FacetReport};
use super::inequality::LinearInequality;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{Constraint, Oracle, DEFAULT_NODE_CAP};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Result of a lifting operation.
#[derive(Debug, Clone)]
pub struct Lifted {
    pub graph: Graph,
    /// Normalised form of `coeffs·x <= rhs`.
    pub inequality: LinearInequality,
    /// Coefficients on the scale of the input inequality.
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
    /// Auxiliary maximum bond values used by the construction.
    pub omegas: Vec<i64>,
    /// Facet check of the output; `None` when the graph is over the cap.
    pub report: Option<FacetReport>,
}

impl Lifted {
    /// `Some(true)` when the output was checked and is a facet.
    pub fn verified(&self) -> Option<bool> {
        self.report.as_ref().map(|r| r.facet_defining)
    }
}

fn require_facet(g: &Graph, ineq: &LinearInequality) -> Result<()> {
    if !check_inequality(g, ineq)?.facet_defining {
        return Err(Error::NotAFacet);
    }
    Ok(())
}

fn small_coeffs(ineq: &LinearInequality) -> Result<(Vec<i64>, i64)> {
    let a = ineq
        .coeffs()
        .iter()
        .map(|c| c.to_i64().ok_or(Error::ArithmeticOverflow))
        .collect::<Result<Vec<_>>>()?;
    let b = ineq.rhs().to_i64().ok_or(Error::ArithmeticOverflow)?;
    Ok((a, b))
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn finish(graph: Graph, coeffs: Vec<BigRational>, rhs: BigRational, omegas: Vec<i64>) -> Result<Lifted> {
    let inequality = LinearInequality::new(&coeffs, &rhs)?;
    let report = if graph.node_count() <= DEFAULT_NODE_CAP {
        Some(check_inequality(&graph, &inequality)?)
    } else {
        None
    };
    Ok(Lifted {
        graph,
        inequality,
        coeffs,
        rhs,
        omegas,
        report,
    })
}

/// Checks that `groups` partitions the edges at `v` and returns, per edge,
/// the group it belongs to.
fn partition_of(g: &Graph, v: usize, groups: &[&[usize]]) -> Result<Vec<Option<usize>>> {
    g.check_node(v)?;
    let mut which = vec![None; g.edge_count()];
    for (i, grp) in groups.iter().enumerate() {
        for &e in grp.iter() {
            g.check_edge(e)?;
            let (a, b) = g.edge(e);
            if a != v && b != v {
                return Err(Error::InvalidParameter(format!("edge {e} does not meet node {v}")));
            }
            if which[e].replace(i).is_some() {
                return Err(Error::InvalidParameter(format!("edge {e} is in two groups")));
            }
        }
    }
    if let Some(&(_, e)) = g.neighbors(v).iter().find(|&&(_, e)| which[e].is_none()) {
        return Err(Error::InvalidParameter(format!("edge {e} at node {v} is in no group")));
    }
    Ok(which)
}

/// Moves the edges of group `i > 0` from `v` to node `targets[i - 1]`.
fn redistribute(g: &Graph, v: usize, which: &[Option<usize>], targets: &[usize]) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .zip(which)
        .map(|(&(a, b), w)| match w {
            Some(i) if *i > 0 => {
                let t = targets[i - 1];
                if a == v {
                    (t, b)
                } else {
                    (a, t)
                }
            }
            _ => (a, b),
        })
        .collect()
}

/// Splits `v` into `v1 = v` and a new node `v2 = n` joined by a new edge
/// with id `m`; edges in `groups[1]` move to `v2`. The new coefficient is
/// `b - ω` with `ω` the largest `a`-weight of a bond separating `v1`
/// from `v2`.
pub fn lift_node_split(g: &Graph, ineq: &LinearInequality, v: usize, groups: [&[usize]; 2]) -> Result<Lifted> {
    let which = partition_of(g, v, &groups)?;
    require_facet(g, ineq)?;
    let (a, b) = small_coeffs(ineq)?;
    let (n, m) = (g.node_count(), g.edge_count());
    let mut pairs = redistribute(g, v, &which, &[n]);
    pairs.push((v, n));
    let gb = Graph::new(n + 1, &pairs)?;
    let mut w = a.clone();
    w.push(0);
    // bonds of the new graph through v1v2 are exactly the separating ones
    let omega = Oracle::new(&gb)?
        .max_bond(
            &w,
            &Constraint {
                forced_in: vec![m],
                ..Constraint::none()
            },
        )?
        .value;
    let mut coeffs: Vec<BigRational> = a.iter().map(|&x| int(x)).collect();
    coeffs.push(int(b - omega));
    finish(gb, coeffs, int(b), vec![omega])
}

/// Replaces `v` by a triangle `v1 = v`, `v2 = n`, `v3 = n + 1` with edges
/// `v1v2 = m`, `v1v3 = m + 1`, `v2v3 = m + 2`; `groups[i]` goes to `v_{i+1}`.
pub fn lift_triangle(g: &Graph, ineq: &LinearInequality, v: usize, groups: [&[usize]; 3]) -> Result<Lifted> {
    let which = partition_of(g, v, &groups)?;
    require_facet(g, ineq)?;
    let (a, b) = small_coeffs(ineq)?;
    let (n, m) = (g.node_count(), g.edge_count());
    let mut pairs = redistribute(g, v, &which, &[n, n + 1]);
    pairs.extend([(v, n), (v, n + 1), (n, n + 1)]);
    let gb = Graph::new(n + 2, &pairs)?;
    let mut w = a.clone();
    w.extend([0, 0, 0]);
    let (e12, e13, e23) = (m, m + 1, m + 2);
    let oracle = Oracle::new(&gb)?;
    let mut omegas = Vec::with_capacity(3);
    for (fin, fout) in [([e12, e13], e23), ([e12, e23], e13), ([e13, e23], e12)] {
        let c = Constraint {
            forced_in: fin.to_vec(),
            forced_out: vec![fout],
            separate: None,
        };
        omegas.push(oracle.max_bond(&w, &c)?.value);
    }
    let [o1, o2, o3] = [omegas[0], omegas[1], omegas[2]];
    let half = |x: i64| BigRational::new(x.into(), 2.into());
    let mut coeffs: Vec<BigRational> = a.iter().map(|&x| int(x)).collect();
    coeffs.push(half(b - o1 - o2 + o3));
    coeffs.push(half(b - o1 + o2 - o3));
    coeffs.push(half(b + o1 - o2 - o3));
    finish(gb, coeffs, int(b), omegas)
}

/// Subdivides edge `e = uw` into `k` edges: `e` becomes `u n`, followed by
/// new edges `n (n+1), .., (n+k-2) w` with ids `m..m+k-1`. Every piece
/// keeps `a_e`; requires `2 a_e <= b` and that the inequality is not
/// `-x_e <= 0`.
pub fn lift_subdivide(g: &Graph, ineq: &LinearInequality, e: usize, k: usize) -> Result<Lifted> {
    g.check_edge(e)?;
    if k < 2 {
        return Err(Error::InvalidParameter("subdivision needs at least 2 segments".into()));
    }
    require_facet(g, ineq)?;
    if ineq.is_nonnegativity() == Some(e) {
        // no tight bond meets e, so the new piece cannot be raised to a facet
        return Err(Error::HypothesisViolated(format!("inequality is the nonnegativity of edge {e}")));
    }
    let (a, b) = small_coeffs(ineq)?;
    if 2 * a[e] > b {
        return Err(Error::HypothesisViolated(format!(
            "coefficient {} on edge {e} exceeds half the right-hand side {b}",
            a[e]
        )));
    }
    let n = g.node_count();
    let (u, w) = g.edge(e);
    let mut pairs = g.edges().to_vec();
    pairs[e] = (u, n);
    for i in 0..k - 1 {
        let next = if i + 2 == k { w } else { n + i + 1 };
        pairs.push((n + i, next));
    }
    let gb = Graph::new(n + k - 1, &pairs)?;
    let mut coeffs: Vec<BigRational> = a.iter().map(|&x| int(x)).collect();
    coeffs.extend((0..k - 1).map(|_| int(a[e])));
    finish(gb, coeffs, int(b), Vec::new())
}

/// Replaces the induced path through `path` (at least two edges, inner
/// nodes of degree 2) by one edge carrying the largest coefficient on the
/// path. The new edge takes the smallest id among the path's edges, other
/// edges keep their order; inner nodes are removed and the rest renumbered
/// in order.
pub fn contract_path_to_edge(g: &Graph, ineq: &LinearInequality, path: &[usize]) -> Result<Lifted> {
    if path.len() < 3 {
        return Err(Error::InvalidParameter("path needs at least two edges".into()));
    }
    let mut on_path = vec![false; g.node_count()];
    for &v in path {
        g.check_node(v)?;
        if std::mem::replace(&mut on_path[v], true) {
            return Err(Error::InvalidParameter(format!("node {v} repeats on the path")));
        }
    }
    let pe: Vec<usize> = path
        .windows(2)
        .map(|w| {
            g.edge_between(w[0], w[1])
                .ok_or_else(|| Error::InvalidParameter(format!("{}-{} is not an edge", w[0], w[1])))
        })
        .collect::<Result<_>>()?;
    let mut in_path = vec![false; g.edge_count()];
    for &e in &pe {
        in_path[e] = true;
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if on_path[u] && on_path[v] && !in_path[i] {
            return Err(Error::InvalidParameter(format!("path is not induced: chord {u}-{v}")));
        }
    }
    for &v in &path[1..path.len() - 1] {
        if g.degree(v) != 2 {
            return Err(Error::InvalidParameter(format!("inner path node {v} has degree {}", g.degree(v))));
        }
    }
    require_facet(g, ineq)?;
    if let Some(e) = ineq.is_nonnegativity().filter(|e| in_path[*e]) {
        return Err(Error::HypothesisViolated(format!("inequality is the nonnegativity of path edge {e}")));
    }
    let (a, b) = small_coeffs(ineq)?;
    let all_equal = pe.iter().all(|&e| a[e] == a[pe[0]]);
    if all_equal {
        let twice = tight_bonds(g, ineq)?
            .into_iter()
            .any(|t| t.edges.iter().filter(|&&e| in_path[e]).count() == 2);
        if twice {
            return Err(Error::HypothesisViolated(
                "equal path coefficients and a tight bond using two path edges".into(),
            ));
        }
    }
    let big_m = pe.iter().map(|&e| a[e]).max().expect("non-empty path");
    let first = *pe.iter().min().expect("non-empty path");
    let inner: Vec<bool> = (0..g.node_count())
        .map(|v| on_path[v] && v != path[0] && v != path[path.len() - 1])
        .collect();
    let mut relabel = vec![usize::MAX; g.node_count()];
    let mut next = 0;
    for v in 0..g.node_count() {
        if !inner[v] {
            relabel[v] = next;
            next += 1;
        }
    }
    let mut pairs = Vec::new();
    let mut coeffs = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if i == first {
            pairs.push((relabel[path[0]], relabel[path[path.len() - 1]]));
            coeffs.push(int(big_m));
        } else if !in_path[i] {
            pairs.push((relabel[u], relabel[v]));
            coeffs.push(int(a[i]));
        }
    }
    let gb = Graph::new(next, &pairs)?;
    finish(gb, coeffs, int(b), Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, wheel};
    use crate::polytope::families::{cycle_homog, cycle_sum};

    fn cn(n: usize) -> (Graph, Vec<usize>) {
        (cycle(n).unwrap(), (0..n).collect())
    }

    #[test]
    fn node_split_of_c4_sum() {
        let (g, c) = cn(4);
        let s = cycle_sum(&g, &c).unwrap();
        // node 0 carries edges 0 (0-1) and 3 (3-0)
        let r = lift_node_split(&g, &s, 0, [&[0], &[3]]).unwrap();
        assert_eq!(r.graph.edge_count(), 5);
        assert_eq!(r.coeffs[4], int(2 - r.omegas[0]));
        assert_eq!(r.verified(), Some(true));
    }

    #[test]
    fn triangle_identity_and_facet() {
        let (g, c) = cn(4);
        let s = cycle_sum(&g, &c).unwrap();
        let r = lift_triangle(&g, &s, 1, [&[0], &[1], &[]]).unwrap();
        let sum: BigRational = r.coeffs[4..].iter().sum();
        let o: i64 = r.omegas.iter().sum();
        assert_eq!(sum, BigRational::new((3 * 2 - o).into(), 2.into()));
        assert_eq!(r.verified(), Some(true));
    }

    #[test]
    fn subdivision() {
        let (g, c) = cn(3);
        let r = lift_subdivide(&g, &cycle_sum(&g, &c).unwrap(), 0, 2).unwrap();
        let (g4, c4) = cn(4);
        assert_eq!(r.inequality, cycle_sum(&g4, &c4).unwrap());
        let (g, c) = cn(4);
        let h = cycle_homog(&g, &c, 0).unwrap();
        assert!(matches!(lift_subdivide(&g, &h, 0, 2), Err(Error::HypothesisViolated(_))));
        assert_eq!(lift_subdivide(&g, &h, 1, 2).unwrap().verified(), Some(true));
        let nn = crate::polytope::edge_nonneg(&g, 1).unwrap();
        assert!(matches!(lift_subdivide(&g, &nn, 1, 2), Err(Error::HypothesisViolated(_))));
        assert_eq!(lift_subdivide(&g, &nn, 0, 2).unwrap().verified(), Some(true));
        let r = lift_subdivide(&g, &cycle_sum(&g, &c).unwrap(), 2, 3).unwrap();
        assert_eq!(r.graph.edge_count(), 6);
        assert_eq!(r.verified(), Some(true));
    }

    #[test]
    fn path_contraction() {
        // every pair of path edges is a tight bond of the cycle sum
        let (g, c) = cn(6);
        assert!(matches!(
            contract_path_to_edge(&g, &cycle_sum(&g, &c).unwrap(), &[0, 1, 2, 3]),
            Err(Error::HypothesisViolated(_))
        ));
        // subdividing then contracting the same path round-trips
        let (g4, c4) = cn(4);
        let h4 = cycle_homog(&g4, &c4, 0).unwrap();
        let up = lift_subdivide(&g4, &h4, 2, 3).unwrap();
        assert_eq!(up.verified(), Some(true));
        let down = contract_path_to_edge(&up.graph, &up.inequality, &[2, 4, 5, 3]).unwrap();
        assert_eq!(down.graph, g4);
        assert_eq!(down.inequality, h4);
        let h = cycle_homog(&g, &c, 4).unwrap();
        let r = contract_path_to_edge(&g, &h, &[0, 1, 2]).unwrap();
        assert_eq!(r.verified(), Some(true));
        let r = contract_path_to_edge(&g, &h, &[3, 4, 5, 0]).unwrap();
        assert_eq!(r.coeffs[3], int(1));
        assert_eq!(r.verified(), Some(true));
    }

    #[test]
    fn rejects_non_facets() {
        let g = wheel(4).unwrap();
        let loose = LinearInequality::from_ints(&[1; 8], 8).unwrap();
        assert!(matches!(lift_subdivide(&g, &loose, 0, 2), Err(Error::NotAFacet)));
    }
}
