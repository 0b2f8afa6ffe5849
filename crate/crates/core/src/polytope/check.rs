use super::hull::facets_of_points;
use super::inequality::LinearInequality;
use super::linalg::affine_dim;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{BondCut, Oracle, DEFAULT_NODE_CAP};
use num_bigint::BigInt;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Largest edge count accepted by [`facet_enumeration`].
pub const DEFAULT_EDGE_CAP: usize = 12;

/// Incidence vectors of all bonds, in the oracle's order.
pub fn bond_vectors(g: &Graph) -> Result<Vec<Vec<u8>>> {
    let m = g.edge_count();
    Ok(Oracle::new(g)?.bonds().map(|b| b.indicator(m)).collect())
}

/// Incidence vectors of all cuts, bonds or not.
pub fn cut_vectors(g: &Graph) -> Result<Vec<Vec<u8>>> {
    let m = g.edge_count();
    Ok(Oracle::new(g)?.cuts().map(|b| b.indicator(m)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetReport {
    pub valid: bool,
    /// Some bond attains equality.
    pub tight: bool,
    /// Affine dimension of the tight bond vectors, `-1` when there are none.
    pub face_dim: i64,
    pub facet_defining: bool,
    pub tight_bond_count: usize,
    /// Largest left-hand side over all bonds, in normalised units.
    pub max_value: BigInt,
    /// The first bond with `a·x > b`.
    pub violating_bond: Option<BondCut>,
}

fn check_dim(g: &Graph, ineq: &LinearInequality) -> Result<()> {
    if ineq.dim() != g.edge_count() {
        return Err(Error::InvalidParameter(format!(
            "inequality has {} coefficients but the graph has {} edges",
            ineq.dim(),
            g.edge_count()
        )));
    }
    Ok(())
}

pub fn check_inequality(g: &Graph, ineq: &LinearInequality) -> Result<FacetReport> {
    check_inequality_with_cap(g, ineq, DEFAULT_NODE_CAP)
}

pub fn check_inequality_with_cap(g: &Graph, ineq: &LinearInequality, node_cap: usize) -> Result<FacetReport> {
    check_dim(g, ineq)?;
    let m = g.edge_count();
    let mut tight = Vec::new();
    let mut violating = None;
    let mut max_value: Option<BigInt> = None;
    for b in Oracle::with_cap(g, node_cap)?.bonds() {
        let v = ineq.lhs_on(&b.edges);
        match v.cmp(ineq.rhs()) {
            Ordering::Equal => tight.push(b.indicator(m)),
            Ordering::Greater if violating.is_none() => violating = Some(b),
            _ => {}
        }
        if max_value.as_ref().is_none_or(|x| v > *x) {
            max_value = Some(v);
        }
    }
    let valid = violating.is_none();
    let face_dim = affine_dim(&tight);
    Ok(FacetReport {
        valid,
        tight: !tight.is_empty(),
        face_dim,
        facet_defining: valid && face_dim == m as i64 - 1,
        tight_bond_count: tight.len(),
        max_value: max_value.expect("the empty cut is a bond"),
        violating_bond: violating,
    })
}

/// Bonds attaining `a·x = b`.
pub fn tight_bonds(g: &Graph, ineq: &LinearInequality) -> Result<Vec<BondCut>> {
    check_dim(g, ineq)?;
    Ok(Oracle::new(g)?
        .bonds()
        .filter(|b| ineq.compare_on(&b.edges) == Ordering::Equal)
        .collect())
}

pub fn facet_enumeration(g: &Graph) -> Result<Vec<LinearInequality>> {
    facet_enumeration_with_cap(g, DEFAULT_EDGE_CAP)
}

/// Every facet of the bond polytope, normalised and sorted.
pub fn facet_enumeration_with_cap(g: &Graph, edge_cap: usize) -> Result<Vec<LinearInequality>> {
    if g.edge_count() > edge_cap {
        return Err(Error::SizeCapExceeded {
            what: "facet enumeration",
            size: g.edge_count(),
            cap: edge_cap,
        });
    }
    facets_of_points(&bond_vectors(g)?)
}

/// Every facet of the cut polytope.
pub fn cut_facet_enumeration(g: &Graph) -> Result<Vec<LinearInequality>> {
    if g.edge_count() > DEFAULT_EDGE_CAP {
        return Err(Error::SizeCapExceeded {
            what: "facet enumeration",
            size: g.edge_count(),
            cap: DEFAULT_EDGE_CAP,
        });
    }
    facets_of_points(&cut_vectors(g)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescriptionDiff {
    pub equal: bool,
    /// Facets absent from the candidate list.
    pub missing: Vec<LinearInequality>,
    /// Candidates that are not facets.
    pub extra: Vec<LinearInequality>,
}

/// Compares `candidate` with the enumerated facets as sets.
pub fn verify_description(g: &Graph, candidate: &[LinearInequality]) -> Result<DescriptionDiff> {
    for c in candidate {
        check_dim(g, c)?;
    }
    let facets: BTreeSet<LinearInequality> = facet_enumeration(g)?.into_iter().collect();
    let cand: BTreeSet<LinearInequality> = candidate.iter().cloned().collect();
    let missing: Vec<_> = facets.difference(&cand).cloned().collect();
    let extra: Vec<_> = cand.difference(&facets).cloned().collect();
    Ok(DescriptionDiff {
        equal: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
    })
}

/// Whether the bonds of `G/e`, carried back to `G`'s edge ids, are exactly
/// the bonds of `G` avoiding `e`.
pub fn contraction_polytope_check(g: &Graph, e: usize) -> Result<bool> {
    g.check_edge(e)?;
    let c = g.contract_edge(e)?;
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); c.graph.edge_count()];
    for (old, new) in c.edge_map.iter().enumerate() {
        if let Some(new) = new {
            back[*new].push(old);
        }
    }
    // merged parallel edges always cross together, so the image is exact
    let from_minor: BTreeSet<Vec<usize>> = Oracle::new(&c.graph)?
        .bonds()
        .map(|b| {
            let mut edges: Vec<usize> = b.edges.iter().flat_map(|&f| back[f].iter().copied()).collect();
            edges.sort_unstable();
            edges
        })
        .collect();
    let from_graph: BTreeSet<Vec<usize>> = Oracle::new(g)?
        .bonds()
        .filter(|b| !b.contains(e))
        .map(|b| b.edges)
        .collect();
    Ok(from_minor == from_graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, k33, k5_minus_e, triangle};

    #[test]
    fn bond_vector_counts() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(bond_vectors(&k2).unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(bond_vectors(&triangle()).unwrap().len(), 4);
        assert_eq!(bond_vectors(&cycle(4).unwrap()).unwrap().len(), 7);
    }

    #[test]
    fn dimension_is_edge_count() {
        assert_eq!(affine_dim(&bond_vectors(&cycle(5).unwrap()).unwrap()), 5);
        assert_eq!(affine_dim(&bond_vectors(&k33()).unwrap()), 9);
    }

    #[test]
    fn k5e_facet() {
        let g = k5_minus_e();
        let ineq = LinearInequality::from_ints(&[1, 1, 0, 1, 1, 0, 1, -1, -1], 2).unwrap();
        let r = check_inequality(&g, &ineq).unwrap();
        assert!(r.facet_defining);
        assert!(facet_enumeration(&g).unwrap().contains(&ineq));
    }

    #[test]
    fn c6_sum_four_is_loose() {
        let r = check_inequality(&cycle(6).unwrap(), &LinearInequality::from_ints(&[1; 6], 4).unwrap()).unwrap();
        assert!(r.valid && !r.tight && !r.facet_defining);
        assert_eq!(r.face_dim, -1);
        assert_eq!(r.max_value, BigInt::from(2));
    }

    #[test]
    fn c4_facets() {
        let f = facet_enumeration(&cycle(4).unwrap()).unwrap();
        assert_eq!(f.len(), 9);
    }

    #[test]
    fn contraction() {
        for e in 0..4 {
            assert!(contraction_polytope_check(&cycle(4).unwrap(), e).unwrap());
        }
    }
}
