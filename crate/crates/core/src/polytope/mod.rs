//! Exact polyhedral tools for bond polytopes: validity and facet checks,
//! facet enumeration, inequality families, switching and lifting.

mod check;
mod families;
mod hull;
mod inequality;
mod lifting;
mod linalg;

pub use check::{
    bond_vectors, check_inequality, check_inequality_with_cap, contraction_polytope_check, cut_facet_enumeration,
    cut_vectors, facet_enumeration, facet_enumeration_with_cap, tight_bonds, verify_description, DescriptionDiff,
    FacetReport, DEFAULT_EDGE_CAP,
};
pub use families::{
    cn_description, cycle_homog, cycle_sum, edge_cycle_description, edge_nonneg, edge_upper, from_spec,
    gen_cycle_sum, wheel_description,
};
pub use hull::facets_of_points;
pub use inequality::{parse_rational, LinearInequality};
pub use lifting::{contract_path_to_edge, lift_node_split, lift_subdivide, lift_triangle, Lifted};
pub use linalg::{affine_dim, rank, RowSpace};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Switches `ineq` at the node set `w`: coefficients on `δ(W)` change sign
/// and their sum is subtracted from the right-hand side. No facet claim is
/// attached to the result.
pub fn switch(ineq: &LinearInequality, g: &Graph, w: &[usize]) -> Result<LinearInequality> {
    if ineq.dim() != g.edge_count() {
        return Err(Error::InvalidParameter(format!(
            "inequality has {} coefficients but the graph has {} edges",
            ineq.dim(),
            g.edge_count()
        )));
    }
    let mut side = vec![false; g.node_count()];
    for &v in w {
        g.check_node(v)?;
        side[v] = true;
    }
    let mut a = ineq.coeffs().to_vec();
    let mut b = ineq.rhs().clone();
    for e in g.cut_edges(&side) {
        b -= &a[e];
        a[e] = -a[e].clone();
    }
    let out = LinearInequality::from_integers(a, b)?;
    Ok(match ineq.tag() {
        Some(t) => out.with_tag(format!("switched {t}")),
        None => out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn switching() {
        let g = cycle(4).unwrap();
        let c: Vec<usize> = (0..4).collect();
        let s = cycle_sum(&g, &c).unwrap();
        assert_eq!(switch(&s, &g, &[]).unwrap(), s);
        // switching at node 0 flips edges 0 and 3
        let t = switch(&s, &g, &[0]).unwrap();
        assert_eq!(t, LinearInequality::from_ints(&[-1, 1, 1, -1], 0).unwrap());
        let r = check_inequality(&g, &t).unwrap();
        assert!(!r.valid);
        // the star of node 2, which is not adjacent to node 0
        assert_eq!(r.violating_bond.unwrap().edges, vec![1, 2]);
        let h = cycle_homog(&g, &c, 0).unwrap();
        let tight = tight_bonds(&g, &h).unwrap();
        for tb in tight.iter().filter(|b| !b.edges.is_empty()) {
            assert!(check_inequality(&g, &switch(&h, &g, &tb.side).unwrap()).unwrap().facet_defining);
        }
    }
}
