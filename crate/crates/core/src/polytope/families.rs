//! Named inequality families.

use super::inequality::LinearInequality;
use crate::error::{Error, Result};
use crate::graph::{cycle, cycle_edges, induced_cycles, simple_cycles, triangles, wheel, Graph};
use crate::oracle::{is_interleaved, InterleaveMethod};

fn unit(g: &Graph, e: usize, c: i64) -> Result<Vec<i64>> {
    g.check_edge(e)?;
    let mut a = vec![0; g.edge_count()];
    a[e] = c;
    Ok(a)
}

/// `-x_e <= 0`.
pub fn edge_nonneg(g: &Graph, e: usize) -> Result<LinearInequality> {
    Ok(LinearInequality::from_ints(&unit(g, e, -1)?, 0)?.with_tag(format!("nonneg:{e}")))
}

/// `x_e <= 1`.
pub fn edge_upper(g: &Graph, e: usize) -> Result<LinearInequality> {
    Ok(LinearInequality::from_ints(&unit(g, e, 1)?, 1)?.with_tag(format!("upper:{e}")))
}

/// `x_e - sum of the other edges of C <= 0` for a cycle given by its nodes.
pub fn cycle_homog(g: &Graph, c: &[usize], e: usize) -> Result<LinearInequality> {
    let ce = cycle_edges(g, c)?;
    if !ce.contains(&e) {
        return Err(Error::InvalidParameter(format!("edge {e} is not on the cycle")));
    }
    let mut a = vec![0; g.edge_count()];
    for f in ce {
        a[f] = -1;
    }
    a[e] = 1;
    Ok(LinearInequality::from_ints(&a, 0)?.with_tag(format!("cycle-homog:{e}")))
}

/// `sum over C <= 2`.
pub fn cycle_sum(g: &Graph, c: &[usize]) -> Result<LinearInequality> {
    Ok(gen_cycle_sum(g, c, 1)?.with_tag("cycle-sum"))
}

/// `sum over C <= 2k`.
pub fn gen_cycle_sum(g: &Graph, c: &[usize], k: u32) -> Result<LinearInequality> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let mut a = vec![0; g.edge_count()];
    for f in cycle_edges(g, c)? {
        a[f] = 1;
    }
    Ok(LinearInequality::from_ints(&a, 2 * k as i64)?.with_tag(format!("gen-cycle-sum:{k}")))
}

/// Full facet list of the bond polytope of the cycle on `n` nodes: for
/// `n >= 4` nonnegativity, homogeneous cycle inequalities and the cycle
/// sum; for the triangle the nonnegativity constraints are implied and
/// left out.
pub fn cn_description(n: usize) -> Result<Vec<LinearInequality>> {
    let g = cycle(n)?;
    let nodes: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    if n >= 4 {
        for e in 0..n {
            out.push(edge_nonneg(&g, e)?);
        }
    }
    for e in 0..n {
        out.push(cycle_homog(&g, &nodes, e)?);
    }
    out.push(cycle_sum(&g, &nodes)?);
    out.sort();
    Ok(out)
}

/// Full facet list of the bond polytope of the wheel with `n` rim nodes:
/// per triangle the three homogeneous inequalities and the sum bound, per
/// rim edge the homogeneous rim inequality, and the rim sum bound.
pub fn wheel_description(n: usize) -> Result<Vec<LinearInequality>> {
    let g = wheel(n)?;
    let mut out = Vec::new();
    for t in triangles(&g) {
        let t = t.to_vec();
        for e in cycle_edges(&g, &t)? {
            out.push(cycle_homog(&g, &t, e)?);
        }
        out.push(cycle_sum(&g, &t)?);
    }
    let rim: Vec<usize> = (0..n).collect();
    for e in 0..n {
        out.push(cycle_homog(&g, &rim, e)?);
    }
    out.push(cycle_sum(&g, &rim)?);
    out.sort();
    out.dedup();
    Ok(out)
}

/// The edge and cycle families describing 3-connected planar graphs
/// without a `K5 - e` minor: nonnegativity off triangles, homogeneous
/// inequalities of induced cycles and sum bounds of non-interleaved
/// cycles. Exponential; meant for small graphs.
pub fn edge_cycle_description(g: &Graph) -> Result<Vec<LinearInequality>> {
    let n = g.node_count();
    let mut in_triangle = vec![false; g.edge_count()];
    for t in triangles(g) {
        for e in cycle_edges(g, &t)? {
            in_triangle[e] = true;
        }
    }
    let mut out = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| !in_triangle[e]) {
        out.push(edge_nonneg(g, e)?);
    }
    for c in induced_cycles(g, n) {
        for e in cycle_edges(g, &c)? {
            out.push(cycle_homog(g, &c, e)?);
        }
    }
    for c in simple_cycles(g, n) {
        if !is_interleaved(g, &c, InterleaveMethod::Bonds)?.interleaved {
            out.push(cycle_sum(g, &c)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn parse_cycle(named: &[(String, Vec<usize>)], s: &str) -> Result<Vec<usize>> {
    if let Some((_, c)) = named.iter().find(|(n, _)| n == s) {
        return Ok(c.clone());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("unknown cycle {s:?}")))
        })
        .collect()
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::InvalidParameter(format!("expected a number, found {s:?}")))
}

/// Builds a family member from a short spec such as `nonneg:3`,
/// `upper:3`, `cycle-homog:outer:2`, `cycle-sum:0,1,2,3` or
/// `gen-cycle-sum:outer:2`. Cycles are given by name or as a node list.
pub fn from_spec(g: &Graph, named: &[(String, Vec<usize>)], spec: &str) -> Result<LinearInequality> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["nonneg", e] => edge_nonneg(g, parse_num(e)?),
        ["upper", e] => edge_upper(g, parse_num(e)?),
        ["cycle-homog", c, e] => cycle_homog(g, &parse_cycle(named, c)?, parse_num(e)?),
        ["cycle-sum", c] => cycle_sum(g, &parse_cycle(named, c)?),
        ["gen-cycle-sum", c, k] => gen_cycle_sum(g, &parse_cycle(named, c)?, parse_num(k)?),
        _ => Err(Error::InvalidParameter(format!("unknown inequality spec {spec:?}"))),
    }
}
