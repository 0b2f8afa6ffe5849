//! Maximum bond of a single skeleton with local edge weights.

use super::wheel::wheel_max_bond;
use crate::error::{Error, Result};
use crate::graph::{classify_family, Classification, FamilyTag, Graph};
use crate::oracle::{Constraint, Oracle};

/// Chosen edges are indices into the skeleton's edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonChoice {
    pub value: i64,
    pub edges: Vec<usize>,
}

fn forced_sets(k: usize, c: &Constraint) -> Result<(Vec<bool>, Vec<bool>)> {
    let mut fin = vec![false; k];
    let mut fout = vec![false; k];
    for &e in &c.forced_in {
        *fin.get_mut(e).ok_or(Error::EdgeOutOfRange { edge: e, m: k })? = true;
    }
    for &e in &c.forced_out {
        *fout.get_mut(e).ok_or(Error::EdgeOutOfRange { edge: e, m: k })? = true;
    }
    if (0..k).any(|e| fin[e] && fout[e]) {
        return Err(Error::InvalidParameter("edge forced both ways".into()));
    }
    Ok((fin, fout))
}

/// Cycle skeleton: the bonds are the empty cut and every pair of edges.
pub fn solve_skeleton_s(weights: &[i64], c: &Constraint) -> Result<SkeletonChoice> {
    let k = weights.len();
    let (fin, fout) = forced_sets(k, c)?;
    let forced: Vec<usize> = (0..k).filter(|&e| fin[e]).collect();
    if forced.len() > 2 {
        return Err(Error::Infeasible);
    }
    let mut free: Vec<usize> = (0..k).filter(|&e| !fin[e] && !fout[e]).collect();
    // stable: heaviest first, lower index on ties
    free.sort_by_key(|&e| std::cmp::Reverse(weights[e]));
    let mut pick = forced.clone();
    pick.extend(free.iter().take(2 - forced.len()));
    let mut best: Option<SkeletonChoice> = None;
    if forced.is_empty() {
        best = Some(SkeletonChoice {
            value: 0,
            edges: Vec::new(),
        });
    }
    if pick.len() == 2 {
        let value = weights[pick[0]] + weights[pick[1]];
        if best.as_ref().is_none_or(|b| value > b.value) {
            pick.sort_unstable();
            best = Some(SkeletonChoice { value, edges: pick });
        }
    }
    best.ok_or(Error::Infeasible)
}

/// Bond skeleton: the only bonds are the empty cut and all edges.
pub fn solve_skeleton_p(weights: &[i64], c: &Constraint) -> Result<SkeletonChoice> {
    let k = weights.len();
    let (fin, fout) = forced_sets(k, c)?;
    let empty_ok = !fin.contains(&true);
    let all_ok = !fout.contains(&true);
    let total: i64 = weights.iter().sum();
    match (empty_ok, all_ok) {
        (true, true) if total <= 0 => Ok(SkeletonChoice {
            value: 0,
            edges: Vec::new(),
        }),
        (_, true) => Ok(SkeletonChoice {
            value: total,
            edges: (0..k).collect(),
        }),
        (true, false) => Ok(SkeletonChoice {
            value: 0,
            edges: Vec::new(),
        }),
        (false, false) => Err(Error::Infeasible),
    }
}

/// How R skeletons outside the wheel family are handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RPolicy {
    /// Enumerate bonds (within the oracle's node cap).
    Enumerate,
    /// Refuse anything that is not a wheel, prism, `K3,3` or triangle.
    K5eOnly,
}

/// 3-connected skeleton given as a simple graph: wheels use the linear
/// sweep, everything else is enumerated.
pub fn solve_skeleton_r(
    h: &Graph,
    class: &Classification,
    weights: &[i64],
    c: &Constraint,
    policy: RPolicy,
) -> Result<SkeletonChoice> {
    match class.tag {
        FamilyTag::Wheel(n) => {
            let w = &class.witness;
            // local node -> template node
            let mut pos = vec![0; h.node_count()];
            for (t, &v) in w.iter().enumerate() {
                pos[v] = t;
            }
            let centre = n;
            let to_template = |e: usize| {
                let (a, b) = h.edge(e);
                let (ta, tb) = (pos[a], pos[b]);
                if ta == centre {
                    n + tb
                } else if tb == centre {
                    n + ta
                } else if (ta + 1) % n == tb {
                    ta
                } else {
                    tb
                }
            };
            let mut from_template = vec![0; 2 * n];
            let mut rim = vec![0; n];
            let mut spokes = vec![0; n];
            for e in 0..h.edge_count() {
                let t = to_template(e);
                from_template[t] = e;
                if t < n {
                    rim[t] = weights[e];
                } else {
                    spokes[t - n] = weights[e];
                }
            }
            let tc = Constraint {
                forced_in: c.forced_in.iter().map(|&e| to_template(e)).collect(),
                forced_out: c.forced_out.iter().map(|&e| to_template(e)).collect(),
                separate: None,
            };
            let sol = wheel_max_bond(&rim, &spokes, &tc)?;
            let mut edges: Vec<usize> = sol.edges.iter().map(|&t| from_template[t]).collect();
            edges.sort_unstable();
            Ok(SkeletonChoice {
                value: sol.value,
                edges,
            })
        }
        FamilyTag::Other if policy == RPolicy::K5eOnly => Err(Error::NotK5eMinorFree {
            block: 0,
            skeleton: 0,
            found: format!("3-connected graph on {} nodes", h.node_count()),
        }),
        _ => {
            let r = Oracle::new(h)?.max_bond(weights, c)?;
            Ok(SkeletonChoice {
                value: r.value,
                edges: r.bond.edges,
            })
        }
    }
}

/// Classification of an R skeleton, trusting that it is 3-connected.
pub(crate) fn classify_r(h: &Graph) -> Classification {
    classify_family(h)
}
