use super::{generators, Graph};
use crate::error::{Error, Result};
use std::fmt;

/// Families of 3-connected graphs without a `K5 - e` minor, plus `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    K3,
    /// Wheel with the given number of rim nodes.
    Wheel(usize),
    Prism,
    K33,
    Other,
}

impl FamilyTag {
    pub fn is_k5e_free(self) -> bool {
        !matches!(self, FamilyTag::Other)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::K3 => f.write_str("k3"),
            FamilyTag::Wheel(n) => write!(f, "wheel:{n}"),
            FamilyTag::Prism => f.write_str("prism"),
            FamilyTag::K33 => f.write_str("k33"),
            FamilyTag::Other => f.write_str("other"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub tag: FamilyTag,
    /// `witness[i]` is the node of the input playing node `i` of the
    /// family's generator numbering. Empty for `Other`.
    pub witness: Vec<usize>,
}

/// Classifies a 3-connected graph (or a triangle).
pub fn classify_3connected_k5e(g: &Graph) -> Result<Classification> {
    let is_triangle = g.node_count() == 3 && g.edge_count() == 3;
    if !is_triangle && !g.is_k_connected(3) {
        return Err(Error::NotThreeConnected);
    }
    Ok(classify_family(g))
}

/// Like [`classify_3connected_k5e`] but trusts the caller on connectivity.
/// Runs in linear time except on six-node inputs.
pub fn classify_family(g: &Graph) -> Classification {
    let (n, m) = (g.node_count(), g.edge_count());
    if n == 3 && m == 3 {
        return Classification {
            tag: FamilyTag::K3,
            witness: vec![0, 1, 2],
        };
    }
    if let Some(witness) = wheel_witness(g) {
        return Classification {
            tag: FamilyTag::Wheel(n - 1),
            witness,
        };
    }
    if n == 6 && m == 9 && (0..6).all(|v| g.degree(v) == 3) {
        for (tag, template) in [
            (FamilyTag::Prism, generators::prism()),
            (FamilyTag::K33, generators::k33()),
        ] {
            if let Some(witness) = embed(&template, g) {
                return Classification { tag, witness };
            }
        }
    }
    Classification {
        tag: FamilyTag::Other,
        witness: Vec::new(),
    }
}

fn wheel_witness(g: &Graph) -> Option<Vec<usize>> {
    let n = g.node_count();
    if n < 4 || g.edge_count() != 2 * (n - 1) {
        return None;
    }
    let k = n - 1;
    let centre = (0..n).find(|&v| g.degree(v) == k)?;
    if (0..n).any(|v| v != centre && g.degree(v) != 3) {
        return None;
    }
    let rim_next = |v: usize, prev: usize| {
        g.neighbors(v)
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| w != centre && w != prev)
    };
    let start = (0..n).find(|&v| v != centre)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = rim_next(cur, prev)?;
        if next == start {
            break;
        }
        if order.len() == k {
            return None;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != k {
        return None;
    }
    order.push(centre);
    Some(order)
}

/// Finds a bijection `template node -> g node` mapping edges to edges.
fn embed(template: &Graph, g: &Graph) -> Option<Vec<usize>> {
    let n = template.node_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(t: &Graph, g: &Graph, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == map.len() {
            return true;
        }
        for cand in 0..map.len() {
            if used[cand] {
                continue;
            }
            // every template edge to an already-mapped node must exist in g
            let ok = t
                .neighbors(i)
                .iter()
                .filter(|&&(j, _)| j < i)
                .all(|&(j, _)| g.edge_between(cand, map[j]).is_some());
            if ok {
                map[i] = cand;
                used[cand] = true;
                if go(t, g, i + 1, map, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }
    go(template, g, 0, &mut map, &mut used).then_some(map)
}
