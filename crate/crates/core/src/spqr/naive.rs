//! Split components by repeatedly searching for separation pairs. Slow but
//! simple; kept as a reference for the linear-time construction.

use super::assemble::{CompKind, SplitComponents};
use crate::graph::Graph;
use std::collections::HashMap;

pub(crate) fn split_components(g: &Graph) -> SplitComponents {
    let mut ends: Vec<(usize, usize)> = g.edges().to_vec();
    let mut work: Vec<Vec<usize>> = vec![(0..ends.len()).collect()];
    let mut comps = Vec::new();
    while let Some(comp) = work.pop() {
        match split_once(&comp, &ends) {
            Some((first, second, (u, v))) => {
                let virt = ends.len();
                ends.push((u, v));
                for mut part in [first, second] {
                    part.push(virt);
                    work.push(part);
                }
            }
            None => comps.push((classify(&comp, &ends), comp)),
        }
    }
    SplitComponents {
        real_edges: g.edge_count(),
        ends,
        comps,
    }
}

fn key(ends: &[(usize, usize)], e: usize) -> (usize, usize) {
    let (u, v) = ends[e];
    (u.min(v), u.max(v))
}

fn classify(comp: &[usize], ends: &[(usize, usize)]) -> CompKind {
    let mut degree: HashMap<usize, usize> = HashMap::new();
    for &e in comp {
        let (u, v) = ends[e];
        *degree.entry(u).or_default() += 1;
        *degree.entry(v).or_default() += 1;
    }
    if degree.len() == 2 {
        CompKind::Bond
    } else if degree.values().all(|&d| d == 2) {
        CompKind::Polygon
    } else {
        CompKind::Triconnected
    }
}

type Split = (Vec<usize>, Vec<usize>, (usize, usize));

fn split_once(comp: &[usize], ends: &[(usize, usize)]) -> Option<Split> {
    if comp.len() <= 3 {
        return None;
    }
    let mut classes: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for &e in comp {
        classes.entry(key(ends, e)).or_default().push(e);
    }
    let mut multi: Vec<_> = classes.iter().filter(|(_, c)| c.len() >= 2).collect();
    multi.sort();
    if let Some((&pair, bundle)) = multi.first() {
        if bundle.len() < comp.len() {
            let rest = comp.iter().copied().filter(|e| !bundle.contains(e)).collect();
            return Some((bundle.to_vec(), rest, pair));
        }
        return None;
    }
    let mut nodes: Vec<usize> = comp.iter().flat_map(|&e| [ends[e].0, ends[e].1]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    for (i, &u) in nodes.iter().enumerate() {
        for &v in &nodes[i + 1..] {
            if let Some((first, rest)) = separate(comp, ends, &nodes, u, v) {
                return Some((first, rest, (u, v)));
            }
        }
    }
    None
}

/// Splits off the edges of one component of `comp - {u, v}` when there are
/// at least two such components.
fn separate(
    comp: &[usize],
    ends: &[(usize, usize)],
    nodes: &[usize],
    u: usize,
    v: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let idx = |x: usize| nodes.binary_search(&x).expect("node of component");
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &e in comp {
        let (a, b) = ends[e];
        if a != u && a != v && b != u && b != v {
            let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
            parent[ra] = rb;
        }
    }
    let mut roots: Vec<usize> = nodes
        .iter()
        .filter(|&&x| x != u && x != v)
        .map(|&x| find(&mut parent, idx(x)))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() < 2 {
        return None;
    }
    let chosen = roots[0];
    let (mut first, mut rest) = (Vec::new(), Vec::new());
    for &e in comp {
        let (a, b) = ends[e];
        let inner = if a != u && a != v { a } else { b };
        if inner != u && inner != v && find(&mut parent, idx(inner)) == chosen {
            first.push(e);
        } else {
            rest.push(e);
        }
    }
    Some((first, rest))
}
