//! Turns split components into the SPR tree by merging adjacent bonds and
//! adjacent polygons.

use super::{EdgeKind, Skeleton, SkeletonEdge, SkeletonKind, SprTree, TreeLink};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CompKind {
    Bond,
    Polygon,
    Triconnected,
}

/// Edge ids below `real_edges` are the input's; the rest are virtual and
/// each must occur in exactly two components.
#[derive(Debug, Clone)]
pub(crate) struct SplitComponents {
    pub real_edges: usize,
    pub ends: Vec<(usize, usize)>,
    pub comps: Vec<(CompKind, Vec<usize>)>,
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

pub(crate) fn assemble(split: &SplitComponents) -> SprTree {
    let m = split.real_edges;
    let total = split.ends.len();
    let k = split.comps.len();
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (c, (_, edges)) in split.comps.iter().enumerate() {
        for &e in edges {
            owners[e].push(c);
        }
    }
    let mut parent: Vec<usize> = (0..k).collect();
    let mut internal = vec![false; total];
    for e in m..total {
        let [a, b] = owners[e][..] else {
            panic!("virtual edge {e} must sit in exactly two components");
        };
        let (ka, kb) = (split.comps[a].0, split.comps[b].0);
        if ka == kb && ka != CompKind::Triconnected {
            internal[e] = true;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    // group components by representative, in first-seen order
    let mut group_of = vec![usize::MAX; k];
    let mut groups: Vec<(CompKind, Vec<usize>)> = Vec::new();
    for c in 0..k {
        let r = find(&mut parent, c);
        if group_of[r] == usize::MAX {
            group_of[r] = groups.len();
            groups.push((split.comps[c].0, Vec::new()));
        }
        let g = group_of[r];
        groups[g]
            .1
            .extend(split.comps[c].1.iter().copied().filter(|&e| !internal[e]));
    }
    let norm = |e: usize| {
        let (u, v) = split.ends[e];
        (u.min(v), u.max(v))
    };
    // order skeletons by smallest real edge, then node set
    let mut keyed: Vec<((usize, Vec<usize>, usize), usize)> = groups
        .iter()
        .enumerate()
        .map(|(i, (_, edges))| {
            let min_real = edges.iter().copied().filter(|&e| e < m).min().unwrap_or(usize::MAX);
            let mut nodes: Vec<usize> = edges.iter().flat_map(|&e| [norm(e).0, norm(e).1]).collect();
            nodes.sort_unstable();
            nodes.dedup();
            ((min_real, nodes, edges.len()), i)
        })
        .collect();
    keyed.sort();
    let mut link_of = vec![usize::MAX; total];
    let mut links: Vec<TreeLink> = Vec::new();
    let mut skeletons = Vec::with_capacity(keyed.len());
    for (pos, ((_, nodes, _), gi)) in keyed.into_iter().enumerate() {
        let (kind, edges) = &groups[gi];
        let mut reals: Vec<usize> = edges.iter().copied().filter(|&e| e < m).collect();
        reals.sort_unstable();
        let mut virts: Vec<usize> = edges.iter().copied().filter(|&e| e >= m).collect();
        virts.sort_by_key(|&e| (norm(e), e));
        let mut sk_edges: Vec<SkeletonEdge> = reals
            .into_iter()
            .map(|e| SkeletonEdge {
                ends: norm(e),
                kind: EdgeKind::Real(e),
            })
            .collect();
        for e in virts {
            if link_of[e] == usize::MAX {
                link_of[e] = links.len();
                links.push(TreeLink {
                    skeletons: (pos, usize::MAX),
                    ends: norm(e),
                });
            } else {
                links[link_of[e]].skeletons.1 = pos;
            }
            sk_edges.push(SkeletonEdge {
                ends: norm(e),
                kind: EdgeKind::Virtual(link_of[e]),
            });
        }
        sk_edges.sort_by_key(|se| match se.kind {
            EdgeKind::Real(e) => (0, e),
            EdgeKind::Virtual(l) => (1, l),
        });
        skeletons.push(Skeleton {
            kind: match kind {
                CompKind::Bond => SkeletonKind::P,
                CompKind::Polygon => SkeletonKind::S,
                CompKind::Triconnected => SkeletonKind::R,
            },
            nodes,
            edges: sk_edges,
        });
    }
    SprTree { skeletons, links }
}
