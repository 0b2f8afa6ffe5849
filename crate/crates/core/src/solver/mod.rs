//! Exact maximum weight bond via blocks, SPR trees and leaf pruning.

mod skeleton;
mod wheel;

pub use skeleton::{solve_skeleton_p, solve_skeleton_r, solve_skeleton_s, RPolicy, SkeletonChoice};
pub use wheel::{wheel_max_bond, WheelBond, WheelSolution};

use crate::error::{Error, Result};
use crate::graph::{Classification, FamilyTag, Graph};
use crate::oracle::{check_weights, max_bond_oracle, BondCut, Constraint, SolveResult};
use crate::spqr::{blocks, spr_tree, EdgeKind, SkeletonKind, SprTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveMode {
    /// SPR reduction; wheels in linear time, other R skeletons enumerated.
    #[default]
    Auto,
    /// Enumerate bonds of each block directly.
    Oracle,
    /// SPR reduction that refuses graphs with a `K5 - e` minor.
    K5e,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub blocks: usize,
    pub bridges: usize,
    pub s: usize,
    pub p: usize,
    pub r: usize,
    pub wheels: usize,
    pub prisms: usize,
    pub k33s: usize,
    pub other_r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub result: SolveResult,
    pub stats: SolveStats,
}

/// Maximum weight bond of any graph (the empty cut counts, so the value is
/// never negative).
pub fn max_bond(g: &Graph, w: &[i64]) -> Result<SolveResult> {
    Ok(solve(g, w, SolveMode::Auto)?.result)
}

/// Maximum weight bond of a graph without a `K5 - e` minor in linear time;
/// fails with [`Error::NotK5eMinorFree`] otherwise.
pub fn k5e_max_bond(g: &Graph, w: &[i64]) -> Result<SolveResult> {
    Ok(solve(g, w, SolveMode::K5e)?.result)
}

/// Whether every 3-connected component of every block is a wheel, prism,
/// `K3,3` or triangle.
pub fn is_k5e_minor_free(g: &Graph) -> Result<bool> {
    for b in blocks(g) {
        if b.is_bridge() {
            continue;
        }
        let t = spr_tree(&b.graph)?;
        for s in t.skeletons.iter().filter(|s| s.kind == SkeletonKind::R) {
            if !skeleton::classify_r(&s.local_graph()?).tag.is_k5e_free() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn solve(g: &Graph, w: &[i64], mode: SolveMode) -> Result<SolveReport> {
    check_weights(g, w)?;
    let mut stats = SolveStats::default();
    let mut best: (i64, Vec<usize>) = (0, Vec::new());
    for (bi, b) in blocks(g).into_iter().enumerate() {
        stats.blocks += 1;
        let local_w: Vec<i64> = b.edges.iter().map(|&e| w[e]).collect();
        let (value, local_edges) = if b.is_bridge() {
            stats.bridges += 1;
            if local_w[0] > 0 {
                (local_w[0], vec![0])
            } else {
                (0, Vec::new())
            }
        } else if mode == SolveMode::Oracle {
            let r = max_bond_oracle(&b.graph, &local_w, &Constraint::none())?;
            (r.value, r.bond.edges)
        } else {
            let t = spr_tree(&b.graph)?;
            let policy = if mode == SolveMode::K5e {
                RPolicy::K5eOnly
            } else {
                RPolicy::Enumerate
            };
            reduce(&t, &local_w, policy, &mut stats).map_err(|e| match e {
                Error::NotK5eMinorFree { skeleton, found, .. } => Error::NotK5eMinorFree {
                    block: bi,
                    skeleton,
                    found,
                },
                e => e,
            })?
        };
        if value > best.0 {
            best = (value, local_edges.iter().map(|&e| b.edges[e]).collect());
        }
    }
    Ok(SolveReport {
        result: SolveResult {
            value: best.0,
            bond: bond_from_edges(g, best.1),
        },
        stats,
    })
}

/// The canonical side of a bond given by its edges: within the component
/// holding the bond, the nodes not reachable from the component's
/// smallest node.
fn bond_from_edges(g: &Graph, mut edges: Vec<usize>) -> BondCut {
    edges.sort_unstable();
    let Some(&e0) = edges.first() else {
        return BondCut::empty();
    };
    let mut removed = vec![false; g.edge_count()];
    for &e in &edges {
        removed[e] = true;
    }
    let mut seen = vec![false; g.node_count()];
    let comp = g.reach(g.edge(e0).0, &mut seen, |_| true);
    let mut seen = vec![false; g.node_count()];
    g.reach(comp[0], &mut seen, |e| !removed[e]);
    BondCut {
        side: comp.into_iter().filter(|&v| !seen[v]).collect(),
        edges,
        is_bond: true,
    }
}

/// Maximum weight bond of the 2-connected graph `g` whose SPR tree is `t`.
pub fn reduce_and_solve(g: &Graph, t: &SprTree, w: &[i64]) -> Result<SolveResult> {
    check_weights(g, w)?;
    let (value, edges) = reduce(t, w, RPolicy::Enumerate, &mut SolveStats::default())?;
    Ok(SolveResult {
        value,
        bond: bond_from_edges(g, edges),
    })
}

fn solve_skeleton(
    kind: SkeletonKind,
    local: Option<&(Graph, Classification)>,
    weights: &[i64],
    c: &Constraint,
    policy: RPolicy,
) -> Result<SkeletonChoice> {
    match kind {
        SkeletonKind::S => solve_skeleton_s(weights, c),
        SkeletonKind::P => solve_skeleton_p(weights, c),
        SkeletonKind::R => {
            let (h, class) = local.expect("R skeletons carry a local graph");
            solve_skeleton_r(h, class, weights, c, policy)
        }
    }
}

/// Leaf pruning from the skeleton holding edge 0. Returns the optimum and
/// its real edges.
fn reduce(t: &SprTree, w: &[i64], policy: RPolicy, stats: &mut SolveStats) -> Result<(i64, Vec<usize>)> {
    let k = t.skeletons.len();
    let adj = t.adjacency();
    let mut parent_link = vec![usize::MAX; k];
    let mut order = Vec::with_capacity(k);
    let mut seen = vec![false; k];
    seen[0] = true;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &(y, l) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent_link[y] = l;
                order.push(y);
            }
        }
    }
    let mut locals: Vec<Option<(Graph, Classification)>> = Vec::with_capacity(k);
    for (i, s) in t.skeletons.iter().enumerate() {
        match s.kind {
            SkeletonKind::S => stats.s += 1,
            SkeletonKind::P => stats.p += 1,
            SkeletonKind::R => stats.r += 1,
        }
        if s.kind != SkeletonKind::R {
            locals.push(None);
            continue;
        }
        let h = s.local_graph()?;
        let class = skeleton::classify_r(&h);
        match class.tag {
            FamilyTag::Wheel(_) | FamilyTag::K3 => stats.wheels += 1,
            FamilyTag::Prism => stats.prisms += 1,
            FamilyTag::K33 => stats.k33s += 1,
            FamilyTag::Other => {
                stats.other_r += 1;
                if policy == RPolicy::K5eOnly {
                    return Err(Error::NotK5eMinorFree {
                        block: 0,
                        skeleton: i,
                        found: format!("3-connected graph on {} nodes", h.node_count()),
                    });
                }
            }
        }
        locals.push(Some((h, class)));
    }

    let other_end = |l: usize, me: usize| {
        let (a, b) = t.links[l].skeletons;
        if a == me {
            b
        } else {
            a
        }
    };
    let mut plus_value = vec![0i64; k];
    let mut plus_choice: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut best_minus: Option<(i64, usize, Vec<usize>)> = None;
    let mut root: Option<SkeletonChoice> = None;
    for &s in order.iter().rev() {
        let sk = &t.skeletons[s];
        let mut pidx = usize::MAX;
        let weights: Vec<i64> = sk
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| match e.kind {
                EdgeKind::Real(id) => w[id],
                EdgeKind::Virtual(l) if l == parent_link[s] => {
                    pidx = i;
                    0
                }
                EdgeKind::Virtual(l) => plus_value[other_end(l, s)],
            })
            .collect();
        let local = locals[s].as_ref();
        if s == 0 {
            root = Some(solve_skeleton(sk.kind, local, &weights, &Constraint::none(), policy)?);
            continue;
        }
        let plus = solve_skeleton(
            sk.kind,
            local,
            &weights,
            &Constraint {
                forced_in: vec![pidx],
                ..Constraint::none()
            },
            policy,
        )?;
        let minus = solve_skeleton(
            sk.kind,
            local,
            &weights,
            &Constraint {
                forced_out: vec![pidx],
                ..Constraint::none()
            },
            policy,
        )?;
        if best_minus.as_ref().is_none_or(|(v, _, _)| minus.value > *v) {
            best_minus = Some((minus.value, s, minus.edges));
        }
        plus_value[s] = plus.value;
        plus_choice[s] = plus.edges;
    }
    let root = root.expect("root visited");
    let (value, start, choice) = match best_minus {
        Some((v, s, c)) if v > root.value => (v, s, c),
        _ => (root.value, 0, root.edges),
    };
    // expand virtual edges into the children's best bonds through them
    let mut edges = Vec::new();
    let mut stack = vec![(start, choice)];
    while let Some((s, choice)) = stack.pop() {
        for i in choice {
            match t.skeletons[s].edges[i].kind {
                EdgeKind::Real(id) => edges.push(id),
                EdgeKind::Virtual(l) if l == parent_link[s] => {}
                EdgeKind::Virtual(l) => {
                    let c = other_end(l, s);
                    stack.push((c, std::mem::take(&mut plus_choice[c])));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok((value, edges))
}
