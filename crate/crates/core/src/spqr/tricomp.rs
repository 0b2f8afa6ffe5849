//! Linear-time split components of a simple 2-connected graph, following
//! Hopcroft and Tarjan's path search with Gutwenger and Mutzel's
//! corrections. All recursion is unrolled onto explicit stacks.

use super::assemble::{CompKind, SplitComponents};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Unseen,
    Tree,
    Frond,
}

const NIL: usize = usize::MAX;
const EOS: i64 = -1;

/// Doubly linked lists of integers sharing one arena.
struct HighLists {
    val: Vec<usize>,
    prev: Vec<usize>,
    next: Vec<usize>,
    owner: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
}

impl HighLists {
    fn new(n: usize) -> Self {
        HighLists {
            val: Vec::new(),
            prev: Vec::new(),
            next: Vec::new(),
            owner: Vec::new(),
            head: vec![NIL; n],
            tail: vec![NIL; n],
        }
    }

    fn alloc(&mut self, list: usize, val: usize) -> usize {
        self.val.push(val);
        self.prev.push(NIL);
        self.next.push(NIL);
        self.owner.push(list);
        self.val.len() - 1
    }

    fn push_back(&mut self, list: usize, val: usize) -> usize {
        let h = self.alloc(list, val);
        self.prev[h] = self.tail[list];
        match self.tail[list] {
            NIL => self.head[list] = h,
            t => self.next[t] = h,
        }
        self.tail[list] = h;
        h
    }

    fn push_front(&mut self, list: usize, val: usize) -> usize {
        let h = self.alloc(list, val);
        self.next[h] = self.head[list];
        match self.head[list] {
            NIL => self.tail[list] = h,
            t => self.prev[t] = h,
        }
        self.head[list] = h;
        h
    }

    fn remove(&mut self, h: usize) {
        let list = self.owner[h];
        let (p, n) = (self.prev[h], self.next[h]);
        match p {
            NIL => self.head[list] = n,
            p => self.next[p] = n,
        }
        match n {
            NIL => self.tail[list] = p,
            n => self.prev[n] = p,
        }
    }

    fn front(&self, list: usize) -> usize {
        match self.head[list] {
            NIL => 0,
            h => self.val[h],
        }
    }
}

struct Tri {
    src: Vec<usize>,
    tgt: Vec<usize>,
    kind: Vec<Kind>,
    start: Vec<bool>,
    in_adj: Vec<(usize, usize)>,
    in_high: Vec<usize>,
    adj: Vec<Vec<usize>>,
    first_live: Vec<usize>,
    number: Vec<usize>,
    newnum: Vec<usize>,
    node_at: Vec<usize>,
    lowpt1: Vec<usize>,
    lowpt2: Vec<usize>,
    nd: Vec<usize>,
    father: Vec<usize>,
    degree: Vec<i64>,
    tree_arc: Vec<usize>,
    high: HighLists,
    estack: Vec<usize>,
    tstack: Vec<(usize, i64, usize)>,
    comps: Vec<(CompKind, Vec<usize>)>,
    root: usize,
}

impl Tri {
    fn new_edge(&mut self, s: usize, t: usize, kind: Kind) -> usize {
        self.src.push(s);
        self.tgt.push(t);
        self.kind.push(kind);
        self.start.push(false);
        self.in_adj.push((NIL, NIL));
        self.in_high.push(NIL);
        self.src.len() - 1
    }

    fn del_adj(&mut self, e: usize) {
        let (v, i) = self.in_adj[e];
        if v != NIL {
            self.adj[v][i] = NIL;
        }
    }

    fn del_high(&mut self, e: usize) {
        let h = self.in_high[e];
        if h != NIL {
            self.high.remove(h);
            self.in_high[e] = NIL;
        }
    }

    fn first_child(&mut self, w: usize) -> usize {
        let list = &self.adj[w];
        let mut i = self.first_live[w];
        while list[i] == NIL {
            i += 1;
        }
        self.first_live[w] = i;
        self.tgt[list[i]]
    }

    fn t_top(&self) -> (usize, i64, usize) {
        *self.tstack.last().expect("stack bottom marker")
    }

    fn t_not_eos(&self) -> bool {
        self.t_top().1 != EOS
    }

    fn finish_tric_or_poly(&mut self, mut edges: Vec<usize>, e: usize) {
        edges.push(e);
        let kind = if edges.len() >= 4 {
            CompKind::Triconnected
        } else {
            CompKind::Polygon
        };
        self.comps.push((kind, edges));
    }

    fn dfs1(&mut self, g: &Graph) {
        let n = g.node_count();
        let mut count = 0;
        let mut stack: Vec<(usize, usize)> = Vec::with_capacity(n);
        let visit = |t: &mut Tri, v: usize, u: usize, count: &mut usize| {
            *count += 1;
            t.number[v] = *count;
            t.father[v] = u;
            t.degree[v] = g.degree(v) as i64;
            t.lowpt1[v] = *count;
            t.lowpt2[v] = *count;
            t.nd[v] = 1;
        };
        visit(self, self.root, NIL, &mut count);
        stack.push((self.root, 0));
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if let Some(&(w, e)) = g.neighbors(v).get(*i) {
                *i += 1;
                if self.kind[e] != Kind::Unseen {
                    continue;
                }
                if self.number[w] == 0 {
                    self.kind[e] = Kind::Tree;
                    self.src[e] = v;
                    self.tgt[e] = w;
                    self.tree_arc[w] = e;
                    visit(self, w, v, &mut count);
                    stack.push((w, 0));
                } else {
                    self.kind[e] = Kind::Frond;
                    self.src[e] = v;
                    self.tgt[e] = w;
                    let nw = self.number[w];
                    if nw < self.lowpt1[v] {
                        self.lowpt2[v] = self.lowpt1[v];
                        self.lowpt1[v] = nw;
                    } else if nw > self.lowpt1[v] {
                        self.lowpt2[v] = self.lowpt2[v].min(nw);
                    }
                }
                continue;
            }
            stack.pop();
            let w = v;
            let Some(&(v, _)) = stack.last() else { break };
            let (l1w, l2w) = (self.lowpt1[w], self.lowpt2[w]);
            if l1w < self.lowpt1[v] {
                self.lowpt2[v] = self.lowpt1[v].min(l2w);
                self.lowpt1[v] = l1w;
            } else if l1w == self.lowpt1[v] {
                self.lowpt2[v] = self.lowpt2[v].min(l2w);
            } else {
                self.lowpt2[v] = self.lowpt2[v].min(l1w);
            }
            self.nd[v] += self.nd[w];
        }
    }

    fn build_acceptable_adj(&mut self, n: usize) {
        let max = 3 * n + 2;
        let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); max + 1];
        for e in 0..self.src.len() {
            let w = self.tgt[e];
            let phi = if self.kind[e] == Kind::Frond {
                3 * self.number[w] + 1
            } else if self.lowpt2[w] < self.number[self.src[e]] {
                3 * self.lowpt1[w]
            } else {
                3 * self.lowpt1[w] + 2
            };
            bucket[phi].push(e);
        }
        for list in bucket {
            for e in list {
                let s = self.src[e];
                self.in_adj[e] = (s, self.adj[s].len());
                self.adj[s].push(e);
            }
        }
    }

    fn path_finder(&mut self, n: usize) {
        let mut count = n;
        let mut new_path = true;
        let mut stack: Vec<(usize, usize)> = vec![(self.root, 0)];
        self.newnum[self.root] = count - self.nd[self.root] + 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if let Some(&e) = self.adj[v].get(*i) {
                *i += 1;
                let w = self.tgt[e];
                if new_path {
                    new_path = false;
                    self.start[e] = true;
                }
                if self.kind[e] == Kind::Tree {
                    self.newnum[w] = count - self.nd[w] + 1;
                    stack.push((w, 0));
                } else {
                    self.in_high[e] = self.high.push_back(w, self.newnum[v]);
                    new_path = true;
                }
                continue;
            }
            stack.pop();
            if !stack.is_empty() {
                count -= 1;
            }
        }
        let mut old_to_new = vec![0; n + 1];
        for v in 0..n {
            old_to_new[self.number[v]] = self.newnum[v];
        }
        for v in 0..n {
            self.node_at[self.newnum[v]] = v;
            self.lowpt1[v] = old_to_new[self.lowpt1[v]];
            self.lowpt2[v] = old_to_new[self.lowpt2[v]];
        }
    }

    fn path_search(&mut self) {
        struct Frame {
            v: usize,
            i: usize,
            outv: usize,
            pending: usize,
        }
        let live = |t: &Tri, v: usize| t.adj[v].iter().filter(|&&e| e != NIL).count();
        let mut frames = vec![Frame {
            v: self.root,
            i: 0,
            outv: live(self, self.root),
            pending: NIL,
        }];
        while let Some(f) = frames.last_mut() {
            let v = f.v;
            let vnum = self.newnum[v];
            if f.pending != NIL {
                let e = f.pending;
                let it = f.i;
                f.pending = NIL;
                f.i += 1;
                let outv = f.outv;
                f.outv -= 1;
                self.after_tree_arc(v, e, it, outv);
                continue;
            }
            let Some(it) = (f.i..self.adj[v].len()).find(|&j| self.adj[v][j] != NIL) else {
                frames.pop();
                continue;
            };
            f.i = it;
            let e = self.adj[v][it];
            let w = self.tgt[e];
            let wnum = self.newnum[w];
            if self.kind[e] == Kind::Tree {
                if self.start[e] {
                    let l1 = self.lowpt1[w] as i64;
                    if self.t_top().1 > l1 {
                        let mut y = 0;
                        let mut b = 0;
                        while self.t_top().1 > l1 {
                            let (h, _, bb) = self.tstack.pop().expect("non-empty");
                            y = y.max(h);
                            b = bb;
                        }
                        self.tstack.push((y, l1, b));
                    } else {
                        self.tstack.push((wnum + self.nd[w] - 1, l1, vnum));
                    }
                    self.tstack.push((0, EOS, 0));
                }
                f.pending = e;
                let outw = live(self, w);
                frames.push(Frame {
                    v: w,
                    i: 0,
                    outv: outw,
                    pending: NIL,
                });
            } else {
                if self.start[e] {
                    let wn = wnum as i64;
                    if self.t_top().1 > wn {
                        let mut y = 0;
                        let mut b = 0;
                        while self.t_top().1 > wn {
                            let (h, _, bb) = self.tstack.pop().expect("non-empty");
                            y = y.max(h);
                            b = bb;
                        }
                        self.tstack.push((y, wn, b));
                    } else {
                        self.tstack.push((vnum, wn, vnum));
                    }
                }
                self.estack.push(e);
                f.i += 1;
            }
        }
    }

    /// Everything the path search does after returning along tree arc `e`,
    /// which sits at slot `it` of `v`'s adjacency list.
    fn after_tree_arc(&mut self, v: usize, e: usize, it: usize, outv: usize) {
        let vnum = self.newnum[v];
        let mut w = self.tgt[e];
        let mut wnum = self.newnum[w];
        self.estack.push(self.tree_arc[w]);

        // type-2 separation pairs
        loop {
            if vnum == 1 {
                break;
            }
            let (_, ta, tb) = self.t_top();
            let deg2 = self.degree[w] == 2 && {
                let c = self.first_child(w);
                self.newnum[c] > wnum
            };
            if !(ta == vnum as i64 || deg2) {
                break;
            }
            let (a, b) = (ta, tb);
            if a == vnum as i64 && self.father[self.node_at[b]] == v {
                self.tstack.pop();
                continue;
            }
            let mut e_ab = NIL;
            let mut e_virt;
            let x;
            if deg2 {
                let e1 = self.estack.pop().expect("tree arc");
                let e2 = self.estack.pop().expect("edge out of w");
                self.del_adj(e2);
                x = self.tgt[e2];
                e_virt = self.new_edge(v, x, Kind::Unseen);
                self.degree[x] -= 1;
                self.degree[v] -= 1;
                self.comps.push((CompKind::Polygon, vec![e1, e2, e_virt]));
                if let Some(&top) = self.estack.last() {
                    if self.src[top] == x && self.tgt[top] == v {
                        e_ab = self.estack.pop().expect("checked");
                        self.del_adj(e_ab);
                        self.del_high(e_ab);
                    }
                }
            } else {
                let (h, _, _) = self.tstack.pop().expect("non-empty");
                let a = a as usize;
                let mut comp = Vec::new();
                while let Some(&xy) = self.estack.last() {
                    let (xn, yn) = (self.newnum[self.src[xy]], self.newnum[self.tgt[xy]]);
                    if !(a <= xn && xn <= h && a <= yn && yn <= h) {
                        break;
                    }
                    self.estack.pop();
                    if (xn == a && yn == b) || (yn == a && xn == b) {
                        e_ab = xy;
                        self.del_adj(e_ab);
                        self.del_high(e_ab);
                    } else {
                        if self.in_adj[xy] != (v, it) {
                            self.del_adj(xy);
                            self.del_high(xy);
                        }
                        comp.push(xy);
                        self.degree[self.src[xy]] -= 1;
                        self.degree[self.tgt[xy]] -= 1;
                    }
                }
                e_virt = self.new_edge(self.node_at[a], self.node_at[b], Kind::Unseen);
                self.finish_tric_or_poly(comp, e_virt);
                x = self.node_at[b];
            }
            if e_ab != NIL {
                let prev = e_virt;
                e_virt = self.new_edge(v, x, Kind::Unseen);
                self.comps.push((CompKind::Bond, vec![e_ab, prev, e_virt]));
                self.degree[x] -= 1;
                self.degree[v] -= 1;
            }
            self.estack.push(e_virt);
            self.adj[v][it] = e_virt;
            self.in_adj[e_virt] = (v, it);
            self.degree[x] += 1;
            self.degree[v] += 1;
            self.father[x] = v;
            self.tree_arc[x] = e_virt;
            self.kind[e_virt] = Kind::Tree;
            w = x;
            wnum = self.newnum[w];
        }

        // type-1 separation pair
        let l1 = self.lowpt1[w];
        if self.lowpt2[w] >= vnum && l1 < vnum && (self.father[v] != self.root || outv >= 2) {
            let mut comp = Vec::new();
            let (mut xx, mut y) = (0, 0);
            while let Some(&xy) = self.estack.last() {
                xx = self.newnum[self.src[xy]];
                y = self.newnum[self.tgt[xy]];
                let inside = |z: usize| wnum <= z && z < wnum + self.nd[w];
                if !(inside(xx) || inside(y)) {
                    break;
                }
                self.estack.pop();
                comp.push(xy);
                self.del_high(xy);
                self.degree[self.src[xy]] -= 1;
                self.degree[self.tgt[xy]] -= 1;
            }
            let low = self.node_at[l1];
            let mut e_virt = self.new_edge(v, low, Kind::Frond);
            self.finish_tric_or_poly(comp, e_virt);

            if (xx == vnum && y == l1) || (y == vnum && xx == l1) {
                let eh = self.estack.pop().expect("parallel edge");
                if self.in_adj[eh] != (v, it) {
                    self.del_adj(eh);
                }
                let prev = e_virt;
                e_virt = self.new_edge(v, low, Kind::Frond);
                self.comps.push((CompKind::Bond, vec![eh, prev, e_virt]));
                self.in_high[e_virt] = self.in_high[eh];
                self.in_high[eh] = NIL;
                self.degree[v] -= 1;
                self.degree[low] -= 1;
            }

            if low != self.father[v] {
                self.estack.push(e_virt);
                self.adj[v][it] = e_virt;
                self.in_adj[e_virt] = (v, it);
                if self.in_high[e_virt] == NIL && self.high.front(low) < vnum {
                    self.in_high[e_virt] = self.high.push_front(low, vnum);
                }
                self.degree[v] += 1;
                self.degree[low] += 1;
            } else {
                self.adj[v][it] = NIL;
                let eh = self.tree_arc[v];
                let bond_virt = self.new_edge(low, v, Kind::Tree);
                self.comps.push((CompKind::Bond, vec![e_virt, eh, bond_virt]));
                self.in_high[bond_virt] = self.in_high[eh];
                self.tree_arc[v] = bond_virt;
                let (pv, pi) = self.in_adj[eh];
                self.adj[pv][pi] = bond_virt;
                self.in_adj[bond_virt] = (pv, pi);
                self.in_adj[eh] = (NIL, NIL);
            }
        }

        if self.start[e] {
            while self.t_not_eos() {
                self.tstack.pop();
            }
            self.tstack.pop();
        }
        while self.t_not_eos() {
            let (h, _, b) = self.t_top();
            if b != vnum && self.high.front(v) > h {
                self.tstack.pop();
            } else {
                break;
            }
        }
    }
}

/// Split components of a simple 2-connected graph on at least 3 nodes.
pub(crate) fn split_components(g: &Graph) -> SplitComponents {
    let n = g.node_count();
    let m = g.edge_count();
    let mut t = Tri {
        src: vec![0; m],
        tgt: vec![0; m],
        kind: vec![Kind::Unseen; m],
        start: vec![false; m],
        in_adj: vec![(NIL, NIL); m],
        in_high: vec![NIL; m],
        adj: vec![Vec::new(); n],
        first_live: vec![0; n],
        number: vec![0; n],
        newnum: vec![0; n],
        node_at: vec![0; n + 1],
        lowpt1: vec![0; n],
        lowpt2: vec![0; n],
        nd: vec![0; n],
        father: vec![NIL; n],
        degree: vec![0; n],
        tree_arc: vec![NIL; n],
        high: HighLists::new(n),
        estack: Vec::with_capacity(m),
        tstack: vec![(0, EOS, 0)],
        comps: Vec::new(),
        root: 0,
    };
    t.dfs1(g);
    t.build_acceptable_adj(n);
    t.path_finder(n);
    t.path_search();
    let rest: Vec<usize> = std::mem::take(&mut t.estack);
    if !rest.is_empty() {
        let kind = if rest.len() > 4 {
            CompKind::Triconnected
        } else {
            CompKind::Polygon
        };
        t.comps.push((kind, rest));
    }
    let ends = t.src.iter().copied().zip(t.tgt.iter().copied()).collect();
    SplitComponents {
        real_edges: m,
        ends,
        comps: t.comps,
    }
}
