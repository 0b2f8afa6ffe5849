use crate::graph::Graph;

/// A maximal 2-connected subgraph, or a bridge.
#[derive(Debug, Clone)]
pub struct Block {
    /// The block relabelled to local ids.
    pub graph: Graph,
    /// Local node to original node, increasing.
    pub nodes: Vec<usize>,
    /// Local edge to original edge, increasing.
    pub edges: Vec<usize>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

/// Splits `g` into blocks, ordered by smallest original edge id. Isolated
/// nodes belong to no block.
pub fn blocks(g: &Graph) -> Vec<Block> {
    let n = g.node_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut time = 0;
    // (node, edge to parent, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
            if let Some(&(w, e)) = g.neighbors(v).get(*idx) {
                *idx += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut group = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        group.push(e);
                        if e == pe {
                            break;
                        }
                    }
                    groups.push(group);
                }
            }
        }
    }
    let mut out: Vec<Block> = groups
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut nodes: Vec<usize> = edges
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.edge(e);
                    [u, v]
                })
                .collect();
            nodes.sort_unstable();
            nodes.dedup();
            let pairs: Vec<(usize, usize)> = edges
                .iter()
                .map(|&e| {
                    let (u, v) = g.edge(e);
                    (
                        nodes.binary_search(&u).expect("endpoint"),
                        nodes.binary_search(&v).expect("endpoint"),
                    )
                })
                .collect();
            Block {
                graph: Graph::new(nodes.len(), &pairs).expect("subgraph of a simple graph"),
                nodes,
                edges,
            }
        })
        .collect();
    out.sort_by_key(|b| b.edges[0]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_and_pendant() {
        // two triangles sharing node 2, plus pendant 4-5
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        let b = blocks(&g);
        assert_eq!(b.len(), 3);
        assert_eq!(b[0].edges, vec![0, 1, 2]);
        assert_eq!(b[1].edges, vec![3, 4, 5]);
        assert!(b[2].is_bridge());
        assert_eq!(b[2].nodes, vec![4, 5]);
    }

    #[test]
    fn two_connected_is_one_block() {
        let g = crate::graph::wheel(6).unwrap();
        let b = blocks(&g);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].graph, g);
    }
}
