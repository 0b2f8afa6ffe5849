use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Named graph families with a fixed node and edge numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamilyTag {
    /// Nodes `0..n`, edge `i` joins `i` and `i + 1 mod n`.
    Cycle(usize),
    /// Rim `0..n` numbered like `Cycle(n)`, centre `n`, spoke `n + i` joins
    /// `i` to the centre. `Wheel(3)` is `K4`.
    Wheel(usize),
    /// Möbius ladder: the `n`-cycle followed by the chords `i, i + n/2`.
    Wagner(usize),
    Prism,
    K3,
    K33,
    K5MinusE,
    Complete(usize),
}

impl fmt::Display for GraphFamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamilyTag::Cycle(n) => write!(f, "cycle:{n}"),
            GraphFamilyTag::Wheel(n) => write!(f, "wheel:{n}"),
            GraphFamilyTag::Wagner(n) => write!(f, "wagner:{n}"),
            GraphFamilyTag::Prism => write!(f, "prism"),
            GraphFamilyTag::K3 => write!(f, "k3"),
            GraphFamilyTag::K33 => write!(f, "k33"),
            GraphFamilyTag::K5MinusE => write!(f, "k5-e"),
            GraphFamilyTag::Complete(n) => write!(f, "complete:{n}"),
        }
    }
}

impl FromStr for GraphFamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let (name, arg) = match lower.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (lower.as_str(), None),
        };
        let size = || -> Result<usize> {
            arg.ok_or_else(|| Error::InvalidParameter(format!("{name} needs a size, e.g. {name}:5")))?
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad size in {s:?}")))
        };
        Ok(match name {
            "cycle" | "c" => GraphFamilyTag::Cycle(size()?),
            "wheel" | "w" => GraphFamilyTag::Wheel(size()?),
            "wagner" | "v" => GraphFamilyTag::Wagner(size()?),
            "complete" | "k" => GraphFamilyTag::Complete(size()?),
            "prism" => GraphFamilyTag::Prism,
            "k3" => GraphFamilyTag::K3,
            "k33" => GraphFamilyTag::K33,
            "k5-e" | "k5e" | "k5minuse" => GraphFamilyTag::K5MinusE,
            _ => return Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        })
    }
}

pub fn generate(tag: GraphFamilyTag) -> Result<Graph> {
    match tag {
        GraphFamilyTag::Cycle(n) => cycle(n),
        GraphFamilyTag::Wheel(n) => wheel(n),
        GraphFamilyTag::Wagner(n) => wagner(n),
        GraphFamilyTag::Prism => Ok(prism()),
        GraphFamilyTag::K3 => Ok(triangle()),
        GraphFamilyTag::K33 => Ok(k33()),
        GraphFamilyTag::K5MinusE => Ok(k5_minus_e()),
        GraphFamilyTag::Complete(n) => complete(n),
    }
}

/// The distinguished cycle of a family as a node sequence, if it has one.
pub fn outer_cycle(tag: GraphFamilyTag) -> Option<Vec<usize>> {
    match tag {
        GraphFamilyTag::Cycle(n) | GraphFamilyTag::Wheel(n) | GraphFamilyTag::Wagner(n) => {
            Some((0..n).collect())
        }
        GraphFamilyTag::K3 => Some(vec![0, 1, 2]),
        GraphFamilyTag::K33 => Some(vec![0, 3, 1, 4, 2, 5]),
        _ => None,
    }
}

fn ring(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, &ring(n))
}

pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("wheel needs n >= 3, got {n}")));
    }
    let mut pairs = ring(n);
    pairs.extend((0..n).map(|i| (i, n)));
    Graph::new(n + 1, &pairs)
}

pub fn wagner(n: usize) -> Result<Graph> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "wagner needs an even n >= 6, got {n}"
        )));
    }
    let mut pairs = ring(n);
    pairs.extend((0..n / 2).map(|i| (i, i + n / 2)));
    Graph::new(n, &pairs)
}

pub fn prism() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("static graph")
}

pub fn triangle() -> Graph {
    Graph::new(3, &ring(3)).expect("static graph")
}

/// Parts `{0, 1, 2}` and `{3, 4, 5}`, edges in lexicographic order.
pub fn k33() -> Graph {
    let pairs: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    Graph::new(6, &pairs).expect("static graph")
}

/// `K5` minus the edge `0-4`. Nodes `1, 2, 3` form the triangle shared by
/// both apexes.
pub fn k5_minus_e() -> Graph {
    Graph::new(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (1, 2), (1, 3), (2, 3)],
    )
    .expect("static graph")
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("complete needs n >= 2, got {n}")));
    }
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::new(n, &pairs)
}

/// Glues `g2` onto `g1` by identifying edge `e1 = (a, b)` with
/// `e2 = (c, d)`, `a ~ c` and `b ~ d` (after flipping when `flip`).
///
/// The shared edge keeps `e1`'s id unless `strict` is false, in which case
/// it is dropped. Returns the sum, the image of each node of `g2` and the
/// image of each edge of `g2`.
pub fn two_sum(
    g1: &Graph,
    e1: usize,
    g2: &Graph,
    e2: usize,
    flip: bool,
    strict: bool,
) -> Result<(Graph, Vec<usize>, Vec<Option<usize>>)> {
    g1.check_edge(e1)?;
    g2.check_edge(e2)?;
    let (a, b) = g1.edge(e1);
    let (mut c, mut d) = g2.edge(e2);
    if flip {
        std::mem::swap(&mut c, &mut d);
    }
    let mut node_map = vec![usize::MAX; g2.node_count()];
    node_map[c] = a;
    node_map[d] = b;
    let mut next = g1.node_count();
    for slot in node_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut g1_ids = Vec::new();
    for (i, &p) in g1.edges().iter().enumerate() {
        if strict || i != e1 {
            g1_ids.push(i);
            pairs.push(p);
        }
    }
    let mut edge_map = vec![None; g2.edge_count()];
    for (i, &(u, v)) in g2.edges().iter().enumerate() {
        if i == e2 {
            if strict {
                edge_map[i] = g1_ids.iter().position(|&x| x == e1);
            }
            continue;
        }
        edge_map[i] = Some(pairs.len());
        pairs.push((node_map[u], node_map[v]));
    }
    Ok((Graph::new(next, &pairs)?, node_map, edge_map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let cases = [
            (GraphFamilyTag::Cycle(7), 7, 7),
            (GraphFamilyTag::Wheel(5), 6, 10),
            (GraphFamilyTag::Wagner(8), 8, 12),
            (GraphFamilyTag::Prism, 6, 9),
            (GraphFamilyTag::K3, 3, 3),
            (GraphFamilyTag::K33, 6, 9),
            (GraphFamilyTag::K5MinusE, 5, 9),
            (GraphFamilyTag::Complete(5), 5, 10),
        ];
        for (tag, n, m) in cases {
            let g = generate(tag).unwrap();
            assert_eq!((g.node_count(), g.edge_count()), (n, m), "{tag}");
            assert_eq!(tag.to_string().parse::<GraphFamilyTag>().unwrap(), tag);
        }
    }

    #[test]
    fn wheel3_is_k4() {
        assert_eq!(wheel(3).unwrap().edge_count(), 6);
        assert!(wheel(3).unwrap().is_k_connected(3));
    }

    #[test]
    fn bad_sizes() {
        assert!(cycle(2).is_err());
        assert!(wheel(2).is_err());
        assert!(wagner(7).is_err());
        assert!("wheel".parse::<GraphFamilyTag>().is_err());
    }

    #[test]
    fn two_sum_of_triangles() {
        let t = triangle();
        let (g, _, map) = two_sum(&t, 0, &t, 0, false, false).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (4, 4));
        assert!(g.is_k_connected(2));
        assert_eq!(map[0], None);
        let (g, _, map) = two_sum(&t, 0, &t, 0, false, true).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(map[0], Some(0));
    }
}
