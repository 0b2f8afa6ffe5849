use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Hand-built graphs with named cycles used throughout the tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// Hexagon `0..6` with four inner nodes `6..10`; the hexagon sum
    /// `<= 2` is facet-defining here.
    HexFacet,
    /// `HexFacet` plus the inner edge `7-8` (edge id 17), which breaks the
    /// hexagon inequality.
    HexFacetPlusEdge,
    /// Two squares `0..4` and `4..8` joined by `0-4` and `2-6`.
    TwoSquares,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::HexFacet, Fixture::HexFacetPlusEdge, Fixture::TwoSquares];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::HexFacet => "hex-facet",
            Fixture::HexFacetPlusEdge => "hex-facet-plus-edge",
            Fixture::TwoSquares => "two-squares",
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown fixture {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct FixtureGraph {
    pub graph: Graph,
    /// Named cycles as node sequences.
    pub cycles: Vec<(String, Vec<usize>)>,
}

impl FixtureGraph {
    pub fn cycle(&self, name: &str) -> Option<&[usize]> {
        self.cycles
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.as_slice())
    }
}

const HEX_EDGES: [(usize, usize); 17] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (0, 5),
    (1, 7),
    (7, 6),
    (6, 3),
    (0, 9),
    (9, 8),
    (8, 4),
    (6, 9),
    (2, 6),
    (2, 7),
    (5, 8),
    (5, 9),
];

pub fn fixture(which: Fixture) -> FixtureGraph {
    let (graph, cycles) = match which {
        Fixture::HexFacet => (
            Graph::new(10, &HEX_EDGES),
            vec![("outer", vec![0, 1, 2, 3, 4, 5])],
        ),
        Fixture::HexFacetPlusEdge => {
            let mut pairs = HEX_EDGES.to_vec();
            pairs.push((7, 8));
            (
                Graph::new(10, &pairs),
                vec![("outer", vec![0, 1, 2, 3, 4, 5])],
            )
        }
        Fixture::TwoSquares => (
            Graph::new(
                8,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (0, 3),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (4, 7),
                    (0, 4),
                    (2, 6),
                ],
            ),
            vec![("outer", vec![0, 1, 2, 3]), ("mixed", vec![0, 1, 2, 6, 5, 4])],
        ),
    };
    FixtureGraph {
        graph: graph.expect("static graph"),
        cycles: cycles
            .into_iter()
            .map(|(n, c)| (n.to_string(), c))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_edges;

    #[test]
    fn fixtures_are_well_formed() {
        for f in Fixture::ALL {
            let fx = fixture(f);
            assert!(fx.graph.is_k_connected(2), "{f}");
            for (_, c) in &fx.cycles {
                cycle_edges(&fx.graph, c).unwrap();
            }
            assert_eq!(f.name().parse::<Fixture>().unwrap(), f);
        }
        assert_eq!(fixture(Fixture::HexFacet).graph.edge_count(), 17);
        assert_eq!(fixture(Fixture::HexFacetPlusEdge).graph.edge(17), (7, 8));
    }
}
