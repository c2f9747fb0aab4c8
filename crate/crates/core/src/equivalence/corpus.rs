//! Pairs of functions that separate the equivalence relations.
//!
//! Each pair comes with the verdicts it is meant to witness. Three pairs
//! needed repairs after transcription; the transcribed values are kept in
//! [`transcribed`] so the discrepancy stays visible and tested.
//!
//! Vertex ids follow the drawings. The seven-vertex tree used by pairs A and B
//! has vertices `0,1,2,4,6,7,9` and edges `0-1, 1-2, 1-4, 1-6, 6-7, 7-9`. The
//! star used by pairs D and E has center `0` and leaves top `1`, right `2`,
//! left `3`, bottom `4`.

use crate::graph::{Graph, VertexId};
use crate::morse::{MorseError, MorseFunction};
use crate::rational::Rational;

use super::Relation;

/// A named pair of functions and the verdicts it must produce.
#[derive(Debug, Clone)]
pub struct CounterexamplePair {
    pub name: &'static str,
    pub first: MorseFunction,
    pub second: MorseFunction,
    /// `(relation, expected verdict)`; relations not listed are unconstrained.
    pub expected: Vec<(Relation, bool)>,
}

type VertexTable<'a> = &'a [(VertexId, &'a str)];
type EdgeTable<'a> = &'a [((VertexId, VertexId), &'a str)];

/// Builds and validates a function from string-valued tables.
pub fn tabulated(graph: &Graph, vertices: VertexTable<'_>, edges: EdgeTable<'_>) -> Result<MorseFunction, MorseError> {
    let parse = |s: &str| s.parse::<Rational>().expect("tables hold valid rationals");
    MorseFunction::from_values(
        graph,
        vertices.iter().map(|&(v, x)| (v, parse(x))),
        edges.iter().map(|&(e, x)| (e, parse(x))),
    )
}

pub fn seven_vertex_tree() -> Graph {
    Graph::new([0, 1, 2, 4, 6, 7, 9], [(0, 1), (1, 2), (1, 4), (1, 6), (6, 7), (7, 9)]).unwrap()
}

pub fn five_vertex_star() -> Graph {
    Graph::star(4)
}

pub fn three_vertex_path() -> Graph {
    Graph::path(3)
}

/// Values exactly as transcribed, before repairs.
pub mod transcribed {
    use super::*;

    pub fn pair_a_first() -> Result<MorseFunction, MorseError> {
        tabulated(
            &seven_vertex_tree(),
            &[(0, "0"), (1, "1"), (2, "2"), (4, "4"), (6, "6"), (7, "7"), (9, "9")],
            &[((0, 1), "1"), ((1, 6), "6"), ((1, 2), "5"), ((1, 4), "8"), ((6, 7), "7"), ((7, 9), "9")],
        )
    }

    /// Valid, but its diagram is `{(2,8),(4,5)}` rather than the first
    /// function's `{(2,5),(4,8)}`.
    pub fn pair_a_second() -> Result<MorseFunction, MorseError> {
        tabulated(
            &seven_vertex_tree(),
            &[(0, "0"), (1, "2"), (2, "3"), (4, "9"), (6, "4"), (7, "6"), (9, "7")],
            &[((0, 1), "8"), ((1, 6), "5"), ((1, 2), "3"), ((1, 4), "9"), ((6, 7), "6"), ((7, 9), "7")],
        )
    }

    /// Not monotone: vertex 1 has value 3 above edge 1-4 at value 1.
    pub fn pair_b_first() -> Result<MorseFunction, MorseError> {
        tabulated(
            &seven_vertex_tree(),
            &[(0, "0"), (1, "3"), (2, "2"), (4, "1"), (6, "4"), (7, "5"), (9, "7")],
            &[((0, 1), "3"), ((1, 6), "4"), ((1, 2), "6"), ((1, 4), "1"), ((6, 7), "5"), ((7, 9), "7")],
        )
    }

    /// Vertices 2 and 4 both have value 5 and are not incident.
    pub fn pair_b_second() -> Result<MorseFunction, MorseError> {
        tabulated(
            &seven_vertex_tree(),
            &[(0, "0"), (1, "1"), (2, "5"), (4, "5"), (6, "2"), (7, "3"), (9, "4")],
            &[((0, 1), "1"), ((1, 6), "2"), ((1, 2), "7"), ((1, 4), "6"), ((6, 7), "3"), ((7, 9), "4")],
        )
    }

    pub fn pair_e_first() -> Result<MorseFunction, MorseError> {
        tabulated(
            &five_vertex_star(),
            &[(0, "0"), (1, "1"), (2, "2"), (3, "5"), (4, "4")],
            &[((0, 1), "1"), ((0, 2), "3"), ((0, 3), "5"), ((0, 4), "4")],
        )
    }

    /// The mirror image of [`pair_e_first`] under a leaf permutation, so every
    /// level subcomplex is isomorphic to the matching one of the first.
    pub fn pair_e_second() -> Result<MorseFunction, MorseError> {
        tabulated(
            &five_vertex_star(),
            &[(0, "0"), (1, "1"), (2, "4"), (3, "2"), (4, "5")],
            &[((0, 1), "1"), ((0, 2), "4"), ((0, 3), "3"), ((0, 4), "5")],
        )
    }
}

/// Persistence equivalent, not Forman equivalent.
///
/// Repair: the second function's values on edges 0-1 and 1-6 are swapped
/// (5 and 8) relative to the transcription.
pub fn pair_a() -> CounterexamplePair {
    let second = tabulated(
        &seven_vertex_tree(),
        &[(0, "0"), (1, "2"), (2, "3"), (4, "9"), (6, "4"), (7, "6"), (9, "7")],
        &[((0, 1), "5"), ((1, 6), "8"), ((1, 2), "3"), ((1, 4), "9"), ((6, 7), "6"), ((7, 9), "7")],
    )
    .unwrap();
    CounterexamplePair {
        name: "A",
        first: transcribed::pair_a_first().unwrap(),
        second,
        expected: vec![(Relation::Persistence, true), (Relation::Forman, false)],
    }
}

/// Forman equivalent, not persistence equivalent.
///
/// Repairs: in the first function the regular pairs at vertex 1 and vertex 4
/// trade values (1 and 3); in the second, vertex 4 takes the value 6 of its
/// edge.
pub fn pair_b() -> CounterexamplePair {
    let tree = seven_vertex_tree();
    let first = tabulated(
        &tree,
        &[(0, "0"), (1, "1"), (2, "2"), (4, "3"), (6, "4"), (7, "5"), (9, "7")],
        &[((0, 1), "1"), ((1, 6), "4"), ((1, 2), "6"), ((1, 4), "3"), ((6, 7), "5"), ((7, 9), "7")],
    )
    .unwrap();
    let second = tabulated(
        &tree,
        &[(0, "0"), (1, "1"), (2, "5"), (4, "6"), (6, "2"), (7, "3"), (9, "4")],
        &[((0, 1), "1"), ((1, 6), "2"), ((1, 2), "7"), ((1, 4), "6"), ((6, 7), "3"), ((7, 9), "4")],
    )
    .unwrap();
    CounterexamplePair {
        name: "B",
        first,
        second,
        expected: vec![(Relation::Forman, true), (Relation::Persistence, false)],
    }
}

/// Homologically equivalent, not persistence equivalent: diagrams
/// `{(2,3)}` and `{(1,2)}` on a three-vertex path.
pub fn pair_c() -> CounterexamplePair {
    let path = three_vertex_path();
    let first = tabulated(&path, &[(0, "0"), (1, "1"), (2, "2")], &[((0, 1), "1"), ((1, 2), "3")]).unwrap();
    let second = tabulated(&path, &[(0, "0"), (1, "1"), (2, "3")], &[((0, 1), "2"), ((1, 2), "3")]).unwrap();
    CounterexamplePair {
        name: "C",
        first,
        second,
        expected: vec![(Relation::Homological, true), (Relation::Persistence, false)],
    }
}

/// Graph equivalent, not persistence equivalent: the bottom edge of the star
/// closes the last bar at 5 in one function and at 7 in the other.
pub fn pair_d() -> CounterexamplePair {
    let star = five_vertex_star();
    let vertices = [(0, "0"), (1, "1"), (2, "2"), (3, "3"), (4, "4")];
    let first = tabulated(&star, &vertices, &[((0, 1), "1"), ((0, 2), "2"), ((0, 3), "3"), ((0, 4), "5")]).unwrap();
    let second = tabulated(&star, &vertices, &[((0, 1), "1"), ((0, 2), "2"), ((0, 3), "3"), ((0, 4), "7")]).unwrap();
    CounterexamplePair {
        name: "D",
        first,
        second,
        expected: vec![(Relation::Graph, true), (Relation::Persistence, false)],
    }
}

/// Persistence equivalent, not graph equivalent.
///
/// Repair: the second function's top regular pair moves from value 1 to 6,
/// so its level subcomplex at 2 is two isolated vertices instead of an edge
/// plus a vertex.
pub fn pair_e() -> CounterexamplePair {
    let second = tabulated(
        &five_vertex_star(),
        &[(0, "0"), (1, "6"), (2, "4"), (3, "2"), (4, "5")],
        &[((0, 1), "6"), ((0, 2), "4"), ((0, 3), "3"), ((0, 4), "5")],
    )
    .unwrap();
    CounterexamplePair {
        name: "E",
        first: transcribed::pair_e_first().unwrap(),
        second,
        expected: vec![(Relation::Persistence, true), (Relation::Graph, false)],
    }
}

pub fn all_pairs() -> Vec<CounterexamplePair> {
    vec![pair_a(), pair_b(), pair_c(), pair_d(), pair_e()]
}
