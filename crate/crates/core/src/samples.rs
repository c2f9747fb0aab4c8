//! Small fixed inputs used by the examples, the tests and the CLI fixtures.

use crate::graph::Graph;
use crate::morse::MorseFunction;
use crate::persistence::PersistenceDiagram;
use crate::rational::Rational;

/// An 11-vertex tree with 21 simplices. Vertex ids are the values the
/// reference function assigns to them, with `45` and `145` standing for
/// `9/2` and `29/2`.
pub fn reference_tree() -> Graph {
    Graph::new(
        [0, 1, 2, 3, 4, 45, 5, 9, 14, 145, 15],
        [(0, 1), (1, 2), (2, 3), (3, 4), (3, 45), (3, 14), (45, 9), (5, 45), (14, 145), (14, 15)],
    )
    .unwrap()
}

fn vertex_label(v: u64) -> Rational {
    match v {
        45 => Rational::new(9, 2),
        145 => Rational::new(29, 2),
        _ => Rational::from(v),
    }
}

/// Edge values of [`reference_function`].
pub const REFERENCE_EDGE_VALUES: [((u64, u64), &str); 10] = [
    ((0, 1), "1"),
    ((1, 2), "2"),
    ((2, 3), "6"),
    ((3, 4), "4"),
    ((3, 45), "9/2"),
    ((3, 14), "16"),
    ((45, 9), "11"),
    ((5, 45), "10"),
    ((14, 145), "29/2"),
    ((14, 15), "20"),
];

/// Six critical vertices at 0, 3, 5, 9, 14, 15 and five critical edges at
/// 6, 10, 11, 16, 20.
pub fn reference_function() -> MorseFunction {
    let tree = reference_tree();
    let vertices: Vec<_> = tree.vertices().iter().map(|&v| (v, vertex_label(v))).collect();
    MorseFunction::from_values(
        &tree,
        vertices,
        REFERENCE_EDGE_VALUES.iter().map(|&(e, x)| (e, x.parse().unwrap())),
    )
    .unwrap()
}

pub fn reference_diagram() -> PersistenceDiagram {
    PersistenceDiagram::connected(vec![(3, 6), (5, 10), (9, 11), (14, 16), (15, 20)], vec![])
}

/// A barcode for an 11-simplex tree: `(0,inf), (2,5), (4,7), (3,8)`.
pub fn small_barcode() -> PersistenceDiagram {
    PersistenceDiagram::connected(vec![(2, 5), (4, 7), (3, 8)], vec![])
}

/// Bars that no function induces: a birth at 6.5 and two events at time 4.
/// Given as `(birth, death)` with `None` for an essential bar.
pub fn inadmissible_bars() -> Vec<(Rational, Option<Rational>)> {
    vec![
        (Rational::zero(), None),
        (Rational::new(13, 2), Some(Rational::from(8u64))),
        (Rational::from(4u64), Some(Rational::from(7u64))),
        (Rational::from(3u64), Some(Rational::from(4u64))),
    ]
}

pub fn hexagon() -> Graph {
    Graph::cycle(6)
}

/// Fits the counting bound for the hexagon but is not induced by any
/// function on it: once the cycle is born at 1 every vertex is present, so
/// no later birth is possible.
pub fn hexagon_unreachable_diagram() -> PersistenceDiagram {
    PersistenceDiagram::connected(vec![(2, 4), (3, 6)], vec![1])
}
