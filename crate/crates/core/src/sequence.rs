//! Functions described by the order in which simplices enter the filtration.
//!
//! Sorting a function's simplices by value (a regular pair counts as one
//! step) gives a sequence of [`BuildMove`]s. Conversely any legal sequence,
//! together with increasing integer times for its critical moves, determines a
//! function: regular pairs are spread evenly between neighbouring critical
//! times.

use std::collections::BTreeMap;

use crate::graph::{Edge, Graph, Simplex, VertexId};
use crate::morse::{MorseError, MorseFunction};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuildMove {
    /// A new vertex together with an edge to a vertex already present.
    Regular(VertexId, Edge),
    CriticalVertex(VertexId),
    /// An edge whose endpoints are both present.
    CriticalEdge(Edge),
}

impl BuildMove {
    pub fn is_critical(&self) -> bool {
        !matches!(self, BuildMove::Regular(..))
    }
}

/// Builds the function for `moves` on `graph`, giving the `i`-th critical
/// move the value `times[i]`.
///
/// Regular moves between critical times `a` and `b` (or `a` and the simplex
/// count, after the last one) get the values `a + j (b - a) / (r + 1)`.
pub fn function_from_moves(graph: &Graph, moves: &[BuildMove], times: &[u64]) -> Result<MorseFunction, MorseError> {
    let n = Rational::from(graph.simplex_count() as u64);
    let critical_count = moves.iter().filter(|m| m.is_critical()).count();
    assert_eq!(critical_count, times.len(), "one time per critical move");
    let mut values = BTreeMap::new();
    let mut next_time = 0;
    let mut i = 0;
    while i < moves.len() {
        let (low, run_start) = if moves[i].is_critical() {
            let t = Rational::from(times[next_time]);
            match moves[i] {
                BuildMove::CriticalVertex(v) => values.insert(Simplex::Vertex(v), t.clone()),
                BuildMove::CriticalEdge(e) => values.insert(Simplex::Edge(e), t.clone()),
                BuildMove::Regular(..) => unreachable!(),
            };
            next_time += 1;
            (t, i + 1)
        } else {
            (Rational::zero(), i)
        };
        let mut run_end = run_start;
        while run_end < moves.len() && !moves[run_end].is_critical() {
            run_end += 1;
        }
        let high = times.get(next_time).map_or_else(|| n.clone(), |&t| Rational::from(t));
        let steps = Rational::from((run_end - run_start + 1) as u64);
        for (j, m) in moves[run_start..run_end].iter().enumerate() {
            let BuildMove::Regular(v, e) = *m else { unreachable!() };
            let x = &low + &((&high - &low) * Rational::from((j + 1) as u64) / steps.clone());
            values.insert(Simplex::Vertex(v), x.clone());
            values.insert(Simplex::Edge(e), x);
        }
        i = run_end;
    }
    MorseFunction::validate(graph, &values)
}

/// The build sequence of `f`.
pub fn moves_of(f: &MorseFunction) -> Vec<BuildMove> {
    let mut moves = Vec::new();
    for (s, _) in f.sorted_simplices() {
        match s {
            Simplex::Vertex(v) if f.is_critical(&s) => moves.push(BuildMove::CriticalVertex(v)),
            Simplex::Edge(e) if f.is_critical(&s) => moves.push(BuildMove::CriticalEdge(e)),
            Simplex::Edge(e) => {
                let (v, _) = *f.regular_pairs().iter().find(|(_, pe)| *pe == e).expect("regular edge is paired");
                moves.push(BuildMove::Regular(v, e));
            }
            Simplex::Vertex(_) => {}
        }
    }
    moves
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn rebuilds_a_function_with_the_same_criticals() {
        let f = samples::reference_function();
        let moves = moves_of(&f);
        assert_eq!(moves.len(), 16);
        let g = function_from_moves(f.graph(), &moves, &f.critical_values()).unwrap();
        assert_eq!(g.criticals(), f.criticals());
        assert_eq!(g.gradient_vector_field(), f.gradient_vector_field());
        assert_eq!(moves_of(&g), moves);
    }

    #[test]
    fn trailing_regular_pairs_stay_below_the_simplex_count() {
        let path = Graph::path(2);
        let moves = [BuildMove::CriticalVertex(0), BuildMove::Regular(1, Edge::new(0, 1))];
        let f = function_from_moves(&path, &moves, &[0]).unwrap();
        assert_eq!(f.vertex_value(1).unwrap(), &Rational::new(3, 2));
    }
}
