//! Flat discrete Morse functions on graphs.
//!
//! A function assigns a value in `[0, n]` (`n` the simplex count) to every
//! vertex and edge such that:
//!
//! * faces never exceed cofaces: `f(v) <= f(e)` whenever `v` is an endpoint of `e`;
//! * the minimum is `0`;
//! * a value is shared by at most two simplices, and two simplices sharing a
//!   value are an incident vertex/edge pair (a *regular pair*);
//! * a value held by a single simplex (a *critical value*) is an integer,
//!   and lies in `0..n`.
//!
//! Regular pairs are detected from value equality alone. They form the
//! gradient vector field of the function.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Edge, Graph, Simplex, VertexId};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorseError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("no value given for {0}")]
    MissingValue(Simplex),
    #[error("{0} is not a simplex of the graph")]
    UnknownSimplex(Simplex),
    #[error("value {value} of {simplex} is outside the admissible range")]
    ValueOutOfRange { simplex: Simplex, value: Rational },
    #[error("not monotone: vertex {vertex} exceeds edge {edge}")]
    NonMonotone { vertex: VertexId, edge: Edge },
    #[error("minimum value is {0}, expected 0")]
    MinNotZero(Rational),
    #[error("value {0} is attained by more than two simplices")]
    TripleValue(Rational),
    #[error("{0} and {1} share a value but are not incident")]
    NonIncidentTie(Simplex, Simplex),
    #[error("critical simplex {simplex} has non-integer value {value}")]
    NonIntegerCritical { simplex: Simplex, value: Rational },
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("critical count {m} with b1 = {b1} is not of the form 1 + b1 + 2k")]
    ParityViolation { m: usize, b1: usize },
}

impl MorseError {
    /// The variant name, e.g. `"NonMonotone"`.
    pub fn kind(&self) -> &'static str {
        match self {
            MorseError::EmptyGraph => "EmptyGraph",
            MorseError::MissingValue(_) => "MissingValue",
            MorseError::UnknownSimplex(_) => "UnknownSimplex",
            MorseError::ValueOutOfRange { .. } => "ValueOutOfRange",
            MorseError::NonMonotone { .. } => "NonMonotone",
            MorseError::MinNotZero(_) => "MinNotZero",
            MorseError::TripleValue(_) => "TripleValue",
            MorseError::NonIncidentTie(..) => "NonIncidentTie",
            MorseError::NonIntegerCritical { .. } => "NonIntegerCritical",
            MorseError::Disconnected => "Disconnected",
            MorseError::ParityViolation { .. } => "ParityViolation",
        }
    }
}

/// The matched `(vertex, edge)` pairs of a function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GradientVectorField {
    pub pairs: BTreeSet<(VertexId, Edge)>,
}

impl GradientVectorField {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, v: VertexId, e: Edge) -> bool {
        self.pairs.contains(&(v, e))
    }
}

/// Level subcomplexes at each critical value, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub critical_values: Vec<u64>,
    pub subcomplexes: Vec<Graph>,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.critical_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.critical_values.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorseInequalityReport {
    pub m0: usize,
    pub m1: usize,
    pub b0: usize,
    pub b1: usize,
    pub holds: bool,
}

/// A validated flat discrete Morse function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseFunction {
    graph: Graph,
    vertex_values: Vec<Rational>,
    edge_values: Vec<Rational>,
    /// Critical simplices ascending by value.
    criticals: Vec<(Simplex, u64)>,
    regular_pairs: Vec<(VertexId, Edge)>,
}

impl MorseFunction {
    /// Checks every defining condition and classifies each simplex.
    pub fn validate(graph: &Graph, values: &BTreeMap<Simplex, Rational>) -> Result<Self, MorseError> {
        if graph.vertex_count() == 0 {
            return Err(MorseError::EmptyGraph);
        }
        if let Some(s) = values.keys().find(|s| !graph.contains(s)) {
            return Err(MorseError::UnknownSimplex(*s));
        }
        let lookup = |s: Simplex| values.get(&s).cloned().ok_or(MorseError::MissingValue(s));
        let vertex_values: Vec<Rational> =
            graph.vertices().iter().map(|&v| lookup(Simplex::Vertex(v))).collect::<Result<_, _>>()?;
        let edge_values: Vec<Rational> =
            graph.edges().iter().map(|&e| lookup(Simplex::Edge(e))).collect::<Result<_, _>>()?;

        let n = graph.simplex_count() as u64;
        let top = Rational::from(n);
        for (s, value) in simplices_with_values(graph, &vertex_values, &edge_values) {
            if value.is_negative() || *value > top {
                return Err(MorseError::ValueOutOfRange { simplex: s, value: value.clone() });
            }
        }

        for (ei, e) in graph.edges().iter().enumerate() {
            for v in e.endpoints() {
                if vertex_values[graph.vertex_index(v).unwrap()] > edge_values[ei] {
                    return Err(MorseError::NonMonotone { vertex: v, edge: *e });
                }
            }
        }

        let mut by_value: BTreeMap<&Rational, Vec<Simplex>> = BTreeMap::new();
        for (s, value) in simplices_with_values(graph, &vertex_values, &edge_values) {
            by_value.entry(value).or_default().push(s);
        }
        let mut criticals = Vec::new();
        let mut regular_pairs = Vec::new();
        for (value, group) in &by_value {
            match group.as_slice() {
                [s] => {
                    let c = value.to_u64().ok_or(MorseError::NonIntegerCritical {
                        simplex: *s,
                        value: (*value).clone(),
                    })?;
                    if c >= n {
                        return Err(MorseError::ValueOutOfRange { simplex: *s, value: (*value).clone() });
                    }
                    criticals.push((*s, c));
                }
                [a, b] => match (a, b) {
                    (Simplex::Vertex(v), Simplex::Edge(e)) | (Simplex::Edge(e), Simplex::Vertex(v)) if e.contains(*v) => {
                        regular_pairs.push((*v, *e));
                    }
                    _ => return Err(MorseError::NonIncidentTie(*a, *b)),
                },
                _ => return Err(MorseError::TripleValue((*value).clone())),
            }
        }
        let min = by_value.keys().next().copied().expect("graph is non-empty");
        if *min != Rational::zero() {
            return Err(MorseError::MinNotZero(min.clone()));
        }
        // A zero minimum on a regular pair would need the pair's other
        // endpoint strictly below zero, so it is already excluded above.
        debug_assert!(matches!(criticals.first(), Some((Simplex::Vertex(_), 0))));

        Ok(MorseFunction { graph: graph.clone(), vertex_values, edge_values, criticals, regular_pairs })
    }

    /// Convenience constructor from per-vertex and per-edge values.
    pub fn from_values(
        graph: &Graph,
        vertex_values: impl IntoIterator<Item = (VertexId, Rational)>,
        edge_values: impl IntoIterator<Item = ((VertexId, VertexId), Rational)>,
    ) -> Result<Self, MorseError> {
        let mut map = BTreeMap::new();
        for (v, x) in vertex_values {
            map.insert(Simplex::Vertex(v), x);
        }
        for ((a, b), x) in edge_values {
            let e = Edge::try_new(a, b).ok_or(MorseError::UnknownSimplex(Simplex::Vertex(a)))?;
            map.insert(Simplex::Edge(e), x);
        }
        Self::validate(graph, &map)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn value(&self, s: &Simplex) -> Option<&Rational> {
        match s {
            Simplex::Vertex(v) => self.graph.vertex_index(*v).map(|i| &self.vertex_values[i]),
            Simplex::Edge(e) => self.graph.edge_index(e).map(|i| &self.edge_values[i]),
        }
    }

    pub fn vertex_value(&self, v: VertexId) -> Option<&Rational> {
        self.value(&Simplex::Vertex(v))
    }

    pub fn edge_value(&self, e: Edge) -> Option<&Rational> {
        self.value(&Simplex::Edge(e))
    }

    /// Every simplex with its value, vertices first.
    pub fn values(&self) -> impl Iterator<Item = (Simplex, &Rational)> + '_ {
        simplices_with_values(&self.graph, &self.vertex_values, &self.edge_values)
    }

    pub fn to_value_map(&self) -> BTreeMap<Simplex, Rational> {
        self.values().map(|(s, x)| (s, x.clone())).collect()
    }

    /// Simplices ascending by value; within a regular pair the vertex comes first.
    pub fn sorted_simplices(&self) -> Vec<(Simplex, &Rational)> {
        let mut all: Vec<_> = self.values().collect();
        all.sort_by(|(s, x), (t, y)| x.cmp(y).then(s.dimension().cmp(&t.dimension())));
        all
    }

    /// Critical simplices with their integer values, ascending.
    pub fn criticals(&self) -> &[(Simplex, u64)] {
        &self.criticals
    }

    pub fn critical_values(&self) -> Vec<u64> {
        self.criticals.iter().map(|&(_, c)| c).collect()
    }

    pub fn is_critical(&self, s: &Simplex) -> bool {
        self.criticals.iter().any(|(t, _)| t == s)
    }

    /// `(m0, m1)`: critical vertices and critical edges.
    pub fn critical_counts(&self) -> (usize, usize) {
        let m0 = self.criticals.iter().filter(|(s, _)| s.dimension() == 0).count();
        (m0, self.criticals.len() - m0)
    }

    pub fn regular_pairs(&self) -> &[(VertexId, Edge)] {
        &self.regular_pairs
    }

    pub fn max_value(&self) -> &Rational {
        self.values().map(|(_, x)| x).max().expect("validated functions are non-empty")
    }

    /// All simplices with value `<= a`.
    pub fn level_subcomplex(&self, a: &Rational) -> Graph {
        self.graph.filter_simplices(|s| self.value(s).expect("simplex of own graph") <= a)
    }

    pub fn filtration(&self) -> Filtration {
        let critical_values = self.critical_values();
        let subcomplexes = critical_values.iter().map(|&c| self.level_subcomplex(&Rational::from(c))).collect();
        Filtration { critical_values, subcomplexes }
    }

    pub fn gradient_vector_field(&self) -> GradientVectorField {
        GradientVectorField { pairs: self.regular_pairs.iter().copied().collect() }
    }

    /// Weak Morse inequalities `m0 >= b0`, `m1 >= b1` and `b0 - b1 = m0 - m1`.
    pub fn check_morse_inequalities(&self) -> MorseInequalityReport {
        let (m0, m1) = self.critical_counts();
        let (b0, b1) = self.graph.betti_numbers();
        let holds = m0 >= b0 && m1 >= b1 && (b0 as i64 - b1 as i64) == (m0 as i64 - m1 as i64);
        MorseInequalityReport { m0, m1, b0, b1, holds }
    }

    /// The `k` with `m = 1 + b1 + 2k` on a connected graph: the number of
    /// finite persistence pairs.
    pub fn critical_parity(&self) -> Result<usize, MorseError> {
        if !self.graph.is_connected() {
            return Err(MorseError::Disconnected);
        }
        let m = self.criticals.len();
        let (_, b1) = self.graph.betti_numbers();
        match m.checked_sub(1 + b1) {
            Some(rest) if rest % 2 == 0 => Ok(rest / 2),
            _ => Err(MorseError::ParityViolation { m, b1 }),
        }
    }
}

fn simplices_with_values<'a>(
    graph: &'a Graph,
    vertex_values: &'a [Rational],
    edge_values: &'a [Rational],
) -> impl Iterator<Item = (Simplex, &'a Rational)> + 'a {
    graph
        .vertices()
        .iter()
        .zip(vertex_values)
        .map(|(&v, x)| (Simplex::Vertex(v), x))
        .chain(graph.edges().iter().zip(edge_values).map(|(&e, x)| (Simplex::Edge(e), x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    /// Path 0-1-2 with vertices 0,1,2 and edges 1,3.
    fn homological_example() -> MorseFunction {
        MorseFunction::from_values(
            &Graph::path(3),
            [(0, int(0)), (1, int(1)), (2, int(2))],
            [((0, 1), int(1)), ((1, 2), int(3))],
        )
        .unwrap()
    }

    #[test]
    fn classifies_path_example() {
        let f = homological_example();
        assert_eq!(
            f.criticals(),
            &[(Simplex::Vertex(0), 0), (Simplex::Vertex(2), 2), (Simplex::edge(1, 2), 3)]
        );
        assert_eq!(f.regular_pairs(), &[(1, Edge::new(0, 1))]);
        assert_eq!(f.critical_counts(), (2, 1));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new([7], []).unwrap();
        let f = MorseFunction::from_values(&g, [(7, int(0))], []).unwrap();
        assert_eq!(f.criticals(), &[(Simplex::Vertex(7), 0)]);
        assert_eq!(f.filtration().len(), 1);
        assert_eq!(f.critical_parity().unwrap(), 0);
        let r = f.check_morse_inequalities();
        assert_eq!((r.m0, r.m1, r.b0, r.b1, r.holds), (1, 0, 1, 0, true));
    }

    #[test]
    fn rejects_non_monotone() {
        let err =
            MorseFunction::from_values(&Graph::path(2), [(0, int(0)), (1, int(1))], [((0, 1), Rational::new(1, 2))])
                .unwrap_err();
        assert_eq!(err, MorseError::NonMonotone { vertex: 1, edge: Edge::new(0, 1) });
    }

    #[test]
    fn rejects_each_broken_condition() {
        let p = Graph::path(3);
        let vals = |v: [i64; 3], e: [Rational; 2]| {
            MorseFunction::from_values(
                &p,
                [(0, int(v[0])), (1, int(v[1])), (2, int(v[2]))],
                [((0, 1), e[0].clone()), ((1, 2), e[1].clone())],
            )
        };
        assert!(matches!(vals([1, 2, 3], [int(2), int(4)]), Err(MorseError::MinNotZero(_))));
        assert!(matches!(vals([0, 1, 1], [int(1), int(3)]), Err(MorseError::TripleValue(_))));
        assert!(matches!(vals([0, 2, 2], [int(3), int(4)]), Err(MorseError::NonIncidentTie(..))));
        assert!(matches!(
            vals([0, 1, 2], [int(1), Rational::new(7, 2)]),
            Err(MorseError::NonIntegerCritical { .. })
        ));
        // n = 5: value 5 is allowed for a regular pair but not as a critical value.
        assert!(matches!(vals([0, 1, 2], [int(1), int(5)]), Err(MorseError::ValueOutOfRange { .. })));
        assert!(vals([0, 1, 5], [int(1), int(5)]).is_ok());
        assert!(matches!(vals([0, 1, 2], [int(1), int(6)]), Err(MorseError::ValueOutOfRange { .. })));
        assert!(matches!(vals([0, 1, -1], [int(1), int(3)]), Err(MorseError::ValueOutOfRange { .. })));
    }

    #[test]
    fn missing_and_unknown_simplices() {
        let p = Graph::path(2);
        let err = MorseFunction::from_values(&p, [(0, int(0)), (1, int(1))], []).unwrap_err();
        assert_eq!(err, MorseError::MissingValue(Simplex::edge(0, 1)));
        let err = MorseFunction::from_values(&p, [(0, int(0)), (1, int(1)), (5, int(2))], [((0, 1), int(1))])
            .unwrap_err();
        assert_eq!(err, MorseError::UnknownSimplex(Simplex::Vertex(5)));
    }

    #[test]
    fn filtration_of_path_example() {
        let f = homological_example();
        let filt = f.filtration();
        assert_eq!(filt.critical_values, vec![0, 2, 3]);
        let sizes: Vec<usize> = filt.subcomplexes.iter().map(Graph::simplex_count).collect();
        // G_2 holds v0, v1, e01 and v2.
        assert_eq!(sizes, vec![1, 4, 5]);
    }

    #[test]
    fn level_subcomplex_extremes() {
        let f = homological_example();
        assert_eq!(f.level_subcomplex(&int(-1)), Graph::empty());
        assert_eq!(f.level_subcomplex(f.max_value()), Graph::path(3));
    }

    #[test]
    fn gradient_fields() {
        let all_critical =
            MorseFunction::from_values(&Graph::path(2), [(0, int(0)), (1, int(1))], [((0, 1), int(2))]).unwrap();
        assert!(all_critical.gradient_vector_field().is_empty());
        let f = homological_example();
        assert!(f.gradient_vector_field().contains(1, Edge::new(0, 1)));
        assert_eq!(f.gradient_vector_field().len(), 1);
    }

    #[test]
    fn triangle_all_critical_parity() {
        let c3 = Graph::cycle(3);
        let f = MorseFunction::from_values(
            &c3,
            [(0, int(0)), (1, int(1)), (2, int(2))],
            [((0, 1), int(3)), ((1, 2), int(4)), ((0, 2), int(5))],
        )
        .unwrap();
        assert_eq!(f.criticals().len(), 6);
        assert_eq!(f.critical_parity().unwrap(), 2);
    }

    #[test]
    fn disconnected_graphs_validate_but_have_no_parity() {
        let g = Graph::new([0, 1], []).unwrap();
        let f = MorseFunction::from_values(&g, [(0, int(0)), (1, int(1))], []).unwrap();
        assert_eq!(f.critical_parity().unwrap_err(), MorseError::Disconnected);
        assert!(f.check_morse_inequalities().holds);
    }
}
