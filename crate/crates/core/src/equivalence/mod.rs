//! Four ways of calling two discrete Morse functions on one graph "the same".
//!
//! * persistence: equal persistence diagrams;
//! * Forman: equal gradient vector fields;
//! * homological: equal Betti numbers level by level;
//! * graph: isomorphic level subcomplexes level by level.
//!
//! None of the relations compares functions on different graphs, even
//! isomorphic ones.

pub mod corpus;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{graph_isomorphic, GraphError};
use crate::morse::MorseFunction;
use crate::persistence::{compute_diagram_fast, diagram_equal, PersistenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("the functions live on different graphs")]
    DifferentGraphs,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Persistence(#[from] PersistenceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Persistence,
    Forman,
    Homological,
    Graph,
}

impl Relation {
    pub const ALL: [Relation; 4] = [Relation::Persistence, Relation::Forman, Relation::Homological, Relation::Graph];

    pub fn holds(self, f: &MorseFunction, g: &MorseFunction) -> Result<bool, EquivalenceError> {
        match self {
            Relation::Persistence => persistence_equivalent(f, g),
            Relation::Forman => forman_equivalent(f, g),
            Relation::Homological => homologically_equivalent(f, g),
            Relation::Graph => graph_equivalent(f, g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Relation::Persistence => "persistence",
            Relation::Forman => "forman",
            Relation::Homological => "homological",
            Relation::Graph => "graph",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown relation {0:?} (expected persistence, forman, homological or graph)")]
pub struct ParseRelationError(String);

impl FromStr for Relation {
    type Err = ParseRelationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Relation::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| ParseRelationError(s.to_string()))
    }
}

/// All four verdicts for one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    pub persistence: bool,
    pub forman: bool,
    pub homological: bool,
    pub graph: bool,
}

impl Verdicts {
    pub fn compute(f: &MorseFunction, g: &MorseFunction) -> Result<Self, EquivalenceError> {
        Ok(Verdicts {
            persistence: persistence_equivalent(f, g)?,
            forman: forman_equivalent(f, g)?,
            homological: homologically_equivalent(f, g)?,
            graph: graph_equivalent(f, g)?,
        })
    }

    pub fn get(&self, r: Relation) -> bool {
        match r {
            Relation::Persistence => self.persistence,
            Relation::Forman => self.forman,
            Relation::Homological => self.homological,
            Relation::Graph => self.graph,
        }
    }
}

impl fmt::Display for Verdicts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "persistence={} forman={} homological={} graph={}",
            mark(self.persistence),
            mark(self.forman),
            mark(self.homological),
            mark(self.graph)
        )
    }
}

fn same_graph(f: &MorseFunction, g: &MorseFunction) -> Result<(), EquivalenceError> {
    if f.graph() == g.graph() {
        Ok(())
    } else {
        Err(EquivalenceError::DifferentGraphs)
    }
}

pub fn persistence_equivalent(f: &MorseFunction, g: &MorseFunction) -> Result<bool, EquivalenceError> {
    same_graph(f, g)?;
    Ok(diagram_equal(&compute_diagram_fast(f)?, &compute_diagram_fast(g)?))
}

pub fn forman_equivalent(f: &MorseFunction, g: &MorseFunction) -> Result<bool, EquivalenceError> {
    same_graph(f, g)?;
    Ok(f.gradient_vector_field() == g.gradient_vector_field())
}

/// Same number of critical values, and the `i`-th level subcomplexes have the
/// same `(b0, b1)` for every `i`.
pub fn homologically_equivalent(f: &MorseFunction, g: &MorseFunction) -> Result<bool, EquivalenceError> {
    same_graph(f, g)?;
    let (ff, gf) = (f.filtration(), g.filtration());
    if ff.len() != gf.len() {
        return Ok(false);
    }
    Ok(ff.subcomplexes.iter().zip(&gf.subcomplexes).all(|(a, b)| a.betti_numbers() == b.betti_numbers()))
}

/// Same number of critical values, and the `i`-th level subcomplexes are
/// isomorphic for every `i`.
pub fn graph_equivalent(f: &MorseFunction, g: &MorseFunction) -> Result<bool, EquivalenceError> {
    same_graph(f, g)?;
    let (ff, gf) = (f.filtration(), g.filtration());
    if ff.len() != gf.len() {
        return Ok(false);
    }
    for (a, b) in ff.subcomplexes.iter().zip(&gf.subcomplexes) {
        if !graph_isomorphic(a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::rational::Rational;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn relation_names_round_trip() {
        for r in Relation::ALL {
            assert_eq!(r.name().parse::<Relation>().unwrap(), r);
        }
        assert!("morse".parse::<Relation>().is_err());
    }

    #[test]
    fn reflexive_on_a_simple_function() {
        let f = MorseFunction::from_values(
            &Graph::path(3),
            [(0, int(0)), (1, int(1)), (2, int(2))],
            [((0, 1), int(1)), ((1, 2), int(3))],
        )
        .unwrap();
        for r in Relation::ALL {
            assert!(r.holds(&f, &f).unwrap(), "{r}");
        }
    }

    #[test]
    fn different_graphs_are_rejected() {
        let f = MorseFunction::from_values(&Graph::path(2), [(0, int(0)), (1, int(1))], [((0, 1), int(1))]).unwrap();
        let g2 = Graph::new([0, 5], [(0, 5)]).unwrap();
        let g = MorseFunction::from_values(&g2, [(0, int(0)), (5, int(1))], [((0, 5), int(1))]).unwrap();
        for r in Relation::ALL {
            assert_eq!(r.holds(&f, &g).unwrap_err(), EquivalenceError::DifferentGraphs);
        }
    }
}
