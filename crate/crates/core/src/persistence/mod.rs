//! Persistence diagrams of the filtrations induced by discrete Morse functions.
//!
//! [`compute_diagram_fast`] sweeps the simplices once with a union-find
//! structure. Critical vertices open components; a critical edge joining two
//! components closes the one whose oldest critical vertex is younger (the
//! elder rule), and a critical edge inside one component opens a cycle.
//! Regular pairs only grow components.
//!
//! [`compute_diagram_oracle`] rebuilds the diagram from persistent Betti
//! numbers of the level subcomplexes and serves as a check on the sweep.

mod diagram;
mod oracle;

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Simplex;
use crate::morse::MorseFunction;

pub use diagram::{diagram_equal, DiagramSet, PersistenceDiagram};
pub use oracle::{compute_diagram_oracle, persistent_betti_numbers, PersistentBetti, ORACLE_MAX_SIMPLICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PersistenceError {
    #[error("persistence is only computed on connected graphs")]
    Disconnected,
    #[error("graph has {simplices} simplices; the oracle is limited to {limit}")]
    TooLarge { simplices: usize, limit: usize },
}

/// Union-find over vertex positions. Each root carries the smallest critical
/// value among the vertices it has absorbed.
struct ComponentForest {
    parent: Vec<usize>,
    size: Vec<usize>,
    birth: Vec<Option<u64>>,
}

impl ComponentForest {
    fn new(n: usize) -> Self {
        ComponentForest { parent: (0..n).collect(), size: vec![1; n], birth: vec![None; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges two distinct roots by size; the survivor keeps the older birth.
    fn union_roots(&mut self, a: usize, b: usize) {
        let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.birth[big] = match (self.birth[big], self.birth[small]) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
    }
}

/// Persistence diagram by a single union-find sweep in value order.
pub fn compute_diagram_fast(f: &MorseFunction) -> Result<PersistenceDiagram, PersistenceError> {
    let g = f.graph();
    if !g.is_connected() {
        return Err(PersistenceError::Disconnected);
    }
    let mut forest = ComponentForest::new(g.vertex_count());
    let mut finite = Vec::new();
    let mut cycles = Vec::new();
    let critical: HashMap<Simplex, u64> = f.criticals().iter().copied().collect();
    let critical_value = |s: &Simplex| critical.get(s).copied();

    for (s, _) in f.sorted_simplices() {
        match s {
            Simplex::Vertex(v) => {
                let vi = g.vertex_index(v).unwrap();
                forest.birth[vi] = critical_value(&s);
            }
            Simplex::Edge(e) => {
                let ra = forest.find(g.vertex_index(e.lo()).unwrap());
                let rb = forest.find(g.vertex_index(e.hi()).unwrap());
                match critical_value(&s) {
                    None => {
                        debug_assert_ne!(ra, rb, "a regular edge always attaches a new vertex");
                        forest.union_roots(ra, rb);
                    }
                    Some(c) if ra == rb => cycles.push(c),
                    Some(c) => {
                        let (ba, bb) = (forest.birth[ra], forest.birth[rb]);
                        let younger = ba.max(bb).expect("every component holds a critical vertex");
                        finite.push((younger, c));
                        forest.union_roots(ra, rb);
                    }
                }
            }
        }
    }
    let mut essential = Vec::new();
    for vi in 0..g.vertex_count() {
        if forest.find(vi) == vi {
            essential.push(forest.birth[vi].expect("every component holds a critical vertex"));
        }
    }
    Ok(PersistenceDiagram::new(finite, essential, cycles))
}
