//! Building a function on a tree whose persistence diagram is a given target.
//!
//! The construction cuts `k` edges (one per finite pair) and labels the
//! resulting subtrees one at a time in order of birth. Each subtree gets a
//! single critical vertex at its birth time and regular values squeezed
//! below the next event; the cut edge that attaches it to the labeled part
//! gets the matching death time.
//!
//! [`realize`] makes every free choice by smallest id. [`realize_randomized`]
//! makes them with a seeded generator; both produce the same diagram.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::{IteratorRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Edge, Graph, Simplex, VertexId};
use crate::morse::{MorseError, MorseFunction};
use crate::persistence::PersistenceDiagram;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("the graph is not a tree")]
    NotATree,
    #[error("vertex {0} is not in the tree")]
    UnknownVertex(VertexId),
    #[error("base value {base} is not below the bound {bound}")]
    BaseNotBelowBound { base: Rational, bound: Rational },
    #[error("diagram is not consistent with a tree of {simplices} simplices")]
    InconsistentDiagram { simplices: usize },
    #[error("{pairs} finite pairs but only {edges} edges")]
    TooManyPairs { pairs: usize, edges: usize },
    #[error("no removed edge leaves the labeled component")]
    NoBridge,
    #[error("constructed function failed validation: {0}")]
    Invalid(#[from] MorseError),
}

/// Values on one tree of the cut forest.
pub type Fragment = BTreeMap<Simplex, Rational>;

/// Labels the component of `v` in `forest`: `v` gets `base`, the `i`-th
/// vertex in breadth-first order gets `(bound + previous) / 2`, every edge
/// gets the larger endpoint value.
fn extend_component(forest: &Graph, v: VertexId, base: &Rational, bound: &Rational) -> Fragment {
    let order = forest.bfs_order(v).expect("caller checked membership");
    let mut values = Fragment::new();
    let mut alpha = base.clone();
    for (i, &u) in order.iter().enumerate() {
        if i > 0 {
            let next = alpha.midpoint(bound);
            assert!(next > alpha && &next < bound, "alpha sequence must increase below the bound");
            alpha = next;
        }
        values.insert(Simplex::Vertex(u), alpha.clone());
    }
    let members: BTreeSet<VertexId> = order.into_iter().collect();
    for e in forest.edges() {
        if members.contains(&e.lo()) {
            let a = &values[&Simplex::Vertex(e.lo())];
            let b = &values[&Simplex::Vertex(e.hi())];
            let top = if a > b { a.clone() } else { b.clone() };
            values.insert(Simplex::Edge(*e), top);
        }
    }
    values
}

/// Function on the tree `t` with `v` as its only critical simplex, valued
/// `base`, and every value strictly below `bound`.
pub fn extend_from_vertex(
    t: &Graph,
    v: VertexId,
    base: &Rational,
    bound: &Rational,
) -> Result<Fragment, RealizationError> {
    if !t.is_tree() {
        return Err(RealizationError::NotATree);
    }
    if !t.contains_vertex(v) {
        return Err(RealizationError::UnknownVertex(v));
    }
    if base >= bound {
        return Err(RealizationError::BaseNotBelowBound { base: base.clone(), bound: bound.clone() });
    }
    Ok(extend_component(t, v, base, bound))
}

/// The smallest removed edge with exactly one endpoint in `labeled`.
pub fn find_bridge(removed: &[Edge], labeled: &BTreeSet<VertexId>) -> Result<Edge, RealizationError> {
    bridge_candidates(removed, labeled).min().ok_or(RealizationError::NoBridge)
}

fn bridge_candidates<'a>(removed: &'a [Edge], labeled: &'a BTreeSet<VertexId>) -> impl Iterator<Item = Edge> + 'a {
    removed.iter().copied().filter(|e| labeled.contains(&e.lo()) != labeled.contains(&e.hi()))
}

/// One labeling step of the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub birth: u64,
    /// `None` for the essential class.
    pub death: Option<u64>,
    pub bridge: Option<Edge>,
    pub base_vertex: VertexId,
    /// Vertices of the subtree labeled in this step, ascending.
    pub tree: Vec<VertexId>,
    pub bound: Rational,
}

/// The choices made by one run of the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationPlan {
    pub removed_edges: Vec<Edge>,
    pub stages: Vec<Stage>,
}

trait Choices {
    fn removed(&mut self, edges: &[Edge], k: usize) -> Vec<Edge>;
    fn first_vertex(&mut self, vertices: &[VertexId]) -> VertexId;
    fn bridge(&mut self, removed: &[Edge], labeled: &BTreeSet<VertexId>) -> Result<Edge, RealizationError>;
    fn base_vertex(&mut self, tree: &[VertexId]) -> VertexId;
}

struct Canonical;

impl Choices for Canonical {
    fn removed(&mut self, edges: &[Edge], k: usize) -> Vec<Edge> {
        edges[..k].to_vec()
    }

    fn first_vertex(&mut self, vertices: &[VertexId]) -> VertexId {
        vertices[0]
    }

    fn bridge(&mut self, removed: &[Edge], labeled: &BTreeSet<VertexId>) -> Result<Edge, RealizationError> {
        find_bridge(removed, labeled)
    }

    fn base_vertex(&mut self, tree: &[VertexId]) -> VertexId {
        tree[0]
    }
}

struct Seeded(ChaCha8Rng);

impl Choices for Seeded {
    fn removed(&mut self, edges: &[Edge], k: usize) -> Vec<Edge> {
        let mut picked: Vec<Edge> = edges.choose_multiple(&mut self.0, k).copied().collect();
        picked.sort();
        picked
    }

    fn first_vertex(&mut self, vertices: &[VertexId]) -> VertexId {
        *vertices.choose(&mut self.0).unwrap()
    }

    fn bridge(&mut self, removed: &[Edge], labeled: &BTreeSet<VertexId>) -> Result<Edge, RealizationError> {
        bridge_candidates(removed, labeled).choose(&mut self.0).ok_or(RealizationError::NoBridge)
    }

    fn base_vertex(&mut self, tree: &[VertexId]) -> VertexId {
        *tree.choose(&mut self.0).unwrap()
    }
}

fn check_inputs(t: &Graph, d: &PersistenceDiagram) -> Result<(), RealizationError> {
    if !t.is_tree() {
        return Err(RealizationError::NotATree);
    }
    let k = d.finite_pairs().len();
    if k > t.edge_count() {
        return Err(RealizationError::TooManyPairs { pairs: k, edges: t.edge_count() });
    }
    if !d.is_consistent(t.simplex_count()) {
        return Err(RealizationError::InconsistentDiagram { simplices: t.simplex_count() });
    }
    Ok(())
}

fn run(t: &Graph, d: &PersistenceDiagram, choices: &mut impl Choices) -> Result<(MorseFunction, RealizationPlan), RealizationError> {
    check_inputs(t, d)?;
    let n = Rational::from(t.simplex_count() as u64);
    let events = d.event_times();
    let bound_after = |time: u64| -> Rational {
        let j = events.binary_search(&time).expect("time is an event");
        events.get(j + 1).map_or_else(|| n.clone(), |&a| Rational::from(a))
    };

    let removed = choices.removed(t.edges(), d.finite_pairs().len());
    let forest = t.without_edges(&removed);
    let mut values = Fragment::new();
    let mut labeled = BTreeSet::new();
    let mut stages = Vec::new();

    let v0 = choices.first_vertex(t.vertices());
    let bound = bound_after(0);
    let fragment = extend_component(&forest, v0, &Rational::zero(), &bound);
    let tree = absorb(fragment, &mut values, &mut labeled);
    stages.push(Stage { birth: 0, death: None, bridge: None, base_vertex: v0, tree, bound });

    let mut pairs = d.finite_pairs().to_vec();
    pairs.sort();
    for (c, dd) in pairs {
        let bridge = choices.bridge(&removed, &labeled)?;
        let outside = if labeled.contains(&bridge.lo()) { bridge.hi() } else { bridge.lo() };
        let members = forest.bfs_order(outside).expect("endpoint of a tree edge");
        let mut members_sorted = members.clone();
        members_sorted.sort();
        let base_vertex = choices.base_vertex(&members_sorted);
        let bound = bound_after(c);
        let fragment = extend_component(&forest, base_vertex, &Rational::from(c), &bound);
        let tree = absorb(fragment, &mut values, &mut labeled);
        values.insert(Simplex::Edge(bridge), Rational::from(dd));
        stages.push(Stage { birth: c, death: Some(dd), bridge: Some(bridge), base_vertex, tree, bound });
    }

    let f = MorseFunction::validate(t, &values)?;
    Ok((f, RealizationPlan { removed_edges: removed, stages }))
}

/// Merges a fragment into the running assignment; returns its vertices.
fn absorb(fragment: Fragment, values: &mut Fragment, labeled: &mut BTreeSet<VertexId>) -> Vec<VertexId> {
    let mut tree = Vec::new();
    for (s, x) in fragment {
        if let Simplex::Vertex(v) = s {
            labeled.insert(v);
            tree.push(v);
        }
        values.insert(s, x);
    }
    tree
}

/// A function on the tree `t` whose diagram is `d`, with every choice made
/// by smallest id.
pub fn realize(t: &Graph, d: &PersistenceDiagram) -> Result<MorseFunction, RealizationError> {
    realize_with_plan(t, d).map(|(f, _)| f)
}

/// [`realize`] together with the choices it made.
pub fn realize_with_plan(t: &Graph, d: &PersistenceDiagram) -> Result<(MorseFunction, RealizationPlan), RealizationError> {
    run(t, d, &mut Canonical)
}

/// Like [`realize_with_plan`], but the removed edges, the first vertex, the
/// bridges and the base vertices are drawn from a generator seeded with
/// `seed`.
pub fn realize_randomized(
    t: &Graph,
    d: &PersistenceDiagram,
    seed: u64,
) -> Result<(MorseFunction, RealizationPlan), RealizationError> {
    run(t, d, &mut Seeded(ChaCha8Rng::seed_from_u64(seed)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::{compute_diagram_fast, compute_diagram_oracle};
    use crate::samples;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn single_vertex_extension() {
        let t = Graph::new([7], []).unwrap();
        let frag = extend_from_vertex(&t, 7, &r("0"), &r("1")).unwrap();
        assert_eq!(frag.into_iter().collect::<Vec<_>>(), vec![(Simplex::Vertex(7), r("0"))]);
    }

    #[test]
    fn path_extension_halves_towards_the_bound() {
        let frag = extend_from_vertex(&Graph::path(3), 0, &r("3"), &r("5")).unwrap();
        assert_eq!(frag[&Simplex::Vertex(1)], r("4"));
        assert_eq!(frag[&Simplex::Vertex(2)], r("9/2"));
        assert_eq!(frag[&Simplex::edge(0, 1)], r("4"));
        assert_eq!(frag[&Simplex::edge(1, 2)], r("9/2"));
    }

    #[test]
    fn star_extension_stays_flat() {
        let star = Graph::star(2);
        let frag = extend_from_vertex(&star, 0, &r("0"), &r("1")).unwrap();
        assert_eq!(frag[&Simplex::Vertex(1)], r("1/2"));
        assert_eq!(frag[&Simplex::Vertex(2)], r("3/4"));
        // A one-simplex-per-unit scale keeps the function inside [0, n].
        let f = MorseFunction::validate(&star, &frag).unwrap();
        assert_eq!(f.criticals(), &[(Simplex::Vertex(0), 0)]);
    }

    #[test]
    fn extension_errors() {
        assert_eq!(extend_from_vertex(&Graph::cycle(3), 0, &r("0"), &r("1")).unwrap_err(), RealizationError::NotATree);
        assert_eq!(extend_from_vertex(&Graph::path(2), 5, &r("0"), &r("1")).unwrap_err(), RealizationError::UnknownVertex(5));
        assert!(matches!(
            extend_from_vertex(&Graph::path(2), 0, &r("1"), &r("1")).unwrap_err(),
            RealizationError::BaseNotBelowBound { .. }
        ));
    }

    #[test]
    fn bridges() {
        let labeled: BTreeSet<_> = [0, 1].into();
        assert_eq!(find_bridge(&[Edge::new(1, 2)], &labeled).unwrap(), Edge::new(1, 2));
        let center: BTreeSet<_> = [0].into();
        assert_eq!(find_bridge(&[Edge::new(0, 3), Edge::new(0, 2)], &center).unwrap(), Edge::new(0, 2));
        assert_eq!(find_bridge(&[], &center).unwrap_err(), RealizationError::NoBridge);
    }

    #[test]
    fn reference_tree_round_trip() {
        let (f, plan) = realize_with_plan(&samples::reference_tree(), &samples::reference_diagram()).unwrap();
        assert_eq!(compute_diagram_fast(&f).unwrap(), samples::reference_diagram());
        assert_eq!(compute_diagram_oracle(&f).unwrap(), samples::reference_diagram());
        assert_eq!(plan.stages.len(), 6);
        let cut = [Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3), Edge::new(3, 4), Edge::new(3, 14)];
        assert_eq!(plan.removed_edges, cut);
        assert_eq!(plan.stages[1].bridge, Some(Edge::new(0, 1)));
        assert_eq!(plan.stages[3].tree, vec![3, 5, 9, 45]);
        assert_eq!(f.vertex_value(145).unwrap(), &r("63/4"));
        assert_eq!(f.edge_value(Edge::new(3, 14)).unwrap(), &r("20"));
    }

    #[test]
    fn path_round_trip() {
        let d = PersistenceDiagram::connected(vec![(1, 2)], vec![]);
        let f = realize(&Graph::path(3), &d).unwrap();
        assert_eq!(compute_diagram_fast(&f).unwrap(), d);
    }

    #[test]
    fn randomized_choices_keep_the_diagram() {
        let t = samples::reference_tree();
        let d = samples::reference_diagram();
        for seed in 0..50 {
            let (f, _) = realize_randomized(&t, &d, seed).unwrap();
            assert_eq!(compute_diagram_fast(&f).unwrap(), d, "seed {seed}");
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let d = PersistenceDiagram::connected(vec![], vec![]);
        assert_eq!(realize(&Graph::cycle(4), &d).unwrap_err(), RealizationError::NotATree);
        let too_late = PersistenceDiagram::connected(vec![(1, 5)], vec![]);
        assert_eq!(realize(&Graph::path(3), &too_late).unwrap_err(), RealizationError::InconsistentDiagram { simplices: 5 });
        let many = PersistenceDiagram::connected(vec![(1, 2), (3, 4)], vec![]);
        assert_eq!(realize(&Graph::path(2), &many).unwrap_err(), RealizationError::TooManyPairs { pairs: 2, edges: 1 });
    }
}
