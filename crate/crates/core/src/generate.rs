//! Random connected graphs and random functions on them.

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::graph::{Edge, Graph, VertexId};
use crate::morse::MorseFunction;
use crate::sequence::{function_from_moves, BuildMove};

/// Smallest vertex count leaving room for `betti1` extra edges.
fn min_vertices(betti1: usize) -> usize {
    (1..).find(|&v: &usize| v * v.saturating_sub(1) / 2 + 1 >= v + betti1).unwrap()
}

/// A random connected graph with first Betti number `betti1` and at most
/// `max_simplices` simplices, or `None` if no such graph exists.
///
/// A random spanning tree on shuffled ids `0..V` gets `betti1` extra edges.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, max_simplices: usize, betti1: usize) -> Option<Graph> {
    let lo = min_vertices(betti1);
    if max_simplices < 2 * lo - 1 + betti1 {
        return None;
    }
    let hi = (max_simplices + 1 - betti1) / 2;
    let v = rng.gen_range(lo..=hi);
    let mut ids: Vec<VertexId> = (0..v as VertexId).collect();
    ids.shuffle(rng);
    let mut edges: Vec<Edge> = (1..v).map(|i| Edge::new(ids[i], ids[rng.gen_range(0..i)])).collect();
    let mut missing: Vec<Edge> = Vec::new();
    for a in 0..v as VertexId {
        for b in a + 1..v as VertexId {
            let e = Edge::new(a, b);
            if !edges.contains(&e) {
                missing.push(e);
            }
        }
    }
    edges.extend(missing.choose_multiple(rng, betti1).copied());
    Some(Graph::new(ids, edges.iter().map(|e| (e.lo(), e.hi()))).unwrap())
}

/// A uniformly chosen legal move at each step, until every simplex is present.
pub fn random_moves<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> Vec<BuildMove> {
    let mut present_v = std::collections::BTreeSet::new();
    let mut present_e = std::collections::BTreeSet::new();
    let mut moves = Vec::with_capacity(g.simplex_count());
    while present_v.len() < g.vertex_count() || present_e.len() < g.edge_count() {
        let mut options = Vec::new();
        for &v in g.vertices() {
            if !present_v.contains(&v) {
                options.push(BuildMove::CriticalVertex(v));
            }
        }
        for &e in g.edges() {
            if present_e.contains(&e) {
                continue;
            }
            match (present_v.contains(&e.lo()), present_v.contains(&e.hi())) {
                (true, true) => options.push(BuildMove::CriticalEdge(e)),
                (true, false) => options.push(BuildMove::Regular(e.hi(), e)),
                (false, true) => options.push(BuildMove::Regular(e.lo(), e)),
                (false, false) => {}
            }
        }
        let mv = *options.choose(rng).expect("an absent simplex always has a legal move");
        match mv {
            BuildMove::CriticalVertex(v) => {
                present_v.insert(v);
            }
            BuildMove::CriticalEdge(e) => {
                present_e.insert(e);
            }
            BuildMove::Regular(v, e) => {
                present_v.insert(v);
                present_e.insert(e);
            }
        }
        moves.push(mv);
    }
    moves
}

/// A random valid function on `g`: random build sequence, critical times a
/// random increasing sequence starting at 0 and staying below the simplex
/// count.
pub fn random_function<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> MorseFunction {
    let moves = random_moves(rng, g);
    let m = moves.iter().filter(|mv| mv.is_critical()).count();
    let n = g.simplex_count();
    let mut times: Vec<u64> = index::sample(rng, n - 1, m - 1).into_iter().map(|i| i as u64 + 1).collect();
    times.sort_unstable();
    times.insert(0, 0);
    function_from_moves(g, &moves, &times).expect("build sequences always give valid functions")
}

/// A random function on a random connected graph with at most
/// `max_simplices` simplices and first Betti number `betti1`.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, max_simplices: usize, betti1: usize) -> Option<MorseFunction> {
    let g = random_connected_graph(rng, max_simplices, betti1)?;
    Some(random_function(rng, &g))
}
