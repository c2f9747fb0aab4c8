//! Isomorphism testing for small graphs.
//!
//! Forests are compared through AHU canonical codes. Anything with a cycle
//! falls back to backtracking over degree-compatible vertex assignments.

use super::{Graph, GraphError};

/// Largest simplex count accepted by [`graph_isomorphic`].
pub const ISOMORPHISM_MAX_SIMPLICES: usize = 64;

/// True iff some vertex bijection preserves adjacency.
pub fn graph_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    for g in [g1, g2] {
        if g.simplex_count() > ISOMORPHISM_MAX_SIMPLICES {
            return Err(GraphError::TooLarge { simplices: g.simplex_count(), limit: ISOMORPHISM_MAX_SIMPLICES });
        }
    }
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    if degree_sequence(g1) != degree_sequence(g2) {
        return Ok(false);
    }
    let forest1 = g1.is_forest();
    if forest1 != g2.is_forest() {
        return Ok(false);
    }
    if forest1 {
        return Ok(forest_canonical_form(g1) == forest_canonical_form(g2));
    }
    Ok(Backtracker::new(g1, g2).run())
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|i| g.adjacency(i).len()).collect();
    d.sort_unstable();
    d
}

/// Canonical code of a forest: the sorted codes of its trees.
pub fn forest_canonical_form(g: &Graph) -> Vec<String> {
    let mut codes: Vec<String> = g
        .connected_components()
        .iter()
        .map(|block| tree_canonical_form(&g.induced_subgraph(&block.iter().copied().collect())))
        .collect();
    codes.sort();
    codes
}

/// AHU code of an unrooted tree, rooted at its center (the smaller code when
/// there are two centers). Two trees get equal codes iff they are isomorphic.
///
/// Panics if `t` is not a tree.
pub fn tree_canonical_form(t: &Graph) -> String {
    assert!(t.is_tree(), "canonical form requires a tree");
    let n = t.vertex_count();
    if n == 1 {
        return "()".to_string();
    }
    // Peel leaves layer by layer until one or two centers remain.
    let mut degree: Vec<usize> = (0..n).map(|i| t.adjacency(i).len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &(w, _) in t.adjacency(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted_code(t, c, usize::MAX)).min().unwrap()
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> =
        t.adjacency(v).iter().filter(|&&(w, _)| w != parent).map(|&(w, _)| rooted_code(t, w, v)).collect();
    children.sort();
    let mut code = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    code.push('(');
    for c in children {
        code.push_str(&c);
    }
    code.push(')');
    code
}

struct Backtracker {
    n: usize,
    adj1: Vec<bool>,
    adj2: Vec<bool>,
    deg1: Vec<usize>,
    deg2: Vec<usize>,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Backtracker {
    fn new(g1: &Graph, g2: &Graph) -> Self {
        let n = g1.vertex_count();
        let matrix = |g: &Graph| {
            let mut m = vec![false; n * n];
            for i in 0..n {
                for &(j, _) in g.adjacency(i) {
                    m[i * n + j] = true;
                }
            }
            m
        };
        let deg1: Vec<usize> = (0..n).map(|i| g1.adjacency(i).len()).collect();
        let deg2: Vec<usize> = (0..n).map(|i| g2.adjacency(i).len()).collect();

        // Place high-degree vertices first, then grow along edges so each new
        // vertex is constrained by as many placed neighbors as possible.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            let next = (0..n)
                .filter(|&i| !placed[i])
                .max_by_key(|&i| {
                    let placed_nbrs = g1.adjacency(i).iter().filter(|&&(w, _)| placed[w]).count();
                    (placed_nbrs, deg1[i], std::cmp::Reverse(i))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        Backtracker {
            n,
            adj1: matrix(g1),
            adj2: matrix(g2),
            deg1,
            deg2,
            order,
            image: vec![usize::MAX; n],
            used: vec![false; n],
        }
    }

    fn run(&mut self) -> bool {
        self.extend(0)
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.n {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.n {
            if self.used[w] || self.deg1[v] != self.deg2[w] || !self.consistent(depth, v, w) {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.image[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth].iter().all(|&u| self.adj1[v * self.n + u] == self.adj2[w * self.n + self.image[u]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflexive_on_basic_shapes() {
        for g in [Graph::path(4), Graph::star(3), Graph::cycle(5), Graph::empty()] {
            assert!(graph_isomorphic(&g, &g).unwrap());
        }
    }

    #[test]
    fn path_versus_star() {
        // Both have 4 vertices and 3 edges.
        assert!(!graph_isomorphic(&Graph::path(4), &Graph::star(3)).unwrap());
    }

    #[test]
    fn relabeling_is_invisible() {
        let g = Graph::new([0, 1, 2, 3, 4], [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let h = g.relabeled(|v| 100 - 7 * v);
        assert!(graph_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn same_degrees_different_shape() {
        // Two triangles versus a hexagon: 2-regular on six vertices.
        let triangles = Graph::new(0..6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!graph_isomorphic(&triangles, &Graph::cycle(6)).unwrap());
    }

    #[test]
    fn forests_compare_as_multisets_of_trees() {
        let a = Graph::new(0..5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let b = Graph::new(0..5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let c = Graph::new(0..5, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(graph_isomorphic(&a, &b).unwrap());
        assert!(!graph_isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn canonical_forms_separate_the_two_four_vertex_trees() {
        assert_ne!(tree_canonical_form(&Graph::path(4)), tree_canonical_form(&Graph::star(3)));
        let bent = Graph::new([5, 9, 2, 7], [(9, 5), (5, 2), (2, 7)]).unwrap();
        assert_eq!(tree_canonical_form(&Graph::path(4)), tree_canonical_form(&bent));
    }

    #[test]
    fn size_guard() {
        let big = Graph::path(40);
        assert!(matches!(graph_isomorphic(&big, &big), Err(GraphError::TooLarge { simplices: 79, limit: 64 })));
    }
}
