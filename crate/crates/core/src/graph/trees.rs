//! Small-tree enumeration for exhaustive checks.

use std::collections::BTreeMap;

use super::{tree_canonical_form, Graph, VertexId};

/// Decodes a Prüfer sequence over `0..seq.len()+2` into a labeled tree.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).unwrap();
        edges.push((leaf as VertexId, s as VertexId));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0] as VertexId, rest[1] as VertexId));
    Graph::new(0..n as VertexId, edges).expect("Prüfer decoding yields a simple graph")
}

/// Every labeled tree on vertices `0..n` (Cayley: `n^(n-2)` of them).
pub fn labeled_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => Vec::new(),
        1 => vec![Graph::new([0], []).unwrap()],
        2 => vec![Graph::path(2)],
        _ => {
            let len = n - 2;
            let total = n.pow(len as u32);
            (0..total)
                .map(|mut code| {
                    let mut seq = vec![0; len];
                    for s in seq.iter_mut() {
                        *s = code % n;
                        code /= n;
                    }
                    tree_from_prufer(&seq)
                })
                .collect()
        }
    }
}

/// One labeled representative (vertices `0..n`) per isomorphism class of
/// trees on `n` vertices, ordered by canonical code.
pub fn unlabeled_trees(n: usize) -> Vec<Graph> {
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    for t in labeled_trees(n) {
        classes.entry(tree_canonical_form(&t)).or_insert(t);
    }
    classes.into_values().collect()
}

/// Representatives of every tree shape with `1..=max_vertices` vertices.
pub fn unlabeled_trees_up_to(max_vertices: usize) -> Vec<Graph> {
    (1..=max_vertices).flat_map(unlabeled_trees).collect()
}
