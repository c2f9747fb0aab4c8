//! Ranks of boundary matrices over GF(2).

use crate::graph::Graph;

/// A dense GF(2) vector packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)] }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Index of the highest set bit.
    pub fn pivot(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }
}

/// Rank of the matrix whose columns are `columns`.
pub fn rank(columns: impl IntoIterator<Item = BitVec>) -> usize {
    // pivot row -> reduced column owning it
    let mut reduced: Vec<(usize, BitVec)> = Vec::new();
    for mut col in columns {
        loop {
            let Some(p) = col.pivot() else { break };
            match reduced.iter().find(|(q, _)| *q == p) {
                Some((_, other)) => col.xor_assign(other),
                None => {
                    reduced.push((p, col));
                    break;
                }
            }
        }
    }
    reduced.len()
}

/// Columns of the edge-to-vertex boundary map, one per edge, indexed by vertex position.
pub fn boundary_columns(g: &Graph) -> Vec<BitVec> {
    g.edges()
        .iter()
        .map(|e| {
            let mut col = BitVec::zeros(g.vertex_count());
            col.set(g.vertex_index(e.lo()).unwrap());
            col.set(g.vertex_index(e.hi()).unwrap());
            col
        })
        .collect()
}

/// `(b0, b1)` from the rank of the boundary matrix.
pub fn betti_numbers(g: &Graph) -> (usize, usize) {
    let r = rank(boundary_columns(g));
    (g.vertex_count() - r, g.edge_count() - r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_has_one_loop() {
        assert_eq!(betti_numbers(&Graph::cycle(6)), (1, 1));
        assert_eq!(betti_numbers(&Graph::path(6)), (1, 0));
    }

    #[test]
    fn complete_graph_k4() {
        let k4 = Graph::new(0..4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(betti_numbers(&k4), (1, 3));
    }

    #[test]
    fn wide_vectors() {
        let g = Graph::cycle(130);
        assert_eq!(betti_numbers(&g), (1, 1));
        let mut v = BitVec::zeros(130);
        v.set(129);
        v.set(3);
        assert_eq!(v.pivot(), Some(129));
        assert!(v.get(3) && !v.get(4));
    }
}
