//! Definition-level persistence: persistent Betti numbers of the level
//! subcomplexes, then pair multiplicities by inclusion-exclusion.
//!
//! Nothing here shares code with the union-find sweep. Degree-0 ranks come
//! from breadth-first component labels, degree-1 ranks from GF(2) elimination.

use super::{PersistenceDiagram, PersistenceError};
use crate::gf2;
use crate::graph::Graph;
use crate::morse::MorseFunction;

/// Largest simplex count accepted by [`compute_diagram_oracle`].
pub const ORACLE_MAX_SIMPLICES: usize = 64;

/// `beta[p][i][j]` is the rank of `H_p(G_i) -> H_p(G_j)` for `i <= j`,
/// indexed by position in the filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistentBetti {
    pub critical_values: Vec<u64>,
    pub beta0: Vec<Vec<usize>>,
    pub beta1: Vec<Vec<usize>>,
}

/// Number of components of `big` that contain a vertex of `small`.
fn surviving_components(small: &Graph, big: &Graph) -> usize {
    let (labels, count) = big.component_labels();
    let mut hit = vec![false; count];
    for &v in small.vertices() {
        hit[labels[big.vertex_index(v).expect("filtration is nested")]] = true;
    }
    hit.into_iter().filter(|&h| h).count()
}

pub fn persistent_betti_numbers(f: &MorseFunction) -> PersistentBetti {
    let filtration = f.filtration();
    let levels = &filtration.subcomplexes;
    let m = levels.len();
    let mut beta0 = vec![vec![0; m]; m];
    let mut beta1 = vec![vec![0; m]; m];
    for i in 0..m {
        // With no 2-simplices nothing bounds, so H_1(G_i) injects into every
        // later H_1 and the image rank is just b1(G_i).
        let (_, b1) = gf2::betti_numbers(&levels[i]);
        for j in i..m {
            beta0[i][j] = surviving_components(&levels[i], &levels[j]);
            beta1[i][j] = b1;
        }
    }
    PersistentBetti { critical_values: filtration.critical_values, beta0, beta1 }
}

/// `(pairs born at i dying at j, essential births at i)` from one table.
fn multiplicities(beta: &[Vec<usize>]) -> (Vec<(usize, usize, usize)>, Vec<(usize, usize)>) {
    let m = beta.len();
    let b = |i: isize, j: usize| -> i64 {
        if i < 0 {
            0
        } else {
            beta[i as usize][j] as i64
        }
    };
    let mut pairs = Vec::new();
    let mut essential = Vec::new();
    for i in 0..m {
        let ii = i as isize;
        for j in i + 1..m {
            let mu = (b(ii, j - 1) - b(ii, j)) - (b(ii - 1, j - 1) - b(ii - 1, j));
            assert!(mu >= 0, "negative multiplicity at ({i},{j})");
            if mu > 0 {
                pairs.push((i, j, mu as usize));
            }
        }
        let last = m - 1;
        let mu = b(ii, last) - b(ii - 1, last);
        assert!(mu >= 0, "negative essential multiplicity at {i}");
        if mu > 0 {
            essential.push((i, mu as usize));
        }
    }
    (pairs, essential)
}

/// Persistence diagram straight from the definitions. Accepts disconnected
/// graphs (one essential degree-0 class per component).
pub fn compute_diagram_oracle(f: &MorseFunction) -> Result<PersistenceDiagram, PersistenceError> {
    let n = f.graph().simplex_count();
    if n > ORACLE_MAX_SIMPLICES {
        return Err(PersistenceError::TooLarge { simplices: n, limit: ORACLE_MAX_SIMPLICES });
    }
    let betti = persistent_betti_numbers(f);
    let c = &betti.critical_values;
    let expand_pairs = |pairs: Vec<(usize, usize, usize)>| -> Vec<(u64, u64)> {
        pairs.into_iter().flat_map(|(i, j, mu)| std::iter::repeat_n((c[i], c[j]), mu)).collect()
    };
    let expand_births = |births: Vec<(usize, usize)>| -> Vec<u64> {
        births.into_iter().flat_map(|(i, mu)| std::iter::repeat_n(c[i], mu)).collect()
    };

    let (pairs0, essential0) = multiplicities(&betti.beta0);
    let (pairs1, essential1) = multiplicities(&betti.beta1);
    assert!(pairs1.is_empty(), "cycles never die in a graph");
    Ok(PersistenceDiagram::new(expand_pairs(pairs0), expand_births(essential0), expand_births(essential1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn path_example_by_hand() {
        // Level subcomplexes at 0, 2, 3: {v0}, {v0-v1, v2}, the whole path.
        let f = MorseFunction::from_values(
            &Graph::path(3),
            [(0, int(0)), (1, int(1)), (2, int(2))],
            [((0, 1), int(1)), ((1, 2), int(3))],
        )
        .unwrap();
        let betti = persistent_betti_numbers(&f);
        assert_eq!(betti.beta0, vec![vec![1, 1, 1], vec![0, 2, 1], vec![0, 0, 1]]);
        assert_eq!(compute_diagram_oracle(&f).unwrap(), PersistenceDiagram::connected(vec![(2, 3)], vec![]));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new([3], []).unwrap();
        let f = MorseFunction::from_values(&g, [(3, int(0))], []).unwrap();
        assert_eq!(compute_diagram_oracle(&f).unwrap(), PersistenceDiagram::connected(vec![], vec![]));
    }

    #[test]
    fn triangle_cycle_is_essential() {
        let f = MorseFunction::from_values(
            &Graph::cycle(3),
            [(0, int(0)), (1, int(1)), (2, int(2))],
            [((0, 1), int(3)), ((1, 2), int(4)), ((0, 2), int(5))],
        )
        .unwrap();
        assert_eq!(
            compute_diagram_oracle(&f).unwrap(),
            PersistenceDiagram::connected(vec![(1, 3), (2, 4)], vec![5])
        );
    }

    #[test]
    fn disconnected_input_keeps_every_component() {
        let g = Graph::new([0, 1], []).unwrap();
        let f = MorseFunction::from_values(&g, [(0, int(0)), (1, int(1))], []).unwrap();
        assert_eq!(compute_diagram_oracle(&f).unwrap(), PersistenceDiagram::new(vec![], vec![0, 1], vec![]));
    }
}
