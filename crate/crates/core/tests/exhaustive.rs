use std::collections::BTreeSet;

use flatmorse::counting::{enumerate_consistent_diagrams, max_pairs, upper_bound_tree};
use flatmorse::graph::trees::{labeled_trees, unlabeled_trees, unlabeled_trees_up_to};
use flatmorse::persistence::compute_diagram_fast;
use flatmorse::realization::{realize, realize_randomized};
use flatmorse::search::enumerate_achievable_diagrams;

#[test]
fn tree_shape_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| unlabeled_trees(n).len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11]);
    assert_eq!(labeled_trees(5).len(), 125);
}

#[test]
fn every_consistent_diagram_realizes_on_every_small_tree() {
    for t in unlabeled_trees_up_to(6) {
        let n = t.simplex_count();
        for k in 0..=max_pairs(n) {
            for (i, d) in enumerate_consistent_diagrams(n, k).unwrap().iter().enumerate() {
                assert_eq!(&compute_diagram_fast(&realize(&t, d).unwrap()).unwrap(), d, "{t:?} {d}");
                let (f, _) = realize_randomized(&t, d, i as u64).unwrap();
                assert_eq!(&compute_diagram_fast(&f).unwrap(), d, "{t:?} {d} seed {i}");
            }
        }
    }
}

#[test]
fn search_finds_exactly_the_consistent_diagrams_on_trees() {
    for t in unlabeled_trees_up_to(5) {
        let n = t.simplex_count();
        let found: BTreeSet<_> = enumerate_achievable_diagrams(&t).unwrap().into_iter().collect();
        let consistent: BTreeSet<_> =
            (0..=max_pairs(n)).flat_map(|k| enumerate_consistent_diagrams(n, k).unwrap()).collect();
        assert_eq!(found, consistent, "{t:?}");
        let bound: u64 = (0..=max_pairs(n)).map(|k| u64::try_from(upper_bound_tree(n, k).unwrap()).unwrap()).sum();
        assert_eq!(found.len() as u64, bound);
    }
}
