//! Exhaustive search for achievable diagrams. On trees the counting bound is
//! met exactly; on the hexagon it is far from sharp.

use num_traits::ToPrimitive;

use flatmorse::counting::{max_pairs, upper_bound_general, upper_bound_tree, CountQuery};
use flatmorse::graph::trees::unlabeled_trees;
use flatmorse::search::enumerate_achievable_diagrams;
use flatmorse::samples;

fn main() {
    for t in unlabeled_trees(5) {
        let n = t.simplex_count();
        let bound: usize = (0..=max_pairs(n)).map(|k| upper_bound_tree(n, k).unwrap().to_usize().unwrap()).sum();
        let found = enumerate_achievable_diagrams(&t).unwrap().len();
        println!("tree {:?}: {found} achievable, bound {bound}", t.edges());
    }

    let hexagon = samples::hexagon();
    let found = enumerate_achievable_diagrams(&hexagon).unwrap();
    let bound: usize = (0..=5)
        .map(|k| upper_bound_general(CountQuery::new(12, 1, k).unwrap()).unwrap().to_usize().unwrap())
        .sum();
    println!("hexagon: {} achievable, bound {bound}", found.len());
    for d in found.iter().filter(|d| d.essential_h1() == [1]) {
        println!("  cycle born at 1: {d}");
    }
    println!("contains {}: {}", samples::hexagon_unreachable_diagram(), found.contains(&samples::hexagon_unreachable_diagram()));
}
