//! Closed-form diagram counts, checked against enumeration where that is
//! cheap and against ranking where it is not.

use flatmorse::counting::{enumerate_consistent_diagrams, max_pairs, upper_bound_general, upper_bound_tree, ConsistentDiagrams, CountQuery};
use flatmorse::samples;

fn main() {
    println!(" n  k  bound  enumerated");
    for n in [5, 7, 9, 11] {
        for k in 0..=max_pairs(n) {
            let bound = upper_bound_tree(n, k).unwrap();
            let listed = enumerate_consistent_diagrams(n, k).unwrap().len();
            println!("{n:>2} {k:>2} {bound:>6} {listed:>11}");
        }
    }

    let big = ConsistentDiagrams::new(21, 5).unwrap();
    println!("n=21 k=5: {} diagrams", big.len());
    let rank = big.rank(&samples::reference_diagram()).unwrap();
    println!("reference diagram is number {rank}");

    let q = CountQuery::new(12, 1, 1).unwrap();
    println!("n=12 b1=1 k=1: at most {}", upper_bound_general(q).unwrap());
}
