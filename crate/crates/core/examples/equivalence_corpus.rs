//! Pairs of functions separating the four equivalence relations.

use flatmorse::equivalence::corpus::all_pairs;
use flatmorse::equivalence::Verdicts;
use flatmorse::persistence::compute_diagram_fast;

fn main() {
    for pair in all_pairs() {
        let v = Verdicts::compute(&pair.first, &pair.second).unwrap();
        println!("pair {}: {v}", pair.name);
        println!("  diagrams {} and {}", compute_diagram_fast(&pair.first).unwrap(), compute_diagram_fast(&pair.second).unwrap());
        for (r, want) in &pair.expected {
            assert_eq!(v.get(*r), *want);
        }
    }
}
