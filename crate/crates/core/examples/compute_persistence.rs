//! Computes a persistence diagram two ways: the union-find sweep and the
//! persistent Betti number tables.

use flatmorse::persistence::{compute_diagram_fast, compute_diagram_oracle, persistent_betti_numbers};
use flatmorse::samples;

fn main() {
    let f = samples::reference_function();
    let fast = compute_diagram_fast(&f).unwrap();
    let oracle = compute_diagram_oracle(&f).unwrap();
    println!("union-find: {fast}");
    println!("oracle:     {oracle}");
    assert_eq!(fast, oracle);

    let betti = persistent_betti_numbers(&f);
    println!("rank of H0(G_i) -> H0(G_j), levels {:?}:", betti.critical_values);
    for row in &betti.beta0 {
        println!("  {row:?}");
    }
}
