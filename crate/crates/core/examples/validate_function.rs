//! Validates a function and prints what it is made of: critical simplices,
//! regular pairs, the filtration and the weak Morse inequalities. Then shows
//! a few ways a function can fail validation.

use flatmorse::graph::Graph;
use flatmorse::morse::MorseFunction;
use flatmorse::rational::Rational;
use flatmorse::samples;

fn main() {
    let f = samples::reference_function();
    let (m0, m1) = f.critical_counts();
    println!("{} simplices, {m0} critical vertices, {m1} critical edges", f.graph().simplex_count());
    for (s, v) in f.criticals() {
        println!("  critical {s} at {v}");
    }
    for (v, e) in f.regular_pairs() {
        println!("  regular pair v{v} / e{e} at {}", f.vertex_value(*v).unwrap());
    }
    let filtration = f.filtration();
    for (c, g) in filtration.critical_values.iter().zip(&filtration.subcomplexes) {
        let (b0, b1) = g.betti_numbers();
        println!("  level {c:>2}: {:>2} simplices, b0={b0} b1={b1}", g.simplex_count());
    }
    println!("{:?}", f.check_morse_inequalities());
    println!("pairs k = {}", f.critical_parity().unwrap());

    let int = |n: i64| Rational::from_integer(n);
    let path = Graph::path(3);
    let attempts = [
        ("edge below its vertex", vec![(0, int(0)), (1, int(3)), (2, int(2))], vec![((0, 1), int(3)), ((1, 2), int(1))]),
        ("value shared by far simplices", vec![(0, int(0)), (1, int(1)), (2, int(1))], vec![((0, 1), int(3)), ((1, 2), int(4))]),
        ("fractional critical value", vec![(0, int(0)), (1, Rational::new(1, 2)), (2, int(2))], vec![((0, 1), int(3)), ((1, 2), int(4))]),
    ];
    for (what, vertices, edges) in attempts {
        let err = MorseFunction::from_values(&path, vertices, edges).unwrap_err();
        println!("{what}: {} ({err})", err.kind());
    }
}
