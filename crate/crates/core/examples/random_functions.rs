//! Random functions on random graphs, checked against the persistence oracle.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use flatmorse::generate::random_instance;
use flatmorse::persistence::{compute_diagram_fast, compute_diagram_oracle};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for betti1 in 0..=3 {
        let mut agree = 0;
        for _ in 0..200 {
            let f = random_instance(&mut rng, 14, betti1).unwrap();
            if compute_diagram_fast(&f).unwrap() == compute_diagram_oracle(&f).unwrap() {
                agree += 1;
            }
        }
        println!("b1={betti1}: {agree}/200 agree");
    }
    let f = random_instance(&mut rng, 10, 1).unwrap();
    println!("sample on {:?}:", f.graph());
    for (s, x) in f.sorted_simplices() {
        println!("  {s} = {x}");
    }
    println!("diagram {}", compute_diagram_fast(&f).unwrap());
}
