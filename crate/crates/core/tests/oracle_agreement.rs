use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use flatmorse::generate::random_instance;
use flatmorse::persistence::{compute_diagram_fast, compute_diagram_oracle};

#[test]
fn small_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for betti1 in 0..=3 {
        for _ in 0..300 {
            let f = random_instance(&mut rng, 14, betti1).unwrap();
            assert_eq!(compute_diagram_fast(&f).unwrap(), compute_diagram_oracle(&f).unwrap(), "{:?}", f.to_value_map());
        }
    }
}

#[test]
fn larger_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for betti1 in 0..=6 {
        for _ in 0..40 {
            let f = random_instance(&mut rng, 40, betti1).unwrap();
            assert_eq!(compute_diagram_fast(&f).unwrap(), compute_diagram_oracle(&f).unwrap(), "{:?}", f.to_value_map());
        }
    }
}
