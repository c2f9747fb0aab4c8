//! Realizes a barcode on a tree and prints the choices the construction made.

use flatmorse::io::function_to_json;
use flatmorse::persistence::compute_diagram_fast;
use flatmorse::realization::{realize_randomized, realize_with_plan};
use flatmorse::samples;

fn main() {
    let tree = samples::reference_tree();
    let target = samples::reference_diagram();
    let (f, plan) = realize_with_plan(&tree, &target).unwrap();
    println!("removed edges: {:?}", plan.removed_edges);
    for stage in &plan.stages {
        println!(
            "  birth {:>2} death {:>4} bridge {:>7} base v{:<3} bound {:>3} tree {:?}",
            stage.birth,
            stage.death.map_or("inf".to_string(), |d| d.to_string()),
            stage.bridge.map_or("-".to_string(), |e| e.to_string()),
            stage.base_vertex,
            stage.bound.to_string(),
            stage.tree
        );
    }
    println!("{}", function_to_json(&f));
    assert_eq!(compute_diagram_fast(&f).unwrap(), target);

    for seed in 0..5 {
        let (g, plan) = realize_randomized(&tree, &target, seed).unwrap();
        assert_eq!(compute_diagram_fast(&g).unwrap(), target);
        println!("seed {seed}: removed {:?}, same diagram", plan.removed_edges);
    }
}
