//! Discrete Morse functions on graphs and the persistence diagrams they induce.
//!
//! A *flat* discrete Morse function gives every vertex and edge of a graph a
//! value so that regular vertex/edge pairs share a value and every other
//! (critical) value is a distinct integer. Its sublevel sets form a
//! filtration, and the filtration has a persistence diagram.
//!
//! The crate covers both directions:
//!
//! * [`morse`] validates functions and extracts critical simplices, level
//!   subcomplexes and the gradient vector field;
//! * [`persistence`] computes diagrams, by a union-find sweep and by a
//!   persistent Betti number oracle;
//! * [`realization`] builds a function on a tree for any consistent diagram;
//! * [`counting`] and [`search`] count diagrams in closed form and find the
//!   exact achievable set of a small graph by exhaustive search;
//! * [`equivalence`] compares functions under four equivalence relations.
//!
//! ```
//! use flatmorse::persistence::compute_diagram_fast;
//! use flatmorse::realization::realize;
//! use flatmorse::samples;
//!
//! let tree = samples::reference_tree();
//! let target = samples::reference_diagram();
//! let f = realize(&tree, &target).unwrap();
//! assert_eq!(compute_diagram_fast(&f).unwrap(), target);
//! ```

pub mod cli;
pub mod counting;
pub mod equivalence;
pub mod generate;
pub mod gf2;
pub mod graph;
pub mod io;
pub mod morse;
pub mod persistence;
pub mod rational;
pub mod realization;
pub mod render;
pub mod samples;
pub mod search;
pub mod sequence;
