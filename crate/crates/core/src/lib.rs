//! Exact chromatic and clique numbers of integer distance graphs.
//!
//! The integer distance graph `G(D)` has the integers as vertices and an edge
//! `uv` whenever `|u - v|` lies in the finite distance set `D`. This crate
//! computes `χ(D)` and `ω(G(D))` exactly, and every answer comes with a
//! witness that an independent verifier in [`witness`] re-checks:
//!
//! * a periodic coloring for `χ(D) ≤ c`;
//! * an infeasible interval, parity argument, empty automaton or clique for
//!   `χ(D) > c - 1`;
//! * a clique for `ω(G(D)) ≥ m`.
//!
//! ```
//! use distgraph::{chromatic::chromatic_number, clique::clique_number, DistanceSet};
//!
//! let d = DistanceSet::normalize(&[1, 4, 5, 6, 7]).unwrap();
//! assert_eq!(chromatic_number(&d).unwrap().chi, 6);
//! assert_eq!(clique_number(&d).0, 4);
//! ```
//!
//! The guide under `book/` explains the methods; its code listings are
//! compiled and run as doc-tests of this crate.

pub mod chromatic;
pub mod classify;
pub mod cli;
pub mod clique;
pub mod distance_set;
pub mod error;
pub mod survey;
pub mod witness;

pub use distance_set::DistanceSet;
pub use error::{Error, Result};
pub use witness::{
    verify_clique, verify_coloring, CliqueWitness, PeriodicColoringWitness, WitnessRecord,
};

/// Runs the code listings of the guide as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/distance-sets.md")]
    mod distance_sets {}
    #[doc = include_str!("../../../book/src/witnesses.md")]
    mod witnesses {}
    #[doc = include_str!("../../../book/src/cliques.md")]
    mod cliques {}
    #[doc = include_str!("../../../book/src/window-automaton.md")]
    mod window_automaton {}
    #[doc = include_str!("../../../book/src/intervals.md")]
    mod intervals {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/survey.md")]
    mod survey {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
