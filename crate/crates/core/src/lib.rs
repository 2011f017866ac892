//! Finite type-graphs and their chromatic numbers.
//!
//! A *type* is the order type of a pair of equal-size finite sets, written as a
//! sequence over `{1, 2, 3}`. The type-graph `G(n, τ)` joins two `k`-subsets of
//! `[n]` whenever they realise `τ` in one order or the other. This crate builds
//! those graphs together with the auxiliary graphs `G_b(n)`, decomposes types
//! into blocks, and produces explicit proper colourings and graph
//! homomorphisms that bound `χ(G(n, τ))` from above and below. An exact
//! colouring oracle provides ground truth at desk scale.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command line live in the companion `typegraph` crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod catalogue;
pub mod colorings;
pub mod dyadic;
mod error;
pub mod graphs;
pub mod homomorphisms;
pub mod oracle;
pub mod order_types;
pub mod realizations;

pub use colorings::{ColorToken, Coloring, ProperReport};
pub use dyadic::DyadicSplit;
pub use error::{Error, Result};
pub use graphs::{GbVertex, Graph, GraphKind};
pub use homomorphisms::{HomReport, VertexMap};
pub use oracle::{Budget, ChromaticResult};
pub use order_types::{BlockDecomposition, Mark, OrderType, Polarity};
pub use realizations::RationalSet;
