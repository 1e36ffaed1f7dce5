//! Analytic connectivity of general (non-uniform) hypergraphs.
//!
//! A hypergraph on `n` vertices with maximum edge size `m` carries an order-`m`
//! Laplacian tensor. Its analytic connectivity `alpha(H)` is the minimum of the
//! Laplacian form `L x^m` over nonnegative `x` with `sum x_i^m = 1` and some
//! coordinate equal to zero. This crate evaluates that form without building
//! the tensor, minimizes it, and compares the result with the isoperimetric
//! number, the diameter and vertex degrees.
//!
//! Vertex indices are 0-based throughout the Rust API, except for
//! [`Hypergraph::build`], the edge-list text format, and every serialized
//! report, which use 1-based labels.

pub mod bounds;
pub mod cli;
pub mod combinatorics;
pub mod ensemble;
pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod solver;
pub mod tensor;

pub use error::{Error, ErrorClass, Result};
pub use hypergraph::{BuildOptions, DegreeProfile, Hypergraph};
pub use tensor::EvalPoint;
