//! Self-similar ultrametric Cantor sets built from stationary Bratteli diagrams.
//!
//! A stationary Bratteli diagram (a finite vertex set, a finite multiset of
//! edges between consecutive copies of it, and one root edge per vertex)
//! determines a compact path space. Equipping cylinders with weights
//! `a_v * alpha^depth` turns it into a self-similar ultrametric Cantor set.
//! This crate computes, for such sets:
//!
//! - Perron-Frobenius eigendata of the adjacency matrix and the induced
//!   invariant probability measure on cylinders ([`perron`]);
//! - cylinder diameters, ultrametric distances, regularization bounds and
//!   telescoped comparisons ([`metric`]);
//! - the zeta function over cylinders, its abscissa of convergence, the
//!   Hausdorff dimension, and an independent covering-minimization oracle
//!   ([`dimension`]);
//! - bi-Lipschitz embeddings into `R^n` and bi-Hölder embeddings into `R`,
//!   with dimension planning and empirical distortion certification
//!   ([`embed`]);
//! - Pearson-Bellissard Laplacian eigenvalues, omega-spectrum
//!   approximations, and the separation conditions that make the spectrum
//!   map injective ([`laplacian`]).
//!
//! The crate is `no_std` (alloc required); all IO, file formats and the CLI
//! live in the companion `cantorlab` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod diagram;
pub mod dimension;
pub mod embed;
mod error;
pub mod laplacian;
mod math;
pub mod metric;
pub mod path;
pub mod perron;
pub mod verify;

pub use diagram::{CantorReport, Edge, RootEdge, StationaryDiagram, Substitution, Vertex};
pub use error::{Error, Result};
pub use metric::{MetricMode, SelfSimilarMetric};
pub use path::{Agreement, FinitePath, PathSpec, Tail};
pub use perron::{Measure, PerronData};

/// Default ceiling on the number of paths any enumerating operation may
/// materialize or visit. Exceeding it is an error, never a truncation.
pub const DEFAULT_ENUM_CAP: usize = 1_000_000;
