//! Complete colorings of circulant graphs and digraphs.
//!
//! The crate builds circulant graphs `C_n(J)` and digraphs, generates
//! complete proper (graphs) or complete acyclic (digraphs) colorings from
//! quadratic residues and from cyclic projective planes, checks any coloring
//! with an independent verifier, and computes the matching upper bounds and
//! exact values for small instances.
//!
//! ```
//! use chroma::constructions::residue_walk_graph_coloring;
//!
//! let c = residue_walk_graph_coloring(3, 2).unwrap();
//! assert_eq!(c.graph.n(), 43);
//! assert_eq!(c.coloring.k(), 13);
//! assert!(c.report.proper && c.report.complete);
//! ```

pub mod bounds;
pub mod circulant;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod numtheory;
pub mod planes;
pub mod search;

pub use cli::certificate::Certificate;
pub use error::{Error, Result};
