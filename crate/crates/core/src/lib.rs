pub mod error;
pub mod graph;
pub mod oracle;
pub mod polytope;
pub mod solver;
pub mod spqr;
pub mod suite;

pub use error::{Error, Result};
pub use graph::Graph;
