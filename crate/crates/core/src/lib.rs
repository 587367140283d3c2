//! Extension problems on graphs: deciding whether a forced vertex set
//! extends to a minimal vertex cover (or shrinks to a maximal independent
//! set), the price of extension, and pattern-cover extension.

pub mod approx;
pub mod branch;
pub mod certify;
pub mod chordal;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hcover;
pub mod instance;
pub mod kernel;
pub mod oracle;
pub mod tree;

pub use certify::{Certificate, Decision, Witness};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use hcover::Pattern;
pub use instance::{ExtInstance, ProblemKind};
