//! Matching covered graphs, bricks and braces, removable doubletons, and the
//! generation of simple near-bipartite bricks by strictly thin edge
//! expansions.
//!
//! Every algorithm here is exact and most are exhaustive. The intended
//! scale is graphs of at most sixteen vertices, which is where the
//! interesting small cases of the theory live and where brute force can
//! double as an oracle.

pub mod bits;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod iso;
pub mod matching;
pub mod mcg;
pub mod named;
pub mod removability;
pub mod report;
pub mod structure;
pub mod transforms;

pub use error::{Error, Result};
pub use families::{Family, FamilyTag, Recognition};
pub use graph::{Bipartition, Edge, EdgeId, Graph};
pub use removability::Doubleton;
