//! Certification engine for intersection graphs of punctured surfaces in a
//! toroidal 3-manifold.
//!
//! The crate models the pair of labeled fat graphs `(G_S, G_T)` cut out by
//! two punctured tori on each other's surface, encodes the combinatorial
//! rules those graphs obey as predicates, and exhaustively searches the
//! configurations allowed for a slope distance `Δ` so that a case is either
//! certified empty or bounded.

pub mod certify;
pub mod constraints;
pub mod error;
pub mod graph;
pub mod homology;
pub mod perms;
pub mod verify;

pub use error::{CertifyError, ConstraintError, GraphError, HomologyError, PermError};
