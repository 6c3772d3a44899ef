//! Exhaustive case certification.
mod analysis;
mod case;
pub mod certificate;
pub mod counting;
pub mod enumerate;
pub mod lesst;
pub(crate) mod model;
pub mod params;
mod pipeline;

pub use case::certify_case;
pub use certificate::{CaseCertificate, CertMode, LogEntry, ENGINE};
pub use counting::{counting_arguments, derive_delta_bound, CountingArgument};
pub use enumerate::{enumerate_reduced_graphs, is_reduced_torus_map, DegreeSpec};
pub use lesst::{forced_shape, lesst_family_check, lesst_precondition, ForcedShape};
pub use params::{CaseParams, CertifyConfig, Mode, Polarity};
