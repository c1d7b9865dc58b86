//! Spectral supersaturation of quadrilaterals.
//!
//! Counts 4-cycles four ways, computes Perron eigenpairs and full spectra,
//! runs the small-eigenvalue-edge deletion procedure with per-step
//! certificates, verifies the classical spectral inequalities on exhaustive
//! small-graph universes and estimates `f(m)`, the least number of 4-cycles in
//! an `m`-edge graph with `λ ≥ √m` that is not a star.

pub mod dsee;
pub mod graph;
pub mod par;
pub mod quadcount;
pub mod search;
pub mod spectral;
pub mod tolerance;
pub mod verify;

pub use graph::{Construction, DegreeStats, Graph, GraphBuilder, GraphError};
pub use quadcount::{count_report, C4Report};
pub use spectral::{perron, PerronResult, SpectrumResult};
pub use tolerance::{SpectralMode, Tolerances};
