//! Structural checks on the module realizations and the maps between them.

pub mod closure;
pub mod echelon;
pub mod maps;
pub mod report;
pub mod suites;
pub mod upsilon;
pub mod weighting;

pub use closure::{
    closure, simplicity_probe, Coord, Grid, ProbeConfig, TruncatedSubspace, Verdict,
};
pub use echelon::{bareiss_rank, Echelon};
pub use maps::{
    canonical_map, check_intertwiner, parity_swap_candidate, LinearMap, MapError, MapKind,
};
pub use report::{AxiomReport, Failure};
pub use upsilon::{
    invariance_check, quotient_trivial_check, upsilon_member, upsilon_member_vector,
};
pub use weighting::{weighting_act, weighting_matches_a, WeightClassVector};
