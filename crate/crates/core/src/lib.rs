//! Exact sheaf cohomology and vector-bundle calculus on smooth rational
//! normal scroll surfaces `S(a0, a1)`.
//!
//! All quantities are integers; there is no floating point anywhere.
//! Bundles are line-bundle sums or iterated extensions of them
//! ([`BundleExpr`]); for extensions cohomology is returned as intervals and
//! every predicate answers `true`, `false` or `indeterminate`.

pub mod cohomology;
pub mod error;
pub mod extension;
pub mod log_bundle;
pub mod p1;
pub mod probe;
pub mod regularity;
pub mod scroll;
pub mod splitting;

pub use cohomology::{
    euler_rr, h1_nonvanishing, line_cohomology, restricted_cohomology, sum_cohomology, CohomRecord,
    LineBundleSum,
};
pub use error::{Error, Result};
pub use extension::{ext1_dim, extension_cohomology, Bounds, BundleExpr, IntervalCohom};
pub use log_bundle::{
    classify_regular_acm_log, log_splitting_type, residue_consistency, validate_arrangement,
    Arrangement, LogReport, TwistGrid,
};
pub use p1::{p1_cohomology, sym_decompose, P1Sum};
pub use probe::{Probe, Verdict};
pub use regularity::{gg_region, is_pp_regular, is_regular, reg, RegularityReport};
pub use scroll::{DivisorClass, Scroll};
pub use splitting::{
    decide_split_acm3, decide_split_th, detect_line_summand, is_acm, is_ulrich, make_ulrich,
    Decision, SplitCondition, SplitVerdict, SummandVerdict,
};
