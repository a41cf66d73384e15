//! Exact set arithmetic in `Z` and `Z_p`, algorithms that pick small
//! subsets `B' ⊆ B` with large translate unions `A + B'`, executable
//! structure checkers (Cauchy–Davenport, Freiman-type, Vosper), restricted
//! sums with forbidden pairs, and interval-union analogues on the line and
//! the circle.
//!
//! The crate is `no_std` (with `alloc`); everything here is pure and
//! deterministic, so values can be shared freely across threads. File
//! formats, logging and the CLI live in the companion `sumset-lab` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod ap;
pub mod checks;
pub mod continuous;
pub mod error;
pub mod family;
pub mod fibre;
pub mod forbidden;
pub mod restricted;
pub mod rng;
pub mod select;
pub mod set;
pub mod zpset;
pub mod zset;

pub use ap::ApSpec;
pub use checks::{CheckReport, InstanceDigest, Metric, Verdict, Witness, REPORT_SCHEMA};
pub use continuous::{Ambient1d, IntervalUnion};
pub use error::SetError;
pub use fibre::FibreDecomposition;
pub use forbidden::ForbiddenPairs;
pub use restricted::RestrictedInstance;
pub use select::{EndpointScan, PopularitySplit, SelectionResult, Strategy};
pub use set::AdditiveSet;
pub use zpset::ZpSet;
pub use zset::ZSet;

/// Exact fraction type used wherever an operation is specified over the
/// rationals (scan averages, expectations, interval measures).
pub type Rational = num_rational::Ratio<i128>;

/// Subset-enumeration budget: exhaustive searches refuse to enumerate more
/// than this many candidate subsets.
pub const EXHAUSTIVE_BUDGET: u128 = 100_000_000;
