//! Exact computation of the ampleness of the normal bundle of a base cycle
//! in a flag domain of a classical real group, and in period domains.
//!
//! Two independent paths produce the same number `dim C - a`:
//!
//! * [`engine`] intersects Weyl orbits of the noncompact highest weights
//!   with the positive restricted roots seen from the cycle, then takes the
//!   smallest index of the negated weights;
//! * [`closed_forms`] evaluates hook-length formulas attached to the index
//!   set of the cycle.
//!
//! [`period`] reduces period domains to the same two paths.

pub mod closed_forms;
pub mod engine;
pub mod error;
pub mod period;
pub mod real_forms;
pub mod verify;
pub mod weight;

pub use closed_forms::{closed_form_index, hook_data, hook_data_young, verify_sweep, HookData};
pub use engine::{ampleness_report, sweep, AmplenessReport, BranchUse, SweepBounds};
pub use error::{FlagError, Result};
pub use period::{
    derive, period_closed_form, period_report, HodgeNumbers, PeriodModel, PeriodReport,
};
pub use real_forms::{
    build_model, cycle_weyl, enumerate_cycles, Branch, CaseModel, CycleParam, RealFormCase,
};
pub use verify::{verify_all, VerifySummary};
pub use weight::{
    is_dominant, is_positive_restricted, pair, reflect, simple_coordinates, weight_index,
    weight_index_bfs, weyl_orbit, AmbientFamily, Block, Family, KRootData, SignedPermutation,
    Weight,
};
