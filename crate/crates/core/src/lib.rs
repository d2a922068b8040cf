//! Comparison-metered adaptive sorting.
//!
//! Every sorter and selector here charges each key comparison to an explicit
//! [`Meter`], so comparison counts can be checked against presortedness
//! measures of the input. The main algorithm is [`partition_sort`], a stable
//! partition sort that checks for sortedness before every recursive call;
//! its cost tracks the sizes of the input's maximal sorted subsequences
//! whose keys are contiguous in the final order
//! ([`decompose_maximal`]), without ever computing them.

pub mod census;
pub mod error;
pub mod generators;
mod item;
pub mod measures;
mod meter;
pub mod sort;
mod verify;

pub use error::{Error, Result};
pub use generators::{generate, realize_sorted_type, Family, GenSpec};
pub use item::{Item, Sequence};
pub use measures::{decompose_maximal, profile, theorem_bound, Decomposition, Profile};
pub use meter::Meter;
pub use sort::{
    blocked_sort, insertion_sort, merge_sort, natural_merge_sort, partition_sort, PivotStrategy,
    SortOutcome,
};
pub use verify::{check_sorted_stable_permutation, sorted_check, verify_sorted_stable_permutation};
