//! Metered comparison sorters.

mod baseline;
mod blocked;
mod partition;
mod psort;
mod select;

pub use baseline::{insertion_sort, merge_sort, natural_merge_sort};
pub use blocked::blocked_sort;
pub use partition::{stable_three_way_partition, Partition};
pub use psort::{partition_sort, PivotStrategy, SMALL_CUTOFF};
pub use select::{
    median_rank, select_exact_median, select_floyd_rivest, select_random_middle, MiddlePivot,
    MIDDLE_RETRY_CAP,
};

use crate::item::Sequence;

/// Result of one sorter run.
#[derive(Debug, Clone)]
pub struct SortOutcome {
    pub output: Sequence,
    pub comparisons: u64,
    pub moves: u64,
    /// Rejected pivot samples (random-middle-half strategy only).
    pub pivot_retries: u64,
    /// Nesting depth of the deepest call; the top-level call is depth 1.
    pub max_recursion_depth: usize,
    /// Whether the output keys are non-decreasing. Always true except for
    /// `blocked_sort` on inputs that violate its displacement precondition.
    pub sorted: bool,
}

pub(crate) fn keys_sorted(items: &[crate::Item]) -> bool {
    items.windows(2).all(|w| w[0].key <= w[1].key)
}
