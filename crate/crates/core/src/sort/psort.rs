//! Stable partition sort with an early exit on sorted subproblems.
//!
//! Every call, the top-level one included, first scans its input for a
//! descent. A sorted subproblem is returned as is; otherwise a pivot is
//! chosen, the input is split stably into `<`, `==` and `>` groups, and the
//! outer two are sorted recursively. The algorithm never looks for the
//! input's sorted blocks, yet once a subproblem falls inside one it stops.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::item::{Item, Sequence};
use crate::meter::Meter;
use crate::verify::sorted_check;

use super::baseline::insertion_sort_slice;
use super::partition::stable_three_way_partition;
use super::select::{select_floyd_rivest, select_random_middle, select_rank_mom, median_rank};
use super::SortOutcome;

/// Unsorted subproblems this small are finished by insertion sort.
pub const SMALL_CUTOFF: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotStrategy {
    /// Median of medians; splits into exact halves.
    ExactMedian,
    /// Resample until the pivot's rank falls in the middle half.
    RandomMiddleHalf { seed: u64 },
    /// Floyd–Rivest sampling selection of the exact median.
    FloydRivest { seed: u64 },
}

impl PivotStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            PivotStrategy::ExactMedian => "median",
            PivotStrategy::RandomMiddleHalf { .. } => "randmid",
            PivotStrategy::FloydRivest { .. } => "fr",
        }
    }

    fn seed(&self) -> u64 {
        match *self {
            PivotStrategy::ExactMedian => 0,
            PivotStrategy::RandomMiddleHalf { seed } | PivotStrategy::FloydRivest { seed } => seed,
        }
    }
}

struct Run<'m> {
    strategy: PivotStrategy,
    rng: ChaCha8Rng,
    meter: &'m mut Meter,
    retries: u64,
    depth: usize,
}

impl Run<'_> {
    fn pivot(&mut self, items: &[Item]) -> i64 {
        match self.strategy {
            PivotStrategy::ExactMedian => {
                select_rank_mom(items.to_vec(), median_rank(items.len()), self.meter)
            }
            PivotStrategy::RandomMiddleHalf { .. } => {
                let p = select_random_middle(items, &mut self.rng, self.meter)
                    .expect("non-empty subproblem");
                self.retries += p.attempts.saturating_sub(1) as u64;
                p.key
            }
            PivotStrategy::FloydRivest { .. } => {
                select_floyd_rivest(items, &mut self.rng, self.meter).expect("non-empty subproblem")
            }
        }
    }

    fn sort(&mut self, mut items: Vec<Item>, depth: usize) -> Vec<Item> {
        self.depth = self.depth.max(depth);
        if sorted_check(&items, self.meter) {
            return items;
        }
        if items.len() <= SMALL_CUTOFF {
            insertion_sort_slice(&mut items, self.meter);
            return items;
        }
        let pivot = self.pivot(&items);
        let part = stable_three_way_partition(&items, pivot, self.meter);
        drop(items);
        let less = self.sort(part.less, depth + 1);
        let greater = self.sort(part.greater, depth + 1);
        let mut out = less;
        out.reserve(part.equal.len() + greater.len());
        out.extend_from_slice(&part.equal);
        out.extend_from_slice(&greater);
        self.meter.add_moves(out.len() as u64);
        out
    }
}

/// Sorts `s` stably. On an already sorted input this costs exactly
/// `n - 1` comparisons.
pub fn partition_sort(s: &Sequence, strategy: PivotStrategy, m: &mut Meter) -> SortOutcome {
    let start = (m.comparisons(), m.moves());
    let mut run = Run {
        strategy,
        rng: ChaCha8Rng::seed_from_u64(strategy.seed()),
        meter: m,
        retries: 0,
        depth: 0,
    };
    let out = run.sort(s.items().to_vec(), 1);
    let (retries, depth) = (run.retries, run.depth);
    SortOutcome {
        output: Sequence::from_items_unchecked(out),
        comparisons: m.comparisons() - start.0,
        moves: m.moves() - start.1,
        pivot_retries: retries,
        max_recursion_depth: depth,
        sorted: true,
    }
}
