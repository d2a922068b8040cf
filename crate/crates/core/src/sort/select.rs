//! Pivot selection: deterministic median of medians, random sampling into
//! the middle half, and Floyd–Rivest style sampling selection.

use rand::Rng;

use crate::error::{invalid, Result};
use crate::item::Item;
use crate::meter::Meter;

use super::baseline::insertion_sort_slice;
use super::partition::stable_three_way_partition;

/// After this many rejected samples the middle-half selector falls back to
/// the exact median.
pub const MIDDLE_RETRY_CAP: u32 = 64;

const SMALL_SELECT: usize = 10;
const FR_CUTOFF: usize = 600;

/// 0-based index of the median: rank `ceil(n / 2)` counted from 1.
pub fn median_rank(n: usize) -> usize {
    n.div_ceil(2).saturating_sub(1)
}

fn sorted_pick(mut items: Vec<Item>, rank: usize, m: &mut Meter) -> i64 {
    insertion_sort_slice(&mut items, m);
    items[rank].key
}

/// Key of the item at 0-based `rank` in key order, by median of medians
/// over groups of five.
pub(crate) fn select_rank_mom(mut items: Vec<Item>, mut rank: usize, m: &mut Meter) -> i64 {
    loop {
        let n = items.len();
        if n <= SMALL_SELECT {
            return sorted_pick(items, rank, m);
        }
        let mut medians = Vec::with_capacity(n.div_ceil(5));
        for group in items.chunks_mut(5) {
            insertion_sort_slice(group, m);
            medians.push(group[(group.len() - 1) / 2]);
        }
        let mid = (medians.len() - 1) / 2;
        let pivot = select_rank_mom(medians, mid, m);
        let p = stable_three_way_partition(&items, pivot, m);
        if rank < p.less.len() {
            items = p.less;
        } else if rank < p.less.len() + p.equal.len() {
            return pivot;
        } else {
            rank -= p.less.len() + p.equal.len();
            items = p.greater;
        }
    }
}

/// Key of rank `ceil(n / 2)`, deterministic linear-time selection.
pub fn select_exact_median(items: &[Item], m: &mut Meter) -> Result<i64> {
    if items.is_empty() {
        return invalid("median of an empty sequence");
    }
    Ok(select_rank_mom(items.to_vec(), median_rank(items.len()), m))
}

/// Pivot chosen by sampling until one lands in the middle half.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MiddlePivot {
    pub key: i64,
    /// Samples drawn, including the accepted one. Zero when the exact median
    /// was used directly (`n < 4`).
    pub attempts: u32,
    /// True when the retry cap was hit and the exact median was used.
    pub fell_back: bool,
}

/// Draws a uniformly random item, computes its stable rank with `n - 1`
/// comparisons, and accepts it when the 1-based rank lies in
/// `[ceil(n/4), floor(3n/4)]`. Repeats on rejection.
///
/// Stable rank orders equal keys by position: an earlier equal item ranks
/// below, a later one above. This keeps the acceptance rate near one half
/// even when every key is the same.
pub fn select_random_middle<R: Rng + ?Sized>(
    items: &[Item],
    rng: &mut R,
    m: &mut Meter,
) -> Result<MiddlePivot> {
    let n = items.len();
    if n < 4 {
        let key = select_exact_median(items, m)?;
        return Ok(MiddlePivot {
            key,
            attempts: 0,
            fell_back: false,
        });
    }
    let (lo, hi) = (n.div_ceil(4), 3 * n / 4);
    for attempt in 1..=MIDDLE_RETRY_CAP {
        let i = rng.gen_range(0..n);
        let x = &items[i];
        let mut below = 0usize;
        for y in &items[..i] {
            if !m.less(x, y) {
                below += 1;
            }
        }
        for y in &items[i + 1..] {
            if m.less(y, x) {
                below += 1;
            }
        }
        let rank = below + 1;
        if (lo..=hi).contains(&rank) {
            return Ok(MiddlePivot {
                key: x.key,
                attempts: attempt,
                fell_back: false,
            });
        }
    }
    let key = select_exact_median(items, m)?;
    Ok(MiddlePivot {
        key,
        attempts: MIDDLE_RETRY_CAP,
        fell_back: true,
    })
}

/// Random-pivot quickselect with three-way partitioning.
fn quickselect<R: Rng + ?Sized>(
    mut items: Vec<Item>,
    mut rank: usize,
    rng: &mut R,
    m: &mut Meter,
) -> i64 {
    loop {
        if items.len() <= SMALL_SELECT {
            return sorted_pick(items, rank, m);
        }
        let pivot = items[rng.gen_range(0..items.len())].key;
        let p = stable_three_way_partition(&items, pivot, m);
        if rank < p.less.len() {
            items = p.less;
        } else if rank < p.less.len() + p.equal.len() {
            return pivot;
        } else {
            rank -= p.less.len() + p.equal.len();
            items = p.greater;
        }
    }
}

/// Sampling selection: pick two keys from a random sample that bracket the
/// target rank with high probability, keep only the items between them, and
/// continue on that much smaller set.
fn fr_select<R: Rng + ?Sized>(
    mut items: Vec<Item>,
    mut rank: usize,
    rng: &mut R,
    m: &mut Meter,
) -> i64 {
    loop {
        let n = items.len();
        if n <= FR_CUTOFF {
            return quickselect(items, rank, rng, m);
        }
        let nf = n as f64;
        let s = (nf.powf(2.0 / 3.0) * nf.ln().cbrt()).ceil() as usize;
        let gap = 2.0 * (s as f64).sqrt();
        let centre = rank as f64 * s as f64 / nf;
        let lo_rank = (centre - gap).max(0.0) as usize;
        let hi_rank = ((centre + gap) as usize).min(s - 1);

        let sample: Vec<Item> = (0..s).map(|_| items[rng.gen_range(0..n)]).collect();
        let lo = fr_select(sample.clone(), lo_rank, rng, m);
        let hi = fr_select(sample, hi_rank, rng, m);

        let (mut below, mut between, mut above) = (Vec::new(), Vec::new(), Vec::new());
        for it in &items {
            if m.less_than_key(it, lo) {
                below.push(*it);
            } else if m.key_less_than(hi, it) {
                above.push(*it);
            } else {
                between.push(*it);
            }
        }
        m.add_moves(n as u64);

        if rank < below.len() {
            items = below;
        } else if rank < below.len() + between.len() {
            rank -= below.len();
            if between.len() == n {
                return quickselect(between, rank, rng, m);
            }
            items = between;
        } else {
            rank -= below.len() + between.len();
            items = above;
        }
    }
}

/// Key of rank `ceil(n / 2)` by Floyd–Rivest sampling selection. Exact for
/// every seed; only the comparison count is random.
pub fn select_floyd_rivest<R: Rng + ?Sized>(
    items: &[Item],
    rng: &mut R,
    m: &mut Meter,
) -> Result<i64> {
    if items.is_empty() {
        return invalid("median of an empty sequence");
    }
    Ok(fr_select(items.to_vec(), median_rank(items.len()), rng, m))
}
