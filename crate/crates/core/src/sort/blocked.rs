use crate::error::{invalid, Result};
use crate::item::Sequence;
use crate::meter::Meter;

use super::baseline::merge_sort_slice;
use super::{keys_sorted, SortOutcome};

/// Two-pass blocked sort for inputs whose items sit within `k` places of
/// their sorted position.
///
/// The array is cut into blocks of `k`. Pass one mergesorts each pair of
/// blocks (1,2), (3,4), ...; pass two mergesorts pairs (2,3), (4,5), ....
/// When the displacement is at most `k` the result is sorted, using at most
/// `2n(log2(2k) + 1)` comparisons. Otherwise the outcome reports
/// `sorted = false`.
pub fn blocked_sort(s: &Sequence, k: usize, m: &mut Meter) -> Result<SortOutcome> {
    let n = s.len();
    if k == 0 || k > n {
        return invalid(format!("block size {k} outside 1..={n}"));
    }
    let start = (m.comparisons(), m.moves());
    let mut items = s.items().to_vec();
    let mut buf = Vec::with_capacity(2 * k);
    for offset in [0, k] {
        let mut lo = offset;
        while lo < n {
            let hi = (lo + 2 * k).min(n);
            merge_sort_slice(&mut items[lo..hi], &mut buf, m);
            lo = hi;
        }
    }
    let sorted = keys_sorted(&items);
    Ok(SortOutcome {
        output: Sequence::from_items_unchecked(items),
        comparisons: m.comparisons() - start.0,
        moves: m.moves() - start.1,
        pivot_retries: 0,
        max_recursion_depth: 1,
        sorted,
    })
}
