use crate::item::{Item, Sequence};
use crate::meter::Meter;

use super::SortOutcome;

fn outcome(items: Vec<Item>, start: (u64, u64), m: &Meter, depth: usize) -> SortOutcome {
    SortOutcome {
        output: Sequence::from_items_unchecked(items),
        comparisons: m.comparisons() - start.0,
        moves: m.moves() - start.1,
        pivot_retries: 0,
        max_recursion_depth: depth,
        sorted: true,
    }
}

/// Stable in-place insertion sort. Uses `n - 1 + I` comparisons at most,
/// where `I` is the number of inversions.
pub(crate) fn insertion_sort_slice(a: &mut [Item], m: &mut Meter) {
    for i in 1..a.len() {
        let x = a[i];
        let mut j = i;
        while j > 0 && m.less(&x, &a[j - 1]) {
            a[j] = a[j - 1];
            j -= 1;
        }
        if j != i {
            a[j] = x;
            m.add_moves((i - j + 1) as u64);
        }
    }
}

pub fn insertion_sort(s: &Sequence, m: &mut Meter) -> SortOutcome {
    let start = (m.comparisons(), m.moves());
    let mut items = s.items().to_vec();
    insertion_sort_slice(&mut items, m);
    outcome(items, start, m, 1)
}

/// Stable merge of two sorted runs into `out`; takes from the right only
/// when strictly smaller.
pub(crate) fn merge_into(left: &[Item], right: &[Item], out: &mut [Item], m: &mut Meter) {
    let (mut i, mut j) = (0, 0);
    for slot in out.iter_mut() {
        let take_right = if i == left.len() {
            true
        } else if j == right.len() {
            false
        } else {
            m.less(&right[j], &left[i])
        };
        if take_right {
            *slot = right[j];
            j += 1;
        } else {
            *slot = left[i];
            i += 1;
        }
    }
    m.add_moves(out.len() as u64);
}

/// Top-down stable mergesort; at most `n * ceil(log2 n)` comparisons.
pub(crate) fn merge_sort_slice(a: &mut [Item], buf: &mut Vec<Item>, m: &mut Meter) {
    let n = a.len();
    if n < 2 {
        return;
    }
    let mid = n / 2;
    merge_sort_slice(&mut a[..mid], buf, m);
    merge_sort_slice(&mut a[mid..], buf, m);
    buf.clear();
    buf.extend_from_slice(a);
    let (lo, hi) = buf.split_at(mid);
    merge_into(lo, hi, a, m);
}

pub fn merge_sort(s: &Sequence, m: &mut Meter) -> SortOutcome {
    let start = (m.comparisons(), m.moves());
    let mut items = s.items().to_vec();
    let mut buf = Vec::with_capacity(items.len());
    merge_sort_slice(&mut items, &mut buf, m);
    let depth = if items.len() < 2 {
        1
    } else {
        (usize::BITS - (items.len() - 1).leading_zeros()) as usize + 1
    };
    outcome(items, start, m, depth)
}

/// Finds maximal non-decreasing runs (`n - 1` comparisons), then merges
/// neighbouring runs pairwise, round by round, until one remains.
pub fn natural_merge_sort(s: &Sequence, m: &mut Meter) -> SortOutcome {
    let start = (m.comparisons(), m.moves());
    let mut items = s.items().to_vec();
    let n = items.len();
    // Run boundaries: bounds[i]..bounds[i+1] is a run.
    let mut bounds = vec![0];
    for i in 1..n {
        if m.less(&items[i], &items[i - 1]) {
            bounds.push(i);
        }
    }
    bounds.push(n);

    let mut buf = items.clone();
    let mut rounds = 0;
    while bounds.len() > 2 {
        let mut next = vec![0];
        let mut i = 0;
        while i + 1 < bounds.len() {
            let (lo, hi) = (bounds[i], bounds[i + 1]);
            if let Some(&end) = bounds.get(i + 2) {
                merge_into(&items[lo..hi], &items[hi..end], &mut buf[lo..end], m);
                next.push(end);
                i += 2;
            } else {
                buf[lo..hi].copy_from_slice(&items[lo..hi]);
                next.push(hi);
                i += 1;
            }
        }
        std::mem::swap(&mut items, &mut buf);
        bounds = next;
        rounds += 1;
    }
    outcome(items, start, m, rounds + 1)
}
