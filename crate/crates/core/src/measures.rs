//! Presortedness measures.
//!
//! The central one is the maximal sorted-type decomposition: split the
//! input into disjoint subsequences that are increasing in position and
//! occupy a contiguous interval of ranks, each as long as possible. The
//! classical measures (inversions, displacement, runs, distinct keys) are
//! here for comparison. None of these functions touch a [`Meter`](crate::Meter);
//! they are analysis tools, not algorithm steps.

use crate::error::{invalid, Result};
use crate::item::Sequence;

/// Maximal sorted-type decomposition of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Blocks in increasing rank order; each holds input positions,
    /// strictly increasing, whose ranks are consecutive.
    pub blocks: Vec<Vec<usize>>,
    /// `blocks[i].len()`, in the same order.
    pub sizes: Vec<usize>,
}

impl Decomposition {
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// Sizes sorted non-increasing; the canonical form of a sorted-type.
    pub fn sorted_type(&self) -> Vec<usize> {
        canonical_type(&self.sizes)
    }
}

pub fn canonical_type(sizes: &[usize]) -> Vec<usize> {
    let mut t = sizes.to_vec();
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

/// Input positions listed in rank order, where rank is `(key, tag)`.
pub fn rank_order(s: &Sequence) -> Vec<usize> {
    let items = s.items();
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_unstable_by_key(|&p| (items[p].key, items[p].tag));
    order
}

/// Greedy chaining over rank order: a new block starts whenever the next
/// rank sits at an earlier input position than the current one.
pub fn decompose_maximal(s: &Sequence) -> Decomposition {
    let order = rank_order(s);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut prev: Option<usize> = None;
    for p in order {
        match (prev, blocks.last_mut()) {
            (Some(q), Some(block)) if q < p => block.push(p),
            _ => blocks.push(vec![p]),
        }
        prev = Some(p);
    }
    let sizes = blocks.iter().map(Vec::len).collect();
    Decomposition { blocks, sizes }
}

/// Sorted-type of a permutation of `0..n` given as values; faster than
/// building a [`Sequence`] and used by the census enumeration.
pub(crate) fn permutation_type(perm: &[usize], pos: &mut [usize]) -> Vec<usize> {
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let mut sizes = Vec::new();
    let mut run = 0usize;
    for r in 0..perm.len() {
        if r > 0 && pos[r] < pos[r - 1] {
            sizes.push(run);
            run = 0;
        }
        run += 1;
    }
    if run > 0 {
        sizes.push(run);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Number of pairs `i < j` with `key_i > key_j`, by merge counting.
pub fn inversions(s: &Sequence) -> u64 {
    let mut keys = s.keys();
    let mut buf = vec![0i64; keys.len()];
    count_merge(&mut keys, &mut buf)
}

fn count_merge(a: &mut [i64], buf: &mut [i64]) -> u64 {
    let n = a.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut inv = {
        let (lo, hi) = a.split_at_mut(mid);
        let (blo, bhi) = buf.split_at_mut(mid);
        count_merge(lo, blo) + count_merge(hi, bhi)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if a[j] < a[i] {
            // a[i..mid] all exceed a[j]
            inv += (mid - i) as u64;
            buf[k] = a[j];
            j += 1;
        } else {
            buf[k] = a[i];
            i += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&a[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&a[j..n]);
    a.copy_from_slice(&buf[..n]);
    inv
}

/// Largest distance between an item's input position and its stable sorted
/// position (ties ordered by tag).
pub fn max_displacement(s: &Sequence) -> usize {
    rank_order(s)
        .iter()
        .enumerate()
        .map(|(rank, &pos)| rank.abs_diff(pos))
        .max()
        .unwrap_or(0)
}

/// Number of maximal non-decreasing contiguous runs; 0 for empty input.
pub fn count_runs(s: &Sequence) -> usize {
    let items = s.items();
    if items.is_empty() {
        return 0;
    }
    1 + items.windows(2).filter(|w| w[1].key < w[0].key).count()
}

pub fn distinct_keys(s: &Sequence) -> usize {
    let mut keys = s.keys();
    keys.sort_unstable();
    keys.dedup();
    keys.len()
}

fn check_sizes(sizes: &[usize], n: usize) -> Result<()> {
    if sizes.is_empty() {
        return invalid("sizes must be non-empty");
    }
    if sizes.contains(&0) {
        return invalid("sizes must be positive");
    }
    let total: usize = sizes.iter().sum();
    if total != n {
        return invalid(format!("sizes sum to {total}, expected {n}"));
    }
    Ok(())
}

/// Shannon entropy in bits of the distribution `sizes / n`.
pub fn entropy(sizes: &[usize], n: usize) -> Result<f64> {
    check_sizes(sizes, n)?;
    let nf = n as f64;
    Ok(sizes
        .iter()
        .map(|&s| {
            let p = s as f64 / nf;
            -p * p.log2()
        })
        .sum::<f64>()
        .max(0.0))
}

/// Comparison budget `sum n_i log2(n / n_i + 1) + n`.
pub fn theorem_bound(sizes: &[usize], n: usize) -> Result<f64> {
    check_sizes(sizes, n)?;
    let nf = n as f64;
    let sum: f64 = sizes
        .iter()
        .map(|&s| {
            let s = s as f64;
            s * (nf / s + 1.0).log2()
        })
        .sum();
    Ok(sum + nf)
}

/// Full sortedness report.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub n: usize,
    /// Canonical (non-increasing) block sizes.
    pub sizes: Vec<usize>,
    pub k: usize,
    pub entropy: f64,
    pub bound: f64,
    pub inversions: u64,
    pub displacement: usize,
    pub runs: usize,
    pub distinct: usize,
}

impl Profile {
    /// Checks `n*H <= B - n <= n*H + n` with a small floating tolerance.
    pub fn entropy_sandwich_holds(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let nh = self.n as f64 * self.entropy;
        let mid = self.bound - self.n as f64;
        let eps = 1e-9 * self.bound.max(1.0);
        nh <= mid + eps && mid <= nh + self.n as f64 + eps
    }
}

pub fn profile(s: &Sequence) -> Profile {
    let n = s.len();
    let d = decompose_maximal(s);
    let (entropy, bound) = if n == 0 {
        (0.0, 0.0)
    } else {
        (
            entropy(&d.sizes, n).expect("decomposition sizes are valid"),
            theorem_bound(&d.sizes, n).expect("decomposition sizes are valid"),
        )
    };
    Profile {
        n,
        k: d.k(),
        sizes: d.sorted_type(),
        entropy,
        bound,
        inversions: inversions(s),
        displacement: max_displacement(s),
        runs: count_runs(s),
        distinct: distinct_keys(s),
    }
}
