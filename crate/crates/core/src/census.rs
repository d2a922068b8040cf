//! Exhaustive census of small symmetric groups by maximal sorted-type.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::item::Sequence;
use crate::measures::{canonical_type, permutation_type};
use crate::meter::Meter;
use crate::sort::{partition_sort, PivotStrategy};

pub const MAX_CENSUS_N: usize = 10;
pub const MAX_WORST_CASE_N: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct CensusRow {
    /// Block sizes, non-increasing.
    pub sorted_type: Vec<usize>,
    /// Permutations of `1..=n` with this maximal sorted-type.
    pub nu: u64,
    /// Counting lower bound for `nu`; `None` when `2k > n`.
    pub eq1_rhs: Option<f64>,
    pub info_bits: f64,
    /// Largest partition-sort comparison count over the class, if requested.
    pub worst_case_comparisons: Option<u64>,
}

impl CensusRow {
    /// `"2-1"` for sizes `[2, 1]`.
    pub fn type_label(&self) -> String {
        type_label(&self.sorted_type)
    }

    /// Whether `nu >= eq1_rhs`, when the bound applies.
    pub fn eq1_holds(&self) -> Option<bool> {
        self.eq1_rhs.map(|rhs| self.nu as f64 >= rhs)
    }

    /// `ceil(log2 nu)`: comparisons any comparison sort needs in the worst
    /// case to tell the members of this class apart.
    pub fn decision_tree_bound(&self) -> u64 {
        decision_tree_bound(self.nu)
    }
}

pub fn type_label(sizes: &[usize]) -> String {
    sizes.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

pub fn decision_tree_bound(count: u64) -> u64 {
    if count <= 1 {
        0
    } else {
        (u64::BITS - (count - 1).leading_zeros()) as u64
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Exact value of `n!/(n_1!...n_k!) * k! (n-2k)! (2k)! / n!`, converted to
/// `f64`. Only defined for `2k <= n`.
pub fn eq1_rhs(n: usize, sizes: &[usize]) -> Result<f64> {
    if sizes.is_empty() || sizes.contains(&0) {
        return invalid("sizes must be non-empty and positive");
    }
    if sizes.iter().sum::<usize>() != n {
        return invalid(format!("sizes {sizes:?} do not sum to {n}"));
    }
    let k = sizes.len();
    if 2 * k > n {
        return Err(Error::NotApplicable(format!("2k = {} exceeds n = {n}", 2 * k)));
    }
    let numer = factorial(n) * factorial(k) * factorial(n - 2 * k) * factorial(2 * k);
    let denom = sizes.iter().fold(factorial(n), |acc, &s| acc * factorial(s));
    BigRational::new(numer, denom)
        .to_f64()
        .ok_or_else(|| Error::InvalidInput("value out of f64 range".into()))
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Calls `f` on every permutation of `0..n` that starts with `first`.
fn for_each_with_first(n: usize, first: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = std::iter::once(first)
        .chain((0..n).filter(|&v| v != first))
        .collect();
    loop {
        f(&perm);
        if !next_permutation(&mut perm[1..]) {
            break;
        }
    }
}

fn psort_comparisons(perm: &[usize], strategy: PivotStrategy) -> u64 {
    let seq = Sequence::from_keys(perm.iter().map(|&v| v as i64 + 1));
    partition_sort(&seq, strategy, &mut Meter::new()).comparisons
}

type Tally = BTreeMap<Vec<usize>, (u64, u64)>;

fn tally(n: usize, strategy: Option<PivotStrategy>) -> Tally {
    let parts: Vec<Tally> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = Tally::new();
            let mut pos = vec![0usize; n];
            for_each_with_first(n, first, |perm| {
                let t = permutation_type(perm, &mut pos);
                let worst = strategy.map_or(0, |s| psort_comparisons(perm, s));
                let e = acc.entry(t).or_insert((0, 0));
                e.0 += 1;
                e.1 = e.1.max(worst);
            });
            acc
        })
        .collect();
    let mut total = Tally::new();
    for part in parts {
        for (t, (nu, worst)) in part {
            let e = total.entry(t).or_insert((0, 0));
            e.0 += nu;
            e.1 = e.1.max(worst);
        }
    }
    total
}

fn rows(n: usize, tally: Tally, with_worst: bool) -> Vec<CensusRow> {
    tally
        .into_iter()
        .rev()
        .map(|(t, (nu, worst))| CensusRow {
            eq1_rhs: eq1_rhs(n, &t).ok(),
            info_bits: (nu as f64).log2(),
            worst_case_comparisons: with_worst.then_some(worst),
            sorted_type: t,
            nu,
        })
        .collect()
}

/// Counts every permutation of `1..=n` by maximal sorted-type. Rows come
/// in descending lexicographic order of type, so `(n)` is first and
/// `(1, ..., 1)` last.
pub fn enumerate_census(n: usize) -> Result<Vec<CensusRow>> {
    if !(1..=MAX_CENSUS_N).contains(&n) {
        return invalid(format!("census needs 1 <= n <= {MAX_CENSUS_N}, got {n}"));
    }
    Ok(rows(n, tally(n, None), false))
}

/// Census plus, for each type, the most comparisons partition sort spends
/// on any member of the class. Randomized strategies keep their seed fixed
/// across the class, which makes them deterministic procedures.
pub fn enumerate_census_with_worst_case(
    n: usize,
    strategy: PivotStrategy,
) -> Result<Vec<CensusRow>> {
    if !(1..=MAX_WORST_CASE_N).contains(&n) {
        return invalid(format!("worst-case census needs 1 <= n <= {MAX_WORST_CASE_N}, got {n}"));
    }
    Ok(rows(n, tally(n, Some(strategy)), true))
}

/// Largest partition-sort comparison count over all permutations of
/// `1..=n` whose sorted-type is `sizes` (in any order).
pub fn worst_case_over_class(n: usize, sizes: &[usize], strategy: PivotStrategy) -> Result<u64> {
    if !(1..=MAX_WORST_CASE_N).contains(&n) {
        return invalid(format!("worst case needs 1 <= n <= {MAX_WORST_CASE_N}, got {n}"));
    }
    if sizes.iter().sum::<usize>() != n || sizes.contains(&0) {
        return invalid(format!("sizes {sizes:?} are not a sorted-type of {n}"));
    }
    let want = canonical_type(sizes);
    let found: Vec<Option<u64>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut pos = vec![0usize; n];
            let mut worst = None;
            for_each_with_first(n, first, |perm| {
                if permutation_type(perm, &mut pos) == want {
                    let c = psort_comparisons(perm, strategy);
                    worst = Some(worst.map_or(c, |w: u64| w.max(c)));
                }
            });
            worst
        })
        .collect();
    found
        .into_iter()
        .flatten()
        .max()
        .ok_or_else(|| Error::InvalidInput(format!("sorted-type {sizes:?} is not realizable")))
}
