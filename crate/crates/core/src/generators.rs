//! Seeded input families.
//!
//! Every generator is a pure function of its spec: the same spec and seed
//! always give the same sequence. Keys are `1..=n` except for the multiset
//! family.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::item::Sequence;
use crate::measures::{canonical_type, decompose_maximal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sorted,
    Reverse,
    Random,
    Displacement,
    Transpose,
    SortedType,
    Multiset,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Sorted,
        Family::Reverse,
        Family::Random,
        Family::Displacement,
        Family::Transpose,
        Family::SortedType,
        Family::Multiset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sorted => "sorted",
            Family::Reverse => "reverse",
            Family::Random => "random",
            Family::Displacement => "displacement",
            Family::Transpose => "transpose",
            Family::SortedType => "sorted-type",
            Family::Multiset => "multiset",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family {s:?}")))
    }
}

/// What to generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Sorted { n: usize },
    Reverse { n: usize },
    Random { n: usize, seed: u64 },
    /// Every item within `k` places of its sorted position, with equality
    /// reached by at least one item.
    Displacement { n: usize, k: usize, seed: u64 },
    /// Second half of the keys followed by the first half.
    Transpose { n: usize },
    /// A permutation whose maximal sorted-type is exactly `sizes`.
    SortedType { sizes: Vec<usize>, seed: u64 },
    /// `n` keys over `h` distinct values, each value used at least once.
    Multiset { n: usize, h: usize, seed: u64 },
}

impl GenSpec {
    pub fn family(&self) -> Family {
        match self {
            GenSpec::Sorted { .. } => Family::Sorted,
            GenSpec::Reverse { .. } => Family::Reverse,
            GenSpec::Random { .. } => Family::Random,
            GenSpec::Displacement { .. } => Family::Displacement,
            GenSpec::Transpose { .. } => Family::Transpose,
            GenSpec::SortedType { .. } => Family::SortedType,
            GenSpec::Multiset { .. } => Family::Multiset,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            GenSpec::Sorted { n }
            | GenSpec::Reverse { n }
            | GenSpec::Random { n, .. }
            | GenSpec::Displacement { n, .. }
            | GenSpec::Transpose { n }
            | GenSpec::Multiset { n, .. } => *n,
            GenSpec::SortedType { sizes, .. } => sizes.iter().sum(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GenSpec::Displacement { n, k, .. } if *n > 0 && *k > n - 1 => {
                invalid(format!("displacement bound {k} exceeds n - 1 = {}", n - 1))
            }
            GenSpec::Displacement { n: 0, k, .. } if *k > 0 => {
                invalid("displacement bound must be 0 for empty input")
            }
            GenSpec::SortedType { sizes, .. } => check_sizes(sizes),
            GenSpec::Multiset { n, h, .. } if *h < 1 || h > n => {
                invalid(format!("distinct count {h} outside 1..={n}"))
            }
            _ => Ok(()),
        }
    }
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() || sizes.contains(&0) {
        return invalid("sorted-type sizes must be non-empty and positive");
    }
    Ok(())
}

pub fn generate(spec: &GenSpec) -> Result<Sequence> {
    spec.validate()?;
    let seq = match *spec {
        GenSpec::Sorted { n } => Sequence::from_keys(1..=n as i64),
        GenSpec::Reverse { n } => Sequence::from_keys((1..=n as i64).rev()),
        GenSpec::Random { n, seed } => {
            let mut keys: Vec<i64> = (1..=n as i64).collect();
            keys.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            Sequence::from_keys(keys)
        }
        GenSpec::Displacement { n, k, seed } => displacement(n, k, seed),
        GenSpec::Transpose { n } => {
            let half = (n / 2) as i64;
            Sequence::from_keys((half + 1..=n as i64).chain(1..=half))
        }
        GenSpec::SortedType { ref sizes, seed } => realize_sorted_type(sizes, seed)?,
        GenSpec::Multiset { n, h, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut keys: Vec<i64> = (1..=h as i64).collect();
            keys.extend((h..n).map(|_| rng.gen_range(1..=h as i64)));
            keys.shuffle(&mut rng);
            Sequence::from_keys(keys)
        }
    };
    Ok(seq)
}

/// Blocks of `k + 1` positions; every other block (starting with the first)
/// is rotated left by a seeded amount. Rotating a block of `b` by `r` moves
/// items by `r` or `b - r`, so nothing travels further than `k`. The first
/// block uses `r = 1` or `r = k`, which moves one item exactly `k`.
fn displacement(n: usize, k: usize, seed: u64) -> Sequence {
    let mut keys: Vec<i64> = (1..=n as i64).collect();
    if k == 0 {
        return Sequence::from_keys(keys);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (i, block) in keys.chunks_mut(k + 1).enumerate().step_by(2) {
        let b = block.len();
        if b < 2 {
            continue;
        }
        let r = if i == 0 {
            if rng.gen_bool(0.5) {
                1
            } else {
                k
            }
        } else {
            rng.gen_range(1..b)
        };
        block.rotate_left(r % b);
    }
    Sequence::from_keys(keys)
}

/// How a sorted-type realization was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub sequence: Sequence,
    /// Seeds tried, starting from the requested one.
    pub attempts: u32,
    /// True if every seeded attempt failed and the blocks were laid out in
    /// descending rank order instead.
    pub used_fallback: bool,
}

const REALIZE_ATTEMPTS: u32 = 8;

/// Builds a permutation whose maximal decomposition has exactly the given
/// block sizes. See [`realize_sorted_type_detailed`].
pub fn realize_sorted_type(sizes: &[usize], seed: u64) -> Result<Sequence> {
    realize_sorted_type_detailed(sizes, seed).map(|r| r.sequence)
}

/// Block `j` receives the `j`-th consecutive key range. Positions are dealt
/// to blocks by shuffling a multiset of block labels, so each block is
/// increasing in position. Two rank-adjacent blocks that could be merged
/// (the last item of one precedes the first of the next) are repaired by
/// swapping the positions of those two items, which keeps both blocks
/// increasing. Sweeps repeat from the left until no mergeable boundary is
/// left; if that does not settle, the next seed is tried.
pub fn realize_sorted_type_detailed(sizes: &[usize], seed: u64) -> Result<Realization> {
    check_sizes(sizes)?;
    let n: usize = sizes.iter().sum();
    let want = canonical_type(sizes);
    let mut starts = Vec::with_capacity(sizes.len() + 1);
    starts.push(0);
    for &s in sizes {
        starts.push(starts.last().unwrap() + s);
    }

    for attempt in 0..REALIZE_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let mut labels: Vec<usize> = sizes
            .iter()
            .enumerate()
            .flat_map(|(j, &s)| std::iter::repeat_n(j, s))
            .collect();
        labels.shuffle(&mut rng);

        // pos[r] = position of the item of 0-based rank r.
        let mut next: Vec<usize> = starts[..sizes.len()].to_vec();
        let mut pos = vec![0usize; n];
        for (p, &j) in labels.iter().enumerate() {
            pos[next[j]] = p;
            next[j] += 1;
        }

        if repair(&mut pos, &starts, n + 1) {
            let seq = from_positions(&pos);
            if decompose_maximal(&seq).sorted_type() == want {
                return Ok(Realization {
                    sequence: seq,
                    attempts: attempt + 1,
                    used_fallback: false,
                });
            }
        }
    }

    // Highest-rank block first: no boundary can merge.
    let mut pos = vec![0usize; n];
    let mut p = 0;
    for j in (0..sizes.len()).rev() {
        for slot in &mut pos[starts[j]..starts[j + 1]] {
            *slot = p;
            p += 1;
        }
    }
    let seq = from_positions(&pos);
    if decompose_maximal(&seq).sorted_type() != want {
        return Err(Error::Generation(format!("could not realize sorted-type {sizes:?}")));
    }
    Ok(Realization {
        sequence: seq,
        attempts: REALIZE_ATTEMPTS,
        used_fallback: true,
    })
}

/// Returns true once a sweep finds no mergeable boundary.
fn repair(pos: &mut [usize], starts: &[usize], max_sweeps: usize) -> bool {
    let boundaries = &starts[1..starts.len() - 1];
    for _ in 0..max_sweeps {
        let mut changed = false;
        for &b in boundaries {
            // b - 1 is the last rank of the lower block, b the first of the upper.
            if pos[b - 1] < pos[b] {
                pos.swap(b - 1, b);
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    false
}

fn from_positions(pos: &[usize]) -> Sequence {
    let mut keys = vec![0i64; pos.len()];
    for (rank, &p) in pos.iter().enumerate() {
        keys[p] = rank as i64 + 1;
    }
    Sequence::from_keys(keys)
}
