//! Sortedness check charged to a meter, and the stable-permutation oracle.

use crate::item::{Item, Sequence};
use crate::meter::Meter;

/// Scans adjacent pairs left to right and stops at the first descent.
///
/// Charges `i + 1` comparisons when the first descent is between positions
/// `i` and `i + 1`, `n - 1` when sorted, and nothing for `n <= 1`.
pub fn sorted_check(items: &[Item], m: &mut Meter) -> bool {
    items.windows(2).all(|w| !m.less(&w[1], &w[0]))
}

/// True iff `output` is a stable sorted permutation of `input`: keys are
/// non-decreasing, the `(key, tag)` multisets coincide, and equal keys
/// appear in increasing tag order.
pub fn verify_sorted_stable_permutation(input: &Sequence, output: &Sequence) -> bool {
    check_sorted_stable_permutation(input, output).is_ok()
}

/// Like [`verify_sorted_stable_permutation`] but names the first failure.
pub fn check_sorted_stable_permutation(
    input: &Sequence,
    output: &Sequence,
) -> Result<(), String> {
    let (inp, out) = (input.items(), output.items());
    if inp.len() != out.len() {
        return Err(format!("length {} != {}", out.len(), inp.len()));
    }
    for (i, w) in out.windows(2).enumerate() {
        if w[1].key < w[0].key {
            return Err(format!("descent at output position {i}"));
        }
        if w[1].key == w[0].key && w[1].tag < w[0].tag {
            return Err(format!("equal keys out of tag order at output position {i}"));
        }
    }
    let mut a: Vec<(usize, i64)> = inp.iter().map(|it| (it.tag, it.key)).collect();
    let mut b: Vec<(usize, i64)> = out.iter().map(|it| (it.tag, it.key)).collect();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err("output is not a permutation of the input".into());
    }
    Ok(())
}
