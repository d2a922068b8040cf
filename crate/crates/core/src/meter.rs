use std::cmp::Ordering;

use crate::item::Item;

/// Comparison and move counters for one algorithm run.
///
/// Every key-vs-key test goes through [`Meter::less`] (or one of the helpers
/// built on it) and costs exactly one comparison. A meter created with
/// [`Meter::with_log`] also records the tag pair of each comparison.
#[derive(Debug, Clone, Default)]
pub struct Meter {
    comparisons: u64,
    moves: u64,
    log: Option<Vec<(usize, usize)>>,
}

impl Meter {
    pub fn new() -> Self {
        Meter::default()
    }

    pub fn with_log() -> Self {
        Meter {
            log: Some(Vec::new()),
            ..Meter::default()
        }
    }

    pub fn comparisons(&self) -> u64 {
        self.comparisons
    }

    pub fn moves(&self) -> u64 {
        self.moves
    }

    pub fn log(&self) -> Option<&[(usize, usize)]> {
        self.log.as_deref()
    }

    /// `a.key < b.key`, one comparison.
    #[inline]
    pub fn less(&mut self, a: &Item, b: &Item) -> bool {
        self.comparisons += 1;
        if let Some(log) = self.log.as_mut() {
            log.push((a.tag, b.tag));
        }
        a.key < b.key
    }

    /// `a.key < key`, one comparison. Used when the pivot is a bare key.
    #[inline]
    pub fn less_than_key(&mut self, a: &Item, key: i64) -> bool {
        self.comparisons += 1;
        if let Some(log) = self.log.as_mut() {
            log.push((a.tag, usize::MAX));
        }
        a.key < key
    }

    /// `key < a.key`, one comparison.
    #[inline]
    pub fn key_less_than(&mut self, key: i64, a: &Item) -> bool {
        self.comparisons += 1;
        if let Some(log) = self.log.as_mut() {
            log.push((usize::MAX, a.tag));
        }
        key < a.key
    }

    /// Three-way order derived from up to two `less` tests.
    pub fn order(&mut self, a: &Item, b: &Item) -> Ordering {
        if self.less(a, b) {
            Ordering::Less
        } else if self.less(b, a) {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    #[inline]
    pub fn add_moves(&mut self, count: u64) {
        self.moves += count;
    }
}
