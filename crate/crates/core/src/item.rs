//! Tagged items and sequences, plus the line-oriented text format.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An orderable key together with its original 0-based input position.
///
/// Algorithms only ever compare `key`s (through a [`Meter`](crate::Meter));
/// `tag` exists so that stability can be checked after the fact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Item {
    pub key: i64,
    pub tag: usize,
}

impl Item {
    pub fn new(key: i64, tag: usize) -> Self {
        Item { key, tag }
    }
}

/// An ordered list of tagged items.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sequence {
    items: Vec<Item>,
}

impl Sequence {
    /// Tags are assigned from position.
    pub fn from_keys<I: IntoIterator<Item = i64>>(keys: I) -> Self {
        let items = keys
            .into_iter()
            .enumerate()
            .map(|(tag, key)| Item { key, tag })
            .collect();
        Sequence { items }
    }

    /// Wraps items as-is. Tags must be a permutation of `0..n`.
    pub fn from_items(items: Vec<Item>) -> Result<Self> {
        let n = items.len();
        let mut seen = vec![false; n];
        for it in &items {
            if it.tag >= n || seen[it.tag] {
                return Err(Error::InvalidInput(format!(
                    "tags must be a permutation of 0..{n}, found {}",
                    it.tag
                )));
            }
            seen[it.tag] = true;
        }
        Ok(Sequence { items })
    }

    pub(crate) fn from_items_unchecked(items: Vec<Item>) -> Self {
        Sequence { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn into_items(self) -> Vec<Item> {
        self.items
    }

    pub fn keys(&self) -> Vec<i64> {
        self.items.iter().map(|it| it.key).collect()
    }

    /// Parses the text format: one decimal integer per line, `#` starts a
    /// comment line, blank lines are skipped. Tags follow item order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut keys = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let key = line.parse::<i64>().map_err(|e| Error::Parse {
                line: lineno + 1,
                msg: format!("{line:?}: {e}"),
            })?;
            keys.push(key);
        }
        Ok(Sequence::from_keys(keys))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.items.len() * 8);
        for it in &self.items {
            writeln!(out, "{}", it.key).unwrap();
        }
        out
    }
}

impl From<Vec<i64>> for Sequence {
    fn from(keys: Vec<i64>) -> Self {
        Sequence::from_keys(keys)
    }
}

impl From<&[i64]> for Sequence {
    fn from(keys: &[i64]) -> Self {
        Sequence::from_keys(keys.iter().copied())
    }
}
