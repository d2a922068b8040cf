use crate::item::Item;
use crate::meter::Meter;

/// The three groups of a stable partition, each in input order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partition {
    pub less: Vec<Item>,
    pub equal: Vec<Item>,
    pub greater: Vec<Item>,
}

/// Splits `items` around `pivot` into `< pivot`, `== pivot` and `> pivot`
/// groups, preserving input order inside each group.
///
/// Each item costs one comparison if it is smaller than the pivot and two
/// otherwise, so at most `2n` in total.
pub fn stable_three_way_partition(items: &[Item], pivot: i64, m: &mut Meter) -> Partition {
    let mut p = Partition {
        less: Vec::with_capacity(items.len() / 2),
        equal: Vec::new(),
        greater: Vec::with_capacity(items.len() / 2),
    };
    for it in items {
        if m.less_than_key(it, pivot) {
            p.less.push(*it);
        } else if m.key_less_than(pivot, it) {
            p.greater.push(*it);
        } else {
            p.equal.push(*it);
        }
    }
    m.add_moves(items.len() as u64);
    p
}
