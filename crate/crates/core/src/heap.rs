//! Binary min-heap of oracle strings, ordered by the comparator.

use alloc::vec::Vec;

use crate::compare::Comparator;
use crate::oracle::{StrRef, StringTable};
use crate::{Error, Result};

/// Min-heap over string handles; the root is the lexicographically smallest
/// string as judged by the comparator.
#[derive(Debug, Default)]
pub struct StringHeap {
    items: Vec<StrRef>,
}

impl StringHeap {
    pub fn new() -> Self {
        StringHeap { items: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Pushes a string and sifts it up: at most ⌈log₂ t⌉ comparisons for
    /// heap size t.
    pub fn add(&mut self, table: &StringTable, cmp: &mut Comparator, item: StrRef) -> Result<()> {
        self.items.push(item);
        let mut idx = self.items.len() - 1;
        while idx > 0 {
            let parent = (idx - 1) / 2;
            let outcome = cmp.compare(table, self.items[idx], self.items[parent])?;
            if outcome.sign < 0 {
                self.items.swap(idx, parent);
                idx = parent;
            } else {
                break;
            }
        }
        Ok(())
    }

    /// Removes and returns the minimum; `EmptyHeap` if there is none.
    /// Sifting down costs at most two comparisons per level.
    pub fn get_min_and_delete(
        &mut self,
        table: &StringTable,
        cmp: &mut Comparator,
    ) -> Result<StrRef> {
        if self.items.is_empty() {
            return Err(Error::EmptyHeap);
        }
        let last = self.items.len() - 1;
        self.items.swap(0, last);
        let min = self.items.pop().expect("non-empty checked above");
        let mut idx = 0usize;
        loop {
            let left = 2 * idx + 1;
            let right = left + 1;
            if left >= self.items.len() {
                break;
            }
            let smaller = if right < self.items.len() {
                let lr = cmp.compare(table, self.items[left], self.items[right])?;
                if lr.sign <= 0 {
                    left
                } else {
                    right
                }
            } else {
                left
            };
            let outcome = cmp.compare(table, self.items[smaller], self.items[idx])?;
            if outcome.sign < 0 {
                self.items.swap(smaller, idx);
                idx = smaller;
            } else {
                break;
            }
        }
        Ok(min)
    }
}
