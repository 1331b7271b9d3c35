//! Prefix tree over oracle strings — the classical baseline container.
//!
//! Every symbol inspected during an insert or lookup is a charged classical
//! read, so inserting a string costs exactly k reads and a lookup costs at
//! most k (walks stop at the first missing branch).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::oracle::{StrRef, StringTable, SymbolId};
use crate::Result;

#[derive(Debug, Default)]
struct TrieNode {
    children: BTreeMap<SymbolId, usize>,
    /// Number of inserted strings terminating at this node (depth k only).
    count: u64,
}

#[derive(Debug)]
pub struct Trie {
    nodes: Vec<TrieNode>,
}

impl Default for Trie {
    fn default() -> Self {
        Self::new()
    }
}

impl Trie {
    pub fn new() -> Self {
        Trie {
            nodes: alloc::vec![TrieNode::default()],
        }
    }

    /// Inserts one whole string (k charged reads) and returns its occurrence
    /// count after the insert.
    pub fn insert(&mut self, table: &StringTable, r: StrRef) -> Result<u64> {
        let mut node = 0usize;
        for j in 1..=table.string_len() {
            let sym = table.read_symbol(r, j)?;
            node = match self.nodes[node].children.get(&sym) {
                Some(&child) => child,
                None => {
                    self.nodes.push(TrieNode::default());
                    let fresh = self.nodes.len() - 1;
                    self.nodes[node].children.insert(sym, fresh);
                    fresh
                }
            };
        }
        self.nodes[node].count += 1;
        Ok(self.nodes[node].count)
    }

    /// Walks down along the request string, reading its symbols one at a
    /// time; answers whether the full string was inserted.
    pub fn contains(&self, table: &StringTable, r: StrRef) -> Result<bool> {
        let mut node = 0usize;
        for j in 1..=table.string_len() {
            let sym = table.read_symbol(r, j)?;
            match self.nodes[node].children.get(&sym) {
                Some(&child) => node = child,
                None => return Ok(false),
            }
        }
        Ok(self.nodes[node].count > 0)
    }
}
