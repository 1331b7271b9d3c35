//! The end-to-end string problems and their classical baselines, with full
//! query accounting. Each entry point resets the table ledger so its final
//! snapshot is the cost of exactly one run.
//!
//! Boost bases follow the problem sizes: the single-sequence problems boost
//! with B = n, intersection with B = n + m. A `boost_base` override in the
//! config takes precedence.

use alloc::vec;
use alloc::vec::Vec;

use crate::avl::StringAvlTree;
use crate::compare::{Comparator, ComparatorConfig, CompareBackend};
use crate::grover::{BbhtSchedule, STATEVECTOR_DEFAULT_CAP};
use crate::heap::StringHeap;
use crate::oracle::{StrRef, StringTable};
use crate::trie::Trie;
use crate::Result;

/// Per-run configuration shared by all problem entry points.
#[derive(Copy, Clone, Debug)]
pub struct ProblemConfig {
    pub backend: CompareBackend,
    pub schedule: BbhtSchedule,
    /// Explicit boost base B; `None` derives it from the problem size.
    pub boost_base: Option<u32>,
    pub statevector_cap: usize,
    pub seed: u64,
}

impl ProblemConfig {
    pub fn classical() -> Self {
        ProblemConfig {
            backend: CompareBackend::ClassicalExact,
            schedule: BbhtSchedule::default(),
            boost_base: None,
            statevector_cap: STATEVECTOR_DEFAULT_CAP,
            seed: 0,
        }
    }

    pub fn quantum(seed: u64) -> Self {
        ProblemConfig {
            backend: CompareBackend::QuantumClosedForm,
            schedule: BbhtSchedule::default(),
            boost_base: None,
            statevector_cap: STATEVECTOR_DEFAULT_CAP,
            seed,
        }
    }

    /// Builds the comparator for a problem whose natural boost base is
    /// `derived_base` (clamped to the B ≥ 2 minimum).
    pub fn comparator(&self, derived_base: usize) -> Result<Comparator> {
        let base = self
            .boost_base
            .unwrap_or_else(|| (derived_base.max(2)).min(u32::MAX as usize) as u32);
        Comparator::new(
            ComparatorConfig {
                backend: self.backend,
                boost_base: base.max(2),
                schedule: self.schedule,
                statevector_cap: self.statevector_cap,
            },
            self.seed,
        )
    }
}

/// Answer to the most-frequent-string problem.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct MostFrequentResult {
    /// Index of the string whose occurrence count last exceeded the running
    /// maximum (1-based).
    pub i_max: usize,
    pub c_max: u64,
}

/// A claimed sorted order: a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderPermutation {
    pub indices: Vec<usize>,
}

/// Radix-sort answer plus the bucket-initialisation overhead `d·k` that the
/// classical complexity O((n+d)k) carries on top of its n·k reads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadixSortResult {
    pub order: OrderPermutation,
    pub alphabet_overhead: u64,
}

/// Most-frequent string via the multi-set tree: find-or-add each string,
/// increment its count, track the strict running maximum (which starts at
/// c = 1, i = 1, so ties resolve to the earliest string reaching the top
/// count).
pub fn most_frequent(table: &StringTable, cfg: &ProblemConfig) -> Result<MostFrequentResult> {
    table.ledger_reset();
    let n = table.string_count();
    let mut cmp = cfg.comparator(n)?;
    let mut tree: StringAvlTree<u64> = StringAvlTree::new();
    let mut c_max = 1u64;
    let mut i_max = 1usize;
    for i in 1..=n {
        let key = StrRef::s(i);
        let id = match tree.find(table, &mut cmp, key)? {
            Some(id) => id,
            None => tree.add(table, &mut cmp, key, 0)?.0,
        };
        let count = {
            let c = tree.value_mut(id);
            *c += 1;
            *c
        };
        if count > c_max {
            c_max = count;
            i_max = i;
        }
    }
    Ok(MostFrequentResult { i_max, c_max })
}

/// Classical baseline: insert every string into a trie (exactly n·k charged
/// reads), tracking counts at the terminal nodes with the same strict-max
/// update rule.
pub fn most_frequent_trie(table: &StringTable) -> Result<MostFrequentResult> {
    table.ledger_reset();
    let mut trie = Trie::new();
    let mut c_max = 1u64;
    let mut i_max = 1usize;
    for i in 1..=table.string_count() {
        let count = trie.insert(table, StrRef::s(i))?;
        if count > c_max {
            c_max = count;
            i_max = i;
        }
    }
    Ok(MostFrequentResult { i_max, c_max })
}

/// Heapsort: n adds followed by n get-min-and-deletes.
pub fn sort_strings(table: &StringTable, cfg: &ProblemConfig) -> Result<OrderPermutation> {
    table.ledger_reset();
    let n = table.string_count();
    let mut cmp = cfg.comparator(n)?;
    let mut heap = StringHeap::new();
    for i in 1..=n {
        heap.add(table, &mut cmp, StrRef::s(i))?;
    }
    let mut indices = Vec::with_capacity(n);
    for _ in 0..n {
        indices.push(heap.get_min_and_delete(table, &mut cmp)?.index);
    }
    Ok(OrderPermutation { indices })
}

/// Classical baseline: k stable counting-sort passes from the last position
/// to the first. Charges exactly n·k classical reads; the d-per-pass bucket
/// overhead is reported separately.
pub fn radix_sort(table: &StringTable) -> Result<RadixSortResult> {
    table.ledger_reset();
    let n = table.string_count();
    let k = table.string_len();
    let d = table.alphabet_size() as usize;
    let mut order: Vec<usize> = (1..=n).collect();
    let mut keys = vec![0usize; n];
    for j in (1..=k).rev() {
        for (slot, &i) in keys.iter_mut().zip(order.iter()) {
            *slot = table.read_symbol(StrRef::s(i), j)?.0 as usize;
        }
        let mut starts = vec![0usize; d + 1];
        for &key in &keys {
            starts[key + 1] += 1;
        }
        for b in 0..d {
            starts[b + 1] += starts[b];
        }
        let mut next = vec![0usize; n];
        for (&key, &i) in keys.iter().zip(order.iter()) {
            next[starts[key]] = i;
            starts[key] += 1;
        }
        order = next;
    }
    Ok(RadixSortResult {
        order: OrderPermutation { indices: order },
        alphabet_overhead: (d as u64) * (k as u64),
    })
}

/// Intersection via the set tree: build from `s`, answer each request with a
/// find, strictly one request at a time. Boost base n + m.
pub fn intersect_via_tree(table: &StringTable, cfg: &ProblemConfig) -> Result<Vec<bool>> {
    table.ledger_reset();
    let n = table.string_count();
    let m = table.request_count();
    let mut cmp = cfg.comparator(n + m)?;
    let mut tree: StringAvlTree<()> = StringAvlTree::new();
    for i in 1..=n {
        tree.add(table, &mut cmp, StrRef::s(i), ())?;
    }
    let mut bits = Vec::with_capacity(m);
    for i in 1..=m {
        bits.push(tree.find(table, &mut cmp, StrRef::t(i))?.is_some());
    }
    Ok(bits)
}

/// Intersection via sorting: heapsort `s` once, then binary-search every
/// request in the sorted order. Boost base n + m throughout.
pub fn intersect_via_sort(table: &StringTable, cfg: &ProblemConfig) -> Result<Vec<bool>> {
    table.ledger_reset();
    let n = table.string_count();
    let m = table.request_count();
    let mut cmp = cfg.comparator(n + m)?;
    let mut heap = StringHeap::new();
    for i in 1..=n {
        heap.add(table, &mut cmp, StrRef::s(i))?;
    }
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        order.push(heap.get_min_and_delete(table, &mut cmp)?.index);
    }
    let mut bits = Vec::with_capacity(m);
    for i in 1..=m {
        bits.push(binary_search_contains(
            table,
            &mut cmp,
            &order,
            StrRef::t(i),
        )?);
    }
    Ok(bits)
}

/// Lower-bound binary search with the equality test fused in: a comparison
/// returning 0 answers immediately, so the search costs at most
/// ⌈log₂ n⌉ + 1 comparisons and a single one when n = 1.
fn binary_search_contains(
    table: &StringTable,
    cmp: &mut Comparator,
    order: &[usize],
    request: StrRef,
) -> Result<bool> {
    let mut lo = 0usize;
    let mut hi = order.len();
    while lo < hi {
        let mid = (lo + hi) / 2;
        let outcome = cmp.compare(table, StrRef::s(order[mid]), request)?;
        match outcome.sign {
            0 => return Ok(true),
            s if s < 0 => lo = mid + 1,
            _ => hi = mid,
        }
    }
    Ok(false)
}

/// Classical baseline: trie of `s` (n·k reads), then each request walks down
/// reading at most k symbols.
pub fn intersect_trie(table: &StringTable) -> Result<Vec<bool>> {
    table.ledger_reset();
    let mut trie = Trie::new();
    for i in 1..=table.string_count() {
        trie.insert(table, StrRef::s(i))?;
    }
    let mut bits = Vec::with_capacity(table.request_count());
    for i in 1..=table.request_count() {
        bits.push(trie.contains(table, StrRef::t(i))?);
    }
    Ok(bits)
}
