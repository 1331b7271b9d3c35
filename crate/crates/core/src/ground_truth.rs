//! Uncharged referee implementations.
//!
//! Brute-force answers computed directly from the table cells, used to judge
//! algorithm outputs in tests, reports and sweeps. Deliberately independent
//! of the comparator, the containers and the search machinery: everything
//! here is plain scanning, counting and slice comparison.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::oracle::{StrRef, StringTable, SymbolId};
use crate::Result;

fn s_rows(table: &StringTable) -> Result<Vec<&[SymbolId]>> {
    (1..=table.string_count())
        .map(|i| table.row_uncharged(StrRef::s(i)))
        .collect()
}

/// Highest occurrence count of any string value in `s`.
pub fn mode_max_count(table: &StringTable) -> Result<u64> {
    let mut counts: BTreeMap<&[SymbolId], u64> = BTreeMap::new();
    for row in s_rows(table)? {
        *counts.entry(row).or_insert(0) += 1;
    }
    Ok(counts.values().copied().max().unwrap_or(0))
}

/// Occurrences of the content of string `r` within `s`.
pub fn count_of(table: &StringTable, r: StrRef) -> Result<u64> {
    let needle = table.row_uncharged(r)?;
    Ok(s_rows(table)?
        .into_iter()
        .filter(|row| *row == needle)
        .count() as u64)
}

/// Does a claimed most-frequent answer agree with the truth? The claimed
/// string's true count must equal the true maximum, and the claimed count
/// must be that maximum.
pub fn mode_agrees(table: &StringTable, i_max: usize, c_max: u64) -> Result<bool> {
    let max = mode_max_count(table)?;
    Ok(c_max == max && count_of(table, StrRef::s(i_max))? == max)
}

/// Stable sort of string indices `1..=n` by content — the referee ordering.
pub fn stable_sorted_order(table: &StringTable) -> Result<Vec<usize>> {
    let rows = s_rows(table)?;
    let mut order: Vec<usize> = (1..=table.string_count()).collect();
    order.sort_by(|&a, &b| rows[a - 1].cmp(rows[b - 1]));
    Ok(order)
}

/// Is `order` a permutation of `1..=n` listing the strings in non-decreasing
/// lexicographic order?
pub fn is_sorted_order(table: &StringTable, order: &[usize]) -> Result<bool> {
    let n = table.string_count();
    if order.len() != n {
        return Ok(false);
    }
    let mut seen = alloc::vec![false; n + 1];
    for &i in order {
        if i == 0 || i > n || seen[i] {
            return Ok(false);
        }
        seen[i] = true;
    }
    let rows = s_rows(table)?;
    Ok(order.windows(2).all(|w| rows[w[0] - 1] <= rows[w[1] - 1]))
}

/// Membership bit for every request: `bit_i = 1` iff `t^i` occurs in `s`.
pub fn intersection_bits(table: &StringTable) -> Result<Vec<bool>> {
    let members: BTreeSet<&[SymbolId]> = s_rows(table)?.into_iter().collect();
    (1..=table.request_count())
        .map(|i| Ok(members.contains(table.row_uncharged(StrRef::t(i))?)))
        .collect()
}
