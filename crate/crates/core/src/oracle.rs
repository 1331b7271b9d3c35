//! The charged black-box string oracle.
//!
//! A [`StringTable`] holds one sequence `s` of `n` strings (and optionally a
//! second sequence `t` of `m` request strings), all of length `k` over an
//! integer alphabet of size `d`. Algorithm code may inspect symbols only
//! through [`StringTable::read_symbol`] / [`StringTable::verification_read`],
//! each of which charges exactly one unit to the table's [`QueryLedger`].
//!
//! [`StringTable::uncharged_scan`] is the simulator backdoor: the quantum
//! backends use it to learn which positions are marked, because that
//! knowledge models a unitary the simulator evaluates, not queries made by
//! the algorithm. Referee code (ground truth, report digests) uses it too.
//! Algorithm code must never call it.
//!
//! Positions and string indices are 1-based throughout the public surface.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::Cell;
use core::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// One symbol of the input alphabet. Ordering is code-point order, which is
/// also the order used for lexicographic string comparison.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SymbolId(pub u32);

/// Which stored sequence a string handle refers to.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Seq {
    /// The main sequence `s` of `n` strings.
    S,
    /// The request sequence `t` of `m` strings.
    T,
}

/// Handle to one string of the table: a sequence plus a 1-based index.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct StrRef {
    pub seq: Seq,
    pub index: usize,
}

impl StrRef {
    pub fn s(index: usize) -> Self {
        StrRef { seq: Seq::S, index }
    }

    pub fn t(index: usize) -> Self {
        StrRef { seq: Seq::T, index }
    }
}

/// Monotone counters for the three charge categories.
///
/// Interior mutability keeps the charging methods callable through shared
/// references; a table (and thus its ledger) is confined to a single
/// experiment run, so this is not shared across threads.
#[derive(Debug, Default)]
pub struct QueryLedger {
    classical_reads: Cell<u64>,
    quantum_oracle_calls: Cell<u64>,
    verification_reads: Cell<u64>,
}

/// A point-in-time copy of the ledger counters.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub struct LedgerCounts {
    pub classical_reads: u64,
    pub quantum_oracle_calls: u64,
    pub verification_reads: u64,
}

impl LedgerCounts {
    pub fn total(&self) -> u64 {
        self.classical_reads + self.quantum_oracle_calls + self.verification_reads
    }

    /// Counter-wise difference against an earlier snapshot.
    pub fn since(&self, earlier: LedgerCounts) -> LedgerCounts {
        LedgerCounts {
            classical_reads: self.classical_reads - earlier.classical_reads,
            quantum_oracle_calls: self.quantum_oracle_calls - earlier.quantum_oracle_calls,
            verification_reads: self.verification_reads - earlier.verification_reads,
        }
    }
}

impl QueryLedger {
    pub fn snapshot(&self) -> LedgerCounts {
        LedgerCounts {
            classical_reads: self.classical_reads.get(),
            quantum_oracle_calls: self.quantum_oracle_calls.get(),
            verification_reads: self.verification_reads.get(),
        }
    }

    pub fn reset(&self) {
        self.classical_reads.set(0);
        self.quantum_oracle_calls.set(0);
        self.verification_reads.set(0);
    }

    pub(crate) fn charge_classical(&self, units: u64) {
        self.classical_reads.set(self.classical_reads.get() + units);
    }

    pub(crate) fn charge_quantum(&self, units: u64) {
        self.quantum_oracle_calls
            .set(self.quantum_oracle_calls.get() + units);
    }

    pub(crate) fn charge_verification(&self, units: u64) {
        self.verification_reads
            .set(self.verification_reads.get() + units);
    }
}

/// How [`StringTable::generate`] fills the cells.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Distribution {
    /// Every cell i.i.d. uniform over the alphabet.
    Uniform,
    /// All strings share one random prefix; only the last `tail` positions
    /// are i.i.d. uniform. `tail = 0` makes every string identical. Forces
    /// comparisons to probe deep positions, which is what the √k-scaling
    /// sweeps need.
    SharedPrefix { tail: usize },
    /// String 1 is a random base row; every other string equals the base
    /// except at `position` (1-based), where it carries a different symbol.
    /// With `n = 2` this is the worst case for a single comparison.
    MismatchAt { position: usize },
}

/// Parameters for [`StringTable::generate`].
#[derive(Copy, Clone, Debug)]
pub struct GenSpec {
    pub n: usize,
    /// Number of request strings; 0 means no `t` sequence.
    pub m: usize,
    pub k: usize,
    pub alphabet: u32,
    pub seed: u64,
    pub distribution: Distribution,
}

/// The black-box input: `n` (+ optionally `m`) fixed-length strings behind a
/// charged query interface.
#[derive(Debug)]
pub struct StringTable {
    k: usize,
    alphabet: u32,
    n: usize,
    s_cells: Vec<SymbolId>,
    m: usize,
    t_cells: Vec<SymbolId>,
    ledger: QueryLedger,
}

impl StringTable {
    /// Builds a table from explicit rows. With `alphabet = None` the size is
    /// inferred as `max symbol + 1`.
    pub fn from_rows(rows: &[Vec<u32>], alphabet: Option<u32>) -> Result<Self> {
        let (cells, k) = Self::flatten(rows, None)?;
        let d = match alphabet {
            Some(d) => d,
            None => cells.iter().map(|c| c.0).max().unwrap_or(0) + 1,
        };
        let table = StringTable {
            k,
            alphabet: d,
            n: rows.len(),
            s_cells: cells,
            m: 0,
            t_cells: Vec::new(),
            ledger: QueryLedger::default(),
        };
        table.check_alphabet()?;
        Ok(table)
    }

    /// Attaches the request sequence `t`. Request strings must have the same
    /// length `k` as the main sequence. The alphabet grows to cover any new
    /// request symbols (it is the union alphabet of both sequences).
    pub fn with_requests(mut self, rows: &[Vec<u32>]) -> Result<Self> {
        let (cells, _) = Self::flatten(rows, Some(self.k))?;
        self.m = rows.len();
        if let Some(max) = cells.iter().map(|c| c.0).max() {
            self.alphabet = self.alphabet.max(max + 1);
        }
        self.t_cells = cells;
        self.check_alphabet()?;
        Ok(self)
    }

    /// Parses UTF-8 text, one string per line, all lines equal length.
    /// Symbols are Unicode code points; the alphabet size is the maximum
    /// code point + 1.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows: Vec<Vec<u32>> = text
            .lines()
            .filter(|l| !l.is_empty())
            .map(|l| l.chars().map(|c| c as u32).collect())
            .collect();
        Self::from_rows(&rows, None)
    }

    /// Deterministically generates a table from a seed. Identical spec,
    /// identical table.
    pub fn generate(spec: &GenSpec) -> Result<Self> {
        if spec.n == 0 {
            return Err(Error::EmptyInput("string count n"));
        }
        if spec.k == 0 {
            return Err(Error::EmptyInput("string length k"));
        }
        if spec.alphabet < 2 {
            return Err(Error::InvalidConfig("alphabet size must be at least 2"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        let d = spec.alphabet;
        let k = spec.k;

        let uniform_row =
            |rng: &mut ChaCha8Rng| -> Vec<u32> { (0..k).map(|_| rng.gen_range(0..d)).collect() };

        let rows: Vec<Vec<u32>> = match spec.distribution {
            Distribution::Uniform => (0..spec.n).map(|_| uniform_row(&mut rng)).collect(),
            Distribution::SharedPrefix { tail } => {
                if tail > k {
                    return Err(Error::InvalidConfig("shared-prefix tail exceeds k"));
                }
                let prefix = uniform_row(&mut rng);
                (0..spec.n)
                    .map(|_| {
                        let mut row = prefix.clone();
                        for cell in row.iter_mut().skip(k - tail) {
                            *cell = rng.gen_range(0..d);
                        }
                        row
                    })
                    .collect()
            }
            Distribution::MismatchAt { position } => {
                if position == 0 || position > k {
                    return Err(Error::IndexOutOfRange {
                        what: "mismatch position",
                        got: position,
                        limit: k,
                    });
                }
                let base = uniform_row(&mut rng);
                (0..spec.n)
                    .map(|i| {
                        let mut row = base.clone();
                        if i > 0 {
                            let offset = 1 + ((i as u32 - 1) % (d - 1));
                            row[position - 1] = (base[position - 1] + offset) % d;
                        }
                        row
                    })
                    .collect()
            }
        };

        let table = Self::from_rows(&rows, Some(d))?;
        if spec.m == 0 {
            return Ok(table);
        }

        // Requests: half copy a random member of s (guaranteed hits), half
        // are fresh rows from the same family (usually misses). Drawn from
        // the same RNG stream, after the s rows.
        let t_rows: Vec<Vec<u32>> = (0..spec.m)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    let source = rng.gen_range(0..spec.n);
                    rows[source].clone()
                } else {
                    match spec.distribution {
                        Distribution::Uniform => uniform_row(&mut rng),
                        Distribution::SharedPrefix { tail } => {
                            let mut row = rows[0].clone();
                            for cell in row.iter_mut().skip(k - tail) {
                                *cell = rng.gen_range(0..d);
                            }
                            row
                        }
                        Distribution::MismatchAt { position } => {
                            let mut row = rows[0].clone();
                            row[position - 1] = rng.gen_range(0..d);
                            row
                        }
                    }
                }
            })
            .collect();
        table.with_requests(&t_rows)
    }

    fn flatten(rows: &[Vec<u32>], expect_k: Option<usize>) -> Result<(Vec<SymbolId>, usize)> {
        if rows.is_empty() {
            return Err(Error::EmptyInput("string sequence"));
        }
        let k = expect_k.unwrap_or(rows[0].len());
        if k == 0 {
            return Err(Error::EmptyInput("string length k"));
        }
        let mut cells = Vec::with_capacity(rows.len() * k);
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::RaggedLengths {
                    line: idx + 1,
                    expected: k,
                    got: row.len(),
                });
            }
            cells.extend(row.iter().map(|&c| SymbolId(c)));
        }
        Ok((cells, k))
    }

    fn check_alphabet(&self) -> Result<()> {
        for cell in self.s_cells.iter().chain(self.t_cells.iter()) {
            if cell.0 >= self.alphabet {
                return Err(Error::SymbolOutOfAlphabet {
                    symbol: cell.0,
                    alphabet: self.alphabet,
                });
            }
        }
        Ok(())
    }

    pub fn string_count(&self) -> usize {
        self.n
    }

    pub fn request_count(&self) -> usize {
        self.m
    }

    pub fn has_requests(&self) -> bool {
        self.m > 0
    }

    pub fn string_len(&self) -> usize {
        self.k
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet
    }

    fn seq_len(&self, seq: Seq) -> usize {
        match seq {
            Seq::S => self.n,
            Seq::T => self.m,
        }
    }

    fn cell(&self, r: StrRef, j: usize) -> Result<SymbolId> {
        let len = self.seq_len(r.seq);
        if r.index == 0 || r.index > len {
            return Err(Error::IndexOutOfRange {
                what: "string index",
                got: r.index,
                limit: len,
            });
        }
        if j == 0 || j > self.k {
            return Err(Error::IndexOutOfRange {
                what: "position",
                got: j,
                limit: self.k,
            });
        }
        let cells = match r.seq {
            Seq::S => &self.s_cells,
            Seq::T => &self.t_cells,
        };
        Ok(cells[(r.index - 1) * self.k + (j - 1)])
    }

    /// Reads one symbol, charging one `classical_reads` unit.
    pub fn read_symbol(&self, r: StrRef, j: usize) -> Result<SymbolId> {
        let sym = self.cell(r, j)?;
        self.ledger.charge_classical(1);
        Ok(sym)
    }

    /// Reads one symbol as a post-measurement check, charging one
    /// `verification_reads` unit.
    pub fn verification_read(&self, r: StrRef, j: usize) -> Result<SymbolId> {
        let sym = self.cell(r, j)?;
        self.ledger.charge_verification(1);
        Ok(sym)
    }

    /// Uncharged access to a span of one string (`positions` is 1-based,
    /// inclusive; an empty range yields an empty slice).
    ///
    /// Simulator/referee backdoor — never call this from algorithm code.
    pub fn uncharged_scan(
        &self,
        r: StrRef,
        positions: RangeInclusive<usize>,
    ) -> Result<&[SymbolId]> {
        let (start, end) = (*positions.start(), *positions.end());
        if start > end {
            return Ok(&[]);
        }
        let len = self.seq_len(r.seq);
        if r.index == 0 || r.index > len {
            return Err(Error::IndexOutOfRange {
                what: "string index",
                got: r.index,
                limit: len,
            });
        }
        if start == 0 || end > self.k {
            return Err(Error::IndexOutOfRange {
                what: "position",
                got: if start == 0 { start } else { end },
                limit: self.k,
            });
        }
        let cells = match r.seq {
            Seq::S => &self.s_cells,
            Seq::T => &self.t_cells,
        };
        let base = (r.index - 1) * self.k;
        Ok(&cells[base + start - 1..base + end])
    }

    /// Whole-string uncharged access; same backdoor status as
    /// [`Self::uncharged_scan`].
    pub fn row_uncharged(&self, r: StrRef) -> Result<&[SymbolId]> {
        self.uncharged_scan(r, 1..=self.k)
    }

    pub fn ledger(&self) -> &QueryLedger {
        &self.ledger
    }

    pub fn ledger_snapshot(&self) -> LedgerCounts {
        self.ledger.snapshot()
    }

    pub fn ledger_reset(&self) {
        self.ledger.reset();
    }
}

/// Builds the standard worst-case pair table: two strings over `{0,1}` that
/// are equal everywhere except at `mismatch` (1-based). With `mismatch = 0`
/// the strings are identical.
pub fn worst_case_pair(k: usize, mismatch: usize) -> Result<StringTable> {
    if mismatch > k {
        return Err(Error::IndexOutOfRange {
            what: "mismatch position",
            got: mismatch,
            limit: k,
        });
    }
    let a = vec![0u32; k];
    let mut b = vec![0u32; k];
    if mismatch > 0 {
        b[mismatch - 1] = 1;
    }
    StringTable::from_rows(&[a, b], Some(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_by_two() -> StringTable {
        StringTable::parse_text("ab\nba\n").unwrap()
    }

    #[test]
    fn parse_text_dimensions() {
        let t = two_by_two();
        assert_eq!(t.string_count(), 2);
        assert_eq!(t.string_len(), 2);
        assert_eq!(t.alphabet_size(), 'b' as u32 + 1);
    }

    #[test]
    fn read_symbol_charges_one_classical_read() {
        let t = two_by_two();
        let sym = t.read_symbol(StrRef::s(1), 1).unwrap();
        assert_eq!(sym, SymbolId('a' as u32));
        let counts = t.ledger_snapshot();
        assert_eq!(counts.classical_reads, 1);
        assert_eq!(counts.quantum_oracle_calls, 0);
        assert_eq!(counts.verification_reads, 0);
    }

    #[test]
    fn read_out_of_range_is_an_error() {
        let t = two_by_two();
        assert!(matches!(
            t.read_symbol(StrRef::s(1), 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            t.read_symbol(StrRef::s(3), 1),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            t.read_symbol(StrRef::s(0), 1),
            Err(Error::IndexOutOfRange { .. })
        ));
        // Failed reads charge nothing.
        assert_eq!(t.ledger_snapshot().total(), 0);
    }

    #[test]
    fn counters_are_additive() {
        let t = two_by_two();
        for _ in 0..16 {
            t.read_symbol(StrRef::s(2), 2).unwrap();
        }
        assert_eq!(t.ledger_snapshot().classical_reads, 16);
    }

    #[test]
    fn each_charged_access_bumps_exactly_one_counter() {
        let t = two_by_two();
        let before = t.ledger_snapshot();
        t.read_symbol(StrRef::s(1), 1).unwrap();
        let mid = t.ledger_snapshot();
        assert_eq!(mid.since(before).total(), 1);
        assert_eq!(mid.since(before).classical_reads, 1);
        t.verification_read(StrRef::s(1), 2).unwrap();
        let after = t.ledger_snapshot();
        assert_eq!(after.since(mid).total(), 1);
        assert_eq!(after.since(mid).verification_reads, 1);
    }

    #[test]
    fn uncharged_scan_never_touches_the_ledger() {
        let t = two_by_two();
        let row = t.uncharged_scan(StrRef::s(1), 1..=2).unwrap();
        assert_eq!(row, &[SymbolId('a' as u32), SymbolId('b' as u32)]);
        t.read_symbol(StrRef::s(1), 1).unwrap();
        assert_eq!(t.ledger_snapshot().classical_reads, 1);
        assert_eq!(t.ledger_snapshot().total(), 1);
    }

    #[test]
    fn uncharged_scan_empty_range() {
        let t = two_by_two();
        #[allow(clippy::reversed_empty_ranges)]
        let empty = t.uncharged_scan(StrRef::s(1), 1..=0).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn snapshot_and_reset() {
        let t = two_by_two();
        t.ledger_reset();
        assert_eq!(t.ledger_snapshot(), LedgerCounts::default());
        t.read_symbol(StrRef::s(1), 1).unwrap();
        t.read_symbol(StrRef::s(1), 2).unwrap();
        t.read_symbol(StrRef::s(2), 1).unwrap();
        let snap = t.ledger_snapshot();
        assert_eq!(snap.classical_reads, 3);
        assert_eq!(snap, t.ledger_snapshot());
        t.ledger_reset();
        assert_eq!(t.ledger_snapshot().total(), 0);
    }

    #[test]
    fn ragged_input_is_a_format_error() {
        assert!(matches!(
            StringTable::parse_text("ab\nabc\n"),
            Err(Error::RaggedLengths {
                line: 2,
                expected: 2,
                got: 3
            })
        ));
    }

    #[test]
    fn symbol_outside_declared_alphabet() {
        let rows = [vec![0, 5]];
        assert!(matches!(
            StringTable::from_rows(&rows, Some(4)),
            Err(Error::SymbolOutOfAlphabet {
                symbol: 5,
                alphabet: 4
            })
        ));
    }

    #[test]
    fn generate_is_deterministic() {
        let spec = GenSpec {
            n: 4,
            m: 0,
            k: 8,
            alphabet: 2,
            seed: 7,
            distribution: Distribution::Uniform,
        };
        let a = StringTable::generate(&spec).unwrap();
        let b = StringTable::generate(&spec).unwrap();
        for i in 1..=4 {
            assert_eq!(
                a.row_uncharged(StrRef::s(i)).unwrap(),
                b.row_uncharged(StrRef::s(i)).unwrap()
            );
        }
    }

    #[test]
    fn generate_mismatch_at_places_single_diff() {
        let spec = GenSpec {
            n: 2,
            m: 0,
            k: 16,
            alphabet: 4,
            seed: 11,
            distribution: Distribution::MismatchAt { position: 16 },
        };
        let t = StringTable::generate(&spec).unwrap();
        let a = t.row_uncharged(StrRef::s(1)).unwrap();
        let b = t.row_uncharged(StrRef::s(2)).unwrap();
        assert_eq!(&a[..15], &b[..15]);
        assert_ne!(a[15], b[15]);
    }

    #[test]
    fn generate_shared_prefix_only_varies_tail() {
        let spec = GenSpec {
            n: 6,
            m: 0,
            k: 12,
            alphabet: 3,
            seed: 3,
            distribution: Distribution::SharedPrefix { tail: 2 },
        };
        let t = StringTable::generate(&spec).unwrap();
        let first = t.row_uncharged(StrRef::s(1)).unwrap().to_vec();
        for i in 2..=6 {
            let row = t.row_uncharged(StrRef::s(i)).unwrap();
            assert_eq!(&row[..10], &first[..10]);
        }
    }

    #[test]
    fn generate_with_requests_shares_length() {
        let spec = GenSpec {
            n: 8,
            m: 5,
            k: 6,
            alphabet: 2,
            seed: 21,
            distribution: Distribution::Uniform,
        };
        let t = StringTable::generate(&spec).unwrap();
        assert_eq!(t.request_count(), 5);
        assert!(t.has_requests());
        assert_eq!(t.row_uncharged(StrRef::t(5)).unwrap().len(), 6);
    }

    #[test]
    fn worst_case_pair_shape() {
        let t = worst_case_pair(8, 8).unwrap();
        let a = t.row_uncharged(StrRef::s(1)).unwrap();
        let b = t.row_uncharged(StrRef::s(2)).unwrap();
        assert_eq!(&a[..7], &b[..7]);
        assert!(a[7] < b[7]);
    }
}
