//! Boosted lexicographic comparison of two oracle strings.
//!
//! The quantum backends locate the first differing position j₀ with repeated
//! [`first_one_search`] calls and take the minimum — `3·⌈log₂ B⌉ + 1` runs
//! for boost base B, driving the per-comparison error under B⁻³. The sign is
//! then read off the two symbols at j₀ with charged verification reads. The
//! `ClassicalExact` backend scans from the left instead and doubles as the
//! deterministic referee.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grover::{
    first_one_search, BbhtSchedule, GroverVariant, Predicate, STATEVECTOR_DEFAULT_CAP,
};
use crate::oracle::{QueryLedger, StrRef, StringTable};
use crate::{Error, Result};

/// Which machinery drives a comparison.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CompareBackend {
    /// Left-to-right charged scan; exact, deterministic.
    ClassicalExact,
    /// First-one search with closed-form Grover sampling (default).
    QuantumClosedForm,
    /// First-one search with full statevector sampling (cross-validation).
    QuantumStatevector,
}

/// Comparator configuration. `boost_base` is the problem-size parameter B:
/// n for the single-sequence problems, n+m for intersection.
#[derive(Copy, Clone, Debug)]
pub struct ComparatorConfig {
    pub backend: CompareBackend,
    pub boost_base: u32,
    pub schedule: BbhtSchedule,
    pub statevector_cap: usize,
}

impl ComparatorConfig {
    pub fn classical() -> Self {
        ComparatorConfig {
            backend: CompareBackend::ClassicalExact,
            boost_base: 2,
            schedule: BbhtSchedule::default(),
            statevector_cap: STATEVECTOR_DEFAULT_CAP,
        }
    }

    pub fn quantum(boost_base: u32) -> Self {
        ComparatorConfig {
            backend: CompareBackend::QuantumClosedForm,
            boost_base,
            schedule: BbhtSchedule::default(),
            statevector_cap: STATEVECTOR_DEFAULT_CAP,
        }
    }

    /// Number of first-one-search runs per comparison: one initial call plus
    /// `3·⌈log₂ B⌉` boosting repetitions.
    pub fn repetitions(&self) -> u32 {
        3 * ceil_log2(self.boost_base) + 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.boost_base < 2 {
            return Err(Error::InvalidConfig("boost base B must be at least 2"));
        }
        self.schedule.validate()?;
        if self.statevector_cap == 0 {
            return Err(Error::InvalidConfig("statevector cap must be positive"));
        }
        Ok(())
    }

    fn variant(&self) -> GroverVariant {
        match self.backend {
            CompareBackend::QuantumStatevector => GroverVariant::Statevector {
                max_dimension: self.statevector_cap,
            },
            _ => GroverVariant::ClosedForm,
        }
    }
}

fn ceil_log2(x: u32) -> u32 {
    x.next_power_of_two().trailing_zeros()
}

/// Three-valued comparison result plus its observed first-mismatch position
/// and charge.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct CompareOutcome {
    /// −1 if a < b, 0 if judged equal, +1 if a > b.
    pub sign: i8,
    /// First differing position found, or `k + 1` when judged equal.
    pub j0_observed: usize,
    /// Ledger growth (all categories) during this comparison.
    pub queries_charged: u64,
}

/// The marker function f(j) = (a_j ≠ b_j) over positions `1..=k` of a string
/// pair. The mismatch set is collected once with uncharged scans (simulator
/// knowledge); verifications read both symbols with charged reads.
pub struct MismatchPredicate<'a> {
    table: &'a StringTable,
    a: StrRef,
    b: StrRef,
    mismatches: Vec<usize>,
}

impl<'a> MismatchPredicate<'a> {
    pub fn new(table: &'a StringTable, a: StrRef, b: StrRef) -> Result<Self> {
        let k = table.string_len();
        let row_a = table.uncharged_scan(a, 1..=k)?;
        let row_b = table.uncharged_scan(b, 1..=k)?;
        let mismatches = row_a
            .iter()
            .zip(row_b.iter())
            .enumerate()
            .filter(|(_, (x, y))| x != y)
            .map(|(idx, _)| idx + 1)
            .collect();
        Ok(MismatchPredicate {
            table,
            a,
            b,
            mismatches,
        })
    }
}

impl Predicate for MismatchPredicate<'_> {
    fn len(&self) -> usize {
        self.table.string_len()
    }

    fn marked_positions(&self) -> &[usize] {
        &self.mismatches
    }

    fn verify(&self, j: usize) -> bool {
        let x = self.table.verification_read(self.a, j);
        let y = self.table.verification_read(self.b, j);
        match (x, y) {
            (Ok(x), Ok(y)) => x != y,
            _ => false,
        }
    }

    fn ledger(&self) -> &QueryLedger {
        self.table.ledger()
    }
}

/// A configured comparator owning one seeded RNG stream. Randomness is
/// consumed strictly in subroutine call order, so a fixed seed reproduces
/// every comparison of an experiment.
pub struct Comparator {
    config: ComparatorConfig,
    rng: ChaCha8Rng,
    comparisons: u64,
}

impl Comparator {
    pub fn new(config: ComparatorConfig, seed: u64) -> Result<Self> {
        Self::from_rng(config, ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn from_rng(config: ComparatorConfig, rng: ChaCha8Rng) -> Result<Self> {
        config.validate()?;
        Ok(Comparator {
            config,
            rng,
            comparisons: 0,
        })
    }

    pub fn config(&self) -> &ComparatorConfig {
        &self.config
    }

    /// Total `compare` invocations so far (for comparison-count bounds).
    pub fn comparisons(&self) -> u64 {
        self.comparisons
    }

    /// Compares two oracle strings in lexicographic order.
    pub fn compare(&mut self, table: &StringTable, a: StrRef, b: StrRef) -> Result<CompareOutcome> {
        self.comparisons += 1;
        let before = table.ledger_snapshot();
        let k = table.string_len();

        let (sign, j0) = match self.config.backend {
            CompareBackend::ClassicalExact => {
                let mut result = (0i8, k + 1);
                for j in 1..=k {
                    let x = table.read_symbol(a, j)?;
                    let y = table.read_symbol(b, j)?;
                    if x != y {
                        result = (if x < y { -1 } else { 1 }, j);
                        break;
                    }
                }
                result
            }
            _ => {
                let pred = MismatchPredicate::new(table, a, b)?;
                let variant = self.config.variant();
                let mut j0 = k + 1;
                for _ in 0..self.config.repetitions() {
                    let outcome =
                        first_one_search(&pred, variant, &self.config.schedule, &mut self.rng)?;
                    if let Some(p) = outcome.found {
                        j0 = j0.min(p);
                    }
                }
                if j0 == k + 1 {
                    (0, j0)
                } else {
                    // j0 is a verified mismatch, so the symbols differ.
                    let x = table.verification_read(a, j0)?;
                    let y = table.verification_read(b, j0)?;
                    (if x < y { -1 } else { 1 }, j0)
                }
            }
        };

        Ok(CompareOutcome {
            sign,
            j0_observed: j0,
            queries_charged: table.ledger_snapshot().since(before).total(),
        })
    }
}

/// Empirical error frequency of the comparator on the worst-case pair: two
/// strings differing only at `j0_position`. Returns the fraction of trials
/// whose sign came out wrong.
pub fn comparator_error_rate(
    k: usize,
    j0_position: usize,
    trials: u32,
    config: ComparatorConfig,
    seed: u64,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::EmptyInput("trial count"));
    }
    if j0_position == 0 || j0_position > k {
        return Err(Error::IndexOutOfRange {
            what: "mismatch position",
            got: j0_position,
            limit: k,
        });
    }
    let table = crate::oracle::worst_case_pair(k, j0_position)?;
    let mut comparator = Comparator::new(config, seed)?;
    let mut errors = 0u32;
    for _ in 0..trials {
        let outcome = comparator.compare(&table, StrRef::s(1), StrRef::s(2))?;
        if outcome.sign != -1 {
            errors += 1;
        }
    }
    Ok(f64::from(errors) / f64::from(trials))
}
