//! Problem dispatch: builds tables, runs one experiment, judges the answer
//! against the uncharged referee and assembles the report.

use std::fmt;
use std::time::Instant;

use qstrings_core::compare::{Comparator, ComparatorConfig, CompareBackend};
use qstrings_core::ground_truth;
use qstrings_core::grover::{BbhtSchedule, STATEVECTOR_DEFAULT_CAP};
use qstrings_core::oracle::{Distribution, GenSpec, StrRef, StringTable};
use qstrings_core::problems::{self, ProblemConfig};

use crate::report::{fnv1a, LedgerJson, RunReport};

#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum ProblemId {
    /// One boosted comparison of strings 1 and 2.
    Compare,
    MostFrequent,
    /// Classical trie baseline for most-frequent.
    MostFrequentTrie,
    Sort,
    /// Classical radix-sort baseline.
    RadixSort,
    IntersectTree,
    IntersectSort,
    /// Classical trie baseline for intersection.
    IntersectTrie,
}

impl ProblemId {
    pub fn as_str(self) -> &'static str {
        match self {
            ProblemId::Compare => "compare",
            ProblemId::MostFrequent => "most-frequent",
            ProblemId::MostFrequentTrie => "most-frequent-trie",
            ProblemId::Sort => "sort",
            ProblemId::RadixSort => "radix-sort",
            ProblemId::IntersectTree => "intersect-tree",
            ProblemId::IntersectSort => "intersect-sort",
            ProblemId::IntersectTrie => "intersect-trie",
        }
    }

    pub fn needs_requests(self) -> bool {
        matches!(
            self,
            ProblemId::IntersectTree | ProblemId::IntersectSort | ProblemId::IntersectTrie
        )
    }

    /// Baselines never touch the comparator, so B and r do not apply.
    pub fn is_baseline(self) -> bool {
        matches!(
            self,
            ProblemId::MostFrequentTrie | ProblemId::RadixSort | ProblemId::IntersectTrie
        )
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum BackendId {
    Classical,
    ClosedForm,
    Statevector,
}

impl BackendId {
    pub fn as_str(self) -> &'static str {
        match self {
            BackendId::Classical => "classical",
            BackendId::ClosedForm => "closed-form",
            BackendId::Statevector => "statevector",
        }
    }

    pub fn to_compare_backend(self) -> CompareBackend {
        match self {
            BackendId::Classical => CompareBackend::ClassicalExact,
            BackendId::ClosedForm => CompareBackend::QuantumClosedForm,
            BackendId::Statevector => CompareBackend::QuantumStatevector,
        }
    }
}

impl fmt::Display for BackendId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// CLI-facing distribution spec; `MismatchAtLast` resolves to position k
/// once the table size is known.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum DistributionSpec {
    Uniform,
    SharedPrefix { tail: usize },
    MismatchAt { position: usize },
    MismatchAtLast,
}

impl DistributionSpec {
    pub fn resolve(self, k: usize) -> Distribution {
        match self {
            DistributionSpec::Uniform => Distribution::Uniform,
            DistributionSpec::SharedPrefix { tail } => Distribution::SharedPrefix { tail },
            DistributionSpec::MismatchAt { position } => Distribution::MismatchAt { position },
            DistributionSpec::MismatchAtLast => Distribution::MismatchAt { position: k },
        }
    }

    pub fn label(self, k: usize) -> String {
        match self {
            DistributionSpec::MismatchAtLast => format!("mismatch-at:{k}"),
            other => other.label_generic(),
        }
    }

    /// Label without a concrete k (sweep headers).
    pub fn label_generic(self) -> String {
        match self {
            DistributionSpec::Uniform => "uniform".into(),
            DistributionSpec::SharedPrefix { tail } => format!("shared-prefix:{tail}"),
            DistributionSpec::MismatchAt { position } => format!("mismatch-at:{position}"),
            DistributionSpec::MismatchAtLast => "mismatch-at:last".into(),
        }
    }
}

impl std::str::FromStr for DistributionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "uniform" {
            return Ok(DistributionSpec::Uniform);
        }
        if let Some(tail) = s.strip_prefix("shared-prefix:") {
            let tail = tail
                .parse()
                .map_err(|_| format!("bad shared-prefix tail in {s:?}"))?;
            return Ok(DistributionSpec::SharedPrefix { tail });
        }
        if let Some(pos) = s.strip_prefix("mismatch-at:") {
            if pos == "last" {
                return Ok(DistributionSpec::MismatchAtLast);
            }
            let position = pos
                .parse()
                .map_err(|_| format!("bad mismatch position in {s:?}"))?;
            return Ok(DistributionSpec::MismatchAt { position });
        }
        Err(format!(
            "unknown distribution {s:?} (expected uniform, shared-prefix:T, mismatch-at:P or mismatch-at:last)"
        ))
    }
}

/// Everything one experiment needs besides the table itself.
#[derive(Copy, Clone, Debug)]
pub struct RunSpec {
    pub problem: ProblemId,
    pub backend: BackendId,
    pub seed: u64,
    pub boost_base: Option<u32>,
    pub bbht_growth: f64,
    pub bbht_cutoff: f64,
    pub statevector_cap: usize,
}

impl RunSpec {
    pub fn new(problem: ProblemId, backend: BackendId, seed: u64) -> Self {
        RunSpec {
            problem,
            backend,
            seed,
            boost_base: None,
            bbht_growth: 1.2,
            bbht_cutoff: 9.0,
            statevector_cap: STATEVECTOR_DEFAULT_CAP,
        }
    }

    fn schedule(&self) -> BbhtSchedule {
        BbhtSchedule {
            growth: self.bbht_growth,
            cutoff_factor: self.bbht_cutoff,
        }
    }

    pub fn problem_config(&self) -> ProblemConfig {
        ProblemConfig {
            backend: self.backend.to_compare_backend(),
            schedule: self.schedule(),
            boost_base: self.boost_base,
            statevector_cap: self.statevector_cap,
            seed: self.seed,
        }
    }

    /// Effective boost base for this problem on this table.
    pub fn effective_boost_base(&self, table: &StringTable) -> u32 {
        if self.problem.is_baseline() {
            return 0;
        }
        let derived = if self.problem.needs_requests() {
            table.string_count() + table.request_count()
        } else {
            table.string_count()
        };
        self.boost_base.unwrap_or(derived.max(2) as u32)
    }
}

/// Builds a generated table for a run.
pub fn generate_table(
    n: usize,
    m: usize,
    k: usize,
    alphabet: u32,
    seed: u64,
    dist: DistributionSpec,
) -> qstrings_core::Result<StringTable> {
    StringTable::generate(&GenSpec {
        n,
        m,
        k,
        alphabet,
        seed,
        distribution: dist.resolve(k),
    })
}

/// Runs one experiment on a prepared table and assembles its report.
/// `distribution` is a label recorded verbatim (e.g. "file" for loaded
/// inputs).
pub fn execute(
    table: &StringTable,
    spec: &RunSpec,
    distribution: &str,
) -> qstrings_core::Result<RunReport> {
    let cfg = spec.problem_config();
    let started = Instant::now();

    let (answer, correct) = match spec.problem {
        ProblemId::Compare => {
            table.ledger_reset();
            let base = spec.effective_boost_base(table);
            let mut cmp = Comparator::new(
                ComparatorConfig {
                    backend: spec.backend.to_compare_backend(),
                    boost_base: base,
                    schedule: cfg.schedule,
                    statevector_cap: cfg.statevector_cap,
                },
                spec.seed,
            )?;
            let out = cmp.compare(table, StrRef::s(1), StrRef::s(2))?;
            let expected = table
                .row_uncharged(StrRef::s(1))?
                .cmp(table.row_uncharged(StrRef::s(2))?);
            let expected_sign = match expected {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            };
            (
                format!("sign={} j0={}", out.sign, out.j0_observed),
                out.sign == expected_sign,
            )
        }
        ProblemId::MostFrequent => {
            let r = problems::most_frequent(table, &cfg)?;
            (
                format!("i_max={} c_max={}", r.i_max, r.c_max),
                ground_truth::mode_agrees(table, r.i_max, r.c_max)?,
            )
        }
        ProblemId::MostFrequentTrie => {
            let r = problems::most_frequent_trie(table)?;
            (
                format!("i_max={} c_max={}", r.i_max, r.c_max),
                ground_truth::mode_agrees(table, r.i_max, r.c_max)?,
            )
        }
        ProblemId::Sort => {
            let r = problems::sort_strings(table, &cfg)?;
            (
                format!("perm_fnv={:#018x}", perm_digest(&r.indices)),
                ground_truth::is_sorted_order(table, &r.indices)?,
            )
        }
        ProblemId::RadixSort => {
            let r = problems::radix_sort(table)?;
            (
                format!("perm_fnv={:#018x}", perm_digest(&r.order.indices)),
                ground_truth::is_sorted_order(table, &r.order.indices)?,
            )
        }
        ProblemId::IntersectTree => {
            let bits = problems::intersect_via_tree(table, &cfg)?;
            let truth = ground_truth::intersection_bits(table)?;
            (bits_digest(&bits), bits == truth)
        }
        ProblemId::IntersectSort => {
            let bits = problems::intersect_via_sort(table, &cfg)?;
            let truth = ground_truth::intersection_bits(table)?;
            (bits_digest(&bits), bits == truth)
        }
        ProblemId::IntersectTrie => {
            let bits = problems::intersect_trie(table)?;
            let truth = ground_truth::intersection_bits(table)?;
            (bits_digest(&bits), bits == truth)
        }
    };

    let wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    let counts = table.ledger_snapshot();
    let base = spec.effective_boost_base(table);
    let repetitions = if spec.problem.is_baseline() {
        0
    } else {
        ComparatorConfig {
            backend: spec.backend.to_compare_backend(),
            boost_base: base.max(2),
            schedule: cfg.schedule,
            statevector_cap: cfg.statevector_cap,
        }
        .repetitions()
    };
    let alphabet_overhead = if spec.problem == ProblemId::RadixSort {
        u64::from(table.alphabet_size()) * table.string_len() as u64
    } else {
        0
    };

    Ok(RunReport {
        problem: spec.problem.as_str().to_owned(),
        n: table.string_count(),
        m: table.request_count(),
        k: table.string_len(),
        alphabet: table.alphabet_size(),
        backend: spec.backend.as_str().to_owned(),
        distribution: distribution.to_owned(),
        seed: spec.seed,
        boost_base: base,
        repetitions,
        answer,
        correct,
        ledger: LedgerJson::from(counts),
        total_queries: counts.total(),
        alphabet_overhead,
        wall_time_ms,
    })
}

fn perm_digest(indices: &[usize]) -> u64 {
    fnv1a(indices.iter().flat_map(|i| (*i as u64).to_le_bytes()))
}

fn bits_digest(bits: &[bool]) -> String {
    let ones = bits.iter().filter(|&&b| b).count();
    let hash = fnv1a(bits.iter().map(|&b| u8::from(b)));
    format!("bits_fnv={hash:#018x} ones={ones} m={}", bits.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distribution_spec_parses() {
        assert_eq!(
            "uniform".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::Uniform
        );
        assert_eq!(
            "shared-prefix:3".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::SharedPrefix { tail: 3 }
        );
        assert_eq!(
            "mismatch-at:17".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::MismatchAt { position: 17 }
        );
        assert_eq!(
            "mismatch-at:last".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::MismatchAtLast
        );
        assert!("banana".parse::<DistributionSpec>().is_err());
    }

    #[test]
    fn classical_run_report_has_no_quantum_calls() {
        let table = generate_table(100, 0, 64, 4, 1, DistributionSpec::Uniform).unwrap();
        let spec = RunSpec::new(ProblemId::MostFrequent, BackendId::Classical, 1);
        let report = execute(&table, &spec, "uniform").unwrap();
        assert_eq!(report.ledger.quantum_oracle_calls, 0);
        assert!(report.correct);
        assert_eq!(report.boost_base, 100);
        assert_eq!(
            report.total_queries,
            report.ledger.classical_reads
                + report.ledger.quantum_oracle_calls
                + report.ledger.verification_reads
        );
    }

    #[test]
    fn identical_seeds_give_identical_reports_modulo_wall_time() {
        let run = || {
            let table = generate_table(32, 0, 32, 2, 9, DistributionSpec::Uniform).unwrap();
            let spec = RunSpec::new(ProblemId::Sort, BackendId::ClosedForm, 3);
            execute(&table, &spec, "uniform").unwrap()
        };
        let a = serde_json::to_string(&run().without_wall_time()).unwrap();
        let b = serde_json::to_string(&run().without_wall_time()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quantum_sort_charges_only_quantum_and_verification() {
        let table =
            generate_table(64, 0, 128, 2, 2, DistributionSpec::SharedPrefix { tail: 1 }).unwrap();
        let spec = RunSpec::new(ProblemId::Sort, BackendId::ClosedForm, 5);
        let report = execute(&table, &spec, "shared-prefix:1").unwrap();
        assert_eq!(report.ledger.classical_reads, 0);
        assert!(report.ledger.quantum_oracle_calls > 0);
        assert_eq!(report.boost_base, 64);
        assert_eq!(report.repetitions, 19);
    }

    #[test]
    fn radix_report_carries_alphabet_overhead() {
        let table = generate_table(10, 0, 6, 4, 3, DistributionSpec::Uniform).unwrap();
        let spec = RunSpec::new(ProblemId::RadixSort, BackendId::Classical, 0);
        let report = execute(&table, &spec, "uniform").unwrap();
        assert_eq!(report.alphabet_overhead, 24);
        assert_eq!(report.ledger.classical_reads, 60);
        assert_eq!(report.boost_base, 0);
        assert_eq!(report.repetitions, 0);
    }
}
