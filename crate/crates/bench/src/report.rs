//! Per-experiment reports and their JSON form.

use qstrings_core::oracle::LedgerCounts;
use serde::{Deserialize, Serialize};

/// The ledger export format: one JSON object with the three counters.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerJson {
    pub classical_reads: u64,
    pub quantum_oracle_calls: u64,
    pub verification_reads: u64,
}

impl From<LedgerCounts> for LedgerJson {
    fn from(c: LedgerCounts) -> Self {
        LedgerJson {
            classical_reads: c.classical_reads,
            quantum_oracle_calls: c.quantum_oracle_calls,
            verification_reads: c.verification_reads,
        }
    }
}

/// Record of one experiment run. Deterministic per seed except for
/// `wall_time_ms`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub problem: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub alphabet: u32,
    pub backend: String,
    pub distribution: String,
    pub seed: u64,
    /// Effective boost base B (0 for the classical baselines).
    pub boost_base: u32,
    /// Comparator repetition schedule r = 3·⌈log₂ B⌉ + 1 (0 for baselines).
    pub repetitions: u32,
    pub answer: String,
    /// Agreement with the uncharged referee.
    pub correct: bool,
    pub ledger: LedgerJson,
    pub total_queries: u64,
    /// Bucket-initialisation work of radix sort (d·k); 0 elsewhere.
    pub alphabet_overhead: u64,
    pub wall_time_ms: f64,
}

impl RunReport {
    /// The report with wall time zeroed, for byte-level determinism checks.
    pub fn without_wall_time(&self) -> RunReport {
        let mut r = self.clone();
        r.wall_time_ms = 0.0;
        r
    }
}

/// FNV-1a over arbitrary bytes; used for compact answer digests.
pub fn fnv1a(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_is_stable() {
        assert_eq!(fnv1a([]), 0xcbf29ce484222325);
        assert_eq!(fnv1a(*b"a"), 0xaf63dc4c8601ec8c);
        assert_ne!(fnv1a(*b"ab"), fnv1a(*b"ba"));
    }

    #[test]
    fn report_total_reconciles_and_roundtrips() {
        let report = RunReport {
            problem: "sort".into(),
            n: 4,
            m: 0,
            k: 8,
            alphabet: 2,
            backend: "closed-form".into(),
            distribution: "uniform".into(),
            seed: 1,
            boost_base: 4,
            repetitions: 7,
            answer: "perm=0xdead".into(),
            correct: true,
            ledger: LedgerJson {
                classical_reads: 0,
                quantum_oracle_calls: 10,
                verification_reads: 6,
            },
            total_queries: 16,
            alphabet_overhead: 0,
            wall_time_ms: 1.25,
        };
        let json = serde_json::to_string(&report).unwrap();
        let back: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(
            back.total_queries,
            back.ledger.classical_reads
                + back.ledger.quantum_oracle_calls
                + back.ledger.verification_reads
        );
        assert_eq!(
            serde_json::to_string(&back.without_wall_time()).unwrap(),
            serde_json::to_string(&report.without_wall_time()).unwrap()
        );
    }
}
