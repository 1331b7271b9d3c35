//! Scaling sweeps: run a problem across a range of k or n, write the raw
//! per-run rows as CSV and fit the log-log slope of mean total queries.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::fit::{fit_log_log, ScalingFit, SweepPoint};
use crate::runner::{execute, generate_table, DistributionSpec, RunSpec};

/// Which table dimension the sweep varies.
#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum VaryParam {
    K,
    N,
}

impl VaryParam {
    pub fn as_str(self) -> &'static str {
        match self {
            VaryParam::K => "k",
            VaryParam::N => "n",
        }
    }
}

/// One raw sweep observation; the CSV row format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub problem: String,
    pub vary: String,
    pub value: usize,
    pub seed: u64,
    pub classical_reads: u64,
    pub quantum_oracle_calls: u64,
    pub verification_reads: u64,
    /// 1 when the run's answer agreed with the referee.
    pub correct: u8,
}

impl SweepRow {
    pub fn total(&self) -> u64 {
        self.classical_reads + self.quantum_oracle_calls + self.verification_reads
    }
}

/// Sweep configuration: the swept values plus the fixed table dimensions.
#[derive(Clone, Debug)]
pub struct SweepParams {
    pub spec: RunSpec,
    pub vary: VaryParam,
    pub values: Vec<usize>,
    pub repeats: u32,
    pub fixed_n: usize,
    pub fixed_m: usize,
    pub fixed_k: usize,
    pub alphabet: u32,
    pub distribution: DistributionSpec,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepOutcome {
    pub fit: ScalingFit,
    #[serde(skip)]
    pub rows: Vec<SweepRow>,
}

/// SplitMix64 — the seed-derivation mixer for per-run streams.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Per-run seed: mixes the sweep seed, the swept value, the repeat index and
/// a stream tag (0 = table generation, 1 = algorithm randomness).
fn derive_seed(base: u64, value: usize, rep: u32, stream: u64) -> u64 {
    splitmix64(
        splitmix64(base ^ splitmix64(value as u64))
            ^ splitmix64(u64::from(rep).wrapping_add(stream << 32)),
    )
}

/// Runs the sweep. Sweep points execute sequentially; each run owns a fresh
/// table and RNG stream keyed by (value, repeat), so the aggregation is
/// order-independent.
pub fn run_sweep(params: &SweepParams) -> Result<SweepOutcome, String> {
    if params.values.len() < 4 {
        return Err("sweep needs at least 4 values".into());
    }
    if params.repeats < 10 {
        return Err("sweep needs at least 10 repeats per value".into());
    }
    let mut rows = Vec::with_capacity(params.values.len() * params.repeats as usize);
    let mut points = Vec::with_capacity(params.values.len());

    for &value in &params.values {
        if value == 0 {
            return Err("sweep values must be positive".into());
        }
        let (n, k) = match params.vary {
            VaryParam::K => (params.fixed_n, value),
            VaryParam::N => (value, params.fixed_k),
        };
        let mut total = 0u128;
        for rep in 0..params.repeats {
            let table_seed = derive_seed(params.seed, value, rep, 0);
            let algo_seed = derive_seed(params.seed, value, rep, 1);
            let table = generate_table(
                n,
                params.fixed_m,
                k,
                params.alphabet,
                table_seed,
                params.distribution,
            )
            .map_err(|e| format!("table generation failed: {e}"))?;
            let spec = RunSpec {
                seed: algo_seed,
                ..params.spec
            };
            let report =
                execute(&table, &spec, &params.distribution.label(k)).map_err(|e| e.to_string())?;
            total += u128::from(report.total_queries);
            rows.push(SweepRow {
                problem: report.problem,
                vary: params.vary.as_str().into(),
                value,
                seed: algo_seed,
                classical_reads: report.ledger.classical_reads,
                quantum_oracle_calls: report.ledger.quantum_oracle_calls,
                verification_reads: report.ledger.verification_reads,
                correct: u8::from(report.correct),
            });
        }
        points.push(SweepPoint {
            value: value as f64,
            mean_queries: total as f64 / f64::from(params.repeats),
        });
    }

    let fit = fit_log_log(params.vary.as_str(), &points)?;
    Ok(SweepOutcome { fit, rows })
}

/// Writes rows in the fixed CSV column order.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads rows back; inverse of [`write_csv`].
pub fn read_csv<R: std::io::Read>(input: R) -> csv::Result<Vec<SweepRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runner::{BackendId, ProblemId};

    #[test]
    fn splitmix_spot_values() {
        // Reference values from the SplitMix64 definition.
        assert_eq!(splitmix64(0), 0xe220a8397b1dcdaf);
        assert_eq!(splitmix64(1), 0x910a2dec89025cc1);
    }

    #[test]
    fn csv_roundtrip_is_exact() {
        let rows = vec![
            SweepRow {
                problem: "sort".into(),
                vary: "k".into(),
                value: 256,
                seed: 42,
                classical_reads: 0,
                quantum_oracle_calls: 1234,
                verification_reads: 77,
                correct: 1,
            },
            SweepRow {
                problem: "sort".into(),
                vary: "k".into(),
                value: 1024,
                seed: 43,
                classical_reads: 5,
                quantum_oracle_calls: 999,
                verification_reads: 3,
                correct: 0,
            },
        ];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with(
            "problem,vary,value,seed,classical_reads,quantum_oracle_calls,verification_reads,correct"
        ));
        let back = read_csv(&buf[..]).unwrap();
        assert_eq!(back, rows);
    }

    #[test]
    fn degenerate_sweeps_are_usage_errors() {
        let params = SweepParams {
            spec: RunSpec::new(ProblemId::RadixSort, BackendId::Classical, 0),
            vary: VaryParam::N,
            values: vec![2, 4, 8],
            repeats: 10,
            fixed_n: 8,
            fixed_m: 0,
            fixed_k: 8,
            alphabet: 2,
            distribution: DistributionSpec::Uniform,
            seed: 0,
        };
        assert!(run_sweep(&params).is_err());
        let mut p2 = params.clone();
        p2.values = vec![2, 4, 8, 16];
        p2.repeats = 3;
        assert!(run_sweep(&p2).is_err());
    }

    #[test]
    fn radix_sweep_over_n_has_slope_one_and_exact_reads() {
        let params = SweepParams {
            spec: RunSpec::new(ProblemId::RadixSort, BackendId::Classical, 0),
            vary: VaryParam::N,
            values: vec![8, 16, 32, 64],
            repeats: 10,
            fixed_n: 0,
            fixed_m: 0,
            fixed_k: 16,
            alphabet: 2,
            distribution: DistributionSpec::Uniform,
            seed: 7,
        };
        let outcome = run_sweep(&params).unwrap();
        assert!(
            (outcome.fit.slope - 1.0).abs() < 1e-9,
            "slope {}",
            outcome.fit.slope
        );
        for row in &outcome.rows {
            assert_eq!(row.classical_reads, row.value as u64 * 16);
            assert_eq!(row.correct, 1);
        }
    }
}
