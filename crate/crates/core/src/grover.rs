//! Exact simulation of Grover-style search with per-iteration query charging.
//!
//! Two backends produce identically distributed measurements:
//!
//! * [`GroverVariant::ClosedForm`] draws from the known outcome law
//!   `p = sin²((2m+1)·asin(√(t/N)))` in O(1) per run — the default.
//! * [`GroverVariant::Statevector`] maintains all `N` amplitudes and applies
//!   `m` rounds of phase-oracle + diffusion — the cross-validation backend,
//!   capped at 2^16 amplitudes.
//!
//! On top of a single run sit [`bbht_search`] (exponential iteration guessing
//! for an unknown marked count) and [`first_one_search`] (exponential prefix
//! search for the minimal marked position). Both verify every measurement
//! with charged reads, so a returned position is always genuinely marked.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::oracle::QueryLedger;
use crate::{Error, Result};

/// Default cap on the statevector backend's space size.
pub const STATEVECTOR_DEFAULT_CAP: usize = 1 << 16;

/// A marker function f over positions `1..=len`, evaluated two ways: the
/// simulator reads the whole marked set for free (it models the oracle
/// unitary), while algorithms pay charged reads to check one position.
pub trait Predicate {
    /// Domain size N (positions are `1..=len`).
    fn len(&self) -> usize;

    /// All marked positions in ascending order — simulator backdoor, built
    /// from uncharged scans.
    fn marked_positions(&self) -> &[usize];

    /// Charged classical check of `f(j)`; charges this predicate's ledger.
    fn verify(&self, j: usize) -> bool;

    /// The ledger that quantum iterations and verification reads charge to.
    fn ledger(&self) -> &QueryLedger;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn marked_in_prefix(&self, prefix: usize) -> usize {
        self.marked_positions().partition_point(|&p| p <= prefix)
    }
}

/// A synthetic predicate over an explicit marked set, with its own ledger.
/// Each verification charges two reads, mirroring the cost of checking one
/// position of a string pair.
pub struct MaskPredicate {
    len: usize,
    marked: Vec<usize>,
    ledger: QueryLedger,
}

impl MaskPredicate {
    /// `marked` holds 1-based positions; they are sorted and deduplicated.
    pub fn new(len: usize, mut marked: Vec<usize>) -> Result<Self> {
        marked.sort_unstable();
        marked.dedup();
        if marked.first().is_some_and(|&p| p == 0) || marked.last().is_some_and(|&p| p > len) {
            return Err(Error::IndexOutOfRange {
                what: "marked position",
                got: *marked.last().unwrap(),
                limit: len,
            });
        }
        Ok(MaskPredicate {
            len,
            marked,
            ledger: QueryLedger::default(),
        })
    }

    pub fn all_zero(len: usize) -> Self {
        MaskPredicate {
            len,
            marked: Vec::new(),
            ledger: QueryLedger::default(),
        }
    }

    pub fn single(len: usize, j0: usize) -> Result<Self> {
        Self::new(len, vec![j0])
    }
}

impl Predicate for MaskPredicate {
    fn len(&self) -> usize {
        self.len
    }

    fn marked_positions(&self) -> &[usize] {
        &self.marked
    }

    fn verify(&self, j: usize) -> bool {
        self.ledger.charge_verification(2);
        self.marked.binary_search(&j).is_ok()
    }

    fn ledger(&self) -> &QueryLedger {
        &self.ledger
    }
}

/// Which measurement-sampling machinery a search uses.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GroverVariant {
    ClosedForm,
    Statevector { max_dimension: usize },
}

impl GroverVariant {
    pub fn statevector() -> Self {
        GroverVariant::Statevector {
            max_dimension: STATEVECTOR_DEFAULT_CAP,
        }
    }
}

/// Iteration schedule for searches with an unknown marked count.
#[derive(Copy, Clone, Debug)]
pub struct BbhtSchedule {
    /// Growth factor for the iteration-guess ceiling (classic 6/5).
    pub growth: f64,
    /// Abort once cumulative effort exceeds `cutoff_factor · √N`.
    pub cutoff_factor: f64,
}

impl Default for BbhtSchedule {
    fn default() -> Self {
        BbhtSchedule {
            growth: 1.2,
            cutoff_factor: 9.0,
        }
    }
}

impl BbhtSchedule {
    pub fn validate(&self) -> Result<()> {
        if self.growth.is_nan() || self.growth <= 1.0 {
            return Err(Error::InvalidConfig("BBHT growth factor must exceed 1"));
        }
        if self.cutoff_factor.is_nan() || self.cutoff_factor < 1.0 {
            return Err(Error::InvalidConfig(
                "BBHT cutoff factor must be at least 1",
            ));
        }
        Ok(())
    }
}

/// Result of one search call, with the charge it incurred.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// A verified marked position, or `None` (for first-one search this maps
    /// to the `k + 1` convention at the comparator level).
    pub found: Option<usize>,
    /// Total ledger growth during the call (all categories).
    pub queries_charged: u64,
    /// Grover iterations actually executed (= quantum oracle calls charged).
    pub iterations_used: u64,
}

/// Probability that measuring after `iterations` Grover rounds yields a
/// marked element: `sin²((2m+1)·θ)` with `θ = asin(√(t/N))`.
pub fn success_probability(space: usize, marked: usize, iterations: u32) -> Result<f64> {
    if space == 0 {
        return Err(Error::EmptyInput("search space"));
    }
    if marked > space {
        return Err(Error::MarkedExceedsSpace { marked, space });
    }
    let theta = libm::asin(libm::sqrt(marked as f64 / space as f64));
    let s = libm::sin((2.0 * iterations as f64 + 1.0) * theta);
    Ok(s * s)
}

/// Amplitudes after `iterations` Grover rounds on a uniform start state over
/// `space` positions with the given marked set (1-based, sorted). All
/// amplitudes stay real: the oracle is a sign flip and diffusion is the
/// reflection `a_i → 2·mean − a_i`.
pub fn statevector_amplitudes(space: usize, marked: &[usize], iterations: u32) -> Result<Vec<f64>> {
    if space == 0 {
        return Err(Error::EmptyInput("search space"));
    }
    let mut amps = vec![1.0 / libm::sqrt(space as f64); space];
    for _ in 0..iterations {
        for &pos in marked {
            amps[pos - 1] = -amps[pos - 1];
        }
        let mean = amps.iter().sum::<f64>() / space as f64;
        for a in amps.iter_mut() {
            *a = 2.0 * mean - *a;
        }
    }
    Ok(amps)
}

/// Total measurement probability of the marked set after `iterations`
/// rounds, from the statevector. Cross-check target for
/// [`success_probability`].
pub fn statevector_marked_mass(space: usize, marked: &[usize], iterations: u32) -> Result<f64> {
    let amps = statevector_amplitudes(space, marked, iterations)?;
    Ok(marked.iter().map(|&p| amps[p - 1] * amps[p - 1]).sum())
}

/// Runs Grover search with a fixed iteration count over the prefix
/// `1..=prefix` of the predicate's domain and samples one measured position.
/// Charges `iterations` quantum oracle calls. The caller is responsible for
/// verifying the measurement with charged reads.
pub fn grover_run<P: Predicate>(
    pred: &P,
    prefix: usize,
    iterations: u32,
    variant: GroverVariant,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    if prefix == 0 {
        return Err(Error::EmptyInput("search space"));
    }
    if prefix > pred.len() {
        return Err(Error::IndexOutOfRange {
            what: "search prefix",
            got: prefix,
            limit: pred.len(),
        });
    }
    pred.ledger().charge_quantum(iterations as u64);

    let marked_count = pred.marked_in_prefix(prefix);
    let marked = &pred.marked_positions()[..marked_count];

    match variant {
        GroverVariant::ClosedForm => {
            // p is exactly 0 for an empty marked set and exactly 1 for a
            // fully marked prefix; only the mixed case needs the trig.
            let hit = if marked_count == 0 {
                false
            } else if marked_count == prefix {
                true
            } else {
                let p = success_probability(prefix, marked_count, iterations)?;
                rng.gen::<f64>() < p
            };
            if hit {
                Ok(marked[rng.gen_range(0..marked_count)])
            } else {
                // Uniform over the unmarked positions, selected by rank so a
                // draw costs O(log t) regardless of density.
                let rank = rng.gen_range(0..prefix - marked_count);
                Ok(select_unmarked(marked, rank))
            }
        }
        GroverVariant::Statevector { max_dimension } => {
            if prefix > max_dimension {
                return Err(Error::StatevectorTooLarge {
                    space: prefix,
                    limit: max_dimension,
                });
            }
            let amps = statevector_amplitudes(prefix, marked, iterations)?;
            let total: f64 = amps.iter().map(|a| a * a).sum();
            let mut u = rng.gen::<f64>() * total;
            for (idx, a) in amps.iter().enumerate() {
                let weight = a * a;
                // Strict comparison so zero-weight positions are never hit.
                if u < weight {
                    return Ok(idx + 1);
                }
                u -= weight;
            }
            Ok(prefix)
        }
    }
}

/// Position of the `rank`-th (0-based) unmarked element of `1..`, given the
/// sorted marked list. Binary search over "unmarked elements below".
fn select_unmarked(marked: &[usize], rank: usize) -> usize {
    let mut lo = 0usize;
    let mut hi = marked.len();
    // Find how many marked positions precede the answer.
    while lo < hi {
        let mid = (lo + hi) / 2;
        // Unmarked count strictly below marked[mid] is marked[mid] - 1 - mid.
        if marked[mid] - 1 - mid <= rank {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    rank + lo + 1
}

/// Searches `1..=prefix` for any marked position when the marked count is
/// unknown, guessing iteration counts on an exponentially growing ceiling.
///
/// Every measurement is verified with charged reads; a `found` result is
/// therefore always marked. A round that draws zero iterations still counts
/// one unit of effort (its measurement) toward the cutoff, so the loop
/// terminates even on a singleton space with nothing marked.
pub fn bbht_search<P: Predicate>(
    pred: &P,
    prefix: usize,
    variant: GroverVariant,
    schedule: &BbhtSchedule,
    rng: &mut ChaCha8Rng,
) -> Result<SearchOutcome> {
    schedule.validate()?;
    if prefix == 0 {
        return Err(Error::EmptyInput("search space"));
    }
    let before = pred.ledger().snapshot();
    let sqrt_n = libm::sqrt(prefix as f64);
    let cutoff = schedule.cutoff_factor * sqrt_n;

    let mut ceiling = 1.0f64;
    let mut effort = 0.0f64;
    let mut iterations_used = 0u64;
    let mut found = None;

    loop {
        let guesses = libm::ceil(ceiling) as u64;
        let j = rng.gen_range(0..guesses) as u32;
        if effort + (j.max(1) as f64) > cutoff {
            break;
        }
        let measured = grover_run(pred, prefix, j, variant, rng)?;
        effort += j.max(1) as f64;
        iterations_used += j as u64;
        if pred.verify(measured) {
            found = Some(measured);
            break;
        }
        ceiling = (ceiling * schedule.growth).min(sqrt_n.max(1.0));
    }

    Ok(SearchOutcome {
        found,
        queries_charged: pred.ledger().snapshot().since(before).total(),
        iterations_used,
    })
}

/// Finds a verified marked position, preferring the minimal one, or reports
/// that none exists.
///
/// Exponential prefix search: for stage `t = 0, 1, 2, …` run [`bbht_search`]
/// on the prefix `1..=min(2^t, hi−1)`, where `hi` is the best verified
/// marked position so far (initially `len + 1`). A verified hit lowers `hi`;
/// the search stops once the full prefix `1..=hi−1` has been covered twice
/// in a row with no new hit. Stage costs grow geometrically, so the expected
/// charge is O(√j₀) for first marked position j₀.
///
/// Guarantees: a `found` position is always marked; if nothing is marked the
/// result is always `None`.
pub fn first_one_search<P: Predicate>(
    pred: &P,
    variant: GroverVariant,
    schedule: &BbhtSchedule,
    rng: &mut ChaCha8Rng,
) -> Result<SearchOutcome> {
    let k = pred.len();
    if k == 0 {
        return Err(Error::EmptyInput("search space"));
    }
    let before = pred.ledger().snapshot();

    let mut hi = k + 1;
    let mut full_misses = 0u32;
    let mut stage = 0u32;
    let mut iterations_used = 0u64;

    while full_misses < 2 {
        let doubled = 1usize.checked_shl(stage.min(63)).unwrap_or(usize::MAX);
        let prefix = doubled.min(hi - 1);
        stage += 1;
        if prefix == 0 {
            // Nothing below the best hit; the empty prefix is trivially covered.
            full_misses += 1;
            continue;
        }
        let full = prefix == hi - 1;
        let outcome = bbht_search(pred, prefix, variant, schedule, rng)?;
        iterations_used += outcome.iterations_used;
        match outcome.found {
            Some(p) => {
                debug_assert!(p < hi);
                hi = p;
                full_misses = 0;
            }
            None if full => full_misses += 1,
            None => {}
        }
    }

    Ok(SearchOutcome {
        found: (hi <= k).then_some(hi),
        queries_charged: pred.ledger().snapshot().since(before).total(),
        iterations_used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn success_probability_single_marked_in_four_is_certain() {
        // θ = asin(1/2) = π/6, so (2·1+1)·θ = π/2 and sin² = 1 exactly.
        let p = success_probability(4, 1, 1).unwrap();
        assert_eq!(p, 1.0);
    }

    #[test]
    fn success_probability_nothing_marked_is_zero() {
        for m in [0, 1, 5, 20] {
            assert_eq!(success_probability(10, 0, m).unwrap(), 0.0);
        }
    }

    #[test]
    fn success_probability_everything_marked_is_one() {
        assert_eq!(success_probability(4, 4, 0).unwrap(), 1.0);
    }

    #[test]
    fn success_probability_rejects_bad_inputs() {
        assert!(matches!(
            success_probability(0, 0, 1),
            Err(Error::EmptyInput(_))
        ));
        assert!(matches!(
            success_probability(4, 5, 1),
            Err(Error::MarkedExceedsSpace { .. })
        ));
    }

    #[test]
    fn statevector_matches_closed_form_on_a_sample_grid() {
        // The full N ≤ 64 grid runs in the acceptance suite; spot-check here.
        for space in [1usize, 2, 3, 5, 8, 16, 31] {
            for marked_count in 0..=space.min(6) {
                let marked: Vec<usize> = (1..=marked_count).collect();
                for m in [0u32, 1, 2, 7] {
                    let mass = statevector_marked_mass(space, &marked, m).unwrap();
                    let p = success_probability(space, marked_count, m).unwrap();
                    assert!(
                        (mass - p).abs() < 1e-9,
                        "N={space} t={marked_count} m={m}: {mass} vs {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn statevector_mass_is_insensitive_to_which_positions_are_marked() {
        let a = statevector_marked_mass(16, &[1, 2, 3], 3).unwrap();
        let b = statevector_marked_mass(16, &[4, 9, 16], 3).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn grover_run_certain_case_returns_the_marked_position_on_both_backends() {
        let pred = MaskPredicate::single(4, 3).unwrap();
        for variant in [GroverVariant::ClosedForm, GroverVariant::statevector()] {
            let mut r = rng(42);
            for _ in 0..300 {
                let pos = grover_run(&pred, 4, 1, variant, &mut r).unwrap();
                assert_eq!(pos, 3);
            }
        }
    }

    #[test]
    fn grover_run_with_nothing_marked_returns_unmarked() {
        let pred = MaskPredicate::all_zero(8);
        let mut r = rng(1);
        for m in 0..6 {
            let pos = grover_run(&pred, 8, m, GroverVariant::ClosedForm, &mut r).unwrap();
            assert!((1..=8).contains(&pos));
        }
    }

    #[test]
    fn grover_run_all_marked_zero_iterations_is_uniform() {
        // Empirical frequencies within 3σ of 1/16 over 10^4 seeded draws.
        let pred = MaskPredicate::new(16, (1..=16).collect()).unwrap();
        let trials = 10_000usize;
        for variant in [GroverVariant::ClosedForm, GroverVariant::statevector()] {
            let mut r = rng(7);
            let mut counts = [0usize; 16];
            for _ in 0..trials {
                let pos = grover_run(&pred, 16, 0, variant, &mut r).unwrap();
                counts[pos - 1] += 1;
            }
            let p = 1.0 / 16.0;
            let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
            for (i, &c) in counts.iter().enumerate() {
                let dev = (c as f64 - trials as f64 * p).abs();
                assert!(
                    dev <= 3.0 * sigma,
                    "position {} saw {} draws (dev {:.1} > 3σ {:.1})",
                    i + 1,
                    c,
                    dev,
                    3.0 * sigma
                );
            }
        }
    }

    #[test]
    fn grover_run_charges_iterations() {
        let pred = MaskPredicate::single(16, 5).unwrap();
        let mut r = rng(3);
        grover_run(&pred, 16, 7, GroverVariant::ClosedForm, &mut r).unwrap();
        assert_eq!(pred.ledger().snapshot().quantum_oracle_calls, 7);
    }

    #[test]
    fn bbht_on_singleton_with_marked_element_finds_it() {
        let pred = MaskPredicate::single(1, 1).unwrap();
        let mut r = rng(9);
        let out = bbht_search(
            &pred,
            1,
            GroverVariant::ClosedForm,
            &BbhtSchedule::default(),
            &mut r,
        )
        .unwrap();
        assert_eq!(out.found, Some(1));
    }

    #[test]
    fn bbht_with_nothing_marked_respects_the_cutoff() {
        let pred = MaskPredicate::all_zero(16);
        for seed in 0..50 {
            let before = pred.ledger().snapshot();
            let mut r = rng(seed);
            let out = bbht_search(
                &pred,
                16,
                GroverVariant::ClosedForm,
                &BbhtSchedule::default(),
                &mut r,
            )
            .unwrap();
            assert_eq!(out.found, None);
            let spent = pred.ledger().snapshot().since(before);
            assert!(spent.quantum_oracle_calls <= 36, "cutoff 9·√16 exceeded");
            assert_eq!(out.iterations_used, spent.quantum_oracle_calls);
        }
    }

    #[test]
    fn bbht_finds_a_quarter_marked_space_almost_always() {
        let pred = MaskPredicate::new(16, vec![2, 7, 11, 13]).unwrap();
        let mut r = rng(5);
        let trials = 10_000;
        let mut hits = 0;
        for _ in 0..trials {
            let out = bbht_search(
                &pred,
                16,
                GroverVariant::ClosedForm,
                &BbhtSchedule::default(),
                &mut r,
            )
            .unwrap();
            if let Some(p) = out.found {
                assert!([2, 7, 11, 13].contains(&p));
                hits += 1;
            }
        }
        assert!(
            hits as f64 / trials as f64 >= 0.9,
            "hit rate {}",
            hits as f64 / trials as f64
        );
    }

    #[test]
    fn first_one_with_nothing_marked_always_reports_none() {
        let pred = MaskPredicate::all_zero(16);
        for seed in 0..1000 {
            let mut r = rng(seed);
            let out = first_one_search(
                &pred,
                GroverVariant::ClosedForm,
                &BbhtSchedule::default(),
                &mut r,
            )
            .unwrap();
            assert_eq!(out.found, None);
        }
    }

    #[test]
    fn first_one_finds_position_one_deterministically() {
        // Stage t = 0 searches the prefix of size 1 with a forced j = 0 draw,
        // measures position 1 and verifies it.
        for extra in [Vec::new(), vec![5, 9], vec![2]] {
            let mut marked = vec![1usize];
            marked.extend(extra);
            let pred = MaskPredicate::new(16, marked).unwrap();
            for seed in 0..200 {
                let mut r = rng(seed);
                let out = first_one_search(
                    &pred,
                    GroverVariant::ClosedForm,
                    &BbhtSchedule::default(),
                    &mut r,
                )
                .unwrap();
                assert_eq!(out.found, Some(1));
            }
        }
    }

    #[test]
    fn first_one_never_returns_an_unmarked_position_exhaustively() {
        // Every mask over a domain of 10, a few seeds each.
        for mask_bits in 0u32..1024 {
            let marked: Vec<usize> = (1..=10).filter(|j| mask_bits >> (j - 1) & 1 == 1).collect();
            let pred = MaskPredicate::new(10, marked.clone()).unwrap();
            for seed in 0..3 {
                let mut r = rng(u64::from(mask_bits) * 31 + seed);
                let out = first_one_search(
                    &pred,
                    GroverVariant::ClosedForm,
                    &BbhtSchedule::default(),
                    &mut r,
                )
                .unwrap();
                match out.found {
                    Some(p) => assert!(marked.contains(&p), "mask {mask_bits:b} returned {p}"),
                    None => assert!(marked.is_empty(), "mask {mask_bits:b} missed all marks"),
                }
            }
        }
    }

    #[test]
    fn first_one_accounting_matches_the_ledger() {
        let pred = MaskPredicate::single(256, 100).unwrap();
        let before = pred.ledger().snapshot();
        let mut r = rng(17);
        let out = first_one_search(
            &pred,
            GroverVariant::ClosedForm,
            &BbhtSchedule::default(),
            &mut r,
        )
        .unwrap();
        let spent = pred.ledger().snapshot().since(before);
        assert_eq!(spent.quantum_oracle_calls, out.iterations_used);
        assert_eq!(spent.total(), out.queries_charged);
        assert_eq!(spent.classical_reads, 0);
    }

    #[test]
    fn identical_seeds_give_identical_outcomes_and_ledgers() {
        let run = || {
            let pred = MaskPredicate::new(64, vec![13, 40, 41]).unwrap();
            let mut r = rng(123);
            let out = first_one_search(
                &pred,
                GroverVariant::ClosedForm,
                &BbhtSchedule::default(),
                &mut r,
            )
            .unwrap();
            (out, pred.ledger().snapshot())
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn statevector_backend_rejects_spaces_beyond_its_cap() {
        let pred = MaskPredicate::single(100, 7).unwrap();
        let mut r = rng(0);
        let tiny = GroverVariant::Statevector { max_dimension: 64 };
        assert!(matches!(
            grover_run(&pred, 100, 1, tiny, &mut r),
            Err(Error::StatevectorTooLarge {
                space: 100,
                limit: 64
            })
        ));
    }

    #[test]
    fn select_unmarked_skips_marked_positions() {
        // marked {2, 3, 7} in 1..: unmarked order is 1, 4, 5, 6, 8, ...
        let marked = [2usize, 3, 7];
        let got: Vec<usize> = (0..5).map(|r| select_unmarked(&marked, r)).collect();
        assert_eq!(got, vec![1, 4, 5, 6, 8]);
        assert_eq!(select_unmarked(&[], 4), 5);
    }

    proptest! {
        #[test]
        fn prop_bbht_verifies_every_hit(
            len in 1usize..64,
            mask in proptest::collection::vec(proptest::bool::ANY, 64),
            seed in 0u64..1000,
        ) {
            let marked: Vec<usize> = (1..=len).filter(|&j| mask[j - 1]).collect();
            let pred = MaskPredicate::new(len, marked.clone()).unwrap();
            let mut r = rng(seed);
            let out = bbht_search(
                &pred, len, GroverVariant::ClosedForm, &BbhtSchedule::default(), &mut r,
            ).unwrap();
            if let Some(p) = out.found {
                prop_assert!(marked.contains(&p));
            }
            if marked.is_empty() {
                prop_assert_eq!(out.found, None);
            }
        }

        #[test]
        fn prop_statevector_and_closed_form_agree(
            space in 1usize..40,
            m in 0u32..12,
            seed in 0u64..500,
        ) {
            let mut r = rng(seed);
            let count = rand::Rng::gen_range(&mut r, 0..=space);
            let mut positions: Vec<usize> = (1..=space).collect();
            for i in 0..count {
                let j = rand::Rng::gen_range(&mut r, i..space);
                positions.swap(i, j);
            }
            let mut marked = positions[..count].to_vec();
            marked.sort_unstable();
            let mass = statevector_marked_mass(space, &marked, m).unwrap();
            let p = success_probability(space, count, m).unwrap();
            prop_assert!((mass - p).abs() < 1e-9);
        }
    }
}
