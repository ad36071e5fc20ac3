//! Counting admissible colored partitions.
//!
//! The main engine walks the diagonal rows one at a time, carrying states
//! `(total, maxima row)` with big-integer multiplicities; equal states are
//! merged. [`brute_force_count`] is an independent oracle that enumerates
//! frequency matrices and checks every downward path.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::lattice::{
    enumerate_row_frequencies, free_cells, initial_maxima, maxima_step_into, path_check, row_mass,
    smallest_free_part, FrequencyMatrix, FrequencyRow, WeightVector,
};
use crate::qseries::Series;

/// `P(0..=N)`, where `P(n)` is the number of admissible colored partitions of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountTable {
    counts: Vec<BigUint>,
}

impl CountTable {
    /// `counts[n] = P(n)` for `n = 0..=N`.
    pub fn from_counts(counts: Vec<BigUint>) -> Result<Self> {
        if counts.len() < 2 {
            return Err(invalid("count table needs at least P(0) and P(1)"));
        }
        Ok(Self { counts })
    }

    pub fn max_n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.counts[n]
    }

    /// `(n, P(n))` for `n = 1..=N`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().enumerate().skip(1)
    }

    /// `P(1..=N)`.
    pub fn values(&self) -> &[BigUint] {
        &self.counts[1..]
    }

    /// Generating function `Σ P(n) q^n`, with `P(0) = 1`.
    pub fn to_series(&self) -> Series {
        Series::from_coeffs(self.counts.iter().map(|c| BigInt::from(c.clone())).collect())
    }
}

/// How the row transition of the DP is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    /// Expands states across the rayon pool; identical to `Sequential`
    /// when the `parallel` feature is off.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct StateKey {
    total: u64,
    maxima: Box<[u32]>,
}

type StateMap = HashMap<StateKey, BigUint>;

/// Below this many live states a row is expanded on the calling thread.
#[cfg(feature = "parallel")]
const PARALLEL_MIN_STATES: usize = 2048;

struct RowChoice {
    freqs: FrequencyRow,
    mass: u64,
}

/// Frequency rows of row `i` sorted by mass, dropping those heavier than `bound`.
fn row_choices(i: usize, wv: &WeightVector, bound: Option<u64>) -> Vec<RowChoice> {
    let mut choices: Vec<RowChoice> = enumerate_row_frequencies(i, wv)
        .map(|freqs| {
            let mass = row_mass(i, &freqs);
            RowChoice { freqs, mass }
        })
        .filter(|c| bound.is_none_or(|b| c.mass <= b))
        .collect();
    choices.sort_by_key(|c| c.mass);
    choices
}

struct Transition<'a> {
    choices: &'a [RowChoice],
    level: u32,
    bound: Option<u64>,
    track_totals: bool,
}

impl Transition<'_> {
    fn expand_into(&self, key: &StateKey, mult: &BigUint, acc: &mut StateMap, buf: &mut Vec<u32>) {
        for c in self.choices {
            let total = if self.track_totals { key.total + c.mass } else { 0 };
            if self.bound.is_some_and(|b| total > b) {
                break;
            }
            if maxima_step_into(&key.maxima, &c.freqs, self.level, buf) {
                let next = StateKey { total, maxima: buf.as_slice().into() };
                *acc.entry(next).or_insert_with(BigUint::zero) += mult;
            }
        }
    }

    fn run(&self, states: StateMap, exec: Execution) -> StateMap {
        match exec {
            Execution::Sequential => self.run_sequential(states),
            Execution::Parallel => self.run_parallel(states),
        }
    }

    fn run_sequential(&self, states: StateMap) -> StateMap {
        let mut acc = StateMap::new();
        let mut buf = Vec::new();
        for (key, mult) in &states {
            self.expand_into(key, mult, &mut acc, &mut buf);
        }
        acc
    }

    #[cfg(feature = "parallel")]
    fn run_parallel(&self, states: StateMap) -> StateMap {
        use rayon::prelude::*;

        if states.len() < PARALLEL_MIN_STATES || rayon::current_num_threads() < 2 {
            return self.run_sequential(states);
        }
        states
            .par_iter()
            .fold(
                || (StateMap::new(), Vec::new()),
                |(mut acc, mut buf), (key, mult)| {
                    self.expand_into(key, mult, &mut acc, &mut buf);
                    (acc, buf)
                },
            )
            .map(|(acc, _)| acc)
            .reduce(StateMap::new, merge_maps)
    }

    #[cfg(not(feature = "parallel"))]
    fn run_parallel(&self, states: StateMap) -> StateMap {
        self.run_sequential(states)
    }
}

#[cfg_attr(not(feature = "parallel"), allow(dead_code))]
fn merge_maps(a: StateMap, b: StateMap) -> StateMap {
    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    for (k, v) in small {
        *big.entry(k).or_insert_with(BigUint::zero) += v;
    }
    big
}

/// Bookkeeping for one processed row of the merged DP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowStats {
    pub row: usize,
    /// Distinct `(total, maxima)` states still alive after the row.
    pub live_states: usize,
    /// Admissible prefixes represented by the live states.
    pub live_prefixes: BigUint,
    /// Prefixes moved into the table because no later row can fit.
    pub retired_prefixes: BigUint,
}

fn check_n(n_max: usize) -> Result<u64> {
    if n_max == 0 {
        return Err(invalid("N must be at least 1"));
    }
    Ok(n_max as u64)
}

fn initial_states(wv: &WeightVector) -> StateMap {
    let mut states = StateMap::new();
    states.insert(StateKey { total: 0, maxima: initial_maxima(wv).into() }, BigUint::one());
    states
}

/// `P(1..=N)` for the weight `wv`, using the default [`Execution`].
pub fn count_admissible(wv: &WeightVector, n_max: usize) -> Result<CountTable> {
    count_admissible_with(wv, n_max, Execution::default())
}

pub fn count_admissible_with(wv: &WeightVector, n_max: usize, exec: Execution) -> Result<CountTable> {
    count_admissible_traced(wv, n_max, exec).map(|(table, _)| table)
}

/// Merged DP with per-row statistics.
///
/// After row `i`, a state whose total plus the smallest part of row `i + 1`
/// exceeds `N` can only be extended by zero rows, which are always
/// admissible; such states are retired into the table immediately. The run
/// ends once every state has been retired.
pub fn count_admissible_traced(
    wv: &WeightVector,
    n_max: usize,
    exec: Execution,
) -> Result<(CountTable, Vec<RowStats>)> {
    let bound = check_n(n_max)?;
    let w = wv.width();
    let mut counts = vec![BigUint::zero(); n_max + 1];
    let mut states = initial_states(wv);
    let mut trace = Vec::new();

    let mut i = 1;
    while !states.is_empty() {
        let choices = row_choices(i, wv, Some(bound));
        let transition =
            Transition { choices: &choices, level: wv.level(), bound: Some(bound), track_totals: true };
        states = transition.run(states, exec);

        let next_min = smallest_free_part(i + 1, w);
        let mut retired = BigUint::zero();
        states.retain(|key, mult| {
            if key.total + next_min > bound {
                counts[key.total as usize] += &*mult;
                retired += &*mult;
                false
            } else {
                true
            }
        });
        trace.push(RowStats {
            row: i,
            live_states: states.len(),
            live_prefixes: states.values().sum(),
            retired_prefixes: retired,
        });
        i += 1;
    }
    debug_assert!(counts[0].is_one());
    Ok((CountTable { counts }, trace))
}

/// Unmerged diagnostic run: keeps one `(total, maxima)` entry per admissible
/// prefix and counts a partition at the row where its total last grows.
/// Returns the table and the number of live entries after each row.
/// Exponential in memory; meant for small instances only.
pub fn count_unmerged(wv: &WeightVector, n_max: usize) -> Result<(CountTable, Vec<usize>)> {
    let bound = check_n(n_max)?;
    let w = wv.width();
    let mut counts = vec![BigUint::zero(); n_max + 1];
    counts[0] = BigUint::one();
    let mut entries: Vec<(u64, Vec<u32>)> = vec![(0, initial_maxima(wv))];
    let mut sizes = Vec::new();
    let mut buf = Vec::new();

    let mut i = 1;
    while !entries.is_empty() {
        let choices = row_choices(i, wv, Some(bound));
        let next_min = smallest_free_part(i + 1, w);
        let mut next = Vec::new();
        for (total0, ms0) in &entries {
            for c in &choices {
                if !maxima_step_into(ms0, &c.freqs, wv.level(), &mut buf) {
                    continue;
                }
                let total1 = total0 + c.mass;
                if total1 > bound {
                    continue;
                }
                if total1 > *total0 {
                    counts[total1 as usize] += 1u32;
                }
                if total1 + next_min <= bound {
                    next.push((total1, buf.clone()));
                }
            }
        }
        sizes.push(next.len());
        entries = next;
        i += 1;
    }
    Ok((CountTable { counts }, sizes))
}

/// Independent oracle: enumerates every frequency matrix on rows `1..=R`
/// with free entries in `0..=k` and total at most `N`, keeps those passing
/// [`path_check`], and histograms the totals. Requires `2(R + 1) - w > N`.
pub fn brute_force_count(wv: &WeightVector, n_max: usize, row_bound: usize) -> Result<CountTable> {
    let bound = check_n(n_max)?;
    let w = wv.width();
    if 2 * (row_bound + 1) <= w + n_max {
        return Err(invalid(format!(
            "row bound {row_bound} too small: row {} still has parts <= {n_max}",
            row_bound + 1
        )));
    }

    let cells: Vec<(usize, usize, u64)> = (1..=row_bound)
        .flat_map(|i| (1..=free_cells(i, w)).map(move |j| (i, j, (2 * i - j) as u64)))
        .collect();
    let mut free: Vec<Vec<u32>> = (1..=row_bound).map(|i| vec![0; free_cells(i, w)]).collect();
    let mut counts = vec![BigUint::zero(); n_max + 1];

    struct Search<'a> {
        wv: &'a WeightVector,
        cells: &'a [(usize, usize, u64)],
        counts: &'a mut Vec<BigUint>,
    }

    impl Search<'_> {
        fn go(&mut self, idx: usize, remaining: u64, free: &mut Vec<Vec<u32>>) {
            if idx == self.cells.len() {
                let m = FrequencyMatrix::from_free(self.wv, free).expect("row shapes follow free_cells");
                if path_check(&m, self.wv) {
                    self.counts[m.total() as usize] += 1u32;
                }
                return;
            }
            let (i, j, part) = self.cells[idx];
            let max_f = u64::from(self.wv.level()).min(remaining / part);
            for f in 0..=max_f {
                free[i - 1][j - 1] = f as u32;
                self.go(idx + 1, remaining - f * part, free);
            }
            free[i - 1][j - 1] = 0;
        }
    }

    Search { wv, cells: &cells, counts: &mut counts }.go(0, bound, &mut free);
    Ok(CountTable { counts })
}

/// Smallest row bound accepted by [`brute_force_count`].
pub fn minimal_row_bound(w: usize, n_max: usize) -> usize {
    (w + n_max) / 2
}

/// Number of admissible frequency matrices for `[0, 0, k_1, 0, k_2, ..., 0, k_l]`
/// (width `2l + 1`) whose free entries lie in rows `1..=l`, with no bound on
/// the partition total.
pub fn dimension(finite_weight: &[u32]) -> Result<BigUint> {
    dimension_with(finite_weight, Execution::default())
}

pub fn dimension_with(finite_weight: &[u32], exec: Execution) -> Result<BigUint> {
    if finite_weight.is_empty() {
        return Err(invalid("dimension needs l >= 1 weight entries"));
    }
    let mut k = vec![0];
    k.extend_from_slice(finite_weight);
    let wv = WeightVector::odd(&k)?;

    let mut states = initial_states(&wv);
    for i in 1..=finite_weight.len() {
        let choices = row_choices(i, &wv, None);
        let transition =
            Transition { choices: &choices, level: wv.level(), bound: None, track_totals: false };
        states = transition.run(states, exec);
    }
    Ok(states.values().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(t: &CountTable) -> Vec<u64> {
        t.values().iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    fn bracket(b: &[u32]) -> WeightVector {
        WeightVector::from_bracket(b.to_vec()).unwrap()
    }

    #[test]
    fn rogers_ramanujan_table() {
        let t = count_admissible(&bracket(&[0, 1]), 20).unwrap();
        assert_eq!(values(&t), vec![1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 14, 17, 19, 23, 26, 31]);
        assert_eq!(t.get(0), &BigUint::one());
    }

    #[test]
    fn level_one_middle_weight() {
        let t = count_admissible(&bracket(&[0, 0, 1, 0, 0]), 6).unwrap();
        assert_eq!(values(&t), vec![1, 2, 3, 3, 5, 7]);
    }

    #[test]
    fn execution_modes_agree() {
        let wv = WeightVector::even(&[1, 1, 0]).unwrap();
        let a = count_admissible_with(&wv, 15, Execution::Sequential).unwrap();
        let b = count_admissible_with(&wv, 15, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_zero_n() {
        assert!(count_admissible(&bracket(&[1, 0]), 0).is_err());
    }

    #[test]
    fn brute_force_small_cases() {
        let t = brute_force_count(&bracket(&[0, 1]), 3, minimal_row_bound(2, 3)).unwrap();
        assert_eq!(values(&t), vec![1, 1, 1]);
        let t = brute_force_count(&bracket(&[0, 0, 1, 0, 0]), 6, minimal_row_bound(5, 6)).unwrap();
        assert_eq!(values(&t), vec![1, 2, 3, 3, 5, 7]);
        assert!(brute_force_count(&bracket(&[0, 1]), 3, 1).is_err());
    }

    #[test]
    fn minimal_row_bound_is_tight() {
        for w in 2..8 {
            for n in 1..15 {
                let r = minimal_row_bound(w, n);
                assert!(2 * (r + 1) > w + n);
                assert!(r == 0 || 2 * r <= w + n);
            }
        }
    }

    #[test]
    fn rank_one_dimension() {
        for k in 1..6u32 {
            assert_eq!(dimension(&[k]).unwrap(), BigUint::from(k + 1));
        }
        assert!(dimension(&[0, 0]).is_err());
        assert!(dimension(&[]).is_err());
    }

    #[test]
    fn trace_accounts_for_every_prefix() {
        let wv = bracket(&[0, 0, 1, 0, 0]);
        let (t, trace) = count_admissible_traced(&wv, 8, Execution::Sequential).unwrap();
        let retired: BigUint = trace.iter().map(|r| r.retired_prefixes.clone()).sum();
        let total: BigUint = t.counts.iter().sum();
        assert_eq!(retired, total);
        assert!(trace.last().unwrap().live_prefixes.is_zero());
    }
}
