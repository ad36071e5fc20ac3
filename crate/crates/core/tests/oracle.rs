//! The merged DP against the brute-force path oracle and the unmerged run.

use colpart::counting::{
    brute_force_count, count_admissible_traced, count_admissible_with, count_unmerged, minimal_row_bound,
};
use colpart::{count_admissible, Execution, WeightVector};
use num_bigint::BigUint;

/// All brackets of width `w` with level exactly `k`.
fn brackets(w: usize, k: u32) -> Vec<Vec<u32>> {
    if w == 1 {
        return vec![vec![k]];
    }
    (0..=k)
        .rev()
        .flat_map(|first| {
            brackets(w - 1, k - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[test]
fn dp_matches_oracle_small_brackets() {
    for w in 2..=4 {
        for k in 1..=2 {
            for b in brackets(w, k) {
                let wv = WeightVector::from_bracket(b.clone()).unwrap();
                for n in [5, 10] {
                    let dp = count_admissible(&wv, n).unwrap();
                    let oracle = brute_force_count(&wv, n, minimal_row_bound(w, n)).unwrap();
                    assert_eq!(dp, oracle, "bracket {b:?}, N = {n}");
                }
            }
        }
    }
}

#[test]
fn larger_row_bound_changes_nothing() {
    let wv = WeightVector::from_bracket(vec![1, 0, 1]).unwrap();
    let a = brute_force_count(&wv, 6, minimal_row_bound(3, 6)).unwrap();
    let b = brute_force_count(&wv, 6, minimal_row_bound(3, 6) + 2).unwrap();
    assert_eq!(a, b);
}

#[test]
fn level_two_bottom_weight_table() {
    // P(6) = 12: the hand listing of (2,0,0)-admissible partitions of 6 stops at 8.
    let wv = WeightVector::odd(&[2, 0, 0]).unwrap();
    let expected: Vec<BigUint> = [1u32, 2, 3, 5, 8, 12, 17, 25].into_iter().map(BigUint::from).collect();
    assert_eq!(count_admissible(&wv, 8).unwrap().values(), &expected[..]);
    assert_eq!(brute_force_count(&wv, 8, minimal_row_bound(5, 8)).unwrap().values(), &expected[..]);
}

#[test]
fn unmerged_run_agrees_and_conserves_multiplicity() {
    let cases: [&[u32]; 4] = [&[0, 0, 1, 0, 0], &[2, 0, 0, 0, 0], &[1, 1, 0, 1], &[0, 2, 1]];
    for b in cases {
        let wv = WeightVector::from_bracket(b.to_vec()).unwrap();
        for n in [6, 9] {
            let (merged, trace) = count_admissible_traced(&wv, n, Execution::Sequential).unwrap();
            let (unmerged, sizes) = count_unmerged(&wv, n).unwrap();
            assert_eq!(merged, unmerged, "{b:?} N = {n}");
            let live: Vec<BigUint> = trace.iter().map(|r| r.live_prefixes.clone()).collect();
            let sizes: Vec<BigUint> = sizes.into_iter().map(BigUint::from).collect();
            assert_eq!(live, sizes, "{b:?} N = {n}");
            assert!(trace.iter().all(|r| BigUint::from(r.live_states) <= r.live_prefixes));
        }
    }
}

#[test]
fn parallel_and_sequential_agree() {
    for k in [[2u32, 1, 0, 0, 1], [0, 1, 1, 1, 1]] {
        let wv = WeightVector::even(&k).unwrap();
        assert_eq!(
            count_admissible_with(&wv, 18, Execution::Sequential).unwrap(),
            count_admissible_with(&wv, 18, Execution::Parallel).unwrap()
        );
    }
}

#[cfg(feature = "parallel")]
#[test]
fn parallel_merge_on_a_wide_frontier() {
    let wv = WeightVector::from_bracket(vec![1; 8]).unwrap();
    let (_, trace) = count_admissible_traced(&wv, 30, Execution::Sequential).unwrap();
    assert!(trace.iter().any(|r| r.live_states >= 16384));
    let pool = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let parallel = pool.install(|| count_admissible_with(&wv, 30, Execution::Parallel).unwrap());
    assert_eq!(parallel, count_admissible_with(&wv, 30, Execution::Sequential).unwrap());
}

#[test]
fn reversal_invariance_on_odd_widths() {
    for k in [[1u32, 0, 0], [2, 1, 0], [3, 0, 1], [1, 2, 0]] {
        let wv = WeightVector::odd(&k).unwrap();
        let rev = wv.reversed().unwrap();
        assert_eq!(count_admissible(&wv, 20).unwrap(), count_admissible(&rev, 20).unwrap(), "{wv}");
    }
    for k in [[1u32, 0, 0, 0], [2, 0, 1, 0], [1, 1, 0, 0]] {
        let wv = WeightVector::odd(&k).unwrap();
        let rev = wv.reversed().unwrap();
        assert_eq!(count_admissible(&wv, 20).unwrap(), count_admissible(&rev, 20).unwrap(), "{wv}");
    }
}

#[test]
fn raising_a_weight_entry_never_lowers_counts() {
    for w in 2..=5 {
        for k in 1..=2 {
            for b in brackets(w, k) {
                let base = count_admissible(&WeightVector::from_bracket(b.clone()).unwrap(), 12).unwrap();
                for pos in 0..w {
                    let mut up = b.clone();
                    up[pos] += 1;
                    let raised =
                        count_admissible(&WeightVector::from_bracket(up.clone()).unwrap(), 12).unwrap();
                    for n in 1..=12 {
                        assert!(raised.get(n) >= base.get(n), "{b:?} -> {up:?} at n = {n}");
                    }
                }
            }
        }
    }
}
