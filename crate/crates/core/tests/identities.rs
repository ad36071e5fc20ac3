//! Product sides against counting sides for every listed weight, to n = 20.

mod common;

use colpart::{count_admissible, even_product, expand, lepowsky_product, parse_residue_spec, WeightVector};
use num_traits::Signed;

use common::{Identity, CHARACTER_21001, EVEN, ODD};

const N: usize = 20;

/// Listed notations that disagree with both the counts and the built
/// product; the counts side is authoritative.
const MISPRINTED: &[&[u32]] = &[&[0, 3, 0], &[0, 1, 1, 0, 1]];

fn check(list: &[Identity], odd: bool) {
    for id in list {
        let wv = if odd { WeightVector::odd(id.weight) } else { WeightVector::even(id.weight) }.unwrap();
        let built = if odd { lepowsky_product(id.weight) } else { even_product(id.weight) }.unwrap();
        let listed = parse_residue_spec(id.spec).unwrap();
        let counts = count_admissible(&wv, N).unwrap().to_series();

        assert_eq!(counts, expand(&built, N), "{wv}: counts vs built product");
        if odd && MISPRINTED.contains(&id.weight) {
            assert_ne!(expand(&listed, N), counts, "{wv}: listed misprint now matches?");
        } else {
            assert_eq!(expand(&listed, N), counts, "{wv}: counts vs {}", id.spec);
        }
    }
}

#[test]
fn odd_width_identities() {
    check(ODD, true);
}

#[test]
fn even_width_identities() {
    check(EVEN, false);
}

#[test]
fn character_of_21001_matches_triangle_listing() {
    let built = lepowsky_product(&[2, 1, 0, 0, 1]).unwrap();
    let listed = parse_residue_spec(CHARACTER_21001).unwrap();
    assert_eq!(built.net_exponents(), listed.net_exponents());
    assert_eq!(expand(&built, 40), expand(&listed, 40));
}

#[test]
fn built_products_expand_nonnegative() {
    // These three carry numerator factors; all others are pure denominators.
    let with_numerators: &[&[u32]] = &[&[0, 1, 0], &[1, 1, 1], &[0, 3, 0]];
    for (odd, list) in [(true, ODD), (false, EVEN)] {
        for id in list {
            let p = if odd { lepowsky_product(id.weight) } else { even_product(id.weight) }.unwrap();
            assert!(expand(&p, 30).coeffs().iter().all(|c| !c.is_negative()), "{:?}", id.weight);
            let pure = !(odd && with_numerators.contains(&id.weight));
            assert_eq!(p.is_generating(), pure, "{:?}", id.weight);
        }
    }
}

#[test]
fn level_rank_duality_shared_product() {
    let products: Vec<_> =
        [[1, 1, 0], [1, 0, 1], [0, 0, 2]].iter().map(|k| even_product(k).unwrap().net_exponents()).collect();
    assert_eq!(products[0], products[1]);
    assert_eq!(products[1], products[2]);
    // Level 2 on w = 2 against level 1 on w = 4: same moduli and class sets.
    for (a, b) in [([2, 0], [1, 0, 0]), ([0, 2], [0, 1, 0]), ([1, 1], [0, 0, 1])] {
        assert_eq!(even_product(&a).unwrap().net_exponents(), even_product(&b).unwrap().net_exponents());
    }
}
