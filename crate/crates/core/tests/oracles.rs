//! Multiplicities against brute-force evaluation.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use psmooth_core::{Table, WeylGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::*;

fn check_against_naive(g: &WeylGroup, max_len: usize, seed: u64) {
    let gcm = g.gcm();
    let n = gcm.rank();
    g.enumerate_ball(max_len).par_iter().for_each(|w| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ w.length() as u64);
        let t = Table::new(g, w).unwrap();
        assert_eq!(t.len(), subword_products(gcm, t.word().letters()).len());
        for r in t.reports() {
            let y = matrix_of(&r.y, n);
            let mut hits = 0;
            while hits < 3 {
                let pt = random_point(&mut rng, n);
                let Some(naive) = naive_multiplicity_at(gcm, t.word().letters(), &y, &pt) else {
                    continue;
                };
                let Ok(got) = r.value.eval_at(&pt) else {
                    continue;
                };
                assert_eq!(got, naive, "e_({}, {}) = {} at {pt:?}", r.y, w, r.value);
                hits += 1;
            }
        }
    });
}

#[test]
fn naive_sum_a3() {
    check_against_naive(&group("A3"), 6, 1);
}

#[test]
fn naive_sum_b3() {
    check_against_naive(&group("B3"), 5, 2);
}

#[test]
fn naive_sum_g2() {
    check_against_naive(&group("G2"), 6, 3);
}

#[test]
fn naive_sum_affine() {
    check_against_naive(&group("affine-A1"), 6, 4);
}

#[test]
fn homogeneous_of_degree_minus_length() {
    for tag in ["A3", "B3", "G2", "affine-A1"] {
        let g = group(tag);
        for w in g.enumerate_ball(6) {
            let t = Table::new(&g, &w).unwrap();
            for r in t.reports() {
                assert!(!r.is_zero);
                assert!(r.f.is_homogeneous());
                assert_eq!(r.value.degree(), -(w.length() as i64), "{tag} ({}, {w})", r.y);
            }
        }
    }
}

#[test]
fn numerators_match_bruhat_graph() {
    // At rationally smooth points the reduced denominator is the product of
    // the Bruhat graph weights, so |f| can be read off by evaluation.
    for tag in ["B2", "B3", "G2"] {
        let g = group(tag);
        let n = g.rank();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for w in g.enumerate_ball(5) {
            let t = Table::new(&g, &w).unwrap();
            for r in t.reports().iter().filter(|r| r.is_constant) {
                let v = bruhat_graph_numerator(g.gcm(), t.word().letters(), &matrix_of(&r.y, n), &mut rng)
                    .expect("constant at a rationally smooth point");
                assert_eq!(Some(v.to_integer()), r.abs_f, "{tag} ({}, {w})", r.y);
            }
        }
    }
}

#[test]
fn b2_singular_point_value() {
    // e_{e, s2 s1 s2} in B2, frozen from the brute-force oracles above.
    let g = group("B2");
    let w = g.parse_element("2,1,2").unwrap();
    let t = Table::new(&g, &w).unwrap();
    let r = t.get(&g.identity()).unwrap();
    assert_eq!(r.abs_f, Some(BigInt::from(2)));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let v = bruhat_graph_numerator(g.gcm(), t.word().letters(), &matrix_of(&g.identity(), 2), &mut rng);
    assert_eq!(v, Some(BigRational::from_integer(BigInt::from(2))));
    assert_eq!(r.value.to_string(), "-2 / ((a1)*(a2)*(a1+2*a2))");
}
