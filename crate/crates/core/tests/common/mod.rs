//! Brute-force oracles shared by the integration tests. They only use the
//! Cartan matrix and plain integer linear algebra, never the fraction
//! arithmetic or the Bruhat machinery of the library.

#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use psmooth_core::{Gcm, WeylElement, WeylGroup};
use rand::Rng;

pub type Mat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Matrix of `s_i` (0-based) on the root lattice; column `j` is `s_i(alpha_j)`.
pub fn reflection(gcm: &Gcm, i: usize) -> Mat {
    let n = gcm.rank();
    let mut m = identity(n);
    for (j, x) in m[i].iter_mut().enumerate() {
        *x -= gcm.entry(i, j);
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn apply(a: &Mat, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn flat(m: &Mat) -> Vec<i64> {
    m.iter().flatten().copied().collect()
}

pub fn matrix_of(e: &WeylElement, n: usize) -> Mat {
    e.matrix().chunks(n).map(|r| r.to_vec()).collect()
}

fn pairing(v: &[i64], point: &[i64]) -> BigInt {
    v.iter().zip(point).map(|(a, b)| BigInt::from(a * b)).sum()
}

/// `sum over masks with product y of 1 / prod(weights)`, evaluated at
/// `point`, for the word `word` (1-based letters). None when a weight
/// vanishes at the point.
pub fn naive_multiplicity_at(gcm: &Gcm, word: &[usize], y: &Mat, point: &[i64]) -> Option<BigRational> {
    let n = gcm.rank();
    let refl: Vec<Mat> = (0..n).map(|i| reflection(gcm, i)).collect();
    let mut total = BigRational::zero();
    for mask in 0u64..(1 << word.len()) {
        let mut sigma = identity(n);
        let mut denom = BigInt::from(1);
        for (j, &letter) in word.iter().enumerate() {
            let i = letter - 1;
            let alpha: Vec<i64> = (0..n).map(|k| i64::from(k == i)).collect();
            if mask >> j & 1 == 1 {
                sigma = mat_mul(&sigma, &refl[i]);
            }
            // tangent weight -sigma_j(alpha_{i_j}), sigma_j including letter j
            let weight: BigInt = -pairing(&apply(&sigma, &alpha), point);
            if weight.is_zero() {
                return None;
            }
            denom *= weight;
        }
        if &sigma == y {
            total += BigRational::new(BigInt::from(1), denom);
        }
    }
    Some(total)
}

/// All products of subwords of `word`: the lower Bruhat interval of its
/// product when `word` is reduced.
pub fn subword_products(gcm: &Gcm, word: &[usize]) -> Vec<Mat> {
    let n = gcm.rank();
    let mut seen: HashSet<Mat> = HashSet::new();
    seen.insert(identity(n));
    for &letter in word {
        let r = reflection(gcm, letter - 1);
        let new: Vec<Mat> = seen.iter().map(|m| mat_mul(m, &r)).collect();
        seen.extend(new);
    }
    seen.into_iter().collect()
}

/// `Some(beta)` with `beta` positive and primitive when `t` is a reflection
/// `s_beta`.
pub fn reflection_root(t: &Mat) -> Option<Vec<i64>> {
    let n = t.len();
    if mat_mul(t, t) != identity(n) {
        return None;
    }
    let d: Mat = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j) - t[i][j]).collect())
        .collect();
    let col = (0..n).find(|&j| (0..n).any(|i| d[i][j] != 0))?;
    // rank one: every 2x2 minor vanishes
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if d[i][j] * d[k][l] != d[i][l] * d[k][j] {
                        return None;
                    }
                }
            }
        }
    }
    let v: Vec<i64> = (0..n).map(|i| d[i][col]).collect();
    let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    let s = if v.iter().any(|&x| x > 0) { g } else { -g };
    Some(v.iter().map(|x| x / s).collect())
}

fn inverse_of(m: &Mat, group: &[Mat]) -> Mat {
    let n = m.len();
    group
        .iter()
        .find(|g| mat_mul(m, g) == identity(n))
        .cloned()
        .unwrap_or_else(|| invert_unimodular(m))
}

// Weyl group elements have determinant +-1; adjugate over the integers.
fn invert_unimodular(m: &Mat) -> Mat {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = identity(n)
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("invertible");
        a.swap(c, p);
        inv.swap(c, p);
        let pv = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &pv;
            inv[c][j] = &inv[c][j] / &pv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let x = &a[c][j] * &f;
                    a[r][j] -= x;
                    let y = &inv[c][j] * &f;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv.iter()
        .map(|r| r.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect())
        .collect()
}

/// Weights `y(beta)` of the Bruhat graph edges `y -- y s_beta` inside the
/// interval.
pub fn bruhat_graph_weights(y: &Mat, interval: &[Mat]) -> Vec<Vec<i64>> {
    let yinv = inverse_of(y, interval);
    interval
        .iter()
        .filter(|v| *v != y)
        .filter_map(|v| reflection_root(&mat_mul(&yinv, v)))
        .map(|beta| apply(y, &beta))
        .collect()
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-1000..=1000)).collect()
}

/// `|e_{y,w}(pt) * prod(edge weights)(pt)|` at several random points; the
/// common value when it does not depend on the point. For rationally
/// smooth points this is `|f_{y,w}|`.
pub fn bruhat_graph_numerator<R: Rng>(
    gcm: &Gcm,
    word: &[usize],
    y: &Mat,
    rng: &mut R,
) -> Option<BigRational> {
    let interval = subword_products(gcm, word);
    let weights = bruhat_graph_weights(y, &interval);
    let n = gcm.rank();
    let mut value: Option<BigRational> = None;
    let mut samples = 0;
    while samples < 4 {
        let pt = random_point(rng, n);
        let Some(e) = naive_multiplicity_at(gcm, word, y, &pt) else {
            continue;
        };
        let prod: BigInt = weights.iter().map(|b| pairing(b, &pt)).product();
        if prod.is_zero() {
            continue;
        }
        let v = (e * BigRational::from_integer(prod)).abs();
        match &value {
            None => value = Some(v),
            Some(old) if *old != v => return None,
            _ => {}
        }
        samples += 1;
    }
    value
}

/// Elements of length at most `max_len`, through the library.
pub fn ball(g: &WeylGroup, max_len: usize) -> Vec<WeylElement> {
    g.enumerate_ball(max_len)
}

pub fn group(tag: &str) -> WeylGroup {
    let t = tag.parse().expect("known type");
    WeylGroup::new(Gcm::builtin(t))
}
