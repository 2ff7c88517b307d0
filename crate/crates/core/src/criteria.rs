//! Smoothness criteria for torus fixed points of a Schubert variety `X_w`.
//!
//! All criteria read the numerators `f_{y,w}` of the reduced equivariant
//! multiplicities over the Bruhat interval `[x, w]`:
//!
//! * rationally smooth at `x`: every `f_{y,w}` is a constant,
//! * smooth at `x`: every `f_{y,w}` is `+-1`,
//! * `p`-smooth at `x`: every `f_{y,w}` is an integer prime to `p`,
//! * Z-smooth at `x`: the same as smooth (smooth and Z-smooth loci of
//!   Schubert varieties coincide).
//!
//! A constant numerator whose scalar keeps a denominator after reduction is
//! treated as failing `p`-smoothness exactly for the primes dividing that
//! denominator. This never happens for Schubert varieties in practice, but
//! the engine does not assume it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::eqmult::{MultiplicityTable, NumeratorReport};
use crate::error::{Error, Result};
use crate::scalar::{prime_factors, Coeff};
use crate::weyl::{WeylElement, WeylGroup};

/// Constancy class of a single numerator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NumeratorKind {
    /// Constant integer `|f|`.
    Integer(BigInt),
    /// Constant `num/den` with `den > 1`, both positive.
    NonIntegral(BigInt, BigInt),
    NonConstant,
}

impl fmt::Display for NumeratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumeratorKind::Integer(a) => write!(f, "{a}"),
            NumeratorKind::NonIntegral(a, b) => write!(f, "{a}/{b}"),
            NumeratorKind::NonConstant => f.write_str("nonconstant"),
        }
    }
}

impl<T: Coeff> NumeratorReport<T> {
    pub fn kind(&self) -> NumeratorKind {
        if !self.is_constant {
            return NumeratorKind::NonConstant;
        }
        let num = self.f_scalar.numer().abs().to_bigint();
        let den = self.f_scalar.denom().to_bigint();
        if den.is_one() {
            NumeratorKind::Integer(num)
        } else {
            NumeratorKind::NonIntegral(num, den)
        }
    }

    /// Primes dividing the numerator or the surviving scalar denominator.
    /// Only meaningful for constant numerators.
    pub fn bad_primes(&self) -> BTreeSet<BigInt> {
        let mut out: BTreeSet<BigInt> = prime_factors(&self.f_scalar.numer().to_bigint())
            .into_iter()
            .collect();
        out.extend(prime_factors(&self.f_scalar.denom().to_bigint()));
        out
    }

    fn divisible_by(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        let num = self.f_scalar.numer().to_bigint();
        let den = self.f_scalar.denom().to_bigint();
        (num % &p == BigInt::from(0)) || (den % &p == BigInt::from(0))
    }
}

/// Reports of `[x, w]`.
pub fn interval_reports<'a, T: Coeff>(
    table: &'a MultiplicityTable<T>,
    x: &WeylElement,
) -> Result<Vec<&'a NumeratorReport<T>>> {
    let g = table.group();
    if !g.bruhat_leq(x, table.w())? {
        return Err(Error::NotBelow(x.to_string(), table.w().to_string()));
    }
    let mut out = Vec::new();
    for r in table.reports() {
        if r.y.length() >= x.length() && g.bruhat_leq(x, &r.y)? {
            out.push(r);
        }
    }
    Ok(out)
}

/// Every numerator over `[x, w]` is an integer not divisible by `p`.
pub fn p_smooth_at<T: Coeff>(table: &MultiplicityTable<T>, x: &WeylElement, p: u64) -> Result<bool> {
    Ok(interval_reports(table, x)?
        .iter()
        .all(|r| r.is_constant && !r.divisible_by(p)))
}

/// Every numerator over `[x, w]` is a nonzero constant.
pub fn rationally_smooth_at<T: Coeff>(table: &MultiplicityTable<T>, x: &WeylElement) -> Result<bool> {
    Ok(interval_reports(table, x)?.iter().all(|r| r.is_constant))
}

/// Every numerator over `[x, w]` is `+-1`.
pub fn smooth_at<T: Coeff>(table: &MultiplicityTable<T>, x: &WeylElement) -> Result<bool> {
    Ok(interval_reports(table, x)?.iter().all(|r| r.is_unit()))
}

/// Z-smoothness, read off as smoothness.
pub fn z_smooth_at<T: Coeff>(table: &MultiplicityTable<T>, x: &WeylElement) -> Result<bool> {
    smooth_at(table, x)
}

/// Pointwise form of the smoothness test: `f_{x,w} = +-1` at `x` alone.
pub fn smooth_at_point<T: Coeff>(table: &MultiplicityTable<T>, x: &WeylElement) -> Result<bool> {
    point_report(table, x).map(|r| r.is_unit())
}

/// Pointwise form of the rational smoothness test.
pub fn rationally_smooth_at_point<T: Coeff>(
    table: &MultiplicityTable<T>,
    x: &WeylElement,
) -> Result<bool> {
    point_report(table, x).map(|r| r.is_constant)
}

fn point_report<'a, T: Coeff>(
    table: &'a MultiplicityTable<T>,
    x: &WeylElement,
) -> Result<&'a NumeratorReport<T>> {
    table.group().check(x)?;
    table
        .get(x)
        .ok_or_else(|| Error::NotBelow(x.to_string(), table.w().to_string()))
}

/// Primes `p` at which the rationally smooth point `x` fails to be
/// `p`-smooth.
pub fn torsion_primes<T: Coeff>(table: &MultiplicityTable<T>, x: &WeylElement) -> Result<BTreeSet<BigInt>> {
    let reports = interval_reports(table, x)?;
    let mut out = BTreeSet::new();
    for r in reports {
        if !r.is_constant {
            return Err(Error::NonConstant(r.y.to_string()));
        }
        out.extend(r.bad_primes());
    }
    Ok(out)
}

/// Coefficients of `sum_{y in [x, w]} q^{l(y) - l(x)}`.
pub fn rank_generating_function(g: &WeylGroup, x: &WeylElement, w: &WeylElement) -> Result<Vec<usize>> {
    let iv = g.bruhat_interval(x, w)?;
    let mut counts = vec![0usize; w.length() - x.length() + 1];
    for y in iv {
        counts[y.length() - x.length()] += 1;
    }
    Ok(counts)
}

/// Rank symmetry of `[x, w]`. For `x = e` this is the Carrell–Peterson
/// characterisation of rational smoothness of `X_w`. For other `x` it is
/// neither necessary nor sufficient: in A3, `[s2, w0]` has ranks
/// `1, 4, 6, 5, 3, 1` on the smooth flag variety, while `[s2, s2 s3 s1 s2]`
/// has ranks `1, 4, 4, 1` although `s2` is a singular point. Use
/// [`bruhat_graph_oracle`] for a local test.
pub fn palindromicity_oracle(g: &WeylGroup, x: &WeylElement, w: &WeylElement) -> Result<bool> {
    let c = rank_generating_function(g, x, w)?;
    Ok(c.iter().eq(c.iter().rev()))
}

/// Carrell–Peterson degree test: `X_w` is rationally smooth at `x` iff
/// every `u` in `[x, w]` has exactly `l(w)` Bruhat graph edges `u -- ut`
/// with `ut <= w`. Uses only the Bruhat order, never a multiplicity.
pub fn bruhat_graph_oracle(g: &WeylGroup, x: &WeylElement, w: &WeylElement) -> Result<bool> {
    let upper = g.bruhat_interval(x, w)?;
    let lower = g.lower_interval(w)?;
    for u in &upper {
        let uinv = g.inverse(u)?;
        let mut degree = 0;
        for v in &lower {
            if is_reflection(&g.mul(&uinv, v)?, g.rank()) {
                degree += 1;
            }
        }
        if degree != w.length() {
            return Ok(false);
        }
    }
    Ok(true)
}

// An involution `t` with `1 - t` of rank one.
fn is_reflection(t: &WeylElement, n: usize) -> bool {
    if t.length().is_multiple_of(2) {
        return false;
    }
    let m = t.matrix();
    let d = |i: usize, j: usize| i64::from(i == j) - m[i * n + j];
    let mut pivot = None;
    for i in 0..n {
        for j in 0..n {
            if d(i, j) != 0 {
                pivot = Some((i, j));
            }
        }
    }
    let Some((pi, pj)) = pivot else {
        return false;
    };
    // every row is a multiple of row pi, every 2x2 minor through the pivot vanishes
    let rank_one = (0..n).all(|i| (0..n).all(|j| d(i, j) * d(pi, pj) == d(i, pj) * d(pi, j)));
    if !rank_one {
        return false;
    }
    // t^2 = 1
    (0..n).all(|i| {
        (0..n).all(|j| (0..n).map(|k| m[i * n + k] * m[k * n + j]).sum::<i64>() == i64::from(i == j))
    })
}

/// Classification of one fixed point `x` of `X_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointStatus {
    pub x: WeylElement,
    /// Numerator at `x` itself.
    pub numerator: NumeratorKind,
    pub rationally_smooth: bool,
    pub smooth: bool,
    pub z_smooth: bool,
    pub p_smooth: BTreeMap<u64, bool>,
    /// Defined when the point is rationally smooth.
    pub torsion_primes: Option<BTreeSet<BigInt>>,
}

/// Classification of every fixed point of `X_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusReport {
    pub w: WeylElement,
    pub primes: Vec<u64>,
    pub points: Vec<PointStatus>,
}

#[derive(Clone)]
struct Upward {
    all_constant: bool,
    all_unit: bool,
    bad: BTreeSet<BigInt>,
}

impl LocusReport {
    /// Classifies every `x <= w`.
    ///
    /// Interval conditions are propagated downwards along Bruhat covers:
    /// `[x, w]` is `{x}` together with `[y, w]` for the covers `y` of `x`.
    pub fn compute<T: Coeff>(table: &MultiplicityTable<T>, primes: &[u64]) -> Result<Self> {
        let g = table.group();
        let reports = table.reports();
        let mut up: Vec<Option<Upward>> = vec![None; reports.len()];
        // Reports are sorted by length; walk from the top.
        for k in (0..reports.len()).rev() {
            let r = &reports[k];
            let mut agg = Upward {
                all_constant: r.is_constant,
                all_unit: r.is_unit(),
                bad: if r.is_constant { r.bad_primes() } else { BTreeSet::new() },
            };
            for (j, s) in reports.iter().enumerate().skip(k + 1) {
                if s.y.length() > r.y.length() + 1 {
                    break;
                }
                if s.y.length() == r.y.length() + 1 && g.bruhat_leq(&r.y, &s.y)? {
                    let above = up[j].as_ref().expect("computed");
                    agg.all_constant &= above.all_constant;
                    agg.all_unit &= above.all_unit;
                    agg.bad.extend(above.bad.iter().cloned());
                }
            }
            up[k] = Some(agg);
        }
        let points = reports
            .iter()
            .zip(up)
            .map(|(r, agg)| {
                let agg = agg.expect("computed");
                let p_smooth = primes
                    .iter()
                    .map(|&p| (p, agg.all_constant && !agg.bad.contains(&BigInt::from(p))))
                    .collect();
                PointStatus {
                    x: r.y.clone(),
                    numerator: r.kind(),
                    rationally_smooth: agg.all_constant,
                    smooth: agg.all_unit,
                    z_smooth: agg.all_unit,
                    p_smooth,
                    torsion_primes: agg.all_constant.then_some(agg.bad),
                }
            })
            .collect();
        Ok(LocusReport {
            w: table.w().clone(),
            primes: primes.to_vec(),
            points,
        })
    }

    /// Checks `smooth => Z-smooth => p-smooth => rationally smooth`, the
    /// identity `smooth = Z-smooth`, and upward closure of each locus.
    /// Returns a description of every violation.
    pub fn violations(&self, g: &WeylGroup) -> Vec<String> {
        let mut out = Vec::new();
        for pt in &self.points {
            if pt.smooth != pt.z_smooth {
                out.push(format!("{}: smooth != Z-smooth", pt.x));
            }
            for (&p, &ok) in &pt.p_smooth {
                if pt.z_smooth && !ok {
                    out.push(format!("{}: Z-smooth but not {p}-smooth", pt.x));
                }
                if ok && !pt.rationally_smooth {
                    out.push(format!("{}: {p}-smooth but not rationally smooth", pt.x));
                }
            }
            if pt.smooth && !pt.rationally_smooth {
                out.push(format!("{}: smooth but not rationally smooth", pt.x));
            }
        }
        for a in &self.points {
            for b in &self.points {
                if b.x.length() <= a.x.length() || !g.bruhat_leq(&a.x, &b.x).unwrap_or(false) {
                    continue;
                }
                if a.rationally_smooth && !b.rationally_smooth {
                    out.push(format!("rational smoothness not upward closed: {} < {}", a.x, b.x));
                }
                for (p, ok) in &a.p_smooth {
                    if *ok && !b.p_smooth[p] {
                        out.push(format!("{p}-smoothness not upward closed: {} < {}", a.x, b.x));
                    }
                }
            }
        }
        out
    }

    pub fn point(&self, x: &WeylElement) -> Option<&PointStatus> {
        self.points.iter().find(|p| &p.x == x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Gcm;
    use crate::weyl::Word;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(Gcm::builtin(t.parse().unwrap()))
    }

    fn table(g: &WeylGroup, word: &str) -> MultiplicityTable<BigInt> {
        MultiplicityTable::from_word(g, &word.parse::<Word>().unwrap()).unwrap()
    }

    #[test]
    fn top_point_is_smooth() {
        let g = group("B3");
        let t = table(&g, "3,2,3,1,2");
        let w = t.w().clone();
        assert!(smooth_at(&t, &w).unwrap());
        assert!(z_smooth_at(&t, &w).unwrap());
        assert!(rationally_smooth_at(&t, &w).unwrap());
        for p in [2, 3, 5] {
            assert!(p_smooth_at(&t, &w, p).unwrap());
        }
        assert!(torsion_primes(&t, &w).unwrap().is_empty());
    }

    #[test]
    fn flag_variety_a2() {
        let g = group("A2");
        let t = table(&g, "1,2,1");
        let e = g.identity();
        assert!(smooth_at(&t, &e).unwrap());
        assert!(rationally_smooth_at(&t, &e).unwrap());
        assert!(torsion_primes(&t, &e).unwrap().is_empty());
        assert!(palindromicity_oracle(&g, &e, t.w()).unwrap());
        assert!(bruhat_graph_oracle(&g, &e, t.w()).unwrap());
        assert_eq!(rank_generating_function(&g, &e, t.w()).unwrap(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn errors_outside_interval() {
        let g = group("A2");
        let t = table(&g, "1,2");
        let s2s1 = g.element_from_word(&"2,1".parse().unwrap()).unwrap();
        assert!(matches!(smooth_at(&t, &s2s1), Err(Error::NotBelow(..))));
        assert!(matches!(palindromicity_oracle(&g, &s2s1, t.w()), Err(Error::NotBelow(..))));
        assert!(matches!(bruhat_graph_oracle(&g, &s2s1, t.w()), Err(Error::NotBelow(..))));
        assert!(matches!(smooth_at_point(&t, &s2s1), Err(Error::NotBelow(..))));
    }

    #[test]
    fn b2_singular_point() {
        // X_{s2 s1 s2} in B2 is rationally smooth but singular at e with
        // numerator 2.
        let g = group("B2");
        let t = table(&g, "2,1,2");
        let e = g.identity();
        let rep = t.get(&e).unwrap();
        assert_eq!(rep.kind(), NumeratorKind::Integer(BigInt::from(2)));
        assert!(rationally_smooth_at(&t, &e).unwrap());
        assert!(!smooth_at(&t, &e).unwrap());
        assert!(!p_smooth_at(&t, &e, 2).unwrap());
        assert!(p_smooth_at(&t, &e, 3).unwrap());
        assert_eq!(
            torsion_primes(&t, &e).unwrap(),
            [BigInt::from(2)].into_iter().collect()
        );
        assert!(!smooth_at_point(&t, &e).unwrap());
        assert!(rationally_smooth_at_point(&t, &e).unwrap());
    }

    #[test]
    fn locus_report_agrees_with_direct_criteria() {
        for (ty, word) in [("B3", "1,2,3,2,1"), ("G2", "1,2,1,2,1"), ("A3", "2,1,3,2")] {
            let g = group(ty);
            let t = table(&g, word);
            let primes = [2, 3, 5];
            let locus = LocusReport::compute(&t, &primes).unwrap();
            assert!(locus.violations(&g).is_empty(), "{:?}", locus.violations(&g));
            for pt in &locus.points {
                assert_eq!(pt.smooth, smooth_at(&t, &pt.x).unwrap());
                assert_eq!(pt.rationally_smooth, rationally_smooth_at(&t, &pt.x).unwrap());
                for &p in &primes {
                    assert_eq!(pt.p_smooth[&p], p_smooth_at(&t, &pt.x, p).unwrap(), "{ty} {} {p}", pt.x);
                }
                match &pt.torsion_primes {
                    Some(tp) => assert_eq!(tp, &torsion_primes(&t, &pt.x).unwrap()),
                    None => assert!(torsion_primes(&t, &pt.x).is_err()),
                }
            }
        }
    }

    #[test]
    fn torsion_primes_match_failing_primes() {
        let g = group("G2");
        for w in g.elements().unwrap() {
            let t: MultiplicityTable<BigInt> = MultiplicityTable::new(&g, &w).unwrap();
            for r in t.reports() {
                let Ok(tp) = torsion_primes(&t, &r.y) else { continue };
                for p in [2u64, 3, 5, 7] {
                    assert_eq!(tp.contains(&BigInt::from(p)), !p_smooth_at(&t, &r.y, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn symmetric_interval_at_singular_point() {
        let g = group("A3");
        let t = table(&g, "2,3,1,2");
        let s2 = g.generator(2).unwrap();
        assert!(!rationally_smooth_at(&t, &s2).unwrap());
        assert_eq!(rank_generating_function(&g, &s2, t.w()).unwrap(), vec![1, 4, 4, 1]);
        assert!(palindromicity_oracle(&g, &s2, t.w()).unwrap());
        assert!(!bruhat_graph_oracle(&g, &s2, t.w()).unwrap());
        let e = g.identity();
        assert!(!palindromicity_oracle(&g, &e, t.w()).unwrap());

        let full = table(&g, "1,2,1,3,2,1");
        assert!(rationally_smooth_at(&full, &s2).unwrap());
        assert!(!palindromicity_oracle(&g, &s2, full.w()).unwrap());
        assert!(bruhat_graph_oracle(&g, &s2, full.w()).unwrap());
    }
}
