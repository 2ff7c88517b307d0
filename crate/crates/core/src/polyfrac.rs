//! Sparse multivariate polynomials over an exact integer ring, and rational
//! functions whose denominators stay factored into linear forms.
//!
//! Every equivariant multiplicity has the shape `c * f / (l_1 ... l_m)` with
//! `c` rational, `f` a primitive polynomial and `l_k` primitive linear forms.
//! Keeping the denominator factored means reduction only ever needs exact
//! division by a linear form; no multivariate gcd is required.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{render_linear, RootVector};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Exponent vector ordered graded-lexicographically, with the last variable
/// the most significant (variable order `x_1 < x_2 < ... < x_n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times_var(&self, j: usize) -> Self {
        let mut m = self.clone();
        m.0[j] += 1;
        m
    }

    fn times(&self, other: &Monomial) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Default variable names `a1, ..., an`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("a{i}")).collect()
}

/// Sparse polynomial with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Coeff> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        Self::from_terms(nvars, [(m, T::one())])
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn from_linear(form: &LinearForm) -> Self {
        let n = form.nvars();
        let terms = form.coeffs().iter().enumerate().filter(|(_, c)| **c != 0).map(|(j, &c)| {
            let mut m = Monomial::one(n);
            m.0[j] = 1;
            (m, T::from(c))
        });
        Self::from_terms(n, terms)
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant value of a constant polynomial.
    pub fn constant_value(&self) -> Option<T> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(T::zero))
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.terms.values().next_back()
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |g, c| g.gcd(c))
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    fn div_exact(&self, c: &T) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    debug_assert!((x.clone() % c.clone()).is_zero());
                    (m.clone(), x.clone() / c.clone())
                })
                .collect(),
        }
    }

    /// Multiplies by a linear form.
    pub fn mul_linear(&self, form: &LinearForm) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            for (j, &a) in form.coeffs().iter().enumerate() {
                if a != 0 {
                    out.add_term(m.times_var(j), c.clone() * T::from(a));
                }
            }
        }
        out
    }

    /// Exact quotient by a linear form, or `None` when it does not divide.
    ///
    /// Division runs in a lexicographic order whose most significant
    /// variable has a nonzero coefficient in `form`, so the leading term of
    /// `form` is a single monomial and the remainder is exact.
    pub fn divide_by_linear(&self, form: &LinearForm) -> Option<Self> {
        assert_eq!(form.nvars(), self.nvars, "linear form arity");
        let n = self.nvars;
        let k = form
            .coeffs()
            .iter()
            .rposition(|&c| c != 0)
            .expect("linear form is nonzero");
        let ck = T::from(form.coeffs()[k]);
        // Key: (exponent of x_k, full exponent vector) under plain lex.
        let key = |m: &Monomial| (m.0[k], m.0.clone());
        let mut rem: BTreeMap<(u32, Vec<u32>), T> =
            self.terms.iter().map(|(m, c)| (key(m), c.clone())).collect();
        let mut quot = Self::zero(n);
        while let Some(((ek, exps), c)) = rem.pop_last() {
            if ek == 0 || !(c.clone() % ck.clone()).is_zero() {
                return None;
            }
            let t = c / ck.clone();
            let mut mono = Monomial(exps);
            mono.0[k] -= 1;
            for (j, &a) in form.coeffs().iter().enumerate() {
                if a == 0 || j == k {
                    continue;
                }
                let mj = mono.times_var(j);
                let entry = rem.entry(key(&mj)).or_insert_with(T::zero);
                *entry = entry.clone() - t.clone() * T::from(a);
                if entry.is_zero() {
                    rem.remove(&key(&mj));
                }
            }
            quot.add_term(mono, t);
        }
        Some(quot)
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.nvars, "evaluation point arity");
        let mut total = T::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    v = v * x.clone();
                }
            }
            total = total + v;
        }
        total
    }

    /// Splits off `(s, p)` with `self = s * p`, `p` primitive with a positive
    /// leading coefficient. The zero polynomial gives `s = 0`.
    pub fn normalize(&self) -> (T, Self) {
        if self.is_zero() {
            return (T::zero(), self.clone());
        }
        let mut c = self.content();
        if self.leading_coeff().expect("nonzero").is_negative() {
            c = -c;
        }
        (c.clone(), self.div_exact(&c))
    }

    /// Renders in decreasing monomial order, e.g. `a1^2-3*a1*a2+1`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            let mut factors: Vec<String> = Vec::new();
            for (j, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[j].clone()),
                    _ => factors.push(format!("{}^{}", names[j], e)),
                }
            }
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&format!("{abs}*"));
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl<T: Coeff> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars)))
    }
}

impl<T: Coeff> Add for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    /// Panics on a variable count mismatch; see [`MultiPoly::checked_add`].
    fn add(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        self.checked_add(rhs).expect("matching variable counts")
    }
}

impl<T: Coeff> Sub for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        self.checked_sub(rhs).expect("matching variable counts")
    }
}

impl<T: Coeff> Mul for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn mul(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        self.checked_mul(rhs).expect("matching variable counts")
    }
}

impl<T: Coeff> Neg for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

/// Nonzero primitive integer linear form with a positive first nonzero
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm(Vec<i64>);

// Shorter forms first, then by coefficients read from the last variable, so
// that `(a1)*(a2)*(a1+a2)` prints in the expected order.
impl Ord for LinearForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let weight = |f: &LinearForm| f.0.iter().map(|c| c.unsigned_abs()).sum::<u64>();
        weight(self)
            .cmp(&weight(other))
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for LinearForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl LinearForm {
    /// Writes `v = c * form` with `form` normalized. Fails on the zero vector.
    pub fn split(v: &[i64]) -> Result<(i64, LinearForm)> {
        let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g == 0 {
            return Err(Error::ZeroWeight);
        }
        let first = *v.iter().find(|&&x| x != 0).expect("nonzero");
        let c = if first < 0 { -g } else { g };
        Ok((c, LinearForm(v.iter().map(|x| x / c).collect())))
    }

    /// Normalized form of `v`; the scalar factor is discarded.
    pub fn new(v: &[i64]) -> Result<LinearForm> {
        Ok(Self::split(v)?.1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn render(&self, names: &[String]) -> String {
        render_linear(&self.0, names)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars())))
    }
}

/// Reduced rational function `scalar * num / prod(den)`.
///
/// Canonical form: `num` is primitive with positive leading coefficient,
/// no denominator form divides `num`, and the sign and integer parts live in
/// `scalar`. Zero is `scalar = 0`, `num = 0`, empty denominator. Canonical
/// forms of equal rational functions are identical, so `==` is equality of
/// functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredRational<T: Clone + Integer> {
    nvars: usize,
    scalar: Ratio<T>,
    num: MultiPoly<T>,
    den: BTreeMap<LinearForm, u32>,
}

impl<T: Coeff> FactoredRational<T> {
    pub fn zero(nvars: usize) -> Self {
        FactoredRational {
            nvars,
            scalar: Ratio::zero(),
            num: MultiPoly::zero(nvars),
            den: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(nvars))
    }

    pub fn from_poly(p: MultiPoly<T>) -> Self {
        Self::from_parts(Ratio::one(), p, BTreeMap::new())
    }

    /// Builds and fully reduces `scalar * num / prod(den)`.
    pub fn from_parts(scalar: Ratio<T>, num: MultiPoly<T>, den: BTreeMap<LinearForm, u32>) -> Self {
        let nvars = num.nvars();
        let mut f = FactoredRational {
            nvars,
            scalar,
            num,
            den,
        };
        f.reduce();
        f
    }

    /// `1 / prod(weights)`: the localization of a smooth fixed point whose
    /// tangent characters are `weights`.
    pub fn from_weights(nvars: usize, weights: &[RootVector]) -> Result<Self> {
        let mut c = T::one();
        let mut den: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for wt in weights {
            if wt.len() != nvars {
                return Err(Error::NvarsMismatch(nvars, wt.len()));
            }
            let (k, form) = LinearForm::split(wt.coords())?;
            c = c * T::from(k);
            *den.entry(form).or_insert(0) += 1;
        }
        // Already reduced: the numerator is a unit.
        Ok(FactoredRational {
            nvars,
            scalar: Ratio::new(T::one(), c),
            num: MultiPoly::one(nvars),
            den,
        })
    }

    fn reduce(&mut self) {
        if self.num.is_zero() || self.scalar.is_zero() {
            *self = Self::zero(self.nvars);
            return;
        }
        let (c, p) = self.num.normalize();
        self.scalar = self.scalar.clone() * Ratio::from_integer(c);
        self.num = p;
        let forms: Vec<LinearForm> = self.den.keys().cloned().collect();
        for form in forms {
            if self.num.is_constant() {
                break;
            }
            let mult = self.den.get_mut(&form).expect("present");
            while *mult > 0 {
                match self.num.divide_by_linear(&form) {
                    Some(q) => {
                        self.num = q;
                        *mult -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, m| *m > 0);
        let (c, p) = self.num.normalize();
        self.scalar = self.scalar.clone() * Ratio::from_integer(c);
        self.num = p;
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    /// Rational scalar in lowest terms (carries the sign).
    pub fn scalar(&self) -> &Ratio<T> {
        &self.scalar
    }

    /// Primitive numerator polynomial with positive leading coefficient.
    pub fn numerator(&self) -> &MultiPoly<T> {
        &self.num
    }

    /// `+1`, `-1`, or `0` for zero.
    pub fn sign(&self) -> i32 {
        if self.scalar.is_zero() {
            0
        } else if self.scalar.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Denominator as `(form, multiplicity)` pairs.
    pub fn den_factors(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.den.iter().map(|(f, &m)| (f, m))
    }

    /// Denominator as a multiset, each form repeated by its multiplicity.
    pub fn den_multiset(&self) -> Vec<LinearForm> {
        self.den
            .iter()
            .flat_map(|(f, &m)| std::iter::repeat_n(f.clone(), m as usize))
            .collect()
    }

    pub fn den_degree(&self) -> u32 {
        self.den.values().sum()
    }

    /// `deg(num) - |den|`.
    pub fn degree(&self) -> i64 {
        self.num.degree() as i64 - self.den_degree() as i64
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let mut lcm = self.den.clone();
        for (f, &m) in &other.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |x: &Self| -> MultiPoly<T> {
            let mut p = x.num.clone();
            for (f, &m) in &lcm {
                let have = x.den.get(f).copied().unwrap_or(0);
                for _ in have..m {
                    p = p.mul_linear(f);
                }
            }
            p
        };
        let (na, nb) = (lift(self), lift(other));
        let g = self.scalar.denom().lcm(other.scalar.denom());
        let ka = self.scalar.numer().clone() * (g.clone() / self.scalar.denom().clone());
        let kb = other.scalar.numer().clone() * (g.clone() / other.scalar.denom().clone());
        let sum = &na.scale(&ka) + &nb.scale(&kb);
        Ok(Self::from_parts(Ratio::new(T::one(), g), sum, lcm))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        Ok(Self::from_parts(
            self.scalar.clone() * other.scalar.clone(),
            &self.num * &other.num,
            den,
        ))
    }

    /// Multiplies by the rational `c`.
    pub fn scale(&self, c: &Ratio<T>) -> Result<Self> {
        if c.denom().is_zero() {
            return Err(Error::DivisionByZero);
        }
        if c.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let mut out = self.clone();
        out.scalar = out.scalar * c.clone();
        Ok(out)
    }

    /// Multiplies by `num / den`.
    pub fn scale_by(&self, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.scale(&Ratio::new(T::from(num), T::from(den)))
    }

    /// Exact value at an integer point.
    pub fn eval_at(&self, point: &[i64]) -> Result<Ratio<T>> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, point.len()));
        }
        let mut d = T::one();
        for (f, &m) in &self.den {
            let v: i64 = f.coeffs().iter().zip(point).map(|(a, x)| a * x).sum();
            if v == 0 {
                return Err(Error::VanishingDenominator);
            }
            for _ in 0..m {
                d = d * T::from(v);
            }
        }
        let pt: Vec<T> = point.iter().map(|&x| T::from(x)).collect();
        Ok(self.scalar.clone() * Ratio::new(self.num.eval(&pt), d))
    }

    /// Human-readable form `numerator / (q*(l1)*(l2)^2)`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let top = self.num.scale(self.scalar.numer());
        let top_s = if top.num_terms() > 1 && !self.den.is_empty() {
            format!("({})", top.render(names))
        } else {
            top.render(names)
        };
        let mut parts: Vec<String> = Vec::new();
        if !self.scalar.denom().is_one() {
            parts.push(self.scalar.denom().to_string());
        }
        for (f, &m) in &self.den {
            if m == 1 {
                parts.push(format!("({})", f.render(names)));
            } else {
                parts.push(format!("({})^{}", f.render(names), m));
            }
        }
        match parts.len() {
            0 => top_s,
            1 => format!("{} / {}", top_s, parts[0]),
            _ => format!("{} / ({})", top_s, parts.join("*")),
        }
    }

    /// Structured form with decimal-string coefficients.
    pub fn to_doc(&self) -> FracDoc {
        FracDoc {
            nvars: self.nvars,
            scalar_num: self.scalar.numer().to_string(),
            scalar_den: self.scalar.denom().to_string(),
            numerator: self
                .num
                .terms()
                .rev()
                .map(|(m, c)| (m.0.clone(), c.to_string()))
                .collect(),
            denominator: self.den.iter().map(|(f, &m)| (f.0.clone(), m)).collect(),
        }
    }
}

impl<T: Coeff> fmt::Display for FactoredRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars)))
    }
}

impl<T: Coeff> Neg for &FactoredRational<T> {
    type Output = FactoredRational<T>;
    fn neg(self) -> FactoredRational<T> {
        let mut out = self.clone();
        out.scalar = -out.scalar;
        out
    }
}

impl<T: Coeff> Add for &FactoredRational<T> {
    type Output = FactoredRational<T>;
    /// Panics on a variable count mismatch; see [`FactoredRational::checked_add`].
    fn add(self, rhs: &FactoredRational<T>) -> FactoredRational<T> {
        self.checked_add(rhs).expect("matching variable counts")
    }
}

/// Machine-readable fraction: `scalar_num/scalar_den * sum(numerator) /
/// prod(form^mult)`, numerator terms as (exponents, coefficient).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracDoc {
    pub nvars: usize,
    pub scalar_num: String,
    pub scalar_den: String,
    pub numerator: Vec<(Vec<u32>, String)>,
    pub denominator: Vec<(Vec<i64>, u32)>,
}

impl FracDoc {
    /// Rebuilds (and re-reduces) the fraction.
    pub fn to_frac<T: Coeff + std::str::FromStr>(&self) -> Result<FactoredRational<T>> {
        let parse = |s: &str| {
            s.parse::<T>()
                .map_err(|_| Error::Parse(format!("invalid integer `{s}`")))
        };
        let den_s = parse(&self.scalar_den)?;
        if den_s.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let scalar = Ratio::new(parse(&self.scalar_num)?, den_s);
        let mut terms = Vec::new();
        for (e, c) in &self.numerator {
            if e.len() != self.nvars {
                return Err(Error::NvarsMismatch(self.nvars, e.len()));
            }
            terms.push((Monomial(e.clone()), parse(c)?));
        }
        let num = MultiPoly::from_terms(self.nvars, terms);
        let mut den = BTreeMap::new();
        let mut scalar = scalar;
        for (coeffs, m) in &self.denominator {
            if coeffs.len() != self.nvars {
                return Err(Error::NvarsMismatch(self.nvars, coeffs.len()));
            }
            let (k, form) = LinearForm::split(coeffs)?;
            for _ in 0..*m {
                scalar = scalar / Ratio::from_integer(T::from(k));
            }
            *den.entry(form).or_insert(0) += m;
        }
        Ok(FactoredRational::from_parts(scalar, num, den))
    }
}
