//! Equivariant multiplicities of Schubert varieties.
//!
//! For a reduced word `i_1 ... i_N` of `w`, the Bott–Samelson resolution is
//! birational onto `X_w` and its torus fixed points are the masks
//! `eps in {0,1}^N`. The fixed point `eps` lies over
//! `y = s_{i_1}^{eps_1} ... s_{i_N}^{eps_N}` and is smooth with tangent
//! characters `-sigma_j(alpha_{i_j})`, where `sigma_j` is the `j`-th partial
//! product. Pushing forward gives
//!
//! ```text
//! e_{y,w} = sum over masks with product y of 1 / prod_j (-sigma_j(alpha_{i_j})).
//! ```

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;

use crate::cartan::RootVector;
use crate::error::{Error, Result};
use crate::polyfrac::{FactoredRational, LinearForm, MultiPoly};
use crate::scalar::Coeff;
use crate::weyl::{WeylElement, WeylGroup, Word};

/// Longest word accepted by the mask sweep (2^24 masks).
pub const MAX_LENGTH: usize = 24;

/// A Bott–Samelson fixed point: which letters of the word are used.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mask(pub Vec<bool>);

impl Mask {
    fn from_bits(bits: u32, len: usize) -> Self {
        Mask((0..len).map(|k| bits >> k & 1 == 1).collect())
    }
}

impl std::fmt::Display for Mask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: String = self.0.iter().map(|&b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

fn check_reduced(g: &WeylGroup, word: &Word) -> Result<WeylElement> {
    if word.len() > MAX_LENGTH {
        return Err(Error::LengthCap(word.len(), MAX_LENGTH));
    }
    let w = g.element_from_word(word)?;
    if w.length() != word.len() {
        return Err(Error::NotReduced(word.to_string()));
    }
    Ok(w)
}

/// Masks whose product is `y`, in increasing binary order (first letter is
/// the least significant bit).
pub fn bs_fixed_points(g: &WeylGroup, word: &Word, y: &WeylElement) -> Result<Vec<Mask>> {
    if word.len() > MAX_LENGTH {
        return Err(Error::LengthCap(word.len(), MAX_LENGTH));
    }
    g.element_from_word(word)?;
    g.check(y)?;
    let n = word.len();
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << n) {
        let mut m = g.identity_matrix();
        for (k, &i) in word.letters().iter().enumerate() {
            if bits >> k & 1 == 1 {
                m = g.mul_gen_right(&m, i - 1);
            }
        }
        if m == y.matrix() {
            out.push(Mask::from_bits(bits, n));
        }
    }
    Ok(out)
}

/// Tangent characters `-sigma_j(alpha_{i_j})` of the Bott–Samelson variety
/// at the fixed point `mask`.
pub fn bs_tangent_weights(g: &WeylGroup, word: &Word, mask: &Mask) -> Result<Vec<RootVector>> {
    if mask.0.len() != word.len() {
        return Err(Error::MaskLength(mask.0.len(), word.len()));
    }
    g.element_from_word(word)?;
    let n = g.rank();
    let mut sigma = g.identity_matrix();
    let mut out = Vec::with_capacity(word.len());
    for (&i, &used) in word.letters().iter().zip(&mask.0) {
        if used {
            sigma = g.mul_gen_right(&sigma, i - 1);
        }
        out.push(neg_column(&sigma, n, i - 1));
    }
    Ok(out)
}

fn neg_column(m: &[i64], n: usize, c: usize) -> RootVector {
    RootVector((0..n).map(|r| -m[r * n + c]).collect())
}

/// `e_{y,w}` for the element `w` of the reduced word `word`.
pub fn equivariant_multiplicity<T: Coeff>(
    g: &WeylGroup,
    word: &Word,
    y: &WeylElement,
) -> Result<FactoredRational<T>> {
    check_reduced(g, word)?;
    let n = g.rank();
    let mut total = FactoredRational::zero(n);
    for mask in bs_fixed_points(g, word, y)? {
        let weights = bs_tangent_weights(g, word, &mask)?;
        total = total.checked_add(&FactoredRational::from_weights(n, &weights)?)?;
    }
    Ok(total)
}

/// The reduced multiplicity `e_{y,w}` and the data Kumar's criterion reads
/// off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumeratorReport<T: Coeff> {
    pub y: WeylElement,
    pub w: WeylElement,
    pub value: FactoredRational<T>,
    /// Primitive numerator with positive leading coefficient.
    pub f: MultiPoly<T>,
    /// Signed rational factor; `value = f_scalar * f / prod(den_factors)`.
    pub f_scalar: Ratio<T>,
    pub den_factors: Vec<LinearForm>,
    pub is_zero: bool,
    pub is_constant: bool,
    /// Scalar denominator is 1.
    pub is_integral: bool,
    /// `|f|` when the numerator is a constant integer.
    pub abs_f: Option<BigInt>,
}

impl<T: Coeff> NumeratorReport<T> {
    pub fn new(y: WeylElement, w: WeylElement, value: FactoredRational<T>) -> Self {
        let is_zero = value.is_zero();
        let is_constant = !is_zero && value.numerator().is_constant();
        let is_integral = value.scalar().denom().is_one();
        let abs_f = (is_constant && is_integral).then(|| value.scalar().numer().abs().to_bigint());
        NumeratorReport {
            f: value.numerator().clone(),
            f_scalar: value.scalar().clone(),
            den_factors: value.den_multiset(),
            is_zero,
            is_constant,
            is_integral,
            abs_f,
            y,
            w,
            value,
        }
    }

    /// `|f| = 1`.
    pub fn is_unit(&self) -> bool {
        self.abs_f.as_ref().is_some_and(|a| a.is_one())
    }
}

/// Reduced `e_{y,w}` wrapped with constancy and integrality flags.
pub fn numerator<T: Coeff>(g: &WeylGroup, word: &Word, y: &WeylElement) -> Result<NumeratorReport<T>> {
    let w = check_reduced(g, word)?;
    let value = equivariant_multiplicity(g, word, y)?;
    Ok(NumeratorReport::new(g.canonical(y), w, value))
}

/// `e_{y,w}` for every `y` in `[e, w]`.
#[derive(Clone, Debug)]
pub struct MultiplicityTable<T: Coeff> {
    group: WeylGroup,
    w: WeylElement,
    word: Word,
    reports: Vec<NumeratorReport<T>>,
    index: HashMap<WeylElement, usize>,
}

impl<T: Coeff> MultiplicityTable<T> {
    /// One sweep over all `2^l(w)` masks, bucketed by product.
    pub fn new(g: &WeylGroup, w: &WeylElement) -> Result<Self> {
        Self::from_word(g, w.word())
    }

    pub fn from_word(g: &WeylGroup, word: &Word) -> Result<Self> {
        let w = check_reduced(g, word)?;
        let n = g.rank();
        let mut buckets: HashMap<Vec<i64>, FactoredRational<T>> = HashMap::new();
        let mut weights: Vec<RootVector> = Vec::with_capacity(word.len());
        sweep(g, word.letters(), g.identity_matrix(), &mut weights, &mut |m, wts| {
            let term = FactoredRational::from_weights(n, wts)?;
            let slot = buckets.entry(m.to_vec()).or_insert_with(|| FactoredRational::zero(n));
            *slot = slot.checked_add(&term)?;
            Ok(())
        })?;
        let values = buckets
            .into_iter()
            .map(|(m, v)| (g.element_of(m), v))
            .collect();
        Ok(Self::assemble(g, &w, word, values))
    }

    /// Rebuilds a table from previously computed values, e.g. a cache.
    /// Every `y` must lie in `[e, w]`; the values are taken on trust.
    pub fn from_values(
        g: &WeylGroup,
        word: &Word,
        values: Vec<(WeylElement, FactoredRational<T>)>,
    ) -> Result<Self> {
        let w = check_reduced(g, word)?;
        for (y, v) in &values {
            g.check(y)?;
            if v.nvars() != g.rank() {
                return Err(Error::NvarsMismatch(v.nvars(), g.rank()));
            }
            if !g.bruhat_leq(y, &w)? {
                return Err(Error::NotBelow(y.to_string(), w.to_string()));
            }
        }
        Ok(Self::assemble(g, &w, word, values))
    }

    fn assemble(
        g: &WeylGroup,
        w: &WeylElement,
        word: &Word,
        values: Vec<(WeylElement, FactoredRational<T>)>,
    ) -> Self {
        let wc = g.canonical(w);
        let mut reports: Vec<NumeratorReport<T>> = values
            .into_iter()
            .map(|(y, value)| NumeratorReport::new(g.canonical(&y), wc.clone(), value))
            .collect();
        reports.sort_by(|a, b| (a.y.length(), a.y.word()).cmp(&(b.y.length(), b.y.word())));
        let index = reports.iter().enumerate().map(|(k, r)| (r.y.clone(), k)).collect();
        MultiplicityTable {
            group: g.clone(),
            w: wc,
            word: word.clone(),
            reports,
            index,
        }
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    /// The reduced word used for the resolution.
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Report for `y`, or `None` when `y` is not below `w`.
    pub fn get(&self, y: &WeylElement) -> Option<&NumeratorReport<T>> {
        self.index.get(y).map(|&k| &self.reports[k])
    }

    /// Reports sorted by length and canonical word of `y`.
    pub fn reports(&self) -> &[NumeratorReport<T>] {
        &self.reports
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }
}

/// Depth-first walk over all masks, calling `leaf` with the product matrix
/// and the tangent weights of each fixed point.
fn sweep<F>(
    g: &WeylGroup,
    letters: &[usize],
    sigma: Vec<i64>,
    weights: &mut Vec<RootVector>,
    leaf: &mut F,
) -> Result<()>
where
    F: FnMut(&[i64], &[RootVector]) -> Result<()>,
{
    let Some((&i, rest)) = letters.split_first() else {
        return leaf(&sigma, weights);
    };
    let n = g.rank();
    // Letter unused: sigma unchanged.
    weights.push(neg_column(&sigma, n, i - 1));
    sweep(g, rest, sigma.clone(), weights, leaf)?;
    weights.pop();
    // Letter used.
    let next = g.mul_gen_right(&sigma, i - 1);
    weights.push(neg_column(&next, n, i - 1));
    sweep(g, rest, next, weights, leaf)?;
    weights.pop();
    Ok(())
}
