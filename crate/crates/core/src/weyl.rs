//! Weyl group elements for an arbitrary symmetrizable GCM.
//!
//! Elements are stored as integer matrices acting on the root lattice
//! (column `j` is the image of `alpha_j`), together with a reduced word.
//! The representation is faithful, so equality and hashing use the matrix
//! alone.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{Gcm, RootVector};
use crate::error::{Error, Result};

/// A word in the simple reflections (1-based letters).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Comma-separated 1-based indices; the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::default());
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<usize>() {
                    Ok(i) if i > 0 => Ok(i),
                    _ => Err(Error::Parse(format!("invalid letter `{t}` in word `{s}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Square integer matrix, row-major.
type Mat = Vec<i64>;

#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: Mat,
    word: Word,
    group: u64,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.matrix.hash(state);
    }
}

impl WeylElement {
    /// The stored reduced word.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Row-major action matrix on the root lattice.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            f.write_str("e")
        } else {
            write!(f, "s[{}]", self.word)
        }
    }
}

/// The Weyl group of a GCM.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    gcm: Arc<Gcm>,
    id: u64,
}

impl WeylGroup {
    pub fn new(gcm: Gcm) -> Self {
        let id = u64::from_str_radix(&gcm.digest(), 16).expect("digest is hex");
        WeylGroup {
            gcm: Arc::new(gcm),
            id,
        }
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    /// Fails with [`Error::GroupMismatch`] when `e` belongs to another group.
    pub fn check(&self, e: &WeylElement) -> Result<()> {
        if e.group != self.id {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub(crate) fn identity_matrix(&self) -> Mat {
        let n = self.rank();
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        m
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            matrix: self.identity_matrix(),
            word: Word::default(),
            group: self.id,
        }
    }

    /// `M * s_i` (0-based `i`): column `j` becomes `col_j - a_ij col_i`.
    pub(crate) fn mul_gen_right(&self, m: &Mat, i: usize) -> Mat {
        let n = self.rank();
        let mut out = m.clone();
        for j in 0..n {
            let a = self.gcm.entry(i, j);
            if a == 0 {
                continue;
            }
            for r in 0..n {
                out[r * n + j] -= a * m[r * n + i];
            }
        }
        out
    }

    pub(crate) fn column_negative(&self, m: &Mat, i: usize) -> bool {
        let n = self.rank();
        // Columns are real roots, so the sign of any nonzero entry decides.
        (0..n).map(|r| m[r * n + i]).find(|&x| x != 0).unwrap_or(0) < 0
    }

    fn descents_of(&self, m: &Mat) -> impl Iterator<Item = usize> + '_ {
        let m = m.clone();
        (0..self.rank()).filter(move |&i| self.column_negative(&m, i))
    }

    fn is_identity_matrix(&self, m: &Mat) -> bool {
        *m == self.identity_matrix()
    }

    pub(crate) fn matrix_of_word(&self, letters: &[usize]) -> Mat {
        letters
            .iter()
            .fold(self.identity_matrix(), |m, &i| self.mul_gen_right(&m, i - 1))
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        for &i in &w.0 {
            self.gcm.check_index(i)?;
        }
        Ok(())
    }

    /// Greedy reduced word: repeatedly strip the smallest right descent.
    fn greedy_word(&self, m: &Mat) -> Word {
        let mut m = m.clone();
        let mut rev = Vec::new();
        while !self.is_identity_matrix(&m) {
            let i = self
                .descents_of(&m)
                .next()
                .expect("non-identity element has a right descent");
            rev.push(i + 1);
            m = self.mul_gen_right(&m, i);
        }
        rev.reverse();
        Word(rev)
    }

    pub(crate) fn element_of(&self, m: Mat) -> WeylElement {
        let word = self.greedy_word(&m);
        WeylElement {
            matrix: m,
            word,
            group: self.id,
        }
    }

    /// The element of a word. A non-reduced word is shortened by the
    /// deletion property, so the stored word is a reduced subword of `w`.
    pub fn element_from_word(&self, w: &Word) -> Result<WeylElement> {
        self.check_word(w)?;
        let mut kept: Vec<usize> = Vec::with_capacity(w.len());
        let mut m = self.identity_matrix();
        for &i in &w.0 {
            if self.column_negative(&m, i - 1) {
                // m * s_i is m with one letter removed; find which.
                let target = self.mul_gen_right(&m, i - 1);
                let k = (0..kept.len())
                    .rev()
                    .find(|&k| {
                        let mut sub = kept.clone();
                        sub.remove(k);
                        self.matrix_of_word(&sub) == target
                    })
                    .expect("exchange condition");
                kept.remove(k);
                m = target;
            } else {
                m = self.mul_gen_right(&m, i - 1);
                kept.push(i);
            }
        }
        Ok(WeylElement {
            matrix: m,
            word: Word(kept),
            group: self.id,
        })
    }

    /// Parses a word and returns its element.
    pub fn parse_element(&self, s: &str) -> Result<WeylElement> {
        self.element_from_word(&s.parse()?)
    }

    /// True when `w` is a reduced word.
    pub fn is_reduced(&self, w: &Word) -> Result<bool> {
        Ok(self.element_from_word(w)?.length() == w.len())
    }

    pub fn generator(&self, i: usize) -> Result<WeylElement> {
        let i = self.gcm.check_index(i)?;
        Ok(WeylElement {
            matrix: self.mul_gen_right(&self.identity_matrix(), i),
            word: Word(vec![i + 1]),
            group: self.id,
        })
    }

    /// `e * s_i` with a 1-based index.
    pub fn mul_simple(&self, e: &WeylElement, i: usize) -> Result<WeylElement> {
        self.check(e)?;
        let i0 = self.gcm.check_index(i)?;
        let matrix = self.mul_gen_right(&e.matrix, i0);
        if self.column_negative(&e.matrix, i0) {
            return Ok(self.element_of(matrix));
        }
        let mut word = e.word.0.clone();
        word.push(i);
        Ok(WeylElement {
            matrix,
            word: Word(word),
            group: self.id,
        })
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
        self.check(a)?;
        self.check(b)?;
        let mut m = a.matrix.clone();
        for &i in &b.word.0 {
            m = self.mul_gen_right(&m, i - 1);
        }
        Ok(self.element_of(m))
    }

    pub fn inverse(&self, e: &WeylElement) -> Result<WeylElement> {
        self.check(e)?;
        let rev: Vec<usize> = e.word.0.iter().rev().copied().collect();
        let m = self.matrix_of_word(&rev);
        Ok(WeylElement {
            matrix: m,
            word: Word(rev),
            group: self.id,
        })
    }

    /// `e(v)`; coordinates beyond the rank are left untouched.
    pub fn act(&self, e: &WeylElement, v: &RootVector) -> RootVector {
        let n = self.rank();
        let mut out = v.clone();
        for r in 0..n {
            out.0[r] = (0..n).map(|c| e.matrix[r * n + c] * v.0[c]).sum();
        }
        out
    }

    /// `{ i : e(alpha_i) < 0 }`, 1-based.
    pub fn right_descents(&self, e: &WeylElement) -> BTreeSet<usize> {
        self.descents_of(&e.matrix).map(|i| i + 1).collect()
    }

    pub fn left_descents(&self, e: &WeylElement) -> BTreeSet<usize> {
        self.right_descents(&self.inverse(e).expect("same group"))
    }

    pub fn canonical_reduced_word(&self, e: &WeylElement) -> Word {
        self.greedy_word(&e.matrix)
    }

    /// Same element, with the canonical reduced word stored.
    pub fn canonical(&self, e: &WeylElement) -> WeylElement {
        WeylElement {
            matrix: e.matrix.clone(),
            word: self.canonical_reduced_word(e),
            group: e.group,
        }
    }

    /// All reduced words of `e`, in lexicographic order, at most `cap` of
    /// them. The flag is true when the list was truncated.
    pub fn all_reduced_words(&self, e: &WeylElement, cap: usize) -> (Vec<Word>, bool) {
        fn rec(
            g: &WeylGroup,
            m: &Mat,
            suffix: &mut Vec<usize>,
            out: &mut Vec<Word>,
            cap: usize,
            truncated: &mut bool,
        ) {
            if *truncated {
                return;
            }
            if g.is_identity_matrix(m) {
                if out.len() == cap {
                    *truncated = true;
                    return;
                }
                out.push(Word(suffix.iter().rev().copied().collect()));
                return;
            }
            let descents: Vec<usize> = g.descents_of(m).collect();
            for i in descents {
                suffix.push(i + 1);
                rec(g, &g.mul_gen_right(m, i), suffix, out, cap, truncated);
                suffix.pop();
            }
        }
        let mut out = Vec::new();
        let mut truncated = false;
        rec(self, &e.matrix, &mut Vec::new(), &mut out, cap, &mut truncated);
        out.sort();
        (out, truncated)
    }

    /// Bruhat order test by descent recursion.
    pub fn bruhat_leq(&self, y: &WeylElement, w: &WeylElement) -> Result<bool> {
        self.check(y)?;
        self.check(w)?;
        let (mut ym, mut yl) = (y.matrix.clone(), y.length());
        let (mut wm, mut wl) = (w.matrix.clone(), w.length());
        loop {
            if yl > wl {
                return Ok(false);
            }
            if wl == 0 {
                return Ok(yl == 0);
            }
            let s = self.descents_of(&wm).next().expect("w is not the identity");
            if self.column_negative(&ym, s) {
                ym = self.mul_gen_right(&ym, s);
                yl -= 1;
            }
            wm = self.mul_gen_right(&wm, s);
            wl -= 1;
        }
    }

    /// All products of subwords of the stored reduced word of `z`, i.e. the
    /// lower interval `[e, z]`, sorted by length and canonical word.
    pub fn lower_interval(&self, z: &WeylElement) -> Result<Vec<WeylElement>> {
        self.check(z)?;
        let mut set: HashSet<Mat> = HashSet::new();
        set.insert(self.identity_matrix());
        for &i in &z.word.0 {
            let new: Vec<Mat> = set.iter().map(|m| self.mul_gen_right(m, i - 1)).collect();
            set.extend(new);
        }
        let mut out: Vec<WeylElement> = set.into_iter().map(|m| self.element_of(m)).collect();
        sort_elements(&mut out);
        Ok(out)
    }

    /// `{ y : x <= y <= z }`.
    pub fn bruhat_interval(&self, x: &WeylElement, z: &WeylElement) -> Result<Vec<WeylElement>> {
        if !self.bruhat_leq(x, z)? {
            return Err(Error::NotBelow(x.to_string(), z.to_string()));
        }
        let lower = self.lower_interval(z)?;
        let mut out = Vec::new();
        for y in lower {
            if self.bruhat_leq(x, &y)? {
                out.push(y);
            }
        }
        Ok(out)
    }

    /// All elements of length at most `max_len`, in BFS order.
    pub fn enumerate_ball(&self, max_len: usize) -> Vec<WeylElement> {
        let mut all = vec![self.identity()];
        let mut seen: HashSet<Mat> = HashSet::new();
        seen.insert(self.identity_matrix());
        let mut frontier = vec![self.identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for u in &frontier {
                for i in 0..self.rank() {
                    if self.column_negative(&u.matrix, i) {
                        continue;
                    }
                    let m = self.mul_gen_right(&u.matrix, i);
                    if seen.insert(m.clone()) {
                        let mut w = u.word.0.clone();
                        w.push(i + 1);
                        next.push(WeylElement {
                            matrix: m,
                            word: Word(w),
                            group: self.id,
                        });
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Every element of a finite Weyl group.
    pub fn elements(&self) -> Result<Vec<WeylElement>> {
        let n_pos = self.gcm.positive_roots()?.len();
        Ok(self.enumerate_ball(n_pos))
    }

    pub fn longest_element(&self) -> Result<WeylElement> {
        let els = self.elements()?;
        Ok(els.into_iter().max_by_key(|e| e.length()).expect("nonempty"))
    }

    /// Minimal-length representatives of `W / W_I` (elements with no right
    /// descent in `subset`, 1-based).
    pub fn minimal_coset_reps(&self, subset: &BTreeSet<usize>) -> Result<Vec<WeylElement>> {
        for &i in subset {
            self.gcm.check_index(i)?;
        }
        let els = self.elements()?;
        Ok(els
            .into_iter()
            .filter(|e| self.right_descents(e).is_disjoint(subset))
            .collect())
    }

    /// Groups elements by matrix, keeping the first occurrence.
    pub fn dedup(&self, els: Vec<WeylElement>) -> Vec<WeylElement> {
        let mut seen: HashSet<Mat> = HashSet::new();
        els.into_iter()
            .filter(|e| seen.insert(e.matrix.clone()))
            .collect()
    }
}

/// Orders elements by length, then by canonical (greedy) word.
pub fn sort_elements(els: &mut [WeylElement]) {
    els.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word.cmp(&b.word)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanType;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(Gcm::builtin(t.parse().unwrap()))
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn words_parse_and_print() {
        assert_eq!(w(""), Word::default());
        assert_eq!(w("1,2,1"), Word(vec![1, 2, 1]));
        assert_eq!(w(" 3, 1 ").to_string(), "3,1");
        assert!("1,,2".parse::<Word>().is_err());
        assert!("0".parse::<Word>().is_err());
        assert!("a".parse::<Word>().is_err());
    }

    #[test]
    fn element_from_word_examples() {
        let a2 = group("A2");
        let e = a2.element_from_word(&w("1,1")).unwrap();
        assert!(e.is_identity());
        let x = a2.element_from_word(&w("1,2,1")).unwrap();
        let y = a2.element_from_word(&w("2,1,2")).unwrap();
        assert_eq!(x.length(), 3);
        assert_eq!(x, y);
        let b2 = group("B2");
        assert_eq!(b2.element_from_word(&w("1,2,1,2")).unwrap().length(), 4);
        assert!(matches!(
            a2.element_from_word(&w("1,3")),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn deletion_keeps_a_subword() {
        let a3 = group("A3");
        let word = w("1,2,1,2,3,2,1");
        let e = a3.element_from_word(&word).unwrap();
        // Subword check.
        let mut it = word.0.iter();
        for letter in &e.word().0 {
            assert!(it.any(|x| x == letter));
        }
        assert_eq!(e.length(), a3.canonical_reduced_word(&e).len());
        assert_eq!(a3.matrix_of_word(&word.0), e.matrix);
    }

    #[test]
    fn descents() {
        let a2 = group("A2");
        assert!(a2.right_descents(&a2.identity()).is_empty());
        let s1 = a2.generator(1).unwrap();
        assert_eq!(a2.right_descents(&s1), [1].into_iter().collect());
        let w0 = a2.longest_element().unwrap();
        assert_eq!(a2.right_descents(&w0), [1, 2].into_iter().collect());
    }

    #[test]
    fn canonical_words() {
        let a2 = group("A2");
        assert_eq!(a2.canonical_reduced_word(&a2.identity()), Word::default());
        assert_eq!(a2.canonical_reduced_word(&a2.generator(2).unwrap()), w("2"));
        let w0 = a2.longest_element().unwrap();
        let c = a2.canonical_reduced_word(&w0);
        assert_eq!(c, w("1,2,1"));
        assert_eq!(a2.element_from_word(&c).unwrap(), w0);
    }

    #[test]
    fn reduced_word_enumeration() {
        let a2 = group("A2");
        let (words, trunc) = a2.all_reduced_words(&a2.longest_element().unwrap(), 100);
        assert_eq!(words, vec![w("1,2,1"), w("2,1,2")]);
        assert!(!trunc);
        let (words, _) = a2.all_reduced_words(&a2.generator(1).unwrap(), 100);
        assert_eq!(words, vec![w("1")]);
        let b2 = group("B2");
        let (words, _) = b2.all_reduced_words(&b2.longest_element().unwrap(), 100);
        assert_eq!(words.len(), 2);
        let a3 = group("A3");
        let (words, trunc) = a3.all_reduced_words(&a3.longest_element().unwrap(), 100);
        assert_eq!(words.len(), 16);
        assert!(!trunc);
        let (words, trunc) = a3.all_reduced_words(&a3.longest_element().unwrap(), 5);
        assert_eq!(words.len(), 5);
        assert!(trunc);
    }

    #[test]
    fn bruhat_examples() {
        let a2 = group("A2");
        let e = a2.identity();
        let s1 = a2.generator(1).unwrap();
        let s2 = a2.generator(2).unwrap();
        let s2s1 = a2.element_from_word(&w("2,1")).unwrap();
        for x in a2.elements().unwrap() {
            assert!(a2.bruhat_leq(&e, &x).unwrap());
        }
        assert!(!a2.bruhat_leq(&s1, &s2).unwrap());
        assert!(a2.bruhat_leq(&s1, &s2s1).unwrap());
        let other = group("B2");
        assert_eq!(
            a2.bruhat_leq(&s1, &other.generator(1).unwrap()),
            Err(Error::GroupMismatch)
        );
    }

    #[test]
    fn interval_examples() {
        let a2 = group("A2");
        let e = a2.identity();
        let s1 = a2.generator(1).unwrap();
        assert_eq!(a2.bruhat_interval(&e, &s1).unwrap().len(), 2);
        let w0 = a2.longest_element().unwrap();
        assert_eq!(a2.bruhat_interval(&e, &w0).unwrap().len(), 6);
        let iv = a2.bruhat_interval(&s1, &w0).unwrap();
        let words: Vec<String> = iv.iter().map(|x| x.word().to_string()).collect();
        assert_eq!(words, vec!["1", "1,2", "2,1", "1,2,1"]);
        let s2 = a2.generator(2).unwrap();
        assert!(matches!(a2.bruhat_interval(&s2, &s1), Err(Error::NotBelow(..))));
    }

    #[test]
    fn balls() {
        assert_eq!(group("A2").enumerate_ball(3).len(), 6);
        assert_eq!(group("A2").enumerate_ball(10).len(), 6);
        assert_eq!(group("B2").enumerate_ball(4).len(), 8);
        let aff = WeylGroup::new(Gcm::builtin(CartanType::AffineA1));
        let ball = aff.enumerate_ball(4);
        assert_eq!(ball.len(), 9);
        for e in &ball {
            assert_eq!(aff.canonical_reduced_word(e).len(), e.length());
        }
    }

    #[test]
    fn group_orders() {
        for (t, order) in [("A3", 24), ("B3", 48), ("G2", 12), ("D4", 192), ("F4", 1152)] {
            assert_eq!(group(t).elements().unwrap().len(), order, "{t}");
        }
        let aff = WeylGroup::new(Gcm::builtin(CartanType::AffineA1));
        assert_eq!(aff.elements(), Err(Error::NonFinite));
    }

    #[test]
    fn coset_reps() {
        let a3 = group("A3");
        let all: BTreeSet<usize> = [1, 2, 3].into_iter().collect();
        let reps = a3.minimal_coset_reps(&all).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_identity());
        assert_eq!(a3.minimal_coset_reps(&BTreeSet::new()).unwrap().len(), 24);
        let sub: BTreeSet<usize> = [1].into_iter().collect();
        assert_eq!(a3.minimal_coset_reps(&sub).unwrap().len(), 12);
        let a1 = group("A1");
        assert_eq!(a1.minimal_coset_reps(&BTreeSet::new()).unwrap().len(), 2);
    }

    #[test]
    fn length_is_inversion_count() {
        for t in ["A2", "A3", "B2", "B3", "C3", "G2"] {
            let g = group(t);
            let pos = g.gcm().positive_roots().unwrap();
            for x in g.elements().unwrap() {
                let inv = pos.iter().filter(|b| g.act(&x, b).is_negative()).count();
                assert_eq!(inv, x.length(), "{t} {x}");
            }
        }
    }

    #[test]
    fn inverse_and_products() {
        let g = group("B3");
        for x in g.enumerate_ball(4) {
            let xi = g.inverse(&x).unwrap();
            assert!(g.mul(&x, &xi).unwrap().is_identity());
            assert_eq!(xi.length(), x.length());
        }
        let s1 = g.generator(1).unwrap();
        assert!(g.mul_simple(&s1, 1).unwrap().is_identity());
        assert_eq!(g.mul_simple(&s1, 2).unwrap().word(), &w("1,2"));
        assert_eq!(g.left_descents(&g.element_from_word(&w("1,2")).unwrap()), [1].into());
    }

    /// Subword characterisation of the Bruhat order, used as an oracle.
    fn subword_leq(g: &WeylGroup, y: &WeylElement, z: &WeylElement) -> bool {
        let word = &z.word().0;
        (0u32..1 << word.len()).any(|mask| {
            let sub: Vec<usize> = (0..word.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| word[k])
                .collect();
            sub.len() == y.length() && g.matrix_of_word(&sub) == y.matrix
        })
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for t in ["A2", "B2", "A3"] {
            let g = group(t);
            let els = g.elements().unwrap();
            for y in &els {
                for z in &els {
                    assert_eq!(g.bruhat_leq(y, z).unwrap(), subword_leq(&g, y, z), "{t} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn intervals_are_convex() {
        let g = group("B3");
        let els = g.elements().unwrap();
        let z = g.element_from_word(&w("1,2,3,2,1")).unwrap();
        let x = g.generator(2).unwrap();
        let iv = g.bruhat_interval(&x, &z).unwrap();
        for y in &els {
            let inside = g.bruhat_leq(&x, y).unwrap() && g.bruhat_leq(y, &z).unwrap();
            assert_eq!(inside, iv.contains(y), "{y}");
        }
    }
}
