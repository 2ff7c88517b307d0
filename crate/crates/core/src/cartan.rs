//! Generalized Cartan matrices and the root lattice.
//!
//! Conventions: `a[i][j] = <alpha_i^vee, alpha_j>`, so that
//! `s_i(alpha_j) = alpha_j - a[i][j] alpha_i`. Root vectors are written in the
//! basis of simple roots. Indices exposed to callers are 1-based; internal
//! helpers take 0-based indices.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Upper bound on the number of positive roots explored before a Cartan
/// matrix is declared to be of non-finite type. E8 has 120.
const ROOT_CAP: usize = 4096;

/// Builtin Cartan types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    AffineA1,
}

impl CartanType {
    pub fn new(family: char, n: usize) -> Result<Self> {
        let out_of_range = || Error::RankOutOfRange {
            family: family.to_string(),
            rank: n,
        };
        let t = match family.to_ascii_uppercase() {
            'A' if n >= 1 => CartanType::A(n),
            'B' if n >= 2 => CartanType::B(n),
            'C' if n >= 1 => CartanType::C(n),
            'D' if n >= 4 => CartanType::D(n),
            'E' if (6..=8).contains(&n) => CartanType::E(n),
            'F' if n == 4 => CartanType::F4,
            'G' if n == 2 => CartanType::G2,
            'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' => return Err(out_of_range()),
            _ => return Err(Error::UnknownType(format!("{family}{n}"))),
        };
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n)
            | CartanType::B(n)
            | CartanType::C(n)
            | CartanType::D(n)
            | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 | CartanType::AffineA1 => 2,
        }
    }

    /// True for the simply-laced families A, D, E.
    pub fn is_simply_laced(&self) -> bool {
        matches!(self, CartanType::A(_) | CartanType::D(_) | CartanType::E(_))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
            CartanType::AffineA1 => write!(f, "affine-A1"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if matches!(lower.as_str(), "affine-a1" | "affine_a1" | "a1~" | "a1^(1)") {
            return Ok(CartanType::AffineA1);
        }
        let mut chars = t.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, n)
    }
}

/// A vector of the root lattice in the basis of simple roots.
///
/// Zoo computations append extra coordinates (for instance the scaling
/// character) on which the Weyl group acts trivially.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    /// The simple root `alpha_i` (0-based index).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coordinates non-negative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// Nonzero with all coordinates non-positive.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn has_uniform_sign(&self) -> bool {
        self.is_positive() || self.is_negative()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Same vector with `extra` trailing zero coordinates.
    pub fn extended(&self, extra: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0, extra));
        RootVector(v)
    }

    pub fn scaled(&self, c: i64) -> Self {
        RootVector(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.0.len()).map(|i| format!("a{i}")).collect();
        f.write_str(&render_linear(&self.0, &names))
    }
}

/// Renders an integer combination of named variables, e.g. `a1+2*a2-a3`.
pub(crate) fn render_linear(coeffs: &[i64], names: &[String]) -> String {
    let mut s = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        let c = *c;
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&format!("{}*", c.abs()));
        }
        s.push_str(name);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// A symmetrizable generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gcm {
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    label: Option<CartanType>,
}

/// Root data needed by the minimal nilpotent orbit formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestRootData {
    pub highest: RootVector,
    /// Roots (of both signs) of maximal squared length.
    pub long_roots: Vec<RootVector>,
    /// 1-based indices of the simple roots orthogonal to the highest root.
    pub orthogonal: BTreeSet<usize>,
}

#[derive(Deserialize)]
struct GcmFile {
    rank: usize,
    matrix: Vec<Vec<i64>>,
}

impl Gcm {
    /// Validates `matrix` and computes its primitive symmetrizer.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidGcm("empty matrix".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGcm(format!("row {} has length {}", i + 1, row.len())));
            }
            if row[i] != 2 {
                return Err(Error::InvalidGcm(format!("diagonal entry {} is not 2", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if row[j] > 0 {
                    return Err(Error::InvalidGcm(format!(
                        "off-diagonal entry ({}, {}) is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (row[j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::InvalidGcm(format!(
                        "zero pattern is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let symmetrizer = symmetrize(&matrix)?;
        Ok(Gcm {
            matrix,
            symmetrizer,
            label: None,
        })
    }

    pub fn builtin(t: CartanType) -> Self {
        let n = t.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match t {
            CartanType::A(n) => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1, -1)),
            CartanType::B(n) => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            CartanType::C(n) => {
                (0..n.saturating_sub(2)).for_each(|i| link(i, i + 1, -1, -1));
                if n >= 2 {
                    link(n - 2, n - 1, -2, -1);
                }
            }
            CartanType::D(n) => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            CartanType::E(n) => {
                // Bourbaki labelling: chain 1-3-4-5-..., with 2 attached to 4.
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            CartanType::F4 => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            CartanType::G2 => link(0, 1, -3, -1),
            CartanType::AffineA1 => link(0, 1, -2, -2),
        }
        let mut g = Gcm::new(a).expect("builtin Cartan matrices are valid");
        g.label = Some(t);
        g
    }

    /// Standard Cartan matrix of `family` with rank parameter `n`.
    pub fn builtin_gcm(family: char, n: usize) -> Result<Self> {
        Ok(Gcm::builtin(CartanType::new(family, n)?))
    }

    /// Parses a GCM document: TOML or JSON with fields `rank` and `matrix`.
    pub fn from_document(text: &str) -> Result<Self> {
        let doc: GcmFile = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
        } else {
            toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?
        };
        if doc.matrix.len() != doc.rank {
            return Err(Error::InvalidGcm(format!(
                "rank {} but matrix has {} rows",
                doc.rank,
                doc.matrix.len()
            )));
        }
        let mut g = Gcm::new(doc.matrix)?;
        // Recognise the affine A1 matrix so that reports carry a label.
        if g.matrix == Gcm::builtin(CartanType::AffineA1).matrix {
            g.label = Some(CartanType::AffineA1);
        }
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn label(&self) -> Option<CartanType> {
        self.label
    }

    /// Short name: the builtin label when there is one, else the digest.
    pub fn name(&self) -> String {
        match self.label {
            Some(t) => t.to_string(),
            None => format!("gcm-{}", self.digest()),
        }
    }

    /// Content digest of the matrix (16 hex digits).
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for row in &self.matrix {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            h.update(line.join(",").as_bytes());
            h.update(b";");
        }
        let bytes = h.finalize();
        bytes[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(i - 1)
    }

    /// `s_i(v)` for a 0-based index. Coordinates beyond the rank are fixed.
    pub(crate) fn reflect(&self, i: usize, v: &RootVector) -> RootVector {
        let pairing: i64 = (0..self.rank()).map(|j| self.matrix[i][j] * v.0[j]).sum();
        let mut out = v.clone();
        out.0[i] -= pairing;
        out
    }

    /// `s_i(v)` for a 1-based index `i`.
    pub fn simple_reflection(&self, i: usize, v: &RootVector) -> Result<RootVector> {
        let i = self.check_index(i)?;
        Ok(self.reflect(i, v))
    }

    /// Symmetrized form `(u, v) = sum d_i a_ij u_i v_j`.
    pub fn form(&self, u: &RootVector, v: &RootVector) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if u.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += self.symmetrizer[i] * self.matrix[i][j] * u.0[i] * v.0[j];
            }
        }
        s
    }

    /// Positive roots, sorted by height and then by coordinates read from the
    /// last simple root backwards.
    ///
    /// Fails with [`Error::NonFinite`] when the closure exceeds the root cap.
    pub fn positive_roots(&self) -> Result<Vec<RootVector>> {
        let n = self.rank();
        let mut seen: HashSet<RootVector> = HashSet::new();
        let mut queue: VecDeque<RootVector> = VecDeque::new();
        for i in 0..n {
            let a = RootVector::simple(n, i);
            seen.insert(a.clone());
            queue.push_back(a);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let gamma = self.reflect(i, &beta);
                if gamma.is_positive() && seen.insert(gamma.clone()) {
                    if seen.len() > ROOT_CAP {
                        return Err(Error::NonFinite);
                    }
                    queue.push_back(gamma);
                }
            }
        }
        let mut roots: Vec<RootVector> = seen.into_iter().collect();
        roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
        });
        Ok(roots)
    }

    pub fn is_finite_type(&self) -> bool {
        self.positive_roots().is_ok()
    }

    /// Highest root, long roots and the simple roots orthogonal to the
    /// highest root.
    pub fn highest_root_and_lengths(&self) -> Result<HighestRootData> {
        let pos = self.positive_roots()?;
        let highest = pos.last().cloned().expect("at least one simple root");
        if pos
            .iter()
            .any(|b| b.0.iter().zip(&highest.0).any(|(x, h)| x > h))
        {
            return Err(Error::NotIrreducible);
        }
        let max_len = pos.iter().map(|b| self.form(b, b)).max().unwrap_or(0);
        let mut long_roots: Vec<RootVector> = Vec::new();
        for b in &pos {
            if self.form(b, b) == max_len {
                long_roots.push(b.clone());
                long_roots.push(-b);
            }
        }
        long_roots.sort();
        let n = self.rank();
        let orthogonal = (0..n)
            .filter(|&i| self.form(&highest, &RootVector::simple(n, i)) == 0)
            .map(|i| i + 1)
            .collect();
        Ok(HighestRootData {
            highest,
            long_roots,
            orthogonal,
        })
    }
}

impl fmt::Display for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Primitive positive integer symmetrizer, or an error when none exists.
fn symmetrize(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = di * Ratio::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(existing) if existing != dj => return Err(Error::NotSymmetrizable),
                    Some(_) => {}
                }
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(Option::unwrap).collect();
    let lcm = d.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
    let ints: Vec<i64> = d.iter().map(|r| (r * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    Ok(ints.into_iter().map(|x| x / g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn builtin_examples() {
        let a2 = Gcm::builtin_gcm('A', 2).unwrap();
        assert_eq!(a2.matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.symmetrizer(), &[1, 1]);

        let g2 = Gcm::builtin_gcm('G', 2).unwrap();
        assert_eq!(g2.matrix(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(g2.symmetrizer(), &[1, 3]);

        let aff = Gcm::builtin(CartanType::AffineA1);
        assert_eq!(aff.matrix(), &[vec![2, -2], vec![-2, 2]]);
        assert_eq!(aff.symmetrizer(), &[1, 1]);
    }

    #[test]
    fn builtin_errors() {
        assert!(matches!(Gcm::builtin_gcm('X', 2), Err(Error::UnknownType(_))));
        assert!(matches!(Gcm::builtin_gcm('E', 5), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(Gcm::builtin_gcm('G', 3), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(Gcm::builtin_gcm('A', 0), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn parse_labels() {
        assert_eq!("A3".parse::<CartanType>().unwrap(), CartanType::A(3));
        assert_eq!("g2".parse::<CartanType>().unwrap(), CartanType::G2);
        assert_eq!("affine-A1".parse::<CartanType>().unwrap(), CartanType::AffineA1);
        assert!("Q7".parse::<CartanType>().is_err());
    }

    #[test]
    fn reflections_a2() {
        let a2 = Gcm::builtin_gcm('A', 2).unwrap();
        assert_eq!(a2.simple_reflection(1, &rv(&[1, 0])).unwrap(), rv(&[-1, 0]));
        assert_eq!(a2.simple_reflection(1, &rv(&[0, 1])).unwrap(), rv(&[1, 1]));
        assert!(a2.simple_reflection(3, &rv(&[0, 1])).is_err());
        assert!(a2.simple_reflection(0, &rv(&[0, 1])).is_err());
    }

    #[test]
    fn reflection_is_involution() {
        for t in ["A3", "B3", "C3", "G2", "F4", "affine-A1"] {
            let g = Gcm::builtin(t.parse().unwrap());
            let v = RootVector((0..g.rank() as i64).map(|k| 3 * k - 2).collect());
            for i in 1..=g.rank() {
                let w = g.simple_reflection(i, &v).unwrap();
                assert_eq!(g.simple_reflection(i, &w).unwrap(), v, "{t} s{i}");
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("B4", 16),
            ("C2", 4),
            ("C3", 9),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ];
        for (t, count) in cases {
            let g = Gcm::builtin(t.parse().unwrap());
            let roots = g.positive_roots().unwrap();
            assert_eq!(roots.len(), count, "{t}");
            assert!(roots.iter().all(|r| r.is_positive()));
        }
    }

    #[test]
    fn a2_roots() {
        let g = Gcm::builtin_gcm('A', 2).unwrap();
        assert_eq!(
            g.positive_roots().unwrap(),
            vec![rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]
        );
    }

    #[test]
    fn affine_is_rejected() {
        let g = Gcm::builtin(CartanType::AffineA1);
        assert_eq!(g.positive_roots(), Err(Error::NonFinite));
        assert_eq!(g.highest_root_and_lengths(), Err(Error::NonFinite));
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for t in ["A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"] {
            let g = Gcm::builtin(t.parse().unwrap());
            let pos = g.positive_roots().unwrap();
            for i in 0..g.rank() {
                let ai = RootVector::simple(g.rank(), i);
                let mut before: Vec<_> = pos.iter().filter(|b| **b != ai).cloned().collect();
                let mut after: Vec<_> = before.iter().map(|b| g.reflect(i, b)).collect();
                before.sort();
                after.sort();
                assert_eq!(before, after, "{t} s{}", i + 1);
            }
        }
    }

    #[test]
    fn highest_root_data() {
        let a1 = Gcm::builtin_gcm('A', 1).unwrap().highest_root_and_lengths().unwrap();
        assert_eq!(a1.highest, rv(&[1]));
        assert_eq!(a1.long_roots, vec![rv(&[-1]), rv(&[1])]);
        assert!(a1.orthogonal.is_empty());

        let a2 = Gcm::builtin_gcm('A', 2).unwrap().highest_root_and_lengths().unwrap();
        assert_eq!(a2.highest, rv(&[1, 1]));
        assert!(a2.orthogonal.is_empty());

        for n in 1..=5 {
            let g = Gcm::builtin_gcm('C', n).unwrap();
            let data = g.highest_root_and_lengths().unwrap();
            // Independent count: long roots of C_n are +-2e_i.
            assert_eq!(data.long_roots.len(), 2 * n, "C{n}");
            let mut hi = vec![2; n];
            hi[n - 1] = 1;
            assert_eq!(data.highest, RootVector(hi));
            assert_eq!(data.orthogonal, (2..=n).collect());
        }

        let g2 = Gcm::builtin(CartanType::G2).highest_root_and_lengths().unwrap();
        assert_eq!(g2.highest, rv(&[3, 2]));
        assert_eq!(g2.long_roots.len(), 6);
        assert_eq!(g2.orthogonal, [1].into_iter().collect());
    }

    #[test]
    fn highest_root_is_longest() {
        for t in ["A3", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let g = Gcm::builtin(t.parse().unwrap());
            let h = g.highest_root_and_lengths().unwrap().highest;
            let hh = g.form(&h, &h);
            for b in g.positive_roots().unwrap() {
                assert!(hh >= g.form(&b, &b), "{t}");
            }
        }
    }

    #[test]
    fn validation() {
        assert!(matches!(Gcm::new(vec![vec![2, 1], vec![-1, 2]]), Err(Error::InvalidGcm(_))));
        assert!(matches!(Gcm::new(vec![vec![2, 0], vec![-1, 2]]), Err(Error::InvalidGcm(_))));
        assert!(matches!(Gcm::new(vec![vec![1]]), Err(Error::InvalidGcm(_))));
        // Triangle with a non-symmetrizable cycle of products.
        let m = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert_eq!(Gcm::new(m), Err(Error::NotSymmetrizable));
    }

    #[test]
    fn documents() {
        let g = Gcm::from_document("rank = 2\nmatrix = [[2, -2], [-2, 2]]\n").unwrap();
        assert_eq!(g.label(), Some(CartanType::AffineA1));
        let g = Gcm::from_document(r#"{"rank": 2, "matrix": [[2, -1], [-3, 2]]}"#).unwrap();
        assert_eq!(g.symmetrizer(), &[3, 1]);
        assert!(Gcm::from_document("rank = 3\nmatrix = [[2]]").is_err());
        assert!(Gcm::from_document("rank = 2\nmatrix = [[2, -1], [-2, 2]]\n").is_ok());
    }

    #[test]
    fn digest_is_stable() {
        let a = Gcm::builtin_gcm('B', 3).unwrap();
        let b = Gcm::new(a.matrix().to_vec()).unwrap();
        assert_eq!(a.digest(), b.digest());
        assert_ne!(a.digest(), Gcm::builtin_gcm('C', 3).unwrap().digest());
        assert_eq!(a.digest().len(), 16);
    }
}
