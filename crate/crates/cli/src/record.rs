//! One line of scan output.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use psmooth_core::criteria::{NumeratorKind, PointStatus};
use psmooth_core::{BigInt, Word};
use serde::{Deserialize, Serialize};

/// `|f_{y,w}|`, or why there is no such integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum AbsF {
    Integer(BigInt),
    /// Constant with a scalar denominator left over, as `num/den`.
    NonIntegral(BigInt, BigInt),
    NonConstant,
}

impl From<&NumeratorKind> for AbsF {
    fn from(k: &NumeratorKind) -> Self {
        match k {
            NumeratorKind::Integer(a) => AbsF::Integer(a.clone()),
            NumeratorKind::NonIntegral(a, b) => AbsF::NonIntegral(a.clone(), b.clone()),
            NumeratorKind::NonConstant => AbsF::NonConstant,
        }
    }
}

impl fmt::Display for AbsF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbsF::Integer(a) => write!(f, "{a}"),
            AbsF::NonIntegral(a, b) => write!(f, "nonintegral:{a}/{b}"),
            AbsF::NonConstant => f.write_str("nonconstant"),
        }
    }
}

impl FromStr for AbsF {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "nonconstant" {
            return Ok(AbsF::NonConstant);
        }
        let bad = || format!("bad abs_f field {s:?}");
        if let Some(rest) = s.strip_prefix("nonintegral:") {
            let (a, b) = rest.split_once('/').ok_or_else(bad)?;
            return Ok(AbsF::NonIntegral(
                a.parse().map_err(|_| bad())?,
                b.parse().map_err(|_| bad())?,
            ));
        }
        s.parse().map(AbsF::Integer).map_err(|_| bad())
    }
}

impl From<AbsF> for String {
    fn from(a: AbsF) -> String {
        a.to_string()
    }
}

impl TryFrom<String> for AbsF {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

mod word_string {
    use psmooth_core::Word;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::word_text(w))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `"e"` for the empty word, else `"1,2,1"`.
pub fn word_text(w: &Word) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_string()
    }
}

/// Classification of the pair `(y, w)` from a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    /// Type label, or `gcm-<digest>` for an unlabelled matrix.
    pub group: String,
    #[serde(with = "word_string")]
    pub w: Word,
    #[serde(with = "word_string")]
    pub y: Word,
    pub abs_f: AbsF,
    pub len_w: usize,
    pub len_y: usize,
    pub smooth: bool,
    pub rationally_smooth: bool,
    /// Keyed by prime.
    pub p_smooth: BTreeMap<u64, bool>,
}

impl ScanRecord {
    pub fn new(group: &str, w: &Word, status: &PointStatus) -> Self {
        ScanRecord {
            group: group.to_string(),
            w: w.clone(),
            y: status.x.word().clone(),
            abs_f: AbsF::from(&status.numerator),
            len_w: w.len(),
            len_y: status.x.length(),
            smooth: status.smooth,
            rationally_smooth: status.rationally_smooth,
            p_smooth: status.p_smooth.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }

    pub fn csv_header(primes: &[u64]) -> Vec<String> {
        let mut h: Vec<String> = ["group", "w", "y", "abs_f", "len_w", "len_y", "smooth", "rationally_smooth"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        h.extend(primes.iter().map(|p| format!("smooth_mod_{p}")));
        h
    }

    pub fn csv_fields(&self, primes: &[u64]) -> Vec<String> {
        let mut f = vec![
            self.group.clone(),
            word_text(&self.w),
            word_text(&self.y),
            self.abs_f.to_string(),
            self.len_w.to_string(),
            self.len_y.to_string(),
            self.smooth.to_string(),
            self.rationally_smooth.to_string(),
        ];
        f.extend(
            primes
                .iter()
                .map(|p| self.p_smooth.get(p).map_or(String::new(), |b| b.to_string())),
        );
        f
    }

    pub fn text_line(&self) -> String {
        let primes: Vec<String> = self
            .p_smooth
            .iter()
            .map(|(p, b)| format!("{p}:{}", if *b { "y" } else { "n" }))
            .collect();
        format!(
            "{:<8} w={:<20} y={:<20} |f|={:<12} smooth={:<5} rsmooth={:<5} {}",
            self.group,
            word_text(&self.w),
            word_text(&self.y),
            self.abs_f.to_string(),
            self.smooth,
            self.rationally_smooth,
            primes.join(" ")
        )
    }
}
