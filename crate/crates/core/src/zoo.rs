//! Multiplicities of example singularities outside the Schubert setting.
//!
//! Two routes are available. A finite `T`-equivariant map `pi: Y -> X` of
//! degree `d` with finitely many fixed points gives
//! `e_x X = (1/d) sum_{pi(y) = x} e_y Y`; when `Y` is smooth each term is the
//! reciprocal product of tangent characters. Applied in reverse, a finite
//! cover `X -> C^k` of degree `d` onto a smooth base gives
//! `e_x X = d / prod(base characters)`.
//!
//! Zoo examples that carry an extra scaling torus use one more variable,
//! always the last one; the Weyl group acts trivially on it.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, Gcm, RootVector};
use crate::error::{Error, Result};
use crate::polyfrac::default_names;
use crate::scalar::prime_factors;
use crate::weyl::WeylGroup;
use crate::Frac;

/// One worked example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooResult {
    pub name: String,
    pub dim: usize,
    pub mult: Frac,
    pub var_names: Vec<String>,
    /// `|numerator|` when the numerator is a constant integer.
    pub abs_numerator: Option<BigInt>,
    /// Known value of `|numerator|` for this example.
    pub expected: Option<BigInt>,
    /// Cyclic torsion groups of the cohomology of the punctured
    /// neighbourhood, as orders.
    pub torsion_groups: Vec<u64>,
}

impl ZooResult {
    fn new(name: String, dim: usize, mult: Frac, var_names: Vec<String>) -> Self {
        let abs_numerator = (mult.numerator().is_constant() && mult.scalar().denom().is_one())
            .then(|| mult.scalar().numer().abs());
        ZooResult {
            name,
            dim,
            mult,
            var_names,
            abs_numerator,
            expected: None,
            torsion_groups: Vec::new(),
        }
    }

    /// Order of the torsion subgroup, when tabulated.
    pub fn torsion_order(&self) -> Option<BigInt> {
        (!self.torsion_groups.is_empty())
            .then(|| self.torsion_groups.iter().map(|&k| BigInt::from(k)).product())
    }

    pub fn rendered(&self) -> String {
        self.mult.render(&self.var_names)
    }
}

/// `(1/d) sum_k 1/prod(fixed_points[k])`.
pub fn pushforward_multiplicity(nvars: usize, d: u64, fixed_points: &[Vec<RootVector>]) -> Result<Frac> {
    if d == 0 {
        return Err(Error::DivisionByZero);
    }
    let mut total = Frac::zero(nvars);
    for weights in fixed_points {
        if weights.is_empty() {
            return Err(Error::InvalidGcm("empty weight list".into()));
        }
        total = total.checked_add(&Frac::from_weights(nvars, weights)?)?;
    }
    total.scale_by(1, d as i64)
}

/// `d / prod(base_weights)`: multiplicity at the unique preimage of a
/// smooth fixed point under a finite cover of degree `d`.
pub fn cover_multiplicity(nvars: usize, d: u64, base_weights: &[RootVector]) -> Result<Frac> {
    if d == 0 {
        return Err(Error::DivisionByZero);
    }
    Frac::from_weights(nvars, base_weights)?.scale_by(d as i64, 1)
}

/// `C^2 / mu_{n+1}` embedded as `uv = w^{n+1}` with torus weights
/// `(e1 + n e2, e2 - e1, e2)`, projected to the `(u, v)` plane.
pub fn kleinian_a(n: usize) -> Result<ZooResult> {
    if n == 0 {
        return Err(Error::RankOutOfRange {
            family: "kleinian-A".into(),
            rank: n,
        });
    }
    let n64 = n as i64;
    let base = [RootVector(vec![1, n64]), RootVector(vec![-1, 1])];
    let mult = cover_multiplicity(2, n as u64 + 1, &base)?;
    let mut r = ZooResult::new(format!("kleinian-A{n}"), 2, mult, vec!["e1".into(), "e2".into()]);
    r.expected = Some(BigInt::from(n + 1));
    r.torsion_groups = vec![n as u64 + 1];
    Ok(r)
}

/// Kleinian singularities of types D and E as weighted hypersurfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightedKleinian {
    D(usize),
    E6,
    E7,
    E8,
}

impl WeightedKleinian {
    /// `C^*` weights of `(X, Y, Z)`.
    pub fn weights(&self) -> [i64; 3] {
        match *self {
            WeightedKleinian::D(n) => [2, n as i64 - 2, n as i64 - 1],
            WeightedKleinian::E6 => [3, 4, 6],
            WeightedKleinian::E7 => [4, 6, 9],
            WeightedKleinian::E8 => [6, 10, 15],
        }
    }

    pub fn name(&self) -> String {
        match *self {
            WeightedKleinian::D(n) => format!("D{n}"),
            WeightedKleinian::E6 => "E6".into(),
            WeightedKleinian::E7 => "E7".into(),
            WeightedKleinian::E8 => "E8".into(),
        }
    }

    /// Primes `p` for which the singularity is not `p`-smooth (those
    /// dividing the index of connection of the root system).
    pub fn non_p_smooth_primes(&self) -> BTreeSet<u64> {
        match *self {
            WeightedKleinian::D(_) | WeightedKleinian::E7 => [2].into(),
            WeightedKleinian::E6 => [3].into(),
            WeightedKleinian::E8 => BTreeSet::new(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.parse::<CartanType>()? {
            CartanType::D(n) => Ok(WeightedKleinian::D(n)),
            CartanType::E(6) => Ok(WeightedKleinian::E6),
            CartanType::E(7) => Ok(WeightedKleinian::E7),
            CartanType::E(8) => Ok(WeightedKleinian::E8),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

/// Degree-2 projection `(X, Y, Z) -> (X, Y)` of a weighted Kleinian surface.
pub fn weighted_kleinian(kind: WeightedKleinian) -> Result<ZooResult> {
    if let WeightedKleinian::D(n) = kind {
        if n < 4 {
            return Err(Error::RankOutOfRange {
                family: "D".into(),
                rank: n,
            });
        }
    }
    let [a, b, _] = kind.weights();
    let mult = cover_multiplicity(1, 2, &[RootVector(vec![a]), RootVector(vec![b])])?;
    Ok(ZooResult::new(
        format!("kleinian-{}", kind.name()),
        2,
        mult,
        vec!["chi".into()],
    ))
}

/// `e_0` of the minimal nilpotent orbit closure, by localization on the
/// resolution `G x^P g_highest -> O_min`:
///
/// ```text
/// e_0 = - sum_{w in W / W_I} 1 / w((delta + highest) prod_{alpha in Phi+ \ Phi+_I} alpha)
/// ```
///
/// where `I` is the set of simple roots orthogonal to the highest root.
pub fn minimal_orbit_multiplicity(gcm: &Gcm) -> Result<ZooResult> {
    let data = gcm.highest_root_and_lengths()?;
    let n = gcm.rank();
    let nv = n + 1;
    let in_levi = |b: &RootVector| {
        b.coords()
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || data.orthogonal.contains(&(i + 1)))
    };
    let outside: Vec<RootVector> = gcm
        .positive_roots()?
        .into_iter()
        .filter(|b| !in_levi(b))
        .collect();
    let mut fibre = data.highest.extended(1);
    fibre.0[n] = 1;
    let g = WeylGroup::new(gcm.clone());
    let mut total = Frac::zero(nv);
    for w in g.minimal_coset_reps(&data.orthogonal)? {
        let mut weights = Vec::with_capacity(outside.len() + 1);
        weights.push(g.act(&w, &fibre));
        weights.extend(outside.iter().map(|b| g.act(&w, &b.extended(1))));
        total = total.checked_add(&Frac::from_weights(nv, &weights)?)?;
    }
    let mult = -&total;
    let mut names = default_names(n);
    names.push("d".into());
    let mut r = ZooResult::new(
        format!("minimal-orbit-{}", gcm.name()),
        outside.len() + 1,
        mult,
        names,
    );
    match gcm.label() {
        Some(CartanType::C(k)) => {
            r.expected = Some(BigInt::from(2).pow(2 * k as u32 - 1));
            r.torsion_groups = vec![2; 2 * k - 1];
        }
        Some(CartanType::A(1)) => {
            r.expected = Some(BigInt::from(2));
            r.torsion_groups = vec![2];
        }
        Some(CartanType::G2) => {
            r.expected = Some(BigInt::from(18));
            r.torsion_groups = vec![3, 2, 3];
        }
        _ => {}
    }
    Ok(r)
}

/// `prod_{alpha long} (delta + alpha)` as a reciprocal fraction, for
/// comparing denominators of minimal orbit multiplicities.
pub fn long_root_denominator(gcm: &Gcm) -> Result<Frac> {
    let data = gcm.highest_root_and_lengths()?;
    let n = gcm.rank();
    let weights: Vec<RootVector> = data
        .long_roots
        .iter()
        .map(|a| {
            let mut v = a.extended(1);
            v.0[n] = 1;
            v
        })
        .collect();
    Frac::from_weights(n + 1, &weights)
}

/// The quasi-minimal `cg2` slice in the affine Grassmannian of `G2`. Its
/// multiplicity is a literature value, not computed here.
pub fn cg2_fixture() -> ZooResult {
    let base = [
        RootVector(vec![1, 1, 0]),
        RootVector(vec![1, 1, 3]),
        RootVector(vec![2, 5, 6]),
        RootVector(vec![2, 5, 9]),
    ];
    let mult = cover_multiplicity(3, 27, &base).expect("nonzero weights");
    let mut r = ZooResult::new(
        "cg2".into(),
        4,
        mult,
        vec!["a0".into(), "a1".into(), "a2".into()],
    );
    r.expected = Some(BigInt::from(27));
    r.torsion_groups = vec![3, 3, 3];
    r
}

/// Numerator against torsion order of the punctured neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyRow {
    pub example: String,
    pub abs_numerator: BigInt,
    pub torsion_order: BigInt,
    /// False when the numerator is a tabulated value rather than computed.
    pub computed: bool,
    pub matches: bool,
}

fn consistency_row(r: &ZooResult, computed: bool) -> ConsistencyRow {
    let num = r.abs_numerator.clone().unwrap_or_default();
    let tor = r.torsion_order().unwrap_or_default();
    ConsistencyRow {
        example: r.name.clone(),
        matches: num == tor && r.abs_numerator.is_some(),
        abs_numerator: num,
        torsion_order: tor,
        computed,
    }
}

/// Rows for Kleinian `A_kleinian_n`, minimal `C_c_n`, minimal `G2` and the
/// `cg2` fixture.
pub fn consistency_table_with(kleinian_n: usize, c_n: usize) -> Result<Vec<ConsistencyRow>> {
    Ok(vec![
        consistency_row(&kleinian_a(kleinian_n)?, true),
        consistency_row(&minimal_orbit_multiplicity(&Gcm::builtin_gcm('C', c_n)?)?, true),
        consistency_row(&minimal_orbit_multiplicity(&Gcm::builtin(CartanType::G2))?, true),
        consistency_row(&cg2_fixture(), false),
    ])
}

pub fn consistency_table() -> Result<Vec<ConsistencyRow>> {
    consistency_table_with(5, 3)
}

/// A Kleinian singularity where the torsion-freeness hypothesis fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchRow {
    pub example: String,
    pub weights: [i64; 3],
    /// `e_x X = 1 / (d chi^2)`.
    pub d: BigInt,
    pub primes_of_d: BTreeSet<u64>,
    pub non_p_smooth_primes: BTreeSet<u64>,
    /// The primes read off the multiplicity differ from the actual ones.
    pub mismatch: bool,
}

pub fn hypothesis_failure_demo(d_ranks: &[usize]) -> Result<Vec<MismatchRow>> {
    let mut kinds: Vec<WeightedKleinian> = d_ranks.iter().map(|&n| WeightedKleinian::D(n)).collect();
    kinds.extend([WeightedKleinian::E6, WeightedKleinian::E7, WeightedKleinian::E8]);
    let mut rows = Vec::new();
    for kind in kinds {
        let r = weighted_kleinian(kind)?;
        let d = r.mult.scalar().denom().clone();
        let primes_of_d: BTreeSet<u64> = prime_factors(&d)
            .iter()
            .map(|p| u64::try_from(p).expect("small prime"))
            .collect();
        let actual = kind.non_p_smooth_primes();
        rows.push(MismatchRow {
            example: r.name,
            weights: kind.weights(),
            mismatch: primes_of_d != actual,
            d,
            primes_of_d,
            non_p_smooth_primes: actual,
        });
    }
    Ok(rows)
}

/// Converts an integer-valued rational into an integer, if it is one.
pub fn as_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}
