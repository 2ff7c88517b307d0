//! Exact equivariant multiplicities of torus fixed points on Schubert
//! varieties, and the smooth / rationally smooth / p-smooth / Z-smooth
//! classification of those points.
//!
//! The pipeline is:
//!
//! * [`cartan`]: generalized Cartan matrices and root-lattice arithmetic,
//! * [`weyl`]: Weyl group elements, reduced words, Bruhat order,
//! * [`polyfrac`]: sparse integer polynomials and rational functions whose
//!   denominators are kept as products of linear forms,
//! * [`eqmult`]: localization on Bott–Samelson resolutions,
//! * [`criteria`]: Kumar's criterion and its modular refinement,
//! * [`zoo`]: hand-built example singularities (Kleinian, minimal orbits).
//!
//! The polynomial layer is generic over the integer coefficient type; the
//! aliases below fix it to arbitrary-precision integers, which is what every
//! caller in this workspace uses.

pub mod cartan;
pub mod criteria;
pub mod eqmult;
pub mod error;
pub mod polyfrac;
pub mod scalar;
pub mod weyl;
pub mod zoo;

pub use cartan::{CartanType, Gcm, RootVector};
pub use criteria::{LocusReport, PointStatus};
pub use eqmult::{MultiplicityTable, NumeratorReport};
pub use error::{Error, Result};
pub use polyfrac::{FactoredRational, LinearForm, MultiPoly};
pub use scalar::Coeff;
pub use weyl::{WeylElement, WeylGroup, Word};

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Ratio};

/// Polynomial with arbitrary-precision integer coefficients.
pub type Poly = MultiPoly<BigInt>;
/// Factored rational function with arbitrary-precision coefficients.
pub type Frac = FactoredRational<BigInt>;
/// Numerator report with arbitrary-precision coefficients.
pub type Report = NumeratorReport<BigInt>;
/// Multiplicity table with arbitrary-precision coefficients.
pub type Table = MultiplicityTable<BigInt>;

/// Fixed-width variants, useful for quick scans where coefficients are known
/// to stay small.
pub type Poly128 = MultiPoly<i128>;
pub type Frac128 = FactoredRational<i128>;
