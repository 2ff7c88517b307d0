use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Exact integer coefficient ring for polynomials and fractions.
///
/// Implemented for `BigInt`, `i64` and `i128`. The fixed-width types do not
/// detect overflow, so they are only suitable when the coefficients are
/// known to stay small.
pub trait Coeff:
    Integer + Signed + Clone + Debug + Display + Hash + From<i64> + Into<BigInt> + Send + Sync
{
    fn to_bigint(&self) -> BigInt {
        self.clone().into()
    }
}

impl<T> Coeff for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + From<i64> + Into<BigInt> + Send + Sync
{
}

/// Prime factors of `n` (ascending, without multiplicity) by trial division.
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let one = BigInt::from(1);
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(p.clone());
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += &one;
    }
    if n > one {
        out.push(n);
    }
    out
}

/// Deterministic primality test by trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_small_values() {
        let f = |n: i64| {
            prime_factors(&BigInt::from(n))
                .into_iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(f(1), "");
        assert_eq!(f(18), "2,3");
        assert_eq!(f(-30), "2,3,5");
        assert_eq!(f(27), "3");
        assert_eq!(f(97), "97");
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
