//! Exact rational scalars and small helpers shared across the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Exact rational number used for every classical coordinate and matrix entry.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}

/// Random positive rational with numerator and denominator in 1..=bound.
pub fn random_positive_rat<R: Rng>(rng: &mut R, bound: u32) -> Rat {
    let n = rng.gen_range(1..=bound) as i64;
    let d = rng.gen_range(1..=bound) as i64;
    rat(n, d)
}

/// Renders `p/q` with the denominator omitted when it is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the output of [`rat_to_string`].
pub fn rat_from_string(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}
