//! The scalar type of the crate: arbitrary-precision rationals.
//!
//! `Rat` is kept in canonical form by construction (positive denominator,
//! reduced fraction), so comparisons and sign tests are exact everywhere.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for `n/d`; `d` must be nonzero.
pub fn ratio<T: Into<BigInt>, U: Into<BigInt>>(n: T, d: U) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Parses `p` or `p/q` with integer `p` and positive integer `q`.
///
/// This is stricter than the `FromStr` impl of the underlying type: a zero or
/// negative denominator is rejected rather than normalized away, so the CLI
/// surfaces malformed input instead of guessing.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d <= BigInt::zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
    }
}
