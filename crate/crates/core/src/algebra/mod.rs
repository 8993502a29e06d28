//! Exact scalar and univariate-polynomial machinery: arbitrary-precision
//! rationals, intervals, Sturm-chain root counting, the two resultant
//! determinants, and the radical-free sign test for `u + v*sqrt(delta)`.

mod det;
mod interval;
mod poly;
mod rational;
mod sturm;

pub use det::{det_k, resultant_quartic_quadratic};
pub use interval::Interval;
pub use poly::Poly;
pub use rational::{parse_rat, rat, ratio, Rat};
pub use sturm::{find_negative_point, nonneg_on, sturm_count};

use num_traits::Signed;

use crate::{Error, Result};

/// Decides `u + v*sqrt(delta) >= 0` without extracting the square root:
/// with `rho = u^2 - v^2*delta`, the inequality holds iff
/// `u, v >= 0` or `rho, u >= 0` or `rho <= 0 <= v`.
/// Errors when `delta < 0`.
pub fn sign_u_plus_v_sqrt(u: &Rat, v: &Rat, delta: &Rat) -> Result<bool> {
    if delta.is_negative() {
        return Err(Error::NegativeDelta(delta.clone()));
    }
    let u_nonneg = !u.is_negative();
    let v_nonneg = !v.is_negative();
    if u_nonneg && v_nonneg {
        return Ok(true);
    }
    let rho = u * u - v * v * delta;
    Ok((!rho.is_negative() && u_nonneg) || (!rho.is_positive() && v_nonneg))
}
