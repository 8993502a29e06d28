//! Symmetric quartic (and cubic) forms, basis conversion, exact evaluation,
//! and the univariate restriction coefficients.
//!
//! A quartic form is held in the power-sum basis,
//! `f = a*P4 + b*P3*P1 + c*P2^2 + d*P2*P1^2 + e*P1^4`, which is the basis in
//! which all restriction and discriminant formulas are written. The monomial
//! symmetric basis `(M4, M31, M22, M211, M1111)` is accepted at the boundary
//! and converted immediately.

use num_traits::Zero;

use crate::algebra::{rat, ratio, Poly, Rat};
use crate::{Error, Result};

/// A symmetric quartic form in the power-sum basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricQuartic {
    n: u64,
    a: Rat,
    b: Rat,
    c: Rat,
    d: Rat,
    e: Rat,
}

/// A symmetric quartic form in the monomial symmetric basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialQuartic {
    n: u64,
    pub m4: Rat,
    pub m31: Rat,
    pub m22: Rat,
    pub m211: Rat,
    pub m1111: Rat,
}

/// A symmetric cubic form `a3*P3 + a21*P2*P1 + a111*P1^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricCubic {
    n: u64,
    pub a3: Rat,
    pub a21: Rat,
    pub a111: Rat,
}

/// Coefficients of the restriction `f_{r,s}(t) = f(t·1_r, 1_s, 0_{n-r-s})`
/// and of the associated quadratic `f^d_{r,s}`.
///
/// `f_{r,s} = a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0` and
/// `f^d_{r,s} = alpha t^2 + beta t + gamma`, with
/// `delta = beta^2 - 4*alpha*gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionCoeffs {
    pub r: u64,
    pub s: u64,
    pub a4: Rat,
    pub a3: Rat,
    pub a2: Rat,
    pub a1: Rat,
    pub a0: Rat,
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub delta: Rat,
}

impl RestrictionCoeffs {
    /// The restriction as a univariate polynomial.
    pub fn quartic(&self) -> Poly {
        Poly::new(vec![
            self.a0.clone(),
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
        ])
    }

    /// The derivative-difference quadratic as a univariate polynomial.
    pub fn quadratic(&self) -> Poly {
        Poly::new(vec![
            self.gamma.clone(),
            self.beta.clone(),
            self.alpha.clone(),
        ])
    }
}

impl SymmetricQuartic {
    pub fn new(n: u64, a: Rat, b: Rat, c: Rat, d: Rat, e: Rat) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVariables(n));
        }
        Ok(Self { n, a, b, c, d, e })
    }

    /// Integer power-sum coefficients `[a, b, c, d, e]`.
    pub fn from_ints(n: u64, coeffs: [i64; 5]) -> Result<Self> {
        let [a, b, c, d, e] = coeffs;
        Self::new(n, rat(a), rat(b), rat(c), rat(d), rat(e))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Power-sum coefficients in the order `(a, b, c, d, e)`.
    pub fn coeffs(&self) -> [&Rat; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn d(&self) -> &Rat {
        &self.d
    }

    pub fn e(&self) -> &Rat {
        &self.e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    /// Exact evaluation through the power sums of `x`; `x` must have exactly
    /// `n` coordinates.
    pub fn eval_point(&self, x: &[Rat]) -> Result<Rat> {
        if x.len() as u64 != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n as usize,
                got: x.len(),
            });
        }
        let mut p1 = Rat::zero();
        let mut p2 = Rat::zero();
        let mut p3 = Rat::zero();
        let mut p4 = Rat::zero();
        for xi in x {
            let x2 = xi * xi;
            p1 += xi;
            p3 += &x2 * xi;
            p4 += &x2 * &x2;
            p2 += x2;
        }
        let p1sq = &p1 * &p1;
        Ok(&self.a * p4
            + &self.b * p3 * &p1
            + &self.c * &p2 * &p2
            + &self.d * p2 * &p1sq
            + &self.e * &p1sq * &p1sq)
    }

    /// `f(1_k, 0_{n-k}) = k(a + (b+c)k + dk^2 + ek^3)`, exactly.
    pub fn eval_ones(&self, k: u64) -> Result<Rat> {
        if k < 1 || k > self.n {
            return Err(Error::KOutOfRange { k, n: self.n });
        }
        let kk = rat(k);
        Ok(&kk * (&self.a + &kk * (&self.b + &self.c + &kk * (&self.d + &kk * &self.e))))
    }

    /// `f(1, -1, 0_{n-2}) = 2(a + 2c)`.
    pub fn eval_one_minus_one(&self) -> Rat {
        rat(2) * (&self.a + rat(2) * &self.c)
    }

    /// Coefficients of `f_{r,s}` and `f^d_{r,s}` for blocks of size `r` and
    /// `s`; requires `r, s >= 1` and `r + s <= n`.
    pub fn restriction(&self, r: u64, s: u64) -> Result<RestrictionCoeffs> {
        if r < 1 || s < 1 || r.checked_add(s).is_none_or(|t| t > self.n) {
            return Err(Error::InvalidBlocks { r, s, n: self.n });
        }
        let (a, b, c, d, e) = (&self.a, &self.b, &self.c, &self.d, &self.e);
        let rr = rat(r);
        let ss = rat(s);
        let rs = &rr * &ss;
        let bc = b + c;

        let a4 = &rr * (a + (&bc + (d + e * &rr) * &rr) * &rr);
        let a3 = &rs * (b + (rat(2) * d + rat(4) * e * &rr) * &rr);
        let a2 = &rs * (rat(2) * c + d * (&rr + &ss) + rat(6) * e * &rs);
        let a1 = &rs * (b + (rat(2) * d + rat(4) * e * &ss) * &ss);
        let a0 = &ss * (a + (&bc + (d + e * &ss) * &ss) * &ss);

        let four_a = rat(4) * a;
        let tb4c = rat(3) * b + rat(4) * c;
        let alpha = &four_a + &tb4c * &rr + rat(2) * d * &rr * &rr;
        let beta = &four_a + rat(3) * b * (&rr + &ss) + rat(4) * d * &rs;
        let gamma = &four_a + &tb4c * &ss + rat(2) * d * &ss * &ss;
        let delta = &beta * &beta - rat(4) * &alpha * &gamma;

        Ok(RestrictionCoeffs {
            r,
            s,
            a4,
            a3,
            a2,
            a1,
            a0,
            alpha,
            beta,
            gamma,
            delta,
        })
    }
}

impl MonomialQuartic {
    pub fn new(n: u64, m4: Rat, m31: Rat, m22: Rat, m211: Rat, m1111: Rat) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVariables(n));
        }
        Ok(Self {
            n,
            m4,
            m31,
            m22,
            m211,
            m1111,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// Change of basis from monomial symmetric coefficients to power-sum
/// coefficients (the upper-triangular conversion matrix):
///
/// ```text
/// a = m4 - m31 - m22/2 + m211 - m1111/4
/// b = m31 - m211 + m1111/3
/// c = m22/2 - m211/2 + m1111/8
/// d = m211/2 - m1111/4
/// e = m1111/24
/// ```
pub fn from_monomial(m: &MonomialQuartic) -> SymmetricQuartic {
    let a = &m.m4 - &m.m31 - ratio(1, 2) * &m.m22 + &m.m211 - ratio(1, 4) * &m.m1111;
    let b = &m.m31 - &m.m211 + ratio(1, 3) * &m.m1111;
    let c = ratio(1, 2) * &m.m22 - ratio(1, 2) * &m.m211 + ratio(1, 8) * &m.m1111;
    let d = ratio(1, 2) * &m.m211 - ratio(1, 4) * &m.m1111;
    let e = ratio(1, 24) * &m.m1111;
    SymmetricQuartic {
        n: m.n,
        a,
        b,
        c,
        d,
        e,
    }
}

impl SymmetricCubic {
    pub fn new(n: u64, a3: Rat, a21: Rat, a111: Rat) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVariables(n));
        }
        Ok(Self { n, a3, a21, a111 })
    }

    pub fn from_ints(n: u64, coeffs: [i64; 3]) -> Result<Self> {
        let [a3, a21, a111] = coeffs;
        Self::new(n, rat(a3), rat(a21), rat(a111))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `f(1_k, 0_{n-k}) = a3*k + a21*k^2 + a111*k^3`.
    pub fn eval_ones(&self, k: u64) -> Result<Rat> {
        if k < 1 || k > self.n {
            return Err(Error::KOutOfRange { k, n: self.n });
        }
        let kk = rat(k);
        Ok(&kk * (&self.a3 + &kk * (&self.a21 + &kk * &self.a111)))
    }
}

/// Known nonnegative form families used across the test suite, in the
/// power-sum basis.
pub mod families {
    use super::SymmetricQuartic;
    use crate::algebra::rat;

    /// `2n*P4 - 2(n+1)*P3P1 - n*P2^2 + (n+3)*P2P1^2 - P1^4`
    /// (orthant-nonnegative for every n).
    pub fn orthant_nonneg_family(n: u64) -> SymmetricQuartic {
        let nn = rat(n);
        SymmetricQuartic::new(
            n,
            rat(2) * &nn,
            rat(-2) * (&nn + rat(1)),
            -&nn,
            &nn + rat(3),
            rat(-1),
        )
        .expect("n >= 2")
    }

    /// `-n(n-1)*P4 + 4(n-1)*P3P1 + (n^2-3n+3)*P2^2 - 2n*P2P1^2 + P1^4`
    /// (nonnegative on all of R^n, hence also on the orthant).
    pub fn doubly_nonneg_family(n: u64) -> SymmetricQuartic {
        let nn = rat(n);
        SymmetricQuartic::new(
            n,
            -(&nn * (&nn - rat(1))),
            rat(4) * (&nn - rat(1)),
            &nn * &nn - rat(3) * &nn + rat(3),
            rat(-2) * &nn,
            rat(1),
        )
        .expect("n >= 2")
    }

    /// `-2(n-1)*P3P1 + (n-2)*P2^2 + (n+1)*P2P1^2 - P1^4`
    /// (a Newton inequality; nonnegative on all of R^n).
    pub fn newton_inequality(n: u64) -> SymmetricQuartic {
        let nn = rat(n);
        SymmetricQuartic::new(
            n,
            rat(0),
            rat(-2) * (&nn - rat(1)),
            &nn - rat(2),
            &nn + rat(1),
            rat(-1),
        )
        .expect("n >= 2")
    }
}
