//! Integer fast path for the no-trace decision loops.
//!
//! Every check the deciders perform is a sign test on values that are
//! homogeneous of positive degree in the input coefficients, so multiplying
//! the form by the (positive) least common multiple of its coefficient
//! denominators changes no decision, no gate, and no first-failure index.
//! After that one scaling the whole loop runs in plain big-integer
//! arithmetic, with the two resultants evaluated through their expanded
//! polynomial forms instead of Bareiss elimination. The traced path keeps
//! the rational formulas; tests pin both paths to identical verdicts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::forms::SymmetricQuartic;

pub(crate) struct IntForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    e: BigInt,
    bc: BigInt,
}

pub(crate) struct IntRestriction {
    pub a4: BigInt,
    pub a3: BigInt,
    pub a2: BigInt,
    pub a1: BigInt,
    pub a0: BigInt,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub delta: BigInt,
}

impl IntForm {
    pub fn from_form(f: &SymmetricQuartic) -> Self {
        let [a, b, c, d, e] = f.coeffs();
        let mut scale = BigInt::from(1);
        for x in [a, b, c, d, e] {
            scale = scale.lcm(x.denom());
        }
        let lift = |x: &crate::algebra::Rat| x.numer() * (&scale / x.denom());
        let (a, b, c, d, e) = (lift(a), lift(b), lift(c), lift(d), lift(e));
        let bc = &b + &c;
        Self { a, b, c, d, e, bc }
    }

    /// `f(1_k, 0_{n-k})` up to the positive scale factor.
    pub fn ones_value(&self, k: u64) -> BigInt {
        let kk = BigInt::from(k);
        &kk * (&self.a + &kk * (&self.bc + &kk * (&self.d + &kk * &self.e)))
    }

    pub fn restriction(&self, r: u64, s: u64) -> IntRestriction {
        let rr = BigInt::from(r);
        let ss = BigInt::from(s);
        let rs = &rr * &ss;

        let a4 = &rr * (&self.a + &rr * (&self.bc + &rr * (&self.d + &rr * &self.e)));
        let a3 = &rs * (&self.b + &rr * (2 * &self.d + 4 * &self.e * &rr));
        let a2 = &rs * (2 * &self.c + &self.d * (&rr + &ss) + 6 * &self.e * &rs);
        let a1 = &rs * (&self.b + &ss * (2 * &self.d + 4 * &self.e * &ss));
        let a0 = &ss * (&self.a + &ss * (&self.bc + &ss * (&self.d + &ss * &self.e)));

        let four_a = 4 * &self.a;
        let tb4c = 3 * &self.b + 4 * &self.c;
        let alpha = &four_a + &tb4c * &rr + 2 * &self.d * &rr * &rr;
        let beta = &four_a + 3 * &self.b * (&rr + &ss) + 4 * &self.d * &rs;
        let gamma = &four_a + &tb4c * &ss + 2 * &self.d * &ss * &ss;
        let delta = &beta * &beta - 4 * &alpha * &gamma;

        IntRestriction {
            a4,
            a3,
            a2,
            a1,
            a0,
            alpha,
            beta,
            gamma,
            delta,
        }
    }
}

fn nonneg(x: &BigInt) -> bool {
    !x.is_negative()
}

fn nonpos(x: &BigInt) -> bool {
    !x.is_positive()
}

/// `P`, `Q` by the printed closed forms and `R` as the expanded 6x6
/// resultant polynomial (22 terms).
fn pqr(rc: &IntRestriction) -> (BigInt, BigInt, BigInt) {
    let (al, be, ga) = (&rc.alpha, &rc.beta, &rc.gamma);
    let (fa, fb, fc, fd, fe) = (&rc.a4, &rc.a3, &rc.a2, &rc.a1, &rc.a0);
    let be2 = be * be;
    let be3 = &be2 * be;
    let be4 = &be2 * &be2;
    let alga = al * ga;
    let al2 = al * al;
    let al3 = &al2 * al;
    let al4 = &al2 * &al2;
    let ga2 = ga * ga;
    let ga3 = &ga2 * ga;
    let ga4 = &ga2 * &ga2;

    let p = fa * (&be4 - 4 * &be2 * &alga + 2 * &alga * &alga) - fb * be * al * (&be2 - 3 * &alga)
        + fc * &al2 * (&be2 - 2 * &alga)
        - fd * be * &al3
        + 2 * fe * &al4;
    let q = -(fa * be) * (&be2 - 2 * &alga) + fb * al * (&be2 - &alga) - fc * be * &al2 + fd * &al3;

    let r = fa * fa * &ga4
        + fe * fe * &al4
        + fb * fb * al * &ga3
        + fd * fd * &al3 * ga
        + fc * fc * &al2 * &ga2
        + fa * (-fb * be * &ga3 - 2 * fc * al * &ga3 + fc * &be2 * &ga2 + 3 * fd * al * be * &ga2
            - fd * &be3 * ga
            + 2 * fe * &al2 * &ga2
            - 4 * fe * al * &be2 * ga
            + fe * &be4)
        - fc * &al2 * (fd * be * ga + 2 * fe * al * ga - fe * &be2)
        - fb * al
            * (fc * be * &ga2 + 2 * fd * al * &ga2 - fd * &be2 * ga - 3 * fe * al * be * ga
                + fe * &be3)
        - fd * fe * &al3 * be;
    (p, q, r)
}

/// Gate, fast paths, and the two-line sign system; mirrors the rational
/// classifier exactly.
pub(crate) fn orthant_pair_passes(rc: &IntRestriction) -> bool {
    if rc.alpha.is_zero() || rc.delta.is_negative() || rc.beta.is_zero() {
        return true;
    }
    if (nonneg(&rc.alpha) && nonneg(&rc.beta) && nonneg(&rc.gamma))
        || (nonpos(&rc.alpha) && nonpos(&rc.beta) && nonpos(&rc.gamma))
    {
        return true;
    }
    let (p, q, r) = pqr(rc);
    if nonneg(&p) && nonneg(&r) {
        return true;
    }
    let (al, be, ga) = (&rc.alpha, &rc.beta, &rc.gamma);
    let line1 = (nonpos(al) && nonpos(be))
        || (nonneg(be) && nonneg(ga))
        || (nonneg(&p) && nonneg(&q))
        || (nonneg(&r) && nonneg(&p))
        || (nonpos(&r) && nonneg(&q));
    let line2 = (nonneg(al) && nonneg(be))
        || (nonpos(be) && nonpos(ga))
        || (nonneg(&p) && nonpos(&q))
        || (nonneg(&r) && nonneg(&p))
        || (nonpos(&r) && nonpos(&q));
    line1 && line2
}

/// `(Delta, G, H, K)` of the restriction quartic, with `K` as the expanded
/// 7x7 determinant polynomial (the classical 16-term resultant form).
fn real_discs(rc: &IntRestriction) -> (BigInt, BigInt, BigInt, BigInt) {
    let (fa, fb, fc, fd, fe) = (&rc.a4, &rc.a3, &rc.a2, &rc.a1, &rc.a0);
    let a2 = fa * fa;
    let a3 = &a2 * fa;
    let b2 = fb * fb;
    let b3 = &b2 * fb;
    let b4 = &b2 * &b2;
    let c2 = fc * fc;
    let c3 = &c2 * fc;
    let c4 = &c2 * &c2;
    let d2 = fd * fd;
    let d3 = &d2 * fd;
    let d4 = &d2 * &d2;
    let e2 = fe * fe;

    let delta =
        -108 * &a2 * &d2 + 4 * fa * fc * (27 * fb * fd - 8 * &c2) - 9 * &b2 * (3 * fb * fd - &c2);

    let g = 768 * &a3 * fe - 64 * &a2 * (3 * fb * fd + 2 * &c2) + 144 * fa * &b2 * fc - 27 * &b4;

    let h = 384 * &a3 * &e2 - 8 * &a2 * (24 * fb * fd * fe + 16 * &c2 * fe - 9 * fc * &d2)
        + fa * (144 * &b2 * fc * fe - 3 * &b2 * &d2 - 40 * fb * &c2 * fd + 8 * &c4)
        - &b2 * (27 * &b2 * fe - 9 * fb * fc * fd + 2 * &c3);

    let k = 256 * &a3 * &e2 * fe - 192 * &a2 * fb * fd * &e2 - 128 * &a2 * &c2 * &e2
        + 144 * &a2 * fc * &d2 * fe
        - 27 * &a2 * &d4
        + 144 * fa * &b2 * fc * &e2
        - 6 * fa * &b2 * &d2 * fe
        - 80 * fa * fb * &c2 * fd * fe
        + 18 * fa * fb * fc * &d3
        + 16 * fa * &c4 * fe
        - 4 * fa * &c3 * &d2
        - 27 * &b4 * &e2
        + 18 * &b3 * fc * fd * fe
        - 4 * &b3 * &d3
        - 4 * &b2 * &c3 * fe
        + &b2 * &c2 * &d2;

    (delta, g, h, k)
}

pub(crate) fn real_restriction_passes(rc: &IntRestriction) -> bool {
    let (delta, g, h, k) = real_discs(rc);
    (nonneg(&k) && delta.is_negative()) || (nonneg(&g) && nonneg(&h) && nonneg(&k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Rat};
    use crate::qe_plus::{check_discriminant_pair, compute_pqr};
    use crate::qe_real::compute_dghk;

    fn rational_form() -> SymmetricQuartic {
        SymmetricQuartic::new(
            5,
            ratio(3, 2),
            ratio(-7, 3),
            ratio(1, 6),
            ratio(5, 4),
            ratio(-1, 12),
        )
        .unwrap()
    }

    #[test]
    fn integer_form_matches_rational_values_exactly() {
        // with integer coefficients the scale factor is 1, so the integer
        // path must reproduce the rational values verbatim
        let f = SymmetricQuartic::from_ints(7, [24, -19, -7, 9, -1]).unwrap();
        let fi = IntForm::from_form(&f);
        for (r, s) in [(1, 3), (2, 5), (3, 4), (1, 1)] {
            let rc = f.restriction(r, s).unwrap();
            let ri = fi.restriction(r, s);
            assert_eq!(Rat::from_integer(ri.alpha.clone()), rc.alpha);
            assert_eq!(Rat::from_integer(ri.delta.clone()), rc.delta);
            assert_eq!(Rat::from_integer(ri.a0.clone()), rc.a0);
            let pqr_rat = compute_pqr(&rc);
            let (p, q, rr) = pqr(&ri);
            assert_eq!(Rat::from_integer(p), pqr_rat.p);
            assert_eq!(Rat::from_integer(q), pqr_rat.q);
            assert_eq!(Rat::from_integer(rr), pqr_rat.r);
            let (delta, g, h, k) = real_discs(&ri);
            let d = compute_dghk(&rc.quartic());
            assert_eq!(Rat::from_integer(delta), d.delta);
            assert_eq!(Rat::from_integer(g), d.g);
            assert_eq!(Rat::from_integer(h), d.h);
            assert_eq!(Rat::from_integer(k), d.k);
        }
        for k in 1..=7 {
            assert_eq!(Rat::from_integer(fi.ones_value(k)), f.eval_ones(k).unwrap());
        }
    }

    #[test]
    fn scaled_form_agrees_on_every_sign_decision() {
        let f = rational_form();
        let fi = IntForm::from_form(&f);
        for r in 1..5u64 {
            for s in 1..=(5 - r) {
                let rc = f.restriction(r, s).unwrap();
                let ri = fi.restriction(r, s);
                assert_eq!(ri.alpha.sign(), rc.alpha.numer().sign());
                assert_eq!(ri.delta.sign(), rc.delta.numer().sign());
                let pqr_rat = compute_pqr(&rc);
                assert_eq!(
                    orthant_pair_passes(&ri),
                    check_discriminant_pair(&rc, &pqr_rat),
                    "pair ({r},{s})"
                );
            }
        }
        for k in 1..=5 {
            assert_eq!(
                fi.ones_value(k).sign(),
                f.eval_ones(k).unwrap().numer().sign()
            );
        }
    }
}
