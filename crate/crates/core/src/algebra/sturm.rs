//! Sturm chains, exact root counting, and sign analysis on intervals.
//!
//! Everything here works on the square-free part of the input polynomial, so
//! root counts are multiplicity-free and sign tests at non-root points are
//! strict. The central helper is [`region_samples`]: an ordered list of
//! rational points that meets every maximal root-free region of the interval
//! (plus its closed endpoints). Given those, nonnegativity on the interval is
//! a finite conjunction of exact sign tests, and a negative sample is an
//! exact counterexample.

use std::ops::Bound;

use num_traits::{One, Signed, Zero};

use super::interval::{finite, Interval};
use super::poly::Poly;
use super::rational::{rat, ratio, Rat};
use crate::{Error, Result};

/// The sign-remainder chain of a (square-free) polynomial.
struct SturmChain {
    polys: Vec<Poly>,
}

impl SturmChain {
    fn new(q: &Poly) -> Self {
        let mut polys = vec![q.clone(), q.derivative()];
        loop {
            let k = polys.len();
            if polys[k - 1].is_zero() {
                polys.pop();
                break;
            }
            let (_, r) = polys[k - 2].div_rem(&polys[k - 1]);
            if r.is_zero() {
                break;
            }
            // Normalizing by a positive constant keeps every sign pattern.
            let lead_abs = r.leading().unwrap().abs();
            polys.push(r.neg().scaled(&lead_abs.recip()));
        }
        Self { polys }
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.polys.iter().map(|p| sign(&p.eval(x))))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.polys.iter().map(|p| match p.degree() {
            None => 0,
            Some(d) => {
                let s = sign(p.leading().unwrap());
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }))
    }

    /// Distinct roots in the open interval `(a, b)`; requires `q(a) != 0` and
    /// `q(b) != 0`.
    fn count_open(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

fn sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots of `p` in `iv`, counted without
/// multiplicity. Errors on the zero polynomial.
pub fn sturm_count(p: &Poly, iv: &Interval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if iv.is_empty() {
        return Ok(0);
    }
    if let Some(a) = iv.as_point() {
        return Ok(usize::from(p.eval(a).is_zero()));
    }

    let mut q = p.square_free_part();
    let mut count = 0;
    // Roots sitting exactly on a finite endpoint are counted by hand (when
    // the endpoint is closed) and divided out, so that the Sturm query below
    // runs with non-root endpoints.
    for bound in [iv.lo(), iv.hi()] {
        if let Some(a) = finite(bound) {
            if q.eval(a).is_zero() {
                if matches!(bound, Bound::Included(_)) {
                    count += 1;
                }
                q = q.deflate_root(a);
            }
        }
    }
    if q.degree().unwrap_or(0) == 0 {
        return Ok(count);
    }

    let chain = SturmChain::new(&q);
    let lo_var = match finite(iv.lo()) {
        Some(a) => chain.variations_at(a),
        None => chain.variations_at_infinity(false),
    };
    let hi_var = match finite(iv.hi()) {
        Some(b) => chain.variations_at(b),
        None => chain.variations_at_infinity(true),
    };
    Ok(count + lo_var - hi_var)
}

/// Ordered rational sample points such that every maximal root-free region of
/// `iv` (with respect to the roots of `p`) contains at least one sample, plus
/// the closed finite endpoints of `iv`. `p` must be nonzero and `iv`
/// nonempty and not a single point.
///
/// Every returned point lies in `iv`, and `p` vanishes at none of them except
/// possibly the closed endpoints.
fn region_samples(p: &Poly, iv: &Interval) -> Vec<Rat> {
    let mut q = p.square_free_part();
    for bound in [iv.lo(), iv.hi()] {
        if let Some(a) = finite(bound) {
            if q.eval(a).is_zero() {
                q = q.deflate_root(a);
            }
        }
    }

    // A working window [a, b] with non-root endpoints that contains every
    // root of q lying in iv. Unbounded sides fall back to the Cauchy bound
    // of p, beyond which the sign of p is settled.
    let bound = p.cauchy_root_bound();
    let mut a = match finite(iv.lo()) {
        Some(x) => x.clone(),
        None => -&bound,
    };
    let mut b = match finite(iv.hi()) {
        Some(x) => x.clone(),
        None => bound,
    };
    if finite(iv.lo()).is_none() && a >= b {
        a = &b - Rat::one();
    }
    if finite(iv.hi()).is_none() && b <= a {
        b = &a + Rat::one();
    }
    debug_assert!(a < b);
    debug_assert!(!q.eval(&a).is_zero() && !q.eval(&b).is_zero());

    if q.degree().unwrap_or(0) == 0 {
        let mid = (&a + &b) / rat(2);
        let mut out = Vec::with_capacity(3);
        if matches!(iv.lo(), Bound::Included(_)) {
            out.push(a);
        }
        out.push(mid);
        if matches!(iv.hi(), Bound::Included(_)) {
            out.push(b);
        }
        return out;
    }

    let chain = SturmChain::new(&q);

    // Bisect until no subinterval holds two or more roots. The recorded
    // endpoints then separate any two consecutive roots.
    let mut endpoints = vec![a.clone(), b.clone()];
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        if chain.count_open(&lo, &hi) <= 1 {
            continue;
        }
        let m = split_point(&q, &lo, &hi);
        endpoints.push(m.clone());
        stack.push((lo, m.clone()));
        stack.push((m, hi));
    }
    endpoints.sort();

    let first_gap = sample_after(&chain, &q, &a, &endpoints[1]);
    let last_gap = sample_before(&chain, &q, &endpoints[endpoints.len() - 2], &b);

    let mut samples = Vec::with_capacity(endpoints.len() + 2);
    if matches!(iv.lo(), Bound::Included(_)) {
        samples.push(a.clone());
    }
    samples.push(first_gap);
    samples.extend_from_slice(&endpoints[1..endpoints.len() - 1]);
    samples.push(last_gap);
    if matches!(iv.hi(), Bound::Included(_)) {
        samples.push(b.clone());
    }
    samples.dedup();
    samples
}

/// A non-root split point of `(lo, hi)`: the midpoint when possible,
/// otherwise a nearby rational. Only `deg q` points can be roots, so one of
/// the tried subdivisions must work.
fn split_point(q: &Poly, lo: &Rat, hi: &Rat) -> Rat {
    let width = hi - lo;
    let mid = lo + &width / rat(2);
    if !q.eval(&mid).is_zero() {
        return mid;
    }
    let denom = 2 * q.degree().unwrap_or(0) as i64 + 3;
    for k in 1..denom {
        let cand = lo + &width * ratio(k, denom);
        if !q.eval(&cand).is_zero() {
            return cand;
        }
    }
    unreachable!("an interval cannot consist solely of roots");
}

/// A point strictly inside the leftmost root-free gap `(a, theta_1)`, where
/// `theta_1` is the smallest root of `q` above `a` (or any interior point if
/// no root is below `hint`). Requires `q(a) != 0`.
fn sample_after(chain: &SturmChain, q: &Poly, a: &Rat, hint: &Rat) -> Rat {
    let mut z = (a + hint) / rat(2);
    loop {
        if !q.eval(&z).is_zero() && chain.count_open(a, &z) == 0 {
            return z;
        }
        z = (a + &z) / rat(2);
    }
}

fn sample_before(chain: &SturmChain, q: &Poly, hint: &Rat, b: &Rat) -> Rat {
    let mut z = (hint + b) / rat(2);
    loop {
        if !q.eval(&z).is_zero() && chain.count_open(&z, b) == 0 {
            return z;
        }
        z = (&z + b) / rat(2);
    }
}

/// Exact decision of `p(t) >= 0 for all t in iv`.
pub fn nonneg_on(p: &Poly, iv: &Interval) -> bool {
    if p.is_zero() || iv.is_empty() {
        return true;
    }
    if let Some(a) = iv.as_point() {
        return !p.eval(a).is_negative();
    }
    region_samples(p, iv)
        .iter()
        .all(|x| !p.eval(x).is_negative())
}

/// An exact rational `t` in `iv` with `p(t) < 0`. The search is
/// deterministic: samples are scanned left to right, so the returned point
/// lies in the leftmost negative region. Errors when `p >= 0` on `iv`.
pub fn find_negative_point(p: &Poly, iv: &Interval) -> Result<Rat> {
    if p.is_zero() || iv.is_empty() {
        return Err(Error::NoNegativePoint);
    }
    if let Some(a) = iv.as_point() {
        return if p.eval(a).is_negative() {
            Ok(a.clone())
        } else {
            Err(Error::NoNegativePoint)
        };
    }
    region_samples(p, iv)
        .into_iter()
        .find(|x| p.eval(x).is_negative())
        .ok_or(Error::NoNegativePoint)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn restriction_sample() -> Poly {
        // 6t^4 - 15t^3 + 12t^2 - 3t = 3t(t-1)^2(2t-1); negative exactly on (0, 1/2)
        Poly::from_ints(&[0, -3, 12, -15, 6])
    }

    #[test]
    fn counts_roots_on_half_line() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &Interval::greater_than(rat(0))).unwrap(), 1);
        let p = Poly::from_ints(&[3, -24, 29]);
        assert_eq!(sturm_count(&p, &Interval::greater_than(rat(0))).unwrap(), 2);
        let p = Poly::from_ints(&[1, 0, 1]);
        assert_eq!(sturm_count(&p, &Interval::all()).unwrap(), 0);
    }

    #[test]
    fn zero_poly_is_an_error() {
        assert_eq!(
            sturm_count(&Poly::zero(), &Interval::all()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn counts_with_endpoint_roots_and_multiplicity() {
        let p = restriction_sample();
        // distinct roots 0, 1/2, 1
        assert_eq!(sturm_count(&p, &Interval::all()).unwrap(), 3);
        assert_eq!(sturm_count(&p, &Interval::at_least(rat(0))).unwrap(), 3);
        assert_eq!(sturm_count(&p, &Interval::greater_than(rat(0))).unwrap(), 2);
        assert_eq!(
            sturm_count(&p, &Interval::closed(rat(0), rat(1))).unwrap(),
            3
        );
        assert_eq!(sturm_count(&p, &Interval::open(rat(0), rat(1))).unwrap(), 1);
        assert_eq!(
            sturm_count(&p, &Interval::closed(rat(1), rat(1))).unwrap(),
            1
        );
    }

    #[test]
    fn nonneg_examples() {
        let square = Poly::from_ints(&[1, 0, -2, 0, 1]); // (t^2-1)^2
        assert!(nonneg_on(&square, &Interval::all()));
        let dip = Poly::from_ints(&[0, 0, -2, 0, 1]); // t^4 - 2t^2
        assert!(!nonneg_on(&dip, &Interval::all()));
        assert!(!nonneg_on(
            &restriction_sample(),
            &Interval::at_least(rat(0))
        ));
        // ... but nonnegative past the last sign change
        assert!(nonneg_on(
            &restriction_sample(),
            &Interval::at_least(ratio(1, 2))
        ));
    }

    #[test]
    fn nonneg_with_odd_root_at_closed_endpoint() {
        // t >= 0 on [0, inf): the boundary root must not be misread as a
        // sign change inside the interval.
        let p = Poly::from_ints(&[0, 1]);
        assert!(nonneg_on(&p, &Interval::at_least(rat(0))));
        assert!(!nonneg_on(&p, &Interval::all()));
    }

    #[test]
    fn negative_point_is_exact_and_leftmost_region() {
        let dip = Poly::from_ints(&[0, 0, -2, 0, 1]);
        let t = find_negative_point(&dip, &Interval::all()).unwrap();
        assert!(dip.eval(&t).is_negative());
        // leftmost negative region of t^4 - 2t^2 is (-sqrt2, 0)
        assert!(t > rat(-2) && t < rat(0));

        let p = restriction_sample();
        let t = find_negative_point(&p, &Interval::greater_than(rat(0))).unwrap();
        assert!(p.eval(&t).is_negative());
        assert!(t > rat(0) && t < ratio(1, 2));

        let neg = Poly::from_ints(&[0, 0, -1]);
        let t = find_negative_point(&neg, &Interval::all()).unwrap();
        assert!(neg.eval(&t).is_negative());
    }

    #[test]
    fn negative_point_precondition() {
        let square = Poly::from_ints(&[1, 0, -2, 0, 1]);
        assert_eq!(
            find_negative_point(&square, &Interval::all()),
            Err(Error::NoNegativePoint)
        );
    }

    #[test]
    fn touching_root_inside_interval_is_not_negative() {
        // (t-1)^2 (t+1)^2 touches zero twice inside [-3, 3]
        let p = Poly::from_ints(&[1, 0, -2, 0, 1]);
        assert!(nonneg_on(&p, &Interval::closed(rat(-3), rat(3))));
        // flipping one factor to odd multiplicity turns it negative
        let q = Poly::from_ints(&[-1, 1]).mul(&Poly::from_ints(&[1, 2, 1]));
        assert!(!nonneg_on(&q, &Interval::closed(rat(-3), rat(3))));
    }
}
