//! Intervals over the rationals with open, closed or unbounded endpoints.

use std::ops::Bound;

use super::rational::Rat;

/// An interval of the real line with rational (or infinite) endpoints.
///
/// `Bound::Unbounded` means negative infinity on the lower side and positive
/// infinity on the upper side. When both endpoints are finite the lower one
/// must not exceed the upper one.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    lo: Bound<Rat>,
    hi: Bound<Rat>,
}

impl Interval {
    pub fn new(lo: Bound<Rat>, hi: Bound<Rat>) -> Self {
        if let (Some(a), Some(b)) = (finite(&lo), finite(&hi)) {
            assert!(a <= b, "interval lower bound exceeds upper bound");
        }
        Self { lo, hi }
    }

    /// The whole real line.
    pub fn all() -> Self {
        Self::new(Bound::Unbounded, Bound::Unbounded)
    }

    /// `[a, +inf)`
    pub fn at_least(a: Rat) -> Self {
        Self::new(Bound::Included(a), Bound::Unbounded)
    }

    /// `(a, +inf)`
    pub fn greater_than(a: Rat) -> Self {
        Self::new(Bound::Excluded(a), Bound::Unbounded)
    }

    /// `(-inf, a]`
    pub fn at_most(a: Rat) -> Self {
        Self::new(Bound::Unbounded, Bound::Included(a))
    }

    /// `[a, b]`
    pub fn closed(a: Rat, b: Rat) -> Self {
        Self::new(Bound::Included(a), Bound::Included(b))
    }

    /// `(a, b)`
    pub fn open(a: Rat, b: Rat) -> Self {
        Self::new(Bound::Excluded(a), Bound::Excluded(b))
    }

    pub fn lo(&self) -> &Bound<Rat> {
        &self.lo
    }

    pub fn hi(&self) -> &Bound<Rat> {
        &self.hi
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let lo_ok = match &self.lo {
            Bound::Unbounded => true,
            Bound::Included(a) => a <= x,
            Bound::Excluded(a) => a < x,
        };
        let hi_ok = match &self.hi {
            Bound::Unbounded => true,
            Bound::Included(b) => x <= b,
            Bound::Excluded(b) => x < b,
        };
        lo_ok && hi_ok
    }

    /// True iff the interval contains no point at all. Under the constructor
    /// invariant this only happens for a degenerate `[a, a)`-style interval.
    pub fn is_empty(&self) -> bool {
        match (finite(&self.lo), finite(&self.hi)) {
            (Some(a), Some(b)) => {
                a == b
                    && !(matches!(self.lo, Bound::Included(_))
                        && matches!(self.hi, Bound::Included(_)))
            }
            _ => false,
        }
    }

    /// The single point of a `[a, a]` interval, if that is what this is.
    pub(crate) fn as_point(&self) -> Option<&Rat> {
        match (&self.lo, &self.hi) {
            (Bound::Included(a), Bound::Included(b)) if a == b => Some(a),
            _ => None,
        }
    }
}

pub(crate) fn finite(b: &Bound<Rat>) -> Option<&Rat> {
    match b {
        Bound::Included(x) | Bound::Excluded(x) => Some(x),
        Bound::Unbounded => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn membership() {
        let iv = Interval::greater_than(rat(0));
        assert!(!iv.contains(&rat(0)));
        assert!(iv.contains(&rat(1)));
        let iv = Interval::closed(rat(-1), rat(1));
        assert!(iv.contains(&rat(-1)) && iv.contains(&rat(1)));
        assert!(!iv.contains(&rat(2)));
    }

    #[test]
    fn emptiness() {
        assert!(Interval::open(rat(3), rat(3)).is_empty());
        assert!(!Interval::closed(rat(3), rat(3)).is_empty());
        assert!(!Interval::all().is_empty());
    }

    #[test]
    #[should_panic]
    fn rejects_inverted_bounds() {
        let _ = Interval::closed(rat(2), rat(1));
    }
}
