//! Independent reference deciders and falsifiers.
//!
//! Nothing here shares logic with the discriminant systems: nonnegativity of
//! each univariate restriction is settled by Sturm-based sign analysis, and
//! the block-pair enumeration is quadratic in `n` by construction. These are
//! the cross-validation oracles for the linear-time deciders, not
//! replacements for them.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{nonneg_on, rat, ratio, Interval, Rat};
use crate::forms::SymmetricQuartic;
use crate::{Domain, Witness};

/// Whether an enumerated composition must hit the target sum exactly or may
/// stay below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumVariant {
    Exact,
    AtMost,
}

/// All tuples of `parts` positive integers with sum equal to (`Exact`) or at
/// most (`AtMost`) `total`, in lexicographic order. The counts satisfy
/// `C(total-1, parts-1)` and `C(total, parts)` respectively.
pub fn enumerate_compositions(parts: usize, total: u64, variant: SumVariant) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    fn rec(
        remaining_parts: usize,
        budget: u64,
        exact: bool,
        current: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if remaining_parts == 0 {
            if !exact || budget == 0 {
                out.push(current.clone());
            }
            return;
        }
        // every remaining part needs at least 1
        let reserve = (remaining_parts - 1) as u64;
        if budget < reserve + 1 {
            return;
        }
        for v in 1..=budget - reserve {
            current.push(v);
            rec(remaining_parts - 1, budget - v, exact, current, out);
            current.pop();
        }
    }
    if parts >= 1 && total >= 1 {
        rec(
            parts,
            total,
            matches!(variant, SumVariant::Exact),
            &mut current,
            &mut out,
        );
    }
    out
}

/// Quadratic-time reference for orthant nonnegativity: every lattice point
/// `(1_k, 0_{n-k})` and every restriction `f_{r,s}` on `[0, inf)`, for all
/// `r, s >= 1` with `r + s <= n`.
pub fn decide_orthant_reference(f: &SymmetricQuartic) -> bool {
    let n = f.n();
    for k in 1..=n {
        if f.eval_ones(k).expect("k in range").is_negative() {
            return false;
        }
    }
    let half_line = Interval::at_least(rat(0));
    for r in 1..n {
        for s in 1..=(n - r) {
            let rc = f.restriction(r, s).expect("r + s <= n");
            if !nonneg_on(&rc.quartic(), &half_line) {
                return false;
            }
        }
    }
    true
}

/// Quadratic-time reference for global nonnegativity: every restriction
/// `f_{r,n-r}` on the whole real line, for `r = 1..n/2` (the reversed pair
/// `(n-r, r)` gives the reciprocal polynomial, so half the range suffices).
pub fn decide_real_reference(f: &SymmetricQuartic) -> bool {
    let n = f.n();
    let line = Interval::all();
    for r in 1..=(n / 2) {
        let rc = f.restriction(r, n - r).expect("r + (n-r) = n");
        if !nonneg_on(&rc.quartic(), &line) {
            return false;
        }
    }
    true
}

/// Seeded random search for a counterexample: bounded rational points
/// (numerators in `-9..=9`, restricted to `0..=9` on the orthant,
/// denominators in `1..=9`), evaluated exactly. Returns the first point with
/// a negative value.
pub fn sample_falsify(
    f: &SymmetricQuartic,
    domain: Domain,
    trials: u32,
    seed: u64,
) -> Option<Witness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = f.n() as usize;
    let mut point = Vec::with_capacity(n);
    for _ in 0..trials {
        point.clear();
        for _ in 0..n {
            let numer: i64 = match domain {
                Domain::Orthant => rng.random_range(0..=9),
                Domain::Real => rng.random_range(-9..=9),
            };
            let denom: i64 = rng.random_range(1..=9);
            point.push(ratio(numer, denom));
        }
        let value = f.eval_point(&point).expect("point has n coordinates");
        if value.is_negative() {
            return Some(Witness {
                point: point.clone(),
                value,
            });
        }
    }
    None
}

/// True iff every elementary symmetric function `e_1..e_m` of `u` is
/// nonnegative — equivalently, iff every coordinate of `u` is nonnegative.
pub fn elementary_symmetric_nonneg(u: &[Rat]) -> bool {
    // expand prod (x + u_i); coefficient of x^(m-k) is e_k
    let mut elem = vec![Rat::one()];
    for ui in u {
        elem.push(Rat::zero());
        for j in (1..elem.len()).rev() {
            let bump = &elem[j - 1] * ui;
            elem[j] += bump;
        }
    }
    elem.iter().skip(1).all(|ek| !ek.is_negative())
}
