//! Orthant nonnegativity of a symmetric quartic in time linear in `n`.
//!
//! The decision runs in three stages:
//!
//! 1. `f(1_k, 0_{n-k}) >= 0` for `k = 1..n` (necessary, and for cubics also
//!    sufficient).
//! 2. If `f(1, -1, 0_{n-2}) = 2(a + 2c) <= 0`, stage 1 was already
//!    sufficient: answer `true`.
//! 3. Otherwise, for every block pair `(r, s)` of the candidate set, test the
//!    sign system over `(alpha, beta, gamma, Delta, P, Q, R)` of the
//!    restriction `f_{r,s}`. The system is only binding when
//!    `Delta >= 0 != alpha`; a handful of sign fast paths settle most pairs
//!    without computing `(P, Q, R)`.
//!
//! A `false` answer always comes with an exact rational witness in the
//! nonnegative orthant, found by sign analysis of `f_{r,s}` on `(0, inf)`.

use num_traits::{Signed, Zero};

use crate::algebra::{find_negative_point, rat, resultant_quartic_quadratic, Interval, Rat};
use crate::fastpath::{self, IntForm};
use crate::forms::{RestrictionCoeffs, SymmetricCubic, SymmetricQuartic};
use crate::{DecideOptions, Witness};

/// The scalars `P`, `Q`, `R` attached to one restriction: `P + Q*sqrt(Delta)`
/// is `2*alpha^4` times the value of `f_{r,s}` at the upper critical point of
/// `f^d_{r,s}`, and `R` is the resultant of the pair, satisfying
/// `P^2 - Q^2*Delta = 4*alpha^4*R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqrTriple {
    pub p: Rat,
    pub q: Rat,
    pub r: Rat,
}

/// Which rule settled a pair check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairBranch {
    /// `alpha = 0`: the sign system is not binding for this pair.
    AlphaZero,
    /// `Delta < 0`: the critical points are not real.
    DeltaNegative,
    /// `beta = 0` fast path.
    BetaZero,
    /// `alpha, beta, gamma >= 0` fast path.
    AllNonneg,
    /// `alpha, beta, gamma <= 0` fast path.
    AllNonpos,
    /// `P >= 0` and `R >= 0` fast path.
    PrNonneg,
    /// Full sign system evaluated and satisfied.
    ConditionHolds,
    /// Full sign system evaluated and violated.
    ConditionFails,
}

impl PairBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            PairBranch::AlphaZero => "alpha_zero",
            PairBranch::DeltaNegative => "delta_neg",
            PairBranch::BetaZero => "beta_zero",
            PairBranch::AllNonneg => "all_nonneg",
            PairBranch::AllNonpos => "all_nonpos",
            PairBranch::PrNonneg => "p_r_nonneg",
            PairBranch::ConditionHolds => "pass",
            PairBranch::ConditionFails => "fail",
        }
    }
}

/// Stage and location of the first failed check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthantStage {
    Ones { k: u64 },
    Pair { r: u64, s: u64 },
}

/// One record of the deterministic check trace.
#[derive(Debug, Clone, PartialEq)]
pub enum OrthantCheck {
    Ones {
        k: u64,
        value: Rat,
    },
    Pair {
        r: u64,
        s: u64,
        alpha: Rat,
        beta: Rat,
        gamma: Rat,
        delta: Rat,
        pqr: Option<PqrTriple>,
        branch: PairBranch,
    },
}

/// Outcome of the orthant decision.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthantVerdict {
    pub decision: bool,
    pub failing: Option<OrthantStage>,
    pub witness: Option<Witness>,
    pub trace: Vec<OrthantCheck>,
}

/// `P` and `Q` by their closed forms, `R` as the printed 6x6 resultant
/// determinant of `(f_{r,s}, f^d_{r,s})`.
pub fn compute_pqr(rc: &RestrictionCoeffs) -> PqrTriple {
    let (al, be, ga) = (&rc.alpha, &rc.beta, &rc.gamma);
    let (fa, fb, fc, fd, fe) = (&rc.a4, &rc.a3, &rc.a2, &rc.a1, &rc.a0);
    let be2 = be * be;
    let alga = al * ga;
    let al2 = al * al;
    let al3 = &al2 * al;
    let al4 = &al2 * &al2;

    let p = fa * (&be2 * &be2 - rat(4) * &be2 * &alga + rat(2) * &alga * &alga)
        - fb * be * al * (&be2 - rat(3) * &alga)
        + fc * &al2 * (&be2 - rat(2) * &alga)
        - fd * be * &al3
        + rat(2) * fe * &al4;
    let q = -(fa * be) * (&be2 - rat(2) * &alga) + fb * al * (&be2 - &alga) - fc * be * &al2
        + fd * &al3;
    let r = resultant_quartic_quadratic(&rc.quartic(), &rc.quadratic());
    PqrTriple { p, q, r }
}

fn sign_system_holds(rc: &RestrictionCoeffs, pqr: &PqrTriple) -> bool {
    let nn = |x: &Rat| !x.is_negative();
    let np = |x: &Rat| !x.is_positive();
    let (al, be, ga) = (&rc.alpha, &rc.beta, &rc.gamma);
    let (p, q, r) = (&pqr.p, &pqr.q, &pqr.r);
    let line1 = (np(al) && np(be))
        || (nn(be) && nn(ga))
        || (nn(p) && nn(q))
        || (nn(r) && nn(p))
        || (np(r) && nn(q));
    let line2 = (nn(al) && nn(be))
        || (np(be) && np(ga))
        || (nn(p) && np(q))
        || (nn(r) && nn(p))
        || (np(r) && np(q));
    line1 && line2
}

/// Full per-pair check: binding gate, fast paths, then the two-line sign
/// system over `(P, Q, R)`. `true` means the pair does not refute orthant
/// nonnegativity.
pub fn check_discriminant_pair(rc: &RestrictionCoeffs, pqr: &PqrTriple) -> bool {
    if rc.alpha.is_zero() || rc.delta.is_negative() || rc.beta.is_zero() {
        return true;
    }
    let all_nonneg = !rc.alpha.is_negative() && !rc.beta.is_negative() && !rc.gamma.is_negative();
    let all_nonpos = !rc.alpha.is_positive() && !rc.beta.is_positive() && !rc.gamma.is_positive();
    if all_nonneg || all_nonpos {
        return true;
    }
    if !pqr.p.is_negative() && !pqr.r.is_negative() {
        return true;
    }
    sign_system_holds(rc, pqr)
}

/// Lazy variant of [`check_discriminant_pair`]: `(P, Q, R)` are only computed
/// when no sign fast path applies.
fn classify_pair(rc: &RestrictionCoeffs) -> (PairBranch, bool, Option<PqrTriple>) {
    if rc.alpha.is_zero() {
        return (PairBranch::AlphaZero, true, None);
    }
    if rc.delta.is_negative() {
        return (PairBranch::DeltaNegative, true, None);
    }
    if rc.beta.is_zero() {
        return (PairBranch::BetaZero, true, None);
    }
    if !rc.alpha.is_negative() && !rc.beta.is_negative() && !rc.gamma.is_negative() {
        return (PairBranch::AllNonneg, true, None);
    }
    if !rc.alpha.is_positive() && !rc.beta.is_positive() && !rc.gamma.is_positive() {
        return (PairBranch::AllNonpos, true, None);
    }
    let pqr = compute_pqr(rc);
    if !pqr.p.is_negative() && !pqr.r.is_negative() {
        return (PairBranch::PrNonneg, true, Some(pqr));
    }
    if sign_system_holds(rc, &pqr) {
        (PairBranch::ConditionHolds, true, Some(pqr))
    } else {
        (PairBranch::ConditionFails, false, Some(pqr))
    }
}

/// The block pairs whose restrictions decide orthant nonnegativity, in the
/// deterministic check order: `(1, k)` for `k = 1..n-1` ascending, then
/// `(k, 1)` for `k = 2..n-1`, then — only when `a > 0 > b` — `(k, n-k)` for
/// `k = 2..n-2`. The order is part of the trace contract: the `(1, k)`
/// family is scanned first, so first-failure reports are stable.
pub fn candidate_pairs(f: &SymmetricQuartic) -> Vec<(u64, u64)> {
    candidate_pair_iter(f.n(), needs_split_pairs(f)).collect()
}

fn needs_split_pairs(f: &SymmetricQuartic) -> bool {
    f.a().is_positive() && f.b().is_negative()
}

fn candidate_pair_iter(n: u64, split_pairs: bool) -> impl Iterator<Item = (u64, u64)> {
    let one_k = (1..n).map(|k| (1, k));
    let k_one = (2..n).map(|k| (k, 1));
    let split = (2..n.saturating_sub(1))
        .filter(move |_| split_pairs)
        .map(move |k| (k, n - k));
    one_k.chain(k_one).chain(split)
}

/// Orthant decision with trace recording on and sequential evaluation.
pub fn decide_orthant(f: &SymmetricQuartic) -> OrthantVerdict {
    decide_orthant_with(f, &DecideOptions::default())
}

/// Orthant decision; see [`DecideOptions`] for the trace/parallel knobs.
///
/// Without tracing the stage loops run on a positively rescaled integer copy
/// of the form; every sign test (and hence the verdict, the failing stage and
/// the witness) is identical to the traced rational path.
pub fn decide_orthant_with(f: &SymmetricQuartic, opts: &DecideOptions) -> OrthantVerdict {
    let mut trace = Vec::new();

    if let Some(verdict) = ones_stage(f, opts, &mut trace) {
        return verdict;
    }

    // With f(1, -1, 0_{n-2}) <= 0 the lattice checks of stage 1 are already
    // equivalent to orthant nonnegativity.
    if !f.eval_one_minus_one().is_positive() {
        return OrthantVerdict {
            decision: true,
            failing: None,
            witness: None,
            trace,
        };
    }

    let first_fail = if opts.record_trace {
        if opts.parallel {
            parallel_first_fail(f, opts, &mut trace)
        } else {
            let mut hit = None;
            for (r, s) in candidate_pair_iter(f.n(), needs_split_pairs(f)) {
                let rc = f.restriction(r, s).expect("candidate pairs are valid");
                let (branch, passed, pqr) = classify_pair(&rc);
                trace.push(pair_record(&rc, branch, pqr));
                if !passed {
                    hit = Some((r, s));
                    break;
                }
            }
            hit
        }
    } else {
        let fi = IntForm::from_form(f);
        if opts.parallel {
            use rayon::prelude::*;
            let pairs: Vec<(u64, u64)> = candidate_pair_iter(f.n(), needs_split_pairs(f)).collect();
            pairs
                .par_iter()
                .find_first(|&&(r, s)| !fastpath::orthant_pair_passes(&fi.restriction(r, s)))
                .copied()
        } else {
            candidate_pair_iter(f.n(), needs_split_pairs(f))
                .find(|&(r, s)| !fastpath::orthant_pair_passes(&fi.restriction(r, s)))
        }
    };

    match first_fail {
        None => OrthantVerdict {
            decision: true,
            failing: None,
            witness: None,
            trace,
        },
        Some((r, s)) => {
            let witness = pair_witness(f, r, s);
            OrthantVerdict {
                decision: false,
                failing: Some(OrthantStage::Pair { r, s }),
                witness: Some(witness),
                trace,
            }
        }
    }
}

fn ones_stage(
    f: &SymmetricQuartic,
    opts: &DecideOptions,
    trace: &mut Vec<OrthantCheck>,
) -> Option<OrthantVerdict> {
    if !opts.record_trace {
        let fi = IntForm::from_form(f);
        let fail = (1..=f.n()).find(|&k| fi.ones_value(k).is_negative())?;
        let value = f.eval_ones(fail).expect("k in range");
        let mut point = vec![rat(0u64); f.n() as usize];
        for x in point.iter_mut().take(fail as usize) {
            *x = rat(1);
        }
        debug_assert_eq!(f.eval_point(&point).unwrap(), value);
        return Some(OrthantVerdict {
            decision: false,
            failing: Some(OrthantStage::Ones { k: fail }),
            witness: Some(Witness { point, value }),
            trace: Vec::new(),
        });
    }
    for k in 1..=f.n() {
        let value = f.eval_ones(k).expect("k in range");
        trace.push(OrthantCheck::Ones {
            k,
            value: value.clone(),
        });
        if value.is_negative() {
            let mut point = vec![rat(0u64); f.n() as usize];
            for x in point.iter_mut().take(k as usize) {
                *x = rat(1);
            }
            debug_assert_eq!(f.eval_point(&point).unwrap(), value);
            return Some(OrthantVerdict {
                decision: false,
                failing: Some(OrthantStage::Ones { k }),
                witness: Some(Witness { point, value }),
                trace: std::mem::take(trace),
            });
        }
    }
    None
}

fn pair_record(rc: &RestrictionCoeffs, branch: PairBranch, pqr: Option<PqrTriple>) -> OrthantCheck {
    OrthantCheck::Pair {
        r: rc.r,
        s: rc.s,
        alpha: rc.alpha.clone(),
        beta: rc.beta.clone(),
        gamma: rc.gamma.clone(),
        delta: rc.delta.clone(),
        pqr,
        branch,
    }
}

/// Evaluates all pairs in parallel and reduces to the first failure of the
/// sequential order. With tracing on, the trace is truncated right after
/// that failure so the output is identical to the sequential run.
fn parallel_first_fail(
    f: &SymmetricQuartic,
    opts: &DecideOptions,
    trace: &mut Vec<OrthantCheck>,
) -> Option<(u64, u64)> {
    use rayon::prelude::*;
    let pairs: Vec<(u64, u64)> = candidate_pair_iter(f.n(), needs_split_pairs(f)).collect();
    if opts.record_trace {
        let records: Vec<(OrthantCheck, bool)> = pairs
            .par_iter()
            .map(|&(r, s)| {
                let rc = f.restriction(r, s).expect("candidate pairs are valid");
                let (branch, passed, pqr) = classify_pair(&rc);
                (pair_record(&rc, branch, pqr), passed)
            })
            .collect();
        let cut = records.iter().position(|(_, passed)| !passed);
        let end = cut.map_or(records.len(), |i| i + 1);
        trace.extend(records.into_iter().take(end).map(|(rec, _)| rec));
        cut.map(|i| pairs[i])
    } else {
        pairs
            .par_iter()
            .find_first(|&&(r, s)| {
                let rc = f.restriction(r, s).expect("candidate pairs are valid");
                let (_, passed, _) = classify_pair(&rc);
                !passed
            })
            .copied()
    }
}

/// Exact witness for a failed pair: a negative point of `f_{r,s}` on
/// `(0, inf)` mapped back to the orthant point `(t·1_r, 1_s, 0_{n-r-s})`.
fn pair_witness(f: &SymmetricQuartic, r: u64, s: u64) -> Witness {
    let rc = f.restriction(r, s).expect("failing pair is valid");
    let t = find_negative_point(&rc.quartic(), &Interval::greater_than(rat(0)))
        .expect("a failed sign system implies a negative restriction value");
    let mut point = vec![rat(0u64); f.n() as usize];
    for x in point.iter_mut().take(r as usize) {
        *x = t.clone();
    }
    for x in point.iter_mut().skip(r as usize).take(s as usize) {
        *x = rat(1);
    }
    let value = f.eval_point(&point).expect("witness has n coordinates");
    assert!(value.is_negative(), "witness must evaluate negative");
    Witness { point, value }
}

/// Orthant nonnegativity for a symmetric cubic: equivalent to the lattice
/// checks `f(1_k, 0_{n-k}) >= 0` for `k = 1..n`.
pub fn decide_orthant_cubic(f: &SymmetricCubic) -> bool {
    (1..=f.n()).all(|k| !f.eval_ones(k).expect("k in range").is_negative())
}

/// Stage 3 with an explicit pair list replacing the canonical order. Test
/// hook for order- and orientation-robustness; not part of the public API.
#[doc(hidden)]
pub fn orthant_decision_with_pair_list(f: &SymmetricQuartic, pairs: &[(u64, u64)]) -> bool {
    for k in 1..=f.n() {
        if f.eval_ones(k).expect("k in range").is_negative() {
            return false;
        }
    }
    if !f.eval_one_minus_one().is_positive() {
        return true;
    }
    pairs.iter().all(|&(r, s)| {
        let rc = f.restriction(r, s).expect("pair must be valid");
        let (_, passed, _) = classify_pair(&rc);
        passed
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::forms::families;

    fn valid_quartic() -> SymmetricQuartic {
        SymmetricQuartic::from_ints(4, [24, -18, -8, 9, -1]).unwrap()
    }

    fn counterexample_quartic(n: u64) -> SymmetricQuartic {
        SymmetricQuartic::from_ints(n, [24, -19, -7, 9, -1]).unwrap()
    }

    #[test]
    fn candidate_pairs_order_and_dedup() {
        // a > 0 > b: all three families, deduplicated
        let f = counterexample_quartic(4);
        assert_eq!(
            candidate_pairs(&f),
            vec![(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (2, 2)]
        );
        // a <= 0: no split pairs
        let h = families::doubly_nonneg_family(5);
        assert_eq!(
            candidate_pairs(&h),
            vec![(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (3, 1), (4, 1)]
        );
        // n = 2: single admissible pair
        let f = SymmetricQuartic::from_ints(2, [1, 2, 3, 4, 5]).unwrap();
        assert_eq!(candidate_pairs(&f), vec![(1, 1)]);
    }

    #[test]
    fn pqr_of_running_example() {
        let f = counterexample_quartic(4);
        let rc = f.restriction(1, 3).unwrap();
        let pqr = compute_pqr(&rc);
        assert_eq!(pqr.p, rat(-108828));
        assert_eq!(pqr.q, rat(14214));
        assert_eq!(pqr.r, rat(-12096));
        assert!(!check_discriminant_pair(&rc, &pqr));
    }

    #[test]
    fn pqr_zero_quadratic_gives_zero_resultant() {
        let f = SymmetricQuartic::from_ints(3, [0, 0, 0, 0, 1]).unwrap();
        // e-only form: alpha = beta = gamma = 0 never happens through
        // restriction, so synthesize the degenerate triple directly
        let mut rc = f.restriction(1, 1).unwrap();
        rc.alpha = rat(0);
        rc.beta = rat(0);
        rc.gamma = rat(0);
        let pqr = compute_pqr(&rc);
        assert_eq!(pqr.r, rat(0));
    }

    #[test]
    fn pqr_matches_factored_displays_at_6_3() {
        // third family of the orthant-nonnegative test family at n = 6,
        // pair (3, 3); expected values from the factored closed forms
        let g = families::orthant_nonneg_family(6);
        let rc = g.restriction(3, 3).unwrap();
        let pqr = compute_pqr(&rc);
        assert_eq!(pqr.p, rat(2633637888i64));
        assert_eq!(pqr.r, rat(34828517376i64));
        // P >= 0 and R >= 0 holds, but the cheaper all-nonnegative sign
        // fast path fires first for this pair
        assert!(check_discriminant_pair(&rc, &pqr));
        let (branch, passed, _) = classify_pair(&rc);
        assert_eq!(branch, PairBranch::AllNonneg);
        assert!(passed);
    }

    #[test]
    fn discriminant_pair_gate_cases() {
        let f = counterexample_quartic(4);
        // Delta < 0 at (1, 1): not binding
        let rc = f.restriction(1, 1).unwrap();
        assert!(rc.delta.is_negative());
        let pqr = compute_pqr(&rc);
        assert!(check_discriminant_pair(&rc, &pqr));
        let (branch, passed, pqr_opt) = classify_pair(&rc);
        assert_eq!(branch, PairBranch::DeltaNegative);
        assert!(passed && pqr_opt.is_none());
    }

    #[test]
    fn doubly_nonneg_family_passes_via_fast_paths() {
        // pair (k, 1) passes through P >= 0 = R; pair (1, k) has alpha = 0
        let h = families::doubly_nonneg_family(5);
        let rc = h.restriction(2, 1).unwrap();
        let (branch, passed, pqr) = classify_pair(&rc);
        assert!(passed);
        assert_eq!(branch, PairBranch::PrNonneg);
        let pqr = pqr.unwrap();
        assert!(!pqr.p.is_negative());
        assert_eq!(pqr.r, rat(0));
        let rc = h.restriction(1, 2).unwrap();
        assert!(rc.alpha.is_zero());
        let (branch, passed, _) = classify_pair(&rc);
        assert!(passed);
        assert_eq!(branch, PairBranch::AlphaZero);
    }

    #[test]
    fn decide_valid_example() {
        let v = decide_orthant(&valid_quartic());
        assert!(v.decision);
        assert!(v.witness.is_none() && v.failing.is_none());
    }

    #[test]
    fn decide_counterexample_across_n() {
        let v = decide_orthant(&counterexample_quartic(4));
        assert!(!v.decision);
        assert_eq!(v.failing, Some(OrthantStage::Pair { r: 1, s: 3 }));
        let w = v.witness.unwrap();
        assert!(w.value.is_negative());
        // witness lies strictly inside the first negative region (0, 1/2)
        assert!(w.point[0] > rat(0) && w.point[0] < ratio(1, 2));

        let v = decide_orthant(&counterexample_quartic(3));
        assert!(v.decision);
        let v = decide_orthant(&counterexample_quartic(2));
        assert!(v.decision);
    }

    #[test]
    fn decide_zero_form() {
        let f = SymmetricQuartic::from_ints(5, [0, 0, 0, 0, 0]).unwrap();
        let v = decide_orthant(&f);
        assert!(v.decision);
        // stage 2 settles it: every stage-1 value is 0, no pair checks run
        assert_eq!(v.trace.len(), 5);
    }

    #[test]
    fn stage_one_failure_gives_lattice_witness() {
        let f = SymmetricQuartic::from_ints(3, [-1, 0, 0, 0, 0]).unwrap();
        let v = decide_orthant(&f);
        assert!(!v.decision);
        assert_eq!(v.failing, Some(OrthantStage::Ones { k: 1 }));
        let w = v.witness.unwrap();
        assert_eq!(w.point, vec![rat(1), rat(0), rat(0)]);
        assert_eq!(w.value, rat(-1));
    }

    #[test]
    fn trace_of_counterexample_contains_failing_pair_values() {
        let v = decide_orthant(&counterexample_quartic(4));
        let last = v.trace.last().unwrap();
        match last {
            OrthantCheck::Pair {
                r,
                s,
                alpha,
                beta,
                gamma,
                delta,
                pqr,
                branch,
            } => {
                assert_eq!((*r, *s), (1, 3));
                assert_eq!(
                    (alpha.clone(), beta.clone(), gamma.clone(), delta.clone()),
                    (rat(29), rat(-24), rat(3), rat(228))
                );
                let pqr = pqr.as_ref().unwrap();
                assert_eq!(
                    (pqr.p.clone(), pqr.q.clone(), pqr.r.clone()),
                    (rat(-108828), rat(14214), rat(-12096))
                );
                assert_eq!(*branch, PairBranch::ConditionFails);
            }
            other => panic!("expected a pair record, got {other:?}"),
        }
    }

    #[test]
    fn parallel_mode_matches_sequential() {
        let opts = DecideOptions {
            record_trace: true,
            parallel: true,
        };
        for f in [
            valid_quartic(),
            counterexample_quartic(4),
            counterexample_quartic(7),
            families::orthant_nonneg_family(9),
        ] {
            let seq = decide_orthant(&f);
            let par = decide_orthant_with(&f, &opts);
            assert_eq!(seq.decision, par.decision);
            assert_eq!(seq.failing, par.failing);
            assert_eq!(seq.trace, par.trace);
            assert_eq!(seq.witness, par.witness);
        }
    }

    #[test]
    fn cubic_criterion() {
        let p3 = SymmetricCubic::from_ints(6, [1, 0, 0]).unwrap();
        assert!(decide_orthant_cubic(&p3));
        let f = SymmetricCubic::from_ints(6, [-1, 1, 0]).unwrap();
        assert!(decide_orthant_cubic(&f));
        let g = SymmetricCubic::from_ints(6, [1, -1, 0]).unwrap();
        assert!(!decide_orthant_cubic(&g));
    }
}
