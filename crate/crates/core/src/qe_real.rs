//! Global nonnegativity of a symmetric quartic on all of R^n, in time linear
//! in `n`, plus the standalone univariate quartic test.
//!
//! After the lattice checks of stage 1, each restriction
//! `f_{r,n-r}(t) = f(t·1_r, 1_{n-r})` is tested through the four scalars
//! `(Delta, G, H, K)`: up to positive factors, `Delta` is the discriminant of
//! `F'` and `G, H, K` are the elementary symmetric functions of the critical
//! values of `F`. Nonnegativity of a genuine quartic `F` (leading coefficient
//! positive) is equivalent to `K >= 0 > Delta` or `G, H, K >= 0`, and the
//! same sign condition drives the per-`r` checks.

use num_traits::Signed;

use crate::algebra::{det_k, find_negative_point, rat, Interval, Poly, Rat};
use crate::fastpath::{self, IntForm};
use crate::forms::SymmetricQuartic;
use crate::{DecideOptions, Error, Result, Witness};

/// The four discriminant scalars of a (possibly degenerate) quartic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealDiscriminants {
    pub delta: Rat,
    pub g: Rat,
    pub h: Rat,
    pub k: Rat,
}

/// Which rule settled a per-`r` check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealBranch {
    /// `K >= 0 > Delta`: one real critical point, nonnegative value.
    KNonnegDeltaNeg,
    /// `G, H, K >= 0`: three real critical points, all values nonnegative.
    GhkNonneg,
    /// Both disjuncts violated.
    ConditionFails,
}

impl RealBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            RealBranch::KNonnegDeltaNeg => "k_nonneg_delta_neg",
            RealBranch::GhkNonneg => "ghk_nonneg",
            RealBranch::ConditionFails => "fail",
        }
    }
}

/// Stage and location of the first failed check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealStage {
    Ones { k: u64 },
    Restriction { r: u64 },
}

/// One record of the deterministic check trace.
#[derive(Debug, Clone, PartialEq)]
pub enum RealCheck {
    Ones {
        k: u64,
        value: Rat,
    },
    Restriction {
        r: u64,
        coeffs: [Rat; 5],
        discs: RealDiscriminants,
        branch: RealBranch,
    },
}

/// Outcome of the global decision.
#[derive(Debug, Clone, PartialEq)]
pub struct RealVerdict {
    pub decision: bool,
    pub failing: Option<RealStage>,
    pub witness: Option<Witness>,
    pub trace: Vec<RealCheck>,
}

/// The printed closed forms for `Delta`, `G`, `H`, with `K` as the 7x7
/// resultant determinant. Defined for any coefficients, including `A = 0`.
pub fn compute_dghk(f: &Poly) -> RealDiscriminants {
    debug_assert!(f.degree().unwrap_or(0) <= 4);
    let (fa, fb, fc, fd, fe) = (f.coeff(4), f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    let a2 = &fa * &fa;
    let a3 = &a2 * &fa;
    let b2 = &fb * &fb;
    let c2 = &fc * &fc;
    let d2 = &fd * &fd;

    let delta = rat(-108) * &a2 * &d2 + rat(4) * &fa * &fc * (rat(27) * &fb * &fd - rat(8) * &c2)
        - rat(9) * &b2 * (rat(3) * &fb * &fd - &c2);

    let g = rat(768) * &a3 * &fe - rat(64) * &a2 * (rat(3) * &fb * &fd + rat(2) * &c2)
        + rat(144) * &fa * &b2 * &fc
        - rat(27) * &b2 * &b2;

    let h = rat(384) * &a3 * &fe * &fe
        - rat(8) * &a2 * (rat(24) * &fb * &fd * &fe + rat(16) * &c2 * &fe - rat(9) * &fc * &d2)
        + &fa
            * (rat(144) * &b2 * &fc * &fe - rat(3) * &b2 * &d2 - rat(40) * &fb * &c2 * &fd
                + rat(8) * &c2 * &c2)
        - &b2 * (rat(27) * &b2 * &fe - rat(9) * &fb * &fc * &fd + rat(2) * &c2 * &fc);

    let k = det_k(f);
    RealDiscriminants { delta, g, h, k }
}

fn condition_branch(d: &RealDiscriminants) -> RealBranch {
    if !d.k.is_negative() && d.delta.is_negative() {
        RealBranch::KNonnegDeltaNeg
    } else if !d.g.is_negative() && !d.h.is_negative() && !d.k.is_negative() {
        RealBranch::GhkNonneg
    } else {
        RealBranch::ConditionFails
    }
}

/// Exact decision of `F(t) >= 0 for all real t` for a quartic with strictly
/// positive leading coefficient. Errors when the leading coefficient is not
/// positive.
pub fn quartic_nonneg_real(f: &Poly) -> Result<bool> {
    debug_assert!(f.degree().unwrap_or(0) <= 4);
    if !f.coeff(4).is_positive() {
        return Err(Error::NonPositiveLeading);
    }
    let d = compute_dghk(f);
    Ok(!matches!(condition_branch(&d), RealBranch::ConditionFails))
}

/// Global decision with trace recording on and sequential evaluation.
pub fn decide_real(f: &SymmetricQuartic) -> RealVerdict {
    decide_real_with(f, &DecideOptions::default())
}

/// Global decision; see [`DecideOptions`] for the trace/parallel knobs.
///
/// Without tracing the stage loops run on a positively rescaled integer copy
/// of the form; every sign test (and hence the verdict, the failing stage and
/// the witness) is identical to the traced rational path.
pub fn decide_real_with(f: &SymmetricQuartic, opts: &DecideOptions) -> RealVerdict {
    let mut trace = Vec::new();
    let n = f.n();
    let int_form = if opts.record_trace {
        None
    } else {
        Some(IntForm::from_form(f))
    };

    // Stage 1: lattice checks, shared with the orthant problem.
    let stage1_fail = match &int_form {
        Some(fi) => (1..=n).find(|&k| fi.ones_value(k).is_negative()),
        None => {
            let mut hit = None;
            for k in 1..=n {
                let value = f.eval_ones(k).expect("k in range");
                trace.push(RealCheck::Ones {
                    k,
                    value: value.clone(),
                });
                if value.is_negative() {
                    hit = Some(k);
                    break;
                }
            }
            hit
        }
    };
    if let Some(k) = stage1_fail {
        let value = f.eval_ones(k).expect("k in range");
        let mut point = vec![rat(0u64); n as usize];
        for x in point.iter_mut().take(k as usize) {
            *x = rat(1);
        }
        debug_assert_eq!(f.eval_point(&point).unwrap(), value);
        return RealVerdict {
            decision: false,
            failing: Some(RealStage::Ones { k }),
            witness: Some(Witness { point, value }),
            trace,
        };
    }

    // Stage 2: the (Delta, G, H, K) condition for every r.
    let first_fail = match &int_form {
        Some(fi) => {
            if opts.parallel {
                use rayon::prelude::*;
                (1..n)
                    .into_par_iter()
                    .find_first(|&r| !fastpath::real_restriction_passes(&fi.restriction(r, n - r)))
            } else {
                (1..n).find(|&r| !fastpath::real_restriction_passes(&fi.restriction(r, n - r)))
            }
        }
        None if opts.parallel => parallel_first_fail(f, &mut trace),
        None => {
            let mut hit = None;
            for r in 1..n {
                let (record, passed) = check_r(f, r);
                trace.push(record);
                if !passed {
                    hit = Some(r);
                    break;
                }
            }
            hit
        }
    };

    match first_fail {
        None => RealVerdict {
            decision: true,
            failing: None,
            witness: None,
            trace,
        },
        Some(r) => {
            let witness = restriction_witness(f, r);
            RealVerdict {
                decision: false,
                failing: Some(RealStage::Restriction { r }),
                witness: Some(witness),
                trace,
            }
        }
    }
}

fn check_r(f: &SymmetricQuartic, r: u64) -> (RealCheck, bool) {
    let rc = f.restriction(r, f.n() - r).expect("1 <= r <= n-1 is valid");
    let discs = compute_dghk(&rc.quartic());
    let branch = condition_branch(&discs);
    let passed = !matches!(branch, RealBranch::ConditionFails);
    let record = RealCheck::Restriction {
        r,
        coeffs: [
            rc.a4.clone(),
            rc.a3.clone(),
            rc.a2.clone(),
            rc.a1.clone(),
            rc.a0.clone(),
        ],
        discs,
        branch,
    };
    (record, passed)
}

/// Traced parallel evaluation: all records are computed, then the trace is
/// truncated right after the first failure so the output is identical to the
/// sequential run.
fn parallel_first_fail(f: &SymmetricQuartic, trace: &mut Vec<RealCheck>) -> Option<u64> {
    use rayon::prelude::*;
    let rs: Vec<u64> = (1..f.n()).collect();
    let records: Vec<(RealCheck, bool)> = rs.par_iter().map(|&r| check_r(f, r)).collect();
    let cut = records.iter().position(|(_, passed)| !passed);
    let end = cut.map_or(records.len(), |i| i + 1);
    trace.extend(records.into_iter().take(end).map(|(rec, _)| rec));
    cut.map(|i| rs[i])
}

/// Exact witness for a failed `r`: a negative point of `f_{r,n-r}` on the
/// real line mapped back to `(t·1_r, 1_{n-r})`.
fn restriction_witness(f: &SymmetricQuartic, r: u64) -> Witness {
    let rc = f.restriction(r, f.n() - r).expect("failing r is valid");
    let t = find_negative_point(&rc.quartic(), &Interval::all())
        .expect("a failed condition implies a negative restriction value");
    let mut point = vec![rat(1); f.n() as usize];
    for x in point.iter_mut().take(r as usize) {
        *x = t.clone();
    }
    let value = f.eval_point(&point).expect("witness has n coordinates");
    assert!(value.is_negative(), "witness must evaluate negative");
    Witness { point, value }
}
