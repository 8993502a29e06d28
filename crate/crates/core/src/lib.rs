//! Exact decision procedures for nonnegativity of real symmetric quartic forms.
//!
//! A symmetric quartic form in `n >= 2` variables is stored in the power-sum
//! basis as `f = a*P4 + b*P3*P1 + c*P2^2 + d*P2*P1^2 + e*P1^4` with exact
//! rational coefficients. The crate answers two questions about such a form:
//!
//! * [`qe_plus::decide_orthant`] — is `f(x) >= 0` for every `x` with
//!   nonnegative coordinates? Decided in time linear in `n` through a
//!   discriminant system over the univariate restrictions
//!   `f(t·1_r, 1_s, 0, …)`.
//! * [`qe_real::decide_real`] — is `f(x) >= 0` for every real `x`? Decided in
//!   linear time through the `(Delta, G, H, K)` discriminants of the
//!   restrictions `f(t·1_r, 1_{n-r})`.
//!
//! Both deciders return a [`Witness`] point with a strictly negative value
//! whenever they answer `false`, and an optional per-check trace. The
//! [`oracle`] module contains independent quadratic-time reference deciders
//! (restriction enumeration plus Sturm-based univariate checks) used to
//! cross-validate the fast path, and [`algebra`] has the underlying exact
//! machinery: rational scalars, univariate polynomials, Sturm chains, and the
//! two resultant determinants.
//!
//! No floating point is used anywhere in a decision path.
//!
//! ```
//! use symquartic::forms::SymmetricQuartic;
//! use symquartic::qe_plus::decide_orthant;
//!
//! // 24*P4 - 19*P3*P1 - 7*P2^2 + 9*P2*P1^2 - P1^4, a form that is
//! // nonnegative on the orthant for n in {2, 3} and for no larger n
//! let f = SymmetricQuartic::from_ints(4, [24, -19, -7, 9, -1]).unwrap();
//! let verdict = decide_orthant(&f);
//! assert!(!verdict.decision);
//! let w = verdict.witness.unwrap();
//! assert_eq!(f.eval_point(&w.point).unwrap(), w.value); // exact and negative
//!
//! let g = SymmetricQuartic::from_ints(3, [24, -19, -7, 9, -1]).unwrap();
//! assert!(decide_orthant(&g).decision);
//! ```

pub mod algebra;
mod fastpath;
pub mod forms;
pub mod oracle;
pub mod qe_plus;
pub mod qe_real;

use algebra::Rat;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the zero polynomial has no root-counting data")]
    ZeroPolynomial,
    #[error("polynomial is nonnegative on the interval; no negative point exists")]
    NoNegativePoint,
    #[error("delta must be nonnegative, got {0}")]
    NegativeDelta(Rat),
    #[error("point has {got} coordinates but the form has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("k = {k} is out of range 1..={n}")]
    KOutOfRange { k: u64, n: u64 },
    #[error("invalid block sizes (r, s) = ({r}, {s}) for n = {n}")]
    InvalidBlocks { r: u64, s: u64, n: u64 },
    #[error("a symmetric form needs at least 2 variables, got {0}")]
    TooFewVariables(u64),
    #[error("leading coefficient must be strictly positive")]
    NonPositiveLeading,
    #[error("cannot parse {0:?} as an exact rational p or p/q with q > 0")]
    InvalidRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Domain a nonnegativity question ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// All points with nonnegative coordinates.
    Orthant,
    /// All of R^n.
    Real,
}

/// An exact counterexample: a point together with its (negative) value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub point: Vec<Rat>,
    pub value: Rat,
}

/// Knobs shared by both deciders.
///
/// Tracing keeps one record per performed check, so it costs memory linear in
/// the number of checks; leave it off for large `n`. Parallel evaluation
/// changes neither the decision nor the reported first failure: results are
/// reduced to the smallest failing index of the sequential order.
#[derive(Debug, Clone, Copy)]
pub struct DecideOptions {
    pub record_trace: bool,
    pub parallel: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        Self {
            record_trace: true,
            parallel: false,
        }
    }
}
