//! Command-line front end: decide, trace, convert, bench.
//!
//! Exit codes: 0 = nonnegative, 1 = not nonnegative, 2 = usage or parse
//! error, 3 = oracle mismatch (with `--oracle-check`).

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symquartic::algebra::{parse_rat, rat, Rat};
use symquartic::forms::{from_monomial, MonomialQuartic, SymmetricCubic, SymmetricQuartic};
use symquartic::qe_plus::{
    decide_orthant_cubic, decide_orthant_with, OrthantCheck, OrthantVerdict,
};
use symquartic::qe_real::{decide_real_with, RealCheck, RealVerdict};
use symquartic::{oracle, DecideOptions, Domain, Witness};

#[derive(Parser)]
#[command(
    name = "symquartic",
    version,
    about = "Exact nonnegativity decisions for symmetric quartic forms",
    long_about = "Decides whether a real symmetric quartic form in n variables is nonnegative \
                  on the nonnegative orthant or on all of R^n, in exact rational arithmetic \
                  and time linear in n. False verdicts come with an exact witness point."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide nonnegativity and print `0 <= f, true` or `0 <= f, false`.
    Decide(DecideArgs),
    /// Decide and print one line per performed check before the verdict.
    Trace(DecideArgs),
    /// Convert monomial-basis coefficients to power-sum coefficients.
    Convert(ConvertArgs),
    /// Time the decider over a list of n values; CSV output.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    /// Nonnegativity on the nonnegative orthant.
    Orthant,
    /// Nonnegativity on all of R^n.
    Real,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    /// Power-sum coefficients (a, b, c, d, e).
    PowerSum,
    /// Monomial symmetric coefficients (M4, M31, M22, M211, M1111).
    Monomial,
}

#[derive(Args)]
struct DecideArgs {
    /// Domain of the nonnegativity question.
    #[arg(long, value_enum)]
    domain: DomainArg,
    /// Number of variables (n >= 2).
    #[arg(long)]
    n: u64,
    /// Comma-separated exact coefficients, each `p` or `p/q` with q > 0.
    /// Five values for quartics, three for `--degree 3`.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Basis of the input coefficients (quartic only).
    #[arg(long, value_enum, default_value_t = BasisArg::PowerSum)]
    basis: BasisArg,
    /// Form degree: 4 (default) or 3 (orthant only, power-sum basis
    /// coefficients of P3, P2P1, P1^3).
    #[arg(long, default_value_t = 4)]
    degree: u32,
    /// Print an exact witness point when the decision is false.
    #[arg(long)]
    witness: bool,
    /// Record and print the per-check trace (decide subcommand).
    #[arg(long)]
    trace: bool,
    /// Emit one JSON object instead of plain text.
    #[arg(long)]
    json: bool,
    /// Re-decide through the quadratic-time reference oracle; exit 3 on
    /// mismatch.
    #[arg(long)]
    oracle_check: bool,
    /// Evaluate the per-pair checks in parallel (identical output).
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct ConvertArgs {
    /// Comma-separated monomial coefficients M4,M31,M22,M211,M1111.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Number of variables (only validated; the conversion matrix does not
    /// depend on it).
    #[arg(long, default_value_t = 4)]
    n: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Domain of the nonnegativity question.
    #[arg(long, value_enum)]
    domain: DomainArg,
    /// Comma-separated exact power-sum coefficients a,b,c,d,e.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Ascending comma-separated list of n values.
    #[arg(long)]
    n_list: String,
    /// Basis of the input coefficients.
    #[arg(long, value_enum, default_value_t = BasisArg::PowerSum)]
    basis: BasisArg,
    /// Evaluate the per-pair checks in parallel.
    #[arg(long)]
    parallel: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Decide(args) => run_decide(args, false),
        Cmd::Trace(args) => run_decide(args, true),
        Cmd::Convert(args) => run_convert(args),
        Cmd::Bench(args) => run_bench(args),
    };
    match code {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_coeff_list(s: &str, expected: usize) -> Result<Vec<Rat>, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != expected {
        return Err(format!(
            "expected {expected} comma-separated coefficients, got {}",
            parts.len()
        ));
    }
    parts
        .iter()
        .map(|p| parse_rat(p).map_err(|e| e.to_string()))
        .collect()
}

fn check_n(n: u64) -> Result<(), String> {
    if n < 2 {
        return Err(format!("n must be at least 2, got {n}"));
    }
    Ok(())
}

/// A uniform view of either verdict for rendering.
struct Outcome {
    decision: bool,
    witness: Option<Witness>,
    trace_lines: Vec<String>,
    trace_json: Vec<serde_json::Value>,
}

fn run_decide(args: DecideArgs, force_trace: bool) -> Result<ExitCode, String> {
    check_n(args.n)?;
    let want_trace = force_trace || args.trace;
    let opts = DecideOptions {
        record_trace: want_trace,
        parallel: args.parallel,
    };

    if args.degree == 3 {
        return run_decide_cubic(&args, want_trace);
    }
    if args.degree != 4 {
        return Err(format!("degree must be 3 or 4, got {}", args.degree));
    }

    let f = build_quartic(args.n, &args.coeffs, args.basis)?;
    let domain = match args.domain {
        DomainArg::Orthant => Domain::Orthant,
        DomainArg::Real => Domain::Real,
    };

    let start = Instant::now();
    let outcome = match domain {
        Domain::Orthant => orthant_outcome(decide_orthant_with(&f, &opts)),
        Domain::Real => real_outcome(decide_real_with(&f, &opts)),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    if args.oracle_check {
        let reference = match domain {
            Domain::Orthant => oracle::decide_orthant_reference(&f),
            Domain::Real => oracle::decide_real_reference(&f),
        };
        if reference != outcome.decision {
            eprintln!(
                "oracle mismatch: decider says {}, reference says {}",
                outcome.decision, reference
            );
            return Ok(ExitCode::from(3));
        }
    }

    render(&outcome, &args, want_trace, elapsed_ms);
    Ok(ExitCode::from(u8::from(!outcome.decision)))
}

fn build_quartic(n: u64, coeffs: &str, basis: BasisArg) -> Result<SymmetricQuartic, String> {
    let c = parse_coeff_list(coeffs, 5)?;
    let [c0, c1, c2, c3, c4]: [Rat; 5] = c.try_into().expect("length checked");
    match basis {
        BasisArg::PowerSum => {
            SymmetricQuartic::new(n, c0, c1, c2, c3, c4).map_err(|e| e.to_string())
        }
        BasisArg::Monomial => {
            let m = MonomialQuartic::new(n, c0, c1, c2, c3, c4).map_err(|e| e.to_string())?;
            Ok(from_monomial(&m))
        }
    }
}

fn run_decide_cubic(args: &DecideArgs, want_trace: bool) -> Result<ExitCode, String> {
    if !matches!(args.domain, DomainArg::Orthant) {
        return Err("--degree 3 supports only --domain orthant".into());
    }
    if !matches!(args.basis, BasisArg::PowerSum) {
        return Err("--degree 3 supports only the power-sum basis".into());
    }
    if args.oracle_check {
        return Err("--oracle-check supports only quartic forms".into());
    }
    let c = parse_coeff_list(&args.coeffs, 3)?;
    let [a3, a21, a111]: [Rat; 3] = c.try_into().expect("length checked");
    let f = SymmetricCubic::new(args.n, a3, a21, a111).map_err(|e| e.to_string())?;

    let start = Instant::now();
    let decision = decide_orthant_cubic(&f);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut outcome = Outcome {
        decision,
        witness: None,
        trace_lines: Vec::new(),
        trace_json: Vec::new(),
    };
    if want_trace || (!decision && args.witness) {
        for k in 1..=args.n {
            let value = f.eval_ones(k).expect("k in range");
            if want_trace {
                outcome.trace_lines.push(format!("k={k} value={value}"));
                outcome.trace_json.push(serde_json::json!({
                    "stage": "ones", "k": k, "value": value.to_string(),
                }));
            }
            if value < rat(0) && outcome.witness.is_none() {
                let mut point = vec![rat(0); args.n as usize];
                for x in point.iter_mut().take(k as usize) {
                    *x = rat(1);
                }
                outcome.witness = Some(Witness { point, value });
                if !want_trace {
                    break;
                }
            }
        }
    }
    render(&outcome, args, want_trace, elapsed_ms);
    Ok(ExitCode::from(u8::from(!decision)))
}

fn orthant_outcome(v: OrthantVerdict) -> Outcome {
    let mut lines = Vec::with_capacity(v.trace.len());
    let mut json = Vec::with_capacity(v.trace.len());
    for check in &v.trace {
        match check {
            OrthantCheck::Ones { k, value } => {
                lines.push(format!("k={k} value={value}"));
                json.push(serde_json::json!({
                    "stage": "ones", "k": k, "value": value.to_string(),
                }));
            }
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
                let mut line = format!(
                    "(r,s)=({r},{s}) alpha={alpha} beta={beta} gamma={gamma} Delta={delta}"
                );
                let mut obj = serde_json::json!({
                    "stage": "pair", "r": r, "s": s,
                    "alpha": alpha.to_string(), "beta": beta.to_string(),
                    "gamma": gamma.to_string(), "Delta": delta.to_string(),
                    "branch": branch.as_str(),
                });
                if let Some(pqr) = pqr {
                    line.push_str(&format!(" P={} Q={} R={}", pqr.p, pqr.q, pqr.r));
                    obj["P"] = pqr.p.to_string().into();
                    obj["Q"] = pqr.q.to_string().into();
                    obj["R"] = pqr.r.to_string().into();
                }
                line.push_str(&format!(" branch={}", branch.as_str()));
                lines.push(line);
                json.push(obj);
            }
        }
    }
    Outcome {
        decision: v.decision,
        witness: v.witness,
        trace_lines: lines,
        trace_json: json,
    }
}

fn real_outcome(v: RealVerdict) -> Outcome {
    let mut lines = Vec::with_capacity(v.trace.len());
    let mut json = Vec::with_capacity(v.trace.len());
    for check in &v.trace {
        match check {
            RealCheck::Ones { k, value } => {
                lines.push(format!("k={k} value={value}"));
                json.push(serde_json::json!({
                    "stage": "ones", "k": k, "value": value.to_string(),
                }));
            }
            RealCheck::Restriction {
                r,
                coeffs,
                discs,
                branch,
            } => {
                lines.push(format!(
                    "r={r} Delta={} G={} H={} K={} branch={}",
                    discs.delta,
                    discs.g,
                    discs.h,
                    discs.k,
                    branch.as_str()
                ));
                json.push(serde_json::json!({
                    "stage": "restriction", "r": r,
                    "A": coeffs[0].to_string(), "B": coeffs[1].to_string(),
                    "C": coeffs[2].to_string(), "D": coeffs[3].to_string(),
                    "E": coeffs[4].to_string(),
                    "Delta": discs.delta.to_string(), "G": discs.g.to_string(),
                    "H": discs.h.to_string(), "K": discs.k.to_string(),
                    "branch": branch.as_str(),
                }));
            }
        }
    }
    Outcome {
        decision: v.decision,
        witness: v.witness,
        trace_lines: lines,
        trace_json: json,
    }
}

fn render(outcome: &Outcome, args: &DecideArgs, want_trace: bool, elapsed_ms: f64) {
    if args.json {
        let mut obj = serde_json::json!({
            "decision": outcome.decision,
            "timing_ms": elapsed_ms,
        });
        if let Some(w) = &outcome.witness {
            obj["witness"] = serde_json::json!({
                "point": w.point.iter().map(Rat::to_string).collect::<Vec<_>>(),
                "value": w.value.to_string(),
            });
        }
        if want_trace {
            obj["trace"] = serde_json::Value::Array(outcome.trace_json.clone());
        }
        println!("{obj}");
        return;
    }
    if want_trace {
        for line in &outcome.trace_lines {
            println!("{line}");
        }
    }
    println!(
        "0 <= f, {}",
        if outcome.decision { "true" } else { "false" }
    );
    if args.witness {
        if let Some(w) = &outcome.witness {
            let coords: Vec<String> = w.point.iter().map(Rat::to_string).collect();
            println!("witness: ({}) value: {}", coords.join(", "), w.value);
        }
    }
}

fn run_convert(args: ConvertArgs) -> Result<ExitCode, String> {
    check_n(args.n)?;
    let c = parse_coeff_list(&args.coeffs, 5)?;
    let [m4, m31, m22, m211, m1111]: [Rat; 5] = c.try_into().expect("length checked");
    let m = MonomialQuartic::new(args.n, m4, m31, m22, m211, m1111).map_err(|e| e.to_string())?;
    let f = from_monomial(&m);
    let out: Vec<String> = f.coeffs().iter().map(|x| x.to_string()).collect();
    println!("{}", out.join(","));
    Ok(ExitCode::SUCCESS)
}

fn run_bench(args: BenchArgs) -> Result<ExitCode, String> {
    let ns: Vec<u64> = args
        .n_list
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid n value {p:?}"))
        })
        .collect::<Result<_, _>>()?;
    if ns.is_empty() {
        return Err("empty n list".into());
    }
    if !ns.windows(2).all(|w| w[0] < w[1]) {
        return Err("n list must be strictly ascending".into());
    }
    for &n in &ns {
        check_n(n)?;
    }

    let opts = DecideOptions {
        record_trace: false,
        parallel: args.parallel,
    };
    println!("n,decision,millis");
    for &n in &ns {
        let f = build_quartic(n, &args.coeffs, args.basis)?;
        let start = Instant::now();
        let decision = match args.domain {
            DomainArg::Orthant => decide_orthant_with(&f, &opts).decision,
            DomainArg::Real => decide_real_with(&f, &opts).decision,
        };
        let millis = start.elapsed().as_secs_f64() * 1e3;
        println!("{n},{decision},{millis:.3}");
    }
    Ok(ExitCode::SUCCESS)
}
