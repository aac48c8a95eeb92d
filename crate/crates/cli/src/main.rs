use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_core::stanley::verify_stanley;
use schubert_core::verify::{run_suite, Suite, VerifyOptions, DEFAULT_SEED};
use schubert_core::{max_length, schubert_polynomial, Permutation, Poly, SchubertTable};
use serde::Serialize;
use serde_json::{json, Value};

const MAX_SCHUBERT_N: usize = 8;
const MAX_VERIFY_N: usize = 7;
// n = 7 puts a 573 x 573 Bareiss elimination in the middle of the sweep
const MAX_STANLEY_SUITE_N: usize = 6;

#[derive(Parser)]
#[command(name = "nabla", version, about = "Schubert polynomials, the operator ∇ and weak-order determinants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print S_w, or the whole table for S_n ordered by (length, lex).
    Schubert {
        #[command(flatten)]
        common: Common,
        /// Permutation in one-line notation, e.g. 3,2,1 or 321.
        #[arg(long)]
        perm: Option<String>,
    },
    /// Run a verification suite and exit 1 if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// |det M̃| at one level next to the product formula.
    StanleyDet {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ell: usize,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Lift the default caps on n.
    #[arg(long)]
    max_n_override: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "json-like")]
    Json,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x") {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    parsed.map_err(|e| format!("bad seed {s:?}: {e}"))
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    parameters: Value,
    results: Vec<Value>,
    passed: bool,
    elapsed_ms: f64,
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn check_n(common: &Common, cap: usize, what: &str) -> Result<(), Failure> {
    if common.n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if common.n > cap && !common.max_n_override {
        return Err(Failure::Usage(format!(
            "n = {} exceeds the default cap of {cap} for {what}; pass --max-n-override to run it anyway",
            common.n
        )));
    }
    Ok(())
}

fn emit(format: Format, report: &Report, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("report serializes")),
        Format::Text => print!("{text}"),
    }
}

fn schubert(common: &Common, perm: Option<&str>) -> Result<(), Failure> {
    check_n(common, MAX_SCHUBERT_N, "schubert")?;
    let n = common.n;
    let start = Instant::now();
    let wanted = match perm {
        None => None,
        Some(p) => {
            let w: Permutation = p.parse()?;
            if w.n() != n {
                return Err(Failure::Usage(format!("permutation {w} is in S_{}, not S_{n}", w.n())));
            }
            Some(w)
        }
    };
    let entries: Vec<(Permutation, Poly)> = match &wanted {
        Some(w) => vec![(w.clone(), schubert_polynomial(w)?)],
        None => {
            let table = SchubertTable::build(n)?;
            table.permutations().map(|w| (w.clone(), table.get(w).expect("table covers S_n").clone())).collect()
        }
    };
    let mut text = String::new();
    let mut results = Vec::new();
    for (w, poly) in &entries {
        writeln!(text, "S[{w}] = {poly}").unwrap();
        results.push(json!({
            "perm": w.to_string(),
            "length": w.length(),
            "polynomial": poly.to_string(),
            "terms": poly.to_structured(),
        }));
    }
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    writeln!(text, "# {} polynomial(s) for n = {n} in {elapsed_ms:.1} ms", results.len()).unwrap();
    let report = Report {
        command: "schubert",
        parameters: json!({ "n": n, "perm": wanted.map(|w| w.to_string()) }),
        results,
        passed: true,
        elapsed_ms,
    };
    emit(common.format, &report, text);
    Ok(())
}

fn verify(common: &Common, suite: Suite, seed: u64) -> Result<(), Failure> {
    check_n(common, MAX_VERIFY_N, "verification sweeps")?;
    if matches!(suite, Suite::Stanley | Suite::All) {
        check_n(common, MAX_STANLEY_SUITE_N, "the stanley suite")?;
    }
    let n = common.n;
    let start = Instant::now();
    let opts = VerifyOptions { seed, ..Default::default() };
    let reports = run_suite(suite, n, &opts)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut text = String::new();
    let mut results = Vec::new();
    let mut total = 0;
    let mut failed = 0;
    for r in &reports {
        for c in &r.checks {
            total += 1;
            failed += usize::from(!c.passed);
            let mark = if c.passed { "PASS" } else { "FAIL" };
            write!(text, "[{mark}] {} n={n} {}", c.name, c.witness).unwrap();
            if !c.detail.is_empty() {
                write!(text, ": {}", c.detail).unwrap();
            }
            text.push('\n');
            results.push(json!({
                "suite": r.suite,
                "check": c.name,
                "witness": c.witness,
                "passed": c.passed,
                "detail": c.detail,
            }));
        }
    }
    let passed = failed == 0;
    writeln!(
        text,
        "{} {suite} n={n}: {}/{total} checks passed in {elapsed_ms:.1} ms (seed {seed:#x})",
        if passed { "PASS" } else { "FAIL" },
        total - failed,
    )
    .unwrap();
    let report = Report {
        command: "verify",
        parameters: json!({ "n": n, "suite": suite, "seed": seed.to_string(), "checks": total }),
        results,
        passed,
        elapsed_ms,
    };
    emit(common.format, &report, text);
    if passed {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn stanley_det(common: &Common, ell: usize) -> Result<(), Failure> {
    check_n(common, MAX_VERIFY_N, "stanley-det")?;
    let n = common.n;
    if 2 * ell > max_length(n) {
        return Err(Failure::Usage(format!(
            "ell = {ell} is out of range for n = {n}: need 0 <= ell <= {}",
            max_length(n) / 2
        )));
    }
    let start = Instant::now();
    let r = verify_stanley(n, ell)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let text = format!(
        "n={n} ell={ell}\ndet_abs {}\nrhs     {}\nsign    {:+}\n{} in {elapsed_ms:.1} ms\n",
        r.det_abs,
        r.rhs,
        r.sign,
        if r.equal { "PASS equal" } else { "FAIL not equal" },
    );
    let report = Report {
        command: "stanley-det",
        parameters: json!({ "n": n, "ell": ell }),
        results: vec![serde_json::to_value(r.to_record()).expect("record serializes")],
        passed: r.equal,
        elapsed_ms,
    };
    emit(common.format, &report, text);
    if r.equal {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let outcome = match &cli.command {
        Command::Schubert { common, perm } => schubert(common, perm.as_deref()),
        Command::Verify { common, suite, seed } => verify(common, *suite, *seed),
        Command::StanleyDet { common, ell } => stanley_det(common, *ell),
    };
    if let Err(Failure::Usage(msg)) = &outcome {
        eprintln!("error: {msg}");
    }
    ExitCode::from(exit_code(&outcome))
}

fn exit_code(outcome: &Result<(), Failure>) -> u8 {
    match outcome {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Usage(_)) => 2,
    }
}
