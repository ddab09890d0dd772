//! Command-line front end: build structured matrices on a set, compute
//! exact characteristic polynomials and numeric spectra, check
//! interlacing, scan for −1 eigenvalues, and run the acceptance suite.
//!
//! Exit codes: 0 success, 1 domain error (invalid set, non-definite
//! pencil, …), 2 usage error, 3 verification failure (interlacing
//! violation, scan disagreement, failed acceptance criterion).

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use eigenpencil::conjecture::{scan_minus_one, ScanRecord};
use eigenpencil::exactdet::{pencil_charpoly, IntPolynomial, SurdValue, Verdict};
use eigenpencil::interlace::{check_interlacing, leading_principal_submatrix, InterlaceReport};
use eigenpencil::pencilsolve::{
    generalized_eigenvalues, lcmgcd_small_closed_form, maxmin_closed_form, Spectrum,
    DEFAULT_PD_TOLERANCE,
};
use eigenpencil::setmatrix::{
    build_gcd_matrix, build_lcm_matrix, build_max_matrix, build_min_matrix, BigIntMatrix,
    RatMatrix, SetKind, SetSpec,
};
use eigenpencil::verify::{run_criterion, CriterionOutcome, VerifyOptions, CRITERION_COUNT};

#[derive(Parser)]
#[command(
    name = "eigenpencil",
    version,
    about = "Structured matrix pencils on finite sets: exact polynomials, \
             spectra, interlacing, and an exact −1 eigenvalue scan"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the two matrices of the selected pencil for a set
    Build {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum)]
        pencil: Option<PencilKind>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact characteristic polynomial det(A − λB) of the pencil
    Charpoly {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum)]
        pencil: Option<PencilKind>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Numeric spectrum of the pencil (or its closed form)
    Eig {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum)]
        pencil: Option<PencilKind>,
        /// Use the closed-form spectrum instead of the numeric solver
        #[arg(long)]
        closed_form: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiplicity of an integer root of the characteristic polynomial
    Multiplicity {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum)]
        pencil: Option<PencilKind>,
        /// Integer point to probe, e.g. --at=-1
        #[arg(long, allow_hyphen_values = true)]
        at: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate the characteristic polynomial exactly at √radicand
    SurdEval {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum)]
        pencil: Option<PencilKind>,
        /// Positive non-square integer m; the result is x + y·√m
        #[arg(long)]
        radicand: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check eigenvalue interlacing between consecutive leading orders
    Interlace {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum)]
        pencil: Option<PencilKind>,
        /// Largest tolerated interlacing gap
        #[arg(long, default_value_t = 1e-6)]
        slack: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact scan: is −1 an eigenvalue of the lcm/gcd pencil on {1..n}?
    Scan {
        /// Scan orders 1..=max_n
        #[arg(long)]
        max_n: usize,
        /// Extend the prime moduli past the Hadamard bound so every
        /// verdict is certified
        #[arg(long)]
        certify: bool,
        /// Number of prime moduli in probabilistic mode
        #[arg(long, default_value_t = 16)]
        primes: usize,
        /// Seed for the deterministic prime sequence
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: EIGENPENCIL_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the acceptance suite and exit nonzero on any failure
    Verify {
        /// Comma-separated criterion ids to run (default: all 11)
        #[arg(long)]
        only: Option<String>,
        /// Range for the probabilistic scan criterion
        #[arg(long, default_value_t = 500)]
        scan_n: usize,
        /// Worker threads (default: EIGENPENCIL_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Set input: explicit elements or an inclusive consecutive range.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct SetArgs {
    /// Comma-separated positive values: integers, fractions p/q, or decimals
    #[arg(long, value_name = "v1,v2,...")]
    set: Option<String>,
    /// Inclusive range of consecutive integers, e.g. 1..5
    #[arg(long, value_name = "a..b")]
    range: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PencilKind {
    /// lcm matrix vs gcd matrix (integer sets)
    LcmGcd,
    /// max matrix vs min matrix (any positive set)
    MaxMin,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

// --- error-to-exit-code plumbing ---------------------------------------------

struct CliError {
    code: i32,
    message: String,
}

impl From<eigenpencil::Error> for CliError {
    fn from(e: eigenpencil::Error) -> Self {
        let code = match e {
            eigenpencil::Error::VerificationFailed(_) => 3,
            _ => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

fn verification(message: impl Into<String>) -> CliError {
    CliError {
        code: 3,
        message: message.into(),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Build {
            set,
            pencil,
            format,
        } => cmd_build(&set, pencil, format),
        Command::Charpoly {
            set,
            pencil,
            format,
        } => cmd_charpoly(&set, pencil, format),
        Command::Eig {
            set,
            pencil,
            closed_form,
            format,
        } => cmd_eig(&set, pencil, closed_form, format),
        Command::Multiplicity {
            set,
            pencil,
            at,
            format,
        } => cmd_multiplicity(&set, pencil, at, format),
        Command::SurdEval {
            set,
            pencil,
            radicand,
            format,
        } => cmd_surd_eval(&set, pencil, radicand, format),
        Command::Interlace {
            set,
            pencil,
            slack,
            format,
        } => cmd_interlace(&set, pencil, slack, format),
        Command::Scan {
            max_n,
            certify,
            primes,
            seed,
            jobs,
            format,
        } => cmd_scan(max_n, certify, primes, seed, jobs, format),
        Command::Verify {
            only,
            scan_n,
            jobs,
            format,
        } => cmd_verify(only.as_deref(), scan_n, jobs, format),
    }
}

// --- set and pencil parsing ----------------------------------------------------

fn parse_set(args: &SetArgs) -> Result<SetSpec, CliError> {
    if let Some(list) = &args.set {
        return parse_element_list(list);
    }
    if let Some(range) = &args.range {
        return parse_range(range);
    }
    Err(usage("one of --set or --range is required"))
}

fn parse_element_list(list: &str) -> Result<SetSpec, CliError> {
    let mut rationals: Vec<BigRational> = Vec::new();
    let mut all_integers = true;
    for raw in list.split(',') {
        let token = raw.trim();
        if token.is_empty() {
            return Err(usage(format!(
                "--set '{list}' contains an empty element; expected comma-separated values"
            )));
        }
        let value = parse_rational(token).ok_or_else(|| {
            usage(format!(
                "--set element '{token}' is not an integer, a fraction p/q, or a decimal"
            ))
        })?;
        if !value.is_integer() {
            all_integers = false;
        }
        rationals.push(value);
    }
    let spec = if all_integers {
        SetSpec::integers(rationals.into_iter().map(|r| r.to_integer()))?
    } else {
        SetSpec::reals(rationals)?
    };
    Ok(spec)
}

fn parse_rational(token: &str) -> Option<BigRational> {
    if let Some((num, den)) = token.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        let digits: BigInt = frac.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let fraction = BigRational::new(digits, scale.clone());
        let base = BigRational::from_integer(whole);
        return Some(if negative {
            base - fraction
        } else {
            base + fraction
        });
    }
    let int: BigInt = token.parse().ok()?;
    Some(BigRational::from_integer(int))
}

fn parse_range(range: &str) -> Result<SetSpec, CliError> {
    let (lo, hi) = range
        .split_once("..")
        .ok_or_else(|| usage(format!("--range '{range}' must look like a..b")))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|_| usage(format!("--range start '{lo}' is not a positive integer")))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|_| usage(format!("--range end '{hi}' is not a positive integer")))?;
    Ok(SetSpec::consecutive(lo, hi)?)
}

fn pencil_for(set: &SetSpec, requested: Option<PencilKind>) -> PencilKind {
    requested.unwrap_or(match set.kind() {
        SetKind::Integer => PencilKind::LcmGcd,
        SetKind::Real => PencilKind::MaxMin,
    })
}

fn pencil_name(kind: PencilKind) -> &'static str {
    match kind {
        PencilKind::LcmGcd => "lcm-gcd",
        PencilKind::MaxMin => "max-min",
    }
}

/// The pencil's matrices as exact integer matrices (for polynomial work).
fn integer_pencil(
    set: &SetSpec,
    kind: PencilKind,
) -> Result<(BigIntMatrix, BigIntMatrix), CliError> {
    match kind {
        PencilKind::LcmGcd => Ok((build_lcm_matrix(set)?, build_gcd_matrix(set)?)),
        PencilKind::MaxMin => Ok((
            build_max_matrix(set).to_bigint()?,
            build_min_matrix(set).to_bigint()?,
        )),
    }
}

/// The pencil's matrices as floating-point matrices (for the solver).
fn real_pencil(
    set: &SetSpec,
    kind: PencilKind,
) -> Result<
    (
        eigenpencil::setmatrix::RealMatrix,
        eigenpencil::setmatrix::RealMatrix,
    ),
    CliError,
> {
    match kind {
        PencilKind::LcmGcd => Ok((
            build_lcm_matrix(set)?.to_real(),
            build_gcd_matrix(set)?.to_real(),
        )),
        PencilKind::MaxMin => Ok((
            build_max_matrix(set).to_real(),
            build_min_matrix(set).to_real(),
        )),
    }
}

fn set_strings(set: &SetSpec) -> Vec<String> {
    set.rational_elements()
        .iter()
        .map(|r| r.to_string())
        .collect()
}

// --- build -------------------------------------------------------------------

fn cmd_build(args: &SetArgs, pencil: Option<PencilKind>, format: Format) -> Result<(), CliError> {
    let set = parse_set(args)?;
    let kind = pencil_for(&set, pencil);
    let (a_role, b_role) = match kind {
        PencilKind::LcmGcd => ("lcm", "gcd"),
        PencilKind::MaxMin => ("max", "min"),
    };
    let (a, b): (RatMatrix, RatMatrix) = match kind {
        PencilKind::LcmGcd => (
            build_lcm_matrix(&set)?.map(|e| BigRational::from_integer(e.clone())),
            build_gcd_matrix(&set)?.map(|e| BigRational::from_integer(e.clone())),
        ),
        PencilKind::MaxMin => (build_max_matrix(&set), build_min_matrix(&set)),
    };
    match format {
        Format::Text => {
            println!("set: {{{}}}", set_strings(&set).join(", "));
            for (role, m) in [(a_role, &a), (b_role, &b)] {
                println!("{role} matrix:");
                let cells: Vec<Vec<String>> = m
                    .rows()
                    .map(|row| row.iter().map(|e| e.to_string()).collect())
                    .collect();
                let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
                for row in &cells {
                    let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                    println!("  {}", line.join(" "));
                }
            }
        }
        Format::Json => {
            for (role, m) in [(a_role, &a), (b_role, &b)] {
                let rows: Vec<Vec<String>> = m
                    .rows()
                    .map(|row| row.iter().map(|e| e.to_string()).collect())
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "record": "matrix",
                        "role": role,
                        "order": m.order(),
                        "set": set_strings(&set),
                        "rows": rows,
                    })
                );
            }
        }
        Format::Csv => {
            println!("role,i,j,value");
            for (role, m) in [(a_role, &a), (b_role, &b)] {
                for i in 0..m.order() {
                    for j in 0..m.order() {
                        println!("{role},{},{},{}", i + 1, j + 1, m.get(i, j));
                    }
                }
            }
        }
    }
    Ok(())
}

// --- charpoly ------------------------------------------------------------------

fn charpoly_of(
    args: &SetArgs,
    pencil: Option<PencilKind>,
) -> Result<(SetSpec, PencilKind, IntPolynomial), CliError> {
    let set = parse_set(args)?;
    let kind = pencil_for(&set, pencil);
    let (a, b) = integer_pencil(&set, kind)?;
    let p = pencil_charpoly(&a, &b)?;
    Ok((set, kind, p))
}

fn cmd_charpoly(
    args: &SetArgs,
    pencil: Option<PencilKind>,
    format: Format,
) -> Result<(), CliError> {
    let (set, kind, p) = charpoly_of(args, pencil)?;
    let coeffs: Vec<String> = p.coefficients().iter().map(BigInt::to_string).collect();
    match format {
        Format::Text => {
            println!("set: {{{}}}", set_strings(&set).join(", "));
            println!("pencil: {}", pencil_name(kind));
            println!("p(λ) = {p}");
            println!("coefficients (ascending): {}", coeffs.join(", "));
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "record": "charpoly",
                "set": set_strings(&set),
                "pencil": pencil_name(kind),
                "coefficients_ascending": coeffs,
                "display": p.to_string(),
            })
        ),
        Format::Csv => {
            println!("degree,coefficient");
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k},{c}");
            }
        }
    }
    Ok(())
}

// --- eig -----------------------------------------------------------------------

fn cmd_eig(
    args: &SetArgs,
    pencil: Option<PencilKind>,
    closed_form: bool,
    format: Format,
) -> Result<(), CliError> {
    let set = parse_set(args)?;
    let kind = pencil_for(&set, pencil);
    let (method, spectrum): (&str, Spectrum) = if closed_form {
        let s = match kind {
            PencilKind::MaxMin => maxmin_closed_form(&set),
            PencilKind::LcmGcd => lcmgcd_small_closed_form(&set)?,
        };
        ("closed-form", s)
    } else {
        let (a, b) = real_pencil(&set, kind)?;
        (
            "numeric",
            generalized_eigenvalues(&a, &b, DEFAULT_PD_TOLERANCE)?,
        )
    };
    match format {
        Format::Text => {
            let shown: Vec<String> = spectrum
                .values()
                .iter()
                .map(|v| format!("{v:.4}"))
                .collect();
            println!("{}", shown.join(", "));
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "record": "spectrum",
                "set": set_strings(&set),
                "pencil": pencil_name(kind),
                "method": method,
                // full-precision f64 entries; text output rounds to this
                // many decimal digits
                "display_precision": 4,
                "values": spectrum.values(),
            })
        ),
        Format::Csv => {
            println!("position,value");
            for (i, v) in spectrum.values().iter().enumerate() {
                println!("{},{v}", i + 1);
            }
        }
    }
    Ok(())
}

// --- multiplicity ----------------------------------------------------------------

fn cmd_multiplicity(
    args: &SetArgs,
    pencil: Option<PencilKind>,
    at: i64,
    format: Format,
) -> Result<(), CliError> {
    let (set, kind, p) = charpoly_of(args, pencil)?;
    let multiplicity = p.root_multiplicity(&BigInt::from(at))?;
    match format {
        Format::Text => {
            println!("set: {{{}}}", set_strings(&set).join(", "));
            println!("pencil: {}", pencil_name(kind));
            println!("multiplicity of λ = {at}: {multiplicity}");
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "record": "multiplicity",
                "set": set_strings(&set),
                "pencil": pencil_name(kind),
                "at": at.to_string(),
                "multiplicity": multiplicity,
            })
        ),
        Format::Csv => {
            println!("at,multiplicity");
            println!("{at},{multiplicity}");
        }
    }
    Ok(())
}

// --- surd-eval ---------------------------------------------------------------------

fn cmd_surd_eval(
    args: &SetArgs,
    pencil: Option<PencilKind>,
    radicand: u64,
    format: Format,
) -> Result<(), CliError> {
    let (set, kind, p) = charpoly_of(args, pencil)?;
    let value: SurdValue = p.eval_surd(radicand)?;
    match format {
        Format::Text => {
            println!("set: {{{}}}", set_strings(&set).join(", "));
            println!("pencil: {}", pencil_name(kind));
            println!("p(√{radicand}) = {value}");
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "record": "surd_value",
                "set": set_strings(&set),
                "pencil": pencil_name(kind),
                "radicand": radicand,
                "rational_part": value.rational_part.to_string(),
                "surd_part": value.surd_part.to_string(),
            })
        ),
        Format::Csv => {
            println!("rational_part,surd_part,radicand");
            println!("{},{},{radicand}", value.rational_part, value.surd_part);
        }
    }
    Ok(())
}

// --- interlace -----------------------------------------------------------------------

fn cmd_interlace(
    args: &SetArgs,
    pencil: Option<PencilKind>,
    slack: f64,
    format: Format,
) -> Result<(), CliError> {
    let set = parse_set(args)?;
    let kind = pencil_for(&set, pencil);
    let (a, b) = real_pencil(&set, kind)?;
    let n = a.order();
    if n < 2 {
        return Err(usage(format!(
            "interlacing needs a set with at least 2 elements, got {n}"
        )));
    }

    let mut spectra: Vec<Spectrum> = Vec::with_capacity(n);
    for k in 1..=n {
        let ak = leading_principal_submatrix(&a, k)?;
        let bk = leading_principal_submatrix(&b, k)?;
        spectra.push(generalized_eigenvalues(&ak, &bk, DEFAULT_PD_TOLERANCE)?);
    }

    let mut reports: Vec<InterlaceReport> = Vec::with_capacity(n - 1);
    for k in 2..=n {
        reports.push(check_interlacing(&spectra[k - 1], &spectra[k - 2], slack)?);
    }

    let total_violations: usize = reports.iter().map(|r| r.violations.len()).sum();
    match format {
        Format::Text => {
            println!("set: {{{}}}", set_strings(&set).join(", "));
            println!("pencil: {} (slack {slack:e})", pencil_name(kind));
            for r in &reports {
                if r.holds() {
                    println!("order {} vs {}: holds", r.order, r.order - 1);
                } else {
                    let gaps: Vec<String> = r
                        .violations
                        .iter()
                        .map(|(pos, gap)| format!("position {pos} gap {gap:.3e}"))
                        .collect();
                    println!(
                        "order {} vs {}: VIOLATED ({})",
                        r.order,
                        r.order - 1,
                        gaps.join("; ")
                    );
                }
            }
        }
        Format::Json => {
            for r in &reports {
                let violations: Vec<serde_json::Value> = r
                    .violations
                    .iter()
                    .map(|(pos, gap)| serde_json::json!({"position": pos, "gap": gap}))
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "record": "interlace",
                        "parent_order": r.order,
                        "holds": r.holds(),
                        "slack": r.slack,
                        "violations": violations,
                    })
                );
            }
        }
        Format::Csv => {
            println!("parent_order,holds,violations");
            for r in &reports {
                println!("{},{},{}", r.order, r.holds(), r.violations.len());
            }
        }
    }

    if total_violations > 0 {
        return Err(verification(format!(
            "interlacing violated in {total_violations} place(s) at slack {slack:e}"
        )));
    }
    Ok(())
}

// --- scan ----------------------------------------------------------------------------

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::CertifiedZero => "certified_zero",
        Verdict::CertifiedNonZero => "certified_nonzero",
        Verdict::ProbablyZero => "probably_zero",
    }
}

fn cmd_scan(
    max_n: usize,
    certify: bool,
    primes: usize,
    seed: u64,
    jobs: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    if primes == 0 {
        return Err(usage("--primes must be at least 1"));
    }
    let records = run_in_pool(jobs, || scan_minus_one(max_n, primes, certify, seed))??;

    match format {
        Format::Text => print_scan_text(&records, max_n),
        Format::Json => {
            for r in &records {
                println!("{}", scan_record_json(r));
            }
        }
        Format::Csv => {
            println!(
                "n,verdict,witness,primes_used,hadamard_bits,has_minus_one,predicted,\
                 agrees,in_conjecture_range,minus_one_multiplicity"
            );
            for r in &records {
                let opt = |x: Option<u64>| x.map_or(String::new(), |v| v.to_string());
                println!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.n,
                    verdict_name(r.exact_verdict.verdict),
                    opt(r.exact_verdict.witness),
                    r.exact_verdict.primes_used,
                    opt(r.exact_verdict.hadamard_bits),
                    r.has_minus_one,
                    r.predicted,
                    r.agrees,
                    r.in_conjecture_range,
                    r.minus_one_multiplicity
                        .map_or(String::new(), |m| m.to_string()),
                );
            }
        }
    }

    let disagreements: Vec<usize> = records
        .iter()
        .filter(|r| r.in_conjecture_range && !r.agrees)
        .map(|r| r.n)
        .collect();
    if !disagreements.is_empty() {
        return Err(verification(format!(
            "scan disagrees with the prediction at orders {disagreements:?}"
        )));
    }
    Ok(())
}

fn scan_record_json(r: &ScanRecord) -> serde_json::Value {
    serde_json::json!({
        "record": "scan",
        "n": r.n,
        "verdict": verdict_name(r.exact_verdict.verdict),
        "witness": r.exact_verdict.witness,
        "primes_used": r.exact_verdict.primes_used,
        "hadamard_bits": r.exact_verdict.hadamard_bits,
        "has_minus_one": r.has_minus_one,
        "predicted": r.predicted,
        "agrees": r.agrees,
        "in_conjecture_range": r.in_conjecture_range,
        "minus_one_multiplicity": r.minus_one_multiplicity,
    })
}

fn print_scan_text(records: &[ScanRecord], max_n: usize) {
    println!("n      verdict             -1?    predicted  agrees  mult");
    for r in records {
        println!(
            "{:<6} {:<19} {:<6} {:<10} {:<7} {}",
            r.n,
            verdict_name(r.exact_verdict.verdict),
            r.has_minus_one,
            if r.in_conjecture_range {
                r.predicted.to_string()
            } else {
                format!("{} (out of range)", r.predicted)
            },
            r.agrees,
            r.minus_one_multiplicity
                .map_or("-".to_string(), |m| m.to_string()),
        );
    }
    let members: Vec<String> = records
        .iter()
        .filter(|r| r.n >= 4 && r.has_minus_one)
        .map(|r| r.n.to_string())
        .collect();
    println!(
        "members with -1 (4 <= n <= {max_n}): {}",
        members.join(", ")
    );
    if records.iter().any(|r| r.n == 3 && r.has_minus_one) {
        println!("note: order 3 also has -1, outside the predicted range n >= 4");
    }
}

// --- verify --------------------------------------------------------------------------

fn cmd_verify(
    only: Option<&str>,
    scan_n: usize,
    jobs: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let ids: Vec<usize> = match only {
        None => (1..=CRITERION_COUNT).collect(),
        Some(list) => {
            let mut ids = Vec::new();
            for token in list.split(',') {
                let id: usize = token
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("--only entry '{token}' is not a criterion id")))?;
                if !(1..=CRITERION_COUNT).contains(&id) {
                    return Err(usage(format!(
                        "--only entry {id} is outside 1..={CRITERION_COUNT}"
                    )));
                }
                ids.push(id);
            }
            if ids.is_empty() {
                return Err(usage("--only must list at least one criterion id"));
            }
            ids
        }
    };
    if scan_n == 0 {
        return Err(usage("--scan-n must be at least 1"));
    }

    let options = VerifyOptions {
        probabilistic_scan_max_n: scan_n,
    };
    let outcomes: Vec<CriterionOutcome> = run_in_pool(jobs, || {
        ids.iter()
            .map(|&id| run_criterion(id, &options).expect("ids validated above"))
            .collect()
    })?;

    if format == Format::Csv {
        println!("id,name,passed,detail");
    }
    let mut failed = Vec::new();
    for o in &outcomes {
        match format {
            Format::Text => println!(
                "criterion {:>2} ({}): {} — {}",
                o.id,
                o.name,
                if o.passed { "PASS" } else { "FAIL" },
                o.detail
            ),
            Format::Json => println!(
                "{}",
                serde_json::json!({
                    "record": "criterion",
                    "id": o.id,
                    "name": o.name,
                    "passed": o.passed,
                    "detail": o.detail,
                })
            ),
            Format::Csv => println!(
                "{},{},{},\"{}\"",
                o.id,
                o.name,
                o.passed,
                o.detail.replace('"', "\"\"")
            ),
        }
        if !o.passed {
            failed.push(o.id);
        }
    }
    if format == Format::Text {
        println!(
            "{} of {} criteria passed",
            outcomes.len() - failed.len(),
            outcomes.len()
        );
    }
    if !failed.is_empty() {
        return Err(verification(format!(
            "acceptance criteria failed: {failed:?}"
        )));
    }
    Ok(())
}

// --- shared helpers --------------------------------------------------------------------

/// Run work on a rayon pool sized by --jobs, the EIGENPENCIL_JOBS
/// environment variable, or rayon's default (all cores), in that order.
fn run_in_pool<T: Send>(
    jobs: Option<usize>,
    work: impl FnOnce() -> T + Send,
) -> Result<T, CliError> {
    let jobs = match jobs {
        Some(j) => Some(j),
        None => match std::env::var("EIGENPENCIL_JOBS") {
            Ok(v) => Some(v.parse().map_err(|_| {
                usage(format!(
                    "EIGENPENCIL_JOBS value '{v}' is not a positive integer"
                ))
            })?),
            Err(_) => None,
        },
    };
    match jobs {
        None => Ok(work()),
        Some(0) => Err(usage("--jobs must be at least 1")),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| CliError {
                    code: 1,
                    message: format!("could not build a {j}-thread worker pool: {e}"),
                })?;
            Ok(pool.install(work))
        }
    }
}
