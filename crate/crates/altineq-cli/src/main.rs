//! Command-line front end: verification campaigns, constant calculation,
//! sharpness traces, extremal search, and series checks, with
//! machine-readable reports.
//!
//! Exit status: 0 = all checks pass, 1 = mathematical violation found,
//! 2 = usage error, 3 = degenerate-input error surfaced at top level.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use altineq::campaign::{run_campaign, CampaignFunctional, CampaignSpec};
use altineq::error::Error as LibError;
use altineq::extremal::{
    search, SearchConfig, SearchDirection, SearchFunctional,
};
use altineq::ratios::{
    bougoffa_constant, cauchy_constant, crossover_exponent, holder_constant, holder_ratio,
    holder_zero_witness, holder_blowup_trace, minkowski_sharpness_trace,
    reverse_minkowski_sharpness_trace, zhuang_constant, BoundsBox, ConjugateExponents,
    QuotientBox,
};
use altineq::report::{tol_cmp_with, RatioReport, TOL_REL, WitnessTrace};
use altineq::series::{
    eta, f_scan, geometric_ineq_check, harmonic_ineq_check, zeta_from_eta, DEFAULT_TOL, MIN_TOL,
};
use altineq::Seq;
use output::{csv_row, Report, RunManifest};

#[derive(Parser)]
#[command(name = "altineq", version, about = "Alternating-sign inequality toolkit")]
struct Cli {
    /// RNG seed for anything randomized; seeded runs replay bit-identically.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the trace CSV (trace commands) or a copy of the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Override the comparison tolerance for exploratory runs.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded bound-holding campaign for one functional.
    Verify(VerifyArgs),
    /// Print the sharp constants for a bounds box or a quotient box.
    Constants(ConstantsArgs),
    /// Evaluate a constructive witness family along a grid.
    Sharpness(SharpnessArgs),
    /// Multi-start compass search for extremal sequences.
    Search(SearchArgs),
    /// Alternating-series checks: eta, zeta, F-scan, harmonic, geometric.
    Series(SeriesArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: holder cauchy minkowski_alt reverse_minkowski lemma
    /// power_ratio alt_superadditivity szego brunk_olkin zhuang jensen
    /// young power_bracket superadditivity quasi_norm
    #[arg(long)]
    functional: String,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Sequence length range, e.g. 2:64
    #[arg(long, default_value = "2:64")]
    n_range: String,
    /// Box sampling range, e.g. 0.1:10
    #[arg(long, default_value = "0.1:10")]
    box_range: String,
    /// Exponent list (rationals accepted), e.g. 1,3/2,2,3
    #[arg(long)]
    p: Option<String>,
    /// Cauchy only: generate independent pairs so quotient-hypothesis
    /// failures surface in the error count.
    #[arg(long)]
    raw_pairs: bool,
}

#[derive(Args)]
struct ConstantsArgs {
    /// Bounds box as a,A,b,B (requires --p).
    #[arg(long, value_name = "a,A,b,B", conflicts_with = "quotient")]
    r#box: Option<String>,
    /// Quotient box as m,M.
    #[arg(long, value_name = "m,M")]
    quotient: Option<String>,
    /// Hölder exponent p > 1 (rational accepted).
    #[arg(long)]
    p: Option<String>,
}

#[derive(Args)]
struct SharpnessArgs {
    /// One of: minkowski_eps_b reverse_minkowski_eps_n holder_blowup holder_zero
    #[arg(long)]
    family: String,
    #[arg(long, default_value = "2")]
    p: String,
    /// Grid values, e.g. 10,100,1000 (gaps for holder_blowup).
    #[arg(long)]
    grid: Option<String>,
    /// Even witness length for holder_zero.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Fixed b-tail value for holder_blowup.
    #[arg(long, default_value_t = 1.0)]
    b_tail: f64,
}

#[derive(Args)]
struct SearchArgs {
    /// One of: holder cauchy minkowski_alt reverse_minkowski power_ratio
    #[arg(long)]
    functional: String,
    #[arg(long, default_value = "2")]
    p: String,
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value_t = 64)]
    restarts: usize,
    #[arg(long, value_enum, default_value_t = DirectionArg::Maximize)]
    direction: DirectionArg,
    /// Box for the first sequence as lo,hi.
    #[arg(long)]
    box_a: Option<String>,
    /// Box for the second sequence (quotient bounds for cauchy) as lo,hi.
    #[arg(long)]
    box_b: Option<String>,
    #[arg(long)]
    step_init: Option<f64>,
    #[arg(long)]
    step_min: Option<f64>,
    /// Lower integer exponent for power_ratio.
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Upper integer exponent for power_ratio.
    #[arg(long, default_value_t = 2)]
    big_r: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Maximize,
    Minimize,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SeriesArgs {
    /// One of: eta zeta f_scan harmonic geometric
    #[arg(long)]
    mode: String,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    /// Grid as start:end:step for f_scan.
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Degenerate(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Degenerate(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Degenerate(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn lib_failure(e: LibError) -> Failure {
    match e {
        LibError::DegenerateDenominator
        | LibError::NonPositiveInnerSum(_)
        | LibError::QuotientNotMonotone
        | LibError::ExcludedFamily(_)
        | LibError::DomainTooSmall { .. }
        | LibError::CapBelowMax { .. }
        | LibError::DegenerateBox(_)
        | LibError::OutOfBox { .. }
        | LibError::NotMonotone(_)
        | LibError::InvalidSequence(_) => Failure::Degenerate(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("ALTINEQ_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Verify(args) => cmd_verify(&cli, args),
        Command::Constants(args) => cmd_constants(&cli, args),
        Command::Sharpness(args) => cmd_sharpness(&cli, args),
        Command::Search(args) => cmd_search(&cli, args),
        Command::Series(args) => cmd_series(&cli, args),
    }
}

// ---- flag parsing helpers ----

/// Parses a real, accepting rationals like 3/2 exactly.
fn parse_real(s: &str) -> Result<f64, Failure> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: f64 = num
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad rational: {s}")))?;
        let d: f64 = den
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad rational: {s}")))?;
        if d == 0.0 {
            return Err(usage(format!("zero denominator in {s}")));
        }
        Ok(n / d)
    } else {
        s.parse()
            .map_err(|_| usage(format!("bad number: {s}")))
    }
}

fn parse_list(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',').map(parse_real).collect()
}

fn parse_pair(s: &str, sep: char) -> Result<(f64, f64), Failure> {
    let parts: Vec<&str> = s.split(sep).collect();
    if parts.len() != 2 {
        return Err(usage(format!("expected lo{sep}hi, got {s}")));
    }
    Ok((parse_real(parts[0])?, parse_real(parts[1])?))
}

fn parse_grid_spec(s: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(usage(format!("expected start:end:step, got {s}")));
    }
    let (start, end, step) = (
        parse_real(parts[0])?,
        parse_real(parts[1])?,
        parse_real(parts[2])?,
    );
    if step <= 0.0 || end < start {
        return Err(usage(format!("bad grid spec {s}")));
    }
    let count = ((end - start) / step).round() as usize;
    Ok((0..=count)
        .map(|i| start + step * i as f64)
        .filter(|v| *v <= end + 1e-12 * step)
        .collect())
}

fn require<T>(opt: Option<T>, flag: &str) -> Result<T, Failure> {
    opt.ok_or_else(|| usage(format!("missing required flag --{flag}")))
}

fn write_out(cli: &Cli, contents: &str) -> Result<(), Failure> {
    if let Some(path) = &cli.out {
        std::fs::write(path, contents)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn out_path_string(cli: &Cli) -> Vec<String> {
    cli.out
        .iter()
        .map(|p| p.display().to_string())
        .collect()
}

fn emit<T: Serialize>(cli: &Cli, report: &Report<T>, csv: Option<String>) -> Result<(), Failure> {
    match (cli.format, &csv) {
        (Format::Csv, Some(table)) => print!("{table}"),
        (Format::Csv, None) => {
            return Err(usage("csv format is not available for this command"))
        }
        (Format::Json, _) => print!("{}", report.to_json()),
    }
    if let Some(table) = csv {
        write_out(cli, &table)?;
    } else {
        write_out(cli, &report.to_json())?;
    }
    Ok(())
}

// ---- verify ----

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<u8, Failure> {
    let functional = CampaignFunctional::parse(&args.functional)
        .ok_or_else(|| usage(format!("unknown functional {}", args.functional)))?;
    let n_pair = parse_pair(&args.n_range, ':')?;
    let box_range = parse_pair(&args.box_range, ':')?;
    let mut spec = CampaignSpec::new(functional, args.trials, cli.seed);
    spec.n_range = (n_pair.0 as usize, n_pair.1 as usize);
    spec.box_range = box_range;
    spec.raw_pairs = args.raw_pairs;
    spec.tol_rel = cli.tol.unwrap_or(TOL_REL);
    if let Some(p) = &args.p {
        spec.p_list = parse_list(p)?;
    }
    let report = run_campaign(&spec).map_err(lib_failure)?;
    let violations = report.violations;

    let manifest = RunManifest::new("verify")
        .param("functional", functional.as_str())
        .param("trials", args.trials)
        .param("n_range", &args.n_range)
        .param("box_range", &args.box_range)
        .param("p_list", format!("{:?}", spec.p_list))
        .param("raw_pairs", args.raw_pairs)
        .param("tol_rel", spec.tol_rel)
        .seed(cli.seed);
    let manifest = out_path_string(cli)
        .into_iter()
        .fold(manifest, |m, p| m.output(&p));
    emit(cli, &Report::new(manifest, report), None)?;
    Ok(if violations > 0 { 1 } else { 0 })
}

// ---- constants ----

#[derive(Serialize)]
struct BoxConstants {
    mode: &'static str,
    a_lo: f64,
    a_hi: f64,
    b_lo: f64,
    b_hi: f64,
    p: f64,
    q: f64,
    holder: f64,
    cauchy: f64,
    cauchy_squared: f64,
    zhuang: f64,
    minkowski: f64,
}

#[derive(Serialize)]
struct QuotientConstants {
    mode: &'static str,
    m: f64,
    big_m: f64,
    quotient_constant: f64,
    crossover: f64,
}

fn cmd_constants(cli: &Cli, args: &ConstantsArgs) -> Result<u8, Failure> {
    match (&args.r#box, &args.quotient) {
        (Some(bx), None) => {
            let vals = parse_list(bx)?;
            if vals.len() != 4 {
                return Err(usage("--box needs four values a,A,b,B"));
            }
            let p = parse_real(&require(args.p.clone(), "p")?)?;
            let pq = ConjugateExponents::new(p).map_err(lib_failure)?;
            let bounds = BoundsBox::new(vals[0], vals[1], vals[2], vals[3]).map_err(lib_failure)?;
            let holder = holder_constant(&bounds, &pq).map_err(lib_failure)?;
            let cauchy = cauchy_constant(&bounds).map_err(lib_failure)?;
            let zhuang = zhuang_constant(&bounds);
            let minkowski = 2.0f64.powf(1.0 - 1.0 / p);
            let payload = BoxConstants {
                mode: "box",
                a_lo: vals[0],
                a_hi: vals[1],
                b_lo: vals[2],
                b_hi: vals[3],
                p,
                q: pq.q(),
                holder,
                cauchy,
                cauchy_squared: cauchy * cauchy,
                zhuang,
                minkowski,
            };
            eprintln!("holder constant      C = {holder}");
            eprintln!("cauchy constant      c = {cauchy} (c^2 = {})", cauchy * cauchy);
            eprintln!("zhuang constant      s = {zhuang}");
            eprintln!("minkowski constant     = {minkowski} (2^(1-1/p))");
            let manifest = RunManifest::new("constants")
                .param("box", bx)
                .param("p", p);
            emit(cli, &Report::new(manifest, payload), None)?;
            Ok(0)
        }
        (None, Some(qt)) => {
            let vals = parse_list(qt)?;
            if vals.len() != 2 {
                return Err(usage("--quotient needs two values m,M"));
            }
            let qb = QuotientBox::new(vals[0], vals[1]).map_err(lib_failure)?;
            let c = bougoffa_constant(&qb).map_err(lib_failure)?;
            let p_star = crossover_exponent(&qb).map_err(lib_failure)?;
            let payload = QuotientConstants {
                mode: "quotient",
                m: vals[0],
                big_m: vals[1],
                quotient_constant: c,
                crossover: p_star,
            };
            eprintln!("quotient constant    C = {c}");
            eprintln!("crossover exponent  p* = {p_star}");
            let manifest = RunManifest::new("constants").param("quotient", qt);
            emit(cli, &Report::new(manifest, payload), None)?;
            Ok(0)
        }
        _ => Err(usage("choose exactly one of --box a,A,b,B or --quotient m,M")),
    }
}

// ---- sharpness ----

#[derive(Serialize)]
struct TracePayload {
    trace: WitnessTrace,
    pass: bool,
    final_gap: f64,
}

#[derive(Serialize)]
struct ZeroWitnessPayload {
    n: usize,
    p: f64,
    a: Vec<f64>,
    b: Vec<f64>,
    report: RatioReport,
    pass: bool,
}

fn trace_csv(trace: &WitnessTrace) -> String {
    let mut s = String::from("param,ratio,bound,gap\n");
    for pt in &trace.points {
        s.push_str(&csv_row(&[pt.param, pt.ratio, pt.bound, pt.gap]));
        s.push('\n');
    }
    s
}

fn cmd_sharpness(cli: &Cli, args: &SharpnessArgs) -> Result<u8, Failure> {
    let p = parse_real(&args.p)?;
    let tol = cli.tol.unwrap_or(TOL_REL);
    match args.family.as_str() {
        "minkowski_eps_b" | "reverse_minkowski_eps_n" | "holder_blowup" => {
            let grid = parse_list(&require(args.grid.clone(), "grid")?)?;
            let trace = match args.family.as_str() {
                "minkowski_eps_b" => minkowski_sharpness_trace(p, &grid).map_err(lib_failure)?,
                "reverse_minkowski_eps_n" => {
                    let ints: Vec<u64> = grid.iter().map(|v| *v as u64).collect();
                    reverse_minkowski_sharpness_trace(p, &ints).map_err(lib_failure)?
                }
                _ => {
                    let pq = ConjugateExponents::new(p).map_err(lib_failure)?;
                    holder_blowup_trace(&pq, args.b_tail, &grid).map_err(lib_failure)?
                }
            };
            // Monotone-gap assertion: the eps families must shrink toward
            // the sharp constant, the blow-up family must grow; a flat
            // all-zero gap trace (the p = 1 collapse) passes.
            let flat = trace.points.iter().all(|pt| pt.gap.abs() <= tol);
            let pass = if args.family == "holder_blowup" {
                trace.points.windows(2).all(|w| w[1].ratio > w[0].ratio)
                    && trace.points.iter().all(|pt| pt.gap >= -tol)
            } else {
                flat || (trace.points.iter().all(|pt| pt.gap > 0.0)
                    && trace.points.windows(2).all(|w| w[1].gap < w[0].gap))
            };
            let final_gap = trace.points.last().map(|pt| pt.gap).unwrap_or(f64::NAN);
            let csv = trace_csv(&trace);
            let payload = TracePayload {
                trace,
                pass,
                final_gap,
            };
            let manifest = RunManifest::new("sharpness")
                .param("family", &args.family)
                .param("p", p)
                .param("grid", format!("{grid:?}"))
                .param("b_tail", args.b_tail);
            let manifest = out_path_string(cli)
                .into_iter()
                .fold(manifest, |m, path| m.output(&path));
            emit(cli, &Report::new(manifest, payload), Some(csv))?;
            Ok(if pass { 0 } else { 1 })
        }
        "holder_zero" => {
            if args.n < 2 || args.n % 2 != 0 {
                return Err(usage("holder_zero needs an even --n ≥ 2"));
            }
            let half = args.n / 2;
            let plateau =
                Seq::new((1..=half).rev().map(|k| k as f64).collect()).map_err(lib_failure)?;
            let b = Seq::new((1..=args.n).rev().map(|k| k as f64).collect())
                .map_err(lib_failure)?;
            let (wa, wb) = holder_zero_witness(args.n, &plateau, &b).map_err(lib_failure)?;
            let pq = ConjugateExponents::new(p).map_err(lib_failure)?;
            let report = holder_ratio(&wa, &wb, &pq).map_err(lib_failure)?;
            let pass = report.ratio == 0.0;
            let payload = ZeroWitnessPayload {
                n: args.n,
                p,
                a: wa.values().to_vec(),
                b: wb.values().to_vec(),
                report,
                pass,
            };
            let manifest = RunManifest::new("sharpness")
                .param("family", "holder_zero")
                .param("n", args.n)
                .param("p", p);
            emit(cli, &Report::new(manifest, payload), None)?;
            Ok(if pass { 0 } else { 1 })
        }
        other => Err(usage(format!("unknown family {other}"))),
    }
}

// ---- search ----

#[derive(Serialize)]
struct WitnessPayload {
    a: Vec<f64>,
    b: Vec<f64>,
}

#[derive(Serialize)]
struct SearchPayload {
    functional: &'static str,
    p: f64,
    n: usize,
    direction: &'static str,
    best_value: f64,
    bound: f64,
    gap: f64,
    witness: WitnessPayload,
    restarts: usize,
    evaluations: u64,
    seed: u64,
}

fn cmd_search(cli: &Cli, args: &SearchArgs) -> Result<u8, Failure> {
    let functional = match args.functional.as_str() {
        "holder" => SearchFunctional::Holder,
        "cauchy" => SearchFunctional::Cauchy,
        "minkowski_alt" => SearchFunctional::MinkowskiAlt,
        "reverse_minkowski" => SearchFunctional::ReverseMinkowski,
        "power_ratio" => SearchFunctional::PowerRatio,
        other => return Err(usage(format!("unknown search functional {other}"))),
    };
    let p = parse_real(&args.p)?;
    let mut config = SearchConfig::new(functional, args.n, p, cli.seed);
    config.direction = match args.direction {
        DirectionArg::Maximize => SearchDirection::Maximize,
        DirectionArg::Minimize => SearchDirection::Minimize,
    };
    config.restarts = args.restarts;
    config.power_exponents = (args.r, args.big_r);
    if let Some(bx) = &args.box_a {
        config.box_a = parse_pair(bx, ',')?;
    }
    if let Some(bx) = &args.box_b {
        config.box_b = parse_pair(bx, ',')?;
    }
    if let Some(s) = args.step_init {
        config.step_init = s;
    }
    if let Some(s) = args.step_min {
        config.step_min = s;
    }
    let result = search(&config).map_err(lib_failure)?;
    let tol = tol_cmp_with(result.bound, cli.tol.unwrap_or(TOL_REL));
    let violation = result.best_value > result.bound + tol;
    let payload = SearchPayload {
        functional: functional.as_str(),
        p,
        n: args.n,
        direction: match config.direction {
            SearchDirection::Maximize => "maximize",
            SearchDirection::Minimize => "minimize",
        },
        best_value: result.best_value,
        bound: result.bound,
        gap: result.gap,
        witness: WitnessPayload {
            a: result.witness_a.values().to_vec(),
            b: result
                .witness_b
                .as_ref()
                .map(|w| w.values().to_vec())
                .unwrap_or_default(),
        },
        restarts: config.restarts,
        evaluations: result.evaluations,
        seed: cli.seed,
    };
    let manifest = RunManifest::new("search")
        .param("functional", functional.as_str())
        .param("p", p)
        .param("n", args.n)
        .param("restarts", args.restarts)
        .param("box_a", format!("{:?}", config.box_a))
        .param("box_b", format!("{:?}", config.box_b))
        .seed(cli.seed);
    let manifest = out_path_string(cli)
        .into_iter()
        .fold(manifest, |m, path| m.output(&path));
    emit(cli, &Report::new(manifest, payload), None)?;
    Ok(if violation { 1 } else { 0 })
}

// ---- series ----

#[derive(Serialize)]
struct ZetaPayload {
    s: f64,
    value: f64,
    propagated_tol: f64,
}

#[derive(Serialize)]
struct CheckPayload {
    report: RatioReport,
    violations: u64,
    equality: bool,
    equality_locus: &'static str,
}

#[derive(Serialize)]
struct ScanPayload {
    max_f: f64,
    argmax_alpha: Option<f64>,
    argmax_beta: Option<f64>,
    argmax_p: Option<f64>,
    violations: usize,
    equality_points: usize,
    points: usize,
}

fn cmd_series(cli: &Cli, args: &SeriesArgs) -> Result<u8, Failure> {
    let map_series = |e: LibError| Failure::Degenerate(e.to_string());
    let tol = cli.tol.unwrap_or(DEFAULT_TOL).max(MIN_TOL);
    match args.mode.as_str() {
        "eta" => {
            let s = require(args.s, "s")?;
            let result = eta(s, tol).map_err(map_series)?;
            let manifest = RunManifest::new("series")
                .param("mode", "eta")
                .param("s", s)
                .param("tol", tol);
            emit(cli, &Report::new(manifest, result), None)?;
            Ok(0)
        }
        "zeta" => {
            let s = require(args.s, "s")?;
            let value = zeta_from_eta(s, tol).map_err(map_series)?;
            let payload = ZetaPayload {
                s,
                value,
                propagated_tol: tol / (1.0 - 2.0f64.powf(1.0 - s)).abs(),
            };
            let manifest = RunManifest::new("series")
                .param("mode", "zeta")
                .param("s", s)
                .param("tol", tol);
            emit(cli, &Report::new(manifest, payload), None)?;
            Ok(0)
        }
        "f_scan" => {
            let grid = parse_grid_spec(&require(args.grid.clone(), "grid")?)?;
            let ps = match &args.p {
                Some(p) => parse_list(p)?,
                None => vec![1.5, 2.0, 3.0],
            };
            let scan = f_scan(&grid, &grid, &ps).map_err(map_series)?;
            let mut csv = String::from("alpha,beta,p,F,slack\n");
            for pt in &scan.points {
                csv.push_str(&csv_row(&[pt.alpha, pt.beta, pt.p, pt.f, pt.slack]));
                csv.push('\n');
            }
            let payload = ScanPayload {
                max_f: scan.max_f,
                argmax_alpha: scan.argmax.map(|pt| pt.alpha),
                argmax_beta: scan.argmax.map(|pt| pt.beta),
                argmax_p: scan.argmax.map(|pt| pt.p),
                violations: scan.violations,
                equality_points: scan.equality_points.len(),
                points: scan.points.len(),
            };
            let violations = scan.violations;
            let manifest = RunManifest::new("series")
                .param("mode", "f_scan")
                .param("grid", format!("{:?}", grid))
                .param("p_list", format!("{ps:?}"));
            let manifest = out_path_string(cli)
                .into_iter()
                .fold(manifest, |m, path| m.output(&path));
            emit(cli, &Report::new(manifest, payload), Some(csv))?;
            Ok(if violations > 0 { 1 } else { 0 })
        }
        "harmonic" => {
            let alpha = require(args.alpha, "alpha")?;
            let beta = require(args.beta, "beta")?;
            let p = parse_real(&require(args.p.clone(), "p")?)?;
            let pq = ConjugateExponents::new(p).map_err(map_series)?;
            let report = harmonic_ineq_check(alpha, beta, &pq, tol).map_err(map_series)?;
            let payload = CheckPayload {
                report,
                violations: u64::from(!report.holds),
                equality: report.equality,
                equality_locus: "q*alpha = p*beta",
            };
            let manifest = RunManifest::new("series")
                .param("mode", "harmonic")
                .param("alpha", alpha)
                .param("beta", beta)
                .param("p", p);
            emit(cli, &Report::new(manifest, payload), None)?;
            Ok(if report.holds { 0 } else { 1 })
        }
        "geometric" => {
            let a = require(args.a, "a")?;
            let b = require(args.b, "b")?;
            let p = parse_real(&require(args.p.clone(), "p")?)?;
            let pq = ConjugateExponents::new(p).map_err(map_series)?;
            let report = geometric_ineq_check(a, b, &pq).map_err(map_series)?;
            let payload = CheckPayload {
                report,
                violations: u64::from(!report.holds),
                equality: report.equality,
                equality_locus: "a^q = b^p",
            };
            let manifest = RunManifest::new("series")
                .param("mode", "geometric")
                .param("a", a)
                .param("b", b)
                .param("p", p);
            emit(cli, &Report::new(manifest, payload), None)?;
            Ok(if report.holds { 0 } else { 1 })
        }
        other => Err(usage(format!("unknown series mode {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse_exactly() {
        assert_eq!(parse_real("3/2").unwrap(), 1.5);
        assert_eq!(parse_real("2").unwrap(), 2.0);
        assert!(parse_real("x").is_err());
        assert!(parse_real("1/0").is_err());
    }

    #[test]
    fn grid_spec_parses() {
        let g = parse_grid_spec("0.25:1:0.25").unwrap();
        assert_eq!(g, vec![0.25, 0.5, 0.75, 1.0]);
        assert!(parse_grid_spec("1:0:0.25").is_err());
    }
}
