use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mecsbox::analysis::round4;
use mecsbox::formats::{self, TableFormat};
use mecsbox::modmath;
use mecsbox::ordering::OrderingKind;
use mecsbox::sbox::{self, SBox};
use mecsbox::stats;
use mecsbox::{AnalysisReport, CurveParams};

/// Build 8-bit S-boxes from Mordell curves over prime fields and measure
/// their cryptographic strength.
#[derive(Parser)]
#[command(name = "mecsbox", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one S-box and write it in grid, json or bin format
    Generate {
        #[command(flatten)]
        curve: CurveArgs,
        /// Output format
        #[arg(long, default_value = "grid")]
        format: String,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the full metric report for a table
    Analyze {
        /// Read the table from a file (grid, json or bin, auto-detected)
        #[arg(long = "in", conflicts_with_all = ["prime", "b", "ordering"])]
        input: Option<PathBuf>,
        /// Force the input format instead of auto-detecting
        #[arg(long, requires = "input")]
        format: Option<String>,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        ordering: Option<String>,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Generate and report metrics for a range of b values, one line per b
    Batch {
        /// Curve prime, at least 257 and congruent to 2 mod 3
        #[arg(long)]
        prime: u64,
        /// Ordering code: N, D or M
        #[arg(long)]
        ordering: String,
        /// Inclusive range of coefficients, e.g. 1..256
        #[arg(long = "b-range")]
        b_range: String,
        /// Comma-separated subset of nl,lap,dap,sac,bic,ac
        #[arg(long)]
        metrics: Option<String>,
    },
    /// Count distinct tables over b in [1, p-1] for one ordering
    CountDistinct {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        ordering: String,
    },
    /// Pearson correlations between the three y-coordinate arrangements
    Correlate {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        b: u64,
    },
    /// Time both generation routes over a list of primes
    Bench {
        /// Comma-separated primes
        #[arg(long, default_value = "257,521,1013,2027,3299,4229")]
        primes: String,
        #[arg(long, default_value = "N")]
        ordering: String,
        /// Timing repetitions per prime; the minimum is reported
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

#[derive(Args)]
struct CurveArgs {
    /// Curve prime, at least 257 and congruent to 2 mod 3
    #[arg(long)]
    prime: u64,
    /// Curve coefficient in [0, p-1]
    #[arg(long)]
    b: u64,
    /// Ordering code: N, D or M
    #[arg(long)]
    ordering: String,
}

enum CliError {
    /// invalid parameters -> exit 2
    Param(String),
    /// unreadable or malformed table input -> exit 3
    Input(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Param(_) => 2,
            CliError::Input(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Param(m) | CliError::Input(m) => m,
        }
    }
}

fn param(msg: impl Into<String>) -> CliError {
    CliError::Param(msg.into())
}

/// Validation order: primality, then the 257 size floor, then the residue
/// class, then the coefficient range.
fn sbox_curve(p: u64, b: u64) -> Result<CurveParams, CliError> {
    if !modmath::is_prime(p) {
        return Err(param(format!("{p} is not prime")));
    }
    if p < 257 {
        return Err(param(format!(
            "prime {p} is below 257, too small to select 256 points"
        )));
    }
    CurveParams::from_raw(p, b).map_err(|e| param(e.to_string()))
}

fn parse_ordering(code: &str) -> Result<OrderingKind, CliError> {
    code.parse::<OrderingKind>().map_err(param)
}

fn parse_format(code: &str) -> Result<TableFormat, CliError> {
    code.parse::<TableFormat>().map_err(param)
}

fn emit(bytes: &[u8], out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| param(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| param(format!("cannot write to stdout: {e}")))
        }
    }
}

fn cmd_generate(curve: CurveArgs, format: String, out: Option<PathBuf>) -> Result<(), CliError> {
    let params = sbox_curve(curve.prime, curve.b)?;
    let kind = parse_ordering(&curve.ordering)?;
    let format = parse_format(&format)?;
    let s = sbox::generate(params, kind).map_err(|e| param(e.to_string()))?;
    match format {
        TableFormat::Grid => emit(formats::write_grid(&s).as_bytes(), out.as_ref()),
        TableFormat::Json => {
            let mut text = formats::write_json(&s);
            text.push('\n');
            emit(text.as_bytes(), out.as_ref())
        }
        TableFormat::Bin => emit(&formats::write_bin(&s), out.as_ref()),
    }
}

fn load_table(path: &PathBuf, format: Option<&str>) -> Result<SBox, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let parsed = match format {
        Some(code) => formats::parse_as(&bytes, parse_format(code)?),
        None => formats::parse_auto(&bytes),
    };
    parsed.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn cmd_analyze(
    input: Option<PathBuf>,
    format: Option<String>,
    prime: Option<u64>,
    b: Option<u64>,
    ordering: Option<String>,
    json: bool,
) -> Result<(), CliError> {
    let s = match (input, prime, b, ordering) {
        (Some(path), None, None, None) => load_table(&path, format.as_deref())?,
        (None, Some(p), Some(b), Some(code)) => {
            let params = sbox_curve(p, b)?;
            let kind = parse_ordering(&code)?;
            sbox::generate(params, kind).map_err(|e| param(e.to_string()))?
        }
        _ => {
            return Err(param(
                "pass either --in FILE or all of --prime/--b/--ordering",
            ))
        }
    };
    let report = AnalysisReport::analyze(&s);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn parse_b_range(text: &str) -> Result<(u64, u64), CliError> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| param(format!("bad range {text:?}, expected LO..HI")))?;
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|_| param(format!("bad range start {lo:?}")))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|_| param(format!("bad range end {hi:?}")))?;
    Ok((lo, hi))
}

fn cmd_batch(
    p: u64,
    ordering: String,
    b_range: String,
    metrics: Option<String>,
) -> Result<(), CliError> {
    let kind = parse_ordering(&ordering)?;
    let (lo, hi) = parse_b_range(&b_range)?;
    let all = ["nl", "lap", "dap", "sac", "bic", "ac"];
    let selected: Vec<&str> = match &metrics {
        Some(list) => {
            let mut out = Vec::new();
            for name in list.split(',') {
                let name = name.trim();
                match all.iter().find(|&&a| a == name) {
                    Some(&known) => out.push(known),
                    None => {
                        return Err(param(format!(
                            "unknown metric {name:?}, expected any of nl,lap,dap,sac,bic,ac"
                        )))
                    }
                }
            }
            out
        }
        None => all.to_vec(),
    };
    if lo > hi {
        return Ok(()); // empty range: zero lines
    }
    let prime = sbox_curve(p, 0)?.prime();
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    for b in lo..=hi {
        let params = CurveParams::new(prime, b).map_err(|e| param(e.to_string()))?;
        let s = sbox::generate(params, kind).map_err(|e| param(e.to_string()))?;
        let r = AnalysisReport::analyze(&s);
        let mut line = format!("p={p} b={b} ordering={kind} bijective={}", r.bijective);
        for m in &selected {
            match *m {
                "nl" => line.push_str(&format!(" nl={}", r.nonlinearity)),
                "lap" => line.push_str(&format!(" lap={}", r.lap.rendered)),
                "dap" => line.push_str(&format!(" dap={}", r.dap.rendered)),
                "sac" => line.push_str(&format!(
                    " sac_max={} sac_min={}",
                    r.sac_max.rendered, r.sac_min.rendered
                )),
                "bic" => line.push_str(&format!(
                    " bic_max={} bic_min={}",
                    r.bic_max.rendered, r.bic_min.rendered
                )),
                "ac" => line.push_str(&format!(" ac={}", r.algebraic_complexity)),
                _ => unreachable!(),
            }
        }
        writeln!(w, "{line}").map_err(|e| param(format!("stdout: {e}")))?;
    }
    Ok(())
}

fn cmd_count_distinct(p: u64, ordering: String) -> Result<(), CliError> {
    let kind = parse_ordering(&ordering)?;
    let prime = sbox_curve(p, 0)?.prime();
    let count = stats::count_distinct_sboxes(prime, kind).map_err(|e| param(e.to_string()))?;
    println!("{count}");
    Ok(())
}

fn cmd_correlate(p: u64, b: u64) -> Result<(), CliError> {
    // correlation runs on whole curves; the 257 floor does not apply
    let params = CurveParams::from_raw(p, b).map_err(|e| param(e.to_string()))?;
    let r = stats::correlation_record(params);
    let self_rho = stats::correlation(params, OrderingKind::Natural, OrderingKind::Natural);
    println!("p={p} b={b}");
    println!("rho_NN={:.4}", round4(self_rho));
    println!("rho_ND={:.4}", round4(r.rho_nd));
    println!("rho_NM={:.4}", round4(r.rho_nm));
    println!("rho_DM={:.4}", round4(r.rho_dm));
    Ok(())
}

fn cmd_bench(primes: String, ordering: String, reps: usize) -> Result<(), CliError> {
    let kind = parse_ordering(&ordering)?;
    let mut list = Vec::new();
    for tok in primes.split(',') {
        let p: u64 = tok
            .trim()
            .parse()
            .map_err(|_| param(format!("bad prime {tok:?}")))?;
        list.push(sbox_curve(p, 1)?.prime());
    }
    let records =
        stats::benchmark_generation(&list, kind, reps).map_err(|e| param(e.to_string()))?;
    println!(
        "{:>8} {:>14} {:>14} {:>12}",
        "p", "loop_us", "cube_root_us", "peak_points"
    );
    for r in &records {
        println!(
            "{:>8} {:>14} {:>14} {:>12}",
            r.p,
            r.loop_time.as_micros(),
            r.fast_time.as_micros(),
            r.peak_points_stored
        );
    }
    if records.len() >= 2 {
        let exponent = stats::fit_time_exponent(&records);
        println!("loop time growth exponent: {exponent:.3}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate { curve, format, out } => cmd_generate(curve, format, out),
        Command::Analyze {
            input,
            format,
            prime,
            b,
            ordering,
            json,
        } => cmd_analyze(input, format, prime, b, ordering, json),
        Command::Batch {
            prime,
            ordering,
            b_range,
            metrics,
        } => cmd_batch(prime, ordering, b_range, metrics),
        Command::CountDistinct { prime, ordering } => cmd_count_distinct(prime, ordering),
        Command::Correlate { prime, b } => cmd_correlate(prime, b),
        Command::Bench {
            primes,
            ordering,
            reps,
        } => cmd_bench(primes, ordering, reps),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}
