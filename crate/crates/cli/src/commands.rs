//! Argument definitions and the four batch commands.

use std::collections::BTreeMap;
use std::str::FromStr;

use arithcorr::arith::{arithmetic_autocorr, distribution};
use arithcorr::blocks::autocorr_via_blocks;
use arithcorr::closedform::{predict_acorr, predict_distribution};
use arithcorr::gf2m::{FieldContext, Polynomial, BUILTIN_MAX_DEGREE, MIN_DEGREE};
use arithcorr::sequences::{m_sequence, BinarySequence};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::polytable::{resolve, PolyTable};
use crate::report::{self, RouteRow};
use crate::{Output, UsageError, EXIT_MISMATCH, EXIT_OK};

#[derive(Debug, Parser)]
#[command(
    name = "arithcorr",
    version,
    about = "Arithmetic autocorrelation of binary m-sequences"
)]
pub struct Cli {
    /// Emit one JSON document instead of CSV.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for per-shift work; output order does not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Prefix CSV output with a column header line.
    #[arg(long, global = true)]
    pub header: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one period of the m-sequence.
    Gen(GenArgs),
    /// Arithmetic autocorrelation at one shift or all shifts.
    Acorr(AcorrArgs),
    /// Value distribution over all nonzero shifts.
    Dist(DistArgs),
    /// Run every cross-check over a range of degrees.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Field degree.
    #[arg(long)]
    pub m: u32,

    /// Primitive polynomial as a hex mask (0xb) or exponent list (3,1,0).
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFormat {
    Bits,
    Csv,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub field: FieldArgs,

    #[arg(long, value_enum, default_value = "bits")]
    pub format: GenFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Blocks,
    Closed,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Blocks => "blocks",
            Method::Closed => "closed",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("shifts").required(true).args(["tau", "all"])))]
pub struct AcorrArgs {
    #[command(flatten)]
    pub field: FieldArgs,

    /// Single shift, 1 ≤ τ ≤ n - 1.
    #[arg(long)]
    pub tau: Option<usize>,

    /// Every shift 1..n-1.
    #[arg(long)]
    pub all: bool,

    #[arg(long, value_enum, default_value = "direct")]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[command(flatten)]
    pub field: FieldArgs,

    /// Compare against the predicted distribution and set the exit code.
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolySet {
    /// The first table entry per degree.
    Default,
    /// Every table entry per degree.
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Inclusive degree range `A..B`.
    #[arg(long, default_value = "2..8")]
    pub m_range: String,

    #[arg(long, value_enum, default_value = "default")]
    pub polys: PolySet,
}

/// Inclusive degree range accepted by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRange {
    pub lo: u32,
    pub hi: u32,
}

impl FromStr for DegreeRange {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        let bad = || {
            UsageError(format!("malformed --m-range {s:?}; expected A..B with {MIN_DEGREE} ≤ A ≤ B ≤ {BUILTIN_MAX_DEGREE}"))
        };
        let (lo, hi) = s.trim().split_once("..").ok_or_else(bad)?;
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
        if lo < MIN_DEGREE || lo > hi || hi > BUILTIN_MAX_DEGREE {
            return Err(bad());
        }
        Ok(DegreeRange { lo, hi })
    }
}

struct Field {
    ctx: FieldContext,
    seq: BinarySequence,
}

fn open_field(args: &FieldArgs, table: &PolyTable) -> Result<Field, UsageError> {
    let poly = resolve(args.m, args.poly.as_deref(), table)?;
    let ctx = FieldContext::new(args.m, poly)?;
    let seq = m_sequence(&ctx);
    Ok(Field { ctx, seq })
}

fn with_header(header: bool, columns: &str, body: String) -> String {
    if header {
        format!("{columns}\n{body}")
    } else {
        body
    }
}

/// Runs a parsed command against the given polynomial table.
pub fn run(cli: &Cli, table: &PolyTable) -> Output {
    let result = match &cli.command {
        Command::Gen(args) => gen(cli, args, table),
        Command::Acorr(args) => acorr(cli, args, table),
        Command::Dist(args) => dist(cli, args, table),
        Command::Verify(args) => verify(cli, args, table),
    };
    result.unwrap_or_else(Output::usage)
}

fn gen(cli: &Cli, args: &GenArgs, table: &PolyTable) -> Result<Output, UsageError> {
    let Field { ctx, seq } = open_field(&args.field, table)?;
    let stdout = if cli.json {
        let doc = json!({
            "command": "gen",
            "m": ctx.m(),
            "poly": ctx.modulus().to_string(),
            "period": seq.period(),
            "sequence": seq.to_string(),
        });
        format!("{doc}\n")
    } else {
        match args.format {
            GenFormat::Bits => format!("{seq}\n"),
            GenFormat::Csv => with_header(cli.header, "lambda,bit", seq.to_csv()),
        }
    };
    Ok(Output::ok(stdout))
}

fn single_value(field: &Field, method: Method, tau: usize) -> arithcorr::Result<i64> {
    match method {
        Method::Direct => arithmetic_autocorr(&field.seq, tau),
        Method::Blocks => autocorr_via_blocks(&field.seq, &field.seq.rotate(tau)),
        Method::Closed => predict_acorr(&field.ctx, tau).map(|p| p.predicted),
        Method::All => unreachable!("handled by route rows"),
    }
}

fn acorr(cli: &Cli, args: &AcorrArgs, table: &PolyTable) -> Result<Output, UsageError> {
    use rayon::prelude::*;

    let field = open_field(&args.field, table)?;
    let n = field.seq.period();
    let taus: Vec<usize> = match args.tau {
        Some(tau) if !(1..n).contains(&tau) => {
            return Err(UsageError(format!("--tau {tau} outside 1..={}", n - 1)));
        }
        Some(tau) => vec![tau],
        None => (1..n).collect(),
    };
    let m = field.ctx.m();
    let poly = field.ctx.modulus().to_string();

    if args.method != Method::All {
        let values: Vec<(usize, i64)> = taus
            .par_iter()
            .map(|&tau| single_value(&field, args.method, tau).map(|v| (tau, v)))
            .collect::<arithcorr::Result<_>>()?;
        let stdout = if cli.json {
            let rows: Vec<_> = values
                .iter()
                .map(|&(tau, a)| json!({"tau": tau, "A": a}))
                .collect();
            let doc = json!({
                "command": "acorr",
                "m": m,
                "poly": poly,
                "method": args.method.name(),
                "rows": rows,
            });
            format!("{doc}\n")
        } else {
            let body = values
                .iter()
                .map(|(tau, a)| format!("{tau},{a}\n"))
                .collect();
            with_header(cli.header, "tau,A", body)
        };
        return Ok(Output::ok(stdout));
    }

    let rows: Vec<RouteRow> = taus
        .par_iter()
        .map(|&tau| report::route_row(&field.ctx, &field.seq, tau))
        .collect::<arithcorr::Result<_>>()?;
    let disagreeing: Vec<&RouteRow> = rows.iter().filter(|r| !r.agrees()).collect();
    let status = if disagreeing.is_empty() {
        "pass"
    } else {
        "fail"
    };
    let stdout = if cli.json {
        let doc = json!({
            "command": "acorr",
            "m": m,
            "poly": poly,
            "method": "all",
            "rows": rows,
            "status": status,
        });
        format!("{doc}\n")
    } else {
        let body = rows
            .iter()
            .map(|r| format!("{},{},{},{}\n", r.tau, r.direct, r.blocks, r.closed))
            .collect();
        with_header(cli.header, "tau,direct,blocks,closed", body)
    };
    let stderr: String = disagreeing
        .iter()
        .map(|r| {
            format!(
                "mismatch at tau={}: direct={} blocks={} closed={}\n",
                r.tau, r.direct, r.blocks, r.closed
            )
        })
        .collect();
    Ok(Output {
        stdout,
        stderr,
        code: if disagreeing.is_empty() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    })
}

fn dist(cli: &Cli, args: &DistArgs, table: &PolyTable) -> Result<Output, UsageError> {
    let field = open_field(&args.field, table)?;
    let empirical = distribution(&field.seq)?;
    let matches = empirical == predict_distribution(field.ctx.m());
    let check = args.check.then_some(if matches { "pass" } else { "fail" });
    let stdout = if cli.json {
        let mut doc = json!({
            "command": "dist",
            "m": field.ctx.m(),
            "poly": field.ctx.modulus().to_string(),
            "distribution": empirical.to_json_value(),
        });
        if let Some(check) = check {
            doc["check"] = json!(check);
        }
        format!("{doc}\n")
    } else {
        with_header(cli.header, "value,multiplicity", empirical.to_csv())
    };
    let stderr = check.map(|c| format!("check: {c}\n")).unwrap_or_default();
    let code = if args.check && !matches {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok(Output {
        stdout,
        stderr,
        code,
    })
}

fn verify(cli: &Cli, args: &VerifyArgs, table: &PolyTable) -> Result<Output, UsageError> {
    let range: DegreeRange = args.m_range.parse()?;
    let fields: Vec<(u32, Polynomial)> = (range.lo..=range.hi)
        .flat_map(|m| {
            let polys = match args.polys {
                PolySet::Default => table.default_for(m).into_iter().collect(),
                PolySet::All => table.all_for(m),
            };
            polys.into_iter().map(move |p| (m, p))
        })
        .collect();
    let parameters = BTreeMap::from([
        ("m_range".to_string(), format!("{}..{}", range.lo, range.hi)),
        (
            "polys".to_string(),
            format!("{:?}", args.polys).to_lowercase(),
        ),
    ]);
    let report = report::verify(&fields, parameters);
    let stdout = if cli.json {
        format!("{}\n", report.to_json())
    } else {
        report.to_csv()
    };
    let failed = report
        .results
        .iter()
        .filter(|r| r.status == report::Status::Fail)
        .count();
    let stderr = format!(
        "verify: {} checks over {} fields, {failed} failed, {}\n",
        report.results.len(),
        fields.len(),
        report.status.as_str()
    );
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    Ok(Output {
        stdout,
        stderr,
        code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        let cli =
            Cli::try_parse_from(std::iter::once("arithcorr").chain(args.iter().copied())).unwrap();
        run(&cli, &PolyTable::default())
    }

    #[test]
    fn degree_range_parsing() {
        assert_eq!("2..8".parse(), Ok(DegreeRange { lo: 2, hi: 8 }));
        assert_eq!("5..5".parse(), Ok(DegreeRange { lo: 5, hi: 5 }));
        for bad in ["8..2", "1..4", "2..17", "2-8", "a..b", ""] {
            assert!(bad.parse::<DegreeRange>().is_err(), "{bad}");
        }
    }

    #[test]
    fn gen_formats() {
        assert_eq!(run_args(&["gen", "--m", "3"]).stdout, "1001011\n");
        let csv = run_args(&["gen", "--m", "2", "--format", "csv", "--header"]).stdout;
        assert_eq!(csv, "lambda,bit\n0,0\n1,1\n2,1\n");
    }

    #[test]
    fn acorr_rows() {
        let out = run_args(&["acorr", "--m", "3", "--tau", "5", "--method", "all"]);
        assert_eq!((out.stdout.as_str(), out.code), ("5,3,3,3\n", 0));
        let out = run_args(&["acorr", "--m", "3", "--all"]);
        assert_eq!(out.stdout, "1,-1\n2,-3\n3,1\n4,-1\n5,3\n6,1\n");
        assert_eq!(run_args(&["acorr", "--m", "3", "--tau", "0"]).code, 2);
        assert_eq!(run_args(&["acorr", "--m", "3", "--tau", "7"]).code, 2);
    }

    #[test]
    fn dist_check() {
        let out = run_args(&["dist", "--m", "3", "--check"]);
        assert_eq!(out.stdout, "-3,1\n-1,2\n1,2\n3,1\n");
        assert_eq!((out.stderr.as_str(), out.code), ("check: pass\n", 0));
        let out = run_args(&["--json", "dist", "--m", "3", "--check"]);
        assert!(out
            .stdout
            .contains(r#""distribution":{"-3":1,"-1":2,"1":2,"3":1},"check":"pass""#));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["gen", "--m", "4", "--poly", "3,1,0"]).code, 2);
        assert_eq!(run_args(&["gen", "--m", "4", "--poly", "0x1f"]).code, 2);
        assert_eq!(run_args(&["gen", "--m", "1"]).code, 2);
        assert_eq!(run_args(&["verify", "--m-range", "9..3"]).code, 2);
    }
}
