//! The `umbral-mix` command line: family tables and verification sweeps.
//!
//! Both subcommands stream one record per line to stdout, as JSON objects or
//! CSV rows; diagnostics go to stderr. Rationals are always rendered as
//! canonical `p/q` strings (plain `p` for integers), never as floats, and
//! polynomial payloads are dense ascending-power arrays so that index equals
//! power. Exit codes: 0 all good, 1 at least one identity check failed,
//! 2 usage or parameter error.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::families::{
    barnes_sequence, bernoulli_numbers, frobenius_euler_sequence, higher_bernoulli_sequence,
    mixed_sequence, poly_bernoulli_sequence, stirling2_row, BarnesParams, MixedFamilyKey,
};
use crate::identities::{run_suite, Grid, IdentityReport, Side, Suite};
use crate::poly::Polynomial;
use crate::rational::{parse_rational, Rational};

#[derive(Parser)]
#[command(
    name = "umbral-mix",
    version,
    about = "Exact tables and identity checks for Barnes multiple Bernoulli / poly-Bernoulli mixed-type polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of family polynomials or numbers
    Table(TableArgs),
    /// Verify identity suites over a parameter grid
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Mixed,
    PolyBernoulli,
    Barnes,
    FrobeniusEuler,
    HigherBernoulli,
    BernoulliNumbers,
    Stirling2,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Mixed => "mixed",
            Family::PolyBernoulli => "poly-bernoulli",
            Family::Barnes => "barnes",
            Family::FrobeniusEuler => "frobenius-euler",
            Family::HigherBernoulli => "higher-bernoulli",
            Family::BernoulliNumbers => "bernoulli-numbers",
            Family::Stirling2 => "stirling2",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    /// Family to tabulate
    #[arg(long, value_enum)]
    family: Family,
    /// Degree range, inclusive: `0..8`, or a single degree
    #[arg(long, default_value = "0..8")]
    n: String,
    /// Barnes parameters as comma-separated rationals, e.g. `1,2` or `1/2,3`
    #[arg(long)]
    a: Option<String>,
    /// Number of Barnes parameters; must match the length of --a
    #[arg(long)]
    r: Option<usize>,
    /// Polylogarithm order (any sign)
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// Basis order for frobenius-euler / higher-bernoulli
    #[arg(long)]
    s: Option<usize>,
    /// Frobenius-Euler parameter, a rational different from 1
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity suite: all, t1, t2, ... t9
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// Highest degree to check
    #[arg(long)]
    max_n: Option<usize>,
    /// Numbers of Barnes parameters, e.g. `1,2,3`
    #[arg(long)]
    r_list: Option<String>,
    /// Polylogarithm orders, e.g. `-2,-1,0,1`
    #[arg(long, allow_hyphen_values = true)]
    k_list: Option<String>,
    /// Candidate parameter vectors, `|`-separated: `1|1,2|1/2,3`
    #[arg(long)]
    a_sets: Option<String>,
    /// Basis orders for the t8/t9 expansions
    #[arg(long)]
    s_list: Option<String>,
    /// Frobenius-Euler parameters (rationals different from 1)
    #[arg(long, allow_hyphen_values = true)]
    lambda_list: Option<String>,
    /// Worker pool size; 1 runs inline, 0 sizes the pool automatically.
    /// The UMBRAL_MIX_JOBS environment variable overrides this flag.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Parse arguments and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Table(args) => match table_records(&args) {
            Ok(records) => {
                emit_table(&records, args.format);
                0
            }
            Err(msg) => {
                eprintln!("umbral-mix: {msg}");
                2
            }
        },
        Command::Verify(args) => run_verify(&args),
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum Payload {
    Scalar(String),
    Coeffs(Vec<String>),
}

impl Payload {
    fn poly(p: &Polynomial) -> Payload {
        if p.is_zero() {
            return Payload::Coeffs(vec!["0".to_string()]);
        }
        Payload::Coeffs(p.coeffs().iter().map(Rational::to_string).collect())
    }

    fn row(values: &[Rational]) -> Payload {
        Payload::Coeffs(values.iter().map(Rational::to_string).collect())
    }

    fn csv_cell(&self) -> String {
        match self {
            Payload::Scalar(s) => s.clone(),
            Payload::Coeffs(v) => v.join(";"),
        }
    }
}

#[derive(Debug, Serialize)]
struct TableRecord {
    family: String,
    params: BTreeMap<String, String>,
    payload: Payload,
}

#[derive(Serialize)]
struct DiffRecord {
    index: usize,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct VerifyRecord {
    theorem_id: String,
    params: BTreeMap<String, String>,
    equal: bool,
    lhs: Payload,
    rhs: Payload,
    first_diff: Option<DiffRecord>,
}

fn parse_degree_range(spec: &str) -> Result<(usize, usize), String> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid degree `{s}`"))
    };
    let (lo, hi) = match spec.split_once("..") {
        Some((lo, hi)) => (parse_one(lo)?, parse_one(hi)?),
        None => {
            let n = parse_one(spec)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty degree range `{spec}`"));
    }
    Ok((lo, hi))
}

fn parse_rational_list(spec: &str) -> Result<Vec<Rational>, String> {
    spec.split(',').map(parse_rational).collect()
}

fn parse_int_list<T: std::str::FromStr>(spec: &str, what: &str) -> Result<Vec<T>, String> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|_| format!("invalid {what} `{s}`"))
        })
        .collect()
}

/// Generous sanity bound on polylogarithm orders; beyond it the integer
/// multipliers m^|k| stop being meaningful to tabulate.
const MAX_ABS_K: i64 = 300;

fn check_k(k: i64) -> Result<i64, String> {
    if k.abs() > MAX_ABS_K {
        return Err(format!("|k| must be at most {MAX_ABS_K}, got {k}"));
    }
    Ok(k)
}

fn barnes_params(args: &TableArgs) -> Result<BarnesParams, String> {
    let spec = args
        .a
        .as_deref()
        .ok_or_else(|| format!("--a is required for --family {}", args.family.name()))?;
    let a = parse_rational_list(spec)?;
    if let Some(r) = args.r {
        if r != a.len() {
            return Err(format!(
                "--r {} does not match the {} parameters in --a",
                r,
                a.len()
            ));
        }
    }
    BarnesParams::new(a).map_err(|e| e.to_string())
}

fn table_records(args: &TableArgs) -> Result<Vec<TableRecord>, String> {
    let (lo, hi) = parse_degree_range(&args.n)?;
    let family = args.family;
    let mut shared = BTreeMap::new();
    let polys: Vec<Polynomial>;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut scalars: Vec<Rational> = Vec::new();

    match family {
        Family::Mixed => {
            let params = barnes_params(args)?;
            let k = check_k(args.k.ok_or("--k is required for --family mixed")?)?;
            shared.insert("a".into(), join_rationals(params.a()));
            shared.insert("r".into(), params.r().to_string());
            shared.insert("k".into(), k.to_string());
            polys = mixed_sequence(hi, &MixedFamilyKey::new(params, k));
        }
        Family::PolyBernoulli => {
            let k = check_k(
                args.k
                    .ok_or("--k is required for --family poly-bernoulli")?,
            )?;
            shared.insert("k".into(), k.to_string());
            polys = poly_bernoulli_sequence(hi, k);
        }
        Family::Barnes => {
            let params = barnes_params(args)?;
            shared.insert("a".into(), join_rationals(params.a()));
            polys = barnes_sequence(hi, &params);
        }
        Family::FrobeniusEuler => {
            let s = args
                .s
                .ok_or("--s is required for --family frobenius-euler")?;
            let lambda = parse_rational(
                args.lambda
                    .as_deref()
                    .ok_or("--lambda is required for --family frobenius-euler")?,
            )?;
            shared.insert("s".into(), s.to_string());
            shared.insert("lambda".into(), lambda.to_string());
            polys = frobenius_euler_sequence(hi, s, &lambda).map_err(|e| e.to_string())?;
        }
        Family::HigherBernoulli => {
            let s = args
                .s
                .ok_or("--s is required for --family higher-bernoulli")?;
            shared.insert("s".into(), s.to_string());
            polys = higher_bernoulli_sequence(hi, s);
        }
        Family::BernoulliNumbers => {
            scalars = bernoulli_numbers(hi);
            polys = Vec::new();
        }
        Family::Stirling2 => {
            rows = (0..=hi).map(stirling2_row).collect();
            polys = Vec::new();
        }
    }

    let mut records = Vec::with_capacity(hi - lo + 1);
    for n in lo..=hi {
        let mut params = shared.clone();
        params.insert("n".into(), n.to_string());
        let payload = match family {
            Family::BernoulliNumbers => Payload::Scalar(scalars[n].to_string()),
            Family::Stirling2 => Payload::row(&rows[n]),
            _ => Payload::poly(&polys[n]),
        };
        records.push(TableRecord {
            family: family.name().to_string(),
            params,
            payload,
        });
    }
    Ok(records)
}

fn join_rationals(values: &[Rational]) -> String {
    values
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn params_cell(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn emit_table(records: &[TableRecord], format: Format) {
    let stdout = std::io::stdout().lock();
    match format {
        Format::Json => {
            let mut out = stdout;
            for record in records {
                serde_json::to_writer(&mut out, record).expect("table record serializes");
                writeln!(out).expect("stdout writable");
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(["family", "params", "payload"]).unwrap();
            for record in records {
                w.write_record([
                    record.family.as_str(),
                    &params_cell(&record.params),
                    &record.payload.csv_cell(),
                ])
                .unwrap();
            }
            w.flush().unwrap();
        }
    }
}

fn verify_record(report: &IdentityReport) -> VerifyRecord {
    let mut params = BTreeMap::new();
    let p = &report.params;
    params.insert("n".into(), p.n.to_string());
    params.insert("r".into(), p.r.to_string());
    params.insert("k".into(), p.k.to_string());
    params.insert("a".into(), join_rationals(&p.a));
    if let Some(y) = &p.y {
        params.insert("y".into(), y.to_string());
    }
    if let Some(s) = p.s {
        params.insert("s".into(), s.to_string());
    }
    if let Some(lambda) = &p.lambda {
        params.insert("lambda".into(), lambda.to_string());
    }
    let side = |s: &Side| match s {
        Side::Poly(p) => Payload::poly(p),
        Side::Scalar(x) => Payload::Scalar(x.to_string()),
    };
    VerifyRecord {
        theorem_id: report.id.to_string(),
        params,
        equal: report.equal,
        lhs: side(&report.lhs),
        rhs: side(&report.rhs),
        first_diff: report.first_diff.as_ref().map(|d| DiffRecord {
            index: d.index,
            lhs: d.lhs.to_string(),
            rhs: d.rhs.to_string(),
        }),
    }
}

fn apply_grid_overrides(grid: &mut Grid, args: &VerifyArgs) -> Result<(), String> {
    if let Some(max_n) = args.max_n {
        grid.max_n = max_n;
    }
    if let Some(spec) = &args.r_list {
        grid.r_values = parse_int_list(spec, "r value")?;
    }
    if let Some(spec) = &args.k_list {
        grid.k_values = parse_int_list(spec, "k value")?
            .into_iter()
            .map(check_k)
            .collect::<Result<_, _>>()?;
    }
    if let Some(spec) = &args.a_sets {
        grid.a_sets = spec
            .split('|')
            .map(parse_rational_list)
            .collect::<Result<_, _>>()?;
    }
    if let Some(spec) = &args.s_list {
        grid.s_values = parse_int_list(spec, "s value")?;
    }
    if let Some(spec) = &args.lambda_list {
        grid.lambda_values = parse_rational_list(spec)?;
    }
    Ok(())
}

fn jobs_from_env(flag: usize) -> Result<usize, String> {
    match std::env::var("UMBRAL_MIX_JOBS") {
        Ok(value) => value
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid UMBRAL_MIX_JOBS value `{value}`")),
        Err(_) => Ok(flag),
    }
}

fn run_verify(args: &VerifyArgs) -> i32 {
    let mut grid = Grid::default();
    if let Err(msg) = apply_grid_overrides(&mut grid, args) {
        eprintln!("umbral-mix: {msg}");
        return 2;
    }
    let jobs = match jobs_from_env(args.jobs) {
        Ok(jobs) => jobs,
        Err(msg) => {
            eprintln!("umbral-mix: {msg}");
            return 2;
        }
    };
    let reports = match run_suite(args.suite, &grid, jobs) {
        Ok(reports) => reports,
        Err(e) => {
            eprintln!("umbral-mix: {e}");
            return 2;
        }
    };

    let stdout = std::io::stdout().lock();
    match args.format {
        Format::Json => {
            let mut out = stdout;
            for report in &reports {
                serde_json::to_writer(&mut out, &verify_record(report))
                    .expect("verify record serializes");
                writeln!(out).expect("stdout writable");
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(["theorem_id", "params", "equal", "lhs", "rhs", "first_diff"])
                .unwrap();
            for report in &reports {
                let record = verify_record(report);
                let diff = record
                    .first_diff
                    .as_ref()
                    .map(|d| format!("index={};lhs={};rhs={}", d.index, d.lhs, d.rhs))
                    .unwrap_or_default();
                w.write_record([
                    record.theorem_id.as_str(),
                    &params_cell(&record.params),
                    if record.equal { "true" } else { "false" },
                    &record.lhs.csv_cell(),
                    &record.rhs.csv_cell(),
                    &diff,
                ])
                .unwrap();
            }
            w.flush().unwrap();
        }
    }

    let failures = reports.iter().filter(|r| !r.equal).count();
    eprintln!(
        "verify: suite {} over {} checks, {} passed, {} failed",
        args.suite_name(),
        reports.len(),
        reports.len() - failures,
        failures
    );
    if failures > 0 {
        1
    } else {
        0
    }
}

impl VerifyArgs {
    fn suite_name(&self) -> String {
        format!("{:?}", self.suite).to_ascii_lowercase()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_ranges() {
        assert_eq!(parse_degree_range("0..4").unwrap(), (0, 4));
        assert_eq!(parse_degree_range("3").unwrap(), (3, 3));
        assert!(parse_degree_range("4..1").is_err());
        assert!(parse_degree_range("x..2").is_err());
    }

    #[test]
    fn barnes_table_matches_classical_bernoulli() {
        let args = TableArgs {
            family: Family::Barnes,
            n: "0..2".into(),
            a: Some("1".into()),
            r: None,
            k: None,
            s: None,
            lambda: None,
            format: Format::Json,
        };
        let records = table_records(&args).unwrap();
        let payloads: Vec<String> = records
            .iter()
            .map(|r| serde_json::to_string(&r.payload).unwrap())
            .collect();
        assert_eq!(
            payloads,
            vec![r#"["1"]"#, r#"["-1/2","1"]"#, r#"["1/6","-1","1"]"#,]
        );
    }

    #[test]
    fn stirling_table_rows() {
        let args = TableArgs {
            family: Family::Stirling2,
            n: "0..4".into(),
            a: None,
            r: None,
            k: None,
            s: None,
            lambda: None,
            format: Format::Json,
        };
        let records = table_records(&args).unwrap();
        assert_eq!(
            serde_json::to_string(&records[4].payload).unwrap(),
            r#"["0","1","7","6","1"]"#
        );
    }

    #[test]
    fn mixed_table_constant() {
        let args = TableArgs {
            family: Family::Mixed,
            n: "0".into(),
            a: Some("1,2".into()),
            r: Some(2),
            k: Some(1),
            s: None,
            lambda: None,
            format: Format::Json,
        };
        let records = table_records(&args).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(
            serde_json::to_string(&records[0]).unwrap(),
            r#"{"family":"mixed","params":{"a":"1,2","k":"1","n":"0","r":"2"},"payload":["1/2"]}"#
        );
    }

    #[test]
    fn table_rejects_bad_params() {
        let args = TableArgs {
            family: Family::Barnes,
            n: "0..2".into(),
            a: Some("1,0".into()),
            r: None,
            k: None,
            s: None,
            lambda: None,
            format: Format::Json,
        };
        assert!(table_records(&args).unwrap_err().contains("nonzero"));

        let args = TableArgs {
            family: Family::FrobeniusEuler,
            n: "0..2".into(),
            a: None,
            r: None,
            k: None,
            s: Some(1),
            lambda: Some("1".into()),
            format: Format::Json,
        };
        assert!(table_records(&args).unwrap_err().contains("lambda"));

        let args = TableArgs {
            family: Family::Mixed,
            n: "0..2".into(),
            a: Some("1,2".into()),
            r: Some(3),
            k: Some(0),
            s: None,
            lambda: None,
            format: Format::Json,
        };
        assert!(table_records(&args).unwrap_err().contains("--r"));
    }
}
