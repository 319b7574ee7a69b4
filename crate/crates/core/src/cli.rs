//! The `gvspec` command line.
//!
//! Exit codes: 0 success, 1 verification false, 2 usage or parse error, 3 budget refusal.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{ceil, floor, format_rational, BoundReport};
use crate::descent::{run_algorithm1_with_budget, spectrum_at_level};
use crate::error::Error;
use crate::math::{GraphParams, DEFAULT_BUDGET};
use crate::pchk;
use crate::spectrum::build_spectrum_level0;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gvspec",
    version,
    about = "Spectral bounds and constructions for q-ary codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Field size (prime)
    #[arg(short)]
    pub q: u32,
    /// Code length
    #[arg(short)]
    pub n: usize,
    /// Minimum distance, 1..=n+1
    #[arg(short)]
    pub d: usize,
    /// Largest table (in entries) the descent may allocate
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Every bound for one (q, n, d)
    Bounds {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// Eigenvalue table at a descent level, as CSV
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0)]
        level: usize,
    },
    /// Run the descent and write the parity-check matrix
    Construct {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check the minimum distance of a parity-check file
    Verify {
        path: PathBuf,
        /// Required minimum distance
        #[arg(short)]
        d: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Bound table over a parameter grid
    Sweep {
        /// Comma-separated primes, e.g. 2,3
        #[arg(short, value_delimiter = ',', required = true)]
        q: Vec<u32>,
        /// Inclusive range, e.g. 4..10 or 7
        #[arg(short)]
        n: String,
        /// Inclusive range, e.g. 3..5 or 3
        #[arg(short)]
        d: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Invariant { .. } => EXIT_FALSE,
        _ => EXIT_USAGE,
    }
}

fn fail(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    exit_code(e)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => fail(err, &e),
    }
}

fn execute(
    command: Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> crate::error::Result<i32> {
    match command {
        Command::Bounds { params, json } => {
            let p = GraphParams::new(params.q, params.n, params.d)?;
            let report = BoundReport::compute(&p, params.budget)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report_json(&report, None)).unwrap()
                )?;
            } else {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(CSV_COLUMNS)?;
                w.write_record(csv_row(&report, None))?;
                out.write_all(&w.into_inner().map_err(|e| e.into_error())?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Spectrum { params, level } => {
            let p = GraphParams::new(params.q, params.n, params.d)?;
            let mut w = csv::Writer::from_writer(Vec::new());
            if level == 0 {
                w.write_record(["weight", "eigenvalue", "multiplicity"])?;
                for (wt, lambda, mult) in build_spectrum_level0(&p).rows() {
                    w.write_record([wt.to_string(), lambda.to_string(), mult.to_string()])?;
                }
            } else {
                let table = spectrum_at_level(&p, level, params.budget)?;
                w.write_record(["vector", "eigenvalue"])?;
                for (v, lambda) in table.entries() {
                    w.write_record([v.to_string(), lambda.to_string()])?;
                }
            }
            out.write_all(&w.into_inner().map_err(|e| e.into_error())?)?;
            Ok(EXIT_OK)
        }
        Command::Construct { params, output } => {
            let p = GraphParams::new(params.q, params.n, params.d)?;
            let trace = run_algorithm1_with_budget(&p, params.budget)?;
            let code = trace.code()?;
            pchk::write(&output, &code)?;
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&trace.to_json()).unwrap()
            )?;
            let _ = writeln!(
                err,
                "wrote [{}, {}] code with {} parity rows to {}",
                p.n(),
                code.dimension(),
                code.s(),
                output.display()
            );
            Ok(EXIT_OK)
        }
        Command::Verify { path, d, budget } => {
            let code = match pchk::read(&path) {
                Ok(c) => c,
                Err(Error::Io(e)) => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("cannot read {}: {e}", path.display()),
                    })
                }
                Err(e) => return Err(e),
            };
            let dist = code.min_distance(budget)?;
            writeln!(out, "q {}", code.q())?;
            writeln!(out, "n {}", code.n())?;
            writeln!(out, "dimension {}", code.dimension())?;
            writeln!(out, "codewords {}", code.size())?;
            writeln!(out, "min_distance {dist}")?;
            let ok = dist.at_least(d);
            writeln!(out, "expected_d {d} {}", if ok { "ok" } else { "FAILED" })?;
            Ok(if ok { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Sweep {
            q,
            n,
            d,
            output,
            json,
            budget,
        } => {
            let n_range = parse_range(&n)?;
            let d_range = parse_range(&d)?;
            let text = sweep(&q, n_range, d_range, budget, json)?;
            match output {
                Some(path) => write_output(&path, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn write_output(path: &Path, text: &str) -> crate::error::Result<()> {
    pchk::write_atomic(path, text)
        .map_err(|e| Error::InvalidParams(format!("cannot write {}: {e}", path.display())))
}

/// `"a..b"`, `"a-b"` or `"a"`, inclusive. `a > b` is an empty range.
pub fn parse_range(s: &str) -> crate::error::Result<(usize, usize)> {
    let bad = || Error::InvalidParams(format!("bad range {s:?}"));
    let (a, b) = s
        .split_once("..")
        .or_else(|| s.split_once('-'))
        .unwrap_or((s, s));
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| bad())?;
    Ok((a, b))
}

const CSV_COLUMNS: [&str; 21] = [
    "q",
    "n",
    "d",
    "degenerate",
    "skipped",
    "lambda_min",
    "gv",
    "gv_ceil",
    "hoffman_upper",
    "hoffman_upper_floor",
    "hoffman_paper_literal",
    "hoffman_paper_literal_floor",
    "wilf_cor27",
    "wilf_cor27_ceil",
    "descent_bounds",
    "descent_bound_ceil",
    "constructed_code_size",
    "s",
    "asymptotic_rate",
    "pivots_orthogonal",
    "runtime_ms",
];

fn csv_row(r: &BoundReport, runtime_ms: Option<u128>) -> Vec<String> {
    let opt = |x: Option<String>| x.unwrap_or_default();
    vec![
        r.params.q().to_string(),
        r.params.n().to_string(),
        r.params.d().to_string(),
        opt(r.degeneracy.map(|g| g.as_str().to_string())),
        r.trace.is_none().to_string(),
        r.lambda_min.to_string(),
        format_rational(&r.gv),
        ceil(&r.gv).to_string(),
        format_rational(&r.hoffman_upper),
        floor(&r.hoffman_upper).to_string(),
        opt(r.hoffman_plus_form.as_ref().map(format_rational)),
        opt(r.hoffman_plus_form.as_ref().map(|x| floor(x).to_string())),
        format_rational(&r.wilf_cor27),
        ceil(&r.wilf_cor27).to_string(),
        r.descent_bounds
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(";"),
        opt(r.descent_bounds.last().map(|x| ceil(x).to_string())),
        opt(r.constructed_code_size.as_ref().map(|x| x.to_string())),
        opt(r.s.map(|s| s.to_string())),
        opt(r.asymptotic_rate.as_ref().map(|x| x.to_decimal_string())),
        opt(r.trace.as_ref().map(|t| t.pivots_orthogonal().to_string())),
        opt(runtime_ms.map(|x| x.to_string())),
    ]
}

/// JSON form of a report. Rationals are `"p/q"` strings, big integers are strings.
pub fn report_json(r: &BoundReport, runtime_ms: Option<u128>) -> Value {
    let mut v = json!({
        "q": r.params.q(),
        "n": r.params.n(),
        "d": r.params.d(),
        "degenerate": r.degeneracy.map(|g| g.as_str()),
        "skipped": r.trace.is_none(),
        "lambda_min": r.lambda_min.to_string(),
        "gv": format_rational(&r.gv),
        "gv_ceil": ceil(&r.gv).to_string(),
        "hoffman_upper": format_rational(&r.hoffman_upper),
        "hoffman_upper_floor": floor(&r.hoffman_upper).to_string(),
        "hoffman_paper_literal": r.hoffman_plus_form.as_ref().map(format_rational),
        "hoffman_paper_literal_floor": r.hoffman_plus_form.as_ref().map(|x| floor(x).to_string()),
        "wilf_cor27": format_rational(&r.wilf_cor27),
        "wilf_cor27_ceil": ceil(&r.wilf_cor27).to_string(),
        "descent_bounds": r.descent_bounds.iter().map(format_rational).collect::<Vec<_>>(),
        "descent_bound_ceil": r.descent_bounds.last().map(|x| ceil(x).to_string()),
        "constructed_code_size": r.constructed_code_size.as_ref().map(|x| x.to_string()),
        "s": r.s,
        "asymptotic_rate": r.asymptotic_rate.as_ref().map(|x| x.to_decimal_string()),
        "pivots_orthogonal": r.trace.as_ref().map(|t| t.pivots_orthogonal()),
    });
    if let Some(ms) = runtime_ms {
        v["runtime_ms"] = json!(ms as u64);
    }
    v
}

#[derive(Serialize)]
struct SkippedCell {
    q: u32,
    n: usize,
    d: usize,
    skipped: bool,
    reason: String,
}

/// Runs every valid cell of the grid in parallel and renders the table in
/// `(q, n, d)` order. Invalid cells are logged and left out; cells whose descent
/// exceeds `budget` keep their closed-form bounds and are marked skipped.
pub fn sweep(
    qs: &[u32],
    (n_lo, n_hi): (usize, usize),
    (d_lo, d_hi): (usize, usize),
    budget: u64,
    json: bool,
) -> crate::error::Result<String> {
    let mut cells = Vec::new();
    for &q in qs {
        for n in n_lo..=n_hi {
            for d in d_lo..=d_hi {
                match GraphParams::new(q, n, d) {
                    Ok(p) => cells.push(p),
                    Err(e) => log::warn!("skipping (q={q}, n={n}, d={d}): {e}"),
                }
            }
        }
    }
    let results: Vec<(GraphParams, crate::error::Result<(BoundReport, u128)>)> = cells
        .par_iter()
        .map(|p| {
            let start = Instant::now();
            let r = BoundReport::compute(p, budget).map(|r| (r, start.elapsed().as_millis()));
            (*p, r)
        })
        .collect();

    if json {
        let rows: Vec<Value> = results
            .iter()
            .map(|(p, r)| match r {
                Ok((report, ms)) => report_json(report, Some(*ms)),
                Err(e) => serde_json::to_value(SkippedCell {
                    q: p.q(),
                    n: p.n(),
                    d: p.d(),
                    skipped: true,
                    reason: e.to_string(),
                })
                .unwrap(),
            })
            .collect();
        Ok(serde_json::to_string_pretty(&rows).unwrap() + "\n")
    } else {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS)?;
        for (p, r) in &results {
            match r {
                Ok((report, ms)) => w.write_record(csv_row(report, Some(*ms)))?,
                Err(e) => {
                    log::warn!("{p}: {e}");
                    let mut row = vec![String::new(); CSV_COLUMNS.len()];
                    row[0] = p.q().to_string();
                    row[1] = p.n().to_string();
                    row[2] = p.d().to_string();
                    row[4] = "true".into();
                    w.write_record(row)?;
                }
            }
        }
        Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv is utf-8"))
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(std::io::Error::other(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["gvspec"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn bounds_json_anchor() {
        let (code, out, _) = call(&["bounds", "-q", "2", "-n", "7", "-d", "3", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["gv"], "128/29");
        assert_eq!(v["wilf_cor27"], "128/27");
        assert_eq!(v["hoffman_upper"], "16/1");
        assert_eq!(v["hoffman_upper_floor"], "16");
        assert_eq!(v["degenerate"], Value::Null);
        assert_eq!(v["s"], 3);
    }

    #[test]
    fn bounds_degenerate_and_errors() {
        let (code, out, _) = call(&["bounds", "-q", "2", "-n", "7", "-d", "1", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["gv"], "128/1");
        assert_eq!(v["degenerate"], "edgeless");
        let (code, _, err) = call(&["bounds", "-q", "4", "-n", "7", "-d", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("q must be prime"));
        assert_eq!(call(&["bounds", "-q", "2", "-n", "7", "-d", "9"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn bounds_csv_has_header_and_row() {
        let (code, out, _) = call(&["bounds", "-q", "3", "-n", "4", "-d", "3"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("q,n,d,degenerate,skipped"));
        assert!(lines[1].starts_with("3,4,3,,false"));
    }

    #[test]
    fn spectrum_tables() {
        let (code, out, _) = call(&["spectrum", "-q", "2", "-n", "7", "-d", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 9);
        assert_eq!(out.lines().nth(1).unwrap(), "0,28,1");
        let (code, out, _) = call(&["spectrum", "-q", "2", "-n", "7", "-d", "3", "--level", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 65);
        assert_eq!(out.lines().nth(1).unwrap(), "0000000,12");
        assert_eq!(
            call(&["spectrum", "-q", "2", "-n", "7", "-d", "3", "--level", "9"]).0,
            2
        );
        assert_eq!(
            call(&["spectrum", "-q", "2", "-n", "7", "-d", "3", "--level", "1", "--budget", "10"])
                .0,
            3
        );
        let (_, out, _) = call(&["spectrum", "-q", "3", "-n", "3", "-d", "1"]);
        assert!(out
            .lines()
            .skip(1)
            .all(|l| l.split(',').nth(1) == Some("0")));
    }

    #[test]
    fn construct_then_verify() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("h.pchk");
        let p = path.to_str().unwrap();
        let (code, out, _) = call(&["construct", "-q", "2", "-n", "7", "-d", "3", "-o", p]);
        assert_eq!(code, 0);
        let trace: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(trace[0]["lambda_min"], -4);
        assert_eq!(trace.as_array().unwrap().len(), 3);
        let (code, out, _) = call(&["verify", p, "-d", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("min_distance 3"));
        assert_eq!(call(&["verify", p, "-d", "4"]).0, 1);
        assert_eq!(call(&["verify", p, "-d", "3", "--budget", "4"]).0, 3);

        let empty = dir.path().join("e.pchk");
        let e = empty.to_str().unwrap();
        assert_eq!(
            call(&["construct", "-q", "2", "-n", "3", "-d", "1", "-o", e]).0,
            0
        );
        assert_eq!(
            std::fs::read_to_string(&empty).unwrap(),
            "# gvpchk v1\nq 2\nn 3\ns 0\n"
        );

        std::fs::write(&path, "# gvpchk v0\n").unwrap();
        assert_eq!(call(&["verify", p, "-d", "3"]).0, 2);
        assert_eq!(call(&["verify", "/nonexistent/x.pchk", "-d", "3"]).0, 2);
    }

    #[test]
    fn construct_budget_leaves_no_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("big.pchk");
        let p = path.to_str().unwrap();
        let args = [
            "construct",
            "-q",
            "2",
            "-n",
            "12",
            "-d",
            "3",
            "-o",
            p,
            "--budget",
            "100",
        ];
        assert_eq!(call(&args).0, 3);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    }

    #[test]
    fn sweep_rows_and_skips() {
        let (code, out, _) = call(&["sweep", "-q", "2", "-n", "4..10", "-d", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 8);
        let (code, out, _) = call(&["sweep", "-q", "2", "-n", "5..4", "-d", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);
        let (_, out, _) = call(&[
            "sweep", "-q", "2,4", "-n", "6..8", "-d", "3", "--json", "--budget", "128",
        ]);
        let rows: Vec<Value> = serde_json::from_str(&out).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0]["skipped"], false);
        assert_eq!(rows[2]["skipped"], true);
        assert_eq!(rows[2]["gv"], "256/37");
        assert_eq!(
            call(&[
                "sweep",
                "-q",
                "2",
                "-n",
                "4",
                "-d",
                "3",
                "-o",
                "/nonexistent/dir/x.csv"
            ])
            .0,
            2
        );
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..10").unwrap(), (4, 10));
        assert_eq!(parse_range("4..=10").unwrap(), (4, 10));
        assert_eq!(parse_range("3-5").unwrap(), (3, 5));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("x").is_err());
    }
}
