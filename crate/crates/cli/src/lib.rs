//! Command-line surface for `permutoehr`.
//!
//! Every subcommand prints its result to stdout as plain text, JSON or CSV.
//! Exact rationals are written as `"p/q"` strings (`"p"` when `q = 1`).
//! Exit codes: 0 success, 1 failed verification, 2 invalid input, 3 a
//! resource budget was refused.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use permutoehr::combinat::{census, enumerate_graphs};
use permutoehr::ehrhart::{
    ehrhart, ehrhart_closed, f_polynomial, f_polynomial_stable, volume_closed, Method,
};
use permutoehr::exactmath::RationalPoly;
use permutoehr::polytope::{PartialPermutohedron, Sense, DEFAULT_LATTICE_BUDGET};
use permutoehr::verify::{run_checks, Fault, VerifyOptions};
use permutoehr::Error;

pub const BUDGET_ENV: &str = "PERMUTOEHR_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "permutoehr",
    version,
    about = "Ehrhart polynomials of partial permutohedra"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FaultArg {
    DoubleFactorialSign,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ehrhart polynomial of P(m, n), optionally evaluated at t.
    Ehrhart {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: Option<u64>,
        /// closed, postnikov, graphsum, egf, egf-tree or recurrence.
        #[arg(long, default_value = "closed")]
        method: Method,
    },
    /// Volume of P(m, n).
    Volume {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
    },
    /// Face-count polynomial of P(m, n).
    Fpoly {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
        /// Use the n-independent form (needs n >= m).
        #[arg(long)]
        stable: bool,
    },
    /// Vertices of P(m, n).
    Vertices {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
    },
    /// Facet inequalities of P(m, n).
    Facets {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
    },
    /// Brute-force count of lattice points in t * P(m, n).
    CountPoints {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Multigraphs on m vertices with at most one cycle per component.
    Graphs {
        #[arg(long)]
        m: usize,
        /// Counts by (loops, single edges, doubled edges) instead of the list.
        #[arg(long)]
        stats: bool,
    },
    /// Integer points of the parking function polytope of length m.
    Parking {
        #[arg(long)]
        m: usize,
        /// Also count the points by enumeration.
        #[arg(long)]
        brute: bool,
    },
    /// Run the cross-checks between engines, oracle and combinatorics.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_t: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LatticeBudget { .. } | Error::EnumerationBound { .. } => EXIT_BUDGET,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

/// What a command produced: a JSON document plus its plain rendering.
struct Report {
    value: Value,
    plain: String,
    status: i32,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let start = Instant::now();
    match execute(&cli.command) {
        Ok(mut report) => {
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            if let Value::Object(map) = &mut report.value {
                map.insert("elapsed_ms".into(), json!(elapsed));
            }
            let text = match cli.format {
                Format::Plain => report.plain,
                Format::Json => {
                    serde_json::to_string_pretty(&report.value).expect("serializable") + "\n"
                }
                Format::Csv => to_csv(&report.value),
            };
            let _ = stdout.write_all(text.as_bytes());
            report.status
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn coefficient_strings(p: &RationalPoly) -> Vec<String> {
    p.coefficients().iter().map(ToString::to_string).collect()
}

fn execute(command: &Command) -> Result<Report, Failure> {
    match *command {
        Command::Ehrhart { m, n, t, method } => {
            let result = ehrhart(m, n, method)?;
            let p = &result.polynomial;
            let mut value = json!({
                "command": "ehrhart",
                "inputs": {"m": m, "n": n, "t": t, "method": method.name()},
                "method": method.name(),
                "polynomial": coefficient_strings(p),
            });
            let mut plain = format!("{p}\n");
            if let Some(t) = t {
                let e = p.eval_int(t as i64);
                value["evaluation"] = json!(e.to_string());
                plain.push_str(&format!("ehr({t}) = {e}\n"));
            }
            Ok(Report {
                value,
                plain,
                status: EXIT_OK,
            })
        }
        Command::Volume { m, n } => {
            let v = volume_closed(m, n)?;
            Ok(Report {
                value: json!({"command": "volume", "inputs": {"m": m, "n": n}, "volume": v.to_string()}),
                plain: format!("{v}\n"),
                status: EXIT_OK,
            })
        }
        Command::Fpoly { m, n, stable } => {
            let f = if stable {
                f_polynomial_stable(m, n)?
            } else {
                f_polynomial(m, n)?
            };
            Ok(Report {
                value: json!({
                    "command": "fpoly",
                    "inputs": {"m": m, "n": n, "stable": stable},
                    "polynomial": coefficient_strings(&f),
                }),
                plain: format!("{f}\n"),
                status: EXIT_OK,
            })
        }
        Command::Vertices { m, n } => {
            let verts = PartialPermutohedron::new(m, n)?.vertices();
            let plain: String = verts.iter().map(|v| format!("{v}\n")).collect();
            let list: Vec<&[i64]> = verts.iter().map(|v| &v[..]).collect();
            Ok(Report {
                value: json!({
                    "command": "vertices",
                    "inputs": {"m": m, "n": n},
                    "count": verts.len(),
                    "vertices": list,
                }),
                plain,
                status: EXIT_OK,
            })
        }
        Command::Facets { m, n } => {
            let facets = PartialPermutohedron::new(m, n)?.facets();
            let plain: String = facets.iter().map(|f| format!("{f}\n")).collect();
            let list: Vec<Value> = facets
                .iter()
                .map(|f| {
                    json!({
                        "coefficients": f.coefficients,
                        "sense": match f.sense { Sense::AtMost => "<=", Sense::AtLeast => ">=" },
                        "bound": f.bound,
                    })
                })
                .collect();
            Ok(Report {
                value: json!({
                    "command": "facets",
                    "inputs": {"m": m, "n": n},
                    "count": facets.len(),
                    "facets": list,
                }),
                plain,
                status: EXIT_OK,
            })
        }
        Command::CountPoints { m, n, t } => {
            let budget = budget_from_env()?;
            let count = PartialPermutohedron::new(m, n)?.count_lattice_points(t, budget)?;
            Ok(Report {
                value: json!({
                    "command": "count-points",
                    "inputs": {"m": m, "n": n, "t": t},
                    "count": count_value(count),
                }),
                plain: format!("{count}\n"),
                status: EXIT_OK,
            })
        }
        Command::Graphs { m, stats } => graphs(m, stats),
        Command::Parking { m, brute } => parking(m, brute),
        Command::Verify {
            max_m,
            max_t,
            seed,
            inject_fault,
        } => verify(max_m, max_t, seed, inject_fault),
    }
}

fn count_value(count: u128) -> Value {
    u64::try_from(count).map_or_else(|_| json!(count.to_string()), |c| json!(c))
}

fn budget_from_env() -> Result<u128, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| {
            invalid(format!(
                "{BUDGET_ENV} must be a nonnegative integer (got '{s}')"
            ))
        }),
        Err(_) => Ok(DEFAULT_LATTICE_BUDGET),
    }
}

fn graphs(m: usize, stats: bool) -> Result<Report, Failure> {
    if stats {
        let rows = census(m)?;
        let total: u64 = rows.values().sum();
        let mut plain = String::from("loops single pairs count\n");
        let mut list = Vec::new();
        for (s, count) in &rows {
            plain.push_str(&format!(
                "{} {} {} {count}\n",
                s.n_loops, s.n_single, s.n_pairs
            ));
            list.push(json!({
                "loops": s.n_loops,
                "single": s.n_single,
                "pairs": s.n_pairs,
                "count": count,
            }));
        }
        plain.push_str(&format!("total {total}\n"));
        return Ok(Report {
            value: json!({"command": "graphs", "inputs": {"m": m, "stats": true}, "total": total, "census": list}),
            plain,
            status: EXIT_OK,
        });
    }
    let all: Vec<String> = enumerate_graphs(m)?.map(|g| g.to_string()).collect();
    let plain: String = all.iter().map(|g| format!("{g}\n")).collect();
    Ok(Report {
        value: json!({"command": "graphs", "inputs": {"m": m, "stats": false}, "total": all.len(), "graphs": all}),
        plain,
        status: EXIT_OK,
    })
}

fn parking(m: usize, brute: bool) -> Result<Report, Failure> {
    if m == 0 {
        return Err(invalid("parking functions need length m >= 1"));
    }
    // P_m is P(m, m-1) shifted by (1, .., 1); for m = 1 that is a single point
    let count = if m == 1 {
        1u128
    } else {
        let value = ehrhart_closed(m, m as u64 - 1)?.eval_int(1);
        value
            .to_integer()
            .try_into()
            .map_err(|_| invalid("count does not fit in 128 bits"))?
    };
    let mut value = json!({"command": "parking", "inputs": {"m": m, "brute": brute}, "count": count_value(count)});
    let mut plain = format!("{count}\n");
    if brute {
        let enumerated = if m == 1 {
            1
        } else {
            PartialPermutohedron::new(m, m as u64 - 1)?
                .count_lattice_points(1, budget_from_env()?)?
        };
        value["enumerated"] = count_value(enumerated);
        plain.push_str(&format!("enumerated {enumerated}\n"));
        if enumerated != count {
            return Ok(Report {
                value,
                plain,
                status: EXIT_CHECK_FAILED,
            });
        }
    }
    Ok(Report {
        value,
        plain,
        status: EXIT_OK,
    })
}

fn verify(max_m: usize, max_t: u64, seed: u64, fault: Option<FaultArg>) -> Result<Report, Failure> {
    if max_m == 0 || max_t == 0 {
        return Err(invalid("verify needs --max-m >= 1 and --max-t >= 1"));
    }
    let opts = VerifyOptions {
        max_m,
        max_t,
        seed,
        budget: budget_from_env()?,
        fault: fault.map(|FaultArg::DoubleFactorialSign| Fault::DoubleFactorialSign),
    };
    let outcomes = run_checks(&opts);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let mut plain = String::new();
    let mut list = Vec::new();
    for o in &outcomes {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        plain.push_str(&format!("{tag} {} ({})\n", o.name, o.detail));
        list.push(json!({"name": o.name, "passed": o.passed, "detail": o.detail}));
    }
    plain.push_str(&format!("{passed}/{} checks passed\n", outcomes.len()));
    let ok = passed == outcomes.len();
    Ok(Report {
        value: json!({
            "command": "verify",
            "inputs": {"max_m": max_m, "max_t": max_t, "seed": seed},
            "passed": ok,
            "checks": list,
        }),
        plain,
        status: if ok { EXIT_OK } else { EXIT_CHECK_FAILED },
    })
}

/// Flattens a JSON document into `key,value` rows, nesting keys with `.`.
fn to_csv(value: &Value) -> String {
    fn walk(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
        let join = |k: &str| {
            if prefix.is_empty() {
                k.to_string()
            } else {
                format!("{prefix}.{k}")
            }
        };
        match v {
            Value::Object(map) => {
                for (k, item) in map {
                    walk(&join(k), item, rows);
                }
            }
            Value::Array(items) => {
                for (i, item) in items.iter().enumerate() {
                    walk(&join(&i.to_string()), item, rows);
                }
            }
            Value::String(s) => rows.push((prefix.to_string(), s.clone())),
            Value::Null => rows.push((prefix.to_string(), String::new())),
            other => rows.push((prefix.to_string(), other.to_string())),
        }
    }
    fn field(s: &str) -> String {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }

    let mut rows = Vec::new();
    walk("", value, &mut rows);
    let mut out = String::from("key,value\n");
    for (k, v) in rows {
        out.push_str(&format!("{},{}\n", field(&k), field(&v)));
    }
    out
}
