//! Command-line front end: `compute`, `verify`, and `list-families`.
//!
//! Exit codes: 0 on success, 1 when any verification case fails, 2 on usage
//! errors (including parameters a family rejects).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::families::{self, Argument, FamilyId, FamilySpec, LambdaMode};
use crate::identities::{verify, verify_all, IdentityId, Profile, VerificationReport};
use crate::poly::BiPoly;
use crate::rational::{format_rational, int, parse_rational, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "degen",
    version,
    about = "Exact degenerate Bernoulli-type families and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate a family for n = 0..=max-n.
    Compute {
        #[arg(long, value_parser = parse_family)]
        family: FamilyId,
        /// Order α (any rational for ordered families).
        #[arg(long, default_value = "1", value_parser = parse_rat)]
        order: Rational,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// `symbolic` or a rational literal such as `1/2`.
        #[arg(long, default_value = "symbolic", value_parser = parse_lambda)]
        lambda: LambdaMode,
        /// `symbolic`, a rational literal, or a shift such as `x-1` or `x+1/2`.
        #[arg(long, default_value = "symbolic", value_parser = parse_argument)]
        x: Argument,
        /// Series truncation order; defaults to max-n.
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check identities exactly and report residuals.
    Verify {
        /// Identity name (eq2, eq4, eq5-recon, eq18-equiv, eq21, eq23 or thm1,
        /// eq25, thm2, thm2-corollary, thm3, thm4, b-second-kind-relation,
        /// limits-lambda0, stirling-inversion, compositional-inverse) or `all`.
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long, default_value = "quick", value_parser = parse_profile)]
        profile: Profile,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Leave out wall-clock timings so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the family catalog.
    ListFamilies,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse()
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_profile(s: &str) -> Result<Profile, String> {
    s.parse()
}

pub fn parse_lambda(s: &str) -> Result<LambdaMode, String> {
    match s.trim() {
        "symbolic" | "l" => Ok(LambdaMode::Symbolic),
        lit => parse_rat(lit).map(LambdaMode::Value),
    }
}

pub fn parse_argument(s: &str) -> Result<Argument, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    match s.as_str() {
        "symbolic" | "x" => Ok(Argument::Symbolic),
        _ => match s.strip_prefix('x') {
            Some(rest) if rest.starts_with('+') => parse_rat(&rest[1..]).map(Argument::Shifted),
            Some(rest) if rest.starts_with('-') => parse_rat(rest).map(Argument::Shifted),
            Some(_) => Err(format!("cannot parse argument {s:?}")),
            None => parse_rat(&s).map(Argument::Value),
        },
    }
}

fn describe_lambda(mode: &LambdaMode) -> String {
    match mode {
        LambdaMode::Symbolic => "symbolic".into(),
        LambdaMode::Value(c) => format_rational(c),
        LambdaMode::Scaled(c) => format!("{}*l", format_rational(c)),
    }
}

fn describe_argument(arg: &Argument) -> String {
    match arg {
        Argument::Symbolic => "symbolic".into(),
        Argument::Value(c) => format_rational(c),
        Argument::Shifted(c) => (&BiPoly::x() + &BiPoly::constant(c.clone())).to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub value: BiPoly,
}

/// Values of one family, as printed by `compute`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyTable {
    pub family: String,
    pub order: String,
    pub lambda: String,
    pub x: String,
    pub max_n: usize,
    pub trunc: usize,
    pub rows: Vec<TableRow>,
}

/// Tabulates `spec` for `n ≤ max_n`; number triangles list every `(n, k)`
/// with `k ≤ n`.
pub fn compute_table(
    spec: &FamilySpec,
    max_n: usize,
    trunc: usize,
) -> Result<FamilyTable, families::FamilyError> {
    let rows = if let Some(tri) = spec.id.triangle() {
        // the table lists every column, so an order has nothing to select
        if spec.order != int(1) {
            return Err(spec.unsupported());
        }
        (0..=max_n)
            .flat_map(|n| (0..=n).map(move |k| (n, k)))
            .map(|(n, k)| TableRow {
                n,
                k: Some(k),
                value: families::triangle_value(tri, n, k, &spec.lambda),
            })
            .collect()
    } else {
        families::build_egf(spec, trunc)?
            .values()
            .into_iter()
            .take(max_n + 1)
            .enumerate()
            .map(|(n, value)| TableRow { n, k: None, value })
            .collect()
    };
    Ok(FamilyTable {
        family: spec.id.name().to_string(),
        order: format_rational(&spec.order),
        lambda: describe_lambda(&spec.lambda),
        x: describe_argument(&spec.argument),
        max_n,
        trunc,
        rows,
    })
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn render_table(table: &FamilyTable, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(table).expect("serializable") + "\n",
        Format::Csv => {
            let triangle = table.rows.first().is_some_and(|r| r.k.is_some());
            let header: &[&str] = if triangle {
                &["n", "k", "value"]
            } else {
                &["n", "value"]
            };
            csv_string(
                header,
                table.rows.iter().map(|r| {
                    let mut rec = vec![r.n.to_string()];
                    if let Some(k) = r.k {
                        rec.push(k.to_string());
                    }
                    rec.push(r.value.to_string());
                    rec
                }),
            )
        }
    }
}

/// Serializes reports; a single report is a JSON object, several an array.
pub fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let text = match reports {
                [one] => serde_json::to_string_pretty(one),
                many => serde_json::to_string_pretty(many),
            };
            text.expect("serializable") + "\n"
        }
        Format::Csv => {
            let opt = |v: Option<usize>| v.map(|v| v.to_string()).unwrap_or_default();
            csv_string(
                &[
                    "identity", "n", "k", "r", "m", "alpha", "label", "status", "residual",
                ],
                reports.iter().flat_map(|rep| {
                    rep.cases.iter().map(move |c| {
                        vec![
                            rep.identity.name().to_string(),
                            c.indices.n.to_string(),
                            opt(c.indices.k),
                            opt(c.indices.r),
                            opt(c.indices.m),
                            c.indices.alpha.clone().unwrap_or_default(),
                            c.label.clone().unwrap_or_default(),
                            if c.passed() {
                                "pass".into()
                            } else {
                                "fail".into()
                            },
                            c.residual.to_string(),
                        ]
                    })
                }),
            )
        }
    }
}

pub fn render_catalog() -> String {
    let width = FamilyId::ALL
        .iter()
        .map(|f| f.name().len())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for &id in FamilyId::ALL {
        let kind = if id.triangle().is_some() {
            "triangle (n, k)"
        } else if id.has_order() {
            "ordered"
        } else {
            "sequence"
        };
        out.push_str(&format!(
            "{:<width$}  {:<16} {}  -- {}\n",
            id.name(),
            kind,
            id.recipe(),
            id.about()
        ));
    }
    out
}

/// Runs the CLI with standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI, writing results to `out` (unless `--output` is given) and
/// diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let usage = |err: &mut dyn Write, msg: String| {
        let _ = writeln!(err, "error: {msg}");
        2
    };
    let (text, output, code) = match cli.command {
        Command::ListFamilies => (render_catalog(), None, 0),
        Command::Compute {
            family,
            order,
            max_n,
            lambda,
            x,
            trunc,
            format,
            output,
        } => {
            let trunc = trunc.unwrap_or(max_n);
            if trunc < max_n {
                return usage(
                    err,
                    format!("--trunc {trunc} is smaller than --max-n {max_n}"),
                );
            }
            let spec = FamilySpec::new(family)
                .order(order)
                .argument(x)
                .lambda(lambda);
            match compute_table(&spec, max_n, trunc) {
                Ok(table) => (render_table(&table, format), output, 0),
                Err(e) => return usage(err, e.to_string()),
            }
        }
        Command::Verify {
            identity,
            profile,
            max_n,
            order,
            trunc,
            format,
            output,
            no_timing,
        } => {
            let mut reports = if identity == "all" {
                if max_n.is_some() || order.is_some() || trunc.is_some() {
                    return usage(err, "--identity all takes its ranges from --profile".into());
                }
                verify_all(profile)
            } else {
                let id: IdentityId = match identity.parse() {
                    Ok(id) => id,
                    Err(e) => return usage(err, e.to_string()),
                };
                let defaults = profile.ranges(id);
                let max_n = max_n.unwrap_or(defaults.max_n);
                let trunc = trunc.unwrap_or(defaults.trunc.max(max_n));
                if trunc < max_n {
                    return usage(
                        err,
                        format!("--trunc {trunc} is smaller than --max-n {max_n}"),
                    );
                }
                match verify(id, max_n, order.unwrap_or(defaults.max_order), trunc) {
                    Ok(mut r) => {
                        if max_n == defaults.max_n && trunc == defaults.trunc && order.is_none() {
                            r.profile = Some(profile);
                        }
                        vec![r]
                    }
                    Err(e) => return usage(err, e.to_string()),
                }
            };
            if no_timing {
                reports.iter_mut().for_each(|r| r.wall_time_ms = None);
            }
            let code = if reports.iter().all(VerificationReport::all_passed) {
                0
            } else {
                1
            };
            for r in &reports {
                for c in r.failures() {
                    let _ = writeln!(
                        err,
                        "FAIL {} {:?}: residual {}",
                        r.identity, c.indices, c.residual
                    );
                }
            }
            (render_reports(&reports, format), output, code)
        }
    };
    let written = match output {
        Some(path) => std::fs::write(&path, text.as_bytes()),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 2;
    }
    code
}
