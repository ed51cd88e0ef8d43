//! `frieze`: command-line access to frieze group actions, orbit-sum bases
//! and invariance checks.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage, parse or I/O error.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frieze_core::{
    complete_sym, decomposition_census, elementary_sym, expand_basis_function, expand_in_basis, format_rational,
    generator_shift_bound, index_of_monomial, is_invariant, orbit_in_window, stabilizer, BasisIndex, Error,
    FriezeGroupId, Monomial, Rational, TruncatedSeries,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "frieze", version, about = "Frieze group invariants on formal series")]
struct Cli {
    /// Frieze group, e.g. F6 (also `6` or `f6`)
    #[arg(long, global = true)]
    group: Option<FriezeGroupId>,

    /// Window radius N; series live on indices [-N, N]
    #[arg(short = 'N', long = "window", global = true)]
    window: Option<i64>,

    /// Boundary margin for invariance checks (default: generator shift bound)
    #[arg(long, global = true)]
    margin: Option<i64>,

    /// JSON output for commands that default to text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical basis label of a monomial, e.g. `canon --group F1 "x[3] x[5]^2"`
    Canon { monomial: String },
    /// Truncated expansion of a basis function as series JSON
    Expand { label: String },
    /// Checks that a series (JSON file, or `-` for stdin) is invariant
    Check { series: String },
    /// Counts LINE and DOUBLE components (F1 and F6)
    Census {
        #[arg(short = 'k', long = "degree")]
        degree: u32,
        #[arg(long, default_value_t = 4)]
        max_parts: usize,
        #[arg(long = "max-delta", default_value_t = 4)]
        max_delta: i64,
    },
    /// Elementary (e) or complete (h) symmetric function on the window
    Symfunc {
        kind: SymKind,
        r: u32,
        /// Also expand on the orbit-sum basis and check the coefficients
        #[arg(long)]
        expand_basis: bool,
    },
    /// Orbit of a monomial inside the window
    Orbit { monomial: String },
    /// Stabilizer of a monomial
    Stab { monomial: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SymKind {
    E,
    H,
}

enum CliError {
    Usage(String),
    Library { err: Error, input: Option<String> },
    Io(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Library { err, input: None }
    }
}

/// Attaches the offending text so parse errors can point at it.
trait WithInput<T> {
    fn with_input(self, input: &str) -> Result<T, CliError>;
}

impl<T> WithInput<T> for frieze_core::Result<T> {
    fn with_input(self, input: &str) -> Result<T, CliError> {
        self.map_err(|err| CliError::Library {
            err,
            input: Some(input.to_string()),
        })
    }
}

struct Report {
    output: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.output);
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match e {
                CliError::Usage(msg) | CliError::Io(msg) => eprintln!("error: {msg}"),
                CliError::Library { err, input } => {
                    eprintln!("error: {err}");
                    if let (Error::Parse { pos, .. }, Some(text)) = (&err, input) {
                        eprintln!("  {text}");
                        eprintln!("  {}^", " ".repeat(text[..(*pos).min(text.len())].chars().count()));
                    }
                }
            }
            ExitCode::from(2)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn ok(output: String) -> Result<Report, CliError> {
    Ok(Report { output, passed: true })
}

impl Cli {
    fn group(&self) -> Result<FriezeGroupId, CliError> {
        self.group.ok_or_else(|| CliError::Usage("--group is required for this command".into()))
    }

    fn window(&self) -> Result<i64, CliError> {
        let n = self.window.ok_or_else(|| CliError::Usage("-N/--window is required for this command".into()))?;
        if n < 0 {
            return Err(Error::InvalidWindow(n).into());
        }
        Ok(n)
    }

    fn margin(&self, group: FriezeGroupId) -> i64 {
        self.margin.unwrap_or_else(|| generator_shift_bound(group))
    }

    fn monomial(&self, text: &str) -> Result<(FriezeGroupId, Monomial), CliError> {
        let group = self.group()?;
        Ok((group, Monomial::parse(group.alphabet(), text).with_input(text)?))
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Canon { monomial } => canon(cli, monomial),
        Command::Expand { label } => expand(cli, label),
        Command::Check { series } => check(cli, series),
        Command::Census {
            degree,
            max_parts,
            max_delta,
        } => {
            let census = decomposition_census(cli.group()?, *degree, *max_parts, *max_delta)?;
            Ok(Report {
                output: census.to_json(),
                passed: census.parity_consistent(),
            })
        }
        Command::Symfunc { kind, r, expand_basis } => symfunc(cli, *kind, *r, *expand_basis),
        Command::Orbit { monomial } => orbit(cli, monomial),
        Command::Stab { monomial } => stab(cli, monomial),
    }
}

fn normal_form_json(m: &Monomial) -> Value {
    match m {
        Monomial::X(mx) => json!({ "base": mx.base(), "shape": mx.shape().to_string() }),
        Monomial::XY(mxy) => json!({
            "base": mxy.base(),
            "shape_x": mxy.shape_x().to_string(),
            "shape_y": mxy.shape_y().to_string(),
            "delta": mxy.delta(),
        }),
    }
}

fn normal_form_text(m: &Monomial) -> String {
    match m {
        Monomial::X(mx) => format!("base {} shape {}", mx.base(), mx.shape()),
        Monomial::XY(mxy) => format!(
            "base {} shape_x {} shape_y {} delta {}",
            mxy.base(),
            mxy.shape_x(),
            mxy.shape_y(),
            mxy.delta()
        ),
    }
}

fn canon(cli: &Cli, text: &str) -> Result<Report, CliError> {
    let (group, m) = cli.monomial(text)?;
    let idx = index_of_monomial(group, &m)?;
    if cli.json {
        return ok(pretty(&json!({
            "group": group.to_string(),
            "monomial": m.to_string(),
            "normal_form": normal_form_json(&m),
            "label": idx.to_string(),
        })));
    }
    ok(format!("{idx}\n{m}: {}", normal_form_text(&m)))
}

fn expand(cli: &Cli, text: &str) -> Result<Report, CliError> {
    let idx: BasisIndex = text.parse().with_input(text)?;
    if let Some(group) = cli.group {
        if group != idx.group() {
            return Err(Error::GroupMismatch(group, idx.group()).into());
        }
    }
    let series = expand_basis_function(&idx, cli.window()?)?;
    ok(series.to_json())
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {path}: {e}")))
    }
}

fn expansion_json(coefficients: &std::collections::BTreeMap<BasisIndex, Rational>) -> Value {
    Value::Object(
        coefficients
            .iter()
            .map(|(idx, c)| (idx.to_string(), Value::String(format_rational(c))))
            .collect(),
    )
}

fn check(cli: &Cli, path: &str) -> Result<Report, CliError> {
    let group = cli.group()?;
    let series = TruncatedSeries::from_json(&read_input(path)?)?;
    let margin = cli.margin(group);
    let invariant = is_invariant(group, &series, margin)?;
    let mut report = json!({
        "group": group.to_string(),
        "window": series.window(),
        "margin": margin,
        "interior": series.window() - margin,
        "terms": series.len(),
        "invariant": invariant,
    });
    match expand_in_basis(group, &series, margin) {
        Ok(expansion) => report["expansion"] = expansion_json(&expansion.coefficients),
        Err(Error::NotInvariant { reason, .. }) => report["reason"] = Value::String(reason),
        Err(e) => return Err(e.into()),
    }
    Ok(Report {
        output: pretty(&report),
        passed: invariant,
    })
}

fn symfunc(cli: &Cli, kind: SymKind, r: u32, expand_basis: bool) -> Result<Report, CliError> {
    let window = cli.window()?;
    let (name, series) = match kind {
        SymKind::E => ("e", elementary_sym(r, window)?),
        SymKind::H => ("h", complete_sym(r, window)?),
    };
    let mut report = json!({
        "kind": name,
        "r": r,
        "window": window,
        "series": series.to_json_value(),
    });
    let mut passed = true;
    if expand_basis {
        let group = cli.group.unwrap_or(FriezeGroupId::F1);
        let margin = cli.margin(group);
        let expansion = expand_in_basis(group, &series, margin)?;
        let coefficients_one = expansion.coefficients.values().all(|c| *c == Rational::from_integer(1.into()));
        let parts_at_most_one = expansion
            .coefficients
            .keys()
            .all(|idx| idx.shape_x().parts().iter().all(|&p| p <= 1));
        passed = coefficients_one && (parts_at_most_one || matches!(kind, SymKind::H));
        report["group"] = Value::String(group.to_string());
        report["margin"] = json!(margin);
        report["expansion"] = expansion_json(&expansion.coefficients);
        report["checks"] = json!({
            "coefficients_one": coefficients_one,
            "parts_at_most_one": parts_at_most_one,
        });
    }
    Ok(Report {
        output: pretty(&report),
        passed,
    })
}

fn orbit(cli: &Cli, text: &str) -> Result<Report, CliError> {
    let (group, m) = cli.monomial(text)?;
    let window = cli.window()?;
    let orbit = orbit_in_window(group, &m, window)?;
    let members: Vec<String> = orbit.iter().map(|o| o.to_string()).collect();
    if cli.json {
        return ok(pretty(&json!({
            "group": group.to_string(),
            "monomial": m.to_string(),
            "window": window,
            "label": index_of_monomial(group, &m)?.to_string(),
            "orbit": members,
        })));
    }
    ok(members.join("\n"))
}

fn stab(cli: &Cli, text: &str) -> Result<Report, CliError> {
    let (group, m) = cli.monomial(text)?;
    let s = stabilizer(group, &m)?;
    if cli.json {
        return ok(pretty(&json!({
            "group": group.to_string(),
            "monomial": m.to_string(),
            "stabilizer": s,
            "trivial": s.is_trivial(),
        })));
    }
    ok(s.to_string())
}
