//! Command-line front end: input parsing, reports, and the fixture harness.

mod fixtures;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::clsgraph::classify;
use crate::error::{AtlasError, Result};
use crate::isogeny::SPORADIC_DATA_ENV;
use crate::qpoly::Rational;
use crate::torsion::{torsion_structure, ShortCurve};
use crate::weier::WeierstrassModel;

pub use fixtures::{
    load_fixtures, parse_fixtures, run_verify_tables, verify_entries, verify_entry, Coefficient, FixtureEntry,
    VerifyOutcome, VerifySummary,
};
pub use report::{emit_dot, CmReport, CountsReport, EdgeReport, GraphReport, InputEcho, RationalJson, VertexReport};

/// Parses an integer or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || AtlasError::Parse(format!("bad rational {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Parses `[a1,a2,a3,a4,a6]` or the short form `[A,B]`. With `short_only`
/// the input must be the short form.
pub fn parse_curve_input(text: &str, short_only: bool) -> Result<WeierstrassModel> {
    let bad = |why: &str| AtlasError::Parse(format!("bad curve {text:?}: {why}"));
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| bad("expected a bracketed list"))?;
    let entries: Vec<Rational> = inner.split(',').map(parse_rational).collect::<Result<_>>()?;
    match entries.len() {
        2 => {
            let mut it = entries.into_iter();
            WeierstrassModel::short(it.next().unwrap(), it.next().unwrap())
        }
        5 if !short_only => WeierstrassModel::new(entries.try_into().unwrap()),
        5 => Err(bad("--short expects [A,B]")),
        n => Err(bad(&format!("expected 5 a-invariants or [A,B], got {n} entries"))),
    }
}

/// Builds and classifies the class of `e`.
pub fn run_classify(e: &WeierstrassModel, input: &str) -> Result<GraphReport> {
    GraphReport::new(input, &classify(e)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionReport {
    pub curve: Vec<String>,
    pub torsion: String,
    /// Generator coordinates `[x, y]` on the input model.
    pub generators: Vec<[String; 2]>,
}

pub fn run_torsion(e: &WeierstrassModel) -> Result<TorsionReport> {
    let t = torsion_structure(e)?;
    let generators = t
        .generators
        .iter()
        .filter_map(|p| Some([p.x()?.to_string(), p.y()?.to_string()]))
        .collect();
    Ok(TorsionReport {
        curve: report::a_strings(e),
        torsion: t.group.to_string(),
        generators,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsogenyReport {
    pub ell: u32,
    /// Short model the kernel polynomial is written on.
    pub domain: Vec<String>,
    pub kernel: String,
    pub codomain: Vec<String>,
    pub codomain_j: RationalJson,
}

/// Rational isogenies of prime degree out of `e`, optionally of one degree.
pub fn run_isogenies(e: &WeierstrassModel, ell: Option<u32>) -> Result<Vec<IsogenyReport>> {
    Ok(ShortCurve::new(e)
        .prime_isogenies(ell)?
        .into_iter()
        .map(|i| IsogenyReport {
            ell: i.degree(),
            domain: report::a_strings(&i.domain),
            kernel: i.kernel.polynomial.to_string(),
            codomain: report::a_strings(&i.codomain),
            codomain_j: i.codomain.j_invariant().into(),
        })
        .collect())
}

#[derive(Debug, Parser)]
#[command(
    name = "isogeny-atlas",
    version,
    about = "Rational isogeny classes and isogeny-torsion graphs"
)]
#[command(after_help = concat!(
    "Curves are written [a1,a2,a3,a4,a6] or [A,B] for y^2 = x^3 + Ax + B; entries may be p/q.\n",
    "Exit codes: 0 ok, 1 usage error, 2 invariant violation or table mismatch, 3 I/O error.\n",
    "The sporadic isogeny table can be replaced by setting ISOGENY_ATLAS_SPORADIC_DATA."
))]
pub struct Cli {
    /// Read curves as [A,B] short models.
    #[arg(long, global = true)]
    pub short: bool,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shape, torsion configuration and table row of the isogeny class.
    Classify { curve: String },
    /// The isogeny graph as JSON or DOT.
    Graph {
        curve: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Rational torsion subgroup with generators.
    Torsion { curve: String },
    /// Rational isogenies of prime degree.
    Isogenies {
        curve: String,
        #[arg(long)]
        ell: Option<u32>,
    },
    /// Classify every entry of a JSON Lines fixture file and compare.
    VerifyTables { path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Runs one command, returning what to print and the exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let curve = |text: &str| parse_curve_input(text, cli.short);
    match &cli.command {
        Command::Classify { curve: text } => {
            let r = run_classify(&curve(text)?, text)?;
            Ok((if cli.json { json(&r)? } else { r.to_text() }, 0))
        }
        Command::Graph { curve: text, format } => {
            let r = run_classify(&curve(text)?, text)?;
            Ok((
                if *format == GraphFormat::Dot {
                    emit_dot(&r)
                } else {
                    json(&r)?
                },
                0,
            ))
        }
        Command::Torsion { curve: text } => {
            let r = run_torsion(&curve(text)?)?;
            if cli.json {
                return Ok((json(&r)?, 0));
            }
            let mut s = format!("torsion: {}\n", r.torsion);
            for [x, y] in &r.generators {
                s += &format!("  generator ({x}, {y})\n");
            }
            Ok((s, 0))
        }
        Command::Isogenies { curve: text, ell } => {
            let r = run_isogenies(&curve(text)?, *ell)?;
            if cli.json {
                return Ok((json(&r)?, 0));
            }
            let mut s = String::new();
            for i in &r {
                s += &format!("{:>3}  kernel {}  ->  [{}]\n", i.ell, i.kernel, i.codomain.join(","));
            }
            if r.is_empty() {
                s += "no rational isogenies of prime degree\n";
            }
            Ok((s, 0))
        }
        Command::VerifyTables { path } => {
            let summary = run_verify_tables(path)?;
            let code = if summary.all_passed() { 0 } else { 2 };
            if cli.json {
                return Ok((json(&summary)?, code));
            }
            let mut s = String::new();
            for o in &summary.outcomes {
                let mark = if o.pass { "ok  " } else { "FAIL" };
                s += &format!("{mark} {:<22} {} {}", o.label, o.expected_shape, o.expected_config);
                if !o.pass {
                    s += &format!("  computed {}", o.computed);
                }
                s.push('\n');
            }
            s += &format!("{}/{} exact matches\n", summary.passed, summary.total);
            Ok((s, code))
        }
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return 3;
            }
            code
        }
        Err(e) => {
            eprintln!("isogeny-atlas: {e}");
            if matches!(e, AtlasError::SporadicData(_)) {
                eprintln!("(check {SPORADIC_DATA_ENV})");
            }
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_long_short_and_rational_input() {
        let e = parse_curve_input("[1,-1,1,-6,-4]", false).unwrap();
        assert_eq!(e.to_string(), "[1,-1,1,-6,-4]");
        let s = parse_curve_input("[0, 1]", false).unwrap();
        assert_eq!(s.short_coefficients().unwrap().1, &Rational::from_integer(1.into()));
        let q = parse_curve_input("[-1/4, 3/8]", true).unwrap();
        assert_eq!(q.short_coefficients().unwrap().0, &parse_rational("-1/4").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_curve_input("[0,0,0,0,0]", false),
            Err(AtlasError::SingularCurve)
        ));
        assert!(matches!(parse_curve_input("[1,2,3]", false), Err(AtlasError::Parse(_))));
        assert!(matches!(parse_curve_input("1,2", false), Err(AtlasError::Parse(_))));
        assert!(matches!(parse_curve_input("[1,x]", false), Err(AtlasError::Parse(_))));
        assert!(matches!(parse_curve_input("[1,1/0]", false), Err(AtlasError::Parse(_))));
        assert!(matches!(
            parse_curve_input("[1,-1,1,-6,-4]", true),
            Err(AtlasError::Parse(_))
        ));
    }

    #[test]
    fn report_round_trips_and_renders_dot() {
        let e = parse_curve_input("[1,-1,1,-6,-4]", false).unwrap();
        let r = run_classify(&e, "[1,-1,1,-6,-4]").unwrap();
        assert_eq!(r.shape, "T4");
        assert_eq!(r.config, ["[2,2]", "[4]", "[4]", "[2]"]);
        assert_eq!(r.table_row, "T4/17.a-class");
        let back: GraphReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["counts"][0]["C"], 4);
        assert_eq!(v["counts"][0]["C_p"]["2"], 4);
        assert!(v["cm"].is_null());
        let dot = emit_dot(&r);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.matches("[label=\"2\"]").count(), 3);
    }

    #[test]
    fn singleton_dot_has_no_edges() {
        let r = run_classify(&parse_curve_input("[3,5]", true).unwrap(), "[3,5]").unwrap();
        let dot = emit_dot(&r);
        assert_eq!(dot.matches("label=").count(), 1);
        assert!(!dot.contains(" -- "));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with_args(["isogeny-atlas", "classify", "[0,0,0,0,0]"]), 1);
        assert_eq!(main_with_args(["isogeny-atlas", "frobnicate"]), 1);
        assert_eq!(
            main_with_args(["isogeny-atlas", "verify-tables", "/nonexistent/fixtures.jsonl"]),
            3
        );
        assert_eq!(
            main_with_args(["isogeny-atlas", "isogenies", "[0,1]", "--short", "--ell", "23"]),
            1
        );
    }

    #[test]
    fn wrong_expectation_is_a_mismatch() {
        let line = r#"{"label":"17.a","a_invariants":[1,-1,1,-6,-4],"expected_shape":"T4","expected_config":["[2,2]","[4]","[2]","[2]"],"source":"test"}"#;
        let summary = verify_entries(&parse_fixtures(line).unwrap());
        assert_eq!((summary.passed, summary.total), (0, 1));
        assert_eq!(summary.mismatches().next().unwrap().computed, "T4 ([2,2],[4],[4],[2])");
    }
}
