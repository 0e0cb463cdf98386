//! The `hopfk` command line. Exit status: 0 on success, 1 when a check fails,
//! 2 on unreadable input.
//!
//! Algebra, diagram, group and homomorphism arguments accept the short specs
//! understood by [`crate::io`] as well as file paths.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::fuzz::{random_walk, FuzzLimits, MoveKind};
use crate::group::GroupTable;
use crate::heegaard::{enumerate_colorings, lens_diagram, validate_diagram, ColoredDiagram};
use crate::hopf::{build_function_hopf, check_structural_lemmas, derive_integral_data, validate_crossing, validate_hopf, CrossingStatus, LemmaConfig};
use crate::invariant::{contract_invariant, ContractionConfig, InvariantError};
use crate::io::{invariant_record, parse_algebra_spec, parse_diagram_spec, parse_group_spec, parse_phi_spec, resolve_colors, IoError};
use crate::oracle::{count_lifts, LiftCountQuery};
use crate::scalar::Scalar;

#[derive(Debug, Parser)]
#[command(name = "hopfk", version, about = "Exact invariants of colored Heegaard diagrams from Hopf group-coalgebras")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms, the crossing, and the trace/cotrace identities.
    ValidateAlgebra {
        algebra: String,
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
    },
    /// Compute Z and K for a colored diagram.
    Invariant {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        diagram: String,
        /// Comma-separated color names, overriding those in the diagram file.
        #[arg(long)]
        colors: Option<String>,
    },
    /// List every valid coloring of a diagram.
    Colorings {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        group: String,
    },
    /// K of lens(p) for p = 1..2N under every valid coloring.
    LensTable {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Compare K of the function algebra of φ with a brute-force lift count.
    OracleCompare {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        colors: Option<String>,
    },
    /// Apply random legal moves and check that K never changes.
    MoveFuzz {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        colors: Option<String>,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_genus: usize,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("{0}")]
    Failed(String),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Output(_) => 2,
            CliError::Invariant(InvariantError::Config(_)) => 2,
            CliError::Invariant(_) | CliError::Failed(_) => 1,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    run(&cli, out, err)
}

/// Runs a parsed command, returning the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn emit(out: &mut dyn Write, cli: &Cli, value: &Value, text: &str) -> Result<(), CliError> {
    if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(value).expect("plain JSON"))?;
    } else {
        write!(out, "{text}")?;
    }
    Ok(())
}

fn colored(spec: &str, colors: Option<&str>, pi: &GroupTable) -> Result<ColoredDiagram, CliError> {
    let (d, names) = parse_diagram_spec(spec)?;
    let override_names: Option<Vec<String>> = colors.map(|c| c.split(',').map(str::to_string).collect());
    let names = override_names.or(names);
    let colors = resolve_colors(&d, names.as_deref(), pi)?;
    Ok(ColoredDiagram::new(d, colors))
}

fn checked(d: &ColoredDiagram, pi: &GroupTable, err_text: &mut String) -> bool {
    let r = validate_diagram(d, pi);
    if !r.passed() {
        err_text.push_str(&r.to_string());
        return false;
    }
    for w in &r.warnings {
        err_text.push_str(&format!("warning: {w}\n"));
    }
    true
}

fn color_names(d: &ColoredDiagram, pi: &GroupTable) -> String {
    d.colors.iter().map(|&a| pi.name(a)).collect::<Vec<_>>().join(",")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = ContractionConfig::from_env()?;
    match &cli.command {
        Command::ValidateAlgebra { algebra, max_arity } => {
            let h = parse_algebra_spec(algebra)?;
            let axioms = validate_hopf(&h);
            let crossing = validate_crossing(&h);
            let lemmas = check_structural_lemmas(&h, &derive_integral_data(&h), LemmaConfig { max_arity: *max_arity });
            let crossing_ok = !matches!(&crossing, CrossingStatus::Checked(r) if !r.passed());
            let ok = axioms.passed() && lemmas.passed() && crossing_ok;
            let crossing_text = match &crossing {
                CrossingStatus::NotProvided => "crossing: not provided\n".to_string(),
                CrossingStatus::Checked(r) => r.to_string(),
            };
            let text = format!("{axioms}{crossing_text}{lemmas}{}\n", if ok { "PASS" } else { "FAIL" });
            let report_json = |r: &crate::report::Report| {
                json!({
                    "passed": r.passed(),
                    "checks": r.checks_run,
                    "violations": r.violations.iter().map(|v| json!({"check": v.check, "detail": v.detail})).collect::<Vec<_>>(),
                    "warnings": r.warnings,
                })
            };
            let value = json!({
                "algebra": h.name(),
                "axioms": report_json(&axioms),
                "crossing": match &crossing { CrossingStatus::NotProvided => Value::Null, CrossingStatus::Checked(r) => report_json(r) },
                "lemmas": report_json(&lemmas),
                "passed": ok,
            });
            emit(out, cli, &value, &text)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Invariant { algebra, diagram, colors } => {
            let h = parse_algebra_spec(algebra)?;
            let d = colored(diagram, colors.as_deref(), h.pi())?;
            let mut notes = String::new();
            if !checked(&d, h.pi(), &mut notes) {
                return Err(CliError::Failed(format!("invalid colored diagram\n{notes}")));
            }
            let v = contract_invariant(&h, &d, cfg)?;
            let text = format!("{notes}Z = {}\nK = {}\n", v.z, v.k);
            emit(out, cli, &invariant_record(&v, &d, h.pi()), &text)?;
            Ok(0)
        }
        Command::Colorings { diagram, group } => {
            let pi = parse_group_spec(group)?;
            let (d, _) = parse_diagram_spec(diagram)?;
            let r = d.check_structure();
            if !r.passed() {
                return Err(CliError::Failed(r.to_string()));
            }
            let all: Vec<Vec<&str>> =
                enumerate_colorings(&d, &pi).iter().map(|c| c.iter().map(|&a| pi.name(a)).collect()).collect();
            let mut text = String::new();
            for c in &all {
                text.push_str(&format!("({})\n", c.join(", ")));
            }
            text.push_str(&format!("{} colorings\n", all.len()));
            emit(out, cli, &json!({ "colorings": all }), &text)?;
            Ok(0)
        }
        Command::LensTable { algebra, max_n } => {
            let h = parse_algebra_spec(algebra)?;
            let pi = h.pi();
            let mut rows = Vec::new();
            let mut text = format!("{:>4}  {:<12} K\n", "p", "color");
            for p in 1..=2 * max_n {
                let d = lens_diagram(p).expect("p is positive");
                for colors in enumerate_colorings(&d, pi) {
                    let cd = ColoredDiagram::new(d.clone(), colors);
                    let v = contract_invariant(&h, &cd, cfg)?;
                    text.push_str(&format!("{p:>4}  {:<12} {}\n", color_names(&cd, pi), v.k));
                    rows.push(json!({"p": p, "colors": cd.colors.iter().map(|&a| pi.name(a)).collect::<Vec<_>>(), "Z": v.z.to_string(), "K": v.k.to_string()}));
                }
            }
            emit(out, cli, &json!({ "algebra": h.name(), "rows": rows }), &text)?;
            Ok(0)
        }
        Command::OracleCompare { phi, diagram, colors } => {
            let phi = parse_phi_spec(phi)?;
            let h = build_function_hopf(&phi).map_err(IoError::from)?;
            let d = colored(diagram, colors.as_deref(), &phi.target)?;
            let mut notes = String::new();
            if !checked(&d, &phi.target, &mut notes) {
                return Err(CliError::Failed(format!("invalid colored diagram\n{notes}")));
            }
            let v = contract_invariant(&h, &d, cfg)?;
            let q = LiftCountQuery { words: d.diagram.extract_words(), colors: d.colors.clone(), phi: phi.clone() };
            let count = count_lifts(&q).map_err(|e| CliError::Failed(e.to_string()))?;
            let ok = v.k == Scalar::from_int(count as i64);
            let verdict = if ok { "PASS" } else { "FAIL" };
            let text = format!("{notes}K = {}\nlifts = {count}\n{verdict}\n", v.k);
            emit(out, cli, &json!({"K": v.k.to_string(), "lifts": count, "passed": ok}), &text)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::MoveFuzz { algebra, diagram, colors, steps, seed, max_genus, max_crossings } => {
            let h = parse_algebra_spec(algebra)?;
            let pi = h.pi();
            let d = colored(diagram, colors.as_deref(), pi)?;
            let mut notes = String::new();
            if !checked(&d, pi, &mut notes) {
                return Err(CliError::Failed(format!("invalid colored diagram\n{notes}")));
            }
            let base = contract_invariant(&h, &d, cfg)?;
            let mut text = format!("{notes}seed {seed}\nbaseline K = {}\n", base.k);
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let limits = FuzzLimits { max_genus: *max_genus, max_crossings: *max_crossings };
            let walk = random_walk(&d, pi, *steps, limits, &mut rng);
            let mut ok = true;
            let mut records = Vec::new();
            for (k, (m, next)) in walk.iter().enumerate() {
                let v = contract_invariant(&h, next, cfg)?;
                let same = v.k == base.k;
                ok &= same;
                let kind = MoveKind::of(m);
                text.push_str(&format!(
                    "step {:>3}  {:<11} genus {} crossings {:>2}  K = {}{}\n",
                    k + 1,
                    format!("{kind:?}"),
                    next.genus(),
                    next.diagram.crossings.len(),
                    v.k,
                    if same { "" } else { "  MISMATCH" }
                ));
                records.push(json!({"step": k + 1, "move": m, "K": v.k.to_string()}));
            }
            if walk.len() < *steps {
                text.push_str(&format!("stopped after {} steps: no legal move within limits\n", walk.len()));
            }
            text.push_str(if ok { "PASS\n" } else { "FAIL\n" });
            let value = json!({"seed": seed, "baseline_K": base.k.to_string(), "steps": records, "passed": ok});
            emit(out, cli, &value, &text)?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

