//! `sedqm` command line: `verify`, `simulate`, `eval`, `table`.
//!
//! Exit codes: 0 success, 1 verification or runtime failure, 2 usage error,
//! 3 expression error.

use std::cell::RefCell;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::brackets::{ModelId, PhysicalConstants};
use crate::dynamics::{
    integrate, integrate_model, operator_rhs, DynamicsError, DynamicsModel, ExtendedState,
    FieldConfig, ModelState, Sign, SpinState, Trajectory, Vec3,
};
use crate::expr::{eval_str, format_element};
use crate::table::{export_table, TableFormat};
use crate::verification::{run_suite, SuiteId, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EXPR: i32 = 3;

const EVAL_HELP: &str = "\
Expression grammar (lowest to highest precedence):
  expr    := term (('+' | '-') term)*
  term    := unary ('*' unary)*          explicit '*' only, groups left to right
  unary   := '-' unary | primary
  primary := number | 'I' | basis | '(' expr ')'
           | '[' expr ',' expr ',' expr ']'       ternary bracket a(bc) - (ca)b
           | 'comm' '(' expr ',' expr ')'          xy - yx
           | 'assoc' '(' expr ',' expr ',' expr ')' (xy)z - x(yz)

Numbers are decimal (`2`, `0.5`); a trailing `I` makes them imaginary (`3I`).
Basis units: i0..i7 and e1..e7; the identity is the number 1.
The algebra is not associative: `a*b*c` means `(a*b)*c` and prints a note.

Examples:
  sedqm eval \"[i4,i5,i2]\"                -> -2*i3
  sedqm eval \"(i1*i2)*i4 - i1*(i2*i4)\"   -> 2*i7";

#[derive(Debug, Parser)]
#[command(name = "sedqm", version, about = "Sedenion algebra, ternary brackets and non-associative qubit dynamics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run identity verification suites.
    Verify(VerifyArgs),
    /// Integrate a qubit model and write the trajectory as CSV.
    Simulate(SimulateArgs),
    /// Evaluate an algebra expression.
    #[command(after_long_help = EVAL_HELP)]
    Eval(EvalArgs),
    /// Export the multiplication table.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name (e.g. `quaternion-bracket`) or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 1.0)]
    pub hbar_tilde: f64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    /// Also list witnesses of violated identities.
    #[arg(long, short)]
    pub verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Standard,
    NaQubit,
    Extended,
}

impl From<ModelArg> for DynamicsModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Standard => DynamicsModel::StandardQubit,
            ModelArg::NaQubit => DynamicsModel::NaQubit,
            ModelArg::Extended => DynamicsModel::Extended,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Component equations.
    Components,
    /// Ternary bracket on algebra elements, projected back to components.
    Operator,
}

fn parse_vec3(s: &str) -> Result<Vec3, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got `{s}`"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("`{}`: {e}", p.trim()))?;
        if !slot.is_finite() {
            return Err(format!("`{}` is not finite", p.trim()));
        }
    }
    Ok(v)
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    let v: i64 = s.trim().parse().map_err(|_| format!("expected 1 or -1, got `{s}`"))?;
    Sign::try_from(v).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum, default_value_t = ModelArg::NaQubit)]
    pub model: ModelArg,
    /// Field for the standard and NA models.
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, default_value = "0,0,1")]
    pub omega: Vec3,
    /// Field in the s equation of the extended model.
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, default_value = "0,0,1")]
    pub omega1: Vec3,
    /// Field in the l equation of the extended model.
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, default_value = "0,0,1")]
    pub omega2: Vec3,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "1")]
    pub n1: Sign,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "1")]
    pub n2: Sign,
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, default_value = "1,0,0")]
    pub s0: Vec3,
    /// Initial l (extended model only).
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, default_value = "0,1,0")]
    pub l0: Vec3,
    #[arg(long, allow_hyphen_values = true, default_value_t = std::f64::consts::TAU)]
    pub t_max: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1e-3)]
    pub dt: f64,
    /// Only affects `--engine operator`, whose rate scales with it.
    #[arg(long, default_value_t = 1.0)]
    pub hbar_tilde: f64,
    #[arg(long, value_enum, default_value_t = Engine::Components)]
    pub engine: Engine,
    /// Largest component magnitude before the run is reported as a blow-up.
    #[arg(long, default_value_t = 1e100)]
    pub overflow_threshold: f64,
    /// CSV destination; stdout when omitted (the summary then goes to stderr).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Expression text, e.g. "[i4,i5,i2]".
    #[arg(allow_hyphen_values = true)]
    pub expression: String,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// `csv` or `markdown`.
    #[arg(long, default_value = "csv")]
    pub format: String,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Simulate(a) => cmd_simulate(&a, out, err),
        Command::Eval(a) => cmd_eval(&a.expression, out, err),
        Command::Table(a) => cmd_table(&a, out, err),
    }
}

fn usage(err: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

fn runtime(err: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_FAILURE
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let suites: Vec<SuiteId> = if a.suite.eq_ignore_ascii_case("all") {
        SuiteId::ALL.to_vec()
    } else {
        match a.suite.parse() {
            Ok(id) => vec![id],
            Err(e) => {
                let names: Vec<String> = SuiteId::ALL.iter().map(|s| s.slug()).collect();
                return usage(err, format!("{e}; expected `all` or one of {}", names.join(", ")));
            }
        }
    };
    let consts = match PhysicalConstants::with_hbar(a.hbar_tilde) {
        Ok(c) => c,
        Err(e) => return usage(err, e),
    };
    let reports: Vec<VerificationReport> = suites.iter().map(|&id| run_suite(id, &consts)).collect();
    let ok = reports.iter().all(VerificationReport::passed);

    let text = match a.format {
        ReportFormat::Json => {
            serde_json::to_string_pretty(&reports).expect("report serialization cannot fail") + "\n"
        }
        ReportFormat::Text if a.verbose => reports.iter().map(|r| r.to_text()).collect(),
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &reports {
                s += &r.header();
                s.push('\n');
                for f in &r.failures {
                    s += &format!("  failure {}: expected {}, got {}\n", f.case, f.expected, f.actual);
                }
            }
            s
        }
    };
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_FAILURE;
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn integrate_operator(
    model: DynamicsModel,
    initial: ModelState,
    field: &FieldConfig,
    consts: &PhysicalConstants,
    t_max: f64,
    dt: f64,
) -> Result<Trajectory<ModelState>, DynamicsError> {
    let id = match model {
        DynamicsModel::NaQubit => ModelId::Quaternionic,
        DynamicsModel::Extended => ModelId::Biquaternionic,
        DynamicsModel::StandardQubit => {
            return Err(DynamicsError::StateMismatch {
                model: "standard",
                state: "operator",
            })
        }
    };
    let failure = RefCell::new(None);
    let traj = integrate(initial, t_max, dt, |y| match operator_rhs(id, y, field, consts) {
        Ok(d) => d,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            match y {
                ModelState::Spin(_) => ModelState::Spin(SpinState::default()),
                ModelState::Extended(_) => ModelState::Extended(ExtendedState::default()),
            }
        }
    });
    match failure.into_inner() {
        Some(e) => Err(e),
        None => traj,
    }
}

pub fn cmd_simulate(a: &SimulateArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if !(a.dt > 0.0 && a.dt.is_finite()) {
        return usage(err, format!("--dt must be positive and finite, got {}", a.dt));
    }
    if !(a.t_max.is_finite() && a.t_max >= a.dt) {
        return usage(err, format!("--t-max must be finite and at least --dt, got {}", a.t_max));
    }
    if !(a.overflow_threshold > 0.0) {
        return usage(err, "--overflow-threshold must be positive");
    }
    let consts = match PhysicalConstants::with_hbar(a.hbar_tilde) {
        Ok(c) => c,
        Err(e) => return usage(err, e),
    };
    let model = DynamicsModel::from(a.model);
    if a.engine == Engine::Operator && model == DynamicsModel::StandardQubit {
        return usage(err, "the standard model has no operator engine");
    }
    let field = FieldConfig {
        omega: a.omega,
        omega1: a.omega1,
        omega2: a.omega2,
        n1: a.n1,
        n2: a.n2,
    };
    let initial = match model {
        DynamicsModel::Extended => ModelState::Extended(ExtendedState::new(a.s0, a.l0)),
        _ => ModelState::Spin(SpinState::new(a.s0)),
    };

    let result = match a.engine {
        Engine::Components => integrate_model(model, initial, &field, a.t_max, a.dt),
        Engine::Operator => integrate_operator(model, initial, &field, &consts, a.t_max, a.dt),
    };
    let mut traj = match result {
        Ok(t) => t,
        Err(DynamicsError::NonFinite { time }) => {
            return runtime(err, format!("blow-up: state became non-finite at t = {time}"));
        }
        Err(e) => return runtime(err, e),
    };

    let blow_up = traj.iter().position(|(_, s)| {
        use crate::dynamics::OdeState;
        s.components().iter().any(|x| x.abs() > a.overflow_threshold)
    });
    if let Some(i) = blow_up {
        traj.times.truncate(i + 1);
        traj.states.truncate(i + 1);
    }

    let mut summary = format!(
        "model {}: {} samples, t in [0, {}]\n",
        model,
        traj.len(),
        traj.times.last().copied().unwrap_or(0.0),
    );
    match model {
        DynamicsModel::Extended => {
            // |s|²−|l|² is conserved when n₁ω₁ = n₂ω₂, |s|²+|l|² when n₁ω₁ = −n₂ω₂
            let hyp = traj.max_drift(|s| s.as_extended().hyperbolic_norm());
            let sum = traj.max_drift(|s| {
                let x = s.as_extended();
                crate::dynamics::dot(&x.s, &x.s) + crate::dynamics::dot(&x.l, &x.l)
            });
            summary += &format!("max drift of |s|^2-|l|^2: {hyp:.3e}\n");
            summary += &format!("max drift of |s|^2+|l|^2: {sum:.3e}\n");
        }
        _ => {
            let d = traj.max_drift(|s| s.as_spin().norm_sq());
            summary += &format!("max drift of |s|^2: {d:.3e}\n");
        }
    }
    if let Some(i) = blow_up {
        summary += &format!(
            "blow-up: a component exceeded {:e} at t = {}; trajectory truncated there\n",
            a.overflow_threshold, traj.times[i]
        );
    }

    let csv = traj.to_csv();
    let write_ok = match &a.output {
        Some(path) => match std::fs::write(path, csv) {
            Ok(()) => out.write_all(summary.as_bytes()).is_ok(),
            Err(e) => return runtime(err, format!("cannot write {}: {e}", path.display())),
        },
        None => out.write_all(csv.as_bytes()).is_ok() && err.write_all(summary.as_bytes()).is_ok(),
    };
    if !write_ok {
        return EXIT_FAILURE;
    }
    if blow_up.is_some() {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

pub fn cmd_eval(text: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match eval_str(text) {
        Ok(ev) => {
            for n in &ev.notes {
                let col = text[..n.position.min(text.len())].chars().count();
                let _ = writeln!(err, "note: {}\n  {text}\n  {}^", n.message, " ".repeat(col));
            }
            if writeln!(out, "{}", format_element(&ev.value)).is_err() {
                return EXIT_FAILURE;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Some(c) = e.caret(text) {
                let _ = writeln!(err, "{c}");
            }
            EXIT_EXPR
        }
    }
}

pub fn cmd_table(a: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let format: TableFormat = match a.format.parse() {
        Ok(f) => f,
        Err(e) => return usage(err, e),
    };
    let text = export_table(format);
    match &a.output {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => runtime(err, format!("cannot write {}: {e}", path.display())),
        },
        None => {
            if out.write_all(text.as_bytes()).is_ok() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sedqm").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn vec3_and_sign_parsing() {
        assert_eq!(parse_vec3("0, -1.5,2"), Ok([0.0, -1.5, 2.0]));
        assert!(parse_vec3("1,2").is_err());
        assert!(parse_vec3("1,x,2").is_err());
        assert!(parse_vec3("1,inf,2").is_err());
        assert_eq!(parse_sign("-1"), Ok(Sign::Minus));
        assert!(parse_sign("0").is_err());
    }

    #[test]
    fn verify_one_suite() {
        let (code, out, _) = run_cli(&["verify", "--suite", "quaternion-bracket"]);
        assert_eq!(code, 0);
        assert!(out.contains("9/9 passed"), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_cli(&["verify", "--suite", "bogus"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["verify", "--hbar-tilde", "0"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["simulate", "--dt", "0"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["simulate", "--dt", "-1"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["simulate", "--n1", "2"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["simulate", "--t-max", "0.0001"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["table", "--format", "xml"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_cli(&[]).0, EXIT_USAGE);
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = run_cli(&["eval", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("assoc"));
    }

    #[test]
    fn eval_paths() {
        let (code, out, _) = run_cli(&["eval", "[i4,i5,i2]"]);
        assert_eq!((code, out.as_str()), (0, "-2*i3\n"));
        let (code, out, _) = run_cli(&["eval", "-i1*i1"]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
        let (code, _, err) = run_cli(&["eval", "i1*"]);
        assert_eq!(code, EXIT_EXPR);
        assert!(err.contains("\n     ^"), "{err}");
        let (code, _, err) = run_cli(&["eval", "i1*i2*i4"]);
        assert_eq!(code, 0);
        assert!(err.starts_with("note:"));
    }

    #[test]
    fn simulate_to_stdout() {
        let (code, out, err) = run_cli(&["simulate", "--t-max", "1", "--dt", "0.25"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        assert!(out.starts_with("t,s1,s2,s3\n"));
        assert!(err.contains("max drift of |s|^2"));
    }

    #[test]
    fn simulate_reports_blow_up() {
        let (code, out, err) = run_cli(&[
            "simulate", "--model", "extended", "--t-max", "50", "--dt", "0.01",
            "--overflow-threshold", "1e6",
        ]);
        assert_eq!(code, EXIT_FAILURE);
        assert!(err.contains("blow-up"), "{err}");
        let last: f64 = out.lines().last().unwrap().split(',').next().unwrap().parse().unwrap();
        assert!(last < 50.0 && last > 10.0);
    }

    #[test]
    fn operator_engine_matches_components() {
        let a = run_cli(&["simulate", "--model", "extended", "--n2", "-1", "--t-max", "1", "--dt", "0.1"]);
        let b = run_cli(&[
            "simulate", "--model", "extended", "--n2", "-1", "--t-max", "1", "--dt", "0.1",
            "--engine", "operator",
        ]);
        assert_eq!((a.0, b.0), (0, 0));
        for (x, y) in a.1.lines().skip(1).zip(b.1.lines().skip(1)) {
            for (p, q) in x.split(',').zip(y.split(',')) {
                let (p, q): (f64, f64) = (p.parse().unwrap(), q.parse().unwrap());
                assert!((p - q).abs() < 1e-12);
            }
        }
        assert_eq!(run_cli(&["simulate", "--model", "standard", "--engine", "operator"]).0, EXIT_USAGE);
    }
}
