//! The `radtrig` command line.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::antiderivative::{ClosedForm, Form};
use crate::cardioid::Cardioid;
use crate::format::{fmt_g15, parse_angle};
use crate::globalize::{definite_integral, globalize, Method};
use crate::kernel::{eval_integrand, Family, IntegrandSpec, Sign, SignCarrier};
use crate::plot;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Discrepancy above which `--verify` fails.
pub const VERIFY_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "radtrig",
    version,
    about = "Antiderivatives of sqrt(1 +- sin x) and sqrt(1 +- cos x), definite integrals and cardioid lengths"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the integrand sqrt(1 +- trig x)
    Eval(EvalArgs),
    /// Evaluate a closed-form antiderivative (C = 0)
    Antideriv(AntiderivArgs),
    /// Definite integral of sqrt(1 +- trig x)
    Integrate(IntegrateArgs),
    /// Arc length of the cardioid r = a(1 +- trig theta)
    Cardioid(CardioidArgs),
    /// Write plot data as CSV or SVG
    Plot(PlotArgs),
    /// Run the built-in cross-checks
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "sin", alias = "sine")]
    Sin,
    #[value(name = "cos", alias = "cosine")]
    Cos,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sin => Family::Sine,
            FamilyArg::Cos => Family::Cosine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    /// Rationalized numerator
    #[value(name = "A", alias = "a")]
    A,
    /// Half-angle
    #[value(name = "B", alias = "b")]
    B,
    /// Shift x = y - pi/2
    #[value(name = "C1", alias = "c1")]
    C1,
    /// Shift x = pi/2 - y
    #[value(name = "C2", alias = "c2")]
    C2,
    /// Floor form from the forward shift
    #[value(name = "G1", alias = "g1")]
    G1,
    /// Ceiling form from the backward shift
    #[value(name = "G2", alias = "g2")]
    G2,
    /// Floor form for sqrt(1 + sin x) (requires --sign +)
    #[value(name = "I1")]
    I1,
    /// Floor form for sqrt(1 - sin x) (requires --sign -)
    #[value(name = "I2")]
    I2,
}

impl FormArg {
    fn resolve(self, spec: IntegrandSpec) -> Result<Form, String> {
        Ok(match self {
            FormArg::A => Form::Rationalized,
            FormArg::B => Form::HalfAngle,
            FormArg::C1 => Form::ShiftForward,
            FormArg::C2 => Form::ShiftBackward,
            FormArg::G1 => Form::FloorShiftForward,
            FormArg::G2 => Form::FloorShiftBackward,
            FormArg::I1 | FormArg::I2 => {
                let want = if self == FormArg::I1 {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                if spec.family != Family::Sine || spec.sign != want {
                    return Err(format!(
                        "form {self:?} is the floor form of sqrt(1 {want} sin x); got {spec}"
                    ));
                }
                Form::FloorShiftForward
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Global,
    Split,
    Floor,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Global => Method::GlobalForm,
            MethodArg::Split => Method::SplitLocal,
            MethodArg::Floor => Method::FloorForm,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// Trigonometric family
    #[arg(long, visible_alias = "trig")]
    pub family: FamilyArg,
    /// Sign under the radical
    #[arg(long)]
    pub sign: SignArg,
}

impl SpecArgs {
    fn spec(&self) -> IntegrandSpec {
        IntegrandSpec::new(self.family.into(), self.sign.into())
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Angle in radians, or a pi-expression such as 3pi/2
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct AntiderivArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, value_enum)]
    pub form: FormArg,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
    pub x: f64,
    /// Evaluate a local form made continuous, anchored on the interval holding this point
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
    pub global_base: Option<f64>,
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
    pub from: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
    pub to: f64,
    #[arg(long, value_enum, default_value = "global")]
    pub method: MethodArg,
    /// Also run the quadrature oracle and report the discrepancy
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct CardioidArgs {
    /// Scale a > 0
    #[arg(long)]
    pub a: f64,
    #[arg(long, visible_alias = "family")]
    pub trig: FamilyArg,
    #[arg(long)]
    pub sign: SignArg,
    #[arg(long, value_enum, default_value = "global")]
    pub method: MethodArg,
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotTarget {
    Cardioid,
    AbsCarrier,
    Antiderivative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CarrierArg {
    #[value(name = "cos")]
    Cos,
    #[value(name = "sin")]
    Sin,
    #[value(name = "coshalf+sinhalf")]
    CosHalfPlusSinHalf,
    #[value(name = "coshalf-sinhalf")]
    CosHalfMinusSinHalf,
    #[value(name = "sinhalf")]
    SinHalf,
    #[value(name = "coshalf")]
    CosHalf,
}

impl From<CarrierArg> for SignCarrier {
    fn from(c: CarrierArg) -> Self {
        match c {
            CarrierArg::Cos => SignCarrier::CosX,
            CarrierArg::Sin => SignCarrier::SinX,
            CarrierArg::CosHalfPlusSinHalf => SignCarrier::CosHalfPlusSinHalf,
            CarrierArg::CosHalfMinusSinHalf => SignCarrier::CosHalfMinusSinHalf,
            CarrierArg::SinHalf => SignCarrier::SinHalf,
            CarrierArg::CosHalf => SignCarrier::CosHalf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(value_enum)]
    pub target: PlotTarget,
    /// Cardioid scale
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, visible_alias = "family", default_value = "sin")]
    pub trig: FamilyArg,
    #[arg(long, default_value = "+")]
    pub sign: SignArg,
    /// Carrier to plot in absolute value (abs-carrier)
    #[arg(long, default_value = "cos")]
    pub kind: CarrierArg,
    /// Antiderivative form (antiderivative)
    #[arg(long, value_enum, default_value = "G1")]
    pub form: FormArg,
    /// Plot a local form made continuous instead of the raw local form
    #[arg(long)]
    pub global: bool,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle, default_value = "0")]
    pub from: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle, default_value = "2pi")]
    pub to: f64,
    #[arg(long, default_value_t = plot::DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: PlotFormat,
    /// Output file; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    All,
    Forms,
    Av,
    Cardioid,
}

impl From<ScopeArg> for verify::Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::All => verify::Scope::All,
            ScopeArg::Forms => verify::Scope::Forms,
            ScopeArg::Av => verify::Scope::Av,
            ScopeArg::Cardioid => verify::Scope::Cardioid,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub scope: ScopeArg,
}

/// What `integrate` and `cardioid` print.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Vec<(&'static str, String)>,
    pub method: Method,
    pub value: f64,
    /// `(oracle value, |value − oracle|)`, present iff `--verify` was given.
    pub verification: Option<(f64, f64)>,
}

impl fmt::Display for OutputRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        let inputs: Vec<String> = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(f, "inputs: {}", inputs.join(" "))?;
        writeln!(f, "method: {}", self.method)?;
        writeln!(f, "value: {}", fmt_g15(self.value))?;
        if let Some((oracle, discrepancy)) = self.verification {
            writeln!(f, "oracle: {}", fmt_g15(oracle))?;
            writeln!(f, "discrepancy: {}", fmt_g15(discrepancy))?;
        }
        Ok(())
    }
}

enum Failure {
    Usage(String),
    Io(String),
    Numeric(crate::Error),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Numeric(e)
    }
}

fn echo(args: &[OsString]) -> String {
    // the program path varies between installs; echo a fixed name
    std::iter::once("radtrig".to_string())
        .chain(
            args.iter()
                .skip(1)
                .map(|a| a.to_string_lossy().into_owned()),
        )
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
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
    let command = echo(&args);
    match dispatch(cli.command, &command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
        Err(Failure::Numeric(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Io(e.to_string()))
}

fn dispatch(command: Command, echo: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Eval(a) => {
            let v = eval_integrand(a.spec.spec(), a.x)?;
            write_out(out, &format!("{}\n", fmt_g15(v)))?;
            Ok(EXIT_OK)
        }
        Command::Antideriv(a) => {
            let spec = a.spec.spec();
            let form = a.form.resolve(spec).map_err(Failure::Usage)?;
            let cf = ClosedForm::new(spec, form);
            let v = match a.global_base {
                Some(base) if form.is_local() => globalize(cf, base)?.eval(a.x)?,
                Some(_) => {
                    return Err(Failure::Usage(
                        "--global-base applies to local forms only".into(),
                    ))
                }
                None => cf.eval(a.x)?,
            };
            write_out(out, &format!("{}\n", fmt_g15(v)))?;
            Ok(EXIT_OK)
        }
        Command::Integrate(a) => {
            let spec = a.spec.spec();
            let method: Method = a.method.into();
            let value = definite_integral(spec, a.from, a.to, method)?;
            let verification = if a.verify {
                let oracle = definite_integral(spec, a.from, a.to, Method::Oracle)?;
                Some((oracle, (value - oracle).abs()))
            } else {
                None
            };
            let rec = OutputRecord {
                command: echo.to_string(),
                inputs: vec![
                    ("family", spec.family.to_string()),
                    ("sign", spec.sign.to_string()),
                    ("from", fmt_g15(a.from)),
                    ("to", fmt_g15(a.to)),
                ],
                method,
                value,
                verification,
            };
            write_out(out, &rec.to_string())?;
            Ok(verdict(&rec))
        }
        Command::Cardioid(a) => {
            let c = Cardioid::new(a.a, a.trig.into(), a.sign.into())?;
            let method: Method = a.method.into();
            let value = c.length(method)?;
            let verification = if a.verify {
                let oracle = c.length(Method::Oracle)?;
                Some((oracle, (value - oracle).abs()))
            } else {
                None
            };
            let rec = OutputRecord {
                command: echo.to_string(),
                inputs: vec![
                    ("a", fmt_g15(a.a)),
                    ("trig", c.family().to_string()),
                    ("sign", c.sign().to_string()),
                ],
                method,
                value,
                verification,
            };
            write_out(out, &rec.to_string())?;
            Ok(verdict(&rec))
        }
        Command::Plot(a) => plot_command(a, out),
        Command::Verify(a) => {
            let checks = verify::run(a.scope.into())?;
            let mut text = String::new();
            for c in &checks {
                text.push_str(&c.to_string());
                text.push('\n');
            }
            let failed = checks.iter().filter(|c| !c.passed()).count();
            text.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
            write_out(out, &text)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

fn verdict(rec: &OutputRecord) -> i32 {
    match rec.verification {
        // NaN fails too
        Some((_, d)) if d.is_nan() || d > VERIFY_THRESHOLD => EXIT_VERIFY,
        _ => EXIT_OK,
    }
}

fn plot_command(a: PlotArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.samples < 3 {
        return Err(Failure::Usage(format!(
            "--samples must be at least 3, got {}",
            a.samples
        )));
    }
    let spec = IntegrandSpec::new(a.trig.into(), a.sign.into());
    let series = match a.target {
        PlotTarget::Cardioid => {
            let c = Cardioid::new(a.a, a.trig.into(), a.sign.into())?;
            plot::cardioid_series(&c, a.samples)?
        }
        PlotTarget::AbsCarrier => plot::abs_carrier_series(a.kind.into(), a.samples)?,
        PlotTarget::Antiderivative => {
            let form = a.form.resolve(spec).map_err(Failure::Usage)?;
            let cf = ClosedForm::new(spec, form);
            if a.global && form.is_local() {
                let lat = cf.carrier().lattice();
                let g = globalize(cf, 0.5 * (lat.zero(0) + lat.zero(1)))?;
                plot::globalized_series(&g, a.from, a.to, a.samples)?
            } else {
                plot::antiderivative_series(cf, a.from, a.to, a.samples)?
            }
        }
    };
    let text = match a.format {
        PlotFormat::Csv => plot::to_csv(&series),
        PlotFormat::Svg => plot::to_svg(&series),
    };
    match a.out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        None => write_out(out, &text)?,
    }
    Ok(EXIT_OK)
}
