//! The `flc` command line: `eval`, `surface`, `validate` and `mfdata`.
//!
//! Exit codes: 0 success, 1 definition error, 2 usage or input error,
//! 3 I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::controller::Controller;
use crate::format::{check_bytes, parse_number, ControllerDefinition};
use crate::washer::builtin_definition;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DEFINITION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Cap on swept points per variable.
const MAX_STEPS: usize = 100_000;
/// Cap on surface rows.
const MAX_ROWS: usize = 4_000_000;

#[derive(Parser, Debug)]
#[command(name = "flc", version, about = "Evaluate, validate and plot Mamdani fuzzy controllers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the crisp outputs for one set of inputs.
    Eval {
        #[command(flatten)]
        source: Source,
        /// Input assignment, repeatable.
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        /// Override the definition's sampling resolution.
        #[arg(long)]
        resolution: Option<usize>,
    },
    /// Sweep one or two inputs and write the response as CSV.
    Surface {
        #[command(flatten)]
        source: Source,
        /// Swept input and number of points, once or twice.
        #[arg(long = "sweep", value_name = "NAME:STEPS", required = true)]
        sweep: Vec<String>,
        /// Value of a fixed input, repeatable. Unset inputs use their midpoint.
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the definition's sampling resolution.
        #[arg(long)]
        resolution: Option<usize>,
    },
    /// Check a definition file and list its diagnostics.
    Validate {
        file: PathBuf,
    },
    /// Sample every membership function of one variable as CSV.
    Mfdata {
        #[command(flatten)]
        source: Source,
        /// Input or output variable name.
        variable: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the definition's sampling resolution.
        #[arg(long)]
        resolution: Option<usize>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Controller definition file (.flc).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Use a built-in controller.
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Builtin {
    Washer,
}

#[derive(Debug)]
enum Failure {
    Definition(Vec<String>),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Definition(_) => EXIT_DEFINITION,
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Eval {
            source,
            set,
            resolution,
        } => eval(&source, &set, resolution, stdout, stderr),
        Command::Surface {
            source,
            sweep,
            set,
            out,
            resolution,
        } => surface(&source, &sweep, &set, out.as_deref(), resolution, stdout),
        Command::Validate { file } => validate(&file, stdout),
        Command::Mfdata {
            source,
            variable,
            out,
            resolution,
        } => mfdata(&source, &variable, out.as_deref(), resolution, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            match &failure {
                Failure::Definition(lines) => {
                    for line in lines {
                        let _ = writeln!(stderr, "{line}");
                    }
                }
                Failure::Usage(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                }
                Failure::Io(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                }
            }
            failure.code()
        }
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn load(source: &Source) -> Result<ControllerDefinition, Failure> {
    if let Some(Builtin::Washer) = source.builtin {
        return Ok(builtin_definition());
    }
    let path = source
        .file
        .as_deref()
        .ok_or_else(|| Failure::Usage("one of --file or --builtin is required".into()))?;
    let bytes = read_file(path)?;
    let report = check_bytes(&bytes);
    match report.definition {
        Some(def) => Ok(def),
        None => Err(Failure::Definition(
            report.errors().map(|d| d.to_string()).collect(),
        )),
    }
}

fn controller(def: ControllerDefinition, resolution: Option<usize>) -> Result<Controller, Failure> {
    let c = Controller::new(def).map_err(|e| Failure::Definition(vec![e.to_string()]))?;
    match resolution {
        Some(n) => c.with_resolution(n).map_err(|e| Failure::Usage(e.to_string())),
        None => Ok(c),
    }
}

fn parse_assignments(set: &[String]) -> Result<Vec<(String, f64)>, Failure> {
    let mut out: Vec<(String, f64)> = Vec::with_capacity(set.len());
    for item in set {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected NAME=VALUE, got '{item}'")))?;
        let value = parse_number(value.trim())
            .ok_or_else(|| Failure::Usage(format!("invalid value '{value}' for '{name}'")))?;
        if out.iter().any(|(n, _)| n == name) {
            return Err(Failure::Usage(format!("'{name}' assigned twice")));
        }
        out.push((name.to_string(), value));
    }
    Ok(out)
}

/// Input values in declaration order. Unassigned inputs take `default`
/// or are an error when `default` is `None`.
fn input_values(
    c: &Controller,
    assignments: &[(String, f64)],
    default_midpoint: bool,
) -> Result<Vec<Option<f64>>, Failure> {
    let inputs = c.rule_base().inputs();
    for (name, _) in assignments {
        if !inputs.iter().any(|v| &v.name == name) {
            return Err(Failure::Usage(format!("unknown input '{name}'")));
        }
    }
    inputs
        .iter()
        .map(|var| {
            match assignments.iter().find(|(n, _)| *n == var.name) {
                Some(&(_, v)) => Ok(Some(v)),
                None if default_midpoint => Ok(None),
                None => Err(Failure::Usage(format!("no value for input '{}'", var.name))),
            }
        })
        .collect()
}

fn eval(
    source: &Source,
    set: &[String],
    resolution: Option<usize>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    let assignments = parse_assignments(set)?;
    let c = controller(load(source)?, resolution)?;
    let values: Vec<f64> = input_values(&c, &assignments, false)?
        .into_iter()
        .map(|v| v.unwrap_or_default())
        .collect();
    let eval = c
        .evaluate(&values)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let mut text = String::new();
    for o in &eval.outputs {
        if o.degraded {
            let _ = writeln!(
                stderr,
                "warning: no rule fired for '{}'; using the range midpoint",
                o.variable
            );
        }
        text.push_str(&format!("{} = {}\n", o.variable, format_significant(o.value, 6)));
    }
    write_stdout(stdout, &text)
}

fn parse_sweep(item: &str) -> Result<(String, usize), Failure> {
    let (name, steps) = item
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("expected NAME:STEPS, got '{item}'")))?;
    let steps: usize = steps
        .parse()
        .map_err(|_| Failure::Usage(format!("invalid step count '{steps}'")))?;
    if !(2..=MAX_STEPS).contains(&steps) {
        return Err(Failure::Usage(format!(
            "step count must be between 2 and {MAX_STEPS}"
        )));
    }
    Ok((name.to_string(), steps))
}

fn surface(
    source: &Source,
    sweep: &[String],
    set: &[String],
    out: Option<&Path>,
    resolution: Option<usize>,
    stdout: &mut dyn Write,
) -> CmdResult {
    if sweep.is_empty() || sweep.len() > 2 {
        return Err(Failure::Usage("give --sweep once or twice".into()));
    }
    let sweeps = sweep
        .iter()
        .map(|s| parse_sweep(s))
        .collect::<Result<Vec<_>, _>>()?;
    if sweeps.len() == 2 && sweeps[0].0 == sweeps[1].0 {
        return Err(Failure::Usage(format!("'{}' swept twice", sweeps[0].0)));
    }
    let rows: usize = sweeps.iter().map(|(_, n)| *n).product();
    if rows > MAX_ROWS {
        return Err(Failure::Usage(format!("surface would have more than {MAX_ROWS} rows")));
    }
    let assignments = parse_assignments(set)?;
    let c = controller(load(source)?, resolution)?;
    let rb = c.rule_base();

    let mut swept = Vec::with_capacity(sweeps.len());
    for (name, steps) in &sweeps {
        let idx = rb
            .input_index(name)
            .ok_or_else(|| Failure::Usage(format!("unknown input '{name}'")))?;
        if assignments.iter().any(|(n, _)| n == name) {
            return Err(Failure::Usage(format!("'{name}' is both swept and fixed")));
        }
        swept.push((idx, rb.inputs()[idx].universe.grid(*steps)));
    }
    let base: Vec<f64> = input_values(&c, &assignments, true)?
        .into_iter()
        .zip(rb.inputs())
        .map(|(v, var)| v.unwrap_or_else(|| var.universe.midpoint()))
        .collect();

    let mut csv = String::new();
    let header: Vec<&str> = sweeps
        .iter()
        .map(|(n, _)| n.as_str())
        .chain(rb.outputs().iter().map(|v| v.name.as_str()))
        .collect();
    csv.push_str(&header.join(","));
    csv.push('\n');

    let (first, rest) = swept.split_first().expect("one or two sweeps");
    let inner: &[f64] = rest.first().map(|(_, g)| g.as_slice()).unwrap_or(&[f64::NAN]);
    let mut values = base;
    for &x in &first.1 {
        values[first.0] = x;
        for &y in inner {
            let mut cells = vec![format_significant(x, 9)];
            if let Some((idx, _)) = rest.first() {
                values[*idx] = y;
                cells.push(format_significant(y, 9));
            }
            let eval = c
                .evaluate(&values)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            cells.extend(eval.outputs.iter().map(|o| format_significant(o.value, 9)));
            csv.push_str(&cells.join(","));
            csv.push('\n');
        }
    }
    emit(out, stdout, &csv)
}

fn validate(file: &Path, stdout: &mut dyn Write) -> CmdResult {
    let bytes = read_file(file)?;
    let report = check_bytes(&bytes);
    let mut text = String::new();
    for d in &report.diagnostics {
        text.push_str(&d.to_string());
        text.push('\n');
    }
    write_stdout(stdout, &text)?;
    if report.has_errors() {
        // diagnostics already printed
        return Err(Failure::Definition(Vec::new()));
    }
    Ok(())
}

fn mfdata(
    source: &Source,
    variable: &str,
    out: Option<&Path>,
    resolution: Option<usize>,
    stdout: &mut dyn Write,
) -> CmdResult {
    let def = load(source)?;
    let n = resolution.unwrap_or(def.settings.resolution);
    if n < 2 {
        return Err(Failure::Usage(format!("resolution must be at least 2, got {n}")));
    }
    let var = def
        .variable(variable)
        .ok_or_else(|| Failure::Usage(format!("unknown variable '{variable}'")))?;
    let mut csv = String::from("x");
    for t in &var.terms {
        csv.push(',');
        csv.push_str(&t.name);
    }
    csv.push('\n');
    for x in var.universe.grid(n) {
        csv.push_str(&format_significant(x, 9));
        for mu in var.memberships(x) {
            csv.push(',');
            csv.push_str(&format_significant(mu.value(), 9));
        }
        csv.push('\n');
    }
    emit(out, stdout, &csv)
}

fn write_stdout(stdout: &mut dyn Write, text: &str) -> CmdResult {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| Failure::Io(format!("cannot write output: {e}")))
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> CmdResult {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => write_stdout(stdout, text),
    }
}

/// `value` rounded to `digits` significant digits, keeping trailing zeros.
/// Switches to exponent notation for very small or very large magnitudes.
pub fn format_significant(value: f64, digits: usize) -> String {
    let digits = digits.max(1);
    let value = value + 0.0;
    if !value.is_finite() {
        return value.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, value);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if exp < -5 || exp >= digits as i32 {
        sci
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{value:.decimals$}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(30.0, 6), "30.0000");
        assert_eq!(format_significant(100.0, 6), "100.000");
        assert_eq!(format_significant(0.0, 6), "0.00000");
        assert_eq!(format_significant(-0.0, 6), "0.00000");
        assert_eq!(format_significant(10.000000001, 6), "10.0000");
        assert_eq!(format_significant(99.99996, 6), "100.000");
        assert_eq!(format_significant(33.333333333, 9), "33.3333333");
        assert_eq!(format_significant(0.00123, 6), "0.00123000");
        assert_eq!(format_significant(1234567.0, 6), "1.23457e6");
        assert_eq!(format_significant(1e-7, 3), "1.00e-7");
    }

    #[test]
    fn assignments() {
        let a = parse_assignments(&["x=1.5".into(), "y=-2".into()]).unwrap();
        assert_eq!(a, vec![("x".into(), 1.5), ("y".into(), -2.0)]);
        assert!(parse_assignments(&["x=abc".into()]).is_err());
        assert!(parse_assignments(&["x".into()]).is_err());
        assert!(parse_assignments(&["x=1".into(), "x=2".into()]).is_err());
        assert!(parse_assignments(&["x=inf".into()]).is_err());
    }
}
