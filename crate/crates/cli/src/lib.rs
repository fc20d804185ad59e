//! Argument handling and command dispatch for the `dedekind` binary.
//!
//! Exit codes: 0 when a report was produced (whatever the verdict), 2 for usage and
//! parse errors, 3 when the input violates a mathematical precondition, 1 for
//! internal errors.

use std::ffi::OsString;
use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dedekind_core::criterion::{Mode, Options};
use dedekind_core::parse::{parse_field_element, parse_poly};
use dedekind_core::report;
use dedekind_core::{Error, FieldElement, Poly, ValuedField};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "dedekind",
    version,
    about = "Decide whether R[alpha] is integrally closed over a valuation ring"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,

    /// `strict` refuses inputs whose irreducibility cannot be certified.
    #[arg(long, value_enum, global = true, default_value_t = ModeArg::Assert)]
    mode: ModeArg,

    #[arg(long, value_enum, global = true, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Subcommand, Debug)]
enum CommandArgs {
    /// Run the closedness test with all witnesses.
    Check(PolyArgs),
    /// Check whether the polynomial is v-Eisenstein.
    Eisenstein(PolyArgs),
    /// Closedness of R[a^(1/n)].
    Radical(RadicalArgs),
    /// Rewrite x^n - a as a v-Eisenstein polynomial.
    Transform(RadicalArgs),
    /// Ramification indices and residue degrees (closed inputs only).
    Ramify(PolyArgs),
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Valued field, e.g. `qp:2`, `lex:F2`, `lambda-trivial:F3:sqrt2`, `lambda-composite:p2:sqrt2`.
    #[arg(long)]
    field: String,
    /// Monic polynomial in `x`, e.g. `x^3 + (Y)*x + (X)`.
    #[arg(long)]
    poly: String,
}

#[derive(Args, Debug)]
struct RadicalArgs {
    #[arg(long)]
    field: String,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    a: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    Strict,
    Assert,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check(Poly),
    Eisenstein(Poly),
    Radical {
        field: ValuedField,
        n: u32,
        a: FieldElement,
    },
    Transform {
        field: ValuedField,
        n: u32,
        a: FieldElement,
    },
    Ramify(Poly),
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub mode: Mode,
    pub output: Output,
}

/// Result of one invocation: what to print and how to exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completed {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Completed {
    fn ok(stdout: String) -> Self {
        Completed {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(code: i32, stderr: String) -> Self {
        Completed {
            code,
            stdout: String::new(),
            stderr,
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_USAGE,
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_PRECONDITION,
        };
        Completed::failed(code, format!("error: {e}\n"))
    }
}

fn field_of(text: &str) -> Result<ValuedField, Error> {
    text.parse()
}

/// Parses the command line (including the program name).
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig, Completed>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        let text = e.render().to_string();
        if e.use_stderr() {
            Completed::failed(EXIT_USAGE, text)
        } else {
            Completed::ok(text)
        }
    })?;
    let parse_poly_args = |args: &PolyArgs| -> Result<Poly, Error> {
        let field = field_of(&args.field)?;
        parse_poly(&field, &args.poly)
    };
    let parse_radical_args = |args: &RadicalArgs| -> Result<(ValuedField, FieldElement), Error> {
        let field = field_of(&args.field)?;
        let a = parse_field_element(&field, &args.a)?;
        Ok((field, a))
    };
    let command = match &cli.command {
        CommandArgs::Check(args) => parse_poly_args(args).map(Command::Check),
        CommandArgs::Eisenstein(args) => parse_poly_args(args).map(Command::Eisenstein),
        CommandArgs::Ramify(args) => parse_poly_args(args).map(Command::Ramify),
        CommandArgs::Radical(args) => parse_radical_args(args).map(|(field, a)| Command::Radical {
            field,
            n: args.n,
            a,
        }),
        CommandArgs::Transform(args) => {
            parse_radical_args(args).map(|(field, a)| Command::Transform {
                field,
                n: args.n,
                a,
            })
        }
    }
    .map_err(|e| Completed::failed(EXIT_USAGE, format!("error: {e}\n")))?;
    Ok(RunConfig {
        command,
        mode: match cli.mode {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Assert => Mode::Assert,
        },
        output: cli.output,
    })
}

fn render<T: fmt::Display + ?Sized>(
    output: Output,
    value: &T,
    json: impl FnOnce() -> String,
) -> String {
    match output {
        Output::Text => value.to_string(),
        Output::Json => json() + "\n",
    }
}

/// Executes a validated configuration.
pub fn run(config: &RunConfig) -> Completed {
    let options = Options {
        mode: config.mode,
        ..Options::default()
    };
    let out = config.output;
    let result = match &config.command {
        Command::Check(f) => report::check(f, &options).map(|r| render(out, &r, || r.to_json())),
        Command::Eisenstein(f) => report::eisenstein(f).map(|r| render(out, &r, || r.to_json())),
        Command::Ramify(f) => report::ramify(f, &options).map(|r| render(out, &r, || r.to_json())),
        Command::Radical { field, n, a } => {
            report::radical(field, *n, a, &options).map(|r| render(out, &r, || r.to_json()))
        }
        Command::Transform { field, n, a } => {
            report::transform(field, *n, a).map(|r| render(out, &r, || r.to_json()))
        }
    };
    match result {
        Ok(stdout) => Completed::ok(stdout),
        Err(e) => Completed::from_error(&e),
    }
}

/// [`parse_config`] followed by [`run`].
pub fn run_args<I, T>(argv: I) -> Completed
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_config(argv) {
        Ok(config) => run(&config),
        Err(done) => done,
    }
}

/// Canonical command line, re-parseable by [`parse_config`] after shell splitting.
impl fmt::Display for RunConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self
            .to_args()
            .into_iter()
            .map(|a| {
                if a.contains(' ') {
                    format!("\"{a}\"")
                } else {
                    a
                }
            })
            .collect();
        f.write_str(&args.join(" "))
    }
}

impl RunConfig {
    /// The canonical command line split into arguments, without the program name.
    pub fn to_args(&self) -> Vec<String> {
        let (name, field, rest): (&str, String, Vec<String>) = match &self.command {
            Command::Check(p) => (
                "check",
                p.field().to_string(),
                vec!["--poly".into(), p.to_string()],
            ),
            Command::Eisenstein(p) => (
                "eisenstein",
                p.field().to_string(),
                vec!["--poly".into(), p.to_string()],
            ),
            Command::Ramify(p) => (
                "ramify",
                p.field().to_string(),
                vec!["--poly".into(), p.to_string()],
            ),
            Command::Radical { field, n, a } => (
                "radical",
                field.to_string(),
                vec!["--n".into(), n.to_string(), "--a".into(), a.to_string()],
            ),
            Command::Transform { field, n, a } => (
                "transform",
                field.to_string(),
                vec!["--n".into(), n.to_string(), "--a".into(), a.to_string()],
            ),
        };
        let mut args = vec![name.to_string(), "--field".into(), field];
        args.extend(rest);
        args.extend([
            "--mode".to_string(),
            match self.mode {
                Mode::Strict => "strict".into(),
                Mode::Assert => "assert".into(),
            },
            "--output".to_string(),
            match self.output {
                Output::Text => "text".into(),
                Output::Json => "json".into(),
            },
        ]);
        args
    }
}
