use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use uninorm::checkers;
use uninorm::format;
use uninorm::generators;
use uninorm::oracle::{self, VerifyOptions};
use uninorm::render::{self, RenderOptions};
use uninorm::single_peaked;
use uninorm::{BinaryOperation, LinearOrder};

/// Idempotent discrete uninorms: enumeration, property checks, contour
/// plots, and exhaustive verification.
///
/// Exit status: 0 on success, 1 when a checked property or verification
/// fails, 2 on usage or input errors.
#[derive(Parser)]
#[command(name = "uninorm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of one kind on L_n; the count goes to stderr.
    Enumerate {
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Only symmetric tables (conservative kind).
        #[arg(long)]
        symmetric: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the property profile of a table as JSON.
    Check {
        /// Table file (text or JSON); `-` or nothing reads stdin.
        input: Option<PathBuf>,
        /// Use a built-in figure fixture instead of a file.
        #[arg(long, conflicts_with = "input")]
        fixture: Option<String>,
        /// Comma-separated properties that must all hold for exit status 0.
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
    },
    /// Draw a contour plot or a single-peakedness profile.
    Render {
        /// Table file, or order file with `--style profile`.
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "input")]
        fixture: Option<String>,
        /// An order given inline, e.g. "2 3 4 1 5".
        #[arg(long, conflicts_with_all = ["input", "fixture"])]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = Style::Text)]
        style: Style,
        /// Overlay the first associativity witness rectangle (text style).
        #[arg(long)]
        witness: bool,
    },
    /// Check one characterization exhaustively and print a JSON report.
    Verify {
        /// A theorem name, or `open-questions`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_SEED)]
        seed: u64,
        /// Sample size where a check samples.
        #[arg(long, default_value_t = oracle::DEFAULT_SAMPLES)]
        samples: u64,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Closed-form count of idempotent discrete uninorms.
    Count {
        #[arg(long)]
        n: usize,
        /// Restrict to neutral element e.
        #[arg(long)]
        e: Option<usize>,
        /// Also generate the uninorms and compare.
        #[arg(long)]
        verify: bool,
    },
    /// List fixtures, theorems, or property names.
    List { what: Listing },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Uninorms,
    SinglePeaked,
    Conservative,
    Gspecs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Text,
    Dot,
    Profile,
}

#[derive(Clone, Copy, ValueEnum)]
enum Listing {
    Fixtures,
    Theorems,
    Properties,
}

/// Errors that should end with status 1 rather than 2.
#[derive(Debug)]
struct Failed;

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("check failed")
    }
}

impl std::error::Error for Failed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Failed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Enumerate {
            kind,
            n,
            symmetric,
            format,
            output,
        } => enumerate(kind, n, symmetric, format, output.as_deref()),
        Command::Check {
            input,
            fixture,
            properties,
        } => check(input.as_deref(), fixture.as_deref(), &properties),
        Command::Render {
            input,
            fixture,
            order,
            style,
            witness,
        } => render_cmd(
            input.as_deref(),
            fixture.as_deref(),
            order.as_deref(),
            style,
            witness,
        ),
        Command::Verify {
            theorem,
            n,
            seed,
            samples,
            jobs,
        } => verify(
            &theorem,
            n,
            VerifyOptions {
                seed,
                samples,
                jobs,
            },
        ),
        Command::Count { n, e, verify } => count(n, e, verify),
        Command::List { what } => list(what),
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("cannot read stdin")?;
            Ok(text)
        }
    }
}

fn load_table(input: Option<&Path>, fixture: Option<&str>) -> Result<BinaryOperation> {
    if let Some(name) = fixture {
        return Ok(oracle::fixture(name)?);
    }
    Ok(format::table_from_str(&read_input(input)?)?)
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn enumerate(
    kind: Kind,
    n: usize,
    symmetric: bool,
    format: Format,
    output: Option<&Path>,
) -> Result<()> {
    let sink: Box<dyn Write> = match output {
        Some(p) => {
            Box::new(fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?)
        }
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let json = format == Format::Json;
    let mut count = 0u64;

    let mut write_table =
        |out: &mut BufWriter<Box<dyn Write>>, op: &BinaryOperation| -> Result<()> {
            if json {
                writeln!(out, "{}", format::table_to_json(op))?;
            } else {
                if count > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", format::table_to_text(op))?;
            }
            count += 1;
            Ok(())
        };

    match kind {
        Kind::Uninorms => {
            for op in generators::generate_all_uninorms_gc(n)? {
                write_table(&mut out, &op)?;
            }
        }
        Kind::Conservative => {
            for op in oracle::enumerate_conservative(n, symmetric)? {
                write_table(&mut out, &op)?;
            }
        }
        Kind::SinglePeaked => {
            for ord in single_peaked::enumerate_single_peaked(n)? {
                if json {
                    writeln!(out, "{}", serde_json::to_string(&ord)?)?;
                } else {
                    writeln!(out, "{ord}")?;
                }
                count += 1;
            }
        }
        Kind::Gspecs => {
            for spec in generators::enumerate_gspecs(n)? {
                if json {
                    writeln!(out, "{}", json!({"e": spec.e, "g": spec.g}))?;
                } else {
                    writeln!(out, "{spec}")?;
                }
                count += 1;
            }
        }
    }
    out.flush()?;
    eprintln!("{count}");
    Ok(())
}

fn check(input: Option<&Path>, fixture: Option<&str>, properties: &[String]) -> Result<()> {
    let props: Vec<&str> = properties
        .iter()
        .map(|p| p.trim())
        .filter(|p| !p.is_empty())
        .collect();
    if let Some(bad) = props
        .iter()
        .find(|p| !oracle::PROPERTY_NAMES.contains(p) && **p != "neutral")
    {
        bail!(uninorm::Error::UnknownProperty(bad.to_string()));
    }
    let op = load_table(input, fixture)?;
    let profile = oracle::profile(&op);
    print_json(&profile)?;
    let failing: Vec<&str> = props
        .iter()
        .copied()
        .filter(|p| profile.property(p) != Some(true))
        .collect();
    if failing.is_empty() {
        Ok(())
    } else {
        eprintln!("does not hold: {}", failing.join(", "));
        Err(Failed.into())
    }
}

fn load_order(
    input: Option<&Path>,
    fixture: Option<&str>,
    order: Option<&str>,
) -> Result<LinearOrder> {
    if let Some(text) = order {
        return Ok(format::order_from_text(text)?);
    }
    if let Some(name) = fixture {
        return Ok(oracle::profile_fixture(name)?);
    }
    Ok(format::order_from_text(&read_input(input)?)?)
}

fn render_cmd(
    input: Option<&Path>,
    fixture: Option<&str>,
    order: Option<&str>,
    style: Style,
    witness: bool,
) -> Result<()> {
    let text = match style {
        Style::Profile => render::render_profile(&load_order(input, fixture, order)?),
        Style::Text | Style::Dot => {
            if order.is_some() {
                bail!("--order applies to --style profile only");
            }
            let op = load_table(input, fixture)?;
            if let Style::Dot = style {
                render::render_contour_dot(&op)
            } else {
                let mut options = RenderOptions::default();
                if witness {
                    if let Some(r) = checkers::rectangle_test(&op)? {
                        options = RenderOptions::with_rectangle(&r);
                    }
                }
                render::render_contour_text(&op, &options)
            }
        }
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn verify(theorem: &str, n: usize, options: VerifyOptions) -> Result<()> {
    if theorem.eq_ignore_ascii_case("open-questions") {
        let report = oracle::probe_open_questions(n, &options)?;
        return print_json(&report);
    }
    let report = oracle::verify_theorem(theorem, n, &options)?;
    print_json(&report)?;
    eprintln!(
        "{}: {} candidates, {} counterexamples, {:.3} s",
        report.theorem,
        report.checked,
        report.counterexamples,
        report.elapsed.as_secs_f64()
    );
    if report.passed() {
        Ok(())
    } else {
        Err(Failed.into())
    }
}

fn count(n: usize, e: Option<usize>, verify: bool) -> Result<()> {
    let value = match e {
        Some(e) => generators::count_uninorms_by_neutral(n, e)?,
        None => generators::count_uninorms(n)?,
    };
    if !verify {
        return print_json(&json!({"n": n, "e": e, "count": value}));
    }
    let check = generators::count_uninorms_verified(n)?;
    let generated = match e {
        Some(e) => check.by_neutral[e - 1],
        None => check.generated,
    };
    print_json(&json!({"n": n, "e": e, "count": value, "generated": generated}))?;
    if generated == value && check.agrees() {
        Ok(())
    } else {
        Err(Failed.into())
    }
}

fn list(what: Listing) -> Result<()> {
    let mut out = io::stdout().lock();
    match what {
        Listing::Fixtures => {
            for name in oracle::fixture_names() {
                writeln!(out, "{name}\t{}", oracle::fixture_caption(name)?)?;
            }
            for (name, seq) in oracle::PROFILE_FIXTURES {
                let seq: Vec<String> = seq.iter().map(ToString::to_string).collect();
                writeln!(out, "{name}\torder {}", seq.join(" "))?;
            }
        }
        Listing::Theorems => {
            for name in oracle::theorem_names() {
                writeln!(out, "{name}")?;
            }
            writeln!(out, "open-questions")?;
        }
        Listing::Properties => {
            for name in oracle::PROPERTY_NAMES {
                writeln!(out, "{name}")?;
            }
        }
    }
    Ok(())
}
