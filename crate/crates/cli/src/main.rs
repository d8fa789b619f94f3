use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clifford_width::geometry::{
    enumerate_minimal_clifford, minimal_clifford, parse_clifford_spec, ProjectedClifford,
    ProjectiveSpace,
};
use clifford_width::spectral::{quotient_index, spectrum_below, sphere_index};
use clifford_width::width::{verify_reference_values, width, width_table};
use clifford_width::{Error, ExactError, ExactReal};

mod render;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Latex,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "clifford-width",
    version,
    about = "Exact widths and Morse indices of Clifford hypersurfaces in projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Min-max width of RP<i>, or the Clifford upper bound for CP<i>.
    Width {
        /// RP<i>, CP<i> or HP<i>
        space: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Places after the decimal point.
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(0..=1000))]
        digits: u32,
    },
    /// Width rows for several spaces at once.
    Table {
        #[arg(required = true)]
        spaces: Vec<String>,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(0..=1000))]
        digits: u32,
    },
    /// Morse index of a minimal Clifford hypersurface, in the sphere or a quotient.
    Index {
        /// n1,n2 or n1,n2@RP<i> / n1,n2@CP<i> / n1,n2@HP<i>
        clifford: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Minimal Clifford hypersurfaces in a projective space and their areas.
    Enumerate {
        space: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(0..=1000))]
        digits: u32,
    },
    /// Laplace eigenvalues of a minimal Clifford hypersurface below a bound.
    Spectrum {
        /// n1,n2
        clifford: String,
        /// Rational bound, e.g. 4 or 13/2
        #[arg(long, allow_hyphen_values = true)]
        below: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Recompute every tabulated width, bound and candidate area.
    Verify {
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(0..=1000))]
        digits: u32,
    },
}

enum Failure {
    Error(Error),
    VerifyFailed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<ExactError> for Failure {
    fn from(e: ExactError) -> Self {
        Failure::Error(e.into())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Exact(ExactError::Parse(_)) => EXIT_PARSE,
        Error::Unsupported(_) => EXIT_UNSUPPORTED,
        _ => EXIT_VERIFY_FAILED,
    }
}

fn space(s: &str) -> Result<ProjectiveSpace, Error> {
    s.parse()
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Width {
            space: s,
            format,
            digits,
        } => {
            let report = width(&space(&s)?)?;
            Ok(render::width(&[report], format, digits))
        }
        Command::Table {
            spaces,
            format,
            digits,
        } => {
            let spaces = spaces
                .iter()
                .map(|s| space(s))
                .collect::<Result<Vec<_>, _>>()?;
            let reports = width_table(&spaces)
                .into_iter()
                .collect::<Result<Vec<_>, _>>()?;
            Ok(render::width(&reports, format, digits))
        }
        Command::Index { clifford, format } => {
            let (n1, n2, target) = parse_clifford_spec(&clifford)?;
            let base = minimal_clifford(n1, n2)?;
            let report = match target {
                Some(t) => quotient_index(&ProjectedClifford::new(base.clone(), t)?)?,
                None => sphere_index(&base)?,
            };
            Ok(render::index(&base, target.as_ref(), &report, format))
        }
        Command::Enumerate {
            space: s,
            format,
            digits,
        } => {
            let space = space(&s)?;
            let list = enumerate_minimal_clifford(&space)?;
            Ok(render::enumerate(&space, &list, format, digits)?)
        }
        Command::Spectrum {
            clifford,
            below,
            format,
        } => {
            let (n1, n2, target) = parse_clifford_spec(&clifford)?;
            if target.is_some() {
                return Err(Error::InvalidInput(
                    "spectrum takes a sphere Clifford spec n1,n2 without @space".into(),
                )
                .into());
            }
            let bound = ExactReal::parse(&below)?.to_rational().ok_or_else(|| {
                Error::InvalidInput(format!("--below must be rational, got {below:?}"))
            })?;
            let base = minimal_clifford(n1, n2)?;
            let entries = spectrum_below(&base, &bound)?;
            Ok(render::spectrum(&base, &bound, &entries, format))
        }
        Command::Verify { format, digits } => {
            let rows = verify_reference_values()?;
            let out = render::verify(&rows, format, digits);
            let failed = rows.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                print!("{out}");
                return Err(Failure::VerifyFailed(format!(
                    "{failed} of {} reference values did not match",
                    rows.len()
                )));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::VerifyFailed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
