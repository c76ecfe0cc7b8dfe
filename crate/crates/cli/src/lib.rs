//! Command-line front end: number tables, Euler–Seidel matrices and the
//! verification suite, with exact output in JSON, LaTeX, Markdown or CSV.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 on a
//! usage error or unreadable input.

pub mod doc;
pub mod render;

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use degenerate_seidel::verify::{run_all, SuiteOptions};
use degenerate_seidel::{Mode, Rational, Route, SeidelMatrix, SequenceKind, SequenceTable};

use doc::{MatrixDoc, MatrixEntry, TableDoc, TableEntry, Values};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Bernoulli,
    Euler,
    Genocchi,
}

impl From<Kind> for SequenceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Bernoulli => SequenceKind::Bernoulli,
            Kind::Euler => SequenceKind::Euler,
            Kind::Genocchi => SequenceKind::Genocchi,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Latex,
    Markdown,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "degseidel",
    version,
    about = "Exact degenerate Bernoulli, Euler and Genocchi tables and Euler–Seidel matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numbers (or polynomials) of one family for n = 0..=N.
    Table(TableArgs),
    /// Same as `table --lambda 0`: the ordinary values.
    Limit(LimitArgs),
    /// Triangular degenerate Euler–Seidel matrix of a family or a seed file.
    Matrix(MatrixArgs),
    /// Run the identity verification suite.
    Verify(VerifyArgs),
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    /// Largest index.
    #[arg(long = "n", alias = "N")]
    pub n: usize,
    /// Print the polynomials in x instead of the numbers.
    #[arg(long)]
    pub polynomials: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub common: LimitArgs,
    /// Substitute a rational value for λ, e.g. `1/2`.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("seed").required(true).args(["kind", "seed_file"])))]
pub struct MatrixArgs {
    /// Seed the matrix with this family's polynomials.
    #[arg(value_enum)]
    pub kind: Option<Kind>,
    /// JSON file with the initial sequence (array of term lists, or a
    /// document with `entries`).
    #[arg(long)]
    pub seed_file: Option<PathBuf>,
    /// Matrix size: entries a_{k,n} with k + n ≤ N.
    #[arg(long = "N", alias = "n")]
    pub n: usize,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, conflicts_with = "classical")]
    pub lambda: Option<Rational>,
    /// Shorthand for `--lambda 0`.
    #[arg(long)]
    pub classical: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "n", alias = "N")]
    pub n: usize,
    /// Also compare the printed entries known to disagree with the engine.
    #[arg(long)]
    pub include_paper_tables: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// Rendered output plus whether the command succeeded (exit 0 vs 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

/// A failure that maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn execute(cli: &Cli) -> Result<Outcome, UsageError> {
    let output = match &cli.command {
        Command::Table(args) => table(&args.common, args.lambda.as_ref()),
        Command::Limit(args) => table(args, Some(&Rational::zero())),
        Command::Matrix(args) => matrix(args)?,
        Command::Verify(args) => return Ok(verify(args)),
    };
    Ok(Outcome {
        output,
        success: true,
    })
}

pub fn table_doc(
    kind: SequenceKind,
    n_max: usize,
    polynomials: bool,
    lambda: Option<&Rational>,
) -> TableDoc {
    let mut table = SequenceTable::build(kind, n_max, Route::Recurrence);
    if let Some(v) = lambda {
        table = table.eval_lambda(v);
    }
    let values = if polynomials {
        table.polynomials()
    } else {
        table.numbers()
    };
    TableDoc {
        kind,
        n_max,
        values: if polynomials {
            Values::Polynomials
        } else {
            Values::Numbers
        },
        lambda: lambda.map(Rational::to_string),
        entries: values
            .iter()
            .enumerate()
            .map(|(n, poly)| TableEntry {
                n,
                poly: poly.clone(),
            })
            .collect(),
    }
}

fn table(args: &LimitArgs, lambda: Option<&Rational>) -> String {
    let doc = table_doc(args.kind.into(), args.n, args.polynomials, lambda);
    match args.format {
        Format::Json => doc::to_json(&doc),
        Format::Latex => render::table_latex(&doc),
        Format::Markdown => render::table_markdown(&doc),
        Format::Csv => render::table_csv(&doc),
    }
}

pub fn matrix_doc(label: &str, m: &SeidelMatrix, lambda: Option<&Rational>) -> MatrixDoc {
    MatrixDoc {
        kind: label.to_owned(),
        n_max: m.size(),
        lambda: lambda.map(Rational::to_string),
        entries: m
            .entries()
            .map(|(k, n, poly)| MatrixEntry {
                k,
                n,
                poly: poly.clone(),
            })
            .collect(),
    }
}

fn matrix(args: &MatrixArgs) -> Result<String, UsageError> {
    let (label, seed) = match (&args.kind, &args.seed_file) {
        (Some(kind), _) => {
            let kind = SequenceKind::from(*kind);
            let table = SequenceTable::build(kind, args.n, Route::Recurrence);
            (kind.name().to_owned(), table.polynomials().to_vec())
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            let seed = doc::parse_seed_file(&text)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            ("custom".to_owned(), seed)
        }
        (None, None) => return Err(UsageError("a seed kind or --seed-file is required".into())),
    };
    let mut m = SeidelMatrix::build(&seed, args.n, Mode::Degenerate)
        .map_err(|e| UsageError(e.to_string()))?;
    let lambda = if args.classical {
        Some(Rational::zero())
    } else {
        args.lambda.clone()
    };
    if let Some(v) = &lambda {
        m = m.eval_lambda(v);
    }
    Ok(match args.format {
        Format::Json => doc::to_json(&matrix_doc(&label, &m, lambda.as_ref())),
        Format::Latex => render::matrix_latex(&m),
        Format::Markdown => render::matrix_markdown(&m),
        Format::Csv => render::matrix_csv(&m),
    })
}

fn verify(args: &VerifyArgs) -> Outcome {
    let report = run_all(SuiteOptions {
        n_max: args.n,
        include_paper_tables: args.include_paper_tables,
    });
    let output = match args.format {
        Format::Json => doc::to_json(&report),
        Format::Latex => render::report_latex(&report),
        Format::Markdown => render::report_markdown(&report),
        Format::Csv => render::report_csv(&report),
    };
    Outcome {
        output,
        success: report.all_pass(),
    }
}
