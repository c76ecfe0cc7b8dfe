//! Transcribed reference values and their comparison against the engine.

use serde::Deserialize;

use super::CheckResult;
use crate::algebra::BiPoly;
use crate::error::{Error, Result};
use crate::seidel::{Mode, SeidelMatrix};
use crate::sequences::{Route, SequenceKind, SequenceTable};

const TRANSCRIPTION: &str = include_str!("../../data/printed_values.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct PrintedNumber {
    pub kind: SequenceKind,
    pub n: usize,
    pub printed: String,
    #[serde(default)]
    pub disputed: bool,
}

#[derive(Clone, Debug, Deserialize)]
pub struct PrintedMatrixEntry {
    pub kind: SequenceKind,
    pub k: usize,
    pub n: usize,
    pub printed: String,
    #[serde(default)]
    pub disputed: bool,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Transcription {
    pub table: Vec<PrintedNumber>,
    pub matrix: Vec<PrintedMatrixEntry>,
}

impl Transcription {
    /// The embedded transcription file.
    pub fn load() -> Result<Self> {
        Transcription::parse(TRANSCRIPTION)
    }

    pub fn parse(src: &str) -> Result<Self> {
        let t: Transcription =
            toml::from_str(src).map_err(|e| Error::Transcription(e.to_string()))?;
        for entry in &t.table {
            parse_printed(&entry.printed)?;
        }
        for entry in &t.matrix {
            parse_printed(&entry.printed)?;
        }
        Ok(t)
    }
}

fn parse_printed(src: &str) -> Result<BiPoly> {
    src.parse()
        .map_err(|e| Error::Transcription(format!("{src:?}: {e}")))
}

fn symbol(kind: SequenceKind) -> &'static str {
    match kind {
        SequenceKind::Bernoulli => "β",
        SequenceKind::Euler => "𝓔",
        SequenceKind::Genocchi => "𝓖",
    }
}

/// Compares printed numbers with index `≤ n_max` against the recurrence
/// route. The residual is `printed − computed`.
pub fn check_printed_tables(
    transcription: &Transcription,
    n_max: usize,
    include_disputed: bool,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for kind in SequenceKind::ALL {
        let entries: Vec<_> = transcription
            .table
            .iter()
            .filter(|e| e.kind == kind && e.n <= n_max && (include_disputed || !e.disputed))
            .collect();
        let Some(top) = entries.iter().map(|e| e.n).max() else {
            continue;
        };
        let table = SequenceTable::build(kind, top, Route::Recurrence);
        for e in entries {
            let printed = parse_printed(&e.printed).expect("validated on load");
            out.push(CheckResult::from_residual(
                format!("printed.table.{kind}.{}", e.n),
                format!("printed {}_{{{},λ}} = {}", symbol(kind), e.n, e.printed),
                e.n,
                &printed - &table.numbers()[e.n],
            ));
        }
    }
    out
}

/// Compares the printed matrix entries against a degenerate Euler–Seidel
/// matrix seeded with the family's polynomials.
pub fn check_printed_matrices(
    transcription: &Transcription,
    include_disputed: bool,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for kind in SequenceKind::ALL {
        let entries: Vec<_> = transcription
            .matrix
            .iter()
            .filter(|e| e.kind == kind && (include_disputed || !e.disputed))
            .collect();
        let Some(size) = entries.iter().map(|e| e.k + e.n).max() else {
            continue;
        };
        let seed = SequenceTable::build(kind, size, Route::Recurrence);
        let matrix = SeidelMatrix::build(seed.polynomials(), size, Mode::Degenerate)
            .expect("seed has size + 1 entries");
        for e in entries {
            let printed = parse_printed(&e.printed).expect("validated on load");
            let computed = matrix.entry(e.k, e.n).expect("inside the triangle");
            out.push(CheckResult::from_residual(
                format!("printed.matrix.{kind}.{}.{}", e.k, e.n),
                format!(
                    "printed a_{{{},{}}} of the {kind} matrix = {}",
                    e.k, e.n, e.printed
                ),
                e.k + e.n,
                &printed - computed,
            ));
        }
    }
    out
}
