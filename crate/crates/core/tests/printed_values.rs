mod common;

use common::p;
use degenerate_seidel::verify::{
    check_printed_matrices, check_printed_tables, run_all, SuiteOptions, Transcription,
};

/// Printed entries that disagree with the engine, with `printed − computed`.
const DISCREPANCIES: [(&str, &str); 11] = [
    ("printed.table.bernoulli.3", "-1/4 + λ/4"),
    ("printed.table.euler.3", "λ^2/4"),
    ("printed.table.euler.4", "-(3/2)λ^3"),
    ("printed.table.euler.5", "-(5/4)λ^2 + (33/4)λ^4"),
    ("printed.table.euler.6", "(45/4)λ^3 - (195/4)λ^5"),
    ("printed.table.genocchi.4", "λ^2"),
    ("printed.table.genocchi.5", "-(15/2)λ^3"),
    ("printed.table.genocchi.6", "-(15/2)λ^2 + (99/2)λ^4"),
    ("printed.table.genocchi.7", "(315/4)λ^3 - (1365/4)λ^5"),
    (
        "printed.matrix.bernoulli.2.1",
        "-3xλ + 3xλ^2 - (3/4)λ + (1/3)λ^2 + (5/12)λ^3",
    ),
    ("printed.matrix.euler.2.1", "4x^2λ + λ^2/2"),
];

#[test]
fn default_suite_passes() {
    for n_max in [0, 1, 5, 12] {
        let report = run_all(SuiteOptions {
            n_max,
            include_paper_tables: false,
        });
        let failed: Vec<_> = report.failures().map(|c| c.check_id().to_owned()).collect();
        assert!(report.all_pass(), "n_max = {n_max}: {failed:?}");
    }
}

#[test]
fn disputed_entries_are_flagged_with_frozen_residuals() {
    let report = run_all(SuiteOptions {
        n_max: 12,
        include_paper_tables: true,
    });
    assert!(!report.all_pass());
    let failed: Vec<_> = report.failures().collect();
    assert_eq!(failed.len(), DISCREPANCIES.len());
    for (id, residual) in DISCREPANCIES {
        let check = report.get(id).unwrap_or_else(|| panic!("{id} missing"));
        assert!(!check.passed(), "{id}");
        assert_eq!(check.residual(), Some(&p(residual)), "{id}");
    }
}

#[test]
fn undisputed_entries_all_match() {
    let t = Transcription::load().unwrap();
    let tables = check_printed_tables(&t, 12, false);
    assert_eq!(tables.len(), t.table.iter().filter(|e| !e.disputed).count());
    assert!(tables.iter().all(|c| c.passed()));
    let matrices = check_printed_matrices(&t, false);
    assert_eq!(
        matrices.len(),
        t.matrix.iter().filter(|e| !e.disputed).count()
    );
    assert!(matrices.iter().all(|c| c.passed()));
}

#[test]
fn disputed_flags_agree_with_the_engine() {
    let t = Transcription::load().unwrap();
    for c in check_printed_tables(&t, 12, true) {
        let id = c.check_id();
        let flagged = DISCREPANCIES.iter().any(|(d, _)| *d == id);
        assert_eq!(c.passed(), !flagged, "{id}");
    }
    let disputed = t.table.iter().filter(|e| e.disputed).count()
        + t.matrix.iter().filter(|e| e.disputed).count();
    assert_eq!(disputed, DISCREPANCIES.len());
}

#[test]
fn table_checks_respect_n_max() {
    let t = Transcription::load().unwrap();
    let few = check_printed_tables(&t, 2, true);
    assert!(few.iter().all(|c| c.n_range()[1] <= 2));
    assert!(few.iter().all(|c| c.passed()));
}

#[test]
fn malformed_transcription_is_rejected() {
    let bad = "[[table]]\nkind = \"euler\"\nn = 1\nprinted = \"1 +\"\n\nmatrix = []\n";
    assert!(Transcription::parse(bad).is_err());
    assert!(Transcription::parse("table = 3").is_err());
}
