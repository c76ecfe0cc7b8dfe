//! Text renderings (LaTeX, Markdown, CSV) of tables, matrices and reports.
//!
//! Polynomials are shown with `x` powers descending and, within each power of
//! `x`, `λ` powers ascending, e.g. `-1/30 + (2/3)λ^2 - (19/30)λ^4`.

use std::fmt::Write as _;

use degenerate_seidel::algebra::poly::display_order;
use degenerate_seidel::{BiPoly, Rational, SeidelMatrix, SequenceKind, VerificationReport};

use crate::doc::{TableDoc, Values};

/// LaTeX for a polynomial, fractions as `\frac`.
pub fn latex_poly(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in display_order(p).enumerate() {
        let neg = c.is_negative();
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let mag = c.abs();
        let unit = e.x == 0 && e.lambda == 0;
        if unit || !mag.is_one() {
            out.push_str(&latex_rational(&mag));
        }
        match e.x {
            0 => {}
            1 => out.push('x'),
            d => write!(out, "x^{{{d}}}").unwrap(),
        }
        match e.lambda {
            0 => {}
            1 => out.push_str("\\lambda"),
            d => write!(out, "\\lambda^{{{d}}}").unwrap(),
        }
    }
    out
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn latex_symbol(kind: SequenceKind) -> &'static str {
    match kind {
        SequenceKind::Bernoulli => "\\beta",
        SequenceKind::Euler => "\\mathcal{E}",
        SequenceKind::Genocchi => "\\mathcal{G}",
    }
}

fn plain_symbol(kind: SequenceKind) -> &'static str {
    match kind {
        SequenceKind::Bernoulli => "β",
        SequenceKind::Euler => "𝓔",
        SequenceKind::Genocchi => "𝓖",
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 input")
}

fn table_header(doc: &TableDoc, latex: bool, index: &str) -> String {
    let sym = if latex {
        latex_symbol(doc.kind)
    } else {
        plain_symbol(doc.kind)
    };
    let lam = match (&doc.lambda, latex) {
        (Some(v), _) => v.clone(),
        (None, true) => "\\lambda".into(),
        (None, false) => "λ".into(),
    };
    let arg = if doc.values == Values::Polynomials {
        "(x)"
    } else {
        ""
    };
    format!("{sym}_{{{index},{lam}}}{arg}")
}

pub fn table_latex(doc: &TableDoc) -> String {
    let mut out = String::from("\\begin{align*}\n");
    let last = doc.entries.len().saturating_sub(1);
    for (i, e) in doc.entries.iter().enumerate() {
        let sep = if i == last { "" } else { " \\\\" };
        writeln!(
            out,
            "{} &= {}{sep}",
            table_header(doc, true, &e.n.to_string()),
            latex_poly(&e.poly)
        )
        .unwrap();
    }
    out.push_str("\\end{align*}\n");
    out
}

pub fn table_markdown(doc: &TableDoc) -> String {
    let mut out = format!("| n | {} |\n|---|---|\n", table_header(doc, false, "n"));
    for e in &doc.entries {
        writeln!(out, "| {} | {} |", e.n, e.poly).unwrap();
    }
    out
}

pub fn table_csv(doc: &TableDoc) -> String {
    let mut w = csv_writer();
    w.write_record(["n", "value"]).unwrap();
    for e in &doc.entries {
        w.write_record([e.n.to_string(), e.poly.to_string()])
            .unwrap();
    }
    csv_finish(w)
}

pub fn matrix_latex(m: &SeidelMatrix) -> String {
    let width = m.size() + 1;
    let mut out = String::from("\\begin{pmatrix}\n");
    for (k, row) in m.rows().iter().enumerate() {
        let mut cells: Vec<String> = row.iter().map(latex_poly).collect();
        cells.resize(width, String::new());
        let sep = if k + 1 == m.rows().len() { "" } else { " \\\\" };
        writeln!(out, "{}{sep}", cells.join(" & ")).unwrap();
    }
    out.push_str("\\end{pmatrix}\n");
    out
}

pub fn matrix_markdown(m: &SeidelMatrix) -> String {
    let width = m.size() + 1;
    let mut out = String::from("| k \\ n |");
    for n in 0..width {
        write!(out, " {n} |").unwrap();
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(width));
    out.push('\n');
    for (k, row) in m.rows().iter().enumerate() {
        write!(out, "| {k} |").unwrap();
        for n in 0..width {
            match row.get(n) {
                Some(p) => write!(out, " {p} |").unwrap(),
                None => out.push_str("  |"),
            }
        }
        out.push('\n');
    }
    out
}

pub fn matrix_csv(m: &SeidelMatrix) -> String {
    let mut w = csv_writer();
    w.write_record(["k", "n", "value"]).unwrap();
    for (k, n, p) in m.entries() {
        w.write_record([k.to_string(), n.to_string(), p.to_string()])
            .unwrap();
    }
    csv_finish(w)
}

fn summary(report: &VerificationReport) -> String {
    let failed = report.failures().count();
    if failed == 0 {
        format!("all {} checks passed", report.checks().len())
    } else {
        format!("{failed} of {} checks failed", report.checks().len())
    }
}

fn range(r: [usize; 2]) -> String {
    if r[0] == r[1] {
        r[0].to_string()
    } else {
        format!("{}..={}", r[0], r[1])
    }
}

pub fn report_markdown(report: &VerificationReport) -> String {
    let mut out =
        String::from("| check | n | status | residual | identity |\n|---|---|---|---|---|\n");
    for c in report.checks() {
        let residual = match (c.residual(), c.failed_at()) {
            (Some(r), Some(n)) => format!("n = {n}: {r}"),
            _ => String::new(),
        };
        let status = if c.passed() { "pass" } else { "FAIL" };
        writeln!(
            out,
            "| {} | {} | {status} | {residual} | {} |",
            c.check_id(),
            range(c.n_range()),
            c.anchor().replace('|', "\\|")
        )
        .unwrap();
    }
    writeln!(out, "\n{}", summary(report)).unwrap();
    out
}

pub fn report_csv(report: &VerificationReport) -> String {
    let mut w = csv_writer();
    w.write_record([
        "check_id",
        "n_lo",
        "n_hi",
        "status",
        "failed_at",
        "residual",
        "anchor",
    ])
    .unwrap();
    for c in report.checks() {
        let [lo, hi] = c.n_range();
        w.write_record([
            c.check_id().to_owned(),
            lo.to_string(),
            hi.to_string(),
            if c.passed() { "pass" } else { "fail" }.to_owned(),
            c.failed_at().map(|n| n.to_string()).unwrap_or_default(),
            c.residual().map(|r| r.to_string()).unwrap_or_default(),
            c.anchor().to_owned(),
        ])
        .unwrap();
    }
    csv_finish(w)
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_")
}

pub fn report_latex(report: &VerificationReport) -> String {
    let mut out =
        String::from("\\begin{tabular}{llll}\ncheck & $n$ & status & residual \\\\\n\\hline\n");
    for c in report.checks() {
        let residual = c
            .residual()
            .map(|r| format!("${}$", latex_poly(r)))
            .unwrap_or_default();
        let status = if c.passed() { "pass" } else { "fail" };
        writeln!(
            out,
            "\\texttt{{{}}} & {} & {status} & {residual} \\\\",
            latex_escape(c.check_id()),
            range(c.n_range())
        )
        .unwrap();
    }
    writeln!(out, "\\end{{tabular}}\n% {}", summary(report)).unwrap();
    out
}
