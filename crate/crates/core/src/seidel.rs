//! Classical and degenerate Euler–Seidel matrices.
//!
//! Row 0 holds the initial sequence `a_{0,n}`; every later entry is
//! `a_{k,n} = (1 − (k−n)λ)·a_{k−1,n} + a_{k−1,n+1}`. Column 0 is the final
//! sequence. With an initial sequence of length `N+1` the computable region
//! is the triangle `k + n ≤ N`.

use serde::{Deserialize, Serialize};

use crate::algebra::factorial::{binomial_row, falling_table, rising_table};
use crate::algebra::{degenerate_exponential, BiPoly, EgfSeries, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `a_{k,n} = a_{k−1,n} + a_{k−1,n+1}`: the degenerate table at `λ = 0`.
    Classical,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelMatrix {
    size: usize,
    mode: Mode,
    /// `rows[k][n] = a_{k,n}`; row `k` has `size + 1 − k` entries.
    rows: Vec<Vec<BiPoly>>,
}

fn require_len(seq: &[BiPoly], needed: usize) -> Result<()> {
    if seq.len() < needed {
        return Err(Error::SequenceTooShort {
            needed,
            got: seq.len(),
        });
    }
    Ok(())
}

/// `1 − λ`, the exponent of the degenerate exponential linking the initial
/// and final generating functions.
pub fn one_minus_lambda() -> BiPoly {
    &BiPoly::one() - &BiPoly::lambda()
}

impl SeidelMatrix {
    /// Fills the triangle `k + n ≤ size` from `initial[0..=size]`.
    ///
    /// The fill is always symbolic in `λ`; classical mode substitutes
    /// `λ := 0` entrywise afterwards.
    pub fn build(initial: &[BiPoly], size: usize, mode: Mode) -> Result<Self> {
        require_len(initial, size + 1)?;
        let lambda = BiPoly::lambda();
        let mut rows: Vec<Vec<BiPoly>> = Vec::with_capacity(size + 1);
        rows.push(initial[..=size].to_vec());
        for k in 1..=size {
            let prev = &rows[k - 1];
            let row = (0..=size - k)
                .map(|n| {
                    let shift = Rational::from(k as i64 - n as i64);
                    let weight = &BiPoly::one() - &lambda.scale(&shift);
                    &(&weight * &prev[n]) + &prev[n + 1]
                })
                .collect();
            rows.push(row);
        }
        let matrix = SeidelMatrix {
            size,
            mode: Mode::Degenerate,
            rows,
        };
        Ok(match mode {
            Mode::Degenerate => matrix,
            Mode::Classical => SeidelMatrix {
                mode: Mode::Classical,
                ..matrix.eval_lambda(&Rational::zero())
            },
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `a_{k,n}`, or `None` outside the triangle.
    pub fn entry(&self, k: usize, n: usize) -> Option<&BiPoly> {
        self.rows.get(k).and_then(|row| row.get(n))
    }

    pub fn row(&self, k: usize) -> &[BiPoly] {
        &self.rows[k]
    }

    pub fn rows(&self) -> &[Vec<BiPoly>] {
        &self.rows
    }

    pub fn initial_sequence(&self) -> &[BiPoly] {
        &self.rows[0]
    }

    /// Column 0: `a_{0,0}, a_{1,0}, …, a_{N,0}`.
    pub fn final_sequence(&self) -> Vec<BiPoly> {
        self.rows.iter().map(|row| row[0].clone()).collect()
    }

    /// All entries in row-major order as `(k, n, a_{k,n})`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BiPoly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().enumerate().map(move |(n, a)| (k, n, a)))
    }

    pub fn len(&self) -> usize {
        (self.size + 1) * (self.size + 2) / 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entrywise `λ := v`.
    pub fn eval_lambda(&self, v: &Rational) -> SeidelMatrix {
        SeidelMatrix {
            size: self.size,
            mode: self.mode,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|a| a.eval_lambda(v)).collect())
                .collect(),
        }
    }
}

/// `a_{n,0} = Σ_k C(n,k) (1−λ)_{n−k,λ} a_{0,k}`.
pub fn final_from_initial(initial: &[BiPoly], n: usize) -> Result<BiPoly> {
    require_len(initial, n + 1)?;
    let weights = falling_table(&one_minus_lambda(), n);
    let row = binomial_row(n);
    Ok((0..=n)
        .map(|k| (&weights[n - k] * &initial[k]).scale(&row[k]))
        .sum())
}

/// `a_{0,n} = Σ_k C(n,k) (−1)^{n−k} ⟨1−λ⟩_{n−k,λ} a_{k,0}`.
pub fn initial_from_final(final_seq: &[BiPoly], n: usize) -> Result<BiPoly> {
    require_len(final_seq, n + 1)?;
    let weights = rising_table(&one_minus_lambda(), n);
    let row = binomial_row(n);
    Ok((0..=n)
        .map(|k| {
            let sign = if (n - k).is_multiple_of(2) {
                Rational::one()
            } else {
                -Rational::one()
            };
            (&weights[n - k] * &final_seq[k]).scale(&(&row[k] * &sign))
        })
        .sum())
}

/// Generating functions of the initial and final sequences, the latter
/// obtained as `e_λ^{1−λ}(t) · A(t)` rather than from the matrix.
pub fn generating_law(initial: &[BiPoly], order: usize) -> Result<(EgfSeries, EgfSeries)> {
    let a = EgfSeries::from_prefix(order, initial)?;
    let a_bar = degenerate_exponential(&one_minus_lambda(), order).mul(&a)?;
    Ok((a, a_bar))
}
