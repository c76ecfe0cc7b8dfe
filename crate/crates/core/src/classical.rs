//! Ordinary Bernoulli, Euler and Genocchi numbers and polynomials.
//!
//! Computed with plain rationals and no reference to `λ`: Bernoulli numbers
//! by the Akiyama–Tanigawa algorithm, the other two families from them via
//! `E_n(0) = −2(2^{n+1} − 1)B_{n+1}/(n+1)` and `G_n = 2(1 − 2^n)B_n`. Used as
//! the reference for the `λ → 0` limits of the degenerate families.

use crate::algebra::factorial::binomial_row;
use crate::algebra::{BiPoly, Rational};
use crate::sequences::SequenceKind;

/// `B_0..=B_n_max` with the convention `B_1 = −1/2`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    let mut row: Vec<Rational> = Vec::with_capacity(n_max + 1);
    let mut out = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        row.push(Rational::new(1, m as i64 + 1).expect("m + 1 > 0"));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = &diff * &Rational::from(j as i64);
        }
        // Akiyama–Tanigawa yields B_1 = +1/2.
        out.push(if m == 1 { -&row[0] } else { row[0].clone() });
    }
    out
}

/// `E_n(0)` for `n = 0..=n_max`.
pub fn euler_at_zero(n_max: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(n_max + 1);
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                return Rational::one();
            }
            let pow = Rational::from(2)
                .pow(n as i32 + 1)
                .expect("positive exponent");
            let factor = &(&pow - &Rational::one()) * &Rational::from(-2);
            &(&factor * &b[n + 1]) / &Rational::from(n as i64 + 1)
        })
        .collect()
}

/// `G_n` for `n = 0..=n_max`.
pub fn genocchi_numbers(n_max: usize) -> Vec<Rational> {
    bernoulli_numbers(n_max)
        .into_iter()
        .enumerate()
        .map(|(n, b)| {
            let pow = Rational::from(2)
                .pow(n as i32)
                .expect("nonnegative exponent");
            &(&(&Rational::one() - &pow) * &b) * &Rational::from(2)
        })
        .collect()
}

/// Values at `x = 0` of the ordinary family.
pub fn numbers(kind: SequenceKind, n_max: usize) -> Vec<Rational> {
    match kind {
        SequenceKind::Bernoulli => bernoulli_numbers(n_max),
        SequenceKind::Euler => euler_at_zero(n_max),
        SequenceKind::Genocchi => genocchi_numbers(n_max),
    }
}

/// `P_n(x) = Σ_k C(n,k) P_k(0) x^{n−k}` for the ordinary family.
pub fn polynomials(kind: SequenceKind, n_max: usize) -> Vec<BiPoly> {
    let values = numbers(kind, n_max);
    (0..=n_max)
        .map(|n| {
            let row = binomial_row(n);
            (0..=n)
                .map(|k| BiPoly::monomial(&row[k] * &values[k], (n - k) as u32, 0))
                .sum()
        })
        .collect()
}
