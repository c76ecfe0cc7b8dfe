//! Degenerate Bernoulli, Euler and Genocchi numbers and polynomials.
//!
//! Each family is produced by two independent routes:
//!
//! * **recurrence**: the boundary relations `f(1) ∓ f(0) = …` expanded with
//!   the falling factorials `(1)_{m,λ}` and solved term by term;
//! * **series**: inversion of the truncated generating function
//!   (`t/(e_λ(t)−1)`, `2/(e_λ(t)+1)`, `2t/(e_λ(t)+1)`).
//!
//! Both return the numbers as polynomials in `λ` alone. Polynomials in `x`
//! follow by binomial convolution with `(x)_{n,λ}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::factorial::{binomial_row, falling_table};
use crate::algebra::{degenerate_exponential, rat, BiPoly, EgfSeries, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    Bernoulli,
    Euler,
    Genocchi,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 3] = [
        SequenceKind::Bernoulli,
        SequenceKind::Euler,
        SequenceKind::Genocchi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Bernoulli => "bernoulli",
            SequenceKind::Euler => "euler",
            SequenceKind::Genocchi => "genocchi",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        SequenceKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown sequence kind {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Recurrence,
    Series,
}

/// `(1)_{m,λ}` for `m = 0..=n`, shared by all three recurrences.
pub fn unit_falling(n: usize) -> Vec<BiPoly> {
    falling_table(&BiPoly::one(), n)
}

/// Degenerate Bernoulli numbers from the boundary recurrence.
///
/// The relation `Σ_{k≤n} C(n,k)(1)_{n−k,λ} β_k − β_n = δ_{1,n}` loses its
/// `β_n` term, so instance `n` determines `β_{n−1}`:
/// `n·β_{n−1} = δ_{1,n} − Σ_{k≤n−2} C(n,k)(1)_{n−k,λ} β_k`.
pub fn bernoulli_numbers_recurrence(n_max: usize) -> Vec<BiPoly> {
    let units = unit_falling(n_max + 1);
    let mut out: Vec<BiPoly> = Vec::with_capacity(n_max + 1);
    for n in 1..=n_max + 1 {
        let row = binomial_row(n);
        let mut rhs = if n == 1 {
            BiPoly::one()
        } else {
            BiPoly::zero()
        };
        for k in 0..n - 1 {
            rhs = &rhs - &(&units[n - k] * &out[k]).scale(&row[k]);
        }
        out.push(rhs.scale(&rat(1, n as i64)));
    }
    out
}

/// Degenerate Bernoulli numbers as coefficients of `t/(e_λ(t) − 1)`.
pub fn bernoulli_numbers_series(n_max: usize) -> Vec<BiPoly> {
    let e = degenerate_exponential(&BiPoly::one(), n_max + 1);
    let e_minus_one = e.sub(&EgfSeries::one(n_max + 1)).expect("equal orders");
    e_minus_one
        .shift_down()
        .expect("constant term of e_λ(t) − 1 vanishes")
        .reciprocal()
        .expect("constant term is 1")
        .into_coeffs()
}

/// `2𝓔_n = 2δ_{0,n} − Σ_{k<n} C(n,k)(1)_{n−k,λ} 𝓔_k`.
fn euler_numbers_recurrence(n_max: usize) -> Vec<BiPoly> {
    let units = unit_falling(n_max);
    let half = rat(1, 2);
    let mut out: Vec<BiPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let row = binomial_row(n);
        let mut rhs = if n == 0 {
            BiPoly::integer(2)
        } else {
            BiPoly::zero()
        };
        for k in 0..n {
            rhs = &rhs - &(&units[n - k] * &out[k]).scale(&row[k]);
        }
        out.push(rhs.scale(&half));
    }
    out
}

fn euler_numbers_series(n_max: usize) -> Vec<BiPoly> {
    let e_plus_one = degenerate_exponential(&BiPoly::one(), n_max)
        .add(&EgfSeries::one(n_max))
        .expect("equal orders");
    e_plus_one
        .reciprocal()
        .expect("constant term is 2")
        .scale(&Rational::from(2))
        .into_coeffs()
}

pub fn euler_numbers(n_max: usize, route: Route) -> Vec<BiPoly> {
    match route {
        Route::Recurrence => euler_numbers_recurrence(n_max),
        Route::Series => euler_numbers_series(n_max),
    }
}

/// `𝓖_0 = 0`, `2𝓖_n = 2δ_{1,n} − Σ_{1≤k<n} C(n,k)(1)_{n−k,λ} 𝓖_k`.
fn genocchi_numbers_recurrence(n_max: usize) -> Vec<BiPoly> {
    let units = unit_falling(n_max);
    let half = rat(1, 2);
    let mut out: Vec<BiPoly> = vec![BiPoly::zero()];
    for n in 1..=n_max {
        let row = binomial_row(n);
        let mut rhs = if n == 1 {
            BiPoly::integer(2)
        } else {
            BiPoly::zero()
        };
        for k in 1..n {
            rhs = &rhs - &(&units[n - k] * &out[k]).scale(&row[k]);
        }
        out.push(rhs.scale(&half));
    }
    out
}

/// Coefficients of `2t/(e_λ(t)+1)`: the Euler reciprocal multiplied by `t`.
fn genocchi_numbers_series(n_max: usize) -> Vec<BiPoly> {
    let e_plus_one = degenerate_exponential(&BiPoly::one(), n_max)
        .add(&EgfSeries::one(n_max))
        .expect("equal orders");
    e_plus_one
        .reciprocal()
        .expect("constant term is 2")
        .scale(&Rational::from(2))
        .shift_up()
        .truncate(n_max)
        .expect("shift_up raises the order")
        .into_coeffs()
}

pub fn genocchi_numbers(n_max: usize, route: Route) -> Vec<BiPoly> {
    match route {
        Route::Recurrence => genocchi_numbers_recurrence(n_max),
        Route::Series => genocchi_numbers_series(n_max),
    }
}

pub fn bernoulli_numbers(n_max: usize, route: Route) -> Vec<BiPoly> {
    match route {
        Route::Recurrence => bernoulli_numbers_recurrence(n_max),
        Route::Series => bernoulli_numbers_series(n_max),
    }
}

pub fn numbers(kind: SequenceKind, n_max: usize, route: Route) -> Vec<BiPoly> {
    match kind {
        SequenceKind::Bernoulli => bernoulli_numbers(n_max, route),
        SequenceKind::Euler => euler_numbers(n_max, route),
        SequenceKind::Genocchi => genocchi_numbers(n_max, route),
    }
}

/// `p_n(x) = Σ_k C(n,k) a_k (x)_{n−k,λ}`; the same shape for all three
/// families.
pub fn polynomials_from_numbers(numbers: &[BiPoly]) -> Vec<BiPoly> {
    let Some(n_max) = numbers.len().checked_sub(1) else {
        return Vec::new();
    };
    let falling = falling_table(&BiPoly::x(), n_max);
    (0..=n_max)
        .map(|n| {
            let row = binomial_row(n);
            (0..=n)
                .filter(|k| !numbers[*k].is_zero())
                .map(|k| (&numbers[k] * &falling[n - k]).scale(&row[k]))
                .sum()
        })
        .collect()
}

/// `𝓖_n = 2(β_{n,λ} − 2^n β_{n,λ/2})`, from Bernoulli numbers.
pub fn genocchi_from_bernoulli(bernoulli: &[BiPoly]) -> Vec<BiPoly> {
    let half = rat(1, 2);
    let two = Rational::from(2);
    bernoulli
        .iter()
        .enumerate()
        .map(|(n, b)| {
            let halved = b
                .scale_lambda(&half)
                .scale(&two.pow(n as i32).expect("n ≥ 0"));
            (b - &halved).scale(&two)
        })
        .collect()
}

/// Numbers and polynomials of one family up to `n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    kind: SequenceKind,
    n_max: usize,
    route: Route,
    numbers: Vec<BiPoly>,
    polynomials: Vec<BiPoly>,
}

impl SequenceTable {
    pub fn build(kind: SequenceKind, n_max: usize, route: Route) -> Self {
        let numbers = numbers(kind, n_max, route);
        let polynomials = polynomials_from_numbers(&numbers);
        SequenceTable {
            kind,
            n_max,
            route,
            numbers,
            polynomials,
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn numbers(&self) -> &[BiPoly] {
        &self.numbers
    }

    pub fn polynomials(&self) -> &[BiPoly] {
        &self.polynomials
    }

    /// Every entry with `λ := v`.
    pub fn eval_lambda(&self, v: &Rational) -> SequenceTable {
        SequenceTable {
            numbers: self.numbers.iter().map(|p| p.eval_lambda(v)).collect(),
            polynomials: self.polynomials.iter().map(|p| p.eval_lambda(v)).collect(),
            ..self.clone()
        }
    }

    /// The ordinary Bernoulli, Euler or Genocchi values (`λ := 0`).
    pub fn classical_limit(&self) -> SequenceTable {
        self.eval_lambda(&Rational::zero())
    }
}
