#![allow(dead_code)]

use degenerate_seidel::algebra::Exponents;
use degenerate_seidel::{BiPoly, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// Small bivariate polynomials, degree ≤ 3 in each variable.
pub fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..=3, 0u32..=3, rational()), 0..5).prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|(x, l, c)| (Exponents::new(x, l), c)))
    })
}

pub fn p(s: &str) -> BiPoly {
    s.parse().unwrap()
}

/// `C(n, k)` by Pascal's rule, kept apart from the library's binomials.
pub fn pascal(n: usize) -> Vec<Vec<Rational>> {
    let mut rows = vec![vec![Rational::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![Rational::one(); i + 1];
        for k in 1..i {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}
