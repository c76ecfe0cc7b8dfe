mod common;

use std::collections::HashMap;

use common::{bipoly, p, pascal};
use degenerate_seidel::seidel::{final_from_initial, generating_law, initial_from_final};
use degenerate_seidel::{BiPoly, Mode, Rational, Route, SeidelMatrix, SequenceKind, SequenceTable};
use proptest::prelude::*;

/// `a_{k,n}` straight from the recurrence, memoised on `(k, n)`.
fn entry(
    seed: &[BiPoly],
    k: usize,
    n: usize,
    memo: &mut HashMap<(usize, usize), BiPoly>,
) -> BiPoly {
    if k == 0 {
        return seed[n].clone();
    }
    if let Some(v) = memo.get(&(k, n)) {
        return v.clone();
    }
    let w = &BiPoly::one() - &BiPoly::lambda().scale(&Rational::from(k as i64 - n as i64));
    let v = &(&w * &entry(seed, k - 1, n, memo)) + &entry(seed, k - 1, n + 1, memo);
    memo.insert((k, n), v.clone());
    v
}

fn falling(s: &BiPoly, n: usize) -> BiPoly {
    (0..n).fold(BiPoly::one(), |acc, j| {
        &acc * &(s - &BiPoly::lambda().scale(&Rational::from(j as i64)))
    })
}

fn seed_strategy(len: usize) -> impl Strategy<Value = Vec<BiPoly>> {
    prop::collection::vec(bipoly(), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fill_matches_recurrence_oracle(seed in seed_strategy(6)) {
        let m = SeidelMatrix::build(&seed, 5, Mode::Degenerate).unwrap();
        let mut memo = HashMap::new();
        for (k, n, a) in m.entries() {
            prop_assert_eq!(a, &entry(&seed, k, n, &mut memo));
        }
    }

    #[test]
    fn closed_form_and_inversion(seed in seed_strategy(7)) {
        let m = SeidelMatrix::build(&seed, 6, Mode::Degenerate).unwrap();
        let fin = m.final_sequence();
        for n in 0..=6 {
            prop_assert_eq!(&final_from_initial(&seed, n).unwrap(), &fin[n]);
            prop_assert_eq!(&initial_from_final(&fin, n).unwrap(), &seed[n]);
        }
    }

    #[test]
    fn generating_law_matches_final_column(seed in seed_strategy(7)) {
        let m = SeidelMatrix::build(&seed, 6, Mode::Degenerate).unwrap();
        let (a, a_bar) = generating_law(&seed, 6).unwrap();
        prop_assert_eq!(a.coeffs(), &seed[..]);
        let fin = m.final_sequence();
        prop_assert_eq!(a_bar.coeffs(), &fin[..]);
    }

    #[test]
    fn classical_mode_is_lambda_zero(seed in seed_strategy(5)) {
        let d = SeidelMatrix::build(&seed, 4, Mode::Degenerate).unwrap();
        let c = SeidelMatrix::build(&seed, 4, Mode::Classical).unwrap();
        let d0 = d.eval_lambda(&Rational::zero());
        prop_assert_eq!(c.rows(), d0.rows());
    }
}

#[test]
fn closed_form_with_oracle_weights() {
    let seed = SequenceTable::build(SequenceKind::Euler, 8, Route::Recurrence)
        .polynomials()
        .to_vec();
    let m = SeidelMatrix::build(&seed, 8, Mode::Degenerate).unwrap();
    let w = p("1 - λ");
    let c = pascal(8);
    for (n, row) in c.iter().enumerate() {
        let expected: BiPoly = (0..=n)
            .map(|k| (&falling(&w, n - k) * &seed[k]).scale(&row[k]))
            .sum();
        assert_eq!(m.entry(n, 0).unwrap(), &expected, "n = {n}");
    }
}

#[test]
fn classical_boustrophedon_of_ones() {
    let m = SeidelMatrix::build(&vec![BiPoly::one(); 13], 12, Mode::Classical).unwrap();
    for (n, a) in m.final_sequence().iter().enumerate() {
        assert_eq!(a, &BiPoly::integer(1 << n));
    }
    let c = pascal(12);
    for (k, n, a) in m.entries() {
        let direct: Rational = (0..=k)
            .map(|i| c[k][i].clone())
            .fold(Rational::zero(), |s, v| &s + &v);
        assert_eq!(a, &BiPoly::constant(direct), "({k}, {n})");
    }
}

#[test]
fn family_final_sequences() {
    let x = BiPoly::x();
    for kind in SequenceKind::ALL {
        let seed = SequenceTable::build(kind, 8, Route::Recurrence)
            .polynomials()
            .to_vec();
        let m = SeidelMatrix::build(&seed, 8, Mode::Degenerate).unwrap();
        let fin = m.final_sequence();
        for n in 0..=8 {
            let shifted = seed[n].substitute_x(&(&x + &p("1 - λ")));
            assert_eq!(fin[n], shifted, "{kind} n = {n}");
        }
    }
}

#[test]
fn display_anchors() {
    let g = SeidelMatrix::build(
        SequenceTable::build(SequenceKind::Genocchi, 2, Route::Recurrence).polynomials(),
        2,
        Mode::Degenerate,
    )
    .unwrap();
    assert_eq!(g.entry(2, 0).unwrap(), &p("2x + 1 - 2λ"));
    let e = SeidelMatrix::build(
        SequenceTable::build(SequenceKind::Euler, 1, Route::Recurrence).polynomials(),
        1,
        Mode::Degenerate,
    )
    .unwrap();
    assert_eq!(e.entry(1, 0).unwrap(), &p("x + 1/2 - λ"));
    let b = SeidelMatrix::build(
        SequenceTable::build(SequenceKind::Bernoulli, 1, Route::Recurrence).polynomials(),
        1,
        Mode::Degenerate,
    )
    .unwrap();
    assert_eq!(b.entry(1, 0).unwrap(), &p("x + (1 - λ)/2"));
}
