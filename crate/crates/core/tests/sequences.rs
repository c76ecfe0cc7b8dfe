mod common;

use common::{p, pascal};
use degenerate_seidel::sequences::{genocchi_from_bernoulli, numbers, polynomials_from_numbers};
use degenerate_seidel::{BiPoly, Rational, Route, SequenceKind, SequenceTable};

const N: usize = 12;

fn falling(s: &BiPoly, n: usize) -> BiPoly {
    (0..n).fold(BiPoly::one(), |acc, j| {
        &acc * &(s - &BiPoly::lambda().scale(&Rational::from(j as i64)))
    })
}

/// Coefficients of the binomial convolution `Σ C(n,k) a_k b_{n−k}`.
fn convolve(a: &[BiPoly], b: &[BiPoly]) -> Vec<BiPoly> {
    let c = pascal(a.len() - 1);
    (0..a.len())
        .map(|n| (0..=n).map(|k| (&a[k] * &b[n - k]).scale(&c[n][k])).sum())
        .collect()
}

fn unit_falling(n: usize) -> Vec<BiPoly> {
    (0..=n).map(|i| falling(&BiPoly::one(), i)).collect()
}

#[test]
fn low_order_values() {
    let b = numbers(SequenceKind::Bernoulli, 6, Route::Recurrence);
    let expected_b = [
        "1",
        "-1/2 + λ/2",
        "1/6 - λ^2/6",
        "-λ/4 + λ^3/4",
        "-1/30 + 2λ^2/3 - 19λ^4/30",
        "λ/4 - 5λ^3/2 + 9λ^5/4",
    ];
    for (n, e) in expected_b.iter().enumerate() {
        assert_eq!(b[n], p(e), "β_{n}");
    }
    let e = numbers(SequenceKind::Euler, 6, Route::Recurrence);
    let expected_e = [
        "1",
        "-1/2",
        "λ/2",
        "1/4 - λ^2",
        "-3λ/2 + 3λ^3",
        "-1/2 + 35λ^2/4 - 12λ^4",
        "15λ/2 - 225λ^3/4 + 60λ^5",
    ];
    for (n, x) in expected_e.iter().enumerate() {
        assert_eq!(e[n], p(x), "𝓔_{n}");
    }
    let g = numbers(SequenceKind::Genocchi, 7, Route::Recurrence);
    let expected_g = [
        "0",
        "1",
        "-1",
        "3λ/2",
        "1 - 4λ^2",
        "-15λ/2 + 15λ^3",
        "-3 + 105λ^2/2 - 72λ^4",
        "105λ/2 - 1575λ^3/4 + 420λ^5",
    ];
    for (n, x) in expected_g.iter().enumerate() {
        assert_eq!(g[n], p(x), "𝓖_{n}");
    }
}

#[test]
fn generating_function_identities() {
    let one = unit_falling(N + 1);
    // (e_λ(t) − 1) Σ β_n t^n/n! = t
    let b = numbers(SequenceKind::Bernoulli, N, Route::Recurrence);
    let mut e_minus_one = one.clone();
    e_minus_one[0] = BiPoly::zero();
    let mut b_ext = b.clone();
    b_ext.push(BiPoly::zero());
    let lhs = convolve(&e_minus_one, &b_ext);
    for (n, c) in lhs.iter().enumerate().take(N + 1) {
        let expected = if n == 1 {
            BiPoly::one()
        } else {
            BiPoly::zero()
        };
        assert_eq!(c, &expected, "bernoulli t^{n}");
    }
    // (e_λ(t) + 1) Σ 𝓔_n t^n/n! = 2
    let e = numbers(SequenceKind::Euler, N, Route::Recurrence);
    let mut e_plus_one = one[..=N].to_vec();
    e_plus_one[0] = BiPoly::integer(2);
    for (n, c) in convolve(&e_plus_one, &e).iter().enumerate() {
        let expected = if n == 0 {
            BiPoly::integer(2)
        } else {
            BiPoly::zero()
        };
        assert_eq!(c, &expected, "euler t^{n}");
    }
    // (e_λ(t) + 1) Σ 𝓖_n t^n/n! = 2t
    let g = numbers(SequenceKind::Genocchi, N, Route::Recurrence);
    for (n, c) in convolve(&e_plus_one, &g).iter().enumerate() {
        let expected = if n == 1 {
            BiPoly::integer(2)
        } else {
            BiPoly::zero()
        };
        assert_eq!(c, &expected, "genocchi t^{n}");
    }
}

#[test]
fn both_routes_agree() {
    for kind in SequenceKind::ALL {
        assert_eq!(
            numbers(kind, N, Route::Recurrence),
            numbers(kind, N, Route::Series),
            "{kind}"
        );
    }
}

#[test]
fn genocchi_from_halved_bernoulli() {
    let b = numbers(SequenceKind::Bernoulli, N, Route::Recurrence);
    let g = numbers(SequenceKind::Genocchi, N, Route::Recurrence);
    assert_eq!(genocchi_from_bernoulli(&b), g);
    let half = Rational::new(1, 2).unwrap();
    for n in 0..=N {
        let two_n = Rational::from(1i64 << n);
        let expected = (&b[n] - &b[n].scale_lambda(&half).scale(&two_n)).scale(&Rational::from(2));
        assert_eq!(g[n], expected, "n = {n}");
    }
}

#[test]
fn degenerate_binomial_theorem() {
    let y = p("3/2 - λ");
    for n in 0..=10 {
        let c = pascal(n);
        let rhs: BiPoly = (0..=n)
            .map(|k| (&falling(&BiPoly::x(), k) * &falling(&y, n - k)).scale(&c[n][k]))
            .sum();
        assert_eq!(falling(&(&BiPoly::x() + &y), n), rhs, "n = {n}");
    }
}

#[test]
fn polynomials_at_zero_are_the_numbers() {
    for kind in SequenceKind::ALL {
        let t = SequenceTable::build(kind, N, Route::Recurrence);
        for n in 0..=N {
            assert_eq!(t.polynomials()[n].eval_x(&Rational::zero()), t.numbers()[n]);
        }
    }
}

#[test]
fn shift_identities_with_oracle_factorials() {
    let shift = p("x + 1 - λ");
    let base = p("x - λ");
    let b = SequenceTable::build(SequenceKind::Bernoulli, N, Route::Recurrence);
    let e = SequenceTable::build(SequenceKind::Euler, N, Route::Recurrence);
    let g = SequenceTable::build(SequenceKind::Genocchi, N, Route::Recurrence);
    for n in 0..=N {
        let nn = Rational::from(n as i64);
        let lower = if n == 0 {
            BiPoly::zero()
        } else {
            falling(&base, n - 1)
        };
        let bp = &b.polynomials()[n];
        assert_eq!(
            bp.substitute_x(&shift),
            &lower.scale(&nn) + &bp.substitute_x(&base),
            "β n = {n}"
        );
        let ep = &e.polynomials()[n];
        assert_eq!(
            ep.substitute_x(&shift),
            &falling(&base, n).scale(&Rational::from(2)) - &ep.substitute_x(&base),
            "𝓔 n = {n}"
        );
        let gp = &g.polynomials()[n];
        assert_eq!(
            gp.substitute_x(&shift),
            &lower.scale(&(&nn * &Rational::from(2))) - &gp.substitute_x(&base),
            "𝓖 n = {n}"
        );
    }
}

#[test]
fn classical_limit_against_known_values() {
    let bern = [
        "1",
        "-1/2",
        "1/6",
        "0",
        "-1/30",
        "0",
        "1/42",
        "0",
        "-1/30",
        "0",
        "5/66",
        "0",
        "-691/2730",
    ];
    let euler0 = [
        "1", "-1/2", "0", "1/4", "0", "-1/2", "0", "17/8", "0", "-31/2", "0", "691/4", "0",
    ];
    let genocchi = [
        "0", "1", "-1", "0", "1", "0", "-3", "0", "17", "0", "-155", "0", "2073",
    ];
    for (kind, table) in [
        (SequenceKind::Bernoulli, bern),
        (SequenceKind::Euler, euler0),
        (SequenceKind::Genocchi, genocchi),
    ] {
        let t = SequenceTable::build(kind, N, Route::Recurrence).classical_limit();
        for (n, v) in table.iter().enumerate() {
            assert_eq!(t.numbers()[n], p(v), "{kind} {n}");
        }
    }
}

#[test]
fn appell_form_of_polynomials() {
    let e = numbers(SequenceKind::Euler, 5, Route::Recurrence);
    let polys = polynomials_from_numbers(&e);
    assert_eq!(polys[0], BiPoly::one());
    assert_eq!(polys[1], p("x - 1/2"));
    assert_eq!(polys[2], p("x^2 - xλ - x + λ/2"));
}

#[test]
fn zero_length_tables() {
    for kind in SequenceKind::ALL {
        let t = SequenceTable::build(kind, 0, Route::Series);
        assert_eq!(t.numbers().len(), 1);
        assert_eq!(t.polynomials().len(), 1);
    }
}
