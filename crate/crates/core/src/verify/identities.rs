//! Internal-consistency checks.

use super::CheckResult;
use crate::algebra::factorial::{binomial_row, degenerate_falling};
use crate::algebra::{degenerate_exponential, BiPoly, EgfSeries, Rational};
use crate::classical;
use crate::seidel::{self, Mode, SeidelMatrix};
use crate::sequences::{self, genocchi_from_bernoulli, Route, SequenceKind, SequenceTable};

fn x_minus_lambda() -> BiPoly {
    &BiPoly::x() - &BiPoly::lambda()
}

fn x_plus_one_minus_lambda() -> BiPoly {
    &(&BiPoly::x() + &BiPoly::one()) - &BiPoly::lambda()
}

fn delta(i: usize, n: usize) -> BiPoly {
    if i == n {
        BiPoly::one()
    } else {
        BiPoly::zero()
    }
}

fn polynomials(kind: SequenceKind, n_max: usize) -> Vec<BiPoly> {
    SequenceTable::build(kind, n_max, Route::Recurrence)
        .polynomials()
        .to_vec()
}

/// Initial sequences used for the matrix checks: the three polynomial
/// families plus a few fixed sequences with rational and mixed entries.
pub fn standard_seeds(n_max: usize) -> Vec<(String, Vec<BiPoly>)> {
    let ones = vec![BiPoly::one(); n_max + 1];
    let harmonic = (0..=n_max)
        .map(|n| BiPoly::constant(Rational::new(1, n as i64 + 1).expect("positive")))
        .collect();
    let mixed = (0..=n_max)
        .map(|n| {
            let n = n as i64;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let x = BiPoly::x().scale(&Rational::from(n + 1));
            let l = BiPoly::lambda().scale(&Rational::new(-n, 2).expect("nonzero"));
            &(&x + &l) + &BiPoly::constant(Rational::new(sign, n + 1).expect("positive"))
        })
        .collect();
    let mut seeds: Vec<(String, Vec<BiPoly>)> = SequenceKind::ALL
        .into_iter()
        .map(|k| (k.name().to_owned(), polynomials(k, n_max)))
        .collect();
    seeds.push(("ones".into(), ones));
    seeds.push(("harmonic".into(), harmonic));
    seeds.push(("mixed".into(), mixed));
    seeds
}

/// `e_λ^x(t) · e_λ^{1−λ}(t) = e_λ^{x+1−λ}(t)`, coefficientwise.
pub fn check_degenerate_binomial(n_max: usize) -> CheckResult {
    let a = degenerate_exponential(&BiPoly::x(), n_max);
    let b = degenerate_exponential(&seidel::one_minus_lambda(), n_max);
    let ab = a.mul(&b).expect("equal orders");
    let sum = degenerate_exponential(&x_plus_one_minus_lambda(), n_max);
    CheckResult::over_range(
        "algebra.degenerate_binomial",
        "(x)_{k,λ} and (1−λ)_{n−k,λ} convolve to (x+1−λ)_{n,λ}",
        0,
        n_max,
        |n| ab.coeff(n) - sum.coeff(n),
    )
}

/// Recurrence route against series route for each family.
pub fn check_dual_routes(n_max: usize) -> Vec<CheckResult> {
    SequenceKind::ALL
        .into_iter()
        .map(|kind| {
            let rec = sequences::numbers(kind, n_max, Route::Recurrence);
            let ser = sequences::numbers(kind, n_max, Route::Series);
            CheckResult::over_range(
                format!("{kind}.dual_route"),
                format!("{kind} numbers: boundary recurrence equals generating-function inversion"),
                0,
                n_max,
                |n| &rec[n] - &ser[n],
            )
        })
        .collect()
}

/// Boundary relations at `x = 1`, numbers as polynomials at `x = 0`, and
/// the Genocchi–Bernoulli relation under `λ ↦ λ/2`.
pub fn check_boundary_and_relations(n_max: usize) -> Vec<CheckResult> {
    let one = Rational::one();
    let zero = Rational::zero();
    let mut out = Vec::new();
    for kind in SequenceKind::ALL {
        let table = SequenceTable::build(kind, n_max, Route::Recurrence);
        let (nums, polys) = (table.numbers(), table.polynomials());
        let (anchor, residual): (&str, Box<dyn Fn(usize) -> BiPoly>) = match kind {
            SequenceKind::Bernoulli => (
                "β_{n,λ}(1) − β_{n,λ} = δ_{1,n}",
                Box::new(|n| &(&polys[n].eval_x(&one) - &nums[n]) - &delta(1, n)),
            ),
            SequenceKind::Euler => (
                "𝓔_{n,λ}(1) + 𝓔_{n,λ} = 2δ_{0,n}",
                Box::new(|n| {
                    &(&polys[n].eval_x(&one) + &nums[n]) - &delta(0, n).scale(&Rational::from(2))
                }),
            ),
            SequenceKind::Genocchi => (
                "𝓖_{n,λ}(1) + 𝓖_{n,λ} = 2δ_{1,n}",
                Box::new(|n| {
                    &(&polys[n].eval_x(&one) + &nums[n]) - &delta(1, n).scale(&Rational::from(2))
                }),
            ),
        };
        out.push(CheckResult::over_range(
            format!("{kind}.boundary"),
            anchor,
            0,
            n_max,
            residual,
        ));
        out.push(CheckResult::over_range(
            format!("{kind}.numbers_at_zero"),
            format!("{kind} numbers are the polynomials at x = 0"),
            0,
            n_max,
            |n| &polys[n].eval_x(&zero) - &nums[n],
        ));
    }
    let bernoulli = sequences::bernoulli_numbers(n_max, Route::Series);
    let via_bernoulli = genocchi_from_bernoulli(&bernoulli);
    let genocchi = sequences::genocchi_numbers(n_max, Route::Recurrence);
    out.push(CheckResult::over_range(
        "genocchi.from_bernoulli",
        "𝓖_{n,λ} = 2(β_{n,λ} − 2^n β_{n,λ/2})",
        0,
        n_max,
        |n| &genocchi[n] - &via_bernoulli[n],
    ));
    out
}

/// For every standard seed: the recursive fill against the closed form for
/// the final sequence, the inverse transform back to the initial sequence,
/// and the generating-function law `Ā = e_λ^{1−λ} A`.
pub fn check_seidel_transforms(n_max: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (name, seed) in standard_seeds(n_max) {
        let matrix = SeidelMatrix::build(&seed, n_max, Mode::Degenerate)
            .expect("seed has n_max + 1 entries");
        let column = matrix.final_sequence();
        out.push(CheckResult::over_range(
            format!("seidel.{name}.closed_form"),
            "a_{n,0} = Σ C(n,k)(1−λ)_{n−k,λ} a_{0,k}",
            0,
            n_max,
            |n| &column[n] - &seidel::final_from_initial(&seed, n).expect("long enough"),
        ));
        out.push(CheckResult::over_range(
            format!("seidel.{name}.inversion"),
            "a_{0,n} = Σ C(n,k)(−1)^{n−k}⟨1−λ⟩_{n−k,λ} a_{k,0}",
            0,
            n_max,
            |n| &seed[n] - &seidel::initial_from_final(&column, n).expect("long enough"),
        ));
        let (_, a_bar) = seidel::generating_law(&seed, n_max).expect("long enough");
        out.push(CheckResult::over_range(
            format!("seidel.{name}.generating_law"),
            "Σ a_{n,0} t^n/n! = e_λ^{1−λ}(t) Σ a_{0,n} t^n/n!",
            0,
            n_max,
            |n| a_bar.coeff(n) - &column[n],
        ));
    }
    out
}

/// `β_{n,λ}(x+1−λ) = n(x−λ)_{n−1,λ} + β_{n,λ}(x−λ)`.
pub fn check_bernoulli_shift(n_max: usize) -> CheckResult {
    let polys = polynomials(SequenceKind::Bernoulli, n_max);
    let (up, down) = (x_plus_one_minus_lambda(), x_minus_lambda());
    CheckResult::over_range(
        "bernoulli.shift_identity",
        "β_{n,λ}(x+1−λ) = n(x−λ)_{n−1,λ} + β_{n,λ}(x−λ)",
        0,
        n_max,
        |n| {
            let lhs = polys[n].substitute_x(&up);
            let mut rhs = polys[n].substitute_x(&down);
            if n > 0 {
                rhs = &rhs + &degenerate_falling(&down, n - 1).scale(&Rational::from(n as i64));
            }
            &lhs - &rhs
        },
    )
}

/// `𝓔_{n,λ}(x+1−λ) = 2(x−λ)_{n,λ} − 𝓔_{n,λ}(x−λ)`.
pub fn check_euler_shift(n_max: usize) -> CheckResult {
    let polys = polynomials(SequenceKind::Euler, n_max);
    let (up, down) = (x_plus_one_minus_lambda(), x_minus_lambda());
    CheckResult::over_range(
        "euler.shift_identity",
        "𝓔_{n,λ}(x+1−λ) = 2(x−λ)_{n,λ} − 𝓔_{n,λ}(x−λ)",
        0,
        n_max,
        |n| {
            let lhs = polys[n].substitute_x(&up);
            let rhs = &degenerate_falling(&down, n).scale(&Rational::from(2))
                - &polys[n].substitute_x(&down);
            &lhs - &rhs
        },
    )
}

/// `𝓖_{n,λ}(x+1−λ) = 2n(x−λ)_{n−1,λ} − 𝓖_{n,λ}(x−λ)`.
pub fn check_genocchi_shift(n_max: usize) -> CheckResult {
    let polys = polynomials(SequenceKind::Genocchi, n_max);
    let (up, down) = (x_plus_one_minus_lambda(), x_minus_lambda());
    CheckResult::over_range(
        "genocchi.shift_identity",
        "𝓖_{n,λ}(x+1−λ) = 2n(x−λ)_{n−1,λ} − 𝓖_{n,λ}(x−λ)",
        0,
        n_max,
        |n| {
            let lhs = polys[n].substitute_x(&up);
            let mut rhs = -polys[n].substitute_x(&down);
            if n > 0 {
                rhs = &rhs + &degenerate_falling(&down, n - 1).scale(&Rational::from(2 * n as i64));
            }
            &lhs - &rhs
        },
    )
}

/// The final sequence of the matrix seeded with a family's polynomials is
/// that family evaluated at `x + 1 − λ`.
pub fn check_final_sequences(n_max: usize) -> Vec<CheckResult> {
    let up = x_plus_one_minus_lambda();
    SequenceKind::ALL
        .into_iter()
        .map(|kind| {
            let polys = polynomials(kind, n_max);
            let column = SeidelMatrix::build(&polys, n_max, Mode::Degenerate)
                .expect("long enough")
                .final_sequence();
            CheckResult::over_range(
                format!("{kind}.final_sequence"),
                format!("a_{{n,0}} of the {kind} matrix is the polynomial at x+1−λ"),
                0,
                n_max,
                |n| &column[n] - &polys[n].substitute_x(&up),
            )
        })
        .collect()
}

/// `λ → 0`: sequence limits against the ordinary families, and the matrix
/// transforms against the ordinary binomial pair and `Ā(t) = e^t A(t)`.
pub fn check_classical_degeneration(n_max: usize) -> Vec<CheckResult> {
    let zero = Rational::zero();
    let mut out = Vec::new();
    for kind in SequenceKind::ALL {
        let limit = SequenceTable::build(kind, n_max, Route::Series).classical_limit();
        let oracle_numbers = classical::numbers(kind, n_max);
        let oracle_polys = classical::polynomials(kind, n_max);
        out.push(CheckResult::over_range(
            format!("classical.{kind}.numbers"),
            format!("{kind} numbers at λ = 0 equal the ordinary values"),
            0,
            n_max,
            |n| &limit.numbers()[n] - &BiPoly::constant(oracle_numbers[n].clone()),
        ));
        out.push(CheckResult::over_range(
            format!("classical.{kind}.polynomials"),
            format!("{kind} polynomials at λ = 0 equal the ordinary polynomials"),
            0,
            n_max,
            |n| &limit.polynomials()[n] - &oracle_polys[n],
        ));
    }

    let seeds: Vec<(String, Vec<BiPoly>)> = standard_seeds(n_max)
        .into_iter()
        .map(|(name, s)| (name, s.iter().map(|p| p.eval_lambda(&zero)).collect()))
        .collect();
    let matrices: Vec<SeidelMatrix> = seeds
        .iter()
        .map(|(_, s)| SeidelMatrix::build(s, n_max, Mode::Classical).expect("long enough"))
        .collect();
    let columns: Vec<Vec<BiPoly>> = matrices.iter().map(SeidelMatrix::final_sequence).collect();
    let exp_t =
        EgfSeries::new(n_max, vec![BiPoly::one(); n_max + 1]).expect("n_max + 1 coefficients");
    let products: Vec<EgfSeries> = seeds
        .iter()
        .map(|(_, s)| {
            let a = EgfSeries::from_prefix(n_max, s).expect("long enough");
            exp_t.mul(&a).expect("equal orders")
        })
        .collect();

    let binomial_sum = |seq: &[BiPoly], n: usize, alternate: bool| -> BiPoly {
        let row = binomial_row(n);
        (0..=n)
            .map(|k| {
                let negate = alternate && (n - k) % 2 == 1;
                let c = if negate { -&row[k] } else { row[k].clone() };
                seq[k].scale(&c)
            })
            .sum()
    };
    let first_failure = |f: &dyn Fn(usize, usize) -> BiPoly, n: usize| -> BiPoly {
        (0..seeds.len())
            .map(|i| f(i, n))
            .find(|r| !r.is_zero())
            .unwrap_or_default()
    };

    out.push(CheckResult::over_range(
        "classical.seidel.forward",
        "λ = 0: a_{n,0} = Σ C(n,k) a_{0,k}",
        0,
        n_max,
        |n| {
            first_failure(
                &|i, n| &columns[i][n] - &binomial_sum(&seeds[i].1, n, false),
                n,
            )
        },
    ));
    out.push(CheckResult::over_range(
        "classical.seidel.inverse",
        "λ = 0: a_{0,n} = Σ C(n,k)(−1)^{n−k} a_{k,0}",
        0,
        n_max,
        |n| {
            first_failure(
                &|i, n| &seeds[i].1[n] - &binomial_sum(&columns[i], n, true),
                n,
            )
        },
    ));
    out.push(CheckResult::over_range(
        "classical.seidel.closed_form_collapse",
        "λ = 0: (1−λ)_{m,λ} = 1, so the degenerate closed form is the binomial sum",
        0,
        n_max,
        |n| {
            first_failure(
                &|i, n| {
                    let degenerate =
                        seidel::final_from_initial(&seeds[i].1, n).expect("long enough");
                    &degenerate.eval_lambda(&zero) - &binomial_sum(&seeds[i].1, n, false)
                },
                n,
            )
        },
    ));
    out.push(CheckResult::over_range(
        "classical.seidel.generating_law",
        "λ = 0: Ā(t) = e^t A(t)",
        0,
        n_max,
        |n| first_failure(&|i, n| products[i].coeff(n) - &columns[i][n], n),
    ));
    let ones = vec![BiPoly::one(); n_max + 1];
    let (_, a_bar) = seidel::generating_law(&ones, n_max).expect("long enough");
    out.push(CheckResult::over_range(
        "classical.seidel.powers_of_two",
        "λ = 0, a_{0,n} = 1: a_{n,0} = 2^n",
        0,
        n_max,
        |n| {
            let two_n = BiPoly::constant(Rational::from(2).pow(n as i32).expect("n ≥ 0"));
            &a_bar.coeff(n).eval_lambda(&zero) - &two_n
        },
    ));
    out
}
