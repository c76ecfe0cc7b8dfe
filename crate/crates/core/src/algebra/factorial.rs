//! Degenerate falling and rising factorials and binomial coefficients.

use num_bigint::BigInt;

use super::poly::BiPoly;
use super::rational::Rational;

/// `(s)_{n,λ} = s(s − λ)(s − 2λ)⋯(s − (n−1)λ)`, with `(s)_{0,λ} = 1`.
pub fn degenerate_falling(s: &BiPoly, n: usize) -> BiPoly {
    let lambda = BiPoly::lambda();
    (0..n).fold(BiPoly::one(), |acc, j| {
        let factor = s - &lambda.scale(&Rational::from(j as i64));
        &acc * &factor
    })
}

/// `⟨s⟩_{n,λ} = s(s + λ)(s + 2λ)⋯(s + (n−1)λ)`, with `⟨s⟩_{0,λ} = 1`.
pub fn degenerate_rising(s: &BiPoly, n: usize) -> BiPoly {
    let lambda = BiPoly::lambda();
    (0..n).fold(BiPoly::one(), |acc, j| {
        let factor = s + &lambda.scale(&Rational::from(j as i64));
        &acc * &factor
    })
}

/// `(x)_{n,λ}` as a polynomial in `x` and `λ`.
pub fn falling_factorial(n: usize) -> BiPoly {
    degenerate_falling(&BiPoly::x(), n)
}

/// `⟨x⟩_{n,λ}` as a polynomial in `x` and `λ`.
pub fn rising_factorial(n: usize) -> BiPoly {
    degenerate_rising(&BiPoly::x(), n)
}

/// Every `(s)_{m,λ}` for `m = 0..=n`, built incrementally.
pub fn falling_table(s: &BiPoly, n: usize) -> Vec<BiPoly> {
    let lambda = BiPoly::lambda();
    let mut out = Vec::with_capacity(n + 1);
    out.push(BiPoly::one());
    for j in 0..n {
        let factor = s - &lambda.scale(&Rational::from(j as i64));
        let next = &out[j] * &factor;
        out.push(next);
    }
    out
}

/// Every `⟨s⟩_{m,λ}` for `m = 0..=n`.
pub fn rising_table(s: &BiPoly, n: usize) -> Vec<BiPoly> {
    let lambda = BiPoly::lambda();
    let mut out = Vec::with_capacity(n + 1);
    out.push(BiPoly::one());
    for j in 0..n {
        let factor = s + &lambda.scale(&Rational::from(j as i64));
        let next = &out[j] * &factor;
        out.push(next);
    }
    out
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<Rational> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::from(1);
    row.push(Rational::integer(c.clone()));
    for k in 1..=n {
        c = c * BigInt::from(n - k + 1) / BigInt::from(k);
        row.push(Rational::integer(c.clone()));
    }
    row
}

pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    binomial_row(n).swap_remove(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn falling_small_cases() {
        assert_eq!(falling_factorial(0), BiPoly::one());
        assert_eq!(falling_factorial(2), p("x^2 - λx"));
        assert_eq!(falling_factorial(3), p("x^3 - 3λx^2 + 2λ^2x"));
    }

    #[test]
    fn rising_small_cases() {
        assert_eq!(rising_factorial(0), BiPoly::one());
        assert_eq!(rising_factorial(2), p("x^2 + λx"));
        assert_eq!(rising_factorial(3), p("x^3 + 3λx^2 + 2λ^2x"));
    }

    #[test]
    fn rising_at_one_minus_lambda() {
        assert_eq!(degenerate_rising(&p("1 - λ"), 2), p("1 - λ"));
    }

    #[test]
    fn tables_match_direct_products() {
        let s = p("1 - λ");
        let f = falling_table(&s, 6);
        let r = rising_table(&s, 6);
        for m in 0..=6 {
            assert_eq!(f[m], degenerate_falling(&s, m));
            assert_eq!(r[m], degenerate_rising(&s, m));
        }
    }

    #[test]
    fn pascal_rows() {
        let row: Vec<_> = binomial_row(5);
        assert_eq!(row, [1, 5, 10, 10, 5, 1].map(|v| rat(v, 1)).to_vec());
        assert_eq!(binomial(12, 6), rat(924, 1));
        assert_eq!(binomial(3, 4), Rational::zero());
    }
}
