//! Truncated exponential generating functions `Σ_{n≤N} a_n t^n/n!`.
//!
//! Coefficients are kept in EGF form, so the product of two series is the
//! binomial convolution of their coefficient sequences. All binary
//! operations require equal truncation orders.

use super::factorial::{binomial_row, falling_table};
use super::poly::BiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EgfSeries {
    order: usize,
    coeffs: Vec<BiPoly>,
}

impl EgfSeries {
    /// `coeffs` must hold exactly `order + 1` entries.
    pub fn new(order: usize, coeffs: Vec<BiPoly>) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(Error::CoefficientCount {
                expected: order + 1,
                got: coeffs.len(),
            });
        }
        Ok(EgfSeries { order, coeffs })
    }

    /// Takes the first `order + 1` entries of a longer sequence.
    pub fn from_prefix(order: usize, seq: &[BiPoly]) -> Result<Self> {
        if seq.len() < order + 1 {
            return Err(Error::SequenceTooShort {
                needed: order + 1,
                got: seq.len(),
            });
        }
        Ok(EgfSeries {
            order,
            coeffs: seq[..=order].to_vec(),
        })
    }

    pub fn constant(order: usize, c: BiPoly) -> Self {
        let mut coeffs = vec![BiPoly::zero(); order + 1];
        coeffs[0] = c;
        EgfSeries { order, coeffs }
    }

    pub fn one(order: usize) -> Self {
        EgfSeries::constant(order, BiPoly::one())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BiPoly {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<BiPoly> {
        self.coeffs
    }

    fn check_order(&self, other: &EgfSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &EgfSeries) -> Result<EgfSeries> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &EgfSeries) -> Result<EgfSeries> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &EgfSeries, f: impl Fn(&BiPoly, &BiPoly) -> BiPoly) -> EgfSeries {
        EgfSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> EgfSeries {
        self.map(|a| a.scale(c))
    }

    pub fn map(&self, f: impl Fn(&BiPoly) -> BiPoly) -> EgfSeries {
        EgfSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Product of series: `c_n = Σ_k C(n,k) a_k b_{n−k}`.
    pub fn mul(&self, other: &EgfSeries) -> Result<EgfSeries> {
        self.check_order(other)?;
        let coeffs = (0..=self.order)
            .map(|n| {
                binomial_row(n)
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| !self.coeffs[*k].is_zero() && !other.coeffs[n - k].is_zero())
                    .map(|(k, c)| (&self.coeffs[k] * &other.coeffs[n - k]).scale(c))
                    .sum()
            })
            .collect();
        Ok(EgfSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplicative inverse up to the truncation order. The constant
    /// coefficient must be a nonzero rational constant.
    pub fn reciprocal(&self) -> Result<EgfSeries> {
        let head = match self.coeffs[0].as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::NotInvertible),
        };
        let inv_head = head.recip()?;
        let mut out: Vec<BiPoly> = Vec::with_capacity(self.order + 1);
        out.push(BiPoly::constant(inv_head.clone()));
        for n in 1..=self.order {
            let row = binomial_row(n);
            let acc: BiPoly = (1..=n)
                .filter(|k| !self.coeffs[*k].is_zero())
                .map(|k| (&self.coeffs[k] * &out[n - k]).scale(&row[k]))
                .sum();
            out.push(acc.scale(&-&inv_head));
        }
        Ok(EgfSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// `(f(t) − f(0)) / t`, defined only when `f(0) = 0`. The result has
    /// order `N − 1` with `b_n = a_{n+1} / (n+1)`.
    pub fn shift_down(&self) -> Result<EgfSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if self.order == 0 {
            return Err(Error::EmptyShift);
        }
        let coeffs = (0..self.order)
            .map(|n| self.coeffs[n + 1].scale(&Rational::new(1, n as i64 + 1).expect("n + 1 > 0")))
            .collect();
        Ok(EgfSeries {
            order: self.order - 1,
            coeffs,
        })
    }

    /// `t · f(t)`, of order `N + 1`: `b_0 = 0`, `b_n = n · a_{n−1}`.
    pub fn shift_up(&self) -> EgfSeries {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(BiPoly::zero());
        for (n, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a.scale(&Rational::from(n as i64 + 1)));
        }
        EgfSeries {
            order: self.order + 1,
            coeffs,
        }
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<EgfSeries> {
        EgfSeries::from_prefix(order, &self.coeffs)
    }
}

/// `e_λ^s(t) = Σ (s)_{n,λ} t^n/n!` truncated at `order`.
pub fn degenerate_exponential(s: &BiPoly, order: usize) -> EgfSeries {
    EgfSeries {
        order,
        coeffs: falling_table(s, order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn e_lambda(order: usize) -> EgfSeries {
        degenerate_exponential(&BiPoly::one(), order)
    }

    #[test]
    fn constructor_checks_length() {
        assert!(EgfSeries::new(2, vec![BiPoly::one(); 2]).is_err());
        assert!(EgfSeries::new(1, vec![BiPoly::one(); 2]).is_ok());
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let f = degenerate_exponential(&p("x"), 5);
        assert_eq!(f.mul(&EgfSeries::one(5)).unwrap(), f);
    }

    #[test]
    fn exponents_add_at_lambda_zero() {
        let e = e_lambda(3).map(|c| c.eval_lambda(&Rational::zero()));
        let sq = e.mul(&e).unwrap();
        let got: Vec<_> = sq
            .coeffs()
            .iter()
            .map(|c| c.as_constant().unwrap())
            .collect();
        assert_eq!(got, [1, 2, 4, 8].map(|v| rat(v, 1)).to_vec());
    }

    #[test]
    fn product_first_coefficient() {
        let f = degenerate_exponential(&p("x"), 1);
        let g = degenerate_exponential(&p("1 - λ"), 1);
        assert_eq!(f.mul(&g).unwrap().coeff(1), &p("x + 1 - λ"));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = EgfSeries::one(3).mul(&EgfSeries::one(4)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 3, right: 4 });
        assert!(EgfSeries::one(3).add(&EgfSeries::one(2)).is_err());
    }

    #[test]
    fn reciprocal_of_constant() {
        let f = EgfSeries::constant(4, BiPoly::integer(2));
        assert_eq!(
            f.reciprocal().unwrap(),
            EgfSeries::constant(4, BiPoly::constant(rat(1, 2)))
        );
    }

    #[test]
    fn reciprocal_requires_invertible_head() {
        assert_eq!(
            EgfSeries::constant(2, BiPoly::zero()).reciprocal(),
            Err(Error::NotInvertible)
        );
        assert_eq!(
            EgfSeries::constant(2, p("1 + λ")).reciprocal(),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn bernoulli_generating_function_coefficients() {
        let e = e_lambda(5);
        let base = e.sub(&EgfSeries::one(5)).unwrap().shift_down().unwrap();
        let r = base.reciprocal().unwrap();
        assert_eq!(r.coeff(2), &p("1/6 - (1/6)λ^2"));

        let classical = base
            .map(|c| c.eval_lambda(&Rational::zero()))
            .reciprocal()
            .unwrap();
        assert_eq!(classical.coeff(4), &BiPoly::constant(rat(-1, 30)));
    }

    #[test]
    fn shift_down_of_exponential_minus_one() {
        let f = e_lambda(4).sub(&EgfSeries::one(4)).unwrap();
        let g = f.shift_down().unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.coeff(0), &BiPoly::one());
        assert_eq!(g.coeff(1), &p("(1 - λ)/2"));
    }

    #[test]
    fn shift_down_errors() {
        assert_eq!(
            EgfSeries::one(3).shift_down(),
            Err(Error::NonzeroConstantTerm)
        );
        assert_eq!(
            EgfSeries::constant(0, BiPoly::zero()).shift_down(),
            Err(Error::EmptyShift)
        );
    }

    #[test]
    fn shift_up_then_down_is_identity() {
        let f = degenerate_exponential(&p("x"), 6);
        let tf = f.shift_up();
        assert_eq!(tf.coeff(3), &falling_table(&p("x"), 2)[2].scale(&rat(3, 1)));
        assert_eq!(tf.shift_down().unwrap(), f);
    }

    #[test]
    fn degenerate_exponential_coefficients() {
        assert_eq!(e_lambda(3).coeff(3), &p("1 - 3λ + 2λ^2"));
        assert_eq!(
            degenerate_exponential(&p("1 - λ"), 2).coeff(2),
            &p("(1 - λ)(1 - 2λ)")
        );
        assert_eq!(degenerate_exponential(&p("x"), 2).coeff(2), &p("x^2 - λx"));
    }
}
