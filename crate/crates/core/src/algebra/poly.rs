//! Sparse polynomials in `x` and `λ` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Exponent pair `x^x · λ^lambda`. Ordered by `x` first, then `lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents {
    pub x: u32,
    pub lambda: u32,
}

impl Exponents {
    pub const ONE: Exponents = Exponents { x: 0, lambda: 0 };

    pub fn new(x: u32, lambda: u32) -> Self {
        Exponents { x, lambda }
    }
}

impl Mul for Exponents {
    type Output = Exponents;
    fn mul(self, rhs: Exponents) -> Exponents {
        Exponents::new(self.x + rhs.x, self.lambda + rhs.lambda)
    }
}

/// A polynomial in `x` and `λ` over the rationals.
///
/// Stored sparsely; no zero coefficient is ever kept, so the zero polynomial
/// is the empty map and derived equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<TermRecord>", into = "Vec<TermRecord>")]
pub struct BiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn integer(n: i64) -> Self {
        BiPoly::constant(Rational::from(n))
    }

    pub fn x() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn lambda() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, x_deg: u32, lambda_deg: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Exponents::new(x_deg, lambda_deg), &c);
        p
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = BiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// Terms in canonical order: `x` degree descending, then `λ` degree
    /// descending.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &Rational)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x_deg: u32, lambda_deg: u32) -> Rational {
        self.terms
            .get(&Exponents::new(x_deg, lambda_deg))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Exponents::ONE).cloned(),
            _ => None,
        }
    }

    pub fn contains_x(&self) -> bool {
        self.terms.keys().any(|e| e.x > 0)
    }

    pub fn contains_lambda(&self) -> bool {
        self.terms.keys().any(|e| e.lambda > 0)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.x).max()
    }

    pub fn degree_lambda(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.lambda).max()
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of `x^d`, as a polynomial in `λ` alone.
    pub fn x_coefficient(&self, d: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.x == d)
                .map(|(e, c)| (Exponents::new(0, e.lambda), c.clone()))
                .collect(),
        }
    }

    /// Replaces every `x` by `s` (Horner in `x`).
    pub fn substitute_x(&self, s: &BiPoly) -> BiPoly {
        let Some(top) = self.degree_x() else {
            return BiPoly::zero();
        };
        let mut acc = self.x_coefficient(top);
        for d in (0..top).rev() {
            acc = &(&acc * s) + &self.x_coefficient(d);
        }
        acc
    }

    pub fn eval_x(&self, v: &Rational) -> BiPoly {
        self.substitute_x(&BiPoly::constant(v.clone()))
    }

    /// Sets `λ := v`; the result no longer contains `λ`.
    pub fn eval_lambda(&self, v: &Rational) -> BiPoly {
        let mut out = BiPoly::zero();
        for (e, c) in &self.terms {
            let w = if e.lambda == 0 {
                c.clone()
            } else {
                c * &v.pow(e.lambda as i32).expect("nonnegative exponent")
            };
            out.add_term(Exponents::new(e.x, 0), &w);
        }
        out
    }

    /// Substitutes `λ := c·λ`.
    pub fn scale_lambda(&self, c: &Rational) -> BiPoly {
        let mut out = BiPoly::zero();
        for (e, v) in &self.terms {
            let w = v * &c.pow(e.lambda as i32).expect("nonnegative exponent");
            out.add_term(*e, &w);
        }
        out
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(*ea * *eb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}

/// One serialized term. Integers are decimal strings so consumers never
/// overflow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub x_deg: u32,
    pub lambda_deg: u32,
    pub num: String,
    pub den: String,
}

impl From<BiPoly> for Vec<TermRecord> {
    fn from(p: BiPoly) -> Self {
        p.to_records()
    }
}

impl BiPoly {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms()
            .map(|(e, c)| TermRecord {
                x_deg: e.x,
                lambda_deg: e.lambda,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    /// Rebuilds a polynomial from term records. Records may come in any
    /// order and unreduced, but zero coefficients and repeated exponent pairs
    /// are rejected; the error names the offending term index.
    pub fn from_records(records: &[TermRecord]) -> Result<BiPoly> {
        let mut terms = BTreeMap::new();
        for (i, r) in records.iter().enumerate() {
            let num = r
                .num
                .trim()
                .parse::<num_bigint::BigInt>()
                .map_err(|_| Error::TermRecord(format!("term {i}: invalid num {:?}", r.num)))?;
            let den = r
                .den
                .trim()
                .parse::<num_bigint::BigInt>()
                .map_err(|_| Error::TermRecord(format!("term {i}: invalid den {:?}", r.den)))?;
            let c = Rational::new(num, den)
                .map_err(|_| Error::TermRecord(format!("term {i}: zero denominator")))?;
            if c.is_zero() {
                return Err(Error::TermRecord(format!("term {i}: zero coefficient")));
            }
            let e = Exponents::new(r.x_deg, r.lambda_deg);
            if terms.insert(e, c).is_some() {
                return Err(Error::TermRecord(format!(
                    "term {i}: repeated exponents (x^{}, λ^{})",
                    r.x_deg, r.lambda_deg
                )));
            }
        }
        Ok(BiPoly { terms })
    }
}

impl TryFrom<Vec<TermRecord>> for BiPoly {
    type Error = Error;
    fn try_from(records: Vec<TermRecord>) -> Result<BiPoly> {
        BiPoly::from_records(&records)
    }
}

/// Human-readable form: `x` degree descending, then `λ` ascending, e.g.
/// `x^2 + x - 2xλ + 1/6 - λ + (5/6)λ^2`. The output parses back with
/// [`str::parse`].
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in display_order(self).enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let unit = e == Exponents::ONE;
            if unit {
                write!(f, "{mag}")?;
            } else if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            write_monomial(f, e, "λ")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// Terms ordered for display: `x` degree descending, `λ` degree ascending.
pub fn display_order(p: &BiPoly) -> impl Iterator<Item = (Exponents, &Rational)> + '_ {
    let mut v: Vec<_> = p.terms.iter().map(|(e, c)| (*e, c)).collect();
    v.sort_by(|(a, _), (b, _)| b.x.cmp(&a.x).then(a.lambda.cmp(&b.lambda)));
    v.into_iter()
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: Exponents, lambda: &str) -> fmt::Result {
    match e.x {
        0 => {}
        1 => f.write_str("x")?,
        d => write!(f, "x^{d}")?,
    }
    match e.lambda {
        0 => {}
        1 => f.write_str(lambda)?,
        d => write!(f, "{lambda}^{d}")?,
    }
    Ok(())
}
