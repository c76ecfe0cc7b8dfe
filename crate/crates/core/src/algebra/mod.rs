//! Exact arithmetic: rationals, bivariate polynomials in `x` and `λ`, and
//! truncated exponential generating functions over them.

pub mod factorial;
mod parse;
pub mod poly;
pub mod rational;
pub mod series;

pub use factorial::{
    binomial, binomial_row, degenerate_falling, degenerate_rising, falling_factorial,
    rising_factorial,
};
pub use poly::{BiPoly, Exponents, TermRecord};
pub use rational::{rat, Rational};
pub use series::{degenerate_exponential, EgfSeries};
