//! Formal power series given as quotients of integer polynomials, expanded
//! exactly.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::Error;

/// A rational power series `numerator / denominator`, both integer
/// polynomials with coefficients listed constant term first. The denominator
/// must have a nonzero constant term so the quotient expands as a power
/// series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSeries {
    numerator: Vec<BigInt>,
    denominator: Vec<BigInt>,
}

impl RationalSeries {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self, Error> {
        if denominator.first().is_none_or(BigInt::is_zero) {
            return Err(Error::ZeroConstantDenominator);
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Result<Self, Error> {
        RationalSeries::new(
            numerator.iter().map(|&c| BigInt::from(c)).collect(),
            denominator.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }

    /// True when the series itself has constant term zero, i.e. the
    /// numerator's constant coefficient vanishes.
    pub fn constant_term_is_zero(&self) -> bool {
        self.numerator.first().is_none_or(BigInt::is_zero)
    }

    /// Coefficients 0..=order of the power-series expansion. Division is
    /// carried out over exact rationals by the linear recurrence
    /// `c[i] = (num[i] - sum_j den[j] c[i-j]) / den[0]`, and every
    /// coefficient is checked to be an integer.
    pub fn expand(&self, order: usize) -> Result<Vec<BigInt>, Error> {
        let d0 = BigRational::from(self.denominator[0].clone());
        let mut coeffs: Vec<BigRational> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = BigRational::from(self.numerator.get(i).cloned().unwrap_or_default());
            for j in 1..self.denominator.len().min(i + 1) {
                acc -= BigRational::from(self.denominator[j].clone()) * &coeffs[i - j];
            }
            coeffs.push(acc / &d0);
        }
        coeffs
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegerCoefficient { index })
                }
            })
            .collect()
    }
}

impl FromStr for RationalSeries {
    type Err = Error;

    /// Parses `"n0,n1,.../d0,d1,..."`, two comma-separated integer
    /// coefficient lists separated by a slash, constant terms first.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidPolynomial(format!("missing '/' in {s:?}")))?;
        RationalSeries::new(parse_poly(num)?, parse_poly(den)?)
    }
}

fn parse_poly(s: &str) -> Result<Vec<BigInt>, Error> {
    s.split(',')
        .map(|part| {
            BigInt::from_str(part.trim())
                .map_err(|_| Error::InvalidPolynomial(format!("bad coefficient {part:?}")))
        })
        .collect()
}

/// Product of two coefficient lists truncated at `order` (result has
/// `order + 1` entries).
pub(crate) fn mul_trunc(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `base^exp` truncated at `order`, by repeated squaring.
pub(crate) fn pow_trunc(base: &[BigInt], exp: usize, order: usize) -> Vec<BigInt> {
    let mut result = vec![BigInt::zero(); order + 1];
    result[0] = BigInt::from(1);
    let mut square: Vec<BigInt> = base.iter().take(order + 1).cloned().collect();
    square.resize(order + 1, BigInt::zero());
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_trunc(&result, &square, order);
        }
        e >>= 1;
        if e > 0 {
            square = mul_trunc(&square, &square, order);
        }
    }
    result
}
