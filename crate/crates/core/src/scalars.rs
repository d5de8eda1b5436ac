//! Exact arithmetic in the ring ℤ[λ] of integer polynomials in the weight λ.
//!
//! Text form writes λ as `l`, highest degree first: `3*l^2 - l + 2`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// A polynomial in λ with arbitrary-precision integer coefficients.
///
/// Index `k` of the coefficient vector holds the coefficient of λ^k.
/// Trailing zeros are never stored, so the zero polynomial is empty and
/// structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    coeffs: Vec<BigInt>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The weight λ itself.
    pub fn lambda() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// −λ, the factor produced by the quasi-idempotent Baxter map.
    pub fn neg_lambda() -> Self {
        Self::monomial(-BigInt::one(), 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c·λ^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of λ^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates at λ = `value` by Horner's rule.
    pub fn eval(&self, value: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * value + c)
    }

    /// The constant polynomial `eval(value)`.
    pub fn specialize(&self, value: &BigInt) -> Self {
        Self::constant(self.eval(value))
    }

    /// True when the text form is a single signed term, so it needs no
    /// parentheses as a coefficient.
    pub(crate) fn is_single_term(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
    }

    /// Leading coefficient is negative.
    pub(crate) fn is_negative_leading(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_negative())
    }
}

impl From<i64> for LambdaPoly {
    fn from(c: i64) -> Self {
        LambdaPoly::constant(c)
    }
}

impl From<BigInt> for LambdaPoly {
    fn from(c: BigInt) -> Self {
        LambdaPoly::constant(c)
    }
}

impl Add for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: LambdaPoly) -> LambdaPoly {
        &self + &rhs
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl Sub for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        self + &(-rhs)
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: LambdaPoly) -> LambdaPoly {
        &self - &rhs
    }
}

impl Mul for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: LambdaPoly) -> LambdaPoly {
        &self * &rhs
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, abs: &BigInt, k: usize) -> fmt::Result {
    match (abs.is_one(), k) {
        (_, 0) => write!(f, "{abs}"),
        (true, 1) => write!(f, "l"),
        (true, _) => write!(f, "l^{k}"),
        (false, 1) => write!(f, "{abs}*l"),
        (false, _) => write!(f, "{abs}*l^{k}"),
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write_power(f, &c.abs(), k)?;
            first = false;
        }
        Ok(())
    }
}

/// Parses one unsigned term `int | int*l[^k] | l[^k]`.
fn parse_term(s: &str) -> Result<(BigInt, usize), ParseError> {
    let bad = || ParseError::new("polynomial", s, "malformed term");
    let parse_power = |rest: &str| -> Result<usize, ParseError> {
        if rest.is_empty() {
            Ok(1)
        } else if let Some(exp) = rest.strip_prefix('^') {
            exp.parse::<usize>().map_err(|_| bad())
        } else {
            Err(bad())
        }
    };
    if let Some(rest) = s.strip_prefix('l') {
        return Ok((BigInt::one(), parse_power(rest)?));
    }
    match s.split_once('*') {
        Some((c, rest)) => {
            let c = parse_digits(c).ok_or_else(bad)?;
            let rest = rest.strip_prefix('l').ok_or_else(bad)?;
            Ok((c, parse_power(rest)?))
        }
        None => Ok((parse_digits(s).ok_or_else(bad)?, 0)),
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for LambdaPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::new("polynomial", s, "empty input"));
        }
        let mut result = LambdaPoly::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' if !first => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(ParseError::new("polynomial", s, "expected '+' or '-'")),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (c, k) = parse_term(&body[..end])?;
            let c = if negative { -c } else { c };
            result += &LambdaPoly::monomial(c, k);
            rest = &body[end..];
            first = false;
        }
        Ok(result)
    }
}
