//! Finite linear combinations with coefficients in ℤ[λ].
//!
//! Keys are kept in their canonical order, zero coefficients are dropped.
//! The same type serves decorated trees, planar trees and words.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::ParseError;
use crate::scalars::LambdaPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, LambdaPoly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `1·key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, LambdaPoly::one())
    }

    pub fn term(key: K, coeff: LambdaPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    /// Adds `coeff·key` in place.
    pub fn add_term(&mut self, key: K, coeff: LambdaPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `scale·other` in place.
    pub fn add_scaled(&mut self, other: &LinComb<K>, scale: &LambdaPoly) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            let c = if scale.is_one() { c.clone() } else { c * scale };
            self.add_term(k.clone(), c);
        }
    }

    pub fn scale(&self, s: &LambdaPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn coeff(&self, key: &K) -> LambdaPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, LambdaPoly> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, LambdaPoly> {
        self.terms.keys()
    }

    /// The single key when `self` is `1·key`.
    pub fn as_basis(&self) -> Option<&K> {
        match self.terms.iter().next() {
            Some((k, c)) if self.terms.len() == 1 && c.is_one() => Some(k),
            _ => None,
        }
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a bilinear map given on pairs of keys.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &LinComb<L>,
        mut f: impl FnMut(&K, &L) -> LinComb<M>,
    ) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            for (l, d) in &other.terms {
                out.add_scaled(&f(k, l), &(c * d));
            }
        }
        out
    }

    /// Evaluates every coefficient at λ = `value`.
    pub fn specialize(&self, value: &BigInt) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.specialize(value));
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, LambdaPoly)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, LambdaPoly)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a LambdaPoly);
    type IntoIter = btree_map::Iter<'a, K, LambdaPoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &LambdaPoly::one());
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self.add_scaled(&rhs, &LambdaPoly::one());
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&LambdaPoly::constant(-1))
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &LambdaPoly::constant(-1));
        out
    }
}

/// `coeff*key` terms joined by ` + ` / ` - `; a unit coefficient is omitted
/// and compound coefficients are parenthesized. The zero element prints `0`.
///
/// Terms are listed by increasing λ-degree of the coefficient, then by
/// decreasing key, which puts λ-free terms first.
impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&K, &LambdaPoly)> = self.terms.iter().collect();
        terms.sort_by(|(k1, c1), (k2, c2)| c1.degree().cmp(&c2.degree()).then_with(|| k2.cmp(k1)));
        for (idx, (k, c)) in terms.into_iter().enumerate() {
            let negate = c.is_single_term() && c.is_negative_leading();
            let shown = if negate { -c } else { c.clone() };
            match (idx == 0, negate) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if shown.is_one() {
                write!(f, "{k}")?;
            } else if shown.is_single_term() {
                write!(f, "{shown}*{k}")?;
            } else {
                write!(f, "({shown})*{k}")?;
            }
        }
        Ok(())
    }
}

/// Splits `s` at top-level `+`/`-` signs (outside parentheses), returning
/// signed chunks.
fn split_signed(s: &str) -> Vec<(bool, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                if s[start..i].trim().is_empty() && out.is_empty() && start == 0 {
                    negative = ch == '-';
                } else {
                    out.push((negative, &s[start..i]));
                    negative = ch == '-';
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((negative, &s[start..]));
    out
}

impl<K: Ord + Clone + FromStr<Err = ParseError>> FromStr for LinComb<K> {
    type Err = ParseError;

    /// Inverse of `Display`. Keys may not contain `*`, `+` or `-`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s.trim() == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for (negative, chunk) in split_signed(s) {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                return Err(ParseError::new("linear combination", s, "empty term"));
            }
            let (coeff, key) = match chunk.rfind('*') {
                Some(pos) => {
                    let c = chunk[..pos].trim();
                    let c = c.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(c);
                    (c.parse::<LambdaPoly>()?, chunk[pos + 1..].trim())
                }
                None => (LambdaPoly::one(), chunk),
            };
            let coeff = if negative { -coeff } else { coeff };
            out.add_term(key.parse::<K>()?, coeff);
        }
        Ok(out)
    }
}
