//! Dimension formulas, classical sequences, binomial transforms and
//! truncated bivariate generating functions.
//!
//! All generating functions are built by exact series arithmetic from the
//! Catalan coefficients; nothing goes through square roots.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{DomainError, ParseError};
use crate::monomial::Variant;
use crate::trees::{Exponent, Family};

/// Largest truncation order accepted by [`series_coeffs`].
pub const DEFAULT_MAX_ORDER: usize = 12;

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    Catalan,
    Motzkin,
    SchroderLarge,
    SchroderSmall,
}

impl FromStr for Sequence {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "catalan" => Ok(Sequence::Catalan),
            "motzkin" => Ok(Sequence::Motzkin),
            "schroder_large" | "schroder-large" => Ok(Sequence::SchroderLarge),
            "schroder_small" | "schroder-small" => Ok(Sequence::SchroderSmall),
            _ => Err(ParseError::new(
                "sequence",
                s,
                "expected catalan, motzkin, schroder_large or schroder_small",
            )),
        }
    }
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

/// M(n) via (n+2) M(n) = (2n+1) M(n−1) + 3(n−1) M(n−2).
pub fn motzkin(n: usize) -> BigInt {
    let mut prev = BigInt::one();
    let mut cur = BigInt::one();
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        let next = (BigInt::from(2 * k + 1) * &cur + BigInt::from(3 * (k - 1)) * &prev) / BigInt::from(k + 2);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// r(n): 1, 2, 6, 22, 90, … via (n+1) r(n) = 3(2n−1) r(n−1) − (n−2) r(n−2).
pub fn schroder_large(n: usize) -> BigInt {
    let mut r = vec![BigInt::one(), BigInt::from(2)];
    for k in 2..=n {
        let next = (BigInt::from(3 * (2 * k as i64 - 1)) * &r[k - 1] - BigInt::from(k as i64 - 2) * &r[k - 2])
            / BigInt::from(k + 1);
        r.push(next);
    }
    r.swap_remove(n)
}

/// s(n): 1, 1, 3, 11, 45, …; s(n) = r(n)/2 for n ≥ 1.
pub fn schroder_small(n: usize) -> BigInt {
    if n == 0 {
        BigInt::one()
    } else {
        schroder_large(n) / 2
    }
}

pub fn sequence(kind: Sequence, n: usize) -> BigInt {
    match kind {
        Sequence::Catalan => catalan(n),
        Sequence::Motzkin => motzkin(n),
        Sequence::SchroderLarge => schroder_large(n),
        Sequence::SchroderSmall => schroder_small(n),
    }
}

fn b22(n: usize, m: usize) -> BigInt {
    if m == 0 {
        return BigInt::from(u8::from(n == 1));
    }
    catalan(m) * binomial(m as i64 + 1, n as i64 - m as i64)
}

/// Dimension of the homogeneous component of bidegree (n, m), n ≥ 1.
///
/// Closed forms for j = 2; the ∞ directions are binomial transforms of the
/// (2,2) table, with the m = 0 row adjoined separately.
pub fn dim_formula(f: Family, n: usize, m: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    if m == 0 {
        return match f.i {
            Exponent::Inf => BigInt::one(),
            Exponent::Two => BigInt::from(u8::from(n == 1)),
        };
    }
    let ns: Vec<(usize, BigInt)> = match f.i {
        Exponent::Two => vec![(n, BigInt::one())],
        Exponent::Inf => (1..=n).map(|k| (k, binomial(n as i64 - 1, k as i64 - 1))).collect(),
    };
    let ms: Vec<(usize, BigInt)> = match f.j {
        Exponent::Two => vec![(m, BigInt::one())],
        Exponent::Inf => (1..=m).map(|l| (l, binomial(m as i64 - 1, l as i64 - 1))).collect(),
    };
    let mut total = BigInt::zero();
    for (k, a) in &ns {
        for (l, b) in &ms {
            total += a * b * b22(*k, *l);
        }
    }
    total
}

/// BT(a)(n) = Σ_{k=1}^n binom(n−1, k−1) a(k); index 0 holds n = 1.
pub fn binomial_transform(seq: &[BigInt]) -> Vec<BigInt> {
    (0..seq.len())
        .map(|n| (0..=n).map(|k| binomial(n as i64, k as i64) * &seq[k]).sum())
        .collect()
}

/// Which index of a table a transform acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    N,
    M,
    Both,
}

/// Bivariate transform of `table[n−1][m−1]` (n, m ≥ 1).
pub fn binomial_transform_2d(table: &[Vec<BigInt>], axis: Axis) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = table.to_vec();
    if matches!(axis, Axis::M | Axis::Both) {
        out = out.iter().map(|row| binomial_transform(row)).collect();
    }
    if matches!(axis, Axis::N | Axis::Both) && !out.is_empty() {
        let cols = out[0].len();
        let mut t = vec![Vec::with_capacity(out.len()); cols];
        for row in &out {
            for (c, v) in row.iter().enumerate() {
                t[c].push(v.clone());
            }
        }
        let t: Vec<Vec<BigInt>> = t.iter().map(|col| binomial_transform(col)).collect();
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = t[c][r].clone();
            }
        }
    }
    out
}

/// A bivariate power series truncated at x^N, y^M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    n: usize,
    m: usize,
    c: Vec<Vec<BigInt>>,
}

impl BiSeries {
    pub fn zero(n: usize, m: usize) -> Self {
        BiSeries {
            n,
            m,
            c: vec![vec![BigInt::zero(); m + 1]; n + 1],
        }
    }

    pub fn one(n: usize, m: usize) -> Self {
        Self::monomial(n, m, 0, 0, BigInt::one())
    }

    /// `c·x^a y^b`, dropped if beyond the truncation.
    pub fn monomial(n: usize, m: usize, a: usize, b: usize, c: BigInt) -> Self {
        let mut s = Self::zero(n, m);
        if a <= n && b <= m {
            s.c[a][b] = c;
        }
        s
    }

    /// Builds from a function of (a, b).
    pub fn from_fn(n: usize, m: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        let mut s = Self::zero(n, m);
        for a in 0..=n {
            for b in 0..=m {
                s.c[a][b] = f(a, b);
            }
        }
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.c.get(a).and_then(|row| row.get(b)).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &BiSeries) -> BiSeries {
        BiSeries::from_fn(self.n, self.m, |a, b| &self.c[a][b] + o.coeff(a, b))
    }

    pub fn sub(&self, o: &BiSeries) -> BiSeries {
        BiSeries::from_fn(self.n, self.m, |a, b| &self.c[a][b] - o.coeff(a, b))
    }

    pub fn scale(&self, k: &BigInt) -> BiSeries {
        BiSeries::from_fn(self.n, self.m, |a, b| &self.c[a][b] * k)
    }

    pub fn mul(&self, o: &BiSeries) -> BiSeries {
        let mut out = BiSeries::zero(self.n, self.m);
        for a in 0..=self.n {
            for b in 0..=self.m {
                if self.c[a][b].is_zero() {
                    continue;
                }
                for c in 0..=self.n - a {
                    for d in 0..=self.m - b {
                        let v = o.coeff(c, d);
                        if !v.is_zero() {
                            out.c[a + c][b + d] += &self.c[a][b] * v;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn has_zero_constant(&self) -> bool {
        self.c[0][0].is_zero()
    }

    /// Σ_k coeffs[k]·self^k; needs a zero constant term.
    pub fn compose_into(&self, coeffs: &[BigInt]) -> Result<BiSeries, DomainError> {
        if !self.has_zero_constant() {
            return Err(DomainError::Other("composition needs a zero constant term".into()));
        }
        let mut out = BiSeries::zero(self.n, self.m);
        let mut power = BiSeries::one(self.n, self.m);
        for (k, a) in coeffs.iter().enumerate() {
            if k > 0 {
                power = power.mul(self);
            }
            if !a.is_zero() {
                out = out.add(&power.scale(a));
            }
            if k >= self.n + self.m {
                break;
            }
        }
        Ok(out)
    }

    /// 1/(1 − self); needs a zero constant term.
    pub fn geometric(&self) -> Result<BiSeries, DomainError> {
        self.compose_into(&vec![BigInt::one(); self.n + self.m + 1])
    }

    /// x ↦ x/(1−x): x^a becomes Σ_j binom(a+j−1, j) x^{a+j}.
    pub fn substitute_x(&self) -> BiSeries {
        let mut out = BiSeries::zero(self.n, self.m);
        for a in 0..=self.n {
            for b in 0..=self.m {
                if self.c[a][b].is_zero() {
                    continue;
                }
                if a == 0 {
                    out.c[0][b] += &self.c[0][b];
                    continue;
                }
                for j in 0..=self.n - a {
                    out.c[a + j][b] += &self.c[a][b] * binomial((a + j - 1) as i64, j as i64);
                }
            }
        }
        out
    }

    /// y ↦ y/(1−y).
    pub fn substitute_y(&self) -> BiSeries {
        self.transpose().substitute_x().transpose()
    }

    pub fn transpose(&self) -> BiSeries {
        BiSeries::from_fn(self.m, self.n, |a, b| self.c[b][a].clone())
    }

    /// Coefficients of the series at y = x, by total degree up to min(N, M).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let top = self.n.min(self.m);
        (0..=top).map(|k| (0..=k).map(|a| self.coeff(a, k - a)).sum()).collect()
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in 0..=self.n {
            for b in 0..=self.m {
                let c = &self.c[a][b];
                if c.is_zero() {
                    continue;
                }
                let sign = if c.is_negative() { "-" } else { "+" };
                match (first, c.is_negative()) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, _) => write!(f, " {sign} ")?,
                }
                first = false;
                let mag = c.magnitude();
                let mut factors = Vec::new();
                if !mag.is_one() || (a, b) == (0, 0) {
                    factors.push(mag.to_string());
                }
                for (var, k) in [("x", a), ("y", b)] {
                    match k {
                        0 => {}
                        1 => factors.push(var.to_string()),
                        _ => factors.push(format!("{var}^{k}")),
                    }
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// f(u) = Σ_{k≥1} C(k) u^k, as coefficients.
fn catalan_tail(order: usize) -> Vec<BigInt> {
    (0..=order)
        .map(|k| if k == 0 { BigInt::zero() } else { catalan(k) })
        .collect()
}

fn x_series(n: usize, m: usize) -> BiSeries {
    BiSeries::monomial(n, m, 1, 0, BigInt::one())
}

fn y_series(n: usize, m: usize) -> BiSeries {
    BiSeries::monomial(n, m, 0, 1, BigInt::one())
}

/// B_{i,j}(x, y) truncated at x^N, y^M, including the m = 0 row.
///
/// The m ≥ 1 part is P(x)·f(Q(x)·Y(y)) with P = 1+x, Q = x(1+x) when i = 2,
/// P = 1/(1−x), Q = x/(1−x)² when i = ∞, and Y = y or y/(1−y).
pub fn series_coeffs(f: Family, n: usize, m: usize) -> Result<BiSeries, DomainError> {
    series_coeffs_bounded(f, n, m, DEFAULT_MAX_ORDER)
}

pub fn series_coeffs_bounded(f: Family, n: usize, m: usize, max_order: usize) -> Result<BiSeries, DomainError> {
    if n > max_order || m > max_order {
        return Err(DomainError::Other(format!(
            "series order ({n}, {m}) exceeds the maximum {max_order}"
        )));
    }
    let one = BiSeries::one(n, m);
    let x = x_series(n, m);
    let y = y_series(n, m);
    let geo_x = x.geometric()?;
    let (p, q, row0) = match f.i {
        Exponent::Two => (one.add(&x), x.mul(&one.add(&x)), x.clone()),
        Exponent::Inf => (geo_x.clone(), x.mul(&geo_x).mul(&geo_x), x.mul(&geo_x)),
    };
    let yy = match f.j {
        Exponent::Two => y,
        Exponent::Inf => y.mul(&y.geometric()?),
    };
    let inner = q.mul(&yy);
    let body = p.mul(&inner.compose_into(&catalan_tail(n + m))?);
    Ok(body.add(&row0))
}

/// Number of words of bidegree (n, m) in M_∞ or M_2, the empty word
/// counting at (0, 0).
pub fn monomial_dims(variant: Variant, n: usize, m: usize) -> BigInt {
    match variant {
        Variant::Infinity => binomial(n as i64 + 1, 2 * m as i64),
        Variant::Two => {
            let v = if n == 0 && m == 0 {
                1
            } else if n == 2 * m {
                2
            } else if n + 1 == 2 * m || n == 2 * m + 1 {
                1
            } else {
                0
            };
            BigInt::from(v)
        }
    }
}

/// M_∞(x, y) = (1 − x + xy)·Σ_k (2x − x² + x²y)^k.
pub fn monomial_series_inf(n: usize, m: usize) -> Result<BiSeries, DomainError> {
    let one = BiSeries::one(n, m);
    let x = x_series(n, m);
    let y = y_series(n, m);
    let xx = x.mul(&x);
    let g = x.scale(&BigInt::from(2)).sub(&xx).add(&xx.mul(&y));
    Ok(one.sub(&x).add(&x.mul(&y)).mul(&g.geometric()?))
}

/// M_2(x, y) = (1 + x)(1 + xy)·Σ_k (x²y)^k.
pub fn monomial_series_two(n: usize, m: usize) -> Result<BiSeries, DomainError> {
    let one = BiSeries::one(n, m);
    let x = x_series(n, m);
    let y = y_series(n, m);
    let xy = x.mul(&y);
    Ok(one.add(&x).mul(&one.add(&xy)).mul(&x.mul(&xy).geometric()?))
}

/// |PT(n, m)| = binom(n+m, m)·binom(n−1, m−1)/(n+1).
pub fn dt(n: usize, m: usize) -> BigInt {
    if n == 0 {
        return BigInt::from(u8::from(m == 0));
    }
    let num = binomial((n + m) as i64, m as i64) * binomial(n as i64 - 1, m as i64 - 1);
    let (q, r) = num.div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}
