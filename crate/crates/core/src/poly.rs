//! Finite Laurent polynomials in `q` with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel;
use crate::series::QSeries;

/// Exact signed integer coefficient of unbounded magnitude.
pub type Coefficient = BigInt;

/// `sum coeffs[i] * q^(min_exp + i)`, stored densely.
///
/// Always normalized: a nonempty coefficient vector starts and ends with a
/// nonzero entry, and the zero polynomial is the empty vector with
/// `min_exp == 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<Coefficient>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<Coefficient>, k: i64) -> Self {
        Self::from_coeffs(k, vec![c.into()])
    }

    /// Builds `sum coeffs[i] * q^(min_exp + i)` and normalizes it.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<Coefficient>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        let trailing = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.truncate(self.coeffs.len() - trailing);
        let leading = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if leading > 0 {
            self.coeffs.drain(..leading);
            self.min_exp += leading as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    /// Highest exponent carrying a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// Raw storage: `(min_exp, coeffs)` with the normalization described above.
    pub fn as_parts(&self) -> (i64, &[Coefficient]) {
        (self.min_exp, &self.coeffs)
    }

    pub fn coeff(&self, e: i64) -> &Coefficient {
        let idx = e - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            &BigInt::ZERO
        } else {
            &self.coeffs[idx as usize]
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coefficient)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplies by `c * q^k`.
    pub fn mul_monomial(&self, c: &Coefficient, k: i64) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `Some((c, k))` when `self == c * q^k` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(&Coefficient, i64)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.min_exp))
    }

    /// Exact quotient by a monomial divisor.
    pub fn div_exact_monomial(&self, divisor: &LaurentPoly) -> Result<Self> {
        let (c, k) = divisor.as_monomial().ok_or(Error::InexactDivision)?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            if !(x % c).is_zero() {
                return Err(Error::InexactDivision);
            }
            coeffs.push(x / c);
        }
        Ok(Self::from_coeffs(self.min_exp - k, coeffs))
    }

    /// Smallest exponent at which `self` and `other` differ, with both values.
    pub fn first_difference(&self, other: &LaurentPoly) -> Option<(i64, Coefficient, Coefficient)> {
        let lo = match (self.min_exp(), other.min_exp()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return None,
        };
        let hi = self.max_exp().into_iter().chain(other.max_exp()).max()?;
        (lo..=hi).find_map(|e| {
            let (a, b) = (self.coeff(e), other.coeff(e));
            (a != b).then(|| (e, a.clone(), b.clone()))
        })
    }

    /// Truncation at the inclusive `order`.
    pub fn to_series(&self, order: i64) -> QSeries {
        QSeries::new(self.min_exp, self.coeffs.clone(), order)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

fn add_scaled(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.min_exp.min(b.min_exp);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.min_exp - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.min_exp - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_coeffs(lo, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_scaled(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_scaled(self, rhs, true)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        let coeffs = kernel::convolve(&self.coeffs, &rhs.coeffs, len);
        LaurentPoly::from_coeffs(self.min_exp + rhs.min_exp, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Writes terms in ascending exponent order, e.g. `1 - q^2 + 3*q^-1`.
pub(crate) fn write_terms<'a>(
    f: &mut impl fmt::Write,
    terms: impl Iterator<Item = (i64, &'a Coefficient)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        match (e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (_, true) => write_power(f, e)?,
            (_, false) => {
                write!(f, "{mag}*")?;
                write_power(f, e)?;
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn write_power(f: &mut impl fmt::Write, e: i64) -> fmt::Result {
    if e == 1 {
        f.write_str("q")
    } else {
        write!(f, "q^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_terms(&mut s, self.terms())?;
        f.write_str(&s)
    }
}
