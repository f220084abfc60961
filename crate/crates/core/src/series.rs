//! Laurent series in `q` truncated at an inclusive order.
//!
//! A [`QSeries`] knows its coefficients exactly for every exponent up to and
//! including `order`; everything above is unknown. Coefficients below
//! `min_exp` are exactly zero. Storage is dense over `min_exp..=order` and
//! `min_exp` is kept at the lowest nonzero coefficient (or `order + 1` for a
//! series with no known nonzero terms), which keeps the multiplication order
//! rule as tight as possible.
//!
//! Multiplication follows
//! `order(a * b) = min(a.order + b.min_exp, b.order + a.min_exp)`:
//! the first unknown term of either factor meets the lowest term of the
//! other one step above that bound.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel;
use crate::poly::{write_terms, Coefficient, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    min_exp: i64,
    order: i64,
    coeffs: Vec<Coefficient>,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: Coefficient,
    pub rhs: Coefficient,
}

impl QSeries {
    /// Builds `sum coeffs[i] * q^(min_exp + i)` known up to `order`.
    /// Entries above `order` are discarded and missing ones are zero.
    pub fn new(min_exp: i64, mut coeffs: Vec<Coefficient>, order: i64) -> Self {
        let cap = (order - min_exp + 1).max(0) as usize;
        coeffs.truncate(cap);
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero(order);
        }
        coeffs.drain(..lead);
        let min_exp = min_exp + lead as i64;
        coeffs.resize((order - min_exp + 1) as usize, BigInt::zero());
        QSeries {
            min_exp,
            order,
            coeffs,
        }
    }

    /// The zero series, known up to `order`.
    pub fn zero(order: i64) -> Self {
        QSeries {
            min_exp: order + 1,
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(order: i64) -> Self {
        LaurentPoly::one().to_series(order)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest exponent that may be nonzero; `order + 1` for the zero series.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficients for exponents `min_exp..=order`.
    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Coefficient of `q^e`, or `None` when `e` is above the known order.
    pub fn coeff(&self, e: i64) -> Option<&Coefficient> {
        if e > self.order {
            None
        } else if e < self.min_exp {
            Some(&BigInt::ZERO)
        } else {
            Some(&self.coeffs[(e - self.min_exp) as usize])
        }
    }

    /// Coefficients for exponents `from..=order`, zero-padded below `min_exp`.
    pub fn coeffs_from(&self, from: i64) -> Vec<Coefficient> {
        (from..=self.order)
            .map(|e| self.coeff(e).cloned().unwrap_or_default())
            .collect()
    }

    /// Known part as an exact polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.min_exp, self.coeffs.clone())
    }

    /// Lowers the known order to `order` (no-op if already lower).
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        QSeries::new(self.min_exp, self.coeffs.clone(), order)
    }

    /// Multiplies by `q^k`; the known order moves with the exponents.
    pub fn shift(&self, k: i64) -> Self {
        QSeries {
            min_exp: self.min_exp + k,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplicative inverse. The lowest coefficient must be `+1` or `-1`.
    ///
    /// With `a = q^s * u` the result is `q^-s / u`, known up to
    /// `a.order - 2 s`.
    pub fn inverse(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c) if c.abs().is_one() => {}
            _ => return Err(Error::NotInvertible),
        }
        let s = self.min_exp;
        let out = kernel::invert_unit(&self.coeffs);
        Ok(QSeries::new(-s, out, self.order - 2 * s))
    }

    /// Smallest `e <= up_to` where the coefficients differ.
    pub fn first_mismatch(&self, other: &QSeries, up_to: i64) -> Result<Option<Mismatch>> {
        let known = self.order.min(other.order);
        if up_to > known {
            return Err(Error::OrderTooHigh {
                up_to,
                order: known,
            });
        }
        let lo = self.min_exp.min(other.min_exp);
        Ok((lo..=up_to).find_map(|e| {
            let (a, b) = (self.coeff(e).unwrap(), other.coeff(e).unwrap());
            (a != b).then(|| Mismatch {
                exponent: e,
                lhs: a.clone(),
                rhs: b.clone(),
            })
        }))
    }

    fn combine(&self, rhs: &QSeries, negate: bool) -> QSeries {
        let order = self.order.min(rhs.order);
        let lo = self.min_exp.min(rhs.min_exp).min(order + 1);
        let mut coeffs = vec![BigInt::zero(); (order - lo + 1) as usize];
        for (src, neg) in [(self, false), (rhs, negate)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                let e = src.min_exp + i as i64;
                if e > order {
                    break;
                }
                let slot = &mut coeffs[(e - lo) as usize];
                if neg {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
        QSeries::new(lo, coeffs, order)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.combine(rhs, false)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.combine(rhs, true)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            min_exp: self.min_exp,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = (self.order + rhs.min_exp).min(rhs.order + self.min_exp);
        let min_exp = self.min_exp + rhs.min_exp;
        if self.is_zero() || rhs.is_zero() || min_exp > order {
            return QSeries::zero(order);
        }
        let len = (order - min_exp + 1) as usize;
        let coeffs = kernel::convolve(&self.coeffs, &rhs.coeffs, len);
        QSeries::new(min_exp, coeffs, order)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_exp + i as i64, c));
        write_terms(&mut s, terms)?;
        write!(f, "{s} + O(q^{})", self.order + 1)
    }
}
