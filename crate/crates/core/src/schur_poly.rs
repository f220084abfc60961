//! The Schur polynomials `D_m` and `E_m`.
//!
//! Both satisfy `X_m = X_{m-1} + q^m X_{m-2}`; they differ in their initial
//! values (`D_0 = 1, D_1 = 1 + q` and `E_0 = E_1 = 1`). Running the
//! recursion backwards fixes `D_{-1} = 1, D_{-2} = 0, E_{-1} = 0,
//! E_{-2} = 1`, so every index `m >= -2` is defined.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Lowest supported index.
pub const MIN_INDEX: i64 = -2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchurKind {
    D,
    E,
}

impl SchurKind {
    /// `(X_{-2}, X_{-1})`.
    fn seeds(self) -> (LaurentPoly, LaurentPoly) {
        match self {
            SchurKind::D => (LaurentPoly::zero(), LaurentPoly::one()),
            SchurKind::E => (LaurentPoly::one(), LaurentPoly::zero()),
        }
    }
}

/// `X_{-2}, X_{-1}, ..., X_max_index` for one kind.
#[derive(Clone, Debug)]
pub struct SchurTable {
    kind: SchurKind,
    entries: Vec<LaurentPoly>,
}

impl SchurTable {
    pub fn new(kind: SchurKind, max_index: i64) -> Self {
        let (a, b) = kind.seeds();
        let mut table = SchurTable {
            kind,
            entries: vec![a, b],
        };
        table.extend_to(max_index);
        table
    }

    pub fn kind(&self) -> SchurKind {
        self.kind
    }

    pub fn max_index(&self) -> i64 {
        self.entries.len() as i64 + MIN_INDEX - 1
    }

    pub fn extend_to(&mut self, max_index: i64) {
        while self.max_index() < max_index {
            let m = self.max_index() + 1;
            let n = self.entries.len();
            let next = &self.entries[n - 1] + &self.entries[n - 2].shift(m);
            self.entries.push(next);
        }
    }

    pub fn get(&self, m: i64) -> Option<&LaurentPoly> {
        if m < MIN_INDEX {
            return None;
        }
        self.entries.get((m - MIN_INDEX) as usize)
    }

    /// Entries with their indices, starting at `-2`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, p)| (i as i64 + MIN_INDEX, p))
    }
}

// Grown on demand, shared by all callers.
fn cache(kind: SchurKind) -> &'static RwLock<SchurTable> {
    static D: OnceLock<RwLock<SchurTable>> = OnceLock::new();
    static E: OnceLock<RwLock<SchurTable>> = OnceLock::new();
    let cell = match kind {
        SchurKind::D => &D,
        SchurKind::E => &E,
    };
    cell.get_or_init(|| RwLock::new(SchurTable::new(kind, 1)))
}

/// `X_m` for the given kind, `m >= -2`.
pub fn schur(kind: SchurKind, m: i64) -> Result<LaurentPoly> {
    if m < MIN_INDEX {
        return Err(Error::IndexOutOfRange {
            index: m,
            min: MIN_INDEX,
        });
    }
    let lock = cache(kind);
    if let Some(p) = lock.read().unwrap().get(m) {
        return Ok(p.clone());
    }
    let mut table = lock.write().unwrap();
    table.extend_to(m);
    Ok(table.get(m).unwrap().clone())
}

pub fn schur_d(m: i64) -> Result<LaurentPoly> {
    schur(SchurKind::D, m)
}

pub fn schur_e(m: i64) -> Result<LaurentPoly> {
    schur(SchurKind::E, m)
}

fn require_nonnegative(m: i64) -> Result<()> {
    if m < 0 {
        Err(Error::IndexOutOfRange { index: m, min: 0 })
    } else {
        Ok(())
    }
}

/// `D_{m-1} E_m - D_m E_{m-1}`, evaluated from the polynomials themselves.
pub fn wronskian(m: i64) -> Result<LaurentPoly> {
    require_nonnegative(m)?;
    let lhs = &schur_d(m - 1)? * &schur_e(m)?;
    let rhs = &schur_d(m)? * &schur_e(m - 1)?;
    Ok(&lhs - &rhs)
}

/// `(-1)^m q^(-C(m,2))`.
pub fn sign_shift(m: i64) -> LaurentPoly {
    let sign = if m % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, -binom2(m))
}

/// `C(m, 2)`.
pub fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// `lambda = (-1)^m q^(-C(m,2)) E_{m-2}`.
pub fn lambda_coeff(m: i64) -> Result<LaurentPoly> {
    require_nonnegative(m)?;
    Ok(&sign_shift(m) * &schur_e(m - 2)?)
}

/// `mu = (-1)^(m+1) q^(-C(m,2)) D_{m-2}`.
pub fn mu_coeff(m: i64) -> Result<LaurentPoly> {
    require_nonnegative(m)?;
    Ok(-(&sign_shift(m) * &schur_d(m - 2)?))
}

/// `q^m E_{m-2} / (D_{m-1} E_m - D_m E_{m-1})` by exact monomial division.
pub fn lambda_by_quotient(m: i64) -> Result<LaurentPoly> {
    let numer = schur_e(m - 2)?.shift(m);
    numer.div_exact_monomial(&wronskian(m)?)
}

/// `q^m D_{m-2} / (D_m E_{m-1} - D_{m-1} E_m)` by exact monomial division.
pub fn mu_by_quotient(m: i64) -> Result<LaurentPoly> {
    let numer = schur_d(m - 2)?.shift(m);
    numer.div_exact_monomial(&-wronskian(m)?)
}

/// `(-1)^m q^C(m+1,2)`, the value the Wronskian is expected to take.
pub fn wronskian_closed_form(m: i64) -> LaurentPoly {
    let sign = if m % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(BigInt::from(sign), binom2(m + 1))
}
