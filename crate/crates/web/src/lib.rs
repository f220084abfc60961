//! wasm-bindgen entry points for the static demo page in `www/`.
//!
//! Every export returns a JSON string; coefficients are decimal strings so
//! the page never loses precision. Inputs beyond the demo limits come back
//! as `{"error": "..."}`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use schur_qseries::determinant::{schur_finite, schur_x1_series};
use schur_qseries::identities::{gis_lhs, gis_rhs, rr_product_first, rr_product_second};
use schur_qseries::report::MismatchDetail;
use schur_qseries::schur_poly::{schur_d, schur_e};
use schur_qseries::{LaurentPoly, QSeries};

pub const MAX_ORDER: u32 = 1000;
pub const MAX_M: u32 = 40;
pub const MAX_INDEX: i32 = 120;
pub const MAX_N: u32 = 200;

#[derive(Serialize)]
struct IdentityView {
    m: u32,
    order: u32,
    lhs: Vec<String>,
    rhs: Vec<String>,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch: Option<MismatchDetail>,
}

#[derive(Serialize)]
struct SchurView {
    index: i32,
    d: Vec<String>,
    e: Vec<String>,
    rr1: Vec<String>,
    rr2: Vec<String>,
    /// Exponents up to this bound already match the products.
    stable_through: i64,
}

#[derive(Serialize)]
struct DeterminantView {
    n: u32,
    m: u32,
    finite: Vec<String>,
    limit: Vec<String>,
    stable_through: i64,
}

fn error(msg: String) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

fn series_digits(s: &QSeries) -> Vec<String> {
    s.coeffs_from(0).iter().map(ToString::to_string).collect()
}

fn poly_digits(p: &LaurentPoly) -> Vec<String> {
    let top = p.max_exp().unwrap_or(-1);
    (0..=top).map(|e| p.coeff(e).to_string()).collect()
}

/// Both sides of the m-parametrized identity, coefficient by coefficient.
#[wasm_bindgen]
pub fn identity_sides(m: u32, order: u32) -> String {
    if m > MAX_M || order > MAX_ORDER {
        return error(format!("need m <= {MAX_M} and order <= {MAX_ORDER}"));
    }
    let lhs = gis_lhs(m, order);
    let rhs = gis_rhs(m, order);
    let mismatch = lhs
        .first_mismatch(&rhs, i64::from(order))
        .ok()
        .flatten()
        .map(MismatchDetail::from);
    let view = IdentityView {
        m,
        order,
        lhs: series_digits(&lhs),
        rhs: series_digits(&rhs),
        status: if mismatch.is_none() { "pass" } else { "fail" },
        mismatch,
    };
    serde_json::to_string(&view).unwrap()
}

/// `D_index`, `E_index` and the two products they converge to.
#[wasm_bindgen]
pub fn schur_polynomials(index: i32) -> String {
    if !(-2..=MAX_INDEX).contains(&index) {
        return error(format!("need -2 <= index <= {MAX_INDEX}"));
    }
    let d = schur_d(i64::from(index)).unwrap();
    let e = schur_e(i64::from(index)).unwrap();
    let top = d
        .max_exp()
        .unwrap_or(0)
        .max(e.max_exp().unwrap_or(0))
        .max(0) as u32;
    let view = SchurView {
        index,
        d: poly_digits(&d),
        e: poly_digits(&e),
        rr1: series_digits(&rr_product_first(top)),
        rr2: series_digits(&rr_product_second(top)),
        stable_through: i64::from(index),
    };
    serde_json::to_string(&view).unwrap()
}

/// `Schur_n` next to the infinite determinant at `x = 1`.
#[wasm_bindgen]
pub fn determinant_vs_limit(n: u32, m: u32) -> String {
    if n > MAX_N || m > MAX_M {
        return error(format!("need n <= {MAX_N} and m <= {MAX_M}"));
    }
    let finite = schur_finite(n, m);
    let top = finite.max_exp().unwrap_or(0).clamp(0, i64::from(MAX_ORDER)) as u32;
    let view = DeterminantView {
        n,
        m,
        finite: poly_digits(&finite),
        limit: series_digits(&schur_x1_series(m, top)),
        stable_through: i64::from(n + m),
    };
    serde_json::to_string(&view).unwrap()
}
