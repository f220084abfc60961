//! Outcomes of identity checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Coefficient;
use crate::series::Mismatch;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where a check first failed, with coefficients as decimal strings on the wire.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchDetail {
    pub exponent: i64,
    #[serde(with = "decimal")]
    pub lhs: Coefficient,
    #[serde(with = "decimal")]
    pub rhs: Coefficient,
}

impl From<Mismatch> for MismatchDetail {
    fn from(m: Mismatch) -> Self {
        MismatchDetail {
            exponent: m.exponent,
            lhs: m.lhs,
            rhs: m.rhs,
        }
    }
}

/// One identity check. `status` is `Fail` exactly when `mismatch` is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub label: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchDetail>,
}

impl VerificationReport {
    pub fn new(
        label: impl Into<String>,
        params: &[(&str, i64)],
        mismatch: Option<MismatchDetail>,
    ) -> Self {
        VerificationReport {
            label: label.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: if mismatch.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            mismatch,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        match &self.mismatch {
            None => f.write_str(": pass"),
            Some(m) => write!(f, ": FAIL at q^{}: lhs={} rhs={}", m.exponent, m.lhs, m.rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSuiteResult {
    pub reports: Vec<VerificationReport>,
    pub all_passed: bool,
}

impl CheckSuiteResult {
    pub fn from_reports(reports: Vec<VerificationReport>) -> Self {
        let all_passed = reports.iter().all(VerificationReport::passed);
        CheckSuiteResult {
            reports,
            all_passed,
        }
    }

    pub fn first_failure(&self) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| !r.passed())
    }
}

/// Serde adapter writing big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}
