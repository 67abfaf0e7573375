//! Verification reports shared by every identity checker.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::series::{LaurentSeries, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Agreement below the truncation order.
    Verified,
    Failed,
    /// Agreement of two exact Laurent polynomials.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub monomial: String,
    pub exponents: Monomial,
    pub lhs: String,
    pub rhs: String,
    /// Whether recomputing both coefficients from scratch gave the same pair.
    pub reconfirmed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub params: Value,
    pub trunc: Option<i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall time in milliseconds.
    pub timing: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Failed
    }

    pub fn with_terms(mut self, n: usize) -> Self {
        self.terms = Some(n);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Same as [`to_json`](Self::to_json) with the timing field zeroed.
    pub fn to_json_untimed(&self) -> Value {
        let mut v = self.to_json();
        v["timing"] = Value::from(0.0);
        v
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Verified => "verified",
            Status::Failed => "FAILED",
            Status::Exact => "exact",
        };
        let trunc = self.trunc.map_or("exact".to_string(), |n| format!("N={n}"));
        let mut s = format!("{} {} [{}] {}", self.identity, self.params, trunc, status);
        if let Some(t) = self.terms {
            s += &format!(" terms={t}");
        }
        if let Some(d) = &self.first_discrepancy {
            s += &format!(" at {}: lhs={} rhs={}", d.monomial, d.lhs, d.rhs);
        }
        if let Some(n) = &self.note {
            s += &format!(" ({n})");
        }
        s
    }
}

/// Runs a two-sided comparison and records the outcome.
///
/// `sides` builds both series. On a mismatch it is called a second time and
/// the discrepant coefficient is read off the fresh copies.
pub fn compare(
    identity: &str,
    params: Value,
    sides: impl Fn() -> Result<(LaurentSeries, LaurentSeries)>,
) -> Result<VerifyReport> {
    let start = Instant::now();
    let (lhs, rhs) = sides()?;
    let mismatch = lhs.first_mismatch(&rhs)?;
    let trunc = match (lhs.trunc(), rhs.trunc()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let (status, first_discrepancy) = match mismatch {
        None if trunc.is_none() => (Status::Exact, None),
        None => (Status::Verified, None),
        Some(m) => {
            let (l2, r2) = sides()?;
            let (c1, c2): (BigInt, BigInt) = (l2.coeff(&m.monomial), r2.coeff(&m.monomial));
            let d = Discrepancy {
                monomial: lhs.universe().format_monomial(&m.monomial),
                exponents: m.monomial.clone(),
                lhs: m.lhs.to_string(),
                rhs: m.rhs.to_string(),
                reconfirmed: c1 == m.lhs && c2 == m.rhs,
            };
            (Status::Failed, Some(d))
        }
    };
    Ok(VerifyReport {
        identity: identity.to_string(),
        params,
        trunc,
        status,
        first_discrepancy,
        terms: None,
        note: None,
        timing: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// A report for a check that is not a series comparison.
pub fn boolean(identity: &str, params: Value, trunc: Option<i64>, ok: bool, start: Instant) -> VerifyReport {
    VerifyReport {
        identity: identity.to_string(),
        params,
        trunc,
        status: if !ok {
            Status::Failed
        } else if trunc.is_none() {
            Status::Exact
        } else {
            Status::Verified
        },
        first_discrepancy: None,
        terms: None,
        note: None,
        timing: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Folds several reports into one; fails if any part fails.
pub fn combine(identity: &str, params: Value, parts: &[VerifyReport]) -> VerifyReport {
    let failed = parts.iter().find(|r| !r.passed());
    let trunc = parts.iter().filter_map(|r| r.trunc).min();
    let all_exact = parts.iter().all(|r| r.status == Status::Exact);
    VerifyReport {
        identity: identity.to_string(),
        params,
        trunc: if all_exact { None } else { trunc },
        status: if failed.is_some() {
            Status::Failed
        } else if all_exact {
            Status::Exact
        } else {
            Status::Verified
        },
        first_discrepancy: failed.and_then(|r| r.first_discrepancy.clone()),
        terms: Some(parts.len()),
        note: failed.map(|r| format!("first failing case: {}", r.params)),
        timing: parts.iter().map(|r| r.timing).sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{Side, Universe};
    use serde_json::json;

    #[test]
    fn statuses() {
        let u = Universe::new([("x", Side::Direct), ("y", Side::Inverse)]).unwrap();
        let x = LaurentSeries::var(&u, "x", 1).unwrap();
        let one = LaurentSeries::one(&u);
        let r = compare("t", json!({}), || Ok((&x + &one, &one + &x))).unwrap();
        assert_eq!(r.status, Status::Exact);
        let r = compare("t", json!({}), || Ok(((&x + &one).truncate(2), &one + &x))).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.trunc, Some(2));
        let r = compare("t", json!({"k": 1}), || Ok((x.clone(), one.clone()))).unwrap();
        assert_eq!(r.status, Status::Failed);
        let d = r.first_discrepancy.as_ref().unwrap();
        assert!(d.reconfirmed);
        assert_eq!(d.monomial, "x");
        let j = r.to_json_untimed();
        assert_eq!(j["status"], "failed");
        assert_eq!(j["first_discrepancy"]["lhs"], "1");
        let c = combine("all", json!({}), std::slice::from_ref(&r));
        assert!(!c.passed());
    }
}
