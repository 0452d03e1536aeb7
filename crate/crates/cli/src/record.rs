//! Serializable results.

use mindeg_core::mu::{verify_representation, MuCertificate};
use mindeg_core::{GroupTable, Subgroup};
use serde::{Deserialize, Serialize};

pub const CERTIFICATE_FORMAT_VERSION: u32 = 1;
pub const OUTPUT_VERSION: u32 = 1;

/// A certificate as element-index lists against the group's table order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub format_version: u32,
    pub mu: usize,
    pub witness: Vec<Vec<usize>>,
    pub degree: usize,
    pub faithful: bool,
}

impl CertificateRecord {
    pub fn from_certificate(c: &MuCertificate) -> Self {
        CertificateRecord {
            format_version: CERTIFICATE_FORMAT_VERSION,
            mu: c.value,
            witness: c.witness.iter().map(|h| h.indices()).collect(),
            degree: c.induced_degree,
            faithful: c.faithful,
        }
    }

    /// Rebuilds the coset actions from scratch and checks they are faithful
    /// with the recorded total degree.
    pub fn verify(&self, t: &GroupTable) -> Result<(), String> {
        if self.format_version != CERTIFICATE_FORMAT_VERSION {
            return Err(format!("unsupported certificate format {}", self.format_version));
        }
        let subs = self
            .witness
            .iter()
            .map(|w| Subgroup::from_indices(t, w).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let (degree, faithful) = verify_representation(t, &subs).map_err(|e| e.to_string())?;
        if !faithful {
            return Err("witness action is not faithful".into());
        }
        if degree != self.degree || degree != self.mu {
            return Err(format!("witness action has degree {}, certificate claims {}", degree, self.mu));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Computed,
    Recorded { citation: String },
    Unavailable { reason: String },
}

/// One named verification attached to a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub expression: String,
    pub order: String,
    pub degree: usize,
    pub mu: Option<usize>,
    /// Closed-form or literature value the row is compared against.
    pub expected: Option<usize>,
    pub source: Source,
    pub certificate: Option<CertificateRecord>,
    /// Cache key of the lattice behind a computed value.
    pub cache_key: Option<String>,
    pub checks: Vec<Check>,
    pub wall_time_ms: u64,
}

impl ResultRecord {
    pub fn new(expression: impl Into<String>, order: impl ToString, degree: usize) -> Self {
        ResultRecord {
            expression: expression.into(),
            order: order.to_string(),
            degree,
            mu: None,
            expected: None,
            source: Source::Unavailable { reason: "not computed".into() },
            certificate: None,
            cache_key: None,
            checks: Vec::new(),
            wall_time_ms: 0,
        }
    }

    /// True when every check passed, the value matches any expectation, and
    /// the value is actually known.
    pub fn ok(&self) -> bool {
        self.mu.is_some()
            && self.checks.iter().all(|c| c.passed)
            && self.expected.is_none_or(|e| Some(e) == self.mu)
            && !matches!(self.source, Source::Unavailable { .. })
    }
}

/// Top-level JSON document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Output {
    pub command: String,
    pub input: Option<String>,
    pub records: Vec<serde_json::Value>,
    pub version: u32,
}
