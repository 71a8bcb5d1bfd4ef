//! Machine-checkable certificates.
//!
//! A [`Certificate`] is a list of named checks. Each name encodes the kind of
//! check and every input needed to run it again, so a serialized certificate
//! can be reloaded and re-derived with [`recheck`]; any difference in status,
//! claim or witness text is reported as drift.

mod corrigendum;
mod lemma1;
mod lemma2;

pub use corrigendum::{verify_corrigendum, verify_corrigendum_with_family};
pub use lemma1::check_lemma1;
pub use lemma2::{lemma2_scan, scan_hypothesis};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::RingDesc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// `kind[key=value;...]`, enough to regenerate the check.
    pub name: String,
    pub claim: String,
    pub status: Status,
    /// Exact values the claim was decided on, as `key=value | key=value`.
    pub witness: Option<String>,
}

impl Check {
    pub(crate) fn new(name: String, claim: impl Into<String>, ok: bool, witness: Vec<(&str, String)>) -> Check {
        let witness = (!witness.is_empty())
            .then(|| witness.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" | "));
        Check { name, claim: claim.into(), status: Status::from_bool(ok), witness }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The value recorded under `key` in the witness.
    pub fn witness_field(&self, key: &str) -> Option<&str> {
        self.witness.as_deref()?.split(" | ").find_map(|f| {
            let (k, v) = f.split_once('=')?;
            (k == key).then_some(v)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub ring: RingDesc,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl Certificate {
    pub fn new(ring: RingDesc, checks: Vec<Check>) -> Certificate {
        let overall = Status::from_bool(checks.iter().all(Check::passed));
        Certificate { ring, checks, overall }
    }

    /// Concatenates certificates over the same ring.
    pub fn merge(ring: RingDesc, parts: impl IntoIterator<Item = Certificate>) -> Result<Certificate> {
        let mut checks = Vec::new();
        for part in parts {
            if part.ring != ring {
                return Err(Error::RingMismatch { left: ring, right: part.ring });
            }
            checks.extend(part.checks);
        }
        Ok(Certificate::new(ring, checks))
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }
}

pub(crate) fn check_name(kind: &str, params: &[(&str, String)]) -> String {
    let inner = params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";");
    format!("{kind}[{inner}]")
}

pub(crate) fn parse_check_name(name: &str) -> Result<(&str, BTreeMap<&str, &str>)> {
    let bad = || Error::Parse(format!("malformed check name `{name}`"));
    let (kind, rest) = name.split_once('[').ok_or_else(bad)?;
    let inner = rest.strip_suffix(']').ok_or_else(bad)?;
    let mut params = BTreeMap::new();
    if !inner.is_empty() {
        for kv in inner.split(';') {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            params.insert(k, v);
        }
    }
    Ok((kind, params))
}

pub(crate) fn param<T: std::str::FromStr>(params: &BTreeMap<&str, &str>, key: &str) -> Result<T> {
    params
        .get(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse(format!("missing or bad parameter `{key}`")))
}

/// Regenerates every check of `cert` from its recorded inputs and reports
/// each one whose status, claim or witness differs. An empty result means
/// the certificate re-verifies exactly.
pub fn recheck(cert: &Certificate) -> Result<Vec<String>> {
    let mut drift = Vec::new();
    let expected_overall = Status::from_bool(cert.checks.iter().all(Check::passed));
    if cert.overall != expected_overall {
        drift.push(format!("overall is {} but checks give {}", cert.overall, expected_overall));
    }
    for check in &cert.checks {
        let (kind, params) = parse_check_name(&check.name)?;
        let fresh = match kind.split_once('.').map(|(family, _)| family) {
            Some("corrigendum") => corrigendum::regenerate(cert.ring, kind, &params)?,
            Some("lemma1") => lemma1::regenerate(cert.ring, kind, &params)?,
            Some("lemma2") => lemma2::regenerate(cert.ring, kind, &params)?,
            _ => return Err(Error::Parse(format!("unknown check kind `{kind}`"))),
        };
        if &fresh != check {
            drift.push(format!(
                "{}: recorded {} / {:?}, recomputed {} / {:?}",
                check.name, check.status, check.witness, fresh.status, fresh.witness
            ));
        }
    }
    Ok(drift)
}
