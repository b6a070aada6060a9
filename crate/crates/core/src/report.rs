//! Verification reports shared by the determinant, identity and closed-form
//! checks. Integers are serialized as decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::partition::Partition;

pub(crate) fn decimal<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

/// One evaluated identity: named integer parameters and both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityInstance {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
    pub pass: bool,
}

impl IdentityInstance {
    pub fn new(name: &str, params: &[(&str, i64)], lhs: BigInt, rhs: BigInt) -> Self {
        let pass = lhs == rhs;
        IdentityInstance {
            name: name.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            lhs,
            rhs,
            pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Check {
    Determinant {
        rows: Vec<usize>,
        cols: Vec<usize>,
        #[serde(serialize_with = "decimal")]
        det: BigInt,
        pass: bool,
    },
    Identity(IdentityInstance),
}

impl Check {
    pub fn passed(&self) -> bool {
        match self {
            Check::Determinant { pass, .. } => *pass,
            Check::Identity(inst) => inst.pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    pub partition: Partition,
    pub checks: Vec<Check>,
    /// Checks that were not applicable, with the reason.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(identity: Option<&str>, partition: Partition) -> Self {
        VerificationReport {
            identity: identity.map(str::to_string),
            partition,
            checks: Vec::new(),
            skipped: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.passed();
        self.checks.push(check);
    }

    pub fn push_identity(&mut self, inst: IdentityInstance) {
        self.push(Check::Identity(inst));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Folds another report's checks into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.pass &= other.pass;
        self.checks.extend(other.checks);
        self.skipped.extend(other.skipped);
    }
}
