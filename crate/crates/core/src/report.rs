//! Verification reports with content hashes of both sides.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::charalg::{bigint_json, sha256_hex, FormalCharacter};

/// One factor of a product identity together with its shape verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub poly: String,
    pub symmetric_unimodal: bool,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub identity: String,
    pub lhs_hash: String,
    pub rhs_hash: String,
    pub pass: bool,
    pub first_diff: Option<Value>,
    pub factors: Vec<Factor>,
    /// Extra case data, keys sorted on output.
    pub details: Map<String, Value>,
}

impl Report {
    /// A report over two canonical JSON forms.
    pub fn new(identity: impl Into<String>, lhs: &Value, rhs: &Value, pass: bool) -> Self {
        Self {
            identity: identity.into(),
            lhs_hash: sha256_hex(lhs.to_string().as_bytes()),
            rhs_hash: sha256_hex(rhs.to_string().as_bytes()),
            pass,
            first_diff: None,
            factors: Vec::new(),
            details: Map::new(),
        }
    }

    /// Term-by-term comparison of two characters.
    pub fn compare(identity: impl Into<String>, lhs: &FormalCharacter, rhs: &FormalCharacter) -> Self {
        let pass = lhs == rhs;
        let mut r = Self::new(identity, &lhs.to_json(), &rhs.to_json(), pass);
        if !pass {
            r.first_diff = first_diff(lhs, rhs);
        }
        r
    }

    /// A report with no two-sided comparison, such as a structural check.
    pub fn verdict(identity: impl Into<String>, pass: bool) -> Self {
        Self::new(identity, &Value::Null, &Value::Null, pass)
    }

    pub fn with_detail(mut self, key: &str, value: Value) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }

    pub fn with_factors(mut self, factors: Vec<Factor>) -> Self {
        self.factors = factors;
        self
    }

    /// Folds `other` in: passes only if both pass.
    pub fn and(mut self, key: &str, other: Report) -> Self {
        self.pass &= other.pass;
        self.details.insert(key.to_string(), other.to_json());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("identity".into(), json!(self.identity));
        m.insert("lhs_hash".into(), json!(self.lhs_hash));
        m.insert("rhs_hash".into(), json!(self.rhs_hash));
        m.insert("pass".into(), json!(self.pass));
        if let Some(d) = &self.first_diff {
            m.insert("first_diff".into(), d.clone());
        }
        m.insert("factors".into(), serde_json::to_value(&self.factors).unwrap());
        if !self.details.is_empty() {
            m.insert("details".into(), Value::Object(self.details.clone()));
        }
        Value::Object(m)
    }
}

/// The first weight, in serialization order, where the coefficients differ.
pub fn first_diff(lhs: &FormalCharacter, rhs: &FormalCharacter) -> Option<Value> {
    let mut union = lhs.clone();
    for w in rhs.terms().keys() {
        if !union.terms().contains_key(w) {
            union.add_term(w.clone(), 1.into());
        }
    }
    for (w, _) in union.sorted_terms() {
        let (a, b) = (lhs.coeff(w), rhs.coeff(w));
        if a != b {
            return Some(json!({ "weight": w, "lhs": bigint_json(&a), "rhs": bigint_json(&b) }));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::irreducible_character;
    use crate::{RootSystem, Weight};
    use std::sync::Arc;

    #[test]
    fn reports_first_difference() {
        let a1 = Arc::new(RootSystem::builtin("A1").unwrap());
        let a = irreducible_character(&a1, &Weight::new([2])).unwrap();
        let mut b = a.clone();
        b.add_term(Weight::new([0]), 1.into());
        let r = Report::compare("x", &a, &b);
        assert!(!r.pass);
        assert_eq!(r.first_diff, Some(json!({"weight": [0], "lhs": 1, "rhs": 2})));
        let ok = Report::compare("x", &a, &a);
        assert!(ok.pass && ok.lhs_hash == ok.rhs_hash);
        assert!(ok.to_json().get("first_diff").is_none());
    }
}
