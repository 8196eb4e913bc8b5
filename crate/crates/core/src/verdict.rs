//! Structured verdicts shared by the identity suite, the inequality checks and
//! the CLI reports. Rationals serialize as `"p/q"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exact::rational::{self, Rational};

/// Named parameters of a single check, in a stable (sorted) order.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, Value>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(mut self, key: &str, v: impl Into<i64>) -> Self {
        self.0.insert(key.to_string(), Value::from(v.into()));
        self
    }

    pub fn rat(mut self, key: &str, v: &Rational) -> Self {
        self.0.insert(key.to_string(), Value::from(rational::render(v)));
        self
    }

    pub fn text(mut self, key: &str, v: impl Into<String>) -> Self {
        self.0.insert(key.to_string(), Value::from(v.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.get(key)
    }
}

/// Outcome of an exact identity check; `holds` iff `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub identity: String,
    pub params: Params,
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
    pub holds: bool,
}

impl IdentityVerdict {
    pub fn new(identity: &str, params: Params, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs == rhs;
        IdentityVerdict { identity: identity.to_string(), params, lhs, rhs, holds }
    }
}

/// Outcome of an exact inequality check `lhs >= rhs`.
///
/// `equality_condition_met` records whether the claimed equality case applies
/// to these parameters. A claim is confirmed when the inequality holds and
/// equality occurs exactly when the condition says it should.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityVerdict {
    pub claim: String,
    pub params: Params,
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
    pub holds: bool,
    pub equality: bool,
    pub equality_condition_met: bool,
}

impl InequalityVerdict {
    pub fn new(claim: &str, params: Params, lhs: Rational, rhs: Rational, equality_condition_met: bool) -> Self {
        let holds = lhs >= rhs;
        let equality = lhs == rhs;
        InequalityVerdict {
            claim: claim.to_string(),
            params,
            lhs,
            rhs,
            holds,
            equality,
            equality_condition_met,
        }
    }

    pub fn confirms(&self) -> bool {
        self.holds && self.equality == self.equality_condition_met
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    #[test]
    fn inequality_json_shape() {
        let v = InequalityVerdict::new("thm22", Params::new().int("m", 1).rat("a2", &frac(1, 2)), int(4), int(4), true);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"claim":"thm22","params":{"a2":"1/2","m":1},"lhs":"4","rhs":"4","holds":true,"equality":true,"equality_condition_met":true}"#
        );
        let back: InequalityVerdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert!(v.confirms());
    }

    #[test]
    fn confirmation_logic() {
        assert!(!InequalityVerdict::new("x", Params::new(), int(3), int(4), false).confirms());
        assert!(!InequalityVerdict::new("x", Params::new(), int(4), int(4), false).confirms());
        assert!(!InequalityVerdict::new("x", Params::new(), int(5), int(4), true).confirms());
        assert!(InequalityVerdict::new("x", Params::new(), int(5), int(4), false).confirms());
    }

    #[test]
    fn identity_json_shape() {
        let v = IdentityVerdict::new("finite_kummer", Params::new().int("l", 2).int("r", 2), int(3), int(3));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"identity":"finite_kummer","params":{"l":2,"r":2},"lhs":"3","rhs":"3","holds":true}"#
        );
    }
}
