//! Structured verification reports.
//!
//! Every check the workbench performs emits a `Certificate`: property name,
//! instance expression, budget, verdict, witnesses and counterexamples. For a
//! fixed input and budget the certificate is byte-identical across runs
//! (timing is excluded from that guarantee and from serialization when unset).

use crate::budget::Budget;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    AbsentAtBudget,
    BudgetExhausted,
}

impl Verdict {
    /// Severity for combining sub-certificates: a failure anywhere fails the
    /// whole report, exhaustion dominates absence dominates a pass.
    fn rank(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::AbsentAtBudget => 1,
            Verdict::BudgetExhausted => 2,
            Verdict::Fail => 3,
        }
    }

    pub fn worst(a: Verdict, b: Verdict) -> Verdict {
        if a.rank() >= b.rank() {
            a
        } else {
            b
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: String,
    pub instance: String,
    pub budget: Budget,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub witnesses: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    /// Number of elementary checks performed (law instances tested).
    pub checks: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Certificate {
    pub fn new(property: &str, instance: &str, budget: &Budget, verdict: Verdict) -> Certificate {
        Certificate {
            property: property.to_string(),
            instance: instance.to_string(),
            budget: budget.clone(),
            verdict,
            witnesses: Value::Null,
            counterexample: None,
            checks: 0,
            seed: None,
            parts: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn pass(property: &str, instance: &str, budget: &Budget) -> Certificate {
        Certificate::new(property, instance, budget, Verdict::Pass)
    }

    pub fn fail(property: &str, instance: &str, budget: &Budget, counterexample: Value) -> Certificate {
        let mut c = Certificate::new(property, instance, budget, Verdict::Fail);
        c.counterexample = Some(counterexample);
        c
    }

    pub fn absent(property: &str, instance: &str, budget: &Budget, note: &str) -> Certificate {
        let mut c = Certificate::new(property, instance, budget, Verdict::AbsentAtBudget);
        c.witnesses = json!({ "note": note });
        c
    }

    pub fn exhausted(property: &str, instance: &str, budget: &Budget, note: &str) -> Certificate {
        let mut c = Certificate::new(property, instance, budget, Verdict::BudgetExhausted);
        c.witnesses = json!({ "note": note });
        c
    }

    pub fn with_witness(mut self, w: Value) -> Certificate {
        self.witnesses = w;
        self
    }

    pub fn with_checks(mut self, n: u64) -> Certificate {
        self.checks = n;
        self
    }

    pub fn with_seed(mut self, s: u64) -> Certificate {
        self.seed = Some(s);
        self
    }

    /// Combine sub-certificates; the verdict is the worst of the parts.
    pub fn combine(property: &str, instance: &str, budget: &Budget, parts: Vec<Certificate>) -> Certificate {
        let verdict = parts.iter().fold(Verdict::Pass, |v, p| Verdict::worst(v, p.verdict));
        let checks = parts.iter().map(|p| p.checks).sum();
        let mut c = Certificate::new(property, instance, budget, verdict);
        c.checks = checks;
        c.parts = parts;
        c
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One pass/fail line, as printed by the acceptance suite and `report`.
    pub fn summary_line(&self) -> String {
        let v = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::AbsentAtBudget => "ABSENT-AT-BUDGET",
            Verdict::BudgetExhausted => "BUDGET-EXHAUSTED",
        };
        format!("[{v}] {} :: {} ({} checks)", self.property, self.instance, self.checks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_verdict_combines() {
        let b = Budget::default();
        let parts = vec![
            Certificate::pass("a", "i", &b),
            Certificate::absent("b", "i", &b, "none found"),
        ];
        let c = Certificate::combine("all", "i", &b, parts);
        assert_eq!(c.verdict, Verdict::AbsentAtBudget);
        let parts = vec![
            Certificate::pass("a", "i", &b),
            Certificate::fail("b", "i", &b, json!({"pair": [0, 1]})),
        ];
        let c = Certificate::combine("all", "i", &b, parts);
        assert_eq!(c.verdict, Verdict::Fail);
    }

    #[test]
    fn serialization_skips_unset_timing() {
        let b = Budget::default();
        let c = Certificate::pass("p", "i", &b);
        let s = serde_json::to_string(&c).unwrap();
        assert!(!s.contains("timing_ms"));
        let back: Certificate = serde_json::from_str(&s).unwrap();
        assert_eq!(c, back);
    }
}
