//! Envelope for machine-readable results.

use serde::{Deserialize, Serialize};

use crate::{MONOMIAL_ORDER, VERSION};

/// A result together with the settings needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report<T> {
    pub version: String,
    pub monomial_order: String,
    pub command: String,
    pub max_degree: Option<u32>,
    pub seed: Option<u64>,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, max_degree: Option<u32>, seed: Option<u64>, result: T) -> Self {
        Self {
            version: VERSION.to_string(),
            monomial_order: MONOMIAL_ORDER.to_string(),
            command: command.to_string(),
            max_degree,
            seed,
            result,
        }
    }

    /// Pretty JSON; field order is fixed, so equal reports give equal bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_fields() {
        let r = Report::new("betti", Some(8), None, vec![1, 0, 1]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["monomial_order"], "grlex-desc/v1");
        assert_eq!(v["max_degree"], 8);
        assert_eq!(v["result"][2], 1);
    }
}
