use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Which homology theory a report describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theory {
    #[serde(rename = "HH")]
    Hochschild,
    #[serde(rename = "HC-quotient")]
    CyclicQuotient,
    #[serde(rename = "HC-cyclic")]
    CyclicBicomplex,
    #[serde(rename = "HC-bB")]
    CyclicBB,
    #[serde(rename = "HP-even")]
    PeriodicEven,
    #[serde(rename = "HP-odd")]
    PeriodicOdd,
    #[serde(rename = "Hcohomology-A")]
    CohomologyA,
    #[serde(rename = "Hcohomology-Adual")]
    CohomologyADual,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("theory tag");
        write!(f, "{}", s.as_str().expect("string tag"))
    }
}

/// Dimensions by degree with the raw ranks that produced them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub algebra: String,
    pub theory: Theory,
    pub dims: BTreeMap<usize, usize>,
    pub ranks: BTreeMap<String, usize>,
    pub index_scheme: String,
    pub max_degree: usize,
    pub elapsed_ms: u64,
    /// Other routes that computed the same dimensions.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cross_checked: Vec<Theory>,
    /// Stabilized value for periodic theories.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

impl HomologyReport {
    pub fn new(algebra: &str, theory: Theory, max_degree: usize) -> Self {
        HomologyReport {
            algebra: algebra.to_string(),
            theory,
            dims: BTreeMap::new(),
            ranks: BTreeMap::new(),
            index_scheme: "lex".into(),
            max_degree,
            elapsed_ms: 0,
            cross_checked: Vec::new(),
            stable: None,
            status: None,
        }
    }

    /// Dimensions as a vector from degree 0.
    pub fn dims_vec(&self) -> Vec<usize> {
        self.dims.values().copied().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(|(n, d)| format!("{n}:{d}")).collect();
        let mut out = format!("{} {} dims [{}]", self.algebra, self.theory, dims.join(" "));
        if let Some(s) = self.stable {
            out.push_str(&format!(" stable {s}"));
        }
        if let Some(s) = &self.status {
            out.push_str(&format!(" ({s})"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = HomologyReport::new("Q", Theory::Hochschild, 1);
        r.dims.insert(0, 1);
        r.dims.insert(1, 0);
        let v = r.to_json();
        assert_eq!(v["theory"], "HH");
        assert_eq!(v["dims"]["0"], 1);
        assert_eq!(v["index_scheme"], "lex");
        assert!(v.get("stable").is_none());
        let back: HomologyReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
