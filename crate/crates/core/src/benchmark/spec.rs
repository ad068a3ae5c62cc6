use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Every generator parameter in one place.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BenchmarkSpec {
    pub n: usize,
    pub layers: usize,
    pub avg_degree: f64,
    pub max_degree: f64,
    /// Degree distribution exponent.
    pub tau1: f64,
    /// Community size distribution exponent.
    pub tau2: f64,
    /// Share of each node's links that leave its community.
    pub mu: f64,
    pub cmin: usize,
    pub cmax: usize,
    /// Exponent of the distribution of layer counts per linked pair.
    pub layer_exponent: f64,
    pub degree_swap_prob: f64,
    pub membership_swap_prob: f64,
    pub seed: u64,
}

impl Default for BenchmarkSpec {
    fn default() -> Self {
        Self {
            n: 1000,
            layers: 1,
            avg_degree: 20.0,
            max_degree: 50.0,
            tau1: 2.0,
            tau2: 1.0,
            mu: 0.1,
            cmin: 10,
            cmax: 50,
            layer_exponent: 2.0,
            degree_swap_prob: 0.1,
            membership_swap_prob: 0.1,
            seed: 0,
        }
    }
}

impl BenchmarkSpec {
    /// Parses flat `key = value` lines; unspecified keys keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let spec: BenchmarkSpec = toml::from_str(text).map_err(|e| Error::Parse {
            line: e.span().map(|s| text[..s.start].lines().count().max(1)).unwrap_or(0),
            message: e.message().to_string(),
        })?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_text(&self) -> String {
        toml::to_string(self).expect("flat spec serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InfeasibleSpec(m));
        if self.n == 0 {
            return bad("n must be positive".into());
        }
        if self.layers == 0 {
            return bad("layers must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.mu) {
            return bad(format!("mu {} outside [0,1]", self.mu));
        }
        if self.cmin == 0 || self.cmin > self.cmax || self.cmax > self.n {
            return bad(format!("community bounds {}..{} invalid for n = {}", self.cmin, self.cmax, self.n));
        }
        if !(self.avg_degree >= 1.0 && self.avg_degree <= self.max_degree) {
            return bad(format!("average degree {} vs max {}", self.avg_degree, self.max_degree));
        }
        if self.max_degree >= self.n as f64 {
            return bad(format!("max degree {} needs more than {} nodes", self.max_degree, self.n));
        }
        for (name, p) in [("degree_swap_prob", self.degree_swap_prob), ("membership_swap_prob", self.membership_swap_prob)] {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("{name} {p} outside [0,1]"));
            }
        }
        if self.tau1 <= 0.0 || self.tau2 < 0.0 || self.layer_exponent < 0.0 {
            return bad("exponents must be non-negative (tau1 positive)".into());
        }
        Ok(())
    }
}
