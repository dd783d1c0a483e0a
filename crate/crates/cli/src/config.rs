//! Flat key/value grading configs.
//!
//! ```text
//! group = "Z/3"
//! n = 3
//! tuple = ["0", "1", "2"]
//! ring = "Q"
//! ```
//!
//! `offdiagonal = [...]` (degrees of `e_{i,i+1}`) may replace `tuple`.
//! Adding `coeff_grading = "Z"` builds the product grading of the ring's
//! own grading with the position grading above.

use std::path::Path;

use gradex_core::coeff::RingSpec;
use gradex_core::grading::{GoodGrading, GradingDescriptor, ProductGrading, VeryGoodGrading};
use gradex_core::groups::GroupSpec;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Cap on matrix size, overridable through `GRADEX_MAX_N`.
pub const DEFAULT_MAX_N: usize = 12;

pub fn max_n() -> usize {
    std::env::var("GRADEX_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingConfig {
    pub group: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tuple: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offdiagonal: Option<Vec<String>>,
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff_grading: Option<String>,
    /// Truncation of `Q[x]` coefficients in brute-force checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u32>,
}

/// A config resolved into algebraic objects.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub grading: GradingDescriptor,
    pub ring: RingSpec,
}

impl GradingConfig {
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| CliError::Config {
            path: origin.to_string(),
            message: e.to_string().trim_end().to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn resolve(&self) -> Result<Resolved> {
        if self.n == 0 {
            return Err(CliError::Usage("n must be positive".into()));
        }
        let cap = max_n();
        if self.n > cap {
            return Err(CliError::Usage(format!(
                "n = {} exceeds the cap {cap} (set GRADEX_MAX_N to raise it)",
                self.n
            )));
        }
        let group: GroupSpec = self.group.parse()?;
        let ring: RingSpec = self.ring.parse()?;
        let parse_all = |xs: &[String]| -> Result<Vec<_>> {
            xs.iter()
                .map(|t| group.parse_element(t).map_err(CliError::from))
                .collect()
        };
        let position = match (&self.tuple, &self.offdiagonal) {
            (Some(t), None) => {
                if t.len() != self.n {
                    return Err(CliError::Usage(format!(
                        "tuple has {} entries but n = {}",
                        t.len(),
                        self.n
                    )));
                }
                Position::Tuple(VeryGoodGrading::from_tuple(group.clone(), parse_all(t)?)?)
            }
            (None, Some(f)) => {
                if f.len() + 1 != self.n {
                    return Err(CliError::Usage(format!(
                        "offdiagonal needs n - 1 = {} entries, got {}",
                        self.n - 1,
                        f.len()
                    )));
                }
                Position::Good(GoodGrading::from_offdiagonal_map(
                    group.clone(),
                    &parse_all(f)?,
                )?)
            }
            _ => {
                return Err(CliError::Usage(
                    "exactly one of `tuple` and `offdiagonal` must be given".into(),
                ))
            }
        };
        let grading = match &self.coeff_grading {
            Some(a) => {
                let a: GroupSpec = a.parse()?;
                let good = match position {
                    Position::Tuple(vg) => vg.to_good(),
                    Position::Good(g) => g,
                };
                let product = ProductGrading::new(a, good);
                product.check_ring(&ring)?;
                GradingDescriptor::Product(product)
            }
            None => match position {
                Position::Tuple(vg) => GradingDescriptor::VeryGood(vg),
                Position::Good(g) => GradingDescriptor::Good(g),
            },
        };
        Ok(Resolved { grading, ring })
    }
}

enum Position {
    Tuple(VeryGoodGrading),
    Good(GoodGrading),
}
