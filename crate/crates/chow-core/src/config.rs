use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_WEIGHT_CAP: usize = 200_000;

/// Which linear system decides membership of a candidate in a prolongation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ProlongRoute {
    /// Derivative projections when the candidate weight space is small, polarization otherwise.
    #[default]
    Auto,
    Derivative,
    Polarization,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Largest weight space (or full space) that may be materialized.
    pub weight_cap: usize,
    /// Minimum number of primes used by the modular rank.
    pub primes: usize,
    /// Largest candidate list for a full triangular decomposition.
    pub max_candidates: usize,
    pub route: ProlongRoute,
    /// Weight spaces up to this size use the derivative route under `Auto`.
    pub derivative_route_limit: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            weight_cap: DEFAULT_WEIGHT_CAP,
            primes: 2,
            max_candidates: 20_000,
            route: ProlongRoute::Auto,
            derivative_route_limit: 2_000,
        }
    }
}

impl Config {
    /// Default configuration with `CHOW_WEIGHT_CAP` applied when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Config::default();
        if let Ok(v) = std::env::var("CHOW_WEIGHT_CAP") {
            cfg.weight_cap = v
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("CHOW_WEIGHT_CAP is not an integer: {v}")))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.weight_cap < 1 {
            return Err(Error::Invalid("weight cap must be at least 1".into()));
        }
        if self.primes < 2 {
            return Err(Error::Invalid("at least two primes are required".into()));
        }
        Ok(())
    }

    pub(crate) fn check_size(&self, what: impl Into<String>, size: usize) -> Result<()> {
        if size > self.weight_cap {
            Err(Error::Budget { what: what.into(), size: size as u128, cap: self.weight_cap as u128 })
        } else {
            Ok(())
        }
    }
}
