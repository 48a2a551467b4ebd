use std::fmt;

use serde::Serialize;

use crate::error::{NktError, Result};

/// Which part of parameter space a tuple falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `n ≥ k ≥ t ≥ 1`.
    Main,
    /// `k > n`: there is no k-set, so every graph qualifies.
    SubsetLargerThanGraph,
    /// `n ≥ k` and `t > k`: no k-set can hold a `K_t`, so nothing qualifies.
    CliqueLargerThanSubset,
}

/// The tuple `(n, k, t)` with an optional independence-number target `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NktParams {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl NktParams {
    /// Accepts degenerate tuples (`k > n`, `t > k`); only zeros are rejected.
    pub fn new(n: usize, k: usize, t: usize) -> Result<Self> {
        if n == 0 || k == 0 || t == 0 {
            return Err(NktError::InvalidInput(format!(
                "n, k and t must be positive (got n={n}, k={k}, t={t})"
            )));
        }
        Ok(NktParams { n, k, t, r: None })
    }

    pub fn with_r(self, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(NktError::InvalidInput("r must be positive".into()));
        }
        Ok(NktParams { r: Some(r), ..self })
    }

    /// Like [`NktParams::new`] but insists on `n ≥ k ≥ t`.
    pub fn strict(n: usize, k: usize, t: usize) -> Result<Self> {
        let p = NktParams::new(n, k, t)?;
        if p.regime() != Regime::Main {
            return Err(NktError::InvalidInput(format!(
                "expected n ≥ k ≥ t, got n={n}, k={k}, t={t}"
            )));
        }
        Ok(p)
    }

    pub fn regime(&self) -> Regime {
        if self.k > self.n {
            Regime::SubsetLargerThanGraph
        } else if self.t > self.k {
            Regime::CliqueLargerThanSubset
        } else {
            Regime::Main
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.regime() != Regime::Main
    }
}

impl fmt::Display for NktParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={} t={}", self.n, self.k, self.t)?;
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        Ok(())
    }
}
