use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NktError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported size: {what} = {got} exceeds the limit of {limit}")]
    UnsupportedSize {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("graph6 parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Infeasible(#[from] Infeasible),
}

pub type Result<T, E = NktError> = std::result::Result<T, E>;

/// Why no graph satisfies a requested parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Error)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Infeasible {
    /// An (n,k,t)-graph always has independence number below k - t + 2.
    AlphaBound { r: usize, bound: usize },
    /// A graph on n vertices cannot have more than n independent vertices,
    /// and no graph with at least one vertex has independence number 0.
    PartCount { r: usize, n: usize },
    /// A k-set cannot hold a clique on t > k vertices.
    CliqueExceedsSubset { k: usize, t: usize },
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Infeasible::AlphaBound { r, bound } => write!(
                f,
                "infeasible: α(G) < k−t+2 = {bound} for every (n,k,t)-graph, so r = {r} is unattainable"
            ),
            Infeasible::PartCount { r, n } => {
                write!(f, "infeasible: independence number r = {r} impossible on {n} vertices")
            }
            Infeasible::CliqueExceedsSubset { k, t } => write!(
                f,
                "infeasible: a set of k = {k} vertices cannot contain a clique on t = {t} vertices"
            ),
        }
    }
}
