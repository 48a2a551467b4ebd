//! Disjoint unions of cliques, stored as their multiset of clique sizes.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{NktError, Result};
use crate::graph::{first_n, Graph, MAX_VERTICES};

/// A disjoint union of cliques `K_{p1} + K_{p2} + …`, parts sorted
/// descending. Singletons are isolated vertices.
///
/// Ordering is lexicographic on the descending part list, which is the
/// order every minimizer list in this crate is reported in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CliqueUnion {
    parts: Vec<usize>,
}

pub(crate) fn choose2(p: usize) -> u64 {
    let p = p as u64;
    p * p.saturating_sub(1) / 2
}

/// `C(n, k)`, zero when `k > n`. Exact while the result fits in a `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| {
        (acc as u128 * (n - i) as u128 / (i + 1) as u128) as u64
    })
}

impl CliqueUnion {
    /// Sorts `parts` descending. Zero parts are dropped.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CliqueUnion { parts }
    }

    /// The complement of the Turán graph: `r` cliques whose sizes differ by
    /// at most one, `n` vertices in total.
    pub fn balanced(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(NktError::InvalidInput(format!(
                "cannot split {n} vertices into {r} nonempty cliques"
            )));
        }
        let (q, extra) = (n / r, n % r);
        let parts = (0..r).map(|i| q + usize::from(i < extra)).collect();
        Ok(CliqueUnion { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of cliques; also the number of components and the
    /// independence number of the realized graph.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn alpha(&self) -> usize {
        self.num_parts()
    }

    pub fn edge_count(&self) -> u64 {
        self.parts.iter().map(|&p| choose2(p)).sum()
    }

    /// Vertex count of the cliques with fewer than `t` vertices (`|V(A)|`)
    /// and the number of cliques with at least `t` (`c(B)`).
    pub fn split_at(&self, t: usize) -> (usize, usize) {
        self.parts.iter().fold((0, 0), |(small, big), &p| {
            if p < t {
                (small + p, big)
            } else {
                (small, big + 1)
            }
        })
    }

    /// Size of a largest vertex set spanning no `K_t`: every small clique in
    /// full plus `t - 1` vertices of each large one.
    pub fn kt_free_size(&self, t: usize) -> usize {
        let (small, big) = self.split_at(t);
        small + big * t.saturating_sub(1)
    }

    /// Lays the cliques out on consecutive vertex ranges, largest first.
    pub fn realize(&self) -> Result<Graph> {
        let n = self.n();
        if n > MAX_VERTICES {
            return Err(NktError::UnsupportedSize {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut rows = [0u32; MAX_VERTICES];
        let mut start = 0;
        for &p in &self.parts {
            let block = first_n(p) << start;
            for (v, row) in rows.iter_mut().enumerate().skip(start).take(p) {
                *row = block & !(1 << v);
            }
            start += p;
        }
        Ok(Graph::from_rows(n, &rows))
    }
}

impl fmt::Display for CliqueUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CliqueUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CliqueUnion({self})")
    }
}

impl Serialize for CliqueUnion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Parses `a+b+c` partition notation in any order; `0` is the empty union.
impl FromStr for CliqueUnion {
    type Err = NktError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(CliqueUnion::default());
        }
        let parts = s
            .split('+')
            .map(|p| match p.trim().parse::<usize>() {
                Ok(0) => Err(NktError::InvalidInput(
                    "clique sizes must be positive".into(),
                )),
                Ok(v) => Ok(v),
                Err(_) => Err(NktError::InvalidInput(format!("bad clique size {p:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let total = parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p));
        if total.is_none() {
            return Err(NktError::InvalidInput("partition total overflows".into()));
        }
        Ok(CliqueUnion::from_parts(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cu(parts: &[usize]) -> CliqueUnion {
        CliqueUnion::from_parts(parts.to_vec())
    }

    #[test]
    fn balanced_splits() {
        assert_eq!(CliqueUnion::balanced(7, 2).unwrap().parts(), &[4, 3]);
        assert_eq!(CliqueUnion::balanced(9, 3).unwrap().parts(), &[3, 3, 3]);
        assert_eq!(CliqueUnion::balanced(5, 1).unwrap().parts(), &[5]);
        assert!(CliqueUnion::balanced(3, 4).is_err());
        assert!(CliqueUnion::balanced(3, 0).is_err());
    }

    #[test]
    fn edge_counts() {
        assert_eq!(cu(&[1, 1, 1, 1, 1, 5]).edge_count(), 10);
        assert_eq!(cu(&[1, 1, 1, 3, 4]).edge_count(), 9);
        assert_eq!(cu(&[1; 9]).edge_count(), 0);
    }

    #[test]
    fn independence_of_realized_unions() {
        assert_eq!(
            cu(&[1, 1, 1, 1, 1, 5])
                .realize()
                .unwrap()
                .independence_number(),
            6
        );
        assert_eq!(
            cu(&[1, 3, 3, 3]).realize().unwrap().independence_number(),
            4
        );
        assert_eq!(
            cu(&[4, 3, 1, 1, 1])
                .realize()
                .unwrap()
                .independence_number(),
            5
        );
    }

    #[test]
    fn realize_round_trips() {
        let u = cu(&[2, 2, 5]);
        assert_eq!(u.parts(), &[5, 2, 2]);
        let g = u.realize().unwrap();
        assert_eq!(g.as_clique_union().unwrap(), u);
        let comps = cu(&[3, 4]).realize().unwrap().components();
        let mut sizes: Vec<_> = comps.iter().map(|c| c.count_ones()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4]);
        assert!(cu(&[20, 13]).realize().is_err());
    }

    #[test]
    fn split_and_kt_free() {
        let u = cu(&[3, 3, 1]);
        assert_eq!(u.split_at(3), (1, 2));
        assert_eq!(u.kt_free_size(3), 5);
        assert_eq!(u.kt_free_size(1), 0);
    }

    #[test]
    fn notation() {
        let u: CliqueUnion = "1+3+3+3".parse().unwrap();
        assert_eq!(u.to_string(), "3+3+3+1");
        assert_eq!("0".parse::<CliqueUnion>().unwrap().n(), 0);
        assert!("3+0".parse::<CliqueUnion>().is_err());
        assert!("3++1".parse::<CliqueUnion>().is_err());
        assert!("x".parse::<CliqueUnion>().is_err());
        assert!(cu(&[3, 3, 3, 1]) < cu(&[4, 3, 1, 1, 1]));
    }
}
