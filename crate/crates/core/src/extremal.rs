//! Minimum (n,k,t)- and (n,k,t,r)-graphs.
//!
//! Minimum graphs are disjoint unions of cliques, so the search space is
//! integer partitions of `n`. A clique union with parts `p_i` is an
//! (n,k,t)-graph iff `Σ min(p_i, t-1) ≤ k - 1`; the objective is
//! `Σ C(p_i, 2)`. With `r` fixed the number of parts is `r`.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::Path;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Infeasible, NktError, Result};
use crate::params::NktParams;
use crate::union::{choose2, CliqueUnion};

/// Largest `n` for which every optimal partition is enumerated. Above it
/// only the optimum value and one witness are reported.
pub const ENUMERATION_CAP: usize = 40;

/// One clique union of the form `aK_1 + T̄(n - a, b)` with
/// `a + b(t - 1) = k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateDecomposition {
    pub a: usize,
    pub b: usize,
    pub partition: CliqueUnion,
    pub edges: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRecord {
    pub params: NktParams,
    pub min_edges: u64,
    /// Every optimal clique union, ascending lexicographic order.
    pub minimizers: Vec<CliqueUnion>,
    /// Independence number of each minimizer, same order.
    pub alphas: Vec<usize>,
    /// False when `n` exceeds [`ENUMERATION_CAP`] and `minimizers` holds a
    /// single witness.
    pub exhaustive: bool,
}

impl ExtremalRecord {
    fn new(
        params: NktParams,
        min_edges: u64,
        mut minimizers: Vec<CliqueUnion>,
        exhaustive: bool,
    ) -> Self {
        minimizers.sort();
        minimizers.dedup();
        let alphas = minimizers.iter().map(CliqueUnion::alpha).collect();
        ExtremalRecord {
            params,
            min_edges,
            minimizers,
            alphas,
            exhaustive,
        }
    }

    fn unique(params: NktParams, u: CliqueUnion) -> Self {
        ExtremalRecord::new(params, u.edge_count(), vec![u], true)
    }
}

/// Optimum of the partition program at a fixed number of parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionOptimum {
    pub min_edges: u64,
    pub optima: Vec<CliqueUnion>,
    pub exhaustive: bool,
}

fn params(n: usize, k: usize, t: usize) -> NktParams {
    NktParams { n, k, t, r: None }
}

/// Minimum of `Σ C(p, 2)` over `count` parts summing to `total`: the
/// balanced split. `None` if the split is impossible.
fn balanced_cost(total: usize, count: usize) -> Option<u64> {
    match (total, count) {
        (0, 0) => Some(0),
        (_, 0) => None,
        (total, count) if total < count => None,
        _ => {
            let (q, extra) = (total / count, total % count);
            Some(extra as u64 * choose2(q + 1) + (count - extra) as u64 * choose2(q))
        }
    }
}

fn balanced_parts(total: usize, count: usize) -> Vec<usize> {
    if count == 0 {
        return Vec::new();
    }
    let (q, extra) = (total / count, total % count);
    (0..count).map(|i| q + usize::from(i < extra)).collect()
}

/// Rejections shared by every fixed-`r` computation.
fn check_nktr(n: usize, k: usize, t: usize, r: usize) -> Result<(), Infeasible> {
    if r == 0 || r > n {
        return Err(Infeasible::PartCount { r, n });
    }
    if k > n {
        return Ok(());
    }
    if t > k {
        return Err(Infeasible::CliqueExceedsSubset { k, t });
    }
    if t >= 2 && r >= k - t + 2 {
        return Err(Infeasible::AlphaBound {
            r,
            bound: k - t + 2,
        });
    }
    Ok(())
}

/// Every `(a, b)` with `a + b(t-1) = k-1` and
/// `1 ≤ b ≤ min(⌊(k-1)/(t-1)⌋, n-k+1)`, with `a = 0` admitted.
///
/// Requires `n ≥ k ≥ t ≥ 2`.
pub fn candidate_decompositions(
    n: usize,
    k: usize,
    t: usize,
) -> Result<Vec<CandidateDecomposition>> {
    if !(t >= 2 && k >= t && n >= k) {
        return Err(NktError::InvalidInput(format!(
            "candidate decompositions need n ≥ k ≥ t ≥ 2 (got n={n}, k={k}, t={t})"
        )));
    }
    let b_max = ((k - 1) / (t - 1)).min(n - k + 1);
    (1..=b_max)
        .map(|b| {
            let a = k - 1 - b * (t - 1);
            let mut parts = vec![1; a];
            parts.extend(balanced_parts(n - a, b));
            let partition = CliqueUnion::from_parts(parts);
            Ok(CandidateDecomposition {
                a,
                b,
                edges: partition.edge_count(),
                partition,
            })
        })
        .collect()
}

/// Minimum edges over clique unions with exactly `r` parts that are
/// (n,k,t)-graphs, with every optimum when `n ≤ ENUMERATION_CAP`.
///
/// The value comes from a scan over `b` (parts with at least `t` vertices)
/// and `m` (vertices in the smaller parts): for fixed `(b, m)` both groups
/// are best split evenly. Optima are then enumerated by a bounded search
/// over partitions, because ties need not be even splits.
pub fn feasible_min_partition(
    n: usize,
    k: usize,
    t: usize,
    r: usize,
) -> Result<PartitionOptimum, Infeasible> {
    assert!(
        k >= 1 && t >= 1,
        "k and t must be positive (got k={k}, t={t})"
    );
    if r == 0 || r > n {
        return Err(Infeasible::PartCount { r, n });
    }
    let budget = k - 1;
    let mut best: Option<(u64, usize, usize)> = None;
    for b in 0..=r {
        let small = r - b;
        let big_floor = (t - 1) * b;
        if big_floor > budget {
            break;
        }
        let m_lo = small;
        let m_hi = (small * (t - 1)).min(budget - big_floor);
        if m_lo > m_hi {
            continue;
        }
        for m in m_lo..=m_hi.min(n) {
            let big_total = n - m;
            if big_total < b * t || (b == 0 && big_total != 0) {
                continue;
            }
            let (Some(cs), Some(cb)) = (balanced_cost(m, small), balanced_cost(big_total, b))
            else {
                continue;
            };
            if best.is_none_or(|(v, _, _)| cs + cb < v) {
                best = Some((cs + cb, b, m));
            }
        }
    }
    let Some((min_edges, b, m)) = best else {
        return Err(if t > k && k <= n {
            Infeasible::CliqueExceedsSubset { k, t }
        } else if k <= n && r + t >= k + 2 {
            Infeasible::AlphaBound {
                r,
                bound: k + 2 - t,
            }
        } else {
            Infeasible::PartCount { r, n }
        });
    };
    if n > ENUMERATION_CAP {
        let mut parts = balanced_parts(m, r - b);
        parts.extend(balanced_parts(n - m, b));
        return Ok(PartitionOptimum {
            min_edges,
            optima: vec![CliqueUnion::from_parts(parts)],
            exhaustive: false,
        });
    }
    let mut optima = Vec::new();
    let mut search = OptimaSearch {
        t,
        budget,
        target: min_edges,
        parts: Vec::with_capacity(r),
        out: &mut optima,
    };
    search.run(n, r, n, 0, 0);
    optima.sort();
    Ok(PartitionOptimum {
        min_edges,
        optima,
        exhaustive: true,
    })
}

struct OptimaSearch<'a> {
    t: usize,
    budget: usize,
    target: u64,
    parts: Vec<usize>,
    out: &'a mut Vec<CliqueUnion>,
}

impl OptimaSearch<'_> {
    /// Places the remaining `count` parts (non-increasing, each at most
    /// `cap`) summing to `total`.
    fn run(&mut self, total: usize, count: usize, cap: usize, cost: u64, used: usize) {
        if count == 0 {
            if total == 0 && cost == self.target && used <= self.budget {
                self.out.push(CliqueUnion::from_parts(self.parts.clone()));
            }
            return;
        }
        let Some(lower) = balanced_cost(total, count) else {
            return;
        };
        if cost + lower > self.target || used + count * usize::from(self.t > 1) > self.budget {
            return;
        }
        let hi = cap.min(total - (count - 1));
        let lo = total.div_ceil(count);
        for p in (lo..=hi).rev() {
            self.parts.push(p);
            self.run(
                total - p,
                count - 1,
                p,
                cost + choose2(p),
                used + p.min(self.t - 1),
            );
            self.parts.pop();
        }
    }
}

/// Minimum (n,k,t,r)-graphs.
///
/// Infeasible when `r ≥ k - t + 2` (or `r > n`). When `r(t-1) < k` the
/// balanced union `T̄(n, r)` is the unique answer; otherwise the partition
/// program decides.
pub fn min_nktr(n: usize, k: usize, t: usize, r: usize) -> Result<ExtremalRecord, Infeasible> {
    check_nktr(n, k, t, r)?;
    let p = NktParams {
        n,
        k,
        t,
        r: Some(r),
    };
    if k > n || t == 1 || r * (t - 1) < k {
        let u = CliqueUnion::balanced(n, r).expect("1 ≤ r ≤ n checked");
        return Ok(ExtremalRecord::unique(p, u));
    }
    let opt = feasible_min_partition(n, k, t, r)?;
    Ok(ExtremalRecord::new(
        p,
        opt.min_edges,
        opt.optima,
        opt.exhaustive,
    ))
}

fn min_over_r(p: NktParams, r_max: usize) -> Result<ExtremalRecord, Infeasible> {
    let (n, k, t) = (p.n, p.k, p.t);
    let mut best: Option<(u64, Vec<CliqueUnion>, bool)> = None;
    let mut first_err = None;
    for r in 1..=r_max {
        match min_nktr(n, k, t, r) {
            Ok(rec) => match &mut best {
                Some((v, mins, exh)) if rec.min_edges == *v => {
                    mins.extend(rec.minimizers);
                    *exh &= rec.exhaustive;
                }
                Some((v, _, _)) if rec.min_edges > *v => {}
                _ => best = Some((rec.min_edges, rec.minimizers, rec.exhaustive)),
            },
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    match best {
        Some((v, mins, exh)) => Ok(ExtremalRecord::new(p, v, mins, exh)),
        None => Err(first_err.unwrap_or(Infeasible::PartCount { r: r_max, n })),
    }
}

/// Closed-form answers for the boundary cases: `t = 1`, `k > n`, `t > k`,
/// `k = t` and `n = k`. `None` when the general machinery is needed.
pub fn special_case(n: usize, k: usize, t: usize) -> Option<Result<ExtremalRecord, Infeasible>> {
    let p = params(n, k, t);
    let union = |parts: Vec<usize>| {
        Some(Ok(ExtremalRecord::unique(
            p,
            CliqueUnion::from_parts(parts),
        )))
    };
    if t == 1 || k > n {
        return union(vec![1; n]);
    }
    if t > k {
        return Some(Err(Infeasible::CliqueExceedsSubset { k, t }));
    }
    if k == t {
        return union(vec![n]);
    }
    if n == k {
        let mut parts = vec![1; n - t];
        parts.push(t);
        return union(parts);
    }
    None
}

/// Minimum (n,k,t)-graphs: the best minimum (n,k,t,r)-graphs over all `r`.
pub fn min_nkt(n: usize, k: usize, t: usize) -> Result<ExtremalRecord, Infeasible> {
    if let Some(rec) = special_case(n, k, t) {
        return rec;
    }
    min_nkt_general(n, k, t)
}

/// [`min_nkt`] without the closed-form shortcuts.
pub fn min_nkt_general(n: usize, k: usize, t: usize) -> Result<ExtremalRecord, Infeasible> {
    min_over_r(params(n, k, t), n)
}

/// Minimum (n,k,t)-graphs among those with independence number at most `a`.
pub fn min_nkt_alpha_at_most(
    n: usize,
    k: usize,
    t: usize,
    a: usize,
) -> Result<ExtremalRecord, Infeasible> {
    let r_max = if k > n || t == 1 {
        a.min(n)
    } else {
        a.min(n).min((k + 1).saturating_sub(t))
    };
    if r_max == 0 {
        return Err(if t > k && k <= n {
            Infeasible::CliqueExceedsSubset { k, t }
        } else {
            Infeasible::PartCount { r: a, n }
        });
    }
    min_over_r(params(n, k, t), r_max)
}

/// Adds one new vertex to every clique of `h`, then `r - c(h)` isolated
/// vertices.
pub fn construct_g_prime(h: &CliqueUnion, r: usize) -> Result<CliqueUnion> {
    if h.num_parts() > r {
        return Err(NktError::InvalidInput(format!(
            "{} cliques cannot be extended to {r} components",
            h.num_parts()
        )));
    }
    let mut parts: Vec<usize> = h.parts().iter().map(|p| p + 1).collect();
    parts.resize(r, 1);
    Ok(CliqueUnion::from_parts(parts))
}

/// One level of the recursive construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub params: NktParams,
    /// Minimum (n-r, k-r, t-1)-graph with independence number at most `r`.
    pub h: CliqueUnion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub params: NktParams,
    pub result: CliqueUnion,
    pub edges: u64,
    pub trace: Vec<TraceStep>,
}

type MemoKey = (usize, usize, usize, usize);

const MEMO_HEADER: &str = "# nkt construction memo v1";

/// Memoized recursive construction of minimum (n,k,t,r)-graphs.
///
/// `G - S` for a maximum independent set `S` is a smaller instance with
/// `t - 1`; its optimum `H` is extended by one vertex per clique plus
/// isolated vertices up to `r` components. Recursion bottoms out at `t = 1`
/// or `r(t - 1) < k`, both answered by `T̄(n, r)`.
#[derive(Default)]
pub struct Constructor {
    memo: RwLock<HashMap<MemoKey, Option<CliqueUnion>>>,
}

impl Constructor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn construct(
        &self,
        n: usize,
        k: usize,
        t: usize,
        r: usize,
    ) -> Result<Construction, Infeasible> {
        check_nktr(n, k, t, r)?;
        let result = self
            .solve((n, k, t, r))
            .expect("feasible tuples always construct");
        let mut trace = Vec::new();
        let mut key = (n, k, t, r);
        while let Some(h) = self.choose_h(key) {
            let (n, k, t, r) = key;
            trace.push(TraceStep {
                params: NktParams {
                    n,
                    k,
                    t,
                    r: Some(r),
                },
                h: h.clone(),
            });
            key = (n - r, k - r, t - 1, h.num_parts());
        }
        Ok(Construction {
            params: NktParams {
                n,
                k,
                t,
                r: Some(r),
            },
            edges: result.edge_count(),
            result,
            trace,
        })
    }

    fn is_base(key: MemoKey) -> bool {
        let (n, k, t, r) = key;
        k > n || t == 1 || r * (t - 1) < k
    }

    fn solve(&self, key: MemoKey) -> Option<CliqueUnion> {
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let (n, k, t, r) = key;
        let value = if check_nktr(n, k, t, r).is_err() {
            None
        } else if Self::is_base(key) {
            Some(CliqueUnion::balanced(n, r).expect("1 ≤ r ≤ n checked"))
        } else {
            let h = self.choose_h(key).expect("a clique always qualifies as H");
            Some(construct_g_prime(&h, r).expect("H has at most r parts"))
        };
        self.memo
            .write()
            .expect("memo lock")
            .insert(key, value.clone());
        value
    }

    /// The `H` used at `key`: fewest edges, then lexicographically smallest.
    fn choose_h(&self, key: MemoKey) -> Option<CliqueUnion> {
        let (n, k, t, r) = key;
        if check_nktr(n, k, t, r).is_err() || Self::is_base(key) {
            return None;
        }
        (1..=r.min(n - r))
            .filter_map(|r2| self.solve((n - r, k - r, t - 1, r2)))
            .min_by(|a, b| a.edge_count().cmp(&b.edge_count()).then_with(|| a.cmp(b)))
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Reads a memo file written by [`Constructor::save`]. A missing file
    /// yields an empty table; a file with another version header is ignored.
    pub fn load(path: &Path) -> io::Result<Self> {
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Self::new()),
            Err(e) => return Err(e),
        };
        Self::parse_memo(&text)
    }

    /// Parses the text of a memo file. Text under another version header
    /// yields an empty table.
    pub fn parse_memo(text: &str) -> io::Result<Self> {
        let mut lines = text.lines();
        if lines.next() != Some(MEMO_HEADER) {
            return Ok(Self::new());
        }
        let bad = |line: &str| {
            io::Error::new(
                io::ErrorKind::InvalidData,
                format!("bad memo line {line:?}"),
            )
        };
        let mut memo = HashMap::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [n, k, t, r, value] = fields[..] else {
                return Err(bad(line));
            };
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad(line));
            let key = (num(n)?, num(k)?, num(t)?, num(r)?);
            let value = match value {
                "-" => None,
                v => Some(v.parse::<CliqueUnion>().map_err(|_| bad(line))?),
            };
            if !memo_entry_is_valid(key, value.as_ref()) {
                return Err(bad(line));
            }
            memo.insert(key, value);
        }
        Ok(Constructor {
            memo: RwLock::new(memo),
        })
    }

    /// Writes the table sorted by key.
    pub fn save(&self, path: &Path) -> io::Result<()> {
        let memo = self.memo.read().expect("memo lock");
        let mut entries: Vec<_> = memo.iter().collect();
        entries.sort_by_key(|(key, _)| **key);
        let mut out = String::from(MEMO_HEADER);
        out.push('\n');
        for ((n, k, t, r), value) in entries {
            let value = value
                .as_ref()
                .map_or_else(|| "-".to_string(), |u| u.to_string());
            out.push_str(&format!("{n} {k} {t} {r} {value}\n"));
        }
        fs::write(path, out)
    }
}

/// A memo entry must be infeasible exactly when the tuple is, and otherwise
/// an optimal partition with the right shape.
fn memo_entry_is_valid((n, k, t, r): MemoKey, value: Option<&CliqueUnion>) -> bool {
    match (value, check_nktr(n, k, t, r)) {
        (None, Err(_)) => true,
        (Some(u), Ok(())) => {
            u.n() == n
                && u.num_parts() == r
                && (k > n || u.kt_free_size(t) < k)
                && min_nktr(n, k, t, r).is_ok_and(|rec| rec.min_edges == u.edge_count())
        }
        _ => false,
    }
}

fn shared_constructor() -> &'static Constructor {
    static SHARED: OnceLock<Constructor> = OnceLock::new();
    SHARED.get_or_init(Constructor::new)
}

/// A minimum (n,k,t,r)-graph built by the recursive construction, using a
/// process-wide memo table.
pub fn recursive_min_construct(
    n: usize,
    k: usize,
    t: usize,
    r: usize,
) -> Result<CliqueUnion, Infeasible> {
    shared_constructor().construct(n, k, t, r).map(|c| c.result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cu(parts: &[usize]) -> CliqueUnion {
        CliqueUnion::from_parts(parts.to_vec())
    }

    #[test]
    fn candidates_for_ten_eight_three() {
        let c = candidate_decompositions(10, 8, 3).unwrap();
        let summary: Vec<_> = c
            .iter()
            .map(|d| (d.a, d.b, d.partition.clone(), d.edges))
            .collect();
        assert_eq!(
            summary,
            vec![
                (5, 1, cu(&[5, 1, 1, 1, 1, 1]), 10),
                (3, 2, cu(&[4, 3, 1, 1, 1]), 9),
                (1, 3, cu(&[3, 3, 3, 1]), 9),
            ]
        );
    }

    #[test]
    fn candidates_when_n_equals_k() {
        for n in 2..=12 {
            for t in 2..=n {
                let c = candidate_decompositions(n, n, t).unwrap();
                assert_eq!(c.len(), 1);
                assert_eq!((c[0].a, c[0].b), (n - t, 1));
                let mut parts = vec![1; n - t];
                parts.push(t);
                assert_eq!(c[0].partition, CliqueUnion::from_parts(parts));
            }
        }
    }

    #[test]
    fn candidates_include_turan_for_t2() {
        for n in 2..=16 {
            for k in 2..=n {
                let c = candidate_decompositions(n, k, 2).unwrap();
                let turan = CliqueUnion::balanced(n, k - 1).unwrap();
                assert!(c.iter().any(|d| d.partition == turan), "n={n} k={k}");
                if n >= 2 * k - 2 {
                    assert!(c.iter().any(|d| d.a == 0 && d.b == k - 1));
                }
            }
        }
        assert!(candidate_decompositions(5, 3, 1).is_err());
        assert!(candidate_decompositions(5, 6, 2).is_err());
    }

    #[test]
    fn min_nkt_examples() {
        let rec = min_nkt(10, 8, 3).unwrap();
        assert_eq!(rec.min_edges, 9);
        assert_eq!(
            rec.minimizers,
            vec![cu(&[3, 3, 3, 1]), cu(&[4, 3, 1, 1, 1])]
        );
        assert_eq!(rec.alphas, vec![4, 5]);

        let rec = min_nkt(9, 8, 4).unwrap();
        assert_eq!(rec.min_edges, 10);
        assert_eq!(rec.minimizers, vec![cu(&[5, 1, 1, 1, 1])]);
        assert_eq!(rec.alphas, vec![5]);

        for n in 1..=9 {
            for k in 1..=n {
                let rec = min_nkt(n, k, 1).unwrap();
                assert_eq!(rec.min_edges, 0);
                assert_eq!(rec.minimizers, vec![cu(&vec![1; n])]);
            }
        }
    }

    #[test]
    fn min_nktr_examples() {
        let rec = min_nktr(9, 8, 4, 3).unwrap();
        assert_eq!(rec.min_edges, 12);
        assert_eq!(rec.minimizers, vec![cu(&[4, 4, 1]), cu(&[5, 2, 2])]);
        assert_eq!(
            min_nktr(9, 8, 4, 6),
            Err(Infeasible::AlphaBound { r: 6, bound: 6 })
        );
        let rec = min_nktr(10, 8, 3, 6).unwrap();
        assert_eq!(rec.min_edges, 10);
        assert_eq!(rec.minimizers, vec![cu(&[5, 1, 1, 1, 1, 1])]);
        assert_eq!(
            min_nktr(4, 4, 2, 5),
            Err(Infeasible::PartCount { r: 5, n: 4 })
        );
        assert_eq!(
            min_nktr(6, 3, 4, 1),
            Err(Infeasible::CliqueExceedsSubset { k: 3, t: 4 })
        );
    }

    #[test]
    fn feasible_min_partition_examples() {
        let opt = feasible_min_partition(9, 8, 4, 3).unwrap();
        assert_eq!(opt.min_edges, 12);
        assert_eq!(opt.optima, vec![cu(&[4, 4, 1]), cu(&[5, 2, 2])]);
        for n in 2..=12 {
            for k in 2..=n {
                let opt = feasible_min_partition(n, k, 2, k - 1).unwrap();
                let turan = CliqueUnion::balanced(n, k - 1).unwrap();
                assert_eq!(opt.optima, vec![turan.clone()]);
                assert_eq!(opt.min_edges, turan.edge_count());
            }
        }
        let opt = feasible_min_partition(8, 8, 4, 2).unwrap();
        assert_eq!((opt.min_edges, opt.optima), (12, vec![cu(&[4, 4])]));
        assert!(feasible_min_partition(9, 8, 4, 6).is_err());
    }

    #[test]
    fn large_n_reports_a_single_witness() {
        let opt = feasible_min_partition(60, 30, 4, 12).unwrap();
        assert!(!opt.exhaustive);
        assert_eq!(opt.optima.len(), 1);
        let w = &opt.optima[0];
        assert_eq!(w.n(), 60);
        assert_eq!(w.num_parts(), 12);
        assert_eq!(w.edge_count(), opt.min_edges);
        assert!(w.kt_free_size(4) < 30);
        assert!(!min_nkt(50, 20, 3).unwrap().exhaustive);
    }

    #[test]
    fn alpha_at_most_examples() {
        let rec = min_nkt_alpha_at_most(8, 8, 4, 2).unwrap();
        assert_eq!(
            (rec.min_edges, rec.minimizers.clone()),
            (12, vec![cu(&[4, 4])])
        );
        let rec = min_nkt_alpha_at_most(6, 5, 3, 3).unwrap();
        assert_eq!(rec.min_edges, 6);
        assert_eq!(rec.minimizers, vec![cu(&[3, 3]), cu(&[4, 1, 1])]);
        for (n, k, t) in [(10, 8, 3), (9, 8, 4), (7, 5, 2), (12, 9, 4)] {
            assert_eq!(
                min_nkt_alpha_at_most(n, k, t, k - t + 1)
                    .unwrap()
                    .minimizers,
                min_nkt(n, k, t).unwrap().minimizers
            );
        }
    }

    #[test]
    fn g_prime_examples() {
        assert_eq!(construct_g_prime(&cu(&[3, 3]), 3).unwrap(), cu(&[4, 4, 1]));
        assert_eq!(
            construct_g_prime(&cu(&[4, 1, 1]), 3).unwrap(),
            cu(&[5, 2, 2])
        );
        assert_eq!(construct_g_prime(&cu(&[]), 4).unwrap(), cu(&[1, 1, 1, 1]));
        assert!(construct_g_prime(&cu(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn recursive_construction_examples() {
        let c = Constructor::new().construct(9, 8, 4, 3).unwrap();
        assert!(c.result == cu(&[5, 2, 2]) || c.result == cu(&[4, 4, 1]));
        assert_eq!(c.edges, 12);
        assert_eq!(
            c.trace[0].params,
            NktParams {
                n: 9,
                k: 8,
                t: 4,
                r: Some(3)
            }
        );
        assert_eq!(c.trace[0].h.n(), 6);
        assert_eq!(c.trace[0].h.edge_count(), 6);

        for (n, k, r) in [(7, 4, 3), (9, 9, 9), (5, 2, 2)] {
            let c = Constructor::new().construct(n, k, 1, r).unwrap();
            assert_eq!(c.result, CliqueUnion::balanced(n, r).unwrap());
            assert!(c.trace.is_empty());
        }
        // r(t-1) < k
        assert_eq!(
            recursive_min_construct(12, 9, 3, 4).unwrap(),
            CliqueUnion::balanced(12, 4).unwrap()
        );
        assert_eq!(
            recursive_min_construct(7, 7, 3, 5).unwrap(),
            cu(&[3, 1, 1, 1, 1])
        );
        assert_eq!(
            recursive_min_construct(9, 8, 4, 6),
            Err(Infeasible::AlphaBound { r: 6, bound: 6 })
        );
    }

    #[test]
    fn special_cases() {
        let rec = special_case(7, 7, 3).unwrap().unwrap();
        assert_eq!(
            (rec.min_edges, rec.minimizers[0].clone()),
            (3, cu(&[3, 1, 1, 1, 1]))
        );
        let rec = special_case(5, 3, 3).unwrap().unwrap();
        assert_eq!((rec.min_edges, rec.minimizers[0].clone()), (10, cu(&[5])));
        let rec = special_case(4, 9, 2).unwrap().unwrap();
        assert_eq!(
            (rec.min_edges, rec.minimizers[0].clone()),
            (0, cu(&[1, 1, 1, 1]))
        );
        assert!(special_case(6, 3, 4).unwrap().is_err());
        assert!(special_case(10, 8, 3).is_none());
    }

    #[test]
    fn memo_file_round_trip() {
        let dir = std::env::temp_dir().join(format!("nkt-memo-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("memo.txt");
        let c = Constructor::new();
        let built = c.construct(11, 9, 4, 4).unwrap();
        c.save(&path).unwrap();
        let loaded = Constructor::load(&path).unwrap();
        assert_eq!(loaded.len(), c.len());
        assert_eq!(loaded.construct(11, 9, 4, 4).unwrap(), built);
        fs::write(&path, "# some other format\n1 1 1 1 1\n").unwrap();
        assert!(Constructor::load(&path).unwrap().is_empty());
        fs::write(&path, format!("{MEMO_HEADER}\n1 2 garbage\n")).unwrap();
        assert!(Constructor::load(&path).is_err());
        assert!(Constructor::load(&dir.join("absent")).unwrap().is_empty());
        // Well-formed lines that disagree with the optimum are refused.
        for line in [
            "9 8 4 3 3+3+3",
            "9 8 4 3 7+1+1",
            "9 8 4 3 -",
            "9 8 4 6 5+2+2",
            "9 8 4 3 4+4",
        ] {
            assert!(
                Constructor::parse_memo(&format!("{MEMO_HEADER}\n{line}\n")).is_err(),
                "{line}"
            );
        }
        for line in ["9 8 4 3 5+2+2", "9 8 4 6 -"] {
            assert_eq!(
                Constructor::parse_memo(&format!("{MEMO_HEADER}\n{line}\n"))
                    .unwrap()
                    .len(),
                1
            );
        }
        fs::remove_dir_all(&dir).unwrap();
    }
}
