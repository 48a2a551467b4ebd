//! Exhaustive searches over all isomorphism classes of small graphs.
//!
//! Classes are found by streaming every labeled graph on `n` vertices and
//! keeping the canonical key of each. Edge masks are walked in Gray-code
//! order, so consecutive graphs differ in one edge and degrees update in
//! O(1); only labelings whose degrees are non-increasing in label order are
//! canonized, which every class has at least one of. The mask space is cut
//! into shards by its top bits and the shard key sets are merged into one
//! sorted list, so results do not depend on the worker count.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::{NktError, Result};
use crate::extremal::{min_nkt, min_nktr};
use crate::graph::{bit, Graph, VertexSet, MAX_VERTICES};
use crate::graph6;
use crate::params::NktParams;
use crate::union::{binomial, CliqueUnion};
use crate::verify::is_nkt;

/// Largest `n` searched without opting in.
pub const DEFAULT_CAP: usize = 7;
/// Largest `n` searched at all.
pub const OPT_IN_CAP: usize = 8;

const SHARD_BITS: usize = 10;

#[derive(Debug, Clone, Default)]
pub struct SearchConfig {
    /// Worker threads; 0 uses every available core.
    pub jobs: usize,
    /// Permits `n = 8`.
    pub allow_n8: bool,
    /// Report shard progress on stderr.
    pub progress: bool,
}

impl SearchConfig {
    pub fn with_jobs(jobs: usize) -> Self {
        SearchConfig {
            jobs,
            ..Self::default()
        }
    }

    fn pool(&self) -> Result<ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| NktError::InvalidInput(format!("cannot start worker pool: {e}")))
    }
}

pub fn check_cap(n: usize, cfg: &SearchConfig) -> Result<()> {
    if n == 0 {
        return Err(NktError::InvalidInput("n must be positive".into()));
    }
    let limit = if cfg.allow_n8 {
        OPT_IN_CAP
    } else {
        DEFAULT_CAP
    };
    if n > limit {
        return Err(NktError::UnsupportedSize {
            what: "search vertex count",
            got: n,
            limit,
        });
    }
    Ok(())
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// canonical-key order. Each representative is the canonical form.
pub fn enumerate_nonisomorphic(n: usize, cfg: &SearchConfig) -> Result<Vec<Graph>> {
    check_cap(n, cfg)?;
    let pool = cfg.pool()?;
    Ok(enumerate_with(n, &pool, cfg.progress))
}

fn enumerate_with(n: usize, pool: &ThreadPool, progress: bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let shard_bits = pairs.len().min(SHARD_BITS);
    let low_bits = pairs.len() - shard_bits;
    let shards = 1usize << shard_bits;
    let done = AtomicUsize::new(0);
    let keys: Vec<HashSet<CanonicalKey>> = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(|shard| {
                let keys = scan_shard(n, &pairs, low_bits, shard);
                if progress {
                    let d = done.fetch_add(1, Ordering::Relaxed) + 1;
                    if d.is_multiple_of((shards / 20).max(1)) || d == shards {
                        eprintln!("enumerating n={n}: {d}/{shards} shards");
                    }
                }
                keys
            })
            .collect()
    });
    let merged: BTreeSet<CanonicalKey> = keys.into_iter().flatten().collect();
    merged.iter().map(CanonicalKey::graph).collect()
}

fn scan_shard(
    n: usize,
    pairs: &[(usize, usize)],
    low_bits: usize,
    shard: usize,
) -> HashSet<CanonicalKey> {
    let mut rows = [0 as VertexSet; MAX_VERTICES];
    let mut deg = [0u8; MAX_VERTICES];
    let toggle = |rows: &mut [VertexSet; MAX_VERTICES], deg: &mut [u8; MAX_VERTICES], e: usize| {
        let (i, j) = pairs[e];
        if rows[i] & bit(j) == 0 {
            deg[i] += 1;
            deg[j] += 1;
        } else {
            deg[i] -= 1;
            deg[j] -= 1;
        }
        rows[i] ^= bit(j);
        rows[j] ^= bit(i);
    };
    for b in 0..pairs.len() - low_bits {
        if shard >> b & 1 == 1 {
            toggle(&mut rows, &mut deg, low_bits + b);
        }
    }
    let mut keys = HashSet::new();
    let mut visit = |rows: &[VertexSet; MAX_VERTICES], deg: &[u8; MAX_VERTICES]| {
        if deg[..n].windows(2).all(|w| w[0] >= w[1]) {
            let g = Graph::from_rows(n, rows);
            keys.insert(canonical_key(&g).expect("search sizes are below the canonical form cap"));
        }
    };
    visit(&rows, &deg);
    for step in 1u64..1 << low_bits {
        toggle(&mut rows, &mut deg, step.trailing_zeros() as usize);
        visit(&rows, &deg);
    }
    keys
}

/// All isomorphism classes on `n` vertices, built once and shared by every
/// search over that `n`.
pub struct Catalog {
    n: usize,
    graphs: Vec<Graph>,
    pool: ThreadPool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Objective {
    Edges,
    Cliques { s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub params: NktParams,
    pub objective: Objective,
    /// Isomorphism classes examined.
    pub scanned: usize,
    /// Classes satisfying the membership condition.
    pub qualifying: usize,
    /// Least objective over qualifying classes.
    pub min_value: Option<u64>,
    /// graph6 of every optimal class, in catalog order.
    pub witnesses: Vec<String>,
    /// Clique sizes of each witness that is a clique union.
    pub witness_partitions: Vec<Option<CliqueUnion>>,
    /// Every witness is a disjoint union of cliques (vacuous when none).
    pub conjecture_holds: bool,
    /// Value predicted without search, when one is known.
    pub reference: Option<u64>,
    /// Search and prediction agree (value, and minimizer set where the
    /// prediction has one).
    pub reference_agrees: Option<bool>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalGraph {
    pub graph6: String,
    pub edges: u64,
    pub partition: Option<CliqueUnion>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub params: NktParams,
    pub scanned: usize,
    pub qualifying: usize,
    /// Inclusion-minimal classes, catalog order.
    pub minimal_graphs: Vec<MinimalGraph>,
    pub max_edges: Option<u64>,
    pub max_witnesses: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NikiforovComparison {
    pub n: usize,
    pub blob: usize,
    /// `K_4` count of the clique-blowup of `C_5` with blobs of `n / 5`.
    pub blowup_k4: u64,
    /// `K_4` count of two disjoint `K_{n/2}`.
    pub split_k4: u64,
    /// Counted on the realized blowup rather than by formula.
    pub explicit: bool,
    /// Whether the realized blowup is an (n,3,2)-graph; `None` if not built.
    pub blowup_is_n32: Option<bool>,
}

fn objective_report(
    params: NktParams,
    objective: Objective,
    graphs: &[Graph],
    values: Vec<Option<u64>>,
    started: Instant,
) -> SearchReport {
    let qualifying = values.iter().flatten().count();
    let min_value = values.iter().flatten().min().copied();
    let winners: Vec<&Graph> = graphs
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_some() && **v == min_value)
        .map(|(g, _)| g)
        .collect();
    let witness_partitions: Vec<_> = winners.iter().map(|g| g.as_clique_union()).collect();
    SearchReport {
        params,
        objective,
        scanned: graphs.len(),
        qualifying,
        min_value,
        witnesses: winners.iter().map(|g| graph6::encode(g)).collect(),
        conjecture_holds: witness_partitions.iter().all(Option::is_some),
        witness_partitions,
        reference: None,
        reference_agrees: None,
        elapsed: started.elapsed(),
    }
}

fn sorted_partitions(report: &SearchReport) -> Option<Vec<CliqueUnion>> {
    let mut parts: Vec<CliqueUnion> = report
        .witness_partitions
        .iter()
        .cloned()
        .collect::<Option<_>>()?;
    parts.sort();
    Some(parts)
}

impl Catalog {
    pub fn build(n: usize, cfg: &SearchConfig) -> Result<Self> {
        check_cap(n, cfg)?;
        let pool = cfg.pool()?;
        let graphs = enumerate_with(n, &pool, cfg.progress);
        Ok(Catalog { n, graphs, pool })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    fn map<T: Send>(&self, f: impl Fn(&Graph) -> T + Sync + Send) -> Vec<T> {
        self.pool
            .install(|| self.graphs.par_iter().map(f).collect())
    }

    fn params(&self, k: usize, t: usize) -> Result<NktParams> {
        NktParams::new(self.n, k, t)
    }

    /// Least edge count over (n,k,t)-graphs, compared against the closed
    /// form: the values must match and the optimal classes must be exactly
    /// the predicted clique unions.
    pub fn verify_strong_conjecture(&self, k: usize, t: usize) -> Result<SearchReport> {
        let started = Instant::now();
        let params = self.params(k, t)?;
        let values = self.map(|g| is_nkt(g, k, t).then(|| g.edge_count()));
        let mut report = objective_report(params, Objective::Edges, &self.graphs, values, started);
        let predicted = min_nkt(self.n, k, t).ok();
        report.reference = predicted.as_ref().map(|rec| rec.min_edges);
        report.reference_agrees = Some(match (&predicted, report.min_value) {
            (None, None) => true,
            (Some(rec), Some(v)) => {
                v == rec.min_edges && sorted_partitions(&report).as_ref() == Some(&rec.minimizers)
            }
            _ => false,
        });
        report.elapsed = started.elapsed();
        Ok(report)
    }

    /// As [`Catalog::verify_strong_conjecture`], restricted to graphs with
    /// independence number `r`.
    pub fn verify_mainthm(&self, k: usize, t: usize, r: usize) -> Result<SearchReport> {
        let started = Instant::now();
        let params = self.params(k, t)?.with_r(r)?;
        let values =
            self.map(|g| (is_nkt(g, k, t) && g.independence_number() == r).then(|| g.edge_count()));
        let mut report = objective_report(params, Objective::Edges, &self.graphs, values, started);
        let predicted = min_nktr(self.n, k, t, r).ok();
        report.reference = predicted.as_ref().map(|rec| rec.min_edges);
        report.reference_agrees = Some(match (&predicted, report.min_value) {
            (None, None) => true,
            (Some(rec), Some(v)) => {
                v == rec.min_edges && sorted_partitions(&report).as_ref() == Some(&rec.minimizers)
            }
            _ => false,
        });
        report.elapsed = started.elapsed();
        Ok(report)
    }

    /// Least number of `K_s` over (n,k,t)-graphs.
    ///
    /// The reference is `C(n-k+t, s)` when `s ≥ 2`, `n ≥ k ≥ t ≥ 3` and
    /// `k ≤ 2t - 2` (such graphs must contain `K_{n-k+t}`), the minimum
    /// edge count when `s = 2`, and `n` when `s = 1`.
    pub fn min_clique_count(&self, k: usize, t: usize, s: usize) -> Result<SearchReport> {
        let started = Instant::now();
        if s == 0 {
            return Err(NktError::InvalidInput(
                "clique size s must be positive".into(),
            ));
        }
        let params = self.params(k, t)?;
        let values = self.map(|g| is_nkt(g, k, t).then(|| g.count_cliques(s)));
        let mut report = objective_report(
            params,
            Objective::Cliques { s },
            &self.graphs,
            values,
            started,
        );
        let n = self.n;
        report.reference = if s == 1 {
            Some(n as u64)
        } else if n >= k && k >= t && t >= 3 && k + 2 <= 2 * t {
            Some(binomial((n - k + t) as u64, s as u64))
        } else if s == 2 {
            min_nkt(n, k, t).ok().map(|rec| rec.min_edges)
        } else {
            None
        };
        report.reference_agrees = report.reference.map(|v| Some(v) == report.min_value);
        report.elapsed = started.elapsed();
        Ok(report)
    }

    /// Classes that are (n,k,t)-graphs but stop being so when any single
    /// edge is deleted. Edgeless members count as minimal.
    pub fn inclusion_minimal(&self, k: usize, t: usize) -> Result<SaturationReport> {
        let started = Instant::now();
        let params = self.params(k, t)?;
        let flags = self.map(|g| {
            let member = is_nkt(g, k, t);
            let minimal = member && g.edges().all(|(u, v)| !is_nkt(&g.without_edge(u, v), k, t));
            (member, minimal)
        });
        let minimal_graphs: Vec<MinimalGraph> = self
            .graphs
            .iter()
            .zip(&flags)
            .filter(|(_, (_, minimal))| *minimal)
            .map(|(g, _)| MinimalGraph {
                graph6: graph6::encode(g),
                edges: g.edge_count(),
                partition: g.as_clique_union(),
            })
            .collect();
        let max_edges = minimal_graphs.iter().map(|m| m.edges).max();
        let max_witnesses = minimal_graphs
            .iter()
            .filter(|m| Some(m.edges) == max_edges)
            .map(|m| m.graph6.clone())
            .collect();
        Ok(SaturationReport {
            params,
            scanned: self.graphs.len(),
            qualifying: flags.iter().filter(|(member, _)| *member).count(),
            minimal_graphs,
            max_edges,
            max_witnesses,
            elapsed: started.elapsed(),
        })
    }
}

fn with_catalog<T>(
    n: usize,
    cfg: &SearchConfig,
    f: impl FnOnce(&Catalog) -> Result<T>,
) -> Result<(T, Duration)> {
    let started = Instant::now();
    let catalog = Catalog::build(n, cfg)?;
    let out = f(&catalog)?;
    Ok((out, started.elapsed()))
}

pub fn verify_strong_conjecture(
    n: usize,
    k: usize,
    t: usize,
    cfg: &SearchConfig,
) -> Result<SearchReport> {
    let (mut rep, elapsed) = with_catalog(n, cfg, |c| c.verify_strong_conjecture(k, t))?;
    rep.elapsed = elapsed;
    Ok(rep)
}

pub fn verify_mainthm(
    n: usize,
    k: usize,
    t: usize,
    r: usize,
    cfg: &SearchConfig,
) -> Result<SearchReport> {
    let (mut rep, elapsed) = with_catalog(n, cfg, |c| c.verify_mainthm(k, t, r))?;
    rep.elapsed = elapsed;
    Ok(rep)
}

pub fn min_clique_count(
    n: usize,
    k: usize,
    t: usize,
    s: usize,
    cfg: &SearchConfig,
) -> Result<SearchReport> {
    let (mut rep, elapsed) = with_catalog(n, cfg, |c| c.min_clique_count(k, t, s))?;
    rep.elapsed = elapsed;
    Ok(rep)
}

pub fn inclusion_minimal(
    n: usize,
    k: usize,
    t: usize,
    cfg: &SearchConfig,
) -> Result<SaturationReport> {
    let (mut rep, elapsed) = with_catalog(n, cfg, |c| c.inclusion_minimal(k, t))?;
    rep.elapsed = elapsed;
    Ok(rep)
}

/// `K_4` counts of the blowup of `C_5` against two disjoint halves.
///
/// In the blowup every clique lies inside two consecutive blobs, so the
/// count is `5·C(2m, 4) − 5·C(m, 4)` for blob size `m`; the realized graph
/// is counted directly when it fits in 32 vertices.
pub fn nikiforov_compare(n: usize) -> Result<NikiforovComparison> {
    if n == 0 || !n.is_multiple_of(10) {
        return Err(NktError::InvalidInput(format!(
            "n must be a positive multiple of 10, got {n}"
        )));
    }
    let blob = n / 5;
    let split_k4 = 2 * binomial((n / 2) as u64, 4);
    let (blowup_k4, explicit, blowup_is_n32) = if n <= MAX_VERTICES {
        let g = Graph::cycle(5)?.blowup(blob)?;
        (g.count_cliques(4), true, Some(is_nkt(&g, 3, 2)))
    } else {
        let m = blob as u64;
        (5 * binomial(2 * m, 4) - 5 * binomial(m, 4), false, None)
    };
    Ok(NikiforovComparison {
        n,
        blob,
        blowup_k4,
        split_k4,
        explicit,
        blowup_is_n32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SearchConfig {
        SearchConfig::with_jobs(2)
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_nonisomorphic(n, &cfg()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_nonisomorphic(8, &cfg()),
            Err(NktError::UnsupportedSize { limit: 7, .. })
        ));
        let open = SearchConfig {
            allow_n8: true,
            ..cfg()
        };
        assert!(matches!(
            enumerate_nonisomorphic(9, &open),
            Err(NktError::UnsupportedSize { limit: 8, .. })
        ));
        assert!(enumerate_nonisomorphic(0, &cfg()).is_err());
    }

    #[test]
    fn turan_instance() {
        let rep = verify_strong_conjecture(5, 3, 2, &cfg()).unwrap();
        assert_eq!(rep.min_value, Some(4));
        assert_eq!(rep.witness_partitions, vec![Some("3+2".parse().unwrap())]);
        assert!(rep.conjecture_holds);
        assert_eq!(rep.reference_agrees, Some(true));
    }

    #[test]
    fn n_equals_k_instance() {
        let rep = verify_strong_conjecture(7, 7, 3, &cfg()).unwrap();
        assert_eq!(rep.min_value, Some(3));
        assert_eq!(
            rep.witness_partitions,
            vec![Some("3+1+1+1+1".parse().unwrap())]
        );
    }

    #[test]
    fn mainthm_instances() {
        let rep = verify_mainthm(6, 4, 2, 3, &cfg()).unwrap();
        assert_eq!(rep.min_value, Some(3));
        assert_eq!(rep.witness_partitions, vec![Some("2+2+2".parse().unwrap())]);
        assert_eq!(rep.reference_agrees, Some(true));

        let rep = verify_mainthm(6, 4, 2, 4, &cfg()).unwrap();
        assert_eq!(rep.qualifying, 0);
        assert!(rep.conjecture_holds);
        assert_eq!(rep.reference_agrees, Some(true));
    }

    #[test]
    fn clique_count_instances() {
        let rep = min_clique_count(6, 4, 3, 3, &cfg()).unwrap();
        assert_eq!(rep.min_value, Some(10));
        assert_eq!(rep.reference_agrees, Some(true));
        let rep = min_clique_count(5, 3, 3, 4, &cfg()).unwrap();
        assert_eq!(rep.min_value, Some(5));
        let rep = min_clique_count(6, 4, 2, 2, &cfg()).unwrap();
        assert_eq!(rep.min_value, min_nkt(6, 4, 2).ok().map(|r| r.min_edges));
        assert!(min_clique_count(5, 3, 3, 0, &cfg()).is_err());
    }

    #[test]
    fn saturation_c5() {
        let rep = inclusion_minimal(5, 3, 2, &cfg()).unwrap();
        let c5 = graph6::encode(&crate::canon::canonical_form(&Graph::cycle(5).unwrap()).unwrap());
        assert!(rep
            .minimal_graphs
            .iter()
            .any(|m| m.graph6 == c5 && m.edges == 5));
        assert_eq!(rep.max_edges, Some(6));
        let k1k4 = graph6::encode(
            &crate::canon::canonical_form(
                &"4+1".parse::<CliqueUnion>().unwrap().realize().unwrap(),
            )
            .unwrap(),
        );
        assert_eq!(rep.max_witnesses, vec![k1k4]);
    }

    #[test]
    fn nikiforov_counts() {
        let c = nikiforov_compare(10).unwrap();
        assert_eq!((c.blowup_k4, c.split_k4), (5, 10));
        assert_eq!(c.blowup_is_n32, Some(true));
        for n in [20, 30] {
            let c = nikiforov_compare(n).unwrap();
            let m = (n / 5) as u64;
            assert_eq!(c.blowup_k4, 5 * binomial(2 * m, 4) - 5 * binomial(m, 4));
            assert!(c.blowup_k4 < c.split_k4);
        }
        let far = nikiforov_compare(100).unwrap();
        assert!(!far.explicit && far.blowup_k4 < far.split_k4);
        assert!(nikiforov_compare(15).is_err());
        assert!(nikiforov_compare(0).is_err());
    }
}
