//! Membership tests for (n,k,t)- and (n,k,t,r)-graphs.
//!
//! A graph is (n,k,t) exactly when its largest `K_t`-free vertex set has at
//! most `k - 1` vertices, so membership reduces to one maximization instead
//! of a sweep over all `C(n, k)` subsets. The sweep is kept as
//! [`is_nkt_oracle`] for cross-checking.

use crate::error::{NktError, Result};
use crate::graph::{bit, first_n, members, size, Graph, VertexSet};

fn check_positive(k: usize, t: usize) {
    assert!(
        k >= 1 && t >= 1,
        "k and t must be positive (got k={k}, t={t})"
    );
}

/// Subset-enumeration definition: every `k`-set induces a `K_t`.
///
/// Vacuously true when `k > n`. Panics if `k` or `t` is zero.
pub fn is_nkt_oracle(g: &Graph, k: usize, t: usize) -> bool {
    check_positive(k, t);
    let n = g.n();
    if k > n {
        return true;
    }
    // Gosper's hack over k-subsets of the n vertices.
    let limit = 1u64 << n;
    let mut set = (1u64 << k) - 1;
    while set < limit {
        if !g.contains_clique(set as VertexSet, t) {
            return false;
        }
        let low = set & set.wrapping_neg();
        let ripple = set + low;
        set = (((ripple ^ set) >> 2) / low) | ripple;
    }
    true
}

/// A largest vertex set inducing no `K_t`.
///
/// Clique unions use the closed form (all of every clique smaller than `t`,
/// `t - 1` vertices of each other clique); everything else goes through
/// [`max_kt_free_set_search`]. Panics if `t` is zero.
pub fn max_kt_free_set(g: &Graph, t: usize) -> VertexSet {
    check_positive(1, t);
    if g.as_clique_union().is_some() {
        kt_free_set_of_union(g, t)
    } else {
        max_kt_free_set_search(g, t)
    }
}

pub fn max_kt_free_size(g: &Graph, t: usize) -> usize {
    size(max_kt_free_set(g, t))
}

fn kt_free_set_of_union(g: &Graph, t: usize) -> VertexSet {
    g.components()
        .into_iter()
        .map(|c| {
            if size(c) < t {
                c
            } else {
                members(c).take(t - 1).fold(0, |acc, v| acc | bit(v))
            }
        })
        .fold(0, |acc, c| acc | c)
}

/// Branch and bound for a largest `K_t`-free set, valid on any graph.
///
/// Each node finds a `K_t` among the surviving vertices; some vertex of it
/// must go, so the node branches on which one, pinning the earlier choices
/// as kept. A greedy packing of vertex-disjoint `K_t`s bounds how many
/// vertices must still be removed.
pub fn max_kt_free_set_search(g: &Graph, t: usize) -> VertexSet {
    check_positive(1, t);
    let mut best = 0;
    kt_free_branch(g, t, g.vertices(), 0, &mut best);
    best
}

fn kt_free_branch(g: &Graph, t: usize, alive: VertexSet, kept: VertexSet, best: &mut VertexSet) {
    if size(alive) <= size(*best) {
        return;
    }
    let Some(clique) = g.find_clique(alive, t) else {
        *best = alive;
        return;
    };
    let mut must_remove = 1;
    let mut rest = alive & !clique;
    while let Some(c) = g.find_clique(rest, t) {
        must_remove += 1;
        rest &= !c;
    }
    if size(alive) - must_remove <= size(*best) {
        return;
    }
    let mut kept = kept;
    for v in members(clique & !kept) {
        kt_free_branch(g, t, alive & !bit(v), kept, best);
        kept |= bit(v);
        if g.contains_clique(kept, t) {
            break;
        }
    }
}

/// Whether `g` is an (n,k,t)-graph, `n = g.n()`.
///
/// Panics if `k` or `t` is zero.
pub fn is_nkt(g: &Graph, k: usize, t: usize) -> bool {
    check_positive(k, t);
    if k > g.n() {
        return true;
    }
    max_kt_free_size(g, t) < k
}

/// (n,k,t)-graph with independence number exactly `r`.
pub fn is_nktr(g: &Graph, k: usize, t: usize, r: usize) -> bool {
    r >= 1 && is_nkt(g, k, t) && g.independence_number() == r
}

/// Outcome of a membership test together with its evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The largest `K_t`-free set has at most `k - 1` vertices.
    Member { kt_free_size: usize },
    /// A `k`-set inducing no `K_t`.
    Violation { witness: Vec<usize> },
}

pub fn certify_nkt(g: &Graph, k: usize, t: usize) -> Certificate {
    check_positive(k, t);
    let free = max_kt_free_set(g, t);
    if k > g.n() || size(free) < k {
        Certificate::Member {
            kt_free_size: size(free),
        }
    } else {
        Certificate::Violation {
            witness: members(free).take(k).collect(),
        }
    }
}

/// `G - S` for an independent set `S`.
pub fn remove_independent_set(g: &Graph, s: VertexSet) -> Result<Graph> {
    if s & !first_n(g.n()) != 0 {
        return Err(NktError::InvalidInput(
            "vertex set has members outside the graph".into(),
        ));
    }
    if !g.is_independent(s) {
        return Err(NktError::InvalidInput(
            "vertex set is not independent".into(),
        ));
    }
    Ok(g.induced(!s))
}
