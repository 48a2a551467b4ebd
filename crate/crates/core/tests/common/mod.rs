//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the optimized paths of the library except plain graph accessors.

#![allow(dead_code)]

use nkt_core::{CliqueUnion, Graph};
use proptest::prelude::*;

pub fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

pub fn is_clique_brute(g: &Graph, set: u32) -> bool {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| set >> v & 1 == 1).collect();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub fn alpha_brute(g: &Graph) -> usize {
    let c = g.complement();
    subsets(g.n())
        .filter(|&s| is_clique_brute(&c, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn clique_count_brute(g: &Graph, s: usize) -> u64 {
    subsets(g.n())
        .filter(|&set| set.count_ones() as usize == s && is_clique_brute(g, set))
        .count() as u64
}

fn has_kt_brute(g: &Graph, within: u32, t: usize) -> bool {
    subsets(g.n())
        .any(|s| s & !within == 0 && s.count_ones() as usize == t && is_clique_brute(g, s))
}

/// Every `k`-subset contains a `K_t`, checked subset by subset.
pub fn is_nkt_brute(g: &Graph, k: usize, t: usize) -> bool {
    subsets(g.n())
        .filter(|s| s.count_ones() as usize == k)
        .all(|s| has_kt_brute(g, s, t))
}

/// All partitions of `n` as descending part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn edges_of(parts: &[usize]) -> u64 {
    parts
        .iter()
        .map(|&p| (p * p.saturating_sub(1) / 2) as u64)
        .sum()
}

/// Minimum edge count and sorted optimal partitions among clique unions on
/// `n` vertices passing `keep`.
pub fn brute_partition_min(
    n: usize,
    keep: impl Fn(&[usize]) -> bool,
) -> Option<(u64, Vec<CliqueUnion>)> {
    let ok: Vec<Vec<usize>> = partitions(n).into_iter().filter(|p| keep(p)).collect();
    let best = ok.iter().map(|p| edges_of(p)).min()?;
    let mut mins: Vec<CliqueUnion> = ok
        .into_iter()
        .filter(|p| edges_of(p) == best)
        .map(CliqueUnion::from_parts)
        .collect();
    mins.sort();
    Some((best, mins))
}

/// Membership of a clique union, decided by realizing it and sweeping subsets.
pub fn union_is_nkt_brute(parts: &[usize], k: usize, t: usize) -> bool {
    let g = CliqueUnion::from_parts(parts.to_vec()).realize().unwrap();
    if k > g.n() {
        return true;
    }
    is_nkt_brute(&g, k, t)
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn arb_union(max_n: usize) -> impl Strategy<Value = CliqueUnion> {
    proptest::collection::vec(1..=max_n, 1..=max_n)
        .prop_filter_map("too many vertices", move |parts| {
            (parts.iter().sum::<usize>() <= max_n).then(|| CliqueUnion::from_parts(parts))
        })
}
