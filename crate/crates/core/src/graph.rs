//! Bit-row adjacency graphs on at most 32 vertices.
//!
//! Every neighbor set is a single `u32`, so clique, independence and
//! component computations run word-parallel.

use std::fmt;

use crate::error::{NktError, Result};
use crate::union::CliqueUnion;

pub const MAX_VERTICES: usize = 32;

/// A set of vertices, bit `v` standing for vertex `v`.
pub type VertexSet = u32;

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1 << v
}

/// Vertices strictly above `v`.
#[inline]
pub(crate) fn above(v: usize) -> VertexSet {
    u32::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

#[inline]
pub(crate) fn first_n(n: usize) -> VertexSet {
    if n >= MAX_VERTICES {
        u32::MAX
    } else {
        (1 << n) - 1
    }
}

/// Iterates the members of a vertex set in ascending order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn size(set: VertexSet) -> usize {
    set.count_ones() as usize
}

/// Simple undirected graph on `n ≤ 32` labeled vertices.
///
/// `adj[v]` is the neighbor set of `v`; rows are symmetric, the diagonal is
/// empty and bits at positions `≥ n` are clear.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [VertexSet; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` is permitted here so that
    /// vertex deletion can reach the null graph.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(NktError::UnsupportedSize {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from an edge list; duplicates collapse and each pair
    /// is symmetrized.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(NktError::InvalidInput(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(NktError::InvalidInput(format!(
                    "edge ({u},{v}) has a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(NktError::InvalidInput(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = first_n(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(NktError::InvalidInput(format!(
                "a cycle needs 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Assembles a graph from raw rows. Callers guarantee the invariants.
    pub(crate) fn from_rows(n: usize, rows: &[VertexSet]) -> Self {
        let mut adj = [0; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        let g = Graph { n, adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// The same graph with edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = *self;
        if u < self.n && v < self.n {
            g.delete_edge(u, v);
        }
        g
    }

    fn is_well_formed(&self) -> bool {
        let all = first_n(self.n);
        (0..MAX_VERTICES).all(|v| {
            if v >= self.n {
                return self.adj[v] == 0;
            }
            let row = self.adj[v];
            row & !all == 0 && row & bit(v) == 0 && members(row).all(|u| self.adj[u] & bit(v) != 0)
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        first_n(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        size(self.adj[v])
    }

    pub fn edge_count(&self) -> u64 {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as u64)
            .sum::<u64>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| members(self.adj[u] & above(u)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !bit(v);
        }
        g
    }

    /// Subgraph induced by `keep`, relabeled so surviving vertices keep their
    /// relative order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep & self.vertices();
        let old: Vec<usize> = members(keep).collect();
        let mut g = Graph {
            n: old.len(),
            adj: [0; MAX_VERTICES],
        };
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    g.adj[i] |= bit(j);
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `perm[i]` becomes vertex `i`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = 0;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(NktError::InvalidInput(
                    "relabeling is not a permutation".into(),
                ));
            }
            seen |= bit(p);
        }
        if perm.len() != self.n {
            return Err(NktError::InvalidInput(
                "relabeling has the wrong length".into(),
            ));
        }
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &p) in perm.iter().enumerate() {
            pos[p] = i;
        }
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (i, &p) in perm.iter().enumerate() {
            g.adj[i] = members(self.adj[p]).fold(0, |acc, u| acc | bit(pos[u]));
        }
        Ok(g)
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|v| (self.adj[v] | bit(v)) & set == set)
    }

    /// A maximum independent set, by branch and bound: branch on a vertex of
    /// maximum degree among the candidates (take it, or drop it), and cut
    /// when the candidates cannot beat the incumbent.
    pub fn max_independent_set(&self) -> VertexSet {
        let mut best = 0;
        self.mis_branch(self.vertices(), 0, &mut best);
        best
    }

    fn mis_branch(&self, mut cand: VertexSet, mut chosen: VertexSet, best: &mut VertexSet) {
        loop {
            if size(chosen) + size(cand) <= size(*best) {
                return;
            }
            if cand == 0 {
                *best = chosen;
                return;
            }
            // Vertices of degree ≤ 1 within the candidates belong to some
            // maximum independent set; take them without branching.
            let mut pivot = usize::MAX;
            let mut pivot_deg = 0;
            let mut forced = None;
            for v in members(cand) {
                let d = size(self.adj[v] & cand);
                if d <= 1 {
                    forced = Some(v);
                    break;
                }
                if d > pivot_deg {
                    pivot_deg = d;
                    pivot = v;
                }
            }
            if let Some(v) = forced {
                chosen |= bit(v);
                cand &= !(self.adj[v] | bit(v));
                continue;
            }
            self.mis_branch(
                cand & !(self.adj[pivot] | bit(pivot)),
                chosen | bit(pivot),
                best,
            );
            cand &= !bit(pivot);
        }
    }

    pub fn independence_number(&self) -> usize {
        size(self.max_independent_set())
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let reach = members(frontier).fold(0, |acc, v| acc | self.adj[v]);
                frontier = reach & !comp;
                comp |= reach;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// The clique sizes when every component is complete, `None` otherwise.
    pub fn as_clique_union(&self) -> Option<CliqueUnion> {
        let comps = self.components();
        if comps.iter().all(|&c| self.is_clique(c)) {
            Some(CliqueUnion::from_parts(
                comps.iter().map(|&c| size(c)).collect(),
            ))
        } else {
            None
        }
    }

    /// Some `t`-clique inside `within`, if one exists.
    pub fn find_clique(&self, within: VertexSet, t: usize) -> Option<VertexSet> {
        let within = within & self.vertices();
        if t == 0 {
            return Some(0);
        }
        self.find_clique_rec(within, t, 0)
    }

    fn find_clique_rec(&self, cand: VertexSet, t: usize, acc: VertexSet) -> Option<VertexSet> {
        if t == 1 {
            return (cand != 0).then(|| acc | (cand & cand.wrapping_neg()));
        }
        for v in members(cand) {
            let rest = cand & self.adj[v] & above(v);
            if size(rest) + 1 < t {
                continue;
            }
            if let Some(c) = self.find_clique_rec(rest, t - 1, acc | bit(v)) {
                return Some(c);
            }
        }
        None
    }

    pub fn contains_clique(&self, within: VertexSet, t: usize) -> bool {
        self.find_clique(within, t).is_some()
    }

    /// Number of `s`-vertex complete subgraphs. The empty clique is counted
    /// once for `s = 0`.
    pub fn count_cliques(&self, s: usize) -> u64 {
        if s == 0 {
            return 1;
        }
        self.count_cliques_in(self.vertices(), s)
    }

    fn count_cliques_in(&self, cand: VertexSet, s: usize) -> u64 {
        if s == 1 {
            return size(cand) as u64;
        }
        members(cand)
            .map(|v| {
                let rest = cand & self.adj[v] & above(v);
                if size(rest) + 1 < s {
                    0
                } else {
                    self.count_cliques_in(rest, s - 1)
                }
            })
            .sum()
    }

    /// Replaces every vertex by an `m`-clique; blobs of adjacent vertices are
    /// completely joined.
    pub fn blowup(&self, m: usize) -> Result<Graph> {
        if m == 0 {
            return Err(NktError::InvalidInput("blob size must be positive".into()));
        }
        let total = self.n.saturating_mul(m);
        if total > MAX_VERTICES {
            return Err(NktError::UnsupportedSize {
                what: "blowup vertex count",
                got: total,
                limit: MAX_VERTICES,
            });
        }
        let blob = |v: usize| first_n(m) << (v * m);
        let mut g = Graph::empty(total)?;
        for v in 0..self.n {
            let row = members(self.adj[v]).fold(blob(v), |acc, u| acc | blob(u));
            for x in v * m..(v + 1) * m {
                g.adj[x] = row & !bit(x);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_alpha(g: &Graph) -> usize {
        (0..=g.vertices())
            .filter(|&s| g.is_independent(s))
            .map(size)
            .max()
            .unwrap()
    }

    fn brute_cliques(g: &Graph, s: usize) -> u64 {
        (0..=g.vertices())
            .filter(|&x| size(x) == s && g.is_clique(x))
            .count() as u64
    }

    #[test]
    fn build_small_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(Graph::from_edges(3, &[]).unwrap().edge_count(), 0);
        let all: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let k4 = Graph::from_edges(4, &all).unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn duplicate_and_reversed_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(NktError::InvalidInput(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(NktError::InvalidInput(_))
        ));
        assert!(Graph::from_edges(0, &[]).is_err());
        assert!(matches!(
            Graph::from_edges(33, &[]),
            Err(NktError::UnsupportedSize { .. })
        ));
        assert!(Graph::from_edges(32, &[(0, 31)]).is_ok());
    }

    #[test]
    fn complement_cases() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        let cc5 = c5.complement();
        assert_eq!(cc5.edge_count(), 5);
        assert!(cc5.rows().iter().all(|r| r.count_ones() == 2));
        assert_eq!(cc5.components().len(), 1);
        assert_eq!(cc5.complement(), c5);
        let full = Graph::complete(32).unwrap();
        assert_eq!(full.complement().edge_count(), 0);
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(Graph::complete(7).unwrap().independence_number(), 1);
        assert_eq!(Graph::cycle(5).unwrap().independence_number(), 2);
        assert_eq!(Graph::empty(6).unwrap().independence_number(), 6);
        assert_eq!(Graph::empty(0).unwrap().independence_number(), 0);
        for n in 3..=12 {
            let c = Graph::cycle(n).unwrap();
            assert_eq!(c.independence_number(), n / 2);
            assert_eq!(brute_alpha(&c), n / 2);
        }
    }

    #[test]
    fn components_and_clique_unions() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00011, 0b11100]);
        assert_eq!(g.as_clique_union().unwrap().parts(), &[3, 2]);
        assert_eq!(Graph::complete(6).unwrap().components().len(), 1);
        assert_eq!(Graph::empty(6).unwrap().components().len(), 6);
        assert!(Graph::cycle(5).unwrap().as_clique_union().is_none());
        assert!(Graph::path(3).unwrap().as_clique_union().is_none());
    }

    #[test]
    fn clique_counts() {
        assert_eq!(Graph::complete(5).unwrap().count_cliques(3), 10);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.count_cliques(2), 5);
        assert_eq!(c5.count_cliques(3), 0);
        let b = c5.blowup(2).unwrap();
        assert_eq!(b.count_cliques(4), brute_cliques(&b, 4));
        assert_eq!(b.count_cliques(4), 5);
    }

    #[test]
    fn blowup_cases() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.blowup(4).unwrap(), Graph::complete(4).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.blowup(1).unwrap(), c5);
        let b = c5.blowup(2).unwrap();
        assert_eq!(b.n(), 10);
        assert_eq!(b.independence_number(), 2);
        assert!(c5.blowup(7).is_err());
        assert!(c5.blowup(0).is_err());
        assert_eq!(c5.blowup(6).unwrap().n(), 30);
    }

    #[test]
    fn blowup_keeps_independence_number() {
        let graphs = [
            Graph::cycle(5).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::path(3).unwrap(),
        ];
        for g in &graphs {
            for m in 1..=3 {
                assert_eq!(
                    g.blowup(m).unwrap().independence_number(),
                    g.independence_number()
                );
            }
        }
    }

    #[test]
    fn induced_and_relabel() {
        let p4 = Graph::path(4).unwrap();
        let sub = p4.induced(0b1011);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let r = p4.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(r, p4);
        assert!(p4.relabel(&[0, 0, 1, 2]).is_err());
    }
}
