//! Canonical labeling for small graphs.
//!
//! The canonical form is the relabeling whose upper-triangle bit string
//! (column-major, the graph6 order) is lexicographically smallest among all
//! relabelings that list vertices by a refined degree invariant. Vertices
//! are placed one position at a time and a partial string already larger
//! than the incumbent is abandoned.

use serde::Serialize;

use crate::error::{NktError, Result};
use crate::graph::{bit, members, Graph, VertexSet};

pub const MAX_CANON_VERTICES: usize = 10;

/// Identifies an isomorphism class: the vertex count together with the
/// minimal adjacency bit string (at most 45 bits for 10 vertices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalKey {
    n: u8,
    code: u64,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn to_bytes(&self) -> [u8; 9] {
        let mut out = [0u8; 9];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.code.to_be_bytes());
        out
    }

    /// The canonical representative of the class.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let m = n * n.saturating_sub(1) / 2;
        let mut rows = [0 as VertexSet; MAX_CANON_VERTICES];
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.code >> (m - 1 - idx)) & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                idx += 1;
            }
        }
        Graph::from_rows(n, &rows)
    }
}

/// Isomorphism-invariant vertex label: degree, then how many neighbors have
/// each degree. Packed as hex digits, so it fits for `n ≤ 10`.
fn vertex_invariant(g: &Graph, v: usize) -> u64 {
    let n = g.n();
    let mut hist = [0u64; MAX_CANON_VERTICES];
    for u in members(g.neighbors(v)) {
        hist[g.degree(u)] += 1;
    }
    let mut inv = g.degree(v) as u64;
    for h in &hist[..n] {
        inv = (inv << 4) | h;
    }
    inv
}

struct Search<'a> {
    g: &'a Graph,
    /// `cell_of[p]` = vertices allowed at position `p`.
    cell_of: Vec<VertexSet>,
    total_bits: usize,
    perm: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, used: VertexSet, prefix: u64) {
        let n = self.g.n();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let bits_after = pos * (pos + 1) / 2;
        for v in members(self.cell_of[pos] & !used) {
            let mut column = 0u64;
            for (i, &u) in self.perm[..pos].iter().enumerate() {
                if self.g.has_edge(u, v) {
                    column |= 1 << (pos - 1 - i);
                }
            }
            let next = (prefix << pos) | column;
            if let Some((b, _)) = &self.best {
                if next > b >> (self.total_bits - bits_after) {
                    continue;
                }
            }
            self.perm.push(v);
            self.run(pos + 1, used | bit(v), next);
            self.perm.pop();
        }
    }
}

/// The canonical relabeling: `perm[i]` is the original vertex placed at
/// position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(NktError::UnsupportedSize {
            what: "canonical form vertex count",
            got: n,
            limit: MAX_CANON_VERTICES,
        });
    }
    let mut order: Vec<(u64, usize)> = (0..n).map(|v| (vertex_invariant(g, v), v)).collect();
    order.sort_unstable_by_key(|e| std::cmp::Reverse(e.0));
    let mut cell_of = vec![0; n];
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end < n && order[end].0 == order[start].0 {
            end += 1;
        }
        let cell = order[start..end]
            .iter()
            .fold(0, |acc, &(_, v)| acc | bit(v));
        cell_of[start..end].fill(cell);
        start = end;
    }
    let mut search = Search {
        g,
        cell_of,
        total_bits: n * n.saturating_sub(1) / 2,
        perm: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0, 0);
    let (code, perm) = search.best.expect("at least one labeling exists");
    Ok((CanonicalKey { n: n as u8, code }, perm))
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_labeling(g).map(|(k, _)| k)
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    canonical_key(g).map(|k| k.graph())
}
