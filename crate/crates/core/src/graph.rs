//! Bipartite view of two-prime product sets.
//!
//! An element `p*q` of a `P·Q` set is the edge `(p, q)` between the small
//! prime `p` and the large prime `q`. Because `P` and `Q` are disjoint, a
//! product `ab = cd` among such edges with `{a, b} != {c, d}` forces
//! `{a, b, c, d} = {pq, p'q', p'q, pq'}` with `p != p'` and `q != q'`; the
//! degenerate cases `p = p'` or `q = q'` collapse to trivial solutions by
//! unique factorisation. So an edge set is multiplicatively Sidon exactly
//! when it contains no 4-cycle.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{AuditCheck, AuditReport, Num};
use crate::sets::GroundSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductGraph {
    left: Vec<u64>,
    right: Vec<u64>,
    edges: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct C4Witness {
    pub p: u64,
    pub p2: u64,
    pub q: u64,
    pub q2: u64,
}

impl C4Witness {
    /// The four edge labels `pq, pq', p'q, p'q'`.
    pub fn labels(&self) -> [u64; 4] {
        [
            self.p * self.q,
            self.p * self.q2,
            self.p2 * self.q,
            self.p2 * self.q2,
        ]
    }
}

impl ProductGraph {
    /// Validates that the parts are disjoint and every edge joins them.
    pub fn new(mut left: Vec<u64>, mut right: Vec<u64>, mut edges: Vec<(u64, u64)>) -> Result<Self> {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        if let Some(x) = left.iter().find(|x| right.binary_search(x).is_ok()) {
            return Err(Error::InvalidSet(format!("vertex {x} is on both sides")));
        }
        edges.sort_unstable();
        edges.dedup();
        for &(p, q) in &edges {
            if left.binary_search(&p).is_err() || right.binary_search(&q).is_err() {
                return Err(Error::InvalidSet(format!("edge ({p}, {q}) leaves the parts")));
            }
        }
        Ok(ProductGraph { left, right, edges })
    }

    pub fn left(&self) -> &[u64] {
        &self.left
    }

    pub fn right(&self) -> &[u64] {
        &self.right
    }

    pub fn edges(&self) -> &[(u64, u64)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.edges.iter().map(|&(p, q)| p * q).collect();
        v.sort_unstable();
        v
    }

    pub fn to_text(&self) -> String {
        let join = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        let mut s = format!("P: {}\nQ: {}\n", join(&self.left), join(&self.right));
        for (p, q) in &self.edges {
            let _ = writeln!(s, "{p} {q}");
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<ProductGraph> {
        let mut left = None;
        let mut right = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            let nums = |s: &str| -> Result<Vec<u64>> {
                s.split_whitespace()
                    .map(|w| w.parse::<u64>().map_err(|e| err(format!("{w:?}: {e}"))))
                    .collect()
            };
            if line.is_empty() || line.starts_with('#') {
                continue;
            } else if let Some(rest) = line.strip_prefix("P:") {
                left = Some(nums(rest)?);
            } else if let Some(rest) = line.strip_prefix("Q:") {
                right = Some(nums(rest)?);
            } else {
                match nums(line)?.as_slice() {
                    [p, q] => edges.push((*p, *q)),
                    _ => return Err(err("expected `p q`".into())),
                }
            }
        }
        let left = left.ok_or_else(|| Error::Parse { line: 0, msg: "missing `P:` header".into() })?;
        let right = right.ok_or_else(|| Error::Parse { line: 0, msg: "missing `Q:` header".into() })?;
        ProductGraph::new(left, right, edges)
    }
}

/// Graph of a two-prime labelled set. `P` and `Q` are taken from the whole
/// ground set; the edges from `subset` when given, else from every element.
pub fn graph_from_pq(a: &GroundSet, subset: Option<&[u64]>) -> Result<ProductGraph> {
    let (left, right) = a.pq_parts()?;
    let chosen: Vec<u64> = match subset {
        Some(s) => s.to_vec(),
        None => a.elements().to_vec(),
    };
    let mut edges = Vec::with_capacity(chosen.len());
    for x in chosen {
        let label = a
            .label_of(x)
            .ok_or_else(|| Error::InvalidSet(format!("{x} is not a labelled member")))?;
        match label {
            [p, q] if p != q => edges.push((*p.min(q), *p.max(q))),
            _ => return Err(Error::MissingLabel(x)),
        }
    }
    ProductGraph::new(left, right, edges)
}

/// Lexicographically first 4-cycle `(p, p', q, q')` with `p < p'`, `q < q'`.
///
/// Left vertices are scanned in ascending order; every pair of right
/// neighbours is looked up in a triangular table remembering the first left
/// vertex that covered it. A second visit is a 4-cycle. Time is
/// `O(Σ deg(p)^2)`.
pub fn find_c4(g: &ProductGraph) -> Option<C4Witness> {
    // right vertices of degree < 2 cannot lie on a cycle
    let mut deg = vec![0u32; g.right.len()];
    let ridx = |q: u64| g.right.binary_search(&q).expect("validated edge");
    for &(_, q) in &g.edges {
        deg[ridx(q)] += 1;
    }
    let mut compact = vec![u32::MAX; g.right.len()];
    let mut kept = 0u32;
    for (i, &d) in deg.iter().enumerate() {
        if d >= 2 {
            compact[i] = kept;
            kept += 1;
        }
    }
    let k = kept as usize;
    let mut owner = PairTable::new(k);

    let mut best: Option<C4Witness> = None;
    let mut start = 0;
    while start < g.edges.len() {
        let p = g.edges[start].0;
        let mut end = start;
        let mut nbrs = Vec::new();
        while end < g.edges.len() && g.edges[end].0 == p {
            let c = compact[ridx(g.edges[end].1)];
            if c != u32::MAX {
                nbrs.push((c, g.edges[end].1));
            }
            end += 1;
        }
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let slot = owner.slot(nbrs[i].0 as usize, nbrs[j].0 as usize);
                match *slot {
                    None => *slot = Some(p),
                    Some(first) => {
                        let w = C4Witness {
                            p: first,
                            p2: p,
                            q: nbrs[i].1,
                            q2: nbrs[j].1,
                        };
                        if best.is_none_or(|b| w < b) {
                            best = Some(w);
                        }
                    }
                }
            }
        }
        start = end;
    }
    best
}

/// Per right-vertex-pair record of the first left vertex covering it.
struct PairTable {
    dense: Option<Vec<Option<u64>>>,
    sparse: std::collections::HashMap<(usize, usize), Option<u64>>,
}

impl PairTable {
    const DENSE_MAX: usize = 4096;

    fn new(k: usize) -> PairTable {
        PairTable {
            dense: (k <= Self::DENSE_MAX).then(|| vec![None; k * k.saturating_sub(1) / 2]),
            sparse: Default::default(),
        }
    }

    fn slot(&mut self, a: usize, b: usize) -> &mut Option<u64> {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        match &mut self.dense {
            Some(v) => &mut v[hi * (hi - 1) / 2 + lo],
            None => self.sparse.entry((lo, hi)).or_insert(None),
        }
    }
}

/// Largest `e` with `e^2 <= |Q| (e + |P|^2)`, the edge capacity of a
/// 4-cycle-free bipartite graph implied by the Cauchy–Schwarz chain.
pub fn c4free_capacity(size_p: u64, size_q: u64) -> u64 {
    let p = size_p as u128;
    let q = size_q as u128;
    let fits = |e: u128| e * e <= q * (e + p * p);
    let disc = q * q + 4 * q * p * p;
    let mut e = (q + num_integer::Roots::sqrt(&disc)) / 2;
    while e > 0 && !fits(e) {
        e -= 1;
    }
    while fits(e + 1) {
        e += 1;
    }
    e as u64
}

/// Evaluates the Cauchy–Schwarz chain for the concrete edge set:
///
/// 1. `|E|^2 <= |Q| Σ_q deg(q)^2`
/// 2. `Σ_q deg(q)^2 = |E| + Σ_{p != p'} codeg(p, p')`
/// 3. when the graph has no 4-cycle, `Σ_{p != p'} codeg(p, p') <= |P|^2`
///    (every ordered pair shares at most one neighbour); skipped otherwise.
pub fn cs_chain_audit(g: &ProductGraph) -> AuditReport {
    let e = g.edges.len() as u128;
    let mut deg = vec![0u128; g.right.len()];
    for &(_, q) in &g.edges {
        deg[g.right.binary_search(&q).expect("validated edge")] += 1;
    }
    let sum_sq: u128 = deg.iter().map(|d| d * d).sum();
    // ordered pairs p != p' sharing q, summed over q
    let codeg: u128 = deg.iter().map(|d| d * d.saturating_sub(1)).sum();
    let q_size = g.right.len() as u128;
    let p_size = g.left.len() as u128;

    let mut checks = vec![
        AuditCheck::new("edges_squared_le_q_times_sum_deg_squared", Num::Int(e * e), Num::Int(q_size * sum_sq), e * e <= q_size * sum_sq),
        AuditCheck::new("sum_deg_squared_eq_edges_plus_codegrees", Num::Int(sum_sq), Num::Int(e + codeg), sum_sq == e + codeg),
    ];
    let c4free = find_c4(g).is_none();
    let third = AuditCheck::new("codegrees_le_p_squared", Num::Int(codeg), Num::Int(p_size * p_size), codeg <= p_size * p_size);
    checks.push(if c4free { third } else { third.skipped() });
    AuditReport::new("cs_chain", checks)
}
