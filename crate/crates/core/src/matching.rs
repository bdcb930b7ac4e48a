//! Perfect matchings, admissibility, barriers and the canonical partition.
//!
//! Existence queries go through [`PmOracle`], an exhaustive search over
//! vertex subsets memoised by bitmask. Only the underlying simple graph
//! matters for existence, so multiplicities are ignored there; enumeration
//! does distinguish parallel edges.

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::{self, VertexMask};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Default order cap for exhaustive enumeration.
pub const ENUMERATION_CAP: usize = 16;

const DENSE_MEMO_LIMIT: usize = 20;

/// Memoised "does the subgraph induced by this vertex set have a perfect
/// matching" oracle for one fixed adjacency.
pub struct PmOracle {
    adj: Vec<VertexMask>,
    dense: Vec<u8>,
    sparse: HashMap<VertexMask, bool>,
}

impl PmOracle {
    pub fn new(adj: Vec<VertexMask>) -> PmOracle {
        let n = adj.len();
        let dense = if n <= DENSE_MEMO_LIMIT {
            vec![0; 1 << n]
        } else {
            Vec::new()
        };
        PmOracle {
            adj,
            dense,
            sparse: HashMap::new(),
        }
    }

    pub fn for_graph(g: &Graph) -> PmOracle {
        PmOracle::new(g.adjacency())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &[VertexMask] {
        &self.adj
    }

    /// Whether the subgraph induced by `mask` has a perfect matching.
    pub fn has_pm(&mut self, mask: VertexMask) -> bool {
        if mask == 0 {
            return true;
        }
        if mask.count_ones() % 2 == 1 {
            return false;
        }
        if !self.dense.is_empty() {
            match self.dense[mask as usize] {
                1 => return false,
                2 => return true,
                _ => {}
            }
        } else if let Some(&r) = self.sparse.get(&mask) {
            return r;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !bits::bit(v);
        let mut found = false;
        for w in bits::iter(self.adj[v] & rest) {
            if self.has_pm(rest & !bits::bit(w)) {
                found = true;
                break;
            }
        }
        if !self.dense.is_empty() {
            self.dense[mask as usize] = if found { 2 } else { 1 };
        } else {
            self.sparse.insert(mask, found);
        }
        found
    }

    pub fn has_pm_without(&mut self, removed: &[usize]) -> bool {
        let full = bits::full(self.order());
        self.has_pm(full & !bits::from_slice(removed))
    }
}

/// A perfect matching as sorted edge ids.
pub type Matching = Vec<EdgeId>;

pub fn has_perfect_matching(g: &Graph) -> bool {
    PmOracle::for_graph(g).has_pm(g.vertex_mask())
}

fn check_cap(g: &Graph, what: &'static str, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(Error::CapExceeded {
            what,
            order: g.order(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Every perfect matching of `g`, parallel edges distinguished, sorted
/// lexicographically by their sorted edge-id lists.
pub fn enumerate_perfect_matchings(g: &Graph) -> Result<Vec<Matching>> {
    enumerate_perfect_matchings_capped(g, ENUMERATION_CAP)
}

pub fn enumerate_perfect_matchings_capped(g: &Graph, cap: usize) -> Result<Vec<Matching>> {
    check_cap(g, "perfect matching enumeration", cap)?;
    let n = g.order();
    let mut incident: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); n];
    for e in g.edges() {
        incident[e.u].push((e.id, e.v));
        incident[e.v].push((e.id, e.u));
    }
    let mut oracle = PmOracle::for_graph(g);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        mask: VertexMask,
        incident: &[Vec<(EdgeId, usize)>],
        oracle: &mut PmOracle,
        current: &mut Vec<EdgeId>,
        out: &mut Vec<Matching>,
    ) {
        if mask == 0 {
            let mut m = current.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        if !oracle.has_pm(mask) {
            return;
        }
        let v = mask.trailing_zeros() as usize;
        for &(id, w) in &incident[v] {
            if mask & bits::bit(w) != 0 {
                current.push(id);
                go(mask & !bits::bit(v) & !bits::bit(w), incident, oracle, current, out);
                current.pop();
            }
        }
    }
    go(g.vertex_mask(), &incident, &mut oracle, &mut current, &mut out);
    out.sort();
    Ok(out)
}

/// Perfect matchings of the underlying simple graph, each given as the list
/// of its matched vertex pairs (as two-element masks). This is all that
/// cut-tightness depends on.
pub fn perfect_pairings(g: &Graph, cap: usize) -> Result<Vec<Vec<VertexMask>>> {
    check_cap(g, "perfect matching enumeration", cap)?;
    let mut oracle = PmOracle::for_graph(g);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        mask: VertexMask,
        oracle: &mut PmOracle,
        current: &mut Vec<VertexMask>,
        out: &mut Vec<Vec<VertexMask>>,
    ) {
        if mask == 0 {
            out.push(current.clone());
            return;
        }
        if !oracle.has_pm(mask) {
            return;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !bits::bit(v);
        for w in bits::iter(oracle.adjacency()[v] & rest) {
            current.push(bits::bit(v) | bits::bit(w));
            go(rest & !bits::bit(w), oracle, current, out);
            current.pop();
        }
    }
    go(g.vertex_mask(), &mut oracle, &mut current, &mut out);
    Ok(out)
}

pub fn is_admissible(g: &Graph, e: EdgeId) -> Result<bool> {
    let edge = *g.try_edge(e)?;
    Ok(PmOracle::for_graph(g).has_pm_without(&[edge.u, edge.v]))
}

/// Connected, at least two vertices, and every edge admissible.
pub fn is_matching_covered(g: &Graph) -> bool {
    if g.order() < 2 || !g.is_connected() {
        return false;
    }
    let mut oracle = PmOracle::for_graph(g);
    matching_covered_with(g, &mut oracle)
}

/// Matching-covered test for a connected `g` reusing an oracle built on
/// its adjacency.
pub fn matching_covered_with(g: &Graph, oracle: &mut PmOracle) -> bool {
    let full = g.vertex_mask();
    if !oracle.has_pm(full) {
        return false;
    }
    let adj = oracle.adjacency().to_vec();
    for u in 0..g.order() {
        for v in bits::iter(adj[u]) {
            if v > u && !oracle.has_pm(full & !bits::bit(u) & !bits::bit(v)) {
                return false;
            }
        }
    }
    true
}

/// Connected components of the subgraph induced by `mask` that have an
/// odd number of vertices.
pub fn odd_components(adj: &[VertexMask], mask: VertexMask) -> Vec<VertexMask> {
    Graph::components_within(adj, mask)
        .into_iter()
        .filter(|c| c.count_ones() % 2 == 1)
        .collect()
}

/// A vertex set `S` with exactly `|S|` odd components in `G - S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Barrier {
    #[serde(serialize_with = "ser_mask")]
    pub set: VertexMask,
    #[serde(serialize_with = "ser_masks")]
    pub odd_components: Vec<VertexMask>,
}

fn ser_mask<S: serde::Serializer>(m: &VertexMask, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(bits::iter(*m))
}

fn ser_masks<S: serde::Serializer>(
    ms: &[VertexMask],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ms.iter().map(|m| bits::to_vec(*m)))
}

impl Barrier {
    pub fn vertices(&self) -> Vec<usize> {
        bits::to_vec(self.set)
    }

    pub fn len(&self) -> usize {
        self.set.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.set == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }
}

/// Every barrier of `g`, ordered by the numeric value of the vertex mask.
pub fn barriers(g: &Graph) -> Result<Vec<Barrier>> {
    check_cap(g, "barrier enumeration", ENUMERATION_CAP)?;
    if !has_perfect_matching(g) {
        return Err(Error::NoPerfectMatching);
    }
    let adj = g.adjacency();
    let full = g.vertex_mask();
    let mut out = Vec::new();
    for s in 1..=full {
        let odd = odd_components(&adj, full & !s);
        if odd.len() == s.count_ones() as usize {
            out.push(Barrier {
                set: s,
                odd_components: odd,
            });
        }
    }
    Ok(out)
}

/// Barriers not properly contained in another barrier.
pub fn maximal_barriers(g: &Graph) -> Result<Vec<Barrier>> {
    Ok(maximal_only(barriers(g)?))
}

pub fn maximal_only(all: Vec<Barrier>) -> Vec<Barrier> {
    let sets: Vec<VertexMask> = all.iter().map(|b| b.set).collect();
    all.into_iter()
        .filter(|b| !sets.iter().any(|&t| t != b.set && t & b.set == b.set))
        .collect()
}

/// The maximal barriers of a matching covered graph, ordered by least
/// vertex. They partition the vertex set.
pub fn canonical_partition(g: &Graph) -> Result<Vec<Barrier>> {
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let mut blocks = maximal_barriers(g)?;
    blocks.sort_by_key(|b| b.set.trailing_zeros());
    let mut union = 0;
    for b in &blocks {
        assert_eq!(union & b.set, 0, "maximal barriers overlap");
        union |= b.set;
    }
    assert_eq!(union, g.vertex_mask(), "maximal barriers do not cover V");
    Ok(blocks)
}

/// `G - {u, v}` has a perfect matching for every pair of distinct vertices.
pub fn is_bicritical(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 || n % 2 == 1 {
        return false;
    }
    let mut oracle = PmOracle::for_graph(g);
    bicritical_with(&mut oracle)
}

pub fn bicritical_with(oracle: &mut PmOracle) -> bool {
    let n = oracle.order();
    let full = bits::full(n);
    for u in 0..n {
        for v in u + 1..n {
            if !oracle.has_pm(full & !bits::bit(u) & !bits::bit(v)) {
                return false;
            }
        }
    }
    true
}

/// Whether no edge has both ends in `set`.
pub fn is_stable(g: &Graph, set: VertexMask) -> bool {
    g.edges().iter().all(|e| e.mask() & set != e.mask())
}
