//! Bicontraction, retract and bi-splitting.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Record of one bicontraction. Vertex indices refer to the graph before
/// the step, except `merged_into`, which indexes the graph after it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bicontraction {
    pub vertex: usize,
    pub neighbors: (usize, usize),
    pub merged_into: usize,
    /// The two edges at the contracted vertex.
    pub contracted: (EdgeId, EdgeId),
    /// Edges joining the two neighbours, which would have become loops.
    pub dropped: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractResult {
    pub graph: Graph,
    pub log: Vec<Bicontraction>,
    /// Set when bicontraction left fewer than four vertices.
    pub degenerate: bool,
}

/// Contracts both edges at the degree-2 vertex `v`, merging `v` and its two
/// distinct neighbours into one vertex. Edges between the two neighbours
/// are deleted and reported in the log entry.
pub fn bicontract(g: &Graph, v: usize) -> Result<Graph> {
    bicontract_logged(g, v).map(|(h, _)| h)
}

pub fn bicontract_logged(g: &Graph, v: usize) -> Result<(Graph, Bicontraction)> {
    if v >= g.order() {
        return Err(Error::UnknownVertex(v));
    }
    let inc: Vec<_> = g.incident(v).copied().collect();
    if inc.len() != 2 || inc[0].other(v) == inc[1].other(v) {
        return Err(Error::NotBicontractible {
            vertex: v,
            degree: inc.len(),
        });
    }
    let (x, y) = (inc[0].other(v), inc[1].other(v));
    let dropped = g.edges_between(x, y);
    let mut removed = vec![inc[0].id, inc[1].id];
    removed.extend(&dropped);
    let h = g.delete_edges(&removed)?;
    let shore = crate::bits::bit(v) | crate::bits::bit(x) | crate::bits::bit(y);
    let (h, map, inner) = h.contract(shore)?;
    debug_assert!(inner.is_empty());
    let log = Bicontraction {
        vertex: v,
        neighbors: (x.min(y), x.max(y)),
        merged_into: map[v],
        contracted: (inc[0].id, inc[1].id),
        dropped,
    };
    Ok((h, log))
}

/// Bicontracts degree-2 vertices, lowest index first, until none is left.
/// Stops early, flagging the result degenerate, once fewer than four
/// vertices remain or a degree-2 vertex has a doubled edge to a single
/// neighbour.
pub fn retract(g: &Graph) -> RetractResult {
    let mut h = g.clone();
    let mut log = Vec::new();
    loop {
        if h.order() < 4 {
            break;
        }
        let degrees = h.degrees();
        let Some(v) = degrees.iter().position(|&d| d == 2) else {
            break;
        };
        match bicontract_logged(&h, v) {
            Ok((next, entry)) => {
                h = next;
                log.push(entry);
            }
            Err(_) => break,
        }
    }
    let degenerate = h.order() < 4 || h.degrees().contains(&2);
    RetractResult {
        graph: h,
        log,
        degenerate,
    }
}

/// Retract using an arbitrary choice of degree-2 vertex at each step;
/// `choose` receives the candidates and returns the position to use.
pub fn retract_with(g: &Graph, mut choose: impl FnMut(&[usize]) -> usize) -> RetractResult {
    let mut h = g.clone();
    let mut log = Vec::new();
    while h.order() >= 4 {
        let degrees = h.degrees();
        let candidates: Vec<usize> = (0..h.order()).filter(|&v| degrees[v] == 2).collect();
        if candidates.is_empty() {
            break;
        }
        let v = candidates[choose(&candidates) % candidates.len()];
        match bicontract_logged(&h, v) {
            Ok((next, entry)) => {
                h = next;
                log.push(entry);
            }
            Err(_) => break,
        }
    }
    let degenerate = h.order() < 4 || h.degrees().contains(&2);
    RetractResult {
        graph: h,
        log,
        degenerate,
    }
}

/// Result of bi-splitting vertex `v`: `v1 = v` keeps the first part, `v2`
/// is a new vertex with the second part, and the new vertex `v0` is joined
/// to both by fresh edges `e1 = v0 v1` and `e2 = v0 v2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSplit {
    pub graph: Graph,
    pub v0: usize,
    pub v1: usize,
    pub v2: usize,
    pub e1: EdgeId,
    pub e2: EdgeId,
}

pub fn bi_split(g: &Graph, v: usize, part1: &[EdgeId], part2: &[EdgeId]) -> Result<BiSplit> {
    if v >= g.order() {
        return Err(Error::UnknownVertex(v));
    }
    let mut at_v: Vec<EdgeId> = g.incident(v).map(|e| e.id).collect();
    let mut given: Vec<EdgeId> = part1.iter().chain(part2).copied().collect();
    at_v.sort_unstable();
    given.sort_unstable();
    if part1.is_empty() || part2.is_empty() {
        return Err(Error::BadPartition("both parts must be nonempty".into()));
    }
    if at_v != given {
        return Err(Error::BadPartition(format!(
            "parts must partition the edges at vertex {v}"
        )));
    }
    let mut h = g.clone();
    let v2 = h.add_vertex();
    let v0 = h.add_vertex();
    let mut h = reattach(&h, v, v2, part2);
    let e1 = h.add_edge(v0, v)?;
    let e2 = h.add_edge(v0, v2)?;
    Ok(BiSplit {
        graph: h,
        v0,
        v1: v,
        v2,
        e1,
        e2,
    })
}

/// Moves the `v` end of every edge in `moved` to `to`.
fn reattach(g: &Graph, v: usize, to: usize, moved: &[EdgeId]) -> Graph {
    let mut pairs = Vec::with_capacity(g.size());
    for e in g.edges() {
        let (mut a, mut b) = (e.u, e.v);
        if moved.contains(&e.id) {
            if a == v {
                a = to;
            } else {
                b = to;
            }
        }
        pairs.push((e.id, a, b));
    }
    g.with_edges(pairs)
}
