//! Loopless undirected multigraphs with stable edge identities.
//!
//! Vertices are dense indices `0..n`. Every edge carries an [`EdgeId`] that
//! survives deletions and contractions of *other* edges, so a doubleton or a
//! chosen edge can be followed through a whole chain of transformations.
//! Ids are never reused within one derivation chain: new edges always take
//! `next_id`, which only grows.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, VertexMask};
use crate::error::{Error, Result};

/// Largest order supported by the bitmask-based algorithms.
pub const MAX_ORDER: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// The end of the edge that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_incident(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// Ends in increasing order.
    pub fn ends(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn mask(&self) -> VertexMask {
        bits::bit(self.u) | bits::bit(self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    next_id: u32,
    labels: Option<Vec<String>>,
}

/// A proper 2-colouring of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub color_a: Vec<usize>,
    pub color_b: Vec<usize>,
}

impl Bipartition {
    pub fn mask_a(&self) -> VertexMask {
        bits::from_slice(&self.color_a)
    }

    pub fn mask_b(&self) -> VertexMask {
        bits::from_slice(&self.color_b)
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.color_a.contains(&v)
    }

    pub fn swapped(self) -> Bipartition {
        Bipartition {
            color_a: self.color_b,
            color_b: self.color_a,
        }
    }
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph {
            n,
            edges: Vec::new(),
            next_id: 0,
            labels: None,
        }
    }

    /// Builds a graph whose `i`-th pair receives `EdgeId(i)`.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::CapExceeded {
                what: "graph order",
                order: n,
                cap: MAX_ORDER,
            });
        }
        let mut g = Graph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        assert!(self.n < MAX_ORDER, "order exceeds {MAX_ORDER}");
        if let Some(labels) = &mut self.labels {
            labels.push(String::new());
        }
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        if u >= self.n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= self.n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let id = EdgeId(self.next_id);
        self.next_id += 1;
        self.edges.push(Edge { id, u, v });
        Ok(id)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in increasing id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.iter().map(|e| e.id).collect()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn try_edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edge(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.edge(id).is_some()
    }

    /// The id the next added edge will receive.
    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.next_id)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels
            .as_ref()
            .and_then(|l| l.get(v))
            .map(String::as_str)
            .filter(|s| !s.is_empty())
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        let n = self.n;
        let labels = self.labels.get_or_insert_with(|| vec![String::new(); n]);
        labels[v] = label.into();
    }

    pub fn incident(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.is_incident(v))
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Distinct neighbours of `v`, sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits::to_vec(self.adjacency()[v])
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.ends() == (u.min(v), u.max(v)))
            .count()
    }

    pub fn edges_between(&self, u: usize, v: usize) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|e| e.ends() == (u.min(v), u.max(v)))
            .map(|e| e.id)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.ends()))
    }

    /// Neighbourhood bitmask of every vertex (multiplicities collapsed).
    pub fn adjacency(&self) -> Vec<VertexMask> {
        let mut adj = vec![0; self.n];
        for e in &self.edges {
            adj[e.u] |= bits::bit(e.v);
            adj[e.v] |= bits::bit(e.u);
        }
        adj
    }

    pub fn vertex_mask(&self) -> VertexMask {
        bits::full(self.n)
    }

    /// Vertices of `mask` reachable from `start` inside `mask`.
    pub fn component_within(adj: &[VertexMask], mask: VertexMask, start: usize) -> VertexMask {
        let mut comp = bits::bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits::iter(frontier) {
                next |= adj[v];
            }
            next &= mask & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Connected components of the subgraph induced by `mask`, ordered by
    /// least vertex.
    pub fn components_within(adj: &[VertexMask], mask: VertexMask) -> Vec<VertexMask> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let c = Graph::component_within(adj, rest, rest.trailing_zeros() as usize);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        Graph::component_within(&adj, self.vertex_mask(), 0) == self.vertex_mask()
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Graph> {
        self.delete_edges(&[e])
    }

    pub fn delete_edges(&self, es: &[EdgeId]) -> Result<Graph> {
        for &e in es {
            self.try_edge(e)?;
        }
        let mut g = self.clone();
        g.edges.retain(|x| !es.contains(&x.id));
        Ok(g)
    }

    /// Induced subgraph on the vertices outside `removed`, re-indexed
    /// densely in the original order. The returned map sends each old
    /// vertex to its new index, or `None` if it was deleted. Surviving edges
    /// keep their ids.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, Vec<Option<usize>>)> {
        for &v in removed {
            if v >= self.n {
                return Err(Error::UnknownVertex(v));
            }
        }
        let gone = bits::from_slice(removed);
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if gone & bits::bit(v) == 0 {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| gone & e.mask() == 0)
            .map(|e| Edge {
                id: e.id,
                u: map[e.u].unwrap(),
                v: map[e.v].unwrap(),
            })
            .collect();
        let labels = self.labels.as_ref().map(|l| {
            l.iter()
                .enumerate()
                .filter(|(v, _)| map[*v].is_some())
                .map(|(_, s)| s.clone())
                .collect()
        });
        Ok((
            Graph {
                n: next,
                edges,
                next_id: self.next_id,
                labels,
            },
            map,
        ))
    }

    /// Renames vertex `v` to `perm[v]`. Edge ids are kept.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: e.id,
                u: perm[e.u],
                v: perm[e.v],
            })
            .collect();
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for (v, s) in l.iter().enumerate() {
                out[perm[v]] = s.clone();
            }
            out
        });
        Graph {
            n: self.n,
            edges,
            next_id: self.next_id,
            labels,
        }
    }

    /// Merges every vertex of `shore` into a single new vertex. Edges with
    /// both ends in the shore disappear and are returned; the rest keep
    /// their ids. The contraction vertex takes the smallest index of the
    /// shore and the remaining vertices are re-indexed densely.
    pub fn contract(&self, shore: VertexMask) -> Result<(Graph, Vec<usize>, Vec<EdgeId>)> {
        if shore == 0 || shore & !self.vertex_mask() != 0 {
            return Err(Error::BadShore(format!("{shore:#b}")));
        }
        let rep = shore.trailing_zeros() as usize;
        let mut map = vec![0; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if shore & bits::bit(v) != 0 && v != rep {
                continue;
            }
            *slot = next;
            next += 1;
        }
        for v in bits::iter(shore) {
            map[v] = map[rep];
        }
        let mut dropped = Vec::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if shore & e.mask() == e.mask() {
                dropped.push(e.id);
            } else {
                edges.push(Edge {
                    id: e.id,
                    u: map[e.u],
                    v: map[e.v],
                });
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); next];
            for (v, s) in l.iter().enumerate() {
                if shore & bits::bit(v) == 0 {
                    out[map[v]] = s.clone();
                }
            }
            out
        });
        Ok((
            Graph {
                n: next,
                edges,
                next_id: self.next_id,
                labels,
            },
            map,
            dropped,
        ))
    }

    /// Deterministic 2-colouring: the least vertex of each component goes
    /// to colour class A. `None` if some component has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adj = self.adjacency();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for comp in Graph::components_within(&adj, self.vertex_mask()) {
            let root = comp.trailing_zeros() as usize;
            color[root] = Some(false);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for w in bits::iter(adj[v]) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (v, c) in color.iter().enumerate() {
            if c == &Some(false) {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        Some(Bipartition {
            color_a: a,
            color_b: b,
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Same vertices and id counter, with the edge list replaced by
    /// `(id, u, v)` triples. Ids must be distinct and below the counter.
    pub fn with_edges(&self, edges: Vec<(EdgeId, usize, usize)>) -> Graph {
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|(id, u, v)| {
                assert!(u != v && u < self.n && v < self.n && id.0 < self.next_id);
                Edge { id, u, v }
            })
            .collect();
        edges.sort_by_key(|e| e.id);
        Graph {
            n: self.n,
            edges,
            next_id: self.next_id,
            labels: self.labels.clone(),
        }
    }

    /// Degree of `v` counting only edges not in `skip`.
    pub fn degree_without(&self, v: usize, skip: &[EdgeId]) -> usize {
        self.incident(v).filter(|e| !skip.contains(&e.id)).count()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}: ", self.n, self.edges.len())?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, ")")
    }
}

/// Free-standing form of [`Graph::delete_edge`].
pub fn delete_edge(g: &Graph, e: EdgeId) -> Result<Graph> {
    g.delete_edge(e)
}

/// Free-standing form of [`Graph::delete_vertices`].
pub fn delete_vertices(g: &Graph, removed: &[usize]) -> Result<(Graph, Vec<Option<usize>>)> {
    g.delete_vertices(removed)
}

/// Free-standing form of [`Graph::bipartition`].
pub fn bipartition_of(g: &Graph) -> Option<Bipartition> {
    g.bipartition()
}
