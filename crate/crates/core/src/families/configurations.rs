//! R-ladders and R-biwheels: ladders and partial biwheels inside `H = G - R`
//! whose corners `a, b` lie in `V(R)`, whose vertices other than the free
//! corners are cubic, and whose internal rungs (spokes) are R-thin of
//! index two (one).

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::{self, VertexMask};
use crate::error::Result;
use crate::graph::{EdgeId, Graph};
use crate::matching::{self, PmOracle};
use crate::removability::{self, Doubleton};
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigurationKind {
    RLadder,
    RBiwheel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RConfiguration {
    pub kind: ConfigurationKind,
    pub a: usize,
    pub u: usize,
    pub b: usize,
    pub w: usize,
    /// Sorted.
    pub vertices: Vec<usize>,
    /// Sorted.
    pub edges: Vec<EdgeId>,
    /// Rungs or spokes, from the `a` end to the `b` end.
    pub rungs: Vec<EdgeId>,
    pub internal: Vec<EdgeId>,
}

impl RConfiguration {
    pub fn free_corners(&self) -> [usize; 2] {
        [self.u, self.w]
    }

    pub fn vertex_mask(&self) -> VertexMask {
        bits::from_slice(&self.vertices)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn has_internal(&self, e: EdgeId) -> bool {
        self.internal.contains(&e)
    }

    /// The configuration as a graph on `0..|V(K)|`, numbered in the order of
    /// `vertices`.
    pub fn as_graph(&self, g: &Graph) -> Graph {
        let index = |v: usize| self.vertices.binary_search(&v).unwrap();
        let mut k = Graph::new(self.vertices.len());
        for &e in &self.edges {
            let (x, y) = g.edge(e).expect("configuration edge").ends();
            k.add_edge(index(x), index(y)).unwrap();
        }
        k
    }
}

struct Finder<'a> {
    g: &'a Graph,
    r: &'a Doubleton,
    h_adj: Vec<VertexMask>,
    in_a: VertexMask,
    r_vertices: VertexMask,
    cubic: VertexMask,
    thin_index: HashMap<EdgeId, Option<u8>>,
}

impl Finder<'_> {
    fn edge(&self, x: usize, y: usize) -> EdgeId {
        self.g.edges_between(x, y)[0]
    }

    fn is_cubic(&self, v: usize) -> bool {
        self.cubic & bits::bit(v) != 0
    }

    /// Index of `e` when it is R-thin.
    fn thin_index(&mut self, e: EdgeId) -> Result<Option<u8>> {
        if let Some(&x) = self.thin_index.get(&e) {
            return Ok(x);
        }
        let x = if removability::is_r_thin(self.g, self.r, e)? {
            Some(removability::index_of(self.g, self.r, e)?)
        } else {
            None
        };
        self.thin_index.insert(e, x);
        Ok(x)
    }

    fn ladders(&self, out: &mut Vec<RConfiguration>) {
        for a in bits::iter(self.r_vertices & self.in_a) {
            if !self.is_cubic(a) {
                continue;
            }
            for u in bits::iter(self.h_adj[a]) {
                let mut xs = vec![a];
                let mut ys = vec![u];
                self.extend_ladder(&mut xs, &mut ys, bits::bit(a) | bits::bit(u), out);
            }
        }
    }

    fn extend_ladder(
        &self,
        xs: &mut Vec<usize>,
        ys: &mut Vec<usize>,
        used: VertexMask,
        out: &mut Vec<RConfiguration>,
    ) {
        let i = xs.len() - 1;
        let (x, y) = (xs[i], ys[i]);
        if i >= 2 {
            let (b, w) = if self.in_a & bits::bit(x) != 0 { (y, x) } else { (x, y) };
            if self.r_vertices & bits::bit(b) != 0 && self.is_cubic(b) {
                out.push(self.ladder_from(xs, ys, b, w));
            }
        }
        // the current rung becomes internal, so both its ends must be cubic
        if !self.is_cubic(x) || (i > 0 && !self.is_cubic(y)) {
            return;
        }
        for nx in bits::iter(self.h_adj[x] & !used) {
            for ny in bits::iter(self.h_adj[y] & self.h_adj[nx] & !used & !bits::bit(nx)) {
                xs.push(nx);
                ys.push(ny);
                self.extend_ladder(xs, ys, used | bits::bit(nx) | bits::bit(ny), out);
                xs.pop();
                ys.pop();
            }
        }
    }

    fn ladder_from(&self, xs: &[usize], ys: &[usize], b: usize, w: usize) -> RConfiguration {
        let r = xs.len();
        let rungs: Vec<EdgeId> = (0..r).map(|i| self.edge(xs[i], ys[i])).collect();
        let mut edges = rungs.clone();
        for i in 0..r - 1 {
            edges.push(self.edge(xs[i], xs[i + 1]));
            edges.push(self.edge(ys[i], ys[i + 1]));
        }
        let mut vertices: Vec<usize> = xs.iter().chain(ys).copied().collect();
        vertices.sort_unstable();
        edges.sort_unstable();
        RConfiguration {
            kind: ConfigurationKind::RLadder,
            a: xs[0],
            u: ys[0],
            b,
            w,
            vertices,
            edges,
            internal: rungs[1..r - 1].to_vec(),
            rungs,
        }
    }

    fn biwheels(&self, out: &mut Vec<RConfiguration>) {
        for a in bits::iter(self.r_vertices & self.in_a) {
            if !self.is_cubic(a) {
                continue;
            }
            for u in bits::iter(self.h_adj[a]) {
                if self.is_cubic(u) {
                    continue;
                }
                for x1 in bits::iter(self.h_adj[a] & !bits::bit(u)) {
                    if !self.is_cubic(x1) {
                        continue;
                    }
                    for w in bits::iter(self.h_adj[x1] & !bits::bit(a)) {
                        if self.is_cubic(w) {
                            continue;
                        }
                        let mut path = vec![a, x1];
                        let used = bits::from_slice(&[a, x1, u, w]);
                        self.extend_path(&mut path, used, u, w, out);
                    }
                }
            }
        }
    }

    fn extend_path(
        &self,
        path: &mut Vec<usize>,
        used: VertexMask,
        u: usize,
        w: usize,
        out: &mut Vec<RConfiguration>,
    ) {
        let last = *path.last().unwrap();
        if path.len() >= 4 && path.len() % 2 == 0 && self.r_vertices & bits::bit(last) != 0 {
            out.push(self.biwheel_from(path, u, w));
        }
        if path.len() > 1 && self.r_vertices & bits::bit(last) != 0 {
            // interior path vertices are cubic and so carry no edge of R
            return;
        }
        let hub = if path.len() % 2 == 0 { u } else { w };
        for next in bits::iter(self.h_adj[last] & self.h_adj[hub] & !used) {
            if !self.is_cubic(next) {
                continue;
            }
            path.push(next);
            self.extend_path(path, used | bits::bit(next), u, w, out);
            path.pop();
        }
    }

    fn biwheel_from(&self, path: &[usize], u: usize, w: usize) -> RConfiguration {
        let spokes: Vec<EdgeId> = path
            .iter()
            .enumerate()
            .map(|(i, &x)| self.edge(if i % 2 == 0 { u } else { w }, x))
            .collect();
        let mut edges = spokes.clone();
        for pair in path.windows(2) {
            edges.push(self.edge(pair[0], pair[1]));
        }
        let mut vertices = path.to_vec();
        vertices.extend([u, w]);
        vertices.sort_unstable();
        edges.sort_unstable();
        RConfiguration {
            kind: ConfigurationKind::RBiwheel,
            a: path[0],
            u,
            b: *path.last().unwrap(),
            w,
            vertices,
            edges,
            internal: spokes[1..spokes.len() - 1].to_vec(),
            rungs: spokes,
        }
    }
}

/// All R-configurations of a simple R-brick, deduplicated by kind and edge
/// set, ordered by kind and then by edge set. A ladder with three rungs is
/// also a partial biwheel of order six, so one subgraph may appear once as
/// an R-ladder and once as an R-biwheel; see [`distinct_subgraphs`].
pub fn find_r_configurations(g: &Graph, r: &Doubleton) -> Result<Vec<RConfiguration>> {
    let h = r.underlying(g);
    let degrees = g.degrees();
    let mut finder = Finder {
        g,
        r,
        h_adj: h.adjacency(),
        in_a: bits::from_slice(&r.color_a),
        r_vertices: r.vertex_mask(g),
        cubic: (0..g.order())
            .filter(|&v| degrees[v] == 3)
            .fold(0, |m, v| m | bits::bit(v)),
        thin_index: HashMap::new(),
    };
    let mut candidates = Vec::new();
    finder.ladders(&mut candidates);
    finder.biwheels(&mut candidates);
    candidates.sort_by(|x, y| (x.kind, &x.edges).cmp(&(y.kind, &y.edges)));
    candidates.dedup_by(|x, y| x.kind == y.kind && x.edges == y.edges);
    let mut out = Vec::new();
    for k in candidates {
        let want = match k.kind {
            ConfigurationKind::RLadder => 2,
            ConfigurationKind::RBiwheel => 1,
        };
        let mut ok = true;
        for &e in &k.internal {
            if finder.thin_index(e)? != Some(want) {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(k);
        }
    }
    Ok(out)
}

/// One representative per edge set, the R-ladder view first.
pub fn distinct_subgraphs(configs: &[RConfiguration]) -> Vec<&RConfiguration> {
    let mut out: Vec<&RConfiguration> = Vec::new();
    for k in configs {
        if !out.iter().any(|x| x.edges == k.edges) {
            out.push(k);
        }
    }
    out
}

/// Two distinct configurations are vertex-disjoint, or share exactly their
/// common pair of free corners.
pub fn almost_disjoint(k1: &RConfiguration, k2: &RConfiguration) -> bool {
    let shared = k1.vertex_mask() & k2.vertex_mask();
    if shared == 0 {
        return true;
    }
    let f1 = bits::from_slice(&k1.free_corners());
    let f2 = bits::from_slice(&k2.free_corners());
    f1 == f2 && shared == f1
}

/// Names of the structural properties of a configuration that fail; empty
/// when all hold. Checked: free corners both in or both out of `V(R)`;
/// `K` matching covered and conformal in `G`; `E(K) + R` conformal; the
/// brace obtained by adding `ab` and `uw`; the four-vertex deletions that
/// leave a perfect matching; and that removable edges of `K` stay
/// removable in `H` when `K` is conformal there.
pub fn property_failures(g: &Graph, r: &Doubleton, k: &RConfiguration) -> Vec<&'static str> {
    let mut failures = Vec::new();
    let rv = r.vertex_mask(g);
    let inside = |v: usize| rv & bits::bit(v) != 0;
    if inside(k.u) != inside(k.w) {
        failures.push("free corners split by V(R)");
    }
    let kg = k.as_graph(g);
    if !matching::is_matching_covered(&kg) {
        failures.push("K matching covered");
    }
    let mut g_oracle = PmOracle::for_graph(g);
    let full = g.vertex_mask();
    if !g_oracle.has_pm(full & !k.vertex_mask()) {
        failures.push("K conformal");
    }
    if !g_oracle.has_pm(full & !(k.vertex_mask() | rv)) {
        failures.push("K + R conformal");
    }
    let index = |v: usize| k.vertices.binary_search(&v).unwrap();
    let mut closed = kg.clone();
    closed.add_edge(index(k.a), index(k.b)).unwrap();
    closed.add_edge(index(k.u), index(k.w)).unwrap();
    if structure::is_brace(&closed) != Ok(true) {
        failures.push("K + ab + uw brace");
    }
    let in_a = bits::from_slice(&r.color_a);
    let mut k_oracle = PmOracle::for_graph(&kg);
    let side = |want_a: bool| -> Vec<usize> {
        k.vertices
            .iter()
            .copied()
            .filter(|&v| (in_a & bits::bit(v) != 0) == want_a)
            .collect()
    };
    let deletions_ok = |pair_side: Vec<usize>, fixed: [usize; 2], oracle: &mut PmOracle| {
        for (i, &v1) in pair_side.iter().enumerate() {
            for &v2 in &pair_side[i + 1..] {
                let removed = [index(fixed[0]), index(fixed[1]), index(v1), index(v2)];
                if !oracle.has_pm_without(&removed) {
                    return false;
                }
            }
        }
        true
    };
    if !deletions_ok(side(true), [k.b, k.u], &mut k_oracle)
        || !deletions_ok(side(false), [k.a, k.w], &mut k_oracle)
    {
        failures.push("brace-like deletions");
    }
    let h = r.underlying(g);
    if PmOracle::for_graph(&h).has_pm(full & !k.vertex_mask()) {
        for (i, &e) in k.edges.iter().enumerate() {
            let local = kg.edges()[i].id;
            let k_removable = matching::is_matching_covered(&kg.delete_edge(local).unwrap());
            if k_removable && !matching::is_matching_covered(&h.delete_edge(e).unwrap()) {
                failures.push("conformal exchange");
                break;
            }
        }
    }
    failures
}
