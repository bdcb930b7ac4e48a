//! Isomorphism testing and canonical forms for small multigraphs.
//!
//! Canonical labelling uses the usual individualisation-refinement search:
//! refine the vertex colouring to an equitable one, branch on the first
//! non-singleton cell, and keep the lexicographically least adjacency
//! encoding over all leaves. Automorphisms discovered at leaves prune
//! sibling branches that lie in the same orbit of the pointwise stabiliser
//! of the current branch prefix.

use crate::graph::{EdgeId, Graph};

/// Multiplicities are stored in the low six bits of a matrix entry; marked
/// edges (a doubleton, say) are counted in the two high bits.
const MARK_UNIT: u8 = 64;
const MAX_AUTOMORPHISMS: usize = 256;

/// A canonical form together with the relabelling that produced it:
/// vertex `v` of the input sits at position `perm[v]` of the form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub form: Vec<u8>,
    pub perm: Vec<usize>,
}

fn weight_matrix(g: &Graph, marked: &[EdgeId]) -> Vec<u8> {
    let n = g.order();
    let mut w = vec![0u8; n * n];
    for e in g.edges() {
        let unit = if marked.contains(&e.id) { MARK_UNIT } else { 1 };
        let cell = &mut w[e.u * n + e.v];
        assert!(
            unit == MARK_UNIT || (*cell % MARK_UNIT) < MARK_UNIT - 1,
            "edge multiplicity too large to encode"
        );
        *cell += unit;
        w[e.v * n + e.u] = w[e.u * n + e.v];
    }
    w
}

struct Search<'a> {
    n: usize,
    w: &'a [u8],
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Refines `colors` (values are ranks `0..k`) to the coarsest equitable
    /// colouring finer than it. Colours stay ranks of sorted signatures, so
    /// the result depends only on the isomorphism type of the input.
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n;
        let mut classes = count_distinct(colors);
        loop {
            let mut sigs: Vec<(Vec<u64>, usize)> = (0..n)
                .map(|v| {
                    let mut s: Vec<u64> = (0..n)
                        .filter(|&u| self.w[v * n + u] != 0)
                        .map(|u| (u64::from(colors[u]) << 8) | u64::from(self.w[v * n + u]))
                        .collect();
                    s.sort_unstable();
                    s.insert(0, u64::from(colors[v]));
                    (s, v)
                })
                .collect();
            sigs.sort();
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                    rank += 1;
                }
                colors[sigs[i].1] = rank;
            }
            let now = rank as usize + 1;
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn encode(&self, perm: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut inv = vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        let mut out = Vec::with_capacity(1 + n * (n - 1) / 2);
        out.push(n as u8);
        for i in 0..n {
            for j in i + 1..n {
                out.push(self.w[inv[i] * n + inv[j]]);
            }
        }
        out
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let form = self.encode(&perm);
        for (f, p) in [&self.first, &self.best].into_iter().flatten() {
            if *f == form && self.autos.len() < MAX_AUTOMORPHISMS {
                // both leaves give the same matrix, so p^-1 . perm is an automorphism
                let mut inv = vec![0; self.n];
                for (v, &x) in p.iter().enumerate() {
                    inv[x] = v;
                }
                let gamma: Vec<usize> = perm.iter().map(|&x| inv[x]).collect();
                if gamma.iter().enumerate().any(|(v, &x)| v != x) {
                    self.autos.push(gamma);
                }
            }
        }
        if self.first.is_none() {
            self.first = Some((form.clone(), perm.clone()));
        }
        if self.best.as_ref().map_or(true, |(b, _)| form < *b) {
            self.best = Some((form, perm));
        }
    }

    fn node(&mut self, mut colors: Vec<u32>, prefix: &mut Vec<usize>) {
        self.refine(&mut colors);
        let n = self.n;
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(cell) = counts.iter().position(|&k| k > 1) else {
            self.leaf(&colors);
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == cell).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
            child[v] = 2 * colors[v];
            let child = rank(&child);
            prefix.push(v);
            self.node(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Whether `v` shares an orbit with some explored vertex under the known
    /// automorphisms that fix every vertex of `prefix`.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for g in gens {
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&x| find(&mut parent, x) == rv)
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Replaces values by their rank among the distinct values.
fn rank(values: &[u32]) -> Vec<u32> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    values
        .iter()
        .map(|x| sorted.binary_search(x).unwrap() as u32)
        .collect()
}

fn labeling_with(g: &Graph, marked: &[EdgeId]) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            form: vec![0],
            perm: Vec::new(),
        };
    }
    let w = weight_matrix(g, marked);
    let mut search = Search {
        n,
        w: &w,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    search.node(vec![0; n], &mut Vec::new());
    let (form, perm) = search.best.expect("search reaches a leaf");
    Labeling { form, perm }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    labeling_with(g, &[])
}

/// Canonical form: two graphs have equal forms iff they are isomorphic
/// (edge multiplicities included).
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_labeling(g).form
}

/// Canonical form of `g` with the edges of `marked` distinguished, so that
/// isomorphisms must map marked edges to marked edges.
pub fn canonical_form_marked(g: &Graph, marked: &[EdgeId]) -> Vec<u8> {
    labeling_with(g, marked).form
}

pub fn canonical_labeling_marked(g: &Graph, marked: &[EdgeId]) -> Labeling {
    labeling_with(g, marked)
}

/// A multiplicity-preserving bijection `map` with `map[v]` the image in
/// `h` of vertex `v` of `g`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let lg = canonical_labeling(g);
    let lh = canonical_labeling(h);
    if lg.form != lh.form {
        return None;
    }
    let mut inv_h = vec![0; h.order()];
    for (v, &p) in lh.perm.iter().enumerate() {
        inv_h[p] = v;
    }
    Some(lg.perm.iter().map(|&p| inv_h[p]).collect())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Whether `map` sends `g` onto `h` preserving every multiplicity.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.order() != h.order() || g.size() != h.size() || map.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &x in map {
        if x >= h.order() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    let wg = weight_matrix(g, &[]);
    let wh = weight_matrix(h, &[]);
    let n = g.order();
    (0..n).all(|u| (0..n).all(|v| wg[u * n + v] == wh[map[u] * n + map[v]]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn relabelled_petersen_has_same_form() {
        let p = named::petersen();
        let perm = vec![3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_form(&p), canonical_form(&p.relabel(&perm)));
    }

    #[test]
    fn multiplicity_matters() {
        let g = named::c6_bar();
        let mut h = g.clone();
        h.add_edge(0, 1).unwrap();
        assert_ne!(canonical_form(&g), canonical_form(&h));
        assert_ne!(canonical_form(&named::k4()), canonical_form(&named::wheel(5)));
    }

    #[test]
    fn witness_is_valid() {
        let g = named::petersen();
        let h = g.relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]);
        let map = find_isomorphism(&g, &h).unwrap();
        assert!(is_isomorphism(&g, &h, &map));
        assert!(!are_isomorphic(&named::cycle(6), &named::c6_bar()));
    }

    #[test]
    fn marks_distinguish_edges() {
        let c = named::cycle(4);
        // two opposite edges versus two adjacent edges
        let opposite = canonical_form_marked(&c, &[EdgeId(0), EdgeId(2)]);
        let adjacent = canonical_form_marked(&c, &[EdgeId(0), EdgeId(1)]);
        let adjacent2 = canonical_form_marked(&c, &[EdgeId(2), EdgeId(3)]);
        assert_ne!(opposite, adjacent);
        assert_eq!(adjacent, adjacent2);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        let k = named::complete_bipartite(7, 7);
        let perm: Vec<usize> = (0..14).rev().collect();
        assert_eq!(canonical_form(&k), canonical_form(&k.relabel(&perm)));
        let k8 = named::complete(12);
        assert_eq!(canonical_form(&k8).len(), 1 + 66);
    }
}
