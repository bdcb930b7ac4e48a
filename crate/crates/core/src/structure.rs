//! Connectivity, tight cuts, bricks and braces, and tight cut
//! decomposition.

use serde::Serialize;

use crate::bits::{self, VertexMask};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::matching::{self, PmOracle, ENUMERATION_CAP};

/// The cut `∂(X)` of a shore `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cut {
    #[serde(serialize_with = "ser_shore")]
    pub shore: VertexMask,
    pub edges: Vec<EdgeId>,
}

fn ser_shore<S: serde::Serializer>(m: &VertexMask, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(bits::iter(*m))
}

impl Cut {
    pub fn new(g: &Graph, shore: VertexMask) -> Cut {
        let edges = g
            .edges()
            .iter()
            .filter(|e| {
                let inside = e.mask() & shore;
                inside != 0 && inside != e.mask()
            })
            .map(|e| e.id)
            .collect();
        Cut { shore, edges }
    }

    pub fn shore_vertices(&self) -> Vec<usize> {
        bits::to_vec(self.shore)
    }

    pub fn is_trivial(&self, n: usize) -> bool {
        let k = self.shore.count_ones() as usize;
        k == 1 || k + 1 == n
    }
}

/// True iff `g` has more than `k` vertices and no vertex cut of size
/// less than `k`.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 {
        return true;
    }
    if n < k + 1 {
        return false;
    }
    let adj = g.adjacency();
    let full = g.vertex_mask();
    for size in 0..k {
        for s in bits::subsets_of_size(full, size) {
            let rest = full & !s;
            let start = rest.trailing_zeros() as usize;
            if Graph::component_within(&adj, rest, start) != rest {
                return false;
            }
        }
    }
    true
}

fn validate_shore(g: &Graph, shore: VertexMask) -> Result<()> {
    let full = g.vertex_mask();
    if shore == 0 || shore & !full != 0 || shore == full {
        return Err(Error::BadShore(format!("{:?}", bits::to_vec(shore))));
    }
    Ok(())
}

fn crossing(pairing: &[VertexMask], shore: VertexMask) -> usize {
    pairing
        .iter()
        .filter(|&&p| {
            let inside = p & shore;
            inside != 0 && inside != p
        })
        .count()
}

/// `|M ∩ ∂(X)| = 1` for every perfect matching `M`.
pub fn is_tight_cut(g: &Graph, shore: VertexMask) -> Result<bool> {
    validate_shore(g, shore)?;
    if !matching::is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let pairings = matching::perfect_pairings(g, ENUMERATION_CAP)?;
    Ok(pairings.iter().all(|p| crossing(p, shore) == 1))
}

fn nontrivial(n: usize, shore: VertexMask) -> bool {
    let k = shore.count_ones() as usize;
    k >= 3 && n >= k + 3
}

/// Shores of barrier cuts: odd components with at least three vertices of
/// `G - S` for barriers `S` of two or more vertices. Returns the first one
/// by increasing barrier mask.
pub fn find_barrier_cut(g: &Graph) -> Option<Cut> {
    let n = g.order();
    let adj = g.adjacency();
    let full = g.vertex_mask();
    for s in 1..full {
        if s.count_ones() < 2 {
            continue;
        }
        let odd = matching::odd_components(&adj, full & !s);
        if odd.len() != s.count_ones() as usize {
            continue;
        }
        if let Some(&k) = odd.iter().find(|&&k| nontrivial(n, k)) {
            return Some(Cut::new(g, k));
        }
    }
    None
}

/// A 2-separation cut: for a 2-vertex cut `{u, v}` and an even component
/// `K` of `G - {u, v}`, the shore `V(K) + u`.
pub fn find_two_separation_cut(g: &Graph) -> Option<Cut> {
    let n = g.order();
    let adj = g.adjacency();
    let full = g.vertex_mask();
    for u in 0..n {
        for v in u + 1..n {
            let rest = full & !bits::bit(u) & !bits::bit(v);
            let comps = Graph::components_within(&adj, rest);
            if comps.len() < 2 {
                continue;
            }
            for k in comps {
                if k.count_ones() % 2 == 0 {
                    let shore = k | bits::bit(u);
                    if nontrivial(n, shore) {
                        return Some(Cut::new(g, shore));
                    }
                }
            }
        }
    }
    None
}

/// For bipartite `g`: a set `S` inside one colour class with
/// `|N(S)| = |S| + 1` and `|S|` at most the class size minus two gives the
/// tight cut with shore `S ∪ N(S)`.
pub fn find_hall_cut(g: &Graph) -> Option<Cut> {
    let bip = g.bipartition()?;
    let n = g.order();
    let adj = g.adjacency();
    for class in [bip.mask_a(), bip.mask_b()] {
        let size = class.count_ones() as usize;
        for k in 1..size.saturating_sub(1) {
            for s in bits::subsets_of_size(class, k) {
                let nb = bits::iter(s).fold(0, |m, v| m | adj[v]);
                if nb.count_ones() as usize == k + 1 && nontrivial(n, s | nb) {
                    return Some(Cut::new(g, s | nb));
                }
            }
        }
    }
    None
}

/// How the decomposition picks among the available nontrivial tight cuts.
/// By Lovász's theorem the resulting bricks and braces do not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutOrder {
    /// Barrier cuts, then 2-separation cuts, then Hall cuts, then search.
    FastPaths,
    /// 2-separation cuts before barrier cuts.
    TwoSeparationFirst,
    /// Exhaustive search, shores by size then lexicographically.
    SmallestShore,
    /// Exhaustive search, most balanced shores first.
    BalancedShore,
    /// Exhaustive search, shores by size then reverse lexicographically.
    ReverseLex,
}

impl CutOrder {
    pub const ALL: [CutOrder; 5] = [
        CutOrder::FastPaths,
        CutOrder::TwoSeparationFirst,
        CutOrder::SmallestShore,
        CutOrder::BalancedShore,
        CutOrder::ReverseLex,
    ];
}

/// Candidate odd shores with both sides of size at least three, in
/// size-then-lexicographic order (lexicographic on sorted member lists).
fn candidate_shores(n: usize) -> Vec<VertexMask> {
    let full = bits::full(n);
    let mut out = Vec::new();
    let mut k = 3;
    while k + 3 <= n {
        let mut level = bits::subsets_of_size(full, k);
        level.sort_by_key(|&m| bits::to_vec(m));
        out.extend(level);
        k += 2;
    }
    out
}

/// First nontrivial tight cut among `shores`, checked against every
/// perfect matching.
fn first_tight(g: &Graph, shores: &[VertexMask]) -> Result<Option<Cut>> {
    let pairings = matching::perfect_pairings(g, ENUMERATION_CAP)?;
    Ok(shores
        .iter()
        .find(|&&x| pairings.iter().all(|p| crossing(p, x) == 1))
        .map(|&x| Cut::new(g, x)))
}

/// Exhaustive search for a nontrivial tight cut in the given order.
pub fn exhaustive_tight_cut(g: &Graph, order: CutOrder) -> Result<Option<Cut>> {
    let n = g.order();
    let mut shores = candidate_shores(n);
    match order {
        CutOrder::BalancedShore => {
            shores.sort_by_key(|&x| (n as i64 / 2 - x.count_ones() as i64).abs());
        }
        CutOrder::ReverseLex => {
            shores.sort_by(|&x, &y| {
                x.count_ones()
                    .cmp(&y.count_ones())
                    .then_with(|| bits::to_vec(y).cmp(&bits::to_vec(x)))
            });
        }
        _ => {}
    }
    first_tight(g, &shores)
}

/// First nontrivial tight cut of a matching covered graph, or `None` if
/// every tight cut is trivial. The barrier, 2-separation and Hall fast
/// paths are tried before the exhaustive search over shores.
pub fn find_nontrivial_tight_cut(g: &Graph) -> Result<Option<Cut>> {
    find_tight_cut_ordered(g, CutOrder::FastPaths)
}

pub fn find_tight_cut_ordered(g: &Graph, order: CutOrder) -> Result<Option<Cut>> {
    if !matching::is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    if g.order() < 6 {
        return Ok(None);
    }
    let fast = match order {
        CutOrder::FastPaths => find_barrier_cut(g)
            .or_else(|| find_two_separation_cut(g))
            .or_else(|| find_hall_cut(g)),
        CutOrder::TwoSeparationFirst => find_two_separation_cut(g)
            .or_else(|| find_barrier_cut(g))
            .or_else(|| find_hall_cut(g)),
        _ => None,
    };
    match fast {
        Some(c) => Ok(Some(c)),
        None => {
            if matches!(order, CutOrder::FastPaths | CutOrder::TwoSeparationFirst)
                && !g.is_bipartite()
                && is_brick(g)
            {
                // bricks have no nontrivial tight cut; skip the enumeration
                return Ok(None);
            }
            exhaustive_tight_cut(g, order)
        }
    }
}

/// 3-connected and bicritical, on at least four vertices.
pub fn is_brick(g: &Graph) -> bool {
    g.order() >= 4 && vertex_connectivity_at_least(g, 3) && matching::is_bicritical(g)
}

/// [`is_brick`] reusing an oracle built on `g`'s adjacency.
pub fn is_brick_with(g: &Graph, oracle: &mut PmOracle) -> bool {
    g.order() >= 4 && vertex_connectivity_at_least(g, 3) && matching::bicritical_with(oracle)
}

/// Bipartite matching covered graph without nontrivial tight cuts. For
/// order six or more this uses the surplus condition `|N(S)| >= |S| + 2`
/// over subsets of one colour class; below that every matching covered
/// bipartite graph qualifies, since no nontrivial cut exists.
pub fn is_brace(g: &Graph) -> Result<bool> {
    let bip = g.bipartition().ok_or(Error::NotBipartite)?;
    if bip.color_a.len() != bip.color_b.len() || !matching::is_matching_covered(g) {
        return Ok(false);
    }
    let n = g.order();
    if n < 6 {
        return Ok(true);
    }
    let adj = g.adjacency();
    let a = bip.mask_a();
    let half = bip.color_a.len();
    for k in 1..half - 1 {
        for s in bits::subsets_of_size(a, k) {
            let nb = bits::iter(s).fold(0u32, |m, v| m | adj[v]);
            if (nb.count_ones() as usize) < k + 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    Brick,
    Brace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub graph: Graph,
    pub kind: PieceKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
}

impl Decomposition {
    /// `b(G)`: the number of bricks.
    pub fn brick_count(&self) -> usize {
        self.pieces.iter().filter(|p| p.kind == PieceKind::Brick).count()
    }

    /// Sorted `(order, kind)` pairs, which do not depend on the cuts used.
    pub fn signature(&self) -> Vec<(usize, PieceKind)> {
        let mut s: Vec<_> = self.pieces.iter().map(|p| (p.graph.order(), p.kind)).collect();
        s.sort();
        s
    }

    pub fn bricks(&self) -> impl Iterator<Item = &Piece> {
        self.pieces.iter().filter(|p| p.kind == PieceKind::Brick)
    }
}

/// Both `∂(X)`-contractions. The contraction vertex is labelled
/// `x̄:<members>` (or `x:<members>`) after the shore it replaces.
pub fn cut_contractions(g: &Graph, shore: VertexMask) -> Result<(Graph, Graph)> {
    validate_shore(g, shore)?;
    let contract = |side: VertexMask, name: &str| -> Result<Graph> {
        let members: Vec<String> = bits::iter(side)
            .map(|v| g.label(v).map_or_else(|| v.to_string(), str::to_string))
            .collect();
        let (mut h, map, _) = g.contract(side)?;
        h.set_label(map[side.trailing_zeros() as usize], format!("{name}:{}", members.join(",")));
        Ok(h)
    };
    let complement = g.vertex_mask() & !shore;
    Ok((contract(complement, "x̄")?, contract(shore, "x")?))
}

pub fn tight_cut_decomposition(g: &Graph) -> Result<Decomposition> {
    tight_cut_decomposition_ordered(g, CutOrder::FastPaths)
}

pub fn tight_cut_decomposition_ordered(g: &Graph, order: CutOrder) -> Result<Decomposition> {
    if g.order() > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "tight cut decomposition",
            order: g.order(),
            cap: ENUMERATION_CAP,
        });
    }
    if !matching::is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let mut pieces = Vec::new();
    let mut stack = vec![g.clone()];
    while let Some(h) = stack.pop() {
        match find_tight_cut_ordered(&h, order)? {
            Some(cut) => {
                let (left, right) = cut_contractions(&h, cut.shore)?;
                for piece in [right, left] {
                    assert!(
                        piece.order() < h.order() && matching::is_matching_covered(&piece),
                        "tight cut contraction is not a smaller matching covered graph"
                    );
                    stack.push(piece);
                }
            }
            None => {
                let kind = if h.is_bipartite() {
                    PieceKind::Brace
                } else {
                    PieceKind::Brick
                };
                pieces.push(Piece { graph: h, kind });
            }
        }
    }
    Ok(Decomposition { pieces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn connectivity() {
        assert!(vertex_connectivity_at_least(&named::k4(), 3));
        assert!(!vertex_connectivity_at_least(&named::cycle(6), 3));
        assert!(vertex_connectivity_at_least(&named::cycle(6), 2));
        assert!(vertex_connectivity_at_least(&named::petersen(), 3));
        assert!(!vertex_connectivity_at_least(&named::petersen(), 4));
    }

    #[test]
    fn bricks_and_braces() {
        for g in [named::k4(), named::c6_bar(), named::petersen(), named::wheel(5)] {
            assert!(is_brick(&g));
        }
        assert!(!is_brick(&named::cycle(6)));
        assert!(!is_brace(&named::cycle(6)).unwrap());
        assert!(is_brace(&named::complete_bipartite(3, 3)).unwrap());
        assert!(is_brace(&named::cycle(4)).unwrap());
        assert_eq!(is_brace(&named::k4()), Err(Error::NotBipartite));
    }

    #[test]
    fn tight_cut_examples() {
        let c6 = named::cycle(6);
        // {v} ∪ N(v) around a degree-2 vertex
        assert!(is_tight_cut(&c6, 0b100011).unwrap());
        assert!(is_tight_cut(&c6, 0b000001).unwrap());
        let p = named::petersen();
        assert!(!is_tight_cut(&p, 0b11111).unwrap());
        assert!(find_nontrivial_tight_cut(&p).unwrap().is_none());
        assert!(find_nontrivial_tight_cut(&c6).unwrap().is_some());
        assert!(matches!(is_tight_cut(&c6, 0), Err(Error::BadShore(_))));
    }

    #[test]
    fn petersen_minus_edge_has_two_bricks() {
        let p = named::petersen();
        for e in p.edge_ids() {
            let d = tight_cut_decomposition(&p.delete_edge(e).unwrap()).unwrap();
            assert_eq!(d.brick_count(), 2);
        }
    }

    #[test]
    fn bipartite_has_no_bricks() {
        let d = tight_cut_decomposition(&named::cycle(8)).unwrap();
        assert_eq!(d.brick_count(), 0);
        assert!(d.pieces.iter().all(|p| p.graph.order() == 4 || p.graph.order() == 2));
    }

    #[test]
    fn contraction_labels() {
        let c6 = named::cycle(6);
        let (keep, _) = cut_contractions(&c6, 0b000111).unwrap();
        assert_eq!(keep.order(), 4);
        assert_eq!(keep.label(3), Some("x̄:3,4,5"));
    }
}
