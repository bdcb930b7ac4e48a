//! Removable edges and doubletons, R-compatibility, index, rank, and
//! (strictly) R-thin edges.

use serde::Serialize;

use crate::bits::{self, VertexMask};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, Graph};
use crate::matching::{self, Barrier, PmOracle};
use crate::structure;
use crate::transforms::{self, RetractResult};

/// A removable doubleton `R = {alpha, beta}` together with the colour
/// classes of the bipartite graph `H = G - R`. Normalised so that `alpha`
/// is the edge with the smaller id and its ends lie in `color_a`; the ends
/// of `beta` then lie in `color_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Doubleton {
    pub alpha: EdgeId,
    pub beta: EdgeId,
    pub color_a: Vec<usize>,
    pub color_b: Vec<usize>,
}

impl Doubleton {
    /// Validates `{x, y}` as a removable doubleton of `g` and normalises it.
    pub fn new(g: &Graph, x: EdgeId, y: EdgeId) -> Result<Doubleton> {
        let bad = |why: &str| Error::NotADoubleton(format!("{{{x}, {y}}}: {why}"));
        if x == y {
            return Err(bad("the two edges coincide"));
        }
        let (alpha, beta) = (x.min(y), x.max(y));
        let ea = *g.try_edge(alpha)?;
        let eb = *g.try_edge(beta)?;
        let h = g.delete_edges(&[alpha, beta])?;
        let bip = h.bipartition().ok_or_else(|| bad("G - R is not bipartite"))?;
        if !matching::is_matching_covered(&h) {
            return Err(bad("G - R is not matching covered"));
        }
        let bip = if bip.in_a(ea.u) { bip } else { bip.swapped() };
        if !bip.in_a(ea.v) || bip.in_a(eb.u) || bip.in_a(eb.v) {
            return Err(bad("alpha and beta must lie inside opposite colour classes"));
        }
        Ok(Doubleton {
            alpha,
            beta,
            color_a: bip.color_a,
            color_b: bip.color_b,
        })
    }

    pub fn edges(&self) -> [EdgeId; 2] {
        [self.alpha, self.beta]
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e == self.alpha || e == self.beta
    }

    pub fn bipartition(&self) -> Bipartition {
        Bipartition {
            color_a: self.color_a.clone(),
            color_b: self.color_b.clone(),
        }
    }

    /// `[a1, a2, b1, b2]`: the ends of alpha, then the ends of beta.
    pub fn corners(&self, g: &Graph) -> [usize; 4] {
        let (a1, a2) = g.edge(self.alpha).expect("alpha in graph").ends();
        let (b1, b2) = g.edge(self.beta).expect("beta in graph").ends();
        [a1, a2, b1, b2]
    }

    /// `V(R)` as a mask.
    pub fn vertex_mask(&self, g: &Graph) -> VertexMask {
        bits::from_slice(&self.corners(g))
    }

    /// The underlying bipartite graph `H = G - R`.
    pub fn underlying(&self, g: &Graph) -> Graph {
        g.delete_edges(&self.edges()).expect("doubleton edges in graph")
    }
}

/// `G - e` is matching covered.
pub fn is_removable(g: &Graph, e: EdgeId) -> Result<bool> {
    let h = g.delete_edge(e)?;
    Ok(matching::is_matching_covered(&h))
}

/// All removable edges, in id order.
pub fn removable_edges(g: &Graph) -> Vec<EdgeId> {
    g.edges()
        .iter()
        .filter(|e| is_removable(g, e.id).unwrap())
        .map(|e| e.id)
        .collect()
}

/// All removable doubletons, ordered by `(alpha, beta)`.
pub fn removable_doubletons(g: &Graph) -> Vec<Doubleton> {
    let ids = g.edge_ids();
    let mut out = Vec::new();
    for (i, &x) in ids.iter().enumerate() {
        for &y in &ids[i + 1..] {
            let h = g.delete_edges(&[x, y]).unwrap();
            if h.is_bipartite() {
                if let Ok(d) = Doubleton::new(g, x, y) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Removable in `G` and in `H = G - R`.
pub fn is_r_compatible(g: &Graph, r: &Doubleton, e: EdgeId) -> Result<bool> {
    g.try_edge(e)?;
    if r.contains(e) {
        return Err(Error::EdgeInDoubleton(e));
    }
    if !is_removable(g, e)? {
        return Ok(false);
    }
    is_removable(&r.underlying(g), e)
}

fn require_compatible(g: &Graph, r: &Doubleton, e: EdgeId) -> Result<()> {
    if is_r_compatible(g, r, e)? {
        Ok(())
    } else {
        Err(Error::NotRCompatible(e))
    }
}

/// Maximal barriers of `g` with at least two vertices.
pub fn maximal_nontrivial_barriers(g: &Graph) -> Result<Vec<Barrier>> {
    Ok(matching::maximal_barriers(g)?
        .into_iter()
        .filter(|b| !b.is_trivial())
        .collect())
}

/// Number of maximal nontrivial barriers of `G - e`, which is at most two
/// for R-compatible `e`.
pub fn index_of(g: &Graph, r: &Doubleton, e: EdgeId) -> Result<u8> {
    require_compatible(g, r, e)?;
    index_unchecked(g, e)
}

fn index_unchecked(g: &Graph, e: EdgeId) -> Result<u8> {
    let count = maximal_nontrivial_barriers(&g.delete_edge(e)?)?.len();
    if count > 2 {
        return Err(Error::TheoremViolation(format!(
            "G - {e} has {count} maximal nontrivial barriers"
        )));
    }
    Ok(count as u8)
}

/// Order of the unique brick of `G - e`.
pub fn rank_of(g: &Graph, r: &Doubleton, e: EdgeId) -> Result<usize> {
    require_compatible(g, r, e)?;
    rank_unchecked(g, e)
}

fn rank_unchecked(g: &Graph, e: EdgeId) -> Result<usize> {
    let d = structure::tight_cut_decomposition(&g.delete_edge(e)?)?;
    let bricks: Vec<usize> = d.bricks().map(|p| p.graph.order()).collect();
    match bricks.as_slice() {
        [n] => Ok(*n),
        _ => Err(Error::TheoremViolation(format!(
            "G - {e} has {} bricks, expected a near-brick",
            bricks.len()
        ))),
    }
}

/// What deleting one edge and retracting does.
#[derive(Clone, Debug)]
pub struct Thinness {
    pub removable: bool,
    pub retract: Option<RetractResult>,
    /// Removable and the retract of `G - e` is a brick.
    pub thin: bool,
    /// Thin and the retract is simple.
    pub strictly_thin: bool,
}

pub fn thinness(g: &Graph, e: EdgeId) -> Result<Thinness> {
    if !is_removable(g, e)? {
        return Ok(Thinness {
            removable: false,
            retract: None,
            thin: false,
            strictly_thin: false,
        });
    }
    let r = transforms::retract(&g.delete_edge(e)?);
    let thin = !r.degenerate && structure::is_brick(&r.graph);
    let strictly_thin = thin && r.graph.is_simple();
    Ok(Thinness {
        removable: true,
        retract: Some(r),
        thin,
        strictly_thin,
    })
}

pub fn is_thin(g: &Graph, e: EdgeId) -> Result<bool> {
    Ok(thinness(g, e)?.thin)
}

pub fn is_strictly_thin(g: &Graph, e: EdgeId) -> Result<bool> {
    Ok(thinness(g, e)?.strictly_thin)
}

/// R-compatible and thin.
pub fn is_r_thin(g: &Graph, r: &Doubleton, e: EdgeId) -> Result<bool> {
    Ok(is_r_compatible(g, r, e)? && is_thin(g, e)?)
}

/// R-thin with a simple retract.
pub fn is_strictly_r_thin(g: &Graph, r: &Doubleton, e: EdgeId) -> Result<bool> {
    Ok(is_r_compatible(g, r, e)? && is_strictly_thin(g, e)?)
}

/// Every barrier of `G - e` has at most two vertices.
pub fn barriers_at_most_two(g: &Graph, e: EdgeId) -> Result<bool> {
    Ok(matching::barriers(&g.delete_edge(e)?)?
        .iter()
        .all(|b| b.len() <= 2))
}

/// The R-thin edge with the smallest id.
pub fn find_r_thin_edge(g: &Graph, r: &Doubleton) -> Option<EdgeId> {
    g.edge_ids()
        .into_iter()
        .filter(|&e| !r.contains(e))
        .find(|&e| is_r_thin(g, r, e).unwrap_or(false))
}

/// Strictly R-thin edges in id order.
pub fn strictly_r_thin_edges(g: &Graph, r: &Doubleton) -> Vec<EdgeId> {
    let h = r.underlying(g);
    g.edge_ids()
        .into_iter()
        .filter(|&e| !r.contains(e))
        .filter(|&e| {
            let h_ok = matching::is_matching_covered(&h.delete_edge(e).unwrap());
            h_ok && is_strictly_thin(g, e).unwrap()
        })
        .collect()
}

/// Per-doubleton part of an [`EdgeClass`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubletonRecord {
    pub alpha: EdgeId,
    pub beta: EdgeId,
    pub in_doubleton: bool,
    pub r_compatible: bool,
    pub index: Option<u8>,
    pub rank: Option<usize>,
    pub r_thin: bool,
    pub strictly_r_thin: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClass {
    pub edge: EdgeId,
    pub ends: (usize, usize),
    pub removable: bool,
    pub thin: bool,
    pub strictly_thin: bool,
    pub doubletons: Vec<DoubletonRecord>,
}

impl EdgeClass {
    /// Strictly R-thin for at least one doubleton.
    pub fn compatible_strictly_thin(&self) -> bool {
        self.doubletons.iter().any(|d| d.strictly_r_thin)
    }
}

/// Full classification of every edge against every given doubleton.
/// Index and rank are computed for R-compatible edges only.
pub fn classify_edges(g: &Graph, doubletons: &[Doubleton]) -> Result<Vec<EdgeClass>> {
    let hs: Vec<Graph> = doubletons.iter().map(|r| r.underlying(g)).collect();
    let mut out = Vec::with_capacity(g.size());
    for edge in g.edges() {
        let e = edge.id;
        let t = thinness(g, e)?;
        let mut records = Vec::with_capacity(doubletons.len());
        for (r, h) in doubletons.iter().zip(&hs) {
            let in_doubleton = r.contains(e);
            let r_compatible =
                !in_doubleton && t.removable && matching::is_matching_covered(&h.delete_edge(e)?);
            let (index, rank) = if r_compatible {
                (Some(index_unchecked(g, e)?), Some(rank_unchecked(g, e)?))
            } else {
                (None, None)
            };
            records.push(DoubletonRecord {
                alpha: r.alpha,
                beta: r.beta,
                in_doubleton,
                r_compatible,
                index,
                rank,
                r_thin: r_compatible && t.thin,
                strictly_r_thin: r_compatible && t.strictly_thin,
            });
        }
        out.push(EdgeClass {
            edge: e,
            ends: edge.ends(),
            removable: t.removable,
            thin: t.thin,
            strictly_thin: t.strictly_thin,
            doubletons: records,
        });
    }
    Ok(out)
}

/// Oracle-backed check that `H - e` stays matching covered, reusing no
/// state; exposed for the property tests.
pub fn removable_in_underlying(g: &Graph, r: &Doubleton, e: EdgeId) -> Result<bool> {
    let h = r.underlying(g).delete_edge(e)?;
    if !h.is_connected() {
        return Ok(false);
    }
    let mut oracle = PmOracle::for_graph(&h);
    Ok(matching::matching_covered_with(&h, &mut oracle))
}
