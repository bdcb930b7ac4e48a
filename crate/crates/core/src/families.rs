//! Ladders, partial biwheels and the named families of bricks built from
//! them, with recognition by isomorphism against a per-order catalogue.

pub mod configurations;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::iso;
use crate::named;
use crate::removability::{self, Doubleton};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    TruncatedBiwheel,
    Prism,
    MobiusLadder,
    Staircase,
    PseudoBiwheel,
    DoubleBiwheelI,
    DoubleLadderI,
    LadderedBiwheelI,
    DoubleBiwheelII,
    DoubleLadderII,
    LadderedBiwheelII,
    OddWheel,
    Petersen,
}

impl Family {
    /// Recognition order: ties between overlapping families go to the one
    /// listed first.
    pub const ALL: [Family; 13] = [
        Family::TruncatedBiwheel,
        Family::Prism,
        Family::MobiusLadder,
        Family::Staircase,
        Family::PseudoBiwheel,
        Family::DoubleBiwheelI,
        Family::DoubleLadderI,
        Family::LadderedBiwheelI,
        Family::DoubleBiwheelII,
        Family::DoubleLadderII,
        Family::LadderedBiwheelII,
        Family::OddWheel,
        Family::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TruncatedBiwheel => "truncated_biwheel",
            Family::Prism => "prism",
            Family::MobiusLadder => "mobius_ladder",
            Family::Staircase => "staircase",
            Family::PseudoBiwheel => "pseudo_biwheel",
            Family::DoubleBiwheelI => "double_biwheel_I",
            Family::DoubleLadderI => "double_ladder_I",
            Family::LadderedBiwheelI => "laddered_biwheel_I",
            Family::DoubleBiwheelII => "double_biwheel_II",
            Family::DoubleLadderII => "double_ladder_II",
            Family::LadderedBiwheelII => "laddered_biwheel_II",
            Family::OddWheel => "odd_wheel",
            Family::Petersen => "petersen",
        }
    }

    /// One of the eleven families of R-bricks free of strictly R-thin edges.
    pub fn in_n(self) -> bool {
        !matches!(self, Family::OddWheel | Family::Petersen)
    }

    /// One of the eight families of near-bipartite bricks free of
    /// compatible strictly thin edges.
    pub fn in_compatible_list(self) -> bool {
        self.in_n()
            && !matches!(
                self,
                Family::PseudoBiwheel | Family::DoubleBiwheelII | Family::LadderedBiwheelII
            )
    }

    /// Number of parameters taken by [`make_family`].
    pub fn arity(self) -> usize {
        match self {
            Family::Petersen => 0,
            Family::TruncatedBiwheel
            | Family::Prism
            | Family::MobiusLadder
            | Family::Staircase
            | Family::PseudoBiwheel
            | Family::OddWheel => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::IllegalParameters(format!("unknown family '{s}'")))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A family together with its parameters: block orders for the families
/// built from ladders and partial biwheels (ladder first for laddered
/// biwheels, ascending for doubles), the total order for the single-block
/// families, the rim size for odd wheels, nothing for Petersen.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyTag {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilyTag {
    pub fn new(family: Family, params: Vec<usize>) -> FamilyTag {
        FamilyTag { family, params }
    }

    /// Order of the graph this tag describes.
    pub fn order(&self) -> usize {
        let p = &self.params;
        match self.family {
            Family::Petersen => 10,
            Family::OddWheel => p[0] + 1,
            Family::TruncatedBiwheel
            | Family::Prism
            | Family::MobiusLadder
            | Family::Staircase
            | Family::PseudoBiwheel => p[0],
            Family::DoubleBiwheelI | Family::DoubleLadderI | Family::LadderedBiwheelI => {
                p[0] + p[1] - 2
            }
            _ => p[0] + p[1],
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", ps.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form, e.g. `prism(10)`.
    fn from_str(s: &str) -> Result<FamilyTag> {
        let s = s.trim();
        let (name, params) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], &s[i + 1..s.len() - 1]),
            Some(_) => return Err(Error::IllegalParameters(format!("bad tag '{s}'"))),
            None => (s, ""),
        };
        let family: Family = name.parse()?;
        let params = params
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::IllegalParameters(format!("bad parameter '{p}'")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(FamilyTag { family, params })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Ladder,
    PartialBiwheel,
}

/// A ladder or partial biwheel as placed inside some graph. The external
/// rungs or spokes are `au` and `bw`, with `a, w` in one colour class and
/// `b, u` in the other; for a partial biwheel `u` and `w` are the hubs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSpec {
    pub kind: BlockKind,
    pub order: usize,
    pub a: usize,
    pub u: usize,
    pub b: usize,
    pub w: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
    pub external: [EdgeId; 2],
    /// Internal rungs (ladder) or internal spokes (partial biwheel).
    pub internal: Vec<EdgeId>,
}

/// Local description of a block before placement.
struct Template {
    kind: BlockKind,
    n: usize,
    edges: Vec<(usize, usize)>,
    corners: [usize; 4],
    external: [usize; 2],
    internal: Vec<usize>,
}

/// Ladder with `r` rungs `x_i y_i`; `x_i` is vertex `i` and `y_i` is `r + i`.
fn ladder_template(r: usize) -> Template {
    let mut edges = Vec::new();
    let mut internal = Vec::new();
    for i in 0..r {
        if i > 0 && i + 1 < r {
            internal.push(edges.len());
        }
        edges.push((i, r + i));
    }
    let external = [0, r - 1];
    for i in 0..r - 1 {
        edges.push((i, i + 1));
        edges.push((r + i, r + i + 1));
    }
    let (x_last, y_last) = (r - 1, 2 * r - 1);
    // x_i lies on the side of x_0 exactly when i is even
    let (b, w) = if r % 2 == 1 {
        (y_last, x_last)
    } else {
        (x_last, y_last)
    };
    Template {
        kind: BlockKind::Ladder,
        n: 2 * r,
        edges,
        corners: [0, r, b, w],
        external,
        internal,
    }
}

/// Partial biwheel of order `2j + 4`: path `x_0 .. x_{2j+1}` on vertices
/// `0 .. 2j+1`, hub `u = 2j+2` on the even path vertices, hub `w = 2j+3`
/// on the odd ones.
fn biwheel_template(order: usize) -> Template {
    let len = order - 2;
    let (u, w) = (len, len + 1);
    let mut edges: Vec<(usize, usize)> = (0..len - 1).map(|i| (i, i + 1)).collect();
    let mut internal = Vec::new();
    let mut external = [0; 2];
    for i in 0..len {
        let hub = if i % 2 == 0 { u } else { w };
        if i == 0 {
            external[0] = edges.len();
        } else if i == len - 1 {
            external[1] = edges.len();
        } else {
            internal.push(edges.len());
        }
        edges.push((hub, i));
    }
    Template {
        kind: BlockKind::PartialBiwheel,
        n: order,
        edges,
        corners: [0, u, len - 1, w],
        external,
        internal,
    }
}

/// Adds `t` to `g`, mapping its vertices to fresh ones except where
/// `fixed` names an existing vertex for a local one.
fn place(g: &mut Graph, t: &Template, fixed: &[(usize, usize)]) -> BlockSpec {
    let map: Vec<usize> = (0..t.n)
        .map(|v| match fixed.iter().find(|(l, _)| *l == v) {
            Some(&(_, global)) => global,
            None => g.add_vertex(),
        })
        .collect();
    let ids: Vec<EdgeId> = t
        .edges
        .iter()
        .map(|&(x, y)| g.add_edge(map[x], map[y]).expect("block edge"))
        .collect();
    let [a, u, b, w] = t.corners.map(|c| map[c]);
    BlockSpec {
        kind: t.kind,
        order: t.n,
        a,
        u,
        b,
        w,
        vertices: map,
        edges: ids.clone(),
        external: t.external.map(|i| ids[i]),
        internal: t.internal.iter().map(|&i| ids[i]).collect(),
    }
}

fn illegal(tag: &FamilyTag, why: &str) -> Error {
    Error::IllegalParameters(format!("{tag}: {why}"))
}

fn template(kind: BlockKind, order: usize) -> Template {
    match kind {
        BlockKind::Ladder => ladder_template(order / 2),
        BlockKind::PartialBiwheel => biwheel_template(order),
    }
}

fn check_block(tag: &FamilyTag, order: usize, min: usize) -> Result<()> {
    if order % 2 == 1 || order < min {
        return Err(illegal(
            tag,
            &format!("block order {order} must be even and at least {min}"),
        ));
    }
    Ok(())
}

pub fn make_ladder(order: usize) -> Result<(Graph, BlockSpec)> {
    if order % 2 == 1 || order < 6 {
        return Err(Error::IllegalParameters(format!(
            "ladder order {order} must be even and at least 6"
        )));
    }
    let mut g = Graph::new(0);
    let spec = place(&mut g, &ladder_template(order / 2), &[]);
    Ok((g, spec))
}

pub fn make_partial_biwheel(order: usize) -> Result<(Graph, BlockSpec)> {
    if order % 2 == 1 || order < 6 {
        return Err(Error::IllegalParameters(format!(
            "partial biwheel order {order} must be even and at least 6"
        )));
    }
    let mut g = Graph::new(0);
    let spec = place(&mut g, &biwheel_template(order), &[]);
    Ok((g, spec))
}

/// A constructed family member with its construction doubleton `R` first
/// and, where the family has one, `R'` second.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub tag: FamilyTag,
    pub graph: Graph,
    pub doubletons: Vec<Doubleton>,
    pub blocks: Vec<BlockSpec>,
}

impl FamilyMember {
    pub fn r(&self) -> Option<&Doubleton> {
        self.doubletons.first()
    }
}

fn doubleton(g: &Graph, x: EdgeId, y: EdgeId) -> Result<Doubleton> {
    Doubleton::new(g, x, y)
}

/// Builds the member described by `tag`. Parameters of the symmetric
/// two-block families may be given in either order.
pub fn make_family(tag: &FamilyTag) -> Result<FamilyMember> {
    use BlockKind::{Ladder, PartialBiwheel};
    let mut tag = tag.clone();
    if tag.params.len() != tag.family.arity() {
        return Err(illegal(
            &tag,
            &format!("expected {} parameter(s)", tag.family.arity()),
        ));
    }
    if matches!(
        tag.family,
        Family::DoubleBiwheelI | Family::DoubleLadderI | Family::DoubleBiwheelII | Family::DoubleLadderII
    ) {
        tag.params.sort_unstable();
    }
    let p = tag.params.clone();
    let mut g = Graph::new(0);
    let mut blocks = Vec::new();
    let mut doubletons = Vec::new();
    match tag.family {
        Family::Petersen => g = named::petersen(),
        Family::OddWheel => {
            if p[0] < 3 || p[0] % 2 == 0 {
                return Err(illegal(&tag, "rim size must be odd and at least 3"));
            }
            g = named::wheel(p[0]);
            doubletons = removability::removable_doubletons(&g);
        }
        Family::Prism | Family::MobiusLadder | Family::TruncatedBiwheel => {
            let t = match tag.family {
                Family::Prism => {
                    if p[0] % 4 != 2 || p[0] < 6 {
                        return Err(illegal(&tag, "order must be 2 mod 4 and at least 6"));
                    }
                    ladder_template(p[0] / 2)
                }
                Family::MobiusLadder => {
                    if p[0] % 4 != 0 || p[0] < 4 {
                        return Err(illegal(&tag, "order must be 0 mod 4 and at least 4"));
                    }
                    ladder_template(p[0] / 2)
                }
                _ => {
                    check_block(&tag, p[0], 6)?;
                    biwheel_template(p[0])
                }
            };
            let k = place(&mut g, &t, &[]);
            let aw = g.add_edge(k.a, k.w)?;
            let bu = g.add_edge(k.b, k.u)?;
            doubletons.push(doubleton(&g, aw, bu)?);
            blocks.push(k);
        }
        Family::Staircase | Family::PseudoBiwheel => {
            let t = if tag.family == Family::Staircase {
                check_block(&tag, p[0].saturating_sub(2), 6)?;
                ladder_template((p[0] - 2) / 2)
            } else {
                check_block(&tag, p[0].saturating_sub(2), 8)?;
                biwheel_template(p[0] - 2)
            };
            let k = place(&mut g, &t, &[]);
            let a2 = g.add_vertex();
            let b2 = g.add_vertex();
            let alpha = g.add_edge(k.a, a2)?;
            let alpha2 = g.add_edge(k.u, a2)?;
            let beta = g.add_edge(k.b, b2)?;
            let beta2 = g.add_edge(k.w, b2)?;
            g.add_edge(a2, b2)?;
            doubletons.push(doubleton(&g, alpha, beta)?);
            doubletons.push(doubleton(&g, alpha2, beta2)?);
            blocks.push(k);
        }
        Family::DoubleBiwheelI
        | Family::DoubleLadderI
        | Family::LadderedBiwheelI
        | Family::DoubleBiwheelII
        | Family::DoubleLadderII
        | Family::LadderedBiwheelII => {
            let (k1, k2) = match tag.family {
                Family::DoubleBiwheelI | Family::DoubleBiwheelII => (PartialBiwheel, PartialBiwheel),
                Family::DoubleLadderI | Family::DoubleLadderII => (Ladder, Ladder),
                _ => (Ladder, PartialBiwheel),
            };
            let type_two = matches!(
                tag.family,
                Family::DoubleBiwheelII | Family::DoubleLadderII | Family::LadderedBiwheelII
            );
            let min = |k| if type_two && k == PartialBiwheel { 8 } else { 6 };
            check_block(&tag, p[0], min(k1))?;
            check_block(&tag, p[1], min(k2))?;
            let first = place(&mut g, &template(k1, p[0]), &[]);
            let t2 = template(k2, p[1]);
            let second = if type_two {
                place(&mut g, &t2, &[])
            } else {
                // identify u2 with u1 and w2 with w1
                let fixed = [(t2.corners[1], first.u), (t2.corners[3], first.w)];
                place(&mut g, &t2, &fixed)
            };
            let alpha = g.add_edge(first.a, second.a)?;
            let beta = g.add_edge(first.b, second.b)?;
            let second_pair = if type_two {
                Some((g.add_edge(first.u, second.w)?, g.add_edge(first.w, second.u)?))
            } else {
                None
            };
            doubletons.push(doubleton(&g, alpha, beta)?);
            if let Some((alpha2, beta2)) = second_pair {
                doubletons.push(doubleton(&g, alpha2, beta2)?);
            }
            blocks.push(first);
            blocks.push(second);
        }
    }
    Ok(FamilyMember {
        tag,
        graph: g,
        doubletons,
        blocks,
    })
}

fn even_range(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).filter(|k| k % 2 == 0)
}

/// All legal tags of the given family whose graphs have order `n`.
pub fn tags_of_order(family: Family, n: usize) -> Vec<FamilyTag> {
    let one = |p: usize| vec![FamilyTag::new(family, vec![p])];
    let two = |mins: (usize, usize), total: usize, sorted: bool| -> Vec<FamilyTag> {
        even_range(mins.0, total)
            .filter(|&k1| total >= k1 + mins.1)
            .map(|k1| (k1, total - k1))
            .filter(|&(k1, k2)| !sorted || k1 <= k2)
            .map(|(k1, k2)| FamilyTag::new(family, vec![k1, k2]))
            .collect()
    };
    if n % 2 == 1 && !matches!(family, Family::OddWheel) {
        return Vec::new();
    }
    match family {
        Family::Petersen if n == 10 => vec![FamilyTag::new(family, vec![])],
        Family::Petersen => Vec::new(),
        Family::OddWheel if n >= 4 && n % 2 == 0 => one(n - 1),
        Family::OddWheel => Vec::new(),
        Family::Prism if n >= 6 && n % 4 == 2 => one(n),
        Family::MobiusLadder if n >= 4 && n % 4 == 0 => one(n),
        Family::TruncatedBiwheel if n >= 6 => one(n),
        Family::Staircase if n >= 8 => one(n),
        Family::PseudoBiwheel if n >= 10 => one(n),
        Family::DoubleBiwheelI | Family::DoubleLadderI => two((6, 6), n + 2, true),
        Family::LadderedBiwheelI => two((6, 6), n + 2, false),
        Family::DoubleBiwheelII => two((8, 8), n, true),
        Family::DoubleLadderII => two((6, 6), n, true),
        Family::LadderedBiwheelII => two((6, 8), n, false),
        _ => Vec::new(),
    }
}

/// Every member of the eleven families with order `n`, in recognition
/// order.
pub fn members_in_n(n: usize) -> Vec<FamilyMember> {
    Family::ALL
        .into_iter()
        .filter(|f| f.in_n())
        .flat_map(|f| tags_of_order(f, n))
        .map(|t| make_family(&t).expect("legal parameters"))
        .collect()
}

type Catalogue = Arc<Vec<(FamilyTag, Vec<u8>)>>;

fn catalogue(n: usize) -> Catalogue {
    static CACHE: OnceLock<Mutex<HashMap<usize, Catalogue>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    let entries: Vec<(FamilyTag, Vec<u8>)> = Family::ALL
        .into_iter()
        .flat_map(|f| tags_of_order(f, n))
        .map(|t| {
            let g = make_family(&t).expect("legal parameters").graph;
            (t, iso::canonical_form(&g))
        })
        .collect();
    let c = Arc::new(entries);
    cache.lock().unwrap().insert(n, c.clone());
    c
}

/// Every family tag matching a graph, in recognition order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub primary: Option<FamilyTag>,
    pub all: Vec<FamilyTag>,
}

impl Recognition {
    /// Member of one of the eleven families.
    pub fn in_n(&self) -> bool {
        self.all.iter().any(|t| t.family.in_n())
    }

    /// Member of one of the eight families free of compatible strictly thin
    /// edges.
    pub fn in_compatible_list(&self) -> bool {
        self.all.iter().any(|t| t.family.in_compatible_list())
    }

    pub fn has(&self, family: Family) -> bool {
        self.all.iter().any(|t| t.family == family)
    }
}

impl fmt::Display for Recognition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.primary {
            Some(t) => write!(f, "{t}"),
            None => f.write_str("none"),
        }
    }
}

pub fn recognize(g: &Graph) -> Recognition {
    if !g.is_simple() || g.order() < 4 {
        return Recognition {
            primary: None,
            all: Vec::new(),
        };
    }
    let form = iso::canonical_form(g);
    let all: Vec<FamilyTag> = catalogue(g.order())
        .iter()
        .filter(|(_, f)| *f == form)
        .map(|(t, _)| t.clone())
        .collect();
    Recognition {
        primary: all.first().cloned(),
        all,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure;

    fn tag(s: &str) -> FamilyTag {
        s.parse().unwrap()
    }

    #[test]
    fn block_degree_counts() {
        for order in [6, 8, 10, 12] {
            let (l, _) = make_ladder(order).unwrap();
            assert_eq!(l.degrees().iter().filter(|&&d| d == 2).count(), 4);
            let (p, spec) = make_partial_biwheel(order).unwrap();
            let twos: Vec<usize> = (0..order).filter(|&v| p.degree(v) == 2).collect();
            if order >= 8 {
                assert_eq!(twos, vec![spec.a, spec.b]);
            }
        }
        let (l, _) = make_ladder(6).unwrap();
        let (p, _) = make_partial_biwheel(6).unwrap();
        assert!(iso::are_isomorphic(&l, &p));
    }

    #[test]
    fn block_colours_follow_convention() {
        for order in [6, 8, 10] {
            for (g, k) in [make_ladder(order).unwrap(), make_partial_biwheel(order).unwrap()] {
                let bip = g.bipartition().unwrap();
                let side = |v| bip.in_a(v);
                assert_eq!(side(k.a), side(k.w));
                assert_eq!(side(k.b), side(k.u));
                assert_ne!(side(k.a), side(k.b));
                let expected = match k.kind {
                    BlockKind::Ladder => order / 2 - 2,
                    BlockKind::PartialBiwheel => order - 4,
                };
                assert_eq!(k.internal.len(), expected);
            }
        }
    }

    #[test]
    fn smallest_members() {
        let c6bar = named::c6_bar();
        assert!(iso::are_isomorphic(&make_family(&tag("prism(6)")).unwrap().graph, &c6bar));
        assert!(iso::are_isomorphic(
            &make_family(&tag("truncated_biwheel(6)")).unwrap().graph,
            &c6bar
        ));
        assert!(iso::are_isomorphic(
            &make_family(&tag("mobius_ladder(4)")).unwrap().graph,
            &named::k4()
        ));
        let first = make_family(&tag("double_biwheel_I(6,6)")).unwrap().graph;
        for t in ["double_ladder_I(6,6)", "laddered_biwheel_I(6,6)"] {
            assert!(iso::are_isomorphic(&make_family(&tag(t)).unwrap().graph, &first));
        }
    }

    #[test]
    fn illegal_parameters_rejected() {
        for t in [
            "prism(8)",
            "mobius_ladder(6)",
            "pseudo_biwheel(8)",
            "double_biwheel_II(6,8)",
            "laddered_biwheel_II(8,6)",
            "odd_wheel(4)",
            "staircase(7)",
            "prism(6,6)",
        ] {
            assert!(matches!(make_family(&tag(t)), Err(Error::IllegalParameters(_))), "{t}");
        }
        assert!("cube(8)".parse::<FamilyTag>().is_err());
    }

    #[test]
    fn members_are_r_bricks() {
        for n in 4..=12 {
            for m in members_in_n(n) {
                assert!(m.graph.is_simple(), "{}", m.tag);
                assert!(structure::is_brick(&m.graph), "{}", m.tag);
                let all = removability::removable_doubletons(&m.graph);
                for d in &m.doubletons {
                    assert!(all.contains(d), "{}", m.tag);
                }
                assert_eq!(m.graph.order(), m.tag.order());
            }
        }
    }

    #[test]
    fn recognition_round_trip_and_ties() {
        assert_eq!(recognize(&named::c6_bar()).primary, Some(tag("truncated_biwheel(6)")));
        assert!(recognize(&named::c6_bar()).has(Family::Prism));
        assert_eq!(recognize(&named::k4()).primary, Some(tag("mobius_ladder(4)")));
        assert!(recognize(&named::k4()).has(Family::OddWheel));
        assert_eq!(recognize(&named::petersen()).primary, Some(tag("petersen")));
        assert_eq!(recognize(&named::wheel(5)).primary, Some(tag("odd_wheel(5)")));
        assert_eq!(recognize(&named::cycle(6)).primary, None);
        for n in 8..=12 {
            for m in members_in_n(n) {
                assert!(recognize(&m.graph).all.contains(&m.tag), "{}", m.tag);
            }
        }
    }

    #[test]
    fn tag_text_round_trip() {
        for s in ["prism(10)", "double_ladder_II(6,8)", "petersen"] {
            assert_eq!(tag(s).to_string(), s);
        }
    }

    #[test]
    fn prism_doubleton_count() {
        let p10 = make_family(&tag("prism(10)")).unwrap().graph;
        assert_eq!(removability::removable_doubletons(&p10).len(), 5);
    }
}
