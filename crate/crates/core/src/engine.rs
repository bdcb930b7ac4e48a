//! Reduction of simple R-bricks by strictly R-thin edges, the inverse
//! expansion, closure-based corpus generation, and exhaustive checks of the
//! classification theorems over a corpus.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{self, VertexMask};
use crate::error::{Error, Result};
use crate::families::configurations::{self, ConfigurationKind};
use crate::families::{self, Family, FamilyTag, Recognition};
use crate::graph::{EdgeId, Graph};
use crate::iso;
use crate::matching;
use crate::mcg;
use crate::removability::{self, Doubleton};
use crate::structure;
use crate::transforms::{self, RetractResult};

/// Default cap on corpus order.
pub const DEFAULT_MAX_ORDER: usize = 12;
/// Cap when large runs are explicitly allowed.
pub const LARGE_MAX_ORDER: usize = 14;
/// Largest order for the direct enumeration of R-bricks.
pub const ENUMERATION_MAX_ORDER: usize = 10;

#[derive(Clone, Debug)]
pub struct ReductionStep {
    /// `G_i`.
    pub graph: Graph,
    pub doubleton: Doubleton,
    /// The strictly R-thin edge deleted from `G_i`.
    pub edge: EdgeId,
    /// Retract of `G_i - e_i`, which is `G_{i-1}`.
    pub retract: RetractResult,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub terminal: Graph,
    pub terminal_doubleton: Doubleton,
    pub family: Recognition,
}

impl ReductionTrace {
    /// Number of graphs in the sequence, the input and terminal included.
    pub fn len(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn violation(what: String, g: &Graph) -> Error {
    Error::TheoremViolation(format!("{what}\n{}", mcg::write(g)))
}

fn check_r_brick(g: &Graph, r: &Doubleton) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::Precondition("graph is not simple".into()));
    }
    if !structure::is_brick(g) {
        return Err(Error::Precondition("graph is not a brick".into()));
    }
    if Doubleton::new(g, r.alpha, r.beta)? != *r {
        return Err(Error::Precondition("doubleton does not match the graph".into()));
    }
    Ok(())
}

/// Deletes the lowest-id strictly R-thin edge and retracts, until none is
/// left; the final graph must then lie in one of the eleven families.
pub fn reduce(g: &Graph, r: &Doubleton) -> Result<ReductionTrace> {
    check_r_brick(g, r)?;
    let mut g = g.clone();
    let mut r = r.clone();
    let mut steps = Vec::new();
    loop {
        let next = g
            .edge_ids()
            .into_iter()
            .filter(|&e| !r.contains(e))
            .find(|&e| removability::is_strictly_r_thin(&g, &r, e).unwrap_or(false));
        let Some(e) = next else { break };
        let retract = transforms::retract(&g.delete_edge(e)?);
        if retract.degenerate {
            return Err(violation(format!("retract of G - {e} is degenerate"), &g));
        }
        let j = retract.graph.clone();
        let rj = Doubleton::new(&j, r.alpha, r.beta).map_err(|err| {
            violation(format!("doubleton lost after deleting {e}: {err}"), &g)
        })?;
        steps.push(ReductionStep {
            graph: g,
            doubleton: r,
            edge: e,
            retract,
        });
        g = j;
        r = rj;
    }
    let family = families::recognize(&g);
    if !family.in_n() {
        return Err(violation(
            format!(
                "simple R-brick of order {} without strictly R-thin edges is in no family",
                g.order()
            ),
            &g,
        ));
    }
    Ok(ReductionTrace {
        steps,
        terminal: g,
        terminal_doubleton: r,
        family,
    })
}

/// One bi-split used by an expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    pub vertex: usize,
    pub part1: Vec<EdgeId>,
    pub part2: Vec<EdgeId>,
}

/// `graph` arises from the source by zero, one or two bi-splits and the
/// addition of `edge`, which is strictly R-thin in `graph`, and the
/// retract of `graph - edge` is isomorphic to the source.
#[derive(Clone, Debug)]
pub struct ExpansionStep {
    pub splits: Vec<Split>,
    pub edge: EdgeId,
    pub ends: (usize, usize),
    pub graph: Graph,
    pub doubleton: Doubleton,
    /// Canonical form of the graph with the doubleton marked.
    pub form: Vec<u8>,
}

/// Canonical form of an R-brick with both edges of `R` marked.
pub fn r_form(g: &Graph, r: &Doubleton) -> Vec<u8> {
    iso::canonical_form_marked(g, &r.edges())
}

/// Partitions of the edges at `v` into two parts of size at least two,
/// each unordered partition once (the first part holds the smallest id).
fn two_part_splits(g: &Graph, v: usize) -> Vec<(Vec<EdgeId>, Vec<EdgeId>)> {
    let at: Vec<EdgeId> = g.incident(v).map(|e| e.id).collect();
    let d = at.len();
    let mut out = Vec::new();
    if d < 4 {
        return out;
    }
    for mask in 0u32..(1 << (d - 1)) {
        let chosen = (mask << 1) | 1;
        let k = chosen.count_ones() as usize;
        if k < 2 || d - k < 2 {
            continue;
        }
        let (p1, p2): (Vec<_>, Vec<_>) = (0..d).partition(|&i| chosen & (1 << i) != 0);
        out.push((
            p1.into_iter().map(|i| at[i]).collect(),
            p2.into_iter().map(|i| at[i]).collect(),
        ));
    }
    out
}

struct Expander<'a> {
    j_form: Vec<u8>,
    r: &'a Doubleton,
    seen: HashSet<Vec<u8>>,
    out: Vec<ExpansionStep>,
}

impl Expander<'_> {
    fn consider(&mut self, g: Graph, e: EdgeId, splits: Vec<Split>) -> Result<()> {
        if !g.is_simple() || g.min_degree() < 3 {
            return Ok(());
        }
        let Ok(r) = Doubleton::new(&g, self.r.alpha, self.r.beta) else {
            return Ok(());
        };
        if !matching::is_matching_covered(&r.underlying(&g).delete_edge(e)?) {
            return Ok(());
        }
        let g_minus = g.delete_edge(e)?;
        let retract = transforms::retract(&g_minus);
        if retract.degenerate || iso::canonical_form(&retract.graph) != self.j_form {
            return Ok(());
        }
        if !structure::is_brick(&g) || !matching::is_matching_covered(&g_minus) {
            return Ok(());
        }
        let form = r_form(&g, &r);
        if !self.seen.insert(form.clone()) {
            return Ok(());
        }
        let ends = g.edge(e).unwrap().ends();
        self.out.push(ExpansionStep {
            splits,
            edge: e,
            ends,
            graph: g,
            doubleton: r,
            form,
        });
        Ok(())
    }
}

/// Every simple R-brick of order at most `max_order` obtained from `j` by
/// the inverse of deleting a strictly R-thin edge and retracting, up to
/// isomorphism preserving `R`.
pub fn expand_all(j: &Graph, r: &Doubleton, max_order: usize) -> Result<Vec<ExpansionStep>> {
    if max_order > 16 {
        return Err(Error::CapExceeded {
            what: "expansion",
            order: max_order,
            cap: 16,
        });
    }
    check_r_brick(j, r)?;
    let n = j.order();
    let in_a = bits::from_slice(&r.color_a);
    let color = |v: usize| in_a & bits::bit(v) != 0;
    let mut ex = Expander {
        j_form: iso::canonical_form(j),
        r,
        seen: HashSet::new(),
        out: Vec::new(),
    };
    // an edge between two nonadjacent vertices of opposite colours
    for x in 0..n {
        for y in x + 1..n {
            if color(x) != color(y) && j.multiplicity(x, y) == 0 {
                let mut g = j.clone();
                let e = g.add_edge(x, y)?;
                ex.consider(g, e, Vec::new())?;
            }
        }
    }
    if n + 2 > max_order {
        return Ok(ex.out);
    }
    for v in 0..n {
        for (p1, p2) in two_part_splits(j, v) {
            let s = transforms::bi_split(j, v, &p1, &p2)?;
            let first = Split {
                vertex: v,
                part1: p1.clone(),
                part2: p2.clone(),
            };
            // the new edge joins v0 to a vertex of v's colour
            for x in 0..n {
                if x != v && color(x) == color(v) {
                    let mut g = s.graph.clone();
                    let e = g.add_edge(s.v0, x)?;
                    ex.consider(g, e, vec![first.clone()])?;
                }
            }
            if n + 4 > max_order {
                continue;
            }
            // a second split at an original vertex of the other colour
            for y in v + 1..n {
                if color(y) == color(v) {
                    continue;
                }
                for (q1, q2) in two_part_splits(&s.graph, y) {
                    let t = transforms::bi_split(&s.graph, y, &q1, &q2)?;
                    let mut g = t.graph.clone();
                    let e = g.add_edge(s.v0, t.v0)?;
                    let second = Split {
                        vertex: y,
                        part1: q1,
                        part2: q2,
                    };
                    ex.consider(g, e, vec![first.clone(), second])?;
                }
            }
        }
    }
    Ok(ex.out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Seed(FamilyTag),
    /// Expanded from the entry with this marked canonical form.
    Expansion { parent: usize, edge: EdgeId },
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub graph: Graph,
    pub doubleton: Doubleton,
    pub form: Vec<u8>,
    pub origin: Origin,
}

/// Simple R-bricks up to isomorphism preserving `R`, sorted by order, size
/// and canonical form.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub max_order: usize,
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of entries of each order.
    pub fn counts_by_order(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry(e.graph.order()).or_insert(0) += 1;
        }
        out
    }

    /// Distinct underlying graphs, as indices of their first entry.
    pub fn distinct_graphs(&self) -> Vec<usize> {
        let mut seen = HashSet::new();
        (0..self.entries.len())
            .filter(|&i| seen.insert(iso::canonical_form(&self.entries[i].graph)))
            .collect()
    }
}

fn order_cap(max_order: usize, allow_large: bool) -> Result<()> {
    let cap = if allow_large {
        LARGE_MAX_ORDER
    } else {
        DEFAULT_MAX_ORDER
    };
    if max_order > cap {
        return Err(Error::CapExceeded {
            what: "corpus generation",
            order: max_order,
            cap,
        });
    }
    Ok(())
}

/// Members of the eleven families of order at most `max_order`, each with
/// every one of its removable doubletons.
pub fn seeds(max_order: usize) -> Vec<CorpusEntry> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in 4..=max_order {
        for m in families::members_in_n(n) {
            for r in removability::removable_doubletons(&m.graph) {
                let form = r_form(&m.graph, &r);
                if seen.insert(form.clone()) {
                    out.push(CorpusEntry {
                        graph: m.graph.clone(),
                        doubleton: r,
                        form,
                        origin: Origin::Seed(m.tag.clone()),
                    });
                }
            }
        }
    }
    out
}

/// Closure of the family members under [`expand_all`]. Expansion of one
/// frontier runs in parallel; results are merged in a fixed order, so the
/// output does not depend on scheduling.
pub fn generate_corpus(max_order: usize, allow_large: bool) -> Result<Corpus> {
    order_cap(max_order, allow_large)?;
    let mut entries = seeds(max_order);
    let mut index: HashMap<Vec<u8>, usize> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (e.form.clone(), i))
        .collect();
    let mut frontier: Vec<usize> = (0..entries.len()).collect();
    while !frontier.is_empty() {
        let expanded: Vec<Vec<ExpansionStep>> = frontier
            .par_iter()
            .map(|&i| expand_all(&entries[i].graph, &entries[i].doubleton, max_order))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (&parent, steps) in frontier.iter().zip(expanded) {
            for s in steps {
                if index.contains_key(&s.form) {
                    continue;
                }
                index.insert(s.form.clone(), entries.len());
                next.push(entries.len());
                entries.push(CorpusEntry {
                    graph: s.graph,
                    doubleton: s.doubleton,
                    form: s.form,
                    origin: Origin::Expansion {
                        parent,
                        edge: s.edge,
                    },
                });
            }
        }
        frontier = next;
    }
    // sort, then renumber parents
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&x, &y| {
        let (a, b) = (&entries[x], &entries[y]);
        (a.graph.order(), a.graph.size(), &a.form).cmp(&(b.graph.order(), b.graph.size(), &b.form))
    });
    let mut position = vec![0; entries.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let mut slots: Vec<Option<CorpusEntry>> = entries.into_iter().map(Some).collect();
    let entries = order
        .iter()
        .map(|&old| {
            let mut e = slots[old].take().unwrap();
            if let Origin::Expansion { parent, .. } = &mut e.origin {
                *parent = position[*parent];
            }
            e
        })
        .collect();
    Ok(Corpus { max_order, entries })
}

/// All simple R-bricks of order `n` (even, at most ten) up to isomorphism
/// preserving `R`, by direct enumeration of the bipartite graph `H`: the
/// colour classes are `0..n/2` and `n/2..n`, `alpha = {0, 1}` and
/// `beta = {n/2, n/2 + 1}`.
pub fn enumerate_r_bricks(n: usize) -> Result<Vec<(Graph, Doubleton, Vec<u8>)>> {
    if n > ENUMERATION_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "R-brick enumeration",
            order: n,
            cap: ENUMERATION_MAX_ORDER,
        });
    }
    if n < 4 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    let k = n / 2;
    let rows_at_least = |m: usize| -> Vec<VertexMask> {
        (0u32..1 << k).filter(|s| s.count_ones() as usize >= m).collect()
    };
    let small = rows_at_least(2);
    let large = rows_at_least(3);
    let mut rest_rows: Vec<Vec<VertexMask>> = Vec::new();
    multisets(&large, k - 2, 0, &mut Vec::new(), &mut rest_rows);
    let candidates: Vec<(VertexMask, VertexMask)> = small
        .iter()
        .enumerate()
        .flat_map(|(i, &r0)| small[i..].iter().map(move |&r1| (r0, r1)))
        .collect();
    let found: Vec<Vec<(Graph, Doubleton, Vec<u8>)>> = candidates
        .par_iter()
        .map(|&(r0, r1)| {
            let mut local = Vec::new();
            let mut seen = HashSet::new();
            for rest in &rest_rows {
                let mut rows = vec![r0, r1];
                rows.extend(rest);
                if let Some(entry) = r_brick_from_rows(k, &rows) {
                    if seen.insert(entry.2.clone()) {
                        local.push(entry);
                    }
                }
            }
            local
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out: Vec<(Graph, Doubleton, Vec<u8>)> = found
        .into_iter()
        .flatten()
        .filter(|e| seen.insert(e.2.clone()))
        .collect();
    out.sort_by(|x, y| (x.0.size(), &x.2).cmp(&(y.0.size(), &y.2)));
    Ok(out)
}

fn multisets(
    items: &[VertexMask],
    k: usize,
    from: usize,
    cur: &mut Vec<VertexMask>,
    out: &mut Vec<Vec<VertexMask>>,
) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in from..items.len() {
        cur.push(items[i]);
        multisets(items, k, i, cur, out);
        cur.pop();
    }
}

fn r_brick_from_rows(k: usize, rows: &[VertexMask]) -> Option<(Graph, Doubleton, Vec<u8>)> {
    let mut col_degree = vec![0usize; k];
    for &row in rows {
        for b in bits::iter(row) {
            col_degree[b] += 1;
        }
    }
    if col_degree[0] < 2 || col_degree[1] < 2 || col_degree[2..].iter().any(|&d| d < 3) {
        return None;
    }
    let mut g = Graph::new(2 * k);
    for (a, &row) in rows.iter().enumerate() {
        for b in bits::iter(row) {
            g.add_edge(a, k + b).unwrap();
        }
    }
    let alpha = g.add_edge(0, 1).unwrap();
    let beta = g.add_edge(k, k + 1).unwrap();
    if !structure::is_brick(&g) {
        return None;
    }
    let r = Doubleton::new(&g, alpha, beta).ok()?;
    let form = r_form(&g, &r);
    Some((g, r, form))
}

/// A corpus graph on which a checked statement fails.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub graph: String,
    pub alpha: Option<EdgeId>,
    pub beta: Option<EdgeId>,
    pub reason: String,
}

impl Counterexample {
    fn new(g: &Graph, r: Option<&Doubleton>, reason: String) -> Counterexample {
        Counterexample {
            graph: mcg::write(g),
            alpha: r.map(|r| r.alpha),
            beta: r.map(|r| r.beta),
            reason,
        }
    }
}

/// Outcome of one checked statement over a corpus: how many graphs were
/// examined, how many met its hypothesis, and where it failed.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub relevant: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    fn new(name: &str) -> CheckReport {
        CheckReport {
            name: name.into(),
            ..CheckReport::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn merge(&mut self, part: CheckReport) {
        self.checked += part.checked;
        self.relevant += part.relevant;
        self.counterexamples.extend(part.counterexamples);
    }
}

fn per_entry<F>(name: &str, corpus: &Corpus, f: F) -> Result<CheckReport>
where
    F: Fn(&CorpusEntry) -> Result<CheckReport> + Sync + Send,
{
    let parts: Vec<CheckReport> = corpus.entries.par_iter().map(f).collect::<Result<_>>()?;
    let mut report = CheckReport::new(name);
    for p in parts {
        report.merge(p);
    }
    Ok(report)
}

/// Every corpus R-brick free of strictly R-thin edges lies in one of the
/// eleven families.
pub fn verify_free_graphs_in_families(corpus: &Corpus) -> Result<CheckReport> {
    per_entry("free of strictly R-thin edges implies family member", corpus, |e| {
        let mut rep = CheckReport::new("");
        rep.checked = 1;
        if removability::strictly_r_thin_edges(&e.graph, &e.doubleton).is_empty() {
            rep.relevant = 1;
            if !families::recognize(&e.graph).in_n() {
                rep.counterexamples.push(Counterexample::new(
                    &e.graph,
                    Some(&e.doubleton),
                    "no strictly R-thin edge and in no family".into(),
                ));
            }
        }
        Ok(rep)
    })
}

/// Every distinct corpus graph free of compatible strictly thin edges is in
/// the eight-family list, and every member of the three excluded families
/// has a compatible strictly thin edge.
pub fn verify_compatible_free_graphs(corpus: &Corpus) -> Result<CheckReport> {
    let distinct = corpus.distinct_graphs();
    let parts: Vec<CheckReport> = distinct
        .par_iter()
        .map(|&i| {
            let g = &corpus.entries[i].graph;
            let mut rep = CheckReport::new("");
            rep.checked = 1;
            let has_compatible = removability::removable_doubletons(g)
                .iter()
                .any(|r| !removability::strictly_r_thin_edges(g, r).is_empty());
            let rec = families::recognize(g);
            if !has_compatible {
                rep.relevant = 1;
                if !rec.in_compatible_list() {
                    rep.counterexamples.push(Counterexample::new(
                        g,
                        None,
                        "no compatible strictly thin edge and not in the eight families".into(),
                    ));
                }
            }
            let excluded = rec.all.iter().all(|t| {
                matches!(
                    t.family,
                    Family::PseudoBiwheel | Family::DoubleBiwheelII | Family::LadderedBiwheelII
                )
            });
            if !rec.all.is_empty() && excluded && !has_compatible {
                rep.counterexamples.push(Counterexample::new(
                    g,
                    None,
                    format!("{rec} has no compatible strictly thin edge"),
                ));
            }
            Ok(rep)
        })
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new("free of compatible strictly thin edges implies listed family");
    for p in parts {
        report.merge(p);
    }
    Ok(report)
}

/// Structure of R-configurations on every corpus brick: at most two
/// distinct ones, pairwise almost disjoint, each with the expected
/// conformality and brace-like properties; and on bricks free of strictly
/// R-thin edges every R-thin edge of index one is an internal spoke of an
/// R-biwheel and every one of index two lies in an R-ladder.
pub fn verify_r_configurations(corpus: &Corpus) -> Result<CheckReport> {
    per_entry("R-configuration structure", corpus, |e| {
        let (g, r) = (&e.graph, &e.doubleton);
        let mut rep = CheckReport::new("");
        rep.checked = 1;
        let mut fail = |reason: String| {
            rep.counterexamples
                .push(Counterexample::new(g, Some(r), reason));
        };
        let configs = configurations::find_r_configurations(g, r)?;
        let distinct = configurations::distinct_subgraphs(&configs);
        if distinct.len() > 2 {
            fail(format!("{} distinct R-configurations", distinct.len()));
        }
        for (i, k1) in distinct.iter().enumerate() {
            for k2 in &distinct[i + 1..] {
                if !configurations::almost_disjoint(k1, k2) {
                    fail("two R-configurations overlap beyond their free corners".into());
                }
            }
        }
        for k in &configs {
            for p in configurations::property_failures(g, r, k) {
                fail(format!("R-configuration property fails: {p}"));
            }
        }
        if removability::strictly_r_thin_edges(g, r).is_empty() {
            rep.relevant = 1;
            for edge in g.edges() {
                let e = edge.id;
                if r.contains(e) || !removability::is_r_thin(g, r, e)? {
                    continue;
                }
                let covered = match removability::index_of(g, r, e)? {
                    1 => configs
                        .iter()
                        .any(|k| k.kind == ConfigurationKind::RBiwheel && k.has_internal(e)),
                    2 => configs
                        .iter()
                        .any(|k| k.kind == ConfigurationKind::RLadder && k.contains(e)),
                    _ => false,
                };
                if !covered {
                    fail(format!("R-thin edge {e} lies in no suitable R-configuration"));
                }
            }
        }
        drop(fail);
        Ok(rep)
    })
}

/// Reduction from every corpus entry ends in a family member.
pub fn verify_reductions(corpus: &Corpus) -> Result<CheckReport> {
    per_entry("reduction terminates in a family", corpus, |e| {
        let mut rep = CheckReport::new("");
        rep.checked = 1;
        rep.relevant = 1;
        match reduce(&e.graph, &e.doubleton) {
            Ok(_) => {}
            Err(Error::TheoremViolation(msg)) => rep.counterexamples.push(Counterexample::new(
                &e.graph,
                Some(&e.doubleton),
                msg,
            )),
            Err(err) => return Err(err),
        }
        Ok(rep)
    })
}

/// Comparison of the corpus with direct enumeration at one order.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerationComparison {
    pub order: usize,
    pub enumerated: usize,
    pub in_corpus: usize,
    pub missing_from_corpus: usize,
    pub not_enumerated: usize,
}

impl EnumerationComparison {
    pub fn agrees(&self) -> bool {
        self.missing_from_corpus == 0 && self.not_enumerated == 0
    }
}

/// Enumerates every R-brick of order `n` directly and compares with the
/// corpus entries of that order; also checks that each enumerated graph
/// free of strictly R-thin edges is a family member.
pub fn compare_with_enumeration(
    corpus: &Corpus,
    n: usize,
) -> Result<(EnumerationComparison, CheckReport)> {
    let listed = enumerate_r_bricks(n)?;
    let corpus_forms: HashSet<&Vec<u8>> = corpus
        .entries
        .iter()
        .filter(|e| e.graph.order() == n)
        .map(|e| &e.form)
        .collect();
    let listed_forms: HashSet<&Vec<u8>> = listed.iter().map(|x| &x.2).collect();
    let cmp = EnumerationComparison {
        order: n,
        enumerated: listed.len(),
        in_corpus: corpus_forms.len(),
        missing_from_corpus: listed_forms.difference(&corpus_forms).count(),
        not_enumerated: corpus_forms.difference(&listed_forms).count(),
    };
    let parts: Vec<CheckReport> = listed
        .par_iter()
        .map(|(g, r, _)| {
            let mut rep = CheckReport::new("");
            rep.checked = 1;
            if removability::strictly_r_thin_edges(g, r).is_empty() {
                rep.relevant = 1;
                if !families::recognize(g).in_n() {
                    rep.counterexamples.push(Counterexample::new(
                        g,
                        Some(r),
                        "enumerated R-brick without strictly R-thin edges is in no family".into(),
                    ));
                }
            }
            rep
        })
        .collect();
    let mut report = CheckReport::new(&format!("enumerated order {n}: free implies family member"));
    for p in parts {
        report.merge(p);
    }
    Ok((cmp, report))
}

/// Everything `verify` checks, for one maximum order.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_order: usize,
    pub corpus_size: usize,
    pub corpus_by_order: BTreeMap<usize, usize>,
    pub checks: Vec<CheckReport>,
    pub enumeration: Vec<EnumerationComparison>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed()) && self.enumeration.iter().all(|c| c.agrees())
    }

    pub fn counterexample_count(&self) -> usize {
        self.checks.iter().map(|c| c.counterexamples.len()).sum::<usize>()
            + self.enumeration.iter().filter(|c| !c.agrees()).count()
    }
}

pub fn verify(max_order: usize, allow_large: bool) -> Result<VerifyReport> {
    let corpus = generate_corpus(max_order, allow_large)?;
    verify_corpus(&corpus)
}

pub fn verify_corpus(corpus: &Corpus) -> Result<VerifyReport> {
    let mut checks = vec![
        verify_free_graphs_in_families(corpus)?,
        verify_compatible_free_graphs(corpus)?,
        verify_r_configurations(corpus)?,
        verify_reductions(corpus)?,
    ];
    let mut enumeration = Vec::new();
    for n in (4..=corpus.max_order.min(ENUMERATION_MAX_ORDER)).step_by(2) {
        let (cmp, rep) = compare_with_enumeration(corpus, n)?;
        enumeration.push(cmp);
        checks.push(rep);
    }
    Ok(VerifyReport {
        max_order: corpus.max_order,
        corpus_size: corpus.len(),
        corpus_by_order: corpus.counts_by_order(),
        checks,
        enumeration,
    })
}
