//! Brute-force oracles and corpus-wide property checks shared by the
//! integration tests. The oracles use only the public `Graph` API and
//! follow the definitions directly.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::sync::OnceLock;

use brickforge::engine::{self, Corpus};
use brickforge::families::configurations;
use brickforge::graph::{EdgeId, Graph};
use brickforge::removability::{self, Doubleton};
use brickforge::structure::{self, CutOrder};
use brickforge::{iso, matching, named, transforms};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_b41c;

pub fn corpus(max_order: usize) -> &'static Corpus {
    static EIGHT: OnceLock<Corpus> = OnceLock::new();
    static TEN: OnceLock<Corpus> = OnceLock::new();
    let cell = match max_order {
        8 => &EIGHT,
        10 => &TEN,
        _ => panic!("no cached corpus of order {max_order}"),
    };
    cell.get_or_init(|| engine::generate_corpus(max_order, false).unwrap())
}

// ---- oracles ----

/// Every perfect matching, as sorted edge id lists.
pub fn naive_pms(g: &Graph) -> Vec<Vec<EdgeId>> {
    fn go(g: &Graph, covered: &mut Vec<bool>, cur: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        let Some(v) = covered.iter().position(|&c| !c) else {
            let mut m = cur.clone();
            m.sort();
            out.push(m);
            return;
        };
        covered[v] = true;
        for e in g.edges() {
            if !e.is_incident(v) || e.u == e.v {
                continue;
            }
            let w = e.other(v);
            if covered[w] {
                continue;
            }
            covered[w] = true;
            cur.push(e.id);
            go(g, covered, cur, out);
            cur.pop();
            covered[w] = false;
        }
        covered[v] = false;
    }
    let mut out = Vec::new();
    if g.order() % 2 == 0 {
        go(g, &mut vec![false; g.order()], &mut Vec::new(), &mut out);
    }
    out
}

/// Whether `g` minus the given vertices has a perfect matching.
pub fn has_pm_avoiding(g: &Graph, removed: &[usize]) -> bool {
    fn go(g: &Graph, covered: &mut Vec<bool>) -> bool {
        let Some(v) = covered.iter().position(|&c| !c) else {
            return true;
        };
        covered[v] = true;
        for e in g.edges() {
            if e.is_incident(v) && e.u != e.v && !covered[e.other(v)] {
                let w = e.other(v);
                covered[w] = true;
                if go(g, covered) {
                    covered[w] = false;
                    covered[v] = false;
                    return true;
                }
                covered[w] = false;
            }
        }
        covered[v] = false;
        false
    }
    let mut covered = vec![false; g.order()];
    for &v in removed {
        covered[v] = true;
    }
    (g.order() - removed.len()) % 2 == 0 && go(g, &mut covered)
}

/// Connected components of `g` minus `removed`, as vertex lists.
pub fn components_avoiding(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    for &v in removed {
        seen[v] = true;
    }
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for e in g.edges() {
                if e.is_incident(x) {
                    let y = e.other(x);
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn naive_connected(g: &Graph) -> bool {
    components_avoiding(g, &[]).len() <= 1
}

pub fn naive_matching_covered(g: &Graph) -> bool {
    if g.order() < 2 || !naive_connected(g) {
        return false;
    }
    let pms = naive_pms(g);
    g.edges().iter().all(|e| pms.iter().any(|m| m.contains(&e.id)))
}

pub fn naive_removable(g: &Graph, e: EdgeId) -> bool {
    naive_matching_covered(&g.delete_edge(e).unwrap())
}

/// Proper 2-colouring with vertex 0 coloured `false`, if one exists.
pub fn naive_colouring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.order();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for e in g.edges() {
                if e.is_incident(x) {
                    let y = e.other(x);
                    let want = !colour[x].unwrap();
                    match colour[y] {
                        None => {
                            colour[y] = Some(want);
                            queue.push_back(y);
                        }
                        Some(c) if c != want => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    Some(colour.into_iter().map(Option::unwrap).collect())
}

/// Some nontrivial tight cut exists, checked against every perfect matching
/// and every odd shore.
pub fn naive_has_nontrivial_tight_cut(g: &Graph) -> bool {
    let n = g.order();
    let pms = naive_pms(g);
    let ends: Vec<Vec<(usize, usize)>> = pms
        .iter()
        .map(|m| m.iter().map(|&id| g.edge(id).unwrap().ends()).collect())
        .collect();
    // shores containing vertex 0 suffice
    for shore in 0u32..(1 << n) {
        if shore & 1 == 0 {
            continue;
        }
        let k = shore.count_ones() as usize;
        if k % 2 == 0 || k < 3 || n - k < 3 {
            continue;
        }
        let inside = |v: usize| shore & (1 << v) != 0;
        if ends
            .iter()
            .all(|m| m.iter().filter(|&&(u, v)| inside(u) != inside(v)).count() == 1)
        {
            return true;
        }
    }
    false
}

/// Brick by definition: nonbipartite, matching covered, no nontrivial
/// tight cut.
pub fn naive_brick(g: &Graph) -> bool {
    naive_colouring(g).is_none() && naive_matching_covered(g) && !naive_has_nontrivial_tight_cut(g)
}

pub fn naive_brace(g: &Graph) -> bool {
    naive_colouring(g).is_some() && naive_matching_covered(g) && !naive_has_nontrivial_tight_cut(g)
}

/// Every barrier: a nonempty set `S` with exactly `|S|` odd components in
/// `g - S`.
pub fn naive_barriers(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    for s in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| s & (1 << v) != 0).collect();
        let odd = components_avoiding(g, &set)
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count();
        if odd == set.len() {
            out.push(set);
        }
    }
    out
}

/// A removable doubleton by definition: `g - {x, y}` bipartite and matching
/// covered.
pub fn naive_is_removable_doubleton(g: &Graph, x: EdgeId, y: EdgeId) -> bool {
    let h = g.delete_edges(&[x, y]).unwrap();
    naive_colouring(&h).is_some() && naive_matching_covered(&h)
}

pub fn in_triangle(g: &Graph, e: EdgeId) -> bool {
    let (u, v) = g.edge(e).unwrap().ends();
    (0..g.order()).any(|w| w != u && w != v && g.multiplicity(u, w) > 0 && g.multiplicity(v, w) > 0)
}

// ---- corpus-wide checks; each returns a description of every failure ----

pub type Failures = Vec<String>;

fn fail(out: &mut Failures, what: String, g: &Graph) {
    if out.len() < 20 {
        out.push(format!("{what}\n{}", brickforge::mcg::write(g)));
    } else {
        out.push(what);
    }
}

fn colour_sets(r: &Doubleton) -> (Vec<usize>, Vec<usize>) {
    (r.color_a.clone(), r.color_b.clone())
}

/// Equivalence of matching coverage with Hall surplus and with every
/// (a, b) deletion having a perfect matching, on a bipartite graph with
/// colour classes `a` and `b`.
pub fn bipartite_mc_equivalence(h: &Graph, a: &[usize], b: &[usize]) -> Result<(), String> {
    let mc = naive_matching_covered(h);
    let surplus = proper_subsets(a).into_iter().all(|s| neighbourhood(h, &s).len() > s.len());
    let deletions = a.iter().all(|&x| b.iter().all(|&y| has_pm_avoiding(h, &[x, y])));
    let lib = matching::is_matching_covered(h);
    if mc == surplus && surplus == deletions && deletions == lib {
        Ok(())
    } else {
        Err(format!("mc {mc} surplus {surplus} deletions {deletions} library {lib}"))
    }
}

/// Equivalence of the three brace characterizations (order six or more).
pub fn brace_equivalence(h: &Graph, a: &[usize], b: &[usize]) -> Result<(), String> {
    let k = a.len();
    let brace = naive_brace(h);
    let surplus = naive_matching_covered(h)
        && proper_subsets(a)
            .into_iter()
            .filter(|s| s.len() + 1 < k)
            .all(|s| neighbourhood(h, &s).len() >= s.len() + 2);
    let mut deletions = naive_matching_covered(h);
    'outer: for i in 0..k {
        for j in i + 1..k {
            for p in 0..k {
                for q in p + 1..k {
                    if !has_pm_avoiding(h, &[a[i], a[j], b[p], b[q]]) {
                        deletions = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    let lib = matching::is_matching_covered(h) && structure::is_brace(h).unwrap();
    if brace == surplus && surplus == deletions && deletions == lib {
        Ok(())
    } else {
        Err(format!("brace {brace} surplus {surplus} deletions {deletions} library {lib}"))
    }
}

fn proper_subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let k = items.len();
    (1u32..(1 << k) - 1)
        .map(|m| (0..k).filter(|&i| m & (1 << i) != 0).map(|i| items[i]).collect())
        .collect()
}

fn neighbourhood(g: &Graph, s: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = s.iter().flat_map(|&v| g.neighbors(v)).collect();
    out.sort();
    out.dedup();
    out
}

/// Random bipartite graph with colour classes `0..k` and `k..2k`.
pub fn random_bipartite(rng: &mut ChaCha8Rng, k: usize, p: f64) -> Graph {
    let mut g = Graph::new(2 * k);
    for a in 0..k {
        for b in 0..k {
            if rng.gen_bool(p) {
                g.add_edge(a, k + b).unwrap();
            }
        }
    }
    g
}

/// Distinct underlying bipartite graphs of the corpus with their colour
/// classes.
pub fn underlying_graphs(c: &Corpus) -> Vec<(Graph, Vec<usize>, Vec<usize>)> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for e in &c.entries {
        let h = e.doubleton.underlying(&e.graph);
        if seen.insert(iso::canonical_form(&h)) {
            let (a, b) = colour_sets(&e.doubleton);
            out.push((h, a, b));
        }
    }
    out
}

pub fn check_exchange(c: &Corpus) -> Failures {
    let mut out = Failures::new();
    for (h, _, _) in underlying_graphs(c) {
        for e in removability::removable_edges(&h) {
            let he = h.delete_edge(e).unwrap();
            for f in removability::removable_edges(&he) {
                let f_in_h = removability::is_removable(&h, f).unwrap();
                let e_in_hf = removability::is_removable(&h.delete_edge(f).unwrap(), e).unwrap();
                if !(f_in_h && e_in_hf) {
                    fail(&mut out, format!("exchange fails for {e}, {f}"), &h);
                }
            }
        }
    }
    out
}

/// Non-removable edges are exactly those with a single-crossing partition
/// witness.
pub fn check_partition_witness(c: &Corpus) -> Failures {
    let mut out = Failures::new();
    for (h, a, b) in underlying_graphs(c) {
        let k = a.len();
        for edge in h.edges() {
            let e = edge.id;
            let (x, y) = if a.contains(&edge.u) { (edge.u, edge.v) } else { (edge.v, edge.u) };
            let mut witness = false;
            'search: for ma in 0u32..(1 << k) {
                for mb in 0u32..(1 << k) {
                    if ma.count_ones() != mb.count_ones() {
                        continue;
                    }
                    let a0 = |v: usize| ma & (1 << a.iter().position(|&t| t == v).unwrap()) != 0;
                    let b0 = |v: usize| mb & (1 << b.iter().position(|&t| t == v).unwrap()) != 0;
                    // e joins B0 to A1 and is the only such edge
                    if !(b0(y) && !a0(x)) {
                        continue;
                    }
                    let crossing = h
                        .edges()
                        .iter()
                        .filter(|f| {
                            let (fa, fb) = if a.contains(&f.u) { (f.u, f.v) } else { (f.v, f.u) };
                            b0(fb) && !a0(fa)
                        })
                        .count();
                    if crossing == 1 {
                        witness = true;
                        break 'search;
                    }
                }
            }
            let removable = removability::is_removable(&h, e).unwrap();
            if witness == removable {
                fail(&mut out, format!("edge {e}: removable {removable}, witness {witness}"), &h);
            }
        }
    }
    out
}

fn four_cycles_through(h: &Graph, e: EdgeId) -> Vec<[EdgeId; 4]> {
    // edges e = xy, then y-z, z-w, w-x
    let (x, y) = h.edge(e).unwrap().ends();
    let mut out = Vec::new();
    for f in h.incident(y) {
        if f.id == e {
            continue;
        }
        let z = f.other(y);
        if z == x {
            continue;
        }
        for g2 in h.incident(z) {
            if g2.id == f.id {
                continue;
            }
            let w = g2.other(z);
            if w == y || w == x {
                continue;
            }
            for g3 in h.incident(w) {
                if g3.id != g2.id && g3.other(w) == x && g3.id != e {
                    out.push([e, f.id, g2.id, g3.id]);
                }
            }
        }
    }
    out
}

pub fn check_quadrilateral_corollaries(c: &Corpus) -> Failures {
    let mut out = Failures::new();
    for (h, _, _) in underlying_graphs(c) {
        for edge in h.edges() {
            for q in four_cycles_through(&h, edge.id) {
                // nonadjacent pairs: (q0, q2), (q1, q3)
                let (e, f) = (q[0], q[2]);
                let he = h.delete_edge(e).unwrap();
                if matching::is_admissible(&he, f).unwrap() && !removability::is_removable(&h, e).unwrap() {
                    fail(&mut out, format!("{f} admissible in H - {e} but {e} not removable"), &h);
                }
                // q0 and q1 share an end
                let (a0, a1) = h.edge(q[0]).unwrap().ends();
                let y = if h.edge(q[1]).unwrap().is_incident(a0) { a0 } else { a1 };
                if h.degree(y) >= 3
                    && !removability::is_removable(&h, q[0]).unwrap()
                    && !removability::is_removable(&h, q[1]).unwrap()
                {
                    fail(&mut out, format!("neither {} nor {} removable", q[0], q[1]), &h);
                }
            }
        }
        for v in 0..h.order() {
            let bad = h
                .incident(v)
                .filter(|e| !removability::is_removable(&h, e.id).unwrap())
                .count();
            if bad > 2 {
                fail(&mut out, format!("{bad} non-removable edges at vertex {v}"), &h);
            }
        }
    }
    out
}

pub fn check_thin_equivalence_and_index(c: &Corpus) -> Failures {
    let mut out = Failures::new();
    for entry in &c.entries {
        let (g, r) = (&entry.graph, &entry.doubleton);
        for edge in g.edges() {
            let e = edge.id;
            if r.contains(e) || !removability::is_r_compatible(g, r, e).unwrap() {
                continue;
            }
            let thin = removability::is_r_thin(g, r, e).unwrap();
            let small = naive_barriers(&g.delete_edge(e).unwrap())
                .iter()
                .all(|b| b.len() <= 2);
            if thin != small {
                fail(&mut out, format!("edge {e}: R-thin {thin}, barriers at most two {small}"), g);
            }
            if thin {
                let (u, v) = edge.ends();
                let cubic = [u, v].iter().filter(|&&x| g.degree(x) == 3).count();
                let expected = match cubic {
                    0 => Some(0),
                    1 => Some(1),
                    _ if !in_triangle(g, e) => Some(2),
                    _ => None,
                };
                let index = removability::index_of(g, r, e).unwrap();
                if expected != Some(index) {
                    fail(&mut out, format!("edge {e}: index {index}, degree criterion {expected:?}"), g);
                }
            }
        }
    }
    out
}

fn is_k4_or_c6_bar(g: &Graph) -> bool {
    iso::are_isomorphic(g, &named::k4()) || iso::are_isomorphic(g, &named::c6_bar())
}

pub fn check_existence(c: &Corpus) -> Failures {
    let mut out = Failures::new();
    for entry in &c.entries {
        let (g, r) = (&entry.graph, &entry.doubleton);
        if is_k4_or_c6_bar(g) {
            continue;
        }
        let compatible = g
            .edge_ids()
            .into_iter()
            .any(|e| !r.contains(e) && removability::is_r_compatible(g, r, e).unwrap());
        if !compatible {
            fail(&mut out, "no R-compatible edge".into(), g);
        }
        if removability::find_r_thin_edge(g, r).is_none() {
            fail(&mut out, "no R-thin edge".into(), g);
        }
    }
    out
}

pub fn check_rank_index_dichotomy(c: &Corpus) -> Failures {
    let mut out = Failures::new();
    for entry in &c.entries {
        let (g, r) = (&entry.graph, &entry.doubleton);
        if is_k4_or_c6_bar(g) {
            continue;
        }
        let compatible: Vec<EdgeId> = g
            .edge_ids()
            .into_iter()
            .filter(|&e| !r.contains(e) && removability::is_r_compatible(g, r, e).unwrap())
            .collect();
        let score = |e: EdgeId| {
            removability::rank_of(g, r, e).unwrap() + removability::index_of(g, r, e).unwrap() as usize
        };
        for &e in &compatible {
            if removability::is_r_thin(g, r, e).unwrap() {
                continue;
            }
            let ge = g.delete_edge(e).unwrap();
            let barriers = matching::maximal_barriers(&ge).unwrap();
            let end_in_barrier = |x: usize| {
                let nbrs = ge.neighbors(x);
                barriers
                    .iter()
                    .any(|b| nbrs.iter().all(|v| b.vertices().contains(v)))
            };
            let found = compatible.iter().any(|&f| {
                let (x, y) = g.edge(f).unwrap().ends();
                f != e && (end_in_barrier(x) || end_in_barrier(y)) && score(f) > score(e)
            });
            if !found {
                fail(&mut out, format!("no witness edge for non-thin {e}"), g);
            }
        }
    }
    out
}

pub fn check_configurations(c: &Corpus) -> Failures {
    let rep = engine::verify_r_configurations(c).unwrap();
    let mut out = Failures::new();
    for x in rep.counterexamples {
        out.push(format!("{}\n{}", x.reason, x.graph));
    }
    if rep.checked != c.len() {
        out.push("not every corpus entry was checked".into());
    }
    // the R-ladders and R-biwheels of the family members are found
    for entry in &c.entries {
        let found = configurations::find_r_configurations(&entry.graph, &entry.doubleton).unwrap();
        for k in &found {
            for e in &k.internal {
                if !removability::is_r_thin(&entry.graph, &entry.doubleton, *e).unwrap() {
                    fail(&mut out, format!("internal edge {e} is not R-thin"), &entry.graph);
                }
            }
        }
    }
    out
}

/// Graphs with several degree-2 vertices: corpus bricks with one to three
/// random bi-splits applied.
pub fn split_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let c = corpus(8);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut g = c.entries[rng.gen_range(0..c.len())].graph.clone();
        for _ in 0..rng.gen_range(1..=3) {
            let v = rng.gen_range(0..g.order());
            let at: Vec<EdgeId> = g.incident(v).map(|e| e.id).collect();
            if at.len() < 2 || g.order() + 2 > 16 {
                continue;
            }
            let cut = rng.gen_range(1..at.len());
            let mut shuffled = at.clone();
            for i in (1..shuffled.len()).rev() {
                shuffled.swap(i, rng.gen_range(0..=i));
            }
            g = transforms::bi_split(&g, v, &shuffled[..cut], &shuffled[cut..])
                .unwrap()
                .graph;
        }
        out.push(g);
    }
    out
}

pub fn check_retract_uniqueness(graphs: &[Graph], orders: usize, seed: u64) -> Failures {
    let mut out = Failures::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for g in graphs {
        let reference = transforms::retract(g).graph;
        for _ in 0..orders {
            let r = transforms::retract_with(g, |c| rng.gen_range(0..c.len()));
            if !iso::are_isomorphic(&r.graph, &reference) {
                fail(&mut out, "retract depends on the order of bicontractions".into(), g);
            }
        }
    }
    out
}

/// Matching covered graphs with nontrivial tight cut decompositions.
pub fn decomposition_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    let p = named::petersen();
    out.push(p.delete_edge(EdgeId(0)).unwrap());
    let t = named::tricorn();
    out.push(t.delete_edge(named::TRICORN_REMOVABLE[0]).unwrap());
    let f = named::t8_expansion();
    for e in removability::removable_edges(&f).into_iter().take(4) {
        out.push(f.delete_edge(e).unwrap());
    }
    let c = corpus(10);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    while out.len() < 40 {
        let entry = &c.entries[rng.gen_range(0..c.len())];
        let removable = removability::removable_edges(&entry.graph);
        if removable.is_empty() {
            continue;
        }
        let e = removable[rng.gen_range(0..removable.len())];
        out.push(entry.graph.delete_edge(e).unwrap());
    }
    out.extend(split_graphs(10, SEED + 1).into_iter().filter(|g| g.order() <= 12));
    out
}

pub fn check_decomposition_invariance(graphs: &[Graph]) -> Failures {
    let mut out = Failures::new();
    for g in graphs {
        if !matching::is_matching_covered(g) {
            continue;
        }
        let reference = structure::tight_cut_decomposition_ordered(g, CutOrder::FastPaths).unwrap();
        for order in CutOrder::ALL {
            let d = structure::tight_cut_decomposition_ordered(g, order).unwrap();
            let same_pieces = d.signature() == reference.signature()
                && reference.pieces.iter().all(|p| {
                    d.pieces.iter().any(|q| {
                        q.kind == p.kind && same_underlying(&q.graph, &p.graph)
                    })
                });
            if !same_pieces || d.brick_count() != reference.brick_count() {
                fail(&mut out, format!("decomposition differs under {order:?}"), g);
            }
        }
    }
    out
}

/// Isomorphic after collapsing parallel edges.
fn same_underlying(g: &Graph, h: &Graph) -> bool {
    let simple = |x: &Graph| {
        let mut s = Graph::new(x.order());
        for e in x.edges() {
            if s.multiplicity(e.u, e.v) == 0 {
                s.add_edge(e.u, e.v).unwrap();
            }
        }
        s
    };
    iso::are_isomorphic(&simple(g), &simple(h))
}

/// Reduction from every corpus entry: each graph in the sequence is a simple
/// R-brick and the last one is a family member.
pub fn check_reduction_totality(c: &Corpus) -> Failures {
    let mut out = Failures::new();
    for entry in &c.entries {
        match engine::reduce(&entry.graph, &entry.doubleton) {
            Ok(trace) => {
                let graphs = trace
                    .steps
                    .iter()
                    .map(|s| (&s.graph, &s.doubleton))
                    .chain([(&trace.terminal, &trace.terminal_doubleton)]);
                for (g, r) in graphs {
                    let ok = g.is_simple()
                        && structure::is_brick(g)
                        && Doubleton::new(g, r.alpha, r.beta).is_ok_and(|d| &d == r);
                    if !ok {
                        fail(&mut out, "intermediate graph is not a simple R-brick".into(), g);
                    }
                }
                if !trace.family.in_n() {
                    fail(&mut out, "terminal graph in no family".into(), &trace.terminal);
                }
            }
            Err(e) => fail(&mut out, format!("reduction failed: {e}"), &entry.graph),
        }
    }
    out
}

pub fn check_bricks_by_definition(graphs: &[Graph]) -> Failures {
    let mut out = Failures::new();
    for g in graphs {
        if structure::is_brick(g) != naive_brick(g) {
            fail(&mut out, "brick test disagrees with the tight cut definition".into(), g);
        }
    }
    out
}
