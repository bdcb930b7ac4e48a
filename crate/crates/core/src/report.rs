//! Serializable reports for the command-line front end. Every report
//! carries the schema tag [`SCHEMA`] and a `kind`.

use serde::Serialize;

use crate::engine::{Corpus, CorpusEntry, Origin, ReductionTrace, VerifyReport};
use crate::error::Result;
use crate::families::configurations::{self, RConfiguration};
use crate::families::{self, Recognition};
use crate::graph::{EdgeId, Graph};
use crate::matching;
use crate::mcg::{self, Document};
use crate::removability::{self, Doubleton, EdgeClass};
use crate::structure::{self, PieceKind};
use crate::transforms::Bicontraction;

pub const SCHEMA: &str = "brickforge/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub primary: Option<String>,
    pub all: Vec<String>,
}

impl From<&Recognition> for FamilyReport {
    fn from(r: &Recognition) -> FamilyReport {
        FamilyReport {
            primary: r.primary.as_ref().map(|t| t.to_string()),
            all: r.all.iter().map(|t| t.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub connected: bool,
    pub bipartite: bool,
    pub matching_covered: bool,
    pub bicritical: bool,
    pub three_connected: bool,
    pub brick: bool,
    /// Only meaningful for bipartite graphs.
    pub brace: Option<bool>,
    pub near_bipartite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubletonReport {
    pub alpha: EdgeId,
    pub beta: EdgeId,
    pub color_a: Vec<usize>,
    pub color_b: Vec<usize>,
    pub strictly_r_thin: Vec<EdgeId>,
    pub configurations: Vec<RConfiguration>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub kind: &'static str,
    pub order: usize,
    pub size: usize,
    pub simple: bool,
    pub predicates: Predicates,
    pub removable_edges: Vec<EdgeId>,
    pub doubletons: Vec<DoubletonReport>,
    pub edges: Vec<EdgeClass>,
    /// Number of bricks in a tight cut decomposition, for matching covered
    /// graphs.
    pub brick_count: Option<usize>,
    pub family: FamilyReport,
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let connected = g.is_connected();
    let bipartite = g.is_bipartite();
    let matching_covered = matching::is_matching_covered(g);
    let bicritical = matching::is_bicritical(g);
    let three_connected = structure::vertex_connectivity_at_least(g, 3);
    let brick = structure::is_brick(g);
    let brace = if bipartite && matching_covered {
        Some(structure::is_brace(g)?)
    } else {
        None
    };
    let doubletons = if matching_covered && !bipartite {
        removability::removable_doubletons(g)
    } else {
        Vec::new()
    };
    let removable_edges = if matching_covered {
        removability::removable_edges(g)
    } else {
        Vec::new()
    };
    let edges = if matching_covered && g.is_simple() {
        removability::classify_edges(g, &doubletons)?
    } else {
        Vec::new()
    };
    let mut doubleton_reports = Vec::new();
    for r in &doubletons {
        let (strictly, configs) = if brick && g.is_simple() {
            (
                removability::strictly_r_thin_edges(g, r),
                configurations::find_r_configurations(g, r)?,
            )
        } else {
            (Vec::new(), Vec::new())
        };
        doubleton_reports.push(DoubletonReport {
            alpha: r.alpha,
            beta: r.beta,
            color_a: r.color_a.clone(),
            color_b: r.color_b.clone(),
            strictly_r_thin: strictly,
            configurations: configs,
        });
    }
    let brick_count = if matching_covered {
        Some(structure::tight_cut_decomposition(g)?.brick_count())
    } else {
        None
    };
    Ok(AnalysisReport {
        schema: SCHEMA,
        kind: "analysis",
        order: g.order(),
        size: g.size(),
        simple: g.is_simple(),
        predicates: Predicates {
            connected,
            bipartite,
            matching_covered,
            bicritical,
            three_connected,
            brick,
            brace,
            near_bipartite: brick && !doubletons.is_empty(),
        },
        removable_edges,
        doubletons: doubleton_reports,
        edges,
        brick_count,
        family: FamilyReport::from(&families::recognize(g)),
    })
}

/// `mcg/1` text of an R-brick with its doubleton recorded as `R`.
pub fn r_brick_text(g: &Graph, r: &Doubleton, comments: &[String]) -> String {
    let mut all = comments.to_vec();
    all.push(mcg::doubleton_comment(g, "R", r.alpha, r.beta));
    Document::new(g, &all).render()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStepReport {
    pub order: usize,
    pub size: usize,
    pub alpha: EdgeId,
    pub beta: EdgeId,
    /// Strictly R-thin edge deleted, by id and ends.
    pub edge: EdgeId,
    pub edge_ends: (usize, usize),
    pub retract_log: Vec<Bicontraction>,
    pub graph: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub schema: &'static str,
    pub kind: &'static str,
    /// Number of graphs in the sequence, input and terminal included.
    pub length: usize,
    pub steps: Vec<ReductionStepReport>,
    pub terminal: String,
    pub terminal_alpha: EdgeId,
    pub terminal_beta: EdgeId,
    pub family: FamilyReport,
}

impl From<&ReductionTrace> for ReductionReport {
    fn from(t: &ReductionTrace) -> ReductionReport {
        let steps = t
            .steps
            .iter()
            .map(|s| ReductionStepReport {
                order: s.graph.order(),
                size: s.graph.size(),
                alpha: s.doubleton.alpha,
                beta: s.doubleton.beta,
                edge: s.edge,
                edge_ends: s.graph.edge(s.edge).map(|e| e.ends()).unwrap_or_default(),
                retract_log: s.retract.log.clone(),
                graph: r_brick_text(&s.graph, &s.doubleton, &[]),
            })
            .collect();
        ReductionReport {
            schema: SCHEMA,
            kind: "reduction",
            length: t.len(),
            steps,
            terminal: r_brick_text(&t.terminal, &t.terminal_doubleton, &[]),
            terminal_alpha: t.terminal_doubleton.alpha,
            terminal_beta: t.terminal_doubleton.beta,
            family: FamilyReport::from(&t.family),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceReport {
    pub kind: PieceKind,
    pub order: usize,
    pub size: usize,
    pub graph: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub schema: &'static str,
    pub kind: &'static str,
    pub brick_count: usize,
    pub brace_count: usize,
    pub pieces: Vec<PieceReport>,
}

pub fn decompose(g: &Graph) -> Result<DecompositionReport> {
    let d = structure::tight_cut_decomposition(g)?;
    let pieces: Vec<PieceReport> = d
        .pieces
        .iter()
        .map(|p| PieceReport {
            kind: p.kind,
            order: p.graph.order(),
            size: p.graph.size(),
            graph: mcg::write(&p.graph),
        })
        .collect();
    Ok(DecompositionReport {
        schema: SCHEMA,
        kind: "decomposition",
        brick_count: d.brick_count(),
        brace_count: pieces.len() - d.brick_count(),
        pieces,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub schema: &'static str,
    pub kind: &'static str,
    pub isomorphic: bool,
    /// Image of each vertex of the first graph.
    pub mapping: Option<Vec<usize>>,
}

pub fn iso(g: &Graph, h: &Graph) -> IsoReport {
    let mapping = crate::iso::find_isomorphism(g, h);
    IsoReport {
        schema: SCHEMA,
        kind: "isomorphism",
        isomorphic: mapping.is_some(),
        mapping,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusFile {
    pub path: String,
    pub order: usize,
    pub size: usize,
    pub origin: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusIndex {
    pub schema: &'static str,
    pub kind: &'static str,
    pub max_order: usize,
    pub count: usize,
    pub files: Vec<CorpusFile>,
}

/// File name of corpus entry `i`.
pub fn corpus_path(corpus: &Corpus, i: usize) -> String {
    let e = &corpus.entries[i];
    format!("n{:02}/{:06}.mcg", e.graph.order(), i)
}

fn origin_text(corpus: &Corpus, e: &CorpusEntry) -> String {
    match &e.origin {
        Origin::Seed(tag) => format!("seed {tag}"),
        Origin::Expansion { parent, edge } => {
            let (u, v) = e.graph.edge(*edge).map(|x| x.ends()).unwrap_or_default();
            let from = corpus_path(corpus, *parent);
            format!("expansion of {} adding {u} {v}", from.trim_end_matches(".mcg"))
        }
    }
}

/// The `mcg/1` text of every corpus entry and the index describing them.
pub fn corpus_files(corpus: &Corpus) -> (Vec<(String, String)>, CorpusIndex) {
    let mut texts = Vec::new();
    let mut files = Vec::new();
    for (i, e) in corpus.entries.iter().enumerate() {
        let path = corpus_path(corpus, i);
        let origin = origin_text(corpus, e);
        texts.push((
            path.clone(),
            r_brick_text(&e.graph, &e.doubleton, &[format!("origin {origin}")]),
        ));
        files.push(CorpusFile {
            path,
            order: e.graph.order(),
            size: e.graph.size(),
            origin,
        });
    }
    let index = CorpusIndex {
        schema: SCHEMA,
        kind: "corpus",
        max_order: corpus.max_order,
        count: files.len(),
        files,
    };
    (texts, index)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub schema: &'static str,
    pub kind: &'static str,
    pub passed: bool,
    pub counterexamples: usize,
    #[serde(flatten)]
    pub report: VerifyReport,
}

impl From<VerifyReport> for VerifySummary {
    fn from(report: VerifyReport) -> VerifySummary {
        VerifySummary {
            schema: SCHEMA,
            kind: "verification",
            passed: report.passed(),
            counterexamples: report.counterexample_count(),
            report,
        }
    }
}
