//! The `mcg/1` text format.
//!
//! ```text
//! c any comment
//! p mcg <n> <m>
//! e <u> <v>
//! ...
//! ```
//!
//! Vertices are 0-based, parallel edges repeat their `e` line, and the
//! `i`-th `e` line defines `EdgeId(i)`. Two comment forms carry structure:
//! `c doubleton <name> <alpha> <beta>` names a removable doubleton by edge
//! ids, and `c label <v> <text>` attaches a vertex annotation.
//!
//! Parsing keeps comment and blank lines in place, so a canonically spaced
//! file renders back byte for byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Line {
    Comment(String),
    Blank,
    Header,
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    graph: Graph,
    lines: Vec<Line>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} `{tok}` is not a non-negative integer")))
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let mut lines = Vec::new();
        let mut header: Option<(usize, usize)> = None;
        let mut graph = Graph::new(0);
        let mut labels = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let no = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                lines.push(Line::Blank);
                continue;
            }
            let mut toks = trimmed.split_whitespace();
            match toks.next() {
                Some("c") => {
                    let rest: Vec<&str> = toks.collect();
                    if rest.first() == Some(&"label") {
                        let v = parse_num(rest.get(1).copied(), no, "label vertex")?;
                        labels.push((no, v, rest[2..].join(" ")));
                    }
                    lines.push(Line::Comment(raw.to_string()));
                }
                Some("p") => {
                    if header.is_some() {
                        return Err(parse_err(no, "duplicate `p` line"));
                    }
                    if toks.next() != Some("mcg") {
                        return Err(parse_err(no, "expected `p mcg <n> <m>`"));
                    }
                    let n = parse_num(toks.next(), no, "vertex count")?;
                    let m = parse_num(toks.next(), no, "edge count")?;
                    if toks.next().is_some() {
                        return Err(parse_err(no, "trailing tokens after edge count"));
                    }
                    if n > crate::graph::MAX_ORDER {
                        return Err(parse_err(
                            no,
                            format!("{n} vertices exceeds the supported {}", crate::graph::MAX_ORDER),
                        ));
                    }
                    graph = Graph::new(n);
                    header = Some((n, m));
                    lines.push(Line::Header);
                }
                Some("e") => {
                    if header.is_none() {
                        return Err(parse_err(no, "`e` line before the `p mcg` line"));
                    }
                    let u = parse_num(toks.next(), no, "endpoint")?;
                    let v = parse_num(toks.next(), no, "endpoint")?;
                    if toks.next().is_some() {
                        return Err(parse_err(no, "trailing tokens after edge"));
                    }
                    graph.add_edge(u, v).map_err(|e| parse_err(no, e.to_string()))?;
                    lines.push(Line::Edge);
                }
                Some(other) => {
                    return Err(parse_err(no, format!("unknown line type `{other}`")));
                }
                None => unreachable!(),
            }
        }
        let (_, m) = header.ok_or_else(|| parse_err(1, "missing `p mcg <n> <m>` line"))?;
        if graph.size() != m {
            return Err(parse_err(
                text.lines().count().max(1),
                format!("header declares {m} edges, found {}", graph.size()),
            ));
        }
        for (no, v, text) in labels {
            if v >= graph.order() {
                return Err(parse_err(no, format!("label for unknown vertex {v}")));
            }
            graph.set_label(v, text);
        }
        Ok(Document { graph, lines })
    }

    /// A document for `g` with the given comment lines (without the leading
    /// `c `) placed before the header. Edge ids are renumbered densely in
    /// their current order; use [`dense_ids`] to translate ids.
    pub fn new(g: &Graph, comments: &[String]) -> Document {
        let mut lines: Vec<Line> = comments
            .iter()
            .map(|c| Line::Comment(format!("c {c}")))
            .collect();
        for v in 0..g.order() {
            if let Some(l) = g.label(v) {
                lines.push(Line::Comment(format!("c label {v} {l}")));
            }
        }
        lines.push(Line::Header);
        lines.extend(std::iter::repeat(Line::Edge).take(g.size()));
        Document {
            graph: renumbered(g),
            lines,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Comment lines with the leading `c` and one space stripped.
    pub fn comments(&self) -> Vec<&str> {
        self.lines
            .iter()
            .filter_map(|l| match l {
                Line::Comment(s) => {
                    let t = s.trim_start();
                    Some(t[1..].strip_prefix(' ').unwrap_or(&t[1..]))
                }
                _ => None,
            })
            .collect()
    }

    /// Doubletons declared with `c doubleton <name> <alpha> <beta>`.
    pub fn doubletons(&self) -> Result<Vec<(String, EdgeId, EdgeId)>> {
        let mut out = Vec::new();
        for (i, l) in self.lines.iter().enumerate() {
            let Line::Comment(s) = l else { continue };
            let toks: Vec<&str> = s.split_whitespace().collect();
            if toks.get(1) != Some(&"doubleton") {
                continue;
            }
            if toks.len() != 5 {
                return Err(parse_err(i + 1, "expected `c doubleton <name> <alpha> <beta>`"));
            }
            let a = parse_num(Some(toks[3]), i + 1, "edge id")?;
            let b = parse_num(Some(toks[4]), i + 1, "edge id")?;
            for x in [a, b] {
                if x >= self.graph.size() {
                    return Err(parse_err(i + 1, format!("unknown edge id {x}")));
                }
            }
            out.push((toks[2].to_string(), EdgeId(a as u32), EdgeId(b as u32)));
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut edges = self.graph.edges().iter();
        for l in &self.lines {
            match l {
                Line::Comment(s) => out.push_str(s),
                Line::Blank => {}
                Line::Header => {
                    write!(out, "p mcg {} {}", self.graph.order(), self.graph.size()).unwrap();
                }
                Line::Edge => {
                    let e = edges.next().expect("edge line count matches");
                    write!(out, "e {} {}", e.u, e.v).unwrap();
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Same graph with ids `0..m` in current edge order.
fn renumbered(g: &Graph) -> Graph {
    let mut h = Graph::new(g.order());
    for e in g.edges() {
        h.add_edge(e.u, e.v).unwrap();
    }
    for v in 0..g.order() {
        if let Some(l) = g.label(v) {
            h.set_label(v, l);
        }
    }
    h
}

/// Position of `id` among the edges of `g`, which is the id it receives
/// when `g` is written out.
pub fn dense_id(g: &Graph, id: EdgeId) -> Option<EdgeId> {
    g.edges()
        .iter()
        .position(|e| e.id == id)
        .map(|i| EdgeId(i as u32))
}

/// `c doubleton` comment body for the pair `(alpha, beta)` of `g`, using
/// the ids the edges will have in the written file.
pub fn doubleton_comment(g: &Graph, name: &str, alpha: EdgeId, beta: EdgeId) -> String {
    let a = dense_id(g, alpha).expect("alpha in graph");
    let b = dense_id(g, beta).expect("beta in graph");
    format!("doubleton {name} {} {}", a.0, b.0)
}

pub fn parse(text: &str) -> Result<Graph> {
    Document::parse(text).map(Document::into_graph)
}

pub fn write(g: &Graph) -> String {
    Document::new(g, &[]).render()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn round_trip_with_comments() {
        let text = "c hello\np mcg 3 3\ne 0 1\nc middle\ne 1 2\n\ne 0 1\n";
        let doc = Document::parse(text).unwrap();
        assert_eq!(doc.render(), text);
        assert_eq!(doc.graph().multiplicity(0, 1), 2);
        assert_eq!(doc.comments(), vec!["hello", "middle"]);
    }

    #[test]
    fn write_then_parse() {
        let g = named::petersen();
        let text = write(&g);
        assert!(text.starts_with("p mcg 10 15\n"));
        assert_eq!(parse(&text).unwrap(), g);
        assert_eq!(write(&parse(&text).unwrap()), text);
    }

    #[test]
    fn doubleton_lines() {
        let text = "p mcg 4 6\nc doubleton R 0 5\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";
        let doc = Document::parse(text).unwrap();
        assert_eq!(
            doc.doubletons().unwrap(),
            vec![("R".to_string(), EdgeId(0), EdgeId(5))]
        );
    }

    #[test]
    fn ids_are_renumbered_on_write() {
        let g = named::k4().delete_edge(EdgeId(1)).unwrap();
        assert_eq!(dense_id(&g, EdgeId(5)), Some(EdgeId(4)));
        assert_eq!(doubleton_comment(&g, "R", EdgeId(0), EdgeId(5)), "doubleton R 0 4");
    }

    #[test]
    fn labels_survive() {
        let mut g = named::path(3);
        g.set_label(1, "x:0,4");
        let back = parse(&write(&g)).unwrap();
        assert_eq!(back.label(1), Some("x:0,4"));
        assert_eq!(back.label(0), None);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("e 0 1\n", 1),
            ("p mcg 2 1\ne 0 0\n", 2),
            ("p mcg 2 1\ne 0 5\n", 2),
            ("p mcg 2 1\nq\n", 2),
            ("p mcg 2 2\ne 0 1\n", 2),
            ("p mcg x 1\n", 1),
            ("c only\n", 1),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
