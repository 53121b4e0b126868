//! Line-oriented instance files.
//!
//! ```text
//! nodetrix 1
//! model fixed
//!
//! [vertices]
//! a
//! b
//! x
//!
//! [clusters]
//! A = a b
//!
//! [intra]
//! a b
//!
//! [inter]
//! a:T x
//! ```
//!
//! Sections come in this order and each may be omitted. A vertex listed in
//! no cluster forms a trivial cluster of the same name. Inter-cluster
//! endpoints carry `:T`, `:R`, `:B` or `:L` in the fixed model and nothing in
//! the free model. `#` starts a comment. The canonical form sorts every list
//! by name and omits implicit trivial clusters.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::model::{Cluster, ClusteredGraph, Side, SideMap, Violation};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid instance: {0}")]
    Invalid(Violation),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Vertices,
    Clusters,
    Intra,
    Inter,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: line[..s].chars().count() + 1 });
    }
    out
}

fn is_name(s: &str) -> bool {
    !s.is_empty() && !s.contains([':', '=', '#', '[', ']'])
}

/// Parses an instance file and validates the result.
pub fn parse(text: &str) -> Result<ClusteredGraph, FormatError> {
    let mut header = false;
    let mut fixed = None;
    let mut section: Option<Section> = None;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut clusters: Vec<Cluster> = Vec::new();
    let mut edges: Vec<[usize; 2]> = Vec::new();
    let mut sides = SideMap::new();
    let mut pending_sides: Vec<(usize, usize, Side)> = Vec::new();
    let mut inter_lines: Vec<(usize, usize)> = Vec::new();
    let mut intra_lines: Vec<(usize, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap();
        let toks = tokens(line);
        let Some(first) = toks.first() else { continue };
        let err = |column: usize, message: String| FormatError::Syntax { line: line_no, column, message };
        if !header {
            if toks.len() != 2 || first.text != "nodetrix" {
                return Err(err(first.column, "expected header `nodetrix 1`".into()));
            }
            if toks[1].text != FORMAT_VERSION.to_string() {
                return Err(err(toks[1].column, format!("unsupported version {}", toks[1].text)));
            }
            header = true;
            continue;
        }
        if first.text.starts_with('[') {
            let next = match first.text {
                "[vertices]" => Section::Vertices,
                "[clusters]" => Section::Clusters,
                "[intra]" => Section::Intra,
                "[inter]" => Section::Inter,
                other => return Err(err(first.column, format!("unknown section {other}"))),
            };
            if toks.len() > 1 {
                return Err(err(toks[1].column, "unexpected text after section header".into()));
            }
            if fixed.is_none() {
                return Err(err(first.column, "expected `model fixed` or `model free` before the first section".into()));
            }
            if section.is_some_and(|s| s >= next) {
                return Err(err(first.column, format!("section {} out of order or repeated", first.text)));
            }
            section = Some(next);
            continue;
        }
        let vertex = |t: &Token| -> Result<usize, FormatError> {
            index.get(t.text).copied().ok_or_else(|| err(t.column, format!("unknown vertex {}", t.text)))
        };
        match section {
            None => {
                if first.text != "model" || toks.len() != 2 || fixed.is_some() {
                    return Err(err(first.column, "expected a single `model fixed` or `model free` line".into()));
                }
                fixed = Some(match toks[1].text {
                    "fixed" => true,
                    "free" => false,
                    other => return Err(err(toks[1].column, format!("unknown model {other}"))),
                });
            }
            Some(Section::Vertices) => {
                for t in &toks {
                    if !is_name(t.text) {
                        return Err(err(t.column, format!("bad vertex name {}", t.text)));
                    }
                    if index.insert(t.text.to_string(), names.len()).is_some() {
                        return Err(err(t.column, format!("vertex {} declared twice", t.text)));
                    }
                    names.push(t.text.to_string());
                }
            }
            Some(Section::Clusters) => {
                if toks.len() < 3 || toks[1].text != "=" {
                    return Err(err(first.column, "expected `NAME = v1 v2 ...`".into()));
                }
                if !is_name(first.text) {
                    return Err(err(first.column, format!("bad cluster name {}", first.text)));
                }
                let vertices = toks[2..].iter().map(vertex).collect::<Result<Vec<_>, _>>()?;
                clusters.push(Cluster { name: first.text.to_string(), vertices });
            }
            Some(Section::Intra) => {
                if toks.len() != 2 {
                    return Err(err(first.column, "expected `u v`".into()));
                }
                edges.push([vertex(&toks[0])?, vertex(&toks[1])?]);
                intra_lines.push((line_no, first.column));
            }
            Some(Section::Inter) => {
                if toks.len() != 2 {
                    return Err(err(first.column, "expected `u[:SIDE] v[:SIDE]`".into()));
                }
                let mut ends = [0; 2];
                for (end, t) in ends.iter_mut().zip(&toks) {
                    let (name, side) = match t.text.split_once(':') {
                        Some((n, s)) => (n, Some(s)),
                        None => (t.text, None),
                    };
                    *end = vertex(&Token { text: name, column: t.column })?;
                    if let Some(s) = side {
                        let column = t.column + name.chars().count() + 1;
                        if fixed == Some(false) {
                            return Err(err(column, "sides are not allowed in the free model".into()));
                        }
                        let mut chars = s.chars();
                        let side = match (chars.next().and_then(Side::from_letter), chars.next()) {
                            (Some(side), None) => side,
                            _ => return Err(err(column, format!("unknown side {s:?}, expected T, R, B or L"))),
                        };
                        pending_sides.push((edges.len(), *end, side));
                    }
                }
                edges.push(ends);
                inter_lines.push((line_no, first.column));
            }
        }
    }
    if !header {
        return Err(FormatError::Syntax { line: 1, column: 1, message: "missing header `nodetrix 1`".into() });
    }
    if fixed.is_none() {
        return Err(FormatError::Syntax { line: 1, column: 1, message: "missing `model` line".into() });
    }

    let clustered: BTreeSet<usize> = clusters.iter().flat_map(|c| c.vertices.iter().copied()).collect();
    for (v, name) in names.iter().enumerate() {
        if !clustered.contains(&v) {
            clusters.push(Cluster { name: name.clone(), vertices: vec![v] });
        }
    }
    let g = ClusteredGraph::new(names, edges.clone(), clusters, None);
    // Edge list position decides the section an edge came from.
    let mut intra = intra_lines.iter();
    let mut inter = inter_lines.iter();
    let first_inter = edges.len() - inter_lines.len();
    for (e, &[u, v]) in edges.iter().enumerate() {
        let same = g.cluster_of(u) == g.cluster_of(v);
        let (line, column) = if e < first_inter { *intra.next().unwrap() } else { *inter.next().unwrap() };
        if e < first_inter && !same {
            return Err(FormatError::Syntax { line, column, message: "edge joins two clusters, list it under [inter]".into() });
        }
        if e >= first_inter && same {
            return Err(FormatError::Syntax { line, column, message: "edge inside one cluster, list it under [intra]".into() });
        }
    }
    for (e, v, side) in pending_sides {
        sides.insert((e, g.cluster_of(v)), side);
    }
    let g = if fixed == Some(true) { g.with_sides(sides) } else { g };
    match g.validate().into_iter().next() {
        Some(v) => Err(FormatError::Invalid(v)),
        None => Ok(g),
    }
}

/// Canonical text of `g`: the fixed model iff `g` carries a side assignment.
pub fn serialize(g: &ClusteredGraph) -> String {
    let name = |v: usize| g.vertex_names[v].as_str();
    let mut out = format!("nodetrix {FORMAT_VERSION}\nmodel {}\n", if g.sides.is_some() { "fixed" } else { "free" });
    let mut vertices: Vec<&str> = g.vertex_names.iter().map(String::as_str).collect();
    vertices.sort_unstable();
    out.push_str("\n[vertices]\n");
    for v in vertices {
        out.push_str(v);
        out.push('\n');
    }
    let mut clusters: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for c in &g.clusters {
        if c.vertices.len() == 1 && g.vertex_names[c.vertices[0]] == c.name {
            continue;
        }
        let mut vs: Vec<&str> = c.vertices.iter().map(|&v| name(v)).collect();
        vs.sort_unstable();
        clusters.insert(&c.name, vs);
    }
    out.push_str("\n[clusters]\n");
    for (c, vs) in clusters {
        out.push_str(&format!("{c} = {}\n", vs.join(" ")));
    }
    let mut intra = Vec::new();
    let mut inter = Vec::new();
    for (e, &[u, v]) in g.edges.iter().enumerate() {
        let mut ends = [u, v];
        ends.sort_by_key(|&x| name(x));
        if g.is_inter(e) {
            let end = |x: usize| match g.side(e, g.cluster_of(x)) {
                Some(s) => format!("{}:{s}", name(x)),
                None => name(x).to_string(),
            };
            inter.push(format!("{} {}", end(ends[0]), end(ends[1])));
        } else {
            intra.push(format!("{} {}", name(ends[0]), name(ends[1])));
        }
    }
    intra.sort_unstable();
    inter.sort_unstable();
    out.push_str("\n[intra]\n");
    for l in intra {
        out.push_str(&l);
        out.push('\n');
    }
    out.push_str("\n[inter]\n");
    for l in inter {
        out.push_str(&l);
        out.push('\n');
    }
    out
}
