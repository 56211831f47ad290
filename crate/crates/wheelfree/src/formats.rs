//! Text formats: the edge-list format and graph6.
//!
//! Edge list: `#` starts a comment, the first remaining line of a block is
//! `n <count>` and every further line is `u v`. Blank lines separate graphs.
//!
//! graph6: one graph per line, an optional `>>graph6<<` header is dropped.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use wheelfree_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: malformed graph6 header")]
    MalformedHeader { line: usize },
    #[error("line {line}: truncated graph6 bit stream")]
    Truncated { line: usize },
    #[error("line {line}: {extra} unexpected trailing graph6 bytes")]
    Trailing { line: usize, extra: usize },
    #[error("expected exactly one graph, found {0}")]
    NotOneGraph(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Graph6,
    Edges,
}

struct Block {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Parses every graph of an edge-list document.
pub fn read_edge_lists(text: &str) -> Result<Vec<Graph>, FormatError> {
    let mut graphs = Vec::new();
    let mut block: Option<Block> = None;
    let finish = |b: Block, out: &mut Vec<Graph>| {
        let edges: Vec<_> = b.edges.into_iter().collect();
        out.push(Graph::from_edge_slice(b.n, &edges));
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            if let Some(b) = block.take() {
                finish(b, &mut graphs);
            }
            continue;
        }
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| FormatError::Syntax { line, msg: format!("expected a vertex number, found {s:?}") })
        };
        match &mut block {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(FormatError::Syntax { line, msg: "expected \"n <count>\"".into() });
                }
                block = Some(Block { n: number(fields[1])?, edges: BTreeSet::new() });
            }
            Some(b) => {
                if fields.len() != 2 {
                    return Err(FormatError::Syntax { line, msg: "expected \"u v\"".into() });
                }
                let (u, v) = (number(fields[0])?, number(fields[1])?);
                for vertex in [u, v] {
                    if vertex >= b.n {
                        return Err(FormatError::OutOfRange { line, vertex, n: b.n });
                    }
                }
                if u == v {
                    return Err(FormatError::SelfLoop { line, vertex: u });
                }
                b.edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    if let Some(b) = block {
        finish(b, &mut graphs);
    }
    Ok(graphs)
}

/// Parses a document holding exactly one edge-list graph.
pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut graphs = read_edge_lists(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        k => Err(FormatError::NotOneGraph(k)),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line (without newline). `line` is only used in errors.
pub fn decode_graph6(text: &str, line: usize) -> Result<Graph, FormatError> {
    let bytes = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::MalformedHeader { line });
    }
    let group = |i: usize| bytes.get(i).map(|&b| (b - 63) as usize);
    let read = |from: usize, count: usize| -> Option<usize> {
        (from..from + count).try_fold(0usize, |acc, i| Some(acc << 6 | group(i)?))
    };
    let (n, start) = match bytes.first() {
        None => return Err(FormatError::MalformedHeader { line }),
        Some(&126) if bytes.get(1) == Some(&126) => (read(2, 6).ok_or(FormatError::MalformedHeader { line })?, 8),
        Some(&126) => (read(1, 3).ok_or(FormatError::MalformedHeader { line })?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n.checked_mul(n.saturating_sub(1)).ok_or(FormatError::Truncated { line })? / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() < need {
        return Err(FormatError::Truncated { line });
    }
    if body.len() > need {
        return Err(FormatError::Trailing { line, extra: body.len() - need });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edge_slice(n, &edges))
}

/// Decodes a graph6 document: one graph per nonempty line.
pub fn read_graph6(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| decode_graph6(l.trim(), i + 1))
        .collect()
}

pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    decode_graph6(text.trim_end(), 1)
}

/// graph6 encoding without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| (n >> (6 * k) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn read_graphs(text: &str, format: Format) -> Result<Vec<Graph>, FormatError> {
    match format {
        Format::Graph6 => read_graph6(text),
        Format::Edges => read_edge_lists(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g) + "\n",
        Format::Edges => to_edge_list(g),
    }
}
