//! Plain-text file formats.
//!
//! Tournament files: line one holds n, then n rows of '0'/'1' characters
//! (row u, column v is '1' iff the arc (u,v) exists), then optionally a line
//! "weights: w_0 w_1 ... w_{n-1}" with exact rationals ("p/q", integers, or
//! finite decimals). Graph files: "n m" then m lines "u v". A '#' starts a
//! comment line in either format.

use crate::error::{Error, Result};
use crate::reductions::{GraphInstance, ReductionInstance};
use crate::tournament::Tournament;
use crate::weights::{format_weight, parse_weight, WeightMap};
use num::One;

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a tournament file; the weight map defaults to all ones.
pub fn parse_tournament(text: &str) -> Result<(Tournament, WeightMap)> {
    let mut lines = content_lines(text);
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty tournament file".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
    let mut matrix = Vec::with_capacity(n);
    for u in 0..n {
        let row = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing adjacency row {u}")))?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {u} has {} columns, expected {n}",
                row.len()
            )));
        }
        let bits: Result<Vec<bool>> = row
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("bad character '{other}' in row {u}"))),
            })
            .collect();
        matrix.push(bits?);
    }
    let t = Tournament::from_adjacency(&matrix)?;
    let mut weights = WeightMap::unit(n);
    if let Some(line) = lines.next() {
        let rest = line
            .strip_prefix("weights:")
            .ok_or_else(|| Error::Parse(format!("unexpected trailing line '{line}'")))?;
        let parsed: Result<Vec<_>> = rest.split_whitespace().map(parse_weight).collect();
        let parsed = parsed?;
        if parsed.len() != n {
            return Err(Error::WeightCount(parsed.len(), n));
        }
        weights = WeightMap::new(parsed)?;
    }
    if let Some(line) = lines.next() {
        return Err(Error::Parse(format!("unexpected trailing line '{line}'")));
    }
    Ok((t, weights))
}

/// Writes a tournament file. Weights are emitted only when not all ones.
pub fn write_tournament(t: &Tournament, w: Option<&WeightMap>) -> String {
    let n = t.n();
    let mut out = String::new();
    out.push_str(&format!("{n}\n"));
    for u in 0..n {
        for v in 0..n {
            out.push(if t.has_arc(u, v) { '1' } else { '0' });
        }
        out.push('\n');
    }
    if let Some(w) = w {
        if w.iter().any(|x| !x.is_one()) {
            out.push_str("weights:");
            for x in w.iter() {
                out.push(' ');
                out.push_str(&format_weight(x));
            }
            out.push('\n');
        }
    }
    out
}

/// Parses a weights-only file: n whitespace-separated rationals.
pub fn parse_weights_file(text: &str, n: usize) -> Result<WeightMap> {
    let parsed: Result<Vec<_>> = content_lines(text)
        .flat_map(str::split_whitespace)
        .map(parse_weight)
        .collect();
    let parsed = parsed?;
    if parsed.len() != n {
        return Err(Error::WeightCount(parsed.len(), n));
    }
    WeightMap::new(parsed)
}

/// Parses a graph file ("n m" header then one "u v" line per edge).
pub fn parse_graph(text: &str) -> Result<GraphInstance> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse("graph header must be 'n m'".into()))?;
    let m: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse("graph header must be 'n m'".into()))?;
    if parts.next().is_some() {
        return Err(Error::Parse("graph header must be 'n m'".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing edge line {i}")))?;
        let mut ends = line.split_whitespace();
        let u: usize = ends
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line '{line}'")))?;
        let v: usize = ends
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line '{line}'")))?;
        if ends.next().is_some() {
            return Err(Error::Parse(format!("bad edge line '{line}'")));
        }
        edges.push((u, v));
    }
    if let Some(line) = lines.next() {
        return Err(Error::Parse(format!("unexpected trailing line '{line}'")));
    }
    GraphInstance::new(n, &edges)
}

pub fn write_graph(g: &GraphInstance) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Tournament file plus sidecar metadata comments for a built instance.
pub fn write_reduction_instance(r: &ReductionInstance) -> String {
    let mut out = String::new();
    out.push_str(&format!("# gadget={}\n", r.gadget.name()));
    out.push_str(&format!("# vc_offset={}\n", r.vc_offset));
    let sigma: Vec<String> = r.ordering.as_slice().iter().map(|v| v.to_string()).collect();
    out.push_str(&format!("# ordering={}\n", sigma.join(" ")));
    for (v, name) in r.names.iter().enumerate() {
        out.push_str(&format!("# name {v} {name}\n"));
    }
    out.push_str(&write_tournament(&r.tournament, None));
    out
}
