//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! #@ key=value        metadata, kept in `Instance::meta`
//! p <n>
//! e <u> <v>
//! d <u>|* <a> <b>
//! ```
//!
//! When `p` is present and every label is an integer below `n`, labels are
//! the ids themselves. Otherwise labels are arbitrary tokens numbered in order
//! of first appearance.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::feasibility::DemandPair;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub demands: DemandPair,
    /// External label of each internal id.
    pub labels: Vec<String>,
    pub meta: BTreeMap<String, String>,
}

impl Instance {
    /// Instance with labels equal to the ids.
    pub fn new(graph: Graph, demands: DemandPair) -> Result<Self> {
        demands.check_len(graph.n())?;
        let labels = (0..graph.n()).map(|u| u.to_string()).collect();
        Ok(Instance {
            graph,
            demands,
            labels,
            meta: BTreeMap::new(),
        })
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn identity_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, l)| *l == i.to_string())
    }
}

enum DemandTarget<'a> {
    All,
    Vertex(&'a str),
}

struct Raw<'a> {
    declared: Option<usize>,
    edges: Vec<(usize, &'a str, &'a str)>,
    demands: Vec<(usize, DemandTarget<'a>, u64, u64)>,
    /// Labels in order of first appearance.
    seen: Vec<&'a str>,
    meta: BTreeMap<String, String>,
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
}

fn tokenize(text: &str) -> Result<Raw<'_>> {
    let mut raw = Raw {
        declared: None,
        edges: Vec::new(),
        demands: Vec::new(),
        seen: Vec::new(),
        meta: BTreeMap::new(),
    };
    let mut known = HashSet::new();
    fn see<'a>(raw: &mut Raw<'a>, known: &mut HashSet<&'a str>, label: &'a str) {
        if known.insert(label) {
            raw.seen.push(label);
        }
    }
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if let Some(meta) = line.strip_prefix("#@") {
            let (k, v) = meta
                .trim()
                .split_once('=')
                .ok_or_else(|| parse_err(lineno, "metadata must be key=value"))?;
            raw.meta.insert(k.trim().to_owned(), v.trim().to_owned());
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["p", n] => {
                if raw.declared.is_some() {
                    return Err(parse_err(lineno, "duplicate p line"));
                }
                raw.declared = Some(number(lineno, n, "vertex count")?);
            }
            ["e", u, v] => {
                see(&mut raw, &mut known, u);
                see(&mut raw, &mut known, v);
                raw.edges.push((lineno, u, v));
            }
            ["d", target, a, b] => {
                let a = number(lineno, a, "demand a")?;
                let b = number(lineno, b, "demand b")?;
                let target = if *target == "*" {
                    DemandTarget::All
                } else {
                    see(&mut raw, &mut known, target);
                    DemandTarget::Vertex(target)
                };
                raw.demands.push((lineno, target, a, b));
            }
            [directive, ..] if ["p", "e", "d"].contains(directive) => {
                return Err(parse_err(lineno, format!("wrong number of fields for '{directive}'")));
            }
            [directive, ..] => {
                return Err(parse_err(lineno, format!("unknown directive '{directive}'")));
            }
            [] => unreachable!("blank lines are skipped"),
        }
    }
    Ok(raw)
}

/// Parses an instance; `default_demands` fills vertices without a `d` line.
pub fn parse_instance(text: &str, default_demands: Option<(u64, u64)>) -> Result<Instance> {
    let raw = tokenize(text)?;

    let numeric = raw
        .declared
        .filter(|&n| raw.seen.iter().all(|l| l.parse::<usize>().is_ok_and(|id| id < n)));
    let (n, id_of): (usize, HashMap<&str, usize>) = match numeric {
        Some(n) => (n, raw.seen.iter().map(|&l| (l, l.parse().unwrap())).collect()),
        None => {
            let n = raw.seen.len();
            if let Some(declared) = raw.declared {
                if declared != n {
                    return Err(parse_err(
                        0,
                        format!("p declares {declared} vertices but {n} distinct labels appear"),
                    ));
                }
            }
            (n, raw.seen.iter().enumerate().map(|(i, &l)| (l, i)).collect())
        }
    };
    let labels: Vec<String> = match numeric {
        Some(_) => (0..n).map(|i| i.to_string()).collect(),
        None => raw.seen.iter().map(|l| l.to_string()).collect(),
    };

    let mut meta = raw.meta;
    let mut edges = Vec::with_capacity(raw.edges.len());
    let mut distinct = HashSet::new();
    let mut duplicates = 0usize;
    for &(lineno, u, v) in &raw.edges {
        let (iu, iv) = (id_of[u], id_of[v]);
        if iu == iv {
            return Err(parse_err(lineno, format!("self-loop at '{u}'")));
        }
        if !distinct.insert((iu.min(iv), iu.max(iv))) {
            duplicates += 1;
            log::warn!("line {lineno}: duplicate edge {u} {v} ignored");
            continue;
        }
        edges.push((iu, iv));
    }
    if duplicates > 0 {
        meta.insert("duplicate_edges".into(), duplicates.to_string());
    }
    let graph = Graph::new(n, &edges).map_err(|e| parse_err(0, e.to_string()))?;

    let mut wildcard = default_demands;
    let mut specific: Vec<Option<(u64, u64)>> = vec![None; n];
    for (_, target, a, b) in &raw.demands {
        match target {
            DemandTarget::All => wildcard = Some((*a, *b)),
            DemandTarget::Vertex(label) => specific[id_of[label]] = Some((*a, *b)),
        }
    }
    let mut a_vals = Vec::with_capacity(n);
    let mut b_vals = Vec::with_capacity(n);
    for (u, dem) in specific.iter().enumerate() {
        let (a, b) = dem
            .or(wildcard)
            .ok_or_else(|| Error::MissingDemands(labels[u].clone()))?;
        a_vals.push(a);
        b_vals.push(b);
    }
    let demands = DemandPair::new(a_vals, b_vals)?;

    Ok(Instance {
        graph,
        demands,
        labels,
        meta,
    })
}

/// Canonical text form: metadata, `p` (only for id-labelled instances), one
/// `d` line per vertex in id order, then sorted edges.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    for (k, v) in &inst.meta {
        let _ = writeln!(out, "#@ {k}={v}");
    }
    if inst.identity_labels() {
        let _ = writeln!(out, "p {}", inst.graph.n());
    }
    for (u, label) in inst.labels.iter().enumerate() {
        let _ = writeln!(out, "d {label} {} {}", inst.demands.a(u), inst.demands.b(u));
    }
    for (u, v) in inst.graph.edges() {
        let _ = writeln!(out, "e {} {}", inst.labels[u], inst.labels[v]);
    }
    out
}

pub fn read_instance(path: &Path, default_demands: Option<(u64, u64)>) -> Result<Instance> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text, default_demands)
}
