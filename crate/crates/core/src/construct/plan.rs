//! Text format for [`SwapPlan`].
//!
//! A plan is a list of sections, each introduced by a header line. `#`
//! starts a comment anywhere on a line; blank lines are ignored.
//!
//! ```text
//! BASE [edgelist|graph6]   vertex count then one "u v" edge per line,
//!                          or a single graph6 line (format auto-detected
//!                          when omitted)
//! V1                       vertex ids, whitespace or comma separated
//! V2
//! PI                       optional; one "a b" pair per line
//! H1                       edges "i j" on 0..m-1, possibly none
//! H2
//! PHI1                     optional; m vertex ids, image of H1 vertex k
//! PHI2                     is the k-th entry
//! ```
//!
//! Sections may appear in any order but each at most once.

use super::SwapPlan;
use crate::cousins::SwapInvolution;
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph, VertexMap};

const HEADERS: [&str; 8] = ["BASE", "V1", "V2", "PI", "H1", "H2", "PHI1", "PHI2"];

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Section {
    line: usize,
    arg: Option<String>,
    body: Vec<(usize, String)>,
}

fn parse_ints(body: &[(usize, String)]) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (line, text) in body {
        for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v = tok
                .parse()
                .map_err(|_| err(*line, format!("invalid vertex {tok:?}")))?;
            out.push((*line, v));
        }
    }
    Ok(out)
}

fn parse_pairs(body: &[(usize, String)]) -> Result<Vec<(usize, usize, usize)>> {
    body.iter()
        .map(|(line, text)| {
            let vals = parse_ints(&[(*line, text.clone())])?;
            match vals.as_slice() {
                [(_, a), (_, b)] => Ok((*line, *a, *b)),
                _ => Err(err(*line, "expected exactly two vertices")),
            }
        })
        .collect()
}

fn parse_base(sec: &Section) -> Result<Graph> {
    let first = sec
        .body
        .first()
        .ok_or_else(|| err(sec.line, "BASE section is empty"))?;
    let format = match sec.arg.as_deref() {
        Some(f) => f.to_ascii_lowercase(),
        None if first.1.parse::<usize>().is_ok() => "edgelist".into(),
        None => "graph6".into(),
    };
    match format.as_str() {
        "graph6" | "g6" => {
            if let Some((line, _)) = sec.body.get(1) {
                return Err(err(*line, "graph6 BASE takes a single line"));
            }
            parse_graph6(&first.1).map_err(|e| err(first.0, e.to_string()))
        }
        "edgelist" => {
            let n: usize = first
                .1
                .parse()
                .map_err(|_| err(first.0, format!("invalid vertex count {:?}", first.1)))?;
            let mut g = Graph::empty(n);
            for (line, u, v) in parse_pairs(&sec.body[1..])? {
                g.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
            }
            Ok(g)
        }
        other => Err(err(sec.line, format!("unknown BASE format {other:?}"))),
    }
}

fn parse_house(sec: &Section, m: usize) -> Result<Graph> {
    let mut h = Graph::empty(m);
    for (line, a, b) in parse_pairs(&sec.body)? {
        h.add_edge(a, b).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(h)
}

pub fn parse_plan(text: &str) -> Result<SwapPlan> {
    let mut sections: Vec<Option<Section>> = (0..HEADERS.len()).map(|_| None).collect();
    let mut current: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let head = toks.next().expect("non-empty line");
        if let Some(idx) = HEADERS.iter().position(|&h| h == head) {
            if sections[idx].is_some() {
                return Err(err(line, format!("duplicate {head} section")));
            }
            let arg = toks.next().map(str::to_string);
            if toks.next().is_some() || (arg.is_some() && idx != 0) {
                return Err(err(line, format!("unexpected text after {head}")));
            }
            sections[idx] = Some(Section {
                line,
                arg,
                body: Vec::new(),
            });
            current = Some(idx);
            continue;
        }
        match current {
            Some(idx) => sections[idx]
                .as_mut()
                .expect("current section exists")
                .body
                .push((line, content.to_string())),
            None => return Err(err(line, "content before the first section header")),
        }
    }

    let last_line = text.lines().count().max(1);
    let required = |idx: usize| -> Result<&Section> {
        sections[idx]
            .as_ref()
            .ok_or_else(|| err(last_line, format!("missing {} section", HEADERS[idx])))
    };
    let base = parse_base(required(0)?)?;
    let n = base.order();
    let list = |idx: usize| -> Result<Vec<usize>> {
        let sec = required(idx)?;
        let vals = parse_ints(&sec.body)?;
        if let Some(&(line, v)) = vals.iter().find(|&&(_, v)| v >= n) {
            return Err(err(line, format!("vertex {v} out of range for {n} vertices")));
        }
        Ok(vals.into_iter().map(|(_, v)| v).collect())
    };
    let v1 = list(1)?;
    let v2 = list(2)?;
    let m = v1.len();
    let pi = match &sections[3] {
        None => None,
        Some(sec) => {
            let pairs: Vec<(usize, usize)> = parse_pairs(&sec.body)?.into_iter().map(|(_, a, b)| (a, b)).collect();
            Some(SwapInvolution::from_pairs(&v1, &v2, &pairs).map_err(|e| err(sec.line, e.to_string()))?)
        }
    };
    let h1 = parse_house(required(4)?, m)?;
    let h2 = parse_house(required(5)?, m)?;
    let phi = |idx: usize| -> Result<Option<VertexMap>> {
        match &sections[idx] {
            None => Ok(None),
            Some(sec) => {
                let images = list(idx)?;
                VertexMap::new(images, n)
                    .map(Some)
                    .map_err(|e| err(sec.line, e.to_string()))
            }
        }
    };
    let phi1 = phi(6)?;
    let phi2 = phi(7)?;
    SwapPlan::new(base, v1, v2, pi, h1, h2, phi1, phi2)
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Renders a plan with every optional section spelled out.
pub fn emit_plan(plan: &SwapPlan) -> String {
    let mut out = String::from("BASE edgelist\n");
    out.push_str(&crate::graph::emit_edge_list(plan.base()));
    out.push_str(&format!("V1\n{}\nV2\n{}\nPI\n", join(plan.v1()), join(plan.v2())));
    for (a, b) in plan.pi().pairs() {
        out.push_str(&format!("{a} {b}\n"));
    }
    for (name, h) in [("H1", plan.h1()), ("H2", plan.h2())] {
        out.push_str(name);
        out.push('\n');
        for (a, b) in h.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
    }
    out.push_str(&format!(
        "PHI1\n{}\nPHI2\n{}\n",
        join(plan.phi1().images()),
        join(plan.phi2().images())
    ));
    out
}
