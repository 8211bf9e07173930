//! Grouping a stream of graphs into cospectral classes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::{check_hypotheses, swap_construct, SwapPlan};
use crate::cousins::find_involution;
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, induced_subgraph, is_isomorphic, parse_graph6, Graph, VertexMap};
use crate::spectra::{spectral_polynomial, MatrixKind};

pub const DEFAULT_MAX_N: usize = 10;
pub const MAX_EXPLAIN_M: usize = 3;
pub const MAX_EXPLAIN_N: usize = 12;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub kind: MatrixKind,
    pub max_n: usize,
    /// Largest cousin set size tried when explaining; `None` disables it.
    pub explain_m: Option<usize>,
    /// Emit single-member classes too.
    pub keep_singletons: bool,
}

impl CensusOptions {
    pub fn new(kind: MatrixKind) -> Self {
        CensusOptions {
            kind,
            max_n: DEFAULT_MAX_N,
            explain_m: None,
            keep_singletons: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub class_id: usize,
    pub kind: MatrixKind,
    pub charpoly_key: String,
    /// graph6 strings, sorted.
    pub members: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explained_by_swap: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub graphs_read: usize,
    pub graphs_classified: usize,
    pub classes: usize,
    pub cospectral_classes: usize,
    pub records: usize,
    pub skipped_oversize: usize,
    pub skipped_disconnected: usize,
    pub skipped_isolated_vertex: usize,
    pub parse_errors: usize,
    /// Sorted by line.
    pub errors: Vec<LineError>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusOutput {
    pub records: Vec<CensusRecord>,
    pub summary: CensusSummary,
}

enum Outcome {
    Keyed(String, String),
    Oversize,
    Disconnected,
    Isolated,
    Bad(LineError),
}

fn classify_line(line: usize, text: &str, opts: &CensusOptions) -> Outcome {
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => {
            return Outcome::Bad(LineError {
                line,
                message: e.to_string(),
            })
        }
    };
    if g.order() > opts.max_n {
        return Outcome::Oversize;
    }
    match spectral_polynomial(&g, opts.kind) {
        Ok(p) => Outcome::Keyed(p.to_string(), emit_graph6(&g)),
        Err(Error::Disconnected) => Outcome::Disconnected,
        Err(Error::IsolatedVertex(_)) => Outcome::Isolated,
        Err(e) => Outcome::Bad(LineError {
            line,
            message: e.to_string(),
        }),
    }
}

/// Groups the graph6 lines of `input` by exact characteristic polynomial of
/// `opts.kind`. Blank lines are ignored; malformed lines and graphs that do
/// not meet the kind's preconditions are counted rather than fatal.
///
/// The output depends only on the multiset of input lines: classes are
/// sorted by key and members by graph6 string.
pub fn census(input: &str, opts: &CensusOptions) -> Result<CensusOutput> {
    if let Some(m) = opts.explain_m {
        if m == 0 || m > MAX_EXPLAIN_M {
            return Err(Error::SizeGuard {
                what: "explain cousin set size",
                value: m,
                limit: MAX_EXPLAIN_M,
            });
        }
    }
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let outcomes: Vec<Outcome> = lines
        .par_iter()
        .map(|&(line, text)| classify_line(line, text, opts))
        .collect();

    let mut summary = CensusSummary {
        graphs_read: lines.len(),
        ..CensusSummary::default()
    };
    let mut classes: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for outcome in outcomes {
        match outcome {
            Outcome::Keyed(key, g6) => {
                summary.graphs_classified += 1;
                classes.entry(key).or_default().push(g6);
            }
            Outcome::Oversize => summary.skipped_oversize += 1,
            Outcome::Disconnected => summary.skipped_disconnected += 1,
            Outcome::Isolated => summary.skipped_isolated_vertex += 1,
            Outcome::Bad(e) => {
                summary.parse_errors += 1;
                summary.errors.push(e);
            }
        }
    }
    summary.classes = classes.len();
    summary.cospectral_classes = classes.values().filter(|m| m.len() > 1).count();

    let kept: Vec<(String, Vec<String>)> = classes
        .into_iter()
        .filter(|(_, members)| opts.keep_singletons || members.len() > 1)
        .map(|(key, mut members)| {
            members.sort();
            (key, members)
        })
        .collect();
    let records: Vec<CensusRecord> = kept
        .into_par_iter()
        .enumerate()
        .map(|(i, (charpoly_key, members))| {
            let explained_by_swap = opts.explain_m.map(|m| explain_class(&members, opts.kind, m));
            CensusRecord {
                class_id: i + 1,
                kind: opts.kind,
                charpoly_key,
                members,
                explained_by_swap,
            }
        })
        .collect();
    summary.records = records.len();
    Ok(CensusOutput { records, summary })
}

/// True when some pair of members is certified to be a swap pair. A false
/// result means no certificate was found within the bounds, not that none
/// exists.
fn explain_class(members: &[String], kind: MatrixKind, max_m: usize) -> bool {
    let graphs: Vec<Graph> = members.iter().filter_map(|g6| parse_graph6(g6).ok()).collect();
    if graphs.len() < 2 || graphs[0].order() > MAX_EXPLAIN_N {
        return false;
    }
    graphs.iter().enumerate().any(|(i, a)| {
        graphs
            .iter()
            .enumerate()
            .any(|(j, b)| i != j && certify_swap(a, b, kind, max_m).is_some())
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Looks for disjoint `V₁, V₂` of size at most `max_m` in `a` such that
/// removing the edges inside them and swapping them back in through an
/// involution licensed for `kind` yields a graph isomorphic to `b`.
pub fn certify_swap(a: &Graph, b: &Graph, kind: MatrixKind, max_m: usize) -> Option<SwapPlan> {
    let n = a.order();
    if n != b.order() || n > MAX_EXPLAIN_N || a.size() != b.size() {
        return None;
    }
    for m in 2..=max_m.min(n / 2) {
        let sets = subsets(n, m);
        for (i, v1) in sets.iter().enumerate() {
            for v2 in &sets[i + 1..] {
                if v1.iter().any(|v| v2.contains(v)) {
                    continue;
                }
                let h1 = induced_subgraph(a, v1).ok()?;
                let h2 = induced_subgraph(a, v2).ok()?;
                if h1.size() == 0 && h2.size() == 0 {
                    continue;
                }
                let mut base = a.clone();
                for h_set in [v1, v2] {
                    for (x, y) in induced_subgraph(a, h_set).ok()?.edges() {
                        base.remove_edge(h_set[x], h_set[y]);
                    }
                }
                let Ok(Some(pi)) = find_involution(&base, v1, v2) else {
                    continue;
                };
                let phi1 = VertexMap::new(v1.clone(), n).ok()?;
                let phi2 = VertexMap::new(v2.clone(), n).ok()?;
                let Ok(plan) = SwapPlan::new(base, v1.clone(), v2.clone(), Some(pi), h1, h2, Some(phi1), Some(phi2))
                else {
                    continue;
                };
                let Ok((g1, g2)) = swap_construct(&plan) else {
                    continue;
                };
                debug_assert_eq!(&g1, a);
                let licensed = check_hypotheses(&plan, &g1).is_ok_and(|r| r.licensed.contains(&kind));
                if licensed && is_isomorphic(&g2, b).unwrap_or(false) {
                    return Some(plan);
                }
            }
        }
    }
    None
}
