//! Grouping graph streams by `(order, MS-number)`, and pivot orbits.
//!
//! Classification works on whatever stream it is given: isomorph-free input
//! (e.g. from nauty's `geng`) yields one entry per isomorphism class, while a
//! labeled stream yields labeled counts.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph, GRAPH6_HEADER};
use crate::graphstate::ms_number;

/// Largest order accepted by [`pivot_orbit`].
pub const ORBIT_CAP: usize = 12;

/// Representatives sort by edge count, then by graph6 text.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Representative {
    pub edges: usize,
    pub graph6: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassEntry {
    pub count: usize,
    pub representatives: Vec<Representative>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Malformed {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    /// Keyed and ordered by `(n, w)`.
    pub classes: BTreeMap<(usize, BigUint), ClassEntry>,
    pub graphs: usize,
    pub malformed: Vec<Malformed>,
    max_representatives: usize,
}

impl ClassificationReport {
    pub fn new(max_representatives: usize) -> Self {
        Self {
            classes: BTreeMap::new(),
            graphs: 0,
            malformed: Vec::new(),
            max_representatives,
        }
    }

    pub fn max_representatives(&self) -> usize {
        self.max_representatives
    }

    pub fn add(&mut self, g: &Graph) {
        let key = (g.order(), ms_number(g));
        let rep = Representative {
            edges: g.edge_count(),
            graph6: g.to_graph6(),
        };
        let k = self.max_representatives;
        let entry = self.classes.entry(key).or_default();
        entry.count += 1;
        insert_capped(&mut entry.representatives, rep, k);
        self.graphs += 1;
    }

    /// Order-independent merge; `merge` is associative and commutative up to
    /// the order of the malformed-line diagnostics.
    pub fn merge(&mut self, other: ClassificationReport) {
        let k = self.max_representatives;
        for (key, entry) in other.classes {
            let mine = self.classes.entry(key).or_default();
            mine.count += entry.count;
            for rep in entry.representatives {
                insert_capped(&mut mine.representatives, rep, k);
            }
        }
        self.graphs += other.graphs;
        self.malformed.extend(other.malformed);
    }

    /// `n<TAB>w<TAB>count<TAB>rep1,rep2,...` sorted by `(n, w)`, followed
    /// by a `# malformed` line when any input record was rejected.
    pub fn render_tsv(&self) -> String {
        let mut out = String::new();
        for ((n, w), entry) in &self.classes {
            let reps: Vec<&str> = entry
                .representatives
                .iter()
                .map(|r| r.graph6.as_str())
                .collect();
            out.push_str(&format!("{n}\t{w}\t{}\t{}\n", entry.count, reps.join(",")));
        }
        if !self.malformed.is_empty() {
            out.push_str(&format!("# malformed\t{}\n", self.malformed.len()));
        }
        out
    }

    /// Indented key/value listing of the whole report.
    pub fn render_structured(&self) -> String {
        let mut out = format!(
            "graphs: {}\nmalformed: {}\nrepresentatives_cap: {}\nclasses:\n",
            self.graphs,
            self.malformed.len(),
            self.max_representatives
        );
        for ((n, w), entry) in &self.classes {
            out.push_str(&format!(
                "  - n: {n}\n    w: {w}\n    count: {}\n",
                entry.count
            ));
            out.push_str("    representatives:\n");
            for rep in &entry.representatives {
                out.push_str(&format!(
                    "      - graph6: \"{}\"\n        edges: {}\n",
                    rep.graph6.replace('\\', "\\\\").replace('"', "\\\""),
                    rep.edges
                ));
            }
        }
        out
    }
}

fn insert_capped(reps: &mut Vec<Representative>, rep: Representative, k: usize) {
    let pos = reps.binary_search(&rep).unwrap_or_else(|p| p);
    if pos < k {
        reps.insert(pos, rep);
        reps.truncate(k);
    }
}

pub fn classify_stream<'a>(
    graphs: impl IntoIterator<Item = &'a Graph>,
    max_representatives: usize,
) -> ClassificationReport {
    let mut report = ClassificationReport::new(max_representatives);
    for g in graphs {
        report.add(g);
    }
    report
}

/// Classifies one graph6 record per line. Blank lines and bare
/// `>>graph6<<` headers are skipped; malformed records are recorded with
/// their 1-based line number and processing continues.
pub fn classify_graph6_lines(text: &str, max_representatives: usize) -> ClassificationReport {
    let mut report = ClassificationReport::new(max_representatives);
    for (idx, line) in text.lines().enumerate() {
        let record = line.trim();
        if record.is_empty() || record == GRAPH6_HEADER {
            continue;
        }
        match parse_graph6(record) {
            Ok(g) => report.add(&g),
            Err(e) => report.malformed.push(Malformed {
                line: idx + 1,
                message: e.to_string(),
            }),
        }
    }
    report
}

/// Closure of `{g}` under pivoting on every edge, compared by labeled
/// adjacency (not up to isomorphism).
pub fn pivot_orbit(g: &Graph) -> Result<BTreeSet<Graph>> {
    if g.order() > ORBIT_CAP {
        return Err(Error::TooLarge {
            what: "pivot orbit",
            n: g.order(),
            cap: ORBIT_CAP,
        });
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(g.clone());
    queue.push_back(g.clone());
    while let Some(h) = queue.pop_front() {
        for (u, v) in h.edges() {
            let next = h.pivot(u, v)?;
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}
