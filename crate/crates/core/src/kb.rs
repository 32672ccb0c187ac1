//! Knowledge base of per-class statuses.
//!
//! Line format: `<graph6> <OCCURS|NOT|UNKNOWN> <reason-code> <provenance...>`,
//! with `#` starting a comment line.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::conditions::{odd_cycle_free_complement, palfy_condition, palfy_inequality, ComponentPair};
use crate::constructions::join_closure;
use crate::eliminators::gamma_family_generate;
use crate::graph::{canonical_key, decode_graph6, CanonicalKey, Graph, Graph6Error};
use crate::status::Status;

#[derive(Debug, Error)]
pub enum KbError {
    #[error("{source_name}:{line}: {message}")]
    Parse { source_name: String, line: usize, message: String },
    #[error("{source_name}:{line}: bad graph6: {error}")]
    Graph6 { source_name: String, line: usize, error: Graph6Error },
    #[error("conflicting statuses for {graph6}: {first_status} ({first}) vs {second_status} ({second})")]
    Conflict { graph6: String, first_status: Status, first: String, second_status: Status, second: String },
    #[error("{path}: {error}")]
    Io { path: PathBuf, error: std::io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub key: CanonicalKey,
    pub graph6: String,
    pub order: usize,
    pub status: Status,
    pub reason: String,
    pub provenance: String,
}

impl ClassificationRecord {
    /// Record stored under the canonical form's graph6.
    pub fn new(g: &Graph, status: Status, reason: &str, provenance: &str) -> ClassificationRecord {
        let key = canonical_key(g);
        ClassificationRecord {
            key,
            graph6: key.to_string(),
            order: g.order(),
            status,
            reason: reason.to_string(),
            provenance: provenance.to_string(),
        }
    }

    pub fn to_line(&self) -> String {
        let mut line = format!("{} {} {}", self.graph6, self.status, self.reason);
        if !self.provenance.is_empty() {
            line.push(' ');
            line.push_str(&self.provenance);
        }
        line
    }
}

/// A problem found by [`Kb::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationIssue {
    pub graph6: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Kb {
    records: BTreeMap<CanonicalKey, ClassificationRecord>,
}

/// Status difference between two knowledge bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KbDiff {
    pub graph6: String,
    pub left: Option<Status>,
    pub right: Option<Status>,
}

impl Kb {
    pub fn new() -> Kb {
        Kb::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<&ClassificationRecord> {
        self.records.get(key)
    }

    pub fn lookup(&self, g: &Graph) -> Option<&ClassificationRecord> {
        self.records.get(&canonical_key(g))
    }

    pub fn status(&self, g: &Graph) -> Status {
        self.lookup(g).map_or(Status::Unknown, |r| r.status)
    }

    /// Records in canonical key order.
    pub fn records(&self) -> impl Iterator<Item = &ClassificationRecord> {
        self.records.values()
    }

    /// Adds a record. An Unknown record gives way to a decided one; opposite
    /// decided statuses are a conflict; otherwise the first record stays.
    pub fn insert(&mut self, rec: ClassificationRecord) -> Result<(), KbError> {
        match self.records.get(&rec.key) {
            None => {
                self.records.insert(rec.key, rec);
            }
            Some(old) if old.status == Status::Unknown && rec.status != Status::Unknown => {
                self.records.insert(rec.key, rec);
            }
            Some(old) if old.status != rec.status && rec.status != Status::Unknown => {
                return Err(KbError::Conflict {
                    graph6: old.graph6.clone(),
                    first_status: old.status,
                    first: old.provenance.clone(),
                    second_status: rec.status,
                    second: rec.provenance,
                });
            }
            Some(_) => {}
        }
        Ok(())
    }

    pub fn remove(&mut self, key: &CanonicalKey) -> Option<ClassificationRecord> {
        self.records.remove(key)
    }

    pub fn merge(&mut self, other: &Kb) -> Result<(), KbError> {
        for rec in other.records() {
            self.insert(rec.clone())?;
        }
        Ok(())
    }

    pub fn parse(text: &str, source_name: &str) -> Result<Kb, KbError> {
        let mut kb = Kb::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| KbError::Parse { source_name: source_name.to_string(), line: i + 1, message };
            let mut parts = line.splitn(4, char::is_whitespace);
            let graph6 = parts.next().unwrap();
            let status = parts.next().ok_or_else(|| parse_err("missing status".into()))?;
            let reason = parts.next().ok_or_else(|| parse_err("missing reason code".into()))?;
            let provenance = parts.next().unwrap_or("").trim();
            let status: Status = status.parse().map_err(|e: crate::status::ParseCodeError| parse_err(e.to_string()))?;
            let g = decode_graph6(graph6)
                .map_err(|error| KbError::Graph6 { source_name: source_name.to_string(), line: i + 1, error })?;
            kb.insert(ClassificationRecord {
                key: canonical_key(&g),
                graph6: graph6.to_string(),
                order: g.order(),
                status,
                reason: reason.to_string(),
                provenance: provenance.to_string(),
            })?;
        }
        Ok(kb)
    }

    pub fn load(path: &Path) -> Result<Kb, KbError> {
        let text = fs::read_to_string(path).map_err(|error| KbError::Io { path: path.to_path_buf(), error })?;
        Kb::parse(&text, &path.display().to_string())
    }

    /// A single file, or every `*.kb` file of a directory in name order.
    pub fn load_path(path: &Path) -> Result<Kb, KbError> {
        if !path.is_dir() {
            return Kb::load(path);
        }
        let io = |error| KbError::Io { path: path.to_path_buf(), error };
        let mut files: Vec<PathBuf> = fs::read_dir(path)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "kb"))
            .collect();
        files.sort();
        let mut kb = Kb::new();
        for f in files {
            kb.merge(&Kb::load(&f)?)?;
        }
        Ok(kb)
    }

    /// Serialises sorted by order, then canonical key.
    pub fn to_text(&self) -> String {
        let mut recs: Vec<&ClassificationRecord> = self.records().collect();
        recs.sort_by_key(|r| (r.order, r.key));
        let mut out = String::new();
        for r in recs {
            let _ = writeln!(out, "{}", r.to_line());
        }
        out
    }

    pub fn store(&self, path: &Path) -> Result<(), KbError> {
        fs::write(path, self.to_text()).map_err(|error| KbError::Io { path: path.to_path_buf(), error })
    }

    /// Occurs records must pass both filters; stored graph6 must match its key.
    pub fn validate(&self) -> Vec<ValidationIssue> {
        let mut issues = Vec::new();
        for r in self.records() {
            let issue = |message: &str| ValidationIssue { graph6: r.graph6.clone(), message: message.to_string() };
            match decode_graph6(&r.graph6) {
                Ok(g) if canonical_key(&g) != r.key => issues.push(issue("graph6 does not match key")),
                Ok(g) if r.status == Status::Occurs && !palfy_condition(&g) => {
                    issues.push(issue("Occurs record violates the three-vertex condition"))
                }
                Ok(g) if r.status == Status::Occurs && !odd_cycle_free_complement(&g) => {
                    issues.push(issue("Occurs record has an odd cycle in its complement"))
                }
                Ok(_) => {}
                Err(e) => issues.push(issue(&e.to_string())),
            }
        }
        issues
    }

    /// Keys whose status differs, in key order.
    pub fn diff(&self, other: &Kb) -> Vec<KbDiff> {
        let mut keys: Vec<&CanonicalKey> = self.records.keys().chain(other.records.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.get(k), other.get(k));
                let (left, right) = (a.map(|r| r.status), b.map(|r| r.status));
                (left != right).then(|| KbDiff { graph6: k.to_string(), left, right })
            })
            .collect()
    }

    /// Adds every join of two Occurs records up to `max_order`, smallest first.
    pub fn close_under_joins(&mut self, max_order: usize) {
        for n in 2..=max_order {
            for cert in join_closure(self, n) {
                if self.get(&cert.key).is_none_or(|r| r.status == Status::Unknown) {
                    let rec = ClassificationRecord::new(cert.key.graph(), Status::Occurs, "JOIN", &cert.provenance());
                    self.insert(rec).expect("Unknown gives way");
                }
            }
        }
    }
}

/// Graphs whose occurrence follows from general results, closed under joins,
/// for orders 1 to 7.
pub fn kb_seed_builtin() -> Kb {
    const MAX: usize = 7;
    let mut kb = Kb::new();
    let mut add = |g: Graph, provenance: &str| {
        kb.insert(ClassificationRecord::new(&g, Status::Occurs, "BUILTIN", provenance)).expect("builtin seeds agree");
    };
    for n in 1..=MAX {
        add(Graph::complete(n), "complete graphs occur");
    }
    for k in 1..MAX {
        add(gamma_family_generate(k, 1).expect("k >= 1"), "Gamma(k,1) occurs");
    }
    for n in 2..=MAX {
        for small in 1..=n / 2 {
            let pair = ComponentPair { n_small: small, n_large: n - small };
            if palfy_inequality(pair) {
                let g = Graph::disjoint_union(&Graph::complete(n - small), &Graph::complete(small)).unwrap();
                add(g, "two complete components satisfying the component-size inequality occur");
            }
        }
    }
    let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
    add(bowtie, "bowtie occurs");
    let octahedron = Graph::complete(6).delete_edges(&[(0, 1), (2, 3), (4, 5)]).unwrap();
    add(octahedron, "octahedron, the 4-regular graph on six vertices, occurs");
    kb.close_under_joins(MAX);
    kb
}

pub const LITERATURE_SEEDS: &str = include_str!("../data/seeds/literature.kb");
pub const CATALOG_SEEDS: &str = include_str!("../data/seeds/catalog.kb");

/// Overlay records read from a file or directory.
pub fn kb_seed_external(path: &Path) -> Result<Kb, KbError> {
    Kb::load_path(path)
}

/// The literature and catalog seeds bundled with the crate.
pub fn shipped_external() -> Kb {
    let mut kb = Kb::parse(LITERATURE_SEEDS, "literature.kb").expect("bundled seeds parse");
    kb.merge(&Kb::parse(CATALOG_SEEDS, "catalog.kb").expect("bundled catalog parses")).expect("bundled seeds agree");
    kb
}
