//! End-to-end classification of one order.

mod report;

pub use report::{explain, render_csv, render_dot, render_filter, render_summary, render_txt, write_report, ReportFormat};

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use thiserror::Error;

use crate::admissibility::{all_admissible_eliminator, Oracle, VertexReport};
use crate::conditions::{disconnected_shape, odd_cycle_free_complement, palfy_inequality, signature, CliqueSignature, ComponentPair};
use crate::constructions::{join_closure, ConstructionError, JoinCertificate, Recipe};
use crate::diameter3::{diameter3_test, Diameter3Mode, Diameter3Verdict};
use crate::eliminators::{all_eliminators, catalog_eliminator, EliminationVerdict};
use crate::enumeration::{enumerate, EnumerationError};
use crate::graph::{canonical_key, CanonicalKey, Diameter, Graph};
use crate::kb::{ClassificationRecord, Kb};
use crate::status::{Reason, Status};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("recipe {name}: {error}")]
    Recipe { name: String, error: ConstructionError },
    #[error("soundness alarm on {graph6}: {occurs} contradicts {not_occurs}")]
    SoundnessAlarm { graph6: String, occurs: String, not_occurs: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stage {
    /// Filters and signatures only.
    Filter,
    #[default]
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct PipelineConfig {
    pub stage: Stage,
    pub diameter3_mode: Diameter3Mode,
    /// Miller-Rabin on every recipe factor.
    pub check_primality: bool,
    /// Run the all-admissible sweep over the remaining unknowns.
    pub admissibility: bool,
}

impl Default for PipelineConfig {
    fn default() -> PipelineConfig {
        PipelineConfig { stage: Stage::Full, diameter3_mode: Diameter3Mode::AnyLabeling, check_primality: true, admissibility: true }
    }
}

/// One logged verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub stage: &'static str,
    pub status: Status,
    pub code: String,
    pub detail: String,
}

impl Verdict {
    fn new(stage: &'static str, status: Status, code: &str, detail: impl Into<String>) -> Verdict {
        Verdict { stage, status, code: code.to_string(), detail: detail.into() }
    }

    fn not(stage: &'static str, reason: Reason, detail: impl Into<String>) -> Verdict {
        Verdict::new(stage, Status::NotOccurs, reason.code(), detail)
    }
}

#[derive(Debug, Clone)]
pub struct GraphRecord {
    pub graph: Graph,
    pub key: CanonicalKey,
    pub graph6: String,
    pub connected: bool,
    pub passes_filter: bool,
    pub signature: Option<CliqueSignature>,
    pub shape: Option<ComponentPair>,
    pub diameter: Diameter,
    pub status: Status,
    pub reason: String,
    pub provenance: String,
    pub verdicts: Vec<Verdict>,
    pub admissibility: Option<Vec<VertexReport>>,
}

impl GraphRecord {
    pub fn is_diameter3(&self) -> bool {
        self.diameter == Diameter::Finite(3)
    }

    pub fn fired(&self, code: &str) -> bool {
        self.verdicts.iter().any(|v| v.code == code)
    }

    pub fn to_kb_record(&self) -> ClassificationRecord {
        ClassificationRecord {
            key: self.key,
            graph6: self.graph6.clone(),
            order: self.graph.order(),
            status: self.status,
            reason: if self.reason.is_empty() { "NONE".into() } else { self.reason.clone() },
            provenance: self.provenance.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StatusCounts {
    pub occurs: usize,
    pub not_occurs: usize,
    pub unknown: usize,
}

impl StatusCounts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Occurs => self.occurs += 1,
            Status::NotOccurs => self.not_occurs += 1,
            Status::Unknown => self.unknown += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.occurs + self.not_occurs + self.unknown
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SignatureTally {
    pub all: StatusCounts,
    pub diameter3: StatusCounts,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tallies {
    pub total: usize,
    pub connected: usize,
    pub disconnected: usize,
    pub connected_survivors: usize,
    pub disconnected_survivors: usize,
    /// Over connected filter survivors.
    pub connected_status: StatusCounts,
    /// Over every disconnected graph.
    pub disconnected_status: StatusCounts,
    pub by_signature: BTreeMap<CliqueSignature, SignatureTally>,
    pub by_shape: BTreeMap<ComponentPair, Status>,
    pub reasons: BTreeMap<String, usize>,
}

impl Tallies {
    pub fn compute(records: &[GraphRecord]) -> Tallies {
        let mut t = Tallies { total: records.len(), ..Tallies::default() };
        for r in records {
            if r.connected {
                t.connected += 1;
            } else {
                t.disconnected += 1;
                t.disconnected_status.add(r.status);
            }
            *t.reasons.entry(r.reason.clone()).or_insert(0) += 1;
            if !r.passes_filter {
                continue;
            }
            if r.connected {
                t.connected_survivors += 1;
                t.connected_status.add(r.status);
                if let Some(sig) = r.signature {
                    let entry = t.by_signature.entry(sig).or_default();
                    entry.all.add(r.status);
                    if r.is_diameter3() {
                        entry.diameter3.add(r.status);
                    }
                }
            } else {
                t.disconnected_survivors += 1;
                if let Some(shape) = r.shape {
                    t.by_shape.insert(shape, r.status);
                }
            }
        }
        t
    }
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub order: usize,
    /// In enumeration order.
    pub records: Vec<GraphRecord>,
    pub tallies: Tallies,
}

impl ClassificationReport {
    pub fn get(&self, key: &CanonicalKey) -> Option<&GraphRecord> {
        self.records.iter().find(|r| &r.key == key)
    }

    pub fn lookup(&self, g: &Graph) -> Option<&GraphRecord> {
        self.get(&canonical_key(g))
    }

    /// Connected filter survivors.
    pub fn survivors(&self) -> impl Iterator<Item = &GraphRecord> {
        self.records.iter().filter(|r| r.connected && r.passes_filter)
    }

    pub fn to_kb(&self) -> Kb {
        let mut kb = Kb::new();
        for r in &self.records {
            kb.insert(r.to_kb_record()).expect("one record per key");
        }
        kb
    }
}

struct Context<'a> {
    config: PipelineConfig,
    kb: &'a Kb,
    joins: HashMap<CanonicalKey, JoinCertificate>,
    recipes: HashMap<CanonicalKey, Vec<String>>,
}

/// Classifies every graph of order `n`.
///
/// The knowledge base is closed under joins below `n` first. Occurs records that
/// fail a filter, and graphs with both an Occurs certificate and a NotOccurs
/// verdict, raise [`PipelineError::SoundnessAlarm`].
pub fn classify_order(n: usize, kb: &Kb, recipes: &[Recipe], config: PipelineConfig) -> Result<ClassificationReport, PipelineError> {
    let graphs: Vec<Graph> = enumerate(n)?.collect();
    let mut kb = kb.clone();
    check_seed_soundness(&kb)?;
    kb.close_under_joins(n.saturating_sub(1));

    let mut rendered: HashMap<CanonicalKey, Vec<String>> = HashMap::new();
    if config.stage == Stage::Full {
        for recipe in recipes {
            let r = recipe
                .render(config.check_primality)
                .map_err(|error| PipelineError::Recipe { name: recipe.name.clone(), error })?;
            if r.graph.order() == n {
                rendered.entry(canonical_key(&r.graph)).or_default().push(format!("{} {}", recipe.kind_name(), recipe.name));
            }
        }
    }
    let joins = if config.stage == Stage::Full {
        join_closure(&kb, n).into_iter().map(|c| (c.key, c)).collect()
    } else {
        HashMap::new()
    };
    let cx = Context { config, kb: &kb, joins, recipes: rendered };
    let mut records: Vec<GraphRecord> = graphs.par_iter().map(|g| classify_one(g, &cx)).collect::<Result<_, _>>()?;

    if config.stage == Stage::Full && config.admissibility {
        let run: HashMap<CanonicalKey, (Status, String)> =
            records.iter().map(|r| (r.key, (r.status, r.reason.clone()))).collect();
        let oracle = Oracle { kb: &kb, run: &run, run_order: n };
        let swept: Vec<(usize, EliminationVerdict, Vec<VertexReport>)> = records
            .par_iter()
            .enumerate()
            .filter(|(_, r)| r.connected && r.passes_filter && r.status == Status::Unknown)
            .map(|(i, r)| {
                let (verdict, reports) = all_admissible_eliminator(&r.graph, &oracle);
                (i, verdict, reports)
            })
            .collect();
        for (i, verdict, reports) in swept {
            let rec = &mut records[i];
            if let EliminationVerdict::Eliminated { reason, provenance } = verdict {
                rec.verdicts.push(Verdict::not("admissibility", reason, provenance.clone()));
                rec.status = Status::NotOccurs;
                rec.reason = reason.code().to_string();
                rec.provenance = provenance;
            }
            rec.admissibility = Some(reports);
        }
    }
    let tallies = Tallies::compute(&records);
    Ok(ClassificationReport { order: n, records, tallies })
}

fn check_seed_soundness(kb: &Kb) -> Result<(), PipelineError> {
    for r in kb.records().filter(|r| r.status == Status::Occurs) {
        let g = r.key.graph();
        if !odd_cycle_free_complement(g) {
            return Err(PipelineError::SoundnessAlarm {
                graph6: r.graph6.clone(),
                occurs: format!("seed record {} {}", r.reason, r.provenance),
                not_occurs: "filter P1/P2".into(),
            });
        }
    }
    Ok(())
}

fn classify_one(g: &Graph, cx: &Context) -> Result<GraphRecord, PipelineError> {
    let key = canonical_key(g);
    let connected = g.is_connected();
    let comp = g.complement();
    let mut verdicts = Vec::new();
    if let Some(t) = comp.find_triangle() {
        verdicts.push(Verdict::not("filter", Reason::P1, format!("{{{},{},{}}} spans no edge", t[0], t[1], t[2])));
    }
    if let Some(c) = comp.shortest_odd_cycle() {
        let list: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        verdicts.push(Verdict::not("filter", Reason::P2, format!("complement odd cycle {}", list.join(","))));
    }
    let passes_filter = verdicts.is_empty();
    let sig = if connected { signature(g) } else { None };
    let shape = if connected { None } else { disconnected_shape(g) };
    let diameter = g.diameter();

    if cx.config.stage == Stage::Full {
        if let Some(rec) = cx.kb.get(&key) {
            if rec.status == Status::Occurs {
                verdicts.push(Verdict::new("kb", Status::Occurs, "KB", format!("{} {}", rec.reason, rec.provenance)));
            }
        }
        if passes_filter {
            if connected {
                if let Some(cert) = cx.joins.get(&key) {
                    verdicts.push(Verdict::new("join", Status::Occurs, "JOIN", cert.provenance()));
                }
                if diameter == Diameter::Finite(3) {
                    let v = diameter3_test(g, cx.config.diameter3_mode).expect("preconditions hold");
                    if let Diameter3Verdict::Eliminated(reason) = v {
                        let code = reason.code().parse::<Reason>().expect("listed code");
                        verdicts.push(Verdict::not("diameter3", code, "rho-partition test"));
                    }
                }
                for e in all_eliminators(g, cx.kb) {
                    if let EliminationVerdict::Eliminated { reason, provenance } = e {
                        verdicts.push(Verdict::not("eliminators", reason, provenance));
                    }
                }
            } else if let Some(pair) = shape {
                if !palfy_inequality(pair) {
                    verdicts.push(Verdict::not("disconnected", Reason::PalfyIneq, format!("{pair}: {} < 2^{} - 1", pair.n_large, pair.n_small)));
                }
                if let EliminationVerdict::Eliminated { reason, provenance } = catalog_eliminator(g, cx.kb) {
                    verdicts.push(Verdict::not("eliminators", reason, provenance));
                }
            }
            for name in cx.recipes.get(&key).into_iter().flatten() {
                verdicts.push(Verdict::new("recipes", Status::Occurs, "RECIPE", name.clone()));
            }
        }
    }

    let first = |s: Status| verdicts.iter().find(|v| v.status == s);
    let (status, reason, provenance) = match (first(Status::Occurs), first(Status::NotOccurs)) {
        (Some(o), Some(x)) => {
            return Err(PipelineError::SoundnessAlarm {
                graph6: key.to_string(),
                occurs: format!("{} {}", o.code, o.detail),
                not_occurs: format!("{} {}", x.code, x.detail),
            })
        }
        (Some(o), None) => (Status::Occurs, o.code.clone(), o.detail.clone()),
        (None, Some(x)) => (Status::NotOccurs, x.code.clone(), x.detail.clone()),
        (None, None) => (Status::Unknown, String::new(), String::new()),
    };
    Ok(GraphRecord {
        graph: *g,
        key,
        graph6: key.to_string(),
        connected,
        passes_filter,
        signature: sig,
        shape,
        diameter,
        status,
        reason,
        provenance,
        verdicts,
        admissibility: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kb::kb_seed_builtin;

    #[test]
    fn order_five_smoke() {
        let kb = kb_seed_builtin();
        let report = classify_order(5, &kb, &[], PipelineConfig::default()).unwrap();
        assert_eq!(report.records.len(), 34);
        assert_eq!(report.tallies, Tallies::compute(&report.records));
        for r in &report.records {
            if r.status == Status::NotOccurs {
                assert!(r.reason.parse::<Reason>().is_ok(), "{}", r.reason);
            }
        }
        // Order-5 graphs from the builtin seed are certified by the kb or by joins.
        assert_eq!(report.lookup(&Graph::complete(5)).unwrap().status, Status::Occurs);
    }

    #[test]
    fn filter_stage() {
        let config = PipelineConfig { stage: Stage::Filter, ..PipelineConfig::default() };
        let report = classify_order(4, &Kb::new(), &[], config).unwrap();
        assert_eq!(report.records.len(), 11);
        assert!(report.records.iter().all(|r| r.passes_filter == (r.status == Status::Unknown)));
    }
}
