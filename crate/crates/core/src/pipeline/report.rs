use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::{ClassificationReport, GraphRecord};
use crate::admissibility::Admissibility;
use crate::graph::{canonical_key, decode_graph6, encode_graph6, to_dot};
use crate::status::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Txt,
    Dot,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<ReportFormat, String> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "txt" => Ok(ReportFormat::Txt),
            "dot" => Ok(ReportFormat::Dot),
            _ => Err(format!("unknown format {s:?}, expected csv, txt or dot")),
        }
    }
}

/// Survivors grouped by signature (largest clique first), graph6 order inside.
fn grouped(report: &ClassificationReport) -> Vec<&GraphRecord> {
    let mut rows: Vec<&GraphRecord> = report.survivors().collect();
    rows.sort_by(|a, b| b.signature.cmp(&a.signature).then_with(|| a.graph6.cmp(&b.graph6)));
    rows
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_csv(report: &ClassificationReport) -> String {
    let mut out = String::from("graph6,signature,diameter,status,reason,provenance\n");
    for r in grouped(report) {
        let sig = r.signature.map(|s| format!("{}-{}", s.a, s.b)).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            csv_field(&r.graph6),
            sig,
            r.diameter,
            r.status,
            r.reason,
            csv_field(&r.provenance)
        );
    }
    out
}

/// Listing grouped by signature; unknown entries carry a `*`.
pub fn render_txt(report: &ClassificationReport) -> String {
    let mut out = String::new();
    let rows = grouped(report);
    let mut current = None;
    for r in rows {
        if current != r.signature {
            current = r.signature;
            let count = report.survivors().filter(|x| x.signature == r.signature).count();
            let sig = r.signature.map_or("-".to_string(), |s| s.to_string());
            let _ = writeln!(out, "\n== signature {sig}: {count} graphs ==");
        }
        let mark = if r.status == Status::Unknown { "*" } else { " " };
        let _ = writeln!(out, "{mark} {:<12} diam {:<3} {:<8} {}", r.graph6, r.diameter.to_string(), r.status.as_str(), r.reason);
    }
    out
}

/// One DOT document per survivor, named by position in the grouped listing.
pub fn render_dot(report: &ClassificationReport) -> Vec<(String, String)> {
    grouped(report)
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            let sig = r.signature.map(|s| format!("{}_{}", s.a, s.b)).unwrap_or_default();
            let name = format!("s{sig}_{i:03}");
            (format!("{name}.dot"), to_dot(&r.graph, &name, None))
        })
        .collect()
}

pub fn render_summary(report: &ClassificationReport) -> String {
    let t = &report.tallies;
    let mut out = String::new();
    let _ = writeln!(out, "order {}", report.order);
    let _ = writeln!(out, "graphs {} connected {} disconnected {}", t.total, t.connected, t.disconnected);
    let _ = writeln!(out, "filter survivors: connected {} disconnected {}", t.connected_survivors, t.disconnected_survivors);
    let c = t.connected_status;
    let _ = writeln!(out, "connected survivors: occurs {} not {} unknown {}", c.occurs, c.not_occurs, c.unknown);
    let d = t.disconnected_status;
    let _ = writeln!(out, "disconnected: occurs {} not {} unknown {}", d.occurs, d.not_occurs, d.unknown);
    for (shape, status) in &t.by_shape {
        let _ = writeln!(out, "  shape {shape}: {status}");
    }
    for (sig, s) in t.by_signature.iter().rev() {
        let _ = writeln!(
            out,
            "signature {sig}: {} graphs (occurs {} not {} unknown {}); diameter 3: {} (occurs {} not {})",
            s.all.total(),
            s.all.occurs,
            s.all.not_occurs,
            s.all.unknown,
            s.diameter3.total(),
            s.diameter3.occurs,
            s.diameter3.not_occurs
        );
    }
    for (reason, n) in &t.reasons {
        let label = if reason.is_empty() { "-" } else { reason };
        let _ = writeln!(out, "reason {label}: {n}");
    }
    out
}

/// Filter stage: pass or fail with reason code and signature.
pub fn render_filter(report: &ClassificationReport) -> String {
    let mut out = String::new();
    for r in &report.records {
        let outcome = if r.passes_filter { "PASS" } else { "FAIL" };
        let sig = r.signature.map_or("-".to_string(), |s| s.to_string());
        let _ = writeln!(out, "{} {outcome} {} {sig}", r.graph6, if r.reason.is_empty() { "-" } else { &r.reason });
    }
    out
}

/// Verdict log and admissibility evidence for the graph named by a graph6 string.
pub fn explain(report: &ClassificationReport, graph6: &str) -> Option<String> {
    let g = decode_graph6(graph6).ok()?;
    let r = report.get(&canonical_key(&g))?;
    let mut out = String::new();
    let _ = writeln!(out, "{} (canonical {}, vertices numbered as in {})", graph6, r.graph6, encode_graph6(&r.graph));
    let sig = r.signature.map_or("-".to_string(), |s| s.to_string());
    let _ = writeln!(out, "connected {} signature {sig} diameter {}", r.connected, r.diameter);
    let _ = writeln!(out, "status {} {} {}", r.status, r.reason, r.provenance);
    for v in &r.verdicts {
        let _ = writeln!(out, "  [{}] {} {} {}", v.stage, v.status, v.code, v.detail);
    }
    if let Some(reports) = &r.admissibility {
        for vr in reports {
            let verdict = match vr.verdict {
                Admissibility::Yes => "admissible",
                Admissibility::No => "not admissible",
                Admissibility::Inconclusive => "inconclusive",
            };
            let _ = writeln!(out, "  vertex {}: {verdict}", vr.vertex);
            for s in &vr.steps {
                let _ = writeln!(out, "    {} -> {} [{}] {}", s.operation, canonical_key(&s.graph), s.answer.status, s.answer.evidence);
            }
        }
    }
    Some(out)
}

/// Writes `summary.txt`, `order<N>.kb` and the listing in the chosen format.
pub fn write_report(report: &ClassificationReport, dir: &Path, format: ReportFormat) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let mut put = |name: &str, body: &str| -> io::Result<()> {
        let path = dir.join(name);
        fs::write(&path, body)?;
        written.push(path);
        Ok(())
    };
    put("summary.txt", &render_summary(report))?;
    put(&format!("order{}.kb", report.order), &report.to_kb().to_text())?;
    match format {
        ReportFormat::Csv => put("survivors.csv", &render_csv(report))?,
        ReportFormat::Txt => put("survivors.txt", &render_txt(report))?,
        ReportFormat::Dot => {
            let sub = dir.join("dot");
            fs::create_dir_all(&sub)?;
            for (name, body) in render_dot(report) {
                let path = sub.join(name);
                fs::write(&path, body)?;
                written.push(path);
            }
        }
    }
    Ok(written)
}
