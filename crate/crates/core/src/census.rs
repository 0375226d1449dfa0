//! Batch statistics over graph6 corpora.

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cq::absolute_clear_witness;
use crate::error::{Error, Result};
use crate::graph::all_pairs_distances;
use crate::graph6::parse_graph6;
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;
use crate::visibility::visibility_polynomial;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeFlags {
    pub polynomial: bool,
    pub absolute_clear: bool,
}

impl Default for ComputeFlags {
    fn default() -> Self {
        ComputeFlags {
            polynomial: true,
            absolute_clear: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOptions {
    /// Worker threads; 0 and 1 both run on the calling thread.
    pub jobs: usize,
    /// Leave disconnected graphs uncomputed instead of reporting them as
    /// per-line errors.
    pub skip_disconnected: bool,
    pub compute: ComputeFlags,
    /// Measure per-graph wall time. Off gives byte-stable output.
    pub record_timing: bool,
    pub limits: Limits,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            jobs: 1,
            skip_disconnected: true,
            compute: ComputeFlags::default(),
            record_timing: true,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub line: usize,
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    pub connected: bool,
    pub mu: Option<usize>,
    pub poly: Option<Polynomial>,
    pub absolute_clear: Option<bool>,
    pub witness_q: Option<VertexSet>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    /// 1-based line number in the input.
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub total: usize,
    pub connected: usize,
    pub absolute_clear: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub total: usize,
    pub connected: usize,
    pub absolute_clear_count: usize,
    pub by_order: BTreeMap<usize, OrderSummary>,
}

impl CensusSummary {
    fn from_records(records: &[CensusRecord]) -> Self {
        let mut s = CensusSummary::default();
        for r in records {
            let row = s.by_order.entry(r.order).or_default();
            s.total += 1;
            row.total += 1;
            if r.connected {
                s.connected += 1;
                row.connected += 1;
            }
            if r.absolute_clear == Some(true) {
                s.absolute_clear_count += 1;
                row.absolute_clear += 1;
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOutput {
    pub records: Vec<CensusRecord>,
    pub summary: CensusSummary,
    pub errors: Vec<LineError>,
}

fn evaluate(line: usize, text: &str, opts: &CensusOptions) -> Result<CensusRecord> {
    let start = Instant::now();
    let g = parse_graph6(text)?;
    let mut rec = CensusRecord {
        line,
        graph6: text.trim_end().trim_start_matches(crate::graph6::HEADER).to_string(),
        order: g.order(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        mu: None,
        poly: None,
        absolute_clear: None,
        witness_q: None,
        elapsed: Duration::ZERO,
    };
    if rec.connected || !opts.skip_disconnected {
        let dm = all_pairs_distances(&g)?;
        if opts.compute.polynomial {
            let p = visibility_polynomial(&g, &dm, &opts.limits)?;
            rec.mu = p.degree();
            rec.poly = Some(p);
        }
        if opts.compute.absolute_clear {
            let witness = absolute_clear_witness(&g, &dm, &opts.limits)?;
            rec.absolute_clear = Some(witness.is_none());
            rec.witness_q = witness;
        }
    }
    if opts.record_timing {
        rec.elapsed = start.elapsed();
    }
    Ok(rec)
}

/// Evaluates every nonblank line of `input` as a graph6 record. Results
/// come back in input order whatever the number of workers.
pub fn run_census<R: BufRead>(input: R, opts: &CensusOptions) -> io::Result<CensusOutput> {
    let mut lines = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if !line.trim().is_empty() {
            lines.push((i + 1, line));
        }
    }

    let eval = |(no, text): &(usize, String)| (*no, evaluate(*no, text, opts));
    let results: Vec<(usize, Result<CensusRecord>)> = if opts.jobs <= 1 {
        lines.iter().map(eval).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(io::Error::other)?;
        pool.install(|| lines.par_iter().map(eval).collect())
    };

    let mut records = Vec::new();
    let mut errors = Vec::new();
    for (line, r) in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(e) => errors.push(LineError {
                line,
                reason: e.to_string(),
            }),
        }
    }
    let summary = CensusSummary::from_records(&records);
    Ok(CensusOutput {
        records,
        summary,
        errors,
    })
}

/// Flat row shared by the CSV and JSON writers.
#[derive(Serialize)]
struct CsvRow<'a> {
    graph6: &'a str,
    order: usize,
    edges: usize,
    connected: bool,
    mu: Option<usize>,
    poly: Option<String>,
    absolute_clear: Option<bool>,
    witness_q: Option<String>,
    elapsed_ms: String,
}

fn elapsed_ms(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

pub fn write_csv<W: Write>(out: W, records: &[CensusRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow {
            graph6: &r.graph6,
            order: r.order,
            edges: r.edges,
            connected: r.connected,
            mu: r.mu,
            poly: r.poly.as_ref().map(ToString::to_string),
            absolute_clear: r.absolute_clear,
            witness_q: r.witness_q.map(|q| q.to_string()),
            elapsed_ms: elapsed_ms(r.elapsed),
        })
        .map_err(|e| Error::invalid(format!("csv: {e}")))?;
    }
    // an empty run still gets a header row
    if records.is_empty() {
        w.write_record([
            "graph6",
            "order",
            "edges",
            "connected",
            "mu",
            "poly",
            "absolute_clear",
            "witness_q",
            "elapsed_ms",
        ])
        .map_err(|e| Error::invalid(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| Error::invalid(format!("csv: {e}")))
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    graph6: &'a str,
    order: usize,
    edges: usize,
    connected: bool,
    mu: Option<usize>,
    poly: Option<&'a Polynomial>,
    absolute_clear: Option<bool>,
    witness_q: Option<Vec<usize>>,
    elapsed_ms: String,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    records: Vec<JsonRecord<'a>>,
    summary: &'a CensusSummary,
    errors: &'a [LineError],
}

pub fn write_json<W: Write>(out: W, output: &CensusOutput) -> Result<()> {
    let doc = JsonDocument {
        records: output
            .records
            .iter()
            .map(|r| JsonRecord {
                graph6: &r.graph6,
                order: r.order,
                edges: r.edges,
                connected: r.connected,
                mu: r.mu,
                poly: r.poly.as_ref(),
                absolute_clear: r.absolute_clear,
                witness_q: r.witness_q.map(VertexSet::to_vec),
                elapsed_ms: elapsed_ms(r.elapsed),
            })
            .collect(),
        summary: &output.summary,
        errors: &output.errors,
    };
    let mut out = out;
    serde_json::to_writer_pretty(&mut out, &doc).map_err(|e| Error::invalid(format!("json: {e}")))?;
    writeln!(out).map_err(|e| Error::invalid(format!("json: {e}")))
}

impl std::fmt::Display for CensusSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "total: {}", self.total)?;
        writeln!(f, "connected: {}", self.connected)?;
        writeln!(f, "absolute-clear: {}", self.absolute_clear_count)?;
        for (order, row) in &self.by_order {
            writeln!(
                f,
                "order {order}: total {} connected {} absolute-clear {}",
                row.total, row.connected, row.absolute_clear
            )?;
        }
        Ok(())
    }
}
