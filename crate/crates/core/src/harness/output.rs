//! Trace CSV and summary JSON writers, with matching readers.
//!
//! Trace rows are `iteration,best_fitness,mean_loudness,mean_pulse_rate,evaluations`
//! terminated by `\n`; reals use the shortest decimal form that parses back
//! to the same `f64`.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::ba::config::BaConfig;
use crate::ba::trace::{RunTrace, TraceRecord};
use crate::harness::batch::RunSummary;
use crate::harness::pareto::FrontPoint;

pub const TRACE_HEADER: [&str; 5] = [
    "iteration",
    "best_fitness",
    "mean_loudness",
    "mean_pulse_rate",
    "evaluations",
];

#[derive(Debug, thiserror::Error)]
pub enum OutputError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("unexpected trace header {0:?}")]
    Header(Vec<String>),
}

pub fn write_trace_csv<W: Write>(trace: &RunTrace, sink: W) -> Result<(), OutputError> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    writer.write_record(TRACE_HEADER)?;
    for record in &trace.records {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_trace_csv<R: Read>(source: R) -> Result<RunTrace, OutputError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(source);
    let header: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
    if header != TRACE_HEADER {
        return Err(OutputError::Header(header));
    }
    let records = reader
        .deserialize::<TraceRecord>()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RunTrace { records })
}

/// Everything needed to reproduce and interpret a batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    pub summary: RunSummary,
    pub config: BaConfig,
    /// Non-dominated results of a multiobjective batch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub front: Option<Vec<FrontPoint>>,
}

impl SummaryDocument {
    pub fn new(summary: RunSummary, config: BaConfig) -> Self {
        Self {
            problem: None,
            dimension: None,
            summary,
            config,
            front: None,
        }
    }
}

/// Pretty-printed JSON object followed by a newline.
pub fn write_summary_document<W: Write>(doc: &SummaryDocument, mut sink: W) -> Result<(), OutputError> {
    serde_json::to_writer_pretty(&mut sink, doc)?;
    sink.write_all(b"\n")?;
    sink.flush()?;
    Ok(())
}

/// Writes the summary together with the full resolved configuration.
pub fn write_summary_json<W: Write>(
    summary: &RunSummary,
    config: &BaConfig,
    sink: W,
) -> Result<(), OutputError> {
    write_summary_document(&SummaryDocument::new(summary.clone(), *config), sink)
}

pub fn read_summary_json<R: Read>(source: R) -> Result<SummaryDocument, OutputError> {
    Ok(serde_json::from_reader(source)?)
}
