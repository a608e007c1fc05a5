//! Study-level summary data: group summaries, reporting scenarios, CSV
//! ingestion, and small quantile utilities.
//!
//! The CSV schema is
//! `study_id,group,n,min,q1,median,q3,max,mean,sd` with a required header,
//! `group` in {1, 2}, and unknown values left empty. Each study contributes
//! exactly two rows, one per group.

use std::io::Read;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SummaryError {
    #[error("row {row}: {detail}")]
    Parse { row: usize, detail: String },
    #[error("summary is ambiguous: {0}")]
    AmbiguousSummary(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("study {study}: missing group {group}")]
    MissingGroup { study: String, group: u8 },
    #[error("dataset is empty")]
    Empty,
    #[error("quartiles required but absent")]
    MissingQuartiles,
    #[error("zero interquartile range")]
    ZeroIqr,
    #[error("io error: {0}")]
    Io(String),
}

/// Which set of summary measures a group reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scenario {
    /// min, median, max, n
    S1,
    /// q1, median, q3, n
    S2,
    /// min, q1, median, q3, max, n
    S3,
    /// mean, sd, n
    MeanSd,
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Scenario::S1 => "S1",
            Scenario::S2 => "S2",
            Scenario::S3 => "S3",
            Scenario::MeanSd => "mean-sd",
        };
        f.write_str(s)
    }
}

/// Reported statistics for one arm of a study.
///
/// `n` is the number of subjects (at least 2); every other field is present
/// only when the study reported it. Any present subset of
/// {min, q1, median, q3, max} must be monotone (ties allowed).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub n: u32,
    pub min: Option<f64>,
    pub q1: Option<f64>,
    pub median: Option<f64>,
    pub q3: Option<f64>,
    pub max: Option<f64>,
    pub mean: Option<f64>,
    pub sd: Option<f64>,
}

impl GroupSummary {
    /// An all-empty summary with the given n; set fields as needed.
    pub fn with_n(n: u32) -> Self {
        GroupSummary {
            n,
            min: None,
            q1: None,
            median: None,
            q3: None,
            max: None,
            mean: None,
            sd: None,
        }
    }

    /// Check the type invariants: n >= 2, monotone quantiles, sd implies
    /// mean, all values finite.
    pub fn validate(&self) -> Result<(), SummaryError> {
        if self.n < 2 {
            return Err(SummaryError::Invariant(format!("n must be >= 2, got {}", self.n)));
        }
        for (name, v) in [
            ("min", self.min),
            ("q1", self.q1),
            ("median", self.median),
            ("q3", self.q3),
            ("max", self.max),
            ("mean", self.mean),
            ("sd", self.sd),
        ] {
            if let Some(v) = v {
                if !v.is_finite() {
                    return Err(SummaryError::Invariant(format!("{name} is not finite")));
                }
            }
        }
        if let Some(sd) = self.sd {
            if sd < 0.0 {
                return Err(SummaryError::Invariant(format!("sd must be >= 0, got {sd}")));
            }
            if self.mean.is_none() {
                return Err(SummaryError::Invariant("sd present without mean".into()));
            }
        }
        // Every adjacent pair of the present quantiles must be ordered.
        let chain = [
            ("min", self.min),
            ("q1", self.q1),
            ("median", self.median),
            ("q3", self.q3),
            ("max", self.max),
        ];
        let mut prev: Option<(&str, f64)> = None;
        for (name, v) in chain {
            if let Some(v) = v {
                if let Some((pname, pv)) = prev {
                    if pv > v {
                        return Err(SummaryError::Invariant(format!(
                            "quantiles out of order: {pname}={pv} > {name}={v}"
                        )));
                    }
                }
                prev = Some((name, v));
            }
        }
        Ok(())
    }

    /// Classify the present-field pattern into a reporting scenario.
    ///
    /// Total and deterministic on valid summaries that match one of the four
    /// patterns; anything else is `AmbiguousSummary`.
    pub fn scenario(&self) -> Result<Scenario, SummaryError> {
        let quant = (
            self.min.is_some(),
            self.q1.is_some(),
            self.median.is_some(),
            self.q3.is_some(),
            self.max.is_some(),
        );
        let has_moments = self.mean.is_some() || self.sd.is_some();
        match quant {
            (true, false, true, false, true) if !has_moments => Ok(Scenario::S1),
            (false, true, true, true, false) if !has_moments => Ok(Scenario::S2),
            (true, true, true, true, true) if !has_moments => Ok(Scenario::S3),
            (false, false, false, false, false) if self.mean.is_some() && self.sd.is_some() => {
                Ok(Scenario::MeanSd)
            }
            _ => Err(SummaryError::AmbiguousSummary(format!(
                "present fields (min={}, q1={}, median={}, q3={}, max={}, mean={}, sd={}) \
                 match no reporting scenario",
                self.min.is_some(),
                self.q1.is_some(),
                self.median.is_some(),
                self.q3.is_some(),
                self.max.is_some(),
                self.mean.is_some(),
                self.sd.is_some(),
            ))),
        }
    }
}

/// Classify a group summary into its reporting scenario.
pub fn classify_scenario(g: &GroupSummary) -> Result<Scenario, SummaryError> {
    g.scenario()
}

/// Quartile-based skewness: (q3 + q1 - 2 median) / (q3 - q1), in [-1, 1].
pub fn bowley_skewness(g: &GroupSummary) -> Result<f64, SummaryError> {
    let (q1, y, q3) = match (g.q1, g.median, g.q3) {
        (Some(q1), Some(y), Some(q3)) => (q1, y, q3),
        _ => return Err(SummaryError::MissingQuartiles),
    };
    if q3 <= q1 {
        return Err(SummaryError::ZeroIqr);
    }
    Ok((q3 + q1 - 2.0 * y) / (q3 - q1))
}

/// A two-group study: identifier plus one summary per arm. The effect
/// orientation is always group 1 minus group 2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyRecord {
    pub id: String,
    pub group1: GroupSummary,
    pub group2: GroupSummary,
}

impl StudyRecord {
    /// Validates both groups and requires them to share a scenario tag.
    pub fn validate(&self) -> Result<Scenario, SummaryError> {
        self.group1.validate()?;
        self.group2.validate()?;
        let s1 = self.group1.scenario()?;
        let s2 = self.group2.scenario()?;
        if s1 != s2 {
            return Err(SummaryError::Invariant(format!(
                "study {}: groups report different scenarios ({s1} vs {s2})",
                self.id
            )));
        }
        Ok(s1)
    }
}

/// An ordered collection of studies with unique ids.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetaDataset {
    pub studies: Vec<StudyRecord>,
}

impl MetaDataset {
    pub fn new(studies: Vec<StudyRecord>) -> Result<Self, SummaryError> {
        if studies.is_empty() {
            return Err(SummaryError::Empty);
        }
        for s in &studies {
            s.validate()?;
        }
        for (i, s) in studies.iter().enumerate() {
            if studies[..i].iter().any(|t| t.id == s.id) {
                return Err(SummaryError::Invariant(format!("duplicate study id {}", s.id)));
            }
        }
        Ok(MetaDataset { studies })
    }

    pub fn len(&self) -> usize {
        self.studies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.studies.is_empty()
    }
}

const HEADER: [&str; 10] =
    ["study_id", "group", "n", "min", "q1", "median", "q3", "max", "mean", "sd"];

/// Parse a dataset from CSV bytes.
///
/// Rows are paired by (study_id, group); parse errors carry the 1-based row
/// number of the offending line (the header is row 1).
pub fn parse_csv<R: Read>(reader: R) -> Result<MetaDataset, SummaryError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    {
        let headers = rdr
            .headers()
            .map_err(|e| SummaryError::Io(e.to_string()))?;
        let got: Vec<&str> = headers.iter().collect();
        if got != HEADER {
            return Err(SummaryError::Parse {
                row: 1,
                detail: format!("expected header {:?}, got {:?}", HEADER.join(","), got.join(",")),
            });
        }
    }

    // (id, group1, group2) in first-appearance order.
    let mut order: Vec<String> = Vec::new();
    let mut partial: Vec<(Option<(usize, GroupSummary)>, Option<(usize, GroupSummary)>)> =
        Vec::new();

    for (i, record) in rdr.records().enumerate() {
        let row = i + 2; // header is row 1
        let record = record.map_err(|e| SummaryError::Parse { row, detail: e.to_string() })?;
        if record.len() != HEADER.len() {
            return Err(SummaryError::Parse {
                row,
                detail: format!("expected {} fields, got {}", HEADER.len(), record.len()),
            });
        }
        let id = record[0].to_string();
        if id.is_empty() {
            return Err(SummaryError::Parse { row, detail: "empty study_id".into() });
        }
        let group: u8 = match &record[1] {
            "1" => 1,
            "2" => 2,
            other => {
                return Err(SummaryError::Parse {
                    row,
                    detail: format!("group must be 1 or 2, got {other:?}"),
                })
            }
        };
        let n: u32 = record[2].parse().map_err(|_| SummaryError::Parse {
            row,
            detail: format!("bad n: {:?}", &record[2]),
        })?;
        let mut g = GroupSummary::with_n(n);
        let slots: [&mut Option<f64>; 7] = [
            &mut g.min,
            &mut g.q1,
            &mut g.median,
            &mut g.q3,
            &mut g.max,
            &mut g.mean,
            &mut g.sd,
        ];
        for (slot, (field, name)) in
            slots.into_iter().zip(record.iter().skip(3).zip(&HEADER[3..]))
        {
            if field.is_empty() {
                continue;
            }
            let v: f64 = field.parse().map_err(|_| SummaryError::Parse {
                row,
                detail: format!("bad {name}: {field:?}"),
            })?;
            *slot = Some(v);
        }
        g.validate().map_err(|e| SummaryError::Parse { row, detail: e.to_string() })?;
        g.scenario().map_err(|e| SummaryError::Parse { row, detail: e.to_string() })?;

        let idx = match order.iter().position(|x| x == &id) {
            Some(idx) => idx,
            None => {
                order.push(id.clone());
                partial.push((None, None));
                order.len() - 1
            }
        };
        let slot = if group == 1 { &mut partial[idx].0 } else { &mut partial[idx].1 };
        if slot.is_some() {
            return Err(SummaryError::Parse {
                row,
                detail: format!("study {id} group {group} appears twice"),
            });
        }
        *slot = Some((row, g));
    }

    if order.is_empty() {
        return Err(SummaryError::Empty);
    }

    let mut studies = Vec::with_capacity(order.len());
    for (id, (g1, g2)) in order.into_iter().zip(partial) {
        let (_, group1) =
            g1.ok_or_else(|| SummaryError::MissingGroup { study: id.clone(), group: 1 })?;
        let (row2, group2) =
            g2.ok_or_else(|| SummaryError::MissingGroup { study: id.clone(), group: 2 })?;
        let record = StudyRecord { id, group1, group2 };
        record.validate().map_err(|e| SummaryError::Parse { row: row2, detail: e.to_string() })?;
        studies.push(record);
    }
    MetaDataset::new(studies)
}

/// Serialize a dataset back to the CSV schema; inverse of [`parse_csv`].
pub fn serialize_csv(ds: &MetaDataset) -> String {
    fn field(v: Option<f64>) -> String {
        v.map(|x| format!("{x}")).unwrap_or_default()
    }
    let mut out = String::new();
    out.push_str(&HEADER.join(","));
    out.push('\n');
    for s in &ds.studies {
        for (tag, g) in [("1", &s.group1), ("2", &s.group2)] {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                s.id,
                tag,
                g.n,
                field(g.min),
                field(g.q1),
                field(g.median),
                field(g.q3),
                field(g.max),
                field(g.mean),
                field(g.sd),
            ));
        }
    }
    out
}
