//! Flat sweep records and their JSON and CSV encodings.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::theorems::{SweepConfig, SweepOutcome};

/// One row of a verification report. Field order is the on-disk order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub family: String,
    pub n: u32,
    pub p: u32,
    pub t: u32,
    pub l: u32,
    pub character: String,
    #[serde(rename = "dimV")]
    pub dim_v: u32,
    pub t_gamma: Option<u32>,
    pub predicted_dim: Option<u32>,
    pub observed_dim: Option<u32>,
    pub predicted_obasis: bool,
    pub observed_obasis: bool,
    pub agree: bool,
}

/// Run metadata, kept apart from the records.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportMeta {
    pub tool_version: String,
    pub config: SweepConfig,
    pub vacuous: Vec<String>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub meta: ReportMeta,
    pub cases: Vec<CaseRecord>,
}

impl Report {
    pub fn from_outcome(config: &SweepConfig, outcome: &SweepOutcome) -> Self {
        Report {
            meta: ReportMeta {
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                config: config.clone(),
                vacuous: outcome.vacuous.clone(),
                failures: outcome
                    .failures
                    .iter()
                    .map(|f| {
                        format!(
                            "{} p={} {} dimV={}: {}",
                            f.case.family,
                            f.case.p,
                            f.case.character.label(),
                            f.case.dim_v,
                            f.error
                        )
                    })
                    .collect(),
            },
            cases: outcome.records(),
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

/// Writes records as CSV with a header row.
pub fn write_csv<W: Write>(records: &[CaseRecord], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record([
        "family",
        "n",
        "p",
        "t",
        "l",
        "character",
        "dimV",
        "t_gamma",
        "predicted_dim",
        "observed_dim",
        "predicted_obasis",
        "observed_obasis",
        "agree",
    ])?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Parses CSV written by [`write_csv`].
pub fn read_csv(data: &[u8]) -> csv::Result<Vec<CaseRecord>> {
    csv::Reader::from_reader(data).deserialize().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<CaseRecord> {
        vec![
            CaseRecord {
                family: "dicyclic".into(),
                n: 6,
                p: 3,
                t: 1,
                l: 4,
                character: "psi_hat[b=1]".into(),
                dim_v: 2,
                t_gamma: Some(4),
                predicted_dim: Some(2),
                observed_dim: Some(2),
                predicted_obasis: true,
                observed_obasis: true,
                agree: true,
            },
            CaseRecord {
                family: "semidihedral".into(),
                n: 3,
                p: 3,
                t: 1,
                l: 4,
                character: "chi_hat'[1]".into(),
                dim_v: 1,
                t_gamma: None,
                predicted_dim: None,
                observed_dim: Some(1),
                predicted_obasis: true,
                observed_obasis: true,
                agree: true,
            },
        ]
    }

    #[test]
    fn csv_roundtrip_and_empty_cells() {
        let mut buf = Vec::new();
        write_csv(&sample(), &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("family,n,p,t,l,character,dimV,t_gamma,"));
        assert!(text.contains("semidihedral,3,3,1,4,chi_hat'[1],1,,,1,true,true,true"));
        assert_eq!(read_csv(&buf).unwrap(), sample());
    }

    #[test]
    fn json_uses_null_for_missing() {
        let v = serde_json::to_value(&sample()[1]).unwrap();
        assert!(v["t_gamma"].is_null());
        assert_eq!(v["dimV"], 1);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 13);
    }
}
