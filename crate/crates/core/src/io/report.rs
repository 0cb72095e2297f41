//! Machine-readable per-scheme reports (schema version 1).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalogue::parse_catalogue;
use crate::hall::{find_hall, HallError};
use crate::primes::PrimeSet;
use crate::scheme::AssociationScheme;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedCensus {
    pub count: usize,
    /// Valencies of all closed subsets, ascending.
    pub valencies: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallRecord {
    pub pi: PrimeSet,
    pub hall: Vec<usize>,
    pub valency: u64,
    pub index: u64,
    pub o_pi: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema_version: u32,
    /// `file` or `file#name`.
    pub input: String,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub valencies: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub solvable: Option<bool>,
    /// Keyed by the π set, e.g. `{2,3}`.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub pi_valenced: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closed_subsets: Option<ClosedCensus>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub hall: Vec<HallRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl ReportRecord {
    fn invalid(input: String, error: String) -> Self {
        ReportRecord {
            schema_version: REPORT_SCHEMA_VERSION,
            input,
            valid: false,
            error: Some(error),
            n_points: None,
            rank: None,
            valencies: Vec::new(),
            solvable: None,
            pi_valenced: BTreeMap::new(),
            closed_subsets: None,
            hall: Vec::new(),
            elapsed_ms: None,
        }
    }

    /// Analyses one scheme. With an empty `pis`, every single prime dividing
    /// `n_S` is queried.
    pub fn for_scheme(input: String, s: &AssociationScheme, pis: &[PrimeSet]) -> Self {
        let default: Vec<PrimeSet>;
        let pis = if pis.is_empty() {
            default = PrimeSet::of(s.total_valency())
                .iter()
                .map(|p| PrimeSet::new([p]).expect("prime"))
                .collect();
            &default
        } else {
            pis
        };
        let closed = s.closed_subsets();
        let mut valencies: Vec<u64> = closed.iter().map(|t| t.valency()).collect();
        valencies.sort_unstable();
        let mut hall = Vec::new();
        for pi in pis {
            match find_hall(s, pi) {
                Ok(c) => hall.push(HallRecord {
                    pi: pi.clone(),
                    hall: c.hall.to_vec(),
                    valency: c.hall.valency(),
                    index: c.index(s),
                    o_pi: c.o_pi.to_vec(),
                }),
                Err(HallError::NotSolvable | HallError::NotPiValenced(_)) => {}
                Err(e) => panic!("Hall engine failure on {input}: {e}"),
            }
        }
        ReportRecord {
            schema_version: REPORT_SCHEMA_VERSION,
            valid: true,
            error: None,
            n_points: Some(s.n_points()),
            rank: Some(s.rank()),
            valencies: s.valencies().to_vec(),
            solvable: Some(s.is_solvable()),
            pi_valenced: pis
                .iter()
                .map(|pi| (pi.to_string(), s.is_pi_valenced(pi)))
                .collect(),
            closed_subsets: Some(ClosedCensus {
                count: closed.len(),
                valencies,
            }),
            hall,
            elapsed_ms: None,
            input,
        }
    }
}

fn records_for_file(path: &Path, label: &str, pis: &[PrimeSet], timings: bool) -> Vec<ReportRecord> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return vec![ReportRecord::invalid(label.to_string(), e.to_string())],
    };
    let files = match parse_catalogue(&text) {
        Ok(f) => f,
        Err(e) => return vec![ReportRecord::invalid(label.to_string(), e.to_string())],
    };
    let single = files.len() == 1;
    files
        .into_par_iter()
        .enumerate()
        .map(|(k, f)| {
            let input = match (&f.name, single) {
                (Some(n), _) => format!("{label}#{n}"),
                (None, true) => label.to_string(),
                (None, false) => format!("{label}#{}", k + 1),
            };
            let start = Instant::now();
            let mut rec = match f.to_scheme() {
                Ok(s) => ReportRecord::for_scheme(input, &s, pis),
                Err(e) => ReportRecord::invalid(input, e.to_string()),
            };
            if timings {
                rec.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            rec
        })
        .collect()
}

/// Reports for every `*.txt` / `*.scm` file in `dir`, ordered by file name
/// and then by position in the file. Timings are omitted unless asked for,
/// which keeps the output byte-identical across runs.
pub fn report_files(dir: &Path, pis: &[PrimeSet], timings: bool) -> std::io::Result<Vec<ReportRecord>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.retain(|p| {
        p.is_file() && matches!(p.extension().and_then(|e| e.to_str()), Some("txt" | "scm"))
    });
    paths.sort();
    Ok(paths
        .par_iter()
        .map(|p| {
            let label = p.file_name().unwrap().to_string_lossy().into_owned();
            records_for_file(p, &label, pis, timings)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect())
}

/// One JSON object per line.
pub fn to_json_lines(records: &[ReportRecord]) -> String {
    records
        .iter()
        .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
        .collect()
}
