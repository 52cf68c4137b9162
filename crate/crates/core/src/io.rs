// Copyright 2026 The pauli-compress Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Term files and compression reports.
//!
//! Plain term files hold one term per line: an optional weight written as
//! `re` or `re,im`, whitespace, then a string over `I`, `X`, `Y`, `Z`. A `#`
//! starts a comment and blank lines are skipped. JSON term files are objects
//! of the form `{"terms": [{"pauli": "XZ", "weight": [re, im]}, ...]}` where
//! `weight` may be omitted.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::compressor::{CompressionResult, EquivalenceReport};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, WeightedPauli};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermFileFormat {
    Plain,
    Json,
}

impl TermFileFormat {
    /// `.json` selects JSON; everything else is plain.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => TermFileFormat::Json,
            _ => TermFileFormat::Plain,
        }
    }
}

fn parse_weight(token: &str) -> Option<Complex64> {
    let (re, im) = match token.split_once(',') {
        Some((re, im)) => (re.parse::<f64>().ok()?, im.parse::<f64>().ok()?),
        None => (token.parse::<f64>().ok()?, 0.0),
    };
    (re.is_finite() && im.is_finite()).then(|| Complex64::new(re, im))
}

/// Parses a Pauli token; `position` is the 1-based line (plain) or term
/// index (JSON) used in error messages.
fn parse_pauli(token: &str, position: usize) -> Result<PauliString> {
    let sites = token
        .chars()
        .map(|ch| Pauli::from_char(ch).map_err(|_| Error::InvalidCharacter { line: position, ch }))
        .collect::<Result<Vec<_>>>()?;
    PauliString::from_sites(sites).map_err(|_| Error::MalformedLine {
        line: position,
        reason: "empty Pauli string".into(),
    })
}

fn check_length(expected: &mut Option<usize>, op: &PauliString, position: usize) -> Result<()> {
    match *expected {
        None => *expected = Some(op.n()),
        Some(n) if n != op.n() => {
            return Err(Error::InconsistentLength {
                line: position,
                expected: n,
                found: op.n(),
            })
        }
        Some(_) => {}
    }
    Ok(())
}

pub fn parse_plain(text: &str) -> Result<Vec<WeightedPauli>> {
    let mut terms = Vec::new();
    let mut expected = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (weight, pauli) = match tokens.as_slice() {
            [] => continue,
            [pauli] => {
                if parse_weight(pauli).is_some() {
                    return Err(Error::MalformedLine {
                        line,
                        reason: "weight without a Pauli string".into(),
                    });
                }
                (Complex64::new(1.0, 0.0), *pauli)
            }
            [weight, pauli] => {
                let w = parse_weight(weight).ok_or_else(|| Error::MalformedLine {
                    line,
                    reason: format!("cannot parse weight {weight:?}"),
                })?;
                (w, *pauli)
            }
            _ => {
                return Err(Error::MalformedLine {
                    line,
                    reason: format!("expected `[weight] pauli`, found {} fields", tokens.len()),
                })
            }
        };
        let op = parse_pauli(pauli, line)?;
        check_length(&mut expected, &op, line)?;
        terms.push(WeightedPauli::new(op, weight)?);
    }
    Ok(terms)
}

pub fn format_plain(terms: &[WeightedPauli]) -> String {
    let mut out = String::new();
    for t in terms {
        let w = t.weight();
        out.push_str(&format!("{},{} {}\n", w.re, w.im, t.op));
    }
    out
}

fn unit_weight() -> [f64; 2] {
    [1.0, 0.0]
}

/// One entry of a JSON term list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermEntry {
    pub pauli: String,
    #[serde(default = "unit_weight")]
    pub weight: [f64; 2],
}

impl From<&WeightedPauli> for TermEntry {
    fn from(t: &WeightedPauli) -> Self {
        let w = t.weight();
        TermEntry {
            pauli: t.op.to_string(),
            weight: [w.re, w.im],
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermFile {
    terms: Vec<TermEntry>,
}

fn entries_to_terms(entries: &[TermEntry]) -> Result<Vec<WeightedPauli>> {
    let mut expected = None;
    entries
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            let op = parse_pauli(&e.pauli, idx + 1)?;
            check_length(&mut expected, &op, idx + 1)?;
            WeightedPauli::new(op, Complex64::new(e.weight[0], e.weight[1]))
        })
        .collect()
}

pub fn parse_json(text: &str) -> Result<Vec<WeightedPauli>> {
    let file: TermFile = serde_json::from_str(text)?;
    entries_to_terms(&file.terms)
}

pub fn format_json(terms: &[WeightedPauli]) -> String {
    let file = TermFile {
        terms: terms.iter().map(TermEntry::from).collect(),
    };
    serde_json::to_string_pretty(&file).expect("term lists always serialize")
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a term file; the format is inferred from the extension when `None`.
pub fn read_collection(path: &Path, format: Option<TermFileFormat>) -> Result<Vec<WeightedPauli>> {
    let text = read_text(path)?;
    match format.unwrap_or_else(|| TermFileFormat::from_path(path)) {
        TermFileFormat::Plain => parse_plain(&text),
        TermFileFormat::Json => parse_json(&text),
    }
}

pub fn write_collection(
    path: &Path,
    terms: &[WeightedPauli],
    format: Option<TermFileFormat>,
) -> Result<()> {
    let text = match format.unwrap_or_else(|| TermFileFormat::from_path(path)) {
        TermFileFormat::Plain => format_plain(terms),
        TermFileFormat::Json => format_json(terms),
    };
    write_text(path, &text)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub pairwise_match: bool,
    pub rank_match: bool,
    pub oracle_used: bool,
}

/// Machine-readable summary of a compression run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompressionReport {
    pub original_registers: usize,
    pub compressed_registers: usize,
    pub phi_rank: usize,
    pub comm_rank: usize,
    pub generator_indices: Vec<usize>,
    /// Rows of `L` as `'0'`/`'1'` strings, column 1 first.
    pub l_matrix: Vec<String>,
    pub compressed_terms: Vec<TermEntry>,
    pub verification: Verification,
}

impl CompressionReport {
    pub fn new(result: &CompressionResult, check: &EquivalenceReport, oracle_used: bool) -> Self {
        Self {
            original_registers: result.original_n(),
            compressed_registers: result.q(),
            phi_rank: result.basis().len(),
            comm_rank: result.canonical().rank(),
            generator_indices: result.basis().generator_indices().to_vec(),
            l_matrix: result
                .canonical()
                .l()
                .row_iter()
                .map(|r| r.to_string())
                .collect(),
            compressed_terms: result.images().iter().map(TermEntry::from).collect(),
            verification: Verification {
                pairwise_match: check.pairwise_match(),
                rank_match: check.rank_match(),
                oracle_used,
            },
        }
    }

    pub fn compressed_collection(&self) -> Result<Vec<WeightedPauli>> {
        entries_to_terms(&self.compressed_terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn write_report(report: &CompressionReport, path: &Path) -> Result<()> {
    let mut text = report.to_json();
    text.push('\n');
    write_text(path, &text)
}

pub fn read_report(path: &Path) -> Result<CompressionReport> {
    CompressionReport::from_json(&read_text(path)?)
}
