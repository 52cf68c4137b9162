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

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("register counts differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("a Pauli string must act on at least one register")]
    ZeroRegisters,

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: entry ({row}, {col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not hollow: diagonal entry {0} is set")]
    NotHollow(usize),

    #[error("matrix is singular over GF(2)")]
    Singular,

    #[error("weight {re}{im:+}i is not finite")]
    NonFiniteWeight { re: f64, im: f64 },

    #[error("collection is empty")]
    EmptyCollection,

    #[error("no non-identity content: every term is the identity")]
    NoNonIdentityContent,

    #[error("list lengths differ: {original} original vs {candidate} candidate")]
    LengthMismatch { original: usize, candidate: usize },

    #[error("dense oracle is capped at {cap} registers, got {n}")]
    OracleRegisterCap { n: usize, cap: usize },

    #[error("exhaustive search is capped at dimension {cap}, got {dim}")]
    OracleDimensionCap { dim: usize, cap: usize },

    #[error("invalid Pauli character {ch:?}")]
    InvalidPauliChar { ch: char },

    #[error("line {line}: malformed term: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("line {line}: invalid character {ch:?} in Pauli string")]
    InvalidCharacter { line: usize, ch: char },

    #[error("line {line}: Pauli string has length {found}, expected {expected}")]
    InconsistentLength {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
