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

//! Minimal-register compression of Pauli operator collections.
//!
//! Given weighted Pauli terms on `n` registers, [`compress`] produces new
//! terms on `dim(M) - rank(M)/2` registers (`M` the commutation matrix of a
//! generator basis) that reproduce every pairwise commutation relation and
//! the φ-rank of the input. No collection with those properties fits on
//! fewer registers.
//!
//! ```
//! use pauli_compress::{compress, WeightedPauli};
//!
//! let terms: Vec<WeightedPauli> = ["XX", "IZ"]
//!     .iter()
//!     .map(|s| WeightedPauli::unit(s.parse().unwrap()))
//!     .collect();
//! let result = compress(&terms).unwrap();
//! assert_eq!(result.q(), 1);
//! ```
//!
//! Modules:
//! - [`pauli`]: phase-free Pauli strings, `φ`, composition, symplectic product
//! - [`gf2`]: packed GF(2) vectors and matrices, rank, solve, congruence reduction
//! - [`compressor`]: the compression pipeline and equivalence checking
//! - [`oracle`]: dense-matrix and exhaustive-search cross-checks
//! - [`io`]: term files and JSON reports
//! - [`cli`]: the `pauli-compress` command

pub mod cli;
pub mod compressor;
pub mod error;
pub mod gf2;
pub mod io;
pub mod oracle;
pub mod pauli;

pub use compressor::{
    apply_basis_change, canonical_set, commutation_matrix, compress, extract_generators,
    min_registers, phi_rank, verify_equivalence, CommutationMatrix, CompressionResult,
    EquivalenceReport, GeneratorBasis,
};
pub use error::{Error, Result};
pub use gf2::{congruence_reduce, BitMatrix, BitVec, CanonicalForm};
pub use pauli::{
    compose, pauli_weight, phi, symplectic_product, unphi, Pauli, PauliString, SymplecticVector,
    WeightedPauli,
};
