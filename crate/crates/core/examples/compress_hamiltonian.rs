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

//! Compress a weighted four-qubit Hamiltonian read from JSON.
//!
//!     cargo run -p pauli-compress --example compress_hamiltonian

use std::path::Path;

use pauli_compress::io::read_collection;
use pauli_compress::{compress, verify_equivalence, PauliString};

fn main() -> pauli_compress::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/molecular_4q.json");
    let terms = read_collection(&path, None)?;
    let result = compress(&terms)?;

    println!(
        "{} terms on {} registers -> {} registers (φ-rank {}, commutation rank {})",
        terms.len(),
        result.original_n(),
        result.q(),
        result.basis().len(),
        result.commutation().rank()
    );
    for (before, after) in terms.iter().zip(result.images()) {
        println!(
            "  {:>+.6}  {}  ->  {}",
            before.weight().re,
            before.op,
            after.op
        );
    }

    let original: Vec<PauliString> = terms.iter().map(|t| t.op.clone()).collect();
    let compressed: Vec<PauliString> = result.images().iter().map(|t| t.op.clone()).collect();
    let check = verify_equivalence(&original, &compressed)?;
    println!("equivalent: {}", check.passed());
    Ok(())
}
