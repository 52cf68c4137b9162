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

//! Write a term file, compress it, save the JSON report, and re-verify the
//! report's terms against the input.
//!
//!     cargo run -p pauli-compress --example report_round_trip

use num_complex::Complex64;
use pauli_compress::io::{
    read_collection, read_report, write_collection, write_report, CompressionReport, TermFileFormat,
};
use pauli_compress::{compress, verify_equivalence, PauliString, WeightedPauli};

fn main() -> pauli_compress::Result<()> {
    let dir = std::env::temp_dir().join(format!("pauli-compress-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|source| pauli_compress::Error::Io {
        path: dir.clone(),
        source,
    })?;

    let terms = vec![
        WeightedPauli::new("XXI".parse()?, Complex64::new(0.5, 0.0))?,
        WeightedPauli::new("IZZ".parse()?, Complex64::new(-1.25, 0.0))?,
        WeightedPauli::new("ZIX".parse()?, Complex64::new(0.0, 0.75))?,
    ];
    let input = dir.join("terms.pauli");
    write_collection(&input, &terms, Some(TermFileFormat::Plain))?;
    let terms = read_collection(&input, None)?;

    let original: Vec<PauliString> = terms.iter().map(|t| t.op.clone()).collect();
    let result = compress(&terms)?;
    let compressed: Vec<PauliString> = result.images().iter().map(|t| t.op.clone()).collect();
    let check = verify_equivalence(&original, &compressed)?;
    let report = CompressionReport::new(&result, &check, false);

    let report_path = dir.join("report.json");
    write_report(&report, &report_path)?;
    println!(
        "{}",
        std::fs::read_to_string(&report_path).unwrap_or_default()
    );

    let back = read_report(&report_path)?;
    let reread: Vec<PauliString> = back
        .compressed_collection()?
        .into_iter()
        .map(|t| t.op)
        .collect();
    println!(
        "re-verified: {}",
        verify_equivalence(&original, &reread)?.passed()
    );
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
