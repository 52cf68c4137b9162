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

//! Eight operators on ten registers brought down to five, with the
//! intermediate steps of the pipeline printed along the way.
//!
//!     cargo run -p pauli-compress --example ten_register_walkthrough

use pauli_compress::{
    apply_basis_change, canonical_set, commutation_matrix, congruence_reduce, extract_generators,
    min_registers, verify_equivalence, PauliString,
};

const TERMS: [&str; 8] = [
    "ZYZZXZXYXI",
    "IIXYYZIYYY",
    "IYXIXIXYZY",
    "YZZIXZZXYI",
    "ZZZYIXYXXZ",
    "XZZIXIIXIZ",
    "XXIYYIIYIX",
    "IXIXIYIIYI",
];

fn main() -> pauli_compress::Result<()> {
    let ops: Vec<PauliString> = TERMS.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;

    let basis = extract_generators(&ops)?;
    println!("generators: {:?}", basis.generator_indices());

    let m = commutation_matrix(&ops)?;
    println!("commutation matrix (rank {}):\n{}", m.rank(), m.inner());
    println!("minimal registers: {}", min_registers(&m));

    let form = congruence_reduce(m.inner())?;
    let seeds = canonical_set(form.iso_count(), form.pair_count());
    let gens = apply_basis_change(&seeds, form.l())?;
    println!("L:\n{}", form.l());
    let labels: Vec<String> = gens.iter().map(PauliString::to_sparse_string).collect();
    println!("compressed generators: {}", labels.join(", "));

    let report = verify_equivalence(&ops, &gens)?;
    println!(
        "pairwise match {}, φ-rank {} -> {}",
        report.pairwise_match(),
        report.original_phi_rank,
        report.candidate_phi_rank
    );
    Ok(())
}
