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

//! Reduce a commutation matrix to canonical form and check `M = L·D̃·Lᵀ`.
//!
//!     cargo run -p pauli-compress --example congruence_reduction

use pauli_compress::gf2::{congruence_reduce, rank, BitMatrix};

fn main() -> pauli_compress::Result<()> {
    let m = BitMatrix::parse_rows(&[
        "00011100", "00011010", "00010010", "11100100", "11000100", "10011001", "01100001",
        "00000110",
    ])?;
    let form = congruence_reduce(&m)?;
    println!("M (rank {}):\n{m}\n", rank(&m));
    println!(
        "D̃ ({} isotropic, {} pairs):\n{}\n",
        form.iso_count(),
        form.pair_count(),
        form.d_tilde()
    );
    println!("L:\n{}\n", form.l());
    assert_eq!(form.reconstruct(), m);
    println!(
        "L·D̃·Lᵀ reproduces M; {} registers suffice",
        form.registers()
    );
    Ok(())
}
