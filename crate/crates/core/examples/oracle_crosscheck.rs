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

//! Cross-check the symplectic machinery with dense matrices and confirm the
//! register formula by exhaustive search on small commutation patterns.
//!
//!     cargo run -p pauli-compress --example oracle_crosscheck

use pauli_compress::gf2::{rank, BitMatrix};
use pauli_compress::oracle::{brute_force_min_registers, dense_matrix, oracle_commutation_matrix};
use pauli_compress::{commutation_matrix, PauliString};

fn main() -> pauli_compress::Result<()> {
    let ops: Vec<PauliString> = ["XI", "IX", "ZZ"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let dense = oracle_commutation_matrix(&ops)?;
    let symplectic = commutation_matrix(&ops)?;
    println!(
        "dense oracle:\n{dense}\nsymplectic:\n{}",
        symplectic.inner()
    );
    assert_eq!(&dense, symplectic.inner());

    let y = dense_matrix(&"Y".parse()?)?;
    println!("Y = {:?}", y.entries());

    for rows in [
        &["01", "10"][..],
        &["001", "001", "110"],
        &["0110", "1001", "1001", "0110"],
    ] {
        let m = BitMatrix::parse_rows(rows)?;
        let searched = brute_force_min_registers(&m)?;
        let formula = m.rows() - rank(&m) / 2;
        println!("{:?}: search {searched}, dim - rank/2 = {formula}", rows);
    }
    Ok(())
}
