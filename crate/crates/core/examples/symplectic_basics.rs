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

//! Pauli strings, their symplectic vectors, composition, and commutation.
//!
//!     cargo run -p pauli-compress --example symplectic_basics

use pauli_compress::{compose, pauli_weight, phi, symplectic_product, unphi, PauliString};

fn main() -> pauli_compress::Result<()> {
    let a: PauliString = "XXZI".parse()?;
    let b: PauliString = "IZZY".parse()?;

    let (va, vb) = (phi(&a), phi(&b));
    println!("phi({a}) = {}", va.to_bits());
    println!("phi({b}) = {}", vb.to_bits());

    let product = compose(&a, &b)?;
    println!(
        "{a} * {b} = {product} (phase dropped), weight {}",
        pauli_weight(&product)
    );
    assert_eq!(unphi(&va), a);

    let anti = symplectic_product(&va, &vb)?;
    println!(
        "{a} and {b} {}",
        if anti { "anticommute" } else { "commute" }
    );
    Ok(())
}
