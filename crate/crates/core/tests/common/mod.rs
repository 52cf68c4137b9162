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

#![allow(dead_code)]

use num_complex::Complex64;
use pauli_compress::{BitMatrix, Pauli, PauliString, WeightedPauli};
use rand::Rng;

pub const PAPER_P: [&str; 8] = [
    "ZYZZXZXYXI",
    "IIXYYZIYYY",
    "IYXIXIXYZY",
    "YZZIXZZXYI",
    "ZZZYIXYXXZ",
    "XZZIXIIXIZ",
    "XXIYYIIYIX",
    "IXIXIYIIYI",
];

pub const PAPER_M: [&str; 8] = [
    "00011100", "00011010", "00010010", "11100100", "11000100", "10011001", "01100001", "00000110",
];

pub const PAPER_L: [&str; 8] = [
    "10000100", "01000101", "00100000", "00011000", "00001000", "00001111", "00010010", "00000001",
];

/// Z1Z4, Z2Z4Z5, X3, Z3X4, X4, Y4Y5, Z3X5, Z5 on five registers.
pub const PAPER_MINIMAL_SET: [&str; 8] = [
    "ZIIZI", "IZIZZ", "IIXII", "IIZXI", "IIIXI", "IIIYY", "IIZIX", "IIIIZ",
];

pub fn ops(list: &[&str]) -> Vec<PauliString> {
    list.iter().map(|s| s.parse().unwrap()).collect()
}

pub fn random_pauli<R: Rng>(rng: &mut R, n: usize) -> PauliString {
    let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
    PauliString::from_sites((0..n).map(|_| letters[rng.gen_range(0..4)])).unwrap()
}

/// Random collection that sometimes repeats terms, includes identities, or
/// appends products of earlier terms.
pub fn random_collection<R: Rng>(rng: &mut R, n: usize, terms: usize) -> Vec<PauliString> {
    let mut out: Vec<PauliString> = Vec::with_capacity(terms);
    while out.len() < terms {
        let roll = rng.gen_range(0..10);
        let next = if roll == 0 {
            PauliString::identity(n).unwrap()
        } else if roll <= 2 && out.len() >= 2 {
            let a = &out[rng.gen_range(0..out.len())];
            let b = &out[rng.gen_range(0..out.len())];
            pauli_compress::compose(a, b).unwrap()
        } else if roll == 3 && !out.is_empty() {
            out[rng.gen_range(0..out.len())].clone()
        } else {
            random_pauli(rng, n)
        };
        out.push(next);
    }
    out
}

pub fn weighted<R: Rng>(rng: &mut R, ops: &[PauliString]) -> Vec<WeightedPauli> {
    ops.iter()
        .map(|p| {
            WeightedPauli::new(
                p.clone(),
                Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-1.0..1.0)),
            )
            .unwrap()
        })
        .collect()
}

pub fn random_alternating<R: Rng>(rng: &mut R, dim: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let v = rng.gen_bool(0.5);
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    m
}

/// Every symmetric hollow matrix of the given dimension.
pub fn all_alternating(dim: usize) -> Vec<BitMatrix> {
    let slots: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
        .collect();
    (0u32..1 << slots.len())
        .map(|mask| {
            let mut m = BitMatrix::zeros(dim, dim);
            for (k, &(i, j)) in slots.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    m.set(i, j, true);
                    m.set(j, i, true);
                }
            }
            m
        })
        .collect()
}
