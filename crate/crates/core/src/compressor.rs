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

//! Register-minimizing compression of Pauli collections.
//!
//! The pipeline picks a generator basis for the φ images, reduces the
//! generators' commutation matrix to canonical form `M = L·D̃·Lᵀ`, places
//! single `Z`s and `(X, Z)` pairs on `dim - rank/2` registers so that they
//! realize `D̃`, recombines them through `L`, and finally rebuilds every
//! input term from the new generators using its basis coefficients.

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVec, CanonicalForm};
use crate::pauli::{phi, symplectic_product, unphi, PauliString, SymplecticVector, WeightedPauli};

/// Independent generators chosen from an input collection, plus the
/// coefficients expressing every input element over them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorBasis {
    generator_indices: Vec<usize>,
    coeffs: Vec<BitVec>,
}

impl GeneratorBasis {
    /// Indices into the input collection, in input order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    /// One vector of length `len()` per input element.
    pub fn coeffs(&self) -> &[BitVec] {
        &self.coeffs
    }

    /// Number of generators, i.e. the φ-rank of the collection.
    pub fn len(&self) -> usize {
        self.generator_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generator_indices.is_empty()
    }
}

struct EchelonRow {
    bits: BitVec,
    pivot: usize,
    combo: BitVec,
}

fn uniform_registers(ops: &[PauliString]) -> Result<usize> {
    let n = ops.first().ok_or(Error::EmptyCollection)?.n();
    if let Some(bad) = ops.iter().find(|p| p.n() != n) {
        return Err(Error::DimensionMismatch {
            left: n,
            right: bad.n(),
        });
    }
    Ok(n)
}

/// Greedy left-to-right basis extraction: an element becomes a generator
/// iff its φ image is independent of the span of those kept so far.
pub fn extract_generators(collection: &[PauliString]) -> Result<GeneratorBasis> {
    let n = uniform_registers(collection)?;
    let cap = collection.len().min(2 * n);
    let mut rows: Vec<EchelonRow> = Vec::new();
    let mut generator_indices = Vec::new();
    let mut coeffs = Vec::with_capacity(collection.len());

    for (index, op) in collection.iter().enumerate() {
        let mut bits = phi(op).to_bits();
        let mut combo = BitVec::zeros(cap);
        for row in &rows {
            if bits.get(row.pivot) {
                bits.xor_assign(&row.bits);
                combo.xor_assign(&row.combo);
            }
        }
        match bits.first_one() {
            None => coeffs.push(combo),
            Some(pivot) => {
                let slot = generator_indices.len();
                generator_indices.push(index);
                combo.flip(slot);
                let mut own = BitVec::zeros(cap);
                own.set(slot, true);
                coeffs.push(own);
                rows.push(EchelonRow { bits, pivot, combo });
            }
        }
    }

    let d = generator_indices.len();
    Ok(GeneratorBasis {
        generator_indices,
        coeffs: coeffs.into_iter().map(|c| c.truncated(d)).collect(),
    })
}

/// GF(2) rank of the φ images.
pub fn phi_rank(collection: &[PauliString]) -> Result<usize> {
    if collection.is_empty() {
        return Ok(0);
    }
    Ok(extract_generators(collection)?.len())
}

/// Pairwise symplectic products of a list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationMatrix {
    inner: BitMatrix,
}

impl CommutationMatrix {
    pub fn inner(&self) -> &BitMatrix {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.rows()
    }

    pub fn rank(&self) -> usize {
        gf2::rank(&self.inner)
    }
}

pub fn commutation_matrix(basis_ops: &[PauliString]) -> Result<CommutationMatrix> {
    if basis_ops.is_empty() {
        return Ok(CommutationMatrix {
            inner: BitMatrix::zeros(0, 0),
        });
    }
    uniform_registers(basis_ops)?;
    let images: Vec<SymplecticVector> = basis_ops.iter().map(phi).collect();
    let d = images.len();
    let mut m = BitMatrix::zeros(d, d);
    for i in 0..d {
        for j in i + 1..d {
            if symplectic_product(&images[i], &images[j])? {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    Ok(CommutationMatrix { inner: m })
}

/// `dim(M) - rank(M)/2`.
pub fn min_registers(m: &CommutationMatrix) -> usize {
    m.dim() - m.rank() / 2
}

/// Operators realizing `D̃` on `iso_count + pair_count` registers:
/// `Z₁ … Z_iso`, then `X_k, Z_k` for each pair register `k`.
pub fn canonical_set(iso_count: usize, pair_count: usize) -> Vec<SymplecticVector> {
    let q = iso_count + pair_count;
    if q == 0 {
        return Vec::new();
    }
    let unit = |site: usize, x: bool| {
        let mut v = SymplecticVector::zeros(q).expect("q > 0");
        if x {
            v.set_x(site, true);
        } else {
            v.set_z(site, true);
        }
        v
    };
    let mut out = Vec::with_capacity(iso_count + 2 * pair_count);
    out.extend((0..iso_count).map(|site| unit(site, false)));
    for site in iso_count..q {
        out.push(unit(site, true));
        out.push(unit(site, false));
    }
    out
}

/// `g_i = ⊕_j L[i][j]·canonical_j`.
pub fn apply_basis_change(
    canonical: &[SymplecticVector],
    l: &BitMatrix,
) -> Result<Vec<PauliString>> {
    if !l.is_square() || l.rows() != canonical.len() {
        return Err(Error::Shape(format!(
            "L is {}x{} but the canonical set has {} elements",
            l.rows(),
            l.cols(),
            canonical.len()
        )));
    }
    if !gf2::is_invertible(l)? {
        return Err(Error::Singular);
    }
    let Some(first) = canonical.first() else {
        return Ok(Vec::new());
    };
    let q = first.n();
    l.row_iter()
        .map(|row| {
            let mut acc = SymplecticVector::zeros(q)?;
            for j in row.iter_ones() {
                acc.xor_assign(&canonical[j])?;
            }
            Ok(unphi(&acc))
        })
        .collect()
}

/// Output of [`compress`].
#[derive(Clone, Debug)]
pub struct CompressionResult {
    q: usize,
    original_n: usize,
    basis: GeneratorBasis,
    commutation: CommutationMatrix,
    canonical: CanonicalForm,
    compressed_generators: Vec<PauliString>,
    images: Vec<WeightedPauli>,
}

impl CompressionResult {
    /// Compressed register count.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn original_n(&self) -> usize {
        self.original_n
    }

    pub fn basis(&self) -> &GeneratorBasis {
        &self.basis
    }

    /// Commutation matrix of the original generators.
    pub fn commutation(&self) -> &CommutationMatrix {
        &self.commutation
    }

    pub fn canonical(&self) -> &CanonicalForm {
        &self.canonical
    }

    pub fn compressed_generators(&self) -> &[PauliString] {
        &self.compressed_generators
    }

    /// One term per input term, same order and weights, on `q` registers.
    pub fn images(&self) -> &[WeightedPauli] {
        &self.images
    }
}

/// Rebuilds each input element on the compressed registers from its basis
/// coefficients.
fn rebuild_terms(
    collection: &[WeightedPauli],
    basis: &GeneratorBasis,
    generators: &[SymplecticVector],
    q: usize,
) -> Result<Vec<WeightedPauli>> {
    collection
        .iter()
        .zip(basis.coeffs())
        .map(|(term, coeff)| {
            let mut acc = SymplecticVector::zeros(q)?;
            for j in coeff.iter_ones() {
                acc.xor_assign(&generators[j])?;
            }
            WeightedPauli::new(unphi(&acc), term.weight())
        })
        .collect()
}

pub fn compress(collection: &[WeightedPauli]) -> Result<CompressionResult> {
    let ops: Vec<PauliString> = collection.iter().map(|t| t.op.clone()).collect();
    let original_n = uniform_registers(&ops)?;
    let basis = extract_generators(&ops)?;
    if basis.is_empty() {
        return Err(Error::NoNonIdentityContent);
    }
    let generators: Vec<PauliString> = basis
        .generator_indices()
        .iter()
        .map(|&i| ops[i].clone())
        .collect();
    let commutation = commutation_matrix(&generators)?;
    let canonical = gf2::congruence_reduce(commutation.inner())?;
    let q = canonical.registers();
    let seeds = canonical_set(canonical.iso_count(), canonical.pair_count());
    let compressed_generators = apply_basis_change(&seeds, canonical.l())?;
    let compressed_images: Vec<SymplecticVector> = compressed_generators.iter().map(phi).collect();
    let images = rebuild_terms(collection, &basis, &compressed_images, q)?;

    Ok(CompressionResult {
        q,
        original_n,
        basis,
        commutation,
        canonical,
        compressed_generators,
        images,
    })
}

/// Outcome of comparing a candidate collection against an original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Pairs `(i, j)`, `i < j`, whose commutation differs.
    pub mismatches: Vec<(usize, usize)>,
    pub original_phi_rank: usize,
    pub candidate_phi_rank: usize,
}

impl EquivalenceReport {
    pub fn pairwise_match(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn rank_match(&self) -> bool {
        self.original_phi_rank == self.candidate_phi_rank
    }

    pub fn passed(&self) -> bool {
        self.pairwise_match() && self.rank_match()
    }
}

/// Checks commutation on every pair of terms and equality of φ-ranks.
pub fn verify_equivalence(
    original: &[PauliString],
    candidate: &[PauliString],
) -> Result<EquivalenceReport> {
    if original.len() != candidate.len() {
        return Err(Error::LengthMismatch {
            original: original.len(),
            candidate: candidate.len(),
        });
    }
    if original.is_empty() {
        return Ok(EquivalenceReport {
            mismatches: Vec::new(),
            original_phi_rank: 0,
            candidate_phi_rank: 0,
        });
    }
    uniform_registers(original)?;
    uniform_registers(candidate)?;
    let left: Vec<SymplecticVector> = original.iter().map(phi).collect();
    let right: Vec<SymplecticVector> = candidate.iter().map(phi).collect();
    let mut mismatches = Vec::new();
    for i in 0..left.len() {
        for j in i + 1..left.len() {
            if symplectic_product(&left[i], &left[j])? != symplectic_product(&right[i], &right[j])?
            {
                mismatches.push((i, j));
            }
        }
    }
    Ok(EquivalenceReport {
        mismatches,
        original_phi_rank: phi_rank(original)?,
        candidate_phi_rank: phi_rank(candidate)?,
    })
}
