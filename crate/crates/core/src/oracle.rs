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

//! Independent cross-checks: explicit `2ⁿ×2ⁿ` matrices for Pauli strings and
//! an exhaustive search for the fewest registers realizing a small
//! commutation matrix.
//!
//! Nothing here goes through the symplectic machinery in [`crate::pauli`] or
//! the elimination routines in [`crate::gf2`]; agreement between the two
//! paths is what the tests rely on.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::pauli::{Pauli, PauliString};

/// Largest register count [`dense_matrix`] accepts.
pub const DENSE_REGISTER_CAP: usize = 10;

/// Largest dimension [`brute_force_min_registers`] accepts.
pub const SEARCH_DIM_CAP: usize = 4;

const COMMUTATOR_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Row-major complex matrix of size `2ⁿ×2ⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    n: usize,
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseOperator {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    fn from_2x2(m: [[Complex64; 2]; 2]) -> Self {
        Self {
            n: 1,
            dim: 2,
            entries: vec![m[0][0], m[0][1], m[1][0], m[1][1]],
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &DenseOperator) -> DenseOperator {
        let dim = self.dim * other.dim;
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                if a == ZERO {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        entries[(i * other.dim + k) * dim + j * other.dim + l] =
                            a * other.get(k, l);
                    }
                }
            }
        }
        DenseOperator {
            n: self.n + other.n,
            dim,
            entries,
        }
    }

    /// Matrix product; skips zero entries of the left factor.
    pub fn mul(&self, other: &DenseOperator) -> DenseOperator {
        assert_eq!(self.dim, other.dim, "dense operator size mismatch");
        let dim = self.dim;
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                let out = &mut entries[i * dim..(i + 1) * dim];
                for (o, b) in out.iter_mut().zip(&other.entries[k * dim..(k + 1) * dim]) {
                    *o += a * b;
                }
            }
        }
        DenseOperator {
            n: self.n,
            dim,
            entries,
        }
    }

    pub fn scale(&self, c: Complex64) -> DenseOperator {
        DenseOperator {
            n: self.n,
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn conj_transpose(&self) -> DenseOperator {
        let dim = self.dim;
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                entries[j * dim + i] = self.get(i, j).conj();
            }
        }
        DenseOperator {
            n: self.n,
            dim,
            entries,
        }
    }

    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let prod = self.mul(&self.conj_transpose());
        let id = identity(self.n, self.dim);
        prod.max_abs_diff(&id) <= tol
    }

    /// True when `other = c·self` for some `c ∈ {±1, ±i}`, compared exactly.
    pub fn equal_up_to_phase(&self, other: &DenseOperator) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let Some(pos) = self.entries.iter().position(|e| *e != ZERO) else {
            return other.entries.iter().all(|e| *e == ZERO);
        };
        let ratio = other.entries[pos] / self.entries[pos];
        let phases = [ONE, -ONE, I, -I];
        phases.contains(&ratio) && self.scale(ratio) == *other
    }
}

fn identity(n: usize, dim: usize) -> DenseOperator {
    let mut entries = vec![ZERO; dim * dim];
    for i in 0..dim {
        entries[i * dim + i] = ONE;
    }
    DenseOperator { n, dim, entries }
}

fn site_matrix(p: Pauli) -> DenseOperator {
    let x = [[ZERO, ONE], [ONE, ZERO]];
    let z = [[ONE, ZERO], [ZERO, -ONE]];
    match p {
        Pauli::I => DenseOperator::from_2x2([[ONE, ZERO], [ZERO, ONE]]),
        Pauli::X => DenseOperator::from_2x2(x),
        Pauli::Z => DenseOperator::from_2x2(z),
        // Y = i·X·Z
        Pauli::Y => DenseOperator::from_2x2(x)
            .mul(&DenseOperator::from_2x2(z))
            .scale(I),
    }
}

/// Explicit matrix of a Pauli string; register 1 is the leftmost tensor factor.
pub fn dense_matrix(p: &PauliString) -> Result<DenseOperator> {
    if p.n() > DENSE_REGISTER_CAP {
        return Err(Error::OracleRegisterCap {
            n: p.n(),
            cap: DENSE_REGISTER_CAP,
        });
    }
    let mut sites = p.sites();
    let first = site_matrix(sites.next().expect("n >= 1"));
    Ok(sites.fold(first, |acc, s| acc.kron(&site_matrix(s))))
}

/// `AB - BA = 0` within `1e-9`.
pub fn commutes_dense(p: &PauliString, q: &PauliString) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch {
            left: p.n(),
            right: q.n(),
        });
    }
    let (a, b) = (dense_matrix(p)?, dense_matrix(q)?);
    Ok(a.mul(&b).max_abs_diff(&b.mul(&a)) <= COMMUTATOR_TOL)
}

/// Commutation matrix recomputed from dense operators: entry 1 iff the pair
/// fails to commute.
pub fn oracle_commutation_matrix(ops: &[PauliString]) -> Result<BitMatrix> {
    let dense = ops.iter().map(dense_matrix).collect::<Result<Vec<_>>>()?;
    if let Some(first) = ops.first() {
        if let Some(bad) = ops.iter().find(|p| p.n() != first.n()) {
            return Err(Error::DimensionMismatch {
                left: first.n(),
                right: bad.n(),
            });
        }
    }
    let d = ops.len();
    let mut m = BitMatrix::zeros(d, d);
    for i in 0..d {
        for j in i + 1..d {
            let ab = dense[i].mul(&dense[j]);
            let ba = dense[j].mul(&dense[i]);
            if ab.max_abs_diff(&ba) > COMMUTATOR_TOL {
                m.set(i, j, true);
                m.set(j, i, true);
            }
        }
    }
    Ok(m)
}

/// Packed `(x | z)` vector on at most four registers: bits `0..q` are
/// X-powers and bits `q..2q` are Z-powers.
#[derive(Clone, Copy)]
struct Packed(u16);

struct Search<'a> {
    target: &'a [[bool; SEARCH_DIM_CAP]; SEARCH_DIM_CAP],
    dim: usize,
    q: usize,
    chosen: Vec<Packed>,
}

impl Search<'_> {
    fn anticommute(&self, a: Packed, b: Packed) -> bool {
        let mask = (1u16 << self.q) - 1;
        let (ax, az) = (a.0 & mask, a.0 >> self.q);
        let (bx, bz) = (b.0 & mask, b.0 >> self.q);
        ((ax & bz) ^ (az & bx)).count_ones() % 2 == 1
    }

    /// Whether `v` lies outside the span of the chosen vectors.
    fn independent(&self, v: Packed) -> bool {
        let mut basis: Vec<u16> = Vec::with_capacity(self.chosen.len());
        for c in &self.chosen {
            let mut w = c.0;
            for &b in &basis {
                w = w.min(w ^ b);
            }
            if w != 0 {
                basis.push(w);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        let mut w = v.0;
        for &b in &basis {
            w = w.min(w ^ b);
        }
        w != 0
    }

    fn extend(&mut self) -> bool {
        let slot = self.chosen.len();
        if slot == self.dim {
            return true;
        }
        for raw in 1..(1u16 << (2 * self.q)) {
            let v = Packed(raw);
            let fits = self
                .chosen
                .iter()
                .enumerate()
                .all(|(k, &c)| self.anticommute(c, v) == self.target[k][slot]);
            if fits && self.independent(v) {
                self.chosen.push(v);
                if self.extend() {
                    return true;
                }
                self.chosen.pop();
            }
        }
        false
    }
}

/// Smallest register count on which some linearly independent tuple of
/// Pauli operators realizes `m`, found by exhaustive search.
pub fn brute_force_min_registers(m: &BitMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let dim = m.rows();
    if dim > SEARCH_DIM_CAP {
        return Err(Error::OracleDimensionCap {
            dim,
            cap: SEARCH_DIM_CAP,
        });
    }
    let mut target = [[false; SEARCH_DIM_CAP]; SEARCH_DIM_CAP];
    for (i, row) in target.iter_mut().enumerate().take(dim) {
        if m.get(i, i) {
            return Err(Error::NotHollow(i));
        }
        for (j, entry) in row.iter_mut().enumerate().take(dim) {
            if m.get(i, j) != m.get(j, i) {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
            *entry = m.get(i, j);
        }
    }
    if dim == 0 {
        return Ok(0);
    }
    for q in 1..=dim {
        let mut search = Search {
            target: &target,
            dim,
            q,
            chosen: Vec::with_capacity(dim),
        };
        if search.extend() {
            return Ok(q);
        }
    }
    unreachable!("single Z operators on {dim} registers realize the zero pattern and beyond")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_site_matrices() {
        let i = dense_matrix(&ps("I")).unwrap();
        assert_eq!(i.entries(), &[c(1., 0.), c(0., 0.), c(0., 0.), c(1., 0.)]);
        let z = dense_matrix(&ps("Z")).unwrap();
        assert_eq!(z.entries(), &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]);
        let x = dense_matrix(&ps("X")).unwrap();
        assert_eq!(x.entries(), &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]);
        let y = dense_matrix(&ps("Y")).unwrap();
        assert_eq!(y.entries(), &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]);
    }

    #[test]
    fn kron_ordering_puts_first_register_high() {
        // X⊗I flips the most significant bit: |00> -> |10>.
        let xi = dense_matrix(&ps("XI")).unwrap();
        assert_eq!(xi.get(2, 0), c(1., 0.));
        assert_eq!(xi.get(1, 0), c(0., 0.));
    }

    #[test]
    fn dense_cap() {
        assert!(dense_matrix(&ps("IIIIIIIIII")).is_ok());
        assert!(matches!(
            dense_matrix(&ps("IIIIIIIIIII")),
            Err(Error::OracleRegisterCap { n: 11, cap: 10 })
        ));
    }

    #[test]
    fn dense_commutation_examples() {
        assert!(!commutes_dense(&ps("X"), &ps("Z")).unwrap());
        assert!(commutes_dense(&ps("XX"), &ps("ZZ")).unwrap());
        assert!(!commutes_dense(&ps("XX"), &ps("IZ")).unwrap());
    }

    #[test]
    fn oracle_matrix_examples() {
        let m = oracle_commutation_matrix(&[ps("XX"), ps("IZ")]).unwrap();
        assert_eq!(m, BitMatrix::parse_rows(&["01", "10"]).unwrap());
        let m = oracle_commutation_matrix(&[ps("Z")]).unwrap();
        assert_eq!(m, BitMatrix::zeros(1, 1));
    }

    #[test]
    fn unitary_and_phase() {
        let p = dense_matrix(&ps("XYZ")).unwrap();
        assert!(p.is_unitary(1e-12));
        assert!(p.equal_up_to_phase(&p.scale(I)));
        assert!(!p.equal_up_to_phase(&p.scale(c(2.0, 0.0))));
        assert!(!p.equal_up_to_phase(&dense_matrix(&ps("XYI")).unwrap()));
    }

    #[test]
    fn search_examples() {
        let pair = BitMatrix::parse_rows(&["01", "10"]).unwrap();
        assert_eq!(brute_force_min_registers(&pair).unwrap(), 1);
        assert_eq!(
            brute_force_min_registers(&BitMatrix::zeros(3, 3)).unwrap(),
            3
        );
        // M({XI, IX, ZZ})
        let m = BitMatrix::parse_rows(&["001", "001", "110"]).unwrap();
        assert_eq!(brute_force_min_registers(&m).unwrap(), 2);
    }

    #[test]
    fn search_rejects_bad_input() {
        assert!(matches!(
            brute_force_min_registers(&BitMatrix::zeros(5, 5)),
            Err(Error::OracleDimensionCap { dim: 5, cap: 4 })
        ));
        let diag = BitMatrix::parse_rows(&["10", "00"]).unwrap();
        assert!(matches!(
            brute_force_min_registers(&diag),
            Err(Error::NotHollow(0))
        ));
        let asym = BitMatrix::parse_rows(&["01", "00"]).unwrap();
        assert!(matches!(
            brute_force_min_registers(&asym),
            Err(Error::NotSymmetric { .. })
        ));
    }
}
