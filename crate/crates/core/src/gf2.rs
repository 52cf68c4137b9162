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

//! Dense linear algebra over GF(2).
//!
//! Vectors and matrix rows are packed into `u64` words so that row additions,
//! equality and inner products run a word at a time. The centerpiece is
//! [`congruence_reduce`], which factors a symmetric hollow matrix as
//! `M = L·D̃·Lᵀ` with an explicit invertible `L`.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Fixed-length bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if bit {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        Self { len, words }
    }

    /// Parses a string of `'0'`/`'1'` characters, first character is index 0.
    pub fn parse(s: &str) -> Option<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return None,
            }
        }
        Some(Self::from_bools(bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// `self ^= other`. Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// GF(2) inner product. Panics on length mismatch.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * WORD_BITS + bit)
            })
        })
    }

    /// Copy of the first `len` bits.
    pub fn truncated(&self, len: usize) -> BitVec {
        assert!(len <= self.len);
        BitVec::from_bools((0..len).map(|i| self.get(i)))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Parses rows written as `'0'`/`'1'` strings.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let parsed = rows
            .iter()
            .map(|r| {
                BitVec::parse(r.as_ref())
                    .ok_or_else(|| Error::Shape(format!("not a bit row: {:?}", r.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, parsed)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row].get(col)
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.data[row].set(col, value)
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.data[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &BitVec> {
        self.data.iter()
    }

    /// Row `dst` += row `src`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst);
        let source = self.data[src].clone();
        self.data[dst].xor_assign(&source);
    }

    /// Column `dst` += column `src`.
    pub fn add_col(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst);
        for row in &mut self.data {
            if row.get(src) {
                row.flip(dst);
            }
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.data {
            let (x, y) = (row.get(a), row.get(b));
            row.set(a, y);
            row.set(b, x);
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    /// True when every diagonal entry is zero.
    pub fn is_hollow(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| !self.get(i, i))
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(BitVec::from_bools(self.data.iter().map(|r| r.dot(x))))
    }

    /// Inverse over GF(2), or `None` when singular. Panics on non-square input.
    pub fn inverse(&self) -> Option<BitMatrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = BitMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            for r in 0..n {
                if r != col && a.get(r, col) {
                    a.add_row(col, r);
                    inv.add_row(col, r);
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

/// GF(2) row rank by Gaussian elimination.
pub fn rank(m: &BitMatrix) -> usize {
    let mut rows = m.data.clone();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Solves `a·x = b`.
///
/// Returns `Ok(None)` when the system is inconsistent. Elimination runs in
/// column order and free variables are set to zero, so the answer is
/// deterministic when the solution is not unique.
pub fn solve(a: &BitMatrix, b: &BitVec) -> Result<Option<BitVec>> {
    if b.len() != a.rows {
        return Err(Error::Shape(format!(
            "right-hand side of length {} against {} rows",
            b.len(),
            a.rows
        )));
    }
    let mut rows = a.data.clone();
    let mut rhs: Vec<bool> = b.iter().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..a.cols {
        if r == rows.len() {
            break;
        }
        let Some(pivot) = (r..rows.len()).find(|&k| rows[k].get(col)) else {
            continue;
        };
        rows.swap(r, pivot);
        rhs.swap(r, pivot);
        let pivot_row = rows[r].clone();
        for k in 0..rows.len() {
            if k != r && rows[k].get(col) {
                rows[k].xor_assign(&pivot_row);
                rhs[k] ^= rhs[r];
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rhs[r..].iter().any(|&bit| bit) {
        return Ok(None);
    }
    let mut x = BitVec::zeros(a.cols);
    for (k, &col) in pivots.iter().enumerate() {
        x.set(col, rhs[k]);
    }
    Ok(Some(x))
}

/// Matrix product over GF(2).
pub fn mat_mul(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let data = a
        .data
        .iter()
        .map(|row| {
            let mut acc = BitVec::zeros(b.cols);
            for k in row.iter_ones() {
                acc.xor_assign(&b.data[k]);
            }
            acc
        })
        .collect();
    Ok(BitMatrix {
        rows: a.rows,
        cols: b.cols,
        data,
    })
}

pub fn is_invertible(m: &BitMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    Ok(rank(m) == m.rows)
}

/// Block-diagonal `D̃`: `iso_count` zero 1×1 blocks followed by `pair_count`
/// copies of `[[0,1],[1,0]]`.
pub fn canonical_block_matrix(iso_count: usize, pair_count: usize) -> BitMatrix {
    let dim = iso_count + 2 * pair_count;
    let mut d = BitMatrix::zeros(dim, dim);
    for p in 0..pair_count {
        let a = iso_count + 2 * p;
        d.set(a, a + 1, true);
        d.set(a + 1, a, true);
    }
    d
}

/// Result of reducing a commutation matrix to canonical form: `M = L·D̃·Lᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    dim: usize,
    iso_count: usize,
    pair_count: usize,
    l: BitMatrix,
}

impl CanonicalForm {
    /// Assembles a canonical form from externally supplied parts, e.g. a
    /// hand-derived `L`. Checks shape and invertibility but not that `L·D̃·Lᵀ`
    /// reproduces any particular matrix; use [`CanonicalForm::reconstruct`].
    pub fn from_parts(iso_count: usize, pair_count: usize, l: BitMatrix) -> Result<Self> {
        let dim = iso_count + 2 * pair_count;
        if l.rows() != dim || l.cols() != dim {
            return Err(Error::Shape(format!(
                "L is {}x{}, expected {dim}x{dim}",
                l.rows(),
                l.cols()
            )));
        }
        if !is_invertible(&l)? {
            return Err(Error::Singular);
        }
        Ok(Self {
            dim,
            iso_count,
            pair_count,
            l,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of zero blocks in `D̃`, equal to `dim - rank`.
    pub fn iso_count(&self) -> usize {
        self.iso_count
    }

    /// Number of antidiagonal 2×2 blocks in `D̃`, equal to `rank / 2`.
    pub fn pair_count(&self) -> usize {
        self.pair_count
    }

    /// Rank of the reduced matrix.
    pub fn rank(&self) -> usize {
        2 * self.pair_count
    }

    /// Registers needed to realize the canonical form.
    pub fn registers(&self) -> usize {
        self.iso_count + self.pair_count
    }

    pub fn l(&self) -> &BitMatrix {
        &self.l
    }

    pub fn d_tilde(&self) -> BitMatrix {
        canonical_block_matrix(self.iso_count, self.pair_count)
    }

    /// `L·D̃·Lᵀ`.
    pub fn reconstruct(&self) -> BitMatrix {
        let ld = mat_mul(&self.l, &self.d_tilde()).expect("square factors");
        mat_mul(&ld, &self.l.transpose()).expect("square factors")
    }
}

/// Working state of the reduction. `work = T·M·Tᵀ` where `L = T⁻¹`; we keep
/// `Lᵀ` row-major so that each congruence step touches `L` with a row update.
struct Reducer {
    work: BitMatrix,
    lt: BitMatrix,
}

impl Reducer {
    /// Composes generator `src` onto generator `dst`.
    fn add(&mut self, src: usize, dst: usize) {
        self.work.add_row(src, dst);
        self.work.add_col(src, dst);
        debug_assert!(!self.work.get(dst, dst), "diagonal lost hollowness");
        // L ← L·E with E = I + e_dst e_srcᵀ: column src of L gains column dst.
        self.lt.add_row(dst, src);
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.work.swap_rows(a, b);
        self.work.swap_cols(a, b);
        self.lt.swap_rows(a, b);
    }
}

fn check_alternating(m: &BitMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if let Some((row, col)) = m.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    if let Some(i) = (0..m.rows).find(|&i| m.get(i, i)) {
        return Err(Error::NotHollow(i));
    }
    Ok(())
}

/// Reduces a symmetric hollow matrix to `D̃` by simultaneous row and column
/// additions, returning the explicit `L` with `M = L·D̃·Lᵀ`.
///
/// Pivot rule: in the active block, take the lowest row `i` with a nonzero
/// entry and the lowest `j > i` with `M[i][j] = 1`, swap them to the front of
/// the block, then clear every other entry in their rows and columns. Pairs
/// collect at the front; a final permutation moves the isotropic part ahead
/// of them so `D̃` lists zero blocks first.
pub fn congruence_reduce(m: &BitMatrix) -> Result<CanonicalForm> {
    check_alternating(m)?;
    let dim = m.rows;
    let mut r = Reducer {
        work: m.clone(),
        lt: BitMatrix::identity(dim),
    };

    let mut front = 0;
    loop {
        let pivot = (front..dim).find_map(|i| {
            r.work
                .row(i)
                .iter_ones()
                .find(|&j| j >= front)
                .map(|j| (i, j))
        });
        let Some((i, j)) = pivot else { break };
        debug_assert!(j > i);

        let (a, b) = (front, front + 1);
        // j > i >= a, so the first swap leaves j in place.
        r.swap(i, a);
        r.swap(j, b);

        for k in b + 1..dim {
            if r.work.get(k, a) {
                r.add(b, k);
            }
            if r.work.get(k, b) {
                r.add(a, k);
            }
        }
        front += 2;
    }

    let pair_count = front / 2;
    let iso_count = dim - front;
    let order: Vec<usize> = (front..dim).chain(0..front).collect();
    let lt = BitMatrix {
        rows: dim,
        cols: dim,
        data: order.iter().map(|&k| r.lt.data[k].clone()).collect(),
    };
    let form = CanonicalForm {
        dim,
        iso_count,
        pair_count,
        l: lt.transpose(),
    };
    debug_assert_eq!(rank(m), form.rank(), "alternating rank must be even");
    debug_assert_eq!(&form.reconstruct(), m);
    Ok(form)
}
