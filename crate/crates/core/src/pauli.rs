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

//! Phase-free Pauli operators and their binary symplectic representation.
//!
//! A Pauli string on `n` registers is stored as two packed bit vectors, the
//! X-powers and the Z-powers. Global phase is never tracked: `Y` is treated as
//! the class of `X·Z`, and composition is componentwise addition mod 2.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// Single-register Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// `(x, z)` powers: I = (0,0), X = (1,0), Z = (0,1), Y = (1,1).
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Z => (false, true),
            Pauli::Y => (true, true),
        }
    }

    pub fn from_char(ch: char) -> Result<Self> {
        match ch {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            _ => Err(Error::InvalidPauliChar { ch }),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Tensor product of single-register Paulis, modulo global phase.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
}

impl PauliString {
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRegisters);
        }
        Ok(Self {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        })
    }

    pub fn from_sites<I: IntoIterator<Item = Pauli>>(sites: I) -> Result<Self> {
        let (xs, zs): (Vec<bool>, Vec<bool>) = sites.into_iter().map(Pauli::bits).unzip();
        if xs.is_empty() {
            return Err(Error::ZeroRegisters);
        }
        Ok(Self {
            x: BitVec::from_bools(xs),
            z: BitVec::from_bools(zs),
        })
    }

    /// Single letter `p` on register `site` (0-based), identity elsewhere.
    pub fn single(n: usize, site: usize, p: Pauli) -> Result<Self> {
        let mut s = Self::identity(n)?;
        assert!(site < n, "site {site} out of range for {n} registers");
        s.set_site(site, p);
        Ok(s)
    }

    /// Number of registers.
    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn site(&self, i: usize) -> Pauli {
        Pauli::from_bits(self.x.get(i), self.z.get(i))
    }

    pub fn set_site(&mut self, i: usize, p: Pauli) {
        let (x, z) = p.bits();
        self.x.set(i, x);
        self.z.set(i, z);
    }

    pub fn sites(&self) -> impl Iterator<Item = Pauli> + '_ {
        (0..self.n()).map(move |i| self.site(i))
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    /// Subscript notation with 1-based registers, e.g. `Z1Z4`; `I` for the identity.
    pub fn to_sparse_string(&self) -> String {
        let mut out = String::new();
        for (i, p) in self.sites().enumerate() {
            if p != Pauli::I {
                out.push(p.to_char());
                out.push_str(&(i + 1).to_string());
            }
        }
        if out.is_empty() {
            out.push('I');
        }
        out
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sites = s
            .chars()
            .map(Pauli::from_char)
            .collect::<Result<Vec<_>>>()?;
        Self::from_sites(sites)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.sites() {
            write!(f, "{}", p.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

/// Image of a Pauli string under `φ`: a length-`2n` vector whose first `n`
/// positions hold X-powers and last `n` positions hold Z-powers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticVector {
    x: BitVec,
    z: BitVec,
}

impl SymplecticVector {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRegisters);
        }
        Ok(Self {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        })
    }

    /// Splits a `2n`-bit vector into its X and Z halves.
    pub fn from_bits(bits: &BitVec) -> Result<Self> {
        let len = bits.len();
        if len == 0 {
            return Err(Error::ZeroRegisters);
        }
        if !len.is_multiple_of(2) {
            return Err(Error::Shape(format!(
                "symplectic vector of odd length {len}"
            )));
        }
        let n = len / 2;
        Ok(Self {
            x: BitVec::from_bools((0..n).map(|i| bits.get(i))),
            z: BitVec::from_bools((n..len).map(|i| bits.get(i))),
        })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// Bit `i` of the concatenated `(x | z)` layout.
    pub fn bit(&self, i: usize) -> bool {
        let n = self.n();
        if i < n {
            self.x.get(i)
        } else {
            self.z.get(i - n)
        }
    }

    pub fn to_bits(&self) -> BitVec {
        BitVec::from_bools(self.x.iter().chain(self.z.iter()))
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// `self ⊕= other`.
    pub fn xor_assign(&mut self, other: &SymplecticVector) -> Result<()> {
        check_dims(self.n(), other.n())?;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
        Ok(())
    }

    pub fn set_x(&mut self, site: usize, value: bool) {
        self.x.set(site, value);
    }

    pub fn set_z(&mut self, site: usize, value: bool) {
        self.z.set(site, value);
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

pub fn phi(p: &PauliString) -> SymplecticVector {
    SymplecticVector {
        x: p.x.clone(),
        z: p.z.clone(),
    }
}

pub fn unphi(v: &SymplecticVector) -> PauliString {
    PauliString {
        x: v.x.clone(),
        z: v.z.clone(),
    }
}

/// Phase-free product `p·q`.
pub fn compose(p: &PauliString, q: &PauliString) -> Result<PauliString> {
    let mut v = phi(p);
    v.xor_assign(&phi(q))?;
    Ok(unphi(&v))
}

/// `x₁·z₂ + z₁·x₂ mod 2`; `false` exactly when the two operators commute.
pub fn symplectic_product(u: &SymplecticVector, v: &SymplecticVector) -> Result<bool> {
    check_dims(u.n(), v.n())?;
    Ok(u.x.dot(&v.z) ^ u.z.dot(&v.x))
}

/// Convenience wrapper over [`symplectic_product`] for Pauli strings.
pub fn anticommutes(p: &PauliString, q: &PauliString) -> Result<bool> {
    check_dims(p.n(), q.n())?;
    Ok(p.x.dot(&q.z) ^ p.z.dot(&q.x))
}

/// Number of non-identity sites.
pub fn pauli_weight(p: &PauliString) -> usize {
    (0..p.n()).filter(|&i| p.x.get(i) || p.z.get(i)).count()
}

/// A Pauli term with a complex coefficient carried through untouched.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPauli {
    pub op: PauliString,
    weight: Complex64,
}

impl WeightedPauli {
    pub fn new(op: PauliString, weight: Complex64) -> Result<Self> {
        if !weight.re.is_finite() || !weight.im.is_finite() {
            return Err(Error::NonFiniteWeight {
                re: weight.re,
                im: weight.im,
            });
        }
        Ok(Self { op, weight })
    }

    /// Term with weight 1.
    pub fn unit(op: PauliString) -> Self {
        Self {
            op,
            weight: Complex64::new(1.0, 0.0),
        }
    }

    pub fn weight(&self) -> Complex64 {
        self.weight
    }
}
