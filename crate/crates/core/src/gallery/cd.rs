//! Cayley-Dickson doubling over an odd prime field.
//!
//! Level 0 is F_p itself; each doubling squares the dimension with
//!
//!   (a, b)(c, d) = (ac - conj(d)b, da + b conj(c)),
//!   conj(a, b) = (conj(a), -b).
//!
//! Level 1 is a commutative field-like ring, level 2 an associative
//! quaternion-style algebra, level 3 an octonion-style algebra that is
//! still distributive but no longer associative. Small levels convert to
//! table-backed rings; level 3 and above stay functional, with witnesses
//! found over basis triples and seeded random samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::group::FiniteAbelianGroup;
use crate::error::{Error, Result};
use crate::rings::FiniteRing;

/// Largest order that [`CdAlgebra::to_ring`] will materialize.
const MAX_RING_ORDER: usize = 4096;

/// A Cayley-Dickson algebra of dimension 2^level over F_p, elements are
/// coefficient vectors indexed by basis position (slot 0 is the unit).
#[derive(Debug, Clone)]
pub struct CdAlgebra {
    p: u16,
    level: u32,
}

impl CdAlgebra {
    pub fn new(p: u16, level: u32) -> Result<Self> {
        let prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !prime || p == 2 || p > 13 {
            return Err(Error::BadParams(format!(
                "doubling base {p} must be an odd prime at most 13"
            )));
        }
        if level > 4 {
            return Err(Error::BadParams(format!("doubling level {level} exceeds 4")));
        }
        Ok(CdAlgebra { p, level })
    }

    pub fn p(&self) -> u16 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        1 << self.level
    }

    pub fn zero(&self) -> Vec<u16> {
        vec![0; self.dim()]
    }

    pub fn one(&self) -> Vec<u16> {
        self.basis(0)
    }

    pub fn basis(&self, i: usize) -> Vec<u16> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn add(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn neg(&self, a: &[u16]) -> Vec<u16> {
        a.iter().map(|&x| (self.p - x) % self.p).collect()
    }

    pub fn sub(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        self.add(a, &self.neg(b))
    }

    pub fn conj(&self, a: &[u16]) -> Vec<u16> {
        if a.len() == 1 {
            return a.to_vec();
        }
        let h = a.len() / 2;
        let mut out = self.conj(&a[..h]);
        out.extend(a[h..].iter().map(|&x| (self.p - x) % self.p));
        out
    }

    pub fn mul(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        if a.len() == 1 {
            return vec![a[0] * b[0] % self.p];
        }
        let h = a.len() / 2;
        let (x, y) = a.split_at(h);
        let (z, w) = b.split_at(h);
        let mut out = self.sub(&self.mul(x, z), &self.mul(&self.conj(w), y));
        out.extend(self.add(&self.mul(w, x), &self.mul(y, &self.conj(z))));
        out
    }

    /// Row-major element index, first coefficient most significant; matches
    /// the tuple layout of [`FiniteAbelianGroup::cyclic_product`].
    pub fn index_of(&self, a: &[u16]) -> u16 {
        a.iter().fold(0usize, |acc, &c| acc * self.p as usize + c as usize) as u16
    }

    pub fn element_of(&self, mut idx: u16) -> Vec<u16> {
        let mut v = vec![0u16; self.dim()];
        for slot in v.iter_mut().rev() {
            *slot = idx % self.p;
            idx /= self.p;
        }
        v
    }

    fn order(&self) -> Option<usize> {
        (self.p as usize).checked_pow(self.dim() as u32).filter(|&n| n <= MAX_RING_ORDER)
    }

    /// Table-backed ring on the tuple group (p, ..., p). Only small levels
    /// fit; level 3 over F_3 already has 6561 elements and stays functional.
    pub fn to_ring(&self) -> Result<FiniteRing> {
        let order = self.order().ok_or_else(|| {
            Error::BadParams(format!(
                "doubling level {} over F_{} does not fit a table of order <= {MAX_RING_ORDER}",
                self.level, self.p
            ))
        })?;
        let group = FiniteAbelianGroup::cyclic_product(&vec![self.p as u32; self.dim()]);
        let mul: Vec<Vec<u16>> = (0..order as u16)
            .map(|i| {
                let a = self.element_of(i);
                (0..order as u16)
                    .map(|j| self.index_of(&self.mul(&a, &self.element_of(j))))
                    .collect()
            })
            .collect();
        FiniteRing::new(group, mul)
    }

    /// Conjugation as an index table (table-backed sizes only).
    pub fn conj_table(&self) -> Result<Vec<u16>> {
        let order = self.order().ok_or_else(|| {
            Error::BadParams("conjugation table requested above the table bound".into())
        })?;
        Ok((0..order as u16).map(|i| self.index_of(&self.conj(&self.element_of(i)))).collect())
    }

    /// id - conj as an index table: the adjoint-style derivation companion
    /// of the conjugation twist.
    pub fn id_minus_conj_table(&self) -> Result<Vec<u16>> {
        let order = self.order().ok_or_else(|| {
            Error::BadParams("conjugation table requested above the table bound".into())
        })?;
        Ok((0..order as u16)
            .map(|i| {
                let a = self.element_of(i);
                self.index_of(&self.sub(&a, &self.conj(&a)))
            })
            .collect())
    }

    /// First pair violating conj(zw) = conj(w)conj(z); exhaustive at
    /// table-backed sizes, `samples` seeded random pairs above that.
    pub fn conj_antihom_witness(&self, samples: u32, seed: u64) -> Option<(Vec<u16>, Vec<u16>)> {
        let violates = |z: &[u16], w: &[u16]| {
            self.conj(&self.mul(z, w)) != self.mul(&self.conj(w), &self.conj(z))
        };
        match self.order() {
            Some(order) => {
                for i in 0..order as u16 {
                    let z = self.element_of(i);
                    for j in 0..order as u16 {
                        let w = self.element_of(j);
                        if violates(&z, &w) {
                            return Some((z, w));
                        }
                    }
                }
                None
            }
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..samples)
                    .map(|_| (self.random_element(&mut rng), self.random_element(&mut rng)))
                    .find(|(z, w)| violates(z, w))
            }
        }
    }

    /// First element violating conj(conj(z)) = z over a seeded sample
    /// (exhaustive when the order is table-backed).
    pub fn conj_involution_witness(&self, samples: u32, seed: u64) -> Option<Vec<u16>> {
        match self.order() {
            Some(order) => (0..order as u16)
                .map(|i| self.element_of(i))
                .find(|z| self.conj(&self.conj(z)) != *z),
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..samples)
                    .map(|_| self.random_element(&mut rng))
                    .find(|z| self.conj(&self.conj(z)) != *z)
            }
        }
    }

    /// First basis triple (i, j, k) with (e_i e_j)e_k != e_i(e_j e_k).
    pub fn associator_basis_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = self.mul(&self.mul(&self.basis(i), &self.basis(j)), &self.basis(k));
                    let rhs = self.mul(&self.basis(i), &self.mul(&self.basis(j), &self.basis(k)));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First triple violating either distributive law, scanning all basis
    /// triples and then `samples` seeded random triples. `None` clears both
    /// laws over everything scanned.
    pub fn distributivity_witness(
        &self,
        samples: u32,
        seed: u64,
    ) -> Option<(Vec<u16>, Vec<u16>, Vec<u16>)> {
        let violates = |a: &[u16], b: &[u16], c: &[u16]| {
            let left = self.mul(a, &self.add(b, c)) != self.add(&self.mul(a, b), &self.mul(a, c));
            let right = self.mul(&self.add(a, b), c) != self.add(&self.mul(a, c), &self.mul(b, c));
            left || right
        };
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
                    if violates(&a, &b, &c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let a = self.random_element(&mut rng);
            let b = self.random_element(&mut rng);
            let c = self.random_element(&mut rng);
            if violates(&a, &b, &c) {
                return Some((a, b, c));
            }
        }
        None
    }

    /// Renders a coefficient vector as a sum of basis terms, e.g. "1+2e3".
    pub fn render(&self, a: &[u16]) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, _) => c.to_string(),
                (_, 1) => format!("e{i}"),
                _ => format!("{c}e{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> Vec<u16> {
        (0..self.dim()).map(|_| rng.gen_range(0..self.p)).collect()
    }
}
