//! Small prime-power fields F_{p^k} with Frobenius data, plus finite
//! vector spaces over them.
//!
//! Elements of F_{p^k} are residues modulo the least monic irreducible
//! polynomial of degree k (least in the constant-first digit order), with
//! element index i encoding the coefficient vector little-endian: the
//! coefficient of g^j is the j-th base-p digit of i. Index 1 is the field
//! one and index p is the residue class g.

use crate::algebra::group::FiniteAbelianGroup;
use crate::error::{Error, Result};
use crate::rings::{FiniteRing, LeftModule};

/// Largest group order any helper here will materialize as tables.
const MAX_TABLE_ORDER: usize = 4096;

fn is_prime(p: u16) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// F_{p^k} for prime p and 1 ≤ k ≤ 3, backed by explicit tables.
#[derive(Debug, Clone)]
pub struct SmallField {
    p: u16,
    k: u32,
    /// Monic modulus, coefficients of x^0..x^k (length k + 1, leading 1).
    modulus: Vec<u16>,
    group: FiniteAbelianGroup,
    mul: Vec<Vec<u16>>,
}

impl SmallField {
    pub fn new(p: u16, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadParams(format!("field characteristic {p} is not prime")));
        }
        if !(1..=3).contains(&k) {
            return Err(Error::BadParams(format!(
                "field degree {k} out of range 1..=3 (root-test irreducibility)"
            )));
        }
        let order = (p as usize).pow(k);
        if order > 256 {
            return Err(Error::BadParams(format!("field order {order} exceeds 256")));
        }

        let modulus = least_irreducible(p, k);
        let names: Vec<String> = (0..order as u16).map(|i| render(p, k, i)).collect();
        let add: Vec<Vec<u16>> = (0..order as u16)
            .map(|a| (0..order as u16).map(|b| digit_add(p, k, a, b)).collect())
            .collect();
        let neg: Vec<u16> = (0..order as u16).map(|a| digit_neg(p, k, a)).collect();
        let group = FiniteAbelianGroup::new(names, add, neg, 0)?;

        let mul: Vec<Vec<u16>> = (0..order as u16)
            .map(|a| (0..order as u16).map(|b| poly_mul_mod(p, k, &modulus, a, b)).collect())
            .collect();

        Ok(SmallField { p, k, modulus, group, mul })
    }

    pub fn p(&self) -> u16 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn one(&self) -> u16 {
        1
    }

    /// Coefficients of the modulus polynomial, constant term first.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize][b as usize]
    }

    /// The field as a ring on its own additive group.
    pub fn to_ring(&self) -> Result<FiniteRing> {
        FiniteRing::new(self.group.clone(), self.mul.clone())
    }

    /// The p-power map x ↦ x^p as a table. A field endomorphism.
    pub fn frobenius(&self) -> Vec<u16> {
        (0..self.order() as u16)
            .map(|x| {
                let mut acc = self.one();
                for _ in 0..self.p {
                    acc = self.mul(acc, x);
                }
                acc
            })
            .collect()
    }

    /// x ↦ x − x^p as a table. Additive, and a σ-derivation for the
    /// Frobenius twist since x·y − x^p·y^p = x(y − y^p) + (x − x^p)y^p
    /// rearranges to the twisted Leibniz rule.
    pub fn id_minus_frobenius(&self) -> Vec<u16> {
        let frob = self.frobenius();
        (0..self.order() as u16).map(|x| self.group.sub(x, frob[x as usize])).collect()
    }

    /// The free module F^dim with componentwise addition. Vector index is
    /// the row-major fold of component indices, first component most
    /// significant; names are tuples of field element names.
    pub fn vector_group(&self, dim: u32) -> Result<FiniteAbelianGroup> {
        if dim == 0 {
            return Err(Error::BadParams("vector space dimension must be positive".into()));
        }
        if dim == 1 {
            return Ok(self.group.clone());
        }
        let q = self.order();
        let order = q.checked_pow(dim).filter(|&n| n <= MAX_TABLE_ORDER).ok_or_else(|| {
            Error::BadParams(format!("vector space order {q}^{dim} exceeds {MAX_TABLE_ORDER}"))
        })?;

        let names: Vec<String> = (0..order)
            .map(|i| {
                let comps: Vec<&str> =
                    self.unfold(i, dim).iter().map(|&c| self.group.name(c)).collect();
                format!("({})", comps.join(","))
            })
            .collect();
        let add: Vec<Vec<u16>> = (0..order)
            .map(|i| {
                let vi = self.unfold(i, dim);
                (0..order)
                    .map(|j| {
                        let vj = self.unfold(j, dim);
                        let sum: Vec<u16> =
                            vi.iter().zip(&vj).map(|(&a, &b)| self.group.add(a, b)).collect();
                        self.fold(&sum)
                    })
                    .collect()
            })
            .collect();
        let neg: Vec<u16> = (0..order)
            .map(|i| {
                let v: Vec<u16> = self.unfold(i, dim).iter().map(|&a| self.group.neg(a)).collect();
                self.fold(&v)
            })
            .collect();
        FiniteAbelianGroup::new(names, add, neg, 0)
    }

    /// Scalar multiplication table of F on F^dim: row r, column v.
    pub fn scalar_table(&self, dim: u32) -> Result<Vec<Vec<u16>>> {
        let vg = self.vector_group(dim)?;
        Ok((0..self.order() as u16)
            .map(|r| {
                (0..vg.order())
                    .map(|i| {
                        let v: Vec<u16> =
                            self.unfold(i, dim).iter().map(|&c| self.mul(r, c)).collect();
                        self.fold(&v)
                    })
                    .collect()
            })
            .collect())
    }

    /// F^dim as a left module over the field ring.
    pub fn vector_module(&self, dim: u32) -> Result<LeftModule> {
        LeftModule::new(self.to_ring()?, self.vector_group(dim)?, self.scalar_table(dim)?)
    }

    /// Lifts a map on field elements to the coefficientwise map on F^dim.
    pub fn coefficientwise(&self, table: &[u16], dim: u32) -> Vec<u16> {
        let order = self.order().pow(dim);
        (0..order)
            .map(|i| {
                let v: Vec<u16> =
                    self.unfold(i, dim).iter().map(|&c| table[c as usize]).collect();
                self.fold(&v)
            })
            .collect()
    }

    /// The F-linear cyclic shift of basis vectors, v_i ↦ v_{i+1 mod dim},
    /// as a table on vector indices.
    pub fn basis_shift(&self, dim: u32) -> Vec<u16> {
        let order = self.order().pow(dim);
        (0..order)
            .map(|i| {
                let v = self.unfold(i, dim);
                let d = dim as usize;
                let mut w = vec![0u16; d];
                for (pos, &c) in v.iter().enumerate() {
                    w[(pos + 1) % d] = c;
                }
                self.fold(&w)
            })
            .collect()
    }

    fn unfold(&self, mut idx: usize, dim: u32) -> Vec<u16> {
        let q = self.order();
        let mut v = vec![0u16; dim as usize];
        for slot in v.iter_mut().rev() {
            *slot = (idx % q) as u16;
            idx /= q;
        }
        v
    }

    fn fold(&self, v: &[u16]) -> u16 {
        let q = self.order();
        v.iter().fold(0usize, |acc, &c| acc * q + c as usize) as u16
    }
}

fn digit_add(p: u16, k: u32, a: u16, b: u16) -> u16 {
    let mut out = 0u16;
    let mut scale = 1u16;
    let (mut a, mut b) = (a, b);
    for _ in 0..k {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn digit_neg(p: u16, k: u32, a: u16) -> u16 {
    let mut out = 0u16;
    let mut scale = 1u16;
    let mut a = a;
    for _ in 0..k {
        out += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    out
}

/// Least monic irreducible of degree k over F_p, constant-first digit
/// order. For k ≤ 3, irreducible is equivalent to having no roots.
fn least_irreducible(p: u16, k: u32) -> Vec<u16> {
    if k == 1 {
        // x itself; never used for reduction since products stay in degree 0.
        return vec![0, 1];
    }
    let count = (p as usize).pow(k);
    for lower in 0..count {
        let mut coeffs: Vec<u16> = Vec::with_capacity(k as usize + 1);
        let mut rem = lower;
        for _ in 0..k {
            coeffs.push((rem % p as usize) as u16);
            rem /= p as usize;
        }
        coeffs.push(1);
        let has_root = (0..p).any(|t| {
            let mut acc = 0u32;
            for &c in coeffs.iter().rev() {
                acc = (acc * t as u32 + c as u32) % p as u32;
            }
            acc == 0
        });
        if !has_root {
            return coeffs;
        }
    }
    unreachable!("irreducibles of degree 2 and 3 exist over every prime field")
}

/// Product of field elements `a`, `b` (little-endian digit encodings)
/// reduced modulo the monic `modulus`.
fn poly_mul_mod(p: u16, k: u32, modulus: &[u16], a: u16, b: u16) -> u16 {
    let k = k as usize;
    let digits = |mut x: u16| -> Vec<u16> {
        let mut v = vec![0u16; k];
        for slot in v.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        v
    };
    let da = digits(a);
    let db = digits(b);
    let mut prod = vec![0u16; 2 * k - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // Monic reduction: kill leading coefficients from the top down.
    for d in (k..prod.len()).rev() {
        let lead = prod[d];
        if lead == 0 {
            continue;
        }
        prod[d] = 0;
        for (e, &m) in modulus.iter().enumerate().take(k) {
            let pos = d - k + e;
            prod[pos] = (prod[pos] + p * p - lead * m % p) % p;
        }
    }
    prod.iter().take(k).rev().fold(0u16, |acc, &c| acc * p + c)
}

/// Renders the coefficient vector of index `i` as a polynomial in g,
/// descending powers, e.g. "g^2+2g+1".
fn render(p: u16, k: u32, i: u16) -> String {
    let mut terms: Vec<String> = Vec::new();
    for j in (0..k).rev() {
        let c = (i / p.pow(j)) % p;
        if c == 0 {
            continue;
        }
        let var = match j {
            0 => String::new(),
            1 => "g".to_string(),
            _ => format!("g^{j}"),
        };
        let t = match (c, j) {
            (_, 0) => c.to_string(),
            (1, _) => var,
            _ => format!("{c}{var}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}
