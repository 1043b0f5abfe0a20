//! Finite abelian groups presented by explicit addition tables.
//!
//! Elements are addressed by `u16` indices into a name list; all arithmetic
//! is table lookup. Construction always verifies the abelian-group axioms,
//! so downstream code can rely on them unconditionally.

use crate::error::{Error, Result};

/// A finite abelian group with named elements and total tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    names: Vec<String>,
    add: Vec<Vec<u16>>,
    neg: Vec<u16>,
    zero: u16,
}

impl FiniteAbelianGroup {
    /// Validates the tables and builds the group.
    ///
    /// Axioms are checked in a fixed order (identity, inverses,
    /// commutativity, associativity) and the first violation is reported
    /// with the lexicographically least witness tuple.
    pub fn new(names: Vec<String>, add: Vec<Vec<u16>>, neg: Vec<u16>, zero: u16) -> Result<Self> {
        let n = names.len();
        assert!(n > 0 && n <= u16::MAX as usize, "group order out of range");
        assert!(add.len() == n && neg.len() == n && (zero as usize) < n, "table shape mismatch");
        for row in &add {
            assert!(row.len() == n, "table shape mismatch");
            assert!(row.iter().all(|&x| (x as usize) < n), "table entry out of range");
        }
        assert!(neg.iter().all(|&x| (x as usize) < n), "neg entry out of range");

        let g = FiniteAbelianGroup { names, add, neg, zero };
        let z = zero;
        for b in 0..n as u16 {
            if g.add(z, b) != b {
                return Err(g.axiom_failure("identity", &[z, b]));
            }
        }
        for b in 0..n as u16 {
            if g.add(b, g.neg(b)) != z {
                return Err(g.axiom_failure("inverses", &[b]));
            }
        }
        for b in 0..n as u16 {
            for c in 0..n as u16 {
                if g.add(b, c) != g.add(c, b) {
                    return Err(g.axiom_failure("commutativity", &[b, c]));
                }
            }
        }
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                for c in 0..n as u16 {
                    if g.add(g.add(a, b), c) != g.add(a, g.add(b, c)) {
                        return Err(g.axiom_failure("associativity", &[a, b, c]));
                    }
                }
            }
        }
        Ok(g)
    }

    fn axiom_failure(&self, axiom: &'static str, witness: &[u16]) -> Error {
        Error::NotAGroup {
            axiom,
            witness: witness.iter().map(|&i| self.name(i).to_owned()).collect(),
        }
    }

    /// The cyclic group Z/n with elements named "0".."n-1".
    pub fn cyclic(n: u32) -> Self {
        Self::cyclic_product(&[n])
    }

    /// A product of cyclic groups. A single factor is named "0".."n-1";
    /// several factors use tuple names like "(1,0)".
    pub fn cyclic_product(orders: &[u32]) -> Self {
        assert!(!orders.is_empty() && orders.iter().all(|&n| n > 0), "orders must be positive");
        let total: u64 = orders.iter().map(|&n| n as u64).product();
        assert!(total <= u16::MAX as u64, "group order out of range");
        let total = total as usize;

        let decode = |mut i: usize| -> Vec<u32> {
            let mut v = Vec::with_capacity(orders.len());
            for &n in orders.iter().rev() {
                v.push((i % n as usize) as u32);
                i /= n as usize;
            }
            v.reverse();
            v
        };
        let encode = |v: &[u32]| -> u16 {
            let mut i = 0usize;
            for (k, &n) in orders.iter().enumerate() {
                i = i * n as usize + v[k] as usize;
            }
            i as u16
        };

        let names = (0..total)
            .map(|i| {
                let v = decode(i);
                if orders.len() == 1 {
                    v[0].to_string()
                } else {
                    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        let mut add = vec![vec![0u16; total]; total];
        let mut neg = vec![0u16; total];
        for i in 0..total {
            let vi = decode(i);
            neg[i] = encode(
                &vi.iter().zip(orders).map(|(&x, &n)| (n - x) % n).collect::<Vec<_>>(),
            );
            for j in 0..total {
                let vj = decode(j);
                let sum: Vec<u32> =
                    vi.iter().zip(&vj).zip(orders).map(|((&x, &y), &n)| (x + y) % n).collect();
                add[i][j] = encode(&sum);
            }
        }
        FiniteAbelianGroup { names, add, neg, zero: 0 }
    }

    /// Direct product of two groups with tuple element names.
    pub fn product(&self, other: &FiniteAbelianGroup) -> Self {
        let n = self.order() * other.order();
        assert!(n <= u16::MAX as usize, "group order out of range");
        let enc = |i: u16, j: u16| -> u16 { i * other.order() as u16 + j };
        let mut names = Vec::with_capacity(n);
        for i in 0..self.order() as u16 {
            for j in 0..other.order() as u16 {
                names.push(format!("({},{})", self.name(i), other.name(j)));
            }
        }
        let mut add = vec![vec![0u16; n]; n];
        let mut neg = vec![0u16; n];
        for i1 in 0..self.order() as u16 {
            for j1 in 0..other.order() as u16 {
                let a = enc(i1, j1);
                neg[a as usize] = enc(self.neg(i1), other.neg(j1));
                for i2 in 0..self.order() as u16 {
                    for j2 in 0..other.order() as u16 {
                        add[a as usize][enc(i2, j2) as usize] =
                            enc(self.add(i1, i2), other.add(j1, j2));
                    }
                }
            }
        }
        FiniteAbelianGroup { names, add, neg, zero: enc(self.zero, other.zero) }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn zero(&self) -> u16 {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize][b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn name(&self, i: u16) -> &str {
        &self.names[i as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.names.iter().position(|n| n == name).map(|i| i as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> + Clone {
        0..self.order() as u16
    }

    /// Checks that `f` (given as a total table) is additive.
    pub fn check_additive(&self, f: &[u16]) -> Result<()> {
        assert_eq!(f.len(), self.order(), "table shape mismatch");
        for b in self.elements() {
            for c in self.elements() {
                if f[self.add(b, c) as usize] != self.add(f[b as usize], f[c as usize]) {
                    return Err(Error::NotAdditive {
                        b: self.name(b).to_owned(),
                        c: self.name(c).to_owned(),
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables() {
        let g = FiniteAbelianGroup::cyclic(4);
        assert_eq!(g.order(), 4);
        assert_eq!(g.add(3, 2), 1);
        assert_eq!(g.neg(1), 3);
        assert_eq!(g.name(2), "2");
    }

    #[test]
    fn cyclic_product_names_and_arithmetic() {
        let g = FiniteAbelianGroup::cyclic_product(&[2, 3]);
        assert_eq!(g.order(), 6);
        let e = g.index_of("(1,2)").unwrap();
        let f = g.index_of("(1,1)").unwrap();
        assert_eq!(g.name(g.add(e, f)), "(0,0)");
        assert_eq!(g.name(g.neg(e)), "(1,1)");
    }

    #[test]
    fn rejects_broken_associativity() {
        // 3-element magma: tweak one cell of Z/3's table.
        let mut add = vec![vec![0u16; 3]; 3];
        for i in 0..3u16 {
            for j in 0..3u16 {
                add[i as usize][j as usize] = (i + j) % 3;
            }
        }
        add[2][2] = 2; // breaks associativity but keeps identity/inverses/commutativity intact
        let err = FiniteAbelianGroup::new(
            vec!["0".into(), "1".into(), "2".into()],
            add,
            vec![0, 2, 1],
            0,
        )
        .unwrap_err();
        match err {
            Error::NotAGroup { axiom, witness } => {
                assert_eq!(axiom, "associativity");
                assert_eq!(witness, vec!["1", "1", "2"]);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn product_matches_cyclic_product() {
        let a = FiniteAbelianGroup::cyclic(2);
        let b = FiniteAbelianGroup::cyclic(3);
        let p = a.product(&b);
        let q = FiniteAbelianGroup::cyclic_product(&[2, 3]);
        assert_eq!(p.order(), q.order());
        for i in p.elements() {
            for j in p.elements() {
                assert_eq!(p.add(i, j), q.add(i, j));
            }
        }
    }

    #[test]
    fn additivity_check_finds_witness() {
        let g = FiniteAbelianGroup::cyclic(4);
        // b -> b + 1 is not additive.
        let f: Vec<u16> = (0..4).map(|b| (b + 1) % 4).collect();
        let err = g.check_additive(&f).unwrap_err();
        assert_eq!(err, Error::NotAdditive { b: "0".into(), c: "0".into() });
    }
}
