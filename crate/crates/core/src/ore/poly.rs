//! Sparse polynomials over a finite abelian group (or an operator set).
//!
//! Coefficients are element indices; the canonical form stores no zero
//! coefficients, so the zero polynomial is the empty map and equality is
//! plain structural equality.

use crate::algebra::group::FiniteAbelianGroup;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Which carrier a polynomial's coefficients come from. `OverA` marks
/// operator polynomials; `OverB` and `OverC` mark the two group sorts used
/// by triple checks. The tag exists so a polynomial cannot silently switch
/// roles inside an Ore product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PolySort {
    OverA,
    OverB,
    OverC,
}

impl PolySort {
    pub fn label(self) -> &'static str {
        match self {
            PolySort::OverA => "overA",
            PolySort::OverB => "overB",
            PolySort::OverC => "overC",
        }
    }
}

/// A sparse polynomial Σ b_d x^d in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupPolynomial {
    sort: PolySort,
    coeffs: BTreeMap<u32, u16>,
}

impl GroupPolynomial {
    pub fn zero(sort: PolySort) -> Self {
        GroupPolynomial { sort, coeffs: BTreeMap::new() }
    }

    /// A single term c·x^d (canonicalized: dropped when c is `zero`).
    pub fn monomial(sort: PolySort, c: u16, d: u32, zero: u16) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != zero {
            coeffs.insert(d, c);
        }
        GroupPolynomial { sort, coeffs }
    }

    /// Builds from (degree, coefficient) pairs, dropping zeros.
    pub fn from_coeffs(sort: PolySort, pairs: &[(u32, u16)], zero: u16) -> Self {
        let mut coeffs = BTreeMap::new();
        for &(d, c) in pairs {
            if c != zero {
                coeffs.insert(d, c);
            }
        }
        GroupPolynomial { sort, coeffs }
    }

    pub fn sort(&self) -> PolySort {
        self.sort
    }

    pub fn expect_sort(&self, expected: PolySort) -> Result<()> {
        if self.sort != expected {
            return Err(Error::SortMismatch {
                expected: expected.label(),
                got: self.sort.label(),
            });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the highest stored term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, d: u32, zero: u16) -> u16 {
        self.coeffs.get(&d).copied().unwrap_or(zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u16)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    /// The degree-n term as a polynomial of the same sort (zero polynomial
    /// when that degree is absent).
    pub fn term_at(&self, n: u32) -> GroupPolynomial {
        let mut coeffs = BTreeMap::new();
        if let Some(&c) = self.coeffs.get(&n) {
            coeffs.insert(n, c);
        }
        GroupPolynomial { sort: self.sort, coeffs }
    }

    /// Adds `c` into the coefficient at degree `d` using the group tables,
    /// keeping the canonical form.
    pub fn add_term(&mut self, d: u32, c: u16, group: &FiniteAbelianGroup) {
        let cur = self.coeff(d, group.zero());
        let sum = group.add(cur, c);
        if sum == group.zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, sum);
        }
    }

    pub fn add(&self, other: &GroupPolynomial, group: &FiniteAbelianGroup) -> GroupPolynomial {
        assert_eq!(self.sort, other.sort, "sort mismatch in polynomial addition");
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, c, group);
        }
        out
    }

    pub fn neg(&self, group: &FiniteAbelianGroup) -> GroupPolynomial {
        GroupPolynomial {
            sort: self.sort,
            coeffs: self.coeffs.iter().map(|(&d, &c)| (d, group.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &GroupPolynomial, group: &FiniteAbelianGroup) -> GroupPolynomial {
        self.add(&other.neg(group), group)
    }

    /// Dense coefficient vector of length `bound + 1` (degrees 0..=bound).
    /// Fails the caller's contract if a term exceeds the bound.
    pub fn to_vector(&self, bound: u32, zero: u16) -> Result<Vec<u16>> {
        if let Some(d) = self.degree() {
            if d > bound {
                return Err(Error::DegreeTooHigh { degree: d, bound });
            }
        }
        let mut v = vec![zero; bound as usize + 1];
        for (d, c) in self.terms() {
            v[d as usize] = c;
        }
        Ok(v)
    }

    /// Renders with element names, e.g. "[1] + [2]x^3"; "0" when zero.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        self.terms()
            .map(|(d, c)| {
                let name = &names[c as usize];
                match d {
                    0 => format!("[{name}]"),
                    1 => format!("[{name}]x"),
                    _ => format!("[{name}]x^{d}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
