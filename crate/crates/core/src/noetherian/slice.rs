//! Degree-bounded slices of stable subgroups of B[x].
//!
//! A stable subgroup of the polynomial module B[x] is an additive subgroup
//! closed under the action of every monomial a·xᵏ. Its degree-≤D slice is
//! the set of coefficient vectors (b₀, …, b_D) of its members of degree at
//! most D. Because a monomial maps b·xʲ to a sum of terms of degree ≥ j,
//! truncation at D is exact: discarded high-degree terms never re-enter the
//! slice, so the closure computed here equals the slice of the infinite
//! object generated by the same polynomials.

use std::collections::BTreeSet;

use crate::algebra::{z_span, FiniteAbelianGroup, GroupWithOperators, Subgroup};
use crate::error::{Error, Result};
use crate::ore::{EndoPair, GroupPolynomial, PolySort};

/// Default cap on the number of coefficient vectors a slice computation may
/// materialize before giving up with [`Error::SliceTooLarge`].
pub const DEFAULT_SLICE_BUDGET: u32 = 1 << 21;

/// Cap on the cycle search for distinct monomial column tuples. The search
/// terminates in theory (the tuples live in a finite set); this guards
/// against pathological inputs long before memory does.
const COLUMN_CYCLE_CAP: usize = 4096;

/// Mixed-radix codec packing a coefficient vector (b₀, …, b_D) into a
/// `u128`, one digit of radix |B| per degree, degree 0 least significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Codec {
    radix: u128,
    width: u32,
}

impl Codec {
    pub(crate) fn new(order: usize, degree_bound: u32) -> Result<Codec> {
        let radix = order as u128;
        let width = degree_bound + 1;
        let mut acc = 1u128;
        for w in 0..width {
            acc = acc.checked_mul(radix).ok_or(Error::DegreeTooHigh {
                degree: degree_bound,
                bound: w.saturating_sub(1),
            })?;
        }
        Ok(Codec { radix, width })
    }

    pub(crate) fn encode(&self, digits: &[u16]) -> u128 {
        debug_assert_eq!(digits.len(), self.width as usize);
        digits.iter().rev().fold(0u128, |acc, &d| acc * self.radix + d as u128)
    }

    pub(crate) fn decode(&self, code: u128) -> Vec<u16> {
        let mut rest = code;
        let mut digits = Vec::with_capacity(self.width as usize);
        for _ in 0..self.width {
            digits.push((rest % self.radix) as u16);
            rest /= self.radix;
        }
        digits
    }

    pub(crate) fn digit(&self, code: u128, d: u32) -> u16 {
        (code / self.radix.pow(d) % self.radix) as u16
    }

    /// Digitwise sum of two codes under the group's addition table.
    pub(crate) fn add(&self, g: &FiniteAbelianGroup, x: u128, y: u128) -> u128 {
        let (mut xr, mut yr) = (x, y);
        let mut out = 0u128;
        let mut place = 1u128;
        for _ in 0..self.width {
            let s = g.add((xr % self.radix) as u16, (yr % self.radix) as u16);
            out += s as u128 * place;
            place *= self.radix;
            xr /= self.radix;
            yr /= self.radix;
        }
        out
    }

    pub(crate) fn zero_code(&self, g: &FiniteAbelianGroup) -> u128 {
        self.encode(&vec![g.zero(); self.width as usize])
    }
}

/// Computes the distinct truncated column tuples (π₀ᵏ, …, π_Dᵏ) over all
/// k ≥ 0. Each tuple is a list of tables B → B; the one-shift recurrence
/// π_t^{k+1}(b) = π_{t-1}^k(σ(b)) + π_t^k(δ(b)) makes the sequence of
/// tuples eventually periodic, so iterating until the first repeat visits
/// every distinct value.
fn monomial_columns(
    g: &FiniteAbelianGroup,
    pair: &EndoPair,
    degree_bound: u32,
) -> Result<Vec<Vec<Vec<u16>>>> {
    let n = g.order();
    let width = degree_bound as usize + 1;
    let mut current: Vec<Vec<u16>> = (0..width)
        .map(|t| if t == 0 { (0..n as u16).collect() } else { vec![g.zero(); n] })
        .collect();
    let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut tuples = Vec::new();
    loop {
        let flat: Vec<u16> = current.iter().flatten().copied().collect();
        if !seen.insert(flat) {
            return Ok(tuples);
        }
        tuples.push(current.clone());
        if tuples.len() > COLUMN_CYCLE_CAP {
            return Err(Error::SliceTooLarge {
                order: tuples.len(),
                bound: COLUMN_CYCLE_CAP as u32,
            });
        }
        let next: Vec<Vec<u16>> = (0..width)
            .map(|t| {
                (0..n as u16)
                    .map(|b| {
                        let hi = if t == 0 {
                            g.zero()
                        } else {
                            current[t - 1][pair.sigma(b) as usize]
                        };
                        g.add(hi, current[t][pair.delta(b) as usize])
                    })
                    .collect()
            })
            .collect();
        current = next;
    }
}

/// Applies the truncated action of the monomial a·xᵏ, given the column
/// tuple of xᵏ: the degree-d output digit is Σ_j a·π_{d-j}ᵏ(v_j).
fn act_monomial(
    gw: &GroupWithOperators,
    codec: &Codec,
    cols: &[Vec<u16>],
    a: u16,
    code: u128,
) -> u128 {
    let g = gw.group();
    let v = codec.decode(code);
    let width = v.len();
    let mut w = vec![g.zero(); width];
    for (j, &vj) in v.iter().enumerate() {
        if vj == g.zero() {
            continue;
        }
        for (t, col) in cols.iter().enumerate().take(width - j) {
            let img = col[vj as usize];
            if img == g.zero() {
                continue;
            }
            w[j + t] = g.add(w[j + t], gw.act(a, img));
        }
    }
    codec.encode(&w)
}

/// Breadth-first orbit of the truncated generators under all monomial
/// operators. The actions are additive, so spanning this orbit afterwards
/// yields the full closure without ever acting on non-generator sums.
fn reachable_codes(
    gw: &GroupWithOperators,
    pair: &EndoPair,
    generators: &[GroupPolynomial],
    degree_bound: u32,
    budget: u32,
) -> Result<(Codec, Vec<Vec<Vec<u16>>>, BTreeSet<u128>)> {
    let g = gw.group();
    let codec = Codec::new(g.order(), degree_bound)?;
    let columns = monomial_columns(g, pair, degree_bound)?;
    let mut reached: BTreeSet<u128> = BTreeSet::new();
    let mut queue: Vec<u128> = Vec::new();
    for p in generators {
        p.expect_sort(PolySort::OverB)?;
        let code = codec.encode(&p.to_vector(degree_bound, g.zero())?);
        if reached.insert(code) {
            queue.push(code);
        }
    }
    while let Some(code) = queue.pop() {
        for cols in &columns {
            for a in gw.ops().iter() {
                let image = act_monomial(gw, &codec, cols, a, code);
                if reached.insert(image) {
                    if reached.len() > budget as usize {
                        return Err(Error::SliceTooLarge { order: reached.len(), bound: budget });
                    }
                    queue.push(image);
                }
            }
        }
    }
    Ok((codec, columns, reached))
}

/// Additive span of a set of codes: starts from the zero vector and joins
/// one cyclic subgroup at a time.
pub(crate) fn span_codes(
    g: &FiniteAbelianGroup,
    codec: &Codec,
    seeds: &BTreeSet<u128>,
    budget: u32,
) -> Result<BTreeSet<u128>> {
    let zero = codec.zero_code(g);
    let mut span: BTreeSet<u128> = BTreeSet::new();
    span.insert(zero);
    for &seed in seeds {
        if span.contains(&seed) {
            continue;
        }
        let mut multiples = Vec::new();
        let mut m = seed;
        while m != zero {
            multiples.push(m);
            m = codec.add(g, m, seed);
        }
        let mut joined = span.clone();
        for &h in &span {
            for &mu in &multiples {
                joined.insert(codec.add(g, h, mu));
            }
        }
        if joined.len() > budget as usize {
            return Err(Error::SliceTooLarge { order: joined.len(), bound: budget });
        }
        span = joined;
    }
    Ok(span)
}

/// The degree-≤D slice of the stable subgroup of B[x] generated by a list
/// of polynomials: a subgroup of B^(D+1) closed under every truncated
/// monomial action, together with the generators that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicedStableSubgroup {
    degree_bound: u32,
    codec: Codec,
    codes: BTreeSet<u128>,
    generators: Vec<GroupPolynomial>,
}

impl SlicedStableSubgroup {
    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Number of coefficient vectors in the slice (at least 1: the zero
    /// vector is always present).
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_zero(&self) -> bool {
        self.codes.len() == 1
    }

    pub fn generators(&self) -> &[GroupPolynomial] {
        &self.generators
    }

    pub(crate) fn codes(&self) -> &BTreeSet<u128> {
        &self.codes
    }

    pub(crate) fn codec(&self) -> &Codec {
        &self.codec
    }

    /// Membership test for a polynomial over B of degree ≤ D.
    pub fn contains(&self, p: &GroupPolynomial, g: &FiniteAbelianGroup) -> Result<bool> {
        p.expect_sort(PolySort::OverB)?;
        let code = self.codec.encode(&p.to_vector(self.degree_bound, g.zero())?);
        Ok(self.codes.contains(&code))
    }

    pub fn is_subset_of(&self, other: &SlicedStableSubgroup) -> bool {
        self.degree_bound == other.degree_bound && self.codes.is_subset(&other.codes)
    }

    /// The set of degree-d coefficients over the slice. Projection is a
    /// homomorphism commuting with the coefficientwise action, so the image
    /// is a stable subgroup of B.
    pub fn digit_subgroup(&self, gw: &GroupWithOperators, d: u32) -> Subgroup {
        assert!(d <= self.degree_bound, "digit index exceeds the degree bound");
        let values: BTreeSet<u16> = self.codes.iter().map(|&c| self.codec.digit(c, d)).collect();
        let sub = Subgroup::from_sorted(values.into_iter().collect());
        debug_assert!(sub.verify(gw).is_ok());
        sub
    }

    /// Every member as a polynomial, in code order. Intended for small
    /// slices (reports, chain links); the count is exactly [`len`](Self::len).
    pub fn members(&self, g: &FiniteAbelianGroup) -> Vec<GroupPolynomial> {
        self.codes
            .iter()
            .map(|&code| {
                let digits = self.codec.decode(code);
                let terms: Vec<(u32, u16)> =
                    digits.iter().enumerate().map(|(d, &c)| (d as u32, c)).collect();
                GroupPolynomial::from_coeffs(PolySort::OverB, &terms, g.zero())
            })
            .collect()
    }

    /// Re-checks the two invariants from first principles: the slice
    /// contains the truncated generators, and it is closed under addition,
    /// negation, and every truncated monomial action.
    ///
    /// Additive closure is certified through a greedy generating set: walk
    /// the codes in order, and whenever one lies outside the span built so
    /// far, check the whole slice shifts into itself by it and grow the
    /// span. A finite set containing zero that shifts into itself by a
    /// spanning set is exactly a subgroup (finiteness supplies negation),
    /// so the sweep is complete while staying far below the all-pairs cost.
    pub fn verify(&self, gw: &GroupWithOperators, pair: &EndoPair) -> Result<()> {
        let g = gw.group();
        for p in &self.generators {
            if !self.contains(p, g)? {
                return Err(Error::NotStable {
                    op: "generator".into(),
                    member: p.render(g.names()),
                    image: p.render(g.names()),
                });
            }
        }

        let zero = self.codec.encode(&vec![g.zero(); self.degree_bound as usize + 1]);
        if !self.codes.contains(&zero) {
            return Err(Error::NotStable {
                op: "+".into(),
                member: "0".into(),
                image: "0".into(),
            });
        }
        let mut span: BTreeSet<u128> = [zero].into();
        for &x in &self.codes {
            if span.contains(&x) {
                continue;
            }
            for &y in &self.codes {
                let sum = self.codec.add(g, y, x);
                if !self.codes.contains(&sum) {
                    return Err(Error::NotStable {
                        op: "+".into(),
                        member: format!("{y}"),
                        image: format!("{x}"),
                    });
                }
            }
            let mut frontier: Vec<u128> = span.iter().copied().collect();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &s in &frontier {
                    let shifted = self.codec.add(g, s, x);
                    if span.insert(shifted) {
                        next.push(shifted);
                    }
                }
                frontier = next;
            }
        }

        let columns = monomial_columns(g, pair, self.degree_bound)?;
        for &x in &self.codes {
            for cols in &columns {
                for a in gw.ops().iter() {
                    let image = act_monomial(gw, &self.codec, cols, a, x);
                    if !self.codes.contains(&image) {
                        return Err(Error::NotStable {
                            op: gw.ops().name(a).to_owned(),
                            member: format!("{x}"),
                            image: format!("{image}"),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// [`slice_closure`] with an explicit budget on the number of coefficient
/// vectors materialized.
pub fn slice_closure_budgeted(
    gw: &GroupWithOperators,
    pair: &EndoPair,
    generators: &[GroupPolynomial],
    degree_bound: u32,
    budget: u32,
) -> Result<SlicedStableSubgroup> {
    let (codec, _, reached) = reachable_codes(gw, pair, generators, degree_bound, budget)?;
    let codes = span_codes(gw.group(), &codec, &reached, budget)?;
    Ok(SlicedStableSubgroup {
        degree_bound,
        codec,
        codes,
        generators: generators.to_vec(),
    })
}

/// Least subset of B^(D+1) containing the truncated generators and closed
/// under addition, negation, and the truncated action of every monomial
/// a·xᵏ. An empty generator list yields the zero subgroup.
pub fn slice_closure(
    gw: &GroupWithOperators,
    pair: &EndoPair,
    generators: &[GroupPolynomial],
    degree_bound: u32,
) -> Result<SlicedStableSubgroup> {
    slice_closure_budgeted(gw, pair, generators, degree_bound, DEFAULT_SLICE_BUDGET)
}

/// The degree-n coefficient subgroup β_n(⟨generators⟩) computed without
/// materializing the full slice: projection to one digit commutes with
/// spanning, so spanning the projected orbit inside B gives the same
/// subgroup as projecting the spanned slice. Cheap even when the slice
/// itself would blow the budget.
pub fn beta_image_of_generated(
    gw: &GroupWithOperators,
    pair: &EndoPair,
    generators: &[GroupPolynomial],
    n: u32,
    budget: u32,
) -> Result<Subgroup> {
    let bound =
        generators.iter().filter_map(|p| p.degree()).max().unwrap_or(0).max(n);
    let (codec, _, reached) = reachable_codes(gw, pair, generators, bound, budget)?;
    let digits: BTreeSet<u16> = reached.iter().map(|&c| codec.digit(c, n)).collect();
    let seed: Vec<u16> = digits.into_iter().collect();
    Ok(z_span(gw, &seed))
}
