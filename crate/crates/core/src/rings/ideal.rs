//! Degree-windowed right ideal checks in an Ore ring extension.
//!
//! Inside R[x; σ, δ] truncated at degree D, right multiplication by a
//! monomial r·xᵏ sends m·xʲ to Σ_t m·π_tʲ(r)·x^{t+k} with terms above D
//! dropped. A finite additive span is a windowed right ideal when every
//! such product stays inside it. Because right distributivity can fail,
//! products must be taken from every span element, not just the
//! generators; and because δ can pull degrees down, the window is a
//! genuine truncation rather than a filtration quotient.

use std::collections::BTreeSet;

use crate::algebra::FiniteAbelianGroup;
use crate::error::{Error, Result};
use crate::noetherian::slice::{span_codes, Codec, DEFAULT_SLICE_BUDGET};
use crate::ore::{EndoPair, GroupPolynomial, PiTriangle, PolySort};

use super::base::FiniteRing;

/// τ_D(p · r·xᵏ) on encoded digit vectors.
fn monomial_right_mul(
    ring: &FiniteRing,
    codec: &Codec,
    tri: &PiTriangle,
    p: u128,
    r: u16,
    k: u32,
    degree_bound: u32,
) -> u128 {
    let g = ring.group();
    let mut digits = vec![g.zero(); degree_bound as usize + 1];
    for j in 0..=degree_bound {
        let v = codec.digit(p, j);
        if v == g.zero() {
            continue;
        }
        for t in 0..=j {
            let d = t + k;
            if d > degree_bound {
                continue;
            }
            let c = ring.mul(v, tri.apply(j, t as i64, r));
            digits[d as usize] = g.add(digits[d as usize], c);
        }
    }
    codec.encode(&digits)
}

/// The saturation of an additive span under truncated right multiplication,
/// together with whether the span needed saturating at all.
#[derive(Debug, Clone)]
pub struct RightIdealReport {
    degree_bound: u32,
    /// The initial additive span was already closed under every truncated
    /// right multiplication by a monomial.
    pub span_closed: bool,
    /// First product that left the initial span: the span element and the
    /// monomial it was multiplied by, both rendered.
    pub escape: Option<(String, String)>,
    per_degree: Vec<usize>,
    codec: Codec,
    codes: BTreeSet<u128>,
    zero: u16,
}

impl RightIdealReport {
    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Number of polynomials in the saturated closure.
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Size of the degree-d coefficient image of the closure.
    pub fn per_degree(&self) -> &[usize] {
        &self.per_degree
    }

    /// Membership of a polynomial in the saturated closure.
    pub fn contains(&self, p: &GroupPolynomial) -> Result<bool> {
        p.expect_sort(PolySort::OverB)?;
        let v = p.to_vector(self.degree_bound, self.zero)?;
        Ok(self.codes.contains(&self.codec.encode(&v)))
    }

    pub fn is_subset_of(&self, other: &RightIdealReport) -> bool {
        debug_assert_eq!(self.degree_bound, other.degree_bound);
        self.codes.is_subset(&other.codes)
    }

    /// Errors unless the initial span was already a windowed right ideal.
    pub fn require_closed(&self) -> Result<()> {
        match &self.escape {
            None => Ok(()),
            Some((element, monomial)) => Err(Error::NotRightIdeal {
                element: element.clone(),
                monomial: monomial.clone(),
            }),
        }
    }

    pub(crate) fn codes(&self) -> &BTreeSet<u128> {
        &self.codes
    }

    pub(crate) fn codec(&self) -> &Codec {
        &self.codec
    }
}

pub fn right_ideal_slice_check_budgeted(
    ring: &FiniteRing,
    sigma: &[u16],
    delta: &[u16],
    generators: &[GroupPolynomial],
    degree_bound: u32,
    budget: u32,
) -> Result<RightIdealReport> {
    let g = ring.group();
    let pair = EndoPair::new(g, sigma.to_vec(), delta.to_vec())?;
    let codec = Codec::new(g.order(), degree_bound)?;
    let mut seeds = BTreeSet::new();
    for p in generators {
        p.expect_sort(PolySort::OverB)?;
        seeds.insert(codec.encode(&p.to_vector(degree_bound, g.zero())?));
    }
    let tri = PiTriangle::build(g, &pair, degree_bound);
    let zero_code = codec.zero_code(g);
    let names = g.names();

    let mut span = span_codes(g, &codec, &seeds, budget)?;
    let mut checked: BTreeSet<u128> = BTreeSet::new();
    let mut escape = None;
    loop {
        let mut fresh: BTreeSet<u128> = BTreeSet::new();
        for &p in &span {
            if p == zero_code || !checked.insert(p) {
                continue;
            }
            for r in g.elements() {
                if r == g.zero() {
                    continue;
                }
                for k in 0..=degree_bound {
                    let q = monomial_right_mul(ring, &codec, &tri, p, r, k, degree_bound);
                    if !span.contains(&q) && fresh.insert(q) && escape.is_none() {
                        let decoded = decode_poly(&codec, g, p);
                        let monomial = GroupPolynomial::monomial(PolySort::OverB, r, k, g.zero());
                        escape = Some((decoded.render(names), monomial.render(names)));
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        let mut joined = span.clone();
        joined.extend(fresh);
        span = span_codes(g, &codec, &joined, budget)?;
    }

    let per_degree = (0..=degree_bound)
        .map(|d| span.iter().map(|&c| codec.digit(c, d)).collect::<BTreeSet<_>>().len())
        .collect();
    Ok(RightIdealReport {
        degree_bound,
        span_closed: escape.is_none(),
        escape,
        per_degree,
        codec,
        codes: span,
        zero: g.zero(),
    })
}

/// Saturates the additive span of `generators` inside the degree-≤D window
/// under every truncated right multiplication by a monomial, and reports
/// whether the span was closed to begin with. Monomial right factors
/// suffice because the product is additive in its right argument.
pub fn right_ideal_slice_check(
    ring: &FiniteRing,
    sigma: &[u16],
    delta: &[u16],
    generators: &[GroupPolynomial],
    degree_bound: u32,
) -> Result<RightIdealReport> {
    right_ideal_slice_check_budgeted(ring, sigma, delta, generators, degree_bound,
        DEFAULT_SLICE_BUDGET)
}

fn decode_poly(codec: &Codec, g: &FiniteAbelianGroup, code: u128) -> GroupPolynomial {
    let digits = codec.decode(code);
    let pairs: Vec<(u32, u16)> =
        digits.iter().enumerate().map(|(d, &v)| (d as u32, v)).collect();
    GroupPolynomial::from_coeffs(PolySort::OverB, &pairs, g.zero())
}

/// An ascending run of saturated windowed ideals Iₙ generated by
/// {s·xⁱ : s a seed, i ≤ n}, all sliced at degree `depth`.
#[derive(Debug, Clone)]
pub struct IdealChainReport {
    pub depth: u32,
    pub links: Vec<RightIdealReport>,
    /// One entry per consecutive pair: a polynomial in the larger link and
    /// not the smaller, or None when the pair coincides.
    pub separators: Vec<Option<GroupPolynomial>>,
    /// Every link's initial span was already closed.
    pub all_closed: bool,
    /// Every consecutive pair has a separator.
    pub strictly_ascending: bool,
}

/// Builds I₀ ⊆ I₁ ⊆ … ⊆ I_depth from the seeds and reports closure and
/// strictness per link.
pub fn right_ideal_chain(
    ring: &FiniteRing,
    sigma: &[u16],
    delta: &[u16],
    seeds: &[u16],
    depth: u32,
) -> Result<IdealChainReport> {
    let g = ring.group();
    if seeds.is_empty() {
        return Err(Error::BadParams("an ideal chain needs at least one seed".into()));
    }
    if let Some(&s) = seeds.iter().find(|&&s| s as usize >= g.order()) {
        return Err(Error::BadParams(format!("seed index {s} is out of range")));
    }

    let mut links: Vec<RightIdealReport> = Vec::with_capacity(depth as usize + 1);
    let mut separators = Vec::with_capacity(depth as usize);
    for n in 0..=depth {
        let zero = g.zero();
        let gens: Vec<GroupPolynomial> = seeds
            .iter()
            .flat_map(|&s| {
                (0..=n).map(move |i| GroupPolynomial::monomial(PolySort::OverB, s, i, zero))
            })
            .filter(|p| !p.is_zero())
            .collect();
        let link = right_ideal_slice_check(ring, sigma, delta, &gens, depth)?;
        if let Some(prev) = links.last() {
            if !prev.is_subset_of(&link) {
                return Err(Error::ClaimFailed {
                    item: "windowed ideal chain".into(),
                    claim: "each link contains the previous one".into(),
                    expected: "subset".into(),
                    got: "incomparable links".into(),
                    witness: vec![format!("link {n}")],
                });
            }
            let sep = link
                .codes()
                .difference(prev.codes())
                .next()
                .map(|&c| decode_poly(link.codec(), g, c));
            separators.push(sep);
        }
        links.push(link);
    }

    let all_closed = links.iter().all(|l| l.span_closed);
    let strictly_ascending = separators.iter().all(|s| s.is_some());
    Ok(IdealChainReport { depth, links, separators, all_closed, strictly_ascending })
}
