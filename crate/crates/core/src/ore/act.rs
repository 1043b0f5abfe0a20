//! The Ore action of operator polynomials on group polynomials:
//!
//!   (Σ a_i x^i)(Σ b_j x^j) = Σ_{i,j,k} (a_i · π_k^i(b_j)) x^{k+j}.
//!
//! The same routine serves every pairing in a triple (A[x] on B[x], B[x] on
//! C[x], A[x] on C[x]): the caller supplies the action structure for the
//! coefficients and the (σ, δ) pair of the operand side.

use crate::algebra::structure::GroupWithOperators;
use crate::error::Result;
use crate::ore::endo::{EndoPair, PiTriangle};
use crate::ore::poly::{GroupPolynomial, PolySort};

/// Legal (operator sort, operand sort) pairings for [`ore_act`].
const SORT_PAIRINGS: [(PolySort, PolySort); 3] = [
    (PolySort::OverA, PolySort::OverB),
    (PolySort::OverB, PolySort::OverC),
    (PolySort::OverA, PolySort::OverC),
];

/// Applies `alpha` to `beta` through `action` (whose operators carry the
/// coefficients of `alpha` and whose group carries those of `beta`), using
/// the π-maps of `pair`. The result has `beta`'s sort.
pub fn ore_act(
    alpha: &GroupPolynomial,
    beta: &GroupPolynomial,
    action: &GroupWithOperators,
    pair: &EndoPair,
) -> Result<GroupPolynomial> {
    if !SORT_PAIRINGS.contains(&(alpha.sort(), beta.sort())) {
        alpha.expect_sort(match beta.sort() {
            PolySort::OverB => PolySort::OverA,
            PolySort::OverC => PolySort::OverB,
            PolySort::OverA => PolySort::OverB, // nothing acts on A[x]
        })?;
    }
    let max_i = alpha.degree().unwrap_or(0);
    let tri = PiTriangle::build(action.group(), pair, max_i);
    Ok(ore_act_with(alpha, beta, action, &tri))
}

/// Same as [`ore_act`] but reusing a prebuilt π triangle (which must cover
/// `alpha`'s degree). Used by checkers that act many times with one pair.
pub fn ore_act_with(
    alpha: &GroupPolynomial,
    beta: &GroupPolynomial,
    action: &GroupWithOperators,
    tri: &PiTriangle,
) -> GroupPolynomial {
    let grp = action.group();
    let mut out = GroupPolynomial::zero(beta.sort());
    for (i, a) in alpha.terms() {
        debug_assert!(i <= tri.max_sup());
        for (j, b) in beta.terms() {
            for k in 0..=i {
                let c = action.act(a, tri.apply(i, k as i64, b));
                out.add_term(k + j, c, grp);
            }
        }
    }
    out
}

/// Coefficientwise action of a single operator on a polynomial (the degree-0
/// monomial a·x⁰ acting), kept separate because orbit computations use it
/// heavily.
pub fn act_coefficientwise(
    a: u16,
    p: &GroupPolynomial,
    action: &GroupWithOperators,
) -> GroupPolynomial {
    let grp = action.group();
    let mut out = GroupPolynomial::zero(p.sort());
    for (d, c) in p.terms() {
        out.add_term(d, action.act(a, c), grp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::FiniteAbelianGroup;
    use crate::error::Error;

    /// Z/5 acting on itself by multiplication, σ = x2, δ = x3.
    fn setup() -> (GroupWithOperators, EndoPair) {
        let g = FiniteAbelianGroup::cyclic(5);
        let names = (0..5).map(|i| i.to_string()).collect();
        let action = (0..5u16)
            .map(|a| (0..5u16).map(|b| (a * b) % 5).collect())
            .collect();
        let gwo = GroupWithOperators::new(g, names, Some("0"), action).unwrap();
        let sigma = (0..5).map(|b| (2 * b) % 5).collect();
        let delta = (0..5).map(|b| (3 * b) % 5).collect();
        let pair = EndoPair::new(gwo.group(), sigma, delta).unwrap();
        (gwo, pair)
    }

    #[test]
    fn one_term_action_matches_hand_computation() {
        // (2x)(3) = 2·δ(3) + 2·σ(3)x = 3 + 2x over Z/5.
        let (gwo, pair) = setup();
        let alpha = GroupPolynomial::monomial(PolySort::OverA, 2, 1, 0);
        let beta = GroupPolynomial::monomial(PolySort::OverB, 3, 0, 0);
        let out = ore_act(&alpha, &beta, &gwo, &pair).unwrap();
        assert_eq!(out.coeff(0, 0), 3);
        assert_eq!(out.coeff(1, 0), 2);
        assert_eq!(out.degree(), Some(1));
    }

    #[test]
    fn x_times_constant_is_sigma_delta() {
        // (1·x)(b) = δ(b) + σ(b)x, the defining one-shift shape.
        let (gwo, pair) = setup();
        let alpha = GroupPolynomial::monomial(PolySort::OverA, 1, 1, 0);
        for b in 1..5u16 {
            let beta = GroupPolynomial::monomial(PolySort::OverB, b, 0, 0);
            let out = ore_act(&alpha, &beta, &gwo, &pair).unwrap();
            assert_eq!(out.coeff(0, 0), pair.delta(b));
            assert_eq!(out.coeff(1, 0), pair.sigma(b));
        }
    }

    #[test]
    fn degree_bound_and_top_coefficient() {
        // deg(αβ) ≤ deg α + deg β and the top coefficient of (a x^i)(b x^j)
        // is a·σ^i(b).
        let (gwo, pair) = setup();
        for a in 1..5u16 {
            for b in 1..5u16 {
                let alpha = GroupPolynomial::monomial(PolySort::OverA, a, 3, 0);
                let beta = GroupPolynomial::monomial(PolySort::OverB, b, 2, 0);
                let out = ore_act(&alpha, &beta, &gwo, &pair).unwrap();
                assert!(out.degree().unwrap_or(0) <= 5);
                let top = gwo.act(a, pair.sigma_power(3, 5)[b as usize]);
                assert_eq!(out.coeff(5, 0), top);
            }
        }
    }

    #[test]
    fn zero_operator_annihilates() {
        let (gwo, pair) = setup();
        let alpha = GroupPolynomial::monomial(PolySort::OverA, 0, 2, 0);
        // The zero coefficient is dropped, so α is the zero polynomial and
        // the action yields zero.
        assert!(alpha.is_zero());
        let beta = GroupPolynomial::from_coeffs(PolySort::OverB, &[(0, 1), (2, 4)], 0);
        let out = ore_act(&alpha, &beta, &gwo, &pair).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn sort_pairing_is_enforced() {
        let (gwo, pair) = setup();
        let alpha = GroupPolynomial::monomial(PolySort::OverB, 2, 1, 0);
        let beta = GroupPolynomial::monomial(PolySort::OverB, 3, 0, 0);
        assert!(matches!(
            ore_act(&alpha, &beta, &gwo, &pair),
            Err(Error::SortMismatch { .. })
        ));
    }
}
