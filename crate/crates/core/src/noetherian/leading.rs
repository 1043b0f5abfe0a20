//! The leading-coefficient subgroup extracted from a slice.
//!
//! For a stable subgroup P of B[x], collect every b such that some member
//! of P has the shape σᵈ(b)·xᵈ + lower-degree terms. When σ is an A-stable
//! surjection (hence a bijection on a finite group), this set Q is an
//! A-stable subgroup of B; it is the handle by which degree-d membership
//! questions about P reduce to subgroup questions about B.

use std::collections::BTreeSet;

use crate::algebra::{GroupWithOperators, Subgroup};
use crate::error::{Error, Result};
use crate::ore::EndoPair;

use super::slice::SlicedStableSubgroup;

/// Extracts Q = {b : σᵈ(b)·xᵈ + lower terms ∈ P for some d ≤ D} by
/// scanning the slice, and asserts it is an A-stable subgroup.
pub fn leading_coeff_subgroup(
    gw: &GroupWithOperators,
    pair: &EndoPair,
    p: &SlicedStableSubgroup,
) -> Result<Subgroup> {
    let g = gw.group();
    let n = g.order();

    let mut inverse = vec![u16::MAX; n];
    for b in g.elements() {
        inverse[pair.sigma(b) as usize] = b;
    }
    if let Some(missing) = g.elements().find(|&b| inverse[b as usize] == u16::MAX) {
        return Err(Error::HypothesisNotMet {
            what: "sigma is not surjective".into(),
            witness: vec![g.name(missing).to_owned()],
        });
    }
    for a in gw.ops().iter() {
        for b in g.elements() {
            let lhs = pair.sigma(gw.act(a, b));
            let image = pair.sigma(b);
            if !gw.ops().iter().any(|a2| gw.act(a2, image) == lhs) {
                return Err(Error::HypothesisNotMet {
                    what: "sigma is not A-stable".into(),
                    witness: vec![gw.ops().name(a).to_owned(), g.name(b).to_owned()],
                });
            }
        }
    }

    let mut q: BTreeSet<u16> = [g.zero()].into();
    for &code in p.codes() {
        let digits = p.codec().decode(code);
        let Some(top) = digits.iter().rposition(|&c| c != g.zero()) else {
            continue;
        };
        let mut b = digits[top];
        for _ in 0..top {
            b = inverse[b as usize];
        }
        q.insert(b);
    }

    let sub = Subgroup::from_sorted(q.into_iter().collect());
    if let Err(e) = sub.verify(gw) {
        return Err(Error::ClaimFailed {
            item: "leading-coefficient subgroup".into(),
            claim: "Q is an A-stable subgroup of B".into(),
            expected: "closure under addition, negation, and the action".into(),
            got: e.to_string(),
            witness: sub.names(gw),
        });
    }
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteAbelianGroup;
    use crate::noetherian::slice::slice_closure;
    use crate::ore::{GroupPolynomial, PolySort};

    fn mult_gwo(n: u16) -> GroupWithOperators {
        let g = FiniteAbelianGroup::cyclic(n as u32);
        let acting = g.clone();
        let action: Vec<Vec<u16>> =
            (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        GroupWithOperators::from_acting_group(&acting, g, action).unwrap()
    }

    fn bx(c: u16, d: u32) -> GroupPolynomial {
        GroupPolynomial::monomial(PolySort::OverB, c, d, 0)
    }

    #[test]
    fn full_slice_gives_the_whole_group() {
        let gw = mult_gwo(5);
        let pair = EndoPair::trivial(gw.group());
        let p = slice_closure(&gw, &pair, &[bx(1, 0)], 2).unwrap();
        let q = leading_coeff_subgroup(&gw, &pair, &p).unwrap();
        assert_eq!(q.members(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn zero_slice_gives_the_zero_subgroup() {
        let gw = mult_gwo(5);
        let pair = EndoPair::trivial(gw.group());
        let p = slice_closure(&gw, &pair, &[], 2).unwrap();
        let q = leading_coeff_subgroup(&gw, &pair, &p).unwrap();
        assert_eq!(q.members(), &[0]);
    }

    #[test]
    fn odd_residue_action_keeps_the_even_subgroup() {
        // A = {1, 3} acting on ℤ/4 by multiplication; generator 2·x¹.
        let g = FiniteAbelianGroup::cyclic(4);
        let action: Vec<Vec<u16>> = vec![
            vec![0; 4],
            (0..4).collect(),
            (0..4).map(|b| b * 3 % 4).collect(),
        ];
        let gw = GroupWithOperators::new(
            g,
            vec!["0".into(), "u1".into(), "u3".into()],
            Some("0"),
            action,
        )
        .unwrap();
        let pair = EndoPair::trivial(gw.group());
        let p = slice_closure(&gw, &pair, &[bx(2, 1)], 2).unwrap();
        let q = leading_coeff_subgroup(&gw, &pair, &p).unwrap();
        assert_eq!(q.members(), &[0, 2]);
    }

    #[test]
    fn non_surjective_sigma_is_rejected() {
        let gw = mult_gwo(4);
        let sigma: Vec<u16> = (0..4).map(|b| b * 2 % 4).collect();
        let delta = vec![0u16; 4];
        let pair = EndoPair::new(gw.group(), sigma, delta).unwrap();
        let p = slice_closure(&gw, &pair, &[], 1).unwrap();
        let err = leading_coeff_subgroup(&gw, &pair, &p).unwrap_err();
        assert!(matches!(err, Error::HypothesisNotMet { ref what, .. }
            if what.contains("surjective")));
    }

    #[test]
    fn non_stable_sigma_is_rejected() {
        // B = ℤ/2 × ℤ/2, A = {ε, swap}, σ(x, y) = (x, x+y): a bijection
        // that is not A-stable, witnessed at b = (0,1).
        let g = FiniteAbelianGroup::cyclic_product(&[2, 2]);
        let swap = vec![0u16, 2, 1, 3];
        let action = vec![vec![0u16; 4], swap];
        let gw = GroupWithOperators::new(
            g,
            vec!["0".into(), "s".into()],
            Some("0"),
            action,
        )
        .unwrap();
        let sigma = vec![0u16, 1, 3, 2];
        let delta = vec![0u16; 4];
        let pair = EndoPair::new(gw.group(), sigma, delta).unwrap();
        let p = slice_closure(&gw, &pair, &[], 1).unwrap();
        let err = leading_coeff_subgroup(&gw, &pair, &p).unwrap_err();
        assert!(matches!(err, Error::HypothesisNotMet { ref what, .. }
            if what.contains("A-stable")));
    }
}
