//! Bounded-degree machinery behind the Hilbert-basis argument for group
//! actions: coefficient projections, slices of stable subgroups of B[x],
//! the two-part coefficient lemma, ascending-chain witnesses, and the
//! leading-coefficient subgroup.

pub mod chain;
pub mod horrible;
pub mod leading;
pub mod slice;

pub use chain::{ascending_chain_witness, ChainOutcome, ChainWitness};
pub use horrible::{check_horrible_lemma, HorribleReport};
pub use leading::leading_coeff_subgroup;
pub use slice::{
    beta_image_of_generated, slice_closure, slice_closure_budgeted, SlicedStableSubgroup,
    DEFAULT_SLICE_BUDGET,
};

use crate::ore::GroupPolynomial;

/// The projection β_n: keeps the degree-n monomial of a polynomial and
/// drops everything else (the zero polynomial when the degree is absent).
pub fn beta_projection(p: &GroupPolynomial, n: u32) -> GroupPolynomial {
    p.term_at(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ore::PolySort;

    #[test]
    fn beta_keeps_exactly_one_degree() {
        // 3 + 2x over ℤ/5.
        let p = GroupPolynomial::from_coeffs(PolySort::OverB, &[(0, 3), (1, 2)], 0);
        assert_eq!(beta_projection(&p, 1), GroupPolynomial::monomial(PolySort::OverB, 2, 1, 0));
        assert_eq!(beta_projection(&p, 5), GroupPolynomial::zero(PolySort::OverB));
        let zero = GroupPolynomial::zero(PolySort::OverB);
        assert_eq!(beta_projection(&zero, 0), zero);
    }
}
