//! Strictly ascending chains of stable subgroups of B[x] for actions that
//! are not weakly s-unital.
//!
//! When some c lies outside its own bracket-generated subgroup [c], the
//! quotient D = B/[c] carries an action that kills the coset c̄, so every
//! additive subgroup of the span E = ⟨c̄⟩ placed at degrees ≤ n is stable
//! under all monomial operators. Raising n one degree at a time yields a
//! chain Σ_{i≤0} E·xⁱ ⊊ Σ_{i≤1} E·xⁱ ⊊ ⋯ that never stops growing; at the
//! desk scale the witness carries L links and the separating monomials
//! c̄·xⁿ between consecutive links.

use crate::algebra::{
    generated_stable_subgroup, sunitality_report, GenerationMode, GroupWithOperators,
};
use crate::error::{Error, Result};
use crate::ore::{EndoPair, GroupPolynomial, PolySort};

use super::slice::{slice_closure, SlicedStableSubgroup};

/// A strictly ascending chain of stable subgroups, all sliced at one
/// shared degree bound.
#[derive(Debug, Clone)]
pub struct ChainWitness {
    /// The links, smallest first; `links[t]` is Σ_{i≤t} E·xⁱ.
    pub links: Vec<SlicedStableSubgroup>,
    /// Separating elements, one per consecutive pair: `strict[t]` lies in
    /// `links[t+1]` but not in `links[t]`.
    pub strict: Vec<GroupPolynomial>,
    /// The quotient structure D = B/[c] the chain lives in.
    pub quotient: GroupWithOperators,
    /// The element c of the original group with c ∉ [c].
    pub culprit: u16,
}

/// Either a chain witness or the structured reason none exists.
#[derive(Debug, Clone)]
pub enum ChainOutcome {
    /// The action is weakly s-unital, so no such chain can be built; this
    /// is the theorem's other branch, not a failure.
    NotApplicable { reason: String },
    Chain(ChainWitness),
}

impl ChainOutcome {
    pub fn is_applicable(&self) -> bool {
        matches!(self, ChainOutcome::Chain(_))
    }
}

/// Builds a strictly ascending chain of `length` stable subgroups of B[x]
/// (plain polynomial case: σ = id, δ = 0), or reports `NotApplicable`
/// when the action is weakly s-unital. Every link is re-verified stable
/// and every separation is re-checked before the witness is returned.
pub fn ascending_chain_witness(gw: &GroupWithOperators, length: u32) -> Result<ChainOutcome> {
    if length == 0 {
        return Err(Error::BadParams("chain length must be at least 1".into()));
    }
    let report = sunitality_report(gw);
    let c = match report.weak_witness {
        None => {
            return Ok(ChainOutcome::NotApplicable {
                reason: "the action is weakly s-unital".into(),
            })
        }
        Some(c) => c,
    };

    let bracket = generated_stable_subgroup(gw, &[c], GenerationMode::Bracket)?;
    let quotient = gw.quotient(&bracket)?;
    // The coset c + [c], located through its least representative's name.
    let least = bracket
        .members()
        .iter()
        .map(|&h| gw.group().add(c, h))
        .min()
        .expect("bracket subgroups contain zero");
    let cbar = quotient
        .group()
        .index_of(gw.group().name(least))
        .expect("coset representatives keep their parent names");

    // A·c ⊆ [c], so the coset acts to zero; this is what makes additive
    // closure equal stable closure for the links below.
    for a in quotient.ops().iter() {
        if quotient.act(a, cbar) != quotient.group().zero() {
            return Err(Error::ClaimFailed {
                item: "ascending chain".into(),
                claim: "A annihilates the generating coset".into(),
                expected: quotient.group().name(quotient.group().zero()).into(),
                got: quotient.group().name(quotient.act(a, cbar)).into(),
                witness: vec![quotient.ops().name(a).into()],
            });
        }
    }

    let pair = EndoPair::trivial(quotient.group());
    let degree_bound = length - 1;
    let mut links = Vec::with_capacity(length as usize);
    for t in 0..length {
        let gens: Vec<GroupPolynomial> = (0..=t)
            .map(|s| {
                GroupPolynomial::monomial(PolySort::OverB, cbar, s, quotient.group().zero())
            })
            .collect();
        let link = slice_closure(&quotient, &pair, &gens, degree_bound)?;
        link.verify(&quotient, &pair)?;
        links.push(link);
    }

    let mut strict = Vec::with_capacity(length as usize - 1);
    for t in 0..(length as usize - 1) {
        let sep =
            GroupPolynomial::monomial(PolySort::OverB, cbar, t as u32 + 1, quotient.group().zero());
        let grows = links[t].is_subset_of(&links[t + 1])
            && links[t + 1].contains(&sep, quotient.group())?
            && !links[t].contains(&sep, quotient.group())?;
        if !grows {
            return Err(Error::ClaimFailed {
                item: "ascending chain".into(),
                claim: "consecutive links are strictly nested".into(),
                expected: "separator in the larger link only".into(),
                got: sep.render(quotient.group().names()),
                witness: vec![format!("link {t}")],
            });
        }
        strict.push(sep);
    }

    Ok(ChainOutcome::Chain(ChainWitness { links, strict, quotient, culprit: c }))
}
