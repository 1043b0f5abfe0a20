//! Ore products over rings and modules.
//!
//! A ring R with maps (σ_R, δ_R) and a left module M with maps (σ_M, δ_M)
//! feed the same skew-monomial machinery as groups with operators: read the
//! ring elements as operators on M (which requires left distributivity),
//! form the π-maps from the module-side pair, and multiply polynomials by
//! the usual rule. Taking M = R gives the Ore ring extension product.

use crate::algebra::GroupWithOperators;
use crate::error::{Error, Result};
use crate::ore::{ore_act, AssocTriple, EndoPair, GroupPolynomial};

use super::base::{FiniteRing, LeftModule, TriState};

fn additive_pair(module: &LeftModule, sigma: &[u16], delta: &[u16]) -> Result<EndoPair> {
    EndoPair::new(module.group(), sigma.to_vec(), delta.to_vec())
}

/// Multiplies a polynomial over R into a polynomial over M using the
/// module's π-maps: (Σ rᵢxⁱ)(Σ mⱼxʲ) = Σ rᵢ·π_k^i(mⱼ)·x^{k+j}.
///
/// `alpha` carries the operator sort, `beta` the carrier sort. The
/// ring-side maps are validated for additivity (they are part of the Ore
/// data) but the product only consults the module-side pair.
pub fn ore_ring_module_act(
    ring: &FiniteRing,
    module: &LeftModule,
    sigma_r: &[u16],
    delta_r: &[u16],
    sigma_m: &[u16],
    delta_m: &[u16],
    alpha: &GroupPolynomial,
    beta: &GroupPolynomial,
) -> Result<GroupPolynomial> {
    ring.group().check_additive(sigma_r)?;
    ring.group().check_additive(delta_r)?;
    ring.as_self_module().to_group_with_operators()?;
    let gw = module.to_group_with_operators()?;
    let pair = additive_pair(module, sigma_m, delta_m)?;
    ore_act(alpha, beta, &gw, &pair)
}

/// Report on the four endomorphism/derivation predicates linking the
/// ring-side and module-side maps.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DerivationReport {
    /// σ_R is additive and multiplicative: σ(rs) = σ(r)σ(s).
    pub sigma_r_endomorphism: TriState,
    /// δ_R is additive and satisfies δ(rs) = σ(r)δ(s) + δ(r)s.
    pub delta_r_derivation: TriState,
    /// σ_M is additive and σ_R-twisted: σ_M(rm) = σ_R(r)·σ_M(m).
    pub sigma_m_twisted: TriState,
    /// δ_M is additive and a σ_R-derivation: δ_M(rm) = σ_R(r)·δ_M(m) + δ_R(r)·m.
    pub delta_m_derivation: TriState,
}

impl DerivationReport {
    pub fn all_hold(&self) -> bool {
        self.sigma_r_endomorphism.holds()
            && self.delta_r_derivation.holds()
            && self.sigma_m_twisted.holds()
            && self.delta_m_derivation.holds()
    }
}

/// Evaluates the hypotheses under which the Ore product is honest: ring
/// endomorphism, ring derivation, twisted module endomorphism, module
/// derivation. Additivity failures are reported through the same tri-state
/// as the matching law.
pub fn derivation_endo_predicates(
    ring: &FiniteRing,
    module: &LeftModule,
    sigma_r: &[u16],
    delta_r: &[u16],
    sigma_m: &[u16],
    delta_m: &[u16],
) -> DerivationReport {
    let rg = ring.group();
    let mg = module.group();
    let additive = |g: &crate::algebra::FiniteAbelianGroup, f: &[u16]| {
        g.elements().find_map(|b| {
            g.elements()
                .find(|&c| f[g.add(b, c) as usize] != g.add(f[b as usize], f[c as usize]))
                .map(|c| vec![g.name(b).into(), g.name(c).into()])
        })
    };

    let sigma_r_endomorphism = TriState::from_witness(additive(rg, sigma_r).or_else(|| {
        rg.elements().find_map(|r| {
            rg.elements()
                .find(|&s| {
                    sigma_r[ring.mul(r, s) as usize]
                        != ring.mul(sigma_r[r as usize], sigma_r[s as usize])
                })
                .map(|s| vec![rg.name(r).into(), rg.name(s).into()])
        })
    }));

    let delta_r_derivation = TriState::from_witness(additive(rg, delta_r).or_else(|| {
        rg.elements().find_map(|r| {
            rg.elements()
                .find(|&s| {
                    delta_r[ring.mul(r, s) as usize]
                        != rg.add(
                            ring.mul(sigma_r[r as usize], delta_r[s as usize]),
                            ring.mul(delta_r[r as usize], s),
                        )
                })
                .map(|s| vec![rg.name(r).into(), rg.name(s).into()])
        })
    }));

    let sigma_m_twisted = TriState::from_witness(additive(mg, sigma_m).or_else(|| {
        rg.elements().find_map(|r| {
            mg.elements()
                .find(|&m| {
                    sigma_m[module.act(r, m) as usize]
                        != module.act(sigma_r[r as usize], sigma_m[m as usize])
                })
                .map(|m| vec![rg.name(r).into(), mg.name(m).into()])
        })
    }));

    let delta_m_derivation = TriState::from_witness(additive(mg, delta_m).or_else(|| {
        rg.elements().find_map(|r| {
            mg.elements()
                .find(|&m| {
                    delta_m[module.act(r, m) as usize]
                        != mg.add(
                            module.act(sigma_r[r as usize], delta_m[m as usize]),
                            module.act(delta_r[r as usize], m),
                        )
                })
                .map(|m| vec![rg.name(r).into(), mg.name(m).into()])
        })
    }));

    DerivationReport {
        sigma_r_endomorphism,
        delta_r_derivation,
        sigma_m_twisted,
        delta_m_derivation,
    }
}

/// Wires (R, M) into a triple for the two-phase associativity checker with
/// A = B = R and C = M. Requires both actions to read as groups with
/// operators whose operator set is exactly the ring element set, i.e. the
/// ring zero must act as the zero map on both carriers.
pub fn module_assoc_triple(
    ring: &FiniteRing,
    module: &LeftModule,
    sigma_r: &[u16],
    delta_r: &[u16],
    sigma_m: &[u16],
    delta_m: &[u16],
) -> Result<AssocTriple> {
    let names = ring.group().names().to_vec();
    let zero_name = ring.group().name(ring.group().zero());
    let mk = |target: &crate::algebra::FiniteAbelianGroup, table: &[Vec<u16>]| {
        GroupWithOperators::new(target.clone(), names.clone(), Some(zero_name), table.to_vec())
            .map_err(|e| match e {
                Error::NotEndomorphism { op, b, c } => {
                    Error::NotLeftDistributive { r: op, m: b, n: c }
                }
                other => other,
            })
    };
    let a_on_b = mk(ring.group(), ring.mul_table())?;
    let b_on_c = mk(module.group(), module.act_table())?;
    let a_on_c = mk(module.group(), module.act_table())?;
    let pair_b = EndoPair::new(ring.group(), sigma_r.to_vec(), delta_r.to_vec())?;
    let pair_c = EndoPair::new(module.group(), sigma_m.to_vec(), delta_m.to_vec())?;
    AssocTriple::new(a_on_b, b_on_c, a_on_c, pair_b, pair_c)
}
