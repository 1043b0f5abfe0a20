//! The shared verification corpus: every catalog structure read as a
//! group with operators, plus hand-built actions that exercise failure
//! modes the catalog lacks (zero actions, a doubling action that loses
//! weak s-unitality, and a mixed Klein action without companion maps).

use super::cd::CdAlgebra;
use super::field::SmallField;
use super::items::{inversion_structure, rps_ring, twisted_pair_ring};
use crate::algebra::{FiniteAbelianGroup, GroupWithOperators};
use crate::error::Result;
use crate::ore::EndoPair;
use crate::rings::{adjoint_delta, FiniteRing};

/// One corpus structure: an action together with the endomorphism pair
/// the identity checks run against.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub gw: GroupWithOperators,
    pub pair: EndoPair,
}

fn identity_map(len: usize) -> Vec<u16> {
    (0..len as u16).collect()
}

fn scaling(n: u16, c: u16) -> Vec<u16> {
    (0..n).map(|b| c * b % n).collect()
}

/// Z/n acting on itself by multiplication.
fn mult_gwo(n: u16) -> Result<GroupWithOperators> {
    let g = FiniteAbelianGroup::cyclic(n as u32);
    let rows: Vec<Vec<u16>> = (0..n).map(|a| scaling(n, a)).collect();
    GroupWithOperators::from_acting_group(&g, g.clone(), rows)
}

/// A ring read as the action of itself on its additive group, with the
/// pair and optional companion maps on the element-indexed operators.
fn ring_entry(
    id: &str,
    ring: &FiniteRing,
    sigma: Vec<u16>,
    delta: Vec<u16>,
    companions: Option<(Vec<u16>, Vec<u16>)>,
) -> Result<CorpusEntry> {
    let gw = ring.as_self_module().to_group_with_operators()?;
    let mut pair = EndoPair::new(gw.group(), sigma, delta)?;
    if let Some((sigma_a, delta_a)) = companions {
        pair = pair.with_companions(gw.ops().len(), sigma_a, delta_a);
    }
    Ok(CorpusEntry { id: id.into(), gw, pair })
}

fn inversion_entry(id: &str, group: FiniteAbelianGroup) -> Result<CorpusEntry> {
    let (gw, pair) = inversion_structure(group)?;
    Ok(CorpusEntry { id: id.into(), gw, pair })
}

fn frobenius_entry(id: &str, p: u16, k: u32, dim: u32, shift: bool) -> Result<CorpusEntry> {
    let field = SmallField::new(p, k)?;
    let module = field.vector_module(dim)?;
    let gw = module.to_group_with_operators()?;
    let frob = field.frobenius();
    let dmf = field.id_minus_frobenius();
    let frob_v = field.coefficientwise(&frob, dim);
    let alpha: Vec<u16> = if shift {
        field.basis_shift(dim)
    } else {
        identity_map(module.group().order())
    };
    let sigma_m: Vec<u16> = alpha.iter().map(|&v| frob_v[v as usize]).collect();
    let delta_m = field.coefficientwise(&dmf, dim);
    let pair = EndoPair::new(gw.group(), sigma_m, delta_m)?.with_companions(
        gw.ops().len(),
        frob,
        dmf,
    );
    Ok(CorpusEntry { id: id.into(), gw, pair })
}

/// Z/n under the zero action of a single operator: nothing is weakly
/// s-unital here except zero itself.
fn zero_action_entry(n: u16) -> Result<CorpusEntry> {
    let g = FiniteAbelianGroup::cyclic(n as u32);
    let gw = GroupWithOperators::new(
        g.clone(),
        vec!["z".to_string()],
        None,
        vec![vec![g.zero(); g.order()]],
    )?;
    // Operators are ["z", "0"]; both act as zero, so identity companions
    // with a constantly-zero delta companion satisfy both twists.
    let pair = EndoPair::new(gw.group(), identity_map(n as usize), vec![g.zero(); n as usize])?
        .with_companions(2, vec![0, 1], vec![1, 1]);
    Ok(CorpusEntry { id: format!("zero_action_{n}"), gw, pair })
}

/// The full corpus in a fixed order. The first block mirrors the catalog;
/// the tail adds actions with no catalog counterpart.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();

    // Inversion actions: s-unital exactly on the 2-torsion groups.
    out.push(inversion_entry("cyclic_inversion_2", FiniteAbelianGroup::cyclic(2))?);
    out.push(inversion_entry("cyclic_inversion_3", FiniteAbelianGroup::cyclic(3))?);
    out.push(inversion_entry("cyclic_inversion_4", FiniteAbelianGroup::cyclic(4))?);
    out.push(inversion_entry("cyclic_inversion_6", FiniteAbelianGroup::cyclic(6))?);
    out.push(inversion_entry("boolean_group_2", FiniteAbelianGroup::cyclic_product(&[2, 2]))?);
    out.push(inversion_entry("boolean_group_3", FiniteAbelianGroup::cyclic_product(&[2, 2, 2]))?);
    out.push(inversion_entry("odd_prime_product_2", FiniteAbelianGroup::cyclic_product(&[3, 5]))?);

    // The rock-paper-scissors algebra acting on itself; sigma and delta
    // trivial, companions likewise.
    let rps = rps_ring()?;
    let n = rps.group().order();
    out.push(ring_entry(
        "rps_algebra",
        &rps,
        identity_map(n),
        vec![rps.group().zero(); n],
        Some((identity_map(n), vec![rps.group().zero(); n])),
    )?);

    // The twisted pair with the adjoint derivation of z = (1,1). The ring
    // is associative, so delta's own table doubles as its companion.
    let tp = twisted_pair_ring(2)?;
    let delta = adjoint_delta(&tp, 3);
    out.push(ring_entry(
        "twisted_pair_2_1_1",
        &tp,
        identity_map(4),
        delta.clone(),
        Some((identity_map(4), delta)),
    )?);

    // Doubling rings: conjugation twist at the commutative level, trivial
    // pair once conjugation stops being an endomorphism.
    let cd1 = CdAlgebra::new(3, 1)?;
    let ring1 = cd1.to_ring()?;
    out.push(ring_entry(
        "cayley_dickson_3_1",
        &ring1,
        cd1.conj_table()?,
        cd1.id_minus_conj_table()?,
        Some((cd1.conj_table()?, cd1.id_minus_conj_table()?)),
    )?);
    let cd2 = CdAlgebra::new(3, 2)?;
    let ring2 = cd2.to_ring()?;
    let n2 = ring2.group().order();
    out.push(ring_entry(
        "cayley_dickson_3_2",
        &ring2,
        identity_map(n2),
        vec![ring2.group().zero(); n2],
        Some((identity_map(n2), vec![ring2.group().zero(); n2])),
    )?);

    // Frobenius vector spaces from the catalog.
    out.push(frobenius_entry("frobenius_vector_space_2_2_1_0", 2, 2, 1, false)?);
    out.push(frobenius_entry("frobenius_vector_space_2_2_2_1", 2, 2, 2, true)?);

    // Zero actions: not weakly s-unital on anything but zero.
    out.push(zero_action_entry(2)?);
    out.push(zero_action_entry(3)?);
    out.push(zero_action_entry(4)?);

    // Doubling action on Z/4: d acts by 2, sigma = 3b, delta = 2b. The
    // bracket span of 1 is {0, 2}, so weak s-unitality fails.
    {
        let g = FiniteAbelianGroup::cyclic(4);
        let gw = GroupWithOperators::new(
            g.clone(),
            vec!["d".to_string()],
            None,
            vec![scaling(4, 2)],
        )?;
        let pair = EndoPair::new(gw.group(), scaling(4, 3), scaling(4, 2))?
            .with_companions(2, vec![0, 1], vec![1, 1]);
        out.push(CorpusEntry { id: "doubling_action_4".into(), gw, pair });
    }

    // Multiplicative actions of Z/n on itself with scaling pairs.
    {
        let gw = mult_gwo(5)?;
        let pair = EndoPair::new(gw.group(), scaling(5, 2), scaling(5, 3))?
            .with_companions(5, identity_map(5), vec![0; 5]);
        out.push(CorpusEntry { id: "mult_action_5".into(), gw, pair });
    }
    {
        let gw = mult_gwo(5)?;
        let pair = EndoPair::new(gw.group(), scaling(5, 3), scaling(5, 4))?
            .with_companions(5, identity_map(5), vec![0; 5]);
        out.push(CorpusEntry { id: "mult_action_5b".into(), gw, pair });
    }
    {
        let gw = mult_gwo(6)?;
        let pair = EndoPair::new(gw.group(), scaling(6, 5), scaling(6, 2))?
            .with_companions(6, identity_map(6), vec![0; 6]);
        out.push(CorpusEntry { id: "mult_action_6".into(), gw, pair });
    }

    // Only the units of Z/4 (plus zero) acting multiplicatively.
    {
        let g = FiniteAbelianGroup::cyclic(4);
        let gw = GroupWithOperators::new(
            g.clone(),
            vec!["0".to_string(), "u1".to_string(), "u3".to_string()],
            Some("0"),
            vec![vec![0; 4], scaling(4, 1), scaling(4, 3)],
        )?;
        let pair = EndoPair::new(gw.group(), scaling(4, 3), scaling(4, 2))?
            .with_companions(3, vec![0, 1, 2], vec![0, 0, 0]);
        out.push(CorpusEntry { id: "odd_mult_action_4".into(), gw, pair });
    }

    // Klein four-group with identity, swap and projection operators; the
    // pair (swap, proj) has no valid companion maps, so it only enters the
    // untwisted checks.
    {
        let g = FiniteAbelianGroup::cyclic_product(&[2, 2]);
        let swap = vec![0u16, 2, 1, 3];
        let proj = vec![0u16, 0, 2, 2];
        let gw = GroupWithOperators::new(
            g.clone(),
            vec!["0".to_string(), "e".to_string(), "s".to_string(), "p".to_string()],
            Some("0"),
            vec![vec![0; 4], vec![0, 1, 2, 3], swap.clone(), proj.clone()],
        )?;
        let pair = EndoPair::new(gw.group(), swap, proj)?;
        out.push(CorpusEntry { id: "klein_mixed".into(), gw, pair });
    }

    Ok(out)
}
