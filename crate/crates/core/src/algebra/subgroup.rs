//! Subgroups, stable closures, generated stable subgroups, and s-unitality.
//!
//! Two closure notions matter here. The *stable closure* of a set S is the
//! union of all iterated operator images of S (no group operations). The
//! *generated stable subgroup* additionally closes under addition and
//! negation; its `Bracket` variant drops the n = 0 layer, keeping only
//! elements reachable through at least one operator application.

use crate::algebra::structure::GroupWithOperators;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// A subgroup stored as its sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<u16>,
}

impl Subgroup {
    /// Wraps a sorted, duplicate-free member list without verification.
    pub fn from_sorted(members: Vec<u16>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub fn members(&self) -> &[u16] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: u16) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn names(&self, g: &GroupWithOperators) -> Vec<String> {
        self.members.iter().map(|&m| g.group().name(m).to_owned()).collect()
    }

    /// Checks that this is a stable subgroup of `g`, with witnesses.
    pub fn verify(&self, g: &GroupWithOperators) -> Result<()> {
        let grp = g.group();
        if !self.contains(grp.zero()) {
            return Err(Error::NotAGroup { axiom: "contains zero", witness: vec![] });
        }
        for &b in &self.members {
            if !self.contains(grp.neg(b)) {
                return Err(Error::NotAGroup {
                    axiom: "closure under negation",
                    witness: vec![grp.name(b).to_owned()],
                });
            }
            for &c in &self.members {
                if !self.contains(grp.add(b, c)) {
                    return Err(Error::NotAGroup {
                        axiom: "closure under addition",
                        witness: vec![grp.name(b).to_owned(), grp.name(c).to_owned()],
                    });
                }
            }
        }
        for a in g.ops().iter() {
            for &b in &self.members {
                let image = g.act(a, b);
                if !self.contains(image) {
                    return Err(Error::NotStable {
                        op: g.ops().name(a).to_owned(),
                        member: grp.name(b).to_owned(),
                        image: grp.name(image).to_owned(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Stable closure of a nonempty set: the least superset closed under the
/// action (no group operations). Computed by saturation.
pub fn stable_closure(g: &GroupWithOperators, set: &[u16]) -> Result<Vec<u16>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut closed: BTreeSet<u16> = set.iter().copied().collect();
    let mut frontier: Vec<u16> = closed.iter().copied().collect();
    while let Some(b) = frontier.pop() {
        for a in g.ops().iter() {
            let image = g.act(a, b);
            if closed.insert(image) {
                frontier.push(image);
            }
        }
    }
    Ok(closed.into_iter().collect())
}

/// Which layers feed the generated subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenerationMode {
    /// Z-span of the stable closure (includes the generators themselves).
    Full,
    /// Z-span of all images under at least one operator application.
    Bracket,
}

/// Z-span (closure under addition and negation) of a set, as a subgroup.
pub fn z_span(g: &GroupWithOperators, set: &[u16]) -> Subgroup {
    let grp = g.group();
    let mut closed: BTreeSet<u16> = [grp.zero()].into();
    let mut frontier: Vec<u16> = vec![grp.zero()];
    for &s in set {
        if closed.insert(s) {
            frontier.push(s);
        }
    }
    while let Some(b) = frontier.pop() {
        let n = grp.neg(b);
        if closed.insert(n) {
            frontier.push(n);
        }
        let snapshot: Vec<u16> = closed.iter().copied().collect();
        for c in snapshot {
            let s = grp.add(b, c);
            if closed.insert(s) {
                frontier.push(s);
            }
        }
    }
    Subgroup::from_sorted(closed.into_iter().collect())
}

/// The generated stable subgroup ⟨S⟩ (mode `Full`) or bracket subgroup [S]
/// (mode `Bracket`) of a nonempty set. The result is verified stable before
/// being returned; failure there would be an internal bug.
pub fn generated_stable_subgroup(
    g: &GroupWithOperators,
    set: &[u16],
    mode: GenerationMode,
) -> Result<Subgroup> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let seed: Vec<u16> = match mode {
        GenerationMode::Full => stable_closure(g, set)?,
        GenerationMode::Bracket => {
            // All images under at least one operator: saturate A·S under A.
            let first: Vec<u16> = {
                let mut v: Vec<u16> = set
                    .iter()
                    .flat_map(|&s| g.ops().iter().map(move |a| g.act(a, s)))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            stable_closure(g, &first)?
        }
    };
    let span = z_span(g, &seed);
    span.verify(g).expect("span of a stable set is a stable subgroup");
    Ok(span)
}

/// Outcome of the s-unitality analysis of one structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunitalityReport {
    pub s_unital: bool,
    /// Least element b with b ∉ A·b, if any.
    pub s_unital_witness: Option<u16>,
    pub weakly_s_unital: bool,
    /// Least element b with b ∉ [b], if any.
    pub weak_witness: Option<u16>,
    /// Cross-check: weak s-unitality must coincide with ⟨S⟩ = [S] holding for
    /// every nonempty S (all singletons always; every subset when |B| ≤ 16).
    pub span_equivalence_ok: bool,
}

/// Order gate below which the subset sweep in [`sunitality_report`] and the
/// subgroup enumeration oracle run exhaustively.
pub const EXHAUSTIVE_ORDER_GATE: usize = 16;

/// Decides s-unitality (b ∈ A·b for all b) and weak s-unitality (b ∈ [b]
/// for all b), and cross-checks the latter against the span criterion
/// "⟨S⟩ = [S] for every nonempty S".
pub fn sunitality_report(g: &GroupWithOperators) -> SunitalityReport {
    let s_unital_witness =
        g.group().elements().find(|&b| !g.orbit_of(b).contains(&b));
    let weak_witness = g.group().elements().find(|&b| {
        !generated_stable_subgroup(g, &[b], GenerationMode::Bracket)
            .expect("singleton is nonempty")
            .contains(b)
    });

    let mut singleton_spans_equal = true;
    for b in g.group().elements() {
        let full = generated_stable_subgroup(g, &[b], GenerationMode::Full).unwrap();
        let bracket = generated_stable_subgroup(g, &[b], GenerationMode::Bracket).unwrap();
        if full != bracket {
            singleton_spans_equal = false;
            break;
        }
    }
    let mut spans_equal = singleton_spans_equal;
    let n = g.group().order();
    if spans_equal && n <= EXHAUSTIVE_ORDER_GATE {
        'subsets: for mask in 1u32..(1u32 << n) {
            let set: Vec<u16> = (0..n as u16).filter(|&i| mask >> i & 1 == 1).collect();
            let full = generated_stable_subgroup(g, &set, GenerationMode::Full).unwrap();
            let bracket = generated_stable_subgroup(g, &set, GenerationMode::Bracket).unwrap();
            if full != bracket {
                spans_equal = false;
                break 'subsets;
            }
        }
    }

    SunitalityReport {
        s_unital: s_unital_witness.is_none(),
        s_unital_witness,
        weakly_s_unital: weak_witness.is_none(),
        weak_witness,
        span_equivalence_ok: spans_equal == weak_witness.is_none(),
    }
}

/// Enumerates every subgroup of the underlying group (ignoring the action).
/// Gated: returns `None` when the order exceeds `gate` (use
/// [`EXHAUSTIVE_ORDER_GATE`] for the default desk scale).
pub fn enumerate_subgroups(g: &GroupWithOperators, gate: usize) -> Option<Vec<Subgroup>> {
    let n = g.group().order();
    if n > gate || n > 31 {
        return None;
    }
    let grp = g.group();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask >> grp.zero() & 1 == 0 {
            continue;
        }
        let members: Vec<u16> = (0..n as u16).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = members.iter().all(|&b| {
            mask >> grp.neg(b) & 1 == 1
                && members.iter().all(|&c| mask >> grp.add(b, c) & 1 == 1)
        });
        if closed {
            out.push(Subgroup::from_sorted(members));
        }
    }
    Some(out)
}

/// Enumerates the stable subgroups, via [`enumerate_subgroups`].
pub fn enumerate_stable_subgroups(g: &GroupWithOperators, gate: usize) -> Option<Vec<Subgroup>> {
    enumerate_subgroups(g, gate).map(|subs| {
        subs.into_iter().filter(|s| s.verify(g).is_ok()).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::FiniteAbelianGroup;

    fn inversion(n: u32) -> GroupWithOperators {
        let g = FiniteAbelianGroup::cyclic(n);
        let act: Vec<u16> = g.elements().map(|b| g.neg(b)).collect();
        GroupWithOperators::new(g, vec!["a".into()], None, vec![act]).unwrap()
    }

    fn zero_action(n: u32) -> GroupWithOperators {
        let g = FiniteAbelianGroup::cyclic(n);
        GroupWithOperators::new(g, vec![], None, vec![]).unwrap()
    }

    #[test]
    fn stable_closure_inversion() {
        let g = inversion(3);
        assert_eq!(stable_closure(&g, &[1]).unwrap(), vec![0, 1, 2]);
        assert_eq!(stable_closure(&g, &[0]).unwrap(), vec![0]);
        assert_eq!(stable_closure(&g, &[]).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn generated_full_vs_bracket_zero_action() {
        let g = zero_action(3);
        let full = generated_stable_subgroup(&g, &[1], GenerationMode::Full).unwrap();
        let bracket = generated_stable_subgroup(&g, &[1], GenerationMode::Bracket).unwrap();
        assert_eq!(full.members(), &[0, 1, 2]);
        assert_eq!(bracket.members(), &[0]);
    }

    #[test]
    fn generated_equals_least_stable_subgroup_containing_set() {
        // Oracle: intersect all stable subgroups containing S.
        for g in [inversion(4), inversion(6), zero_action(4)] {
            let stable = enumerate_stable_subgroups(&g, 16).unwrap();
            let n = g.group().order();
            for mask in 1u32..(1u32 << n) {
                let set: Vec<u16> = (0..n as u16).filter(|&i| mask >> i & 1 == 1).collect();
                let gen = generated_stable_subgroup(&g, &set, GenerationMode::Full).unwrap();
                let least: Vec<u16> = (0..n as u16)
                    .filter(|&b| {
                        stable
                            .iter()
                            .filter(|s| set.iter().all(|&x| s.contains(x)))
                            .all(|s| s.contains(b))
                    })
                    .collect();
                assert_eq!(gen.members(), &least[..]);
            }
        }
    }

    #[test]
    fn sunitality_of_inversion_depends_on_exponent() {
        // Inversion is weakly s-unital everywhere, s-unital iff 2b = 0 for all b.
        let r2 = sunitality_report(&inversion(2));
        assert!(r2.s_unital && r2.weakly_s_unital && r2.span_equivalence_ok);

        let r3 = sunitality_report(&inversion(3));
        assert!(!r3.s_unital && r3.weakly_s_unital && r3.span_equivalence_ok);
        assert_eq!(r3.s_unital_witness, Some(1)); // A·1 = {0, 2}

        let rz = sunitality_report(&zero_action(3));
        assert!(!rz.s_unital && !rz.weakly_s_unital && rz.span_equivalence_ok);
        assert_eq!(rz.weak_witness, Some(1)); // [1] = {0}
    }

    #[test]
    fn subgroup_enumeration_counts() {
        // Z/6 has subgroups of orders 1, 2, 3, 6; Z/2 x Z/2 has five subgroups.
        let z6 = inversion(6);
        assert_eq!(enumerate_subgroups(&z6, 16).unwrap().len(), 4);
        let g = FiniteAbelianGroup::cyclic_product(&[2, 2]);
        let act: Vec<u16> = g.elements().map(|b| g.neg(b)).collect();
        let v4 = GroupWithOperators::new(g, vec!["a".into()], None, vec![act]).unwrap();
        assert_eq!(enumerate_subgroups(&v4, 16).unwrap().len(), 5);
        assert!(enumerate_subgroups(&z6, 4).is_none());
    }
}
