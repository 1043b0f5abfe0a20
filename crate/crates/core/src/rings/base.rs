//! Axiom-free finite rings and left modules.
//!
//! A ring here is an additive group with a total multiplication table and
//! nothing else: associativity, distributivity, and units are properties
//! to report, never assumptions. A left module is likewise just an action
//! table over such a ring. The property report evaluates every predicate
//! exhaustively and cross-checks the weak s-unitality answer against the
//! group-with-operators reading whenever that reading exists.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{
    generated_stable_subgroup, FiniteAbelianGroup, GenerationMode, GroupWithOperators,
};
use crate::error::{Error, Result};

/// A finite additive group with a total multiplication table. No
/// multiplicative axiom is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    addgroup: FiniteAbelianGroup,
    /// mul[r][s] = r·s
    mul: Vec<Vec<u16>>,
}

impl FiniteRing {
    pub fn new(addgroup: FiniteAbelianGroup, mul: Vec<Vec<u16>>) -> Result<Self> {
        let n = addgroup.order();
        if mul.len() != n
            || mul.iter().any(|row| row.len() != n || row.iter().any(|&x| x as usize >= n))
        {
            return Err(Error::BadParams("multiplication table shape or range".into()));
        }
        Ok(FiniteRing { addgroup, mul })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.addgroup
    }

    pub fn order(&self) -> usize {
        self.addgroup.order()
    }

    pub fn mul(&self, r: u16, s: u16) -> u16 {
        self.mul[r as usize][s as usize]
    }

    pub fn mul_table(&self) -> &[Vec<u16>] {
        &self.mul
    }

    /// Reads the ring as a left module over itself.
    pub fn as_self_module(&self) -> LeftModule {
        LeftModule {
            ring: self.clone(),
            addgroup: self.addgroup.clone(),
            act: self.mul.clone(),
        }
    }
}

/// A finite additive group with a ring acting on the left through a total
/// table. No module axiom is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftModule {
    ring: FiniteRing,
    addgroup: FiniteAbelianGroup,
    /// act[r][m] = r·m
    act: Vec<Vec<u16>>,
}

impl LeftModule {
    pub fn new(ring: FiniteRing, addgroup: FiniteAbelianGroup, act: Vec<Vec<u16>>) -> Result<Self> {
        if act.len() != ring.order()
            || act
                .iter()
                .any(|row| row.len() != addgroup.order()
                    || row.iter().any(|&x| (x as usize) >= addgroup.order()))
        {
            return Err(Error::BadParams("action table shape or range".into()));
        }
        Ok(LeftModule { ring, addgroup, act })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.addgroup
    }

    pub fn act(&self, r: u16, m: u16) -> u16 {
        self.act[r as usize][m as usize]
    }

    pub fn act_table(&self) -> &[Vec<u16>] {
        &self.act
    }

    /// The group-with-operators reading: ring elements as operators on the
    /// module group. Exists exactly when the action is left distributive
    /// (every row additive); a zero operator is reused if some ring element
    /// already acts as zero and adjoined under a fresh name otherwise.
    pub fn to_group_with_operators(&self) -> Result<GroupWithOperators> {
        let zero_row = (0..self.ring.order() as u16)
            .find(|&r| self.act[r as usize].iter().all(|&m| m == self.addgroup.zero()));
        let mut names: Vec<String> = self.ring.group().names().to_vec();
        let mut action = self.act.clone();
        let zero_name = match zero_row {
            Some(r) => names[r as usize].clone(),
            None => {
                let mut fresh = "eps".to_owned();
                while names.iter().any(|n| n == &fresh) {
                    fresh.push('*');
                }
                names.push(fresh.clone());
                action.push(vec![self.addgroup.zero(); self.addgroup.order()]);
                fresh
            }
        };
        GroupWithOperators::new(self.addgroup.clone(), names, Some(&zero_name), action).map_err(
            |e| match e {
                Error::NotEndomorphism { op, b, c } => {
                    Error::NotLeftDistributive { r: op, m: b, n: c }
                }
                other => other,
            },
        )
    }
}

/// One property verdict: holds, fails with a witness, or was not evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "witness")]
pub enum TriState {
    Holds,
    Fails(Vec<String>),
    Skipped,
}

impl TriState {
    pub fn holds(&self) -> bool {
        matches!(self, TriState::Holds)
    }

    pub(crate) fn from_witness(w: Option<Vec<String>>) -> TriState {
        match w {
            None => TriState::Holds,
            Some(w) => TriState::Fails(w),
        }
    }
}

/// Exhaustive evaluation of the module-layer predicates, each with a
/// concrete witness on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    /// (rs)m = r(sm) for all r, s, m.
    pub associative: TriState,
    /// r(m + n) = rm + rn for all r, m, n.
    pub left_distributive: TriState,
    /// (r + s)m = rm + sm for all r, s, m.
    pub right_distributive: TriState,
    /// Some e with em = m for every m.
    pub left_unital: TriState,
    /// Some e with me = m for every m (only meaningful when the module is
    /// the ring itself; reported symmetrically for completeness).
    pub right_unital: TriState,
    /// Every m satisfies m ∈ Rm.
    pub s_unital: TriState,
    /// Every m lies in the span of its iterated images Σ_{n≥1} ℤ(Rⁿm).
    pub weakly_s_unital: TriState,
    /// All left identities, by name.
    pub left_identities: Vec<String>,
    /// All right identities, by name.
    pub right_identities: Vec<String>,
    /// Whether the direct weak-s-unitality computation agreed with the
    /// bracket-generation route over the group-with-operators reading;
    /// `None` when the action is not left distributive (no such reading).
    pub bracket_route_agrees: Option<bool>,
}

fn span_in_group(g: &FiniteAbelianGroup, set: &BTreeSet<u16>) -> BTreeSet<u16> {
    let mut span: BTreeSet<u16> = [g.zero()].into();
    for &s in set {
        if span.contains(&s) {
            continue;
        }
        let mut next = span.clone();
        for &h in &span {
            let mut m = s;
            while m != g.zero() {
                next.insert(g.add(h, m));
                m = g.add(m, s);
            }
        }
        span = next;
    }
    span
}

/// Evaluates every predicate of [`PropertyReport`] over a left module.
pub fn module_property_report(module: &LeftModule) -> PropertyReport {
    let ring = module.ring();
    let rg = ring.group();
    let mg = module.group();
    let relems = || rg.elements();
    let melems = || mg.elements();

    let associative = TriState::from_witness(relems().find_map(|r| {
        relems().find_map(|s| {
            melems().find(|&m| module.act(ring.mul(r, s), m) != module.act(r, module.act(s, m)))
                .map(|m| vec![rg.name(r).into(), rg.name(s).into(), mg.name(m).into()])
        })
    }));

    let left_distributive = TriState::from_witness(relems().find_map(|r| {
        melems().find_map(|m| {
            melems()
                .find(|&n| {
                    module.act(r, mg.add(m, n)) != mg.add(module.act(r, m), module.act(r, n))
                })
                .map(|n| vec![rg.name(r).into(), mg.name(m).into(), mg.name(n).into()])
        })
    }));

    let right_distributive = TriState::from_witness(relems().find_map(|r| {
        relems().find_map(|s| {
            melems()
                .find(|&m| {
                    module.act(rg.add(r, s), m) != mg.add(module.act(r, m), module.act(s, m))
                })
                .map(|m| vec![rg.name(r).into(), rg.name(s).into(), mg.name(m).into()])
        })
    }));

    let left_identities: Vec<u16> =
        relems().filter(|&e| melems().all(|m| module.act(e, m) == m)).collect();
    let left_unital = if left_identities.is_empty() {
        // Refute every candidate: the witness lists each ring element
        // followed by the least module element it fails to fix.
        let w = relems()
            .flat_map(|e| {
                let m =
                    melems().find(|&m| module.act(e, m) != m).expect("candidate was refuted");
                [rg.name(e).to_owned(), mg.name(m).to_owned()]
            })
            .collect();
        TriState::Fails(w)
    } else {
        TriState::Holds
    };

    // The symmetric check only types when module elements can sit on the
    // right of the ring product, i.e. when the module is the ring itself.
    let (right_unital, right_identities) = if module.act_table() == ring.mul_table() {
        let idents: Vec<u16> =
            relems().filter(|&e| relems().all(|m| ring.mul(m, e) == m)).collect();
        let state = if idents.is_empty() {
            // Prefer an element that no candidate fixes; otherwise pin the
            // least candidate with its least counterexample.
            let w = relems()
                .find(|&m| relems().all(|e| ring.mul(m, e) != m))
                .map(|m| vec![rg.name(m).into()])
                .unwrap_or_else(|| {
                    let m = relems().find(|&m| ring.mul(m, 0) != m).expect("candidate 0 fails");
                    vec![rg.name(0).into(), rg.name(m).into()]
                });
            TriState::Fails(w)
        } else {
            TriState::Holds
        };
        (state, idents)
    } else {
        (TriState::Skipped, Vec::new())
    };

    let s_unital = TriState::from_witness(
        melems()
            .find(|&m| !relems().any(|r| module.act(r, m) == m))
            .map(|m| vec![mg.name(m).into()]),
    );

    // Direct module-sense weak s-unitality: m ∈ span of ∪_{n≥1} Rⁿm.
    let direct_ok: Vec<bool> = melems()
        .map(|m| {
            let mut layer: BTreeSet<u16> = [m].into();
            let mut seen: BTreeSet<u16> = BTreeSet::new();
            loop {
                layer = layer
                    .iter()
                    .copied()
                    .flat_map(|x| relems().map(move |r| module.act(r, x)))
                    .collect();
                let before = seen.len();
                seen.extend(layer.iter().copied());
                if seen.len() == before {
                    break;
                }
            }
            span_in_group(mg, &seen).contains(&m)
        })
        .collect();
    let weak_witness = direct_ok.iter().position(|&ok| !ok).map(|i| i as u16);
    let weakly_s_unital =
        TriState::from_witness(weak_witness.map(|m| vec![mg.name(m).into()]));

    let bracket_route_agrees = module.to_group_with_operators().ok().map(|gw| {
        mg.elements().all(|m| {
            let bracket_ok = generated_stable_subgroup(&gw, &[m], GenerationMode::Bracket)
                .expect("singleton generator")
                .contains(m);
            bracket_ok == direct_ok[m as usize]
        })
    });

    PropertyReport {
        associative,
        left_distributive,
        right_distributive,
        left_unital,
        right_unital,
        s_unital,
        weakly_s_unital,
        left_identities: left_identities.iter().map(|&e| rg.name(e).to_owned()).collect(),
        right_identities: right_identities.iter().map(|&e| rg.name(e).to_owned()).collect(),
        bracket_route_agrees,
    }
}

/// [`module_property_report`] for the ring read as a left module over
/// itself.
pub fn ring_property_report(ring: &FiniteRing) -> PropertyReport {
    module_property_report(&ring.as_self_module())
}

/// The adjoint map r ↦ zr − rz of a fixed ring element z, as a table.
pub fn adjoint_delta(ring: &FiniteRing, z: u16) -> Vec<u16> {
    let g = ring.group();
    (0..g.order() as u16).map(|r| g.sub(ring.mul(z, r), ring.mul(r, z))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_ring(p: u16) -> FiniteRing {
        let g = FiniteAbelianGroup::cyclic(p as u32);
        let mul: Vec<Vec<u16>> =
            (0..p).map(|r| (0..p).map(|s| (r * s) % p).collect()).collect();
        FiniteRing::new(g, mul).unwrap()
    }

    /// F₂ × F₂ with (r,s)(t,u) = (rt, ru): row-major index 2r + s.
    fn twisted_pair_ring() -> FiniteRing {
        let g = FiniteAbelianGroup::cyclic_product(&[2, 2]);
        let mul: Vec<Vec<u16>> = (0..4u16)
            .map(|x| {
                let r = x >> 1;
                (0..4u16)
                    .map(|y| {
                        let (t, u) = (y >> 1, y & 1);
                        ((r & t) << 1) | (r & u)
                    })
                    .collect()
            })
            .collect();
        FiniteRing::new(g, mul).unwrap()
    }

    #[test]
    fn a_field_has_every_property() {
        let report = ring_property_report(&field_ring(5));
        assert!(report.associative.holds());
        assert!(report.left_distributive.holds());
        assert!(report.right_distributive.holds());
        assert!(report.left_unital.holds());
        assert!(report.right_unital.holds());
        assert!(report.s_unital.holds());
        assert!(report.weakly_s_unital.holds());
        assert_eq!(report.left_identities, vec!["1"]);
        assert_eq!(report.bracket_route_agrees, Some(true));
    }

    #[test]
    fn twisted_pair_is_left_but_not_right_unital() {
        let report = ring_property_report(&twisted_pair_ring());
        assert!(report.associative.holds());
        assert!(report.left_distributive.holds());
        assert!(report.right_distributive.holds());
        assert!(report.left_unital.holds());
        assert_eq!(report.left_identities, vec!["(1,0)", "(1,1)"]);
        assert_eq!(report.right_unital, TriState::Fails(vec!["(0,1)".into()]));
        assert!(report.right_identities.is_empty());
        assert!(report.s_unital.holds());
        assert!(report.weakly_s_unital.holds());
        assert_eq!(report.bracket_route_agrees, Some(true));
    }

    #[test]
    fn zero_action_module_fails_weak_s_unitality() {
        let ring = field_ring(3);
        let g = FiniteAbelianGroup::cyclic(4);
        let act = vec![vec![0u16; 4]; 3];
        let module = LeftModule::new(ring, g, act).unwrap();
        let report = module_property_report(&module);
        assert_eq!(report.weakly_s_unital, TriState::Fails(vec!["1".into()]));
        assert_eq!(report.s_unital, TriState::Fails(vec!["1".into()]));
        assert!(report.left_distributive.holds());
        assert_eq!(report.right_unital, TriState::Skipped);
        assert_eq!(report.bracket_route_agrees, Some(true));
    }

    #[test]
    fn even_ideal_of_z4_is_s_unital_as_a_module() {
        // {0, 2} ⊆ ℤ/4 as a ℤ/4-module: 1·2 = 2, so every element is
        // reached by an odd scalar.
        let ring = FiniteRing::new(
            FiniteAbelianGroup::cyclic(4),
            (0..4u16).map(|r| (0..4).map(|s| (r * s) % 4).collect()).collect(),
        )
        .unwrap();
        let ideal = FiniteAbelianGroup::new(
            vec!["0".into(), "2".into()],
            vec![vec![0, 1], vec![1, 0]],
            vec![0, 1],
            0,
        )
        .unwrap();
        // act[r][m]: r · (ideal element) computed in ℤ/4, reindexed.
        let act: Vec<Vec<u16>> = (0..4u16)
            .map(|r| [0u16, 2].iter().map(|&m| (r * m % 4) / 2).collect())
            .collect();
        let module = LeftModule::new(ring, ideal, act).unwrap();
        let report = module_property_report(&module);
        assert!(report.s_unital.holds());
        assert!(report.weakly_s_unital.holds());
        assert!(report.associative.holds());
    }

    #[test]
    fn adjoint_delta_of_the_twisted_pair() {
        let ring = twisted_pair_ring();
        let one_one = 3u16;
        let table = adjoint_delta(&ring, one_one);
        // δ_{(1,1)}(r,s) = (1,1)(r,s) − (r,s)(1,1) = (r,s) − (r,r) = (0, s+r).
        assert_eq!(table, vec![0, 1, 1, 0]);
    }

    #[test]
    fn ring_without_any_zero_row_still_reads_as_operators() {
        // One-element additive group with the only product 0·0 = 0 is
        // degenerate; instead use a two-element ring whose both rows are
        // nonzero: r·s = s (left projection).
        let g = FiniteAbelianGroup::cyclic(2);
        let mul = vec![vec![0u16, 1], vec![0, 1]];
        let ring = FiniteRing::new(g, mul).unwrap();
        let gw = ring.as_self_module().to_group_with_operators().unwrap();
        assert_eq!(gw.ops().len(), 3);
        assert_eq!(gw.ops().name(gw.ops().zero_op()), "eps");
    }
}
