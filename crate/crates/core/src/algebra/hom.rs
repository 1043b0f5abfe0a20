//! Maps between groups with operators: additivity, A-stability, twisting,
//! and the ascending kernel chain of an endomorphism.

use crate::algebra::structure::GroupWithOperators;
use crate::algebra::subgroup::Subgroup;
use crate::error::{Error, Result};

/// A map between two structures over the same operator set, given by a total
/// table on the source. Nothing about the map is presumed; predicates report.
#[derive(Debug, Clone)]
pub struct GroupHom {
    pub map: Vec<u16>,
}

impl GroupHom {
    pub fn new(source: &GroupWithOperators, target: &GroupWithOperators, map: Vec<u16>) -> Result<Self> {
        if source.ops() != target.ops() {
            return Err(Error::MismatchedOperators(format!(
                "[{}] vs [{}]",
                source.ops().names().join(", "),
                target.ops().names().join(", ")
            )));
        }
        assert_eq!(map.len(), source.group().order(), "map table shape mismatch");
        assert!(
            map.iter().all(|&x| (x as usize) < target.group().order()),
            "map entry out of range"
        );
        Ok(GroupHom { map })
    }

    #[inline]
    pub fn apply(&self, b: u16) -> u16 {
        self.map[b as usize]
    }
}

/// What [`hom_predicates`] found out about a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomReport {
    /// None when additive, otherwise the least witness (b, c).
    pub additive_witness: Option<(u16, u16)>,
    /// None when f(A·b) ⊆ A·f(b) for all b, otherwise the least (a, b).
    pub a_stable_witness: Option<(u16, u16)>,
    /// For a supplied τ: None when f(a·b) = τ(a)·f(b) always, else least (a, b).
    pub tau_twisted_witness: Option<Option<(u16, u16)>>,
    /// τ-twisted must imply A-stable; recorded so a violation (an internal
    /// bug) surfaces in reports rather than silently.
    pub twist_implies_stable_ok: bool,
}

impl HomReport {
    pub fn additive(&self) -> bool {
        self.additive_witness.is_none()
    }
    pub fn a_stable(&self) -> bool {
        self.a_stable_witness.is_none()
    }
    pub fn tau_twisted(&self) -> Option<bool> {
        self.tau_twisted_witness.as_ref().map(|w| w.is_none())
    }
}

/// Tests a map for additivity, A-stability, and (when `tau` maps operators to
/// operators) τ-twisting f(a·b) = τ(a)·f(b).
pub fn hom_predicates(
    source: &GroupWithOperators,
    target: &GroupWithOperators,
    f: &GroupHom,
    tau: Option<&[u16]>,
) -> HomReport {
    let sg = source.group();
    let mut additive_witness = None;
    'add: for b in sg.elements() {
        for c in sg.elements() {
            if f.apply(sg.add(b, c)) != target.group().add(f.apply(b), f.apply(c)) {
                additive_witness = Some((b, c));
                break 'add;
            }
        }
    }

    let mut a_stable_witness = None;
    'stable: for b in sg.elements() {
        let allowed = target.orbit_of(f.apply(b));
        for a in source.ops().iter() {
            if !allowed.contains(&f.apply(source.act(a, b))) {
                a_stable_witness = Some((a, b));
                break 'stable;
            }
        }
    }

    let tau_twisted_witness = tau.map(|t| {
        assert_eq!(t.len(), source.ops().len(), "tau table shape mismatch");
        for a in source.ops().iter() {
            for b in sg.elements() {
                if f.apply(source.act(a, b)) != target.act(t[a as usize], f.apply(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    });

    let twisted = tau_twisted_witness.as_ref().map(|w| w.is_none()).unwrap_or(false);
    HomReport {
        additive_witness,
        a_stable_witness,
        tau_twisted_witness,
        twist_implies_stable_ok: !twisted || a_stable_witness.is_none(),
    }
}

/// Kernel chain analysis of an additive, A-stable endomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelChainReport {
    /// Kernels ker(f), ker(f²), … up to and including the first repeat.
    pub kernels: Vec<Subgroup>,
    /// Least n ≥ 1 with ker(fⁿ) = ker(fⁿ⁺¹).
    pub n_stable: usize,
    /// Whether every kernel in the chain is a stable subgroup (a theorem for
    /// A-stable additive maps; recorded so violations surface).
    pub kernels_stable_ok: bool,
    /// Whether ker(fⁿ) ∩ im(fⁿ) = {0} at the stabilization index.
    pub kernel_image_disjoint_ok: bool,
    pub surjective: bool,
    /// `Some(true)` when f is surjective and therefore bijective.
    pub bijective: Option<bool>,
}

/// Computes the ascending chain ker(f) ⊆ ker(f²) ⊆ … of an endomorphism of
/// `g` until it stabilizes. Requires f additive and A-stable.
pub fn kernel_chain_analysis(g: &GroupWithOperators, f: &GroupHom) -> Result<KernelChainReport> {
    let report = hom_predicates(g, g, f, None);
    if let Some((b, c)) = report.additive_witness {
        return Err(Error::NotAdditive {
            b: g.group().name(b).to_owned(),
            c: g.group().name(c).to_owned(),
        });
    }
    if let Some((a, b)) = report.a_stable_witness {
        return Err(Error::NotAStable {
            op: g.ops().name(a).to_owned(),
            b: g.group().name(b).to_owned(),
        });
    }

    let grp = g.group();
    let kernel_of = |power: &[u16]| -> Subgroup {
        Subgroup::from_sorted(
            grp.elements().filter(|&b| power[b as usize] == grp.zero()).collect(),
        )
    };

    let mut power: Vec<u16> = f.map.clone();
    let mut kernels = vec![kernel_of(&power)];
    let n_stable = loop {
        let next: Vec<u16> = power.iter().map(|&x| f.apply(x)).collect();
        let k = kernel_of(&next);
        let stabilized = k == *kernels.last().unwrap();
        kernels.push(k);
        power = next;
        if stabilized {
            break kernels.len() - 1;
        }
    };
    // `power` is now f^(n_stable + 1); recompute f^n_stable for the
    // disjointness check.
    let mut fn_stable: Vec<u16> = grp.elements().collect();
    for _ in 0..n_stable {
        fn_stable = fn_stable.iter().map(|&x| f.apply(x)).collect();
    }
    let kn = &kernels[n_stable - 1];
    let mut image: Vec<u16> = fn_stable.clone();
    image.sort_unstable();
    image.dedup();
    let kernel_image_disjoint_ok =
        image.iter().filter(|&&y| kn.contains(y)).all(|&y| y == grp.zero());

    let kernels_stable_ok = kernels.iter().all(|k| k.verify(g).is_ok());

    let mut im1: Vec<u16> = f.map.clone();
    im1.sort_unstable();
    im1.dedup();
    let surjective = im1.len() == grp.order();
    let bijective = surjective.then(|| kernels[0].len() == 1);

    Ok(KernelChainReport {
        kernels,
        n_stable,
        kernels_stable_ok,
        kernel_image_disjoint_ok,
        surjective,
        bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::FiniteAbelianGroup;

    fn zero_action(n: u32) -> GroupWithOperators {
        let g = FiniteAbelianGroup::cyclic(n);
        GroupWithOperators::new(g, vec![], None, vec![]).unwrap()
    }

    fn mult_action(n: u32) -> GroupWithOperators {
        let g = FiniteAbelianGroup::cyclic(n);
        let names = (0..n).map(|i| i.to_string()).collect();
        let action = (0..n as u16)
            .map(|a| (0..n as u16).map(|b| ((a as u32 * b as u32) % n) as u16).collect())
            .collect();
        GroupWithOperators::new(g, names, Some("0"), action).unwrap()
    }

    #[test]
    fn doubling_on_z6_stabilizes_at_one() {
        let g = zero_action(6);
        let f = GroupHom::new(&g, &g, (0..6).map(|b| (2 * b) % 6).collect()).unwrap();
        let r = kernel_chain_analysis(&g, &f).unwrap();
        assert_eq!(r.n_stable, 1);
        assert_eq!(r.kernels[0].members(), &[0, 3]);
        assert!(r.kernels_stable_ok && r.kernel_image_disjoint_ok);
        assert!(!r.surjective && r.bijective.is_none());
    }

    #[test]
    fn doubling_on_z8_climbs_three_steps() {
        let g = zero_action(8);
        let f = GroupHom::new(&g, &g, (0..8).map(|b| (2 * b) % 8).collect()).unwrap();
        let r = kernel_chain_analysis(&g, &f).unwrap();
        assert_eq!(r.n_stable, 3);
        assert_eq!(r.kernels[0].len(), 2);
        assert_eq!(r.kernels[2].len(), 8);
        assert!(r.kernel_image_disjoint_ok);
    }

    #[test]
    fn surjective_endomorphism_is_bijective() {
        let g = zero_action(5);
        let f = GroupHom::new(&g, &g, (0..5).map(|b| (3 * b) % 5).collect()).unwrap();
        let r = kernel_chain_analysis(&g, &f).unwrap();
        assert_eq!(r.n_stable, 1);
        assert_eq!(r.bijective, Some(true));
    }

    #[test]
    fn twisted_implies_stable() {
        // On Z/5 with the multiplication action, f = x3 is tau-twisted for
        // tau = identity on operators: f(a·b) = 3ab = a·f(b).
        let g = mult_action(5);
        let f = GroupHom::new(&g, &g, (0..5).map(|b| (3 * b) % 5).collect()).unwrap();
        let tau: Vec<u16> = g.ops().iter().collect();
        let r = hom_predicates(&g, &g, &f, Some(&tau));
        assert!(r.additive());
        assert_eq!(r.tau_twisted(), Some(true));
        assert!(r.a_stable() && r.twist_implies_stable_ok);
    }

    #[test]
    fn non_additive_map_rejected() {
        let g = zero_action(4);
        let f = GroupHom::new(&g, &g, vec![0, 1, 3, 2]).unwrap();
        assert!(matches!(
            kernel_chain_analysis(&g, &f).unwrap_err(),
            Error::NotAdditive { .. }
        ));
    }
}
