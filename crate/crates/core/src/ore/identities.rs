//! Exhaustive verification of the pi-map identities on a finite group.
//!
//! Everything here runs over all index tuples up to a caller-supplied bound
//! and over every group element, so a pass is a theorem about the structure
//! (for those indices) and a failure comes with the least witness in scan
//! order.

use crate::algebra::{FiniteAbelianGroup, GroupWithOperators};
use crate::check::{CheckOutcome, Witness};
use crate::error::{Error, Result};
use crate::ore::endo::{EndoPair, FormalPiWords, PiTriangle};

/// Checks the composition identity
/// `sum_i pi_i^k ( pi_{j-i}^n (b) ) = pi_j^{k+n} (b)`
/// for all `j, k, n <= max_index` and all `b`, together with the one-shift
/// special case `pi_{j-1}^k (sigma(b)) + pi_j^k (delta(b)) = pi_j^{k+1} (b)`
/// (with the convention that a pi-map with subscript `-1` is the zero map).
pub fn check_vandermonde(
    group: &FiniteAbelianGroup,
    pair: &EndoPair,
    max_index: u32,
) -> CheckOutcome {
    let sup = (2 * max_index).max(max_index + 1);
    let tri = PiTriangle::build(group, pair, sup);
    let n_elems = group.order() as u16;

    let mut checks = 0u64;
    for k in 0..=max_index {
        for n in 0..=max_index {
            for j in 0..=max_index {
                for b in 0..n_elems {
                    checks += 1;
                    let mut lhs = group.zero();
                    for i in 0..=j {
                        let inner = tri.apply(n, j as i64 - i as i64, b);
                        lhs = group.add(lhs, tri.apply(k, i as i64, inner));
                    }
                    let rhs = tri.apply(k + n, j as i64, b);
                    if lhs != rhs {
                        return CheckOutcome::fail(
                            checks,
                            Witness::new(
                                "composition",
                                vec![
                                    format!("j={j}"),
                                    format!("k={k}"),
                                    format!("n={n}"),
                                    format!("b={}", group.name(b)),
                                ],
                            ),
                        );
                    }
                }
            }
        }
    }

    for k in 0..=max_index {
        for j in 0..=max_index {
            for b in 0..n_elems {
                checks += 1;
                let shifted = tri.apply(k, j as i64 - 1, pair.sigma(b));
                let lhs = group.add(shifted, tri.apply(k, j as i64, pair.delta(b)));
                let rhs = tri.apply(k + 1, j as i64, b);
                if lhs != rhs {
                    return CheckOutcome::fail(
                        checks,
                        Witness::new(
                            "one-shift",
                            vec![
                                format!("j={j}"),
                                format!("k={k}"),
                                format!("b={}", group.name(b)),
                            ],
                        ),
                    );
                }
            }
        }
    }

    CheckOutcome::pass(checks)
}

/// Whether the companion maps make `(sigma, delta)` compatible with the
/// action: `sigma(a.b) = sigma_a(a).sigma(b)` and
/// `delta(a.b) = sigma_a(a).delta(b) + delta_a(a).b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReport {
    /// First `(a, b)` with `sigma(a.b) != sigma_a(a).sigma(b)`, if any.
    pub sigma_twist_witness: Option<(u16, u16)>,
    /// First `(a, b)` with `delta(a.b) != sigma_a(a).delta(b) + delta_a(a).b`.
    pub delta_twist_witness: Option<(u16, u16)>,
}

impl TwistReport {
    pub fn sigma_twisted(&self) -> bool {
        self.sigma_twist_witness.is_none()
    }

    pub fn delta_compatible(&self) -> bool {
        self.delta_twist_witness.is_none()
    }

    pub fn all_hold(&self) -> bool {
        self.sigma_twisted() && self.delta_compatible()
    }
}

/// Evaluates both twist predicates. Fails with `MissingCompanionMaps` when
/// the pair carries no maps on the operator side.
pub fn twist_predicates(g: &GroupWithOperators, pair: &EndoPair) -> Result<TwistReport> {
    let (sigma_a, delta_a) = pair.companions().ok_or(Error::MissingCompanionMaps)?;
    let group = g.group();
    let n_ops = g.ops().len() as u16;
    let n_elems = group.order() as u16;

    let mut sigma_twist_witness = None;
    'sigma: for a in 0..n_ops {
        for b in 0..n_elems {
            let lhs = pair.sigma(g.act(a, b));
            let rhs = g.act(sigma_a[a as usize], pair.sigma(b));
            if lhs != rhs {
                sigma_twist_witness = Some((a, b));
                break 'sigma;
            }
        }
    }

    let mut delta_twist_witness = None;
    'delta: for a in 0..n_ops {
        for b in 0..n_elems {
            let lhs = pair.delta(g.act(a, b));
            let rhs = group.add(
                g.act(sigma_a[a as usize], pair.delta(b)),
                g.act(delta_a[a as usize], b),
            );
            if lhs != rhs {
                delta_twist_witness = Some((a, b));
                break 'delta;
            }
        }
    }

    Ok(TwistReport { sigma_twist_witness, delta_twist_witness })
}

/// Checks the Leibniz rule
/// `pi_i^m (a.b) = sum_k pi_k^m (a) . pi_i^k (b)`
/// and the mixed composition
/// `sum_i pi_i^m ( a . pi_{j-i}^n (b) ) = sum_i pi_i^m (a) . pi_j^{i+n} (b)`
/// for all indices up to `max_index`, all operators `a`, and all elements
/// `b`. The operator-side factors `pi_k^m (a)` are formal sums of words in
/// `sigma_a` and `delta_a` and are evaluated against the target element.
///
/// Both identities require the twist predicates, so this returns
/// `HypothesisNotMet` when either fails.
pub fn check_leibniz_mixed(
    g: &GroupWithOperators,
    pair: &EndoPair,
    max_index: u32,
) -> Result<CheckOutcome> {
    let twists = twist_predicates(g, pair)?;
    if let Some((a, b)) = twists.sigma_twist_witness {
        return Err(Error::HypothesisNotMet {
            what: "sigma is not twisted by its companion map".into(),
            witness: vec![g.ops().name(a).to_string(), g.group().name(b).to_string()],
        });
    }
    if let Some((a, b)) = twists.delta_twist_witness {
        return Err(Error::HypothesisNotMet {
            what: "delta is not a twisted derivation over the action".into(),
            witness: vec![g.ops().name(a).to_string(), g.group().name(b).to_string()],
        });
    }

    let (sigma_a, delta_a) = pair.companions().expect("twist check already required companions");
    let group = g.group();
    let tri = PiTriangle::build(group, pair, 2 * max_index);
    let n_ops = g.ops().len() as u16;
    let n_elems = group.order() as u16;

    // Formal word sums for every superscript/subscript pair we will need.
    let words: Vec<Vec<FormalPiWords>> = (0..=max_index)
        .map(|m| (0..=m).map(|k| FormalPiWords::new(m, k)).collect())
        .collect();

    let mut checks = 0u64;

    // Leibniz rule.
    for m in 0..=max_index {
        for i in 0..=m {
            for a in 0..n_ops {
                for b in 0..n_elems {
                    checks += 1;
                    let lhs = tri.apply(m, i as i64, g.act(a, b));
                    let mut rhs = group.zero();
                    for k in i..=m {
                        let factor = tri.apply(k, i as i64, b);
                        let part =
                            words[m as usize][k as usize].eval_on(a, factor, sigma_a, delta_a, g);
                        rhs = group.add(rhs, part);
                    }
                    if lhs != rhs {
                        return Ok(CheckOutcome::fail(
                            checks,
                            Witness::new(
                                "leibniz",
                                vec![
                                    format!("m={m}"),
                                    format!("i={i}"),
                                    format!("a={}", g.ops().name(a)),
                                    format!("b={}", group.name(b)),
                                ],
                            ),
                        ));
                    }
                }
            }
        }
    }

    // Mixed composition.
    for m in 0..=max_index {
        for n in 0..=max_index {
            for j in 0..=max_index {
                for a in 0..n_ops {
                    for b in 0..n_elems {
                        checks += 1;
                        let mut lhs = group.zero();
                        for i in 0..=j.min(m) {
                            let inner = g.act(a, tri.apply(n, j as i64 - i as i64, b));
                            lhs = group.add(lhs, tri.apply(m, i as i64, inner));
                        }
                        let mut rhs = group.zero();
                        for i in 0..=m {
                            let factor = tri.apply(i + n, j as i64, b);
                            let part = words[m as usize][i as usize]
                                .eval_on(a, factor, sigma_a, delta_a, g);
                            rhs = group.add(rhs, part);
                        }
                        if lhs != rhs {
                            return Ok(CheckOutcome::fail(
                                checks,
                                Witness::new(
                                    "mixed",
                                    vec![
                                        format!("m={m}"),
                                        format!("n={n}"),
                                        format!("j={j}"),
                                        format!("a={}", g.ops().name(a)),
                                        format!("b={}", group.name(b)),
                                    ],
                                ),
                            ));
                        }
                    }
                }
            }
        }
    }

    Ok(CheckOutcome::pass(checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteAbelianGroup;

    fn mult_action_5() -> (GroupWithOperators, EndoPair) {
        // Z/5 acted on by its own elements through multiplication, with
        // sigma = x2 and delta = x3 on the group side and identity/zero
        // companions on the operator side (both are central, so the twists
        // hold).
        let g = FiniteAbelianGroup::cyclic(5);
        let names: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let action: Vec<Vec<u16>> = (0..5u16)
            .map(|a| (0..5u16).map(|b| (a * b) % 5).collect())
            .collect();
        let gwo = GroupWithOperators::new(g.clone(), names, Some("0"), action).unwrap();
        let sigma: Vec<u16> = (0..5u16).map(|b| (2 * b) % 5).collect();
        let delta: Vec<u16> = (0..5u16).map(|b| (3 * b) % 5).collect();
        let sigma_a: Vec<u16> = (0..5).collect();
        let delta_a: Vec<u16> = vec![0; 5];
        let pair = EndoPair::new(&g, sigma, delta)
            .unwrap()
            .with_companions(gwo.ops().len(), sigma_a, delta_a);
        (gwo, pair)
    }

    #[test]
    fn vandermonde_holds_for_mult_action_5() {
        let (gwo, pair) = mult_action_5();
        let outcome = check_vandermonde(gwo.group(), &pair, 4);
        assert!(outcome.passed(), "witness: {:?}", outcome.witness);
        assert!(outcome.checks > 0);
    }

    #[test]
    fn vandermonde_holds_on_product_group() {
        let g = FiniteAbelianGroup::cyclic_product(&[2, 4]);
        // sigma(x, y) = (x, -y) and delta(x, y) = (0, 2y), both additive.
        let mut sigma = vec![0u16; g.order()];
        let mut delta = vec![0u16; g.order()];
        for x in 0..2u16 {
            for y in 0..4u16 {
                let idx = (x * 4 + y) as usize;
                sigma[idx] = x * 4 + ((4 - y) % 4);
                delta[idx] = (2 * y) % 4;
            }
        }
        let pair = EndoPair::new(&g, sigma, delta).unwrap();
        let outcome = check_vandermonde(&g, &pair, 3);
        assert!(outcome.passed(), "witness: {:?}", outcome.witness);
    }

    #[test]
    fn check_counts_cover_both_identity_families() {
        let (gwo, pair) = mult_action_5();
        let outcome = check_vandermonde(gwo.group(), &pair, 1);
        // j, k, n in {0, 1}: 8 composition tuples and 4 one-shift tuples,
        // each over 5 elements.
        assert_eq!(outcome.checks, (8 + 4) * 5);
    }

    #[test]
    fn twists_hold_for_mult_action_5() {
        let (gwo, pair) = mult_action_5();
        let report = twist_predicates(&gwo, &pair).unwrap();
        assert!(report.all_hold());
    }

    #[test]
    fn twist_failure_is_witnessed() {
        // Same action but claim sigma_a = identity while sigma = x2 twists
        // the action only against sigma_a = x1 ... actually sigma(a.b) =
        // 2ab and sigma_a(a).sigma(b) = a.(2b) = 2ab, so identity works;
        // break it by declaring sigma_a = x2 as well: then rhs = 4ab.
        let (gwo, _) = mult_action_5();
        let g = gwo.group().clone();
        let sigma: Vec<u16> = (0..5u16).map(|b| (2 * b) % 5).collect();
        let delta: Vec<u16> = (0..5u16).map(|b| (3 * b) % 5).collect();
        let sigma_a: Vec<u16> = (0..5u16).map(|a| (2 * a) % 5).collect();
        let delta_a: Vec<u16> = vec![0; 5];
        let pair = EndoPair::new(&g, sigma, delta)
            .unwrap()
            .with_companions(gwo.ops().len(), sigma_a, delta_a);
        let report = twist_predicates(&gwo, &pair).unwrap();
        // Least failing pair: a = 1, b = 1 gives lhs 2, rhs 4.
        assert_eq!(report.sigma_twist_witness, Some((1, 1)));
        assert!(!report.all_hold());
    }

    #[test]
    fn missing_companions_is_an_error() {
        let (gwo, _) = mult_action_5();
        let pair = EndoPair::trivial(gwo.group());
        assert!(matches!(
            twist_predicates(&gwo, &pair),
            Err(Error::MissingCompanionMaps)
        ));
    }

    #[test]
    fn leibniz_and_mixed_hold_for_mult_action_5() {
        let (gwo, pair) = mult_action_5();
        let outcome = check_leibniz_mixed(&gwo, &pair, 3).unwrap();
        assert!(outcome.passed(), "witness: {:?}", outcome.witness);
    }

    #[test]
    fn leibniz_gates_on_twists() {
        let (gwo, _) = mult_action_5();
        let g = gwo.group().clone();
        let sigma: Vec<u16> = (0..5u16).map(|b| (2 * b) % 5).collect();
        let delta: Vec<u16> = (0..5u16).map(|b| (3 * b) % 5).collect();
        let sigma_a: Vec<u16> = (0..5u16).map(|a| (2 * a) % 5).collect();
        let delta_a: Vec<u16> = vec![0; 5];
        let pair = EndoPair::new(&g, sigma, delta)
            .unwrap()
            .with_companions(gwo.ops().len(), sigma_a, delta_a);
        match check_leibniz_mixed(&gwo, &pair, 2) {
            Err(Error::HypothesisNotMet { what, .. }) => {
                assert!(what.contains("sigma"));
            }
            other => panic!("expected HypothesisNotMet, got {other:?}"),
        }
    }

    #[test]
    fn leibniz_with_nonzero_delta_companion() {
        // Boolean group Z/2 x Z/2 acted on by itself via coordinatewise AND;
        // sigma = identity and delta = 0 on both sides is the trivial case,
        // so instead take sigma = swap on the group with sigma_a = swap as
        // companion: swap(a AND b) = swap(a) AND swap(b).
        let g = FiniteAbelianGroup::cyclic_product(&[2, 2]);
        let names: Vec<String> = g.names().to_vec();
        let and = |a: u16, b: u16| -> u16 {
            let (ax, ay) = (a / 2, a % 2);
            let (bx, by) = (b / 2, b % 2);
            (ax & bx) * 2 + (ay & by)
        };
        let action: Vec<Vec<u16>> = (0..4u16).map(|a| (0..4u16).map(|b| and(a, b)).collect()).collect();
        let gwo = GroupWithOperators::new(g.clone(), names, Some("(0,0)"), action).unwrap();
        let swap = |v: u16| (v % 2) * 2 + v / 2;
        let sigma: Vec<u16> = (0..4u16).map(swap).collect();
        // delta(b) = b + swap(b) is additive; check it is a twisted
        // derivation: delta(ab) = ab + swap(ab) and sigma_a(a) delta(b) +
        // delta_a(a) b with sigma_a = swap, delta_a = same map on operators.
        let delta: Vec<u16> = (0..4u16).map(|b| g.add(b, swap(b))).collect();
        let sigma_a: Vec<u16> = (0..4u16).map(swap).collect();
        let delta_a: Vec<u16> = (0..4u16).map(|a| g.add(a, swap(a))).collect();
        let pair = EndoPair::new(&g, sigma, delta)
            .unwrap()
            .with_companions(gwo.ops().len(), sigma_a, delta_a);
        let report = twist_predicates(&gwo, &pair).unwrap();
        if report.all_hold() {
            let outcome = check_leibniz_mixed(&gwo, &pair, 3).unwrap();
            assert!(outcome.passed(), "witness: {:?}", outcome.witness);
        } else {
            // The twist predicates decide applicability; if this choice of
            // delta_a fails them, the checker must refuse rather than test.
            assert!(matches!(
                check_leibniz_mixed(&gwo, &pair, 2),
                Err(Error::HypothesisNotMet { .. })
            ));
        }
    }
}
