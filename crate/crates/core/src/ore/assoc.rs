//! Associativity of the polynomial action across a triple of carriers.
//!
//! Phase 1 checks the three pointwise criteria (mixed associativity of the
//! actions and the two twist conditions tying the endomorphism pairs
//! together). Phase 2 checks associativity of the polynomial products
//! themselves. The two are linked: when phase 1 holds, phase 2 can never
//! fail, and when phase 1 fails while nothing in the target is annihilated
//! by every operator, a polynomial witness of degree at most one must
//! exist. The report records whether the observed outcomes respect that
//! relationship, so a violation flags a defect in the engine itself.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::GroupWithOperators;
use crate::error::{Error, Result};
use crate::ore::act::ore_act_with;
use crate::ore::endo::{EndoPair, PiTriangle};
use crate::ore::poly::{GroupPolynomial, PolySort};

/// A set of operators acting on two groups, the middle group acting on the
/// third, and an endomorphism pair on each acted-on group.
#[derive(Debug, Clone)]
pub struct AssocTriple {
    a_on_b: GroupWithOperators,
    b_on_c: GroupWithOperators,
    a_on_c: GroupWithOperators,
    pair_b: EndoPair,
    pair_c: EndoPair,
}

impl AssocTriple {
    /// Validates the wiring: both outer actions share one operator set, the
    /// middle action's operators are exactly the elements of the middle
    /// group (with its zero as the zero operator, so the zero element acts
    /// as zero), and each endomorphism pair is additive on its carrier.
    pub fn new(
        a_on_b: GroupWithOperators,
        b_on_c: GroupWithOperators,
        a_on_c: GroupWithOperators,
        pair_b: EndoPair,
        pair_c: EndoPair,
    ) -> Result<Self> {
        if a_on_b.ops().names() != a_on_c.ops().names() {
            return Err(Error::MismatchedOperators(
                "the two outer actions must share one operator set".into(),
            ));
        }
        if b_on_c.ops().names() != a_on_b.group().names() {
            return Err(Error::MismatchedOperators(
                "the middle action's operators must be the elements of the middle group".into(),
            ));
        }
        if b_on_c.ops().zero_op() != a_on_b.group().zero() {
            return Err(Error::MismatchedOperators(
                "the middle action's zero operator must be the middle group's zero".into(),
            ));
        }
        a_on_b.group().check_additive(pair_b.sigma_table())?;
        a_on_b.group().check_additive(pair_b.delta_table())?;
        a_on_c.group().check_additive(pair_c.sigma_table())?;
        a_on_c.group().check_additive(pair_c.delta_table())?;
        Ok(AssocTriple { a_on_b, b_on_c, a_on_c, pair_b, pair_c })
    }

    pub fn a_on_b(&self) -> &GroupWithOperators {
        &self.a_on_b
    }

    pub fn b_on_c(&self) -> &GroupWithOperators {
        &self.b_on_c
    }

    pub fn a_on_c(&self) -> &GroupWithOperators {
        &self.a_on_c
    }

    pub fn pair_b(&self) -> &EndoPair {
        &self.pair_b
    }

    pub fn pair_c(&self) -> &EndoPair {
        &self.pair_c
    }
}

/// Pointwise criteria with first witnesses in scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase1Report {
    /// First `(a, b, c)` with `(a.b).c != a.(b.c)`.
    pub assoc_witness: Option<(u16, u16, u16)>,
    /// First `(b, c)` with `sigma_C(b.c) != sigma_B(b).sigma_C(c)`.
    pub sigma_twist_witness: Option<(u16, u16)>,
    /// First `(b, c)` with
    /// `delta_C(b.c) != sigma_B(b).delta_C(c) + delta_B(b).c`.
    pub delta_twist_witness: Option<(u16, u16)>,
}

impl Phase1Report {
    pub fn all_hold(&self) -> bool {
        self.assoc_witness.is_none()
            && self.sigma_twist_witness.is_none()
            && self.delta_twist_witness.is_none()
    }
}

pub fn check_phase1(t: &AssocTriple) -> Phase1Report {
    let b_grp = t.a_on_b.group();
    let c_grp = t.a_on_c.group();
    let n_ops = t.a_on_b.ops().len() as u16;
    let nb = b_grp.order() as u16;
    let nc = c_grp.order() as u16;

    let mut assoc_witness = None;
    'assoc: for a in 0..n_ops {
        for b in 0..nb {
            let ab = t.a_on_b.act(a, b);
            for c in 0..nc {
                if t.b_on_c.act(ab, c) != t.a_on_c.act(a, t.b_on_c.act(b, c)) {
                    assoc_witness = Some((a, b, c));
                    break 'assoc;
                }
            }
        }
    }

    let mut sigma_twist_witness = None;
    'sigma: for b in 0..nb {
        let sb = t.pair_b.sigma(b);
        for c in 0..nc {
            let lhs = t.pair_c.sigma(t.b_on_c.act(b, c));
            if lhs != t.b_on_c.act(sb, t.pair_c.sigma(c)) {
                sigma_twist_witness = Some((b, c));
                break 'sigma;
            }
        }
    }

    let mut delta_twist_witness = None;
    'delta: for b in 0..nb {
        let sb = t.pair_b.sigma(b);
        let db = t.pair_b.delta(b);
        for c in 0..nc {
            let lhs = t.pair_c.delta(t.b_on_c.act(b, c));
            let rhs = c_grp.add(t.b_on_c.act(sb, t.pair_c.delta(c)), t.b_on_c.act(db, c));
            if lhs != rhs {
                delta_twist_witness = Some((b, c));
                break 'delta;
            }
        }
    }

    Phase1Report { assoc_witness, sigma_twist_witness, delta_twist_witness }
}

/// Phase 2 parameters. The structured degree-one sweep always runs over the
/// full coefficient sets; `coeff_limit` and `budget` only shape the general
/// enumeration that follows it.
#[derive(Debug, Clone, Copy)]
pub struct AssocScanConfig {
    /// Degree bound for each factor in the general enumeration.
    pub max_degree: u32,
    /// Exhaustive when the tuple count fits, otherwise this many samples.
    pub budget: u64,
    /// Seed for the sampled fallback.
    pub seed: u64,
    /// Restrict each coefficient pool to its first `n` members in declared
    /// order.
    pub coeff_limit: Option<usize>,
}

impl Default for AssocScanConfig {
    fn default() -> Self {
        AssocScanConfig { max_degree: 2, budget: 200_000, seed: 0, coeff_limit: None }
    }
}

/// A failing instance of `(alpha beta) gamma = alpha (beta gamma)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocWitness {
    pub alpha: GroupPolynomial,
    pub beta: GroupPolynomial,
    pub gamma: GroupPolynomial,
    pub lhs: GroupPolynomial,
    pub rhs: GroupPolynomial,
}

/// How the general enumeration ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Every tuple up to the degree bound was checked.
    Exhaustive { total: u64 },
    /// Seeded uniform sampling of the tuple space.
    Sampled { samples: u64 },
    /// The structured sweep already produced a witness.
    Skipped,
}

#[derive(Debug, Clone)]
pub struct AssocReport {
    pub phase1: Phase1Report,
    /// Tuples checked by the structured degree-one sweep.
    pub structured_checks: u64,
    pub scan_mode: ScanMode,
    /// Tuples checked by the general enumeration.
    pub scanned: u64,
    pub witness: Option<AssocWitness>,
    /// Where the witness came from: "structured" or "enumeration".
    pub witness_source: Option<&'static str>,
    /// Whether only zero is killed by every operator acting on the third
    /// carrier. This is the hypothesis under which phase 1 failures must
    /// surface as polynomial witnesses.
    pub annihilator_trivial: bool,
    /// False exactly when the phases contradict each other: phase 1 holds
    /// but a witness appeared, or phase 1 fails with a trivial annihilator
    /// and no witness was found. Either situation means the engine itself
    /// is wrong, not the input.
    pub theorem_consistent: bool,
}

impl AssocReport {
    pub fn associative(&self) -> bool {
        self.witness.is_none()
    }
}

struct ScanContext<'a> {
    t: &'a AssocTriple,
    tri_b: &'a PiTriangle,
    tri_c: &'a PiTriangle,
}

impl ScanContext<'_> {
    /// Evaluates both bracketed products and returns a witness on mismatch.
    fn check(
        &self,
        alpha: &GroupPolynomial,
        beta: &GroupPolynomial,
        gamma: &GroupPolynomial,
    ) -> Option<AssocWitness> {
        let ab = ore_act_with(alpha, beta, &self.t.a_on_b, self.tri_b);
        let lhs = ore_act_with(&ab, gamma, &self.t.b_on_c, self.tri_c);
        let bc = ore_act_with(beta, gamma, &self.t.b_on_c, self.tri_c);
        let rhs = ore_act_with(alpha, &bc, &self.t.a_on_c, self.tri_c);
        if lhs == rhs {
            None
        } else {
            Some(AssocWitness {
                alpha: alpha.clone(),
                beta: beta.clone(),
                gamma: gamma.clone(),
                lhs,
                rhs,
            })
        }
    }
}

/// Decodes `idx` as a coefficient vector over `pool`, degree 0 first.
fn decode_poly(
    mut idx: u64,
    pool: &[u16],
    len: u32,
    sort: PolySort,
    zero: u16,
) -> GroupPolynomial {
    let m = pool.len() as u64;
    let mut coeffs = Vec::with_capacity(len as usize);
    for d in 0..len {
        coeffs.push((d, pool[(idx % m) as usize]));
        idx /= m;
    }
    GroupPolynomial::from_coeffs(sort, &coeffs, zero)
}

fn sample_poly(
    rng: &mut ChaCha8Rng,
    pool: &[u16],
    len: u32,
    sort: PolySort,
    zero: u16,
) -> GroupPolynomial {
    let coeffs: Vec<(u32, u16)> =
        (0..len).map(|d| (d, pool[rng.gen_range(0..pool.len())])).collect();
    GroupPolynomial::from_coeffs(sort, &coeffs, zero)
}

/// Runs both phases and cross-checks them against each other.
pub fn check_triple_associativity(t: &AssocTriple, cfg: &AssocScanConfig) -> AssocReport {
    let phase1 = check_phase1(t);
    let annihilator_trivial = t.a_on_c.annihilator().len() == 1;

    let b_grp = t.a_on_b.group();
    let c_grp = t.a_on_c.group();
    let zero_a = t.a_on_b.ops().zero_op();
    let zero_b = b_grp.zero();
    let zero_c = c_grp.zero();

    let sup = cfg.max_degree.max(1);
    let tri_b = PiTriangle::build(b_grp, &t.pair_b, sup);
    let tri_c = PiTriangle::build(c_grp, &t.pair_c, 2 * sup);
    let ctx = ScanContext { t, tri_b: &tri_b, tri_c: &tri_c };

    // Structured sweep: all products of constants, then a degree-one left
    // factor against constants. Any phase 1 failure over a trivially
    // annihilated target shows up here, in the constant or the degree-one
    // coefficient of the difference.
    let n_ops = t.a_on_b.ops().len() as u16;
    let nb = b_grp.order() as u16;
    let nc = c_grp.order() as u16;
    let mut structured_checks = 0u64;
    let mut witness = None;
    let mut witness_source = None;
    'structured: for degree_one in [false, true] {
        for a in 0..n_ops {
            let alpha = if degree_one {
                GroupPolynomial::monomial(PolySort::OverA, a, 1, zero_a)
            } else {
                GroupPolynomial::monomial(PolySort::OverA, a, 0, zero_a)
            };
            for b in 0..nb {
                let beta = GroupPolynomial::monomial(PolySort::OverB, b, 0, zero_b);
                for c in 0..nc {
                    let gamma = GroupPolynomial::monomial(PolySort::OverC, c, 0, zero_c);
                    structured_checks += 1;
                    if let Some(w) = ctx.check(&alpha, &beta, &gamma) {
                        witness = Some(w);
                        witness_source = Some("structured");
                        break 'structured;
                    }
                }
            }
        }
    }

    let mut scanned = 0u64;
    let scan_mode;
    if witness.is_some() {
        scan_mode = ScanMode::Skipped;
    } else {
        let len = cfg.max_degree + 1;
        let limit = |n: usize| cfg.coeff_limit.map_or(n, |l| l.min(n)).max(1);
        let pool_a: Vec<u16> = (0..limit(t.a_on_b.ops().len()) as u16).collect();
        let pool_b: Vec<u16> = (0..limit(b_grp.order()) as u16).collect();
        let pool_c: Vec<u16> = (0..limit(c_grp.order()) as u16).collect();

        let count = |pool: &[u16]| (pool.len() as u128).checked_pow(len);
        let total = count(&pool_a)
            .and_then(|na| count(&pool_b).and_then(|x| na.checked_mul(x)))
            .and_then(|x| count(&pool_c).and_then(|y| x.checked_mul(y)));

        match total {
            Some(total) if total <= cfg.budget as u128 => {
                let total = total as u64;
                let nb_tuples = (pool_b.len() as u64).pow(len);
                let nc_tuples = (pool_c.len() as u64).pow(len);
                let found = (0..total).into_par_iter().find_map_first(|idx| {
                    let gamma =
                        decode_poly(idx % nc_tuples, &pool_c, len, PolySort::OverC, zero_c);
                    let rest = idx / nc_tuples;
                    let beta =
                        decode_poly(rest % nb_tuples, &pool_b, len, PolySort::OverB, zero_b);
                    let alpha =
                        decode_poly(rest / nb_tuples, &pool_a, len, PolySort::OverA, zero_a);
                    ctx.check(&alpha, &beta, &gamma)
                });
                scanned = total;
                scan_mode = ScanMode::Exhaustive { total };
                if found.is_some() {
                    witness = found;
                    witness_source = Some("enumeration");
                }
            }
            _ => {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                for _ in 0..cfg.budget {
                    scanned += 1;
                    let alpha = sample_poly(&mut rng, &pool_a, len, PolySort::OverA, zero_a);
                    let beta = sample_poly(&mut rng, &pool_b, len, PolySort::OverB, zero_b);
                    let gamma = sample_poly(&mut rng, &pool_c, len, PolySort::OverC, zero_c);
                    if let Some(w) = ctx.check(&alpha, &beta, &gamma) {
                        witness = Some(w);
                        witness_source = Some("enumeration");
                        break;
                    }
                }
                scan_mode = ScanMode::Sampled { samples: scanned };
            }
        }
    }

    let theorem_consistent = match (phase1.all_hold(), witness.is_some()) {
        (true, true) => false,
        (false, false) => !annihilator_trivial,
        _ => true,
    };

    AssocReport {
        phase1,
        structured_checks,
        scan_mode,
        scanned,
        witness,
        witness_source,
        annihilator_trivial,
        theorem_consistent,
    }
}
