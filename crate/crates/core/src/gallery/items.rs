//! The example catalog: named structures with frozen, machine-checked
//! claims.
//!
//! Each entry packages a structure (a group with operators, a table-backed
//! ring or module, or a functional doubling algebra) together with the
//! properties it is documented to have. [`GalleryItem::verify_all`] replays
//! every claim and fails fast on the first mismatch, so the catalog doubles
//! as a regression corpus.

use super::cd::CdAlgebra;
use super::field::SmallField;
use crate::algebra::{sunitality_report, FiniteAbelianGroup, GroupWithOperators};
use crate::error::{Error, Result};
use crate::ore::{
    check_leibniz_mixed, check_triple_associativity, check_vandermonde, AssocScanConfig, EndoPair,
};
use crate::rings::{
    adjoint_delta, derivation_endo_predicates, module_assoc_triple, right_ideal_chain,
    ring_property_report, FiniteRing, LeftModule, TriState,
};

/// Index bound fed to the Vandermonde and one-shift replay.
const IDENTITY_INDEX_BOUND: u32 = 4;
/// Index bound fed to the Leibniz and mixed-identity replay.
const LEIBNIZ_INDEX_BOUND: u32 = 3;
/// Sample count for functional (non-table-backed) scans.
const FUNCTIONAL_SAMPLES: u32 = 2000;
/// Seed for every sampled scan in the catalog.
const CATALOG_SEED: u64 = 17;
/// Depth of the twisted-pair right-ideal chain claim.
const TWISTED_CHAIN_DEPTH: u32 = 6;

/// Scan configuration used by `triple_associative` claims.
fn catalog_scan() -> AssocScanConfig {
    AssocScanConfig { max_degree: 2, budget: 50_000, seed: CATALOG_SEED, coeff_limit: None }
}

/// One documented property of a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    /// Machine-readable predicate name, e.g. "s_unital".
    pub predicate: String,
    /// The frozen expected outcome, e.g. "true" or "pass".
    pub expected: String,
    /// Why the outcome is what it is, in one sentence.
    pub note: String,
}

impl Claim {
    fn new(predicate: &str, expected: &str, note: &str) -> Self {
        Claim { predicate: predicate.into(), expected: expected.into(), note: note.into() }
    }
}

/// A claim after replay: what was observed, plus any witness parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedClaim {
    pub predicate: String,
    pub expected: String,
    pub observed: String,
    pub witness: Vec<String>,
}

/// The structure payload of a catalog entry.
#[derive(Debug, Clone)]
pub enum Structure {
    /// A group with operators and a distinguished endomorphism pair.
    Group { gw: GroupWithOperators, pair: EndoPair },
    /// A table-backed ring with a distinguished (sigma, delta) pair and
    /// optional right-ideal chain data.
    Ring { ring: FiniteRing, sigma: Vec<u16>, delta: Vec<u16>, chain_seeds: Vec<u16> },
    /// A module over a table-backed ring with twist maps on both sorts.
    Module {
        ring: FiniteRing,
        module: LeftModule,
        sigma_r: Vec<u16>,
        delta_r: Vec<u16>,
        sigma_m: Vec<u16>,
        delta_m: Vec<u16>,
    },
    /// A doubling algebra; table-backed when the order is small enough.
    CayleyDickson { algebra: CdAlgebra, ring: Option<FiniteRing> },
}

/// A named structure with its frozen claims.
#[derive(Debug, Clone)]
pub struct GalleryItem {
    pub id: String,
    pub family: String,
    pub params: Vec<u32>,
    pub structure: Structure,
    pub claims: Vec<Claim>,
}

impl GalleryItem {
    /// Builds the catalog entry `family(params)`. Unknown families are
    /// rejected with `UnknownId`, bad arities or ranges with `BadParams`.
    pub fn build(family: &str, params: &[u32]) -> Result<GalleryItem> {
        match family {
            "cyclic_inversion" => cyclic_inversion(params),
            "boolean_group" => boolean_group(params),
            "odd_prime_product" => odd_prime_product(params),
            "rps_algebra" => rps_algebra(params),
            "twisted_pair" => twisted_pair(params),
            "cayley_dickson" => cayley_dickson(params),
            "frobenius_vector_space" => frobenius_vector_space(params),
            other => Err(Error::UnknownId(other.to_string())),
        }
    }

    /// Replays every claim, failing fast with `ClaimFailed` on the first
    /// mismatch. On success returns the observed outcomes in claim order.
    pub fn verify_all(&self) -> Result<Vec<VerifiedClaim>> {
        let mut out = Vec::with_capacity(self.claims.len());
        for claim in &self.claims {
            let (observed, witness) = self.evaluate(claim)?;
            if observed != claim.expected {
                return Err(Error::ClaimFailed {
                    item: self.id.clone(),
                    claim: claim.predicate.clone(),
                    expected: claim.expected.clone(),
                    got: observed,
                    witness,
                });
            }
            out.push(VerifiedClaim {
                predicate: claim.predicate.clone(),
                expected: claim.expected.clone(),
                observed,
                witness,
            });
        }
        Ok(out)
    }

    /// Evaluates one predicate against the structure, returning the
    /// observed outcome string and any witness parts.
    fn evaluate(&self, claim: &Claim) -> Result<(String, Vec<String>)> {
        match &self.structure {
            Structure::Group { gw, pair } => evaluate_group(gw, pair, &claim.predicate),
            Structure::Ring { ring, sigma, delta, chain_seeds } => {
                evaluate_ring(ring, sigma, delta, chain_seeds, &claim.predicate)
            }
            Structure::Module { ring, module, sigma_r, delta_r, sigma_m, delta_m } => {
                evaluate_module(ring, module, sigma_r, delta_r, sigma_m, delta_m, &claim.predicate)
            }
            Structure::CayleyDickson { algebra, ring } => {
                evaluate_doubling(algebra, ring.as_ref(), &claim.predicate)
            }
        }
    }
}

fn unknown_predicate(p: &str) -> Error {
    Error::UnknownId(format!("claim predicate {p}"))
}

fn tristate_outcome(t: &TriState) -> (String, Vec<String>) {
    match t {
        TriState::Holds => ("true".into(), Vec::new()),
        TriState::Fails(w) => ("false".into(), w.clone()),
        TriState::Skipped => ("skipped".into(), Vec::new()),
    }
}

fn evaluate_group(
    gw: &GroupWithOperators,
    pair: &EndoPair,
    predicate: &str,
) -> Result<(String, Vec<String>)> {
    match predicate {
        "s_unital" => {
            let rep = sunitality_report(gw);
            let witness =
                rep.s_unital_witness.map(|b| vec![gw.group().name(b).to_owned()]).unwrap_or_default();
            Ok((rep.s_unital.to_string(), witness))
        }
        "weakly_s_unital" => {
            let rep = sunitality_report(gw);
            let witness =
                rep.weak_witness.map(|b| vec![gw.group().name(b).to_owned()]).unwrap_or_default();
            Ok((rep.weakly_s_unital.to_string(), witness))
        }
        "vandermonde" => {
            let outcome = check_vandermonde(gw.group(), pair, IDENTITY_INDEX_BOUND);
            let witness = outcome.witness.as_ref().map(|w| w.parts.clone()).unwrap_or_default();
            Ok((if outcome.passed() { "pass" } else { "fail" }.into(), witness))
        }
        "leibniz_mixed" => {
            let outcome = check_leibniz_mixed(gw, pair, LEIBNIZ_INDEX_BOUND)?;
            let witness = outcome.witness.as_ref().map(|w| w.parts.clone()).unwrap_or_default();
            Ok((if outcome.passed() { "pass" } else { "fail" }.into(), witness))
        }
        other => Err(unknown_predicate(other)),
    }
}

fn evaluate_ring(
    ring: &FiniteRing,
    sigma: &[u16],
    delta: &[u16],
    chain_seeds: &[u16],
    predicate: &str,
) -> Result<(String, Vec<String>)> {
    match predicate {
        "associative" | "left_distributive" | "right_distributive" | "left_unital"
        | "s_unital" | "weakly_s_unital" => {
            let rep = ring_property_report(ring);
            let t = match predicate {
                "associative" => rep.associative,
                "left_distributive" => rep.left_distributive,
                "right_distributive" => rep.right_distributive,
                "left_unital" => rep.left_unital,
                "s_unital" => rep.s_unital,
                _ => rep.weakly_s_unital,
            };
            Ok(tristate_outcome(&t))
        }
        "boolean_addition" => {
            let g = ring.group();
            let witness = g.elements().find(|&b| g.add(b, b) != g.zero());
            Ok(match witness {
                Some(b) => ("false".into(), vec![g.name(b).to_owned()]),
                None => ("true".into(), Vec::new()),
            })
        }
        "adjoint_derivation" => {
            let module = ring.as_self_module();
            let rep = derivation_endo_predicates(ring, &module, sigma, delta, sigma, delta);
            let mut witness = Vec::new();
            for (label, t) in [
                ("sigma_r_endomorphism", &rep.sigma_r_endomorphism),
                ("delta_r_derivation", &rep.delta_r_derivation),
                ("sigma_m_twisted", &rep.sigma_m_twisted),
                ("delta_m_derivation", &rep.delta_m_derivation),
            ] {
                if let TriState::Fails(parts) = t {
                    witness.push(label.to_string());
                    witness.extend(parts.iter().cloned());
                }
            }
            Ok((if rep.all_hold() { "true" } else { "false" }.into(), witness))
        }
        "ideal_chain_all_closed" | "ideal_chain_strictly_ascending" => {
            let report =
                right_ideal_chain(ring, sigma, delta, chain_seeds, TWISTED_CHAIN_DEPTH)?;
            if predicate == "ideal_chain_all_closed" {
                let witness = report
                    .links
                    .iter()
                    .enumerate()
                    .find_map(|(n, link)| {
                        link.escape.as_ref().map(|(p, m)| vec![n.to_string(), p.clone(), m.clone()])
                    })
                    .unwrap_or_default();
                Ok((report.all_closed.to_string(), witness))
            } else {
                let witness = report
                    .separators
                    .iter()
                    .enumerate()
                    .filter_map(|(n, s)| s.is_none().then(|| format!("links {n} and {}", n + 1)))
                    .collect();
                Ok((report.strictly_ascending.to_string(), witness))
            }
        }
        other => Err(unknown_predicate(other)),
    }
}

fn evaluate_module(
    ring: &FiniteRing,
    module: &LeftModule,
    sigma_r: &[u16],
    delta_r: &[u16],
    sigma_m: &[u16],
    delta_m: &[u16],
    predicate: &str,
) -> Result<(String, Vec<String>)> {
    match predicate {
        "derivation_predicates" => {
            let rep = derivation_endo_predicates(ring, module, sigma_r, delta_r, sigma_m, delta_m);
            let mut witness = Vec::new();
            for (label, t) in [
                ("sigma_r_endomorphism", &rep.sigma_r_endomorphism),
                ("delta_r_derivation", &rep.delta_r_derivation),
                ("sigma_m_twisted", &rep.sigma_m_twisted),
                ("delta_m_derivation", &rep.delta_m_derivation),
            ] {
                if let TriState::Fails(parts) = t {
                    witness.push(label.to_string());
                    witness.extend(parts.iter().cloned());
                }
            }
            Ok((if rep.all_hold() { "hold" } else { "fail" }.into(), witness))
        }
        "triple_associative" => {
            let triple = module_assoc_triple(ring, module, sigma_r, delta_r, sigma_m, delta_m)?;
            let report = check_triple_associativity(&triple, &catalog_scan());
            let witness = report
                .witness
                .as_ref()
                .map(|w| {
                    vec![
                        w.alpha.render(ring.group().names()),
                        w.beta.render(ring.group().names()),
                        w.gamma.render(module.group().names()),
                    ]
                })
                .unwrap_or_default();
            Ok((report.associative().to_string(), witness))
        }
        other => Err(unknown_predicate(other)),
    }
}

fn evaluate_doubling(
    algebra: &CdAlgebra,
    ring: Option<&FiniteRing>,
    predicate: &str,
) -> Result<(String, Vec<String>)> {
    match predicate {
        "associative" => match ring {
            Some(r) => Ok(tristate_outcome(&ring_property_report(r).associative)),
            None => Ok(match algebra.associator_basis_witness() {
                Some((i, j, k)) => (
                    "false".into(),
                    vec![
                        algebra.render(&algebra.basis(i)),
                        algebra.render(&algebra.basis(j)),
                        algebra.render(&algebra.basis(k)),
                    ],
                ),
                None => ("true".into(), Vec::new()),
            }),
        },
        "left_distributive" | "right_distributive" => match ring {
            Some(r) => {
                let rep = ring_property_report(r);
                let t = if predicate == "left_distributive" {
                    rep.left_distributive
                } else {
                    rep.right_distributive
                };
                Ok(tristate_outcome(&t))
            }
            None => {
                // The functional scan covers both laws jointly.
                let w = algebra.distributivity_witness(FUNCTIONAL_SAMPLES, CATALOG_SEED);
                Ok(match w {
                    Some((a, b, c)) => (
                        "false".into(),
                        vec![algebra.render(&a), algebra.render(&b), algebra.render(&c)],
                    ),
                    None => ("true".into(), Vec::new()),
                })
            }
        },
        "conj_involution" => {
            let w = algebra.conj_involution_witness(FUNCTIONAL_SAMPLES, CATALOG_SEED);
            Ok(match w {
                Some(z) => ("false".into(), vec![algebra.render(&z)]),
                None => ("true".into(), Vec::new()),
            })
        }
        "conj_antihom" => {
            let w = algebra.conj_antihom_witness(FUNCTIONAL_SAMPLES, CATALOG_SEED);
            Ok(match w {
                Some((z, v)) => ("false".into(), vec![algebra.render(&z), algebra.render(&v)]),
                None => ("true".into(), Vec::new()),
            })
        }
        other => Err(unknown_predicate(other)),
    }
}

fn instance_id(family: &str, params: &[u32]) -> String {
    let mut id = family.to_string();
    for p in params {
        id.push('_');
        id.push_str(&p.to_string());
    }
    id
}

fn expect_params(family: &str, params: &[u32], arity: usize) -> Result<()> {
    if params.len() != arity {
        return Err(Error::BadParams(format!(
            "{family} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// The inversion action b ↦ -b as a one-operator structure (plus the
/// adjoined zero operator) with pair sigma = -id, delta = 0 and companions
/// sigma_A = id, delta_A constantly zero.
pub(crate) fn inversion_structure(
    group: FiniteAbelianGroup,
) -> Result<(GroupWithOperators, EndoPair)> {
    let neg: Vec<u16> = group.elements().map(|b| group.neg(b)).collect();
    let zero_delta = vec![group.zero(); group.order()];
    let gw = GroupWithOperators::new(group, vec!["a".to_string()], None, vec![neg.clone()])?;
    // Operators after validation: ["a", "0"] with the adjoined zero last.
    let pair =
        EndoPair::new(gw.group(), neg, zero_delta)?.with_companions(2, vec![0, 1], vec![1, 1]);
    Ok((gw, pair))
}

fn group_item_claims(s_unital: bool, s_note: &str) -> Vec<Claim> {
    vec![
        Claim::new("s_unital", if s_unital { "true" } else { "false" }, s_note),
        Claim::new(
            "weakly_s_unital",
            "true",
            "Every element lies in the span of its own orbit under repeated operators.",
        ),
        Claim::new(
            "vandermonde",
            "pass",
            "Composition and one-shift identities of the pi triangle hold up to index 4.",
        ),
        Claim::new(
            "leibniz_mixed",
            "pass",
            "Companion maps validate the twisted Leibniz and mixed identities up to index 3.",
        ),
    ]
}

fn cyclic_inversion(params: &[u32]) -> Result<GalleryItem> {
    expect_params("cyclic_inversion", params, 1)?;
    let n = params[0];
    if !(2..=64).contains(&n) {
        return Err(Error::BadParams(format!("cyclic order {n} out of range 2..=64")));
    }
    let (gw, pair) = inversion_structure(FiniteAbelianGroup::cyclic(n))?;
    let boolean = n == 2;
    let claims = group_item_claims(
        boolean,
        if boolean {
            "Inversion fixes every element of a 2-torsion group, so b = a·b."
        } else {
            "An element of order above 2 differs from its inverse, and spans cannot recover it \
             from a single negation."
        },
    );
    Ok(GalleryItem {
        id: instance_id("cyclic_inversion", params),
        family: "cyclic_inversion".into(),
        params: params.to_vec(),
        structure: Structure::Group { gw, pair },
        claims,
    })
}

fn boolean_group(params: &[u32]) -> Result<GalleryItem> {
    expect_params("boolean_group", params, 1)?;
    let k = params[0];
    if !(1..=6).contains(&k) {
        return Err(Error::BadParams(format!("rank {k} out of range 1..=6")));
    }
    let factors = vec![2u32; k as usize];
    let (gw, pair) = inversion_structure(FiniteAbelianGroup::cyclic_product(&factors))?;
    let claims = group_item_claims(
        true,
        "Inversion fixes every element of a 2-torsion group, so b = a·b.",
    );
    Ok(GalleryItem {
        id: instance_id("boolean_group", params),
        family: "boolean_group".into(),
        params: params.to_vec(),
        structure: Structure::Group { gw, pair },
        claims,
    })
}

fn odd_prime_product(params: &[u32]) -> Result<GalleryItem> {
    expect_params("odd_prime_product", params, 1)?;
    let k = params[0];
    const ODD_PRIMES: [u32; 3] = [3, 5, 7];
    if !(1..=3).contains(&k) {
        return Err(Error::BadParams(format!("factor count {k} out of range 1..=3")));
    }
    let factors = &ODD_PRIMES[..k as usize];
    let (gw, pair) = inversion_structure(FiniteAbelianGroup::cyclic_product(factors))?;
    let claims = group_item_claims(
        false,
        "A product of odd cyclic groups has no 2-torsion beyond zero, so inversion is not \
         s-unital.",
    );
    Ok(GalleryItem {
        id: instance_id("odd_prime_product", params),
        family: "odd_prime_product".into(),
        params: params.to_vec(),
        structure: Structure::Group { gw, pair },
        claims,
    })
}

/// The eight subsets of {rock, paper, scissors} under symmetric
/// difference, multiplied bilinearly by "the winner of each pair".
pub(crate) fn rps_ring() -> Result<FiniteRing> {
    // Bit 0 = R, bit 1 = P, bit 2 = S.
    const LETTERS: [&str; 3] = ["R", "P", "S"];
    // winner[i][j] = index of the winning letter between i and j.
    const WINNER: [[usize; 3]; 3] = [[0, 1, 0], [1, 1, 2], [0, 2, 2]];

    let names: Vec<String> = (0u16..8)
        .map(|set| {
            let parts: Vec<&str> =
                (0..3).filter(|&i| set >> i & 1 == 1).map(|i| LETTERS[i]).collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join("+")
            }
        })
        .collect();
    let add: Vec<Vec<u16>> = (0u16..8).map(|x| (0u16..8).map(|y| x ^ y).collect()).collect();
    let neg: Vec<u16> = (0u16..8).collect();
    let group = FiniteAbelianGroup::new(names, add, neg, 0)?;

    let mul: Vec<Vec<u16>> = (0u16..8)
        .map(|x| {
            (0u16..8)
                .map(|y| {
                    let mut out = 0u16;
                    for i in (0..3).filter(|&i| x >> i & 1 == 1) {
                        for j in (0..3).filter(|&j| y >> j & 1 == 1) {
                            out ^= 1 << WINNER[i][j];
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    FiniteRing::new(group, mul)
}

fn rps_algebra(params: &[u32]) -> Result<GalleryItem> {
    expect_params("rps_algebra", params, 0)?;
    let ring = rps_ring()?;
    let order = ring.group().order();
    let sigma: Vec<u16> = (0..order as u16).collect();
    let delta = vec![0u16; order];
    let claims = vec![
        Claim::new(
            "boolean_addition",
            "true",
            "Subsets add by symmetric difference, so every element is 2-torsion.",
        ),
        Claim::new("left_distributive", "true", "The product is defined bilinearly."),
        Claim::new("right_distributive", "true", "The product is defined bilinearly."),
        Claim::new(
            "s_unital",
            "true",
            "Each subset is recovered from the span of its products with all elements.",
        ),
        Claim::new(
            "left_unital",
            "false",
            "No single element fixes all eight subsets; the witness refutes every candidate in \
             turn.",
        ),
        Claim::new(
            "associative",
            "false",
            "Bracketing rock, paper, scissors differently picks different winners.",
        ),
    ];
    Ok(GalleryItem {
        id: "rps_algebra".into(),
        family: "rps_algebra".into(),
        params: Vec::new(),
        structure: Structure::Ring { ring, sigma, delta, chain_seeds: Vec::new() },
        claims,
    })
}

/// Pairs over F_p multiplied by (r,s)(t,u) = (rt, ru): the left factor
/// only sees its first coordinate. Index of (r,s) is p r + s.
pub(crate) fn twisted_pair_ring(p: u16) -> Result<FiniteRing> {
    let group = FiniteAbelianGroup::cyclic_product(&[p as u32, p as u32]);
    let mul: Vec<Vec<u16>> = (0..p * p)
        .map(|x| {
            let r = x / p;
            (0..p * p).map(|y| r * (y / p) % p * p + r * (y % p) % p).collect()
        })
        .collect();
    FiniteRing::new(group, mul)
}

fn twisted_pair(params: &[u32]) -> Result<GalleryItem> {
    expect_params("twisted_pair", params, 3)?;
    let (p, v, w) = (params[0], params[1], params[2]);
    if ![2, 3, 5, 7].contains(&p) {
        return Err(Error::BadParams(format!("pair base {p} must be a prime at most 7")));
    }
    if v >= p || w >= p {
        return Err(Error::BadParams(format!("adjoint element ({v},{w}) out of range mod {p}")));
    }
    let ring = twisted_pair_ring(p as u16)?;
    let order = ring.group().order();
    let z = (p * v + w) as u16;
    let sigma: Vec<u16> = (0..order as u16).collect();
    let delta = adjoint_delta(&ring, z);

    let mut claims = vec![
        Claim::new("associative", "true", "Both bracketings multiply first coordinates."),
        Claim::new("left_distributive", "true", "Products are additive in each argument."),
        Claim::new("right_distributive", "true", "Products are additive in each argument."),
        Claim::new(
            "adjoint_derivation",
            "true",
            "r ↦ zr - rz is a derivation of any associative ring.",
        ),
    ];
    let canonical = (p, v, w) == (2, 1, 1);
    let chain_seeds = if canonical {
        claims.push(Claim::new(
            "ideal_chain_all_closed",
            "true",
            "Right multiplication never leaves the windowed span of the seeds.",
        ));
        claims.push(Claim::new(
            "ideal_chain_strictly_ascending",
            "true",
            "Each new seed degree contributes a polynomial missing from the previous link.",
        ));
        // The seed (0,1) annihilates on the left but not additively.
        vec![1u16]
    } else {
        Vec::new()
    };
    Ok(GalleryItem {
        id: instance_id("twisted_pair", params),
        family: "twisted_pair".into(),
        params: params.to_vec(),
        structure: Structure::Ring { ring, sigma, delta, chain_seeds },
        claims,
    })
}

fn cayley_dickson(params: &[u32]) -> Result<GalleryItem> {
    expect_params("cayley_dickson", params, 2)?;
    let (p, level) = (params[0], params[1]);
    if p > u16::MAX as u32 {
        return Err(Error::BadParams(format!("doubling base {p} out of range")));
    }
    let algebra = CdAlgebra::new(p as u16, level)?;
    let ring = algebra.to_ring().ok();
    let associative = level <= 2;
    let exhaustive = ring.is_some();
    let scan_note: &str = if exhaustive {
        "Checked exhaustively over the table-backed ring."
    } else {
        "Checked over all basis triples and a seeded random sample."
    };
    let claims = vec![
        Claim::new("left_distributive", "true", scan_note),
        Claim::new("right_distributive", "true", scan_note),
        Claim::new(
            "associative",
            if associative { "true" } else { "false" },
            if associative {
                "Doubling preserves associativity through the quaternion-style level."
            } else {
                "From the third doubling on, a basis triple associates no longer."
            },
        ),
        Claim::new("conj_involution", "true", "Conjugation negates and restores each half."),
        Claim::new("conj_antihom", "true", "Conjugation reverses products at every level."),
    ];
    Ok(GalleryItem {
        id: instance_id("cayley_dickson", params),
        family: "cayley_dickson".into(),
        params: params.to_vec(),
        structure: Structure::CayleyDickson { algebra, ring },
        claims,
    })
}

fn frobenius_vector_space(params: &[u32]) -> Result<GalleryItem> {
    expect_params("frobenius_vector_space", params, 4)?;
    let (p, k, dim, alpha) = (params[0], params[1], params[2], params[3]);
    if p > u16::MAX as u32 {
        return Err(Error::BadParams(format!("field characteristic {p} out of range")));
    }
    let field = SmallField::new(p as u16, k)?;
    let module = field.vector_module(dim)?;
    let ring = field.to_ring()?;

    let sigma_r = field.frobenius();
    let delta_r = field.id_minus_frobenius();
    let alpha_table: Vec<u16> = match alpha {
        0 => (0..module.group().order() as u16).collect(),
        1 => field.basis_shift(dim),
        other => {
            return Err(Error::BadParams(format!(
                "alpha selector {other} unknown (0 = identity, 1 = cyclic basis shift)"
            )))
        }
    };
    let frob_v = field.coefficientwise(&sigma_r, dim);
    let sigma_m: Vec<u16> = alpha_table.iter().map(|&v| frob_v[v as usize]).collect();
    let delta_m = field.coefficientwise(&delta_r, dim);

    let claims = vec![
        Claim::new(
            "derivation_predicates",
            "hold",
            "The p-power map is a ring endomorphism and id minus it a matching derivation, \
             coefficientwise on vectors.",
        ),
        Claim::new(
            "triple_associative",
            "true",
            "Composing the vector twist from a linear map after the scalar twist keeps the \
             three-sorted product associative.",
        ),
    ];
    Ok(GalleryItem {
        id: instance_id("frobenius_vector_space", params),
        family: "frobenius_vector_space".into(),
        params: params.to_vec(),
        structure: Structure::Module { ring, module, sigma_r, delta_r, sigma_m, delta_m },
        claims,
    })
}

/// The default catalog: every structure the documentation talks about,
/// with its frozen claims.
pub fn default_items() -> Result<Vec<GalleryItem>> {
    [
        ("cyclic_inversion", vec![2u32]),
        ("cyclic_inversion", vec![3]),
        ("cyclic_inversion", vec![4]),
        ("cyclic_inversion", vec![6]),
        ("boolean_group", vec![2]),
        ("boolean_group", vec![3]),
        ("odd_prime_product", vec![2]),
        ("rps_algebra", vec![]),
        ("twisted_pair", vec![2, 1, 1]),
        ("cayley_dickson", vec![3, 1]),
        ("cayley_dickson", vec![3, 2]),
        ("cayley_dickson", vec![3, 3]),
        ("frobenius_vector_space", vec![2, 2, 1, 0]),
        ("frobenius_vector_space", vec![2, 2, 2, 1]),
    ]
    .into_iter()
    .map(|(family, params)| GalleryItem::build(family, &params))
    .collect()
}

/// The family names accepted by [`GalleryItem::build`], with their
/// parameter signatures.
pub fn families() -> Vec<(&'static str, &'static str)> {
    vec![
        ("cyclic_inversion", "n (cyclic order, 2..=64)"),
        ("boolean_group", "k (rank of the 2-torsion group, 1..=6)"),
        ("odd_prime_product", "k (number of odd prime factors, 1..=3)"),
        ("rps_algebra", "(no parameters)"),
        ("twisted_pair", "p v w (prime base and adjoint element)"),
        ("cayley_dickson", "p level (odd prime base, level 0..=4)"),
        ("frobenius_vector_space", "p k dim alpha (field p^k, dimension, 0=id or 1=shift)"),
    ]
}
