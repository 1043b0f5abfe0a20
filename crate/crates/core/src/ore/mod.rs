//! Skew polynomials over a group with operators: π-maps, the polynomial
//! action, the identities they satisfy, and the associativity criteria for
//! triples of carriers.

pub mod act;
pub mod assoc;
pub mod endo;
pub mod identities;
pub mod poly;

pub use act::{act_coefficientwise, ore_act, ore_act_with};
pub use assoc::{
    check_phase1, check_triple_associativity, AssocReport, AssocScanConfig, AssocTriple,
    AssocWitness, Phase1Report, ScanMode,
};
pub use endo::{pi_map, sigma_delta_words, EndoPair, FormalPiWords, PiBuilder, PiTriangle};
pub use identities::{check_leibniz_mixed, check_vandermonde, twist_predicates, TwistReport};
pub use poly::{GroupPolynomial, PolySort};
