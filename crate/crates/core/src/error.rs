//! Error type shared by every checker and constructor in this crate.
//!
//! Witness fields always hold element or operator identifiers (never raw
//! indices), so errors can be surfaced verbatim in reports.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The additive tables do not describe an abelian group.
    /// `axiom` names the first violated axiom in check order
    /// (identity, inverses, commutativity, associativity).
    #[error("not an abelian group: {axiom} fails at ({})", witness.join(", "))]
    NotAGroup { axiom: &'static str, witness: Vec<String> },

    /// Operator `op` fails additivity: op(b + c) != op(b) + op(c).
    #[error("operator {op} is not an endomorphism: witness (b, c) = ({b}, {c})")]
    NotEndomorphism { op: String, b: String, c: String },

    /// The designated zero operator moves some element away from zero.
    #[error("zero operator {op} does not act as zero: {op}({b}) = {image}")]
    BadZeroOperator { op: String, b: String, image: String },

    /// Closures of the empty set are rejected rather than defaulted.
    #[error("the empty set has no stable closure")]
    EmptySet,

    /// A quotient was requested by a subgroup that is not action-stable.
    #[error("subgroup is not stable: {op}({member}) = {image} escapes")]
    NotStable { op: String, member: String, image: String },

    /// Direct products require one shared operator set.
    #[error("operator sets differ across factors: {0}")]
    MismatchedOperators(String),

    /// A map that must be additive is not.
    #[error("map is not additive: witness (b, c) = ({b}, {c})")]
    NotAdditive { b: String, c: String },

    /// A map that must be A-stable is not.
    #[error("map is not A-stable: f({op}·{b}) lies outside A·f({b})")]
    NotAStable { op: String, b: String },

    /// A polynomial was used in a slot reserved for a different sort.
    #[error("polynomial sort mismatch: expected {expected}, got {got}")]
    SortMismatch { expected: &'static str, got: &'static str },

    /// Twist predicates were requested without companion operator maps.
    #[error("companion maps sigma_A/delta_A are required but absent")]
    MissingCompanionMaps,

    /// A checker's hypotheses fail on this structure; the check is vacuous.
    #[error("hypothesis not met: {what} (witness: {})", witness.join(", "))]
    HypothesisNotMet { what: String, witness: Vec<String> },

    /// A generator exceeds the degree bound of a slice.
    #[error("generator degree {degree} exceeds slice bound {bound}")]
    DegreeTooHigh { degree: u32, bound: u32 },

    /// A slice over this group/degree bound cannot be enumerated at desk scale.
    #[error("slice over {order} elements at degree bound {bound} is too large to enumerate")]
    SliceTooLarge { order: usize, bound: u32 },

    /// Ore multiplication over a ring/module needs left distributivity.
    #[error("structure is not left distributive: witness (r, m, n) = ({r}, {m}, {n})")]
    NotLeftDistributive { r: String, m: String, n: String },

    /// The span of the given generators is not closed under right multiplication.
    #[error("not a right ideal: {element} · {monomial} escapes the span")]
    NotRightIdeal { element: String, monomial: String },

    /// Unknown gallery identifier.
    #[error("unknown gallery id: {0}")]
    UnknownId(String),

    /// Gallery parameters outside the supported range.
    #[error("bad gallery parameters: {0}")]
    BadParams(String),

    /// A catalogued claim failed verification.
    #[error("claim {claim} failed on {item}: expected {expected}, got {got} (witness: {})", witness.join(", "))]
    ClaimFailed { item: String, claim: String, expected: String, got: String, witness: Vec<String> },

    /// Structure-file syntax error (malformed JSON).
    #[error("syntax error: {0}")]
    Syntax(String),

    /// Structure-file schema error (missing or ill-shaped field).
    #[error("schema error: {0}")]
    Schema(String),

    /// Structure-file references an unknown element or operator.
    #[error("unknown identifier {id} in {context}")]
    UnknownIdent { id: String, context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
