//! Finite abelian groups, operator actions, stable subgroups, and
//! structure-respecting maps. Everything is table-driven and exhaustively
//! validated at construction time.

pub mod group;
pub mod hom;
pub mod structure;
pub mod subgroup;

pub use group::FiniteAbelianGroup;
pub use hom::{hom_predicates, kernel_chain_analysis, GroupHom, HomReport, KernelChainReport};
pub use structure::{GroupWithOperators, OperatorSet};
pub use subgroup::{
    enumerate_stable_subgroups, enumerate_subgroups, generated_stable_subgroup, stable_closure,
    sunitality_report, z_span, GenerationMode, Subgroup, SunitalityReport,
};
