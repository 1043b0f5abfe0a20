//! Finite rings and left modules as tables, the dictionary between module
//! structures and groups with operators, Ore products over both, and
//! degree-windowed right ideal checks.

pub mod base;
pub mod ideal;
pub mod ore_mod;

pub use base::{
    adjoint_delta, module_property_report, ring_property_report, FiniteRing, LeftModule,
    PropertyReport, TriState,
};
pub use ideal::{
    right_ideal_chain, right_ideal_slice_check, right_ideal_slice_check_budgeted,
    IdealChainReport, RightIdealReport,
};
pub use ore_mod::{
    derivation_endo_predicates, module_assoc_triple, ore_ring_module_act, DerivationReport,
};
