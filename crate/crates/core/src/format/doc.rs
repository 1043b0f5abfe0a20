//! The on-disk document model: JSON bodies, one per structure kind.
//!
//! Tables reference elements and operators by name throughout, so files
//! are diff-friendly and every dangling identifier can be reported with
//! its field path. Shape problems (missing rows, unresolved names) are
//! `Schema` errors; the algebraic laws themselves are validated by the
//! core constructors after decoding.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Element-keyed map, e.g. sigma: {"1": "2", ...}.
pub type NameMap = BTreeMap<String, String>;
/// Operator-keyed map of element-keyed maps.
pub type ActionMap = BTreeMap<String, NameMap>;

/// A structure file; `kind` selects the body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureDoc {
    GroupWithOperators(GroupBody),
    Ring(RingBody),
    Module(ModuleBody),
    Triple(TripleBody),
}

/// Optional descriptive header: a display name, the distinguished
/// endomorphism pair, its companion maps, and right-ideal chain seeds.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetaSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<NameMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<NameMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_companion: Option<NameMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_companion: Option<NameMap>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chain_seeds: Vec<String>,
}

impl MetaSection {
    pub fn is_empty(&self) -> bool {
        self == &MetaSection::default()
    }
}

/// A finite abelian group, either canonical or explicit.
///
/// Exactly one form must be used: {"cyclic_product": [n1, ...]} with its
/// canonical tuple elements, or the explicit tables {"elements", "add",
/// "neg", "zero"} with every entry an element name.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic_product: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
}

/// The operator list of an action; `zero` selects the zero operator and
/// defaults to a looked-up or adjoined "0".
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSpec {
    pub names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
}

/// kind = group_with_operators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupBody {
    #[serde(default, skip_serializing_if = "MetaSection::is_empty")]
    pub meta: MetaSection,
    pub group: GroupSpec,
    pub operators: OperatorSpec,
    pub action: ActionMap,
}

/// kind = ring: a group plus a name-valued multiplication table over the
/// declared element order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingBody {
    #[serde(default, skip_serializing_if = "MetaSection::is_empty")]
    pub meta: MetaSection,
    pub group: GroupSpec,
    pub mul: Vec<Vec<String>>,
}

/// kind = module: the scalar ring lives in its own file, referenced by a
/// path relative to this document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBody {
    #[serde(default, skip_serializing_if = "MetaSection::is_empty")]
    pub meta: MetaSection,
    pub ring: String,
    pub group: GroupSpec,
    /// Keyed by ring element name, then module element name.
    pub action: ActionMap,
}

/// kind = triple: one operator set acting on two sorts, the middle sort
/// acting on the target, and an endomorphism pair on each acted-on sort.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleBody {
    #[serde(default, skip_serializing_if = "MetaSection::is_empty")]
    pub meta: MetaSection,
    pub operators: OperatorSpec,
    pub middle: MiddleSort,
    pub target: TargetSort,
}

/// The middle sort of a triple: acted on by the operators, acting on the
/// target through its own elements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MiddleSort {
    pub group: GroupSpec,
    /// Keyed by operator name.
    pub action: ActionMap,
    pub sigma: NameMap,
    pub delta: NameMap,
}

/// The target sort of a triple, acted on both by the operators and by the
/// middle sort's elements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetSort {
    pub group: GroupSpec,
    /// Keyed by operator name.
    pub action_by_operators: ActionMap,
    /// Keyed by middle element name.
    pub action_by_middle: ActionMap,
    pub sigma: NameMap,
    pub delta: NameMap,
}
