//! Reading and writing structure files.
//!
//! A structure file is a single JSON document whose `kind` field selects
//! one of four bodies: `group_with_operators`, `ring`, `module`, or
//! `triple` (see [`doc`]). Parsing proceeds in three stages with distinct
//! error classes: JSON syntax (`Syntax`, with line and column), document
//! shape (`Schema`, with the offending field path and identifier), and
//! the algebraic laws themselves, which are enforced by the same core
//! constructors the rest of the crate uses.
//!
//! Emission always writes explicit tables in declared element order, so
//! emitted files are byte-stable and round-trip to structures whose every
//! table equals the original.

pub mod doc;

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::algebra::{FiniteAbelianGroup, GroupWithOperators};
use crate::error::{Error, Result};
use crate::gallery::items::{GalleryItem, Structure};
use crate::ore::{AssocTriple, EndoPair};
use crate::rings::{module_assoc_triple, FiniteRing, LeftModule};
use doc::{
    ActionMap, GroupBody, GroupSpec, MetaSection, MiddleSort, ModuleBody, NameMap, OperatorSpec,
    RingBody, StructureDoc, TargetSort, TripleBody,
};

/// Order cap for any group a file may declare, matching the table-backed
/// sizes the checkers are designed for.
const MAX_FILE_GROUP_ORDER: usize = 4096;

/// A decoded, fully validated structure file.
#[derive(Debug, Clone)]
pub enum ParsedStructure {
    Group {
        name: Option<String>,
        gw: GroupWithOperators,
        pair: Option<EndoPair>,
    },
    Ring {
        name: Option<String>,
        ring: FiniteRing,
        sigma: Option<Vec<u16>>,
        delta: Option<Vec<u16>>,
        chain_seeds: Vec<u16>,
    },
    Module {
        name: Option<String>,
        module: LeftModule,
        ring_sigma: Option<Vec<u16>>,
        ring_delta: Option<Vec<u16>>,
        sigma: Option<Vec<u16>>,
        delta: Option<Vec<u16>>,
    },
    Triple {
        name: Option<String>,
        triple: AssocTriple,
    },
}

impl ParsedStructure {
    /// The kind tag this structure was parsed from.
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedStructure::Group { .. } => "group_with_operators",
            ParsedStructure::Ring { .. } => "ring",
            ParsedStructure::Module { .. } => "module",
            ParsedStructure::Triple { .. } => "triple",
        }
    }
}

/// Decodes the JSON document, classifying failures as `Syntax` (malformed
/// JSON) or `Schema` (wrong shape), both with line and column.
pub fn parse_doc(text: &str) -> Result<StructureDoc> {
    serde_json::from_str(text).map_err(|e| {
        let msg = format!("line {}, column {}: {e}", e.line(), e.column());
        match e.classify() {
            serde_json::error::Category::Syntax | serde_json::error::Category::Eof => {
                Error::Syntax(msg)
            }
            _ => Error::Schema(msg),
        }
    })
}

/// Parses and validates a structure from document text. `base_dir`
/// resolves relative ring references in module files.
pub fn parse_structure_str(text: &str, base_dir: &Path) -> Result<ParsedStructure> {
    build_structure(&parse_doc(text)?, base_dir)
}

/// Parses and validates the structure file at `path`.
pub fn parse_structure_file(path: &Path) -> Result<ParsedStructure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Syntax(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_structure_str(&text, base)
}

/// Validates a decoded document into core structures.
pub fn build_structure(doc: &StructureDoc, base_dir: &Path) -> Result<ParsedStructure> {
    match doc {
        StructureDoc::GroupWithOperators(b) => build_group_body(b),
        StructureDoc::Ring(b) => build_ring_body(b),
        StructureDoc::Module(b) => build_module_body(b, base_dir),
        StructureDoc::Triple(b) => build_triple_body(b),
    }
}

/// Name-to-index lookup with duplicate detection.
struct Resolver<'a> {
    names: &'a [String],
    index: BTreeMap<&'a str, u16>,
}

impl<'a> Resolver<'a> {
    fn new(names: &'a [String], at: &str) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.as_str(), i as u16).is_some() {
                return Err(Error::Schema(format!("{at}: duplicate identifier \"{n}\"")));
            }
        }
        Ok(Resolver { names, index })
    }

    fn get(&self, name: &str, at: &str) -> Result<u16> {
        self.index.get(name).copied().ok_or_else(|| {
            Error::Schema(format!("{at}: unresolved identifier \"{name}\""))
        })
    }
}

/// Builds the group named by a [`GroupSpec`], enforcing that exactly one
/// of the two forms is used.
fn build_group(spec: &GroupSpec, at: &str) -> Result<FiniteAbelianGroup> {
    if let Some(orders) = &spec.cyclic_product {
        if spec.elements.is_some() || spec.add.is_some() || spec.neg.is_some()
            || spec.zero.is_some()
        {
            return Err(Error::Schema(format!(
                "{at}: cyclic_product excludes the explicit table fields"
            )));
        }
        if orders.is_empty() {
            return Err(Error::Schema(format!("{at}.cyclic_product: needs at least one factor")));
        }
        let mut order = 1usize;
        for (i, &n) in orders.iter().enumerate() {
            if n == 0 {
                return Err(Error::Schema(format!("{at}.cyclic_product[{i}]: zero factor")));
            }
            order = order.saturating_mul(n as usize);
        }
        if order > MAX_FILE_GROUP_ORDER {
            return Err(Error::Schema(format!(
                "{at}.cyclic_product: order {order} exceeds {MAX_FILE_GROUP_ORDER}"
            )));
        }
        return Ok(FiniteAbelianGroup::cyclic_product(orders));
    }

    let names = spec
        .elements
        .as_ref()
        .ok_or_else(|| Error::Schema(format!("{at}: give cyclic_product or elements")))?;
    if names.is_empty() {
        return Err(Error::Schema(format!("{at}.elements: must be nonempty")));
    }
    if names.len() > MAX_FILE_GROUP_ORDER {
        return Err(Error::Schema(format!(
            "{at}.elements: order {} exceeds {MAX_FILE_GROUP_ORDER}",
            names.len()
        )));
    }
    let r = Resolver::new(names, &format!("{at}.elements"))?;
    let n = names.len();

    let add_rows = spec.add.as_ref().ok_or_else(|| Error::Schema(format!("{at}.add: missing")))?;
    if add_rows.len() != n {
        return Err(Error::Schema(format!(
            "{at}.add: {} rows, expected {n}",
            add_rows.len()
        )));
    }
    let mut add = Vec::with_capacity(n);
    for (i, row) in add_rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Schema(format!(
                "{at}.add[{i}]: {} entries, expected {n}",
                row.len()
            )));
        }
        let mut out = Vec::with_capacity(n);
        for (j, cell) in row.iter().enumerate() {
            out.push(r.get(cell, &format!("{at}.add[{i}][{j}]"))?);
        }
        add.push(out);
    }

    let neg_row = spec.neg.as_ref().ok_or_else(|| Error::Schema(format!("{at}.neg: missing")))?;
    if neg_row.len() != n {
        return Err(Error::Schema(format!(
            "{at}.neg: {} entries, expected {n}",
            neg_row.len()
        )));
    }
    let neg = neg_row
        .iter()
        .enumerate()
        .map(|(i, cell)| r.get(cell, &format!("{at}.neg[{i}]")))
        .collect::<Result<Vec<u16>>>()?;

    let zero_name =
        spec.zero.as_ref().ok_or_else(|| Error::Schema(format!("{at}.zero: missing")))?;
    let zero = r.get(zero_name, &format!("{at}.zero"))?;

    FiniteAbelianGroup::new(names.clone(), add, neg, zero)
}

/// Resolves an element-keyed map into a table over `domain`'s declared
/// order, requiring totality and no unknown keys.
fn map_table(map: &NameMap, domain: &Resolver, codomain: &Resolver, at: &str) -> Result<Vec<u16>> {
    for key in map.keys() {
        if !domain.index.contains_key(key.as_str()) {
            return Err(Error::Schema(format!("{at}: unknown identifier \"{key}\"")));
        }
    }
    domain
        .names
        .iter()
        .map(|name| {
            let value = map.get(name).ok_or_else(|| {
                Error::Schema(format!("{at}: missing entry for \"{name}\""))
            })?;
            codomain.get(value, &format!("{at}[\"{name}\"]"))
        })
        .collect()
}

/// Resolves an operator-keyed action into rows over `ops` in declared
/// order; missing rows and missing cells are named precisely.
fn action_rows(
    action: &ActionMap,
    ops: &[String],
    elems: &Resolver,
    at: &str,
) -> Result<Vec<Vec<u16>>> {
    for key in action.keys() {
        if !ops.contains(key) {
            return Err(Error::Schema(format!("{at}: unknown operator \"{key}\"")));
        }
    }
    ops.iter()
        .map(|op| {
            let row = action.get(op).ok_or_else(|| {
                Error::Schema(format!("{at}: missing row for operator \"{op}\""))
            })?;
            map_table(row, elems, elems, &format!("{at}[\"{op}\"]"))
        })
        .collect()
}

/// Like [`action_rows`] but the outer keys come from a different sort
/// than the inner tables (ring elements acting on module elements).
fn cross_action_rows(
    action: &ActionMap,
    ops: &[String],
    codomain: &Resolver,
    at: &str,
) -> Result<Vec<Vec<u16>>> {
    for key in action.keys() {
        if !ops.contains(key) {
            return Err(Error::Schema(format!("{at}: unknown operator \"{key}\"")));
        }
    }
    ops.iter()
        .map(|op| {
            let row = action.get(op).ok_or_else(|| {
                Error::Schema(format!("{at}: missing row for operator \"{op}\""))
            })?;
            map_table(row, codomain, codomain, &format!("{at}[\"{op}\"]"))
        })
        .collect()
}

/// Builds the endomorphism pair (and companions) declared in a meta
/// section, if any.
fn build_pair(meta: &MetaSection, gw: &GroupWithOperators) -> Result<Option<EndoPair>> {
    let (sigma_map, delta_map) = match (&meta.sigma, &meta.delta) {
        (Some(s), Some(d)) => (s, d),
        (None, None) => {
            if meta.sigma_companion.is_some() || meta.delta_companion.is_some() {
                return Err(Error::Schema(
                    "meta: companion maps require sigma and delta".into(),
                ));
            }
            return Ok(None);
        }
        _ => return Err(Error::Schema("meta: sigma and delta must be given together".into())),
    };
    let elems = Resolver::new(gw.group().names(), "meta")?;
    let sigma = map_table(sigma_map, &elems, &elems, "meta.sigma")?;
    let delta = map_table(delta_map, &elems, &elems, "meta.delta")?;
    let mut pair = EndoPair::new(gw.group(), sigma, delta)?;

    match (&meta.sigma_companion, &meta.delta_companion) {
        (Some(sc), Some(dc)) => {
            let ops = Resolver::new(gw.ops().names(), "meta")?;
            let sigma_a = map_table(sc, &ops, &ops, "meta.sigma_companion")?;
            let delta_a = map_table(dc, &ops, &ops, "meta.delta_companion")?;
            pair = pair.with_companions(gw.ops().len(), sigma_a, delta_a);
        }
        (None, None) => {}
        _ => {
            return Err(Error::Schema(
                "meta: sigma_companion and delta_companion must be given together".into(),
            ))
        }
    }
    Ok(Some(pair))
}

fn build_group_body(b: &GroupBody) -> Result<ParsedStructure> {
    let group = build_group(&b.group, "group")?;
    let elems = Resolver::new(group.names(), "group.elements")?;
    Resolver::new(&b.operators.names, "operators.names")?;
    let rows = action_rows(&b.action, &b.operators.names, &elems, "action")?;
    let gw =
        GroupWithOperators::new(group, b.operators.names.clone(), b.operators.zero.as_deref(), rows)?;
    let pair = build_pair(&b.meta, &gw)?;
    Ok(ParsedStructure::Group { name: b.meta.name.clone(), gw, pair })
}

fn build_ring_body(b: &RingBody) -> Result<ParsedStructure> {
    if b.meta.sigma_companion.is_some() || b.meta.delta_companion.is_some() {
        return Err(Error::Schema(
            "meta: companion maps belong to group_with_operators files".into(),
        ));
    }
    let group = build_group(&b.group, "group")?;
    let r = Resolver::new(group.names(), "group.elements")?;
    let n = group.order();
    if b.mul.len() != n {
        return Err(Error::Schema(format!("mul: {} rows, expected {n}", b.mul.len())));
    }
    let mut mul = Vec::with_capacity(n);
    for (i, row) in b.mul.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Schema(format!("mul[{i}]: {} entries, expected {n}", row.len())));
        }
        let mut out = Vec::with_capacity(n);
        for (j, cell) in row.iter().enumerate() {
            out.push(r.get(cell, &format!("mul[{i}][{j}]"))?);
        }
        mul.push(out);
    }

    let maps = |m: &Option<NameMap>, at: &str| -> Result<Option<Vec<u16>>> {
        m.as_ref().map(|map| map_table(map, &r, &r, at)).transpose()
    };
    let sigma = maps(&b.meta.sigma, "meta.sigma")?;
    let delta = maps(&b.meta.delta, "meta.delta")?;
    if sigma.is_some() != delta.is_some() {
        return Err(Error::Schema("meta: sigma and delta must be given together".into()));
    }
    let chain_seeds = b
        .meta
        .chain_seeds
        .iter()
        .enumerate()
        .map(|(i, s)| r.get(s, &format!("meta.chain_seeds[{i}]")))
        .collect::<Result<Vec<u16>>>()?;

    let ring = FiniteRing::new(group, mul)?;
    if let (Some(s), Some(d)) = (&sigma, &delta) {
        // Validate additivity up front so downstream commands can trust
        // the pair.
        EndoPair::new(ring.group(), s.clone(), d.clone())?;
    }
    Ok(ParsedStructure::Ring { name: b.meta.name.clone(), ring, sigma, delta, chain_seeds })
}

fn build_module_body(b: &ModuleBody, base_dir: &Path) -> Result<ParsedStructure> {
    let ring_path = base_dir.join(&b.ring);
    let text = fs::read_to_string(&ring_path)
        .map_err(|e| Error::Syntax(format!("{}: {e}", ring_path.display())))?;
    let ring_doc = parse_doc(&text)?;
    let StructureDoc::Ring(ring_body) = &ring_doc else {
        return Err(Error::Schema(format!(
            "{}: expected kind \"ring\", found \"{}\"",
            ring_path.display(),
            kind_name(&ring_doc)
        )));
    };
    let ParsedStructure::Ring { ring, sigma: ring_sigma, delta: ring_delta, .. } =
        build_ring_body(ring_body)?
    else {
        unreachable!("ring bodies build ring structures");
    };

    let group = build_group(&b.group, "group")?;
    let melems = Resolver::new(group.names(), "group.elements")?;
    let rows = cross_action_rows(&b.action, ring.group().names(), &melems, "action")?;

    let maps = |m: &Option<NameMap>, at: &str| -> Result<Option<Vec<u16>>> {
        m.as_ref().map(|map| map_table(map, &melems, &melems, at)).transpose()
    };
    let sigma = maps(&b.meta.sigma, "meta.sigma")?;
    let delta = maps(&b.meta.delta, "meta.delta")?;
    if sigma.is_some() != delta.is_some() {
        return Err(Error::Schema("meta: sigma and delta must be given together".into()));
    }

    let module = LeftModule::new(ring, group, rows)?;
    if let (Some(s), Some(d)) = (&sigma, &delta) {
        EndoPair::new(module.group(), s.clone(), d.clone())?;
    }
    Ok(ParsedStructure::Module {
        name: b.meta.name.clone(),
        module,
        ring_sigma,
        ring_delta,
        sigma,
        delta,
    })
}

fn build_triple_body(b: &TripleBody) -> Result<ParsedStructure> {
    let bg = build_group(&b.middle.group, "middle.group")?;
    let cg = build_group(&b.target.group, "target.group")?;
    let belems = Resolver::new(bg.names(), "middle.group.elements")?;
    let celems = Resolver::new(cg.names(), "target.group.elements")?;
    Resolver::new(&b.operators.names, "operators.names")?;

    let a_on_b_rows = action_rows(&b.middle.action, &b.operators.names, &belems, "middle.action")?;
    let a_on_c_rows = action_rows(
        &b.target.action_by_operators,
        &b.operators.names,
        &celems,
        "target.action_by_operators",
    )?;
    let b_on_c_rows =
        action_rows(&b.target.action_by_middle, bg.names(), &celems, "target.action_by_middle")?;

    let sigma_b = map_table(&b.middle.sigma, &belems, &belems, "middle.sigma")?;
    let delta_b = map_table(&b.middle.delta, &belems, &belems, "middle.delta")?;
    let sigma_c = map_table(&b.target.sigma, &celems, &celems, "target.sigma")?;
    let delta_c = map_table(&b.target.delta, &celems, &celems, "target.delta")?;

    let zero = b.operators.zero.as_deref();
    let a_on_b =
        GroupWithOperators::new(bg.clone(), b.operators.names.clone(), zero, a_on_b_rows)?;
    let a_on_c =
        GroupWithOperators::new(cg.clone(), b.operators.names.clone(), zero, a_on_c_rows)?;
    let middle_zero = bg.name(bg.zero()).to_owned();
    let b_on_c =
        GroupWithOperators::new(cg, bg.names().to_vec(), Some(&middle_zero), b_on_c_rows)?;

    let pair_b = EndoPair::new(a_on_b.group(), sigma_b, delta_b)?;
    let pair_c = EndoPair::new(b_on_c.group(), sigma_c, delta_c)?;

    let triple = AssocTriple::new(a_on_b, b_on_c, a_on_c, pair_b, pair_c)?;
    Ok(ParsedStructure::Triple { name: b.meta.name.clone(), triple })
}

fn kind_name(doc: &StructureDoc) -> &'static str {
    match doc {
        StructureDoc::GroupWithOperators(_) => "group_with_operators",
        StructureDoc::Ring(_) => "ring",
        StructureDoc::Module(_) => "module",
        StructureDoc::Triple(_) => "triple",
    }
}

// ---------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------

/// Explicit tables for a group, in declared element order.
pub fn group_spec(g: &FiniteAbelianGroup) -> GroupSpec {
    let n = g.order() as u16;
    GroupSpec {
        cyclic_product: None,
        elements: Some(g.names().to_vec()),
        add: Some(
            (0..n)
                .map(|i| (0..n).map(|j| g.name(g.add(i, j)).to_owned()).collect())
                .collect(),
        ),
        neg: Some((0..n).map(|i| g.name(g.neg(i)).to_owned()).collect()),
        zero: Some(g.name(g.zero()).to_owned()),
    }
}

fn name_map(domain: &[String], codomain: &[String], table: &[u16]) -> NameMap {
    domain
        .iter()
        .zip(table)
        .map(|(k, &v)| (k.clone(), codomain[v as usize].clone()))
        .collect()
}

fn action_map(ops: &[String], elems: &[String], rows: &[Vec<u16>]) -> ActionMap {
    ops.iter().zip(rows).map(|(op, row)| (op.clone(), name_map(elems, elems, row))).collect()
}

fn pair_meta(meta: &mut MetaSection, gw: &GroupWithOperators, pair: &EndoPair) {
    let elems = gw.group().names();
    meta.sigma = Some(name_map(elems, elems, pair.sigma_table()));
    meta.delta = Some(name_map(elems, elems, pair.delta_table()));
    if let Some((sa, da)) = pair.companions() {
        let ops = gw.ops().names();
        meta.sigma_companion = Some(name_map(ops, ops, sa));
        meta.delta_companion = Some(name_map(ops, ops, da));
    }
}

/// Document for a group with operators, with the pair in the meta section.
pub fn group_doc(name: Option<&str>, gw: &GroupWithOperators, pair: Option<&EndoPair>) -> StructureDoc {
    let mut meta = MetaSection { name: name.map(str::to_owned), ..MetaSection::default() };
    if let Some(p) = pair {
        pair_meta(&mut meta, gw, p);
    }
    StructureDoc::GroupWithOperators(GroupBody {
        meta,
        group: group_spec(gw.group()),
        operators: OperatorSpec {
            names: gw.ops().names().to_vec(),
            zero: Some(gw.ops().name(gw.ops().zero_op()).to_owned()),
        },
        action: action_map(gw.ops().names(), gw.group().names(), gw.action_table()),
    })
}

/// Document for a ring, with optional pair and chain seeds in the meta.
pub fn ring_doc(
    name: Option<&str>,
    ring: &FiniteRing,
    sigma: Option<&[u16]>,
    delta: Option<&[u16]>,
    chain_seeds: &[u16],
) -> StructureDoc {
    let g = ring.group();
    let elems = g.names();
    StructureDoc::Ring(RingBody {
        meta: MetaSection {
            name: name.map(str::to_owned),
            sigma: sigma.map(|t| name_map(elems, elems, t)),
            delta: delta.map(|t| name_map(elems, elems, t)),
            sigma_companion: None,
            delta_companion: None,
            chain_seeds: chain_seeds.iter().map(|&s| g.name(s).to_owned()).collect(),
        },
        group: group_spec(g),
        mul: (0..g.order() as u16)
            .map(|i| {
                (0..g.order() as u16).map(|j| g.name(ring.mul(i, j)).to_owned()).collect()
            })
            .collect(),
    })
}

/// Document for a module; `ring_path` is stored verbatim as the relative
/// reference.
pub fn module_doc(
    name: Option<&str>,
    ring_path: &str,
    module: &LeftModule,
    sigma: Option<&[u16]>,
    delta: Option<&[u16]>,
) -> StructureDoc {
    let mg = module.group();
    let elems = mg.names();
    StructureDoc::Module(ModuleBody {
        meta: MetaSection {
            name: name.map(str::to_owned),
            sigma: sigma.map(|t| name_map(elems, elems, t)),
            delta: delta.map(|t| name_map(elems, elems, t)),
            sigma_companion: None,
            delta_companion: None,
            chain_seeds: Vec::new(),
        },
        ring: ring_path.to_owned(),
        group: group_spec(mg),
        action: action_map(module.ring().group().names(), elems, module.act_table()),
    })
}

/// Document for an associativity triple.
pub fn triple_doc(name: Option<&str>, triple: &AssocTriple) -> StructureDoc {
    let a_on_b = triple.a_on_b();
    let b_on_c = triple.b_on_c();
    let a_on_c = triple.a_on_c();
    let bnames = a_on_b.group().names();
    let cnames = a_on_c.group().names();
    StructureDoc::Triple(TripleBody {
        meta: MetaSection { name: name.map(str::to_owned), ..MetaSection::default() },
        operators: OperatorSpec {
            names: a_on_b.ops().names().to_vec(),
            zero: Some(a_on_b.ops().name(a_on_b.ops().zero_op()).to_owned()),
        },
        middle: MiddleSort {
            group: group_spec(a_on_b.group()),
            action: action_map(a_on_b.ops().names(), bnames, a_on_b.action_table()),
            sigma: name_map(bnames, bnames, triple.pair_b().sigma_table()),
            delta: name_map(bnames, bnames, triple.pair_b().delta_table()),
        },
        target: TargetSort {
            group: group_spec(a_on_c.group()),
            action_by_operators: action_map(a_on_c.ops().names(), cnames, a_on_c.action_table()),
            action_by_middle: action_map(b_on_c.ops().names(), cnames, b_on_c.action_table()),
            sigma: name_map(cnames, cnames, triple.pair_c().sigma_table()),
            delta: name_map(cnames, cnames, triple.pair_c().delta_table()),
        },
    })
}

/// Canonical JSON text for a document: pretty-printed, sorted maps,
/// trailing newline. Byte-stable for equal documents.
pub fn to_json(doc: &StructureDoc) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)
        .map_err(|e| Error::Schema(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// The document for a catalog item. Group items carry their pair, ring
/// items their pair and chain seeds; module items emit as triples so the
/// associativity checks can consume them directly. Functional doubling
/// levels have no table representation and are rejected.
pub fn item_doc(item: &GalleryItem) -> Result<StructureDoc> {
    match &item.structure {
        Structure::Group { gw, pair } => Ok(group_doc(Some(&item.id), gw, Some(pair))),
        Structure::Ring { ring, sigma, delta, chain_seeds } => {
            Ok(ring_doc(Some(&item.id), ring, Some(sigma), Some(delta), chain_seeds))
        }
        Structure::Module { ring, module, sigma_r, delta_r, sigma_m, delta_m } => {
            let triple = module_assoc_triple(ring, module, sigma_r, delta_r, sigma_m, delta_m)?;
            Ok(triple_doc(Some(&item.id), &triple))
        }
        Structure::CayleyDickson { algebra, ring } => match ring {
            Some(r) => Ok(ring_doc(
                Some(&item.id),
                r,
                Some(&algebra.conj_table()?),
                Some(&algebra.id_minus_conj_table()?),
                &[],
            )),
            None => Err(Error::BadParams(format!(
                "{}: functional doubling levels have no table file",
                item.id
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::GalleryItem;

    fn parse_back(doc: &StructureDoc) -> ParsedStructure {
        let text = to_json(doc).unwrap();
        parse_structure_str(&text, Path::new(".")).unwrap()
    }

    #[test]
    fn group_files_round_trip() {
        let item = GalleryItem::build("cyclic_inversion", &[3]).unwrap();
        let Structure::Group { gw, pair } = &item.structure else { panic!() };
        let doc = item_doc(&item).unwrap();
        match parse_back(&doc) {
            ParsedStructure::Group { name, gw: gw2, pair: pair2 } => {
                assert_eq!(name.as_deref(), Some("cyclic_inversion_3"));
                assert_eq!(&gw2, gw);
                assert_eq!(pair2.as_ref(), Some(pair));
            }
            other => panic!("wrong kind {}", other.kind()),
        }
    }

    #[test]
    fn ring_files_round_trip_with_chain_seeds() {
        let item = GalleryItem::build("twisted_pair", &[2, 1, 1]).unwrap();
        let Structure::Ring { ring, sigma, delta, chain_seeds } = &item.structure else {
            panic!()
        };
        let doc = item_doc(&item).unwrap();
        match parse_back(&doc) {
            ParsedStructure::Ring { ring: r2, sigma: s2, delta: d2, chain_seeds: c2, .. } => {
                assert_eq!(&r2, ring);
                assert_eq!(s2.as_ref(), Some(sigma));
                assert_eq!(d2.as_ref(), Some(delta));
                assert_eq!(&c2, chain_seeds);
            }
            other => panic!("wrong kind {}", other.kind()),
        }
    }

    #[test]
    fn module_items_emit_as_triples_and_round_trip() {
        let item = GalleryItem::build("frobenius_vector_space", &[2, 2, 1, 0]).unwrap();
        let doc = item_doc(&item).unwrap();
        let ParsedStructure::Triple { triple, .. } = parse_back(&doc) else {
            panic!("expected a triple");
        };
        let Structure::Module { ring, module, sigma_r, delta_r, sigma_m, delta_m } =
            &item.structure
        else {
            panic!()
        };
        let direct =
            module_assoc_triple(ring, module, sigma_r, delta_r, sigma_m, delta_m).unwrap();
        assert_eq!(triple.a_on_b(), direct.a_on_b());
        assert_eq!(triple.b_on_c(), direct.b_on_c());
        assert_eq!(triple.a_on_c(), direct.a_on_c());
        assert_eq!(triple.pair_b(), direct.pair_b());
        assert_eq!(triple.pair_c(), direct.pair_c());
    }

    #[test]
    fn emission_is_byte_stable() {
        let item = GalleryItem::build("rps_algebra", &[]).unwrap();
        let a = to_json(&item_doc(&item).unwrap()).unwrap();
        let b = to_json(&item_doc(&GalleryItem::build("rps_algebra", &[]).unwrap()).unwrap())
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cyclic_product_form_parses_with_an_adjoined_zero_operator() {
        let text = r#"{
            "kind": "group_with_operators",
            "group": {"cyclic_product": [3]},
            "operators": {"names": ["a"]},
            "action": {"a": {"0": "0", "1": "2", "2": "1"}}
        }"#;
        let ParsedStructure::Group { gw, pair, .. } =
            parse_structure_str(text, Path::new(".")).unwrap()
        else {
            panic!("expected a group");
        };
        assert_eq!(gw.group().order(), 3);
        assert_eq!(gw.ops().len(), 2);
        assert_eq!(gw.ops().name(1), "0");
        assert!(pair.is_none());
    }

    #[test]
    fn missing_action_cells_name_the_operator_and_element() {
        let text = r#"{
            "kind": "group_with_operators",
            "group": {"cyclic_product": [3]},
            "operators": {"names": ["a"]},
            "action": {"a": {"0": "0", "1": "2"}}
        }"#;
        let err = parse_structure_str(text, Path::new(".")).unwrap_err();
        match err {
            Error::Schema(msg) => {
                assert!(msg.contains("action[\"a\"]"), "{msg}");
                assert!(msg.contains("\"2\""), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn malformed_json_reports_line_and_column() {
        let err = parse_structure_str("{\"kind\": \n nonsense", Path::new(".")).unwrap_err();
        match err {
            Error::Syntax(msg) => assert!(msg.starts_with("line 2"), "{msg}"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn non_group_add_tables_fail_validation() {
        let text = r#"{
            "kind": "group_with_operators",
            "group": {
                "elements": ["0", "1"],
                "add": [["0", "1"], ["1", "1"]],
                "neg": ["0", "1"],
                "zero": "0"
            },
            "operators": {"names": ["a"]},
            "action": {"a": {"0": "0", "1": "1"}}
        }"#;
        let err = parse_structure_str(text, Path::new(".")).unwrap_err();
        assert!(!matches!(err, Error::Schema(_) | Error::Syntax(_)), "got {err:?}");
    }

    #[test]
    fn sigma_without_delta_is_rejected() {
        let text = r#"{
            "kind": "group_with_operators",
            "meta": {"sigma": {"0": "0", "1": "1", "2": "2"}},
            "group": {"cyclic_product": [3]},
            "operators": {"names": ["a"]},
            "action": {"a": {"0": "0", "1": "2", "2": "1"}}
        }"#;
        let err = parse_structure_str(text, Path::new(".")).unwrap_err();
        assert!(matches!(err, Error::Schema(_)), "got {err:?}");
    }

    #[test]
    fn unknown_fields_are_schema_errors_with_location() {
        let text = r#"{
            "kind": "ring",
            "group": {"cyclic_product": [2]},
            "mul": [["0", "0"], ["0", "1"]],
            "extra": 1
        }"#;
        let err = parse_structure_str(text, Path::new(".")).unwrap_err();
        match err {
            Error::Schema(msg) => assert!(msg.contains("extra"), "{msg}"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn module_files_resolve_their_ring_relative_to_themselves() {
        let dir = tempfile::tempdir().unwrap();
        let item = GalleryItem::build("twisted_pair", &[2, 1, 1]).unwrap();
        let Structure::Ring { ring, .. } = &item.structure else { panic!() };
        let ring_text = to_json(&ring_doc(Some("tp"), ring, None, None, &[])).unwrap();
        std::fs::write(dir.path().join("tp_ring.json"), &ring_text).unwrap();

        let module = ring.as_self_module();
        let module_text =
            to_json(&module_doc(Some("tp_self"), "tp_ring.json", &module, None, None)).unwrap();
        let module_path = dir.path().join("tp_module.json");
        std::fs::write(&module_path, &module_text).unwrap();

        let ParsedStructure::Module { module: m2, .. } =
            parse_structure_file(&module_path).unwrap()
        else {
            panic!("expected a module");
        };
        assert_eq!(&m2, &module);
    }

    #[test]
    fn duplicate_element_names_are_rejected() {
        let text = r#"{
            "kind": "group_with_operators",
            "group": {
                "elements": ["0", "0"],
                "add": [["0", "0"], ["0", "0"]],
                "neg": ["0", "0"],
                "zero": "0"
            },
            "operators": {"names": ["a"]},
            "action": {"a": {"0": "0"}}
        }"#;
        let err = parse_structure_str(text, Path::new(".")).unwrap_err();
        match err {
            Error::Schema(msg) => assert!(msg.contains("duplicate"), "{msg}"),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
