//! Subcommand implementations.
//!
//! Every function returns a finished report. `Err` means the input was
//! invalid (exit code 2); a checked property that fails is a `fail`
//! verdict inside an `Ok` report (exit code 1). Report-style commands
//! (`sunital`, `ring-report`, `module-report`) describe the structure and
//! pass as long as their internal cross-checks agree, so a false property
//! there is a finding, not an error.

use std::fs;
use std::path::Path;

use serde_json::Value;

use orext_core::algebra::{
    generated_stable_subgroup, sunitality_report, GenerationMode, GroupWithOperators,
};
use orext_core::error::{Error, Result};
use orext_core::format::{item_doc, parse_structure_str, to_json, ParsedStructure};
use orext_core::gallery::{default_items, families, GalleryItem};
use orext_core::noetherian::{ascending_chain_witness, check_horrible_lemma, ChainOutcome};
use orext_core::ore::{
    check_leibniz_mixed, check_triple_associativity, check_vandermonde, twist_predicates,
    AssocScanConfig, EndoPair, ScanMode,
};
use orext_core::rings::{
    module_property_report, right_ideal_chain, ring_property_report, PropertyReport, TriState,
};

use crate::report::{sha256_hex, Report};

fn load(path: &Path, report: &mut Report) -> Result<ParsedStructure> {
    let bytes =
        fs::read(path).map_err(|e| Error::Syntax(format!("{}: {e}", path.display())))?;
    report.digest_input(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| Error::Syntax(format!("{}: not valid UTF-8", path.display())))?;
    parse_structure_str(&text, path.parent().unwrap_or_else(|| Path::new(".")))
}

fn wrong_kind(expected: &str, got: &ParsedStructure) -> Error {
    Error::Schema(format!("expected a {expected} file, found kind \"{}\"", got.kind()))
}

fn expect_group(parsed: ParsedStructure) -> Result<(GroupWithOperators, Option<EndoPair>)> {
    match parsed {
        ParsedStructure::Group { gw, pair, .. } => Ok((gw, pair)),
        other => Err(wrong_kind("group_with_operators", &other)),
    }
}

fn opt_str(name: &Option<String>) -> Value {
    name.as_ref().map(|s| Value::String(s.clone())).unwrap_or(Value::Null)
}

fn held(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

fn passed(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

pub fn validate(path: &Path) -> Result<Report> {
    let mut report = Report::new("validate");
    let parsed = load(path, &mut report)?;
    report.detail("kind", parsed.kind());
    match &parsed {
        ParsedStructure::Group { name, gw, pair } => {
            report.detail("name", opt_str(name));
            report.detail("order", gw.group().order());
            report.detail("operators", gw.ops().len());
            report.detail("pair", if pair.is_some() { "present" } else { "absent" });
            let companions = pair.as_ref().is_some_and(|p| p.companions().is_some());
            report.detail("companions", if companions { "present" } else { "absent" });
        }
        ParsedStructure::Ring { name, ring, sigma, chain_seeds, .. } => {
            report.detail("name", opt_str(name));
            report.detail("order", ring.group().order());
            report.detail("pair", if sigma.is_some() { "present" } else { "absent" });
            report.detail("chain_seeds", chain_seeds.len());
        }
        ParsedStructure::Module { name, module, ring_sigma, sigma, .. } => {
            report.detail("name", opt_str(name));
            report.detail("ring_order", module.ring().group().order());
            report.detail("module_order", module.group().order());
            report.detail("ring_pair", if ring_sigma.is_some() { "present" } else { "absent" });
            report.detail("module_pair", if sigma.is_some() { "present" } else { "absent" });
        }
        ParsedStructure::Triple { name, triple } => {
            report.detail("name", opt_str(name));
            report.detail("operators", triple.a_on_b().ops().len());
            report.detail("middle_order", triple.a_on_b().group().order());
            report.detail("target_order", triple.a_on_c().group().order());
        }
    }
    Ok(report)
}

pub fn closure(path: &Path, set: &[String], mode: GenerationMode) -> Result<Report> {
    let mut report = Report::new("closure");
    let (gw, _) = expect_group(load(path, &mut report)?)?;
    let names = gw.group().names();
    let seeds = set
        .iter()
        .map(|want| {
            names.iter().position(|n| n == want).map(|i| i as u16).ok_or_else(|| {
                Error::UnknownIdent { id: want.clone(), context: "--set".into() }
            })
        })
        .collect::<Result<Vec<u16>>>()?;
    let sub = generated_stable_subgroup(&gw, &seeds, mode)?;
    report.detail("mode", match mode {
        GenerationMode::Full => "full",
        GenerationMode::Bracket => "bracket",
    });
    report.detail("set", Value::Array(set.iter().map(|s| s.clone().into()).collect()));
    report.detail("size", sub.members().len());
    report.detail(
        "members",
        Value::Array(sub.members().iter().map(|&m| names[m as usize].clone().into()).collect()),
    );
    Ok(report)
}

pub fn sunital(path: &Path) -> Result<Report> {
    let mut report = Report::new("sunital");
    let (gw, _) = expect_group(load(path, &mut report)?)?;
    let r = sunitality_report(&gw);
    report.detail("s_unital", r.s_unital);
    report.detail("weakly_s_unital", r.weakly_s_unital);
    report.detail("span_equivalence_ok", r.span_equivalence_ok);
    if let Some(b) = r.s_unital_witness {
        report.witness("s_unital_witness", vec![gw.group().name(b).to_owned()]);
    }
    if let Some(b) = r.weak_witness {
        report.witness("weakly_s_unital_witness", vec![gw.group().name(b).to_owned()]);
    }
    if !r.span_equivalence_ok {
        report.fail();
    }
    Ok(report)
}

pub fn identities(path: &Path, max_index: u32) -> Result<Report> {
    let mut report = Report::new("identities");
    let (gw, pair) = expect_group(load(path, &mut report)?)?;
    let pair = pair.ok_or_else(|| {
        Error::Schema("identities needs sigma and delta in the file's meta section".into())
    })?;
    report.detail("max_index", max_index);

    let vdm = check_vandermonde(gw.group(), &pair, max_index);
    report.detail("vandermonde_checks", vdm.checks);
    report.detail("vandermonde", passed(vdm.passed()));
    if let Some(w) = &vdm.witness {
        report.witness(w.label.clone(), w.parts.clone());
        report.fail();
    }

    if pair.companions().is_some() {
        report.detail("companions", "present");
        let tw = twist_predicates(&gw, &pair)?;
        report.detail("sigma_twist", held(tw.sigma_twist_witness.is_none()));
        report.detail("delta_twist", held(tw.delta_twist_witness.is_none()));
        if let Some((a, b)) = tw.sigma_twist_witness {
            report.witness(
                "sigma_twist",
                vec![gw.ops().name(a).to_owned(), gw.group().name(b).to_owned()],
            );
            report.fail();
        }
        if let Some((a, b)) = tw.delta_twist_witness {
            report.witness(
                "delta_twist",
                vec![gw.ops().name(a).to_owned(), gw.group().name(b).to_owned()],
            );
            report.fail();
        }
        if tw.sigma_twist_witness.is_none() && tw.delta_twist_witness.is_none() {
            let lm = check_leibniz_mixed(&gw, &pair, max_index)?;
            report.detail("leibniz_mixed_checks", lm.checks);
            report.detail("leibniz_mixed", passed(lm.passed()));
            if let Some(w) = &lm.witness {
                report.witness(w.label.clone(), w.parts.clone());
                report.fail();
            }
        } else {
            report.detail("leibniz_mixed", "skipped");
        }
    } else {
        report.detail("companions", "absent");
        report.detail("leibniz_mixed", "skipped");
    }
    Ok(report)
}

pub fn assoc(path: &Path, max_degree: u32, budget: u64, seed: u64) -> Result<Report> {
    let mut report = Report::new("assoc");
    let parsed = load(path, &mut report)?;
    let ParsedStructure::Triple { triple, .. } = parsed else {
        return Err(wrong_kind("triple", &parsed));
    };
    let cfg = AssocScanConfig { max_degree, budget, seed, coeff_limit: None };
    let r = check_triple_associativity(&triple, &cfg);

    report.detail("max_degree", max_degree);
    report.detail("budget", budget);
    report.detail("seed", seed);
    report.detail("phase1_associative", held(r.phase1.assoc_witness.is_none()));
    report.detail("phase1_sigma_twist", held(r.phase1.sigma_twist_witness.is_none()));
    report.detail("phase1_delta_twist", held(r.phase1.delta_twist_witness.is_none()));
    report.detail("structured_checks", r.structured_checks);
    match r.scan_mode {
        ScanMode::Exhaustive { total } => {
            report.detail("scan_mode", "exhaustive");
            report.detail("scan_space", total);
        }
        ScanMode::Sampled { samples } => {
            report.detail("scan_mode", "sampled");
            report.detail("scan_space", samples);
        }
        ScanMode::Skipped => report.detail("scan_mode", "skipped"),
    }
    report.detail("scanned", r.scanned);
    report.detail("annihilator_trivial", r.annihilator_trivial);
    report.detail("theorem_consistent", r.theorem_consistent);

    let ops = triple.a_on_b().ops().names();
    let bnames = triple.a_on_b().group().names();
    let cnames = triple.a_on_c().group().names();
    if let Some((a, b, c)) = r.phase1.assoc_witness {
        report.witness(
            "phase1_associativity",
            vec![
                ops[a as usize].clone(),
                bnames[b as usize].clone(),
                cnames[c as usize].clone(),
            ],
        );
    }
    if let Some((b, c)) = r.phase1.sigma_twist_witness {
        report.witness(
            "phase1_sigma_twist",
            vec![bnames[b as usize].clone(), cnames[c as usize].clone()],
        );
    }
    if let Some((b, c)) = r.phase1.delta_twist_witness {
        report.witness(
            "phase1_delta_twist",
            vec![bnames[b as usize].clone(), cnames[c as usize].clone()],
        );
    }
    if let Some(w) = &r.witness {
        report.witness(
            "associativity",
            vec![
                w.alpha.render(ops),
                w.beta.render(bnames),
                w.gamma.render(cnames),
                w.lhs.render(cnames),
                w.rhs.render(cnames),
            ],
        );
    }
    if let Some(src) = r.witness_source {
        report.detail("witness_source", src);
    }
    if r.witness.is_some() || !r.phase1.all_hold() || !r.theorem_consistent {
        report.fail();
    }
    Ok(report)
}

pub fn chain(path: &Path, length: u32) -> Result<Report> {
    let mut report = Report::new("chain");
    let (gw, _) = expect_group(load(path, &mut report)?)?;
    report.detail("length", length);
    match ascending_chain_witness(&gw, length)? {
        ChainOutcome::NotApplicable { reason } => {
            report.detail("reason", reason);
            report.not_applicable();
        }
        ChainOutcome::Chain(w) => {
            report.detail("culprit", gw.group().name(w.culprit));
            report.detail("quotient_order", w.quotient.group().order());
            report.detail(
                "link_sizes",
                Value::Array(w.links.iter().map(|l| l.len().into()).collect()),
            );
            let qnames = w.quotient.group().names();
            for (t, sep) in w.strict.iter().enumerate() {
                report.witness(
                    "separator",
                    vec![t.to_string(), (t + 1).to_string(), sep.render(qnames)],
                );
            }
        }
    }
    Ok(report)
}

pub fn horrible(path: &Path, max_index: u32) -> Result<Report> {
    let mut report = Report::new("horrible");
    let (gw, pair) = expect_group(load(path, &mut report)?)?;
    let pair = pair.ok_or_else(|| {
        Error::Schema("horrible needs sigma and delta in the file's meta section".into())
    })?;
    report.detail("max_index", max_index);

    let mut tuples = 0u64;
    let mut applicable = 0u64;
    let mut routes_checked = 0u64;
    let mut failure: Option<(&'static str, u16, u32, u32, u32)> = None;
    'scan: for b in gw.group().elements() {
        for i in 0..=max_index {
            for j in 0..=max_index {
                for k in 0..=max_index {
                    let r = check_horrible_lemma(&gw, &pair, b, i, j, k)?;
                    tuples += 1;
                    if r.part_ii_applicable {
                        applicable += 1;
                    }
                    if r.routes_agree.is_some() {
                        routes_checked += 1;
                    }
                    if !r.part_i_equal {
                        failure = Some(("part_i", b, i, j, k));
                        break 'scan;
                    }
                    if r.part_ii_member == Some(false) {
                        failure = Some(("part_ii", b, i, j, k));
                        break 'scan;
                    }
                    if r.routes_agree == Some(false) {
                        failure = Some(("routes_disagree", b, i, j, k));
                        break 'scan;
                    }
                }
            }
        }
    }
    report.detail("tuples_checked", tuples);
    report.detail("part_ii_applicable", applicable);
    report.detail("routes_checked", routes_checked);
    match failure {
        None => report.detail("lemma", "holds"),
        Some((label, b, i, j, k)) => {
            report.detail("lemma", "fails");
            report.witness(
                label,
                vec![
                    gw.group().name(b).to_owned(),
                    i.to_string(),
                    j.to_string(),
                    k.to_string(),
                ],
            );
            report.fail();
        }
    }
    Ok(report)
}

fn render_property_report(report: &mut Report, r: &PropertyReport) {
    let states: [(&str, &TriState); 7] = [
        ("associative", &r.associative),
        ("left_distributive", &r.left_distributive),
        ("right_distributive", &r.right_distributive),
        ("left_unital", &r.left_unital),
        ("right_unital", &r.right_unital),
        ("s_unital", &r.s_unital),
        ("weakly_s_unital", &r.weakly_s_unital),
    ];
    for (key, state) in states {
        match state {
            TriState::Holds => report.detail(key, "holds"),
            TriState::Skipped => report.detail(key, "skipped"),
            TriState::Fails(w) => {
                report.detail(key, "fails");
                report.witness(key, w.clone());
            }
        }
    }
    report.detail(
        "left_identities",
        Value::Array(r.left_identities.iter().map(|s| s.clone().into()).collect()),
    );
    report.detail(
        "right_identities",
        Value::Array(r.right_identities.iter().map(|s| s.clone().into()).collect()),
    );
    report.detail("bracket_route_agrees", match r.bracket_route_agrees {
        None => Value::Null,
        Some(b) => b.into(),
    });
    if r.bracket_route_agrees == Some(false) {
        report.fail();
    }
}

pub fn ring_report(path: &Path) -> Result<Report> {
    let mut report = Report::new("ring-report");
    let parsed = load(path, &mut report)?;
    let ParsedStructure::Ring { ring, .. } = parsed else {
        return Err(wrong_kind("ring", &parsed));
    };
    report.detail("order", ring.group().order());
    let r = ring_property_report(&ring);
    render_property_report(&mut report, &r);
    Ok(report)
}

pub fn module_report(ring_path: &Path, module_path: &Path) -> Result<Report> {
    let mut report = Report::new("module-report");
    let parsed_ring = load(ring_path, &mut report)?;
    let ParsedStructure::Ring { ring, .. } = parsed_ring else {
        return Err(wrong_kind("ring", &parsed_ring));
    };
    let parsed_module = load(module_path, &mut report)?;
    let ParsedStructure::Module { module, .. } = parsed_module else {
        return Err(wrong_kind("module", &parsed_module));
    };
    if module.ring() != &ring {
        return Err(Error::Schema(
            "the module's referenced ring does not match RING_FILE".into(),
        ));
    }
    report.detail("ring_order", ring.group().order());
    report.detail("module_order", module.group().order());
    let r = module_property_report(&module);
    render_property_report(&mut report, &r);
    Ok(report)
}

pub fn ideal_chain(path: &Path, depth: u32) -> Result<Report> {
    let mut report = Report::new("ideal-chain");
    let parsed = load(path, &mut report)?;
    let ParsedStructure::Ring { ring, sigma, delta, chain_seeds, .. } = parsed else {
        return Err(wrong_kind("ring", &parsed));
    };
    let (sigma, delta) = match (sigma, delta) {
        (Some(s), Some(d)) => (s, d),
        _ => {
            return Err(Error::Schema(
                "ideal-chain needs sigma and delta in the file's meta section".into(),
            ))
        }
    };
    if chain_seeds.is_empty() {
        return Err(Error::Schema(
            "ideal-chain needs chain_seeds in the file's meta section".into(),
        ));
    }
    let names = ring.group().names();
    report.detail("depth", depth);
    report.detail(
        "seeds",
        Value::Array(chain_seeds.iter().map(|&s| names[s as usize].clone().into()).collect()),
    );
    let r = right_ideal_chain(&ring, &sigma, &delta, &chain_seeds, depth)?;
    report.detail("all_closed", r.all_closed);
    report.detail("strictly_ascending", r.strictly_ascending);
    report.detail(
        "link_sizes",
        Value::Array(r.links.iter().map(|l| l.len().into()).collect()),
    );
    for (n, link) in r.links.iter().enumerate() {
        if let Some((element, monomial)) = &link.escape {
            report.witness("escape", vec![n.to_string(), element.clone(), monomial.clone()]);
        }
    }
    for (n, sep) in r.separators.iter().enumerate() {
        if let Some(p) = sep {
            report.witness(
                "separator",
                vec![n.to_string(), (n + 1).to_string(), p.render(names)],
            );
        }
    }
    if !r.all_closed {
        report.fail();
    }
    Ok(report)
}

pub fn gallery_list() -> Result<Report> {
    let mut report = Report::new("gallery list");
    let fams: Vec<Value> = families()
        .into_iter()
        .map(|(id, params)| {
            let mut m = serde_json::Map::new();
            m.insert("id".into(), id.into());
            m.insert("params".into(), params.into());
            Value::Object(m)
        })
        .collect();
    report.detail("families", Value::Array(fams));
    let items: Vec<Value> =
        default_items()?.into_iter().map(|item| item.id.into()).collect();
    report.detail("items", Value::Array(items));
    Ok(report)
}

pub fn gallery_emit(id: &str, params: &[u32], out: &Path) -> Result<Report> {
    let mut report = Report::new("gallery emit");
    let item = GalleryItem::build(id, params)?;
    let text = to_json(&item_doc(&item)?)?;
    fs::write(out, &text)
        .map_err(|e| Error::BadParams(format!("cannot write {}: {e}", out.display())))?;
    report.detail("id", item.id.clone());
    report.detail("family", item.family.clone());
    report.detail(
        "params",
        Value::Array(item.params.iter().map(|&p| p.into()).collect()),
    );
    report.detail("out", out.display().to_string());
    report.detail("bytes", text.len());
    report.detail("sha256", sha256_hex(text.as_bytes()));
    Ok(report)
}
