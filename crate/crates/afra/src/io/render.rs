//! Canonical text, JSON, and dot output.
//!
//! Output is deterministic: elements appear in name order, extensions in
//! canonical order, and repeated runs produce byte-identical results. The
//! JSON writers emit a fixed schema with no insignificant whitespace;
//! element names never need escaping, so the writers are plain string
//! builders.

use std::fmt::Write as _;

use crate::defeat::{self, DefeatMode};
use crate::dung;
use crate::error::SolveError;
use crate::framework::{ElementKind, ElementSet, Framework};
use crate::oracle::OracleReport;
use crate::semantics::{self, ExtensionSet, SolveConfig};

/// One line per extension, `<semantics>: {members}`; a query with no
/// extensions renders as `<semantics>: none`.
pub fn render_extensions_text(extensions: &ExtensionSet) -> String {
    if extensions.is_empty() {
        return format!("{}: none", extensions.semantics());
    }
    extensions
        .iter()
        .map(|ext| format!("{}: {ext}", extensions.semantics()))
        .collect::<Vec<_>>()
        .join("\n")
}

fn json_string_array(names: impl Iterator<Item = String>) -> String {
    let quoted: Vec<String> = names.map(|n| format!("\"{n}\"")).collect();
    format!("[{}]", quoted.join(","))
}

fn json_extension_array(extensions: &ExtensionSet) -> String {
    let sets: Vec<String> = extensions
        .iter()
        .map(|ext| json_string_array(ext.iter().map(|id| id.as_str().to_string())))
        .collect();
    format!("[{}]", sets.join(","))
}

/// A single JSON object: `{"semantics":...,"extensions":[[...],...]}`.
pub fn render_extensions_json(extensions: &ExtensionSet) -> String {
    format!(
        "{{\"semantics\":\"{}\",\"extensions\":{}}}",
        extensions.semantics(),
        json_extension_array(extensions)
    )
}

/// The canonical framework document: sorted `arg` statements, then
/// sorted `att` statements. Parsing the result gives back an equal
/// framework.
pub fn render_framework_text(fw: &Framework) -> String {
    let mut out = String::new();
    for a in fw.arguments() {
        let _ = writeln!(out, "arg({a}).");
    }
    for attack in fw.attacks() {
        let _ = writeln!(
            out,
            "att({},{},{}).",
            attack.id(),
            attack.source(),
            attack.target().id
        );
    }
    out
}

/// The framework as a JSON object with explicit target kinds.
pub fn render_framework_json(fw: &Framework) -> String {
    let arguments = json_string_array(fw.arguments().map(|a| a.as_str().to_string()));
    let attacks: Vec<String> = fw
        .attacks()
        .iter()
        .map(|attack| {
            let kind = match attack.target().kind {
                ElementKind::Argument => "argument",
                ElementKind::Attack => "attack",
            };
            format!(
                "{{\"id\":\"{}\",\"source\":\"{}\",\"target\":{{\"kind\":\"{kind}\",\"id\":\"{}\"}}}}",
                attack.id(),
                attack.source(),
                attack.target().id
            )
        })
        .collect();
    format!(
        "{{\"arguments\":{arguments},\"attacks\":[{}]}}",
        attacks.join(",")
    )
}

/// The defeat relation in dot form: arguments are boxes, attacks are
/// ellipses, direct defeats are solid edges and indirect ones dashed.
pub fn render_defeat_dot(fw: &Framework) -> String {
    let mut out = String::from("digraph defeat {\n  rankdir=LR;\n");
    for id in fw.element_ids() {
        let shape = match fw.kind_of(id.as_str()).expect("listed element") {
            ElementKind::Argument => "box",
            ElementKind::Attack => "ellipse",
        };
        let _ = writeln!(out, "  {id} [shape={shape}];");
    }
    for edge in defeat::defeat_relation(fw) {
        let style = match edge.mode {
            DefeatMode::Direct => "solid",
            DefeatMode::Indirect => "dashed",
        };
        let _ = writeln!(out, "  {} -> {} [style={style}];", edge.attacker, edge.victim);
    }
    out.push_str("}\n");
    out
}

/// The admissible sets ordered by inclusion, in dot form: one node per
/// set, one edge per covering pair, smaller sets below.
pub fn render_hasse_dot(fw: &Framework, config: &SolveConfig) -> Result<String, SolveError> {
    let admissible = semantics::admissible_sets(fw, config)?;
    let sets = admissible.extensions();
    let strictly_inside =
        |small: &ElementSet, big: &ElementSet| small != big && small.is_subset(big);
    let mut out = String::from("digraph admissible {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, s) in sets.iter().enumerate() {
        let _ = writeln!(out, "  s{i} [label=\"{s}\"];");
    }
    for (i, small) in sets.iter().enumerate() {
        for (j, big) in sets.iter().enumerate() {
            if !strictly_inside(small, big) {
                continue;
            }
            let covered = sets
                .iter()
                .enumerate()
                .any(|(k, mid)| {
                    k != i && k != j && strictly_inside(small, mid) && strictly_inside(mid, big)
                });
            if !covered {
                let _ = writeln!(out, "  s{i} -> s{j};");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// The flattened defeat graph as a classical framework document:
/// `arg/1` statements for every element, `att/2` statements for every
/// defeat.
pub fn render_flatten_apx(fw: &Framework) -> String {
    let af = dung::flatten(fw);
    let mut out = String::new();
    for a in af.arguments() {
        let _ = writeln!(out, "arg({a}).");
    }
    for (source, target) in af.attack_pairs() {
        let _ = writeln!(out, "att({source},{target}).");
    }
    out
}

fn push_extension_lines(out: &mut String, extensions: &ExtensionSet) {
    if extensions.is_empty() {
        out.push_str("  none\n");
        return;
    }
    for ext in extensions.iter() {
        let _ = writeln!(out, "  {ext}");
    }
}

/// A readable account of one reference-versus-solver comparison.
pub fn render_report_text(report: &OracleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "semantics: {}", report.semantics);
    out.push_str("solver:\n");
    push_extension_lines(&mut out, &report.solver_result);
    out.push_str("oracle:\n");
    push_extension_lines(&mut out, &report.oracle_result);
    let _ = write!(out, "agree: {}", if report.agree { "yes" } else { "no" });
    out
}

/// The same comparison as a single JSON object.
pub fn render_report_json(report: &OracleReport) -> String {
    format!(
        "{{\"semantics\":\"{}\",\"agree\":{},\"solver\":{},\"oracle\":{}}}",
        report.semantics,
        report.agree,
        json_extension_array(&report.solver_result),
        json_extension_array(&report.oracle_result)
    )
}
