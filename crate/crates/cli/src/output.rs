//! Text and JSON rendering. Both modes carry identical mathematical
//! content; JSON documents are versioned with `"schema": 1`.

use std::io::Write;

use serde_json::{json, Map, Value};

use spline_core::generators::Generator;
use spline_core::graph::ZeroComponentPartition;
use spline_core::ring::TableEntry;
use spline_core::{
    EdgeLabeledGraph, GeneratingSet, ModulusContext, MultiplicationTable, Spline,
};

use crate::Check;

pub fn error_json(code: &str, message: &str) -> Value {
    json!({"schema": 1, "error": {"code": code, "message": message}})
}

fn values_map(g: &EdgeLabeledGraph, s: &Spline) -> Map<String, Value> {
    g.vertex_names()
        .iter()
        .enumerate()
        .map(|(i, name)| (name.clone(), json!(s.value(i))))
        .collect()
}

fn generator_json(g: &EdgeLabeledGraph, gen: &Generator) -> Value {
    json!({
        "values": values_map(g, gen.spline()),
        "leading_vertex": g.vertex_name(gen.leading_vertex()),
        "constant_value": gen.constant_value(),
        "level": gen.origin_level(),
    })
}

pub fn gens_json(g: &EdgeLabeledGraph, m: u64, set: &GeneratingSet) -> Value {
    json!({
        "schema": 1,
        "modulus": m,
        "rank": set.len(),
        "generators": set.iter().map(|gen| generator_json(g, gen)).collect::<Vec<_>>(),
    })
}

pub fn basis_json(g: &EdgeLabeledGraph, basis: &GeneratingSet) -> Value {
    json!({
        "schema": 1,
        "mode": "integers",
        "count": basis.len(),
        "generators": basis.iter().map(|gen| generator_json(g, gen)).collect::<Vec<_>>(),
    })
}

/// Rebuilds a generating set from the JSON that `gens` emits, resolving
/// vertex names through the graph the set was computed on.
pub fn parse_generating_set_json(
    g: &EdgeLabeledGraph,
    text: &str,
) -> Result<(u64, GeneratingSet), String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc["schema"] != json!(1) {
        return Err("unsupported schema".into());
    }
    let m = doc["modulus"]
        .as_u64()
        .ok_or("missing or invalid modulus")?;
    let generators = doc["generators"]
        .as_array()
        .ok_or("missing generators array")?;
    let mut rebuilt = Vec::with_capacity(generators.len());
    for obj in generators {
        let values_obj = obj["values"].as_object().ok_or("missing values map")?;
        let mut values = Vec::with_capacity(g.n_vertices());
        for name in g.vertex_names() {
            let v = values_obj
                .get(name)
                .and_then(Value::as_i64)
                .ok_or_else(|| format!("missing value for vertex {name:?}"))?;
            values.push(v);
        }
        let level = obj["level"].as_u64().map(|l| l as u32);
        rebuilt.push(Generator::new(
            Spline::new(values, ModulusContext::ModM(m)),
            level,
        ));
    }
    let set = GeneratingSet::new(rebuilt).map_err(|e| e.to_string())?;
    Ok((m, set))
}

fn spline_text(g: &EdgeLabeledGraph, s: &Spline) -> String {
    let body = g
        .vertex_names()
        .iter()
        .enumerate()
        .map(|(i, name)| format!("{name}: {}", s.value(i)))
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{ {body} }}")
}

/// Column vector with the highest-index vertex on top.
fn column_text(s: &Spline) -> String {
    let body = s
        .values()
        .iter()
        .rev()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    format!("({body})^T")
}

pub fn gens_text(
    out: &mut dyn Write,
    g: &EdgeLabeledGraph,
    set: &GeneratingSet,
    paper_order: bool,
    header: &str,
) -> std::io::Result<()> {
    writeln!(out, "{header}")?;
    for (i, gen) in set.iter().enumerate() {
        let mut notes = vec![format!("leading {}", g.vertex_name(gen.leading_vertex()))];
        if let Some(c) = gen.constant_value() {
            notes.push(format!("value {c}"));
        }
        if let Some(level) = gen.origin_level() {
            notes.push(format!("level {level}"));
        }
        writeln!(
            out,
            "  b{} ({}): {}",
            i + 1,
            notes.join(", "),
            spline_text(g, gen.spline())
        )?;
        if paper_order {
            writeln!(out, "      {}", column_text(gen.spline()))?;
        }
    }
    Ok(())
}

pub fn components_json(g: &EdgeLabeledGraph, parts: &ZeroComponentPartition) -> Value {
    json!({
        "schema": 1,
        "modulus": parts.level(),
        "count": parts.len(),
        "components": parts.components().iter().map(|c| json!({
            "index": g.vertex_name(c.index()),
            "vertices": c.vertices().iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn components_text(
    out: &mut dyn Write,
    g: &EdgeLabeledGraph,
    parts: &ZeroComponentPartition,
) -> std::io::Result<()> {
    writeln!(
        out,
        "zero-connected components mod {}: {}",
        parts.level(),
        parts.len()
    )?;
    for c in parts.components() {
        let members = c
            .vertices()
            .iter()
            .map(|&v| g.vertex_name(v).to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "  [{}] {}", g.vertex_name(c.index()), members)?;
    }
    Ok(())
}

pub fn rank_json(m: u64, rank: usize, factors: &[(u64, u32, usize)]) -> Value {
    json!({
        "schema": 1,
        "modulus": m,
        "rank": rank,
        "factors": factors.iter().map(|&(p, e, count)| json!({
            "prime": p,
            "exponent": e,
            "zero_components": count,
        })).collect::<Vec<_>>(),
    })
}

pub fn rank_text(
    out: &mut dyn Write,
    m: u64,
    rank: usize,
    factors: &[(u64, u32, usize)],
) -> std::io::Result<()> {
    writeln!(out, "rank mod {m}: {rank}")?;
    for &(p, e, count) in factors {
        writeln!(
            out,
            "  mod {}: {count} zero-connected components",
            p.pow(e)
        )?;
    }
    Ok(())
}

pub fn classes_json(g: &EdgeLabeledGraph, m: u64, classes: &[Vec<usize>]) -> Value {
    json!({
        "schema": 1,
        "modulus": m,
        "count": classes.len(),
        "classes": classes.iter().map(|c| {
            c.iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

pub fn classes_text(
    out: &mut dyn Write,
    g: &EdgeLabeledGraph,
    m: u64,
    classes: &[Vec<usize>],
) -> std::io::Result<()> {
    writeln!(out, "forced-equal classes mod {m}: {}", classes.len())?;
    for c in classes {
        let members = c
            .iter()
            .map(|&v| g.vertex_name(v).to_string())
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(out, "  {{ {members} }}")?;
    }
    Ok(())
}

fn entry_json(entry: &TableEntry) -> Value {
    match entry {
        TableEntry::Zero => json!({"type": "zero"}),
        TableEntry::ScalarMultiple { coeff, index } => {
            json!({"type": "scalar", "coeff": coeff, "index": index})
        }
        TableEntry::GeneralCombination(coeffs) => {
            json!({"type": "combination", "coeffs": coeffs})
        }
    }
}

fn entry_text(entry: &TableEntry) -> String {
    match entry {
        TableEntry::Zero => "0".into(),
        TableEntry::ScalarMultiple { coeff, index } => format!("{coeff}*b{}", index + 1),
        TableEntry::GeneralCombination(coeffs) => {
            let terms: Vec<String> = coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, c)| format!("{c}*b{}", i + 1))
                .collect();
            terms.join(" + ")
        }
    }
}

pub fn multable_json(
    g: &EdgeLabeledGraph,
    set: &GeneratingSet,
    table: &MultiplicationTable,
    kind: &str,
) -> Value {
    json!({
        "schema": 1,
        "modulus": table.modulus(),
        "kind": kind,
        "size": table.size(),
        "generators": set.iter().map(|gen| generator_json(g, gen)).collect::<Vec<_>>(),
        "entries": table.rows().iter().map(|row| {
            row.iter().map(entry_json).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

pub fn multable_text(
    out: &mut dyn Write,
    set: &GeneratingSet,
    table: &MultiplicationTable,
    kind: &str,
) -> std::io::Result<()> {
    writeln!(
        out,
        "multiplication table mod {} ({kind}), {} generators",
        table.modulus(),
        set.len()
    )?;
    for i in 0..table.size() {
        for j in i..table.size() {
            writeln!(out, "  b{}*b{} = {}", i + 1, j + 1, entry_text(table.entry(i, j)))?;
        }
    }
    Ok(())
}

pub fn verify_json(m: u64, checks: &[Check], all_pass: bool) -> Value {
    json!({
        "schema": 1,
        "modulus": m,
        "pass": all_pass,
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn verify_text(
    out: &mut dyn Write,
    m: u64,
    checks: &[Check],
    all_pass: bool,
) -> std::io::Result<()> {
    writeln!(out, "verification mod {m}")?;
    for c in checks {
        writeln!(
            out,
            "  check {}: {} ({})",
            c.name,
            if c.pass { "PASS" } else { "FAIL" },
            c.detail
        )?;
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    writeln!(
        out,
        "result: {} ({passed}/{} checks)",
        if all_pass { "PASS" } else { "FAIL" },
        checks.len()
    )
}
