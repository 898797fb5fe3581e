//! Text emitters: Graphviz DOT, JSON and CSV. All output is deterministic for a fixed input.

use std::fmt::Write as _;
use std::io;

use serde_json::{json, Value};

use crate::free_product::Rep2Row;
use crate::local::DegenerationGraph;
use crate::quiver::{Quiver, QuiverSetting};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One digraph. A symmetric quiver gets one `dir=both` edge per unordered pair; otherwise
/// each ordered pair with arrows gets its own edge. Edge and loop labels are multiplicities.
pub fn quiver_to_dot(name: &str, q: &Quiver, labels: &[String], dims: Option<&[u32]>) -> String {
    let v = q.vertex_count();
    let label = |i: usize| labels.get(i).cloned().unwrap_or_else(|| i.to_string());
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for i in 0..v {
        let text = match dims {
            Some(d) => format!("{} [{}]", label(i), d[i]),
            None => label(i),
        };
        writeln!(out, "  v{i} [label={}];", quote(&text)).unwrap();
    }
    let symmetric = q.is_symmetric();
    for i in 0..v {
        let loops = q.loops(i);
        if loops > 0 {
            writeln!(out, "  v{i} -> v{i} [label=\"{loops}\"];").unwrap();
        }
        for j in 0..v {
            let k = q.arrows(i, j);
            if i == j || k == 0 || (symmetric && j < i) {
                continue;
            }
            if symmetric {
                writeln!(out, "  v{i} -> v{j} [dir=both, label=\"{k}\"];").unwrap();
            } else {
                writeln!(out, "  v{i} -> v{j} [label=\"{k}\"];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn setting_to_dot(name: &str, s: &QuiverSetting, labels: &[String]) -> String {
    quiver_to_dot(name, &s.quiver, labels, Some(&s.dims))
}

pub fn quiver_to_json(q: &Quiver) -> Value {
    serde_json::to_value(q).expect("quiver serializes")
}

fn setting_json(s: &QuiverSetting) -> Value {
    json!({
        "v": s.quiver.vertex_count(),
        "arrows": s.quiver.arrow_matrix(),
        "dims": s.dims,
    })
}

/// `{n, m, nodes: [{id, young: [[λ,μ]], k, quiver, smooth}], edges: [[from, to]]}`; labeled
/// graphs add each node's blocks.
pub fn graph_to_json(g: &DegenerationGraph) -> Value {
    let nodes: Vec<Value> = g
        .nodes
        .iter()
        .map(|node| {
            let mut v = json!({
                "id": node.id,
                "young": node.label.diagram(),
                "k": node.label.ks(),
                "quiver": setting_json(&node.quiver),
                "smooth": node.smooth,
            });
            if g.labeled {
                let blocks: Vec<Vec<usize>> = node
                    .setting
                    .blocks()
                    .iter()
                    .map(|b| b.elements().collect())
                    .collect();
                v["blocks"] = json!(blocks);
                v["k"] = json!(node.setting.k());
            }
            v
        })
        .collect();
    json!({
        "n": g.n,
        "m": g.m,
        "nodes": nodes,
        "edges": g.edges,
    })
}

/// Nodes carry Young labels (or labeled settings); smooth nodes are drawn as boxes, and
/// filled green/grey when `color` is set.
pub fn graph_to_dot(g: &DegenerationGraph, color: bool) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"degenerations_{}_{}\" {{", g.n, g.m).unwrap();
    out.push_str("  rankdir=TB;\n");
    for node in &g.nodes {
        let text = if g.labeled {
            node.setting.to_string()
        } else {
            node.label.to_string()
        };
        let shape = if node.smooth { "box" } else { "ellipse" };
        let fill = match (color, node.smooth) {
            (false, _) => String::new(),
            (true, true) => ", style=filled, fillcolor=\"palegreen\"".to_string(),
            (true, false) => ", style=filled, fillcolor=\"lightgrey\"".to_string(),
        };
        writeln!(
            out,
            "  n{} [label={}, shape={shape}{fill}];",
            node.id,
            quote(&text)
        )
        .unwrap();
    }
    for (a, b) in &g.edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// One line per node (`id label |k| smooth`), then one line per edge.
pub fn graph_to_text(g: &DegenerationGraph) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "n={} m={} nodes={} edges={}",
        g.n,
        g.m,
        g.nodes.len(),
        g.edges.len()
    )
    .unwrap();
    for node in &g.nodes {
        let text = if g.labeled {
            node.setting.to_string()
        } else {
            node.label.to_string()
        };
        writeln!(
            out,
            "{:>3}  {text}  |k|={}  {}",
            node.id,
            node.setting.k_total(),
            if node.smooth { "smooth" } else { "singular" }
        )
        .unwrap();
    }
    for (a, b) in &g.edges {
        writeln!(out, "{a} -> {b}").unwrap();
    }
    out
}

pub const REP2_CSV_HEADER: &str = "A,B,k,rep_dim,quot_dim,singularities";

/// Set fields are quoted because `{1,2}` contains commas.
pub fn rep2_csv_row(row: &Rep2Row) -> String {
    format!(
        "\"{}\",\"{}\",{},{},{},{}",
        row.a, row.b, row.k, row.rep_dim, row.quot_dim, row.singularities
    )
}

/// Streams the census as CSV.
pub fn write_rep2_csv(
    rows: impl Iterator<Item = Rep2Row>,
    mut w: impl io::Write,
) -> io::Result<()> {
    writeln!(w, "{REP2_CSV_HEADER}")?;
    for row in rows {
        writeln!(w, "{}", rep2_csv_row(&row))?;
    }
    Ok(())
}

/// Whitespace-aligned table with the singular local type.
pub fn write_rep2_text(
    rows: impl Iterator<Item = Rep2Row>,
    mut w: impl io::Write,
) -> io::Result<()> {
    writeln!(
        w,
        "{:<20} {:<20} {:>2} {:>7} {:>8} {:>13}  local type",
        "A", "B", "k", "rep_dim", "quot_dim", "singularities"
    )?;
    for row in rows {
        writeln!(
            w,
            "{:<20} {:<20} {:>2} {:>7} {:>8} {:>13}  {}",
            row.a.to_string(),
            row.b.to_string(),
            row.k,
            row.rep_dim,
            row.quot_dim,
            row.singularities,
            row.local_type()
        )?;
    }
    Ok(())
}
