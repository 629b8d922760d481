use std::collections::BTreeMap;
use std::fmt::Write;

use crate::report::{ClassifyReport, IndecsReport, LatticeReport, TheoriesReport};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn classify_text(r: &ClassifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "name: {}", r.name);
    let _ = writeln!(s, "string algebra: {}", yes(r.is_string_algebra));
    if let Some(v) = &r.string_violation {
        let _ = writeln!(s, "  violation: {v}");
    }
    match &r.band {
        Some(b) => {
            let _ = writeln!(s, "band: {b} (representation-infinite, lattices refused)");
        }
        None if r.is_string_algebra => {
            let _ = writeln!(s, "band: none");
        }
        None => {}
    }
    let _ = writeln!(s, "distributive: {}", yes(r.distributive));
    if let Some(w) = &r.distributive_witness {
        let _ = writeln!(s, "  witness: {w}");
    }
    let _ = writeln!(s, "locally representation-directed: {}", yes(r.lrd));
    if let Some(w) = &r.lrd_witness {
        let _ = writeln!(s, "  witness: {w}");
    }
    let comps: Vec<String> = r.components.iter().map(|c| format!("{{{}}}", c.join(", "))).collect();
    let _ = writeln!(s, "components: {}", comps.join(" "));
    s
}

pub fn indecs_text(r: &IndecsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {} indecomposables over {} ({})", r.name, r.count, r.field, r.method);
    let width = r.indecomposables.iter().map(|m| m.label.len()).max().unwrap_or(0).max(5);
    let _ = writeln!(s, "{:>3}  {:<width$}  {:<12}  brick  tau-rigid  unique-max", "#", "label", "dims");
    for m in &r.indecomposables {
        let dims = format!("{:?}", m.dims);
        let _ = writeln!(
            s,
            "{:>3}  {:<width$}  {:<12}  {:<5}  {:<9}  {}",
            m.index,
            m.label,
            dims,
            yes(m.brick),
            yes(m.tau_rigid),
            yes(m.unique_max)
        );
    }
    s
}

pub fn lattice_text(r: &LatticeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {} lattice: {} elements, {} Hasse edges", r.name, r.kind, r.size, r.hasse_edges.len());
    for e in &r.elements {
        let mark = if e.join_irreducible { "*" } else { " " };
        let _ = writeln!(s, "{mark}{:>4}  {}", e.index, e.label);
    }
    let _ = writeln!(s, "join-irreducible (*): {}", r.join_irreducibles.len());
    let _ = writeln!(s, "distributive: {}", yes(r.distributive));
    if let Some(t) = &r.distributivity_failure {
        let _ = writeln!(s, "  failing triple: {} | {} | {}", t.x, t.y, t.z);
    }
    let _ = writeln!(s, "semidistributive: {}", yes(r.semidistributive));
    if let Some(t) = &r.semidistributivity_failure {
        let _ = writeln!(
            s,
            "  {}-semidistributivity fails at {} | {} | {}",
            t.side.as_deref().unwrap_or("?"),
            t.x,
            t.y,
            t.z
        );
    }
    for k in &r.kappa_failures {
        let _ = writeln!(s, "  no kappa for {}: maximal {}", k.join_irreducible, k.maximal.join(", "));
    }
    let _ = writeln!(s, "order ideals of join-irreducibles: {}", r.birkhoff_size);
    s
}

pub fn theories_text(r: &TheoriesReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}: {} pretorsion theories among {} pairs{}",
        r.name,
        r.count,
        r.pairs_checked,
        if r.audit { " (audited)" } else { "" }
    );
    let mut groups: BTreeMap<usize, Vec<_>> = BTreeMap::new();
    let mut order = Vec::new();
    for t in &r.theories {
        let k = match order.iter().position(|o: &String| *o == t.route) {
            Some(k) => k,
            None => {
                order.push(t.route.clone());
                order.len() - 1
            }
        };
        groups.entry(k).or_default().push(t);
    }
    for (k, ts) in groups {
        let _ = writeln!(s, "{} ({}):", order[k], ts.len());
        for t in ts {
            let _ = writeln!(s, "  T = {}, F = {}, Z = {}", t.torsion, t.free, t.trivial);
        }
    }
    s
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram with the bottom at the bottom, one rank per total
/// dimension, join-irreducibles drawn in red.
pub fn lattice_dot(r: &LatticeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph {} {{", quote(&format!("{}-{}", r.name, r.kind)));
    let _ = writeln!(s, "  rankdir=BT;");
    let _ = writeln!(s, "  node [shape=box];");
    for e in &r.elements {
        let extra = if e.join_irreducible { ", color=red" } else { "" };
        let _ = writeln!(s, "  n{} [label={}{}];", e.index, quote(&e.label), extra);
    }
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in &r.elements {
        ranks.entry(e.rank).or_default().push(e.index);
    }
    for nodes in ranks.values() {
        let names: Vec<String> = nodes.iter().map(|i| format!("n{i}")).collect();
        let _ = writeln!(s, "  {{ rank=same; {}; }}", names.join("; "));
    }
    for [a, b] in &r.hasse_edges {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}
