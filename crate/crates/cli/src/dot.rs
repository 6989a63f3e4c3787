//! Hasse diagrams in DOT syntax, drawn bottom to top.

use orderkit::canonical::canonically_ordered;
use orderkit::FinitePoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes in canonical order, then one `lower -> upper` edge per cover.
pub fn export_dot(p: &FinitePoset) -> String {
    let q = canonically_ordered(p);
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(q.name()));
    for l in q.labels() {
        out.push_str(&format!("  {};\n", quote(l)));
    }
    for (x, y) in q.hasse() {
        out.push_str(&format!("  {} -> {};\n", quote(q.label(x)), quote(q.label(y))));
    }
    out.push_str("}\n");
    out
}
