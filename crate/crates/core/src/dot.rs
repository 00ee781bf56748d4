//! DOT renderings of graphs and spaces.
//!
//! A space renders as a digraph with one arc `x -> y` for every `y` in
//! `min_open(x)` other than `x` itself: arrows point at the points every
//! neighborhood must contain. Augmentation points can be highlighted.

use crate::graph::Graph;
use crate::space::FiniteSpace;

fn quote(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT rendering of a multigraph with edge ids as labels.
pub fn graph_to_dot(graph: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in graph.vertices() {
        out.push_str(&format!("  {};\n", quote(v)));
    }
    for e in graph.edges() {
        out.push_str(&format!(
            "  {} -- {} [label={}];\n",
            quote(&e.ends.0),
            quote(&e.ends.1),
            quote(&e.id)
        ));
    }
    out.push_str("}\n");
    out
}

/// Digraph rendering of a finite space; `highlight` names points drawn as
/// filled double circles (the entanglement-link points, typically).
pub fn space_to_dot(space: &FiniteSpace, highlight: &[String]) -> String {
    let mut out = String::from("digraph space {\n");
    for p in space.points() {
        if highlight.iter().any(|h| h == p) {
            out.push_str(&format!(
                "  {} [shape=doublecircle, style=filled, fillcolor=gold];\n",
                quote(p)
            ));
        } else {
            out.push_str(&format!("  {} [shape=circle];\n", quote(p)));
        }
    }
    for p in space.points() {
        let open = space.min_open(p).expect("own point");
        for q in open.iter() {
            if q != p {
                out.push_str(&format!("  {} -> {};\n", quote(p), quote(q)));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_topology, GraphEdge};

    #[test]
    fn space_dot_lists_min_open_arcs() {
        let g = Graph::new(
            ["a", "b"],
            vec![GraphEdge {
                id: "e".into(),
                ends: ("a".into(), "b".into()),
            }],
        )
        .unwrap();
        let dot = space_to_dot(&graph_topology(&g), &["e".to_string()]);
        assert!(dot.contains("\"a\" -> \"e\""));
        assert!(dot.contains("\"e\" [shape=doublecircle"));
        assert!(dot.starts_with("digraph space {"));
    }

    #[test]
    fn graph_dot_is_undirected() {
        let g = Graph::new(
            ["a", "b"],
            vec![GraphEdge {
                id: "e".into(),
                ends: ("a".into(), "b".into()),
            }],
        )
        .unwrap();
        let dot = graph_to_dot(&g);
        assert!(dot.contains("\"a\" -- \"b\" [label=\"e\"]"));
    }
}
