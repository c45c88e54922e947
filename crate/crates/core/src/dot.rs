//! Graphviz output for cell graphs and codimension-one graphs.
//!
//! Graphs are undirected; vertex names are the text encodings of tableaux.
//! Vertices and edges are emitted in a fixed order so equal graphs give
//! byte-identical files.

use std::fmt::Write as _;

use crate::intersections::PairwiseTable;
use crate::rscells::CellGraph;

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn cell_graph_dot(graph: &CellGraph) -> String {
    let mut s = String::from("graph cell_graph {\n");
    let _ = writeln!(s, "  label={};", quote(&format!("base {}", graph.base)));
    for v in &graph.vertices {
        let _ = writeln!(s, "  {};", quote(&v.to_string()));
    }
    for e in &graph.edges {
        let _ = writeln!(
            s,
            "  {} -- {} [label={}];",
            quote(&graph.vertices[e.a].to_string()),
            quote(&graph.vertices[e.b].to_string()),
            e.label
        );
    }
    s.push_str("}\n");
    s
}

/// Pairs of orbital varieties meeting in codimension one.
pub fn codim1_dot(table: &PairwiseTable) -> String {
    let mut s = String::from("graph codim1 {\n");
    for t in &table.tableaux {
        let _ = writeln!(s, "  {};", quote(&t.to_string()));
    }
    for (a, b) in table.codim1_pairs() {
        let _ = writeln!(
            s,
            "  {} -- {};",
            quote(&table.tableaux[a].to_string()),
            quote(&table.tableaux[b].to_string())
        );
    }
    s.push_str("}\n");
    s
}
