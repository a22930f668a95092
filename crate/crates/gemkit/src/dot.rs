//! Graphviz export. Export only: there is no DOT reader.

use std::fmt::Write;

use gemkit_core::Gem;

const PALETTE: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];

/// Render `gem` as an undirected DOT graph.
///
/// Every colored edge is its own DOT edge labeled with its color; parallel
/// edges between the same pair are written consecutively.
pub fn export_dot(gem: &Gem) -> String {
    let mut out = String::new();
    writeln!(out, "graph gem {{").unwrap();
    writeln!(out, "  // dimension {}", gem.dimension()).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (v, label) in gem.labels().iter().enumerate() {
        writeln!(out, "  {v} [label=\"{}\"];", escape(&label.to_string())).unwrap();
    }
    for e in gem.edges() {
        let c = e.color.index();
        writeln!(out, "  {} -- {} [label=\"{c}\", color=\"{}\"];", e.u, e.v, PALETTE[c % PALETTE.len()]).unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use gemkit_core::constructions::{product_gem, standard_sphere};

    #[test]
    fn sphere_export() {
        let dot = export_dot(&standard_sphere(1).unwrap());
        assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("--")).count(), 2);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 2);
        assert!(dot.contains("0 -- 1 [label=\"0\""));
        assert!(dot.contains("0 -- 1 [label=\"1\""));
        assert!(dot.contains("[label=\"v^1\"]"));
    }

    #[test]
    fn product_export_nodes() {
        let g = product_gem(3, 4).unwrap();
        let dot = export_dot(&g);
        let nodes = dot.lines().filter(|l| l.ends_with("\"];") && !l.contains("--")).count();
        assert_eq!(nodes, 32);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), g.edge_count());
        assert_eq!(dot, export_dot(&g.clone()));
    }
}
