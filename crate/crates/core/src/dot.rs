//! Hasse diagrams as Graphviz DOT text.

use std::fmt::Write;

use crate::poset::Poset;

/// One diagram: a poset and optional display text for each vertex.
struct Panel<'a> {
    poset: &'a Poset,
    captions: Option<Vec<String>>,
}

/// Lays out several Hasse diagrams in one `digraph`, `columns` per row.
///
/// Edges are the covering pairs, drawn bottom-to-top; vertices of equal height
/// share a rank.
pub struct HasseDot<'a> {
    panels: Vec<Panel<'a>>,
}

impl<'a> Default for HasseDot<'a> {
    fn default() -> Self {
        Self::new()
    }
}

impl<'a> HasseDot<'a> {
    pub fn new() -> Self {
        HasseDot { panels: Vec::new() }
    }

    pub fn add(&mut self, poset: &'a Poset) -> &mut Self {
        self.panels.push(Panel {
            poset,
            captions: None,
        });
        self
    }

    /// Adds a poset whose vertices are displayed with `captions` instead of
    /// their labels.
    pub fn add_captioned(&mut self, poset: &'a Poset, captions: Vec<String>) -> &mut Self {
        assert_eq!(captions.len(), poset.len(), "one caption per vertex");
        self.panels.push(Panel {
            poset,
            captions: Some(captions),
        });
        self
    }

    pub fn render(&self, columns: usize) -> String {
        let columns = columns.max(1);
        let mut out = String::from("digraph hasse {\n");
        if self.panels.is_empty() {
            out.push_str("}\n");
            return out;
        }
        out.push_str(
            "  rankdir=BT;\n  newrank=true;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n",
        );
        for (k, panel) in self.panels.iter().enumerate() {
            let (row, col) = (k / columns, k % columns);
            let p = panel.poset;
            let _ = writeln!(out, "  subgraph cluster_{k} {{");
            let _ = writeln!(out, "    label=\"row {} col {}\";", row + 1, col + 1);
            let _ = writeln!(out, "    style=invis;");
            for i in 0..p.len() {
                let text = match &panel.captions {
                    Some(c) => c[i].as_str(),
                    None => p.label(i).as_str(),
                };
                let _ = writeln!(out, "    p{k}_{i} [label=\"{}\"];", escape(text));
            }
            let heights = p.heights();
            for h in 1..=heights.iter().copied().max().unwrap_or(0) {
                let members: Vec<String> = (0..p.len())
                    .filter(|&i| heights[i] == h)
                    .map(|i| format!("p{k}_{i}"))
                    .collect();
                let _ = writeln!(out, "    {{ rank=same; {}; }}", members.join("; "));
            }
            for (a, b) in p.cover_indices() {
                let _ = writeln!(out, "    p{k}_{a} -> p{k}_{b};");
            }
            out.push_str("  }\n");
        }
        // Stack rows: link the first vertex of each panel to the one a row below.
        for k in columns..self.panels.len() {
            let above = k - columns;
            if !self.panels[k].poset.is_empty() && !self.panels[above].poset.is_empty() {
                let top = self.panels[above].poset.minimal()[0];
                let bottom = self.panels[k].poset.maximal()[0];
                let _ = writeln!(out, "  p{k}_{bottom} -> p{above}_{top} [style=invis];");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT text for the Hasse diagrams of `posets`, arranged `columns` per row.
pub fn hasse_dot(posets: &[Poset], columns: usize) -> String {
    let mut dot = HasseDot::new();
    for p in posets {
        dot.add(p);
    }
    dot.render(columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_chain() {
        let dot = hasse_dot(&[Poset::chain(2)], 1);
        assert_eq!(dot.matches("[label=").count(), 2);
        assert_eq!(dot.matches(" -> ").count(), 1);
        assert!(dot.contains("p0_0 -> p0_1;"));
    }

    #[test]
    fn two_panels() {
        let c3 = Poset::from_pairs([("c1", "c2"), ("c2", "c3")]).unwrap();
        let dot = hasse_dot(&[c3.clone(), Poset::chain(3)], 2);
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
        assert!(dot.contains("label=\"c2\""));
        assert!(!dot.contains("style=invis]"));
        assert_eq!(dot, hasse_dot(&[c3, Poset::chain(3)], 2));
    }

    #[test]
    fn rows_are_stacked() {
        let ps = vec![Poset::chain(2); 3];
        let dot = hasse_dot(&ps, 2);
        assert!(dot.contains("label=\"row 2 col 1\""));
        assert!(dot.contains("p2_1 -> p0_0 [style=invis];"));
    }

    #[test]
    fn empty_input() {
        assert_eq!(hasse_dot(&[], 1), "digraph hasse {\n}\n");
    }

    #[test]
    fn captions_are_escaped() {
        let p = Poset::chain(1);
        let mut dot = HasseDot::new();
        dot.add_captioned(&p, vec!["a\"b".into()]);
        assert!(dot.render(1).contains("label=\"a\\\"b\""));
    }
}
