//! Colored Hasse diagrams as DOT and SVG text.
//!
//! Nodes are laid out by rank, bottom to top, in the poset's canonical order
//! within each level. Edges take the color of their simple root. When a
//! decomposition is highlighted, its chain edges are drawn bold and all
//! other edges dimmed.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poset::GradedPoset;
use crate::rootsys::ColorMap;
use crate::scd::ChainDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LabelMode {
    #[default]
    Partition,
    Composition,
    Young,
}

#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub labels: LabelMode,
    pub colors: ColorMap,
    pub highlight: Option<ChainDecomposition>,
    /// Largest poset height `to_svg` accepts.
    pub max_height: usize,
}

impl RenderSpec {
    /// Standard palette sized to every root index used by `p`.
    pub fn for_poset(p: &GradedPoset) -> Self {
        let roots = p
            .covers()
            .iter()
            .map(|c| c.color)
            .max()
            .unwrap_or(0)
            .max(p.shape().map_or(0, |s| s.n));
        RenderSpec {
            labels: LabelMode::default(),
            colors: ColorMap::standard(roots),
            highlight: None,
            max_height: 60,
        }
    }

    pub fn labels(mut self, labels: LabelMode) -> Self {
        self.labels = labels;
        self
    }

    pub fn highlight(mut self, d: ChainDecomposition) -> Self {
        self.highlight = Some(d);
        self
    }

    fn color(&self, root: usize) -> &str {
        self.colors.color(root).unwrap_or("black")
    }

    /// Set of `(lower, upper)` index pairs lying on highlighted chains.
    fn chain_edges(&self, p: &GradedPoset) -> HashSet<(usize, usize)> {
        let mut edges = HashSet::new();
        let Some(d) = &self.highlight else {
            return edges;
        };
        for c in d.chains() {
            for w in c.elements().windows(2) {
                if let (Some(upper), Some(lower)) = (p.index_of(&w[0]), p.index_of(&w[1])) {
                    edges.insert((lower, upper));
                }
            }
        }
        edges
    }
}

/// Part sizes of element `i` when the poset is a Young lattice.
fn parts(p: &GradedPoset, i: usize) -> Option<Vec<usize>> {
    p.partition_of(i).map(|q| q.parts().to_vec())
}

fn text_label(p: &GradedPoset, i: usize, mode: LabelMode) -> String {
    match (mode, p.partition_of(i)) {
        (LabelMode::Partition, Some(q)) => q.to_string(),
        (LabelMode::Young, Some(q)) if q.is_empty() => "∅".to_string(),
        (LabelMode::Young, Some(q)) => q
            .parts()
            .iter()
            .map(|&n| "█".repeat(n))
            .collect::<Vec<_>>()
            .join("\\n"),
        _ => p.elements()[i].to_string(),
    }
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

pub fn to_dot(p: &GradedPoset, spec: &RenderSpec) -> String {
    let bold = spec.chain_edges(p);
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(p.label())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext, fontname=\"monospace\"];").unwrap();
    for i in 0..p.len() {
        writeln!(
            out,
            "  n{i} [label=\"{}\"];",
            escape(&text_label(p, i, spec.labels))
        )
        .unwrap();
    }
    for level in p.levels() {
        let ids: Vec<String> = level.iter().map(|i| format!("n{i};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", ids.join(" ")).unwrap();
    }
    for c in p.covers() {
        let style = match (&spec.highlight, bold.contains(&(c.lower, c.upper))) {
            (None, _) => String::new(),
            (Some(_), true) => ", penwidth=3".to_string(),
            (Some(_), false) => ", style=dotted".to_string(),
        };
        writeln!(
            out,
            "  n{} -> n{} [color={}{style}];",
            c.lower,
            c.upper,
            spec.color(c.color)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

const DX: f64 = 72.0;
const DY: f64 = 64.0;
const MARGIN: f64 = 48.0;
const CELL: f64 = 6.0;

pub fn to_svg(p: &GradedPoset, spec: &RenderSpec) -> Result<String> {
    if p.height() > spec.max_height {
        return Err(Error::TooLarge {
            height: p.height(),
            limit: spec.max_height,
        });
    }
    let levels = p.levels();
    let widest = levels.iter().map(Vec::len).max().unwrap_or(1).max(1);
    let width = 2.0 * MARGIN + (widest - 1) as f64 * DX;
    let height = 2.0 * MARGIN + p.height() as f64 * DY;
    let mut pos = vec![(0.0, 0.0); p.len()];
    for (rank, level) in levels.iter().enumerate() {
        let k = level.len() as f64;
        for (slot, &i) in level.iter().enumerate() {
            let x = width / 2.0 + (slot as f64 - (k - 1.0) / 2.0) * DX;
            let y = MARGIN + (p.height() - rank) as f64 * DY;
            pos[i] = (x, y);
        }
    }

    let bold = spec.chain_edges(p);
    let mut out = String::new();
    writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>").unwrap();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
    )
    .unwrap();
    writeln!(out, "<title>{}</title>", xml_escape(p.label())).unwrap();
    writeln!(out, "<g id=\"edges\">").unwrap();
    for c in p.covers() {
        let (x1, y1) = pos[c.lower];
        let (x2, y2) = pos[c.upper];
        let style = match (&spec.highlight, bold.contains(&(c.lower, c.upper))) {
            (None, _) => "stroke-width=\"1.5\"",
            (Some(_), true) => "stroke-width=\"3.5\"",
            (Some(_), false) => "stroke-width=\"1\" stroke-opacity=\"0.25\"",
        };
        writeln!(
            out,
            "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" stroke=\"{}\" {style}/>",
            spec.color(c.color)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "<g id=\"nodes\">").unwrap();
    for (i, &(x, y)) in pos.iter().enumerate() {
        writeln!(
            out,
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"4\" fill=\"black\"/>"
        )
        .unwrap();
        match (spec.labels, parts(p, i)) {
            (LabelMode::Young, Some(rows)) if !rows.is_empty() => {
                writeln!(out, "<g class=\"young\">").unwrap();
                for (r, &len) in rows.iter().enumerate() {
                    for col in 0..len {
                        let cx = x + 8.0 + col as f64 * CELL;
                        let cy = y - 10.0 + r as f64 * CELL;
                        writeln!(
                            out,
                            "<rect x=\"{cx:.1}\" y=\"{cy:.1}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"white\" stroke=\"black\" stroke-width=\"0.6\"/>"
                        )
                        .unwrap();
                    }
                }
                writeln!(out, "</g>").unwrap();
            }
            _ => {
                let label = text_label(p, i, spec.labels);
                writeln!(
                    out,
                    "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"11\">{}</text>",
                    x + 7.0,
                    y - 5.0,
                    xml_escape(&label)
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "</g>").unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
