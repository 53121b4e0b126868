//! SVG 1.1 output of a [`NodeTrixLayout`].

use std::fmt::Write;

use super::render::{NodeTrixLayout, Pt};
use crate::model::ClusteredGraph;

const MARGIN: f64 = 20.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Matrices are k-by-k grids whose cells are filled symmetrically for each
/// intra-cluster edge; inter-cluster edges are polylines; trivial clusters
/// are dots. The output depends only on its inputs.
pub fn render_svg(g: &ClusteredGraph, layout: &NodeTrixLayout) -> String {
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let Some((lo, hi)) = layout.bounds() else {
        out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"0\" height=\"0\" viewBox=\"0 0 0 0\"/>\n");
        return out;
    };
    let (w, h) = (hi.0 - lo.0 + 2.0 * MARGIN, hi.1 - lo.1 + 2.0 * MARGIN);
    let tr = |p: Pt| (p.0 - lo.0 + MARGIN, p.1 - lo.1 + MARGIN);
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    )
    .unwrap();
    out.push_str("<g id=\"edges\" fill=\"none\" stroke=\"#335\" stroke-width=\"0.6\">\n");
    for r in &layout.routes {
        let [u, v] = g.edges[r.edge];
        let pts: Vec<String> = r.polyline.iter().map(|&p| tr(p)).map(|(x, y)| format!("{x},{y}")).collect();
        writeln!(
            out,
            "<polyline points=\"{}\"><title>{}-{}</title></polyline>",
            pts.join(" "),
            escape(&g.vertex_names[u]),
            escape(&g.vertex_names[v])
        )
        .unwrap();
    }
    out.push_str("</g>\n<g id=\"matrices\">\n");
    for m in &layout.matrices {
        let (x0, y0) = tr(m.corner);
        let cell = m.cell();
        let stroke = cell / 12.0;
        writeln!(out, "<g><title>{}</title>", escape(&g.clusters[m.cluster].name)).unwrap();
        writeln!(
            out,
            "<rect x=\"{x0}\" y=\"{y0}\" width=\"{s}\" height=\"{s}\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"{stroke}\"/>",
            s = m.size
        )
        .unwrap();
        for i in 1..m.order.len() {
            let t = i as f64 * cell;
            writeln!(
                out,
                "<path d=\"M{} {y0}V{}M{x0} {}H{}\" stroke=\"#999\" stroke-width=\"{}\"/>",
                x0 + t,
                y0 + m.size,
                y0 + t,
                x0 + m.size,
                stroke / 2.0
            )
            .unwrap();
        }
        let index = |v: usize| m.order.iter().position(|&x| x == v);
        let mut cells: Vec<(usize, usize)> = Vec::new();
        for e in g.intra_edges() {
            let [u, v] = g.edges[e];
            if g.cluster_of(u) != m.cluster {
                continue;
            }
            let (i, j) = (index(u).unwrap(), index(v).unwrap());
            cells.push((i, j));
            cells.push((j, i));
        }
        cells.sort_unstable();
        cells.dedup();
        for (row, col) in cells {
            writeln!(
                out,
                "<rect x=\"{}\" y=\"{}\" width=\"{cell}\" height=\"{cell}\" fill=\"#358\"/>",
                x0 + col as f64 * cell,
                y0 + row as f64 * cell
            )
            .unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</g>\n<g id=\"points\" fill=\"#000\">\n");
    for &(v, p) in &layout.points {
        let (x, y) = tr(p);
        writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"2\"><title>{}</title></circle>", escape(&g.vertex_names[v]))
            .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
