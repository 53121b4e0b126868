//! Geometric NodeTrix layouts and their crossing audit.
//!
//! The wheel reduction of a witness is triangulated inside every face and
//! drawn with barycentric coordinates, which realizes the witness embedding
//! (up to a global mirror, undone afterwards). Each matrix is a small square
//! around its hub. An edge leaves its attachment point radially, spirals
//! out to the spoke of its cycle vertex and follows the spoke to that
//! vertex. Attachment points and spokes share one cyclic order, so the
//! spirals can be chosen pairwise disjoint.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use nalgebra::DMatrix;
use nalgebra_sparse::coo::CooMatrix;
use nalgebra_sparse::csc::CscMatrix;
use nalgebra_sparse::factorization::CscCholesky;
use thiserror::Error;

use crate::embedding::Embedding;
use crate::graph::Graph;
use crate::model::{ClusteredGraph, Side};
use crate::oracle::Witness;
use crate::wheel::position_slot;

pub type Pt = (f64, f64);

/// Width of the outer triangle of the barycentric drawing.
const SCALE: f64 = 1000.0;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("barycentric system could not be factored")]
    Singular,
    #[error("drawing does not realize the witness embedding")]
    Orientation,
}

/// A non-trivial cluster drawn as an axis-aligned square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub cluster: usize,
    /// Top-left corner (y grows downwards).
    pub corner: Pt,
    pub size: f64,
    /// Column order, left to right (equal to the row order, top to bottom).
    pub order: Vec<usize>,
}

impl Matrix {
    pub fn cell(&self) -> f64 {
        self.size / self.order.len() as f64
    }

    /// Attachment point of the vertex at index `j` on `side`.
    pub fn attachment(&self, j: usize, side: Side) -> Pt {
        let (x0, y0) = self.corner;
        let t = (j as f64 + 0.5) * self.cell();
        match side {
            Side::Top => (x0 + t, y0),
            Side::Right => (x0 + self.size, y0 + t),
            Side::Bottom => (x0 + t, y0 + self.size),
            Side::Left => (x0, y0 + t),
        }
    }

    pub fn center(&self) -> Pt {
        (self.corner.0 + self.size / 2.0, self.corner.1 + self.size / 2.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Route {
    pub edge: usize,
    pub polyline: Vec<Pt>,
    /// Polyline indices where the part between the two clusters starts and
    /// ends. Points before and after belong to the attachment connectors.
    pub body: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct NodeTrixLayout {
    pub matrices: Vec<Matrix>,
    /// Position of the vertex of each trivial cluster.
    pub points: Vec<(usize, Pt)>,
    pub routes: Vec<Route>,
}

impl NodeTrixLayout {
    /// Bounding box as `(min, max)`.
    pub fn bounds(&self) -> Option<(Pt, Pt)> {
        let mut pts: Vec<Pt> = self.points.iter().map(|p| p.1).collect();
        for m in &self.matrices {
            pts.push(m.corner);
            pts.push((m.corner.0 + m.size, m.corner.1 + m.size));
        }
        pts.extend(self.routes.iter().flat_map(|r| r.polyline.iter().copied()));
        let first = *pts.first()?;
        Some(pts.iter().fold((first, first), |(lo, hi), &(x, y)| {
            ((lo.0.min(x), lo.1.min(y)), (hi.0.max(x), hi.1.max(y)))
        }))
    }
}

/// Lays out `g` (with sides) according to a witness for it.
pub fn compute_layout(g: &ClusteredGraph, w: &Witness) -> Result<NodeTrixLayout, RenderError> {
    let red = &w.reduction;
    let base = &red.graph;
    if base.n() == 0 {
        return Ok(NodeTrixLayout::default());
    }
    let pos = draw_embedding(base, &w.embedding)?;

    let hubs: Vec<usize> = red.wheels.iter().flatten().map(|wh| wh.hub).collect();
    let mut matrices = Vec::new();
    let mut connectors: HashMap<usize, Vec<Pt>> = HashMap::new();
    for wh in red.wheels.iter().flatten() {
        let h = pos[wh.hub];
        let rho = free_radius(base, &pos, wh.hub);
        let s = rho / 4.0;
        let m = Matrix { cluster: wh.cluster, corner: (h.0 - s, h.1 - s), size: 2.0 * s, order: wh.perm.clone() };
        let k = wh.k();
        let raw_alpha: Vec<f64> = (0..4 * k)
            .map(|p| {
                let (j, side) = position_slot(k, p);
                angle(h, m.attachment(j, side))
            })
            .collect();
        let raw_theta: Vec<f64> = wh.cycle.iter().map(|&c| angle(h, pos[c])).collect();
        let alpha = unwrap(&raw_alpha, raw_alpha[0]);
        let theta = unwrap(&raw_theta, alpha[0]);
        let steps = (0..4 * k)
            .map(|p| ((theta[p] - alpha[p]).abs() / 0.15).ceil() as usize)
            .max()
            .unwrap_or(0)
            .max(2);
        let r1 = 2.0 * s;
        for &p in wh.attachment.values() {
            if connectors.contains_key(&wh.cycle[p]) {
                continue;
            }
            let (j, side) = position_slot(k, p);
            let mut pts = vec![m.attachment(j, side)];
            for i in 0..=steps {
                let t = i as f64 / steps as f64;
                let r = r1 + t * (rho - r1);
                let a = alpha[p] + t * (theta[p] - alpha[p]);
                pts.push((h.0 + r * a.cos(), h.1 + r * a.sin()));
            }
            pts.push(pos[wh.cycle[p]]);
            connectors.insert(wh.cycle[p], pts);
        }
        matrices.push(m);
    }
    debug_assert!(hubs.iter().all(|&h| !connectors.contains_key(&h)));

    let mut routes = Vec::new();
    for e in g.inter_edges() {
        let [u, v] = g.edges[e];
        let a = red.endpoint(g, e, g.cluster_of(u));
        let b = red.endpoint(g, e, g.cluster_of(v));
        let mut polyline = connectors.get(&a).cloned().unwrap_or_else(|| vec![pos[a]]);
        let start = polyline.len() - 1;
        let mut tail = connectors.get(&b).cloned().unwrap_or_else(|| vec![pos[b]]);
        tail.reverse();
        let end = polyline.len();
        polyline.extend(tail);
        routes.push(Route { edge: e, polyline, body: [start, end] });
    }
    let points = (0..g.clusters.len())
        .filter(|&c| g.is_trivial(c))
        .map(|c| {
            let v = g.clusters[c].vertices[0];
            (v, pos[red.vertex_image[v].unwrap()])
        })
        .collect();
    Ok(NodeTrixLayout { matrices, points, routes })
}

fn angle(from: Pt, to: Pt) -> f64 {
    (to.1 - from.1).atan2(to.0 - from.0)
}

/// Lifts cyclically increasing angles to an increasing sequence whose first
/// element lies within half a turn of `near`.
fn unwrap(raw: &[f64], near: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(raw.len());
    let mut prev = near + (raw[0] - near + PI).rem_euclid(TAU) - PI;
    out.push(prev);
    for &a in &raw[1..] {
        prev += (a - prev).rem_euclid(TAU);
        out.push(prev);
    }
    out
}

/// Radius of a disk around `hub` that meets only its own spokes and stays
/// clear of the disks of other hubs.
fn free_radius(g: &Graph, pos: &[Pt], hub: usize) -> f64 {
    let h = pos[hub];
    let mut best = f64::INFINITY;
    for v in 0..g.n() {
        if v != hub {
            best = best.min(0.45 * dist(h, pos[v]));
        }
    }
    for &[a, b] in g.edges() {
        if a != hub && b != hub {
            best = best.min(0.9 * point_segment_distance(h, pos[a], pos[b]));
        }
    }
    if best.is_finite() {
        best
    } else {
        SCALE / 10.0
    }
}

fn dist(a: Pt, b: Pt) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn point_segment_distance(p: Pt, a: Pt, b: Pt) -> f64 {
    let d = (b.0 - a.0, b.1 - a.1);
    let len2 = d.0 * d.0 + d.1 * d.1;
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (((p.0 - a.0) * d.0 + (p.1 - a.1) * d.1) / len2).clamp(0.0, 1.0);
    dist(p, (a.0 + t * d.0, a.1 + t * d.1))
}

/// Straight-line drawing of `g` realizing `emb` in screen orientation
/// (clockwise rotations appear clockwise with y growing downwards).
fn draw_embedding(g: &Graph, emb: &Embedding) -> Result<Vec<Pt>, RenderError> {
    let mut h = g.clone();
    let mut rot: Vec<Vec<usize>> = emb.rotations().to_vec();
    // Hang every further component off the first vertex of the first.
    let (comp, count) = h.components();
    for c in 1..count {
        let r = (0..h.n()).find(|&v| comp[v] == c).unwrap();
        let e = h.add_edge(0, r);
        rot[0].push(e);
        rot[r].push(e);
    }
    let n = h.n();
    match n {
        1 => return Ok(vec![(0.0, 0.0)]),
        2 => return Ok(vec![(0.0, 0.0), (SCALE, 0.0)]),
        _ => {}
    }
    let joined = Embedding::new(rot);
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| h.neighbors(v).collect()).collect();
    let mut faces: Vec<Vec<usize>> =
        joined.faces(&h).into_iter().map(|f| f.into_iter().map(|d| d.tail).collect()).collect();
    faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
    let mut outer = None;
    let link = |adj: &mut Vec<Vec<usize>>, a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for f in &faces {
        let l = f.len();
        if l == 3 {
            outer.get_or_insert([f[0], f[1], f[2]]);
            continue;
        }
        // A center joined to one fresh vertex per corner; each corner vertex
        // also sees both ends of its face edge and the next corner vertex.
        let c = adj.len();
        adj.push(Vec::new());
        let s: Vec<usize> = (0..l)
            .map(|_| {
                adj.push(Vec::new());
                adj.len() - 1
            })
            .collect();
        for i in 0..l {
            link(&mut adj, c, s[i]);
            link(&mut adj, s[i], f[i]);
            link(&mut adj, s[i], f[(i + 1) % l]);
            link(&mut adj, s[i], s[(i + 1) % l]);
        }
        outer.get_or_insert([f[0], f[1], s[0]]);
    }
    let outer = outer.expect("a connected graph on three or more vertices has a face");
    let mut pos = tutte(&adj, outer)?;
    pos.truncate(n);
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) >= 3) {
        let want = emb.neighbor_order(g, v);
        let mut got = want.clone();
        got.sort_by(|&a, &b| angle(pos[v], pos[a]).total_cmp(&angle(pos[v], pos[b])));
        if !crate::embedding::cyclically_equal(&got, &want) {
            got.reverse();
            if !crate::embedding::cyclically_equal(&got, &want) {
                return Err(RenderError::Orientation);
            }
            for p in &mut pos {
                p.0 = -p.0;
            }
        }
    }
    Ok(pos)
}

/// Barycentric drawing with `outer` pinned to a triangle.
fn tutte(adj: &[Vec<usize>], outer: [usize; 3]) -> Result<Vec<Pt>, RenderError> {
    let n = adj.len();
    let corners = [(0.0, 0.0), (SCALE, 0.0), (SCALE / 2.0, SCALE * 0.866)];
    let mut pos = vec![(0.0, 0.0); n];
    let mut index = vec![usize::MAX; n];
    for (i, &v) in outer.iter().enumerate() {
        pos[v] = corners[i];
    }
    let inner: Vec<usize> = (0..n).filter(|v| !outer.contains(v)).collect();
    for (i, &v) in inner.iter().enumerate() {
        index[v] = i;
    }
    if inner.is_empty() {
        return Ok(pos);
    }
    let m = inner.len();
    let mut coo = CooMatrix::new(m, m);
    let mut rhs = DMatrix::zeros(m, 2);
    for (i, &v) in inner.iter().enumerate() {
        coo.push(i, i, adj[v].len() as f64);
        for &u in &adj[v] {
            if index[u] == usize::MAX {
                rhs[(i, 0)] += pos[u].0;
                rhs[(i, 1)] += pos[u].1;
            } else {
                coo.push(i, index[u], -1.0);
            }
        }
    }
    let chol = CscCholesky::factor(&CscMatrix::from(&coo)).map_err(|_| RenderError::Singular)?;
    let sol = chol.solve(&rhs);
    for (i, &v) in inner.iter().enumerate() {
        pos[v] = (sol[(i, 0)], sol[(i, 1)]);
    }
    Ok(pos)
}

/// One defect found by [`audit`].
#[derive(Clone, Debug, PartialEq)]
pub enum Defect {
    /// Two edge polylines meet away from a shared attachment.
    EdgeCrossing { edges: [usize; 2], at: Pt },
    /// An edge polyline enters the interior of a matrix.
    EdgeThroughMatrix { edge: usize, cluster: usize },
    MatrixOverlap { clusters: [usize; 2] },
    /// An edge does not end at the row or column of its endpoint on the
    /// prescribed side.
    Attachment { edge: usize, cluster: usize },
}

/// Checks that polylines are pairwise non-crossing, avoid matrix interiors
/// and attach where the side assignment says, and that matrices are
/// disjoint.
pub fn audit(g: &ClusteredGraph, layout: &NodeTrixLayout) -> Vec<Defect> {
    let mut out = Vec::new();
    for (i, a) in layout.matrices.iter().enumerate() {
        for b in &layout.matrices[i + 1..] {
            let apart = a.corner.0 + a.size < b.corner.0
                || b.corner.0 + b.size < a.corner.0
                || a.corner.1 + a.size < b.corner.1
                || b.corner.1 + b.size < a.corner.1;
            if !apart {
                out.push(Defect::MatrixOverlap { clusters: [a.cluster, b.cluster] });
            }
        }
    }
    let matrix_of: HashMap<usize, &Matrix> = layout.matrices.iter().map(|m| (m.cluster, m)).collect();
    for r in &layout.routes {
        let [u, v] = g.edges[r.edge];
        let ends = [(u, r.polyline[0]), (v, *r.polyline.last().unwrap())];
        for (x, at) in ends {
            let c = g.cluster_of(x);
            let Some(m) = matrix_of.get(&c) else { continue };
            let j = m.order.iter().position(|&y| y == x);
            let ok = match (j, g.side(r.edge, c)) {
                (Some(j), Some(side)) => dist(m.attachment(j, side), at) <= 1e-9 * m.size.max(1e-300),
                _ => false,
            };
            if !ok {
                out.push(Defect::Attachment { edge: r.edge, cluster: c });
            }
        }
        for m in &layout.matrices {
            if r.polyline.windows(2).any(|s| segment_enters_square(s[0], s[1], m)) {
                out.push(Defect::EdgeThroughMatrix { edge: r.edge, cluster: m.cluster });
            }
        }
    }

    // Pieces: each distinct attachment connector once, plus every body.
    let mut pieces: Vec<(Vec<usize>, &[Pt])> = Vec::new();
    let mut seen: HashMap<(u64, u64), usize> = HashMap::new();
    for r in &layout.routes {
        let parts = [&r.polyline[..=r.body[0]], &r.polyline[r.body[0]..=r.body[1]], &r.polyline[r.body[1]..]];
        for (i, part) in parts.into_iter().enumerate() {
            if part.len() < 2 {
                continue;
            }
            if i == 1 {
                pieces.push((vec![r.edge], part));
                continue;
            }
            let key = if i == 0 { part[0] } else { *part.last().unwrap() };
            let key = (key.0.to_bits(), key.1.to_bits());
            match seen.get(&key) {
                Some(&p) => pieces[p].0.push(r.edge),
                None => {
                    seen.insert(key, pieces.len());
                    pieces.push((vec![r.edge], part));
                }
            }
        }
    }
    let boxes: Vec<(Pt, Pt)> = pieces.iter().map(|(_, pts)| bbox(pts)).collect();
    for a in 0..pieces.len() {
        for b in a + 1..pieces.len() {
            let ((alo, ahi), (blo, bhi)) = (boxes[a], boxes[b]);
            if ahi.0 < blo.0 || bhi.0 < alo.0 || ahi.1 < blo.1 || bhi.1 < alo.1 {
                continue;
            }
            'pair: for s in pieces[a].1.windows(2) {
                for t in pieces[b].1.windows(2) {
                    if let Some(at) = conflict(s[0], s[1], t[0], t[1]) {
                        out.push(Defect::EdgeCrossing { edges: [pieces[a].0[0], pieces[b].0[0]], at });
                        break 'pair;
                    }
                }
            }
        }
    }
    out
}

fn bbox(pts: &[Pt]) -> (Pt, Pt) {
    pts.iter().fold((pts[0], pts[0]), |(lo, hi), &(x, y)| ((lo.0.min(x), lo.1.min(y)), (hi.0.max(x), hi.1.max(y))))
}

fn orient(a: Pt, b: Pt, c: Pt) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(a: Pt, b: Pt, p: Pt) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// A point where segments `ab` and `cd` meet, other than a single shared
/// endpoint.
fn conflict(a: Pt, b: Pt, c: Pt, d: Pt) -> Option<Pt> {
    let shared = [(a, b, c, d), (a, b, d, c), (b, a, c, d), (b, a, d, c)]
        .into_iter()
        .find(|(p, _, q, _)| p == q);
    if let Some((p, u, _, v)) = shared {
        // Overlap beyond the shared point happens only along one ray.
        let same_ray = orient(p, u, v) == 0.0 && (u.0 - p.0) * (v.0 - p.0) + (u.1 - p.1) * (v.1 - p.1) > 0.0;
        return same_ray.then_some(p);
    }
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        let t = o3 / (o3 - o4);
        return Some((a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)));
    }
    for (p, q, r, o) in [(a, b, c, o1), (a, b, d, o2), (c, d, a, o3), (c, d, b, o4)] {
        if o == 0.0 && on_segment(p, q, r) {
            return Some(r);
        }
    }
    None
}

/// Whether segment `ab` meets the open interior of `m`.
fn segment_enters_square(a: Pt, b: Pt, m: &Matrix) -> bool {
    let eps = 1e-9 * m.size;
    let (lo, hi) = ((m.corner.0 + eps, m.corner.1 + eps), (m.corner.0 + m.size - eps, m.corner.1 + m.size - eps));
    if lo.0 >= hi.0 {
        return false;
    }
    // Liang-Barsky clipping against the shrunken square.
    let d = (b.0 - a.0, b.1 - a.1);
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    for (p, q) in [(-d.0, a.0 - lo.0), (d.0, hi.0 - a.0), (-d.1, a.1 - lo.1), (d.1, hi.1 - a.1)] {
        if p == 0.0 {
            if q < 0.0 {
                return false;
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                t0 = t0.max(r);
            } else {
                t1 = t1.min(r);
            }
        }
    }
    t0 < t1
}
