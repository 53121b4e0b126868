//! Orthogonal drawings of the variable-clause incidence graph.
//!
//! Clauses sit on a vertical line at `x = 0`, variables on the horizontal
//! line `y = 0`. Every literal occurrence gets its own column (grouped by
//! variable) and its own row (grouped by clause), and is drawn as an L: up
//! the column, then left along the row. In the triconnected mode the
//! leftmost variable moves above every row and the bottommost clause moves
//! right of every column: their edges come down from the top or run right
//! along the row, and an edge joining the two drops below the top row, runs
//! right past every column and comes down to the clause (three bends).

use super::Nae3SatFormula;

pub type Point = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayoutMode {
    Fixed,
    Triconnected,
}

/// One literal occurrence, drawn from its variable to its clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayoutEdge {
    pub var: usize,
    pub clause: usize,
    /// Position of the literal in the clause.
    pub slot: usize,
    pub polyline: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub edges: [usize; 2],
    pub at: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalLayout {
    pub mode: LayoutMode,
    pub variable_points: Vec<Point>,
    pub clause_points: Vec<Point>,
    /// Edges in column order (left to right).
    pub edges: Vec<LayoutEdge>,
    pub crossings: Vec<Crossing>,
    /// Variable drawn above the rows, if any.
    pub top_variable: Option<usize>,
    /// Clause drawn right of the columns, if any.
    pub right_clause: Option<usize>,
}

/// Row of a literal slot.
fn row(clause: usize, slot: usize) -> i64 {
    1 + 4 * clause as i64 + slot as i64
}

pub fn layout_formula(f: &Nae3SatFormula, mode: LayoutMode) -> OrthogonalLayout {
    let occ = f.occurrences();
    let relocate = mode == LayoutMode::Triconnected && !f.clauses.is_empty();
    let top_variable = if relocate { occ.iter().position(|o| !o.is_empty()) } else { None };
    let right_clause = if relocate { Some(0) } else { None };
    // Edges from the relocated variable to the relocated clause take its
    // rightmost columns and detour through rows above every slot.
    let detours = top_variable.map_or(0, |v| occ[v].iter().filter(|o| Some(o.0) == right_clause).count());
    let total: usize = occ.iter().map(|o| o.len().max(1)).sum();
    let turn_x = 2 + total as i64;
    let right_x = turn_x + detours as i64 + 1;
    let slot_top = 4 * f.clauses.len() as i64;
    let top_y = slot_top + detours as i64;

    let mut variable_points = Vec::new();
    let mut edges = Vec::new();
    let mut column = 2;
    for (v, list) in occ.iter().enumerate() {
        let top = top_variable == Some(v);
        let base_y = if top { top_y } else { 0 };
        variable_points.push((column, base_y));
        let mut list = list.clone();
        if top {
            list.sort_by_key(|&(j, p)| (Some(j) == right_clause, j, p));
        }
        let mut detour = 0;
        for (clause, slot) in list {
            let y = row(clause, slot);
            let polyline = match (top, Some(clause) == right_clause) {
                (true, true) => {
                    let h = slot_top + detour;
                    let x = turn_x + detour;
                    detour += 1;
                    vec![(column, base_y), (column, h), (x, h), (x, y), (right_x, y)]
                }
                (_, to_right) => vec![(column, base_y), (column, y), (if to_right { right_x } else { 0 }, y)],
            };
            edges.push(LayoutEdge { var: v, clause, slot, polyline });
            column += 1;
        }
        if occ[v].is_empty() {
            column += 1;
        }
    }
    let clause_points = (0..f.clauses.len())
        .map(|j| (if right_clause == Some(j) { right_x } else { 0 }, row(j, 1)))
        .collect();
    let crossings = crossings(&edges);
    OrthogonalLayout { mode, variable_points, clause_points, edges, crossings, top_variable, right_clause }
}

/// Interior intersections between segments of distinct polylines.
fn crossings(edges: &[LayoutEdge]) -> Vec<Crossing> {
    let mut out = Vec::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            for sa in edges[a].polyline.windows(2) {
                for sb in edges[b].polyline.windows(2) {
                    if let Some(at) = segment_crossing(sa, sb) {
                        out.push(Crossing { edges: [a, b], at });
                    }
                }
            }
        }
    }
    out
}

/// Crossing point of an axis-parallel vertical and horizontal segment whose
/// interiors meet.
pub(crate) fn segment_crossing(s: &[Point], t: &[Point]) -> Option<Point> {
    let vertical = |s: &[Point]| s[0].0 == s[1].0;
    let (v, h) = match (vertical(s), vertical(t)) {
        (true, false) => (s, t),
        (false, true) => (t, s),
        _ => return None,
    };
    let x = v[0].0;
    let y = h[0].1;
    let inside = |p: i64, a: i64, b: i64| a.min(b) < p && p < a.max(b);
    (inside(x, h[0].0, h[1].0) && inside(y, v[0].1, v[1].1)).then_some((x, y))
}

/// Position of `p` along `polyline` (sum of traversed segment lengths).
pub(crate) fn arc_position(polyline: &[Point], p: Point) -> Option<i64> {
    let mut t = 0;
    for s in polyline.windows(2) {
        let (a, b) = (s[0], s[1]);
        let on = if a.0 == b.0 {
            p.0 == a.0 && a.1.min(b.1) <= p.1 && p.1 <= a.1.max(b.1)
        } else {
            p.1 == a.1 && a.0.min(b.0) <= p.0 && p.0 <= a.0.max(b.0)
        };
        if on {
            return Some(t + (p.0 - a.0).abs() + (p.1 - a.1).abs());
        }
        t += (b.0 - a.0).abs() + (b.1 - a.1).abs();
    }
    None
}

/// Unit direction of the segment of `polyline` through `p` (the first one
/// when `p` is a bend).
pub(crate) fn direction_at(polyline: &[Point], p: Point) -> Point {
    for s in polyline.windows(2) {
        let (a, b) = (s[0], s[1]);
        let on = a.0.min(b.0) <= p.0 && p.0 <= a.0.max(b.0) && a.1.min(b.1) <= p.1 && p.1 <= a.1.max(b.1);
        if on {
            return ((b.0 - a.0).signum(), (b.1 - a.1).signum());
        }
    }
    panic!("point {p:?} is not on the polyline")
}
