//! Combinatorial embeddings given as rotation systems.

use crate::graph::Graph;

/// A directed traversal of an edge: `edge` walked away from `tail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub tail: usize,
}

/// Clockwise cyclic order of incident edges at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn new(rotation: Vec<Vec<usize>>) -> Self {
        Embedding { rotation }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Reverses every rotation.
    pub fn mirrored(&self) -> Embedding {
        Embedding {
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// True iff each rotation is a permutation of the incident edges of `g`.
    pub fn is_rotation_system_of(&self, g: &Graph) -> bool {
        if self.rotation.len() != g.n() {
            return false;
        }
        (0..g.n()).all(|v| {
            let mut a = self.rotation[v].clone();
            let mut b = g.incident(v).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        })
    }

    /// Position of each edge in the rotation at each of its endpoints.
    fn positions(&self, g: &Graph) -> Vec<[usize; 2]> {
        let mut pos = vec![[usize::MAX; 2]; g.m()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                let side = if g.ends(e)[0] == v { 0 } else { 1 };
                pos[e][side] = i;
            }
        }
        pos
    }

    /// Faces as cyclic dart sequences. The successor of a dart entering `v`
    /// along `e` leaves `v` along the clockwise successor of `e`.
    pub fn faces(&self, g: &Graph) -> Vec<Vec<Dart>> {
        let pos = self.positions(g);
        let mut seen = vec![[false; 2]; g.m()];
        let mut faces = Vec::new();
        for e0 in 0..g.m() {
            for s0 in 0..2 {
                if seen[e0][s0] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut e, mut s) = (e0, s0);
                while !seen[e][s] {
                    seen[e][s] = true;
                    let tail = g.ends(e)[s];
                    face.push(Dart { edge: e, tail });
                    let head = g.ends(e)[1 - s];
                    let hs = 1 - s;
                    let rot = &self.rotation[head];
                    let next = rot[(pos[e][hs] + 1) % rot.len()];
                    s = if g.ends(next)[0] == head { 0 } else { 1 };
                    e = next;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler's formula per connected component.
    pub fn is_planar(&self, g: &Graph) -> bool {
        if !self.is_rotation_system_of(g) {
            return false;
        }
        let (_, c) = g.components();
        let f = self.faces(g).len();
        let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
        // An isolated vertex contributes one face but no darts.
        g.n() as i64 - g.m() as i64 + (f + isolated) as i64 == 2 * c as i64
    }

    /// Cyclic order of neighbours at `v`.
    pub fn neighbor_order(&self, g: &Graph, v: usize) -> Vec<usize> {
        self.rotation[v].iter().map(|&e| g.other(e, v)).collect()
    }
}

/// True iff `seq` equals `cyc` read cyclically from some starting point.
pub fn cyclically_equal<T: PartialEq>(seq: &[T], cyc: &[T]) -> bool {
    if seq.len() != cyc.len() {
        return false;
    }
    if seq.is_empty() {
        return true;
    }
    (0..cyc.len()).any(|start| (0..seq.len()).all(|i| seq[i] == cyc[(start + i) % cyc.len()]))
}
