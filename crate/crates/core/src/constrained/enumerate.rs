//! Exhaustive rotation-system search, used as an independent reference.

use thiserror::Error;

use crate::embedding::Embedding;
use crate::graph::Graph;

use super::{check_node, Constraint, Direction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("enumeration budget of {0} rotation systems exceeded")]
pub struct BudgetExceeded(pub u64);

/// Searches all rotation systems of `g` for a planar one that satisfies the
/// trees. Each vertex's candidate rotations are filtered by its own tree;
/// synchronized colors are checked across vertices and planarity by Euler's
/// formula. `budget` bounds the number of complete rotation systems tried.
pub fn enumerate_embeddings_oracle(
    g: &Graph,
    trees: &[Constraint],
    budget: u64,
) -> Result<Option<Embedding>, BudgetExceeded> {
    let mut options: Vec<Vec<(Vec<usize>, Vec<(u32, Direction)>)>> = Vec::new();
    for v in 0..g.n() {
        let inc = g.incident(v);
        let mut opts = Vec::new();
        for rot in cyclic_orders(inc) {
            let pos = rot.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            let mut dirs = Vec::new();
            if check_node(&trees[v], true, &pos, rot.len(), &mut dirs) {
                opts.push((rot, dirs));
            }
        }
        if opts.is_empty() {
            return Ok(None);
        }
        options.push(opts);
    }
    let mut search = Search { g, options: &options, budget, used: 0, chosen: vec![0; g.n()], colors: Vec::new() };
    search.run(0)
}

struct Search<'a> {
    g: &'a Graph,
    options: &'a [Vec<(Vec<usize>, Vec<(u32, Direction)>)>],
    budget: u64,
    used: u64,
    chosen: Vec<usize>,
    colors: Vec<(u32, Direction)>,
}

impl Search<'_> {
    fn run(&mut self, v: usize) -> Result<Option<Embedding>, BudgetExceeded> {
        if v == self.g.n() {
            self.used += 1;
            if self.used > self.budget {
                return Err(BudgetExceeded(self.budget));
            }
            let emb = Embedding::new((0..v).map(|u| self.options[u][self.chosen[u]].0.clone()).collect());
            return Ok(emb.is_planar(self.g).then_some(emb));
        }
        for i in 0..self.options[v].len() {
            let dirs = &self.options[v][i].1;
            let clash = dirs.iter().any(|&(c, d)| {
                self.colors.iter().any(|&(c2, d2)| c2 == c && d2 != d)
                    || dirs.iter().any(|&(c2, d2)| c2 == c && d2 != d)
            });
            if clash {
                continue;
            }
            let mark = self.colors.len();
            self.colors.extend(dirs.iter().copied());
            self.chosen[v] = i;
            let r = self.run(v + 1)?;
            self.colors.truncate(mark);
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }
}

/// Every cyclic order of `items`, each listed once with `items[0]` first.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = items[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut r = vec![items[0]];
        r.extend_from_slice(p);
        out.push(r);
    });
    out
}

fn permute(a: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == a.len() {
        f(a);
        return;
    }
    for j in i..a.len() {
        a.swap(i, j);
        permute(a, i + 1, f);
        a.swap(i, j);
    }
}
