//! 2SAT by strongly connected components of the implication graph.

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Lit {
        Lit { var, positive: false }
    }

    pub fn negate(self) -> Lit {
        Lit { var: self.var, positive: !self.positive }
    }

    fn node(self) -> NodeIndex {
        NodeIndex::new(2 * self.var + usize::from(!self.positive))
    }
}

/// A conjunction of clauses with at most two literals. Unit clauses are
/// stored as `(l ∨ l)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSat {
    pub vars: usize,
    pub clauses: Vec<(Lit, Lit)>,
}

impl TwoSat {
    pub fn new(vars: usize) -> Self {
        TwoSat { vars, clauses: Vec::new() }
    }

    pub fn add_var(&mut self) -> usize {
        self.vars += 1;
        self.vars - 1
    }

    pub fn clause(&mut self, a: Lit, b: Lit) {
        assert!(a.var < self.vars && b.var < self.vars, "undeclared variable");
        self.clauses.push((a, b));
    }

    pub fn unit(&mut self, a: Lit) {
        self.clause(a, a);
    }

    /// `x == y`.
    pub fn equal(&mut self, x: usize, y: usize) {
        self.clause(Lit::pos(x), Lit::neg(y));
        self.clause(Lit::neg(x), Lit::pos(y));
    }

    /// `x != y`.
    pub fn differ(&mut self, x: usize, y: usize) {
        self.clause(Lit::pos(x), Lit::pos(y));
        self.clause(Lit::neg(x), Lit::neg(y));
    }

    pub fn satisfied_by(&self, value: &[bool]) -> bool {
        let holds = |l: Lit| value[l.var] == l.positive;
        self.clauses.iter().all(|&(a, b)| holds(a) || holds(b))
    }

    /// A satisfying assignment, or `None` if there is none.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(2 * self.vars, 2 * self.clauses.len());
        for _ in 0..2 * self.vars {
            g.add_node(());
        }
        for &(a, b) in &self.clauses {
            g.add_edge(a.negate().node(), b.node(), ());
            g.add_edge(b.negate().node(), a.node(), ());
        }
        // Components come out in reverse topological order.
        let mut comp = vec![0usize; 2 * self.vars];
        for (i, scc) in tarjan_scc(&g).into_iter().enumerate() {
            for v in scc {
                comp[v.index()] = i;
            }
        }
        let mut value = Vec::with_capacity(self.vars);
        for x in 0..self.vars {
            let (p, n) = (comp[2 * x], comp[2 * x + 1]);
            if p == n {
                return None;
            }
            value.push(p < n);
        }
        Some(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn contradictory_units() {
        let mut f = TwoSat::new(1);
        f.unit(Lit::pos(0));
        f.unit(Lit::neg(0));
        assert_eq!(f.solve(), None);
    }

    #[test]
    fn forced_variable() {
        let mut f = TwoSat::new(2);
        f.clause(Lit::pos(0), Lit::pos(1));
        f.clause(Lit::neg(0), Lit::pos(1));
        assert!(f.solve().unwrap()[1]);
    }

    #[test]
    fn empty_formula() {
        assert_eq!(TwoSat::new(0).solve(), Some(vec![]));
    }

    proptest! {
        #[test]
        fn agrees_with_truth_tables(
            vars in 1usize..6,
            raw in prop::collection::vec((0usize..6, any::<bool>(), 0usize..6, any::<bool>()), 0..12),
        ) {
            let mut f = TwoSat::new(vars);
            for (a, pa, b, pb) in raw {
                f.clause(Lit { var: a % vars, positive: pa }, Lit { var: b % vars, positive: pb });
            }
            let brute = (0..1u32 << vars).any(|m| {
                let v: Vec<bool> = (0..vars).map(|i| m >> i & 1 == 1).collect();
                f.satisfied_by(&v)
            });
            match f.solve() {
                Some(v) => prop_assert!(f.satisfied_by(&v)),
                None => prop_assert!(!brute),
            }
        }
    }
}
