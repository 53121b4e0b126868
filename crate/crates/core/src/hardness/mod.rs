//! NAE3SAT formulas and the reductions to NodeTrix planarity.
//!
//! Fixed sides: every variable becomes a chain of size-2 clusters, every
//! literal a size-2 relay, every crossing of the orthogonal drawing a size-3
//! cluster and every clause three size-3 clusters sharing one permutation.
//! Free sides: the triconnected variant of the same instance with every
//! cluster blown up into a wheel of nine size-5 clusters.

mod layout;
mod reduce;

use std::fmt;

use thiserror::Error;

use crate::decomposition::is_biconnected;
use crate::graph::Graph;
use crate::oracle::{oracle_fixed, OracleError};

pub use layout::{layout_formula, Crossing, LayoutEdge, LayoutMode, OrthogonalLayout, Point};
pub use reduce::{
    clause_fixture, crossing_fixture, reduce_fixed, reduce_fixed_with, reduce_free, value, variable_fixture,
    Fixture, FreeReduction, GadgetKind, Reduction, Wire,
};

/// Largest formula accepted by [`nae_brute`].
pub const MAX_BRUTE_VARIABLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("formula has {0} variables, brute force handles at most {MAX_BRUTE_VARIABLES}")]
    TooLarge(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

/// A formula whose clauses have exactly three literals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Nae3SatFormula {
    pub vars: Vec<String>,
    pub clauses: Vec<[Literal; 3]>,
}

impl Nae3SatFormula {
    /// Variables named `x0, x1, ...`.
    pub fn new(n: usize, clauses: Vec<[Literal; 3]>) -> Self {
        let vars = (0..n).map(|i| format!("x{i}")).collect();
        Nae3SatFormula { vars, clauses }
    }

    /// Parses one clause per line, literals separated by blanks, `-` or `!`
    /// for negation. A `vars` line may declare variables up front (and
    /// their order); otherwise they are declared on first use. `#` starts a
    /// comment.
    pub fn parse(text: &str) -> Result<Self, HardnessError> {
        let mut f = Nae3SatFormula::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| HardnessError::Parse { line: i + 1, message };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] == "vars" {
                for t in &tokens[1..] {
                    if f.vars.iter().any(|v| v == t) {
                        return Err(err(format!("variable {t} declared twice")));
                    }
                    f.vars.push(t.to_string());
                }
                continue;
            }
            if tokens.len() != 3 {
                return Err(err(format!("clause has {} literals, expected 3", tokens.len())));
            }
            let mut clause = [Literal::pos(0); 3];
            for (slot, t) in clause.iter_mut().zip(&tokens) {
                let (negated, name) = match t.strip_prefix(['-', '!']) {
                    Some(rest) => (true, rest),
                    None => (false, *t),
                };
                if name.is_empty() || name.starts_with(['-', '!']) {
                    return Err(err(format!("bad literal {t}")));
                }
                let var = match f.vars.iter().position(|v| v == name) {
                    Some(v) => v,
                    None => {
                        f.vars.push(name.to_string());
                        f.vars.len() - 1
                    }
                };
                *slot = Literal { var, negated };
            }
            f.clauses.push(clause);
        }
        Ok(f)
    }

    pub fn is_nae_satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|l| l.eval(assignment)).count();
            t == 1 || t == 2
        })
    }

    /// Whether the graph joining each used variable to the clauses it
    /// occurs in is biconnected. The free-sides reduction guarantees a
    /// triconnected frame under this condition.
    pub fn incidence_is_biconnected(&self) -> bool {
        let occ = self.occurrences();
        let used: Vec<usize> = (0..occ.len()).filter(|&v| !occ[v].is_empty()).collect();
        let mut g = Graph::new(used.len() + self.clauses.len());
        for (i, &v) in used.iter().enumerate() {
            for &(j, _) in &occ[v] {
                if g.find_edge(i, used.len() + j).is_none() {
                    g.add_edge(i, used.len() + j);
                }
            }
        }
        is_biconnected(&g)
    }

    /// Occurrences of each variable as `(clause, position)`, clause-major.
    pub fn occurrences(&self) -> Vec<Vec<(usize, usize)>> {
        let mut occ = vec![Vec::new(); self.vars.len()];
        for (j, c) in self.clauses.iter().enumerate() {
            for (p, l) in c.iter().enumerate() {
                occ[l.var].push((j, p));
            }
        }
        occ
    }
}

impl fmt::Display for Nae3SatFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.vars.join(" "))?;
        for c in &self.clauses {
            let lits: Vec<String> =
                c.iter().map(|l| format!("{}{}", if l.negated { "-" } else { "" }, self.vars[l.var])).collect();
            writeln!(f, "{}", lits.join(" "))?;
        }
        Ok(())
    }
}

/// Exhaustive search for a not-all-equal assignment, in binary counting
/// order with variable 0 least significant.
pub fn nae_brute(f: &Nae3SatFormula) -> Result<Option<Vec<bool>>, HardnessError> {
    let n = f.vars.len();
    if n > MAX_BRUTE_VARIABLES {
        return Err(HardnessError::TooLarge(n));
    }
    for mask in 0u32..(1 << n) {
        let a: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        if f.is_nae_satisfied(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Both sides of the fixed-sides reduction on one formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub satisfiable: bool,
    pub planar: bool,
    pub oracle_calls: u64,
    /// Cluster count of the generated instance.
    pub clusters: usize,
}

impl ReductionReport {
    pub fn pass(&self) -> bool {
        self.satisfiable == self.planar
    }
}

/// Compares [`nae_brute`] with the fixed-sides oracle on the reduction.
pub fn verify_reduction(f: &Nae3SatFormula, budget: u64) -> Result<ReductionReport, HardnessError> {
    let satisfiable = nae_brute(f)?.is_some();
    let red = reduce_fixed(f);
    let v = oracle_fixed(&red.graph, budget)?;
    Ok(ReductionReport { satisfiable, planar: v.planar(), oracle_calls: v.calls, clusters: red.graph.clusters.len() })
}
