//! Exhaustive ranking number for small graphs.
//!
//! For `K = 1, 2, …` a depth-first search assigns colours from `{1..K}` to the
//! vertices in BFS order. A branch is cut as soon as some short path is fully
//! coloured and violating, or as soon as both endpoints of a path carry the
//! top colour `K` (nothing inside can exceed it). Colour values are not
//! interchangeable for rankings, so no value-symmetry reduction is applied.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::{enumerate_paths_with, PathLimits};
use crate::verify::{path_violates, RankedColouring};

/// Node budget for the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 200_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    /// The ranking number when `exhaustive`, otherwise the best known upper bound.
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

impl ExactResult {
    pub fn witness_colouring(&self) -> RankedColouring {
        RankedColouring::new(self.witness.clone()).expect("witness colours are positive")
    }
}

struct Search<'a> {
    k: usize,
    order: &'a [usize],
    paths: &'a [Vec<usize>],
    // paths to check once position i is coloured
    full_checks: Vec<Vec<usize>>,
    // paths whose endpoints are both coloured at position i, interior not yet
    top_checks: Vec<Vec<usize>>,
    colours: Vec<usize>,
    nodes: u64,
    budget: u64,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> Outcome {
        if pos == self.order.len() {
            return Outcome::Found;
        }
        let v = self.order[pos];
        for c in 1..=self.k {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Outcome::OutOfBudget;
            }
            self.colours[v] = c;
            if self.consistent(pos) {
                match self.run(pos + 1) {
                    Outcome::Exhausted => {}
                    done => return done,
                }
            }
        }
        self.colours[v] = 0;
        Outcome::Exhausted
    }

    fn consistent(&self, pos: usize) -> bool {
        let full_ok = self.full_checks[pos]
            .iter()
            .all(|&id| !path_violates(&self.paths[id], &self.colours));
        full_ok
            && self.top_checks[pos].iter().all(|&id| {
                let p = &self.paths[id];
                !(self.colours[p[0]] == self.k && self.colours[p[p.len() - 1]] == self.k)
            })
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// `rho_ell(g)` by iterative deepening on the number of colours.
///
/// When the node budget runs out the result is not exhaustive and carries the
/// trivial all-distinct colouring as its upper bound.
pub fn exact_ranking_number(g: &Graph, ell: usize, limits: &SearchLimits) -> Result<ExactResult> {
    let n = g.n();
    if n == 0 {
        if ell == 0 {
            return Err(Error::param("ell must be at least 1"));
        }
        return Ok(ExactResult {
            value: 0,
            witness: Vec::new(),
            nodes_explored: 0,
            exhaustive: true,
        });
    }
    let fam = enumerate_paths_with(g, ell, &PathLimits::from_env())?;
    let paths: Vec<Vec<usize>> = fam.iter().map(<[usize]>::to_vec).collect();
    let order = bfs_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut full_checks = vec![Vec::new(); n];
    let mut top_checks = vec![Vec::new(); n];
    for (id, p) in paths.iter().enumerate() {
        let last = p.iter().map(|&v| pos[v]).max().expect("non-empty path");
        let ends = pos[p[0]].max(pos[p[p.len() - 1]]);
        full_checks[last].push(id);
        if ends < last {
            top_checks[ends].push(id);
        }
    }

    let mut nodes = 0;
    for k in 1..=n {
        let mut search = Search {
            k,
            order: &order,
            paths: &paths,
            full_checks: full_checks.clone(),
            top_checks: top_checks.clone(),
            colours: vec![0; n],
            nodes: 0,
            budget: limits.max_nodes.saturating_sub(nodes),
        };
        let outcome = search.run(0);
        nodes += search.nodes;
        match outcome {
            Outcome::Found => {
                return Ok(ExactResult {
                    value: k,
                    witness: search.colours,
                    nodes_explored: nodes,
                    exhaustive: true,
                })
            }
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => {
                return Ok(ExactResult {
                    value: n,
                    witness: (1..=n).collect(),
                    nodes_explored: nodes.min(limits.max_nodes),
                    exhaustive: false,
                })
            }
        }
    }
    unreachable!("n distinct colours always form a ranking")
}

/// Whether some colouring with colours in `{1..k}` is an ell-ranking, by plain
/// enumeration of all `k^n` colourings. Refuses when `k^n` exceeds the budget.
pub fn exact_check_all_colourings(g: &Graph, ell: usize, k: usize, limits: &SearchLimits) -> Result<bool> {
    let n = g.n();
    let total = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > limits.max_nodes as u128 {
        return Err(Error::BudgetExceeded {
            budget: limits.max_nodes,
        });
    }
    if n == 0 {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let fam = enumerate_paths_with(g, ell, &PathLimits::from_env())?;
    let paths: Vec<&[usize]> = fam.iter().collect();
    let mut colours = vec![1; n];
    loop {
        if paths.iter().all(|p| !path_violates(p, &colours)) {
            return Ok(true);
        }
        let mut i = 0;
        while i < n && colours[i] == k {
            colours[i] = 1;
            i += 1;
        }
        if i == n {
            return Ok(false);
        }
        colours[i] += 1;
    }
}
