//! Halving decomposition of the vertex set.
//!
//! `S_0 = V` and `S_i` keeps the vertices of `S_{i-1}` with degree at least
//! `4d` inside `G[S_{i-1}]`; layer `L_i = S_i \ S_{i+1}`. In a d-degenerate
//! graph `G[S_{i-1}]` has at most `d |S_{i-1}|` edges, so `|S_i| <= |S_{i-1}| / 2`.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layering {
    /// `layer[v]` is the index `i` with `v ∈ L_i`.
    pub layer: Vec<usize>,
    /// Index of the top non-empty layer (0 for the empty graph).
    pub q: usize,
    /// `|S_0|, …, |S_q|`.
    pub survivor_sizes: Vec<usize>,
    /// Whether every round at least halved the survivors. Always true for
    /// d-degenerate input; when a round removes nobody the recursion stops and
    /// the remaining survivors form the top layer.
    pub halving_held: bool,
}

impl Layering {
    /// Puts every vertex in `L_0`.
    pub fn single(n: usize) -> Self {
        Layering {
            layer: vec![0; n],
            q: 0,
            survivor_sizes: vec![n],
            halving_held: true,
        }
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.q + 1];
        for &l in &self.layer {
            sizes[l] += 1;
        }
        sizes
    }

    pub fn layer_members(&self, i: usize) -> Vec<usize> {
        (0..self.layer.len()).filter(|&v| self.layer[v] == i).collect()
    }
}

pub fn compute_layering(g: &Graph, d: usize) -> Result<Layering> {
    if d == 0 {
        return Err(Error::param("layering parameter d must be at least 1"));
    }
    let n = g.n();
    let threshold = 4 * d;
    let mut layer = vec![0; n];
    let mut alive = vec![true; n];
    let mut survivors: Vec<usize> = (0..n).collect();
    let mut survivor_sizes = vec![n];
    let mut halving_held = true;
    let mut round = 0;
    loop {
        let next: Vec<usize> = survivors
            .iter()
            .copied()
            .filter(|&v| g.neighbours(v).iter().filter(|&&w| alive[w]).count() >= threshold)
            .collect();
        if next.is_empty() {
            break;
        }
        if next.len() == survivors.len() {
            halving_held = false;
            break;
        }
        if 2 * next.len() > survivors.len() {
            halving_held = false;
        }
        for &v in &survivors {
            alive[v] = false;
        }
        round += 1;
        for &v in &next {
            alive[v] = true;
            layer[v] = round;
        }
        survivor_sizes.push(next.len());
        survivors = next;
    }
    Ok(Layering {
        layer,
        q: round,
        survivor_sizes,
        halving_held,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_graph_is_one_layer() {
        let l = compute_layering(&Graph::cycle(10), 1).unwrap();
        assert_eq!(l.q, 0);
        assert!(l.layer.iter().all(|&x| x == 0));
    }

    #[test]
    fn star_splits_centre() {
        let l = compute_layering(&Graph::star(8), 1).unwrap();
        assert_eq!(l.q, 1);
        assert_eq!(l.layer[0], 1);
        assert_eq!(l.layer_members(0), (1..=8).collect::<Vec<_>>());
        assert_eq!(l.survivor_sizes, vec![9, 1]);
        assert!(l.halving_held);
    }

    #[test]
    fn empty_graph() {
        let l = compute_layering(&Graph::empty(0), 2).unwrap();
        assert_eq!(l.q, 0);
        assert!(l.layer.is_empty());
        assert_eq!(l.layer_sizes(), vec![0]);
    }

    #[test]
    fn dense_graph_terminates_without_halving() {
        // K9 is 8-degenerate; with d = 1 every vertex keeps degree 8 >= 4
        let l = compute_layering(&Graph::complete(9), 1).unwrap();
        assert!(!l.halving_held);
        assert_eq!(l.q, 0);
    }

    #[test]
    fn rejects_zero_d() {
        assert!(compute_layering(&Graph::path(3), 0).is_err());
    }
}
