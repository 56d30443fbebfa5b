//! Reproducible instance families.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    /// Random recursive tree.
    Tree,
    /// `n` rows by `cols` columns (square when `cols` is absent).
    Grid,
    /// `n` is the dimension.
    Hypercube,
    RandomDDegenerate,
    RandomDDegenerateBoundedDegree,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Tree,
        Family::Grid,
        Family::Hypercube,
        Family::RandomDDegenerate,
        Family::RandomDDegenerateBoundedDegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Tree => "tree",
            Family::Grid => "grid",
            Family::Hypercube => "hypercube",
            Family::RandomDDegenerate => "random_d_degenerate",
            Family::RandomDDegenerateBoundedDegree => "random_d_degenerate_bounded_degree",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::param(format!("unknown family '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    /// Vertex count, row count (grid) or dimension (hypercube).
    pub n: usize,
    #[serde(default)]
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
}

impl GenSpec {
    pub fn new(family: Family, n: usize) -> Self {
        GenSpec {
            family,
            n,
            d: 1,
            delta: None,
            seed: 0,
            cols: None,
        }
    }

    pub fn degenerate(n: usize, d: usize, seed: u64) -> Self {
        GenSpec {
            d,
            seed,
            ..Self::new(Family::RandomDDegenerate, n)
        }
    }

    pub fn bounded(n: usize, d: usize, delta: usize, seed: u64) -> Self {
        GenSpec {
            d,
            delta: Some(delta),
            seed,
            ..Self::new(Family::RandomDDegenerateBoundedDegree, n)
        }
    }

    /// These settings as one line of JSON, used as the edge-list header comment.
    pub fn header(&self) -> String {
        serde_json::to_string(self).expect("settings serialise")
    }
}

const RETRY_CAP: usize = 64;

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match spec.family {
        Family::Path => Graph::path(spec.n),
        Family::Cycle => Graph::cycle(spec.n),
        Family::Tree => {
            let edges: Vec<_> = (1..spec.n).map(|v| (rng.gen_range(0..v), v)).collect();
            Graph::from_edges(spec.n, edges)?
        }
        Family::Grid => Graph::grid(spec.n, spec.cols.unwrap_or(spec.n)),
        Family::Hypercube => {
            if spec.n > 24 {
                return Err(Error::param("hypercube dimension above 24"));
            }
            Graph::hypercube(spec.n)
        }
        Family::RandomDDegenerate => {
            let mut edges = Vec::new();
            let mut earlier: Vec<usize> = Vec::new();
            for v in 0..spec.n {
                let picks = earlier.choose_multiple(&mut rng, spec.d.min(v));
                edges.extend(picks.map(|&u| (u, v)));
                earlier.push(v);
            }
            Graph::from_edges(spec.n, edges)?
        }
        Family::RandomDDegenerateBoundedDegree => {
            let delta = spec
                .delta
                .ok_or_else(|| Error::param("bounded-degree family needs delta"))?;
            if delta < spec.d {
                return Err(Error::param(format!("infeasible spec: delta = {delta} < d = {}", spec.d)));
            }
            bounded_degenerate(spec.n, spec.d, delta, &mut rng)?
        }
    };
    check_membership(spec, &g)?;
    Ok(g)
}

// Each new vertex samples up to d earlier vertices with spare degree; a sample
// that is saturated or already chosen is rejected, and after RETRY_CAP
// rejections the vertex keeps however many neighbours it has.
fn bounded_degenerate(n: usize, d: usize, delta: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    let mut chosen = Vec::with_capacity(d);
    for v in 1..n {
        chosen.clear();
        let mut rejections = 0;
        while chosen.len() < d.min(v) && rejections < RETRY_CAP {
            let u = rng.gen_range(0..v);
            if degree[u] >= delta || chosen.contains(&u) {
                rejections += 1;
                continue;
            }
            chosen.push(u);
        }
        for &u in &chosen {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges)
}

fn check_membership(spec: &GenSpec, g: &Graph) -> Result<()> {
    if matches!(
        spec.family,
        Family::RandomDDegenerate | Family::RandomDDegenerateBoundedDegree
    ) {
        let got = degeneracy_order(g).degeneracy;
        if got > spec.d {
            return Err(Error::Internal(format!("generated degeneracy {got} exceeds d = {}", spec.d)));
        }
    }
    if let Some(delta) = spec.delta.filter(|_| spec.family == Family::RandomDDegenerateBoundedDegree) {
        if g.max_degree() > delta {
            return Err(Error::Internal(format!(
                "generated max degree {} exceeds delta = {delta}",
                g.max_degree()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypercube_three() {
        let g = generate(&GenSpec::new(Family::Hypercube, 3)).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.max_degree()), (8, 12, 3));
        assert!((0..8).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn random_degenerate_post_check() {
        let g = generate(&GenSpec::degenerate(100, 2, 7)).unwrap();
        assert!(degeneracy_order(&g).degeneracy <= 2);
        assert_eq!(g.edge_count(), 1 + 2 * 98);
    }

    #[test]
    fn path_of_one_vertex() {
        let g = generate(&GenSpec::new(Family::Path, 1)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn bounded_variant_respects_delta() {
        for seed in 0..20 {
            let g = generate(&GenSpec::bounded(300, 3, 5, seed)).unwrap();
            assert!(g.max_degree() <= 5);
            assert!(degeneracy_order(&g).degeneracy <= 3);
        }
    }

    #[test]
    fn infeasible_and_unknown_specs() {
        assert!(generate(&GenSpec::bounded(10, 3, 2, 0)).is_err());
        assert!("petersen".parse::<Family>().is_err());
        assert_eq!("grid".parse::<Family>().unwrap(), Family::Grid);
    }

    #[test]
    fn same_seed_same_graph() {
        let a = generate(&GenSpec::degenerate(500, 3, 11)).unwrap();
        let b = generate(&GenSpec::degenerate(500, 3, 11)).unwrap();
        let c = generate(&GenSpec::degenerate(500, 3, 12)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn header_round_trips() {
        let spec = GenSpec::bounded(64, 2, 8, 5);
        let back: GenSpec = serde_json::from_str(&spec.header()).unwrap();
        assert_eq!(back, spec);
    }
}
