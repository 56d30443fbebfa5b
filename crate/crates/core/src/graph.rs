//! Simple undirected graphs with dense vertex indices, plus the derived
//! structures the ranking algorithm works on: degeneracy orders, orientations,
//! power graphs, the layered auxiliary digraph and the endpoint-pair multigraph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::layering::Layering;
use crate::paths::PathFamily;

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are sorted and symmetric; there are no loops or parallel edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::path(n);
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("valid clique")
    }

    /// Star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    /// The `dim`-dimensional hypercube on `2^dim` vertices.
    pub fn hypercube(dim: usize) -> Self {
        let n = 1usize << dim;
        let edges = (0..n).flat_map(|u| {
            (0..dim)
                .map(move |b| (u, u ^ (1 << b)))
                .filter(|&(u, v)| u < v)
        });
        Self::from_edges(n, edges).expect("valid hypercube")
    }

    pub fn grid(rows: usize, cols: usize) -> Self {
        let id = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < rows {
                    edges.push((id(r, c), id(r + 1, c)));
                }
            }
        }
        Self::from_edges(rows * cols, edges).expect("valid grid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `keep`, relabelled densely in the order given.
    /// Returns the subgraph and the map from new to old indices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        (Graph { adj }, keep.to_vec())
    }
}

/// A vertex elimination order certifying degeneracy: every `order[i]` has at
/// most `degeneracy` neighbours among `order[i+1..]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

impl DegeneracyOrder {
    /// `position[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// The reverse of the elimination order: each vertex has at most
    /// `degeneracy` neighbours earlier in this sequence, so it is the order in
    /// which greedy colourings and the first phase visit vertices.
    pub fn colouring_sequence(&self) -> Vec<usize> {
        self.order.iter().rev().copied().collect()
    }
}

// Repeatedly removes a vertex of minimum remaining weighted degree, lowest
// index first. Returns the removal order and the largest degree seen at removal.
fn min_degree_peel(adj: &[Vec<(usize, u64)>]) -> (Vec<usize>, u64) {
    let n = adj.len();
    let mut deg: Vec<u64> = adj.iter().map(|l| l.iter().map(|&(_, m)| m).sum()).collect();
    let mut queue: BTreeSet<(u64, usize)> = deg.iter().enumerate().map(|(v, &d)| (d, v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut worst = 0;
    while let Some((d, v)) = queue.pop_first() {
        worst = worst.max(d);
        removed[v] = true;
        order.push(v);
        for &(w, m) in &adj[v] {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= m;
                queue.insert((deg[w], w));
            }
        }
    }
    (order, worst)
}

/// Minimum-degree peeling; ties go to the lowest vertex index.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let adj: Vec<Vec<(usize, u64)>> = g
        .adj
        .iter()
        .map(|l| l.iter().map(|&w| (w, 1)).collect())
        .collect();
    let (order, worst) = min_degree_peel(&adj);
    DegeneracyOrder {
        order,
        degeneracy: worst as usize,
    }
}

/// Direction of an edge `{u, v}` relative to `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeDirection {
    /// `u -> v` only.
    Forward,
    /// `v -> u` only.
    Backward,
    /// Both arcs present.
    Both,
}

/// Arc sets over an undirected graph. Each edge carries at least one arc;
/// edges carrying both are bidirected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    out: Vec<Vec<usize>>,
    max_out_degree: usize,
}

impl Orientation {
    pub fn from_arcs<I>(n: usize, arcs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        let max_out_degree = out.iter().map(Vec::len).max().unwrap_or(0);
        Orientation {
            out,
            max_out_degree,
        }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        self.max_out_degree
    }

    pub fn direction(&self, u: usize, v: usize) -> Option<EdgeDirection> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        match (self.has_arc(a, b), self.has_arc(b, a)) {
            (true, true) => Some(EdgeDirection::Both),
            (true, false) => Some(EdgeDirection::Forward),
            (false, true) => Some(EdgeDirection::Backward),
            (false, false) => None,
        }
    }
}

/// Directs every edge from its earlier endpoint in `ord` to its later one.
pub fn orient_acyclic(g: &Graph, ord: &DegeneracyOrder) -> Result<Orientation> {
    if ord.order.len() != g.n() {
        return Err(Error::param(format!(
            "order has {} entries but the graph has {} vertices",
            ord.order.len(),
            g.n()
        )));
    }
    let mut seen = vec![false; g.n()];
    for &v in &ord.order {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::param("order is not a permutation of the vertices"));
        }
    }
    let pos = ord.positions();
    Ok(Orientation::from_arcs(
        g.n(),
        g.edges()
            .map(|(u, v)| if pos[u] < pos[v] { (u, v) } else { (v, u) }),
    ))
}

/// `G^ell`: `v` and `w` are adjacent iff some path with at most `ell` edges
/// contains both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerGraph {
    pub ell: usize,
    pub graph: Graph,
}

/// Builds `G^ell` by a depth-limited BFS from every vertex. Two vertices lie on
/// a common path of at most `ell` edges exactly when their distance is at most
/// `ell`, since a shortest walk is a path.
pub fn power_graph(g: &Graph, ell: usize) -> Result<PowerGraph> {
    if ell == 0 {
        return Err(Error::param("ell must be at least 1"));
    }
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    let mut dist = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if dist[u] == ell {
                continue;
            }
            for &w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
        }
        for &v in &touched {
            if v != s {
                adj[s].push(v);
            }
            dist[v] = usize::MAX;
        }
        touched.clear();
        adj[s].sort_unstable();
    }
    Ok(PowerGraph {
        ell,
        graph: Graph { adj },
    })
}

/// The layered auxiliary digraph: arc `v -> w` for every edge `vw` with
/// `layer(v) <= layer(w)`, so edges inside a layer are bidirected.
pub fn build_g_prime(g: &Graph, layering: &Layering) -> Orientation {
    let arcs = g.edges().flat_map(|(u, v)| {
        let (lu, lv) = (layering.layer[u], layering.layer[v]);
        let forward = (lu <= lv).then_some((u, v));
        let backward = (lv <= lu).then_some((v, u));
        forward.into_iter().chain(backward)
    });
    Orientation::from_arcs(g.n(), arcs)
}

/// Multigraph whose `vw` multiplicity is the number of family paths with
/// endpoints `v` and `w`. Stored as weighted adjacency, never as parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigraphGStar {
    adj: Vec<Vec<(usize, u64)>>,
}

impl MultigraphGStar {
    pub fn from_pairs(n: usize, pairs: &BTreeMap<(usize, usize), u64>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &m) in pairs {
            if m > 0 {
                adj[u].push((v, m));
                adj[v].push((u, m));
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        MultigraphGStar { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn multiplicity(&self, v: usize, w: usize) -> u64 {
        match self.adj[v].binary_search_by_key(&w, |&(x, _)| x) {
            Ok(i) => self.adj[v][i].1,
            Err(_) => 0,
        }
    }

    /// Total multiplicity at `v`.
    pub fn degree(&self, v: usize) -> u64 {
        self.adj[v].iter().map(|&(_, m)| m).sum()
    }

    pub fn neighbours(&self, v: usize) -> &[(usize, u64)] {
        &self.adj[v]
    }
}

pub fn build_g_star(g: &Graph, fam: &PathFamily) -> MultigraphGStar {
    let mut pairs: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for path in fam.iter() {
        let (a, b) = (path[0], path[path.len() - 1]);
        let key = if a < b { (a, b) } else { (b, a) };
        *pairs.entry(key).or_default() += 1;
    }
    MultigraphGStar::from_pairs(g.n(), &pairs)
}

/// Weighted minimum-degree peeling of `G*`. The colouring sequence of the
/// result visits each vertex after at most `degeneracy` of its path partners.
pub fn greedy_degeneracy_order_multigraph(gs: &MultigraphGStar) -> DegeneracyOrder {
    let (order, worst) = min_degree_peel(&gs.adj);
    DegeneracyOrder {
        order,
        degeneracy: worst as usize,
    }
}

/// Upper bound `2^{ell+2} d^{ceil(ell/2)} Delta^{floor(ell/2)}` on the
/// degeneracy of `G^ell` for a d-degenerate graph of maximum degree `Delta`.
pub fn power_degeneracy_bound(ell: usize, d: usize, delta: usize) -> u128 {
    pow_sat(2, ell as u32 + 2)
        .saturating_mul(pow_sat(d as u128, ell.div_ceil(2) as u32))
        .saturating_mul(pow_sat(delta as u128, (ell / 2) as u32))
}

pub(crate) fn pow_sat(base: u128, exp: u32) -> u128 {
    base.checked_pow(exp).unwrap_or(u128::MAX)
}
