//! Short undirected paths and the maps that charge each path to a vertex.
//!
//! An undirected path is stored in canonical form, starting at its smaller
//! endpoint. Paths are produced by a depth-first walk from every start vertex
//! over sorted adjacency lists, which emits each canonical path exactly once
//! and already in lexicographic order.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, pow_sat, Graph, Orientation};
use crate::layering::Layering;

/// Environment variable holding the path-family memory cap in MiB.
pub const MEM_BUDGET_ENV: &str = "LVR_MEM_BUDGET_MB";
const DEFAULT_BUDGET_MB: usize = 4096;

/// An undirected path with at least one edge, in canonical orientation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct UPath(Vec<usize>);

impl UPath {
    /// Canonicalises a vertex sequence: the smaller of it and its reversal.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        if vertices.len() > 1 && vertices[0] > vertices[vertices.len() - 1] {
            vertices.reverse();
        }
        UPath(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.0[0], self.0[self.0.len() - 1])
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }
}

/// Cap on the bytes a materialised path family may occupy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathLimits {
    pub max_bytes: usize,
}

impl PathLimits {
    pub fn unlimited() -> Self {
        PathLimits {
            max_bytes: usize::MAX,
        }
    }

    pub fn from_mb(mb: usize) -> Self {
        PathLimits {
            max_bytes: mb.saturating_mul(1 << 20),
        }
    }

    /// Reads `LVR_MEM_BUDGET_MB`, falling back to 4096 MiB.
    pub fn from_env() -> Self {
        let mb = std::env::var(MEM_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET_MB);
        Self::from_mb(mb)
    }
}

impl Default for PathLimits {
    fn default() -> Self {
        Self::from_env()
    }
}

/// A set of canonical paths in lexicographic order, stored flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    ell: usize,
    n: usize,
    offsets: Vec<usize>,
    vertices: Vec<usize>,
    by_endpoint: Vec<Vec<usize>>,
}

impl PathFamily {
    fn new(n: usize, ell: usize) -> Self {
        PathFamily {
            ell,
            n,
            offsets: vec![0],
            vertices: Vec::new(),
            by_endpoint: vec![Vec::new(); n],
        }
    }

    fn push(&mut self, path: &[usize]) {
        let id = self.len();
        self.vertices.extend_from_slice(path);
        self.offsets.push(self.vertices.len());
        self.by_endpoint[path[0]].push(id);
        self.by_endpoint[path[path.len() - 1]].push(id);
    }

    fn bytes(&self) -> usize {
        (self.vertices.len() + self.offsets.len() + 2 * self.len()) * std::mem::size_of::<usize>()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Number of vertices of the underlying graph.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn path(&self, id: usize) -> &[usize] {
        &self.vertices[self.offsets[id]..self.offsets[id + 1]]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> + '_ {
        (0..self.len()).map(move |id| self.path(id))
    }

    /// Ids of the paths having `v` as an endpoint.
    pub fn with_endpoint(&self, v: usize) -> &[usize] {
        &self.by_endpoint[v]
    }

    pub fn upath(&self, id: usize) -> UPath {
        UPath(self.path(id).to_vec())
    }

    /// Debug dump: one path per line, space-separated vertex indices.
    pub fn write_dump<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for path in self.iter() {
            let line: Vec<String> = path.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }

    /// The paths satisfying `keep`, in their original order.
    pub fn filter(&self, mut keep: impl FnMut(&[usize]) -> bool) -> PathFamily {
        let mut out = PathFamily::new(self.n, self.ell);
        for p in self.iter().filter(|p| keep(p)) {
            out.push(p);
        }
        out
    }
}

/// Depth-first walk over every canonical path of at most `ell` edges.
///
/// From each start `s`, the walk extends through vertices accepted by
/// `interior(s, v)` and reports the current path whenever its last vertex `v`
/// satisfies `v > s` and `endpoint(s, v)`. `visit` returns `false` to stop the
/// whole walk. Paths are reported in lexicographic order.
pub fn walk_paths<E, I, V>(g: &Graph, ell: usize, endpoint: E, interior: I, mut visit: V)
where
    E: Fn(usize, usize) -> bool,
    I: Fn(usize, usize) -> bool,
    V: FnMut(&[usize]) -> bool,
{
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(ell + 1);
    // one cursor per depth into the neighbour list of path[depth]
    let mut cursor = Vec::with_capacity(ell + 1);
    for s in 0..n {
        path.push(s);
        cursor.push(0usize);
        on_path[s] = true;
        while let Some(&top) = path.last() {
            let depth = path.len() - 1;
            let i = cursor[depth];
            let nbrs = g.neighbours(top);
            if depth == ell || i >= nbrs.len() {
                on_path[top] = false;
                path.pop();
                cursor.pop();
                continue;
            }
            cursor[depth] += 1;
            let w = nbrs[i];
            if on_path[w] {
                continue;
            }
            path.push(w);
            if w > s && endpoint(s, w) && !visit(&path) {
                return;
            }
            if depth + 1 < ell && interior(s, w) {
                on_path[w] = true;
                cursor.push(0);
            } else {
                path.pop();
            }
        }
    }
}

fn collect_family<E, I>(g: &Graph, ell: usize, limits: &PathLimits, endpoint: E, interior: I) -> Result<PathFamily>
where
    E: Fn(usize, usize) -> bool,
    I: Fn(usize, usize) -> bool,
{
    if ell == 0 {
        return Err(Error::param("ell must be at least 1"));
    }
    let mut fam = PathFamily::new(g.n(), ell);
    let mut over_budget = false;
    walk_paths(g, ell, endpoint, interior, |p| {
        fam.push(p);
        over_budget = fam.bytes() > limits.max_bytes;
        !over_budget
    });
    if over_budget {
        return Err(Error::PathBudgetExceeded {
            budget_bytes: limits.max_bytes,
            ell,
        });
    }
    Ok(fam)
}

/// `n * 2^{ell+1} d^{ceil(ell/2)} Delta^{floor(ell/2)}`: every path is charged
/// to one endpoint, and no vertex carries more than [`rho_load_bound`] paths.
pub fn predicted_path_count(n: usize, ell: usize, d: usize, delta: usize) -> u128 {
    (n as u128).saturating_mul(rho_load_bound(ell, d, delta))
}

/// All undirected paths with between 1 and `ell` edges, budget from the environment.
pub fn enumerate_paths(g: &Graph, ell: usize) -> Result<PathFamily> {
    enumerate_paths_with(g, ell, &PathLimits::from_env())
}

pub fn enumerate_paths_with(g: &Graph, ell: usize, limits: &PathLimits) -> Result<PathFamily> {
    if ell > 0 && g.edge_count() > 0 {
        let d = degeneracy_order(g).degeneracy;
        let predicted = predicted_path_count(g.n(), ell, d, g.max_degree());
        let per_path = (ell as u128 + 4) * std::mem::size_of::<usize>() as u128;
        if predicted.saturating_mul(per_path) > limits.max_bytes as u128 {
            log::warn!(
                "predicted path count {predicted} for ell = {ell} may exceed the {} byte budget",
                limits.max_bytes
            );
        }
    }
    collect_family(g, ell, limits, |_, _| true, |_, _| true)
}

/// The paths whose endpoints share a layer `L_j` and whose interior lies in
/// `L_0 ∪ … ∪ L_j`.
pub fn enumerate_restricted_family(g: &Graph, ell: usize, layering: &Layering) -> Result<PathFamily> {
    enumerate_restricted_family_with(g, ell, layering, &PathLimits::from_env())
}

pub fn enumerate_restricted_family_with(
    g: &Graph,
    ell: usize,
    layering: &Layering,
    limits: &PathLimits,
) -> Result<PathFamily> {
    if layering.layer.len() != g.n() {
        return Err(Error::param("layering does not cover the graph"));
    }
    let layer = &layering.layer;
    collect_family(
        g,
        ell,
        limits,
        |s, v| layer[v] == layer[s],
        |s, v| layer[v] <= layer[s],
    )
}

/// Which assignment rule produced an [`EndpointMap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Rho,
    Tau,
    Gamma,
}

/// An assignment of every path in a family to one of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointMap {
    pub kind: MapKind,
    pub assignment: Vec<usize>,
}

impl EndpointMap {
    pub fn get(&self, path_id: usize) -> usize {
        self.assignment[path_id]
    }

    /// `loads[v] = |map^{-1}(v)|`.
    pub fn loads(&self, n: usize) -> Vec<usize> {
        let mut loads = vec![0; n];
        for &v in &self.assignment {
            loads[v] += 1;
        }
        loads
    }

    pub fn max_load(&self, n: usize) -> usize {
        self.loads(n).into_iter().max().unwrap_or(0)
    }

    /// Path ids grouped by assigned vertex, each list increasing.
    pub fn preimages(&self, n: usize) -> Vec<Vec<usize>> {
        let mut pre = vec![Vec::new(); n];
        for (id, &v) in self.assignment.iter().enumerate() {
            pre[v].push(id);
        }
        pre
    }
}

/// Charges each path to the endpoint from which at least half of its edges
/// point downstream under `orient`. Bidirected edges are downstream both ways.
/// When both endpoints qualify the canonical first endpoint wins.
pub fn rho_map(fam: &PathFamily, orient: &Orientation) -> EndpointMap {
    let assignment = fam
        .iter()
        .map(|p| {
            let r = p.len() - 1;
            let need = r.div_ceil(2);
            let forward = p.windows(2).filter(|e| orient.has_arc(e[0], e[1])).count();
            if forward >= need {
                p[0]
            } else {
                // every edge carries at least one arc, so the reverse traversal has
                // at least r - forward > r/2 downstream edges
                p[r]
            }
        })
        .collect();
    EndpointMap {
        kind: MapKind::Rho,
        assignment,
    }
}

/// Whether both end edges of `path` point outwards in `gprime`, that is
/// `v_1 -> v_0` and `v_{r-1} -> v_r`.
pub fn in_directed_family(path: &[usize], gprime: &Orientation) -> bool {
    let r = path.len() - 1;
    r >= 1 && gprime.has_arc(path[1], path[0]) && gprime.has_arc(path[r - 1], path[r])
}

/// Charges each path of the directed family of `gprime` to the vertex next to
/// the chosen end.
///
/// Every path `v_0 … v_r` must have arcs `v_1 -> v_0` and `v_{r-1} -> v_r`.
/// The end `v_0` is chosen so the tail `v_1 … v_r` has at most
/// `floor(r/2) - 1` upstream edges, and the path goes to `v_1`. Single edges
/// go to their canonical first endpoint.
pub fn gamma_map(fam: &PathFamily, gprime: &Orientation) -> Result<EndpointMap> {
    let mut assignment = Vec::with_capacity(fam.len());
    for p in fam.iter() {
        let r = p.len() - 1;
        if !in_directed_family(p, gprime) {
            return Err(Error::NotInDirectedFamily { path: p.to_vec() });
        }
        if r == 1 {
            assignment.push(p[0]);
            continue;
        }
        let allowed = r / 2 - 1;
        let up_from_first = (2..=r).filter(|&i| !gprime.has_arc(p[i - 1], p[i])).count();
        if up_from_first <= allowed {
            assignment.push(p[1]);
            continue;
        }
        let up_from_last = (1..r - 1).filter(|&i| !gprime.has_arc(p[i], p[i - 1])).count();
        if up_from_last <= allowed {
            assignment.push(p[r - 1]);
        } else {
            return Err(Error::Internal(format!(
                "no end of {p:?} leaves at most {allowed} upstream edges"
            )));
        }
    }
    Ok(EndpointMap {
        kind: MapKind::Gamma,
        assignment,
    })
}

/// Charges each path to whichever endpoint comes later in `sequence`.
pub fn tau_map(fam: &PathFamily, sequence: &[usize]) -> Result<EndpointMap> {
    if sequence.len() != fam.n() {
        return Err(Error::param(format!(
            "sequence has {} entries but the family spans {} vertices",
            sequence.len(),
            fam.n()
        )));
    }
    let mut pos = vec![usize::MAX; fam.n()];
    for (i, &v) in sequence.iter().enumerate() {
        if v >= fam.n() || pos[v] != usize::MAX {
            return Err(Error::param("sequence is not a permutation of the vertices"));
        }
        pos[v] = i;
    }
    let assignment = fam
        .iter()
        .map(|p| {
            let (a, b) = (p[0], p[p.len() - 1]);
            if pos[a] > pos[b] {
                a
            } else {
                b
            }
        })
        .collect();
    Ok(EndpointMap {
        kind: MapKind::Tau,
        assignment,
    })
}

/// `2^{ell+1} d^{ceil(ell/2)} Delta^{floor(ell/2)}`, the per-vertex load of `rho`.
pub fn rho_load_bound(ell: usize, d: usize, delta: usize) -> u128 {
    pow_sat(2, ell as u32 + 1)
        .saturating_mul(pow_sat(d as u128, ell.div_ceil(2) as u32))
        .saturating_mul(pow_sat(delta as u128, (ell / 2) as u32))
}

/// `2^ell d^{ceil(ell/2)+1} Delta^{floor(ell/2)-1}`, the per-vertex load of
/// `gamma` (`ell >= 2`).
pub fn gamma_load_bound(ell: usize, d: usize, delta: usize) -> u128 {
    assert!(ell >= 2, "gamma bound needs ell >= 2");
    pow_sat(2, ell as u32)
        .saturating_mul(pow_sat(d as u128, ell.div_ceil(2) as u32 + 1))
        .saturating_mul(pow_sat(delta as u128, (ell / 2 - 1) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_g_prime, degeneracy_order, orient_acyclic};
    use crate::layering::compute_layering;

    fn family(g: &Graph, ell: usize) -> PathFamily {
        enumerate_paths_with(g, ell, &PathLimits::unlimited()).unwrap()
    }

    fn all(fam: &PathFamily) -> Vec<Vec<usize>> {
        fam.iter().map(<[usize]>::to_vec).collect()
    }

    #[test]
    fn upath_canonical_form() {
        assert_eq!(UPath::new(vec![3, 1, 2]).vertices(), &[2, 1, 3]);
        assert_eq!(UPath::new(vec![0, 5]).endpoints(), (0, 5));
        assert_eq!(UPath::new(vec![4, 2, 0]).length(), 2);
    }

    #[test]
    fn enumerate_small_graphs() {
        assert!(family(&Graph::empty(1), 4).is_empty());
        assert_eq!(all(&family(&Graph::path(3), 2)), vec![vec![0, 1], vec![0, 1, 2], vec![1, 2]]);
        let k3 = family(&Graph::complete(3), 2);
        assert_eq!(k3.len(), 6);
        assert_eq!(k3.iter().filter(|p| p.len() == 3).count(), 3);
        assert!(enumerate_paths_with(&Graph::path(2), 0, &PathLimits::unlimited()).is_err());
    }

    #[test]
    fn family_is_sorted_and_indexed() {
        let g = Graph::grid(3, 3);
        let fam = family(&g, 3);
        let paths = all(&fam);
        assert!(paths.windows(2).all(|w| w[0] < w[1]));
        for v in 0..g.n() {
            for &id in fam.with_endpoint(v) {
                let p = fam.path(id);
                assert!(p[0] == v || p[p.len() - 1] == v);
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::complete(8);
        let err = enumerate_paths_with(&g, 4, &PathLimits { max_bytes: 1024 }).unwrap_err();
        assert!(matches!(err, Error::PathBudgetExceeded { .. }));
    }

    #[test]
    fn restricted_family_examples() {
        let star = Graph::star(8);
        let layering = compute_layering(&star, 1).unwrap();
        assert!(enumerate_restricted_family(&star, 2, &layering).unwrap().is_empty());

        let k3 = Graph::complete(3);
        let single = compute_layering(&k3, 1).unwrap();
        assert_eq!(enumerate_restricted_family(&k3, 2, &single).unwrap(), family(&k3, 2));
    }

    #[test]
    fn rho_examples() {
        let p3 = Graph::path(3);
        let fam = family(&p3, 2);
        let along = Orientation::from_arcs(3, [(0, 1), (1, 2)]);
        let rho = rho_map(&fam, &along);
        // ab, abc, bc
        assert_eq!(rho.assignment, vec![0, 0, 1]);

        let edge = Orientation::from_arcs(2, [(1, 0)]);
        assert_eq!(rho_map(&family(&Graph::path(2), 1), &edge).assignment, vec![1]);

        // a -> b <- c: one downstream edge either way, canonical first endpoint wins
        let into_middle = Orientation::from_arcs(3, [(0, 1), (2, 1)]);
        assert_eq!(rho_map(&fam, &into_middle).get(1), 0);
    }

    #[test]
    fn gamma_examples() {
        let k3 = Graph::complete(3);
        let all_in_one = compute_layering(&k3, 1).unwrap();
        let gp = build_g_prime(&k3, &all_in_one);
        let fam = family(&k3, 2);
        let gamma = gamma_map(&fam, &gp).unwrap();
        for (id, p) in fam.iter().enumerate() {
            let expected = if p.len() == 3 { p[1] } else { p[0] };
            assert_eq!(gamma.get(id), expected);
        }

        // a <- b <-> c -> d
        let p4 = Graph::path(4);
        let gp = Orientation::from_arcs(4, [(1, 0), (1, 2), (2, 1), (2, 3)]);
        let long = family(&p4, 3);
        let restricted = gamma_map(&single_path_family(&p4, &[0, 1, 2, 3]), &gp).unwrap();
        assert_eq!(restricted.get(0), 1);
        assert!(gamma_map(&long, &gp).is_err(), "edge 0-1 alone is not in the directed family");
    }

    fn single_path_family(g: &Graph, path: &[usize]) -> PathFamily {
        let mut fam = PathFamily::new(g.n(), path.len() - 1);
        fam.push(path);
        fam
    }

    #[test]
    fn gamma_rejects_paths_outside_directed_family() {
        let g = Graph::path(3);
        let gp = Orientation::from_arcs(3, [(0, 1), (1, 2)]);
        let fam = single_path_family(&g, &[0, 1, 2]);
        let err = gamma_map(&fam, &gp).unwrap_err();
        assert!(matches!(err, Error::NotInDirectedFamily { path } if path == vec![0, 1, 2]));
    }

    #[test]
    fn tau_examples() {
        let p3 = Graph::path(3);
        let fam = family(&p3, 2);
        let tau = tau_map(&fam, &[0, 1, 2]).unwrap();
        assert_eq!(tau.get(1), 2);

        let edge = family(&Graph::path(2), 1);
        assert_eq!(tau_map(&edge, &[1, 0]).unwrap().get(0), 0);

        let k3 = family(&Graph::complete(3), 2);
        let tau = tau_map(&k3, &[0, 1, 2]).unwrap();
        assert_eq!(tau.loads(3), vec![0, 2, 4]);
        assert!(tau_map(&k3, &[0, 1]).is_err());
    }

    #[test]
    fn rho_respects_load_bound_on_grid() {
        let g = Graph::grid(5, 5);
        let ord = degeneracy_order(&g);
        let orient = orient_acyclic(&g, &ord).unwrap();
        for ell in 1..=4 {
            let fam = family(&g, ell);
            let rho = rho_map(&fam, &orient);
            let bound = rho_load_bound(ell, orient.max_out_degree(), g.max_degree());
            assert!(rho.max_load(g.n()) as u128 <= bound);
        }
    }

    #[test]
    fn dump_format() {
        let mut out = Vec::new();
        family(&Graph::path(3), 2).write_dump(&mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0 1\n0 1 2\n1 2\n");
    }
}
