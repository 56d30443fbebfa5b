//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls into the library except to build and read graphs.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use vertex_ranking::Graph;

/// Each pair independently with probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A random recursive tree plus each remaining pair with probability `p`.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (rng.gen_range(0..v), v))).unwrap()
}

fn extend(g: &Graph, ell: usize, seq: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    if seq.len() >= 2 {
        let rev: Vec<usize> = seq.iter().rev().copied().collect();
        out.insert(rev.min(seq.clone()));
    }
    if seq.len() == ell + 1 {
        return;
    }
    let last = *seq.last().unwrap();
    for &w in g.neighbours(last) {
        if !seq.contains(&w) {
            seq.push(w);
            extend(g, ell, seq, out);
            seq.pop();
        }
    }
}

/// Every path with 1..=ell edges in canonical orientation (smaller of the two
/// traversals), found by extending every walk from every start.
pub fn all_paths(g: &Graph, ell: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for s in 0..g.n() {
        extend(g, ell, &mut vec![s], &mut out);
    }
    out
}

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n())
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

// Eccentricity of `v` inside `mask`, or None when part of `mask` is unreachable.
fn eccentricity(adj: &[u32], mask: u32, v: usize) -> Option<usize> {
    let mut reach = 1u32 << v;
    let mut steps = 0;
    while reach != mask {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[u] & mask;
        }
        if next == reach {
            return None;
        }
        reach = next;
        steps += 1;
    }
    Some(steps)
}

/// Vertex sets of size at least two inducing a connected subgraph of diameter
/// at most `ell`.
pub fn small_diameter_subsets(g: &Graph, ell: usize) -> Vec<u32> {
    let adj = adjacency_masks(g);
    let n = g.n();
    (1u32..1 << n)
        .filter(|m| m.count_ones() >= 2)
        .filter(|&m| {
            (0..n)
                .filter(|&v| m >> v & 1 == 1)
                .all(|v| eccentricity(&adj, m, v).is_some_and(|e| e <= ell))
        })
        .collect()
}

/// Ranking test by subgraphs: every listed vertex set has a unique maximum colour.
pub fn unique_maximum_everywhere(subsets: &[u32], colours: &[usize]) -> bool {
    subsets.iter().all(|&m| {
        let mut best = 0;
        let mut count = 0;
        let mut bits = m;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let c = colours[v];
            if c > best {
                best = c;
                count = 1;
            } else if c == best {
                count += 1;
            }
        }
        count == 1
    })
}

/// `ell`-ranking test straight from the path definition on the brute-force path set.
pub fn is_ranking_by_paths(paths: &BTreeSet<Vec<usize>>, colours: &[usize]) -> bool {
    paths.iter().all(|p| {
        let (a, b) = (colours[p[0]], colours[p[p.len() - 1]]);
        a != b || p[1..p.len() - 1].iter().any(|&v| colours[v] > a)
    })
}

fn proper_with(adj: &[u32], k: usize, v: usize, colours: &mut Vec<usize>) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 1..=k {
        let clash = (0..v).any(|u| adj[v] >> u & 1 == 1 && colours[u] == c);
        if !clash {
            colours[v] = c;
            if proper_with(adj, k, v + 1, colours) {
                return true;
            }
        }
    }
    colours[v] = 0;
    false
}

pub fn chromatic_number(g: &Graph) -> usize {
    let adj = adjacency_masks(g);
    (0..=g.n())
        .find(|&k| proper_with(&adj, k, 0, &mut vec![0; g.n()]))
        .unwrap()
}

fn treedepth_of(adj: &[u32], mask: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&t) = memo.get(&mask) {
        return t;
    }
    // split off the component of the lowest vertex
    let first = mask.trailing_zeros() as usize;
    let mut comp = 1u32 << first;
    loop {
        let mut next = comp;
        let mut bits = comp;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[u] & mask;
        }
        if next == comp {
            break;
        }
        comp = next;
    }
    let t = if comp != mask {
        treedepth_of(adj, comp, memo).max(treedepth_of(adj, mask & !comp, memo))
    } else {
        let mut best = usize::MAX;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            best = best.min(1 + treedepth_of(adj, mask & !(1 << v), memo));
        }
        best
    };
    memo.insert(mask, t);
    t
}

/// Treedepth by recursion on vertex subsets; a single vertex has depth 1.
pub fn treedepth(g: &Graph) -> usize {
    let adj = adjacency_masks(g);
    treedepth_of(&adj, ((1u64 << g.n()) - 1) as u32, &mut HashMap::new())
}

/// Degeneracy by repeatedly deleting a minimum-degree vertex, quadratic time.
pub fn naive_degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let live_deg = |v: usize| g.neighbours(v).iter().filter(|&&w| alive[w]).count();
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| live_deg(v)).unwrap();
        best = best.max(live_deg(v));
        alive[v] = false;
    }
    best
}

/// Pairs at distance 1..=ell, by breadth-first search.
pub fn distance_pairs(g: &Graph, ell: usize) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for s in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if dist[u] == ell {
                continue;
            }
            for &w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                    if s < w {
                        out.insert((s, w));
                    }
                }
            }
        }
    }
    out
}
