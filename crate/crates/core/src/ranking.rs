//! The two-phase randomized ranking algorithm and the degree-splitting reduction.
//!
//! For a d-degenerate graph of maximum degree at most `delta`:
//!
//! 1. Layer the vertices by repeated removal of low-degree vertices and give
//!    layer `i` its own palette `Φ_i` of `2k` colours, all above `Φ_{i-1}`.
//! 2. Collect the paths whose endpoints share a layer and whose interior sits
//!    no higher, order the vertices by peeling the endpoint-pair multigraph,
//!    and colour them in that order. Each vertex draws uniformly from the `k`
//!    colours of its palette that close the fewest of its pending paths.
//! 3. Every path whose endpoints collided is problematic. One vertex of each
//!    problematic path (chosen through the layered auxiliary digraph) is
//!    recoloured from a palette above all first-phase colours, properly
//!    colouring the recoloured set in `G^ell`.
//!
//! [`rank_degenerate`] first splits off the vertices of degree at least a
//! threshold tuned to `n`, ranks the rest, and gives each split vertex its own
//! top colour.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    build_g_prime, build_g_star, degeneracy_order, greedy_degeneracy_order_multigraph, orient_acyclic,
    power_graph, DegeneracyOrder, Graph,
};
use crate::layering::{compute_layering, Layering};
use crate::log2_clamped;
use crate::paths::{enumerate_restricted_family_with, gamma_map, tau_map, EndpointMap, PathFamily, PathLimits};
use crate::verify::{first_violation, PaletteTag, RankedColouring};

/// First-phase palettes `Φ_0 … Φ_q` of `2k` consecutive colours each, and the
/// open-ended second-phase palette `Φ_{q+1}` above them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Palettes {
    pub k: usize,
    pub q: usize,
}

impl Palettes {
    pub fn layer_base(&self, layer: usize) -> usize {
        2 * self.k * layer + 1
    }

    pub fn layer_range(&self, layer: usize) -> RangeInclusive<usize> {
        self.layer_base(layer)..=2 * self.k * (layer + 1)
    }

    /// Smallest colour of `Φ_{q+1}`.
    pub fn phase2_base(&self) -> usize {
        2 * self.k * (self.q + 1) + 1
    }

    pub fn palette_of(&self, colour: usize) -> PaletteTag {
        if colour >= self.phase2_base() {
            PaletteTag::Phase2
        } else {
            PaletteTag::Layer((colour - 1) / (2 * self.k))
        }
    }
}

/// Derived constants of one run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankingParams {
    pub n: usize,
    pub ell: usize,
    pub d: usize,
    pub delta: usize,
    /// Exponent of the log factor in `k`: 0 or 1/4.
    pub b: f64,
    pub c_m: f64,
    pub seed: u64,
    /// Half the size of each first-phase palette.
    pub k: usize,
    /// Cap on the problematic paths created by colouring one vertex.
    pub m: u64,
}

impl RankingParams {
    /// `2^{ell+2} d^{ceil(ell/2)}`. With it `M k` is at least twice the
    /// endpoint-charging load bound, which covers the peeling back-degree of
    /// the endpoint-pair multigraph.
    pub fn default_c_m(ell: usize, d: usize) -> f64 {
        2f64.powi(ell as i32 + 2) * (d.max(1) as f64).powi(ell.div_ceil(2) as i32)
    }

    pub fn derive(n: usize, ell: usize, d: usize, delta: usize, seed: u64, c_m: Option<f64>) -> Result<Self> {
        if ell < 2 {
            return Err(Error::param("the two-phase algorithm needs ell >= 2"));
        }
        let half = (ell / 2) as i32;
        let log_n = log2_clamped(n);
        let delta_f = delta.max(1) as f64;
        let b = if delta_f.powi(half - 1) >= log_n { 0.0 } else { 0.25 };
        let k = (delta_f.powf(half as f64 - 0.5) * log_n.powf(b)).ceil().max(1.0) as usize;
        let c_m = c_m.unwrap_or_else(|| Self::default_c_m(ell, d));
        let m = (c_m * delta_f.powi(half) / k as f64).ceil().max(1.0) as u64;
        Ok(RankingParams {
            n,
            ell,
            d,
            delta,
            b,
            c_m,
            seed,
            k,
            m,
        })
    }
}

/// Bookkeeping of the first phase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemState {
    /// `counters[w][a]`: paths of `τ^{-1}(w)` whose other endpoint had colour
    /// `base + a` when `w` was coloured, for the palette of `w`'s layer.
    pub counters: Vec<Vec<u64>>,
    /// Problematic paths created when each vertex was coloured.
    pub created: Vec<u64>,
    /// `|τ^{-1}(w)|`.
    pub tau_load: Vec<u64>,
    /// Largest counter inside the subpalette each vertex drew from.
    pub subpalette_max: Vec<u64>,
    /// Ids of the problematic paths, increasing.
    pub problematic: Vec<usize>,
}

impl ProblemState {
    pub fn max_created(&self) -> u64 {
        self.created.iter().copied().max().unwrap_or(0)
    }

    pub fn max_tau_load(&self) -> u64 {
        self.tau_load.iter().copied().max().unwrap_or(0)
    }
}

/// RNG stream for the colouring step of `vertex`.
fn vertex_rng(seed: u64, vertex: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(vertex as u64);
    rng
}

/// Colours the vertices in `sequence` order from their layer palettes.
///
/// `fam` must be the restricted family and `tau` its assignment to the later
/// endpoint in `sequence`. Fails only on a broken internal invariant.
pub fn phase1_colour(
    params: &RankingParams,
    layering: &Layering,
    fam: &PathFamily,
    tau: &EndpointMap,
    sequence: &[usize],
) -> Result<(RankedColouring, ProblemState)> {
    let n = layering.layer.len();
    let k = params.k;
    let palettes = Palettes { k, q: layering.q };
    let pending = tau.preimages(n);
    let mut colour = vec![0usize; n];
    let mut state = ProblemState {
        counters: vec![Vec::new(); n],
        created: vec![0; n],
        tau_load: pending.iter().map(|l| l.len() as u64).collect(),
        subpalette_max: vec![0; n],
        problematic: Vec::new(),
    };

    for &w in sequence {
        let base = palettes.layer_base(layering.layer[w]);
        let mut counts = vec![0u64; 2 * k];
        for &id in &pending[w] {
            let other = other_endpoint(fam.path(id), w);
            let c = colour[other];
            if c < base || c >= base + 2 * k {
                return Err(Error::Internal(format!(
                    "path {:?} reached vertex {w} before its other endpoint was coloured in the same palette",
                    fam.path(id)
                )));
            }
            counts[c - base] += 1;
        }
        let mut by_count: Vec<usize> = (0..2 * k).collect();
        by_count.sort_by_key(|&a| (counts[a], a));
        let subpalette = &by_count[..k];
        let pick = subpalette[vertex_rng(params.seed, w).gen_range(0..k)];
        colour[w] = base + pick;

        let load = state.tau_load[w];
        let sub_max = subpalette.iter().map(|&a| counts[a]).max().unwrap_or(0);
        if sub_max > load / k as u64 || counts[pick] > params.m {
            return Err(Error::Internal(format!(
                "vertex {w} would create {} problematic paths (cap {}, load {load}, k {k})",
                counts[pick], params.m
            )));
        }
        state.created[w] = counts[pick];
        state.subpalette_max[w] = sub_max;
        state.counters[w] = counts;
        state
            .problematic
            .extend(pending[w].iter().filter(|&&id| colour[other_endpoint(fam.path(id), w)] == colour[w]));
    }
    state.problematic.sort_unstable();

    let tags = layering.layer.iter().map(|&l| PaletteTag::Layer(l)).collect();
    Ok((RankedColouring::with_tags(colour, tags)?, state))
}

fn other_endpoint(path: &[usize], v: usize) -> usize {
    let (a, b) = (path[0], path[path.len() - 1]);
    if a == v {
        b
    } else {
        a
    }
}

/// Everything the first phase builds, kept for inspection.
#[derive(Clone, Debug)]
pub struct Phase1Run {
    pub layering: Layering,
    pub palettes: Palettes,
    pub family: PathFamily,
    pub order: DegeneracyOrder,
    pub sequence: Vec<usize>,
    pub tau: EndpointMap,
    pub colouring: RankedColouring,
    pub state: ProblemState,
}

pub fn run_phase1(g: &Graph, params: &RankingParams, limits: &PathLimits) -> Result<Phase1Run> {
    let layering = compute_layering(g, params.d.max(1))?;
    let family = enumerate_restricted_family_with(g, params.ell, &layering, limits)?;
    let g_star = build_g_star(g, &family);
    let order = greedy_degeneracy_order_multigraph(&g_star);
    let sequence = order.colouring_sequence();
    let tau = tau_map(&family, &sequence)?;
    let max_load = tau.max_load(g.n()) as u128;
    if (params.m as u128) * (params.k as u128) < max_load {
        return Err(Error::Internal(format!(
            "M k = {} is below the largest tau load {max_load}",
            params.m as u128 * params.k as u128
        )));
    }
    let (colouring, state) = phase1_colour(params, &layering, &family, &tau, &sequence)?;
    Ok(Phase1Run {
        palettes: Palettes { k: params.k, q: layering.q },
        layering,
        family,
        order,
        sequence,
        tau,
        colouring,
        state,
    })
}

/// `{γ(Π) : Π problematic}`, sorted.
pub fn problematic_vertices(state: &ProblemState, gamma: &EndpointMap) -> Vec<usize> {
    state
        .problematic
        .iter()
        .map(|&id| gamma.get(id))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Recolours `recolour` greedily along a degeneracy order of `power[recolour]`
/// using colours from `Φ_{q+1}`. Returns the new colouring and the number of
/// second-phase colours used.
pub fn phase2_recolour(
    power: &Graph,
    colouring: &RankedColouring,
    recolour: &[usize],
    palettes: &Palettes,
) -> Result<(RankedColouring, usize)> {
    let (sub, original) = power.induced_subgraph(recolour);
    let offsets = greedy_offsets(&sub);
    let used = offsets.iter().map(|&o| o + 1).max().unwrap_or(0);
    let mut colours = colouring.colours().to_vec();
    let mut tags: Vec<PaletteTag> = match colouring.tags() {
        Some(t) => t.to_vec(),
        None => colours.iter().map(|&c| palettes.palette_of(c)).collect(),
    };
    for (i, &v) in original.iter().enumerate() {
        colours[v] = palettes.phase2_base() + offsets[i];
        tags[v] = PaletteTag::Phase2;
    }
    Ok((RankedColouring::with_tags(colours, tags)?, used))
}

// Smallest-last greedy colouring; returns 0-based colour offsets.
fn greedy_offsets(g: &Graph) -> Vec<usize> {
    let mut offset = vec![usize::MAX; g.n()];
    let mut taken = Vec::new();
    for v in degeneracy_order(g).colouring_sequence() {
        taken.clear();
        taken.extend(g.neighbours(v).iter().map(|&w| offset[w]).filter(|&o| o != usize::MAX));
        taken.sort_unstable();
        let mut c = 0;
        for &t in &taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        offset[v] = c;
    }
    offset
}

/// `max_p |N_H^+(p) ∩ P|` where `H` orients `power` acyclically along its
/// degeneracy order.
pub fn phase2_load(power: &Graph, recoloured: &[usize]) -> Result<usize> {
    let h = orient_acyclic(power, &degeneracy_order(power))?;
    let mut in_p = vec![false; power.n()];
    for &v in recoloured {
        in_p[v] = true;
    }
    Ok((0..power.n())
        .map(|p| h.out_neighbours(p).iter().filter(|&&w| in_p[w]).count())
        .max()
        .unwrap_or(0))
}

/// Distinct colours per palette family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ColourCounts {
    pub phase1: usize,
    pub phase2: usize,
    pub split: usize,
}

impl ColourCounts {
    pub fn total(&self) -> usize {
        self.phase1 + self.phase2 + self.split
    }
}

/// Diagnostics of a run; not part of the colouring output.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    /// Degeneracy computed from the input.
    pub d_actual: usize,
    pub family_size: usize,
    pub problematic_paths: usize,
    /// `|P|`.
    pub problematic_vertices: usize,
    /// `max_p |N_H^+(p) ∩ P|`.
    pub tail_max: usize,
    pub max_created: u64,
    pub max_tau_load: u64,
    pub layering_halved: bool,
    pub split_size: usize,
}

/// A verified ranking with the parameters that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Ranking {
    pub colouring: RankedColouring,
    pub n: usize,
    pub ell: usize,
    pub d: usize,
    pub delta: usize,
    pub k: usize,
    pub m: u64,
    pub b: f64,
    pub q: usize,
    pub counts: ColourCounts,
    pub seed: u64,
    pub stats: RunStats,
}

#[derive(Serialize)]
struct ColouringJson<'a> {
    n: usize,
    ell: usize,
    d: usize,
    delta: usize,
    k: usize,
    #[serde(rename = "M")]
    m: u64,
    b: f64,
    q: usize,
    colours: &'a [usize],
    palette_tags: Vec<PaletteTag>,
    counts: ColourCounts,
    seed: u64,
}

impl Ranking {
    pub fn total_colours(&self) -> usize {
        self.counts.total()
    }

    /// The colouring output document.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = ColouringJson {
            n: self.n,
            ell: self.ell,
            d: self.d,
            delta: self.delta,
            k: self.k,
            m: self.m,
            b: self.b,
            q: self.q,
            colours: self.colouring.colours(),
            palette_tags: self
                .colouring
                .tags()
                .map(<[PaletteTag]>::to_vec)
                .unwrap_or_default(),
            counts: self.counts,
            seed: self.seed,
        };
        serde_json::to_value(doc).expect("colouring serialises")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("colouring serialises")
    }
}

/// Knobs beyond the core parameters.
#[derive(Clone, Debug, Default)]
pub struct RankOptions {
    /// Overrides the constant in `M`.
    pub c_m: Option<f64>,
    pub limits: PathLimits,
}

/// Proper colouring along the smallest-last order; a 1-ranking.
pub fn greedy_proper_colouring(g: &Graph) -> RankedColouring {
    let colours = greedy_offsets(g).into_iter().map(|o| o + 1).collect();
    RankedColouring::with_tags(colours, vec![PaletteTag::Greedy; g.n()]).expect("greedy colours are positive")
}

fn effective_d(g: &Graph, d: usize) -> (usize, usize) {
    let actual = degeneracy_order(g).degeneracy;
    if d < actual {
        log::warn!("supplied d = {d} is below the degeneracy {actual}; using {actual}");
        (actual.max(1), actual)
    } else {
        (d.max(1), actual)
    }
}

fn check_verified(g: &Graph, ell: usize, col: &RankedColouring) -> Result<()> {
    match first_violation(g, ell, col)? {
        None => Ok(()),
        Some(v) => Err(Error::VerificationFailed {
            path: v.path.into_vertices(),
            colour: v.colour,
        }),
    }
}

fn greedy_ranking(g: &Graph, d: usize, delta: usize, seed: u64, d_actual: usize) -> Ranking {
    let colouring = greedy_proper_colouring(g);
    let used = colouring.distinct_colours();
    Ranking {
        n: g.n(),
        ell: 1,
        d,
        delta,
        k: 0,
        m: 0,
        b: 0.0,
        q: 0,
        counts: ColourCounts {
            phase1: used,
            ..Default::default()
        },
        seed,
        stats: RunStats {
            d_actual,
            layering_halved: true,
            ..Default::default()
        },
        colouring,
    }
}

/// Two-phase ranking of a graph with maximum degree at most `delta`.
///
/// `ell = 1` falls back to a greedy proper colouring. If `d` is below the true
/// degeneracy the true value is used instead. The result is verified.
pub fn rank_bounded_degree(g: &Graph, ell: usize, d: usize, delta: usize, seed: u64) -> Result<Ranking> {
    rank_bounded_degree_with(g, ell, d, delta, seed, &RankOptions::default())
}

pub fn rank_bounded_degree_with(
    g: &Graph,
    ell: usize,
    d: usize,
    delta: usize,
    seed: u64,
    opts: &RankOptions,
) -> Result<Ranking> {
    let ranking = bounded_degree_unverified(g, ell, d, delta, seed, opts)?;
    check_verified(g, ell, &ranking.colouring)?;
    Ok(ranking)
}

fn bounded_degree_unverified(
    g: &Graph,
    ell: usize,
    d: usize,
    delta: usize,
    seed: u64,
    opts: &RankOptions,
) -> Result<Ranking> {
    if ell == 0 {
        return Err(Error::param("ell must be at least 1"));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > delta) {
        return Err(Error::DegreeExceeded {
            vertex: v,
            degree: g.degree(v),
            delta,
        });
    }
    let (d, d_actual) = effective_d(g, d);
    if ell == 1 {
        return Ok(greedy_ranking(g, d, delta, seed, d_actual));
    }

    let params = RankingParams::derive(g.n(), ell, d, delta, seed, opts.c_m)?;
    let phase1 = run_phase1(g, &params, &opts.limits)?;
    let g_prime = build_g_prime(g, &phase1.layering);
    let gamma = gamma_map(&phase1.family, &g_prime)?;
    let recolour = problematic_vertices(&phase1.state, &gamma);
    let power = power_graph(g, ell)?.graph;
    let tail_max = phase2_load(&power, &recolour)?;
    let (colouring, phase2) = phase2_recolour(&power, &phase1.colouring, &recolour, &phase1.palettes)?;

    let phase1_colours = colouring
        .colours()
        .iter()
        .filter(|&&c| c < phase1.palettes.phase2_base())
        .collect::<BTreeSet<_>>()
        .len();
    Ok(Ranking {
        n: g.n(),
        ell,
        d,
        delta,
        k: params.k,
        m: params.m,
        b: params.b,
        q: phase1.layering.q,
        counts: ColourCounts {
            phase1: phase1_colours,
            phase2,
            split: 0,
        },
        seed,
        stats: RunStats {
            d_actual,
            family_size: phase1.family.len(),
            problematic_paths: phase1.state.problematic.len(),
            problematic_vertices: recolour.len(),
            tail_max,
            max_created: phase1.state.max_created(),
            max_tau_load: phase1.state.max_tau_load(),
            layering_halved: phase1.layering.halving_held,
            split_size: 0,
        },
        colouring,
    })
}

/// Degree threshold of the splitting reduction:
/// `max(d, 1, floor(n^{1/(floor(ell/2)+1/2)} log2(n)^{-5/6}))`.
pub fn split_threshold(n: usize, ell: usize, d: usize) -> usize {
    let exponent = 1.0 / ((ell / 2) as f64 + 0.5);
    let raw = (n as f64).powf(exponent) * log2_clamped(n).powf(-5.0 / 6.0);
    (raw.floor() as usize).max(d).max(1)
}

/// Ranks any d-degenerate graph: vertices of degree at least
/// [`split_threshold`] get distinct colours above everything else, the rest is
/// ranked by [`rank_bounded_degree`]. The result is verified on `g`.
pub fn rank_degenerate(g: &Graph, ell: usize, d: usize, seed: u64) -> Result<Ranking> {
    rank_degenerate_with(g, ell, d, seed, &RankOptions::default())
}

pub fn rank_degenerate_with(g: &Graph, ell: usize, d: usize, seed: u64, opts: &RankOptions) -> Result<Ranking> {
    if ell == 0 {
        return Err(Error::param("ell must be at least 1"));
    }
    let (d, _) = effective_d(g, d);
    let delta = split_threshold(g.n(), ell, d);
    let (split, rest): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| g.degree(v) >= delta);
    let (remainder, original) = g.induced_subgraph(&rest);
    let inner = bounded_degree_unverified(&remainder, ell, d, delta, seed, opts)?;

    let mut colours = vec![0; g.n()];
    let mut tags = vec![PaletteTag::Split; g.n()];
    let inner_tags = inner.colouring.tags().expect("inner rankings are tagged");
    for (i, &v) in original.iter().enumerate() {
        colours[v] = inner.colouring.colour(i);
        tags[v] = inner_tags[i];
    }
    let base = inner.colouring.max_colour() + 1;
    for (j, &v) in split.iter().enumerate() {
        colours[v] = base + j;
    }
    let colouring = RankedColouring::with_tags(colours, tags)?;
    check_verified(g, ell, &colouring)?;

    Ok(Ranking {
        colouring,
        n: g.n(),
        delta,
        d,
        counts: ColourCounts {
            split: split.len(),
            ..inner.counts
        },
        stats: RunStats {
            d_actual: degeneracy_order(g).degeneracy,
            split_size: split.len(),
            ..inner.stats
        },
        ..inner
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_restricted_family, PathLimits};
    use crate::verify::is_valid_ranking;

    #[test]
    fn palette_layout() {
        let p = Palettes { k: 3, q: 2 };
        assert_eq!(p.layer_range(0), 1..=6);
        assert_eq!(p.layer_range(2), 13..=18);
        assert_eq!(p.phase2_base(), 19);
        assert_eq!(p.palette_of(7), PaletteTag::Layer(1));
        assert_eq!(p.palette_of(25), PaletteTag::Phase2);
    }

    #[test]
    fn params_for_small_instances() {
        // ell = 2, delta = 4: k = ceil(4^{1/2} * log2(1024)^{1/4})
        let p = RankingParams::derive(1024, 2, 2, 4, 0, None).unwrap();
        assert_eq!(p.b, 0.25);
        assert_eq!(p.k, (2.0 * 10f64.powf(0.25)).ceil() as usize);
        // c_M = 2^4 * 2 = 32, M = ceil(32 * 4 / k)
        assert_eq!(p.m, (128.0 / p.k as f64).ceil() as u64);

        // ell = 4, delta = 16: 16^{1} >= log2(1024) so b = 0, k = 16^{1.5} = 64
        let p = RankingParams::derive(1024, 4, 1, 16, 0, None).unwrap();
        assert_eq!(p.b, 0.0);
        assert_eq!(p.k, 64);
        assert!(RankingParams::derive(10, 1, 1, 1, 0, None).is_err());
    }

    #[test]
    fn phase1_without_restricted_paths() {
        let star = Graph::star(8);
        let params = RankingParams::derive(9, 2, 1, 8, 3, None).unwrap();
        let run = run_phase1(&star, &params, &PathLimits::unlimited()).unwrap();
        assert!(run.family.is_empty());
        assert!(run.state.problematic.is_empty());
        assert!(run.state.counters.iter().all(|c| c.iter().all(|&x| x == 0)));
        for v in 0..9 {
            let layer = run.layering.layer[v];
            assert!(run.palettes.layer_range(layer).contains(&run.colouring.colour(v)));
        }
    }

    #[test]
    fn phase1_single_and_isolated_vertices() {
        for n in [1, 2] {
            let g = Graph::empty(n);
            let params = RankingParams::derive(n, 2, 1, 1, 0, None).unwrap();
            let run = run_phase1(&g, &params, &PathLimits::unlimited()).unwrap();
            assert!(run.state.problematic.is_empty());
            assert!((0..n).all(|v| run.palettes.layer_range(0).contains(&run.colouring.colour(v))));
        }
    }

    #[test]
    fn phase2_examples() {
        let palettes = Palettes { k: 1, q: 0 };
        let g = Graph::path(3);
        let base = RankedColouring::with_tags(vec![1, 2, 1], vec![PaletteTag::Layer(0); 3]).unwrap();

        let (same, used) = phase2_recolour(&g, &base, &[], &palettes).unwrap();
        assert_eq!((same.colours(), used), (base.colours(), 0));

        let (one, used) = phase2_recolour(&g, &base, &[1], &palettes).unwrap();
        assert_eq!((one.colour(1), used), (3, 1));

        let (two, used) = phase2_recolour(&g, &base, &[0, 1], &palettes).unwrap();
        assert_eq!(used, 2);
        assert_ne!(two.colour(0), two.colour(1));
        assert!(two.colour(0) >= 3 && two.colour(1) >= 3);
    }

    #[test]
    fn bounded_degree_examples() {
        let k2 = Graph::path(2);
        let r = rank_bounded_degree(&k2, 2, 1, 1, 0).unwrap();
        assert_eq!(r.colouring.distinct_colours(), 2);

        let q3 = Graph::hypercube(3);
        for seed in 0..5 {
            let r = rank_bounded_degree(&q3, 2, 3, 3, seed).unwrap();
            assert!(is_valid_ranking(&q3, 2, &r.colouring).unwrap());
            assert!(r.total_colours() >= 4);
        }
    }

    #[test]
    fn bounded_degree_rejects_high_degree() {
        let err = rank_bounded_degree(&Graph::star(5), 2, 1, 4, 0).unwrap_err();
        assert!(matches!(err, Error::DegreeExceeded { vertex: 0, degree: 5, delta: 4 }));
    }

    #[test]
    fn wrong_d_falls_back_to_actual_degeneracy() {
        let k5 = Graph::complete(5);
        let r = rank_bounded_degree(&k5, 2, 1, 4, 0).unwrap();
        assert_eq!(r.d, 4);
    }

    #[test]
    fn degenerate_examples() {
        let k5 = Graph::complete(5);
        let r = rank_degenerate(&k5, 2, 4, 1).unwrap();
        assert!(r.total_colours() >= 5);

        let star = Graph::star(200);
        let r = rank_degenerate(&star, 2, 1, 1).unwrap();
        assert_eq!(r.counts.split, 1);
        assert_eq!(r.colouring.tags().unwrap()[0], PaletteTag::Split);
        assert_eq!(r.colouring.colour(0), r.colouring.max_colour());

        let empty = rank_degenerate(&Graph::empty(0), 2, 1, 0).unwrap();
        assert!(empty.colouring.is_empty());
    }

    #[test]
    fn ell_one_is_proper_colouring() {
        let c5 = Graph::cycle(5);
        let r = rank_degenerate(&c5, 1, 2, 0).unwrap();
        assert_eq!(r.total_colours(), 3);
        assert!(rank_degenerate(&c5, 0, 2, 0).is_err());
    }

    #[test]
    fn split_threshold_clamps() {
        assert_eq!(split_threshold(1, 2, 3), 3);
        assert_eq!(split_threshold(4, 4, 1), 1);
        // 2^14: 2^{28/3} * 14^{-5/6}
        let expected = (2f64.powf(28.0 / 3.0) * 14f64.powf(-5.0 / 6.0)).floor() as usize;
        assert_eq!(split_threshold(1 << 14, 2, 2), expected);
    }

    #[test]
    fn restricted_family_feeds_tau_consistently() {
        let g = Graph::grid(4, 4);
        let params = RankingParams::derive(16, 3, 2, 4, 9, None).unwrap();
        let run = run_phase1(&g, &params, &PathLimits::unlimited()).unwrap();
        assert_eq!(run.family, enumerate_restricted_family(&g, 3, &run.layering).unwrap());
        for w in 0..16 {
            let total: u64 = run.state.counters[w].iter().sum();
            assert_eq!(total, run.state.tau_load[w]);
        }
    }
}
