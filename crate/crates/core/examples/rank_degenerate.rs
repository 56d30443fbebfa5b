//! Rank a random 2-degenerate graph for ell = 2, 3, 4 and compare the colour
//! count with the trivial bound n.
//!
//!     cargo run --release --example rank_degenerate -- 4000 7

use vertex_ranking::generators::{generate, GenSpec};
use vertex_ranking::rank_degenerate;

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|a| a.parse()).transpose()?.unwrap_or(2000);
    let seed: u64 = args.next().map(|a| a.parse()).transpose()?.unwrap_or(1);
    let g = generate(&GenSpec::degenerate(n, 2, seed))?;
    println!("n = {}, m = {}, max degree = {}", g.n(), g.edge_count(), g.max_degree());
    for ell in 2..=4 {
        let r = rank_degenerate(&g, ell, 2, seed)?;
        println!(
            "ell = {ell}: {} colours (phase 1 {}, phase 2 {}, split {}), k = {}, q = {}, |P| = {}",
            r.total_colours(),
            r.counts.phase1,
            r.counts.phase2,
            r.counts.split,
            r.k,
            r.q,
            r.stats.problematic_vertices
        );
    }
    Ok(())
}
