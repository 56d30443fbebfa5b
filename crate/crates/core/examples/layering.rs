//! Degree layering of a d-degenerate graph with a few high-degree hubs.

use vertex_ranking::compute_layering;
use vertex_ranking::generators::{generate, GenSpec};

fn main() -> anyhow::Result<()> {
    for d in 1..=3 {
        let g = generate(&GenSpec::degenerate(20_000, d, 5))?;
        let l = compute_layering(&g, d)?;
        println!(
            "d = {d}: q = {}, survivors {:?}, layer sizes {:?}",
            l.q,
            l.survivor_sizes,
            l.layer_sizes()
        );
    }
    Ok(())
}
