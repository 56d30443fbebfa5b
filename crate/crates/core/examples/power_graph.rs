//! Power graphs of a grid and how their degeneracy compares with the bound.

use vertex_ranking::graph::{degeneracy_order, power_degeneracy_bound, power_graph};
use vertex_ranking::Graph;

fn main() -> anyhow::Result<()> {
    let g = Graph::grid(30, 30);
    let d = degeneracy_order(&g).degeneracy;
    let delta = g.max_degree();
    for ell in 1..=5 {
        let p = power_graph(&g, ell)?;
        println!(
            "ell = {ell}: {} edges, max degree {}, degeneracy {} (bound {})",
            p.graph.edge_count(),
            p.graph.max_degree(),
            degeneracy_order(&p.graph).degeneracy,
            power_degeneracy_bound(ell, d, delta)
        );
    }
    Ok(())
}
