//! Write one instance of every family as an edge list, then read it back.

use vertex_ranking::generators::{generate, Family, GenSpec};
use vertex_ranking::graph::degeneracy_order;
use vertex_ranking::io::{read_edge_list, write_edge_list};

fn main() -> anyhow::Result<()> {
    let dir = std::env::temp_dir().join("lvr-instances");
    std::fs::create_dir_all(&dir)?;
    for family in Family::ALL {
        let spec = match family {
            Family::Hypercube => GenSpec::new(family, 6),
            Family::Grid => GenSpec::new(family, 12),
            Family::RandomDDegenerateBoundedDegree => GenSpec::bounded(150, 3, 6, 1),
            _ => GenSpec { d: 3, seed: 1, ..GenSpec::new(family, 150) },
        };
        let g = generate(&spec)?;
        let path = dir.join(format!("{family}.txt"));
        write_edge_list(std::fs::File::create(&path)?, &g, Some(&spec.header()))?;
        let back = read_edge_list(&path)?;
        anyhow::ensure!(back == g, "{family} did not round-trip");
        println!(
            "{:<36} n = {:>4} m = {:>4} degeneracy {} -> {}",
            family.name(),
            g.n(),
            g.edge_count(),
            degeneracy_order(&g).degeneracy,
            path.display()
        );
    }
    Ok(())
}
