//! Exact ranking numbers of small graphs by exhaustive search.

use vertex_ranking::exact::{exact_ranking_number, SearchLimits};
use vertex_ranking::Graph;

fn main() -> anyhow::Result<()> {
    let graphs = [
        ("path P8", Graph::path(8)),
        ("cycle C8", Graph::cycle(8)),
        ("star K1,6", Graph::star(6)),
        ("grid 3x3", Graph::grid(3, 3)),
        ("cube Q3", Graph::hypercube(3)),
    ];
    let limits = SearchLimits::default();
    println!("{:<10} {:>4} {:>4} {:>4} {:>4}", "graph", "l=1", "l=2", "l=3", "l=7");
    for (name, g) in &graphs {
        let mut row = format!("{name:<10}");
        for ell in [1, 2, 3, 7] {
            let r = exact_ranking_number(g, ell, &limits)?;
            row += &format!(" {:>3}{}", r.value, if r.exhaustive { " " } else { "?" });
        }
        println!("{row}");
    }
    Ok(())
}
