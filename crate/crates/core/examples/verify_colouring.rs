//! Check hand-written colourings of the 6-cycle and list what goes wrong.

use vertex_ranking::{find_violations, Graph, RankedColouring};

fn main() -> anyhow::Result<()> {
    let c6 = Graph::cycle(6);
    let tries = [
        ("proper", vec![1, 2, 1, 2, 1, 2]),
        ("one peak", vec![1, 2, 1, 3, 1, 2]),
        ("two peaks", vec![1, 2, 3, 1, 2, 3]),
    ];
    for ell in 1..=3 {
        for (name, colours) in &tries {
            let col = RankedColouring::new(colours.clone())?;
            let bad = find_violations(&c6, ell, &col)?;
            match bad.first() {
                None => println!("ell = {ell}, {name}: valid"),
                Some(v) => println!(
                    "ell = {ell}, {name}: {} violations, e.g. path {:?} with top colour {}",
                    bad.len(),
                    v.path.vertices(),
                    v.colour
                ),
            }
        }
    }
    Ok(())
}
