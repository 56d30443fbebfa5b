//! A small colour-count scaling run written as CSV to stdout.
//!
//!     cargo run --release --example bench_scaling > scaling.csv

use vertex_ranking::generators::Family;
use vertex_ranking::harness::{bench_scaling, summaries, write_csv, ExperimentConfig};

fn main() -> anyhow::Result<()> {
    let ns = (8..=12).map(|e| 1 << e).collect();
    let mut cfg = ExperimentConfig::new(Family::RandomDDegenerate, 2, 2, ns, 5);
    cfg.timing = false;
    let rows = bench_scaling(&cfg)?;
    write_csv(std::io::stdout().lock(), &rows)?;
    for (n, median, ratio) in summaries(&rows) {
        eprintln!("n = {n:>5}: median {median:>5} colours, normalized {ratio:.3}");
    }
    Ok(())
}
