//! Level-one Verlinde dimensions over genus 0..4 for the simply-laced
//! series and the exceptional systems, all from the S-matrix.
//!
//! Run with: cargo run --release --example verlinde_dims

use levelone::config::RunConfig;
use levelone::verlinde::{fusion_dim, s_matrix};
use levelone::RootSystem;

fn main() -> levelone::Result<()> {
    let config = RunConfig::default();
    println!("{:<6} {:>6} {:>6} {:>6} {:>6} {:>6}", "system", "g=0", "g=1", "g=2", "g=3", "g=4");
    for name in ["A1", "A2", "A8", "D4", "D8", "E6", "E7", "E8", "G2", "F4"] {
        let rs = RootSystem::parse(name)?;
        let s = s_matrix(&rs, &[1], &config)?;
        let dims: Vec<u64> = (0..=4)
            .map(|g| fusion_dim(&s, g, &[]))
            .collect::<levelone::Result<_>>()?;
        println!(
            "{:<6} {:>6} {:>6} {:>6} {:>6} {:>6}",
            name, dims[0], dims[1], dims[2], dims[3], dims[4]
        );
    }
    Ok(())
}
