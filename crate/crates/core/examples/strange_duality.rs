//! Equal level-one Verlinde dimensions across the strange-duality pairs,
//! including the golden-ratio closed form for the G2/F4 pair.
//!
//! Run with: cargo run --release --example strange_duality

use levelone::config::RunConfig;
use levelone::verlinde::{strange_duality_dims, DUALITY_PAIRS};

fn main() -> levelone::Result<()> {
    let config = RunConfig::default();
    for (group, a, b) in DUALITY_PAIRS {
        println!("pair {group} ({a} vs {b}):");
        for genus in 0..=4 {
            let rep = strange_duality_dims(&format!("{a}:{b}"), genus, &config)?;
            let cf = rep
                .closed_form
                .map(|x| format!("  closed form {x:.6}"))
                .unwrap_or_default();
            println!(
                "  genus {genus}: {} = {}  ({}){cf}",
                rep.dim_a,
                rep.dim_b,
                if rep.equal { "equal" } else { "DIFFER" }
            );
        }
    }
    Ok(())
}
