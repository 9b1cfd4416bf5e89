//! Conformal and trace anomalies for level-one alcoves.
//!
//! Run with: cargo run --release --example anomalies

use levelone::affine::{alcove, conformal_anomaly, trace_anomaly};
use levelone::RootSystem;

fn main() -> levelone::Result<()> {
    for (name, level) in [
        ("A1", vec![1]),
        ("E8", vec![1]),
        ("D8", vec![1]),
        ("A2+E6", vec![1, 1]),
        ("G2+F4", vec![1, 1]),
    ] {
        let rs = RootSystem::parse(name)?;
        let c = conformal_anomaly(&rs, &level)?;
        println!("{name} at level {level:?}: c = {c}");
        for lw in alcove(&rs, &level)? {
            let d = trace_anomaly(&rs, &lw)?;
            println!("  labels {:?}  delta = {d}", lw.weight.0);
        }
    }
    Ok(())
}
