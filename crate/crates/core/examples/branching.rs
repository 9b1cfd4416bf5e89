//! Decompose the basic (vacuum) level-one module of E8 under each of its
//! conformal subalgebras, printing sub weight, grade shift and
//! multiplicity per branching class.
//!
//! Run with: cargo run --release --example branching

use levelone::affine::LevelWeight;
use levelone::embed::{branch_affine, resolve_embedding};

fn main() -> levelone::Result<()> {
    for spec in ["E8:D8", "E8:A8", "E8:A4+A4", "E8:A2+E6", "E8:A1+E7", "E8:G2+F4"] {
        let e = resolve_embedding(spec)?;
        let vac = LevelWeight::vacuum(&e.ambient, vec![1])?;
        let result = branch_affine(&e, &vac, 3, 2_000_000)?;
        println!("{spec} (verified through grade {}):", result.verified_to_grade);
        for en in &result.entries {
            println!(
                "  sub weight {:?}  shift {}  mult {}",
                en.weight.weight.0, en.shift, en.mult
            );
        }
    }
    Ok(())
}
