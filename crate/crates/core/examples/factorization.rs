//! The genus recursion for fusion dimensions: the dimension at genus g
//! equals the sum over the alcove of dimensions at genus g-1 with a
//! conjugate pair of extra marked points.
//!
//! Run with: cargo run --release --example factorization

use levelone::config::RunConfig;
use levelone::verlinde::{factorization_check, s_matrix};
use levelone::RootSystem;

fn main() -> levelone::Result<()> {
    let config = RunConfig::default();
    for name in ["A1", "A2", "D4", "G2"] {
        let rs = RootSystem::parse(name)?;
        let s = s_matrix(&rs, &[1], &config)?;
        for genus in 1..=3 {
            let rep = factorization_check(&rs, &s, genus, &[])?;
            println!(
                "{name} genus {genus}: {} = {} ({})",
                rep.lhs,
                rep.rhs,
                if rep.holds { "holds" } else { "FAILS" }
            );
            for (lw, d) in &rep.terms {
                println!("    glue {:?} contributes {d}", lw.weight.0);
            }
        }
    }
    Ok(())
}
