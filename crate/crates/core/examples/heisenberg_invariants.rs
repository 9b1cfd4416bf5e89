//! Finite Heisenberg groups: every lifted maximal isotropic subgroup
//! fixes a one-dimensional subspace, and the canonical invariant tensor
//! induces a full-rank duality map.
//!
//! Run with: cargo run --release --example heisenberg_invariants

use levelone::heisenberg::{run_scenario, strange_duality_map, FiniteAbelian, Scenario};

fn main() -> levelone::Result<()> {
    for (center, genus) in [(vec![2u64], 1usize), (vec![3], 1), (vec![5], 1), (vec![2, 2], 1), (vec![3], 2)] {
        let sc = Scenario { center: center.clone(), genus, samples: 10, seed: 42 };
        let rep = run_scenario(&sc)?;
        println!(
            "center {center:?} genus {genus}: invariant dims {:?} (all one: {})",
            rep.invariant_dims, rep.all_one
        );
    }
    for (orders, genus) in [(vec![5u64], 1usize), (vec![3], 1), (vec![2], 2)] {
        let rep = strange_duality_map(&FiniteAbelian::new(orders.clone()), genus, false)?;
        println!(
            "duality map for center {orders:?} genus {genus}: rank {}/{} (equivariant: {})",
            rep.rank, rep.space_dim, rep.equivariant
        );
    }
    Ok(())
}
