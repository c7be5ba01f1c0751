//! Potts partition function of the square graph by spin enumeration and
//! from the dichromatic polynomial, over a range of couplings.

use khovanov_potts::fixtures;
use khovanov_potts::potts::{partition_spin_sum, partition_via_dichromatic, PottsParameters};
use num_complex::Complex64;

fn main() -> khovanov_potts::Result<()> {
    let g = fixtures::graph("square")?;
    for states in [2, 3, 4] {
        for k in [Complex64::new(0.5, 0.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, 1.0)] {
            let p = PottsParameters::new(states, k);
            let spins = partition_spin_sum(&g, p)?;
            let poly = partition_via_dichromatic(&g, p)?;
            println!("Q={states} K={k:<8} spins {spins:.6}  polynomial {poly:.6}  |diff| {:.1e}", (spins - poly).norm());
        }
    }
    Ok(())
}
