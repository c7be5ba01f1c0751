//! The partition function at each rho = 1 point, read off the Euler
//! characteristic of Khovanov homology of the medial link.

use khovanov_potts::fixtures;
use khovanov_potts::potts::{partition_spin_sum, potts_via_khovanov, Branch, PottsParameters};

fn main() -> khovanov_potts::Result<()> {
    let g = fixtures::graph("triangle")?;
    for states in [2, 3, 4] {
        for branch in Branch::ALL {
            let k = potts_via_khovanov(&g, states, branch)?;
            let spins = partition_spin_sum(&g, PottsParameters::from_boltzmann(states, k.point.boltzmann)?)?;
            println!("Q={states} {branch}: khovanov {:.6}  spins {spins:.6}", k.value);
        }
    }
    Ok(())
}
