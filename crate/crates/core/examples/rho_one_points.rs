//! Boltzmann factors where the Potts bracket reduces to the Khovanov
//! bracket, and the criticality check at each of them.

use khovanov_potts::potts::{criticality_check, rho_one_branches, PottsParameters};

fn main() -> khovanov_potts::Result<()> {
    for states in 2..=6 {
        println!("Q = {states}");
        for pt in rho_one_branches(states)? {
            let report = criticality_check(PottsParameters::from_boltzmann(states, pt.boltzmann)?, 1e-9);
            println!(
                "  {}  q = {:.4}  e^K = {:.4}  critical: {:?}",
                pt.branch, pt.q, pt.boltzmann, report.critical_sqrt_signs
            );
        }
    }
    Ok(())
}
