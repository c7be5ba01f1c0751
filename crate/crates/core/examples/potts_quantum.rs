//! Potts amplitude at imaginary coupling against the Khovanov evaluation,
//! at the times derived from the rho = 1 points and at the listed ones.

use khovanov_potts::fixtures;
use khovanov_potts::quantum::potts_quantum_check;

fn main() -> khovanov_potts::Result<()> {
    let g = fixtures::graph("square")?;
    for states in [2, 3, 4] {
        for r in potts_quantum_check(&g, states, 1e-9)? {
            println!(
                "Q={states} {:?} t={:.4}: amplitude {:.4}  khovanov {:.4}  agrees: {}",
                r.source, r.t, r.amplitude, r.khovanov, r.agrees
            );
        }
    }
    Ok(())
}
