//! Dichromatic polynomial three ways: deletion-contraction, the spanning
//! subgraph sum and the Potts bracket of the medial link.

use khovanov_potts::fixtures;
use khovanov_potts::graphs::{dichromatic_dc, dichromatic_subgraph_sum, dichromatic_via_bracket, medial_link};

fn main() -> khovanov_potts::Result<()> {
    for (name, g) in fixtures::graphs() {
        let dc = dichromatic_dc(&g)?;
        let agree = dc == dichromatic_subgraph_sum(&g)? && dc == dichromatic_via_bracket(&g)?;
        let medial = medial_link(&g)?;
        println!("{name:<12} Z = {dc}  (medial: {} crossings, methods agree: {agree})", medial.crossing_count());
    }
    Ok(())
}
