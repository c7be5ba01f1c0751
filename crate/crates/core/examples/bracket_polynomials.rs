//! The four state-sum brackets of a few built-in diagrams.

use khovanov_potts::bracket::BracketFlavor;
use khovanov_potts::fixtures;

fn main() -> khovanov_potts::Result<()> {
    for name in ["unknot", "hopf", "trefoil", "figure_eight"] {
        let d = fixtures::knot(name)?;
        println!("{name} ({} crossings, writhe {})", d.crossing_count(), d.writhe());
        for flavor in BracketFlavor::ALL {
            println!("  {:<10} {}", flavor.name(), flavor.evaluate(&d)?);
        }
    }
    Ok(())
}
