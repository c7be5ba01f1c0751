//! Jones polynomial and normalized Khovanov homology on both sides of
//! each built-in Reidemeister move.

use khovanov_potts::bracket::jones;
use khovanov_potts::complex::Ring;
use khovanov_potts::fixtures::reidemeister_pairs;
use khovanov_potts::khovanov::normalized_homology;

fn main() -> khovanov_potts::Result<()> {
    for p in reidemeister_pairs() {
        let (a, b) = (jones(&p.before)?, jones(&p.after)?);
        let same_kh = normalized_homology(&p.before, Ring::Z)? == normalized_homology(&p.after, Ring::Z)?;
        println!("{:<16} {:?}  jones {a}  equal: {}  homology equal: {same_kh}", p.name, p.kind, a == b);
    }
    Ok(())
}
