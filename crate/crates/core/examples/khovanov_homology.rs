//! Integral and mod-2 Khovanov homology of the right-handed trefoil.
//! The integral table has a Z/2 in degree (3, 7), which is why the mod-2
//! ranks are larger.

use khovanov_potts::complex::Ring;
use khovanov_potts::fixtures;
use khovanov_potts::khovanov::normalized_homology;

fn main() -> khovanov_potts::Result<()> {
    let d = fixtures::knot("trefoil_right")?;
    for ring in [Ring::Z, Ring::Gf2] {
        let h = normalized_homology(&d, ring)?;
        println!("over {ring:?} (total rank {}):\n{h}", h.total_rank());
    }
    let h = normalized_homology(&d, Ring::Z)?;
    println!("graded Euler characteristic: {}", h.euler_characteristic("q"));
    Ok(())
}
