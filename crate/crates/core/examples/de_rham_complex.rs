//! The exterior-algebra complex on enhanced states of a one-crossing kink.

use khovanov_potts::complex::Ring;
use khovanov_potts::fixtures;
use khovanov_potts::khovanov::build_de_rham_complex;

fn main() -> khovanov_potts::Result<()> {
    let d = fixtures::knot("kink")?;
    let cx = build_de_rham_complex(&d, Ring::Z)?;
    println!("generators: {}, d^2 = 0: {}", cx.total_dim(), cx.d_squared_zero());
    print!("{}", cx.homology());
    Ok(())
}
