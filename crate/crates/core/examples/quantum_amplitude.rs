//! The q-bracket as a diagonal-unitary amplitude, estimated with a
//! simulated Hadamard test.

use khovanov_potts::bracket::khovanov_bracket;
use khovanov_potts::fixtures;
use khovanov_potts::quantum::{bracket_amplitude, hadamard_test_sim};
use num_complex::Complex64;

fn main() -> khovanov_potts::Result<()> {
    let d = fixtures::knot("trefoil")?;
    let theta = std::f64::consts::PI / 5.0;
    let setup = bracket_amplitude(&d, theta)?;
    let exact = khovanov_bracket(&d)?.evaluate(&[("q", Complex64::from_polar(1.0, theta))])?;
    println!("D = {}, amplitude {:.6}, bracket {exact:.6}", setup.basis_size, setup.amplitude);
    for shots in [100, 10_000, 1_000_000] {
        let e = hadamard_test_sim(&setup, shots, 7)?;
        println!(
            "{shots:>8} shots: {:.6} (stderr re {:.1e}, im {:.1e}), normalized exact {:.6}",
            Complex64::new(e.re, e.im),
            e.re_stderr,
            e.im_stderr,
            setup.normalized()
        );
    }
    Ok(())
}
