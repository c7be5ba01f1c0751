//! Hand-derived values, frozen.

use khovanov_potts::bracket::khovanov_bracket;
use khovanov_potts::complex::Ring;
use khovanov_potts::fixtures;
use khovanov_potts::khovanov::{build_de_rham_complex, normalized_homology};
use khovanov_potts::potts::rho_one_points;
use khovanov_potts::stosic::{stosic_potts_coupling, stosic_euler_identity};
use khovanov_potts::LaurentPoly;
use num_bigint::BigInt;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn loop_and_hopf_brackets() {
    assert_eq!(khovanov_bracket(&fixtures::knot("unknot").unwrap()).unwrap(), p("q + q^-1"));
    assert_eq!(khovanov_bracket(&fixtures::knot("two_unknots").unwrap()).unwrap(), p("q^2 + 2 + q^-2"));
    assert_eq!(khovanov_bracket(&fixtures::knot("hopf").unwrap()).unwrap(), p("q^4 + q^2 + 1 + q^-2"));
}

#[test]
fn right_trefoil_table() {
    let d = fixtures::knot("trefoil_right").unwrap();
    let h = normalized_homology(&d, Ring::Z).unwrap();
    let betti: Vec<_> = h.betti.iter().map(|(&g, &r)| (g, r)).collect();
    assert_eq!(betti, vec![((0, 1), 1), ((0, 3), 1), ((2, 5), 1), ((3, 9), 1)]);
    assert_eq!(h.torsion.get(&(3, 7)), Some(&vec![BigInt::from(2)]));
    assert_eq!(normalized_homology(&d, Ring::Gf2).unwrap().total_rank(), 6);
    // the left-handed one is the mirror image
    let left = normalized_homology(&fixtures::knot("trefoil").unwrap(), Ring::Z).unwrap();
    assert_eq!(left.betti((0, -1)), 1);
    assert_eq!(left.betti((-3, -9)), 1);
}

#[test]
fn kink_de_rham_table() {
    let h = build_de_rham_complex(&fixtures::knot("kink").unwrap(), Ring::Z).unwrap().homology();
    let betti: Vec<_> = h.betti.iter().map(|(&g, &r)| (g, r)).collect();
    assert_eq!(
        betti,
        vec![((0, -2), 1), ((0, 0), 2), ((0, 2), 1), ((1, -2), 1), ((1, 0), 2), ((1, 2), 1)]
    );
}

#[test]
fn rho_one_for_four_states() {
    let pts = rho_one_points(4).unwrap();
    assert_eq!(pts.len(), 1);
    assert!((pts[0] + 1.0).norm() < 1e-15);
}

#[test]
fn stosic_single_edge() {
    let g = fixtures::graph("single_edge").unwrap();
    let id = stosic_euler_identity(&g, 1).unwrap();
    assert_eq!(id.lhs, p("q + 1"));
    assert!(id.equal);
    // e^K = 1 - q^n; the K listed alongside the identity differs
    let k = stosic_potts_coupling(0.5, 1).unwrap();
    assert!((k.implemented.unwrap().exp().re - 0.5).abs() < 1e-15);
    assert!((k.listed.exp().re + 0.5).abs() < 1e-15);
}
