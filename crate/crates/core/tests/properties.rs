use khovanov_potts::bracket::{a_bracket, khovanov_bracket, potts_bracket};
use khovanov_potts::complex::Ring;
use khovanov_potts::diagram::LoopChange;
use khovanov_potts::fixtures::{random_diagram, random_multigraph};
use khovanov_potts::graphs::{dichromatic_dc, dichromatic_subgraph_sum, dichromatic_via_bracket, random_planar_graph};
use khovanov_potts::khovanov::build_complex;
use khovanov_potts::linalg::{rank_gf2, smith_normal_form, SparseMatrix};
use khovanov_potts::potts::{partition_spin_sum, partition_via_dichromatic, PottsParameters};
use khovanov_potts::stosic::stosic_euler_identity;
use khovanov_potts::LaurentPoly;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4, -2i64..=2), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, e, f)| LaurentPoly::monomial(c, &[("q", e), ("v", f)]))
            .sum()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_round_trips(a in poly()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn powers_add(a in poly(), m in 0i64..4, n in 0i64..4) {
        prop_assert_eq!(a.pow(m).unwrap() * a.pow(n).unwrap(), a.pow(m + n).unwrap());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), r in poly()) {
        let s = |p: &LaurentPoly| p.substitute("v", &r);
        // negative powers of a non-unit replacement are rejected
        if let (Ok(x), Ok(y), Ok(z)) = (s(&a), s(&b), s(&(&a * &b))) {
            prop_assert_eq!(x * y, z);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), re in 0.5f64..2.0, im in -1.0f64..1.0) {
        let at = [("q", Complex64::new(re, im)), ("v", Complex64::new(im, re))];
        let lhs = (&a * &b).evaluate(&at).unwrap();
        let rhs = a.evaluate(&at).unwrap() * b.evaluate(&at).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * lhs.norm().max(1.0));
    }

    #[test]
    fn resmoothing_changes_one_loop(seed in any::<u64>(), bits in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 6);
        let c = d.crossing_count();
        let bits = bits & ((1u64 << c) - 1);
        let s = d.resolve_bits(bits);
        for site in (0..c).filter(|i| bits >> i & 1 == 0) {
            let r = d.resmooth(&s, site).unwrap();
            prop_assert_eq!(r.target.bits(), bits | 1 << site);
            let (before, after) = (s.loop_count() as i64, r.target.loop_count() as i64);
            match r.change {
                LoopChange::Merge { .. } => prop_assert_eq!(after, before - 1),
                LoopChange::Split { .. } => prop_assert_eq!(after, before + 1),
            }
            prop_assert_eq!(after as usize, d.loop_count(bits | 1 << site));
        }
    }

    #[test]
    fn mirror_inverts_a(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 6);
        let m = d.mirror();
        prop_assert_eq!(m.writhe(), -d.writhe());
        let inv = LaurentPoly::monomial(1, &[("A", -1)]);
        prop_assert_eq!(a_bracket(&m).unwrap(), a_bracket(&d).unwrap().substitute("A", &inv).unwrap());
    }

    #[test]
    fn euler_characteristic_is_bracket(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 5);
        let chi = build_complex(&d, Ring::Z).unwrap().homology().euler_characteristic("q");
        prop_assert_eq!(chi, khovanov_bracket(&d).unwrap());
    }

    #[test]
    fn dichromatic_methods_agree(seed in any::<u64>(), edges in 1usize..=9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_planar_graph(&mut rng, edges);
        let dc = dichromatic_dc(&g).unwrap();
        prop_assert_eq!(&dc, &dichromatic_subgraph_sum(&g).unwrap());
        prop_assert_eq!(&dc, &dichromatic_via_bracket(&g).unwrap());
        prop_assert!(!potts_bracket(&khovanov_potts::graphs::medial_link(&g).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn spins_match_polynomial(seed in any::<u64>(), states in 2u32..=4, re in -2.0f64..2.0, im in -3.0f64..3.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_planar_graph(&mut rng, 6);
        let p = PottsParameters::new(states, Complex64::new(re, im));
        let a = partition_spin_sum(&g, p).unwrap();
        let b = partition_via_dichromatic(&g, p).unwrap();
        prop_assert!((a - b).norm() <= 1e-9 * a.norm().max(b.norm()).max(1.0));
    }

    #[test]
    fn stosic_identity(seed in any::<u64>(), nodes in 1usize..=4, edges in 0usize..=5, n in 1u8..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_multigraph(&mut rng, nodes, edges);
        prop_assert!(stosic_euler_identity(&g, n).unwrap().equal);
    }

    #[test]
    fn smith_chain_divides(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 1..5)) {
        let m = SparseMatrix::from_dense(&rows);
        let snf = smith_normal_form(&m);
        for w in snf.invariants.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(snf.invariants.iter().all(|x| x.is_positive()));
        prop_assert!(rank_gf2(&m.mod2()) <= snf.rank());
        let odd = snf.invariants.iter().filter(|x| (*x % 2u32) != Zero::zero()).count();
        prop_assert_eq!(rank_gf2(&m.mod2()), odd);
    }
}
