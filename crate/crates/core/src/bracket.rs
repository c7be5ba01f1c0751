//! Bracket state sums in four flavors and the Jones normalization.
//!
//! Every flavor is `Σ_states w_A^{n_A} w_B^{n_B} δ^{|loops|}` with the
//! unreduced convention (a crossingless diagram of `k` loops is `δ^k`):
//!
//! | flavor      | `w_A` | `w_B`      | `δ`          |
//! |-------------|-------|------------|--------------|
//! | `A`         | `A`   | `A^-1`     | `-A^2-A^-2`  |
//! | `KhovanovQ` | `1`   | `-q`       | `q+q^-1`     |
//! | `Rho`       | `1`   | `-q*rho`   | `q+q^-1`     |
//! | `PottsQ`    | `1`   | `S^-1*v`   | `S`          |
//!
//! with `S^2 = Q` for the Potts flavor. The sums are computed from a
//! histogram of `(n_B, |loops|)` over the `2^c` smoothings; the enhanced-state
//! sums are kept as an independent cross-check.

use std::str::FromStr;

use rayon::prelude::*;

use crate::diagram::{LinkDiagram, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BracketFlavor {
    A,
    KhovanovQ,
    Rho,
    PottsQ,
}

impl BracketFlavor {
    pub const ALL: [BracketFlavor; 4] = [Self::A, Self::KhovanovQ, Self::Rho, Self::PottsQ];

    /// Formal variables of the flavor's result.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Self::A => &["A"],
            Self::KhovanovQ => &["q"],
            Self::Rho => &["q", "rho"],
            Self::PottsQ => &["S", "v"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::A => "a",
            Self::KhovanovQ => "q",
            Self::Rho => "rho",
            Self::PottsQ => "potts",
        }
    }

    /// `(w_A, w_B, δ)`.
    fn weights(self) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
        let m = LaurentPoly::monomial;
        match self {
            Self::A => (m(1, &[("A", 1)]), m(1, &[("A", -1)]), m(-1, &[("A", 2)]) + m(-1, &[("A", -2)])),
            Self::KhovanovQ => (LaurentPoly::one(), m(-1, &[("q", 1)]), m(1, &[("q", 1)]) + m(1, &[("q", -1)])),
            Self::Rho => (
                LaurentPoly::one(),
                m(-1, &[("q", 1), ("rho", 1)]),
                m(1, &[("q", 1)]) + m(1, &[("q", -1)]),
            ),
            Self::PottsQ => (LaurentPoly::one(), m(1, &[("S", -1), ("v", 1)]), m(1, &[("S", 1)])),
        }
    }

    pub fn evaluate(self, d: &LinkDiagram) -> Result<LaurentPoly> {
        self.evaluate_with_cap(d, DEFAULT_STATE_CAP)
    }

    pub fn evaluate_with_cap(self, d: &LinkDiagram, cap: usize) -> Result<LaurentPoly> {
        let hist = state_histogram(d, cap)?;
        let (wa, wb, delta) = self.weights();
        Ok(sum_histogram(&hist, d.crossing_count(), &wa, &wb, &delta))
    }
}

impl FromStr for BracketFlavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Self::A),
            "q" | "khovanov" => Ok(Self::KhovanovQ),
            "rho" => Ok(Self::Rho),
            "potts" => Ok(Self::PottsQ),
            _ => Err(Error::Domain(format!("unknown bracket flavor `{s}`"))),
        }
    }
}

/// `hist[n_B][k]` = number of smoothings with `n_B` B-sites and `k` loops.
pub fn state_histogram(d: &LinkDiagram, cap: usize) -> Result<Vec<Vec<u64>>> {
    let c = d.crossing_count();
    let cap = cap.min(crate::diagram::MAX_STATE_CROSSINGS);
    if c > cap {
        return Err(Error::TooLarge {
            what: "crossings",
            required: c as u128,
            cap: cap as u128,
        });
    }
    let width = d.arc_count() + d.free_loops() + 1;
    let empty = || vec![vec![0u64; width]; c + 1];
    let hist = (0..1u64 << c)
        .into_par_iter()
        .fold(empty, |mut h, bits| {
            h[bits.count_ones() as usize][d.loop_count(bits)] += 1;
            h
        })
        .reduce(empty, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        });
    Ok(hist)
}

fn powers(p: &LaurentPoly, n: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(LaurentPoly::one());
    for i in 0..n {
        out.push(&out[i] * p);
    }
    out
}

fn sum_histogram(
    hist: &[Vec<u64>],
    c: usize,
    wa: &LaurentPoly,
    wb: &LaurentPoly,
    delta: &LaurentPoly,
) -> LaurentPoly {
    let max_loops = hist
        .iter()
        .flat_map(|r| r.iter().enumerate().filter(|(_, &n)| n > 0).map(|(k, _)| k))
        .max()
        .unwrap_or(0);
    let pa = powers(wa, c);
    let pb = powers(wb, c);
    let pd = powers(delta, max_loops);
    let mut acc = LaurentPoly::zero();
    for (nb, row) in hist.iter().enumerate() {
        let mut inner = LaurentPoly::zero();
        for (k, &n) in row.iter().enumerate() {
            if n > 0 {
                inner += &pd[k] * &LaurentPoly::constant(n);
            }
        }
        if !inner.is_zero() {
            acc += &(&pa[c - nb] * &pb[nb]) * &inner;
        }
    }
    acc
}

/// `⟨K⟩ = Σ_s (-1)^{n_B(s)} q^{j(s)}`.
pub fn khovanov_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    BracketFlavor::KhovanovQ.evaluate(d)
}

/// Kauffman bracket in `A`, unreduced: the unknot is `-A^2 - A^-2`.
pub fn a_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    BracketFlavor::A.evaluate(d)
}

/// `[K] = Σ_s (-ρ)^{n_B(s)} q^{j(s)}`.
pub fn rho_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    BracketFlavor::Rho.evaluate(d)
}

/// `{K} = Σ_states (S^-1 v)^{n_B} S^{|loops|}` with `S^2 = Q`.
pub fn potts_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    BracketFlavor::PottsQ.evaluate(d)
}

/// `(-A^3)^{-w} ⟨K⟩_A`.
pub fn jones(d: &LinkDiagram) -> Result<LaurentPoly> {
    let w = d.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(LaurentPoly::monomial(sign, &[("A", -3 * w)]) * a_bracket(d)?)
}

/// `A^{-c}⟨K⟩_A` with `A^2 → -q^{-1}`.
pub fn a_to_q(d: &LinkDiagram, a_bracket: &LaurentPoly) -> Result<LaurentPoly> {
    let shifted = LaurentPoly::monomial(1, &[("A", -(d.crossing_count() as i64))]) * a_bracket;
    shifted.substitute_square("A", &LaurentPoly::monomial(-1, &[("q", -1)]))
}

/// Checks that rescaling and substituting the A-bracket gives the q-bracket.
pub fn cross_check_brackets(d: &LinkDiagram) -> Result<bool> {
    Ok(a_to_q(d, &a_bracket(d)?)? == khovanov_bracket(d)?)
}

/// Enhanced-state sum `Σ_s (-ρ)^{n_B} q^{j(s)}`. Without `rho` the weight is
/// `(-1)^{n_B}` and the result is the q-bracket.
pub fn enhanced_state_sum(d: &LinkDiagram, with_rho: bool, cap: usize) -> Result<LaurentPoly> {
    use std::collections::BTreeMap;
    let mut coeffs: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for s in d.enhanced_states(cap)? {
        let nb = s.n_b() as i64;
        let sign = if nb % 2 == 0 { 1 } else { -1 };
        *coeffs.entry((s.j(), nb)).or_insert(0) += sign;
    }
    Ok(coeffs
        .into_iter()
        .map(|((j, nb), c)| {
            if with_rho {
                LaurentPoly::monomial(c, &[("q", j), ("rho", nb)])
            } else {
                LaurentPoly::monomial(c, &[("q", j)])
            }
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn q(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::univariate("q", terms)
    }

    fn a(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::univariate("A", terms)
    }

    fn hopf() -> LinkDiagram {
        parse_pd("X(1,3,2,4); X(3,1,4,2)").unwrap()
    }

    fn kink() -> LinkDiagram {
        parse_pd("X(1,1,2,2)").unwrap()
    }

    #[test]
    fn khovanov_bracket_examples() {
        let u = LinkDiagram::unknot();
        assert_eq!(khovanov_bracket(&u).unwrap(), q(&[(1, 1), (-1, 1)]));
        assert_eq!(
            khovanov_bracket(&hopf()).unwrap(),
            q(&[(-2, 1), (0, 1), (2, 1), (4, 1)])
        );
        let two = LinkDiagram::free(2);
        assert_eq!(
            khovanov_bracket(&two).unwrap(),
            q(&[(1, 1), (-1, 1)]).pow(2).unwrap()
        );
    }

    #[test]
    fn a_bracket_examples() {
        let delta = a(&[(2, -1), (-2, -1)]);
        assert_eq!(a_bracket(&LinkDiagram::unknot()).unwrap(), delta);
        // curl relation: positive kink contributes -A^3
        assert_eq!(a_bracket(&kink()).unwrap(), a(&[(3, -1)]) * &delta);
        assert_eq!(
            a_bracket(&parse_pd("X(1,2,2,1)").unwrap()).unwrap(),
            a(&[(-3, -1)]) * &delta
        );
        // four states of the Hopf diagram: loops 2,1,1,2
        let d2 = delta.pow(2).unwrap();
        let want = a(&[(2, 1)]) * &d2 + a(&[(0, 2)]) * &delta + a(&[(-2, 1)]) * &d2;
        assert_eq!(a_bracket(&hopf()).unwrap(), want);
    }

    #[test]
    fn a_to_q_agrees() {
        for d in [LinkDiagram::unknot(), hopf(), kink()] {
            assert!(cross_check_brackets(&d).unwrap());
        }
        let t = parse_pd("X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)").unwrap();
        assert!(cross_check_brackets(&t).unwrap());
    }

    #[test]
    fn rho_bracket_examples() {
        assert_eq!(
            rho_bracket(&LinkDiagram::unknot()).unwrap(),
            q(&[(1, 1), (-1, 1)])
        );
        // kink: (q+q^-1)^2 - q*rho*(q+q^-1)
        let delta = q(&[(1, 1), (-1, 1)]);
        let want = delta.pow(2).unwrap()
            - LaurentPoly::monomial(1, &[("q", 1), ("rho", 1)]) * &delta;
        let got = rho_bracket(&kink()).unwrap();
        assert_eq!(got, want);
        assert_eq!(got.degree_range("rho"), Some((0, 1)));
        let at_one = rho_bracket(&hopf())
            .unwrap()
            .substitute("rho", &LaurentPoly::one())
            .unwrap();
        assert_eq!(at_one, q(&[(-2, 1), (0, 1), (2, 1), (4, 1)]));
    }

    #[test]
    fn potts_bracket_examples() {
        let s = LaurentPoly::var("S");
        assert_eq!(potts_bracket(&LinkDiagram::unknot()).unwrap(), s);
        // loop counts (2,1): S^2 + S^-1 v S
        let want = LaurentPoly::monomial(1, &[("S", 2)]) + LaurentPoly::var("v");
        assert_eq!(potts_bracket(&kink()).unwrap(), want);
        let two = potts_bracket(&LinkDiagram::free(2)).unwrap();
        assert_eq!(
            two.reduce_square("S", "Q"),
            LaurentPoly::var("Q")
        );
    }

    #[test]
    fn jones_examples() {
        let delta = a(&[(2, -1), (-2, -1)]);
        assert_eq!(jones(&LinkDiagram::unknot()).unwrap(), delta);
        assert_eq!(jones(&kink()).unwrap(), delta);
        assert_eq!(jones(&parse_pd("X(1,2,2,1)").unwrap()).unwrap(), delta);
    }

    #[test]
    fn enhanced_sum_matches_histogram() {
        for d in [LinkDiagram::unknot(), hopf(), kink(), LinkDiagram::free(0)] {
            assert_eq!(enhanced_state_sum(&d, false, 20).unwrap(), khovanov_bracket(&d).unwrap());
            assert_eq!(enhanced_state_sum(&d, true, 20).unwrap(), rho_bracket(&d).unwrap());
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            BracketFlavor::A.evaluate_with_cap(&hopf(), 1),
            Err(Error::TooLarge { required: 2, .. })
        ));
    }

    #[test]
    fn flavor_names() {
        for f in BracketFlavor::ALL {
            assert_eq!(f.name().parse::<BracketFlavor>().unwrap(), f);
        }
        assert!("z".parse::<BracketFlavor>().is_err());
    }
}
