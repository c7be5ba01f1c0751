//! The Khovanov complex of a diagram and the experimental DR complex.
//!
//! Generators are enhanced states in compact form: the smoothing bit-vector
//! plus one bit per loop (set = `X`). The partial differential at an A-site
//! switches it to B and applies `m` on a merge or `Δ` on a split:
//!
//! ```text
//! m(1,1) = 1   m(1,X) = m(X,1) = X   m(X,X) = 0
//! Δ(1) = 1⊗X + X⊗1                   Δ(X) = X⊗X
//! ```
//!
//! Over Z a partial at site `τ` carries the sign `(−1)^{#B-sites below τ}`,
//! which is what writing the state as `s dx_{i1}∧…∧dx_{ik}` and prepending
//! `dx_τ` produces.

use std::sync::Arc;

use crate::complex::{BigradedComplex, Grade, HomologySummary, Ring};
use crate::diagram::{EnhancedState, Label, LinkDiagram, LoopChange, Resmoothing, SmoothingState};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Largest crossing count accepted by [`build_complex`].
pub const HOMOLOGY_CAP: usize = 12;
/// Largest crossing count accepted by [`build_de_rham_complex`].
pub const DE_RHAM_CAP: usize = 8;

/// Compact enhanced state: bit `i` of `choices` is a B-smoothing at crossing
/// `i`, bit `k` of `labels` puts `X` on loop `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KhGen {
    pub choices: u64,
    pub labels: u64,
}

impl KhGen {
    pub fn to_enhanced(self, d: &LinkDiagram) -> EnhancedState {
        let state = d.resolve_bits(self.choices);
        let labels = (0..state.loop_count())
            .map(|k| if self.labels >> k & 1 == 1 { Label::X } else { Label::One })
            .collect();
        EnhancedState {
            state: Arc::new(state),
            labels,
        }
    }
}

/// DR generator `s dx_I` with `I` the bit-set `wedge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DrGen {
    pub state: KhGen,
    pub wedge: u64,
}

/// Every smoothing state and every resmoothing out of it, computed once.
struct Cube {
    states: Vec<SmoothingState>,
    /// `moves[choices][site]` for A-sites.
    moves: Vec<Vec<Option<Resmoothing>>>,
}

impl Cube {
    fn new(d: &LinkDiagram) -> Result<Self> {
        use rayon::prelude::*;
        let c = d.crossing_count();
        let states: Vec<SmoothingState> =
            (0..1u64 << c).into_par_iter().map(|b| d.resolve_bits(b)).collect();
        let moves = states
            .par_iter()
            .map(|s| {
                (0..c)
                    .map(|t| {
                        if s.bits() >> t & 1 == 1 {
                            Ok(None)
                        } else {
                            d.resmooth(s, t).map(Some)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { states, moves })
    }

    fn grade(&self, g: KhGen) -> Grade {
        let i = g.choices.count_ones() as i64;
        let k = self.states[g.choices as usize].loop_count() as i64;
        (i, i + k - 2 * g.labels.count_ones() as i64)
    }

    fn generators(&self) -> impl Iterator<Item = KhGen> + '_ {
        self.states.iter().flat_map(|s| {
            let choices = s.bits();
            (0..1u64 << s.loop_count()).map(move |labels| KhGen { choices, labels })
        })
    }

    /// Unsigned partial differential at `site`; empty at B-sites.
    fn partial(&self, g: KhGen, site: usize) -> Vec<KhGen> {
        let Some(mv) = &self.moves[g.choices as usize][site] else {
            return Vec::new();
        };
        let choices = g.choices | 1 << site;
        let x = |l: usize| g.labels >> l & 1;
        let (skip_a, skip_b) = match mv.change {
            LoopChange::Merge { a, b, .. } => (a, b),
            LoopChange::Split { from, .. } => (from, from),
        };
        let mut base = 0u64;
        for (l, &to) in mv.loop_map.iter().enumerate() {
            if l != skip_a && l != skip_b && x(l) == 1 {
                base |= 1 << to;
            }
        }
        let labels: Vec<u64> = match mv.change {
            LoopChange::Merge { a, b, into } => match (x(a), x(b)) {
                (1, 1) => vec![],
                (0, 0) => vec![base],
                _ => vec![base | 1 << into],
            },
            LoopChange::Split { from, a, b } => {
                if x(from) == 1 {
                    vec![base | 1 << a | 1 << b]
                } else {
                    vec![base | 1 << a, base | 1 << b]
                }
            }
        };
        labels
            .into_iter()
            .map(|labels| KhGen { choices, labels })
            .collect()
    }
}

fn check_cap(d: &LinkDiagram, cap: usize) -> Result<()> {
    let c = d.crossing_count();
    if c > cap {
        return Err(Error::TooLarge {
            what: "crossings",
            required: c as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

fn below(bits: u64, site: usize) -> u32 {
    (bits & ((1u64 << site) - 1)).count_ones()
}

/// The Khovanov complex with the default crossing cap.
pub fn build_complex(d: &LinkDiagram, ring: Ring) -> Result<BigradedComplex<KhGen>> {
    build_complex_with_cap(d, ring, HOMOLOGY_CAP)
}

pub fn build_complex_with_cap(
    d: &LinkDiagram,
    ring: Ring,
    cap: usize,
) -> Result<BigradedComplex<KhGen>> {
    check_cap(d, cap)?;
    let cube = Cube::new(d)?;
    let c = d.crossing_count();
    let gens = cube.generators().map(|g| (g, cube.grade(g))).collect();
    BigradedComplex::from_generators(ring, gens, |&g| {
        (0..c)
            .flat_map(|t| {
                let sign = if below(g.choices, t) % 2 == 0 { 1 } else { -1 };
                cube.partial(g, t).into_iter().map(move |h| (h, sign))
            })
            .collect()
    })
}

/// `(i, j)` of a compact enhanced state, recomputed from the diagram.
pub fn grade_of(d: &LinkDiagram, g: &KhGen) -> Grade {
    let e = g.to_enhanced(d);
    (e.n_b() as i64, e.j())
}

/// Unnormalized homology of the Khovanov complex.
pub fn khovanov_homology(d: &LinkDiagram, ring: Ring) -> Result<HomologySummary> {
    Ok(build_complex(d, ring)?.homology())
}

/// `(−n₋, n₊ − 2n₋)`, the shift that makes homology a link invariant.
pub fn normalization_shift(d: &LinkDiagram) -> Grade {
    let (pos, neg) = d.signed_counts();
    let (pos, neg) = (pos as i64, neg as i64);
    (-neg, pos - 2 * neg)
}

/// Homology moved by [`normalization_shift`].
pub fn normalized_homology(d: &LinkDiagram, ring: Ring) -> Result<HomologySummary> {
    let (di, dj) = normalization_shift(d);
    Ok(khovanov_homology(d, ring)?.shifted(di, dj))
}

/// `Σ_j q^j Σ_i (−ρ)^i dim C^{i,j}` of the Khovanov complex.
pub fn rho_euler_characteristic(cx: &BigradedComplex<KhGen>) -> LaurentPoly {
    cx.rho_euler_characteristic()
}

/// The DR complex: basis `s dx_I` for every enhanced state `s` and crossing
/// subset `I`, graded by `(|I|, j(s))`, with
/// `∂(s dx_I) = Σ_{τ∉I} ∂_τ(s) dx_τ∧dx_I`.
pub fn build_de_rham_complex(d: &LinkDiagram, ring: Ring) -> Result<BigradedComplex<DrGen>> {
    check_cap(d, DE_RHAM_CAP)?;
    let cube = Cube::new(d)?;
    let c = d.crossing_count();
    let gens = cube
        .generators()
        .flat_map(|s| {
            let j = cube.grade(s).1;
            (0..1u64 << c).map(move |wedge| {
                (DrGen { state: s, wedge }, (wedge.count_ones() as i64, j))
            })
        })
        .collect();
    BigradedComplex::from_generators(ring, gens, |&g| {
        (0..c)
            .filter(|&t| g.wedge >> t & 1 == 0)
            .flat_map(|t| {
                let sign = if below(g.wedge, t) % 2 == 0 { 1 } else { -1 };
                let wedge = g.wedge | 1 << t;
                cube.partial(g.state, t)
                    .into_iter()
                    .map(move |state| (DrGen { state, wedge }, sign))
            })
            .collect()
    })
}
