//! Amplitudes `⟨ψ|U|ψ⟩` for diagonal unitaries on Potts spin states and on
//! enhanced states, and a distribution-level Hadamard-test simulation.
//!
//! Units: `ħ = k = 1`, so the Wick substitution reads `t = −iK`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::Ring;
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::graphs::{medial_link, PlanarMultigraph};
use crate::khovanov::khovanov_homology;
use crate::potts::{energy_histogram, rho_one_points};

/// Largest enhanced-state count `D` summed explicitly.
pub const AMPLITUDE_STATE_CAP: u128 = 10_000_000;

/// `t = −iK`.
pub fn wick_map(k: Complex64) -> Complex64 {
    -Complex64::i() * k
}

/// `K = i t`.
pub fn wick_inverse(t: Complex64) -> Complex64 {
    Complex64::i() * t
}

/// `A_G(Q, t) = Σ_σ e^{i t E(σ)}`.
pub fn potts_amplitude(g: &PlanarMultigraph, states: u32, t: f64) -> Result<Complex64> {
    let hist = energy_histogram(g, states)?;
    Ok(neumaier(
        hist.iter()
            .enumerate()
            .map(|(e, &c)| c as f64 * Complex64::from_polar(1.0, t * e as f64)),
    ))
}

/// Compensated complex summation.
fn neumaier(xs: impl Iterator<Item = Complex64>) -> Complex64 {
    let mut re = (0.0f64, 0.0f64);
    let mut im = (0.0f64, 0.0f64);
    let step = |(s, c): (f64, f64), x: f64| {
        let t = s + x;
        let c = if s.abs() >= x.abs() { c + (s - t) + x } else { c + (x - t) + s };
        (t, c)
    };
    for x in xs {
        re = step(re, x.re);
        im = step(im, x.im);
    }
    Complex64::new(re.0 + re.1, im.0 + im.1)
}

/// Unnormalized amplitude with `ψ = Σ_s |s⟩` and its basis size `D`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AmplitudeSetup {
    pub basis_size: u64,
    pub amplitude: Complex64,
}

impl AmplitudeSetup {
    /// `⟨ψ|U|ψ⟩ / D` for the normalized `ψ`.
    pub fn normalized(&self) -> Complex64 {
        self.amplitude / self.basis_size as f64
    }
}

fn check_states(d: &LinkDiagram) -> Result<u64> {
    let size = d.enhanced_state_count()?;
    if size > AMPLITUDE_STATE_CAP {
        return Err(Error::TooLarge {
            what: "enhanced states",
            required: size,
            cap: AMPLITUDE_STATE_CAP,
        });
    }
    Ok(size as u64)
}

/// Diagonal of `U|s⟩ = (−1)^{n_B(s)} e^{iθ j(s)} |s⟩`, enhanced states in
/// the order of [`LinkDiagram::enhanced_states`].
pub fn bracket_phases(d: &LinkDiagram, theta: f64) -> Result<Vec<Complex64>> {
    check_states(d)?;
    Ok(d.enhanced_states(crate::diagram::MAX_STATE_CROSSINGS)?
        .map(|s| {
            let sign = if s.n_b() % 2 == 0 { 1.0 } else { -1.0 };
            sign * Complex64::from_polar(1.0, theta * s.j() as f64)
        })
        .collect())
}

/// `Σ_s (−1)^{n_B(s)} e^{iθ j(s)}`, summed over every enhanced state.
pub fn bracket_amplitude(d: &LinkDiagram, theta: f64) -> Result<AmplitudeSetup> {
    let basis_size = check_states(d)?;
    let c = d.crossing_count();
    let parts: Vec<Complex64> = (0..1u64 << c)
        .into_par_iter()
        .map(|bits| {
            let st = d.resolve_bits(bits);
            let nb = st.n_b() as i64;
            let k = st.loop_count() as u32;
            let sign = if nb % 2 == 0 { 1.0 } else { -1.0 };
            neumaier((0..1u64 << k).map(|labels| {
                let lambda = k as i64 - 2 * labels.count_ones() as i64;
                sign * Complex64::from_polar(1.0, theta * (nb + lambda) as f64)
            }))
        })
        .collect();
    Ok(AmplitudeSetup {
        basis_size,
        amplitude: neumaier(parts.into_iter()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HadamardEstimate {
    pub shots: u64,
    pub seed: u64,
    /// Estimates of `Re` and `Im` of `⟨ψ|U|ψ⟩ / D`.
    pub re: f64,
    pub im: f64,
    pub re_stderr: f64,
    pub im_stderr: f64,
    pub basis_size: u64,
}

impl HadamardEstimate {
    /// Estimate of the unnormalized amplitude.
    pub fn scaled(&self) -> Complex64 {
        Complex64::new(self.re, self.im) * self.basis_size as f64
    }
}

/// Samples the ancilla outcomes of the Hadamard test from their exact
/// distribution: `P(0) = (1 + Re a)/2` for the real part and
/// `P(0) = (1 + Im a)/2` with the phase-shifted ancilla, `a` the normalized
/// amplitude.
pub fn hadamard_test_sim(setup: &AmplitudeSetup, shots: u64, seed: u64) -> Result<HadamardEstimate> {
    if shots == 0 {
        return Err(Error::Domain("need at least one shot".into()));
    }
    let a = setup.normalized();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut run = |p0: f64| {
        let p0 = p0.clamp(0.0, 1.0);
        let zeros = (0..shots).filter(|_| rng.gen_bool(p0)).count() as f64;
        let p = zeros / shots as f64;
        (2.0 * p - 1.0, 2.0 * (p * (1.0 - p) / shots as f64).sqrt())
    };
    let (re, re_stderr) = run((1.0 + a.re) / 2.0);
    let (im, im_stderr) = run((1.0 + a.im) / 2.0);
    Ok(HadamardEstimate {
        shots,
        seed,
        re,
        im,
        re_stderr,
        im_stderr,
        basis_size: setup.basis_size,
    })
}

/// Where a time value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TimeSource {
    /// `t = arg e^K` at a `ρ = 1` point.
    RhoOne,
    /// The value `π/2`, `π/6`, `π` listed for `Q = 2, 3, 4`.
    Listed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuantumCheckRow {
    pub source: TimeSource,
    pub t: f64,
    /// `(1 − e^{it}) / √Q`.
    pub q: Complex64,
    pub amplitude: Complex64,
    /// `Q^{N/2} Σ_j q^j χ(H^{•,j}(K(G)))`.
    pub khovanov: Complex64,
    pub agrees: bool,
}

/// The time listed alongside `Q = 2, 3, 4`.
pub fn listed_time(states: u32) -> Option<f64> {
    match states {
        2 => Some(PI / 2.0),
        3 => Some(PI / 6.0),
        4 => Some(PI),
        _ => None,
    }
}

/// Compares `A_G(Q, t)` with the Khovanov expression at every real time
/// coming from a unit-modulus `ρ = 1` point and at the listed time.
pub fn potts_quantum_check(g: &PlanarMultigraph, states: u32, tol: f64) -> Result<Vec<QuantumCheckRow>> {
    let chi = khovanov_homology(&medial_link(g)?, Ring::Z)?.euler_characteristic("q");
    let s = (states as f64).sqrt();
    let mut times: Vec<(TimeSource, f64)> = rho_one_points(states)?
        .into_iter()
        .filter(|e| (e.norm() - 1.0).abs() < 1e-12)
        .map(|e| (TimeSource::RhoOne, e.arg()))
        .collect();
    if let Some(t) = listed_time(states) {
        times.push((TimeSource::Listed, t));
    }
    times
        .into_iter()
        .map(|(source, t)| {
            let q = (1.0 - Complex64::from_polar(1.0, t)) / s;
            let amplitude = potts_amplitude(g, states, t)?;
            let khovanov = s.powi(g.node_count() as i32) * chi.evaluate(&[("q", q)])?;
            let agrees = (amplitude - khovanov).norm() <= tol * amplitude.norm().max(1.0);
            Ok(QuantumCheckRow {
                source,
                t,
                q,
                amplitude,
                khovanov,
                agrees,
            })
        })
        .collect()
}
