//! The Q-state Potts partition function and its complex special points.
//!
//! `P_G(Q, K) = Σ_σ e^{K E(σ)}` where `E(σ)` counts edges whose endpoints
//! carry the same spin. It equals the dichromatic polynomial at
//! `v = e^K − 1`. With `S` a square root of `Q` and `q² − S q + 1 = 0`, the
//! substitution `−qρ = v/S` turns the Potts bracket into the ρ-bracket; at
//! `ρ = 1` the partition function becomes `S^N ⟨K(G)⟩(q)`.

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::Ring;
use crate::error::{Error, Result};
use crate::graphs::{dichromatic_dc, medial_link, PlanarMultigraph};
use crate::khovanov::khovanov_homology;

/// Largest number of spin assignments `Q^N` enumerated.
pub const SPIN_STATE_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PottsParameters {
    /// Number of spin values `Q`.
    pub states: u32,
    /// Dimensionless complex coupling `K`.
    pub coupling: Complex64,
}

impl PottsParameters {
    pub fn new(states: u32, coupling: Complex64) -> Self {
        Self { states, coupling }
    }

    /// From a Boltzmann factor `e^K` (principal logarithm).
    pub fn from_boltzmann(states: u32, e_k: Complex64) -> Result<Self> {
        if e_k.norm() == 0.0 {
            return Err(Error::Domain("e^K = 0 has no logarithm".into()));
        }
        Ok(Self::new(states, e_k.ln()))
    }

    pub fn boltzmann(&self) -> Complex64 {
        self.coupling.exp()
    }

    /// `v = e^K − 1`.
    pub fn v(&self) -> Complex64 {
        self.boltzmann() - 1.0
    }
}

/// Number of edges whose endpoints carry equal spins (self-loops always count).
pub fn energy(g: &PlanarMultigraph, spins: &[u32]) -> usize {
    g.edges().iter().filter(|&&(a, b)| spins[a] == spins[b]).count()
}

/// `hist[E]` = number of spin assignments with energy `E`.
pub fn energy_histogram(g: &PlanarMultigraph, states: u32) -> Result<Vec<u64>> {
    let n = g.node_count() as u32;
    let total = (states as u64)
        .checked_pow(n)
        .filter(|&t| t <= SPIN_STATE_CAP)
        .ok_or(Error::TooLarge {
            what: "spin assignments",
            required: (states as u128).saturating_pow(n),
            cap: SPIN_STATE_CAP as u128,
        })?;
    let e = g.edge_count();
    // chunks of consecutive assignments, each walked with an odometer
    let chunk = 4096u64;
    let hist = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut h = vec![0u64; e + 1];
            let start = c * chunk;
            let end = (start + chunk).min(total);
            let mut spins: Vec<u32> = (0..n)
                .scan(start, |rest, _| {
                    let d = (*rest % states as u64) as u32;
                    *rest /= states as u64;
                    Some(d)
                })
                .collect();
            for _ in start..end {
                h[energy(g, &spins)] += 1;
                for s in spins.iter_mut() {
                    *s += 1;
                    if *s < states {
                        break;
                    }
                    *s = 0;
                }
            }
            h
        })
        .reduce(
            || vec![0u64; e + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(hist)
}

/// `Σ_σ e^{K E(σ)}` by enumerating all `Q^N` assignments. The energy
/// histogram is exact, so the only rounding is in the final `e + 1` terms.
pub fn partition_spin_sum(g: &PlanarMultigraph, p: PottsParameters) -> Result<Complex64> {
    let hist = energy_histogram(g, p.states)?;
    let b = p.boltzmann();
    Ok(hist
        .iter()
        .enumerate()
        .map(|(e, &c)| c as f64 * b.powu(e as u32))
        .sum())
}

/// The dichromatic polynomial evaluated at `v = e^K − 1`.
pub fn partition_via_dichromatic(g: &PlanarMultigraph, p: PottsParameters) -> Result<Complex64> {
    dichromatic_dc(g)?.evaluate(&[
        ("Q", Complex64::new(p.states as f64, 0.0)),
        ("v", p.v()),
    ])
}

/// A choice of square roots: `S = sqrt_sign·√Q` and
/// `q = (S + root_sign·√(Q−4)) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Branch {
    pub sqrt_sign: i8,
    pub root_sign: i8,
}

impl Branch {
    pub const ALL: [Branch; 4] = [
        Branch { sqrt_sign: 1, root_sign: 1 },
        Branch { sqrt_sign: 1, root_sign: -1 },
        Branch { sqrt_sign: -1, root_sign: 1 },
        Branch { sqrt_sign: -1, root_sign: -1 },
    ];

    /// `S` on this branch.
    pub fn sqrt_q(self, states: u32) -> Complex64 {
        Complex64::new(self.sqrt_sign as f64 * (states as f64).sqrt(), 0.0)
    }

    /// The root of `q² − S q + 1 = 0` on this branch.
    pub fn q(self, states: u32) -> Complex64 {
        let disc = Complex64::new(states as f64 - 4.0, 0.0).sqrt();
        (self.sqrt_q(states) + self.root_sign as f64 * disc) / 2.0
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i8| if x > 0 { '+' } else { '-' };
        write!(f, "S={}sqrtQ,q-root={}", s(self.sqrt_sign), s(self.root_sign))
    }
}

fn check_states(states: u32) -> Result<()> {
    if states < 2 {
        return Err(Error::Domain(format!("Q = {states}, need Q >= 2")));
    }
    Ok(())
}

/// A branch where `ρ = 1`, with its `q` and Boltzmann factor `e^K = 1 − qS`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RhoOnePoint {
    pub branch: Branch,
    pub sqrt_q: Complex64,
    pub q: Complex64,
    pub boltzmann: Complex64,
}

/// `ρ = 1` data on all four branches.
pub fn rho_one_branches(states: u32) -> Result<Vec<RhoOnePoint>> {
    check_states(states)?;
    Ok(Branch::ALL
        .iter()
        .map(|&branch| {
            let s = branch.sqrt_q(states);
            let q = branch.q(states);
            RhoOnePoint {
                branch,
                sqrt_q: s,
                q,
                boltzmann: 1.0 - q * s,
            }
        })
        .collect())
}

/// The distinct `e^K` values with `ρ = 1`: `(2 − Q ∓ √Q√(Q−4))/2`.
pub fn rho_one_points(states: u32) -> Result<Vec<Complex64>> {
    let mut out: Vec<Complex64> = Vec::new();
    for p in rho_one_branches(states)? {
        if !out.iter().any(|x| (x - p.boltzmann).norm() < 1e-12) {
            out.push(p.boltzmann);
        }
    }
    out.sort_by(|a, b| b.im.total_cmp(&a.im).then(b.re.total_cmp(&a.re)));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Parametrization {
    pub branch: Branch,
    pub q: Complex64,
    pub rho: Complex64,
}

/// `q` with `q + 1/q = S` and `ρ = −v/(S q)` on every branch.
pub fn potts_parametrization(states: u32, v: Complex64) -> Vec<Parametrization> {
    Branch::ALL
        .iter()
        .map(|&branch| {
            let s = branch.sqrt_q(states);
            let q = branch.q(states);
            Parametrization {
                branch,
                q,
                rho: -v / (s * q),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalityReport {
    /// `|Q^{−1/2} v − 1| ≤ tol` for `Q^{1/2} = +√Q`.
    pub critical: bool,
    /// Square-root signs for which `Q^{−1/2} v = 1`.
    pub critical_sqrt_signs: Vec<i8>,
    /// Branches with `|ρ − 1| ≤ tol`.
    pub rho_one_branches: Vec<Branch>,
    /// Some branch is critical and has `ρ = 1` at once.
    pub critical_and_rho_one: bool,
}

pub fn criticality_check(p: PottsParameters, tol: f64) -> CriticalityReport {
    let v = p.v();
    let crit = |sign: i8| (v / Branch { sqrt_sign: sign, root_sign: 1 }.sqrt_q(p.states) - 1.0).norm() <= tol;
    let critical_sqrt_signs: Vec<i8> = [1, -1].into_iter().filter(|&s| crit(s)).collect();
    let params = potts_parametrization(p.states, v);
    let rho_one: Vec<Branch> = params
        .iter()
        .filter(|x| (x.rho - 1.0).norm() <= tol)
        .map(|x| x.branch)
        .collect();
    CriticalityReport {
        critical: crit(1),
        critical_and_rho_one: rho_one.iter().any(|b| crit(b.sqrt_sign)),
        critical_sqrt_signs,
        rho_one_branches: rho_one,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KhovanovPotts {
    pub point: RhoOnePoint,
    pub value: Complex64,
}

/// `S^N Σ_j q^j χ(H^{•,j}(K(G)))` at the `ρ = 1` point of `branch`, which is
/// the partition function at `e^K = 1 − qS`.
pub fn potts_via_khovanov(g: &PlanarMultigraph, states: u32, branch: Branch) -> Result<KhovanovPotts> {
    let point = rho_one_branches(states)?
        .into_iter()
        .find(|p| p.branch == branch)
        .expect("every branch listed");
    let chi = khovanov_homology(&medial_link(g)?, Ring::Z)?.euler_characteristic("q");
    let value = point.sqrt_q.powu(g.node_count() as u32) * chi.evaluate(&[("q", point.q)])?;
    Ok(KhovanovPotts { point, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn edge() -> PlanarMultigraph {
        PlanarMultigraph::with_default_rotation(2, vec![(0, 1)]).unwrap()
    }

    fn triangle() -> PlanarMultigraph {
        PlanarMultigraph::with_default_rotation(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn spin_sums() {
        let z = partition_spin_sum(&edge(), PottsParameters::new(2, c(0.0, 0.0))).unwrap();
        assert_eq!(z, c(4.0, 0.0));
        for k in [c(1.0, 0.0), c(0.0, 1.0), c(-0.5, 2.0)] {
            let p = PottsParameters::new(2, k);
            let want = 2.0 * k.exp() + 2.0;
            assert!(close(partition_spin_sum(&edge(), p).unwrap(), want, 1e-12));
            assert!(close(partition_via_dichromatic(&edge(), p).unwrap(), want, 1e-12));
        }
        let t = partition_spin_sum(&triangle(), PottsParameters::new(3, c(0.0, 0.0))).unwrap();
        assert_eq!(t, c(27.0, 0.0));
        let p = PottsParameters::new(3, c(1.0, 0.0));
        assert!(close(
            partition_spin_sum(&triangle(), p).unwrap(),
            partition_via_dichromatic(&triangle(), p).unwrap(),
            1e-9
        ));
    }

    #[test]
    fn spin_cap() {
        let g = PlanarMultigraph::with_default_rotation(30, vec![]).unwrap();
        assert!(matches!(
            partition_spin_sum(&g, PottsParameters::new(2, c(0.0, 0.0))),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn special_points() {
        let r = rho_one_points(2).unwrap();
        assert_eq!(r.len(), 2);
        assert!(close(r[0], c(0.0, 1.0), 1e-12) && close(r[1], c(0.0, -1.0), 1e-12));
        let r = rho_one_points(3).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert!(close(r[0], c(-0.5, h), 1e-12) && close(r[1], c(-0.5, -h), 1e-12));
        let r = rho_one_points(4).unwrap();
        assert_eq!(r.len(), 1);
        assert!(close(r[0], c(-1.0, 0.0), 1e-12));
        for q in [5, 6] {
            for x in rho_one_points(q).unwrap() {
                assert!(x.im.abs() < 1e-12 && x.re < 0.0);
            }
        }
        assert!(rho_one_points(1).is_err());
    }

    #[test]
    fn parametrization() {
        let v = c(0.3, -0.7);
        for states in [2, 3, 4, 7] {
            for p in potts_parametrization(states, v) {
                let s = p.branch.sqrt_q(states);
                assert!((p.q * p.q - s * p.q + 1.0).norm() < 1e-12);
                assert!((-p.q * p.rho - v / s).norm() < 1e-12);
            }
        }
        let qs: Vec<Complex64> = potts_parametrization(2, v).iter().map(|p| p.q).collect();
        assert!(close(qs[0], Complex64::from_polar(1.0, FRAC_PI_4), 1e-12));
        assert!(close(qs[1], Complex64::from_polar(1.0, -FRAC_PI_4), 1e-12));
        let q4: Vec<Complex64> = potts_parametrization(4, v).iter().map(|p| p.q).collect();
        assert!(close(q4[0], c(1.0, 0.0), 1e-12) && close(q4[2], c(-1.0, 0.0), 1e-12));
    }

    #[test]
    fn criticality() {
        let r = criticality_check(PottsParameters::from_boltzmann(4, c(-1.0, 0.0)).unwrap(), 1e-9);
        assert!(r.critical_and_rho_one);
        assert_eq!(r.critical_sqrt_signs, vec![-1]);
        let r = criticality_check(PottsParameters::from_boltzmann(2, c(1.0 + 2f64.sqrt(), 0.0)).unwrap(), 1e-9);
        assert!(r.critical && r.rho_one_branches.is_empty());
        let r = criticality_check(PottsParameters::new(2, c(0.0, 0.0)), 1e-9);
        assert!(!r.critical && !r.critical_and_rho_one);
        for states in [2, 3, 5, 6] {
            for x in rho_one_points(states).unwrap() {
                let r = criticality_check(PottsParameters::from_boltzmann(states, x).unwrap(), 1e-9);
                assert!(!r.rho_one_branches.is_empty());
                assert!(!r.critical_and_rho_one);
            }
        }
    }

    #[test]
    fn khovanov_values() {
        for g in [edge(), triangle()] {
            for states in [2, 3, 4] {
                for b in Branch::ALL {
                    let k = potts_via_khovanov(&g, states, b).unwrap();
                    let p = PottsParameters::from_boltzmann(states, k.point.boltzmann).unwrap();
                    let spin = partition_spin_sum(&g, p).unwrap();
                    assert!(close(k.value, spin, 1e-9), "Q={states} {b}: {} vs {spin}", k.value);
                }
            }
        }
        let k = potts_via_khovanov(&edge(), 2, Branch { sqrt_sign: 1, root_sign: 1 }).unwrap();
        let e_k = k.point.boltzmann;
        assert!(close(e_k, c(0.0, -1.0), 1e-12));
        assert!(close(k.value, c(2.0, -2.0), 1e-12));
    }
}
