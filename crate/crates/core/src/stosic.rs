//! Graph homology categorifying a specialization of the dichromatic
//! polynomial.
//!
//! An enhanced state is a spanning subgraph `h` with a label `X^i`,
//! `0 ≤ i ≤ n`, on each component, in the ring `Z[X]/(X^{n+1})`. The partial
//! differential at an absent edge joins two components with labels `X^i`,
//! `X^j` into `X^{i+j}` (zero past `X^n`), or, when the edge closes a cycle,
//! sends label `1` to `X^n` and everything else to zero.
//!
//! With `deg X^i = n − i` the grading preserved by these rules is
//! `j(h) = n·e(h) + Σ deg`, and the graded Euler characteristic is the
//! dichromatic polynomial at `Q = 1 + q + … + q^n`, `v = −q^n`. The grading
//! `n·|h| + Σ deg` (components instead of edges) is not preserved; see
//! [`literal_grading_preserved`].

use num_complex::Complex64;
use serde::Serialize;

use crate::complex::{BigradedComplex, Grade, HomologySummary, Ring};
use crate::error::{Error, Result};
use crate::graphs::{dichromatic_subgraph_sum, PlanarMultigraph};
use crate::poly::LaurentPoly;

/// Largest edge count accepted by [`build_stosic_complex`].
pub const STOSIC_EDGE_CAP: usize = 12;
/// Largest basis size accepted by [`build_stosic_complex`].
pub const STOSIC_BASIS_CAP: u128 = 4_000_000;

/// Enhanced subgraph state: edge bit-set plus one exponent per component,
/// components ordered by their smallest node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StosicGen {
    pub edges: u64,
    pub labels: Vec<u8>,
}

/// `comp[node]` with components numbered by their smallest node.
fn component_index(g: &PlanarMultigraph, edges: u64) -> (Vec<usize>, usize) {
    let n = g.node_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (k, &(a, b)) in g.edges().iter().enumerate() {
        if edges >> k & 1 == 1 {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut comp = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = next;
            next += 1;
        }
        comp[v] = index[r];
    }
    (comp, next)
}

/// Context shared by grading and differential computations.
pub struct StosicSetup<'g> {
    g: &'g PlanarMultigraph,
    n: u8,
}

impl<'g> StosicSetup<'g> {
    pub fn new(g: &'g PlanarMultigraph, n: u8) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if g.edge_count() > STOSIC_EDGE_CAP {
            return Err(Error::TooLarge {
                what: "edges",
                required: g.edge_count() as u128,
                cap: STOSIC_EDGE_CAP as u128,
            });
        }
        Ok(Self { g, n })
    }

    /// `(e(h), n·e(h) + Σ (n − i))`.
    pub fn grade(&self, h: &StosicGen) -> Grade {
        let e = h.edges.count_ones() as i64;
        let n = self.n as i64;
        let deg: i64 = h.labels.iter().map(|&i| n - i as i64).sum();
        (e, n * e + deg)
    }

    /// `n·|h| + Σ (n − i)`, the component-count variant.
    pub fn literal_grade(&self, h: &StosicGen) -> i64 {
        let n = self.n as i64;
        n * h.labels.len() as i64 + h.labels.iter().map(|&i| n - i as i64).sum::<i64>()
    }

    pub fn generators(&self) -> Vec<StosicGen> {
        let mut out = Vec::new();
        for edges in 0..1u64 << self.g.edge_count() {
            let (_, k) = component_index(self.g, edges);
            let mut labels = vec![0u8; k];
            loop {
                out.push(StosicGen {
                    edges,
                    labels: labels.clone(),
                });
                // odometer over {0..n}^k
                let mut i = 0;
                while i < k && labels[i] == self.n {
                    labels[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
                labels[i] += 1;
            }
        }
        out
    }

    /// Unsigned partial differential at edge `t`; `None` when `t ∈ h` or the
    /// result is zero.
    pub fn partial(&self, h: &StosicGen, t: usize) -> Option<StosicGen> {
        if h.edges >> t & 1 == 1 {
            return None;
        }
        let (comp, _) = component_index(self.g, h.edges);
        let (a, b) = self.g.edges()[t];
        let (ca, cb) = (comp[a], comp[b]);
        let edges = h.edges | 1 << t;
        let (new_comp, k) = component_index(self.g, edges);
        let mut labels = vec![0u8; k];
        // old component c keeps its smallest node, hence maps to new_comp of it
        let mut first = vec![usize::MAX; h.labels.len()];
        for v in (0..comp.len()).rev() {
            first[comp[v]] = v;
        }
        for (c, &l) in h.labels.iter().enumerate() {
            if c != ca && c != cb {
                labels[new_comp[first[c]]] = l;
            }
        }
        let target = new_comp[a];
        if ca == cb {
            if h.labels[ca] != 0 {
                return None;
            }
            labels[target] = self.n;
        } else {
            let s = h.labels[ca] + h.labels[cb];
            if s > self.n {
                return None;
            }
            labels[target] = s;
        }
        Some(StosicGen { edges, labels })
    }
}

fn edge_sign(edges: u64, t: usize) -> i64 {
    if (edges & ((1u64 << t) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Basis size `Σ_H (n+1)^{|H|}` without building it.
pub fn basis_size(g: &PlanarMultigraph, n: u8) -> u128 {
    (0..1u64 << g.edge_count())
        .map(|e| (n as u128 + 1).pow(component_index(g, e).1 as u32))
        .sum()
}

pub fn build_stosic_complex(
    g: &PlanarMultigraph,
    n: u8,
    ring: Ring,
) -> Result<BigradedComplex<StosicGen>> {
    let setup = StosicSetup::new(g, n)?;
    let size = basis_size(g, n);
    if size > STOSIC_BASIS_CAP {
        return Err(Error::TooLarge {
            what: "enhanced subgraph states",
            required: size,
            cap: STOSIC_BASIS_CAP,
        });
    }
    let gens = setup
        .generators()
        .into_iter()
        .map(|h| {
            let gr = setup.grade(&h);
            (h, gr)
        })
        .collect();
    BigradedComplex::from_generators(ring, gens, |h| {
        (0..g.edge_count())
            .filter_map(|t| setup.partial(h, t).map(|x| (x, edge_sign(h.edges, t))))
            .collect()
    })
}

pub fn stosic_homology(cx: &BigradedComplex<StosicGen>) -> HomologySummary {
    cx.homology()
}

/// False as soon as some nonzero partial changes `n·|h| + Σ deg`.
pub fn literal_grading_preserved(g: &PlanarMultigraph, n: u8) -> Result<bool> {
    let setup = StosicSetup::new(g, n)?;
    Ok(setup.generators().iter().all(|h| {
        (0..g.edge_count()).all(|t| {
            setup
                .partial(h, t)
                .is_none_or(|x| setup.literal_grade(&x) == setup.literal_grade(h))
        })
    }))
}

/// `1 + q + … + q^n`.
pub fn q_integer(n: u8) -> LaurentPoly {
    (0..=n as i64).map(|k| LaurentPoly::monomial(1, &[("q", k)])).sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct EulerIdentity {
    /// Graded Euler characteristic of the complex.
    pub lhs: LaurentPoly,
    /// Dichromatic polynomial at `Q = 1 + … + q^n`, `v = −q^n`.
    pub rhs: LaurentPoly,
    pub equal: bool,
}

pub fn stosic_euler_identity(g: &PlanarMultigraph, n: u8) -> Result<EulerIdentity> {
    let lhs = build_stosic_complex(g, n, Ring::Z)?.euler_characteristic("q");
    let rhs = dichromatic_subgraph_sum(g)?
        .substitute("Q", &q_integer(n))?
        .substitute("v", &LaurentPoly::monomial(-1, &[("q", n as i64)]))?;
    let equal = lhs == rhs;
    Ok(EulerIdentity { lhs, rhs, equal })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StosicCoupling {
    /// `iπ + ln(q + q² + … + q^n)`.
    pub listed: Complex64,
    /// `K` with `e^K = 1 + v = 1 − q^n`; `None` at `q^n = 1`.
    pub implemented: Option<Complex64>,
}

pub fn stosic_potts_coupling(q: f64, n: u8) -> Result<StosicCoupling> {
    if q.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || n == 0 {
        return Err(Error::Domain(format!("need q > 0 and n >= 1, got q = {q}, n = {n}")));
    }
    let sum: f64 = (1..=n as i32).map(|k| q.powi(k)).sum();
    let listed = Complex64::new(sum.ln(), std::f64::consts::PI);
    let b = 1.0 - q.powi(n as i32);
    let implemented = (b != 0.0).then(|| Complex64::new(b, 0.0).ln());
    Ok(StosicCoupling { listed, implemented })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn graph(n: usize, e: &[(usize, usize)]) -> PlanarMultigraph {
        PlanarMultigraph::with_default_rotation(n, e.to_vec()).unwrap()
    }

    fn dims(cx: &BigradedComplex<StosicGen>, i: i64) -> BTreeMap<i64, usize> {
        cx.grades().filter(|g| g.0 == i).map(|g| (g.1, cx.dim(g))).collect()
    }

    #[test]
    fn single_node() {
        let cx = build_stosic_complex(&graph(1, &[]), 1, Ring::Z).unwrap();
        assert_eq!(dims(&cx, 0), BTreeMap::from([(0, 1), (1, 1)]));
        let h = cx.homology();
        assert_eq!(h.betti((0, 1)), 1);
        assert_eq!(h.betti((0, 0)), 1);
    }

    #[test]
    fn single_edge() {
        let g = graph(2, &[(0, 1)]);
        let cx = build_stosic_complex(&g, 1, Ring::Z).unwrap();
        assert_eq!(dims(&cx, 0), BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        assert_eq!(dims(&cx, 1), BTreeMap::from([(1, 1), (2, 1)]));
        let h = cx.homology();
        let betti: Vec<_> = h.betti.iter().map(|(&g, &b)| (g, b)).collect();
        assert_eq!(betti, vec![((0, 0), 1), ((0, 1), 1)]);
        let id = stosic_euler_identity(&g, 1).unwrap();
        assert!(id.equal);
        assert_eq!(id.lhs, "1 + q".parse().unwrap());
    }

    #[test]
    fn self_loop() {
        let g = graph(1, &[(0, 0)]);
        let cx = build_stosic_complex(&g, 1, Ring::Z).unwrap();
        assert_eq!(cx.dim((0, 0)) + cx.dim((0, 1)), 2);
        assert_eq!(cx.total_dim(), 4);
        let one = StosicGen { edges: 0, labels: vec![0] };
        let x = StosicGen { edges: 0, labels: vec![1] };
        let s = StosicSetup::new(&g, 1).unwrap();
        assert_eq!(s.partial(&one, 0), Some(StosicGen { edges: 1, labels: vec![1] }));
        assert_eq!(s.partial(&x, 0), None);
    }

    #[test]
    fn identities_and_d_squared() {
        let corpus = [
            graph(3, &[(0, 1), (1, 2), (2, 0)]),
            graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            graph(2, &[(0, 1), (0, 1), (1, 1)]),
            graph(3, &[(0, 1), (1, 2)]),
        ];
        for g in &corpus {
            for n in 1..=3 {
                let s = StosicSetup::new(g, n).unwrap();
                for ring in [Ring::Z, Ring::Gf2] {
                    let cx = build_stosic_complex(g, n, ring).unwrap();
                    assert!(cx.d_squared_zero());
                    assert!(cx.gradings_consistent(|h| s.grade(h)));
                }
                assert!(stosic_euler_identity(g, n).unwrap().equal);
            }
        }
    }

    #[test]
    fn literal_grading_fails() {
        assert!(!literal_grading_preserved(&graph(2, &[(0, 1)]), 1).unwrap());
        assert!(!literal_grading_preserved(&graph(1, &[(0, 0)]), 2).unwrap());
    }

    #[test]
    fn couplings() {
        let c = stosic_potts_coupling(1.0, 1).unwrap();
        assert!((c.listed - Complex64::new(0.0, std::f64::consts::PI)).norm() < 1e-15);
        assert_eq!(c.implemented, None);
        let c = stosic_potts_coupling(2.0, 1).unwrap();
        assert!((c.listed - Complex64::new(2f64.ln(), std::f64::consts::PI)).norm() < 1e-15);
        for (q, n) in [(2.0, 1), (1.5, 3), (0.5, 2)] {
            let k = stosic_potts_coupling(q, n).unwrap().implemented.unwrap();
            assert!((k.exp() - (1.0 - f64::powi(q, n as i32))).norm() < 1e-12);
        }
        assert!(stosic_potts_coupling(0.0, 1).is_err());
    }
}
