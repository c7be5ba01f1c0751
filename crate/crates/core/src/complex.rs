//! Bigraded cochain complexes with differentials of bidegree (1, 0), and
//! their homology over the integers or GF(2).

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{prime_power_parts, rank_gf2, smith_normal_form, SparseMatrix};
use crate::poly::LaurentPoly;

pub type Grade = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Z,
    Gf2,
}

impl std::str::FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z" | "int" | "integers" => Ok(Ring::Z),
            "gf2" | "z2" | "f2" => Ok(Ring::Gf2),
            _ => Err(Error::Domain(format!("unknown ring `{s}` (use z or gf2)"))),
        }
    }
}

/// Chain groups `C^{i,j}` with differentials `C^{i,j} → C^{i+1,j}`.
///
/// The matrix of `∂^{i,j}` has one row per basis element of `C^{i+1,j}` and
/// one column per basis element of `C^{i,j}`.
#[derive(Clone, Debug)]
pub struct BigradedComplex<G> {
    ring: Ring,
    bases: BTreeMap<Grade, Vec<G>>,
    differentials: BTreeMap<Grade, SparseMatrix>,
}

impl<G: Clone + Eq + Hash + Send + Sync> BigradedComplex<G> {
    /// Builds a complex from graded generators and a boundary rule.
    ///
    /// `boundary(g)` lists `(target, coefficient)`; every target must be a
    /// listed generator of grade `(i + 1, j)` where `(i, j)` is the grade of
    /// `g`, otherwise the construction fails. Over GF(2) coefficients are
    /// reduced mod 2.
    pub fn from_generators<F>(ring: Ring, generators: Vec<(G, Grade)>, boundary: F) -> Result<Self>
    where
        F: Fn(&G) -> Vec<(G, i64)> + Sync,
    {
        let mut bases: BTreeMap<Grade, Vec<G>> = BTreeMap::new();
        let mut index: HashMap<G, (Grade, usize)> = HashMap::with_capacity(generators.len());
        for (g, gr) in generators {
            let b = bases.entry(gr).or_default();
            if index.insert(g.clone(), (gr, b.len())).is_some() {
                return Err(Error::Domain("duplicate generator".into()));
            }
            b.push(g);
        }
        let differentials = bases
            .par_iter()
            .map(|(&(i, j), basis)| {
                let rows = bases.get(&(i + 1, j)).map_or(0, Vec::len);
                let mut trip = Vec::new();
                for (col, g) in basis.iter().enumerate() {
                    for (t, c) in boundary(g) {
                        let Some(&(tg, row)) = index.get(&t) else {
                            return Err(Error::Domain(format!(
                                "boundary of a generator in grade ({i},{j}) leaves the basis"
                            )));
                        };
                        if tg != (i + 1, j) {
                            return Err(Error::Domain(format!(
                                "boundary maps grade ({i},{j}) to ({},{})",
                                tg.0, tg.1
                            )));
                        }
                        trip.push((row, col, c));
                    }
                }
                let m = SparseMatrix::from_triplets(rows, basis.len(), trip);
                Ok(((i, j), if ring == Ring::Gf2 { m.mod2() } else { m }))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self {
            ring,
            bases,
            differentials,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn grades(&self) -> impl Iterator<Item = Grade> + '_ {
        self.bases.keys().copied()
    }

    pub fn basis(&self, g: Grade) -> &[G] {
        self.bases.get(&g).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, g: Grade) -> usize {
        self.basis(g).len()
    }

    pub fn total_dim(&self) -> usize {
        self.bases.values().map(Vec::len).sum()
    }

    /// `∂^{i,j}`; the zero map of the right shape when nothing is stored.
    pub fn differential(&self, (i, j): Grade) -> SparseMatrix {
        self.differentials
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.dim((i + 1, j)), self.dim((i, j))))
    }

    /// Every stored matrix has the shape of its adjacent bases.
    pub fn dimensions_consistent(&self) -> bool {
        self.differentials.iter().all(|(&(i, j), m)| {
            m.ncols() == self.dim((i, j)) && m.nrows() == self.dim((i + 1, j))
        })
    }

    /// `∂^{i+1,j} ∘ ∂^{i,j} = 0` for every grade (mod 2 over GF(2)).
    pub fn d_squared_zero(&self) -> bool {
        self.bases.keys().collect::<Vec<_>>().par_iter().all(|&&(i, j)| {
            let p = self.differential((i + 1, j)).mul(&self.differential((i, j)));
            match self.ring {
                Ring::Z => p.is_zero(),
                Ring::Gf2 => p.mod2().is_zero(),
            }
        })
    }

    /// Every basis element of `C^{i,j}` recomputes to grade `(i, j)`. Since
    /// matrices only connect `(i, j)` to `(i + 1, j)`, this certifies that
    /// each nonzero entry preserves `j`.
    pub fn gradings_consistent(&self, grade: impl Fn(&G) -> Grade) -> bool {
        self.bases
            .iter()
            .all(|(&gr, b)| b.iter().all(|g| grade(g) == gr))
            && self.differentials.iter().all(|(&(i, j), m)| {
                m.entries().iter().all(|&(r, c, _)| {
                    let src = grade(&self.basis((i, j))[c]);
                    let dst = grade(&self.basis((i + 1, j))[r]);
                    src.1 == dst.1 && dst.0 == src.0 + 1
                })
            })
    }

    /// `Σ_j q^j Σ_i (−1)^i dim C^{i,j}`.
    pub fn euler_characteristic(&self, var: &str) -> LaurentPoly {
        self.bases
            .iter()
            .map(|(&(i, j), b)| {
                let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
                LaurentPoly::monomial(BigInt::from(sign * b.len() as i64), &[(var, j)])
            })
            .sum()
    }

    /// `Σ_j q^j Σ_i (−ρ)^i dim C^{i,j}`.
    pub fn rho_euler_characteristic(&self) -> LaurentPoly {
        self.bases
            .iter()
            .map(|(&(i, j), b)| {
                let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
                LaurentPoly::monomial(BigInt::from(sign * b.len() as i64), &[("q", j), ("rho", i)])
            })
            .sum()
    }

    pub fn homology(&self) -> HomologySummary {
        // rank and torsion of every nonzero differential, matrices in parallel
        let reduced: BTreeMap<Grade, (usize, Vec<BigInt>)> = self
            .differentials
            .par_iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|(&g, m)| {
                let r = match self.ring {
                    Ring::Gf2 => (rank_gf2(m), Vec::new()),
                    Ring::Z => {
                        let s = smith_normal_form(m);
                        let t = s.torsion().iter().flat_map(prime_power_parts).collect();
                        (s.rank(), t)
                    }
                };
                (g, r)
            })
            .collect();
        let rank = |g: Grade| reduced.get(&g).map_or(0, |r| r.0);
        let mut betti = BTreeMap::new();
        let mut torsion = BTreeMap::new();
        for (&(i, j), b) in &self.bases {
            let h = b.len() - rank((i, j)) - rank((i - 1, j));
            if h > 0 {
                betti.insert((i, j), h);
            }
            if let Some((_, t)) = reduced.get(&(i - 1, j)) {
                if !t.is_empty() {
                    torsion.insert((i, j), t.clone());
                }
            }
        }
        HomologySummary {
            ring: self.ring,
            betti,
            torsion,
        }
    }
}

/// Betti numbers and prime-power torsion orders by grade. Zero entries are
/// omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub ring: Ring,
    pub betti: BTreeMap<Grade, usize>,
    pub torsion: BTreeMap<Grade, Vec<BigInt>>,
}

impl HomologySummary {
    pub fn betti(&self, g: Grade) -> usize {
        self.betti.get(&g).copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> usize {
        self.betti.values().sum()
    }

    /// `Σ_j q^j Σ_i (−1)^i betti(i, j)`; torsion does not contribute.
    pub fn euler_characteristic(&self, var: &str) -> LaurentPoly {
        self.betti
            .iter()
            .map(|(&(i, j), &b)| {
                let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
                LaurentPoly::monomial(BigInt::from(sign * b as i64), &[(var, j)])
            })
            .sum()
    }

    /// Moves every entry from `(i, j)` to `(i + di, j + dj)`.
    pub fn shifted(&self, di: i64, dj: i64) -> Self {
        let mv = |(i, j): Grade| (i + di, j + dj);
        Self {
            ring: self.ring,
            betti: self.betti.iter().map(|(&g, &b)| (mv(g), b)).collect(),
            torsion: self.torsion.iter().map(|(&g, t)| (mv(g), t.clone())).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let betti: Vec<_> = self
            .betti
            .iter()
            .map(|(&(i, j), &r)| serde_json::json!({"i": i, "j": j, "rank": r}))
            .collect();
        let torsion: Vec<_> = self
            .torsion
            .iter()
            .map(|(&(i, j), t)| {
                let orders: Vec<String> = t.iter().map(ToString::to_string).collect();
                serde_json::json!({"i": i, "j": j, "orders": orders})
            })
            .collect();
        serde_json::json!({"ring": self.ring, "betti": betti, "torsion": torsion})
    }
}

impl std::fmt::Display for HomologySummary {
    /// One line per nonzero grade: `i j rank [torsion]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut grades: Vec<Grade> = self.betti.keys().chain(self.torsion.keys()).copied().collect();
        grades.sort_unstable();
        grades.dedup();
        for (i, j) in grades {
            write!(f, "{i:>3} {j:>4} {:>4}", self.betti((i, j)))?;
            if let Some(t) = self.torsion.get(&(i, j)) {
                let t: Vec<String> = t.iter().map(|x| format!("Z/{x}")).collect();
                write!(f, "  {}", t.join(" + "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // 0 → Z --2--> Z → 0 in grades (0,0) → (1,0)
    fn times_two(ring: Ring) -> BigradedComplex<u8> {
        BigradedComplex::from_generators(ring, vec![(0, (0, 0)), (1, (1, 0))], |g| {
            if *g == 0 {
                vec![(1, 2)]
            } else {
                vec![]
            }
        })
        .unwrap()
    }

    #[test]
    fn torsion_and_mod2() {
        let z = times_two(Ring::Z).homology();
        assert_eq!(z.total_rank(), 0);
        assert_eq!(z.torsion[&(1, 0)], vec![BigInt::from(2)]);
        let f = times_two(Ring::Gf2).homology();
        assert_eq!(f.betti((0, 0)), 1);
        assert_eq!(f.betti((1, 0)), 1);
        assert!(f.torsion.is_empty());
    }

    #[test]
    fn euler_characteristics_agree() {
        let c = times_two(Ring::Z);
        assert!(c.d_squared_zero());
        assert!(c.dimensions_consistent());
        assert_eq!(c.euler_characteristic("q"), c.homology().euler_characteristic("q"));
        assert!(c.euler_characteristic("q").is_zero());
    }

    #[test]
    fn rejects_grade_jump() {
        let r = BigradedComplex::from_generators(Ring::Z, vec![(0u8, (0, 0)), (1, (1, 1))], |g| {
            if *g == 0 {
                vec![(1, 1)]
            } else {
                vec![]
            }
        });
        assert!(r.is_err());
    }
}
