//! Sparse integer matrices, Smith normal form and rank over GF(2).
//!
//! Differentials are stored as sorted triplets. The Smith form first removes
//! unit pivots with sparse Schur-complement steps (cheap for Khovanov-type
//! matrices, whose entries are ±1) and finishes the leftover block densely with
//! big-integer arithmetic and minimal-absolute-value pivoting.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    /// `(row, col, value)`, sorted, no zeros, no duplicates.
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            entries: Vec::new(),
        }
    }

    /// Sums duplicate positions and drops zeros.
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "entry ({r},{c}) outside {nrows}x{ncols}");
            *acc.entry((r, c)).or_insert(0) += v;
        }
        Self {
            nrows,
            ncols,
            entries: acc
                .into_iter()
                .filter(|(_, v)| *v != 0)
                .map(|((r, c), v)| (r, c, v))
                .collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v))),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries
            .binary_search_by(|&(er, ec, _)| (er, ec).cmp(&(r, c)))
            .map(|i| self.entries[i].2)
            .unwrap_or(0)
    }

    /// Entries reduced modulo 2.
    pub fn mod2(&self) -> Self {
        Self {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self
                .entries
                .iter()
                .filter(|e| e.2 % 2 != 0)
                .map(|&(r, c, _)| (r, c, 1))
                .collect(),
        }
    }

    /// `self * rhs`. Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in product");
        let mut rhs_rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); rhs.nrows];
        for &(r, c, v) in &rhs.entries {
            rhs_rows[r].push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for &(r, k, v) in &self.entries {
            for &(c, w) in &rhs_rows[k] {
                *acc.entry((r, c)).or_insert(0) += v * w;
            }
        }
        Self {
            nrows: self.nrows,
            ncols: rhs.ncols,
            entries: acc
                .into_iter()
                .filter(|(_, v)| *v != 0)
                .map(|((r, c), v)| (r, c, v))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for &(r, c, v) in &self.entries {
            out[r][c] = v;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors `d_1 | d_2 | …`, all positive.
    pub invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &SparseMatrix) -> SmithForm {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); m.nrows];
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.ncols];
    for &(r, c, v) in &m.entries {
        rows[r].insert(c, BigInt::from(v));
        cols[c].insert(r);
    }
    let mut units = 0usize;
    loop {
        let mut progress = false;
        for c in 0..m.ncols {
            // shortest row holding a unit entry in this column
            let pivot_row = cols[c]
                .iter()
                .copied()
                .filter(|&r| rows[r][&c].abs().is_one())
                .min_by_key(|&r| rows[r].len());
            let Some(pr) = pivot_row else { continue };
            let prow = std::mem::take(&mut rows[pr]);
            let p = prow[&c].clone();
            for &cc in prow.keys() {
                cols[cc].remove(&pr);
            }
            let others: Vec<usize> = cols[c].iter().copied().collect();
            for r in others {
                let factor = &rows[r][&c] * &p; // p = ±1 so v/p = v*p
                for (&cc, pv) in &prow {
                    let e = rows[r].entry(cc).or_insert_with(BigInt::zero);
                    *e -= &factor * pv;
                    if e.is_zero() {
                        rows[r].remove(&cc);
                        cols[cc].remove(&r);
                    } else {
                        cols[cc].insert(r);
                    }
                }
            }
            debug_assert!(cols[c].is_empty());
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    // dense finish on the leftover block
    let live_rows: Vec<usize> = (0..m.nrows).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.ncols).filter(|&c| !cols[c].is_empty()).collect();
    let mut dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|&r| {
            live_cols
                .iter()
                .map(|c| rows[r].get(c).cloned().unwrap_or_default())
                .collect()
        })
        .collect();
    let mut invariants = vec![BigInt::one(); units];
    invariants.extend(dense_diagonalize(&mut dense));
    normalize_chain(&mut invariants);
    SmithForm { invariants }
}

/// Smith normal form of a dense big-integer matrix.
pub fn smith_normal_form_dense(m: &[Vec<BigInt>]) -> SmithForm {
    let mut a = m.to_vec();
    let mut invariants = dense_diagonalize(&mut a);
    normalize_chain(&mut invariants);
    SmithForm { invariants }
}

/// Row/column reduction to a diagonal; returns the absolute nonzero diagonal.
fn dense_diagonalize(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // pivot of minimal absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..nc {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t + 1..nr {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Turns any positive diagonal into the divisibility chain with the same
/// cokernel: pairwise `(a, b) → (gcd, lcm)`.
fn normalize_chain(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
}

/// Rank over GF(2).
pub fn rank_gf2(m: &SparseMatrix) -> usize {
    let words = m.ncols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = vec![vec![0; words]; m.nrows];
    for &(r, c, v) in &m.entries {
        if v % 2 != 0 {
            rows[r][c / 64] ^= 1 << (c % 64);
        }
    }
    // xor basis keyed by leading column
    let mut pivots: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for mut row in rows {
        while let Some(lead) = leading_bit(&row) {
            match pivots.get(&lead) {
                Some(p) => {
                    for (x, y) in row.iter_mut().zip(p) {
                        *x ^= y;
                    }
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Splits an invariant factor into prime-power orders, e.g. `12 → [3, 4]`.
/// Factors too large for `u64` are returned unsplit.
pub fn prime_power_parts(n: &BigInt) -> Vec<BigInt> {
    let Some(mut x) = n.abs().to_u64() else {
        return vec![n.abs()];
    };
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= x {
        if x % p == 0 {
            let mut pp = 1u64;
            while x % p == 0 {
                x /= p;
                pp *= p;
            }
            out.push(BigInt::from(pp));
        }
        p += 1;
    }
    if x > 1 {
        out.push(BigInt::from(x));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(m: &SparseMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .invariants
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(inv(&SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]])), vec![1, 6]);
        assert_eq!(inv(&SparseMatrix::zero(3, 2)), Vec::<i64>::new());
        assert_eq!(
            inv(&SparseMatrix::from_dense(&[
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1]
            ])),
            vec![1, 1, 1]
        );
        assert_eq!(
            inv(&SparseMatrix::from_dense(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])),
            vec![2, 6, 12]
        );
        assert_eq!(inv(&SparseMatrix::from_dense(&[vec![1, 1], vec![1, -1]])), vec![1, 2]);
    }

    #[test]
    fn gf2_rank() {
        let m = SparseMatrix::from_dense(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank_gf2(&m), 1);
        assert_eq!(rank_gf2(&SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]])), 1);
        assert_eq!(rank_gf2(&SparseMatrix::zero(0, 4)), 0);
    }

    #[test]
    fn product_and_triplets() {
        let a = SparseMatrix::from_triplets(2, 2, [(0, 0, 1), (0, 0, -1), (1, 0, 2)]);
        assert_eq!(a.entries(), &[(1, 0, 2)]);
        let b = SparseMatrix::from_dense(&[vec![1, 3], vec![0, 1]]);
        assert_eq!(a.mul(&b).to_dense(), vec![vec![0, 0], vec![2, 6]]);
        assert_eq!(a.get(1, 0), 2);
        assert_eq!(a.get(0, 1), 0);
    }

    #[test]
    fn prime_powers() {
        let parts: Vec<i64> = prime_power_parts(&BigInt::from(360))
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(parts, vec![5, 8, 9]);
        assert!(prime_power_parts(&BigInt::one()).is_empty());
    }
}
