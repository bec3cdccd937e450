//! Exact ranks of sparse integer matrices.
//!
//! Ranks are computed modulo word-sized primes by sparse elimination with
//! Markowitz-style pivoting. Since the rank over ℚ bounds every modular rank
//! from above and agrees with it for all but finitely many primes, two primes
//! reporting the same maximal rank are taken as the answer. A dense
//! fraction-free (Bareiss) routine serves as an oracle on small inputs.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default primes, close to `2^31`.
pub const DEFAULT_PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

/// Primes tried, in order, when the defaults disagree.
pub const FALLBACK_PRIMES: [u64; 8] = [
    2_147_483_587,
    2_147_483_579,
    2_147_483_563,
    2_147_483_549,
    2_147_483_543,
    2_147_483_497,
    2_147_483_489,
    2_147_483_477,
];

/// Entry limit of [`rational_rank`].
pub const RATIONAL_RANK_LIMIT: usize = 4_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error(
        "{rows}×{cols} matrix exceeds the dense oracle limit of {RATIONAL_RANK_LIMIT} entries"
    )]
    TooLarge { rows: usize, cols: usize },
    #[error("{0} is not a prime above 2^20")]
    BadPrime(u64),
}

/// Sparse integer matrix stored by columns; rows within a column are sorted
/// and carry nonzero values.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseIntMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        SparseIntMatrix {
            rows: k,
            columns: (0..k).map(|i| vec![(i as u32, 1)]).collect(),
        }
    }

    /// Columns must have sorted, distinct row indices below `rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        for col in &columns {
            debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(col.iter().all(|&(r, v)| (r as usize) < rows && v != 0));
        }
        SparseIntMatrix { rows, columns }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut columns = vec![Vec::<(u32, i64)>::new(); cols];
        for &(r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds");
            columns[c].push((r as u32, v));
        }
        for col in &mut columns {
            col.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(u32, i64)> = Vec::with_capacity(col.len());
            for &(r, v) in col.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == r => last.1 += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *col = merged;
        }
        SparseIntMatrix { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(u32, i64)] {
        &self.columns[c]
    }

    pub fn get(&self, row: u32, col: usize) -> i64 {
        self.columns[col]
            .binary_search_by_key(&row, |e| e.0)
            .map_or(0, |i| self.columns[col][i].1)
    }

    /// `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r as usize, c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            columns[r].push((c as u32, v));
        }
        SparseIntMatrix {
            rows: self.cols(),
            columns,
        }
    }

    /// Entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let entries: Vec<_> = self
            .entries()
            .map(|(r, c, v)| (row_perm[r], col_perm[c], v))
            .collect();
        Self::from_triplets(self.rows, self.cols(), &entries)
    }

    /// Matrix product, used to check `d ∘ d = 0`.
    pub fn mul(&self, rhs: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch");
        let mut columns = Vec::with_capacity(rhs.cols());
        let mut acc: std::collections::BTreeMap<u32, i64> = Default::default();
        for col in &rhs.columns {
            acc.clear();
            for &(k, v) in col {
                for &(r, w) in &self.columns[k as usize] {
                    *acc.entry(r).or_insert(0) += v * w;
                }
            }
            columns.push(
                acc.iter()
                    .filter(|e| *e.1 != 0)
                    .map(|(&r, &v)| (r, v))
                    .collect(),
            );
        }
        SparseIntMatrix {
            rows: self.rows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    ModularConsensus,
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub primes_used: Vec<u64>,
    /// At least two distinct primes reported `rank`, and none reported more.
    pub agreed: bool,
    pub method: RankMethod,
    /// Primes whose modular rank fell below `rank`.
    pub discrepancies: usize,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<(), LinalgError> {
    if p > (1 << 20) && p < (1 << 32) && is_prime(p) {
        Ok(())
    } else {
        Err(LinalgError::BadPrime(p))
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Row-oriented sparse elimination state over `ℤ/p`.
struct Eliminator {
    p: u64,
    live: usize,
    rows: Vec<Vec<(u32, u32)>>,
    active: Vec<bool>,
    col_rows: Vec<Vec<u32>>,
    col_count: Vec<u32>,
    done: Vec<bool>,
}

impl Eliminator {
    fn new(m: &SparseIntMatrix, p: u64) -> Self {
        let mut rows = vec![Vec::new(); m.rows()];
        let mut col_rows = vec![Vec::new(); m.cols()];
        for (c, col) in m.columns.iter().enumerate() {
            for &(r, v) in col {
                let v = v.rem_euclid(p as i64) as u32;
                if v != 0 {
                    rows[r as usize].push((c as u32, v));
                    col_rows[c].push(r);
                }
            }
        }
        let col_count = col_rows.iter().map(|v| v.len() as u32).collect();
        let active = rows
            .iter()
            .map(|r: &Vec<(u32, u32)>| !r.is_empty())
            .collect();
        Eliminator {
            p,
            live: m.nnz(),
            rows,
            active,
            col_rows,
            col_count,
            done: vec![false; m.cols()],
        }
    }

    fn entry(&self, row: u32, col: u32) -> Option<u32> {
        let r = &self.rows[row as usize];
        r.binary_search_by_key(&col, |e| e.0).ok().map(|i| r[i].1)
    }

    fn rank(mut self) -> usize {
        let mut heap: BinaryHeap<Reverse<(u32, u32)>> = self
            .col_count
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| Reverse((c, i as u32)))
            .collect();
        let mut rank = 0;
        let mut candidates = Vec::new();
        let mut touched = Vec::new();
        while let Some(Reverse((count, col))) = heap.pop() {
            let c = col as usize;
            if self.done[c] || count != self.col_count[c] {
                continue;
            }
            if count == 0 {
                self.done[c] = true;
                continue;
            }
            // live rows of this column
            candidates.clear();
            let listed = std::mem::take(&mut self.col_rows[c]);
            for &r in &listed {
                if self.active[r as usize] && self.entry(r, col).is_some() {
                    candidates.push(r);
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            debug_assert_eq!(candidates.len(), count as usize);
            let &pivot = candidates
                .iter()
                .min_by_key(|&&r| (self.rows[r as usize].len(), r))
                .expect("column count is positive");
            let prow = std::mem::take(&mut self.rows[pivot as usize]);
            self.live -= prow.len();
            self.active[pivot as usize] = false;
            let pinv = inv_mod(self.entry_in(&prow, col) as u64, self.p);
            touched.clear();
            for &(pc, _) in &prow {
                self.col_count[pc as usize] -= 1;
                touched.push(pc);
            }
            for &r in candidates.iter().filter(|&&r| r != pivot) {
                let val = self.entry(r, col).unwrap() as u64;
                let factor = (self.p - val * pinv % self.p) % self.p;
                self.axpy(r, factor, &prow, &mut touched);
                if self.rows[r as usize].is_empty() {
                    self.active[r as usize] = false;
                }
            }
            self.done[c] = true;
            rank += 1;
            if count >= DENSE_MIN_COUNT && rank % 32 == 0 {
                if let Some(rest) = self.try_dense() {
                    return rank + rest;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            for &t in &touched {
                if !self.done[t as usize] {
                    heap.push(Reverse((self.col_count[t as usize], t)));
                }
            }
        }
        rank
    }

    fn entry_in(&self, row: &[(u32, u32)], col: u32) -> u32 {
        row[row.binary_search_by_key(&col, |e| e.0).unwrap()].1
    }

    /// `row_r += factor · prow`, keeping column incidence and counts in sync.
    fn axpy(&mut self, r: u32, factor: u64, prow: &[(u32, u32)], touched: &mut Vec<u32>) {
        let p = self.p;
        let old = std::mem::take(&mut self.rows[r as usize]);
        let mut out = Vec::with_capacity(old.len() + prow.len());
        let (mut i, mut j) = (0, 0);
        while i < old.len() || j < prow.len() {
            let take_old = j >= prow.len() || (i < old.len() && old[i].0 < prow[j].0);
            let take_new = i >= old.len() || (j < prow.len() && prow[j].0 < old[i].0);
            if take_old {
                out.push(old[i]);
                i += 1;
            } else if take_new {
                let (c, v) = prow[j];
                let nv = (v as u64 * factor % p) as u32;
                if nv != 0 {
                    out.push((c, nv));
                    self.col_count[c as usize] += 1;
                    self.col_rows[c as usize].push(r);
                    touched.push(c);
                }
                j += 1;
            } else {
                let (c, v) = old[i];
                let nv = ((v as u64 + prow[j].1 as u64 * factor) % p) as u32;
                if nv != 0 {
                    out.push((c, nv));
                } else {
                    self.col_count[c as usize] -= 1;
                    touched.push(c);
                }
                i += 1;
                j += 1;
            }
        }
        self.live = self.live + out.len() - old.len();
        self.rows[r as usize] = out;
    }

    /// Finishes on a dense copy of the active block once fill-in has made the
    /// sparse representation the slower one.
    fn try_dense(&mut self) -> Option<usize> {
        let mut cols: Vec<u32> = (0..self.done.len() as u32)
            .filter(|&c| !self.done[c as usize] && self.col_count[c as usize] > 0)
            .collect();
        cols.sort_by_key(|&c| self.col_count[c as usize]);
        let rows: Vec<usize> = (0..self.rows.len())
            .filter(|&r| self.active[r] && !self.rows[r].is_empty())
            .collect();
        let size = rows.len() * cols.len();
        if size > DENSE_LIMIT || self.live * DENSE_RATIO < size {
            return None;
        }
        let mut index = vec![u32::MAX; self.done.len()];
        for (i, &c) in cols.iter().enumerate() {
            index[c as usize] = i as u32;
        }
        let dense: Vec<Vec<u32>> = rows
            .iter()
            .map(|&r| {
                let mut row = vec![0u32; cols.len()];
                for &(c, v) in &self.rows[r] {
                    row[index[c as usize] as usize] = v;
                }
                row
            })
            .collect();
        Some(dense_rank(dense, self.p))
    }
}

/// Fill-in density (as `1/DENSE_RATIO`) at which elimination goes dense.
const DENSE_RATIO: usize = 4;
/// Least pivot column count at which the density test runs.
const DENSE_MIN_COUNT: u32 = 16;
/// Largest dense block, in entries.
const DENSE_LIMIT: usize = 60_000_000;

/// Barrett reduction for moduli below `2^32` and inputs below `2^63`.
#[derive(Clone, Copy)]
struct Barrett {
    p: u64,
    m: u64,
}

impl Barrett {
    fn new(p: u64) -> Self {
        Barrett { p, m: u64::MAX / p }
    }

    #[inline(always)]
    fn reduce(self, x: u64) -> u64 {
        let q = ((x as u128 * self.m as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        if r >= self.p {
            r -= self.p;
        }
        if r >= self.p {
            r -= self.p;
        }
        r
    }
}

/// Rank of a dense matrix over `ℤ/p`, rows consumed as they become pivots.
fn dense_rank(mut rows: Vec<Vec<u32>>, p: u64) -> usize {
    let red = Barrett::new(p);
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut nz = Vec::new();
    for j in 0..ncols {
        let Some(pi) = rows.iter().position(|r| r[j] != 0) else {
            continue;
        };
        let prow = rows.swap_remove(pi);
        rank += 1;
        let pinv = inv_mod(prow[j] as u64, p);
        nz.clear();
        nz.extend(
            (j + 1..ncols)
                .filter(|&t| prow[t] != 0)
                .map(|t| (t, prow[t] as u64)),
        );
        for row in rows.iter_mut().filter(|r| r[j] != 0) {
            let f = p - red.reduce(row[j] as u64 * pinv);
            row[j] = 0;
            for &(t, v) in &nz {
                row[t] = red.reduce(row[t] as u64 + f * v) as u32;
            }
        }
        if rows.is_empty() {
            break;
        }
    }
    rank
}

/// Rank over `𝔽_p`.
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> usize {
    if m.nnz() == 0 {
        return 0;
    }
    // eliminate along the shorter dimension's incidence
    if m.rows() < m.cols() {
        Eliminator::new(&m.transpose(), p).rank()
    } else {
        Eliminator::new(m, p).rank()
    }
}

/// Modular rank with two-prime consensus over the default primes.
pub fn rank(m: &SparseIntMatrix) -> RankCertificate {
    rank_with_primes(m, &DEFAULT_PRIMES).expect("default primes are valid")
}

/// Computes ranks for the first two primes (in parallel) and, while the
/// largest rank seen has not been reported twice, keeps adding primes from
/// the rest of `primes` and then from [`FALLBACK_PRIMES`].
pub fn rank_with_primes(
    m: &SparseIntMatrix,
    primes: &[u64],
) -> Result<RankCertificate, LinalgError> {
    for &p in primes {
        check_prime(p)?;
    }
    let mut queue: Vec<u64> = Vec::new();
    for &p in primes.iter().chain(FALLBACK_PRIMES.iter()) {
        if !queue.contains(&p) {
            queue.push(p);
        }
    }
    let mut results: Vec<(u64, usize)> = Vec::new();
    if m.nnz() == 0 {
        let used: Vec<u64> = queue.iter().take(2).copied().collect();
        return Ok(RankCertificate {
            rank: 0,
            agreed: used.len() >= 2,
            primes_used: used,
            method: RankMethod::ModularConsensus,
            discrepancies: 0,
        });
    }
    let mut next = 0;
    if queue.len() >= 2 {
        let (a, b) = rayon::join(|| rank_mod_p(m, queue[0]), || rank_mod_p(m, queue[1]));
        results.push((queue[0], a));
        results.push((queue[1], b));
        next = 2;
    }
    loop {
        let best = results.iter().map(|r| r.1).max();
        if let Some(best) = best {
            if results.iter().filter(|r| r.1 == best).count() >= 2 {
                return Ok(RankCertificate {
                    rank: best,
                    primes_used: results.iter().map(|r| r.0).collect(),
                    agreed: true,
                    method: RankMethod::ModularConsensus,
                    discrepancies: results.iter().filter(|r| r.1 < best).count(),
                });
            }
        }
        if next >= queue.len() {
            let best = best.unwrap_or(0);
            return Ok(RankCertificate {
                rank: best,
                primes_used: results.iter().map(|r| r.0).collect(),
                agreed: false,
                method: RankMethod::ModularConsensus,
                discrepancies: results.iter().filter(|r| r.1 < best).count(),
            });
        }
        let p = queue[next];
        next += 1;
        results.push((p, rank_mod_p(m, p)));
    }
}

/// Exact rank over ℚ by dense fraction-free elimination.
pub fn rational_rank(m: &SparseIntMatrix) -> Result<usize, LinalgError> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows.saturating_mul(cols) > RATIONAL_RANK_LIMIT {
        return Err(LinalgError::TooLarge { rows, cols });
    }
    let mut a = vec![vec![BigInt::zero(); cols]; rows];
    for (r, c, v) in m.entries() {
        a[r][c] = BigInt::from(v);
    }
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = (&prow[c] * &row[j] - &f * &prow[j]) / &prev;
                row[j] = v;
            }
            row[c] = BigInt::zero();
        }
        prev = prow[c].abs();
        if prow[c].is_negative() {
            prev = -prev;
        }
        rank += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn random_matrix(
        rng: &mut impl Rng,
        rows: usize,
        cols: usize,
        density: f64,
    ) -> SparseIntMatrix {
        let mut e = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(density) {
                    e.push((r, c, rng.gen_range(-3..=3)));
                }
            }
        }
        SparseIntMatrix::from_triplets(rows, cols, &e)
    }

    /// Random matrix of prescribed rank: sum of `k` sparse rank-one terms.
    fn low_rank(rng: &mut impl Rng, rows: usize, cols: usize, k: usize) -> SparseIntMatrix {
        let mut e = Vec::new();
        for _ in 0..k {
            let u: Vec<i64> = (0..rows)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        rng.gen_range(-2..=2)
                    } else {
                        0
                    }
                })
                .collect();
            let v: Vec<i64> = (0..cols)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        rng.gen_range(-2..=2)
                    } else {
                        0
                    }
                })
                .collect();
            for (r, &a) in u.iter().enumerate() {
                for (c, &b) in v.iter().enumerate() {
                    if a * b != 0 {
                        e.push((r, c, a * b));
                    }
                }
            }
        }
        SparseIntMatrix::from_triplets(rows, cols, &e)
    }

    #[test]
    fn primes_are_prime() {
        for p in DEFAULT_PRIMES.iter().chain(FALLBACK_PRIMES.iter()) {
            assert!(is_prime(*p), "{p}");
        }
    }

    #[test]
    fn trivial_ranks() {
        let z = SparseIntMatrix::zeros(5, 7);
        assert_eq!(rank_mod_p(&z, DEFAULT_PRIMES[0]), 0);
        assert_eq!(rational_rank(&z).unwrap(), 0);
        let id = SparseIntMatrix::identity(9);
        assert_eq!(rank_mod_p(&id, DEFAULT_PRIMES[0]), 9);
        assert_eq!(rational_rank(&id).unwrap(), 9);
        let empty = SparseIntMatrix::zeros(4, 0);
        let cert = rank(&empty);
        assert_eq!(cert.rank, 0);
        assert!(cert.agreed);
    }

    #[test]
    fn engineered_prime_collision() {
        let p = DEFAULT_PRIMES[0];
        let m = SparseIntMatrix::from_triplets(1, 1, &[(0, 0, p as i64)]);
        assert_eq!(rank_mod_p(&m, p), 0);
        let cert = rank(&m);
        assert_eq!(cert.rank, 1);
        assert!(cert.agreed);
        assert_eq!(cert.discrepancies, 1);
        assert_eq!(cert.primes_used.len(), 3);
        assert_eq!(rational_rank(&m).unwrap(), 1);
    }

    #[test]
    fn rejects_small_or_composite_primes() {
        let m = SparseIntMatrix::identity(2);
        assert_eq!(rank_with_primes(&m, &[7]), Err(LinalgError::BadPrime(7)));
        assert_eq!(
            rank_with_primes(&m, &[2_147_483_649]),
            Err(LinalgError::BadPrime(2_147_483_649))
        );
    }

    #[test]
    fn oracle_guard() {
        let m = SparseIntMatrix::zeros(3000, 3000);
        assert!(matches!(
            rational_rank(&m),
            Err(LinalgError::TooLarge { .. })
        ));
    }

    #[test]
    fn modular_matches_rational_on_random_matrices() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let rows = rng.gen_range(1..40);
            let cols = rng.gen_range(1..40);
            let m = if rng.gen_bool(0.5) {
                let density = rng.gen_range(0.02..0.4);
                random_matrix(&mut rng, rows, cols, density)
            } else {
                let k = rng.gen_range(0..rows.min(cols) + 1);
                low_rank(&mut rng, rows, cols, k)
            };
            let q = rational_rank(&m).unwrap();
            assert_eq!(rank(&m).rank, q);
            assert_eq!(rank_mod_p(&m.transpose(), DEFAULT_PRIMES[1]), q);
        }
    }

    #[test]
    fn dense_finish_matches_rational() {
        // wide enough columns and heavy enough fill to leave the sparse phase
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for (rows, cols, k) in [(120, 90, 70), (90, 120, 90), (150, 150, 40)] {
            let m = low_rank(&mut rng, rows, cols, k);
            let q = rational_rank(&m).unwrap();
            assert_eq!(rank(&m).rank, q);
            let d = random_matrix(&mut rng, rows, cols, 0.5);
            assert_eq!(rank(&d).rank, rational_rank(&d).unwrap());
        }
    }

    #[test]
    fn rank_invariant_under_permutation() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..30 {
            let k = rng.gen_range(0..12);
            let m = low_rank(&mut rng, 30, 25, k);
            let mut rp: Vec<usize> = (0..30).collect();
            let mut cp: Vec<usize> = (0..25).collect();
            rp.shuffle(&mut rng);
            cp.shuffle(&mut rng);
            let pm = m.permuted(&rp, &cp);
            assert_eq!(rank(&pm).rank, rank(&m).rank);
            assert_eq!(rank(&m.transpose()).rank, rank(&m).rank);
        }
    }
}
