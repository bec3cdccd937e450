//! Partition combinatorics: Frobenius coordinates, hook lengths,
//! Littlewood–Richardson coefficients, the families `Q(m)` and oyster
//! partitions, and labelled partitions counting the canonical basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{binomial, BinomialPolynomial};
use crate::ring::RingPresentation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing and positive")]
    NotPartition(Vec<usize>),
    #[error("Frobenius coordinates ({a:?} | {b:?}) define no partition")]
    BadFrobenius { a: Vec<usize>, b: Vec<usize> },
}

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts and sorts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Number of diagonal boxes.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &p)| p > i).count()
    }

    /// `(arm, leg)` of the box in row `i`, column `j` (0-based).
    pub fn arm_leg(&self, i: usize, j: usize) -> (usize, usize) {
        let conj_j = self.0.iter().filter(|&&p| p > j).count();
        (self.0[i] - j - 1, conj_j - i - 1)
    }

    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j - 1 + conj.0[j] - i - 1 + 1);
            }
        }
        out
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let r = self.rank();
        FrobeniusCoords {
            a: (0..r).map(|i| self.0[i] - i).collect(),
            b: (0..r).map(|i| conj.0[i] - i).collect(),
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(a | b)`: row `i` has length `a_i + i − 1` and column `i` has length
/// `b_i + i − 1` (1-based `i`), so `a_i` is the arm plus one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn size(&self) -> usize {
        self.a.iter().zip(&self.b).map(|(a, b)| a + b - 1).sum()
    }

    pub fn to_partition(&self) -> Result<Partition, PartitionError> {
        let bad = || PartitionError::BadFrobenius {
            a: self.a.clone(),
            b: self.b.clone(),
        };
        let k = self.a.len();
        if self.b.len() != k
            || self.a.contains(&0)
            || self.b.contains(&0)
            || self.a.windows(2).any(|w| w[0] <= w[1])
            || self.b.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(bad());
        }
        let mut parts: Vec<usize> = (0..k).map(|i| self.a[i] + i).collect();
        let depth = self.b.first().map_or(0, |&b| b);
        for row in k..depth {
            parts.push((0..k).filter(|&i| self.b[i] + i > row).count());
        }
        let lambda = Partition::new(parts).map_err(|_| bad())?;
        if lambda.frobenius() != *self {
            return Err(bad());
        }
        Ok(lambda)
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({} | {})", join(&self.a), join(&self.b))
    }
}

/// All partitions of `n`, reverse lexicographic.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// `dim V_λ = N!/∏ hooks`.
pub fn hook_dim(lambda: &Partition) -> u64 {
    let hooks = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::from(1u32), |acc, h| acc * h);
    (factorial(lambda.size()) / hooks)
        .to_u64()
        .expect("dimension fits in 64 bits")
}

/// `s_λ(1^n) = ∏ (n + content)/hook`; zero when λ has more than `n` rows.
pub fn schur_eval_ones(lambda: &Partition, n: usize) -> u64 {
    if lambda.len() > n {
        return 0;
    }
    let mut num = BigUint::from(1u32);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            num *= (n + j - i) as u64;
        }
    }
    let den = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::from(1u32), |acc, h| acc * h);
    (num / den).to_u64().expect("dimension fits in 64 bits")
}

/// `dim C_λ([n]) = C(n,k)·dim V_λ` for `λ ⊢ k` (meaningful for `λ_1 > 1`).
pub fn dim_c(lambda: &Partition, n: usize) -> u64 {
    binomial(n as u64, lambda.size() as u64) * hook_dim(lambda)
}

/// `dim D_k([n]) = C(n−1, k−1)`; `D_0` is one-dimensional at `n = 0` only.
pub fn dim_d(k: usize, n: usize) -> u64 {
    match (k, n) {
        (0, 0) => 1,
        (0, _) | (_, 0) => 0,
        _ => binomial(n as u64 - 1, k as u64 - 1),
    }
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^λ_{μν}`: Littlewood–Richardson tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&c) = lr_cache().lock().unwrap().get(&key) {
        return c;
    }
    let c = lr_count(lambda, mu, nu);
    lr_cache().lock().unwrap().insert(key, c);
    c
}

fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // boxes in reading order: rows top to bottom, each right to left
    let boxes: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i)..lambda.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut fill: Vec<Vec<usize>> = lambda.parts().iter().map(|&r| vec![0; r]).collect();
    let mut counts = vec![0usize; nu.len() + 1];
    fn rec(
        k: usize,
        boxes: &[(usize, usize)],
        mu: &Partition,
        lambda: &Partition,
        nu: &Partition,
        fill: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(i, j)) = boxes.get(k) else {
            return 1;
        };
        // weakly increasing along rows: bounded by the right neighbour
        let hi = if j + 1 < lambda.part(i) {
            fill[i][j + 1]
        } else {
            nu.len()
        };
        // strictly increasing down columns
        let lo = if i > 0 && j >= mu.part(i - 1) {
            fill[i - 1][j] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi.min(nu.len()) {
            if counts[v] >= nu.part(v - 1) {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            fill[i][j] = v;
            total += rec(k + 1, boxes, mu, lambda, nu, fill, counts);
            counts[v] -= 1;
        }
        fill[i][j] = 0;
        total
    }
    rec(0, &boxes, mu, lambda, nu, &mut fill, &mut counts)
}

/// Partitions whose diagonal boxes all have arm = leg + 1; odd `m` gives none.
pub fn enumerate_q(m: usize) -> Vec<Partition> {
    partitions_of(m).into_iter().filter(in_q).collect()
}

fn in_q(lambda: &Partition) -> bool {
    let f = lambda.frobenius();
    f.a.iter().zip(&f.b).all(|(a, b)| *a == b + 1)
}

/// `k`-core: exactly `k` rows, and removing the first column leaves a
/// member of `Q`.
pub fn is_core(lambda: &Partition, k: usize) -> bool {
    lambda.len() == k
        && in_q(&Partition::from_unsorted(
            lambda.parts().iter().map(|p| p - 1).collect(),
        ))
}

/// `(k,a)`-oyster: the first `a` diagonal hooks form a shell with
/// arm = leg + 3 and `b_a > k`, and what remains after deleting the first
/// `a` rows and columns is a `k`-core.
pub fn is_oyster(lambda: &Partition, k: usize, a: usize) -> bool {
    let f = lambda.frobenius();
    if f.a.len() < a {
        return false;
    }
    let shell_ok = (0..a).all(|i| f.a[i] == f.b[i] + 3) && (a == 0 || f.b[a - 1] > k);
    if !shell_ok {
        return false;
    }
    let core = Partition::from_unsorted(
        lambda
            .parts()
            .iter()
            .skip(a)
            .map(|&p| p.saturating_sub(a))
            .collect(),
    );
    is_core(&core, k)
}

pub fn enumerate_oyster(k: usize, a: usize, n: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|l| is_oyster(l, k, a))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OysterTerm {
    pub k: usize,
    pub a: usize,
    pub partition: Partition,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OysterBound {
    pub terms: Vec<OysterTerm>,
    /// `Σ dim V_λ·(k+1)`, a lower bound for `dim gr^{p+2q} H^{p,q}` at `r = p+2q`.
    pub dim_at_r: u64,
    /// The same number as the coefficient of `C(n, p+2q)`.
    pub as_polynomial: BinomialPolynomial,
}

pub fn oyster_lower_bound(p: usize, q: usize) -> OysterBound {
    let n = p + 2 * q;
    let mut terms = Vec::new();
    for a in 0..=p / 2 {
        let k = p - 2 * a;
        for lambda in enumerate_oyster(k, a, n) {
            let dim = hook_dim(&lambda);
            terms.push(OysterTerm {
                k,
                a,
                partition: lambda,
                dim,
            });
        }
    }
    let dim_at_r = terms.iter().map(|t| t.dim * (t.k as u64 + 1)).sum();
    OysterBound {
        terms,
        dim_at_r,
        as_polynomial: BinomialPolynomial::term(n, dim_at_r as i64),
    }
}

/// Blocks `(size, label)` with labels indexing a ring basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelledPartition {
    pub blocks: Vec<(usize, usize)>,
}

impl LabelledPartition {
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.0).sum()
    }

    pub fn p(&self, ring: &RingPresentation) -> u32 {
        self.blocks.iter().map(|&(_, l)| ring.degree(l)).sum()
    }

    pub fn q(&self) -> usize {
        self.n() - self.blocks.len()
    }

    /// Singletons labelled by the unit.
    pub fn f(&self, ring: &RingPresentation) -> usize {
        self.blocks
            .iter()
            .filter(|&&(s, l)| s == 1 && l == ring.unit())
            .count()
    }

    pub fn weight(&self, ring: &RingPresentation) -> i32 {
        self.blocks.iter().map(|&(_, l)| ring.weight(l)).sum()
    }

    /// `|Z(λ)| = ∏ sizes · ∏ m!` over multiplicities of identical blocks.
    pub fn centralizer_order(&self) -> u64 {
        let mut mult: HashMap<(usize, usize), u64> = HashMap::new();
        for b in &self.blocks {
            *mult.entry(*b).or_insert(0) += 1;
        }
        let sizes: u64 = self.blocks.iter().map(|b| b.0 as u64).product();
        let facts: u64 = mult.values().map(|&m| (1..=m).product::<u64>()).product();
        sizes * facts
    }
}

/// Labelled partitions of `n`, blocks in non-increasing `(size, label)` order.
pub fn labelled_partitions(ring: &RingPresentation, n: usize) -> Vec<LabelledPartition> {
    fn rec(
        left: usize,
        max: (usize, usize),
        labels: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<LabelledPartition>,
    ) {
        if left == 0 {
            out.push(LabelledPartition {
                blocks: cur.clone(),
            });
            return;
        }
        for s in (1..=left.min(max.0)).rev() {
            let top = if s == max.0 { max.1 } else { labels - 1 };
            for l in (0..=top).rev() {
                cur.push((s, l));
                rec(left - s, (s, l), labels, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if ring.is_empty() {
        return out;
    }
    rec(
        n,
        (n, ring.len() - 1),
        ring.len(),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Which labelled partitions [`labelled_partition_dim`] counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LabelFilter {
    pub weight: Option<i32>,
    /// Only `f(λ) = 0`.
    pub full_support: bool,
}

/// `Σ n!/|Z(λ)|` over labelled partitions of `n` with the given `p`, `q`.
pub fn labelled_partition_dim(
    ring: &RingPresentation,
    n: usize,
    p: u32,
    q: usize,
    filter: LabelFilter,
) -> u64 {
    let nfact: u64 = (1..=n as u64).product();
    labelled_partitions(ring, n)
        .into_iter()
        .filter(|l| l.q() == q && l.p(ring) == p)
        .filter(|l| !filter.full_support || l.f(ring) == 0)
        .filter(|l| filter.weight.is_none_or(|w| l.weight(ring) == w))
        .map(|l| nfact / l.centralizer_order())
        .sum()
}

/// Weight-`w` part of `gr^{p+2q} E^{p,q}(C, p+2q)` as an `S_{p+2q}`
/// representation: `Σ_{λ ∈ Q(2q)} Σ_ν c^ν_{(1^{p−b}),(1^b)} Σ_μ c^μ_{λν} dim V_μ`
/// with `b = (p − w)/2` odd labels of weight −1.
pub fn top_graded_dim_weight(p: usize, q: usize, w: i32) -> u64 {
    if (p as i32 - w) % 2 != 0 || w.unsigned_abs() as usize > p {
        return 0;
    }
    let b = (p as i32 - w) as usize / 2;
    let (ones, twos) = (Partition::column(p - b), Partition::column(b));
    let labels: Vec<(Partition, u64)> = partitions_of(p)
        .into_iter()
        .map(|nu| {
            let c = lr_coefficient(&nu, &ones, &twos);
            (nu, c)
        })
        .filter(|e| e.1 > 0)
        .collect();
    let mut total = 0;
    for lambda in enumerate_q(2 * q) {
        for (nu, c) in &labels {
            for mu in partitions_of(p + 2 * q) {
                let m = lr_coefficient(&mu, &lambda, nu);
                if m > 0 {
                    total += c * m * hook_dim(&mu);
                }
            }
        }
    }
    total
}

/// `dim gr^{p+2q} E^{p,q}(C, p+2q)` summed over weights.
pub fn top_graded_dim(p: usize, q: usize) -> u64 {
    (-(p as i32)..=p as i32)
        .map(|w| top_graded_dim_weight(p, q, w))
        .sum()
}

/// `(2q−1)!!·C(p+2q, p)·2^p`: singletons carry one odd label each, the
/// remaining points are matched by the edges.
pub fn top_graded_dim_closed_form(p: usize, q: usize) -> u64 {
    let dfact: u64 = (1..=q as u64).map(|i| 2 * i - 1).product();
    dfact * binomial((p + 2 * q) as u64, p as u64) * (1u64 << p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hook_dims() {
        assert_eq!(hook_dim(&part(&[3, 1])), 3);
        assert_eq!(hook_dim(&part(&[2, 1, 1])), 3);
        assert_eq!(hook_dim(&part(&[5])), 1);
        assert_eq!(hook_dim(&Partition::empty()), 1);
        // (2^a, 1^k) has dimension (k+1)/(a+k+1)·C(2a+k, a)
        for a in 1..4usize {
            for k in 0..4usize {
                let mut parts = vec![2; a];
                parts.extend(vec![1; k]);
                let expect =
                    (k as u64 + 1) * binomial((2 * a + k) as u64, a as u64) / (a + k + 1) as u64;
                assert_eq!(hook_dim(&part(&parts)), expect, "a={a} k={k}");
            }
        }
    }

    #[test]
    fn schur_at_ones() {
        assert_eq!(schur_eval_ones(&part(&[1]), 7), 7);
        assert_eq!(schur_eval_ones(&part(&[1, 1]), 3), 3);
        assert_eq!(schur_eval_ones(&part(&[2]), 3), 6);
        assert_eq!(schur_eval_ones(&part(&[1, 1, 1]), 2), 0);
    }

    #[test]
    fn c_and_d_dims() {
        assert_eq!(dim_c(&part(&[2]), 3), 3);
        assert_eq!(dim_d(1, 5), 1);
        for n in 1..10u64 {
            let h2 = binomial(n, 2) as i64 - n as i64 + 1;
            assert_eq!(dim_d(3, n as usize) as i64, h2);
        }
        assert_eq!(dim_d(0, 0), 1);
        assert_eq!(dim_d(0, 3), 0);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(
            lr_coefficient(&part(&[6, 5, 5]), &part(&[4, 4, 4]), &part(&[2, 1, 1])),
            1
        );
        let l = part(&[3, 2, 1]);
        assert_eq!(lr_coefficient(&l, &l, &Partition::empty()), 1);
        let pieri: u64 = partitions_of(2)
            .iter()
            .map(|la| lr_coefficient(la, &part(&[1]), &part(&[1])) * hook_dim(la))
            .sum();
        assert_eq!(pieri, 2);
        assert_eq!(
            lr_coefficient(&part(&[3, 2, 1]), &part(&[2, 1]), &part(&[2, 1])),
            2
        );
    }

    #[test]
    fn frobenius_examples() {
        let f = FrobeniusCoords {
            a: vec![3, 2],
            b: vec![2, 1],
        };
        assert_eq!(f.to_partition().unwrap(), part(&[3, 3]));
        assert_eq!(
            part(&[4, 1, 1]).frobenius(),
            FrobeniusCoords {
                a: vec![4],
                b: vec![3]
            }
        );
        assert!(FrobeniusCoords {
            a: vec![2],
            b: vec![0]
        }
        .to_partition()
        .is_err());
        assert!(FrobeniusCoords {
            a: vec![2, 2],
            b: vec![2, 1]
        }
        .to_partition()
        .is_err());
    }

    #[test]
    fn q_family() {
        assert_eq!(enumerate_q(2), vec![part(&[2])]);
        assert_eq!(enumerate_q(6), vec![part(&[4, 1, 1]), part(&[3, 3])]);
        assert!(enumerate_q(5).is_empty());
        assert_eq!(enumerate_q(0), vec![Partition::empty()]);
    }

    #[test]
    fn oysters() {
        assert!(enumerate_oyster(2, 1, 16).contains(&part(&[6, 5, 5])));
        for q in 1..6 {
            let mut hook = vec![q + 3];
            hook.extend(vec![1; q - 1]);
            assert!(
                enumerate_oyster(0, 1, 2 * q + 2).contains(&part(&hook)),
                "q={q}"
            );
        }
        for n in 0..10 {
            let cores: Vec<Partition> = partitions_of(n)
                .into_iter()
                .filter(|l| is_core(l, 2))
                .collect();
            assert_eq!(enumerate_oyster(2, 0, n), cores);
        }
        assert!(enumerate_oyster(3, 2, 5).is_empty());
    }

    #[test]
    fn oyster_bounds() {
        assert_eq!(oyster_lower_bound(1, 1).dim_at_r, 2);
        assert_eq!(oyster_lower_bound(2, 1).dim_at_r, 10);
        assert_eq!(oyster_lower_bound(2, 2).dim_at_r, 32);
        let b = oyster_lower_bound(2, 3);
        assert_eq!(b.dim_at_r, 63);
        let parts: Vec<&Partition> = b.terms.iter().map(|t| &t.partition).collect();
        assert_eq!(parts, vec![&part(&[4, 4]), &part(&[6, 1, 1])]);
        assert_eq!(b.as_polynomial, BinomialPolynomial::term(8, 63));
        for q in 1..7 {
            assert!(oyster_lower_bound(2, q).dim_at_r >= binomial(2 * q as u64 + 1, q as u64 - 1));
        }
    }

    #[test]
    fn labelled_partition_examples() {
        let e = RingPresentation::elliptic_curve();
        assert_eq!(
            labelled_partition_dim(&e, 2, 0, 1, LabelFilter::default()),
            1
        );
        assert_eq!(
            labelled_partition_dim(&e, 2, 2, 0, LabelFilter::default()),
            6
        );
        let total: u64 = (0..4)
            .flat_map(|q| (0..=8).map(move |p| (p, q)))
            .map(|(p, q)| labelled_partition_dim(&e, 4, p, q, LabelFilter::default()))
            .sum();
        assert_eq!(total, 4 * 5 * 6 * 7);
    }

    #[test]
    fn top_graded() {
        for q in 0..5 {
            let dfact: u64 = (1..=q as u64).map(|i| 2 * i - 1).product();
            assert_eq!(top_graded_dim(0, q), dfact);
        }
        assert_eq!(top_graded_dim(1, 1), 6);
        for p in 0..4 {
            for q in 0..4 {
                assert_eq!(
                    top_graded_dim(p, q),
                    top_graded_dim_closed_form(p, q),
                    "p={p} q={q}"
                );
            }
        }
    }
}
