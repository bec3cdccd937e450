//! The Kriz model `E(X,n)` in its monotone-forest basis.
//!
//! A basis monomial is a product `G_{a_1 b_1} ⋯ G_{a_q b_q} · ℓ_{r_1} ⋯ ℓ_{r_m}`
//! where `a_k < b_k`, the `b_k` are distinct and increasing, and the labels
//! `ℓ` are ring basis elements sitting on the roots (minima) of the trees of
//! the forest `b_k ↦ a_k`. Unit labels are implicit.
//!
//! Vertices are 0-based in the API and 1-based in the text dump.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::linalg::SparseIntMatrix;
use crate::ring::{Rational, RingPresentation};

/// Largest ambient index count a [`Monomial`] can hold.
pub const MAX_POINTS: usize = 14;
const NO_LABEL: u8 = u8::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KrizError {
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("n = {0} exceeds the supported maximum of {MAX_POINTS}")]
    TooManyPoints(usize),
    #[error("G({0},{0}) is not a generator")]
    Loop(usize),
    #[error("edges do not form a monotone forest")]
    NotCanonical,
    #[error("basis element {0} does not exist in the ring")]
    UnknownLabel(usize),
}

/// A canonical basis monomial of `E(X,n)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: u8,
    /// `parent[v] == v` marks a root.
    parent: [u8; MAX_POINTS],
    /// Ring basis index at roots, `NO_LABEL` for the unit and at non-roots.
    label: [u8; MAX_POINTS],
}

/// A generator in a raw product handed to [`canonicalize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `G_{i,j}` for any `i ≠ j`; `G_{i,j} = G_{j,i}` without sign.
    G(usize, usize),
    /// Ring basis element `b` placed on index `i`.
    Label(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DifferentialMode {
    Full,
    /// The differential of the support-graded model: terms that lower the
    /// filtration level are dropped.
    Graded,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BasisFilter {
    pub weight: Option<i32>,
    /// Keep only monomials of filtration level `n`, spanning `E(X,n)/F_{n-1}`.
    pub full_support: bool,
}

impl BasisFilter {
    pub fn weight(w: i32) -> Self {
        BasisFilter {
            weight: Some(w),
            full_support: false,
        }
    }

    pub fn full_support() -> Self {
        BasisFilter {
            weight: None,
            full_support: true,
        }
    }
}

impl Monomial {
    /// The monomial `1` of `E(X,n)`.
    pub fn one(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        let mut parent = [0u8; MAX_POINTS];
        for (v, p) in parent.iter_mut().enumerate() {
            *p = v as u8;
        }
        Monomial {
            n: n as u8,
            parent,
            label: [NO_LABEL; MAX_POINTS],
        }
    }

    /// Builds a monomial from a monotone forest and root labels, rejecting
    /// anything that is not already canonical.
    pub fn from_parts(
        ring: &RingPresentation,
        n: usize,
        edges: &[(usize, usize)],
        labels: &[(usize, usize)],
    ) -> Result<Self, KrizError> {
        if n > MAX_POINTS {
            return Err(KrizError::TooManyPoints(n));
        }
        let mut m = Monomial::one(n);
        let mut last = None;
        for &(a, b) in edges {
            if b >= n {
                return Err(KrizError::IndexOutOfRange { index: b, n });
            }
            if a >= b || last.is_some_and(|l| l >= b) {
                return Err(KrizError::NotCanonical);
            }
            last = Some(b);
            m.parent[b] = a as u8;
        }
        for &(v, l) in labels {
            if v >= n {
                return Err(KrizError::IndexOutOfRange { index: v, n });
            }
            if l >= ring.len() {
                return Err(KrizError::UnknownLabel(l));
            }
            if !m.is_root(v) || m.label[v] != NO_LABEL {
                return Err(KrizError::NotCanonical);
            }
            if l != ring.unit() {
                m.label[v] = l as u8;
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v] as usize == v
    }

    /// Edges `(a, b)` with `a < b`, ordered by `b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n())
            .filter(|&v| !self.is_root(v))
            .map(|v| (self.parent[v] as usize, v))
    }

    /// Non-unit labels `(root, basis index)` ordered by root.
    pub fn labels(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n())
            .filter(|&v| self.label[v] != NO_LABEL)
            .map(|v| (v, self.label[v] as usize))
    }

    /// Label of a root, or `None` for the unit.
    pub fn label_at(&self, v: usize) -> Option<usize> {
        (self.label[v] != NO_LABEL).then_some(self.label[v] as usize)
    }

    /// Number of `G` factors.
    pub fn q(&self) -> usize {
        self.edges().count()
    }

    /// Cohomological degree of the labels.
    pub fn p(&self, ring: &RingPresentation) -> u32 {
        self.labels().map(|(_, l)| ring.degree(l)).sum()
    }

    pub fn weight(&self, ring: &RingPresentation) -> i32 {
        self.labels().map(|(_, l)| ring.weight(l)).sum()
    }

    /// Number of indices that are not unlabeled singletons: the smallest `k`
    /// with the monomial in `F_k E(X,n)`.
    pub fn level(&self) -> usize {
        let mut has_child = [false; MAX_POINTS];
        for (a, _) in self.edges() {
            has_child[a] = true;
        }
        let free = (0..self.n())
            .filter(|&v| self.is_root(v) && self.label[v] == NO_LABEL && !has_child[v])
            .count();
        self.n() - free
    }

    /// Raw factor list `G`'s first (by second index), then labels by root.
    pub fn factors(&self) -> Vec<Factor> {
        self.edges()
            .map(|(a, b)| Factor::G(a, b))
            .chain(self.labels().map(|(v, l)| Factor::Label(v, l)))
            .collect()
    }

    /// Text form such as `G(1,2)G(1,3) x@1 y@4`.
    pub fn display(&self, ring: &RingPresentation) -> String {
        let mut s = String::new();
        for (a, b) in self.edges() {
            let _ = write!(s, "G({},{})", a + 1, b + 1);
        }
        for (v, l) in self.labels() {
            if !s.is_empty() {
                s.push(' ');
            }
            let _ = write!(s, "{}@{}", ring.basis()[l].name, v + 1);
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<_> = self.edges().map(|(a, b)| (a + 1, b + 1)).collect();
        let labels: Vec<_> = self.labels().map(|(v, l)| (v + 1, l)).collect();
        write!(f, "Monomial(n={}, G={edges:?}, labels={labels:?})", self.n)
    }
}

impl Ord for Monomial {
    /// Lexicographic on the edge list, then on the `(root, label)` list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.edges().cmp(other.edges()))
            .then_with(|| self.labels().cmp(other.labels()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A rational linear combination of monomials of one `E(X,n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Element {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut e = Element::zero(m.n());
        e.terms.insert(m, Rational::one());
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).copied().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&mut self, other: &Element, scale: Rational) {
        for (m, c) in &other.terms {
            self.add_term(*m, *c * scale);
        }
    }

    pub fn scaled(&self, c: Rational) -> Element {
        let mut e = Element::zero(self.n);
        e.add(self, c);
        e
    }

    /// Text form like `-1 * G(1,2)G(1,3) x@1 y@4 + 1 * y@2`.
    pub fn display(&self, ring: &RingPresentation) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{c} * {}", m.display(ring)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn sign_of(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Product of an ordered list of generators, expressed in the canonical basis.
///
/// `G`'s are moved in front of the labels, sorted by second then first index
/// (each swap of odd factors costs a sign), straightened with the three-term
/// relation, and then labels slide to the roots of their trees and multiply.
pub fn canonicalize(
    ring: &RingPresentation,
    n: usize,
    factors: &[Factor],
) -> Result<Element, KrizError> {
    if n > MAX_POINTS {
        return Err(KrizError::TooManyPoints(n));
    }
    let g_odd = (ring.top_degree() - 1) % 2 == 1;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut odd = false;
    let mut label_parity = false;
    for f in factors {
        match *f {
            Factor::G(i, j) => {
                for idx in [i, j] {
                    if idx >= n {
                        return Err(KrizError::IndexOutOfRange { index: idx, n });
                    }
                }
                if i == j {
                    return Err(KrizError::Loop(i + 1));
                }
                if g_odd && label_parity {
                    odd = !odd;
                }
                edges.push((i.min(j) as u8, i.max(j) as u8));
            }
            Factor::Label(i, b) => {
                if i >= n {
                    return Err(KrizError::IndexOutOfRange { index: i, n });
                }
                if b >= ring.len() {
                    return Err(KrizError::UnknownLabel(b));
                }
                if ring.degree(b) % 2 == 1 {
                    label_parity = !label_parity;
                }
                if b != ring.unit() {
                    labels.push((i as u8, b));
                }
            }
        }
    }
    let mut forests = Vec::new();
    straighten(edges, sign_of(odd), g_odd, &mut forests);
    let mut out = Element::zero(n);
    for (forest, c) in forests {
        let mut parent = Monomial::one(n).parent;
        for (a, b) in forest {
            parent[b as usize] = a;
        }
        assemble(ring, n, &parent, &labels, c, &mut |m, c| out.add_term(m, c));
    }
    Ok(out)
}

/// Rewrites a product of `G`'s into monotone forests.
fn straighten(
    mut edges: Vec<(u8, u8)>,
    coeff: Rational,
    odd: bool,
    out: &mut Vec<(Vec<(u8, u8)>, Rational)>,
) {
    // insertion sort by (second, first), tracking the permutation sign
    let mut flips = false;
    for i in 1..edges.len() {
        let mut j = i;
        while j > 0 && (edges[j - 1].1, edges[j - 1].0) > (edges[j].1, edges[j].0) {
            edges.swap(j - 1, j);
            flips ^= odd;
            j -= 1;
        }
    }
    let coeff = if flips { -coeff } else { coeff };
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return;
    }
    match edges.windows(2).position(|w| w[0].1 == w[1].1) {
        None => out.push((edges, coeff)),
        Some(t) => {
            // G_{ik} G_{jk} = -G_{ij} G_{ik} + G_{ij} G_{jk}   (i < j < k)
            let (i, k) = edges[t];
            let j = edges[t + 1].0;
            let mut first = edges.clone();
            first[t] = (i, j);
            first[t + 1] = (i, k);
            straighten(first, -coeff, odd, out);
            let mut second = edges;
            second[t] = (i, j);
            second[t + 1] = (j, k);
            straighten(second, coeff, odd, out);
        }
    }
}

/// Slides labels to their roots and multiplies collisions, given a forest.
fn assemble(
    ring: &RingPresentation,
    n: usize,
    parent: &[u8; MAX_POINTS],
    labels: &[(u8, usize)],
    coeff: Rational,
    sink: &mut impl FnMut(Monomial, Rational),
) {
    let mut root = [0u8; MAX_POINTS];
    for v in 0..n {
        root[v] = if parent[v] as usize == v {
            v as u8
        } else {
            root[parent[v] as usize]
        };
    }
    let mut slid: Vec<(u8, usize)> = labels.iter().map(|&(v, b)| (root[v as usize], b)).collect();
    let mut odd = false;
    for i in 1..slid.len() {
        let mut j = i;
        while j > 0 && slid[j - 1].0 > slid[j].0 {
            if ring.degree(slid[j - 1].1) % 2 == 1 && ring.degree(slid[j].1) % 2 == 1 {
                odd = !odd;
            }
            slid.swap(j - 1, j);
            j -= 1;
        }
    }
    let coeff = if odd { -coeff } else { coeff };

    // per-root products, each a combination of basis elements
    let mut per_root: Vec<(u8, Vec<(usize, Rational)>)> = Vec::new();
    for &(r, b) in &slid {
        match per_root.last_mut() {
            Some((lr, comb)) if *lr == r => {
                *comb = ring.mul_comb(comb, &[(b, Rational::one())]);
                if comb.is_empty() {
                    return;
                }
            }
            _ => per_root.push((r, vec![(b, Rational::one())])),
        }
    }

    let mut base = Monomial {
        n: n as u8,
        parent: *parent,
        label: [NO_LABEL; MAX_POINTS],
    };
    expand_labels(ring, &per_root, 0, &mut base, coeff, sink);
}

fn expand_labels(
    ring: &RingPresentation,
    per_root: &[(u8, Vec<(usize, Rational)>)],
    idx: usize,
    m: &mut Monomial,
    coeff: Rational,
    sink: &mut impl FnMut(Monomial, Rational),
) {
    if idx == per_root.len() {
        sink(*m, coeff);
        return;
    }
    let (r, comb) = &per_root[idx];
    for &(b, c) in comb {
        m.label[*r as usize] = if b == ring.unit() { NO_LABEL } else { b as u8 };
        expand_labels(ring, per_root, idx + 1, m, coeff * c, sink);
    }
    m.label[*r as usize] = NO_LABEL;
}

/// Product in the dga.
pub fn multiply(ring: &RingPresentation, e1: &Element, e2: &Element) -> Result<Element, KrizError> {
    if e1.n != e2.n {
        return Err(KrizError::AmbientMismatch(e1.n, e2.n));
    }
    let mut out = Element::zero(e1.n);
    for (m1, c1) in &e1.terms {
        for (m2, c2) in &e2.terms {
            let mut f = m1.factors();
            f.extend(m2.factors());
            out.add(&canonicalize(ring, e1.n, &f)?, *c1 * *c2);
        }
    }
    Ok(out)
}

/// Differential of a basis monomial, by the Leibniz rule over its edges.
pub fn differential(ring: &RingPresentation, m: &Monomial, mode: DifferentialMode) -> Element {
    let mut out = Element::zero(m.n());
    differential_into(ring, m, mode, &mut |t, c| out.add_term(t, c));
    out
}

fn differential_into(
    ring: &RingPresentation,
    m: &Monomial,
    mode: DifferentialMode,
    sink: &mut impl FnMut(Monomial, Rational),
) {
    let diag = ring.diagonal();
    let n = m.n();
    let level = m.level();
    let g_odd = (ring.top_degree() - 1) % 2 == 1;
    let root_labels: Vec<(u8, usize)> = m.labels().map(|(v, l)| (v as u8, l)).collect();
    let mut labels = Vec::with_capacity(root_labels.len() + 2);
    for (k, (a, b)) in m.edges().enumerate() {
        let mut parent = m.parent;
        parent[b] = b as u8;
        let sign = sign_of(g_odd && k % 2 == 1);
        for t in &diag.terms {
            labels.clear();
            if t.left != ring.unit() {
                labels.push((a as u8, t.left));
            }
            if t.right != ring.unit() {
                labels.push((b as u8, t.right));
            }
            labels.extend_from_slice(&root_labels);
            assemble(ring, n, &parent, &labels, sign * t.coeff, &mut |mono, c| {
                if mode == DifferentialMode::Full || mono.level() == level {
                    sink(mono, c)
                }
            });
        }
    }
}

/// `f_*` for a map `f: [n] → [target_n]` given as its table of values.
pub fn apply_map(
    ring: &RingPresentation,
    f: &[usize],
    target_n: usize,
    m: &Monomial,
) -> Result<Element, KrizError> {
    if f.len() != m.n() {
        return Err(KrizError::AmbientMismatch(f.len(), m.n()));
    }
    let mut factors = Vec::new();
    for (a, b) in m.edges() {
        if f[a] == f[b] {
            return Ok(Element::zero(target_n));
        }
        factors.push(Factor::G(f[a], f[b]));
    }
    factors.extend(m.labels().map(|(v, l)| Factor::Label(f[v], l)));
    canonicalize(ring, target_n, &factors)
}

/// Extends [`apply_map`] linearly.
pub fn apply_map_element(
    ring: &RingPresentation,
    f: &[usize],
    target_n: usize,
    e: &Element,
) -> Result<Element, KrizError> {
    let mut out = Element::zero(target_n);
    for (m, c) in &e.terms {
        out.add(&apply_map(ring, f, target_n, m)?, *c);
    }
    Ok(out)
}

/// Extends [`differential`] linearly.
pub fn differential_element(
    ring: &RingPresentation,
    e: &Element,
    mode: DifferentialMode,
) -> Element {
    let mut out = Element::zero(e.n);
    for (m, c) in &e.terms {
        out.add(&differential(ring, m, mode), *c);
    }
    out
}

/// All monotone forests on `n` vertices with exactly `q` edges, as parent arrays.
fn forests(n: usize, q: usize) -> Vec<[u8; MAX_POINTS]> {
    fn rec(
        v: usize,
        n: usize,
        left: usize,
        parent: &mut [u8; MAX_POINTS],
        out: &mut Vec<[u8; MAX_POINTS]>,
    ) {
        if v == n {
            if left == 0 {
                out.push(*parent);
            }
            return;
        }
        // remaining vertices v..n can still host `left` edges
        if left > n - v {
            return;
        }
        parent[v] = v as u8;
        rec(v + 1, n, left, parent, out);
        if left > 0 {
            for a in 0..v {
                parent[v] = a as u8;
                rec(v + 1, n, left - 1, parent, out);
            }
            parent[v] = v as u8;
        }
    }
    let mut out = Vec::new();
    let mut parent = Monomial::one(n).parent;
    rec(0, n, q, &mut parent, &mut out);
    out
}

/// Deterministically ordered canonical basis of `E^{p,q}(X,n)` under a filter.
pub fn build_basis(
    ring: &RingPresentation,
    n: usize,
    p: u32,
    q: usize,
    filter: BasisFilter,
) -> Vec<Monomial> {
    assert!(n <= MAX_POINTS, "n = {n} exceeds {MAX_POINTS}");
    if n == 0 {
        return if p == 0 && q == 0 && filter.weight.unwrap_or(0) == 0 {
            vec![Monomial::one(0)]
        } else {
            Vec::new()
        };
    }
    if q >= n {
        return Vec::new();
    }
    let by_degree: Vec<Vec<usize>> = (0..=ring.top_degree())
        .map(|d| (0..ring.len()).filter(|&i| ring.degree(i) == d).collect())
        .collect();
    let mut out: Vec<Monomial> = forests(n, q)
        .into_par_iter()
        .flat_map_iter(|parent| {
            let mut base = Monomial {
                n: n as u8,
                parent,
                label: [NO_LABEL; MAX_POINTS],
            };
            let mut has_child = [false; MAX_POINTS];
            for v in 0..n {
                if parent[v] as usize != v {
                    has_child[parent[v] as usize] = true;
                }
            }
            let roots: Vec<(usize, bool)> = (0..n)
                .filter(|&v| parent[v] as usize == v)
                .map(|v| (v, filter.full_support && !has_child[v]))
                .collect();
            let mut found = Vec::new();
            label_roots(
                ring,
                &by_degree,
                &roots,
                0,
                p,
                0,
                filter.weight,
                &mut base,
                &mut found,
            );
            found
        })
        .collect();
    out.sort_unstable();
    out
}

#[allow(clippy::too_many_arguments)]
fn label_roots(
    ring: &RingPresentation,
    by_degree: &[Vec<usize>],
    roots: &[(usize, bool)],
    idx: usize,
    p_left: u32,
    weight: i32,
    target_weight: Option<i32>,
    m: &mut Monomial,
    out: &mut Vec<Monomial>,
) {
    if idx == roots.len() {
        if p_left == 0 && target_weight.is_none_or(|w| w == weight) {
            out.push(*m);
        }
        return;
    }
    let (v, must_label) = roots[idx];
    for d in 0..=p_left.min(ring.top_degree()) {
        for &b in &by_degree[d as usize] {
            let is_unit = b == ring.unit();
            if is_unit && must_label {
                continue;
            }
            m.label[v] = if is_unit { NO_LABEL } else { b as u8 };
            label_roots(
                ring,
                by_degree,
                roots,
                idx + 1,
                p_left - d,
                weight + ring.weight(b),
                target_weight,
                m,
                out,
            );
        }
    }
    m.label[v] = NO_LABEL;
}

/// Clears denominators of one column.
fn integral_column(terms: &[(u32, Rational)]) -> Vec<(u32, i64)> {
    let lcm = terms.iter().fold(1i64, |acc, (_, c)| acc.lcm(c.denom()));
    terms
        .iter()
        .map(|&(r, c)| (r, (c * Rational::from_integer(lcm)).to_integer()))
        .collect()
}

/// Matrix of `d: E^{p,q} → E^{p + top, q - 1}` between two explicit bases.
/// Terms outside the target basis must be exactly those dropped by the
/// quotient (level below `n`) when the target is full-support.
pub fn matrix_between(
    ring: &RingPresentation,
    source: &[Monomial],
    target: &[Monomial],
    mode: DifferentialMode,
) -> SparseIntMatrix {
    let index: HashMap<Monomial, u32> = target
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, i as u32))
        .collect();
    let columns: Vec<Vec<(u32, i64)>> = source
        .par_iter()
        .map(|m| {
            let mut acc: HashMap<u32, Rational> = HashMap::new();
            let n = m.n();
            differential_into(ring, m, mode, &mut |t, c| match index.get(&t) {
                Some(&row) => {
                    *acc.entry(row).or_insert_with(Rational::zero) += c;
                }
                None => debug_assert!(
                    t.level() < n,
                    "term {t:?} of d({m:?}) missing from target basis"
                ),
            });
            let mut col: Vec<(u32, Rational)> =
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            col.sort_unstable_by_key(|e| e.0);
            integral_column(&col)
        })
        .collect();
    SparseIntMatrix::from_columns(target.len(), columns)
}

/// Matrix of the differential out of `E^{p,q}(X,n)` in the filtered bases.
pub fn differential_matrix(
    ring: &RingPresentation,
    n: usize,
    p: u32,
    q: usize,
    mode: DifferentialMode,
    filter: BasisFilter,
) -> SparseIntMatrix {
    let source = build_basis(ring, n, p, q, filter);
    let target = if q == 0 {
        Vec::new()
    } else {
        build_basis(ring, n, p + ring.top_degree(), q - 1, filter)
    };
    matrix_between(ring, &source, &target, mode)
}
