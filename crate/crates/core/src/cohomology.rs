//! Bigraded cohomology of the Kriz model: full complexes, the full-support
//! quotients `E(X,r)/F_{r−1}` with the graded differential, per-weight
//! pieces, the `/C` deconvolution and the binomial-basis assembly.
//!
//! Every table is computed piecewise over `(p, q, w)`: the differential
//! preserves the weight, so each rank job only sees one weight space.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::kriz::{build_basis, differential_matrix, BasisFilter, DifferentialMode};
use crate::linalg::{self, LinalgError, RankCertificate, DEFAULT_PRIMES};
use crate::poly::{binomial, BinomialPolynomial, FitError};
use crate::ring::RingPresentation;

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("the graded quotient complexes need χ = 0, ring has χ = {0}")]
    NonzeroEuler(i64),
    #[error("deconvolution produced {value} at (p,q) = ({p},{q})")]
    NegativeDeconvolution { p: usize, q: usize, value: i64 },
    #[error("deconvolution leaves a nonzero remainder {value} at (p,q) = ({p},{q})")]
    Remainder { p: usize, q: usize, value: i64 },
    #[error("piece {key}: dim {dim} < rank_in {rank_in} + rank_out {rank_out}")]
    Inconsistent {
        key: String,
        dim: usize,
        rank_in: usize,
        rank_out: usize,
    },
    #[error("cache {path}: {message}")]
    Cache { path: PathBuf, message: String },
    #[error(transparent)]
    Fit(#[from] FitError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which complex a piece belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexKind {
    /// `E(X,n)` with the full differential.
    Full,
    /// `E(X,r)/F_{r−1}E(X,r)` with the graded differential.
    Quotient,
}

impl ComplexKind {
    fn tag(self) -> &'static str {
        match self {
            ComplexKind::Full => "full",
            ComplexKind::Quotient => "graded",
        }
    }

    fn mode(self) -> DifferentialMode {
        match self {
            ComplexKind::Full => DifferentialMode::Full,
            ComplexKind::Quotient => DifferentialMode::Graded,
        }
    }

    fn filter(self, weight: Option<i32>) -> BasisFilter {
        BasisFilter {
            weight,
            full_support: self == ComplexKind::Quotient,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableMode {
    /// `H^{p,q}(conf(X,n))`.
    Full,
    /// Binomial coefficients `a_r^{p,q}` of the full Betti numbers.
    Quotient,
    /// `H^{p,q}(conf(C,n)/C)`.
    FullOverC,
    /// Coefficients `a_r^{p,q}` of the `/C` Betti numbers.
    QuotientOverC,
}

impl TableMode {
    fn over_c(self) -> bool {
        matches!(self, TableMode::FullOverC | TableMode::QuotientOverC)
    }
}

/// Nonzero dimensions indexed by `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedTable {
    pub n: usize,
    pub mode: TableMode,
    pub weight: Option<i32>,
    pub dims: BTreeMap<(usize, usize), u64>,
    /// Every rank behind the table was confirmed by two primes.
    pub certified: bool,
}

impl BigradedTable {
    pub fn new(n: usize, mode: TableMode) -> Self {
        BigradedTable {
            n,
            mode,
            weight: None,
            dims: BTreeMap::new(),
            certified: true,
        }
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.dims.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, p: usize, q: usize, v: u64) {
        if v == 0 {
            self.dims.remove(&(p, q));
        } else {
            self.dims.insert((p, q), v);
        }
    }

    /// Same dimensions, relabelled as the weight-`w` table.
    pub fn clone_with_weight(&self, w: i32) -> BigradedTable {
        BigradedTable {
            weight: Some(w),
            ..self.clone()
        }
    }

    /// `Σ_{p+q=k} dim H^{p,q}`, indexed by `k`.
    pub fn betti_numbers(&self) -> Vec<u64> {
        let top = self.dims.keys().map(|&(p, q)| p + q).max().unwrap_or(0);
        let mut out = vec![0; top + 1];
        for (&(p, q), &v) in &self.dims {
            out[p + q] += v;
        }
        out
    }

    /// Multiplies the bigraded Poincaré polynomial by `Σ_i kernel[i]·t^{(i,0)}`.
    pub fn convolve(&self, kernel: &[u64]) -> BigradedTable {
        let mut out = BigradedTable {
            dims: BTreeMap::new(),
            ..self.clone()
        };
        for (&(p, q), &v) in &self.dims {
            for (i, &k) in kernel.iter().enumerate() {
                let e = out.dims.entry((p + i, q)).or_insert(0);
                *e += v * k;
            }
        }
        out.dims.retain(|_, v| *v != 0);
        out
    }

    /// Appendix layout: `q` descending from `n−1`, `p` ascending. Row `q`
    /// spans `p ≤ n−1−q` for `/C` tables and `p ≤ n+1−q` otherwise; the
    /// coefficient tables start at `q = 1`. Nonzero entries outside the
    /// layout widen their row.
    pub fn layout(&self) -> Vec<(usize, Vec<u64>)> {
        let n = self.n as i64;
        let q_lo = match self.mode {
            TableMode::Quotient | TableMode::QuotientOverC => 1,
            TableMode::Full | TableMode::FullOverC => 0,
        };
        let q_hi = (n - 1).max(0) as usize;
        let mut rows = Vec::new();
        for q in (q_lo..=q_hi).rev() {
            let span = if self.mode.over_c() {
                n - 1 - q as i64
            } else {
                n + 1 - q as i64
            };
            let mut len = (span + 1).max(0) as usize;
            if let Some(&(p, _)) = self.dims.keys().rfind(|k| k.1 == q) {
                len = len.max(p + 1);
            }
            rows.push((q, (0..len).map(|p| self.get(p, q)).collect()));
        }
        rows
    }

    fn width(rows: &[(usize, Vec<u64>)]) -> usize {
        rows.iter().map(|r| r.1.len()).max().unwrap_or(0)
    }

    pub fn to_csv(&self) -> String {
        let rows = self.layout();
        let width = Self::width(&rows);
        let mut s = String::from("q\\p");
        for p in 0..width {
            write!(s, ",{p}").unwrap();
        }
        s.push('\n');
        for (q, vals) in &rows {
            write!(s, "{q}").unwrap();
            for p in 0..width {
                s.push(',');
                if let Some(v) = vals.get(p) {
                    write!(s, "{v}").unwrap();
                }
            }
            s.push('\n');
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let rows = self.layout();
        let width = Self::width(&rows);
        let mut s = String::from("| q\\p |");
        for p in 0..width {
            write!(s, " {p} |").unwrap();
        }
        s.push_str("\n|---|");
        s.push_str(&"---|".repeat(width));
        s.push('\n');
        for (q, vals) in &rows {
            write!(s, "| {q} |").unwrap();
            for p in 0..width {
                match vals.get(p) {
                    Some(v) => write!(s, " {v} |").unwrap(),
                    None => s.push_str("  |"),
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Divides a table by `Σ kernel[i]·t^{(i,0)}` (with `kernel[0] = 1`),
/// solving for increasing `p` in each row. Coefficient tables lose their
/// `q = 0` row, which is not divisible coefficient by coefficient.
pub fn deconvolve(table: &BigradedTable, kernel: &[u64]) -> Result<BigradedTable, CohomologyError> {
    assert_eq!(kernel.first(), Some(&1), "kernel must be monic");
    let mut out = BigradedTable {
        dims: BTreeMap::new(),
        ..table.clone()
    };
    let coefficients = matches!(table.mode, TableMode::Quotient | TableMode::QuotientOverC);
    let rows: BTreeSet<usize> = table
        .dims
        .keys()
        .map(|k| k.1)
        .filter(|&q| !(coefficients && q == 0))
        .collect();
    for q in rows {
        let top = table
            .dims
            .keys()
            .filter(|k| k.1 == q)
            .map(|k| k.0)
            .max()
            .unwrap();
        let mut quot: Vec<i64> = Vec::new();
        for p in 0..=top {
            let mut v = table.get(p, q) as i64;
            for (i, &k) in kernel.iter().enumerate().skip(1) {
                if p >= i {
                    v -= k as i64 * quot[p - i];
                }
            }
            if v < 0 {
                return Err(CohomologyError::NegativeDeconvolution { p, q, value: v });
            }
            quot.push(v);
        }
        // the product must not extend past the top degree
        for extra in 1..kernel.len() {
            let p = top + extra;
            let v: i64 = kernel
                .iter()
                .enumerate()
                .filter(|&(i, _)| p >= i && p - i <= top)
                .map(|(i, &k)| k as i64 * quot[p - i])
                .sum();
            if v != 0 {
                return Err(CohomologyError::Remainder { p, q, value: v });
            }
        }
        for (p, v) in quot.into_iter().enumerate() {
            out.set(p, q, v as u64);
        }
    }
    out.mode = match table.mode {
        TableMode::Full | TableMode::FullOverC => TableMode::FullOverC,
        TableMode::Quotient | TableMode::QuotientOverC => TableMode::QuotientOverC,
    };
    Ok(out)
}

/// Removes the factor `H^•(C)`, bigraded `1 + 2t + t²` in `p`.
pub fn deconvolve_by_c(full: &BigradedTable) -> Result<BigradedTable, CohomologyError> {
    deconvolve(full, &[1, 2, 1])
}

/// Ranks, dimension and certification of one `(kind, n, p, q, w)` piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub primes: Vec<u64>,
    #[serde(default = "yes")]
    pub agreed: bool,
    pub timestamp: u64,
}

fn yes() -> bool {
    true
}

impl CacheEntry {
    pub fn cohomology(&self) -> Option<usize> {
        self.dim.checked_sub(self.rank_in + self.rank_out)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, CacheEntry>,
}

/// JSON file of piece results, keyed by [`Engine::piece_key`].
#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    entries: BTreeMap<String, CacheEntry>,
    dirty: bool,
}

impl ResultCache {
    pub fn open(path: impl AsRef<Path>) -> Result<Self, CohomologyError> {
        let path = path.as_ref().to_path_buf();
        let err = |message: String| CohomologyError::Cache {
            path: path.clone(),
            message,
        };
        let entries = if path.exists() {
            let text = std::fs::read_to_string(&path).map_err(|e| err(e.to_string()))?;
            let file: CacheFile = serde_json::from_str(&text).map_err(|e| err(e.to_string()))?;
            file.entries
        } else {
            BTreeMap::new()
        };
        Ok(ResultCache {
            path,
            entries,
            dirty: false,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn entries(&self) -> &BTreeMap<String, CacheEntry> {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&CacheEntry> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, entry: CacheEntry) {
        self.entries.insert(key, entry);
        self.dirty = true;
    }

    pub fn save(&mut self) -> Result<(), CohomologyError> {
        if !self.dirty {
            return Ok(());
        }
        let file = CacheFile {
            version: 1,
            entries: self.entries.clone(),
        };
        let text = serde_json::to_string_pretty(&file).expect("cache serializes");
        let tmp = self.path.with_extension("tmp");
        std::fs::write(&tmp, text)
            .and_then(|_| std::fs::rename(&tmp, &self.path))
            .map_err(|e| CohomologyError::Cache {
                path: self.path.clone(),
                message: e.to_string(),
            })?;
        self.dirty = false;
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct PieceId {
    kind: ComplexKind,
    n: usize,
    p: usize,
    q: usize,
    w: Option<i32>,
}

/// Failed identity `Σ_i a_i^{p,q}·C(n,i) = dim H^{p,q}(E(X,n))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictnessMismatch {
    pub p: usize,
    pub q: usize,
    pub full: u64,
    pub assembled: u64,
    pub coefficients: Vec<(usize, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictnessReport {
    pub n: usize,
    pub checked: usize,
    pub mismatches: Vec<StrictnessMismatch>,
    pub certified: bool,
}

impl StrictnessReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Computes and memoizes piece cohomology for one ring.
pub struct Engine {
    ring: RingPresentation,
    ring_id: String,
    primes: Vec<u64>,
    cache: Option<Mutex<ResultCache>>,
    ranks: Mutex<HashMap<PieceId, RankCertificate>>,
    dims: Mutex<HashMap<PieceId, usize>>,
    rank_jobs: AtomicUsize,
}

impl Engine {
    pub fn new(ring: RingPresentation) -> Self {
        let digest = Sha256::digest(ring.to_json().as_bytes());
        let hex: String = digest[..4].iter().map(|b| format!("{b:02x}")).collect();
        Engine {
            ring_id: format!("{}-{hex}", ring.name()),
            ring,
            primes: DEFAULT_PRIMES.to_vec(),
            cache: None,
            ranks: Mutex::default(),
            dims: Mutex::default(),
            rank_jobs: AtomicUsize::new(0),
        }
    }

    pub fn elliptic() -> Self {
        Self::new(RingPresentation::elliptic_curve())
    }

    /// Replaces the consensus primes (each must exceed `2^20`).
    pub fn with_primes(mut self, primes: Vec<u64>) -> Result<Self, CohomologyError> {
        linalg::rank_with_primes(&linalg::SparseIntMatrix::zeros(0, 0), &primes)?;
        self.primes = primes;
        Ok(self)
    }

    pub fn with_cache(mut self, cache: ResultCache) -> Self {
        self.cache = Some(Mutex::new(cache));
        self
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Matrices eliminated so far.
    pub fn rank_jobs(&self) -> usize {
        self.rank_jobs.load(Ordering::Relaxed)
    }

    pub fn save_cache(&self) -> Result<(), CohomologyError> {
        match &self.cache {
            Some(c) => c.lock().unwrap().save(),
            None => Ok(()),
        }
    }

    pub fn cache_entries(&self) -> BTreeMap<String, CacheEntry> {
        self.cache
            .as_ref()
            .map(|c| c.lock().unwrap().entries().clone())
            .unwrap_or_default()
    }

    /// Stable key, e.g. `elliptic-…/graded/n=8/p=2/q=3/w=0/primes=…`.
    pub fn piece_key(
        &self,
        kind: ComplexKind,
        n: usize,
        p: usize,
        q: usize,
        w: Option<i32>,
    ) -> String {
        let w = w.map_or("*".to_string(), |w| w.to_string());
        let primes: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        format!(
            "{}/{}/n={n}/p={p}/q={q}/w={w}/primes={}",
            self.ring_id,
            kind.tag(),
            primes.join(",")
        )
    }

    fn top(&self) -> usize {
        self.ring.top_degree() as usize
    }

    /// Weights occurring in `E^{p,•}(X,n)`; `[None]` for unweighted rings.
    pub fn weights(&self, n: usize, p: usize) -> Vec<Option<i32>> {
        if self.ring.weights().is_none() {
            return vec![None];
        }
        let mut reach: BTreeSet<(usize, i32)> = [(0, 0)].into();
        for _ in 0..n {
            let mut next = BTreeSet::new();
            for &(d, w) in &reach {
                for b in 0..self.ring.len() {
                    let d2 = d + self.ring.degree(b) as usize;
                    if d2 <= p {
                        next.insert((d2, w + self.ring.weight(b)));
                    }
                }
            }
            reach = next;
        }
        reach
            .into_iter()
            .filter(|e| e.0 == p)
            .map(|e| Some(e.1))
            .collect()
    }

    fn bidegrees(&self, n: usize) -> Vec<(usize, usize)> {
        (0..n.max(1))
            .flat_map(|q| (0..=self.top() * (n - q.min(n))).map(move |p| (p, q)))
            .collect()
    }

    fn cached(&self, id: PieceId) -> Option<CacheEntry> {
        let cache = self.cache.as_ref()?;
        let key = self.piece_key(id.kind, id.n, id.p, id.q, id.w);
        let entry = cache.lock().unwrap().get(&key).cloned()?;
        self.dims.lock().unwrap().insert(id, entry.dim);
        Some(entry)
    }

    fn matrix_rank(&self, id: PieceId) -> RankCertificate {
        if let Some(c) = self.ranks.lock().unwrap().get(&id) {
            return c.clone();
        }
        let m = differential_matrix(
            &self.ring,
            id.n,
            id.p as u32,
            id.q,
            id.kind.mode(),
            id.kind.filter(id.w),
        );
        self.dims.lock().unwrap().insert(id, m.cols());
        let cert = if m.nnz() == 0 {
            RankCertificate {
                rank: 0,
                primes_used: Vec::new(),
                agreed: true,
                method: linalg::RankMethod::ModularConsensus,
                discrepancies: 0,
            }
        } else {
            self.rank_jobs.fetch_add(1, Ordering::Relaxed);
            linalg::rank_with_primes(&m, &self.primes).expect("primes validated")
        };
        self.ranks.lock().unwrap().insert(id, cert.clone());
        cert
    }

    fn dim(&self, id: PieceId) -> usize {
        if let Some(&d) = self.dims.lock().unwrap().get(&id) {
            return d;
        }
        let d = build_basis(&self.ring, id.n, id.p as u32, id.q, id.kind.filter(id.w)).len();
        self.dims.lock().unwrap().insert(id, d);
        d
    }

    /// Differential out of `id`, or `None` when it is zero for degree reasons.
    fn out_of(&self, id: PieceId) -> Option<PieceId> {
        (id.q > 0).then_some(id)
    }

    fn into(&self, id: PieceId) -> Option<PieceId> {
        (id.p >= self.top() && id.q + 1 < id.n).then(|| PieceId {
            p: id.p - self.top(),
            q: id.q + 1,
            ..id
        })
    }

    /// Computes (or fetches) many pieces, eliminating each distinct matrix once.
    fn pieces(&self, ids: &[PieceId]) -> Result<Vec<CacheEntry>, CohomologyError> {
        let mut results: Vec<Option<CacheEntry>> = ids.iter().map(|&id| self.cached(id)).collect();
        let mut needed: Vec<PieceId> = Vec::new();
        for (id, r) in ids.iter().zip(&results) {
            if r.is_none() {
                needed.extend(self.out_of(*id));
                needed.extend(self.into(*id));
            }
        }
        needed.sort_by_key(|id| (id.kind, id.n, id.p, id.q, id.w));
        needed.dedup();
        needed.par_iter().for_each(|&id| {
            self.matrix_rank(id);
        });
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        for (i, &id) in ids.iter().enumerate() {
            if results[i].is_some() {
                continue;
            }
            let out = self.out_of(id).map(|m| self.matrix_rank(m));
            let inn = self.into(id).map(|m| self.matrix_rank(m));
            let mut primes: Vec<u64> = Vec::new();
            for c in out.iter().chain(inn.iter()) {
                for p in &c.primes_used {
                    if !primes.contains(p) {
                        primes.push(*p);
                    }
                }
            }
            let entry = CacheEntry {
                dim: self.dim(id),
                rank_in: inn.as_ref().map_or(0, |c| c.rank),
                rank_out: out.as_ref().map_or(0, |c| c.rank),
                primes,
                agreed: out.iter().chain(inn.iter()).all(|c| c.agreed),
                timestamp: now,
            };
            if let Some(cache) = &self.cache {
                let key = self.piece_key(id.kind, id.n, id.p, id.q, id.w);
                cache.lock().unwrap().insert(key, entry.clone());
            }
            results[i] = Some(entry);
        }
        let out: Vec<CacheEntry> = results.into_iter().map(|r| r.unwrap()).collect();
        for (id, e) in ids.iter().zip(&out) {
            if e.cohomology().is_none() {
                return Err(CohomologyError::Inconsistent {
                    key: self.piece_key(id.kind, id.n, id.p, id.q, id.w),
                    dim: e.dim,
                    rank_in: e.rank_in,
                    rank_out: e.rank_out,
                });
            }
        }
        Ok(out)
    }

    fn check_quotient(&self) -> Result<(), CohomologyError> {
        match self.ring.euler_characteristic() {
            0 => Ok(()),
            chi => Err(CohomologyError::NonzeroEuler(chi)),
        }
    }

    /// Cohomology of one piece, with its ranks.
    pub fn piece(
        &self,
        kind: ComplexKind,
        n: usize,
        p: usize,
        q: usize,
        w: Option<i32>,
    ) -> Result<CacheEntry, CohomologyError> {
        if kind == ComplexKind::Quotient {
            self.check_quotient()?;
        }
        Ok(self.pieces(&[PieceId { kind, n, p, q, w }])?.remove(0))
    }

    /// `dim H^{p,q}` of the weight-`w` subcomplex.
    pub fn weight_cohom(
        &self,
        kind: ComplexKind,
        n: usize,
        p: usize,
        q: usize,
        w: i32,
    ) -> Result<u64, CohomologyError> {
        let e = self.piece(kind, n, p, q, Some(w))?;
        Ok(e.cohomology().unwrap() as u64)
    }

    /// `dim H^{p,q}` summed over all weights.
    pub fn bigraded_dim(
        &self,
        kind: ComplexKind,
        n: usize,
        p: usize,
        q: usize,
    ) -> Result<u64, CohomologyError> {
        if kind == ComplexKind::Quotient {
            self.check_quotient()?;
        }
        let ids: Vec<PieceId> = self
            .weights(n, p)
            .into_iter()
            .map(|w| PieceId { kind, n, p, q, w })
            .collect();
        Ok(self
            .pieces(&ids)?
            .iter()
            .map(|e| e.cohomology().unwrap() as u64)
            .sum())
    }

    /// Multiplicities `m_k = dim_k − dim_{k+2}` of the weight-`k` highest
    /// weight modules, for `k ≥ 0`.
    pub fn highest_weight_dims(
        &self,
        kind: ComplexKind,
        n: usize,
        p: usize,
        q: usize,
    ) -> Result<BTreeMap<i32, u64>, CohomologyError> {
        let mut dims: BTreeMap<i32, u64> = BTreeMap::new();
        for w in self.weights(n, p).into_iter().flatten() {
            dims.insert(w, self.weight_cohom(kind, n, p, q, w)?);
        }
        let mut out = BTreeMap::new();
        for (&w, &d) in dims.range(0..) {
            let above = dims.get(&(w + 2)).copied().unwrap_or(0);
            out.insert(w, d.saturating_sub(above));
        }
        Ok(out)
    }

    fn table(&self, kind: ComplexKind, n: usize) -> Result<BigradedTable, CohomologyError> {
        let mut ids = Vec::new();
        for (p, q) in self.bidegrees(n) {
            for w in self.weights(n, p) {
                ids.push(PieceId { kind, n, p, q, w });
            }
        }
        let entries = self.pieces(&ids)?;
        let mode = match kind {
            ComplexKind::Full => TableMode::Full,
            ComplexKind::Quotient => TableMode::Quotient,
        };
        let mut table = BigradedTable::new(n, mode);
        for (id, e) in ids.iter().zip(&entries) {
            let v = table.get(id.p, id.q) + e.cohomology().unwrap() as u64;
            table.set(id.p, id.q, v);
            table.certified &= e.agreed;
        }
        Ok(table)
    }

    /// Weight-`w` part of the full (or quotient) table.
    pub fn weight_table(
        &self,
        kind: ComplexKind,
        n: usize,
        w: i32,
    ) -> Result<BigradedTable, CohomologyError> {
        if kind == ComplexKind::Quotient {
            self.check_quotient()?;
        }
        let ids: Vec<PieceId> = self
            .bidegrees(n)
            .into_iter()
            .filter(|&(p, _)| self.weights(n, p).contains(&Some(w)))
            .map(|(p, q)| PieceId {
                kind,
                n,
                p,
                q,
                w: Some(w),
            })
            .collect();
        let entries = self.pieces(&ids)?;
        let mode = match kind {
            ComplexKind::Full => TableMode::Full,
            ComplexKind::Quotient => TableMode::Quotient,
        };
        let mut table = BigradedTable::new(n, mode);
        table.weight = Some(w);
        for (id, e) in ids.iter().zip(&entries) {
            table.set(id.p, id.q, e.cohomology().unwrap() as u64);
            table.certified &= e.agreed;
        }
        Ok(table)
    }

    fn seeded(&self, n: usize, mode: TableMode) -> BigradedTable {
        let mut t = BigradedTable::new(n, mode);
        let betti = self.ring.betti_numbers();
        match (n, mode) {
            (0, _) => t.set(0, 0, 1),
            (_, TableMode::Full) => {
                for (p, &b) in betti.iter().enumerate() {
                    t.set(p, 0, b as u64);
                }
            }
            _ => {
                // the unit is the only class not supported at the point
                for (p, &b) in betti.iter().enumerate() {
                    t.set(p, 0, b as u64 - u64::from(p == 0));
                }
            }
        }
        t
    }

    /// `H^{p,q}(conf(X,n))` for all bidegrees.
    pub fn cohom_dims(&self, n: usize) -> Result<BigradedTable, CohomologyError> {
        if n <= 1 {
            return Ok(self.seeded(n, TableMode::Full));
        }
        self.table(ComplexKind::Full, n)
    }

    /// `a_r^{p,q}`: cohomology of `E(X,r)/F_{r−1}` with the graded differential.
    pub fn graded_coefficients(&self, r: usize) -> Result<BigradedTable, CohomologyError> {
        self.check_quotient()?;
        if r <= 1 {
            return Ok(self.seeded(r, TableMode::Quotient));
        }
        self.table(ComplexKind::Quotient, r)
    }

    /// `P^{p,q}(n) = Σ_r a_r^{p,q}·C(n,r)`, from quotient pieces with
    /// `r ≤ p + 2q` (larger `r` have no full-support monomials).
    pub fn bigraded_polynomial(
        &self,
        p: usize,
        q: usize,
    ) -> Result<BinomialPolynomial, CohomologyError> {
        self.check_quotient()?;
        let mut poly = BinomialPolynomial::zero();
        for r in 0..=p + 2 * q {
            let a = if r <= 1 {
                self.seeded(r, TableMode::Quotient).get(p, q)
            } else if q >= r {
                0
            } else {
                self.bigraded_dim(ComplexKind::Quotient, r, p, q)?
            };
            poly.add_term(r, a as i64);
        }
        Ok(poly)
    }

    /// `b_k(n) = Σ_{p+q=k} P^{p,q}(n)` for `k ≤ max_k`.
    pub fn betti_polynomials(
        &self,
        max_k: usize,
    ) -> Result<BTreeMap<usize, BinomialPolynomial>, CohomologyError> {
        let mut out = BTreeMap::new();
        for k in 0..=max_k {
            let mut b = BinomialPolynomial::zero();
            for q in 0..=k {
                b.add(&self.bigraded_polynomial(k - q, q)?);
            }
            out.insert(k, b);
        }
        Ok(out)
    }

    /// Checks `Σ_{i ≤ n} a_i^{p,q}·C(n,i) = dim H^{p,q}(E(X,n))` in every
    /// bidegree.
    pub fn verify_strictness(&self, n: usize) -> Result<StrictnessReport, CohomologyError> {
        self.check_quotient()?;
        let full = self.cohom_dims(n)?;
        let coeffs: Vec<BigradedTable> = (0..=n)
            .map(|r| self.graded_coefficients(r))
            .collect::<Result<_, _>>()?;
        let certified = full.certified && coeffs.iter().all(|t| t.certified);
        let mut keys: BTreeSet<(usize, usize)> = full.dims.keys().copied().collect();
        for t in &coeffs {
            keys.extend(t.dims.keys().copied());
        }
        let mut mismatches = Vec::new();
        for &(p, q) in &keys {
            let terms: Vec<(usize, u64)> = coeffs
                .iter()
                .enumerate()
                .map(|(i, t)| (i, t.get(p, q)))
                .filter(|t| t.1 != 0)
                .collect();
            let assembled: u64 = terms
                .iter()
                .map(|&(i, a)| a * binomial(n as u64, i as u64))
                .sum();
            if assembled != full.get(p, q) {
                mismatches.push(StrictnessMismatch {
                    p,
                    q,
                    full: full.get(p, q),
                    assembled,
                    coefficients: terms,
                });
            }
        }
        Ok(StrictnessReport {
            n,
            checked: keys.len(),
            mismatches,
            certified,
        })
    }

    /// Cross-checks cached pieces: the rank out of `(p,q)` must be the rank
    /// into `(p+top, q−1)`, and no piece may have negative cohomology.
    pub fn cache_inconsistencies(&self) -> Vec<String> {
        let entries = self.cache_entries();
        let mut bad = Vec::new();
        let parse = |key: &str| -> Option<(String, usize, usize, String)> {
            let parts: Vec<&str> = key.split('/').collect();
            if parts.len() != 7 {
                return None;
            }
            let num = |s: &str, pre: &str| s.strip_prefix(pre)?.parse::<usize>().ok();
            let prefix = format!("{}/{}/{}", parts[0], parts[1], parts[2]);
            let suffix = format!("{}/{}", parts[5], parts[6]);
            Some((prefix, num(parts[3], "p=")?, num(parts[4], "q=")?, suffix))
        };
        for (key, e) in &entries {
            if e.cohomology().is_none() {
                bad.push(format!(
                    "{key}: dim {} < rank_in {} + rank_out {}",
                    e.dim, e.rank_in, e.rank_out
                ));
            }
            let Some((prefix, p, q, suffix)) = parse(key) else {
                bad.push(format!("{key}: malformed key"));
                continue;
            };
            if q == 0 {
                continue;
            }
            let partner = format!("{prefix}/p={}/q={}/{suffix}", p + self.top(), q - 1);
            if let Some(f) = entries.get(&partner) {
                if f.rank_in != e.rank_out {
                    bad.push(format!(
                        "{key}: rank_out {} but {partner} has rank_in {}",
                        e.rank_out, f.rank_in
                    ));
                }
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, mode: TableMode, rows: &[(usize, &[u64])]) -> BigradedTable {
        let mut t = BigradedTable::new(n, mode);
        for &(q, vals) in rows {
            for (p, &v) in vals.iter().enumerate() {
                t.set(p, q, v);
            }
        }
        t
    }

    #[test]
    fn small_full_tables() {
        let e = Engine::elliptic();
        let t1 = e.cohom_dims(1).unwrap();
        assert_eq!(t1.dims, [((0, 0), 1), ((1, 0), 2), ((2, 0), 1)].into());
        let t2 = e.cohom_dims(2).unwrap();
        let over = deconvolve_by_c(&t2).unwrap();
        assert_eq!(over, table(2, TableMode::FullOverC, &[(0, &[1, 2])]));
        let t3 = deconvolve_by_c(&e.cohom_dims(3).unwrap()).unwrap();
        assert_eq!(
            t3,
            table(3, TableMode::FullOverC, &[(1, &[0, 2]), (0, &[1, 4, 3])])
        );
        // b_2(3) = 14
        assert_eq!(e.cohom_dims(3).unwrap().betti_numbers()[2], 14);
    }

    #[test]
    fn deconvolution_of_curve_is_point() {
        let e = Engine::elliptic();
        let t = deconvolve_by_c(&e.cohom_dims(1).unwrap()).unwrap();
        assert_eq!(t.dims, [((0, 0), 1)].into());
    }

    #[test]
    fn deconvolution_rejects_non_multiples() {
        let t = table(2, TableMode::Full, &[(0, &[1, 1])]);
        assert!(matches!(
            deconvolve_by_c(&t),
            Err(CohomologyError::NegativeDeconvolution { .. })
        ));
        let t = table(2, TableMode::Full, &[(0, &[1, 2, 2])]);
        assert!(matches!(
            deconvolve_by_c(&t),
            Err(CohomologyError::Remainder { .. })
        ));
    }

    #[test]
    fn graded_small() {
        let e = Engine::elliptic();
        let a3 = deconvolve_by_c(&e.graded_coefficients(3).unwrap()).unwrap();
        assert_eq!(a3.get(1, 1), 2);
        assert_eq!(a3.dims.keys().filter(|k| k.1 > 0).count(), 1);
        let a4 = e.graded_coefficients(4).unwrap();
        assert_eq!(a4.get(2, 1), 10);
    }

    #[test]
    fn refuses_nonzero_euler() {
        let e = Engine::new(RingPresentation::surface(2));
        assert!(matches!(
            e.graded_coefficients(3),
            Err(CohomologyError::NonzeroEuler(-2))
        ));
        assert!(e.cohom_dims(2).is_ok());
    }

    #[test]
    fn strictness_small() {
        let e = Engine::elliptic();
        for n in 0..=4 {
            let rep = e.verify_strictness(n).unwrap();
            assert!(rep.ok(), "{rep:?}");
            assert!(rep.certified);
        }
    }

    #[test]
    fn binomial_rows() {
        let e = Engine::elliptic();
        for p in 1..5 {
            let poly = e.bigraded_polynomial(p, 0).unwrap();
            let expect =
                BinomialPolynomial::from_coeffs([(p, p as i64 + 1), (p - 1, p as i64 - 1)]);
            assert_eq!(poly, expect, "p={p}");
        }
        let b = e.betti_polynomials(2).unwrap();
        assert_eq!(b[&0], BinomialPolynomial::term(0, 1));
        assert_eq!(b[&1], BinomialPolynomial::term(1, 2));
        assert_eq!(
            b[&2],
            BinomialPolynomial::from_coeffs([(3, 2), (2, 3), (1, 1)])
        );
    }

    #[test]
    fn highest_weights_top_graded() {
        let e = Engine::elliptic();
        assert_eq!(
            e.weight_cohom(ComplexKind::Quotient, 3, 1, 1, 1).unwrap(),
            1
        );
        assert_eq!(
            e.weight_cohom(ComplexKind::Quotient, 3, 1, 1, -1).unwrap(),
            1
        );
        let hw = e
            .highest_weight_dims(ComplexKind::Quotient, 3, 1, 1)
            .unwrap();
        assert_eq!(hw.get(&1), Some(&1));
    }

    #[test]
    fn csv_layout() {
        let t = table(3, TableMode::FullOverC, &[(1, &[0, 2]), (0, &[1, 4, 3])]);
        assert_eq!(t.to_csv(), "q\\p,0,1,2\n2,0,,\n1,0,2,\n0,1,4,3\n");
        let md = t.to_markdown();
        assert!(md.starts_with("| q\\p | 0 | 1 | 2 |\n|---|---|---|---|\n| 2 | 0 |  |  |\n"));
    }

    #[test]
    fn weight_tables_sum_to_total() {
        let e = Engine::elliptic();
        let total = e.graded_coefficients(4).unwrap();
        let mut sum = BigradedTable::new(4, TableMode::Quotient);
        for w in -8..=8 {
            let t = e.weight_table(ComplexKind::Quotient, 4, w).unwrap();
            assert_eq!(
                t,
                e.weight_table(ComplexKind::Quotient, 4, -w)
                    .unwrap()
                    .clone_with_weight(w)
            );
            for (&(p, q), &v) in &t.dims {
                sum.set(p, q, sum.get(p, q) + v);
            }
        }
        assert_eq!(sum, total);
    }

    #[test]
    fn weights_of_elliptic() {
        let e = Engine::elliptic();
        assert_eq!(e.weights(3, 2), vec![Some(-2), Some(0), Some(2)]);
        assert_eq!(e.weights(1, 3), Vec::<Option<i32>>::new());
    }
}
