//! Exhaustive structural checks of the model, shared by the test suites and
//! the `verify` command.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::cohomology::ComplexKind;
use crate::kriz::{
    apply_map, apply_map_element, build_basis, differential, differential_element,
    differential_matrix, BasisFilter, DifferentialMode, Monomial,
};
use crate::linalg::{rank, rational_rank, SparseIntMatrix};
use crate::partitions::{labelled_partition_dim, LabelFilter};
use crate::ring::RingPresentation;

fn kind_parts(kind: ComplexKind, w: Option<i32>) -> (DifferentialMode, BasisFilter) {
    match kind {
        ComplexKind::Full => (
            DifferentialMode::Full,
            BasisFilter {
                weight: w,
                full_support: false,
            },
        ),
        ComplexKind::Quotient => (
            DifferentialMode::Graded,
            BasisFilter {
                weight: w,
                full_support: true,
            },
        ),
    }
}

fn weight_range(ring: &RingPresentation, n: usize) -> Vec<Option<i32>> {
    match ring.weights() {
        None => vec![None],
        Some(ws) => {
            let m = ws.iter().map(|w| w.abs()).max().unwrap_or(0) * n as i32;
            (-m..=m).map(Some).collect()
        }
    }
}

/// Every differential matrix of `E(X,n)` (or its full-support quotient),
/// keyed by source `(p, q, w)`.
pub fn all_matrices(
    ring: &RingPresentation,
    kind: ComplexKind,
    n: usize,
) -> HashMap<(usize, usize, Option<i32>), SparseIntMatrix> {
    let top = ring.top_degree() as usize;
    let mut keys = Vec::new();
    for q in 1..n {
        for p in 0..=top * (n - q) {
            for w in weight_range(ring, n) {
                keys.push((p, q, w));
            }
        }
    }
    keys.into_par_iter()
        .map(|(p, q, w)| {
            let (mode, filter) = kind_parts(kind, w);
            (
                (p, q, w),
                differential_matrix(ring, n, p as u32, q, mode, filter),
            )
        })
        .filter(|(_, m)| m.rows() > 0 && m.cols() > 0)
        .collect()
}

/// Checks `d ∘ d = 0` on every bigraded piece; returns the number of
/// composable pairs checked.
pub fn check_d_squared(
    ring: &RingPresentation,
    kind: ComplexKind,
    n: usize,
) -> Result<usize, String> {
    let top = ring.top_degree() as usize;
    let mats = all_matrices(ring, kind, n);
    let mut pairs: Vec<_> = mats
        .iter()
        .filter_map(|(&(p, q, w), a)| mats.get(&(p + top, q - 1, w)).map(|b| ((p, q, w), a, b)))
        .collect();
    pairs.sort_by_key(|e| e.0);
    let bad: Vec<String> = pairs
        .par_iter()
        .filter(|(_, a, b)| !b.mul(a).is_zero())
        .map(|(k, _, _)| format!("d∘d ≠ 0 out of (p,q,w) = {k:?} at n = {n}"))
        .collect();
    match bad.first() {
        Some(e) => Err(e.clone()),
        None => Ok(pairs.len()),
    }
}

/// All maps `[n] → [m]` as value tables.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..m).map(move |v| {
                    let mut g = f.clone();
                    g.push(v);
                    g
                })
            })
            .collect();
    }
    if m == 0 && n > 0 {
        out.clear();
    }
    out
}

/// Basis monomials of `E(X,n)` in every bidegree.
pub fn full_basis(ring: &RingPresentation, n: usize) -> Vec<Monomial> {
    let top = ring.top_degree() as usize;
    (0..n.max(1))
        .flat_map(|q| (0..=top * n).map(move |p| (p, q)))
        .flat_map(|(p, q)| build_basis(ring, n, p as u32, q, BasisFilter::default()))
        .collect()
}

/// Checks `f_* ∘ d = d ∘ f_*` on every basis monomial of `E(X,n)` for every
/// map `[n] → [m]`. Returns the number of (map, monomial) pairs or the
/// first counterexample.
pub fn check_functoriality(ring: &RingPresentation, n: usize, m: usize) -> Result<usize, String> {
    let basis = full_basis(ring, n);
    let maps = all_maps(n, m);
    let failure = maps.par_iter().find_map_any(|f| {
        for x in &basis {
            let lhs = apply_map_element(ring, f, m, &differential(ring, x, DifferentialMode::Full))
                .map_err(|e| e.to_string());
            let rhs = apply_map(ring, f, m, x)
                .map(|y| differential_element(ring, &y, DifferentialMode::Full))
                .map_err(|e| e.to_string());
            match (lhs, rhs) {
                (Ok(l), Ok(r)) if l == r => {}
                (l, r) => {
                    return Some(format!(
                        "f = {f:?}, x = {}: f_*(dx) = {:?}, d(f_*x) = {:?}",
                        x.display(ring),
                        l.map(|e| e.display(ring)),
                        r.map(|e| e.display(ring))
                    ))
                }
            }
        }
        None
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(maps.len() * basis.len()),
    }
}

/// Compares canonical basis sizes of `E^{p,q}(X,n)` (and of the
/// full-support part) with the labelled-partition count.
pub fn check_basis_dims(ring: &RingPresentation, n: usize) -> Result<usize, String> {
    let top = ring.top_degree() as usize;
    let mut checked = 0;
    for q in 0..n.max(1) {
        for p in 0..=top * n {
            for full_support in [false, true] {
                let basis = build_basis(
                    ring,
                    n,
                    p as u32,
                    q,
                    BasisFilter {
                        weight: None,
                        full_support,
                    },
                )
                .len() as u64;
                let oracle = labelled_partition_dim(
                    ring,
                    n,
                    p as u32,
                    q,
                    LabelFilter {
                        weight: None,
                        full_support,
                    },
                );
                if basis != oracle {
                    return Err(format!(
                        "n = {n}, (p,q) = ({p},{q}), full support {full_support}: basis {basis}, labelled partitions {oracle}"
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Compares modular consensus ranks with exact rational ranks on every
/// differential matrix of `E(X,n)`.
pub fn check_modular_vs_rational(
    ring: &RingPresentation,
    kind: ComplexKind,
    n: usize,
) -> Result<usize, String> {
    let mats = all_matrices(ring, kind, n);
    let mut keys: Vec<_> = mats.keys().copied().collect();
    keys.sort();
    for k in &keys {
        let m = &mats[k];
        let cert = rank(m);
        let exact = rational_rank(m).map_err(|e| e.to_string())?;
        if !cert.agreed || cert.rank != exact {
            return Err(format!(
                "n = {n}, (p,q,w) = {k:?}: modular {} (agreed {}), rational {exact}",
                cert.rank, cert.agreed
            ));
        }
    }
    Ok(keys.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_enumerated() {
        assert_eq!(all_maps(2, 3).len(), 9);
        assert_eq!(all_maps(0, 3), vec![Vec::<usize>::new()]);
        assert!(all_maps(2, 0).is_empty());
    }

    #[test]
    fn small_checks_pass() {
        let e = RingPresentation::elliptic_curve();
        assert!(check_d_squared(&e, ComplexKind::Full, 4).unwrap() > 0);
        assert!(check_d_squared(&e, ComplexKind::Quotient, 5).unwrap() > 0);
        assert!(check_functoriality(&e, 2, 3).is_ok());
        assert!(check_basis_dims(&e, 4).is_ok());
        assert!(check_modular_vs_rational(&e, ComplexKind::Full, 3).is_ok());
    }

    #[test]
    fn functoriality_fails_off_zero_euler() {
        let s = RingPresentation::surface(2);
        let err = check_functoriality(&s, 2, 1).unwrap_err();
        assert!(err.contains("f = [0, 0]"), "{err}");
    }
}
