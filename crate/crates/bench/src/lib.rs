//! Benchmark fixtures: differential matrices of representative sizes.

use ordconf::kriz::{differential_matrix, BasisFilter, DifferentialMode};
use ordconf::{RingPresentation, SparseIntMatrix};

/// Weight-`w` differential out of `E^{p,q}(C,n)`.
pub fn full_matrix(n: usize, p: u32, q: usize, w: i32) -> SparseIntMatrix {
    let e = RingPresentation::elliptic_curve();
    differential_matrix(&e, n, p, q, DifferentialMode::Full, BasisFilter::weight(w))
}

/// Weight-`w` graded differential out of the full-support part of `E^{p,q}(C,r)`.
pub fn quotient_matrix(r: usize, p: u32, q: usize, w: i32) -> SparseIntMatrix {
    let e = RingPresentation::elliptic_curve();
    let filter = BasisFilter {
        weight: Some(w),
        full_support: true,
    };
    differential_matrix(&e, r, p, q, DifferentialMode::Graded, filter)
}
