//! Bigraded Betti numbers of ordered configuration spaces on varieties with
//! vanishing Euler characteristic, computed from the Kriz model.

pub mod checks;
pub mod cohomology;
pub mod kriz;
pub mod linalg;
pub mod partitions;
pub mod poly;
pub mod ring;

pub use cohomology::{BigradedTable, ComplexKind, Engine, TableMode};
pub use kriz::{BasisFilter, DifferentialMode, Element, Factor, Monomial};
pub use linalg::{RankCertificate, SparseIntMatrix};
pub use partitions::{FrobeniusCoords, LabelledPartition, Partition};
pub use poly::BinomialPolynomial;
pub use ring::{DiagonalClass, Rational, RingPresentation};
