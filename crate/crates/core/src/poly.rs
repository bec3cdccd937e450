//! Integer-valued polynomials in the binomial basis `Σ a_i·C(n,i)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FitError {
    #[error("no value supplied for n = {0}")]
    MissingValue(usize),
    #[error("values exceed degree {degree}: residuals {residuals:?} (n, supplied − fitted)")]
    Inconsistent {
        degree: usize,
        residuals: Vec<(usize, i64)>,
    },
}

/// `P(n) = Σ_i a_i·C(n,i)`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialPolynomial {
    coeffs: BTreeMap<usize, i64>,
}

impl BinomialPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·C(n,i)`.
    pub fn term(i: usize, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(i, c);
        p
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs {
            p.add_term(i, c);
        }
        p
    }

    pub fn add_term(&mut self, i: usize, c: i64) {
        let e = self.coeffs.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&mut self, other: &BinomialPolynomial) {
        for (&i, &c) in &other.coeffs {
            self.add_term(i, c);
        }
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval(&self, n: u64) -> i64 {
        self.coeffs
            .iter()
            .map(|(&i, &c)| c * binomial(n, i as u64) as i64)
            .sum()
    }
}

impl fmt::Display for BinomialPolynomial {
    /// Highest term first, e.g. `2·C(n,3)+3·C(n,2)+n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&i, &c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let a = c.unsigned_abs();
            let basis = match i {
                0 => String::new(),
                1 => "n".to_string(),
                _ => format!("C(n,{i})"),
            };
            match (a, basis.is_empty()) {
                (_, true) => write!(f, "{sign}{a}")?,
                (1, false) => write!(f, "{sign}{basis}")?,
                (_, false) => write!(f, "{sign}{a}·{basis}")?,
            }
        }
        Ok(())
    }
}

/// Fits `Σ_{i ≤ max_degree} a_i·C(n,i)` through `values`, with `a_i` the
/// `i`-th forward difference at 0. Values beyond `max_degree` must be
/// reproduced exactly.
pub fn fit_binomial(
    values: &BTreeMap<usize, i64>,
    max_degree: usize,
) -> Result<BinomialPolynomial, FitError> {
    let mut row: Vec<i64> = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        row.push(*values.get(&n).ok_or(FitError::MissingValue(n))?);
    }
    let mut poly = BinomialPolynomial::zero();
    for i in 0..=max_degree {
        poly.add_term(i, row[0]);
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let residuals: Vec<(usize, i64)> = values
        .iter()
        .map(|(&n, &v)| (n, v - poly.eval(n as u64)))
        .filter(|r| r.1 != 0)
        .collect();
    if residuals.is_empty() {
        Ok(poly)
    } else {
        Err(FitError::Inconsistent {
            degree: max_degree,
            residuals,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 6), 28);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn fit_reproduces_p22() {
        let values: BTreeMap<usize, i64> = [0, 0, 0, 0, 0, 38, 260, 1022]
            .into_iter()
            .enumerate()
            .collect();
        let p = fit_binomial(&values, 7).unwrap();
        assert_eq!(p, BinomialPolynomial::from_coeffs([(5, 38), (6, 32)]));
    }

    #[test]
    fn fit_constant() {
        let values: BTreeMap<usize, i64> = (0..6).map(|n| (n, 1)).collect();
        let p = fit_binomial(&values, 0).unwrap();
        assert_eq!(p, BinomialPolynomial::term(0, 1));
    }

    #[test]
    fn fit_reports_residuals() {
        let values: BTreeMap<usize, i64> = (0..5).map(|n| (n, (n * n) as i64)).collect();
        match fit_binomial(&values, 1) {
            Err(FitError::Inconsistent { residuals, .. }) => {
                assert_eq!(residuals, vec![(2, 2), (3, 6), (4, 12)]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(fit_binomial(&values, 6), Err(FitError::MissingValue(5)));
    }

    #[test]
    fn display() {
        let b2 = BinomialPolynomial::from_coeffs([(3, 2), (2, 3), (1, 1)]);
        assert_eq!(b2.to_string(), "2·C(n,3)+3·C(n,2)+n");
        assert_eq!(BinomialPolynomial::term(0, 1).to_string(), "1");
        assert_eq!(
            BinomialPolynomial::from_coeffs([(1, -2), (0, 1)]).to_string(),
            "-2·n+1"
        );
        assert_eq!(BinomialPolynomial::zero().to_string(), "0");
    }
}
