//! Finite-dimensional graded-commutative rings satisfying Poincaré duality.
//!
//! A [`RingPresentation`] stands for the rational cohomology ring of a smooth
//! projective variety: a graded basis with a multiplication table, a unit and a
//! fundamental class spanning the top degree. From the cup-product pairing we
//! derive the dual basis and the class of the diagonal,
//! `Δ = Σ_j (-1)^{deg b_j^*} b_j ⊗ b_j^*`, which is all the Kriz model needs.

use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact coefficient type used for ring structure constants.
pub type Rational = Rational64;

/// A linear combination of basis elements, sorted by index, without zeros.
pub type Combination = Vec<(usize, Rational)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("malformed ring document: {0}")]
    Parse(String),
    #[error("unknown basis element `{0}`")]
    UnknownName(String),
    #[error("duplicate basis element `{0}`")]
    DuplicateName(String),
    #[error("bad coefficient `{0}`")]
    BadCoefficient(String),
    #[error("unit `{0}` must have degree 0")]
    UnitDegree(String),
    #[error("wrong top dimension: degree {degree} must be spanned by the fundamental class alone, found {count} element(s)")]
    TopDimension { degree: u32, count: usize },
    #[error("top degree {0} is odd")]
    OddTopDegree(u32),
    #[error("product {l}·{r} is not graded-commutative/associative in degree: `{out}` has degree {found}, expected {expected}")]
    NotHomogeneous {
        l: String,
        r: String,
        out: String,
        found: u32,
        expected: u32,
    },
    #[error("product {l}·{r} does not preserve the torus weight")]
    WeightMismatch { l: String, r: String },
    #[error("products {l}·{r} and {r}·{l} violate graded commutativity")]
    NotCommutative { l: String, r: String },
    #[error("unit is not neutral on `{0}`")]
    UnitNotNeutral(String),
    #[error("non-associative triple ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("degenerate pairing between degrees {0} and {1}")]
    DegeneratePairing(u32, u32),
    #[error("weights must be given for all basis elements or for none")]
    PartialWeights,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: u32,
}

/// A validated graded ring with Poincaré duality. Immutable once built.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    name: String,
    basis: Vec<BasisElement>,
    unit: usize,
    fundamental: usize,
    top_degree: u32,
    weights: Option<Vec<i32>>,
    table: Vec<Vec<Combination>>,
    dual: Vec<Combination>,
}

/// One summand `coeff · b_left ⊗ b_right` of the diagonal class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagonalTerm {
    pub left: usize,
    pub right: usize,
    pub coeff: Rational,
}

impl DiagonalTerm {
    /// `+1` or `-1` when the coefficient is a unit of ℤ.
    pub fn sign(&self) -> Option<i8> {
        if self.coeff == Rational::one() {
            Some(1)
        } else if self.coeff == -Rational::one() {
            Some(-1)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalClass {
    pub terms: Vec<DiagonalTerm>,
    /// Terms with neither factor equal to the unit or the fundamental class.
    pub graded_terms: Vec<DiagonalTerm>,
}

fn koszul(a: u32, b: u32) -> Rational {
    if a % 2 == 1 && b % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

fn add_into(acc: &mut BTreeMap<usize, Rational>, idx: usize, c: Rational) {
    let e = acc.entry(idx).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&idx);
    }
}

fn scaled(comb: &[(usize, Rational)], c: Rational) -> Combination {
    comb.iter()
        .map(|&(i, v)| (i, v * c))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// Builder input: products keyed by `(left, right)` basis indices.
pub type ProductTable = BTreeMap<(usize, usize), Combination>;

impl RingPresentation {
    /// Validates a presentation. Products implied by graded commutativity and
    /// by the unit may be omitted; every other omitted product is zero.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<BasisElement>,
        unit: usize,
        fundamental: usize,
        weights: Option<Vec<i32>>,
        products: ProductTable,
    ) -> Result<Self, RingError> {
        let k = basis.len();
        let nm = |i: usize| basis[i].name.clone();
        let mut seen = HashMap::new();
        for b in &basis {
            if seen.insert(b.name.clone(), ()).is_some() {
                return Err(RingError::DuplicateName(b.name.clone()));
            }
        }
        if unit >= k || fundamental >= k {
            return Err(RingError::Parse(
                "unit or fundamental index out of range".into(),
            ));
        }
        if basis[unit].degree != 0 {
            return Err(RingError::UnitDegree(nm(unit)));
        }
        if let Some(w) = &weights {
            if w.len() != k {
                return Err(RingError::PartialWeights);
            }
        }
        let top_degree = basis.iter().map(|b| b.degree).max().unwrap_or(0);
        let top_count = basis.iter().filter(|b| b.degree == top_degree).count();
        if top_count != 1 || basis[fundamental].degree != top_degree {
            return Err(RingError::TopDimension {
                degree: top_degree,
                count: top_count,
            });
        }
        if top_degree % 2 == 1 {
            return Err(RingError::OddTopDegree(top_degree));
        }

        let mut table = vec![vec![None::<Combination>; k]; k];
        for (&(l, r), out) in &products {
            if l >= k || r >= k || out.iter().any(|&(o, _)| o >= k) {
                return Err(RingError::Parse("product index out of range".into()));
            }
            let mut acc = BTreeMap::new();
            for &(o, c) in out {
                add_into(&mut acc, o, c);
            }
            let expected = basis[l].degree + basis[r].degree;
            for &o in acc.keys() {
                if basis[o].degree != expected {
                    return Err(RingError::NotHomogeneous {
                        l: nm(l),
                        r: nm(r),
                        out: nm(o),
                        found: basis[o].degree,
                        expected,
                    });
                }
                if let Some(w) = &weights {
                    if w[o] != w[l] + w[r] {
                        return Err(RingError::WeightMismatch { l: nm(l), r: nm(r) });
                    }
                }
            }
            table[l][r] = Some(acc.into_iter().collect());
        }
        // unit products
        for j in 0..k {
            let ident = vec![(j, Rational::one())];
            for (a, b) in [(unit, j), (j, unit)] {
                match &table[a][b] {
                    None => table[a][b] = Some(ident.clone()),
                    Some(c) if *c != ident => return Err(RingError::UnitNotNeutral(nm(j))),
                    Some(_) => {}
                }
            }
        }
        // graded commutativity
        for l in 0..k {
            for r in 0..k {
                let s = koszul(basis[l].degree, basis[r].degree);
                match (table[l][r].clone(), table[r][l].clone()) {
                    (Some(a), None) => table[r][l] = Some(scaled(&a, s)),
                    (Some(a), Some(b)) if scaled(&a, s) != b => {
                        return Err(RingError::NotCommutative { l: nm(l), r: nm(r) });
                    }
                    _ => {}
                }
            }
        }
        let table: Vec<Vec<Combination>> = table
            .into_iter()
            .map(|row| row.into_iter().map(Option::unwrap_or_default).collect())
            .collect();

        let mut ring = RingPresentation {
            name: name.into(),
            basis,
            unit,
            fundamental,
            top_degree,
            weights,
            table,
            dual: Vec::new(),
        };
        ring.check_associative()?;
        ring.dual = ring.compute_dual()?;
        Ok(ring)
    }

    fn check_associative(&self) -> Result<(), RingError> {
        let k = self.len();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let left = self.mul_comb(&self.table[a][b], &[(c, Rational::one())]);
                    let right = self.mul_comb(&[(a, Rational::one())], &self.table[b][c]);
                    if left != right {
                        return Err(RingError::NotAssociative(
                            self.basis[a].name.clone(),
                            self.basis[b].name.clone(),
                            self.basis[c].name.clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Dual basis, inverting the pairing one complementary degree block at a time.
    fn compute_dual(&self) -> Result<Vec<Combination>, RingError> {
        let k = self.len();
        let top = self.top_degree;
        let mut dual = vec![Vec::new(); k];
        for d in 0..=top {
            let rows: Vec<usize> = (0..k).filter(|&i| self.basis[i].degree == d).collect();
            let cols: Vec<usize> = (0..k)
                .filter(|&i| self.basis[i].degree == top - d)
                .collect();
            if rows.is_empty() && cols.is_empty() {
                continue;
            }
            if rows.len() != cols.len() {
                return Err(RingError::DegeneratePairing(d, top - d));
            }
            let m = rows.len();
            // P^T, augmented with the identity.
            let mut aug = vec![vec![Rational::zero(); 2 * m]; m];
            for (a, &ci) in cols.iter().enumerate() {
                for (b, &ri) in rows.iter().enumerate() {
                    aug[a][b] = self.pairing(ri, ci);
                }
                aug[a][m + a] = Rational::one();
            }
            let inv = invert(aug, m).ok_or(RingError::DegeneratePairing(d, top - d))?;
            // C = (P^T)^{-1}: row j of C holds the coordinates of b_{rows[j]}^*.
            for (j, &rj) in rows.iter().enumerate() {
                dual[rj] = cols
                    .iter()
                    .enumerate()
                    .map(|(a, &ca)| (ca, inv[j][a]))
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
            }
        }
        Ok(dual)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.basis[i].degree
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn fundamental(&self) -> usize {
        self.fundamental
    }

    /// `2·dim_ℂ X`.
    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn weights(&self) -> Option<&[i32]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, i: usize) -> i32 {
        self.weights.as_ref().map_or(0, |w| w[i])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn mul(&self, l: usize, r: usize) -> &[(usize, Rational)] {
        &self.table[l][r]
    }

    /// Bilinear product of two combinations.
    pub fn mul_comb(&self, a: &[(usize, Rational)], b: &[(usize, Rational)]) -> Combination {
        let mut acc = BTreeMap::new();
        for &(i, ci) in a {
            for &(j, cj) in b {
                for &(o, co) in &self.table[i][j] {
                    add_into(&mut acc, o, ci * cj * co);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// Coefficient of the fundamental class in `b_l · b_r`.
    pub fn pairing(&self, l: usize, r: usize) -> Rational {
        self.table[l][r]
            .iter()
            .find(|&&(o, _)| o == self.fundamental)
            .map_or_else(Rational::zero, |&(_, c)| c)
    }

    /// Coordinates of `b_j^*`, characterized by `⟨b_i, b_j^*⟩ = δ_ij`.
    pub fn dual(&self, j: usize) -> &[(usize, Rational)] {
        &self.dual[j]
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        let mut h = vec![0; self.top_degree as usize + 1];
        for b in &self.basis {
            h[b.degree as usize] += 1;
        }
        h
    }

    /// Returns the Σ_j (-1)^{deg b_j^*} b_j ⊗ b_j^* expansion of the diagonal.
    pub fn diagonal(&self) -> DiagonalClass {
        let mut terms = Vec::new();
        for j in 0..self.len() {
            let sign = if (self.top_degree - self.degree(j)) % 2 == 1 {
                -Rational::one()
            } else {
                Rational::one()
            };
            for &(k, c) in &self.dual[j] {
                terms.push(DiagonalTerm {
                    left: j,
                    right: k,
                    coeff: sign * c,
                });
            }
        }
        let special = |i: usize| i == self.unit || i == self.fundamental;
        let graded_terms = terms
            .iter()
            .copied()
            .filter(|t| !special(t.left) && !special(t.right))
            .collect();
        DiagonalClass {
            terms,
            graded_terms,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.basis
            .iter()
            .map(|b| if b.degree % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Cohomology of an elliptic curve: the exterior algebra on `x`, `y` with
    /// `x·y = [C]`, carrying the torus weights `x ↦ +1`, `y ↦ -1`.
    pub fn elliptic_curve() -> Self {
        let basis = [("1", 0), ("x", 1), ("y", 1), ("xy", 2)]
            .into_iter()
            .map(|(n, d)| BasisElement {
                name: n.into(),
                degree: d,
            })
            .collect();
        let mut products = ProductTable::new();
        products.insert((1, 2), vec![(3, Rational::one())]);
        RingPresentation::new("elliptic", basis, 0, 3, Some(vec![0, 1, -1, 0]), products)
            .expect("elliptic curve ring is valid")
    }

    /// Cohomology of a point.
    pub fn point() -> Self {
        let basis = vec![BasisElement {
            name: "1".into(),
            degree: 0,
        }];
        RingPresentation::new("point", basis, 0, 0, Some(vec![0]), ProductTable::new())
            .expect("point ring is valid")
    }

    /// Cohomology of a closed orientable surface of genus `g`, with symplectic
    /// basis `a_i·b_i = [S]`.
    pub fn surface(g: usize) -> Self {
        let mut basis = vec![BasisElement {
            name: "1".into(),
            degree: 0,
        }];
        for i in 1..=g {
            for s in ["a", "b"] {
                basis.push(BasisElement {
                    name: format!("{s}{i}"),
                    degree: 1,
                });
            }
        }
        basis.push(BasisElement {
            name: "w".into(),
            degree: 2,
        });
        let top = basis.len() - 1;
        let mut products = ProductTable::new();
        for i in 0..g {
            products.insert((1 + 2 * i, 2 + 2 * i), vec![(top, Rational::one())]);
        }
        RingPresentation::new(format!("surface-{g}"), basis, 0, top, None, products)
            .expect("surface ring is valid")
    }

    /// Parses the JSON ring format and validates every axiom.
    pub fn from_json(doc: &str) -> Result<Self, RingError> {
        let doc: RingDocument =
            serde_json::from_str(doc).map_err(|e| RingError::Parse(e.to_string()))?;
        let basis: Vec<BasisElement> = doc
            .basis
            .iter()
            .map(|b| BasisElement {
                name: b.name.clone(),
                degree: b.degree,
            })
            .collect();
        let idx = |name: &str| {
            basis
                .iter()
                .position(|b| b.name == name)
                .ok_or_else(|| RingError::UnknownName(name.to_string()))
        };
        let weights = match doc.basis.iter().filter(|b| b.weight.is_some()).count() {
            0 => None,
            c if c == doc.basis.len() => {
                Some(doc.basis.iter().map(|b| b.weight.unwrap()).collect())
            }
            _ => return Err(RingError::PartialWeights),
        };
        let mut products = ProductTable::new();
        for p in &doc.mult {
            let mut out = Vec::new();
            for (name, coeff) in &p.out {
                out.push((idx(name)?, parse_rational(coeff)?));
            }
            products.insert((idx(&p.l)?, idx(&p.r)?), out);
        }
        let unit = idx(&doc.unit)?;
        let fundamental = idx(&doc.fundamental)?;
        RingPresentation::new(
            doc.name.unwrap_or_else(|| "custom".into()),
            basis,
            unit,
            fundamental,
            weights,
            products,
        )
    }

    /// Serializes to the JSON ring format, listing every nonzero product
    /// except those involving the unit.
    pub fn to_json(&self) -> String {
        let doc = RingDocument {
            name: Some(self.name.clone()),
            basis: self
                .basis
                .iter()
                .enumerate()
                .map(|(i, b)| BasisDocument {
                    name: b.name.clone(),
                    degree: b.degree,
                    weight: self.weights.as_ref().map(|w| w[i]),
                })
                .collect(),
            unit: self.basis[self.unit].name.clone(),
            fundamental: self.basis[self.fundamental].name.clone(),
            mult: (0..self.len())
                .flat_map(|l| (0..self.len()).map(move |r| (l, r)))
                .filter(|&(l, r)| l != self.unit && r != self.unit && !self.table[l][r].is_empty())
                .map(|(l, r)| ProductDocument {
                    l: self.basis[l].name.clone(),
                    r: self.basis[r].name.clone(),
                    out: self.table[l][r]
                        .iter()
                        .map(|(o, c)| (self.basis[*o].name.clone(), c.to_string()))
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("ring serializes")
    }
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.unit == other.unit
            && self.fundamental == other.fundamental
            && self.weights == other.weights
            && self.table == other.table
    }
}

fn parse_rational(s: &str) -> Result<Rational, RingError> {
    let bad = || RingError::BadCoefficient(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Gauss-Jordan on an `m × 2m` augmented matrix; returns the right half.
fn invert(mut aug: Vec<Vec<Rational>>, m: usize) -> Option<Vec<Vec<Rational>>> {
    for col in 0..m {
        let piv = (col..m).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, piv);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= inv;
        }
        let pivot = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, &v) in row.iter_mut().zip(&pivot) {
                    *x -= v * f;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[m..].to_vec()).collect())
}

#[derive(Serialize, Deserialize)]
struct RingDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    basis: Vec<BasisDocument>,
    unit: String,
    fundamental: String,
    #[serde(default)]
    mult: Vec<ProductDocument>,
}

#[derive(Serialize, Deserialize)]
struct BasisDocument {
    name: String,
    degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<i32>,
}

#[derive(Serialize, Deserialize)]
struct ProductDocument {
    l: String,
    r: String,
    out: Vec<(String, String)>,
}

/// Checks that `Σ_j (-1)^{deg b_j^*} b_j · b_j^*` equals `χ(X)·[X]`.
pub fn contracted_diagonal(ring: &RingPresentation) -> Combination {
    let mut acc = BTreeMap::new();
    for t in ring.diagonal().terms {
        for &(o, c) in ring.mul(t.left, t.right) {
            add_into(&mut acc, o, t.coeff * c);
        }
    }
    acc.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn elliptic_products() {
        let e = RingPresentation::elliptic_curve();
        assert_eq!(e.len(), 4);
        assert_eq!(e.euler_characteristic(), 0);
        assert_eq!(e.mul(1, 2), &[(3, r(1))]);
        assert_eq!(e.mul(2, 1), &[(3, r(-1))]);
        assert!(e.mul(1, 1).is_empty());
        assert!(e.mul(2, 2).is_empty());
        assert_eq!(e.weights(), Some(&[0, 1, -1, 0][..]));
    }

    #[test]
    fn elliptic_diagonal() {
        let e = RingPresentation::elliptic_curve();
        let diag = e.diagonal();
        let terms: Vec<(usize, usize, i8)> = diag
            .terms
            .iter()
            .map(|t| (t.left, t.right, t.sign().unwrap()))
            .collect();
        assert_eq!(terms, vec![(0, 3, 1), (1, 2, -1), (2, 1, 1), (3, 0, 1)]);
        let graded: Vec<(usize, usize, i8)> = diag
            .graded_terms
            .iter()
            .map(|t| (t.left, t.right, t.sign().unwrap()))
            .collect();
        assert_eq!(graded, vec![(1, 2, -1), (2, 1, 1)]);
    }

    #[test]
    fn point_diagonal() {
        let p = RingPresentation::point();
        let d = p.diagonal();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(
            (d.terms[0].left, d.terms[0].right, d.terms[0].sign()),
            (0, 0, Some(1))
        );
        assert_eq!(p.euler_characteristic(), 1);
    }

    #[test]
    fn genus_two_surface() {
        let s = RingPresentation::surface(2);
        assert_eq!(s.len(), 6);
        assert_eq!(s.euler_characteristic(), -2);
    }

    #[test]
    fn contraction_gives_euler_characteristic() {
        for ring in [
            RingPresentation::elliptic_curve(),
            RingPresentation::point(),
            RingPresentation::surface(2),
            RingPresentation::surface(3),
        ] {
            let chi = ring.euler_characteristic();
            let c = contracted_diagonal(&ring);
            if chi == 0 {
                assert!(c.is_empty());
            } else {
                assert_eq!(c, vec![(ring.fundamental(), r(chi))]);
            }
        }
    }

    #[test]
    fn dual_of_dual() {
        for ring in [
            RingPresentation::elliptic_curve(),
            RingPresentation::surface(2),
        ] {
            let top = ring.top_degree();
            for i in 0..ring.len() {
                // ⟨b_j^*, e_i⟩ = δ_ij forces e_i = (-1)^{deg b_i (top - deg b_i)} b_i.
                let d = ring.degree(i);
                let expected = koszul(d, top - d);
                for j in 0..ring.len() {
                    let pairing: Rational = ring
                        .dual(j)
                        .iter()
                        .map(|&(k, c)| c * ring.pairing(k, i))
                        .sum();
                    let want = if i == j { expected } else { r(0) };
                    assert_eq!(pairing, want, "ring {} i={i} j={j}", ring.name());
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let e = RingPresentation::elliptic_curve();
        let back = RingPresentation::from_json(&e.to_json()).unwrap();
        assert_eq!(back, e);
        let doc = r#"{"basis":[{"name":"1","degree":0,"weight":0},{"name":"x","degree":1,"weight":1},
            {"name":"y","degree":1,"weight":-1},{"name":"xy","degree":2,"weight":0}],
            "unit":"1","fundamental":"xy","mult":[{"l":"x","r":"y","out":[["xy","1"]]}]}"#;
        assert_eq!(RingPresentation::from_json(doc).unwrap(), e);
    }

    #[test]
    fn rejects_idempotent_odd_class() {
        let doc = r#"{"basis":[{"name":"1","degree":0},{"name":"x","degree":1},
            {"name":"y","degree":1},{"name":"xy","degree":2}],
            "unit":"1","fundamental":"xy",
            "mult":[{"l":"x","r":"y","out":[["xy","1"]]},{"l":"x","r":"x","out":[["x","1"]]}]}"#;
        let err = RingPresentation::from_json(doc).unwrap_err();
        assert!(matches!(err, RingError::NotHomogeneous { .. }), "{err}");
        assert!(err.to_string().contains("in degree"));
    }

    #[test]
    fn rejects_degenerate_pairing() {
        let doc = r#"{"basis":[{"name":"1","degree":0},{"name":"x","degree":1},
            {"name":"y","degree":1},{"name":"xy","degree":2}],
            "unit":"1","fundamental":"xy","mult":[]}"#;
        assert!(matches!(
            RingPresentation::from_json(doc),
            Err(RingError::DegeneratePairing(1, 1))
        ));
    }

    #[test]
    fn rejects_wrong_top_dimension() {
        let doc = r#"{"basis":[{"name":"1","degree":0},{"name":"u","degree":2},
            {"name":"v","degree":2}],"unit":"1","fundamental":"u","mult":[]}"#;
        assert!(matches!(
            RingPresentation::from_json(doc),
            Err(RingError::TopDimension {
                degree: 2,
                count: 2
            })
        ));
    }

    #[test]
    fn rejects_non_associative() {
        // (a·b)·c = c·c = t while b·c = 0.
        let doc = r#"{"basis":[{"name":"1","degree":0},{"name":"a","degree":1},{"name":"b","degree":1},
            {"name":"c","degree":2},{"name":"d","degree":2},{"name":"e","degree":3},{"name":"f","degree":3},
            {"name":"t","degree":4}],
            "unit":"1","fundamental":"t",
            "mult":[{"l":"a","r":"b","out":[["c","1"]]},{"l":"c","r":"c","out":[["t","1"]]},
                    {"l":"d","r":"d","out":[["t","1"]]},{"l":"a","r":"e","out":[["t","1"]]},
                    {"l":"b","r":"f","out":[["t","1"]]}]}"#;
        let err = RingPresentation::from_json(doc).unwrap_err();
        assert!(matches!(err, RingError::NotAssociative(..)), "{err}");
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(1, 2));
        assert_eq!(parse_rational("-2").unwrap(), r(-2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }
}
