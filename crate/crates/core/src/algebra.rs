//! Superalgebras given by structure constants on a homogeneous basis.
//!
//! The basis is ordered even-first: global indices `0..n` are the even
//! vectors `X_0..X_{n-1}`, indices `n..n+m` the odd vectors `Y_1..Y_m`.
//! The four structure tensors of the law (even·even, even·odd, odd·even,
//! odd·odd) are held together in one sparse product table indexed by
//! global basis positions; the parity of every stored result is checked
//! on insertion, so a `SuperAlgebra` can never hold an ill-graded product.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::AlgebraError;
use crate::rational::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Degree of a product of homogeneous elements.
    pub fn add(self, other: Parity) -> Parity {
        if self.is_odd() != other.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// True when `(-1)^{ab}` is `-1`, i.e. both degrees are odd.
    pub fn sign_flip(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

/// Element of `L = L_0 ⊕ L_1`, split into even and odd coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedVector {
    pub even: Vec<Rational>,
    pub odd: Vec<Rational>,
}

impl GradedVector {
    pub fn zero(n: usize, m: usize) -> Self {
        GradedVector {
            even: vec![Rational::zero(); n],
            odd: vec![Rational::zero(); m],
        }
    }

    pub fn new(even: Vec<Rational>, odd: Vec<Rational>) -> Self {
        GradedVector { even, odd }
    }

    /// Basis vector `X_i` (0-based).
    pub fn even_basis(n: usize, m: usize, i: usize) -> Self {
        let mut v = Self::zero(n, m);
        v.even[i] = Rational::from_integer(1.into());
        v
    }

    /// Basis vector `Y_{j+1}` (0-based odd position `j`).
    pub fn odd_basis(n: usize, m: usize, j: usize) -> Self {
        let mut v = Self::zero(n, m);
        v.odd[j] = Rational::from_integer(1.into());
        v
    }

    /// Basis vector at a global (even-first) position.
    pub fn basis(n: usize, m: usize, global: usize) -> Self {
        if global < n {
            Self::even_basis(n, m, global)
        } else {
            Self::odd_basis(n, m, global - n)
        }
    }

    pub fn from_global(n: usize, coords: &[Rational]) -> Self {
        GradedVector {
            even: coords[..n].to_vec(),
            odd: coords[n..].to_vec(),
        }
    }

    pub fn to_global(&self) -> Vec<Rational> {
        self.even.iter().chain(&self.odd).cloned().collect()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }

    pub fn is_zero(&self) -> bool {
        self.even.iter().chain(&self.odd).all(Zero::is_zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.even.iter().all(Zero::is_zero) || self.odd.iter().all(Zero::is_zero)
    }

    /// Degree of a homogeneous vector; the zero vector counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let even_zero = self.even.iter().all(Zero::is_zero);
        let odd_zero = self.odd.iter().all(Zero::is_zero);
        match (even_zero, odd_zero) {
            (_, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            (false, false) => None,
        }
    }

    pub fn add(&self, other: &GradedVector) -> GradedVector {
        GradedVector {
            even: self.even.iter().zip(&other.even).map(|(a, b)| a + b).collect(),
            odd: self.odd.iter().zip(&other.odd).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &GradedVector) -> GradedVector {
        GradedVector {
            even: self.even.iter().zip(&other.even).map(|(a, b)| a - b).collect(),
            odd: self.odd.iter().zip(&other.odd).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> GradedVector {
        GradedVector {
            even: self.even.iter().map(|a| a * c).collect(),
            odd: self.odd.iter().map(|a| a * c).collect(),
        }
    }
}

/// Sparse linear combination of basis vectors by global index, sorted by
/// index with no zero coefficients.
pub type Terms = Vec<(usize, Rational)>;

#[derive(Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    n: usize,
    m: usize,
    labels_even: Vec<String>,
    labels_odd: Vec<String>,
    table: Vec<Vec<Terms>>,
}

impl SuperAlgebra {
    /// The zero law on dimensions `(n, m)`, labelled `X0..X{n-1}`, `Y1..Ym`.
    pub fn abelian(n: usize, m: usize) -> Result<Self, AlgebraError> {
        if n + m == 0 {
            return Err(AlgebraError::EmptyAlgebra);
        }
        Ok(Self::blank(n, m))
    }

    /// The zero-dimensional algebra, the neutral element of [`direct_sum`].
    ///
    /// [`direct_sum`]: crate::transform::direct_sum
    pub fn zero_dimensional() -> Self {
        Self::blank(0, 0)
    }

    pub(crate) fn blank(n: usize, m: usize) -> Self {
        let d = n + m;
        SuperAlgebra {
            n,
            m,
            labels_even: default_even_labels(n),
            labels_odd: default_odd_labels(m),
            table: vec![vec![Vec::new(); d]; d],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn dim(&self) -> usize {
        self.n + self.m
    }

    pub fn parity_of(&self, global: usize) -> Parity {
        if global < self.n {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn labels_even(&self) -> &[String] {
        &self.labels_even
    }

    pub fn labels_odd(&self) -> &[String] {
        &self.labels_odd
    }

    pub fn label(&self, global: usize) -> &str {
        if global < self.n {
            &self.labels_even[global]
        } else {
            &self.labels_odd[global - self.n]
        }
    }

    /// Global index of a label, if present.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels_even
            .iter()
            .chain(&self.labels_odd)
            .position(|l| l == label)
    }

    /// Replaces the basis labels. Labels must be unique across both parts.
    pub fn set_labels(&mut self, even: Vec<String>, odd: Vec<String>) -> Result<(), AlgebraError> {
        if even.len() != self.n || odd.len() != self.m {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("({}, {}) labels", self.n, self.m),
                found: format!("({}, {})", even.len(), odd.len()),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for l in even.iter().chain(&odd) {
            if !seen.insert(l.as_str()) {
                return Err(AlgebraError::DimensionMismatch {
                    expected: "unique labels".into(),
                    found: format!("duplicate label {l}"),
                });
            }
        }
        self.labels_even = even;
        self.labels_odd = odd;
        Ok(())
    }

    pub fn with_labels(mut self, even: Vec<String>, odd: Vec<String>) -> Result<Self, AlgebraError> {
        self.set_labels(even, odd)?;
        Ok(self)
    }

    /// Product of two basis vectors as sparse global terms.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    /// Sets `[e_i, e_j]`; duplicate indices are summed and zeros dropped.
    pub fn set_product(&mut self, i: usize, j: usize, terms: Terms) -> Result<(), AlgebraError> {
        let d = self.dim();
        for &idx in [i, j].iter().chain(terms.iter().map(|(k, _)| k)) {
            if idx >= d {
                return Err(AlgebraError::IndexOutOfRange { index: idx, size: d });
            }
        }
        let target = self.parity_of(i).add(self.parity_of(j));
        let mut dense: Vec<Rational> = vec![Rational::zero(); d];
        for (k, c) in terms {
            dense[k] += c;
        }
        let normalized: Terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if normalized.iter().any(|&(k, _)| self.parity_of(k) != target) {
            return Err(AlgebraError::GradingViolation {
                left: self.label(i).to_string(),
                right: self.label(j).to_string(),
            });
        }
        self.table[i][j] = normalized;
        Ok(())
    }

    /// Adds `c·e_k` to `[e_i, e_j]`.
    pub fn add_to_product(&mut self, i: usize, j: usize, k: usize, c: Rational) -> Result<(), AlgebraError> {
        let mut terms = self.table[i][j].clone();
        terms.push((k, c));
        self.set_product(i, j, terms)
    }

    /// Coefficient of `e_k` in `[e_i, e_j]` (global indices).
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table[i][j]
            .iter()
            .find(|(idx, _)| *idx == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// `C^k_{ij}`: `[X_i, X_j]` coefficient on `X_k`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> Rational {
        self.constant(i, j, k)
    }

    /// `D^k_{ij}`: `[X_i, Y_j]` coefficient on `Y_k` (odd indices 0-based).
    pub fn d(&self, i: usize, j: usize, k: usize) -> Rational {
        self.constant(i, self.n + j, self.n + k)
    }

    /// `E^k_{ij}`: `[Y_i, X_j]` coefficient on `Y_k`.
    pub fn e(&self, i: usize, j: usize, k: usize) -> Rational {
        self.constant(self.n + i, j, self.n + k)
    }

    /// `F^k_{ij}`: `[Y_i, Y_j]` coefficient on `X_k`.
    pub fn f(&self, i: usize, j: usize, k: usize) -> Rational {
        self.constant(self.n + i, self.n + j, k)
    }

    /// Iterates over the nonzero basis products `(i, j, terms)`.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> {
        self.table.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, t)| !t.is_empty())
                .map(move |(j, t)| (i, j, t.as_slice()))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.nonzero_products().next().is_none()
    }

    /// Equality of dimensions and structure constants, ignoring labels.
    pub fn same_law(&self, other: &SuperAlgebra) -> bool {
        self.n == other.n && self.m == other.m && self.table == other.table
    }

    pub(crate) fn check_vector(&self, v: &GradedVector) -> Result<(), AlgebraError> {
        if v.dims() != (self.n, self.m) {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("({}, {})", self.n, self.m),
                found: format!("{:?}", v.dims()),
            });
        }
        Ok(())
    }

    /// Bilinear product `[u, v]`.
    pub fn bracket(&self, u: &GradedVector, v: &GradedVector) -> Result<GradedVector, AlgebraError> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        let out = self.bracket_global(&u.to_global(), &v.to_global());
        Ok(GradedVector::from_global(self.n, &out))
    }

    /// `[u, v]` on global coordinate vectors.
    pub(crate) fn bracket_global(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let row = &self.table[i][j];
                if row.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in row {
                    out[k.to_owned()] += &ab * c;
                }
            }
        }
        out
    }

    /// `[e_i, v]` for sparse `v`, accumulated into `out` with factor `scale`.
    pub(crate) fn acc_basis_left(&self, i: usize, v: &[(usize, Rational)], scale: &Rational, out: &mut [Rational]) {
        for (j, b) in v {
            let sb = scale * b;
            for (k, c) in &self.table[i][*j] {
                out[*k] += &sb * c;
            }
        }
    }

    /// `[v, e_j]` for sparse `v`, accumulated into `out` with factor `scale`.
    pub(crate) fn acc_basis_right(&self, v: &[(usize, Rational)], j: usize, scale: &Rational, out: &mut [Rational]) {
        for (i, a) in v {
            let sa = scale * a;
            for (k, c) in &self.table[*i][j] {
                out[*k] += &sa * c;
            }
        }
    }
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SuperAlgebra ({}, {}) {{", self.n, self.m)?;
        for (i, j, terms) in self.nonzero_products() {
            let rhs: Vec<String> = terms
                .iter()
                .map(|(k, c)| format!("{} {}", format_rational(c), self.label(*k)))
                .collect();
            writeln!(f, "  [{},{}] = {}", self.label(i), self.label(j), rhs.join(" + "))?;
        }
        write!(f, "}}")
    }
}

pub fn default_even_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("X{i}")).collect()
}

pub fn default_odd_labels(m: usize) -> Vec<String> {
    (1..=m).map(|j| format!("Y{j}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn grading_is_enforced() {
        let mut a = SuperAlgebra::abelian(2, 2).unwrap();
        // [X0, X0] = Y1 is ill-graded
        let err = a.set_product(0, 0, vec![(2, int(1))]).unwrap_err();
        assert!(matches!(err, AlgebraError::GradingViolation { .. }));
        a.set_product(0, 2, vec![(3, int(1))]).unwrap();
        assert_eq!(a.d(0, 0, 1), int(1));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut a = SuperAlgebra::abelian(2, 0).unwrap();
        a.set_product(0, 0, vec![(1, int(1)), (1, int(-1))]).unwrap();
        assert!(a.is_abelian());
    }

    #[test]
    fn bracket_of_zero_is_zero() {
        let mut a = SuperAlgebra::abelian(2, 2).unwrap();
        a.set_product(2, 2, vec![(0, frac(1, 2))]).unwrap();
        let z = GradedVector::zero(2, 2);
        let y1 = GradedVector::odd_basis(2, 2, 0);
        assert!(a.bracket(&z, &y1).unwrap().is_zero());
        assert!(a.bracket(&y1, &z).unwrap().is_zero());
        assert_eq!(a.bracket(&y1, &y1).unwrap(), GradedVector::even_basis(2, 2, 0).scale(&frac(1, 2)));
    }

    #[test]
    fn bracket_rejects_wrong_sizes() {
        let a = SuperAlgebra::abelian(1, 1).unwrap();
        let bad = GradedVector::zero(2, 1);
        assert!(a.bracket(&bad, &bad).is_err());
    }

    #[test]
    fn parity_of_vectors() {
        let v = GradedVector::new(vec![int(1)], vec![int(0)]);
        assert_eq!(v.parity(), Some(Parity::Even));
        let w = GradedVector::new(vec![int(1)], vec![int(1)]);
        assert_eq!(w.parity(), None);
        assert!(!w.is_homogeneous());
    }
}
