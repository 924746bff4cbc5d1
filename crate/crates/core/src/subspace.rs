//! Graded subspaces `U = U_0 ⊕ U_1` stored as two RREF row blocks, so equal
//! subspaces have identical representations.

use crate::algebra::{GradedVector, SuperAlgebra};
use crate::error::AlgebraError;
use crate::linalg::{is_zero_vec, rref_rows, Matrix};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    n: usize,
    m: usize,
    even_basis: Vec<Vec<Rational>>,
    odd_basis: Vec<Vec<Rational>>,
}

impl GradedSubspace {
    /// Span of the given even and odd coordinate vectors.
    pub fn span(n: usize, m: usize, even: Vec<Vec<Rational>>, odd: Vec<Vec<Rational>>) -> Self {
        GradedSubspace {
            n,
            m,
            even_basis: rref_rows(even, n),
            odd_basis: rref_rows(odd, m),
        }
    }

    /// Span of homogeneous vectors. Mixed vectors are rejected because their
    /// span is not graded in general.
    pub fn from_homogeneous(n: usize, m: usize, vectors: &[GradedVector]) -> Result<Self, AlgebraError> {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for v in vectors {
            if v.dims() != (n, m) {
                return Err(AlgebraError::DimensionMismatch {
                    expected: format!("({n}, {m})"),
                    found: format!("{:?}", v.dims()),
                });
            }
            if !v.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous);
            }
            if !is_zero_vec(&v.even) {
                even.push(v.even.clone());
            }
            if !is_zero_vec(&v.odd) {
                odd.push(v.odd.clone());
            }
        }
        Ok(Self::span(n, m, even, odd))
    }

    pub fn zero(n: usize, m: usize) -> Self {
        Self::span(n, m, Vec::new(), Vec::new())
    }

    /// The whole space `L`.
    pub fn whole(n: usize, m: usize) -> Self {
        Self::span(n, m, identity_rows(n), identity_rows(m))
    }

    /// `L_0`.
    pub fn even_part(n: usize, m: usize) -> Self {
        Self::span(n, m, identity_rows(n), Vec::new())
    }

    /// `L_1`.
    pub fn odd_part(n: usize, m: usize) -> Self {
        Self::span(n, m, Vec::new(), identity_rows(m))
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn even_basis(&self) -> &[Vec<Rational>] {
        &self.even_basis
    }

    pub fn odd_basis(&self) -> &[Vec<Rational>] {
        &self.odd_basis
    }

    pub fn dim(&self) -> usize {
        self.even_basis.len() + self.odd_basis.len()
    }

    pub fn even_dim(&self) -> usize {
        self.even_basis.len()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Homogeneous basis vectors (even rows first).
    pub fn basis_vectors(&self) -> Vec<GradedVector> {
        let zero_even = vec![Rational::from_integer(0.into()); self.n];
        let zero_odd = vec![Rational::from_integer(0.into()); self.m];
        self.even_basis
            .iter()
            .map(|e| GradedVector::new(e.clone(), zero_odd.clone()))
            .chain(self.odd_basis.iter().map(|o| GradedVector::new(zero_even.clone(), o.clone())))
            .collect()
    }

    /// Exact membership test: `v ∈ U` iff both parts lie in the row spaces.
    pub fn contains(&self, v: &GradedVector) -> Result<bool, AlgebraError> {
        if v.dims() != (self.n, self.m) {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("({}, {})", self.n, self.m),
                found: format!("{:?}", v.dims()),
            });
        }
        Ok(in_row_space(&self.even_basis, &v.even, self.n) && in_row_space(&self.odd_basis, &v.odd, self.m))
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v).unwrap_or(false))
    }

    pub fn intersection(&self, other: &GradedSubspace) -> GradedSubspace {
        GradedSubspace {
            n: self.n,
            m: self.m,
            even_basis: intersect_rows(&self.even_basis, &other.even_basis, self.n),
            odd_basis: intersect_rows(&self.odd_basis, &other.odd_basis, self.m),
        }
    }
}

/// `member(S, v)`.
pub fn member(s: &GradedSubspace, v: &GradedVector) -> Result<bool, AlgebraError> {
    s.contains(v)
}

/// Span of `[u, w]` over basis vectors `u` of `U` and `w` of `W`.
pub fn product_subspace(
    a: &SuperAlgebra,
    u: &GradedSubspace,
    w: &GradedSubspace,
) -> Result<GradedSubspace, AlgebraError> {
    for s in [u, w] {
        if s.ambient() != a.dims() {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("{:?}", a.dims()),
                found: format!("{:?}", s.ambient()),
            });
        }
    }
    let (n, m) = a.dims();
    let us: Vec<Vec<Rational>> = u.basis_vectors().iter().map(GradedVector::to_global).collect();
    let ws: Vec<Vec<Rational>> = w.basis_vectors().iter().map(GradedVector::to_global).collect();
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for x in &us {
        for y in &ws {
            let p = a.bracket_global(x, y);
            let (pe, po) = p.split_at(n);
            if !is_zero_vec(pe) {
                even.push(pe.to_vec());
            }
            if !is_zero_vec(po) {
                odd.push(po.to_vec());
            }
        }
    }
    Ok(GradedSubspace::span(n, m, even, odd))
}

fn identity_rows(k: usize) -> Vec<Vec<Rational>> {
    Matrix::identity(k).row_vectors()
}

fn in_row_space(basis: &[Vec<Rational>], v: &[Rational], cols: usize) -> bool {
    if is_zero_vec(v) {
        return true;
    }
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    rref_rows(rows, cols).len() == basis.len()
}

/// Intersection of two row spaces via the null space of `[A; -B]^T`.
fn intersect_rows(a: &[Vec<Rational>], b: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve Σ s_i a_i = Σ t_j b_j; columns are the a_i followed by -b_j.
    let k = a.len() + b.len();
    let mut m = Matrix::zeros(cols, k);
    for (i, row) in a.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            m.set(c, i, v.clone());
        }
    }
    for (j, row) in b.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            m.set(c, a.len() + j, -v.clone());
        }
    }
    let vectors = m
        .nullspace()
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![Rational::from_integer(0.into()); cols];
            for (i, row) in a.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    v[c] += &coeffs[i] * x;
                }
            }
            v
        })
        .collect();
    rref_rows(vectors, cols)
}
