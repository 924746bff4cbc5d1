//! Basis changes, direct sums and monomial degenerations.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{default_even_labels, default_odd_labels, SuperAlgebra};
use crate::error::AlgebraError;
use crate::linalg::Matrix;
use crate::rational::{int, Rational};

/// An even invertible map `g = g_0 + g_1`. Column `j` of each block holds the
/// image of the `j`-th basis vector, i.e. the new basis in old coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    even: Matrix,
    odd: Matrix,
}

impl GradedMap {
    pub fn new(even: Matrix, odd: Matrix) -> Result<Self, AlgebraError> {
        if !even.is_square() {
            return Err(AlgebraError::DimensionMismatch {
                expected: "square even block".into(),
                found: format!("{}x{}", even.rows(), even.cols()),
            });
        }
        if !odd.is_square() {
            return Err(AlgebraError::DimensionMismatch {
                expected: "square odd block".into(),
                found: format!("{}x{}", odd.rows(), odd.cols()),
            });
        }
        if !even.is_invertible() {
            return Err(AlgebraError::SingularMap { block: "even" });
        }
        if !odd.is_invertible() {
            return Err(AlgebraError::SingularMap { block: "odd" });
        }
        Ok(GradedMap { even, odd })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        GradedMap {
            even: Matrix::identity(n),
            odd: Matrix::identity(m),
        }
    }

    /// Builds the map from new basis vectors given in old global coordinates.
    pub fn from_basis(n: usize, m: usize, even: &[Vec<Rational>], odd: &[Vec<Rational>]) -> Result<Self, AlgebraError> {
        let mut e = Matrix::zeros(n, even.len());
        for (j, v) in even.iter().enumerate() {
            if v.len() != n + m || v[n..].iter().any(|c| !c.is_zero()) {
                return Err(AlgebraError::NotHomogeneous);
            }
            for i in 0..n {
                e.set(i, j, v[i].clone());
            }
        }
        let mut o = Matrix::zeros(m, odd.len());
        for (j, v) in odd.iter().enumerate() {
            if v.len() != n + m || v[..n].iter().any(|c| !c.is_zero()) {
                return Err(AlgebraError::NotHomogeneous);
            }
            for i in 0..m {
                o.set(i, j, v[n + i].clone());
            }
        }
        GradedMap::new(e, o)
    }

    /// A random invertible map with small integer entries.
    pub fn random(n: usize, m: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut block = |k: usize| loop {
            let mut a = Matrix::zeros(k, k);
            for i in 0..k {
                for j in 0..k {
                    a.set(i, j, int(rng.gen_range(-3..=3)));
                }
            }
            if a.is_invertible() {
                return a;
            }
        };
        let even = block(n);
        let odd = block(m);
        GradedMap { even, odd }
    }

    pub fn even_block(&self) -> &Matrix {
        &self.even
    }

    pub fn odd_block(&self) -> &Matrix {
        &self.odd
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even.rows(), self.odd.rows())
    }

    /// The full block-diagonal matrix on the even-then-odd basis.
    pub fn full(&self) -> Matrix {
        let (n, m) = self.dims();
        let mut g = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, self.even.get(i, j).clone());
            }
        }
        for i in 0..m {
            for j in 0..m {
                g.set(n + i, n + j, self.odd.get(i, j).clone());
            }
        }
        g
    }

    pub fn inverse(&self) -> GradedMap {
        GradedMap {
            even: self.even.inverse().expect("invertible by construction"),
            odd: self.odd.inverse().expect("invertible by construction"),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        GradedMap {
            even: self.even.mul(&other.even),
            odd: self.odd.mul(&other.odd),
        }
    }
}

/// Transported law `[x, y]' = g^{-1}[g x, g y]`. Labels are kept.
pub fn apply_basis_change(a: &SuperAlgebra, g: &GradedMap) -> Result<SuperAlgebra, AlgebraError> {
    if g.dims() != a.dims() {
        return Err(AlgebraError::DimensionMismatch {
            expected: format!("{:?}", a.dims()),
            found: format!("{:?}", g.dims()),
        });
    }
    let d = a.dim();
    let full = g.full();
    let inv = g.inverse().full();
    let columns: Vec<Vec<Rational>> = (0..d).map(|j| full.column(j)).collect();
    let mut out = SuperAlgebra::blank(a.n(), a.m());
    out.set_labels(a.labels_even().to_vec(), a.labels_odd().to_vec())?;
    for i in 0..d {
        for j in 0..d {
            let p = a.bracket_global(&columns[i], &columns[j]);
            if p.iter().all(Zero::is_zero) {
                continue;
            }
            let coords = inv.mul_vec(&p);
            let terms = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            out.set_product(i, j, terms)?;
        }
    }
    Ok(out)
}

/// Block sum on dims `(n_A + n_B, m_A + m_B)`; basis order is
/// `X^A, X^B | Y^A, Y^B` and mixed products vanish.
pub fn direct_sum(a: &SuperAlgebra, b: &SuperAlgebra) -> SuperAlgebra {
    let (na, ma) = a.dims();
    let (nb, mb) = b.dims();
    let (n, m) = (na + nb, ma + mb);
    let map_a = |k: usize| if k < na { k } else { n + (k - na) };
    let map_b = |k: usize| if k < nb { na + k } else { n + ma + (k - nb) };
    let mut out = SuperAlgebra::blank(n, m);
    let even: Vec<String> = a.labels_even().iter().chain(b.labels_even()).cloned().collect();
    let odd: Vec<String> = a.labels_odd().iter().chain(b.labels_odd()).cloned().collect();
    if out.set_labels(even, odd).is_err() {
        out.set_labels(default_even_labels(n), default_odd_labels(m))
            .expect("default labels are distinct");
    }
    for (i, j, terms) in a.nonzero_products() {
        let t = terms.iter().map(|(k, c)| (map_a(*k), c.clone())).collect();
        out.set_product(map_a(i), map_a(j), t).expect("grading is inherited");
    }
    for (i, j, terms) in b.nonzero_products() {
        let t = terms.iter().map(|(k, c)| (map_b(*k), c.clone())).collect();
        out.set_product(map_b(i), map_b(j), t).expect("grading is inherited");
    }
    out
}

/// Exponents of the basis rescaling `e_i ↦ t^{w_i} e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingFamily {
    pub even_exponents: Vec<Rational>,
    pub odd_exponents: Vec<Rational>,
}

impl ScalingFamily {
    pub fn new(even_exponents: Vec<Rational>, odd_exponents: Vec<Rational>) -> Self {
        ScalingFamily {
            even_exponents,
            odd_exponents,
        }
    }

    pub fn zero(n: usize, m: usize) -> Self {
        ScalingFamily {
            even_exponents: vec![Rational::zero(); n],
            odd_exponents: vec![Rational::zero(); m],
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even_exponents.len(), self.odd_exponents.len())
    }

    fn weight(&self, global: usize) -> &Rational {
        let n = self.even_exponents.len();
        if global < n {
            &self.even_exponents[global]
        } else {
            &self.odd_exponents[global - n]
        }
    }

    /// Exponent of `t` acquired by the constant `γ^k_{ij}`.
    pub fn exponent(&self, i: usize, j: usize, k: usize) -> Rational {
        self.weight(i) + self.weight(j) - self.weight(k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivergentTerm {
    pub left: String,
    pub right: String,
    pub target: String,
    pub exponent: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degeneration {
    Limit(SuperAlgebra),
    Diverges(DivergentTerm),
}

impl Degeneration {
    pub fn limit(self) -> Option<SuperAlgebra> {
        match self {
            Degeneration::Limit(a) => Some(a),
            Degeneration::Diverges(_) => None,
        }
    }
}

/// Limit `t → 0` of the law rescaled by `s`.
pub fn degeneration_limit(a: &SuperAlgebra, s: &ScalingFamily) -> Result<Degeneration, AlgebraError> {
    if s.dims() != a.dims() {
        return Err(AlgebraError::DimensionMismatch {
            expected: format!("{:?}", a.dims()),
            found: format!("{:?}", s.dims()),
        });
    }
    let mut out = SuperAlgebra::blank(a.n(), a.m());
    out.set_labels(a.labels_even().to_vec(), a.labels_odd().to_vec())?;
    for (i, j, terms) in a.nonzero_products() {
        let mut kept = Vec::new();
        for (k, c) in terms {
            let e = s.exponent(i, j, *k);
            if e.is_negative() {
                return Ok(Degeneration::Diverges(DivergentTerm {
                    left: a.label(i).to_string(),
                    right: a.label(j).to_string(),
                    target: a.label(*k).to_string(),
                    exponent: crate::rational::format_rational(&e),
                }));
            }
            if e.is_zero() {
                kept.push((*k, c.clone()));
            }
        }
        if !kept.is_empty() {
            out.set_product(i, j, kept)?;
        }
    }
    Ok(Degeneration::Limit(out))
}

/// Applies the scaling at a fixed nonzero value of `t` when all exponents are
/// integers; used to cross-check [`degeneration_limit`] against a genuine
/// basis change.
pub fn scaling_at(s: &ScalingFamily, t: &Rational) -> Option<GradedMap> {
    let power = |e: &Rational| -> Option<Rational> {
        if !e.is_integer() {
            return None;
        }
        let k = e.to_integer();
        let k: i32 = k.try_into().ok()?;
        let mut r = Rational::one();
        let base = if k < 0 { t.recip() } else { t.clone() };
        for _ in 0..k.unsigned_abs() {
            r *= &base;
        }
        Some(r)
    };
    let diag = |es: &[Rational]| -> Option<Matrix> {
        let mut d = Matrix::identity(es.len());
        for (i, e) in es.iter().enumerate() {
            d.set(i, i, power(e)?);
        }
        Some(d)
    };
    GradedMap::new(diag(&s.even_exponents)?, diag(&s.odd_exponents)?).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::is_leibniz;
    use crate::rational::frac;

    fn model(n: usize, m: usize) -> SuperAlgebra {
        let mut a = SuperAlgebra::abelian(n, m).unwrap();
        for i in 0..n - 1 {
            a.set_product(i, 0, vec![(i + 1, int(1))]).unwrap();
        }
        for j in 0..m - 1 {
            a.set_product(n + j, 0, vec![(n + j + 1, int(1))]).unwrap();
        }
        a
    }

    #[test]
    fn identity_change_is_noop() {
        let a = model(3, 2);
        let b = apply_basis_change(&a, &GradedMap::identity(3, 2)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn change_round_trips() {
        let a = model(3, 2);
        let g = GradedMap::random(3, 2, 7);
        let b = apply_basis_change(&a, &g).unwrap();
        assert!(is_leibniz(&b));
        let back = apply_basis_change(&b, &g.inverse()).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn singular_block_rejected() {
        let e = Matrix::zeros(1, 1);
        assert_eq!(
            GradedMap::new(e, Matrix::identity(1)),
            Err(AlgebraError::SingularMap { block: "even" })
        );
    }

    #[test]
    fn halving_x0() {
        // [X0,X0] = X1; X0' = 2 X0 gives [X0',X0'] = 4 X1.
        let mut a = SuperAlgebra::abelian(2, 0).unwrap();
        a.set_product(0, 0, vec![(1, int(1))]).unwrap();
        let mut e = Matrix::identity(2);
        e.set(0, 0, int(2));
        let b = apply_basis_change(&a, &GradedMap::new(e, Matrix::identity(0)).unwrap()).unwrap();
        assert_eq!(b.constant(0, 0, 1), int(4));
    }

    #[test]
    fn sum_with_empty_is_same() {
        let a = model(2, 2);
        assert_eq!(direct_sum(&a, &SuperAlgebra::zero_dimensional()), a);
    }

    #[test]
    fn sum_reindexes_odd_part() {
        let a = model(2, 2);
        let b = model(1, 2);
        let s = direct_sum(&a, &b);
        assert_eq!(s.dims(), (3, 4));
        // [Y1^B, X0^B] = Y2^B lands at global (5, 2) -> 6
        assert_eq!(s.constant(5, 2, 6), int(1));
        assert_eq!(s.constant(3, 0, 4), int(1));
        assert!(is_leibniz(&s));
    }

    #[test]
    fn zero_scaling_is_identity() {
        let a = model(3, 3);
        let d = degeneration_limit(&a, &ScalingFamily::zero(3, 3)).unwrap();
        assert_eq!(d, Degeneration::Limit(a));
    }

    #[test]
    fn negative_exponent_diverges() {
        // the only product is [X0,X0] = X1, with exponent 0 + 0 - 1
        let a = model(2, 1);
        let s = ScalingFamily::new(vec![int(0), int(1)], vec![int(0)]);
        match degeneration_limit(&a, &s).unwrap() {
            Degeneration::Diverges(t) => {
                assert_eq!((t.left.as_str(), t.right.as_str(), t.target.as_str()), ("X0", "X0", "X1"));
                assert_eq!(t.exponent, "-1");
            }
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn limit_agrees_with_scaling_when_exponents_vanish() {
        let a = model(3, 2);
        let s = ScalingFamily::new(vec![int(1), int(2), int(3)], vec![frac(1, 1), int(2)]);
        let lim = degeneration_limit(&a, &s).unwrap().limit().unwrap();
        let g = scaling_at(&s, &frac(1, 3)).unwrap();
        assert_eq!(apply_basis_change(&a, &g).unwrap(), lim);
    }
}
