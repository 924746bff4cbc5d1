//! Characteristic sequence: lexicographically largest Jordan types of `R_X`
//! on `L_0` and `L_1` over even `X` outside `[L_0, L_0]`.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{GradedVector, SuperAlgebra};
use crate::error::AlgebraError;
use crate::identities::right_mul_basis;
use crate::linalg::Matrix;
use crate::rational::{int, Rational};
use crate::subspace::{product_subspace, GradedSubspace};

pub const DEFAULT_SAMPLES: usize = 16;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CharSequence {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
}

impl CharSequence {
    pub fn new(even: Vec<usize>, odd: Vec<usize>) -> Self {
        CharSequence { even, odd }
    }
}

impl fmt::Display for CharSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[usize]| p.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.even), join(&self.odd))
    }
}

/// Even candidates in the documented order: basis vectors, pairwise sums of
/// basis vectors, then `samples` seeded random integer vectors.
pub fn candidates(n: usize, samples: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for i in 0..n {
        let mut v = vec![Rational::zero(); n];
        v[i] = int(1);
        out.push(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![Rational::zero(); n];
            v[i] = int(1);
            v[j] = int(1);
            out.push(v);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        out.push((0..n).map(|_| int(rng.gen_range(-5..=5))).collect());
    }
    out
}

/// `R_X` for the even vector with coordinates `x`, as a full matrix.
pub(crate) fn even_operator(basis_ops: &[Matrix], x: &[Rational], d: usize) -> Matrix {
    let mut r = Matrix::zeros(d, d);
    for (op, c) in basis_ops.iter().zip(x) {
        if !c.is_zero() {
            r = r.add(&op.scale(c));
        }
    }
    r
}

pub fn char_sequence(a: &SuperAlgebra, samples: usize, seed: u64) -> Result<CharSequence, AlgebraError> {
    let (n, m) = a.dims();
    if n == 0 {
        return Err(AlgebraError::NoEvenPart);
    }
    let d = n + m;
    let l0 = GradedSubspace::even_part(n, m);
    let derived = product_subspace(a, &l0, &l0)?;
    let basis_ops: Vec<Matrix> = (0..n).map(|i| right_mul_basis(a, i)).collect();
    let mut best: Option<CharSequence> = None;
    for x in candidates(n, samples, seed) {
        let v = GradedVector::new(x.clone(), vec![Rational::zero(); m]);
        if derived.contains(&v)? {
            continue;
        }
        let r = even_operator(&basis_ops, &x, d);
        let even = r
            .block(0..n, 0..n)
            .nilpotent_jordan_type()
            .ok_or(AlgebraError::NonNilpotentOperator)?;
        let odd = r
            .block(n..d, n..d)
            .nilpotent_jordan_type()
            .ok_or(AlgebraError::NonNilpotentOperator)?;
        best = Some(match best {
            None => CharSequence { even, odd },
            Some(b) => CharSequence {
                even: b.even.max(even),
                odd: b.odd.max(odd),
            },
        });
    }
    best.ok_or(AlgebraError::NoCandidate)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_is_all_ones() {
        let a = SuperAlgebra::abelian(3, 2).unwrap();
        let s = char_sequence(&a, 4, 1).unwrap();
        assert_eq!(s, CharSequence::new(vec![1, 1, 1], vec![1, 1]));
        assert_eq!(s.to_string(), "(1,1,1 | 1,1)");
    }

    #[test]
    fn no_even_part() {
        let a = SuperAlgebra::abelian(0, 2).unwrap();
        assert_eq!(char_sequence(&a, 4, 1), Err(AlgebraError::NoEvenPart));
    }

    #[test]
    fn model_chain() {
        let mut a = SuperAlgebra::abelian(3, 2).unwrap();
        a.set_product(1, 0, vec![(2, int(1))]).unwrap();
        a.set_product(0, 0, vec![(1, int(1))]).unwrap();
        a.set_product(3, 0, vec![(4, int(1))]).unwrap();
        assert_eq!(char_sequence(&a, 0, 0).unwrap(), CharSequence::new(vec![3], vec![2]));
    }

    #[test]
    fn non_nilpotent_operator_reported() {
        let mut a = SuperAlgebra::abelian(2, 0).unwrap();
        a.set_product(1, 0, vec![(1, int(1))]).unwrap();
        assert_eq!(char_sequence(&a, 0, 0), Err(AlgebraError::NonNilpotentOperator));
    }

    #[test]
    fn lexicographic_order() {
        assert!(vec![2usize, 1] > vec![1, 1, 1]);
        assert!(CharSequence::new(vec![3], vec![1]) > CharSequence::new(vec![2, 1], vec![2]));
    }
}
