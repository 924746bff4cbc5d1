//! Leibniz laws from an associative superalgebra with a degree-zero map `D`
//! satisfying `D(a(Db)) = (Da)(Db) = D((Da)b)`:
//! `⟨a,b⟩ = a(Db) − (−1)^{|a||b|}(Db)a`.

use thiserror::Error;

use crate::algebra::{GradedVector, SuperAlgebra};
use crate::identities::leibniz_defects;
use crate::linalg::Matrix;
use crate::rational::sign;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssociativeError {
    #[error("map blocks have sizes {even}x{even2} and {odd}x{odd2}, expected {n}x{n} and {m}x{m}")]
    MapShape {
        n: usize,
        m: usize,
        even: usize,
        even2: usize,
        odd: usize,
        odd2: usize,
    },
    #[error("product is not associative on ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("D(a(Db)) = (Da)(Db) = D((Da)b) fails for a = {left}, b = {right}")]
    DCondition { left: String, right: String },
    #[error("resulting law violates the Leibniz identity on {0} triples")]
    NotLeibniz(usize),
}

fn apply(d_even: &Matrix, d_odd: &Matrix, v: &GradedVector) -> GradedVector {
    GradedVector::new(d_even.mul_vec(&v.even), d_odd.mul_vec(&v.odd))
}

pub fn from_associative_derivation(
    assoc: &SuperAlgebra,
    d_even: &Matrix,
    d_odd: &Matrix,
) -> Result<SuperAlgebra, AssociativeError> {
    let (n, m) = assoc.dims();
    if (d_even.rows(), d_even.cols(), d_odd.rows(), d_odd.cols()) != (n, n, m, m) {
        return Err(AssociativeError::MapShape {
            n,
            m,
            even: d_even.rows(),
            even2: d_even.cols(),
            odd: d_odd.rows(),
            odd2: d_odd.cols(),
        });
    }
    let d = n + m;
    let e = |i: usize| GradedVector::basis(n, m, i);
    let mul = |u: &GradedVector, v: &GradedVector| assoc.bracket(u, v).expect("sizes match");
    let dm = |v: &GradedVector| apply(d_even, d_odd, v);

    for a in 0..d {
        for b in 0..d {
            let ab = mul(&e(a), &e(b));
            for c in 0..d {
                if mul(&ab, &e(c)) != mul(&e(a), &mul(&e(b), &e(c))) {
                    return Err(AssociativeError::NotAssociative(
                        assoc.label(a).into(),
                        assoc.label(b).into(),
                        assoc.label(c).into(),
                    ));
                }
            }
        }
    }

    let mut out = SuperAlgebra::abelian(n, m)
        .expect("nonempty")
        .with_labels(assoc.labels_even().to_vec(), assoc.labels_odd().to_vec())
        .expect("labels come from a valid algebra");
    for a in 0..d {
        for b in 0..d {
            let (ea, eb) = (e(a), e(b));
            let (da, db) = (dm(&ea), dm(&eb));
            let lhs = dm(&mul(&ea, &db));
            if lhs != mul(&da, &db) || lhs != dm(&mul(&da, &eb)) {
                return Err(AssociativeError::DCondition {
                    left: assoc.label(a).into(),
                    right: assoc.label(b).into(),
                });
            }
            let s = sign(assoc.parity_of(a).sign_flip(assoc.parity_of(b)));
            let v = mul(&ea, &db).sub(&mul(&db, &ea).scale(&s));
            let terms = v
                .to_global()
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            out.set_product(a, b, terms).expect("degree-zero map preserves grading");
        }
    }
    let defects = leibniz_defects(&out);
    if !defects.is_empty() {
        return Err(AssociativeError::NotLeibniz(defects.len()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::is_lie;
    use crate::rational::int;

    /// `{u, v}` even with `uu = v`.
    fn square_to_v() -> SuperAlgebra {
        let mut a = SuperAlgebra::abelian(2, 0).unwrap();
        a.set_product(0, 0, vec![(1, int(1))]).unwrap();
        a
    }

    /// Upper triangular 2x2 matrices `e11, e12, e22`, all even.
    fn triangular() -> SuperAlgebra {
        let mut a = SuperAlgebra::abelian(3, 0).unwrap();
        a.set_product(0, 0, vec![(0, int(1))]).unwrap();
        a.set_product(0, 1, vec![(1, int(1))]).unwrap();
        a.set_product(1, 2, vec![(1, int(1))]).unwrap();
        a.set_product(2, 2, vec![(2, int(1))]).unwrap();
        a
    }

    #[test]
    fn zero_map_gives_abelian() {
        let a = triangular();
        let out = from_associative_derivation(&a, &Matrix::zeros(3, 3), &Matrix::zeros(0, 0)).unwrap();
        assert!(out.is_abelian());
    }

    #[test]
    fn identity_gives_commutator() {
        let a = triangular();
        let out = from_associative_derivation(&a, &Matrix::identity(3), &Matrix::zeros(0, 0)).unwrap();
        assert!(is_lie(&out));
        // [e11, e12] = e12, [e12, e11] = -e12, [e12, e22] = e12
        assert_eq!(out.product(0, 1), &[(1, int(1))]);
        assert_eq!(out.product(1, 0), &[(1, int(-1))]);
        assert_eq!(out.product(1, 2), &[(1, int(1))]);
        assert!(out.product(0, 0).is_empty());
    }

    #[test]
    fn projection_onto_v() {
        let a = square_to_v();
        let mut d = Matrix::zeros(2, 2);
        d.set(1, 1, int(1));
        let out = from_associative_derivation(&a, &d, &Matrix::zeros(0, 0)).unwrap();
        // every a(Db) and (Db)a vanishes: Du = 0 and v annihilates everything
        assert!(out.is_abelian());
    }

    #[test]
    fn failing_pair_reported() {
        let a = square_to_v();
        let mut d = Matrix::zeros(2, 2);
        d.set(0, 0, int(1));
        // D(u(Du)) = D(v) = 0 but (Du)(Du) = v
        assert_eq!(
            from_associative_derivation(&a, &d, &Matrix::zeros(0, 0)),
            Err(AssociativeError::DCondition {
                left: "X0".into(),
                right: "X0".into()
            })
        );
    }

    #[test]
    fn non_associative_rejected() {
        let mut a = SuperAlgebra::abelian(2, 0).unwrap();
        a.set_product(0, 0, vec![(1, int(1))]).unwrap();
        a.set_product(1, 0, vec![(0, int(1))]).unwrap();
        assert!(matches!(
            from_associative_derivation(&a, &Matrix::identity(2), &Matrix::zeros(0, 0)),
            Err(AssociativeError::NotAssociative(..))
        ));
    }
}
