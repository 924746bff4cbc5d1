//! Identity checks: the graded Leibniz identity on basis triples, its
//! operator form `R_[x,y] = R_y R_x - (-1)^{αβ} R_x R_y`, and graded
//! antisymmetry.

use num_traits::{One, Zero};

use crate::algebra::{GradedVector, SuperAlgebra};
use crate::error::AlgebraError;
use crate::linalg::Matrix;
use crate::rational::{sign, Rational};

/// A nonzero value of `[x,[y,z]] - [[x,y],z] + (-1)^{αβ}[[x,z],y]` on a
/// triple of basis vectors (global indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizDefect {
    pub triple: (usize, usize, usize),
    pub defect: GradedVector,
}

/// All basis triples on which the graded Leibniz identity fails. Empty iff
/// the law is a Leibniz superalgebra (the identity is trilinear).
pub fn leibniz_defects(a: &SuperAlgebra) -> Vec<LeibnizDefect> {
    let d = a.dim();
    let one = Rational::one();
    let mut defects = Vec::new();
    for x in 0..d {
        for y in 0..d {
            let xy = a.product(x, y);
            for z in 0..d {
                let flip = a.parity_of(y).sign_flip(a.parity_of(z));
                let mut out = vec![Rational::zero(); d];
                // [x,[y,z]]
                a.acc_basis_left(x, a.product(y, z), &one, &mut out);
                // - [[x,y],z]
                a.acc_basis_right(xy, z, &-one.clone(), &mut out);
                // + (-1)^{αβ} [[x,z],y]
                a.acc_basis_right(a.product(x, z), y, &sign(flip), &mut out);
                if out.iter().any(|c| !c.is_zero()) {
                    defects.push(LeibnizDefect {
                        triple: (x, y, z),
                        defect: GradedVector::from_global(a.n(), &out),
                    });
                }
            }
        }
    }
    defects
}

pub fn is_leibniz(a: &SuperAlgebra) -> bool {
    leibniz_defects(a).is_empty()
}

/// Graded antisymmetry `[x,y] = -(-1)^{αβ}[y,x]` on all basis pairs.
pub fn is_lie(a: &SuperAlgebra) -> bool {
    let d = a.dim();
    for x in 0..d {
        for y in x..d {
            let flip = a.parity_of(x).sign_flip(a.parity_of(y));
            // [x,y] + (-1)^{αβ}[y,x] must vanish
            let mut out = vec![Rational::zero(); d];
            for (k, c) in a.product(x, y) {
                out[*k] += c;
            }
            for (k, c) in a.product(y, x) {
                out[*k] += sign(flip) * c;
            }
            if out.iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Matrix of `R_x : v ↦ [v, x]` in the even-then-odd basis. Column `j`
/// holds the coordinates of `[e_j, x]`.
pub fn right_mul_matrix(a: &SuperAlgebra, x: &GradedVector) -> Result<Matrix, AlgebraError> {
    a.check_vector(x)?;
    if !x.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous);
    }
    Ok(right_mul_global(a, &x.to_global()))
}

pub(crate) fn right_mul_global(a: &SuperAlgebra, x: &[Rational]) -> Matrix {
    let d = a.dim();
    let mut r = Matrix::zeros(d, d);
    for j in 0..d {
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in a.product(j, i) {
                let v = r.get(*k, j) + xi * c;
                r.set(*k, j, v);
            }
        }
    }
    r
}

/// Right multiplication by the basis vector at global index `i`.
pub fn right_mul_basis(a: &SuperAlgebra, i: usize) -> Matrix {
    let mut x = vec![Rational::zero(); a.dim()];
    x[i] = Rational::one();
    right_mul_global(a, &x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorViolation {
    pub pair: (usize, usize),
    /// `R_[x,y] - (R_y R_x - (-1)^{αβ} R_x R_y)`.
    pub difference: Matrix,
}

/// Checks the operator form of the Leibniz identity on all basis pairs by
/// explicit matrix products.
pub fn operator_identity_defects(a: &SuperAlgebra) -> Vec<OperatorViolation> {
    let d = a.dim();
    let ops: Vec<Matrix> = (0..d).map(|i| right_mul_basis(a, i)).collect();
    let mut out = Vec::new();
    for x in 0..d {
        for y in 0..d {
            let mut lhs = Matrix::zeros(d, d);
            for (k, c) in a.product(x, y) {
                lhs = lhs.add(&ops[*k].scale(c));
            }
            let yx = ops[y].mul(&ops[x]);
            let xy = ops[x].mul(&ops[y]);
            let flip = a.parity_of(x).sign_flip(a.parity_of(y));
            let rhs = if flip { yx.add(&xy) } else { yx.sub(&xy) };
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                out.push(OperatorViolation {
                    pair: (x, y),
                    difference: diff,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    /// [X0,Y1]=Y2, [Y1,Y1]=X1, [Y2,Y1]=X1 on (2,2); fails the identity.
    fn defective() -> SuperAlgebra {
        let mut a = SuperAlgebra::abelian(2, 2).unwrap();
        a.set_product(0, 2, vec![(3, int(1))]).unwrap();
        a.set_product(2, 2, vec![(1, int(1))]).unwrap();
        a.set_product(3, 2, vec![(1, int(1))]).unwrap();
        a
    }

    #[test]
    fn defective_law_reports_expected_triple() {
        let a = defective();
        let defects = leibniz_defects(&a);
        let hit = defects.iter().find(|d| d.triple == (0, 2, 2)).expect("triple (X0,Y1,Y1)");
        assert_eq!(hit.defect, GradedVector::new(vec![int(0), int(-2)], vec![int(0), int(0)]));
        assert!(!operator_identity_defects(&a).is_empty());
    }

    #[test]
    fn abelian_passes_everything() {
        let a = SuperAlgebra::abelian(3, 2).unwrap();
        assert!(leibniz_defects(&a).is_empty());
        assert!(operator_identity_defects(&a).is_empty());
        assert!(is_lie(&a));
        let y = GradedVector::odd_basis(3, 2, 1);
        assert!(right_mul_matrix(&a, &y).unwrap().is_zero());
    }

    #[test]
    fn square_of_even_breaks_antisymmetry() {
        let mut a = SuperAlgebra::abelian(2, 0).unwrap();
        a.set_product(0, 0, vec![(1, int(1))]).unwrap();
        assert!(!is_lie(&a));
        assert!(is_leibniz(&a));
    }

    #[test]
    fn right_mul_rejects_mixed_vector() {
        let a = SuperAlgebra::abelian(1, 1).unwrap();
        let v = GradedVector::new(vec![int(1)], vec![int(1)]);
        assert_eq!(right_mul_matrix(&a, &v), Err(AlgebraError::NotHomogeneous));
    }
}
