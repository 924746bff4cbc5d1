//! Descending central series, graded series, annihilators and the
//! iterated-kernel flag of `L_1`.

use serde::Serialize;

use crate::algebra::SuperAlgebra;
use crate::error::AlgebraError;
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::subspace::{product_subspace, GradedSubspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Nilindex {
    Nilpotent(usize),
    NotNilpotent,
}

impl Nilindex {
    pub fn value(self) -> Option<usize> {
        match self {
            Nilindex::Nilpotent(k) => Some(k),
            Nilindex::NotNilpotent => None,
        }
    }

    pub fn is_nilpotent(self) -> bool {
        matches!(self, Nilindex::Nilpotent(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    /// `C^0 = L, C^1, ...` up to and including the stable term.
    pub terms: Vec<GradedSubspace>,
    pub nilindex: Nilindex,
}

impl CentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(GradedSubspace::dim).collect()
    }
}

/// `C^0 = L`, `C^{k+1} = [C^k, L]`, iterated until a term repeats.
///
/// For Leibniz laws the terms are nested ideals, so the dimension strictly
/// drops until it stabilizes; the iteration cap only matters for laws that
/// fail the identity.
pub fn central_series(a: &SuperAlgebra) -> CentralSeries {
    let (n, m) = a.dims();
    let whole = GradedSubspace::whole(n, m);
    let mut terms = vec![whole.clone()];
    let cap = 2 * (n + m) + 2;
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            let k = terms.len() - 1;
            return CentralSeries {
                terms,
                nilindex: Nilindex::Nilpotent(k),
            };
        }
        let next = product_subspace(a, last, &whole).expect("sizes match by construction");
        if &next == last || terms.len() > cap {
            return CentralSeries {
                terms,
                nilindex: Nilindex::NotNilpotent,
            };
        }
        terms.push(next);
    }
}

pub fn nilindex(a: &SuperAlgebra) -> Nilindex {
    central_series(a).nilindex
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    /// `C^k(L_0)` for `k = 0..=p`.
    pub even: Vec<GradedSubspace>,
    /// `C^k(L_1)` for `k = 0..=q`.
    pub odd: Vec<GradedSubspace>,
    pub s_nilindex: (usize, usize),
}

impl GradedSeries {
    pub fn even_dims(&self) -> Vec<usize> {
        self.even.iter().map(GradedSubspace::dim).collect()
    }

    pub fn odd_dims(&self) -> Vec<usize> {
        self.odd.iter().map(GradedSubspace::dim).collect()
    }
}

/// `C^0(L_i) = L_i`, `C^{k+1}(L_i) = [C^k(L_i), L_0]`; the super-nilindex
/// `(p, q)` records the first index at which each sequence vanishes.
pub fn graded_central_series(a: &SuperAlgebra) -> Result<GradedSeries, AlgebraError> {
    if !nilindex(a).is_nilpotent() {
        return Err(AlgebraError::NotNilpotent);
    }
    let (n, m) = a.dims();
    let l0 = GradedSubspace::even_part(n, m);
    let run = |start: GradedSubspace| -> Vec<GradedSubspace> {
        let mut terms = vec![start];
        while !terms.last().unwrap().is_zero() {
            let next = product_subspace(a, terms.last().unwrap(), &l0).expect("sizes match");
            terms.push(next);
        }
        terms
    };
    let even = run(l0.clone());
    let odd = run(GradedSubspace::odd_part(n, m));
    let s_nilindex = (even.len() - 1, odd.len() - 1);
    Ok(GradedSeries { even, odd, s_nilindex })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AnnihilatorKind {
    /// `Z(L) = {x : [L, x] = 0}`.
    Right,
    /// `L(L) = {x : [x, L] = 0}`.
    Left,
    /// `Cent(L)`, both conditions.
    Center,
}

pub fn annihilator(a: &SuperAlgebra, kind: AnnihilatorKind) -> GradedSubspace {
    let (n, m) = a.dims();
    let d = a.dim();
    // Rows indexed by (basis i, output coordinate k); column j is the unknown x_j.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut push_system = |left: bool| {
        for i in 0..d {
            let mut block = vec![vec![Rational::from_integer(0.into()); d]; d];
            for j in 0..d {
                let terms = if left { a.product(j, i) } else { a.product(i, j) };
                for (k, c) in terms {
                    block[*k][j] += c;
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|c| c != &Rational::from_integer(0.into()))));
        }
    };
    match kind {
        AnnihilatorKind::Right => push_system(false),
        AnnihilatorKind::Left => push_system(true),
        AnnihilatorKind::Center => {
            push_system(false);
            push_system(true);
        }
    }
    let system = Matrix::from_rows(d, rows);
    // Conditions never mix parities, so each block can be solved alone.
    let even_ns = system.block(0..system.rows(), 0..n).nullspace();
    let odd_ns = system.block(0..system.rows(), n..d).nullspace();
    GradedSubspace::span(n, m, even_ns, odd_ns)
}

/// The ascending chain `V_1 ⊂ V_2 ⊂ ... = L_1` with
/// `V_1 = {v ∈ L_1 : [v, L_0] = 0}` and `V_{k+1} = {v : [v, L_0] ⊆ V_k}`.
pub fn engel_flag(a: &SuperAlgebra) -> Result<Vec<GradedSubspace>, AlgebraError> {
    if !nilindex(a).is_nilpotent() {
        return Err(AlgebraError::NotNilpotent);
    }
    let (n, m) = a.dims();
    // Odd block of R_{X_i}: v ↦ [v, X_i] on L_1, one matrix per even basis vector.
    let actions: Vec<Matrix> = (0..n)
        .map(|i| {
            let mut op = Matrix::zeros(m, m);
            for j in 0..m {
                for (k, c) in a.product(n + j, i) {
                    op.set(k - n, j, c.clone());
                }
            }
            op
        })
        .collect();
    let mut flag: Vec<GradedSubspace> = Vec::new();
    let mut current: Vec<Vec<Rational>> = Vec::new();
    loop {
        // Functionals vanishing on the current V_k.
        let annihilating = if current.is_empty() {
            Matrix::identity(m).row_vectors()
        } else {
            Matrix::from_rows(m, current.clone()).nullspace()
        };
        let mut rows = Vec::new();
        for op in &actions {
            if annihilating.is_empty() {
                break;
            }
            let q = Matrix::from_rows(m, annihilating.clone());
            rows.extend(q.mul(op).row_vectors());
        }
        let next = Matrix::from_rows(m, rows).nullspace();
        let next_space = GradedSubspace::span(n, m, Vec::new(), next.clone());
        if let Some(last) = flag.last() {
            if last == &next_space {
                return Err(AlgebraError::NotNilpotent);
            }
        }
        let done = next_space.odd_dim() == m;
        current = next_space.odd_basis().to_vec();
        flag.push(next_space);
        if done {
            return Ok(flag);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn zf_model(n: usize, m: usize) -> SuperAlgebra {
        let mut a = SuperAlgebra::abelian(n, m).unwrap();
        for i in 0..n.saturating_sub(1) {
            a.set_product(i, 0, vec![(i + 1, int(1))]).unwrap();
        }
        for j in 0..m.saturating_sub(1) {
            a.set_product(n + j, 0, vec![(n + j + 1, int(1))]).unwrap();
        }
        a
    }

    #[test]
    fn abelian_series() {
        let a = SuperAlgebra::abelian(2, 3).unwrap();
        let s = central_series(&a);
        assert_eq!(s.nilindex, Nilindex::Nilpotent(1));
        assert_eq!(s.dims(), vec![5, 0]);
        assert_eq!(graded_central_series(&a).unwrap().s_nilindex, (1, 1));
        assert_eq!(annihilator(&a, AnnihilatorKind::Center), GradedSubspace::whole(2, 3));
        assert_eq!(engel_flag(&a).unwrap(), vec![GradedSubspace::odd_part(2, 3)]);
    }

    #[test]
    fn non_nilpotent_stabilizes() {
        // [X0, X0] = X0
        let mut a = SuperAlgebra::abelian(1, 1).unwrap();
        a.set_product(0, 0, vec![(0, int(1))]).unwrap();
        let s = central_series(&a);
        assert_eq!(s.nilindex, Nilindex::NotNilpotent);
        assert_eq!(s.dims(), vec![2, 1]);
        assert_eq!(graded_central_series(&a), Err(AlgebraError::NotNilpotent));
        assert_eq!(engel_flag(&a), Err(AlgebraError::NotNilpotent));
    }

    #[test]
    fn model_flag_and_series() {
        let a = zf_model(3, 2);
        let flag = engel_flag(&a).unwrap();
        assert_eq!(flag.len(), 2);
        assert_eq!(flag[0], GradedSubspace::span(3, 2, vec![], vec![vec![int(0), int(1)]]));
        assert_eq!(flag[1], GradedSubspace::odd_part(3, 2));
        assert_eq!(graded_central_series(&a).unwrap().s_nilindex, (3, 2));
        assert_eq!(central_series(&a).nilindex, Nilindex::Nilpotent(3));
    }

    #[test]
    fn annihilators_of_model() {
        let a = zf_model(3, 2);
        // everything except X0 is killed from the right
        let z = annihilator(&a, AnnihilatorKind::Right);
        assert_eq!(z.dim(), 4);
        // left: only X2 and Y2 multiply to zero on the left
        let l = annihilator(&a, AnnihilatorKind::Left);
        assert_eq!(l.dim(), 2);
        assert_eq!(annihilator(&a, AnnihilatorKind::Center).dim(), 2);
    }
}
