//! Adapted bases for zero-filiform laws: `[X_i,X_0] = X_{i+1}`,
//! `[Y_j,X_0] = Y_{j+1}`, with every other even-argument product vanishing.

use num_traits::Zero;

use crate::algebra::SuperAlgebra;
use crate::charseq::{candidates, even_operator, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::error::AlgebraError;
use crate::identities::right_mul_basis;
use crate::invariants::{classify_shape, Shape};
use crate::linalg::{is_zero_vec, Matrix};
use crate::rational::{int, Rational};
use crate::subspace::{product_subspace, GradedSubspace};
use crate::transform::{apply_basis_change, GradedMap};

/// Relations of the zero-filiform normal form that fail in `a`, as readable
/// strings. Products `[X_i,Y_j]` and `[Y_i,Y_j]` are unconstrained.
pub fn adapted_relation_violations(a: &SuperAlgebra) -> Vec<String> {
    let (n, m) = a.dims();
    let mut out = Vec::new();
    let mut expect = |i: usize, j: usize, target: Option<usize>| {
        let want: Vec<(usize, Rational)> = target.map(|k| vec![(k, int(1))]).unwrap_or_default();
        if a.product(i, j) != want.as_slice() {
            out.push(format!("[{},{}]", a.label(i), a.label(j)));
        }
    };
    for i in 0..n {
        for j in 0..n {
            let target = (j == 0 && i + 1 < n).then_some(i + 1);
            expect(i, j, target);
        }
    }
    for y in 0..m {
        for x in 0..n {
            let target = (x == 0 && y + 1 < m).then_some(n + y + 1);
            expect(n + y, x, target);
        }
    }
    out
}

/// Chain `v, R v, R^2 v, ...` of the given length, or `None` if it dies early.
fn chain(r: &Matrix, start: Vec<Rational>, len: usize) -> Option<Vec<Vec<Rational>>> {
    if len == 0 {
        return Some(Vec::new());
    }
    let mut out = vec![start];
    while out.len() < len {
        let next = r.mul_vec(out.last().unwrap());
        out.push(next);
    }
    if is_zero_vec(out.last().unwrap()) {
        return None;
    }
    Some(out)
}

/// Finds `g` such that `apply_basis_change(a, g)` is in adapted form.
pub fn adapted_basis_zf(a: &SuperAlgebra) -> Result<GradedMap, AlgebraError> {
    adapted_basis_zf_with(a, DEFAULT_SAMPLES, DEFAULT_SEED)
}

pub fn adapted_basis_zf_with(a: &SuperAlgebra, samples: usize, seed: u64) -> Result<GradedMap, AlgebraError> {
    if classify_shape(a).map_err(|_| AlgebraError::NotZeroFiliform)? != Shape::ZeroFiliform {
        return Err(AlgebraError::NotZeroFiliform);
    }
    let (n, m) = a.dims();
    let d = n + m;
    let l0 = GradedSubspace::even_part(n, m);
    let derived = product_subspace(a, &l0, &l0)?;
    let basis_ops: Vec<Matrix> = (0..n).map(|i| right_mul_basis(a, i)).collect();
    let odd_candidates = candidates(m, samples, seed.wrapping_add(1));
    let mut found_even = false;
    for x in candidates(n, samples, seed) {
        let mut xg = x.clone();
        xg.extend(vec![Rational::zero(); m]);
        if derived.contains(&crate::algebra::GradedVector::from_global(n, &xg))? {
            continue;
        }
        let r = even_operator(&basis_ops, &x, d);
        let Some(xs) = chain(&r, xg, n) else { continue };
        found_even = true;
        for y in &odd_candidates {
            let mut yg = vec![Rational::zero(); n];
            yg.extend(y.iter().cloned());
            let Some(ys) = chain(&r, yg, m) else { continue };
            let g = GradedMap::from_basis(n, m, &xs, &ys)?;
            if adapted_relation_violations(&apply_basis_change(a, &g)?).is_empty() {
                return Ok(g);
            }
        }
    }
    Err(AlgebraError::NoChainGenerator {
        part: if found_even { "odd" } else { "even" },
    })
}
