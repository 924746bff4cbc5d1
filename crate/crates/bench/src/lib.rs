//! Shared fixtures for the benchmarks.

use leibniz_core::catalog::{build, params, Params};
use leibniz_core::rational::int;
use leibniz_core::{apply_basis_change, GradedMap, SuperAlgebra};

/// `thm312` at total dimension `d`, split as evenly as the family allows.
pub fn thm312(d: usize) -> SuperAlgebra {
    build("thm312", d / 2, d - d / 2, &Params::new()).expect("defined for d >= 2")
}

pub fn r_conj(k: usize) -> SuperAlgebra {
    build("R_conj", k, k, &Params::new()).expect("defined for k >= 2")
}

pub fn filiform_i(n: usize, m: usize) -> SuperAlgebra {
    build("filiform_I", n, m, &params(&[("theta", int(1))])).expect("defined for these dims")
}

/// A law in a scrambled basis, as adapted-basis recovery sees it.
pub fn scrambled_zf_model(n: usize, m: usize, seed: u64) -> SuperAlgebra {
    let a = build("zf_model", n, m, &Params::new()).expect("defined for n >= 1");
    apply_basis_change(&a, &GradedMap::random(n, m, seed)).expect("dims match")
}
