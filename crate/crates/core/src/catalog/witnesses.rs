//! Registered degenerations, normalizing basis changes and maximal-nilindex
//! constructions.

use serde::Serialize;

use super::{build, CatalogError, Params};
use crate::algebra::SuperAlgebra;
use crate::linalg::Matrix;
use crate::rational::{frac, int, Rational};
use crate::transform::{direct_sum, GradedMap, ScalingFamily};

/// A catalog entry at fixed arguments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub name: String,
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "ser_params")]
    pub params: Params,
}

fn ser_params<S: serde::Serializer>(p: &Params, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(p.len()))?;
    for (k, v) in p {
        map.serialize_entry(k, &crate::rational::format_rational(v))?;
    }
    map.end()
}

impl Instance {
    pub fn new(name: &str, n: usize, m: usize) -> Self {
        Instance {
            name: name.into(),
            n,
            m,
            params: Params::new(),
        }
    }

    pub fn with(mut self, param: &str, value: Rational) -> Self {
        self.params.insert(param.into(), value);
        self
    }

    pub fn build(&self) -> Result<SuperAlgebra, CatalogError> {
        build(&self.name, self.n, self.m, &self.params)
    }

    pub fn describe(&self) -> String {
        if self.params.is_empty() {
            format!("{}({},{})", self.name, self.n, self.m)
        } else {
            let ps: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={}", crate::rational::format_rational(v)))
                .collect();
            format!("{}({},{}; {})", self.name, self.n, self.m, ps.join(", "))
        }
    }
}

/// `target` is the `t → 0` limit of `source` under `pre` followed by the
/// scaling.
#[derive(Clone, Debug)]
pub struct RegisteredDegeneration {
    pub source: Instance,
    pub target: Instance,
    pub pre: Option<GradedMap>,
    pub scaling: ScalingFamily,
}

fn exps(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| frac(a, b)).collect()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&a| int(a)).collect()
}

pub fn degenerations() -> Vec<RegisteredDegeneration> {
    vec![
        RegisteredDegeneration {
            source: Instance::new("zf_3_3.mu11", 3, 3),
            target: Instance::new("zf_3_3.mu10", 3, 3),
            pre: None,
            scaling: ScalingFamily::new(ints(&[-1, -2, -3]), exps(&[(-1, 2), (-3, 2), (-5, 2)])),
        },
        RegisteredDegeneration {
            source: Instance::new("zf_4_3.mu10", 4, 3),
            target: Instance::new("zf_4_3.mu9", 4, 3),
            pre: None,
            scaling: ScalingFamily::new(ints(&[-1, -2, -3, -4]), ints(&[-1, -2, -3])),
        },
        RegisteredDegeneration {
            source: Instance::new("zf_4_3.mu11", 4, 3).with("alpha", int(1)),
            target: Instance::new("zf_4_3.mu10", 4, 3),
            pre: None,
            scaling: ScalingFamily::new(ints(&[1, 2, 3, 4]), ints(&[1, 2, 3])),
        },
    ]
}

/// `apply_basis_change(source, map)` equals `target` exactly (labels aside).
#[derive(Clone, Debug)]
pub struct RegisteredNormalization {
    pub source: Instance,
    pub target: Instance,
    pub map: GradedMap,
}

fn diag(v: &[Rational]) -> Matrix {
    let mut d = Matrix::zeros(v.len(), v.len());
    for (i, x) in v.iter().enumerate() {
        d.set(i, i, x.clone());
    }
    d
}

fn diag_map(even: &[Rational], odd: &[Rational]) -> GradedMap {
    GradedMap::new(diag(even), diag(odd)).expect("nonzero diagonal")
}

/// Basis change taking `R43_presolve(b)` to `R43`; columns are the new basis
/// vectors in old coordinates.
pub fn r43_presolve_map(b: &[Rational; 4]) -> Result<GradedMap, crate::error::AlgebraError> {
    let s = &b[0] + &b[1];
    let z = Rational::from_integer(0.into());
    let even_cols = [
        vec![b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone()],
        vec![z.clone(), s.clone(), b[2].clone(), b[3].clone()],
        vec![z.clone(), z.clone(), &b[0] * &s, &b[0] * &b[2]],
        vec![z.clone(), z.clone(), z.clone(), &b[0] * &b[0] * &s],
    ];
    let odd_cols = [
        vec![int(1), z.clone(), z.clone()],
        vec![z.clone(), b[0].clone(), z.clone()],
        vec![z.clone(), z.clone(), &b[0] * &b[0]],
    ];
    GradedMap::new(Matrix::from_columns(4, &even_cols), Matrix::from_columns(3, &odd_cols))
}

pub fn normalizations() -> Vec<RegisteredNormalization> {
    let h = frac(1, 2);
    let q = frac(1, 4);
    let mut out = vec![
        RegisteredNormalization {
            source: Instance::new("zf_2_2.mu2", 2, 2),
            target: Instance::new("thm312", 2, 2),
            map: diag_map(&[int(1), h.clone()], &[int(1), h.clone()]),
        },
        RegisteredNormalization {
            source: Instance::new("zf_2_3.mu6", 2, 3),
            target: Instance::new("thm312", 2, 3),
            map: diag_map(&[int(1), h.clone()], &[int(1), h.clone(), q.clone()]),
        },
        RegisteredNormalization {
            source: Instance::new("zf_3_3.mu12", 3, 3),
            target: Instance::new("thm312", 3, 3),
            map: diag_map(&[int(1), h.clone(), q.clone()], &[int(1), h.clone(), q.clone()]),
        },
        RegisteredNormalization {
            source: Instance::new("R32_family", 3, 2)
                .with("lambda", int(1))
                .with("beta", int(1)),
            target: Instance::new("R32", 3, 2),
            map: diag_map(&[h.clone(), h.clone(), q.clone()], &[h.clone(), h.clone()]),
        },
    ];
    for b in [[1, 0, 0, 0], [1, 1, 1, 1], [2, -1, 1, 3], [-1, 3, 2, -2], [1, 1, 0, 5]] {
        let b = [int(b[0]), int(b[1]), int(b[2]), int(b[3])];
        let mut src = Instance::new("R43_presolve", 4, 3);
        for (k, v) in b.iter().enumerate() {
            src = src.with(&format!("b{k}"), v.clone());
        }
        out.push(RegisteredNormalization {
            source: src,
            target: Instance::new("R43", 4, 3),
            map: r43_presolve_map(&b).expect("in-domain parameters give an invertible map"),
        });
    }
    out
}

/// How a maximal-nilindex witness is assembled from catalog entries.
#[derive(Clone, Debug, Serialize)]
pub enum Construction {
    Entry(Instance),
    /// Direct sum with a one-dimensional abelian even part.
    PlusEvenLine(Instance),
    /// Direct sum with a one-dimensional abelian odd part.
    PlusOddLine(Instance),
}

impl Construction {
    pub fn build(&self) -> Result<SuperAlgebra, CatalogError> {
        Ok(match self {
            Construction::Entry(i) => i.build()?,
            Construction::PlusEvenLine(i) => direct_sum(&i.build()?, &SuperAlgebra::abelian(1, 0)?),
            Construction::PlusOddLine(i) => direct_sum(&i.build()?, &SuperAlgebra::abelian(0, 1)?),
        })
    }

    pub fn describe(&self) -> String {
        match self {
            Construction::Entry(i) => i.describe(),
            Construction::PlusEvenLine(i) => format!("{} + even line", i.describe()),
            Construction::PlusOddLine(i) => format!("{} + odd line", i.describe()),
        }
    }
}

/// A law of dimensions `dims` with nilindex `nilindex`, realizing `f(dims)`
/// when `exact`, a lower bound otherwise.
#[derive(Clone, Debug, Serialize)]
pub struct FWitness {
    pub dims: (usize, usize),
    pub nilindex: usize,
    pub exact: bool,
    pub construction: Construction,
}

pub fn f_witnesses() -> Vec<FWitness> {
    let w = |dims, nilindex, exact, construction| FWitness {
        dims,
        nilindex,
        exact,
        construction,
    };
    use Construction::*;
    let mut out = vec![
        w((2, 2), 4, true, Entry(Instance::new("zf_2_2.mu2", 2, 2))),
        w((2, 3), 5, true, Entry(Instance::new("zf_2_3.mu6", 2, 3))),
        w((3, 3), 6, true, Entry(Instance::new("zf_3_3.mu12", 3, 3))),
        w((3, 2), 4, true, Entry(Instance::new("R32", 3, 2))),
        w((4, 3), 6, true, Entry(Instance::new("R43", 4, 3))),
        w((2, 4), 5, true, PlusOddLine(Instance::new("zf_2_3.mu6", 2, 3))),
        w((5, 3), 5, false, PlusEvenLine(Instance::new("R43", 4, 3))),
    ];
    for n in 1..=4 {
        out.push(w((n, n), 2 * n, true, Entry(Instance::new("thm312", n, n))));
        out.push(w((n, n + 1), 2 * n + 1, true, Entry(Instance::new("thm312", n, n + 1))));
    }
    for n in 2..=4 {
        out.push(w((n + 1, n), 2 * n, true, PlusEvenLine(Instance::new("thm312", n, n))));
        out.push(w((n, n + 2), 2 * n + 1, true, PlusOddLine(Instance::new("thm312", n, n + 1))));
    }
    for m in [5, 7, 9] {
        let k = (m as i64 - 1) / 2;
        out.push(w(
            (2, m),
            m + 1,
            true,
            Entry(Instance::new("zf_2_m.muK", 2, m).with("k", int(k))),
        ));
    }
    out
}
