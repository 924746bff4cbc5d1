//! The `.lsa` text format: a line-oriented multiplication table.
//!
//! ```text
//! # R(3,2)
//! dims 3 2
//! even X0 X1 X2
//! odd Y1 Y2
//! param lambda
//! [X0,Y1] = 1/2 Y2
//! [Y1,Y1] = X0 - lambda X2
//! ```
//!
//! Coefficients are rational literals, declared parameters, products of
//! those, or parenthesized linear forms such as `(1-alpha)`. Unlisted
//! products are zero.

mod parse;
mod serialize;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::SuperAlgebra;
use crate::error::AlgebraError;
use crate::rational::{format_rational, Rational};

pub use parse::parse;
pub use serialize::serialize;

/// Parameter bindings used by [`instantiate`].
pub type Bindings = BTreeMap<String, Rational>;

/// `constant + Σ coeff·param`, with no zero parameter coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearCoeff {
    pub constant: Rational,
    pub params: BTreeMap<String, Rational>,
}

impl LinearCoeff {
    pub fn constant(c: Rational) -> Self {
        LinearCoeff {
            constant: c,
            params: BTreeMap::new(),
        }
    }

    pub fn param(name: &str) -> Self {
        let mut params = BTreeMap::new();
        params.insert(name.to_string(), Rational::one());
        LinearCoeff {
            constant: Rational::zero(),
            params,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.params.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.params.is_empty()
    }

    pub fn add(&self, other: &LinearCoeff) -> LinearCoeff {
        let mut out = self.clone();
        out.constant += &other.constant;
        for (p, c) in &other.params {
            let e = out.params.entry(p.clone()).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                out.params.remove(p);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LinearCoeff {
        if c.is_zero() {
            return LinearCoeff::default();
        }
        LinearCoeff {
            constant: &self.constant * c,
            params: self.params.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Product of two forms, or `None` when both involve parameters.
    pub fn mul(&self, other: &LinearCoeff) -> Option<LinearCoeff> {
        if self.is_constant() {
            Some(other.scale(&self.constant))
        } else if other.is_constant() {
            Some(self.scale(&other.constant))
        } else {
            None
        }
    }

    pub fn eval(&self, bindings: &Bindings) -> Result<Rational, InstantiateError> {
        let mut v = self.constant.clone();
        for (p, c) in &self.params {
            let x = bindings
                .get(p)
                .ok_or_else(|| InstantiateError::UnboundParameter(p.clone()))?;
            v += c * x;
        }
        Ok(v)
    }
}

impl fmt::Display for LinearCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() || self.params.is_empty() {
            parts.push(format_rational(&self.constant));
        }
        for (p, c) in &self.params {
            parts.push(if c.is_one() {
                p.clone()
            } else {
                format!("{}*{p}", format_rational(c))
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: LinearCoeff,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDef {
    pub left: String,
    pub right: String,
    pub terms: Vec<Term>,
    /// Source line, 1-based.
    pub line: usize,
}

/// A parsed but not yet instantiated multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub n: usize,
    pub m: usize,
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub params: Vec<String>,
    pub products: Vec<ProductDef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("grading violation in [{left},{right}]: {target} has the wrong parity")]
    GradingViolation { left: String, right: String, target: String },
    #[error("undeclared parameter {0}")]
    UndeclaredParameter(String),
    #[error("duplicate product [{0},{1}]")]
    DuplicateProduct(String, String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("dims {n} {m} disagree with {even} even and {odd} odd labels")]
    DimsMismatch { n: usize, m: usize, even: usize, odd: usize },
    #[error("{0} declared twice")]
    DuplicateDeclaration(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstantiateError {
    #[error("parameter {0} is not bound")]
    UnboundParameter(String),
    #[error("binding for undeclared parameter {0}")]
    UnknownBinding(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Evaluates the coefficients at `bindings` and fills in the tensors.
pub fn instantiate(def: &Definition, bindings: &Bindings) -> Result<SuperAlgebra, InstantiateError> {
    if let Some(extra) = bindings.keys().find(|k| !def.params.contains(k)) {
        return Err(InstantiateError::UnknownBinding(extra.clone()));
    }
    if let Some(p) = def.params.iter().find(|p| !bindings.contains_key(*p)) {
        return Err(InstantiateError::UnboundParameter(p.clone()));
    }
    let mut a = SuperAlgebra::abelian(def.n, def.m)?.with_labels(def.even.clone(), def.odd.clone())?;
    let index = |l: &str| a.index_of(l).expect("labels checked by the parser");
    let mut table = Vec::new();
    for p in &def.products {
        let mut terms = Vec::new();
        for t in &p.terms {
            terms.push((index(&t.label), t.coeff.eval(bindings)?));
        }
        table.push((index(&p.left), index(&p.right), terms));
    }
    for (i, j, terms) in table {
        a.set_product(i, j, terms)?;
    }
    Ok(a)
}

/// Parses a parameter-free source straight into an algebra.
pub fn parse_algebra(text: &str) -> Result<SuperAlgebra, FormatError> {
    let def = parse(text)?;
    Ok(instantiate(&def, &Bindings::new())?)
}

/// Either stage of reading a source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Instantiate(#[from] InstantiateError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    const R32: &str = "\
# R(3,2)
dims 3 2
[X1,X0] = X2
[X0,X0] = X2
[X0,Y1] = 1/2 Y2
[X1,Y1] = 1/2 Y2
[Y1,X0] = Y2
[Y1,Y1] = X0
[Y2,Y1] = X2
";

    #[test]
    fn r32_has_seven_products() {
        let d = parse(R32).unwrap();
        assert_eq!((d.n, d.m), (3, 2));
        assert_eq!(d.products.len(), 7);
        let a = instantiate(&d, &Bindings::new()).unwrap();
        assert_eq!(a.constant(0, 3, 4), frac(1, 2));
    }

    #[test]
    fn empty_table_is_abelian() {
        let a = parse_algebra("dims 1 0\n").unwrap();
        assert!(a.is_abelian());
        assert_eq!(a.dims(), (1, 0));
    }

    #[test]
    fn grading_violation_is_named() {
        let err = parse("dims 1 1\n[X0,X0] = Y1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            err.kind,
            ParseErrorKind::GradingViolation { ref left, ref right, .. } if left == "X0" && right == "X0"
        ));
        assert!(err.to_string().contains("[X0,X0]"));
    }

    #[test]
    fn parameters_and_bindings() {
        let src = "dims 2 2\nparam alpha\n[X0,X0] = X1\n[Y1,X0] = Y2\n[X0,Y1] = alpha Y2\n[Y1,Y1] = X1\n";
        let d = parse(src).unwrap();
        let mut b = Bindings::new();
        assert_eq!(
            instantiate(&d, &b).unwrap_err(),
            InstantiateError::UnboundParameter("alpha".into())
        );
        b.insert("alpha".into(), int(3));
        assert_eq!(instantiate(&d, &b).unwrap().constant(0, 2, 3), int(3));
        b.insert("beta".into(), int(1));
        assert_eq!(
            instantiate(&d, &b).unwrap_err(),
            InstantiateError::UnknownBinding("beta".into())
        );
    }

    #[test]
    fn linear_forms() {
        let src = "dims 3 2\nparam a\n[Y1,Y2] = (1-a) X2 + 2 a*X1 - (a/2... ) X0\n";
        assert!(parse(src).is_err());
        let src = "dims 3 2\nparam a\n[Y1,Y2] = (1 - a) X2 + 2 a*X1 - 1/2 X0 + X2\n";
        let d = parse(src).unwrap();
        let mut b = Bindings::new();
        b.insert("a".into(), int(5));
        let alg = instantiate(&d, &b).unwrap();
        assert_eq!(alg.product(3, 4), &[(0, frac(-1, 2)), (1, int(10)), (2, int(-3))]);
    }

    #[test]
    fn zero_right_hand_side() {
        let d = parse("dims 1 0\n[X0,X0] = 0\n").unwrap();
        assert!(d.products[0].terms.is_empty());
    }
}
