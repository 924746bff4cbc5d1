//! Named families of laws with their stated properties.
//!
//! Each entry builds a [`SuperAlgebra`] from `(n, m, params)` and lists the
//! invariant values claimed for it. [`verify`] checks the identities and the
//! claims over sampled dimensions and parameters.

mod associative;
mod claims;
mod tables;
mod verify;
mod witnesses;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::SuperAlgebra;
use crate::error::AlgebraError;
use crate::format::InstantiateError;
use crate::rational::{format_rational, to_i64, Rational};

pub use associative::{from_associative_derivation, AssociativeError};
pub use claims::Claim;
pub use verify::{default_param_samples, verify, Assertion, Note, VerifyReport, DEFAULT_PARAM_SAMPLES};
pub use witnesses::{
    degenerations, f_witnesses, normalizations, Construction, FWitness, Instance, RegisteredDegeneration,
    RegisteredNormalization,
};

/// Parameter values by name.
pub type Params = BTreeMap<String, Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0}")]
    UnknownName(String),
    #[error("{name} is not defined at ({n}, {m}); requires {constraint}")]
    Dimension {
        name: String,
        n: usize,
        m: usize,
        constraint: &'static str,
    },
    #[error("parameter {0} is not bound")]
    UnboundParameter(String),
    #[error("{name} has no parameter {param}")]
    UnknownParameter { name: String, param: String },
    #[error("parameter {param} = {value} is outside its domain ({domain})")]
    Domain { param: String, value: String, domain: String },
    #[error("inconsistent structure constants: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<InstantiateError> for CatalogError {
    fn from(e: InstantiateError) -> Self {
        match e {
            InstantiateError::UnboundParameter(p) => CatalogError::UnboundParameter(p),
            InstantiateError::Algebra(a) => CatalogError::Algebra(a),
            other => CatalogError::Inconsistent(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Domain {
    Any,
    NonZero,
    /// Integers in `lo..=hi`.
    Integer { lo: i64, hi: i64 },
}

impl Domain {
    fn admits(&self, v: &Rational) -> bool {
        match self {
            Domain::Any => true,
            Domain::NonZero => !v.is_zero(),
            Domain::Integer { lo, hi } => to_i64(v).is_some_and(|k| *lo <= k && k <= *hi),
        }
    }

    pub fn note(&self) -> String {
        match self {
            Domain::Any => "any rational".into(),
            Domain::NonZero => "nonzero".into(),
            Domain::Integer { lo, hi } => format!("integer in {lo}..={hi}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: String,
    pub domain: Domain,
    /// Unbound optional parameters default to zero.
    pub optional: bool,
}

impl ParamSpec {
    fn required(name: &str, domain: Domain) -> Self {
        ParamSpec {
            name: name.into(),
            domain,
            optional: false,
        }
    }

    fn optional(name: String) -> Self {
        ParamSpec {
            name,
            domain: Domain::Any,
            optional: true,
        }
    }
}

/// How an entry reads its `(n, m)` arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DimRule {
    /// Exactly these dimensions.
    Fixed(usize, usize),
    /// `n` is the top chain index: the even part is `X_0..X_n`, the odd
    /// part has dimension `m`.
    TopIndex { m: usize, min_n: usize },
    /// Arbitrary dimensions within bounds.
    Free { min_n: usize, min_m: usize },
    /// `m ∈ {n, n+1}`.
    Thm312,
    /// `m = 0`.
    Split,
    /// Even dimension two, `m ≥ 4`.
    TwoM,
    /// `m = n`, even part `X_0..X_n`.
    Conj,
    /// Actual dimensions `(n+1, n)`.
    ConjDims,
}

impl DimRule {
    fn accepts(&self, n: usize, m: usize) -> bool {
        match *self {
            DimRule::Fixed(a, b) => (n, m) == (a, b),
            DimRule::TopIndex { m: mm, min_n } => m == mm && n >= min_n,
            DimRule::Free { min_n, min_m } => n >= min_n && m >= min_m,
            DimRule::Thm312 => n >= 1 && (m == n || m == n + 1),
            DimRule::Split => n >= 1 && m == 0,
            DimRule::TwoM => n == 2 && m >= 4,
            DimRule::Conj => n >= 2 && m == n,
            DimRule::ConjDims => n >= 3 && m + 1 == n,
        }
    }

    fn describe(&self) -> &'static str {
        match self {
            DimRule::Fixed(..) => "the fixed dimensions of its table",
            DimRule::TopIndex { min_n: 2, .. } => "m = 2 and n >= 2 (even part X0..Xn)",
            DimRule::TopIndex { .. } => "m = 3 and n >= 4 (even part X0..Xn)",
            DimRule::Free { min_n: 1, .. } => "n >= 1",
            DimRule::Free { .. } => "n >= 3, m >= 1",
            DimRule::Thm312 => "n >= 1 and m in {n, n+1}",
            DimRule::Split => "n >= 1, m = 0",
            DimRule::TwoM => "n = 2, m >= 4",
            DimRule::Conj => "m = n >= 2 (dimensions (n+1, n))",
            DimRule::ConjDims => "dimensions (k+1, k) with k >= 2",
        }
    }

    /// Dimensions of the algebra built from arguments `(n, m)`.
    pub fn actual_dims(&self, n: usize, m: usize) -> (usize, usize) {
        match self {
            DimRule::TopIndex { .. } | DimRule::Conj => (n + 1, m),
            _ => (n, m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Kind {
    Thm312Split,
    Thm312,
    ZfModel,
    FiliformI,
    FiliformII,
    FiliformIII,
    /// Row of a text table: `(table, row)`.
    Table(tables::TableId, usize),
    R32Family,
    R43Presolve,
    RConj,
    TwoM(tables::TwoMKind),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    /// Entries sharing a group are compared pairwise by [`verify`].
    pub group: &'static str,
    pub dims: DimRule,
    /// Written in the adapted basis of the zero-filiform or filiform normal form.
    pub adapted: bool,
    pub(crate) kind: Kind,
}

impl CatalogEntry {
    pub fn constraint(&self) -> &'static str {
        self.dims.describe()
    }

    pub fn accepts(&self, n: usize, m: usize) -> bool {
        self.dims.accepts(n, m)
    }

    /// Parameter signature at `(n, m)`.
    pub fn params(&self, n: usize, m: usize) -> Vec<ParamSpec> {
        tables::param_specs(self.kind, n, m)
    }

    /// Argument pairs `(n, m)` exercised by [`verify`].
    pub fn dim_samples(&self) -> Vec<(usize, usize)> {
        tables::dim_samples(self.kind, self.dims)
    }

    fn check_dims(&self, n: usize, m: usize) -> Result<(), CatalogError> {
        if self.accepts(n, m) {
            Ok(())
        } else {
            Err(CatalogError::Dimension {
                name: self.name.clone(),
                n,
                m,
                constraint: self.constraint(),
            })
        }
    }

    /// Validates `params` against the signature and fills in defaults.
    pub fn resolve(&self, n: usize, m: usize, params: &Params) -> Result<Params, CatalogError> {
        self.check_dims(n, m)?;
        let specs = self.params(n, m);
        if let Some(p) = params.keys().find(|p| !specs.iter().any(|s| &s.name == *p)) {
            return Err(CatalogError::UnknownParameter {
                name: self.name.clone(),
                param: p.clone(),
            });
        }
        let mut out = Params::new();
        for s in &specs {
            let v = match params.get(&s.name) {
                Some(v) => v.clone(),
                None if s.optional => Rational::zero(),
                None => return Err(CatalogError::UnboundParameter(s.name.clone())),
            };
            if !s.domain.admits(&v) {
                return Err(CatalogError::Domain {
                    param: s.name.clone(),
                    value: format_rational(&v),
                    domain: s.domain.note(),
                });
            }
            out.insert(s.name.clone(), v);
        }
        Ok(out)
    }

    pub fn build(&self, n: usize, m: usize, params: &Params) -> Result<SuperAlgebra, CatalogError> {
        let p = self.resolve(n, m, params)?;
        tables::build(self.kind, n, m, &p)
    }

    pub fn expected(&self, n: usize, m: usize, params: &Params) -> Result<Vec<Claim>, CatalogError> {
        let p = self.resolve(n, m, params)?;
        Ok(claims::expected(self, n, m, &p))
    }

    /// `.lsa` source for text-backed entries.
    pub fn source(&self, n: usize, m: usize) -> Option<String> {
        if !self.accepts(n, m) {
            return None;
        }
        tables::source(self.kind, n, m)
    }
}

/// The registry, in a stable order.
pub fn entries() -> &'static [CatalogEntry] {
    static REGISTRY: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    REGISTRY.get_or_init(tables::registry)
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

/// Entries named `scope` or belonging to the group `scope`.
pub fn entries_in(scope: &str) -> Vec<&'static CatalogEntry> {
    entries()
        .iter()
        .filter(|e| e.name == scope || e.group == scope || e.name.starts_with(&format!("{scope}.")))
        .collect()
}

pub fn build(name: &str, n: usize, m: usize, params: &Params) -> Result<SuperAlgebra, CatalogError> {
    entry(name)?.build(n, m, params)
}

/// Claimed invariant values; unstated fields are absent.
pub fn expected_profile(name: &str, n: usize, m: usize, params: &Params) -> Result<Vec<Claim>, CatalogError> {
    entry(name)?.expected(n, m, params)
}

/// Convenience for literal parameter lists.
pub fn params(pairs: &[(&str, Rational)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

#[cfg(test)]
mod tests;
