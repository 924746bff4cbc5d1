//! Exact-rational Leibniz superalgebras: structure constants, identity
//! checks, central series, annihilators, characteristic sequences, basis
//! changes and monomial degenerations, plus a catalog of classified laws.

pub mod adapted;
pub mod algebra;
pub mod catalog;
pub mod charseq;
pub mod error;
pub mod format;
pub mod identities;
pub mod invariants;
pub mod linalg;
pub mod rational;
pub mod series;
pub mod subspace;
pub mod transform;

pub use adapted::{adapted_basis_zf, adapted_relation_violations};
pub use algebra::{GradedVector, Parity, SuperAlgebra};
pub use charseq::{char_sequence, CharSequence};
pub use error::AlgebraError;
pub use identities::{is_leibniz, is_lie, leibniz_defects, operator_identity_defects, right_mul_matrix};
pub use invariants::{
    classify_shape, closure_obstruction, distinguish, invariant_profile, ClosureCondition, Distinction,
    InvariantProfile, Shape,
};
pub use linalg::Matrix;
pub use rational::Rational;
pub use series::{annihilator, central_series, engel_flag, graded_central_series, nilindex, AnnihilatorKind, Nilindex};
pub use subspace::{member, product_subspace, GradedSubspace};
pub use transform::{apply_basis_change, degeneration_limit, direct_sum, Degeneration, GradedMap, ScalingFamily};
