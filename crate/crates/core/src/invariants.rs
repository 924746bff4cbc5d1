//! Invariant profiles, shape classification, and the invariant-based
//! comparisons `distinguish` and `closure_obstruction`.

use serde::Serialize;

use crate::algebra::SuperAlgebra;
use crate::charseq::{char_sequence, CharSequence, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::error::AlgebraError;
use crate::identities::is_lie;
use crate::series::{annihilator, central_series, graded_central_series, AnnihilatorKind, Nilindex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    ZeroFiliform,
    Filiform,
    Other,
}

pub fn classify_shape(a: &SuperAlgebra) -> Result<Shape, AlgebraError> {
    let (p, q) = graded_central_series(a)?.s_nilindex;
    Ok(shape_from(a.dims(), (p, q)))
}

fn shape_from((n, m): (usize, usize), (p, q): (usize, usize)) -> Shape {
    if (p, q) == (n, m) {
        Shape::ZeroFiliform
    } else if n >= 1 && (p, q) == (n - 1, m) {
        Shape::Filiform
    } else {
        Shape::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantProfile {
    pub dims: (usize, usize),
    pub nilindex: Nilindex,
    pub s_nilindex: Option<(usize, usize)>,
    /// `dim C^s(L)` from `s = 0` up to the stable value.
    pub series_dims: Vec<usize>,
    pub graded_series_dims: Option<(Vec<usize>, Vec<usize>)>,
    pub dim_right_ann: usize,
    pub dim_left_ann: usize,
    pub dim_center: usize,
    pub char_seq: Option<CharSequence>,
    pub char_seq_samples: usize,
    pub char_seq_seed: u64,
    pub is_lie: bool,
    pub shape: Option<Shape>,
}

impl InvariantProfile {
    /// `dim C^s(L)`, extended past the stored prefix by its stable value.
    pub fn series_dim(&self, s: usize) -> usize {
        match self.series_dims.get(s) {
            Some(d) => *d,
            None => *self.series_dims.last().unwrap_or(&0),
        }
    }
}

pub fn invariant_profile(a: &SuperAlgebra) -> InvariantProfile {
    invariant_profile_with(a, DEFAULT_SAMPLES, DEFAULT_SEED)
}

pub fn invariant_profile_with(a: &SuperAlgebra, samples: usize, seed: u64) -> InvariantProfile {
    let series = central_series(a);
    let graded = graded_central_series(a).ok();
    InvariantProfile {
        dims: a.dims(),
        nilindex: series.nilindex,
        s_nilindex: graded.as_ref().map(|g| g.s_nilindex),
        series_dims: series.dims(),
        graded_series_dims: graded.as_ref().map(|g| (g.even_dims(), g.odd_dims())),
        dim_right_ann: annihilator(a, AnnihilatorKind::Right).dim(),
        dim_left_ann: annihilator(a, AnnihilatorKind::Left).dim(),
        dim_center: annihilator(a, AnnihilatorKind::Center).dim(),
        char_seq: char_sequence(a, samples, seed).ok(),
        char_seq_samples: samples,
        char_seq_seed: seed,
        is_lie: is_lie(a),
        shape: graded.as_ref().map(|g| shape_from(a.dims(), g.s_nilindex)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Distinction {
    Witness {
        invariant: &'static str,
        left: String,
        right: String,
    },
    Indistinguishable,
}

/// Comparison order used by [`distinguish`].
pub const DISTINGUISH_ORDER: [&str; 10] = [
    "dimRightAnn",
    "dimLeftAnn",
    "dimCenter",
    "nilindex",
    "sNilindex",
    "seriesDims",
    "gradedSeriesDims",
    "charSeq",
    "isLie",
    "shape",
];

fn field(p: &InvariantProfile, name: &str) -> String {
    match name {
        "dimRightAnn" => p.dim_right_ann.to_string(),
        "dimLeftAnn" => p.dim_left_ann.to_string(),
        "dimCenter" => p.dim_center.to_string(),
        "nilindex" => match p.nilindex {
            Nilindex::Nilpotent(k) => k.to_string(),
            Nilindex::NotNilpotent => "not nilpotent".into(),
        },
        "sNilindex" => format!("{:?}", p.s_nilindex),
        "seriesDims" => format!("{:?}", p.series_dims),
        "gradedSeriesDims" => format!("{:?}", p.graded_series_dims),
        "charSeq" => p.char_seq.as_ref().map_or("none".into(), ToString::to_string),
        "isLie" => p.is_lie.to_string(),
        "shape" => format!("{:?}", p.shape),
        _ => unreachable!("unknown invariant {name}"),
    }
}

/// First field, in [`DISTINGUISH_ORDER`], on which the two profiles differ.
/// `Indistinguishable` does not mean isomorphic.
pub fn distinguish(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<Distinction, AlgebraError> {
    if a.dims() != b.dims() {
        return Err(AlgebraError::DimensionMismatch {
            expected: format!("{:?}", a.dims()),
            found: format!("{:?}", b.dims()),
        });
    }
    Ok(distinguish_profiles(&invariant_profile(a), &invariant_profile(b)))
}

pub fn distinguish_profiles(pa: &InvariantProfile, pb: &InvariantProfile) -> Distinction {
    for name in DISTINGUISH_ORDER {
        let (l, r) = (field(pa, name), field(pb, name));
        if l != r {
            return Distinction::Witness {
                invariant: name,
                left: l,
                right: r,
            };
        }
    }
    Distinction::Indistinguishable
}

/// A closed condition separating `mu` from the orbit closure of `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition")]
pub enum ClosureCondition {
    /// `dim λ^s < dim µ^s`.
    SeriesDim { s: usize, lambda: usize, mu: usize },
    /// `dim Z(λ) > dim Z(µ)`.
    RightAnn { lambda: usize, mu: usize },
    /// `dim L(λ) > dim L(µ)`.
    LeftAnn { lambda: usize, mu: usize },
    /// `dim Cent(λ) > dim Cent(µ)`.
    Center { lambda: usize, mu: usize },
}

impl ClosureCondition {
    pub fn name(&self) -> &'static str {
        match self {
            ClosureCondition::SeriesDim { .. } => "series",
            ClosureCondition::RightAnn { .. } => "Z",
            ClosureCondition::LeftAnn { .. } => "L",
            ClosureCondition::Center { .. } => "Cent",
        }
    }
}

/// Conditions certifying `mu ∉ cl O(lambda)`; an empty list is inconclusive.
pub fn closure_obstruction(lambda: &SuperAlgebra, mu: &SuperAlgebra) -> Result<Vec<ClosureCondition>, AlgebraError> {
    if lambda.dims() != mu.dims() {
        return Err(AlgebraError::DimensionMismatch {
            expected: format!("{:?}", lambda.dims()),
            found: format!("{:?}", mu.dims()),
        });
    }
    Ok(closure_obstruction_profiles(&invariant_profile(lambda), &invariant_profile(mu)))
}

pub fn closure_obstruction_profiles(pl: &InvariantProfile, pm: &InvariantProfile) -> Vec<ClosureCondition> {
    let mut out = Vec::new();
    let len = pl.series_dims.len().max(pm.series_dims.len());
    if let Some(s) = (0..len).find(|&s| pl.series_dim(s) < pm.series_dim(s)) {
        out.push(ClosureCondition::SeriesDim {
            s,
            lambda: pl.series_dim(s),
            mu: pm.series_dim(s),
        });
    }
    if pl.dim_right_ann > pm.dim_right_ann {
        out.push(ClosureCondition::RightAnn {
            lambda: pl.dim_right_ann,
            mu: pm.dim_right_ann,
        });
    }
    if pl.dim_left_ann > pm.dim_left_ann {
        out.push(ClosureCondition::LeftAnn {
            lambda: pl.dim_left_ann,
            mu: pm.dim_left_ann,
        });
    }
    if pl.dim_center > pm.dim_center {
        out.push(ClosureCondition::Center {
            lambda: pl.dim_center,
            mu: pm.dim_center,
        });
    }
    out
}
