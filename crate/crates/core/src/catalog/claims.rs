//! Stated invariant values attached to catalog entries.

use std::cell::OnceCell;

use serde::Serialize;

use super::tables::{TableId, TwoMKind};
use super::{CatalogEntry, Kind, Params};
use crate::algebra::SuperAlgebra;
use crate::charseq::{char_sequence, CharSequence, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::invariants::{InvariantProfile, Shape};
use crate::rational::to_i64;
use crate::series::{annihilator, central_series, graded_central_series, AnnihilatorKind, CentralSeries, GradedSeries};

/// One stated value of an invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "field", rename_all = "camelCase")]
pub enum Claim {
    Nilindex { value: usize },
    NilindexAtMost { value: usize },
    Shape { value: Shape },
    SNilindex { value: (usize, usize) },
    /// `dim C^s(L)`.
    SeriesDim { s: usize, value: usize },
    RightAnn { value: usize },
    RightAnnAtLeast { value: usize },
    RightAnnBelow { value: usize },
    LeftAnn { value: usize },
    Center { value: usize },
    CharSeq { value: CharSequence },
}

impl Claim {
    /// Field name and stated value, e.g. `("dimC^3", "1")`.
    pub fn describe(&self) -> (String, String) {
        match self {
            Claim::Nilindex { value } => ("nilindex".into(), value.to_string()),
            Claim::NilindexAtMost { value } => ("nilindex".into(), format!("<= {value}")),
            Claim::Shape { value } => ("shape".into(), format!("{value:?}")),
            Claim::SNilindex { value } => ("sNilindex".into(), format!("{value:?}")),
            Claim::SeriesDim { s, value } => (format!("dimC^{s}"), value.to_string()),
            Claim::RightAnn { value } => ("dimRightAnn".into(), value.to_string()),
            Claim::RightAnnAtLeast { value } => ("dimRightAnn".into(), format!(">= {value}")),
            Claim::RightAnnBelow { value } => ("dimRightAnn".into(), format!("< {value}")),
            Claim::LeftAnn { value } => ("dimLeftAnn".into(), value.to_string()),
            Claim::Center { value } => ("dimCenter".into(), value.to_string()),
            Claim::CharSeq { value } => ("charSeq".into(), value.to_string()),
        }
    }

    /// Whether `facts` agree with the claim, with the computed value.
    pub(crate) fn check(&self, facts: &Facts) -> (bool, String) {
        let nil = || facts.series().nilindex.value();
        let shown = |v: Option<usize>| v.map_or("not nilpotent".to_string(), |k| k.to_string());
        match self {
            Claim::Nilindex { value } => (nil() == Some(*value), shown(nil())),
            Claim::NilindexAtMost { value } => (nil().is_some_and(|k| k <= *value), shown(nil())),
            Claim::Shape { value } => {
                let s = facts.shape();
                (s == Some(*value), format!("{s:?}"))
            }
            Claim::SNilindex { value } => {
                let s = facts.graded().map(|g| g.s_nilindex);
                (s == Some(*value), format!("{s:?}"))
            }
            Claim::SeriesDim { s, value } => {
                let d = facts.series_dim(*s);
                (d == *value, d.to_string())
            }
            Claim::RightAnn { value } => (facts.right() == *value, facts.right().to_string()),
            Claim::RightAnnAtLeast { value } => (facts.right() >= *value, facts.right().to_string()),
            Claim::RightAnnBelow { value } => (facts.right() < *value, facts.right().to_string()),
            Claim::LeftAnn { value } => (facts.left() == *value, facts.left().to_string()),
            Claim::Center { value } => (facts.center() == *value, facts.center().to_string()),
            Claim::CharSeq { value } => {
                let c = facts.char_seq();
                (c.as_ref() == Some(value), c.map_or("none".into(), |c| c.to_string()))
            }
        }
    }

    /// Checks against a fully computed profile.
    pub fn holds_for(&self, p: &InvariantProfile) -> bool {
        match self {
            Claim::Nilindex { value } => p.nilindex.value() == Some(*value),
            Claim::NilindexAtMost { value } => p.nilindex.value().is_some_and(|k| k <= *value),
            Claim::Shape { value } => p.shape == Some(*value),
            Claim::SNilindex { value } => p.s_nilindex == Some(*value),
            Claim::SeriesDim { s, value } => p.series_dim(*s) == *value,
            Claim::RightAnn { value } => p.dim_right_ann == *value,
            Claim::RightAnnAtLeast { value } => p.dim_right_ann >= *value,
            Claim::RightAnnBelow { value } => p.dim_right_ann < *value,
            Claim::LeftAnn { value } => p.dim_left_ann == *value,
            Claim::Center { value } => p.dim_center == *value,
            Claim::CharSeq { value } => p.char_seq.as_ref() == Some(value),
        }
    }
}

/// Invariants of one algebra, computed on first use.
pub(crate) struct Facts<'a> {
    a: &'a SuperAlgebra,
    series: OnceCell<CentralSeries>,
    graded: OnceCell<Option<GradedSeries>>,
    right: OnceCell<usize>,
    left: OnceCell<usize>,
    center: OnceCell<usize>,
    char_seq: OnceCell<Option<CharSequence>>,
}

impl<'a> Facts<'a> {
    pub(crate) fn new(a: &'a SuperAlgebra) -> Self {
        Facts {
            a,
            series: OnceCell::new(),
            graded: OnceCell::new(),
            right: OnceCell::new(),
            left: OnceCell::new(),
            center: OnceCell::new(),
            char_seq: OnceCell::new(),
        }
    }

    pub(crate) fn series(&self) -> &CentralSeries {
        self.series.get_or_init(|| central_series(self.a))
    }

    pub(crate) fn series_dim(&self, s: usize) -> usize {
        let dims = self.series().dims();
        dims.get(s).or(dims.last()).copied().unwrap_or(0)
    }

    pub(crate) fn graded(&self) -> Option<&GradedSeries> {
        self.graded
            .get_or_init(|| graded_central_series(self.a).ok())
            .as_ref()
    }

    pub(crate) fn shape(&self) -> Option<Shape> {
        let (n, m) = self.a.dims();
        self.graded().map(|g| {
            let (p, q) = g.s_nilindex;
            if (p, q) == (n, m) {
                Shape::ZeroFiliform
            } else if n >= 1 && (p, q) == (n - 1, m) {
                Shape::Filiform
            } else {
                Shape::Other
            }
        })
    }

    fn right(&self) -> usize {
        *self.right.get_or_init(|| annihilator(self.a, AnnihilatorKind::Right).dim())
    }

    fn left(&self) -> usize {
        *self.left.get_or_init(|| annihilator(self.a, AnnihilatorKind::Left).dim())
    }

    fn center(&self) -> usize {
        *self.center.get_or_init(|| annihilator(self.a, AnnihilatorKind::Center).dim())
    }

    fn char_seq(&self) -> Option<CharSequence> {
        self.char_seq
            .get_or_init(|| char_sequence(self.a, DEFAULT_SAMPLES, DEFAULT_SEED).ok())
            .clone()
    }
}

fn zf(n: usize, m: usize) -> Vec<Claim> {
    vec![
        Claim::Shape {
            value: Shape::ZeroFiliform,
        },
        Claim::CharSeq {
            value: CharSequence::new(vec![n], if m == 0 { vec![] } else { vec![m] }),
        },
    ]
}

fn filiform(n: usize, m: usize) -> Vec<Claim> {
    vec![
        Claim::Shape { value: Shape::Filiform },
        Claim::CharSeq {
            value: CharSequence::new(vec![n - 1, 1], vec![m]),
        },
    ]
}

fn nil(value: usize) -> Claim {
    Claim::Nilindex { value }
}

/// Claims for an entry at arguments `(n, m)` with resolved parameters.
pub(crate) fn expected(e: &CatalogEntry, n: usize, m: usize, params: &Params) -> Vec<Claim> {
    let (an, am) = e.dims.actual_dims(n, m);
    match e.kind {
        Kind::Thm312Split => vec![nil(n)],
        Kind::Thm312 => {
            let mut v = vec![nil(n + m)];
            v.extend(zf(n, m));
            v
        }
        Kind::ZfModel => {
            let mut v = vec![nil(n.max(m))];
            v.extend(zf(n, m));
            v
        }
        Kind::FiliformI | Kind::FiliformII | Kind::FiliformIII => filiform(n, m),
        Kind::R32Family => vec![nil(4), Claim::Shape { value: Shape::Filiform }],
        Kind::R43Presolve => vec![
            nil(6),
            Claim::Shape { value: Shape::Filiform },
            Claim::SNilindex { value: (3, 3) },
        ],
        Kind::RConj => {
            let k = am;
            let mut v = vec![nil(2 * k)];
            v.extend(filiform(an, am));
            v
        }
        Kind::TwoM(which) => {
            let mut v = zf(2, m);
            if m % 2 == 0 {
                v.push(nil(m));
            } else {
                let k = params.get("k").and_then(to_i64);
                let peak = which == TwoMKind::MuK && k == Some((m as i64 - 1) / 2);
                v.push(if peak {
                    nil(m + 1)
                } else {
                    Claim::NilindexAtMost { value: m }
                });
            }
            v
        }
        Kind::Table(id, _) => {
            let row = e.name.rsplit('.').next().unwrap_or("");
            table_claims(id, row, an, am)
        }
    }
}

fn table_claims(id: TableId, row: &str, n: usize, m: usize) -> Vec<Claim> {
    let mu: usize = row.strip_prefix("mu").and_then(|k| k.parse().ok()).unwrap_or(0);
    let series = |s, value| Claim::SeriesDim { s, value };
    let right = |value| Claim::RightAnn { value };
    match id {
        TableId::R32 => {
            let mut v = vec![nil(4)];
            v.extend(filiform(3, 2));
            v
        }
        TableId::R43 => {
            let mut v = vec![nil(6), Claim::SNilindex { value: (3, 3) }];
            v.extend(filiform(4, 3));
            v
        }
        TableId::Zf22 => {
            let mut v = zf(2, 2);
            if mu == 2 {
                v.push(nil(4));
            }
            v
        }
        TableId::ZfN12 => {
            // even part X_0..X_top
            let top = n - 1;
            let mut v = zf(n, m);
            v.push(nil(top + 1));
            let (z, l) = match mu {
                1 => (top + 1, 2),
                2 => (top + 1, 1),
                _ => (top, 2),
            };
            v.push(right(z));
            v.push(Claim::LeftAnn { value: l });
            v
        }
        TableId::Zf23 => {
            let mut v = zf(2, 3);
            match mu {
                1..=4 => v.push(series(2, 1)),
                5 => v.extend([series(2, 2), right(1)]),
                _ => v.extend([nil(5), right(3)]),
            }
            v
        }
        TableId::Zf33 => {
            let mut v = zf(3, 3);
            match mu {
                1..=9 => v.push(series(3, 0)),
                10 => v.push(series(3, 1)),
                11 => v.extend([series(3, 1), Claim::Center { value: 2 }]),
                _ => v.extend([series(3, 3), nil(6), Claim::Center { value: 4 }]),
            }
            v
        }
        TableId::Zf43 => {
            let mut v = zf(4, 3);
            v.push(nil(4));
            v.push(if (9..=11).contains(&mu) {
                Claim::RightAnnBelow { value: 4 }
            } else {
                Claim::RightAnnAtLeast { value: 4 }
            });
            v
        }
        TableId::ZfN13 => {
            let mut v = zf(n, m);
            v.push(nil(n));
            v
        }
    }
}
