//! Structure constants of every registered family.
//!
//! Fixed tables are stored as `.lsa` bodies (products separated by `;`)
//! on top of the chain `[X_i,X_0] = X_{i+1}`, `[Y_j,X_0] = Y_{j+1}`. In the
//! bodies `X{n}`, `X{n-1}`, `X{n-2}` stand for the last three even labels.

use num_traits::Zero;

use super::{CatalogEntry, CatalogError, DimRule, Domain, Kind, ParamSpec, Params};
use crate::algebra::SuperAlgebra;
use crate::format::{instantiate, parse, Bindings};
use crate::identities::leibniz_defects;
use crate::rational::{frac, int, sign, to_i64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum TableId {
    Zf22,
    ZfN12,
    R32,
    Zf23,
    Zf33,
    Zf43,
    ZfN13,
    R43,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum TwoMKind {
    MuK,
    MuK2,
    MuM1,
    MuM,
    MuMp1,
    MuMp2,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Alpha {
    No,
    Any,
    NonZero,
}

struct Row {
    name: &'static str,
    alpha: Alpha,
    body: &'static str,
}

const fn row(name: &'static str, body: &'static str) -> Row {
    Row {
        name,
        alpha: Alpha::No,
        body,
    }
}

const fn row_a(name: &'static str, body: &'static str) -> Row {
    Row {
        name,
        alpha: Alpha::Any,
        body,
    }
}

const ZF_2_2: &[Row] = &[
    row_a("mu1", "[X0,Y1] = alpha Y2; [Y1,Y1] = X1"),
    row("mu2", "[X0,Y1] = 1/2 Y2; [Y1,Y1] = X0; [Y2,Y1] = X1"),
];

const ZF_N1_2: &[Row] = &[
    row_a("mu1", "[X0,Y1] = alpha Y2; [Y1,Y1] = X{n}"),
    row("mu2", "[Y1,Y1] = X{n-1}; [Y2,Y1] = X{n}"),
    row("mu3", "[X0,Y1] = -Y2; [Y1,Y1] = X{n-1}; [Y1,Y2] = X{n}"),
];

const R_3_2: &[Row] = &[row(
    "",
    "[X1,X0] = X2; [X0,X0] = X2; [X0,Y1] = 1/2 Y2; [X1,Y1] = 1/2 Y2; [Y1,X0] = Y2; [Y1,Y1] = X0; [Y2,Y1] = X2",
)];

const ZF_2_3: &[Row] = &[
    row("mu1", "[Y1,Y1] = X1"),
    row("mu2", "[X0,Y1] = Y3; [Y1,Y1] = X1"),
    row("mu3", "[X0,Y1] = -Y2; [X0,Y2] = -Y3; [Y1,Y1] = X1"),
    row("mu4", "[X0,Y1] = -Y2 + Y3; [X0,Y2] = -Y3; [Y1,Y1] = X1"),
    row(
        "mu5",
        "[X0,Y1] = -Y2; [X0,Y2] = -Y3; [Y1,Y3] = -X1; [Y2,Y2] = X1; [Y3,Y1] = -X1",
    ),
    row("mu6", "[X0,Y1] = 1/2 Y2; [X1,Y1] = 1/2 Y3; [Y1,Y1] = X0; [Y2,Y1] = X1"),
];

const ZF_3_3: &[Row] = &[
    row("mu1", "[Y1,Y2] = X2; [Y2,Y1] = -X2"),
    row("mu2", "[Y1,Y1] = X2; [Y1,Y2] = X2; [Y2,Y1] = -X2"),
    row_a("mu3", "[Y1,Y1] = X1; [Y1,Y2] = alpha X2; [Y2,Y1] = (1 - alpha) X2"),
    row("mu4", "[X0,Y1] = Y3; [Y1,Y1] = X2"),
    row_a("mu5", "[X0,Y1] = Y3; [Y1,Y1] = alpha X2; [Y1,Y2] = X2; [Y2,Y1] = -X2"),
    row_a(
        "mu6",
        "[X0,Y1] = Y3; [Y1,Y1] = X1; [Y1,Y2] = alpha X2; [Y2,Y1] = (1 - alpha) X2",
    ),
    row_a("mu7", "[X0,Y1] = alpha Y2; [X1,Y1] = alpha Y3; [Y1,Y1] = X2"),
    row("mu8", "[X0,Y2] = -Y3; [Y1,Y1] = X1; [Y1,Y2] = X2"),
    row("mu9", "[X0,Y1] = -Y2 + Y3; [X0,Y2] = -Y3; [Y1,Y1] = X1; [Y1,Y2] = X2"),
    row(
        "mu10",
        "[X0,Y1] = -Y2; [X0,Y2] = -Y3; [Y1,Y3] = -X2; [Y2,Y2] = X2; [Y3,Y1] = -X2",
    ),
    row(
        "mu11",
        "[X0,Y1] = -Y2; [X0,Y2] = -Y3; [Y1,Y1] = X1; [Y1,Y2] = X2; [Y1,Y3] = -X2; [Y2,Y2] = X2; [Y3,Y1] = -X2",
    ),
    row(
        "mu12",
        "[X0,Y1] = 1/2 Y2; [X1,Y1] = 1/2 Y3; [Y1,Y1] = X0; [Y2,Y1] = X1; [Y3,Y1] = X2",
    ),
];

/// Shared by the `(4,3)` table (first thirteen rows, top index 3) and the
/// `(n+1,3)` table.
const ZF_N1_3: &[Row] = &[
    row("mu1", "[X0,Y1] = -Y2 + Y3; [X0,Y2] = -Y3; [Y1,Y1] = X{n}"),
    row_a(
        "mu2",
        "[X0,Y1] = -Y2; [X0,Y2] = (-1 - alpha) Y3; [X1,Y1] = alpha Y3; [Y1,Y1] = X{n}",
    ),
    row_a(
        "mu3",
        "[X0,Y1] = -Y2; [X0,Y2] = (-1 - alpha) Y3; [X1,Y1] = alpha Y3; [Y1,Y1] = X{n-1}; [Y1,Y2] = X{n}",
    ),
    row_a(
        "mu4",
        "[X0,Y1] = -Y2 + Y3; [X0,Y2] = (-1 - alpha) Y3; [X1,Y1] = alpha Y3; [Y1,Y1] = X{n-1}; [Y1,Y2] = X{n}",
    ),
    row("mu5", "[X0,Y1] = Y3; [Y1,Y1] = X{n}"),
    row("mu6", "[Y1,Y1] = X{n-1}; [Y2,Y1] = X{n}"),
    row("mu7", "[X0,Y1] = Y3; [Y1,Y1] = X{n-1}; [Y2,Y1] = X{n}"),
    row_a("mu8", "[X0,Y1] = alpha Y2; [X1,Y1] = alpha Y3; [Y1,Y1] = X{n}"),
    row(
        "mu9",
        "[X0,Y1] = -Y2; [X0,Y2] = -Y3; [Y1,Y3] = X{n}; [Y2,Y2] = -X{n}; [Y3,Y1] = X{n}",
    ),
    row(
        "mu10",
        "[X0,Y1] = -Y2; [X0,Y2] = -Y3; [Y1,Y1] = X{n-1}; [Y1,Y2] = X{n}; [Y1,Y3] = X{n}; [Y2,Y2] = -X{n}; [Y3,Y1] = X{n}",
    ),
    row_a(
        "mu11",
        "[X0,Y1] = -Y2 + Y3; [X0,Y2] = -Y3; [Y1,Y1] = alpha X{n-1}; [Y1,Y2] = alpha X{n}; [Y1,Y3] = X{n}; [Y2,Y2] = -X{n}; [Y3,Y1] = X{n}",
    ),
    row("mu12", "[Y1,Y1] = X{n-2}; [Y2,Y1] = X{n-1}; [Y3,Y1] = X{n}"),
    row("mu13", "[X0,Y1] = Y3; [Y1,Y1] = X{n-2}; [Y2,Y1] = X{n-1}; [Y3,Y1] = X{n}"),
    row_a(
        "mu14",
        "[X0,Y1] = -Y2 + alpha Y3; [X0,Y2] = -Y3; [Y1,Y1] = X{n-2}; [Y1,Y2] = X{n-1} + alpha X{n}; [Y2,Y1] = alpha X{n}; [Y2,Y2] = X{n}; [Y3,Y1] = -X{n}",
    ),
    Row {
        name: "mu15",
        alpha: Alpha::NonZero,
        body: "[X0,Y1] = -Y2; [X0,Y2] = -Y3; [Y1,Y1] = X{n-2}; [Y1,Y2] = X{n-1}; [Y1,Y3] = alpha X{n}; [Y2,Y2] = (1 - alpha) X{n}; [Y3,Y1] = (alpha - 1) X{n}",
    },
];

const R_4_3: &[Row] = &[row(
    "",
    "[X1,X0] = X2; [X2,X0] = X3; [X0,X0] = X2; [X0,Y1] = 1/2 Y2; [X1,Y1] = 1/2 Y2; [X2,Y1] = 1/2 Y3; \
     [Y1,X0] = Y2; [Y2,X0] = Y3; [Y1,Y1] = X0; [Y2,Y1] = X2; [Y3,Y1] = X3",
)];

struct Table {
    prefix: &'static str,
    dims: DimRule,
    chain: bool,
    adapted: bool,
    rows: &'static [Row],
}

fn table(id: TableId) -> Table {
    let t = |prefix, dims, chain, rows| Table {
        prefix,
        dims,
        chain,
        adapted: true,
        rows,
    };
    match id {
        TableId::Zf22 => t("zf_2_2", DimRule::Fixed(2, 2), true, ZF_2_2),
        TableId::ZfN12 => t("zf_n1_2", DimRule::TopIndex { m: 2, min_n: 2 }, true, ZF_N1_2),
        TableId::R32 => t("R32", DimRule::Fixed(3, 2), false, R_3_2),
        TableId::Zf23 => t("zf_2_3", DimRule::Fixed(2, 3), true, ZF_2_3),
        TableId::Zf33 => t("zf_3_3", DimRule::Fixed(3, 3), true, ZF_3_3),
        TableId::Zf43 => t("zf_4_3", DimRule::Fixed(4, 3), true, &ZF_N1_3[..13]),
        TableId::ZfN13 => t("zf_n1_3", DimRule::TopIndex { m: 3, min_n: 4 }, true, ZF_N1_3),
        TableId::R43 => t("R43", DimRule::Fixed(4, 3), false, R_4_3),
    }
}

const TABLE_ORDER: [TableId; 8] = [
    TableId::Zf22,
    TableId::ZfN12,
    TableId::R32,
    TableId::Zf23,
    TableId::Zf33,
    TableId::Zf43,
    TableId::ZfN13,
    TableId::R43,
];

fn entry(name: &str, group: &'static str, dims: DimRule, adapted: bool, kind: Kind) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        group,
        dims,
        adapted,
        kind,
    }
}

pub(crate) fn registry() -> Vec<CatalogEntry> {
    let free = DimRule::Free { min_n: 3, min_m: 1 };
    let mut out = vec![
        entry("thm312_split", "thm312_split", DimRule::Split, false, Kind::Thm312Split),
        entry("thm312", "thm312", DimRule::Thm312, false, Kind::Thm312),
        entry("zf_model", "zf_model", DimRule::Free { min_n: 1, min_m: 0 }, true, Kind::ZfModel),
        entry("filiform_I", "filiform", free, true, Kind::FiliformI),
        entry("filiform_II", "filiform", free, true, Kind::FiliformII),
        entry("filiform_III", "filiform", free, true, Kind::FiliformIII),
    ];
    for id in TABLE_ORDER {
        let t = table(id);
        for (k, r) in t.rows.iter().enumerate() {
            let name = if r.name.is_empty() {
                t.prefix.to_string()
            } else {
                format!("{}.{}", t.prefix, r.name)
            };
            out.push(entry(&name, t.prefix, t.dims, t.adapted, Kind::Table(id, k)));
        }
        match id {
            TableId::R32 => out.push(entry("R32_family", "R32", DimRule::Fixed(3, 2), false, Kind::R32Family)),
            TableId::R43 => out.push(entry("R43_presolve", "R43", DimRule::Fixed(4, 3), true, Kind::R43Presolve)),
            _ => {}
        }
    }
    for (name, kind) in [
        ("muK", TwoMKind::MuK),
        ("muK2", TwoMKind::MuK2),
        ("mu_m1", TwoMKind::MuM1),
        ("mu_m", TwoMKind::MuM),
        ("mu_mp1", TwoMKind::MuMp1),
        ("mu_mp2", TwoMKind::MuMp2),
    ] {
        out.push(entry(&format!("zf_2_m.{name}"), "zf_2_m", DimRule::TwoM, true, Kind::TwoM(kind)));
    }
    out.push(entry("R_conj", "R_conj", DimRule::Conj, true, Kind::RConj));
    out.push(entry("R", "R_conj", DimRule::ConjDims, true, Kind::RConj));
    out
}

pub(crate) fn param_specs(kind: Kind, n: usize, m: usize) -> Vec<ParamSpec> {
    let indexed = |prefix: &str, hi: usize| -> Vec<ParamSpec> {
        (3..=hi).map(|k| ParamSpec::optional(format!("{prefix}{k}"))).collect()
    };
    match kind {
        Kind::Table(id, r) => match table(id).rows[r].alpha {
            Alpha::No => vec![],
            Alpha::Any => vec![ParamSpec::required("alpha", Domain::Any)],
            Alpha::NonZero => vec![ParamSpec::required("alpha", Domain::NonZero)],
        },
        Kind::FiliformI => {
            let mut v = indexed("alpha", n.saturating_sub(1));
            v.push(ParamSpec::optional("theta".into()));
            v
        }
        Kind::FiliformII => {
            let mut v = indexed("beta", n.saturating_sub(1));
            v.push(ParamSpec::optional("gamma".into()));
            v
        }
        Kind::FiliformIII => filiform_iii_slots(n)
            .into_iter()
            .map(|(i, j, k)| ParamSpec::optional(format!("c_{i}_{j}_{k}")))
            .collect(),
        Kind::R32Family => vec![
            ParamSpec::required("lambda", Domain::NonZero),
            ParamSpec::required("beta", Domain::NonZero),
        ],
        Kind::R43Presolve => vec![
            ParamSpec::required("b0", Domain::NonZero),
            ParamSpec::required("b1", Domain::Any),
            ParamSpec::required("b2", Domain::Any),
            ParamSpec::required("b3", Domain::Any),
        ],
        Kind::TwoM(TwoMKind::MuK) => vec![ParamSpec::required(
            "k",
            Domain::Integer {
                lo: 1,
                hi: (m as i64 - 1) / 2,
            },
        )],
        Kind::TwoM(TwoMKind::MuK2) => vec![ParamSpec::required(
            "k",
            Domain::Integer {
                lo: m as i64 / 2,
                hi: m as i64 - 2,
            },
        )],
        _ => vec![],
    }
}

/// `(i, j, k)` with `1 <= i < j`, `i + j + 1 <= k <= n - 1`.
fn filiform_iii_slots(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            for k in i + j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

pub(crate) fn dim_samples(kind: Kind, dims: DimRule) -> Vec<(usize, usize)> {
    match (kind, dims) {
        (_, DimRule::Fixed(n, m)) => vec![(n, m)],
        (_, DimRule::TopIndex { m, min_n }) => (min_n..=8).map(|n| (n, m)).collect(),
        (Kind::Thm312Split, _) => (1..=9).map(|n| (n, 0)).collect(),
        (Kind::Thm312, _) => (1..=9).flat_map(|n| [(n, n), (n, n + 1)]).filter(|&(_, m)| m <= 9).collect(),
        (Kind::ZfModel, _) => vec![
            (1, 0),
            (1, 1),
            (2, 2),
            (3, 2),
            (3, 3),
            (5, 3),
            (5, 4),
            (4, 7),
            (9, 1),
            (1, 9),
            (9, 9),
        ],
        (Kind::FiliformI | Kind::FiliformII | Kind::FiliformIII, _) => {
            vec![(3, 1), (4, 2), (5, 3), (6, 2), (7, 1), (9, 3), (9, 9)]
        }
        (_, DimRule::TwoM) => (4..=9).map(|m| (2, m)).collect(),
        (_, DimRule::Conj) => (2..=8).map(|n| (n, n)).collect(),
        (_, DimRule::ConjDims) => vec![(3, 2), (4, 3), (9, 8)],
        _ => vec![],
    }
}

fn table_source(id: TableId, r: usize, n: usize, m: usize) -> String {
    let t = table(id);
    let row = &t.rows[r];
    let mut src = format!("dims {n} {m}\n");
    if row.alpha != Alpha::No {
        src.push_str("param alpha\n");
    }
    if t.chain {
        for i in 0..n.saturating_sub(1) {
            src.push_str(&format!("[X{i},X0] = X{}\n", i + 1));
        }
        for j in 1..m {
            src.push_str(&format!("[Y{j},X0] = Y{}\n", j + 1));
        }
    }
    let top = n as i64 - 1;
    let body = row
        .body
        .replace("X{n}", &format!("X{top}"))
        .replace("X{n-1}", &format!("X{}", top - 1))
        .replace("X{n-2}", &format!("X{}", top - 2));
    for line in body.split(';') {
        src.push_str(line.trim());
        src.push('\n');
    }
    src
}

pub(crate) fn source(kind: Kind, n: usize, m: usize) -> Option<String> {
    match kind {
        Kind::Table(id, r) => {
            let (n, m) = table(id).dims.actual_dims(n, m);
            Some(table_source(id, r, n, m))
        }
        _ => None,
    }
}

/// Incremental construction by global indices.
struct Law {
    a: SuperAlgebra,
    n: usize,
}

impl Law {
    fn new(n: usize, m: usize) -> Result<Self, CatalogError> {
        Ok(Law {
            a: SuperAlgebra::abelian(n, m)?,
            n,
        })
    }

    fn y(&self, j: usize) -> usize {
        self.n + j - 1
    }

    fn put(&mut self, i: usize, j: usize, k: usize, c: Rational) -> Result<(), CatalogError> {
        if !c.is_zero() {
            self.a.add_to_product(i, j, k, c)?;
        }
        Ok(())
    }

    fn odd_chain(&mut self, m: usize) -> Result<(), CatalogError> {
        for j in 1..m {
            self.put(self.y(j), 0, self.y(j + 1), int(1))?;
        }
        Ok(())
    }
}

fn p(params: &Params, name: &str) -> Rational {
    params.get(name).cloned().unwrap_or_else(Rational::zero)
}

pub(crate) fn build(kind: Kind, n: usize, m: usize, params: &Params) -> Result<SuperAlgebra, CatalogError> {
    match kind {
        Kind::Table(id, r) => {
            let (n, m) = table(id).dims.actual_dims(n, m);
            let def = parse(&table_source(id, r, n, m)).map_err(|e| CatalogError::Inconsistent(e.to_string()))?;
            let bindings: Bindings = params
                .iter()
                .filter(|(k, _)| def.params.contains(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            Ok(instantiate(&def, &bindings)?)
        }
        Kind::Thm312Split => {
            let mut l = Law::new(n, 0)?;
            for i in 1..n {
                l.put(i - 1, 0, i, int(1))?;
            }
            let labels = (1..=n).map(|i| format!("e{i}")).collect();
            Ok(l.a.with_labels(labels, vec![])?)
        }
        Kind::Thm312 => thm312(n, m),
        Kind::ZfModel => {
            let mut l = Law::new(n, m)?;
            for i in 1..n {
                l.put(i - 1, 0, i, int(1))?;
            }
            if n > 0 {
                l.odd_chain(m)?;
            }
            Ok(l.a)
        }
        Kind::FiliformI => {
            let mut l = Law::new(n, m)?;
            for i in 1..=n - 2 {
                l.put(i, 0, i + 1, int(1))?;
            }
            l.put(0, 0, 2, int(1))?;
            for k in 3..=n - 2 {
                l.put(0, 1, k, p(params, &format!("alpha{k}")))?;
            }
            l.put(0, 1, n - 1, p(params, "theta"))?;
            for i in 1..=n.saturating_sub(3) {
                for k in 3..=n - i {
                    l.put(i, 1, i + k - 1, p(params, &format!("alpha{k}")))?;
                }
            }
            l.odd_chain(m)?;
            Ok(l.a)
        }
        Kind::FiliformII => {
            let mut l = Law::new(n, m)?;
            for i in 2..=n - 2 {
                l.put(i, 0, i + 1, int(1))?;
            }
            l.put(0, 0, 2, int(1))?;
            for k in 3..n {
                l.put(0, 1, k, p(params, &format!("beta{k}")))?;
            }
            l.put(1, 1, n - 1, p(params, "gamma"))?;
            for i in 2..=n.saturating_sub(3) {
                for k in 3..=n - i {
                    l.put(i, 1, i + k - 1, p(params, &format!("beta{k}")))?;
                }
            }
            l.odd_chain(m)?;
            Ok(l.a)
        }
        Kind::FiliformIII => {
            let mut l = Law::new(n, m)?;
            for i in 1..=n - 2 {
                l.put(i, 0, i + 1, int(1))?;
                l.put(0, i, i + 1, int(-1))?;
            }
            for (i, j, k) in filiform_iii_slots(n) {
                let c = p(params, &format!("c_{i}_{j}_{k}"));
                l.put(i, j, k, c.clone())?;
                l.put(j, i, k, -c)?;
            }
            l.odd_chain(m)?;
            let defects = leibniz_defects(&l.a);
            if let Some(d) = defects.first() {
                return Err(CatalogError::Inconsistent(format!(
                    "even coefficients violate the Leibniz identity ({} defects, first {d:?})",
                    defects.len()
                )));
            }
            Ok(l.a)
        }
        Kind::R32Family => {
            let (lam, beta) = (p(params, "lambda"), p(params, "beta"));
            let mut l = Law::new(3, 2)?;
            l.put(1, 0, 2, int(1))?;
            l.put(0, 0, 2, int(1))?;
            l.put(0, 3, 4, lam.clone())?;
            l.put(1, 3, 4, lam.clone())?;
            l.put(3, 0, 4, int(2) * &lam)?;
            l.put(3, 3, 0, int(2) * &lam * &beta)?;
            l.put(4, 3, 2, beta)?;
            Ok(l.a)
        }
        Kind::R43Presolve => r43_presolve(params),
        Kind::RConj => {
            let k = if n == m { n } else { m };
            r_conj(k)
        }
        Kind::TwoM(which) => two_m(which, m, params),
    }
}

fn thm312(n: usize, m: usize) -> Result<SuperAlgebra, CatalogError> {
    let d = n + m;
    // e_i is even iff i is even; e_{2k} = X_{k-1}, e_{2k-1} = Y_k
    let global = |i: usize| if i % 2 == 0 { i / 2 - 1 } else { n + (i + 1) / 2 - 1 };
    let mut l = Law::new(n, m)?;
    for i in 1..d {
        l.put(global(i), global(1), global(i + 1), int(1))?;
    }
    for i in 1..d.saturating_sub(1) {
        l.put(global(i), global(2), global(i + 2), int(2))?;
    }
    let even = (1..=n).map(|k| format!("e{}", 2 * k)).collect();
    let odd = (1..=m).map(|k| format!("e{}", 2 * k - 1)).collect();
    Ok(l.a.with_labels(even, odd)?)
}

fn r43_presolve(params: &Params) -> Result<SuperAlgebra, CatalogError> {
    let b: Vec<Rational> = (0..4).map(|i| p(params, &format!("b{i}"))).collect();
    let s = &b[0] + &b[1];
    if s.is_zero() {
        return Err(CatalogError::Domain {
            param: "b1".into(),
            value: crate::rational::format_rational(&b[1]),
            domain: "b0 + b1 nonzero".into(),
        });
    }
    let mut l = Law::new(4, 3)?;
    let (y1, y2, y3) = (4, 5, 6);
    l.put(1, 0, 2, int(1))?;
    l.put(2, 0, 3, int(1))?;
    l.put(0, 0, 2, int(1))?;
    l.put(y1, 0, y2, int(1))?;
    l.put(y2, 0, y3, int(1))?;
    let c2 = &b[0] / (int(2) * &s);
    let c3 = -(&b[2] * &b[0]) / (int(2) * &s * &s);
    for x in [0, 1] {
        l.put(x, y1, y2, c2.clone())?;
        l.put(x, y1, y3, c3.clone())?;
    }
    l.put(2, y1, y3, c2)?;
    for (k, bk) in b.iter().enumerate() {
        l.put(y1, y1, k, bk.clone())?;
    }
    l.put(y2, y1, 2, s.clone())?;
    l.put(y2, y1, 3, b[2].clone())?;
    l.put(y3, y1, 3, s)?;
    Ok(l.a)
}

/// Even part `X_0..X_k`, odd part `Y_1..Y_k`.
fn r_conj(k: usize) -> Result<SuperAlgebra, CatalogError> {
    let mut l = Law::new(k + 1, k)?;
    let half = frac(1, 2);
    for i in 1..k {
        l.put(i, 0, i + 1, int(1))?;
    }
    l.put(0, 0, 2, int(1))?;
    l.put(0, l.y(1), l.y(2), half.clone())?;
    for i in 1..k {
        l.put(i, l.y(1), l.y(i + 1), half.clone())?;
    }
    l.odd_chain(k)?;
    l.put(l.y(1), l.y(1), 0, int(1))?;
    for i in 2..=k {
        l.put(l.y(i), l.y(1), i, int(1))?;
    }
    Ok(l.a)
}

fn two_m(which: TwoMKind, m: usize, params: &Params) -> Result<SuperAlgebra, CatalogError> {
    let mut l = Law::new(2, m)?;
    l.put(0, 0, 1, int(1))?;
    l.odd_chain(m)?;
    let neg_from = |l: &mut Law, from: usize| -> Result<(), CatalogError> {
        for j in from..m {
            l.put(0, l.y(j), l.y(j + 1), int(-1))?;
        }
        Ok(())
    };
    let pairs = |l: &mut Law, sum: i64| -> Result<(), CatalogError> {
        for i in 1..=m as i64 {
            let j = sum - i;
            if (1..=m as i64).contains(&j) {
                let (i, j) = (i as usize, j as usize);
                l.put(l.y(i), l.y(j), 1, sign(i % 2 == 0))?;
            }
        }
        Ok(())
    };
    let k = || to_i64(&p(params, "k")).expect("k validated as an integer");
    let top = l.y(m);
    match which {
        TwoMKind::MuK => {
            neg_from(&mut l, 1)?;
            pairs(&mut l, 2 * k() + 2)?;
        }
        TwoMKind::MuK2 => {
            l.put(0, l.y(1), l.y(2), int(-1))?;
            l.put(0, l.y(1), top, int(1))?;
            neg_from(&mut l, 2)?;
            pairs(&mut l, 2 * k() + 2 - 2 * ((m as i64 - 1) / 2))?;
        }
        TwoMKind::MuM1 | TwoMKind::MuM | TwoMKind::MuMp1 | TwoMKind::MuMp2 => {
            l.put(l.y(1), l.y(1), 1, int(1))?;
            if matches!(which, TwoMKind::MuMp1 | TwoMKind::MuMp2) {
                neg_from(&mut l, 2)?;
            }
            match which {
                TwoMKind::MuM => l.put(0, l.y(1), top, int(1))?,
                TwoMKind::MuMp2 => {
                    l.put(0, l.y(1), l.y(2), int(-1))?;
                    l.put(0, l.y(1), top, int(1))?;
                }
                _ => {}
            }
        }
    }
    Ok(l.a)
}
