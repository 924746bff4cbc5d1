//! The verification harness over the whole registry.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::claims::Facts;
use super::{degenerations, entries, entries_in, f_witnesses, normalizations, CatalogEntry, CatalogError, Domain, Params};
use crate::algebra::{GradedVector, SuperAlgebra};
use crate::identities::{leibniz_defects, operator_identity_defects};
use crate::invariants::{
    closure_obstruction_profiles, distinguish_profiles, invariant_profile, Distinction, InvariantProfile,
};
use crate::rational::{format_rational, frac, int, Rational};
use crate::subspace::GradedSubspace;
use crate::transform::{apply_basis_change, degeneration_limit, Degeneration};

/// `{0, 1, -1, 1/2, 2}`.
pub const DEFAULT_PARAM_SAMPLES: [(i64, i64); 5] = [(0, 1), (1, 1), (-1, 1), (1, 2), (2, 1)];

pub fn default_param_samples() -> Vec<Rational> {
    DEFAULT_PARAM_SAMPLES.iter().map(|&(a, b)| frac(a, b)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub subject: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Note {
    pub subject: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub assertions: Vec<Assertion>,
    pub notes: Vec<Note>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.passed)
    }

    fn assert(&mut self, subject: &str, check: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion {
            subject: subject.to_string(),
            check: check.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn note(&mut self, subject: &str, message: impl Into<String>) {
        self.notes.push(Note {
            subject: subject.to_string(),
            message: message.into(),
        });
    }
}

fn describe(name: &str, n: usize, m: usize, params: &Params) -> String {
    if params.is_empty() {
        format!("{name}({n},{m})")
    } else {
        let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={}", format_rational(v))).collect();
        format!("{name}({n},{m}; {})", ps.join(", "))
    }
}

/// Parameter points: the sample set for a single parameter; for several,
/// every parameter at a common value plus one-at-a-time variations.
pub(crate) fn param_points(e: &CatalogEntry, n: usize, m: usize, samples: &[Rational]) -> Vec<Params> {
    let specs = e.params(n, m);
    if specs.is_empty() {
        return vec![Params::new()];
    }
    let values = |d: &Domain| -> Vec<Rational> {
        match d {
            Domain::Integer { lo, hi } => (*lo..=*hi).map(int).collect(),
            Domain::Any => samples.to_vec(),
            Domain::NonZero => samples.iter().filter(|v| !v.is_zero()).cloned().collect(),
        }
    };
    if specs.len() == 1 {
        return values(&specs[0].domain)
            .into_iter()
            .map(|v| [(specs[0].name.clone(), v)].into_iter().collect())
            .collect();
    }
    let mut out: Vec<Params> = Vec::new();
    let mut push = |p: Params| {
        if !out.contains(&p) {
            out.push(p);
        }
    };
    for v in samples {
        let p: Option<Params> = specs
            .iter()
            .map(|s| values(&s.domain).contains(v).then(|| (s.name.clone(), v.clone())))
            .collect();
        if let Some(p) = p {
            push(p);
        }
    }
    let base: Params = specs
        .iter()
        .map(|s| {
            let v = if s.optional { Rational::zero() } else { int(1) };
            (s.name.clone(), v)
        })
        .collect();
    for s in &specs {
        for v in values(&s.domain) {
            let mut p = base.clone();
            p.insert(s.name.clone(), v);
            push(p);
        }
    }
    out
}

fn right_power(a: &SuperAlgebra, v: &GradedVector, x: &GradedVector, times: usize) -> GradedVector {
    let mut out = v.clone();
    for _ in 0..times {
        out = a.bracket(&out, x).expect("sizes match");
    }
    out
}

/// Statements about `[Y_i, Y_j]` in an adapted basis with three odd vectors.
fn odd_square_lemmas(report: &mut VerifyReport, subject: &str, a: &SuperAlgebra, facts: &Facts) {
    let (n, m) = a.dims();
    let Some(g) = facts.graded() else { return };
    let zf = g.s_nilindex == (n, 3);
    if m != 3 || n == 0 || !(zf || g.s_nilindex == (n - 1, 3)) {
        return;
    }
    let y = |j: usize| GradedVector::basis(n, m, n + j - 1);
    let x0 = GradedVector::basis(n, m, 0);
    let yy = |i: usize, j: usize| a.bracket(&y(i), &y(j)).expect("sizes match");
    let c = |k: usize| -> GradedSubspace { g.even.get(k).cloned().unwrap_or_else(|| GradedSubspace::zero(n, m)) };

    let lhs = yy(3, 3);
    let rhs = right_power(a, &yy(1, 1), &x0, 4).scale(&frac(1, 6));
    report.assert(
        subject,
        "[Y3,Y3] = 1/6 [Y1,Y1] R_X0^4",
        lhs == rhs,
        format!("{:?} vs {:?}", lhs.even, rhs.even),
    );

    // adapted basis X_0..X_top
    let top = n - 1;
    let mut bad = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            let k = (top + i + j).saturating_sub(6);
            if !c(k).contains(&yy(i, j)).expect("sizes match") {
                bad.push(format!("[Y{i},Y{j}] not in C^{k}(L0)"));
            }
        }
    }
    report.assert(subject, "[Yi,Yj] in C^(n-6+i+j)(L0)", bad.is_empty(), bad.join("; "));

    if zf && n >= 3 {
        let mut bad = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                let k = i + j;
                if (3..=5).contains(&k) && !c(k - 2).contains(&yy(i, j)).expect("sizes match") {
                    bad.push(format!("[Y{i},Y{j}] not in C^{}(L0)", k - 2));
                }
            }
        }
        report.assert(subject, "[Yi,Yj] in C^(i+j-2)(L0), 3 <= i+j <= 5", bad.is_empty(), bad.join("; "));
    }
}

fn is_lemma_group(group: &str) -> bool {
    group.starts_with("zf_") && group != "zf_model" || group == "R32" || group == "R43"
}

/// Checks identities and claims for one built instance.
fn check_instance(report: &mut VerifyReport, e: &CatalogEntry, n: usize, m: usize, p: &Params, a: &SuperAlgebra) {
    let subject = describe(&e.name, n, m, p);
    let ld = leibniz_defects(a).len();
    let od = operator_identity_defects(a).len();
    report.assert(
        &subject,
        "Leibniz identity",
        ld == 0 && od == 0,
        format!("{ld} identity defects, {od} operator defects"),
    );
    let facts = Facts::new(a);
    match e.expected(n, m, p) {
        Ok(claims) => {
            for c in claims {
                let (field, stated) = c.describe();
                let (ok, computed) = c.check(&facts);
                report.assert(&subject, format!("{field} = {stated}"), ok, format!("computed {computed}"));
            }
        }
        Err(err) => report.assert(&subject, "expected profile", false, err.to_string()),
    }
    if e.adapted && ld == 0 && od == 0 {
        odd_square_lemmas(report, &subject, a, &facts);
    }
}

fn pairwise(report: &mut VerifyReport, groups: BTreeMap<(String, (usize, usize)), Vec<(String, InvariantProfile)>>) {
    for ((group, dims), members) in groups {
        let mut separated = 0;
        let mut within = 0;
        let mut same = std::collections::BTreeSet::new();
        for (i, (la, pa)) in members.iter().enumerate() {
            for (lb, pb) in &members[i + 1..] {
                match distinguish_profiles(pa, pb) {
                    Distinction::Witness { .. } => separated += 1,
                    Distinction::Indistinguishable => {
                        let entry_name = |l: &str| l.split('(').next().unwrap_or("").to_string();
                        let (na, nb) = (entry_name(la), entry_name(lb));
                        if na != nb {
                            same.insert((na, nb));
                        } else {
                            within += 1;
                        }
                    }
                }
            }
        }
        let subject = format!("{group} at {dims:?}");
        report.note(
            &subject,
            format!(
                "{separated} pairs separated, {} entry pairs invariant-indistinguishable, {within} within one parameter family",
                same.len()
            ),
        );
        for (a, b) in same {
            report.note(&subject, format!("invariant-indistinguishable at some sampled parameters: {a} ~ {b}"));
        }
    }
}

fn in_scope(scope: &[&CatalogEntry], name: &str) -> bool {
    scope.iter().any(|e| e.name == name)
}

fn check_registries(report: &mut VerifyReport, scope: &[&CatalogEntry]) {
    for d in degenerations() {
        if !in_scope(scope, &d.source.name) {
            continue;
        }
        let subject = format!("{} -> {}", d.source.describe(), d.target.describe());
        let built = d.source.build().and_then(|a| Ok((a, d.target.build()?)));
        let (a, target) = match built {
            Ok(v) => v,
            Err(err) => {
                report.assert(&subject, "degeneration", false, err.to_string());
                continue;
            }
        };
        let start = match &d.pre {
            Some(g) => apply_basis_change(&a, g).expect("dims match"),
            None => a.clone(),
        };
        let (pa, pt) = (invariant_profile(&a), invariant_profile(&target));
        let obstruction = closure_obstruction_profiles(&pa, &pt);
        report.assert(
            &subject,
            "no closure obstruction",
            obstruction.is_empty(),
            format!("{:?}", obstruction.iter().map(|c| c.name()).collect::<Vec<_>>()),
        );
        match degeneration_limit(&start, &d.scaling).expect("dims match") {
            Degeneration::Limit(b) => {
                report.assert(
                    &subject,
                    "degeneration limit equals target",
                    b.same_law(&target),
                    format!("limit {}", crate::format::serialize(&b).replace('\n', "; ")),
                );
                let pb = invariant_profile(&b);
                let len = pa.series_dims.len().max(pb.series_dims.len());
                let sound = (0..len).all(|s| pb.series_dim(s) <= pa.series_dim(s))
                    && pb.dim_right_ann >= pa.dim_right_ann
                    && pb.dim_left_ann >= pa.dim_left_ann
                    && pb.dim_center >= pa.dim_center;
                report.assert(&subject, "limit satisfies the closed-set inequalities", sound, "");
            }
            Degeneration::Diverges(t) => report.assert(
                &subject,
                "degeneration limit equals target",
                false,
                format!("diverges at [{},{}] -> {} with exponent {}", t.left, t.right, t.target, t.exponent),
            ),
        }
    }
    for nz in normalizations() {
        if !in_scope(scope, &nz.source.name) {
            continue;
        }
        let subject = format!("{} => {}", nz.source.describe(), nz.target.describe());
        let ok = match (nz.source.build(), nz.target.build()) {
            (Ok(a), Ok(t)) => apply_basis_change(&a, &nz.map).is_ok_and(|b| b.same_law(&t)),
            _ => false,
        };
        report.assert(&subject, "basis change gives target", ok, "");
    }
    for w in f_witnesses() {
        let name = match &w.construction {
            super::Construction::Entry(i) | super::Construction::PlusEvenLine(i) | super::Construction::PlusOddLine(i) => {
                &i.name
            }
        };
        if !in_scope(scope, name) {
            continue;
        }
        let subject = format!("f{:?} via {}", w.dims, w.construction.describe());
        match w.construction.build() {
            Ok(a) => {
                let nil = crate::series::nilindex(&a).value();
                let check = if w.exact {
                    format!("f = {}", w.nilindex)
                } else {
                    format!("f >= {}", w.nilindex)
                };
                report.assert(
                    &subject,
                    check,
                    a.dims() == w.dims && nil.is_some_and(|k| if w.exact { k == w.nilindex } else { k >= w.nilindex }),
                    format!("dims {:?}, nilindex {:?}", a.dims(), nil),
                );
            }
            Err(err) => report.assert(&subject, "build", false, err.to_string()),
        }
    }
}

/// Runs every check for `scope` (an entry name, a group, or everything).
pub fn verify(scope: Option<&str>, samples: &[Rational]) -> VerifyReport {
    let mut report = VerifyReport::default();
    let selected: Vec<&CatalogEntry> = match scope {
        Some(s) => entries_in(s),
        None => entries().iter().collect(),
    };
    if selected.is_empty() {
        report.assert(scope.unwrap_or(""), "known catalog scope", false, "no matching entries");
        return report;
    }
    let mut groups: BTreeMap<(String, (usize, usize)), Vec<(String, InvariantProfile)>> = BTreeMap::new();
    for e in &selected {
        for (n, m) in e.dim_samples() {
            for p in param_points(e, n, m, samples) {
                let subject = describe(&e.name, n, m, &p);
                match e.build(n, m, &p) {
                    Ok(a) => {
                        check_instance(&mut report, e, n, m, &p, &a);
                        if is_lemma_group(e.group) {
                            groups
                                .entry((e.group.to_string(), a.dims()))
                                .or_default()
                                .push((subject, invariant_profile(&a)));
                        }
                    }
                    Err(CatalogError::Domain { .. }) | Err(CatalogError::Inconsistent(_)) => {
                        report.note(&subject, "parameter point rejected by the builder");
                    }
                    Err(err) => report.assert(&subject, "build", false, err.to_string()),
                }
            }
        }
    }
    pairwise(&mut report, groups);
    check_registries(&mut report, &selected);
    report
}
