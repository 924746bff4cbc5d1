//! Acceptance criteria 1 to 10. Prints one line per criterion and exits
//! nonzero when any criterion fails. All comparisons are exact.

use std::process::ExitCode;

use leibniz_core::catalog::{
    self, build, default_param_samples, entries, entries_in, f_witnesses, Params, VerifyReport,
};
use leibniz_core::rational::int;
use leibniz_core::{
    adapted_basis_zf, adapted_relation_violations, apply_basis_change, char_sequence, classify_shape,
    closure_obstruction, degeneration_limit, is_leibniz, nilindex, operator_identity_defects, CharSequence,
    ClosureCondition, Degeneration, GradedMap, Shape, SuperAlgebra,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, checked: usize) -> Outcome {
    Outcome {
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{checked} checks")
        } else {
            let shown: Vec<&str> = problems.iter().take(6).map(String::as_str).collect();
            format!("{} of {checked} checks failed: {}", problems.len(), shown.join("; "))
        },
    }
}

fn nil(a: &SuperAlgebra) -> Option<usize> {
    nilindex(a).value()
}

/// Every parameter point `verify` would use at `(n, m)`.
fn points(name: &str, n: usize, m: usize) -> Vec<Params> {
    let e = catalog::entry(name).unwrap();
    let specs = e.params(n, m);
    if specs.is_empty() {
        return vec![Params::new()];
    }
    let mut out = Vec::new();
    for v in default_param_samples() {
        let p: Params = specs.iter().map(|s| (s.name.clone(), v.clone())).collect();
        if e.resolve(n, m, &p).is_ok() {
            out.push(p);
        }
    }
    if out.is_empty() {
        // integer-indexed families
        for k in 0..=m as i64 {
            let p: Params = specs.iter().map(|s| (s.name.clone(), int(k))).collect();
            if e.resolve(n, m, &p).is_ok() {
                out.push(p);
            }
        }
    }
    out
}

fn c1_identity(report: &VerifyReport) -> Outcome {
    let checks: Vec<_> = report.assertions.iter().filter(|a| a.check == "Leibniz identity").collect();
    let mut bad: Vec<String> = Vec::new();
    for a in checks.iter().filter(|a| !a.passed) {
        let name = a.subject.split('(').next().unwrap_or("").to_string();
        if !bad.contains(&name) {
            bad.push(name);
        }
    }
    let failing = checks.iter().filter(|a| !a.passed).count();
    let mut o = outcome(
        bad.iter().map(|n| format!("{n} has identity defects")).collect(),
        checks.len(),
    );
    if !o.passed {
        o.detail = format!("{failing} of {} instances fail; entries: {}", checks.len(), bad.join(", "));
    }
    o
}

fn c2_thm312() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for d in 4..=9usize {
        let (n, m) = (d / 2, d - d / 2);
        let a = build("thm312", n, m, &Params::new()).unwrap();
        count += 1;
        let want = if d % 2 == 0 { (d / 2, d / 2) } else { ((d - 1) / 2, (d + 1) / 2) };
        if a.dims() != want || nil(&a) != Some(d) {
            bad.push(format!("d={d}: dims {:?}, nilindex {:?}", a.dims(), nil(&a)));
        }
        for (p, q) in [(n + 1, m - 1), (n.saturating_sub(1), m + 1)] {
            if (q == p || q == p + 1) || p == 0 {
                continue;
            }
            count += 1;
            if build("thm312", p, q, &Params::new()).is_ok() {
                bad.push(format!("thm312 accepted ({p},{q})"));
            }
        }
    }
    outcome(bad, count)
}

fn c3_f_values() -> Outcome {
    let mut bad = Vec::new();
    let ws = f_witnesses();
    for w in &ws {
        let a = w.construction.build().unwrap();
        let k = nil(&a);
        let ok = a.dims() == w.dims
            && k.is_some_and(|k| if w.exact { k == w.nilindex } else { k >= w.nilindex });
        if !ok {
            bad.push(format!("{}: dims {:?}, nilindex {k:?}", w.construction.describe(), a.dims()));
        }
    }
    let r43_line = ws.iter().find(|w| w.dims == (5, 3)).unwrap();
    let a = r43_line.construction.build().unwrap();
    if classify_shape(&a).ok() == Some(Shape::ZeroFiliform) {
        bad.push("R43 + even line is zero-filiform".into());
    }
    outcome(bad, ws.len() + 1)
}

fn c4_nilindex_tables() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=8 {
        for e in entries_in("zf_n1_2") {
            for p in points(&e.name, n, 2) {
                count += 1;
                let a = e.build(n, 2, &p).unwrap();
                if nil(&a) != Some(n + 1) {
                    bad.push(format!("{} n={n}: {:?}", e.name, nil(&a)));
                }
            }
        }
    }
    for n in 4..=7 {
        for e in entries_in("zf_n1_3") {
            for p in points(&e.name, n, 3) {
                count += 1;
                let a = e.build(n, 3, &p).unwrap();
                if nil(&a) != Some(n + 1) {
                    bad.push(format!("{} n={n}: {:?}", e.name, nil(&a)));
                }
            }
        }
    }
    for m in 4..=9usize {
        for e in entries_in("zf_2_m") {
            for p in points(&e.name, 2, m) {
                count += 1;
                let a = e.build(2, m, &p).unwrap();
                let k = nil(&a);
                let peak = e.name == "zf_2_m.muK" && p.get("k") == Some(&int((m as i64 - 1) / 2));
                let ok = if m % 2 == 0 {
                    k == Some(m)
                } else if peak {
                    k == Some(m + 1)
                } else {
                    k.is_some_and(|k| k <= m)
                };
                if !ok {
                    bad.push(format!("{} m={m} {p:?}: {k:?}", e.name));
                }
            }
        }
    }
    outcome(bad, count)
}

fn c5_invariant_dims(report: &VerifyReport) -> Outcome {
    let relevant = |s: &str| {
        s.starts_with("zf_n1_2.") && s.contains("(3,2") || ["zf_2_3.", "zf_3_3.", "zf_4_3."].iter().any(|p| s.starts_with(p))
    };
    let fields = ["dimRightAnn", "dimLeftAnn", "dimCenter", "dimC^"];
    let checks: Vec<_> = report
        .assertions
        .iter()
        .filter(|a| relevant(&a.subject) && fields.iter().any(|f| a.check.starts_with(f)))
        .collect();
    let bad = checks
        .iter()
        .filter(|a| !a.passed)
        .map(|a| format!("{}: {} stated, {}", a.subject, a.check, a.detail))
        .collect();
    outcome(bad, checks.len())
}

fn c6_degenerations() -> Outcome {
    let mut bad = Vec::new();
    let ds = catalog::degenerations();
    for d in &ds {
        let a = d.source.build().unwrap();
        let start = match &d.pre {
            Some(g) => apply_basis_change(&a, g).unwrap(),
            None => a,
        };
        match degeneration_limit(&start, &d.scaling).unwrap() {
            Degeneration::Limit(b) if b.same_law(&d.target.build().unwrap()) => {}
            Degeneration::Limit(_) => bad.push(format!("{} limit differs from target", d.source.describe())),
            Degeneration::Diverges(t) => bad.push(format!(
                "{} -> {} diverges at [{},{}] -> {} (exponent {})",
                d.source.describe(),
                d.target.describe(),
                t.left,
                t.right,
                t.target,
                t.exponent
            )),
        }
    }
    let mu = |name: &str, n, m| build(name, n, m, &Params::new()).unwrap();
    let obs = closure_obstruction(&mu("zf_3_3.mu12", 3, 3), &mu("zf_3_3.mu11", 3, 3)).unwrap();
    if !obs.iter().any(|c| matches!(c, ClosureCondition::Center { .. })) {
        let found: Vec<&str> = obs.iter().map(|c| c.name()).collect();
        bad.push(format!("(mu12, mu11) not obstructed by Cent; conditions found {found:?}"));
    }
    let obs = closure_obstruction(&mu("zf_2_3.mu6", 2, 3), &mu("zf_2_3.mu5", 2, 3)).unwrap();
    if !obs.iter().any(|c| matches!(c, ClosureCondition::RightAnn { .. })) {
        bad.push("(mu6, mu5) not obstructed by Z".into());
    }
    outcome(bad, ds.len() + 2)
}

fn c7_adapted_round_trip() -> Outcome {
    let mut bad = Vec::new();
    let cases = [("zf_model", 5, 4), ("zf_n1_2.mu2", 4, 2), ("zf_2_3.mu6", 2, 3)];
    for (name, n, m) in cases {
        let a = build(name, n, m, &Params::new()).unwrap();
        let (p, q) = a.dims();
        for seed in 0..20 {
            let s = apply_basis_change(&a, &GradedMap::random(p, q, seed)).unwrap();
            let ok = adapted_basis_zf(&s)
                .ok()
                .and_then(|g| apply_basis_change(&s, &g).ok())
                .is_some_and(|law| adapted_relation_violations(&law).is_empty());
            if !ok {
                bad.push(format!("{name} seed {seed}"));
            }
        }
    }
    outcome(bad, 60)
}

fn c8_char_sequences() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    let targets = [(3, 2), (3, 3), (5, 3)];
    for e in entries().iter().filter(|e| e.group.starts_with("zf_") || e.name == "thm312") {
        for (n, m) in e.dim_samples() {
            let dims = e.dims.actual_dims(n, m);
            if !targets.contains(&dims) {
                continue;
            }
            for p in points(&e.name, n, m) {
                let a = e.build(n, m, &p).unwrap();
                count += 1;
                let c = char_sequence(&a, 16, 0x5eed).ok();
                if c != Some(CharSequence::new(vec![dims.0], vec![dims.1])) {
                    bad.push(format!("{} at {dims:?}: {c:?}", e.name));
                }
            }
        }
    }
    let f = build("filiform_I", 6, 2, &Params::new()).unwrap();
    count += 1;
    let c = char_sequence(&f, 16, 0x5eed).ok();
    if c != Some(CharSequence::new(vec![5, 1], vec![2])) {
        bad.push(format!("filiform_I(6,2): {c:?}"));
    }
    outcome(bad, count)
}

fn c9_lemmas(report: &VerifyReport) -> Outcome {
    let scope = |s: &str| ["zf_n1_3.", "zf_3_3.", "zf_4_3."].iter().any(|p| s.starts_with(p));
    let checks: Vec<_> = report
        .assertions
        .iter()
        .filter(|a| scope(&a.subject) && a.check.starts_with("[Y"))
        .collect();
    let bad = checks
        .iter()
        .filter(|a| !a.passed)
        .map(|a| format!("{}: {} ({})", a.subject, a.check, a.detail))
        .collect();
    let mut o = outcome(bad, checks.len());
    if checks.is_empty() {
        o.passed = false;
        o.detail = "no lemma checks ran".into();
    }
    o
}

fn c10_conjecture_family() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=5 {
        let a = build("R_conj", n, n, &Params::new()).unwrap();
        if !is_leibniz(&a) || !operator_identity_defects(&a).is_empty() {
            bad.push(format!("R_conj({n}) fails the identity"));
        }
        if classify_shape(&a).ok() != Some(Shape::Filiform) {
            bad.push(format!("R_conj({n}) is not filiform"));
        }
        if nil(&a) != Some(2 * n) {
            bad.push(format!("R_conj({n}) nilindex {:?}", nil(&a)));
        }
    }
    outcome(bad, 12)
}

fn main() -> ExitCode {
    let report = catalog::verify(None, &default_param_samples());
    let results = [
        ("identity suite over the catalog", c1_identity(&report)),
        ("thm312 nilindex and grading", c2_thm312()),
        ("maximal nilindex witnesses", c3_f_values()),
        ("nilindex tables", c4_nilindex_tables()),
        ("invariant dimensions in the openness arguments", c5_invariant_dims(&report)),
        ("degeneration registry and closure obstructions", c6_degenerations()),
        ("adapted-basis round trip", c7_adapted_round_trip()),
        ("characteristic sequences", c8_char_sequences()),
        ("odd-square lemmas", c9_lemmas(&report)),
        ("conjectured family R_conj", c10_conjecture_family()),
    ];
    let mut failed = 0;
    for (i, (title, o)) in results.iter().enumerate() {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag}: {title} ({})", i + 1, o.detail);
        if !o.passed {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
