use super::*;
use crate::identities::leibniz_defects;
use crate::invariants::{distinguish, Distinction};
use crate::rational::{frac, int};
use crate::transform::apply_basis_change;

fn no_params() -> Params {
    Params::new()
}

#[test]
fn every_entry_builds_at_its_smallest_sample() {
    let mut failing = Vec::new();
    for e in entries() {
        let (n, m) = e.dim_samples()[0];
        let p: Params = e
            .params(n, m)
            .into_iter()
            .map(|s| {
                let v = match s.domain {
                    Domain::Integer { lo, .. } => int(lo),
                    _ => int(1),
                };
                (s.name, v)
            })
            .collect();
        let a = e.build(n, m, &p).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        assert_eq!(a.dims(), e.dims.actual_dims(n, m), "{}", e.name);
        if !leibniz_defects(&a).is_empty() {
            failing.push(e.name.as_str());
        }
    }
    // rows printed with a product that contradicts the identity
    assert_eq!(
        failing,
        [
            "zf_3_3.mu1",
            "zf_3_3.mu2",
            "zf_3_3.mu3",
            "zf_3_3.mu5",
            "zf_3_3.mu6",
            "zf_3_3.mu8",
            "zf_4_3.mu11",
            "zf_4_3.mu13",
            "zf_n1_3.mu11",
            "zf_n1_3.mu13",
            "zf_n1_3.mu14",
            "zf_2_m.mu_mp1",
        ]
    );
}

#[test]
fn names_are_unique() {
    let mut names: Vec<&str> = entries().iter().map(|e| e.name.as_str()).collect();
    let before = names.len();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), before);
}

#[test]
fn conjecture_family_matches_tables() {
    let r43 = build("R43", 4, 3, &no_params()).unwrap();
    assert!(build("R", 4, 3, &no_params()).unwrap().same_law(&r43));
    assert!(build("R_conj", 3, 3, &no_params()).unwrap().same_law(&r43));
    let r32 = build("R32", 3, 2, &no_params()).unwrap();
    assert!(build("R_conj", 2, 2, &no_params()).unwrap().same_law(&r32));
}

#[test]
fn dimension_errors() {
    assert!(matches!(build("R_conj", 3, 2, &no_params()), Err(CatalogError::Dimension { .. })));
    assert!(matches!(build("thm312", 2, 4, &no_params()), Err(CatalogError::Dimension { .. })));
    assert!(matches!(build("nope", 2, 2, &no_params()), Err(CatalogError::UnknownName(_))));
}

#[test]
fn parameter_errors() {
    let e = build("zf_2_2.mu1", 2, 2, &params(&[("beta", int(1))]));
    assert!(matches!(e, Err(CatalogError::UnknownParameter { .. })));
    let e = build("R32_family", 3, 2, &params(&[("lambda", int(0)), ("beta", int(1))]));
    assert!(matches!(e, Err(CatalogError::Domain { .. })));
    let e = build("R32_family", 3, 2, &params(&[("lambda", int(1))]));
    assert!(matches!(e, Err(CatalogError::UnboundParameter(_))));
}

#[test]
fn text_source_round_trips() {
    let e = entry("zf_2_2.mu1").unwrap();
    let src = e.source(2, 2).unwrap();
    let def = crate::format::parse(&src).unwrap();
    let b: crate::format::Bindings = params(&[("alpha", int(1))]);
    let from_text = crate::format::instantiate(&def, &b).unwrap();
    let built = e.build(2, 2, &params(&[("alpha", int(1))])).unwrap();
    assert_eq!(from_text, built);
}

#[test]
fn zf_n1_2_profile_and_distinction() {
    let claims = expected_profile("zf_n1_2.mu2", 3, 2, &no_params()).unwrap();
    assert!(claims.contains(&Claim::Nilindex { value: 4 }));
    assert!(claims.contains(&Claim::RightAnn { value: 4 }));
    assert!(claims.contains(&Claim::LeftAnn { value: 1 }));
    let a = build("zf_n1_2.mu2", 3, 2, &no_params()).unwrap();
    let b = build("zf_n1_2.mu3", 3, 2, &no_params()).unwrap();
    assert_eq!(
        distinguish(&a, &b).unwrap(),
        Distinction::Witness {
            invariant: "dimRightAnn",
            left: "4".into(),
            right: "3".into()
        }
    );
    let p = crate::invariants::invariant_profile(&a);
    assert!(claims.iter().all(|c| c.holds_for(&p)));
}

#[test]
fn zf_2_3_mu5_mu6_separated() {
    let a = build("zf_2_3.mu5", 2, 3, &no_params()).unwrap();
    let b = build("zf_2_3.mu6", 2, 3, &no_params()).unwrap();
    assert_eq!(
        distinguish(&a, &b).unwrap(),
        Distinction::Witness {
            invariant: "dimRightAnn",
            left: "1".into(),
            right: "3".into()
        }
    );
}

#[test]
fn normalizations_hold() {
    for nz in normalizations() {
        let a = nz.source.build().unwrap();
        let t = nz.target.build().unwrap();
        let b = apply_basis_change(&a, &nz.map).unwrap();
        assert!(b.same_law(&t), "{} -> {}", nz.source.describe(), nz.target.describe());
    }
}

#[test]
fn f_witness_nilindexes() {
    for w in f_witnesses() {
        let a = w.construction.build().unwrap();
        assert_eq!(a.dims(), w.dims);
        let nil = crate::series::nilindex(&a).value().unwrap();
        if w.exact {
            assert_eq!(nil, w.nilindex, "{}", w.construction.describe());
        } else {
            assert!(nil >= w.nilindex, "{}", w.construction.describe());
        }
    }
}

#[test]
fn degenerations_to_mu9_and_mu10_hold() {
    for d in degenerations().into_iter().take(2) {
        let a = d.source.build().unwrap();
        let lim = crate::transform::degeneration_limit(&a, &d.scaling).unwrap().limit().unwrap();
        assert!(lim.same_law(&d.target.build().unwrap()), "{}", d.source.describe());
    }
}

#[test]
fn associative_law_from_catalog_style_input() {
    let a = crate::algebra::SuperAlgebra::abelian(1, 1).unwrap();
    let out = from_associative_derivation(&a, &crate::linalg::Matrix::identity(1), &crate::linalg::Matrix::identity(1)).unwrap();
    assert!(out.is_abelian());
}

#[test]
fn param_points_cover_samples() {
    let e = entry("zf_2_2.mu1").unwrap();
    let pts = verify::param_points(e, 2, 2, &default_param_samples());
    assert_eq!(pts.len(), 5);
    let e = entry("R43_presolve").unwrap();
    let pts = verify::param_points(e, 4, 3, &default_param_samples());
    assert!(pts.iter().all(|p| p.len() == 4));
    assert!(pts.contains(&params(&[("b0", frac(1, 2)), ("b1", frac(1, 2)), ("b2", frac(1, 2)), ("b3", frac(1, 2))])));
}

#[test]
fn verify_small_scope() {
    let r = verify(Some("zf_2_2"), &default_param_samples());
    let fails: Vec<_> = r.failures().collect();
    assert!(fails.is_empty(), "{fails:#?}");
    assert!(!r.assertions.is_empty());
    let r = verify(Some("no_such_group"), &default_param_samples());
    assert!(!r.passed());
}
