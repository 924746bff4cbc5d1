use proptest::prelude::*;

use leibniz_core::catalog::{build, entries, Params};
use leibniz_core::format::{instantiate, parse, serialize, Bindings};
use leibniz_core::rational::{int, Rational};
use leibniz_core::series::graded_central_series;
use leibniz_core::{
    adapted_basis_zf, adapted_relation_violations, annihilator, apply_basis_change, central_series,
    degeneration_limit, engel_flag, invariant_profile, leibniz_defects, operator_identity_defects,
    product_subspace, right_mul_matrix, AnnihilatorKind, Degeneration, GradedMap, GradedSubspace, GradedVector,
    ScalingFamily, SuperAlgebra,
};

/// Graded law with `[e_i, e_j]` supported on basis vectors of larger index,
/// coefficients drawn cyclically from `coeffs`.
fn upper_law(n: usize, m: usize, coeffs: &[i8]) -> SuperAlgebra {
    let mut a = SuperAlgebra::abelian(n, m).unwrap();
    let d = n + m;
    let mut next = coeffs.iter().cycle();
    for i in 0..d {
        for j in 0..d {
            let p = a.parity_of(i).add(a.parity_of(j));
            let terms: Vec<(usize, Rational)> = (i.max(j) + 1..d)
                .filter(|&k| a.parity_of(k) == p)
                .map(|k| (k, int(*next.next().unwrap() as i64)))
                .filter(|(_, c)| *c != int(0))
                .collect();
            a.set_product(i, j, terms).unwrap();
        }
    }
    a
}

fn law() -> impl Strategy<Value = SuperAlgebra> {
    (1usize..=3, 0usize..=3, prop::collection::vec(-2i8..=2, 1..40)).prop_map(|(n, m, c)| upper_law(n, m, &c))
}

/// Leibniz laws: catalog entries at their smallest sample with parameter 1.
fn leibniz_laws() -> Vec<(String, SuperAlgebra)> {
    entries()
        .iter()
        .filter_map(|e| {
            let (n, m) = e.dim_samples()[0];
            let p: Params = e.params(n, m).into_iter().map(|s| (s.name, int(1))).collect();
            let a = e.build(n, m, &p).ok()?;
            leibniz_defects(&a).is_empty().then(|| (e.name.clone(), a))
        })
        .collect()
}

fn random_even(a: &SuperAlgebra, seed: u64) -> GradedVector {
    let (n, m) = a.dims();
    let g = GradedMap::random(n.max(1), m, seed);
    let col = g.even_block().column(0);
    GradedVector::new(col[..n].to_vec(), vec![int(0); m])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identity_formulations_agree(a in law()) {
        prop_assert_eq!(leibniz_defects(&a).is_empty(), operator_identity_defects(&a).is_empty());
    }

    #[test]
    fn profile_is_isomorphism_invariant(a in law(), seed in any::<u64>()) {
        let (n, m) = a.dims();
        let b = apply_basis_change(&a, &GradedMap::random(n, m, seed)).unwrap();
        prop_assert_eq!(invariant_profile(&a), invariant_profile(&b));
    }

    #[test]
    fn nilpotent_laws_have_nilpotent_right_multiplications(a in law(), seed in any::<u64>()) {
        prop_assume!(central_series(&a).nilindex.is_nilpotent());
        let (n, m) = a.dims();
        for s in 0..4u64 {
            let g = GradedMap::random(n, m, seed.wrapping_add(s));
            let even = GradedVector::new(g.even_block().column(0), vec![int(0); m]);
            prop_assert!(right_mul_matrix(&a, &even).unwrap().nilpotent_jordan_type().is_some());
            if m > 0 {
                let odd = GradedVector::new(vec![int(0); n], g.odd_block().column(0));
                prop_assert!(right_mul_matrix(&a, &odd).unwrap().nilpotent_jordan_type().is_some());
            }
        }
    }

    #[test]
    fn series_are_nested(a in law()) {
        let c = central_series(&a);
        for w in c.terms.windows(2) {
            prop_assert!(w[1].is_subspace_of(&w[0]));
        }
        let g = graded_central_series(&a).unwrap();
        let (n, m) = a.dims();
        for (k, ck) in g.even.iter().enumerate() {
            let whole = c.terms.get(k).or(c.terms.last()).unwrap();
            prop_assert!(ck.is_subspace_of(&whole.intersection(&GradedSubspace::even_part(n, m))));
        }
        for w in g.even.windows(2).chain(g.odd.windows(2)) {
            prop_assert!(w[1].is_subspace_of(&w[0]));
        }
    }

    #[test]
    fn engel_flag_steps_down(a in law()) {
        prop_assume!(central_series(&a).nilindex.is_nilpotent());
        let (n, m) = a.dims();
        let flag = engel_flag(&a).unwrap();
        let l0 = GradedSubspace::even_part(n, m);
        prop_assert_eq!(flag.last().map(|v| v.dim()).unwrap_or(0), m);
        for k in 1..flag.len() {
            prop_assert!(product_subspace(&a, &flag[k], &l0).unwrap().is_subspace_of(&flag[k - 1]));
        }
        if let Some(first) = flag.first() {
            prop_assert!(product_subspace(&a, first, &l0).unwrap().is_zero());
        }
    }

    #[test]
    fn text_round_trip(a in law()) {
        let text = serialize(&a);
        let back = instantiate(&parse(&text).unwrap(), &Bindings::new()).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn degenerations_respect_closed_conditions(a in law(), e in prop::collection::vec(-2i64..=2, 6)) {
        let (n, m) = a.dims();
        let exps: Vec<Rational> = e.iter().cycle().take(n + m).map(|&x| int(x)).collect();
        let s = ScalingFamily::new(exps[..n].to_vec(), exps[n..].to_vec());
        if let Degeneration::Limit(b) = degeneration_limit(&a, &s).unwrap() {
            let (pa, pb) = (invariant_profile(&a), invariant_profile(&b));
            for k in 0..pa.series_dims.len().max(pb.series_dims.len()) {
                prop_assert!(pb.series_dim(k) <= pa.series_dim(k));
            }
            prop_assert!(pb.dim_right_ann >= pa.dim_right_ann);
            prop_assert!(pb.dim_left_ann >= pa.dim_left_ann);
            prop_assert!(pb.dim_center >= pa.dim_center);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hundred_random_laws_round_trip(a in law()) {
        let back = instantiate(&parse(&serialize(&a)).unwrap(), &Bindings::new()).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn squares_of_even_vectors_lie_in_the_right_annihilator() {
    for (name, a) in leibniz_laws() {
        let z = annihilator(&a, AnnihilatorKind::Right);
        for seed in 0..5 {
            let x = random_even(&a, seed);
            let xx = a.bracket(&x, &x).unwrap();
            assert!(z.contains(&xx).unwrap(), "{name}");
        }
    }
}

#[test]
fn identity_formulations_agree_on_catalog() {
    for e in entries() {
        let (n, m) = e.dim_samples()[0];
        let p: Params = e.params(n, m).into_iter().map(|s| (s.name, int(1))).collect();
        if let Ok(a) = e.build(n, m, &p) {
            assert_eq!(
                leibniz_defects(&a).is_empty(),
                operator_identity_defects(&a).is_empty(),
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn catalog_entries_round_trip_through_text() {
    for e in entries() {
        for (n, m) in e.dim_samples().into_iter().take(3) {
            let p: Params = e.params(n, m).into_iter().map(|s| (s.name, int(1))).collect();
            let Ok(a) = e.build(n, m, &p) else { continue };
            let back = instantiate(&parse(&serialize(&a)).unwrap(), &Bindings::new()).unwrap();
            assert_eq!(back, a, "{}", e.name);
        }
    }
}

#[test]
fn profiles_invariant_on_catalog_entries() {
    for (name, a) in leibniz_laws() {
        let (n, m) = a.dims();
        let b = apply_basis_change(&a, &GradedMap::random(n, m, 3)).unwrap();
        assert_eq!(invariant_profile(&a), invariant_profile(&b), "{name}");
    }
}

#[test]
fn adapted_basis_recovers_zero_filiform_entries() {
    for name in ["zf_2_2.mu2", "zf_2_3.mu6", "zf_3_3.mu12", "zf_4_3.mu9"] {
        let (n, m) = (name.as_bytes()[3] - b'0', name.as_bytes()[5] - b'0');
        let a = build(name, n as usize, m as usize, &Params::new()).unwrap();
        for seed in 0..3 {
            let s = apply_basis_change(&a, &GradedMap::random(n as usize, m as usize, seed)).unwrap();
            let g = adapted_basis_zf(&s).unwrap();
            let law = apply_basis_change(&s, &g).unwrap();
            assert!(adapted_relation_violations(&law).is_empty(), "{name} seed {seed}");
        }
    }
}
