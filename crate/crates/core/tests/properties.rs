use isogeny_atlas::clsgraph::{classify, GraphShape};
use isogeny_atlas::qpoly::{factor_over_q, rational_roots, IntegerPolynomial, Poly, Rational};
use isogeny_atlas::torsion::{torsion_structure, TorsionGroup};
use isogeny_atlas::weier::{Transform, WeierstrassModel};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != Rational::from_integer(0.into()))
}

fn transform() -> impl Strategy<Value = Transform> {
    (nonzero_rational(), rational(), rational(), rational()).prop_map(|(u, r, s, t)| Transform::new(u, r, s, t))
}

fn short_curve() -> impl Strategy<Value = WeierstrassModel> {
    (-50i64..=50, -50i64..=50).prop_filter_map("nonsingular", |(a, b)| WeierstrassModel::short_ints(a, b).ok())
}

fn long_curve() -> impl Strategy<Value = WeierstrassModel> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -60i64..=60, -60i64..=60)
        .prop_filter_map("nonsingular", |(a1, a2, a3, a4, a6)| {
            WeierstrassModel::from_ints([a1, a2, a3, a4, a6]).ok()
        })
}

/// Representatives of classes with nontrivial graphs.
fn class_curve() -> impl Strategy<Value = WeierstrassModel> {
    prop::sample::select(vec![
        [0, 1, 1, 1, 0],
        [0, 0, 1, 0, 0],
        [0, -1, 0, -4, 4],
        [1, 1, 1, -10, -10],
        [0, 1, 0, -41, -116],
        [1, 0, 1, -1, -2],
        [1, -1, 0, 3, -1],
        [1, 1, 1, 37, 281],
        [1, -1, 1, -6, -4],
    ])
    .prop_map(|a| WeierstrassModel::from_ints(a).unwrap())
}

fn int_poly(coeffs: &[i64]) -> IntegerPolynomial {
    Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coordinate_changes_preserve_j_and_isomorphism(e in long_curve(), t in transform()) {
        let f = e.transform(&t);
        prop_assert_eq!(f.j_invariant(), e.j_invariant());
        prop_assert!(e.is_isomorphic(&f));
        let back = f.transform(&t.inverse());
        prop_assert_eq!(back.a_invariants(), e.a_invariants());
        let composed = e.transform(&t.then(&t.inverse()));
        prop_assert_eq!(composed.a_invariants(), e.a_invariants());
    }

    #[test]
    fn short_model_is_integral_and_isomorphic(e in long_curve()) {
        let (s, t) = e.short_model();
        prop_assert!(s.short_coefficients().is_some());
        prop_assert!(s.is_integral());
        prop_assert_eq!(s.j_invariant(), e.j_invariant());
        let moved = e.transform(&t);
        prop_assert_eq!(moved.a_invariants(), s.a_invariants());
    }

    #[test]
    fn twists_keep_j_and_square_twists_are_trivial(e in short_curve(), d in 2i64..30, k in 1i64..5) {
        let d = Rational::from_integer(d.into());
        let twist = e.quadratic_twist(&d);
        prop_assert_eq!(twist.j_invariant(), e.j_invariant());
        let square = Rational::from_integer((k * k).into());
        prop_assert!(e.is_isomorphic(&e.quadratic_twist(&square)));
    }

    #[test]
    fn torsion_is_mazur_and_divides_point_counts(e in long_curve()) {
        let t = torsion_structure(&e).unwrap();
        prop_assert!(TorsionGroup::mazur().contains(&t.group));
        for g in &t.generators {
            prop_assert!(e.contains(g));
        }
        let (s, _) = e.short_model();
        for p in [101u64, 103, 107, 109, 113] {
            if let Some(n) = s.reduction_point_count(p) {
                prop_assert_eq!(n % t.group.order() as u64, 0);
            }
        }
    }

    #[test]
    fn torsion_is_invariant_under_coordinate_change(e in short_curve(), t in transform()) {
        let a = torsion_structure(&e).unwrap().group;
        let b = torsion_structure(&e.transform(&t)).unwrap().group;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn factorization_multiplies_back(
        parts in prop::collection::vec(prop::collection::vec(-9i64..=9, 2..=4), 1..=3),
    ) {
        let polys: Vec<IntegerPolynomial> = parts.iter().map(|c| int_poly(c)).filter(|p| p.degree() > Some(0)).collect();
        prop_assume!(!polys.is_empty());
        let f = polys.iter().skip(1).fold(polys[0].clone(), |acc, p| &acc * p);
        let fact = factor_over_q(&f).unwrap();
        prop_assert_eq!(fact.expand(), f.to_rational());
        for (g, _) in &fact.factors {
            prop_assert!(g.degree() > Some(0));
        }
    }

    #[test]
    fn rational_roots_are_found(roots in prop::collection::vec((-30i64..=30, 1i64..=5), 1..=4)) {
        let mut f = int_poly(&[1]);
        let mut want: Vec<Rational> = Vec::new();
        for &(n, d) in &roots {
            f = &f * &int_poly(&[-n, d]);
            want.push(Rational::new(n.into(), d.into()));
        }
        want.sort();
        want.dedup();
        prop_assert_eq!(rational_roots(&f).unwrap(), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn class_invariants_hold(e in prop_oneof![short_curve(), class_curve()]) {
        let g = classify(&e).unwrap();
        let shape = g.shape().unwrap();
        prop_assert!(GraphShape::all().contains(&shape));
        prop_assert_eq!(g.vertices.len(), shape.vertex_count());
        let with_two = g.vertices.iter().filter(|v| v.torsion.group.has_two_torsion()).count();
        prop_assert!(with_two == 0 || with_two == g.vertices.len());
        for c in g.counts() {
            let c2 = c.c_p.get(&2).copied().unwrap_or(1);
            prop_assert!(c2 == 1 || c2 % 2 == 0);
            prop_assert!(c.c <= 8);
        }
        prop_assert!(g.dual_violations().is_empty());
    }

    #[test]
    fn classification_ignores_the_model(e in class_curve(), t in transform()) {
        let a = classify(&e).unwrap();
        let b = classify(&e.transform(&t)).unwrap();
        prop_assert_eq!(a.shape(), b.shape());
        prop_assert_eq!(a.config(), b.config());
    }
}
