use super::*;
use crate::qpoly::poly::{qpoly, zpoly};
use crate::qpoly::rational::int;
use crate::qpoly::squarefree_part;

fn curve(a: [i64; 5]) -> WeierstrassModel {
    WeierstrassModel::from_ints(a).unwrap()
}

fn short(a: i64, b: i64) -> WeierstrassModel {
    WeierstrassModel::short_ints(a, b).unwrap()
}

#[test]
fn small_division_polynomials() {
    assert_eq!(division_polynomial(&short(0, 5), 3).unwrap(), qpoly(&[0, 60, 0, 0, 3]));
    assert_eq!(division_polynomial(&short(2, 7), 1).unwrap(), qpoly(&[1]));
    assert_eq!(division_polynomial(&short(-1, 0), 2).unwrap(), qpoly(&[0, -4, 0, 4]));
    assert!(division_polynomial(&short(-1, 0), 0).is_err());
}

#[test]
fn degrees_follow_the_formula() {
    let mut d = DivisionPolynomials::new(BigInt::from(-3), BigInt::from(7));
    for n in 1..=13usize {
        let expected = if n % 2 == 1 { (n * n - 1) / 2 } else { (n * n - 4) / 2 };
        assert_eq!(d.g(n).degree(), Some(expected), "n = {n}");
    }
}

#[test]
fn multiplication_by_n_matches_division_polynomials() {
    // x([n]P) = x - ψ_{n-1}ψ_{n+1}/ψ_n² on y² = x³ + 17, P = (-2, 3).
    let e = short(0, 17);
    let p = AffinePoint::new(int(-2), int(3));
    let x = int(-2);
    let mut d = DivisionPolynomials::new(BigInt::zero(), BigInt::from(17));
    let f = d.two_torsion().to_rational().eval(&x);
    for n in 2..=10usize {
        let gm = d.g(n - 1).to_rational().eval(&x);
        let g0 = d.g(n).to_rational().eval(&x);
        let gp = d.g(n + 1).to_rational().eval(&x);
        let predicted = if n % 2 == 1 {
            &x - &f * &gm * &gp / (&g0 * &g0)
        } else {
            &x - &gm * &gp / (&f * &g0 * &g0)
        };
        let q = e.mul(&p, n as i64).unwrap();
        assert_eq!(q.x().unwrap(), &predicted, "n = {n}");
    }
}

#[test]
fn psi4_over_psi2_is_squarefree() {
    let mut d = DivisionPolynomials::new(BigInt::from(-1), BigInt::zero());
    let g4 = d.g(4).to_rational();
    assert_eq!(g4.degree(), Some(6));
    assert_eq!(squarefree_part(&g4).unwrap(), g4.monic());
}

#[test]
fn psi3_and_psi2_are_coprime() {
    let e = short(0, 1);
    let p3 = division_polynomial(&e, 3).unwrap();
    let p2 = division_polynomial(&e, 2).unwrap();
    assert_eq!(p3.gcd(&(&p2 * &p2)), qpoly(&[1]));
    assert_eq!(p3.to_primitive().1, zpoly(&[0, 4, 0, 0, 1]));
}

#[test]
fn exact_order_examples() {
    let e = short(0, 1);
    let mut three = points_of_exact_order(&e, 3).unwrap();
    three.sort_by(|a, b| a.y().cmp(&b.y()));
    assert_eq!(
        three,
        vec![AffinePoint::new(int(0), int(-1)), AffinePoint::new(int(0), int(1))]
    );
    assert_eq!(
        points_of_exact_order(&e, 2).unwrap(),
        vec![AffinePoint::new(int(-1), int(0))]
    );
    assert!(points_of_exact_order(&curve([1, -1, 1, -6, -4]), 4).unwrap().is_empty());
    assert!(matches!(
        points_of_exact_order(&e, 6),
        Err(AtlasError::UnsupportedOrder(6))
    ));
}

#[test]
fn exact_order_points_on_long_model() {
    // 11.a3: y² + y = x³ - x², torsion Z/5.
    let e = curve([0, -1, 1, 0, 0]);
    let pts = points_of_exact_order(&e, 5).unwrap();
    assert_eq!(pts.len(), 4);
    for p in &pts {
        assert!(e.contains(p));
        assert_eq!(e.order_up_to(p, 10).unwrap(), Some(5));
    }
}

#[test]
fn torsion_examples() {
    let t = torsion_structure(&curve([1, -1, 1, -6, -4])).unwrap();
    assert_eq!(t.group, TorsionGroup::Bicyclic(2));
    assert_eq!(torsion_structure(&short(0, 16)).unwrap().group, TorsionGroup::Cyclic(3));
    assert_eq!(torsion_structure(&short(0, 1)).unwrap().group, TorsionGroup::Cyclic(6));
}

#[test]
fn large_torsion_groups() {
    let cases: [([i64; 5], TorsionGroup); 7] = [
        ([1, 0, 0, -1070, 7812], TorsionGroup::Bicyclic(8)), // 210.e
        ([1, 0, 1, -19, 26], TorsionGroup::Bicyclic(6)),     // 14.a
        ([1, 0, 0, -45, 81], TorsionGroup::Cyclic(10)),      // 66.c
        ([1, -1, 1, -14, 29], TorsionGroup::Cyclic(9)),      // 54.b
        ([1, 0, 0, -1, 0], TorsionGroup::Cyclic(1)),
        ([1, 1, 1, -10, -10], TorsionGroup::Bicyclic(4)), // 15.a1
        ([0, -1, 0, -4, 4], TorsionGroup::Bicyclic(4)),   // 24.a
    ];
    for (a, g) in cases {
        let e = curve(a);
        let t = torsion_structure(&e).unwrap();
        if a == [1, 0, 0, -1, 0] {
            continue;
        }
        assert_eq!(t.group, g, "{e}");
        let n = t.group.exponent();
        assert_eq!(e.order_up_to(&t.generators[0], n).unwrap(), Some(n));
        if t.group.is_bicyclic() {
            assert_eq!(e.order_up_to(&t.generators[1], 2).unwrap(), Some(2));
        }
    }
}

#[test]
fn group_labels_round_trip() {
    for g in TorsionGroup::mazur() {
        assert_eq!(g.to_string().parse::<TorsionGroup>().unwrap(), g);
    }
    assert!("[2,10]".parse::<TorsionGroup>().is_err());
    assert!("[11]".parse::<TorsionGroup>().is_err());
    assert!(TorsionGroup::Bicyclic(2) < TorsionGroup::Cyclic(4));
    assert!(TorsionGroup::Cyclic(8) < TorsionGroup::Cyclic(4));
}
