use super::*;
use crate::qpoly::rational::{int, rat};
use crate::AtlasError;

fn e17a2() -> WeierstrassModel {
    WeierstrassModel::from_ints([1, -1, 1, -6, -4]).unwrap()
}

#[test]
fn invariants_of_17a2() {
    let e = e17a2();
    assert_eq!(e.discriminant(), &int(289));
    assert_eq!(e.c4(), &int(273));
    assert_eq!(e.j_invariant(), &rat(20346417, 289));
}

#[test]
fn singular_rejected() {
    assert!(matches!(
        WeierstrassModel::from_ints([0, 0, 0, 0, 0]),
        Err(AtlasError::SingularCurve)
    ));
}

#[test]
fn j_1728() {
    let e = WeierstrassModel::short_ints(1, 0).unwrap();
    assert_eq!(e.j_invariant(), &int(1728));
}

#[test]
fn short_model_of_short_curve_is_identity() {
    let e = WeierstrassModel::short_ints(0, 1).unwrap();
    let (s, t) = e.short_model();
    assert_eq!(s, e);
    assert!(t.is_identity());
}

#[test]
fn short_model_keeps_j() {
    let e = e17a2();
    let (s, t) = e.short_model();
    assert_eq!(s.j_invariant(), e.j_invariant());
    assert!(s.short_coefficients().is_some());
    assert_eq!(e.transform(&t), s);
    assert_eq!(s.transform(&t.inverse()), e);
}

#[test]
fn short_model_completes_square() {
    // y² + y = x³ is y'² = x³ + 1/4 after completing the square.
    let e = WeierstrassModel::from_ints([0, 0, 1, 0, 0]).unwrap();
    let (s, _) = e.short_model();
    assert_eq!(s.j_invariant(), &int(0));
    let target = WeierstrassModel::short(int(0), rat(1, 4)).unwrap();
    assert!(s.is_isomorphic(&target));
}

#[test]
fn group_law_examples() {
    let e = WeierstrassModel::short_ints(0, 1).unwrap();
    let p = AffinePoint::new(int(0), int(1));
    assert_eq!(e.add(&p, &AffinePoint::Infinity).unwrap(), p);
    assert_eq!(e.add(&p, &p).unwrap(), AffinePoint::new(int(0), int(-1)));
    assert_eq!(e.order_up_to(&p, 12).unwrap(), Some(3));

    let f = WeierstrassModel::short_ints(-1, 0).unwrap();
    let s = f.add(&AffinePoint::new(int(0), int(0)), &AffinePoint::new(int(1), int(0)));
    assert_eq!(s.unwrap(), AffinePoint::new(int(-1), int(0)));
}

#[test]
fn off_curve_rejected() {
    let e = WeierstrassModel::short_ints(0, 1).unwrap();
    let bad = AffinePoint::new(int(1), int(1));
    assert!(matches!(e.add(&bad, &bad), Err(AtlasError::OffCurvePoint)));
}

#[test]
fn isomorphism_examples() {
    let e = WeierstrassModel::short_ints(-1, 0).unwrap();
    let w = e
        .isomorphism_to(&WeierstrassModel::short_ints(-16, 0).unwrap())
        .unwrap();
    assert_eq!(w.u, rat(1, 2));
    assert!(!e.is_isomorphic(&WeierstrassModel::short_ints(-2, 0).unwrap()));
    let a = WeierstrassModel::short_ints(0, 1).unwrap();
    assert!(!a.is_isomorphic(&WeierstrassModel::short_ints(0, 16).unwrap()));
    assert!(a.is_isomorphic(&WeierstrassModel::short_ints(0, 64).unwrap()));
}

#[test]
fn isomorphism_of_long_models() {
    // 17.a2 and a shifted copy of it.
    let e = e17a2();
    let t = Transform::new(rat(2, 3), int(5), rat(-1, 2), int(7));
    let f = e.transform(&t);
    let w = e.isomorphism_to(&f).unwrap();
    assert_eq!(e.transform(&w), f);
    // A quadratic twist shares j but is not isomorphic.
    assert!(!e.is_isomorphic(&e.quadratic_twist(&int(-1))));
}

#[test]
fn cm_examples() {
    assert_eq!(cm_lookup(&int(0)).unwrap().disc_k, -3);
    assert_eq!(cm_lookup(&int(-(1 << 15) * 3 * 125)).unwrap().disc_k, -3);
    assert!(cm_lookup(&rat(20346417, 289)).is_none());
    assert_eq!(cm_table().len(), 13);
}

#[test]
fn point_counts_match_brute_force() {
    let e = e17a2();
    for p in [5u64, 7, 11, 13] {
        let brute = 1
            + (0..p)
                .flat_map(|x| (0..p).map(move |y| (x, y)))
                .filter(|&(x, y)| {
                    let (x, y, p) = (x as i64, y as i64, p as i64);
                    (y * y + x * y + y - (x * x * x - x * x - 6 * x - 4)).rem_euclid(p) == 0
                })
                .count() as u64;
        assert_eq!(e.reduction_point_count(p), Some(brute), "p = {p}");
    }
}
