use isogeny_atlas::clsgraph::{build_class, classify, isogeny_counts, ClassGraph, GraphShape};
use isogeny_atlas::qpoly::Rational;
use isogeny_atlas::torsion::{ShortCurve, TorsionGroup};
use isogeny_atlas::weier::WeierstrassModel;

fn curve(a: [i64; 5]) -> WeierstrassModel {
    WeierstrassModel::from_ints(a).unwrap()
}

fn degree_in(g: &ClassGraph, v: usize, ell: u32) -> usize {
    g.edges
        .iter()
        .filter(|e| e.ell == ell && (e.u == v || e.v == v))
        .count()
}

#[test]
fn build_class_examples() {
    let g = build_class(&curve([1, -1, 1, -6, -4])).unwrap();
    assert_eq!((g.vertices.len(), g.edges.len()), (4, 3));

    let g = build_class(&WeierstrassModel::short_ints(0, 16).unwrap()).unwrap();
    assert_eq!(g.vertices.len(), 4);
    assert_eq!(g.edges.iter().filter(|e| e.ell == 3).count(), 3);
    let degrees: Vec<usize> = (0..4).map(|v| degree_in(&g, v, 3)).collect();
    assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);

    let g = build_class(&WeierstrassModel::short_ints(3, 5).unwrap()).unwrap();
    assert_eq!((g.vertices.len(), g.edges.len()), (1, 0));
}

#[test]
fn l4_ends_have_the_expected_j() {
    let g = classify(&curve([0, 0, 1, 0, 0])).unwrap();
    let cls = g.classification.as_ref().unwrap();
    assert_eq!(cls.shape, GraphShape::L4);
    let j_end = Rational::from_integer((-12_288_000).into());
    for slot in [0, 3] {
        let v = cls.numbering[slot];
        assert_eq!(g.vertices[v].model.j_invariant(), &j_end);
        let c = isogeny_counts(&g, v);
        assert_eq!((c.c, c.c_p[&3], c.max_cyclic_degree), (4, 4, 27));
    }
}

#[test]
fn long_cyclic_isogenies_force_small_torsion() {
    // 27.a (L4) and 162.b (R4(21)) carry 27- and 21-isogenies.
    for a in [[0, 0, 1, 0, 0], [1, -1, 0, 3, -1]] {
        let g = classify(&curve(a)).unwrap();
        for (i, v) in g.vertices.iter().enumerate() {
            let d = isogeny_counts(&g, i).max_cyclic_degree;
            if d == 21 || d == 27 {
                assert!(matches!(
                    v.torsion.group,
                    TorsionGroup::Cyclic(1) | TorsionGroup::Cyclic(3)
                ));
            }
        }
    }
}

#[test]
fn subgroup_counts_match_direct_kernel_counts() {
    let classes = [
        [1, 1, 1, -10, -10],
        [1, 0, 1, -1, 0],
        [0, -1, 1, 0, 0],
        [1, 1, 1, 37, 281],
        [1, 0, 1, -1, -2],
    ];
    for a in classes {
        let g = classify(&curve(a)).unwrap();
        for (i, v) in g.vertices.iter().enumerate() {
            let mut sc = ShortCurve::new(&v.model);
            for ell in [2u32, 3, 5] {
                let kernels = sc.prime_isogenies(Some(ell)).unwrap().len();
                assert_eq!(kernels, degree_in(&g, i, ell), "{} at {ell}", v.model);
                let c = isogeny_counts(&g, i).c_p.get(&ell).copied().unwrap_or(1) as usize;
                assert!(c > kernels, "C_{ell} counts the trivial group and every {ell}-kernel");
                if ell > 2 {
                    assert!(kernels <= 2);
                }
            }
            let two_torsion = sc.two_isogeny_kernels().unwrap().len();
            let expected = match v.torsion.group {
                TorsionGroup::Bicyclic(_) => 3,
                g if g.has_two_torsion() => 1,
                _ => 0,
            };
            assert_eq!(two_torsion, expected);
        }
    }
}

#[test]
fn sporadic_classes() {
    let cases = [
        ([1, 1, 1, -30, -76], 11),
        ([1, 0, 1, -3041, 64278], 17),
        ([0, 0, 1, -38, 90], 19),
        ([1, 1, 1, -8, 6], 37),
        ([0, 0, 1, -860, 9707], 43),
        ([0, 0, 1, -7370, 243528], 67),
        ([0, 0, 1, -2174420, 1234136692], 163),
    ];
    for (a, ell) in cases {
        let g = classify(&curve(a)).unwrap();
        assert_eq!(g.shape(), Some(GraphShape::L2(ell)), "{a:?}");
        assert_eq!(isogeny_counts(&g, 0).c, 2);
    }
}
