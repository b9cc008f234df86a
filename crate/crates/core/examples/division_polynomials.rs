//! Division polynomials and their factorization over Q.

use isogeny_atlas::qpoly::factor_over_q;
use isogeny_atlas::torsion::division_polynomial;
use isogeny_atlas::weier::WeierstrassModel;

fn main() -> isogeny_atlas::Result<()> {
    // 11.a1 and 11.a3: the 5-division polynomials split differently.
    for a in [[0, -1, 1, -7820, -263580], [0, -1, 1, 0, 0]] {
        let e = WeierstrassModel::from_ints(a)?;
        let psi5 = division_polynomial(&e, 5)?;
        let f = factor_over_q(&psi5.to_primitive().1)?;
        let degrees: Vec<_> = f.factors.iter().map(|(g, m)| (g.degree().unwrap(), *m)).collect();
        println!("{e}: psi_5 has degree {:?}, factor degrees {degrees:?}", psi5.degree());
        for (g, _) in f.factors.iter().filter(|(g, _)| g.degree() <= Some(2)) {
            println!("    {g}");
        }
    }
    Ok(())
}
