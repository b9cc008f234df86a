//! Rational isogenies of prime degree, including a sporadic one.

use isogeny_atlas::isogeny::prime_isogenies;
use isogeny_atlas::weier::WeierstrassModel;

fn main() -> isogeny_atlas::Result<()> {
    let curves = [
        ("11.a1", [0, -1, 1, -7820, -263580]),
        ("147.b", [0, -1, 1, -2, -1]),
        ("121.a", [1, 1, 1, -30, -76]),
    ];
    for (label, a) in curves {
        let e = WeierstrassModel::from_ints(a)?;
        println!("{label} {e}");
        for iso in prime_isogenies(&e)? {
            println!("  degree {:>2}: kernel {}", iso.degree(), iso.kernel.polynomial);
            println!(
                "             codomain {} with j = {}",
                iso.codomain,
                iso.codomain.j_invariant()
            );
        }
    }
    Ok(())
}
