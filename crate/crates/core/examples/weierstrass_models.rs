//! Short models, j-invariants, isomorphism and quadratic twists.

use isogeny_atlas::qpoly::Rational;
use isogeny_atlas::weier::{cm_lookup, WeierstrassModel};

fn main() -> isogeny_atlas::Result<()> {
    let e = WeierstrassModel::from_ints([1, -1, 1, -6, -4])?;
    let (short, t) = e.short_model();
    println!("E        = {e}");
    println!("short    = {short}  via [u,r,s,t] = [{},{},{},{}]", t.u, t.r, t.s, t.t);
    println!("j(E)     = {}", e.j_invariant());
    println!("isomorphic to its short model: {}", e.is_isomorphic(&short));

    let twist = short.quadratic_twist(&Rational::from_integer((-1).into()));
    println!("twist by -1 = {twist}, isomorphic: {}", e.is_isomorphic(&twist));

    let cm = WeierstrassModel::short_ints(0, 1)?;
    println!(
        "y^2 = x^3 + 1 has CM: {:?}",
        cm_lookup(cm.j_invariant()).map(|r| r.disc_k)
    );
    Ok(())
}
