//! Rational torsion subgroups with generators on the input model.

use isogeny_atlas::torsion::torsion_structure;
use isogeny_atlas::weier::WeierstrassModel;

fn main() -> isogeny_atlas::Result<()> {
    let curves = [
        ("17.a2", [1, -1, 1, -6, -4]),
        ("210.e", [1, 0, 0, -1070, 7812]),
        ("54.b", [1, -1, 1, -14, 29]),
        ("66.c", [1, 0, 0, -45, 81]),
        ("37.a", [0, 0, 1, -1, 0]),
    ];
    for (label, a) in curves {
        let e = WeierstrassModel::from_ints(a)?;
        let t = torsion_structure(&e)?;
        let gens: Vec<String> = t.generators.iter().map(|p| p.to_string()).collect();
        println!("{label:6} {e}: {}  generators {}", t.group, gens.join(", "));
    }
    Ok(())
}
