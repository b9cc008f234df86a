//! Isogeny class, shape, canonical torsion configuration and subgroup counts.

use isogeny_atlas::clsgraph::{classify, isogeny_counts};
use isogeny_atlas::weier::WeierstrassModel;

fn main() -> isogeny_atlas::Result<()> {
    let e = WeierstrassModel::from_ints([1, 0, 0, -1070, 7812])?;
    let g = classify(&e)?;
    let cls = g.classification.as_ref().expect("classified");
    println!("{} {}  (table row {})", cls.shape, cls.config, cls.table_row.id());
    for (i, v) in g.vertices.iter().enumerate() {
        let c = isogeny_counts(&g, i);
        println!(
            "  {i}: {}  torsion {}  C = {}  max cyclic degree {}",
            v.model, v.torsion.group, c.c, c.max_cyclic_degree
        );
    }
    for edge in &g.edges {
        println!("  {} -- {}  ({})", edge.u, edge.v, edge.ell);
    }
    Ok(())
}
