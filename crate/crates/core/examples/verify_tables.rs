//! Classify the bundled fixture corpus and compare with the tables.

use std::path::Path;

use isogeny_atlas::cli::run_verify_tables;

fn main() -> isogeny_atlas::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/fixtures.jsonl");
    let summary = run_verify_tables(&path)?;
    for o in summary.mismatches() {
        println!(
            "mismatch {}: expected {} {}, computed {}",
            o.label, o.expected_shape, o.expected_config, o.computed
        );
    }
    println!("{}/{} exact matches", summary.passed, summary.total);
    Ok(())
}
