//! Runs every acceptance criterion and prints one verdict line per criterion.

use std::io::Write;

use twistlie::acceptance::{run, Options, Suite};

#[test]
fn all_criteria() {
    let opts = Options { seed: 42, golden_dir: None };
    let report = run(Suite::All, &opts);
    // Written to the raw handle so the verdicts show up without --nocapture.
    let mut out = std::io::stdout().lock();
    for r in &report.results {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        let secs = r.elapsed.as_secs_f64();
        writeln!(out, "{verdict} criterion {:>2} {:<26} {secs:>8.3}s  {}", r.id, r.name, r.detail).unwrap();
    }
    drop(out);
    assert_eq!(report.results.len(), 10);
    let failed: Vec<_> = report.results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");

    // A second run with the same seed reproduces the report byte for byte.
    let again = run(Suite::All, &opts);
    assert_eq!(report.to_tsv(), again.to_tsv());
}

#[test]
fn suites_partition_the_criteria() {
    let mut ids: Vec<u8> = [Suite::Projcat, Suite::Daycore, Suite::Duality, Suite::Conf, Suite::Stability]
        .iter()
        .flat_map(|s| s.criteria().iter().copied())
        .collect();
    ids.sort_unstable();
    assert_eq!(ids, Suite::All.criteria());
}
