//! Runs every verification suite and prints a per-suite summary.

use std::collections::BTreeMap;

use qmink::cli::{run_suite, RunOptions};

fn main() -> qmink::Result<()> {
    let report = run_suite("all", RunOptions::default())?;
    let mut by_suite: BTreeMap<&str, (usize, usize, f64)> = BTreeMap::new();
    for r in &report.records {
        let suite = r.id.split('/').next().unwrap_or(&r.id);
        let e = by_suite.entry(suite).or_default();
        e.0 += r.verdict as usize;
        e.1 += 1;
        e.2 += r.wall_time;
    }
    for (suite, (pass, total, secs)) in by_suite {
        println!("{suite:<24} {pass:>3}/{total:<3} {secs:>7.3}s");
    }
    println!("overall: {}", if report.overall { "PASS" } else { "FAIL" });
    Ok(())
}
