//! Runs the three-way sweep and prints a summary per rank and weight.
//!
//! cargo run --release --example verify_sweep

use std::collections::BTreeMap;

use shapovalov::verify::{full_sweep, SweepConfig};

fn main() -> shapovalov::Result<()> {
    let report = full_sweep(&SweepConfig::default())?;
    let mut per_case: BTreeMap<(usize, u32), (String, usize)> = BTreeMap::new();
    for r in &report.instances {
        per_case.entry((r.ell, r.d)).or_insert_with(|| (r.core.to_string(), 0)).1 += 1;
    }
    for ((ell, d), (core, n)) in per_case {
        println!("ell = {ell}  d = {d}  core ({core})  {n} colored compositions");
    }
    println!("{} instances, {} mismatches: {}", report.instances.len(), report.mismatches, report.status);
    Ok(())
}
