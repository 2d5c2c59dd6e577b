//! Run the whole verification battery from code (the `sphertop verify
//! all` subcommand wraps exactly this) and show the aggregated report.
//!
//! ```bash
//! cargo run --example verify_battery
//! ```

use sphertop::verify::{manifest, results_json, run_all, VerifyConfig};

fn main() {
    let cfg = VerifyConfig {
        seed: 42,
        samples: 200,
    };
    println!("battery manifest ({} suites):", manifest().len());
    for name in manifest() {
        println!("  {name}");
    }

    let results = run_all(&cfg);
    println!("\nresults (seed {}, {} samples):", cfg.seed, cfg.samples);
    for r in &results {
        let status = if r.informational {
            "INFO"
        } else if r.passed {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "  {status} {:<28} max {:.3e}  tol {:.1e}",
            r.report.name, r.report.max_residual, r.tolerance
        );
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!(
        "\n{} passed, {failed} failed, {} informational",
        results
            .iter()
            .filter(|r| r.passed && !r.informational)
            .count(),
        results.iter().filter(|r| r.informational).count()
    );

    // the JSON document `verify all --out` writes
    let doc = results_json(&cfg, &results);
    println!(
        "aggregated JSON: all_passed = {}, {} suite entries",
        doc["all_passed"],
        doc["suites"].as_array().unwrap().len()
    );
}
