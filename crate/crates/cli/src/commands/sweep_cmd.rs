//! `sweep`: the specialization grid experiment. Writes one CSV row per
//! `(n, delta, t)` and prints a JSON support-count summary. A certified
//! irreducible row with a square discriminant would contradict the
//! full-symmetric expectation; any such witness is listed prominently and
//! fails the run's exit code.

use crate::report::Report;
use crate::sweep::{run_sweep, SweepConfig};
use serde_json::json;
use std::path::Path;

pub fn run(cfg: &SweepConfig, out: &Path, resume: bool, quiet: bool) -> Report {
    let mut report = Report::new("sweep");
    let progress = |done: u64, total: u64| {
        eprintln!("sweep: {done}/{total} rows");
    };
    let progress_ref: Option<&dyn Fn(u64, u64)> = if quiet { None } else { Some(&progress) };
    match run_sweep(cfg, out, resume, progress_ref) {
        Ok(summary) => {
            report.note(
                "grid",
                format!(
                    "{} reduced points ({} raw), {} rows fresh, {} resumed -> {}",
                    summary.grid_points,
                    summary.raw_grid_points,
                    summary.rows_written,
                    summary.rows_resumed,
                    out.display()
                ),
            );
            report.note(
                "sieve counts",
                format!(
                    "irreducible {} / reducible {} / unknown {}",
                    summary.sieve_counts.irreducible,
                    summary.sieve_counts.reducible,
                    summary.sieve_counts.unknown
                ),
            );
            report.note(
                "status counts",
                format!(
                    "full_symmetric {} / contains_alternating {} / inconclusive {} / reducible {}",
                    summary.status_counts.full_symmetric,
                    summary.status_counts.contains_alternating,
                    summary.status_counts.inconclusive,
                    summary.status_counts.reducible
                ),
            );
            report.check(
                "contradiction witnesses",
                summary.contradiction_witnesses.is_empty(),
                if summary.contradiction_witnesses.is_empty() {
                    "none".to_string()
                } else {
                    format!(
                        "{} certified-irreducible rows with square discriminant: {}",
                        summary.contradiction_witnesses.len(),
                        summary.contradiction_witnesses.join(" | ")
                    )
                },
            );
            report.attach(summary.to_json());
        }
        Err(e) => {
            report.check("sweep", false, format!("{e}"));
            report.attach(json!({ "error": e.to_string() }));
        }
    }
    report
}
