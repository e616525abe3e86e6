//! Check-list reports shared by all subcommands: human-readable lines by
//! default, machine JSON behind `--json`, exit code 0 iff every check
//! passed.

use krawtchouk_core::galois::GaloisReport;
use krawtchouk_core::newton::NewtonPolygon;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            passed: true,
            checks: Vec::new(),
            data: None,
        }
    }

    /// Record one check; returns `passed` for convenient chaining.
    pub fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.passed &= passed;
        self.checks.push(Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    pub fn note(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            passed: true,
            detail: detail.into(),
        });
    }

    pub fn attach(&mut self, data: Value) {
        self.data = Some(data);
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct OutputOptions {
    pub json: bool,
    pub csv: bool,
    pub quiet: bool,
}

/// Print a report according to the output options.
pub fn emit(report: &Report, opts: &OutputOptions) {
    if opts.json {
        println!("{}", serde_json::to_string_pretty(report).expect("serializable"));
        return;
    }
    if !opts.quiet {
        for check in &report.checks {
            let mark = if check.passed { "PASS" } else { "FAIL" };
            println!("[{mark}] {}: {}", check.label, check.detail);
        }
    }
    println!(
        "{}: {}",
        report.command,
        if report.passed { "ok" } else { "FAILED" }
    );
}

/// Polygon serialization: `{prime, vertices, segments, degree_based}` with
/// exact-fraction slopes.
pub fn polygon_json(np: &NewtonPolygon) -> Value {
    json!({
        "prime": np.prime().get(),
        "orientation": "leading coefficient at abscissa 0",
        "vertices": np.vertices().iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>(),
        "segments": np.segments().iter().map(|s| json!({
            "slope": s.slope_string(),
            "length": s.length,
        })).collect::<Vec<_>>(),
        "degree_based": np.matches_degree_based_shape(),
        "root_at_zero_multiplicity": np.root_at_zero_multiplicity(),
    })
}

/// Evidence-bundle serialization:
/// `{degree, status, jordan_prime, primes_sampled, witnesses, disc_square,
/// disc_valuations}`.
pub fn galois_report_json(r: &GaloisReport) -> Value {
    json!({
        "degree": r.degree,
        "status": r.status.code(),
        "jordan_prime": r.jordan_prime,
        "primes_sampled": r.primes_sampled,
        "witnesses": r.witnesses.iter().map(|w| json!({
            "p": w.p,
            "cycle_type": w.cycle_type.parts(),
        })).collect::<Vec<_>>(),
        "disc_square": r.disc_square,
        "disc_valuations": r.disc_valuations.iter().map(|&(p, v)| json!([p, v])).collect::<Vec<_>>(),
        "skipped_primes": r.skipped_primes,
        "sieve": r.reducibility.code(),
    })
}
