//! Deterministic specialization sweep over a grid of `(n, delta, t = a/b)`.
//!
//! The grid is enumerated in lexicographic `(n, delta, a, b)` order and
//! reduced fractions are visited exactly once. Work items are independent
//! and stateless, so records are computed by a fixed-size worker pool and
//! merged back in grid order; output bytes do not depend on the worker
//! count. The CSV file is rewritten atomically (temp file + rename) at
//! every checkpoint, so an interrupted sweep leaves a valid prefix that
//! `--resume` can extend.

use krawtchouk_core::galois::{galois_scan_with, GaloisStatus, PrimeSample, ScanOptions, SieveOutcome};
use krawtchouk_core::krawtchouk::{underlying_poly, Delta, UnderlyingSpec};
use krawtchouk_core::rational::rat;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

pub const CSV_HEADER: &str =
    "n,delta,t_num,t_den,sieve,status,jordan_prime,disc_square,primes_sampled,runtime_ms";

const CHECKPOINT_ROWS: usize = 1024;

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub n_min: u32,
    pub n_max: u32,
    pub numerator_bound: i64,
    pub denominator_bound: i64,
    pub deltas: Vec<u32>,
    pub prime_bound: u64,
    pub seed: u64,
    pub workers: usize,
    /// Optional randomized sub-sampling of primes (deterministic under
    /// `seed`); exhaustive sampling when absent.
    pub sample_primes: Option<usize>,
    /// Record wall-clock row timings. Off by default so that identical runs
    /// produce byte-identical files.
    pub timings: bool,
}

impl SweepConfig {
    /// Desk-scale defaults: n <= 12, |a|, b <= 50, primes <= 500.
    pub fn desk_default() -> Self {
        SweepConfig {
            n_min: 1,
            n_max: 12,
            numerator_bound: 50,
            denominator_bound: 50,
            deltas: vec![0, 1],
            prime_bound: 500,
            seed: 0,
            workers: 8,
            sample_primes: None,
            timings: false,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n_min < 1 || self.n_max < self.n_min {
            return Err("need 1 <= n_min <= n_max".into());
        }
        if self.numerator_bound < 1 || self.denominator_bound < 1 {
            return Err("numerator and denominator bounds must be >= 1".into());
        }
        if self.deltas.is_empty() || self.deltas.iter().any(|&d| d > 1) {
            return Err("delta set must be a nonempty subset of {0, 1}".into());
        }
        if self.workers == 0 {
            return Err("worker count must be >= 1".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    pub n: u32,
    pub delta: Delta,
    pub a: i64,
    pub b: i64,
}

/// Lexicographic grid of reduced fractions. `a = 0` appears only as `0/1`.
pub fn grid(cfg: &SweepConfig) -> Vec<GridPoint> {
    let mut points = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        for &d in &cfg.deltas {
            let delta = Delta::from_u32(d).expect("validated");
            for a in -cfg.numerator_bound..=cfg.numerator_bound {
                for b in 1..=cfg.denominator_bound {
                    if a.abs().gcd(&b) != 1 {
                        continue;
                    }
                    points.push(GridPoint { n, delta, a, b });
                }
            }
        }
    }
    points
}

/// Grid size before fraction deduplication.
pub fn raw_grid_count(cfg: &SweepConfig) -> u64 {
    (cfg.n_max - cfg.n_min + 1) as u64
        * cfg.deltas.len() as u64
        * (2 * cfg.numerator_bound as u64 + 1)
        * cfg.denominator_bound as u64
}

#[derive(Debug, Clone)]
pub struct SweepRecord {
    pub point: GridPoint,
    pub sieve: &'static str,
    pub status: GaloisStatus,
    pub jordan_prime: Option<u64>,
    pub disc_square: bool,
    pub primes_sampled: u64,
    pub runtime_ms: u64,
    pub contradiction: bool,
}

impl SweepRecord {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.point.n,
            self.point.delta.as_u32(),
            self.point.a,
            self.point.b,
            self.sieve,
            self.status.code(),
            self.jordan_prime.map_or(String::new(), |p| p.to_string()),
            self.disc_square,
            self.primes_sampled,
            self.runtime_ms,
        )
    }
}

/// Compute one grid row: build the underlying polynomial, clear
/// denominators, sieve and scan.
pub fn run_grid_point(pt: &GridPoint, cfg: &SweepConfig) -> SweepRecord {
    let started = Instant::now();
    let t = rat(pt.a, pt.b);
    let u = underlying_poly(&UnderlyingSpec::new(pt.n, pt.delta, t)).expect("parity holds");
    let model = u.primitive_integer_form().expect("nonzero");
    let opts = ScanOptions {
        prime_bound: cfg.prime_bound,
        sample: cfg.sample_primes.map(|count| PrimeSample {
            count,
            seed: cfg.seed,
        }),
    };
    let scan = galois_scan_with(&model, &opts);
    let contradiction = scan.contradicts_symmetric_conjecture();
    SweepRecord {
        point: *pt,
        sieve: match scan.reducibility {
            SieveOutcome::Irreducible(_) => "IRREDUCIBLE",
            SieveOutcome::Reducible(_) => "REDUCIBLE",
            SieveOutcome::Unknown => "UNKNOWN",
        },
        status: scan.status,
        jordan_prime: scan.jordan_prime,
        disc_square: scan.disc_square,
        primes_sampled: scan.primes_sampled,
        runtime_ms: if cfg.timings {
            started.elapsed().as_millis() as u64
        } else {
            0
        },
        contradiction,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub raw_grid_points: u64,
    pub grid_points: u64,
    pub rows_written: u64,
    pub rows_resumed: u64,
    pub sieve_counts: SieveCounts,
    pub status_counts: StatusCounts,
    /// CSV lines of any certified-irreducible, square-discriminant row — a
    /// row that would contradict the full-symmetric expectation. Listed
    /// prominently; the sweep never asserts the conjecture either way.
    pub contradiction_witnesses: Vec<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SieveCounts {
    pub irreducible: u64,
    pub reducible: u64,
    pub unknown: u64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct StatusCounts {
    pub full_symmetric: u64,
    pub contains_alternating: u64,
    pub inconclusive: u64,
    pub reducible: u64,
}

impl SweepSummary {
    pub fn to_json(&self) -> Value {
        json!(self)
    }
}

fn atomic_write(path: &Path, content: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp_path = Path::new(&tmp);
    {
        let mut file = fs::File::create(tmp_path)?;
        file.write_all(content.as_bytes())?;
        file.sync_all()?;
    }
    fs::rename(tmp_path, path)
}

/// Parse the fields a resumed row needs for the summary tallies.
fn tally_line(line: &str, counts: &mut (SieveCounts, StatusCounts), contradictions: &mut Vec<String>) {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 10 {
        return;
    }
    match fields[4] {
        "IRREDUCIBLE" => counts.0.irreducible += 1,
        "REDUCIBLE" => counts.0.reducible += 1,
        _ => counts.0.unknown += 1,
    }
    match fields[5] {
        "FULL_SYMMETRIC" => counts.1.full_symmetric += 1,
        "CONTAINS_ALTERNATING" => counts.1.contains_alternating += 1,
        "REDUCIBLE" => counts.1.reducible += 1,
        _ => counts.1.inconclusive += 1,
    }
    // a witness needs degree >= 2: linear rows have discriminant 1, a
    // square, but S_1 has no proper transitive subgroup
    let degree_at_least_2 = fields[0].parse::<u32>().map_or(false, |n| n >= 2);
    if degree_at_least_2 && fields[4] == "IRREDUCIBLE" && fields[7] == "true" {
        contradictions.push(line.to_string());
    }
}

/// Run the sweep, writing the CSV to `out`. Returns the summary.
///
/// With `resume`, a valid existing file's rows are kept verbatim and the
/// grid is continued after them.
pub fn run_sweep(
    cfg: &SweepConfig,
    out: &Path,
    resume: bool,
    progress: Option<&dyn Fn(u64, u64)>,
) -> io::Result<SweepSummary> {
    cfg.validate().map_err(io::Error::other)?;
    let points = grid(cfg);
    let total = points.len() as u64;

    let mut lines: Vec<String> = Vec::with_capacity(points.len());
    let mut rows_resumed = 0u64;
    if resume && out.exists() {
        let existing = fs::read_to_string(out)?;
        let mut it = existing.lines();
        match it.next() {
            Some(header) if header == CSV_HEADER => {}
            _ => {
                return Err(io::Error::other(
                    "resume target exists but does not carry the expected header",
                ));
            }
        }
        for line in it {
            if !line.is_empty() {
                lines.push(line.to_string());
            }
        }
        if lines.len() > points.len() {
            return Err(io::Error::other(
                "resume target has more rows than the configured grid",
            ));
        }
        rows_resumed = lines.len() as u64;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(io::Error::other)?;

    let mut next = lines.len();
    while next < points.len() {
        let upper = (next + CHECKPOINT_ROWS).min(points.len());
        let chunk = &points[next..upper];
        let records: Vec<SweepRecord> = pool.install(|| {
            chunk
                .par_iter()
                .map(|pt| run_grid_point(pt, cfg))
                .collect()
        });
        for record in &records {
            lines.push(record.csv_line());
        }
        next = upper;
        let mut content = String::with_capacity(lines.len() * 48 + CSV_HEADER.len() + 1);
        content.push_str(CSV_HEADER);
        content.push('\n');
        for line in &lines {
            content.push_str(line);
            content.push('\n');
        }
        atomic_write(out, &content)?;
        if let Some(cb) = progress {
            cb(next as u64, total);
        }
    }

    // summary over all rows (resumed + fresh) from the canonical lines
    let mut counts = (SieveCounts::default(), StatusCounts::default());
    let mut contradictions = Vec::new();
    for line in &lines {
        tally_line(line, &mut counts, &mut contradictions);
    }
    Ok(SweepSummary {
        config: cfg.clone(),
        raw_grid_points: raw_grid_count(cfg),
        grid_points: total,
        rows_written: lines.len() as u64 - rows_resumed,
        rows_resumed,
        sieve_counts: counts.0,
        status_counts: counts.1,
        contradiction_witnesses: contradictions,
    })
}
