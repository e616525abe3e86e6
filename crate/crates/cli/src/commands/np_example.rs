//! `repro np-example`: the 2-adic valuation table and Newton polygon of
//! `K_19^(19)`, checked row by row against the known values (any other
//! degree prints the computed table for `K_n^(n)` without a reference).

use crate::report::{polygon_json, Report};
use crate::svg::polygon_svg;
use krawtchouk_core::krawtchouk::{krawtchouk_poly, KrawtchoukSpec};
use krawtchouk_core::newton::{coefficient_valuations, is_degree_based, newton_polygon};
use krawtchouk_core::primes;
use krawtchouk_core::rational::{rat, Valuation};
use serde_json::json;
use std::path::Path;

/// `(j, v_2(a_(19-j)))` for `K_19^(19)`, `j = 0..19`.
const EXPECTED_TABLE_19: [(u64, i64); 20] = [
    (0, 3),
    (1, 2),
    (2, 3),
    (3, 1),
    (4, 4),
    (5, 3),
    (6, 4),
    (7, 3),
    (8, 3),
    (9, 2),
    (10, 3),
    (11, 5),
    (12, 6),
    (13, 6),
    (14, 7),
    (15, 12),
    (16, 11),
    (17, 14),
    (18, 18),
    (19, 0),
];

const EXPECTED_BREAKS_19: [(u64, i64); 4] = [(0, 3), (1, 2), (3, 1), (19, 0)];

pub fn run(degree: u32, svg_path: Option<&Path>, quiet: bool) -> Report {
    let mut report = Report::new("repro np-example");
    let n = degree.max(1);
    let f = krawtchouk_poly(&KrawtchoukSpec::new(n, rat(n as i64, 1)));
    let table = coefficient_valuations(&f, primes::TWO);
    let np = newton_polygon(&f, primes::TWO).expect("nonzero");

    if !quiet {
        for &(j, v) in &table {
            println!("({j}, {v})");
        }
    }

    if n == 19 {
        let mut first_mismatch = None;
        for (row, &(j, expected)) in EXPECTED_TABLE_19.iter().enumerate() {
            let got = table[row];
            if got != (j, Valuation::Finite(expected)) {
                first_mismatch = Some(format!("row {row}: expected ({j}, {expected}), got ({}, {})", got.0, got.1));
                break;
            }
        }
        report.check(
            "valuation table",
            first_mismatch.is_none(),
            first_mismatch.unwrap_or_else(|| "all 20 rows match".into()),
        );
        report.check(
            "polygon breaks",
            np.vertices() == EXPECTED_BREAKS_19,
            format!("{:?}", np.vertices()),
        );
    } else {
        report.note("valuation table", format!("computed for degree {n} (no reference values)"));
        report.note("polygon breaks", format!("{:?}", np.vertices()));
    }

    report.check(
        "degree-based",
        is_degree_based(&f),
        format!("binary expansion of {n} matches the segment list"),
    );

    if let Some(path) = svg_path {
        match std::fs::write(path, polygon_svg(&np, &table)) {
            Ok(()) => report.note("svg", format!("wrote {}", path.display())),
            Err(e) => {
                report.check("svg", false, format!("write failed: {e}"));
            }
        }
    }

    let table_json: Vec<_> = table
        .iter()
        .map(|(j, v)| match v {
            Valuation::Finite(v) => json!([j, v]),
            Valuation::Infinity => json!([j, "inf"]),
        })
        .collect();
    report.attach(json!({
        "degree": n,
        "table": table_json,
        "polygon": polygon_json(&np),
    }));
    report
}
