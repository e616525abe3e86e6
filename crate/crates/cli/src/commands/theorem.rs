//! `verify theorem`: for every `n <= n_max` and every integer
//! `t` in `[n, n + 2^(j_1))` (the window cut out by the lowest binary digit
//! of `n`), the 2-adic polygon of `K_n^(t)` must be degree-based, and at
//! `t = n` the distinguished coefficients must have valuations
//! `k, k-1, ..., 0` along the partial binary sums.

use crate::report::Report;
use krawtchouk_core::krawtchouk::{krawtchouk_poly, KrawtchoukSpec};
use krawtchouk_core::newton::{degree_based_shape, distinguished_valuations, is_degree_based};
use krawtchouk_core::rational::{rat, Valuation};
use serde_json::json;

pub fn window(n: u32) -> std::ops::Range<i64> {
    let j1 = (n as u64).trailing_zeros();
    n as i64..(n as i64 + (1i64 << j1))
}

pub fn run(n_max: u32) -> Report {
    let mut report = Report::new("verify theorem");
    assert!(n_max >= 1);
    let mut checked = 0u64;
    let mut failures: Vec<String> = Vec::new();
    for n in 1..=n_max {
        for t in window(n) {
            let f = krawtchouk_poly(&KrawtchoukSpec::new(n, rat(t, 1)));
            if !is_degree_based(&f) {
                failures.push(format!("n={n} t={t}"));
            }
            checked += 1;
        }
    }
    report.check(
        "degree-based window",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{checked} specializations across n <= {n_max}, 0 failures")
        } else {
            format!("failed at {}", failures.join(", "))
        },
    );

    let mut law_failures: Vec<String> = Vec::new();
    for n in 1..=n_max {
        let k = degree_based_shape(n as u64).digit_count();
        let points = distinguished_valuations(n, &rat(n as i64, 1));
        for (r, &(_, v)) in points.iter().enumerate() {
            if v != Valuation::Finite((k - r) as i64) {
                law_failures.push(format!("n={n} r={r} got {v}"));
            }
        }
    }
    report.check(
        "distinguished valuations at t = n",
        law_failures.is_empty(),
        if law_failures.is_empty() {
            format!("v_2 = k - r at every partial binary sum, n <= {n_max}")
        } else {
            format!("failed at {}", law_failures.join(", "))
        },
    );

    report.attach(json!({
        "n_max": n_max,
        "specializations_checked": checked,
        "failures": failures,
    }));
    report
}
