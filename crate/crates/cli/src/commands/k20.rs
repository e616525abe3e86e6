//! `repro k20`: the degree-10 underlying polynomial of `K_20^(20)`.
//!
//! Clearing denominators yields an integral irreducible polynomial whose
//! discriminant factors as `2^28 * 3^50 * 5^33 * 7^8 * 2857 * 3371 * C` with
//! a fixed 76-digit cofactor `C`; there are exactly 410 good primes in the
//! open interval `(7, 2857)`, of which exactly 65 exhibit a degree-7 factor
//! (an order-7 Frobenius element, inside Jordan's range for degree 10), and
//! the discriminant is not a square — full symmetric group evidence.

use crate::report::{galois_report_json, Report};
use krawtchouk_core::galois::{disc_valuation_profile, galois_scan, GaloisStatus};
use krawtchouk_core::krawtchouk::{underlying_poly, Delta, UnderlyingSpec};
use krawtchouk_core::rational::{rat, Int};
use krawtchouk_core::Prime;
use serde_json::json;
use std::str::FromStr;

const EXPECTED_COFACTOR: &str =
    "3080247982713573950046529683277689810503273830007221192065657784224004955821";

pub fn run() -> Report {
    let mut report = Report::new("repro k20");
    let u = underlying_poly(&UnderlyingSpec::new(10, Delta::Zero, rat(20, 1)))
        .expect("parity holds");
    let model = u.primitive_integer_form().expect("nonzero");

    let primes: Vec<Prime> = [2u64, 3, 5, 7, 2857, 3371]
        .iter()
        .map(|&p| Prime::new(p).expect("prime"))
        .collect();
    let profile = disc_valuation_profile(&model, &primes).expect("nonzero disc");
    let expected_vals = [(2u64, 28u64), (3, 50), (5, 33), (7, 8), (2857, 1), (3371, 1)];
    report.check(
        "disc valuations",
        profile.valuations == expected_vals,
        format!("{:?}", profile.valuations),
    );
    let expected_cofactor = Int::from_str(EXPECTED_COFACTOR).expect("literal");
    report.check(
        "disc cofactor",
        profile.cofactor == expected_cofactor,
        format!("{} ({} digits)", profile.cofactor, profile.cofactor.to_string().len()),
    );

    let scan = galois_scan(&model, 2857);
    let good_in_window: Vec<_> = scan
        .witnesses
        .iter()
        .filter(|w| w.p > 7 && w.p < 2857)
        .collect();
    report.check(
        "good primes in (7, 2857)",
        good_in_window.len() == 410,
        format!("{}", good_in_window.len()),
    );
    let with_order_7 = good_in_window
        .iter()
        .filter(|w| w.cycle_type.contains_part(7))
        .count();
    report.check("order-7 witnesses", with_order_7 == 65, format!("{with_order_7}"));
    report.check(
        "disc square",
        !scan.disc_square,
        "discriminant is not a rational square",
    );
    report.check(
        "status",
        scan.status == GaloisStatus::FullSymmetric,
        scan.status.code().to_string(),
    );

    report.attach(json!({
        "model": model.to_string(),
        "disc": profile.disc.to_string(),
        "cofactor": profile.cofactor.to_string(),
        "scan": galois_report_json(&scan),
    }));
    report
}
