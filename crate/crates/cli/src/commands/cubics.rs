//! `repro cubics`: depressing the degree-3 underlying polynomials must
//! reproduce the displayed coefficient polynomials in `t`, for both parity
//! classes, at randomly sampled rational `t`.

use crate::curves::depressed_cubic_coefficients;
use crate::report::Report;
use krawtchouk_core::krawtchouk::{underlying_poly, Delta, UnderlyingSpec};
use krawtchouk_core::poly::RatPoly;
use krawtchouk_core::rational::{rat, Rat};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

pub fn run(samples: u32, seed: u64) -> Report {
    let mut report = Report::new("repro cubics");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for delta in [Delta::Zero, Delta::One] {
        let (c1, c0) = depressed_cubic_coefficients(delta);
        // spot values at t = 0 first
        let at_zero = (c1.eval(&Rat::zero()), c0.eval(&Rat::zero()));
        let expected_zero = match delta {
            Delta::Zero => (rat(-131, 6), rat(965, 27)),
            Delta::One => (rat(-637, 12), rat(3305, 27)),
        };
        report.check(
            format!("delta={delta} coefficients at t=0"),
            at_zero == expected_zero,
            format!("linear {} constant {}", at_zero.0, at_zero.1),
        );

        let mut mismatches = Vec::new();
        for _ in 0..samples.max(10) {
            let t = rat(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=9));
            let dep = underlying_poly(&UnderlyingSpec::new(3, delta, t.clone()))
                .expect("parity holds")
                .depress()
                .expect("degree 3");
            let expected = RatPoly::from_coeffs(vec![
                c0.eval(&t),
                c1.eval(&t),
                Rat::zero(),
                Rat::one(),
            ]);
            if dep != expected {
                mismatches.push(format!("t={t}: got {dep}"));
            }
        }
        report.check(
            format!("delta={delta} random specializations"),
            mismatches.is_empty(),
            if mismatches.is_empty() {
                format!("{} sampled t values match the displayed polynomials", samples.max(10))
            } else {
                mismatches.join("; ")
            },
        );
    }
    report.attach(json!({ "samples": samples.max(10), "seed": seed }));
    report
}

#[cfg(test)]
mod tests {
    #[test]
    fn reproduces_displayed_cubics() {
        let report = super::run(10, 1);
        assert!(report.passed, "{:#?}", report.checks);
    }
}
