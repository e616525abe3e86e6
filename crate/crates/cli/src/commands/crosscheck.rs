//! `crosscheck sextic`: at random rational `t`, the sextic value and the
//! discriminant of the depressed degree-3 underlying polynomial must differ
//! by one fixed rational square factor (established at the first
//! non-degenerate sample and constant thereafter). A drift or a non-square
//! ratio would mean a transcription or normalization error in the curve
//! coefficients.

use crate::curves::crosscheck_sextic_vs_disc;
use crate::report::Report;
use krawtchouk_core::krawtchouk::Delta;
use krawtchouk_core::rational::{rat, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

pub fn run(delta: Delta, samples: u32, seed: u64) -> Report {
    let mut report = Report::new("crosscheck sextic");
    assert!(samples >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ts: Vec<Rat> = (0..samples)
        .map(|_| rat(rng.gen_range(-60i64..=60), rng.gen_range(1i64..=12)))
        .collect();
    let outcome = crosscheck_sextic_vs_disc(delta, &ts);
    report.check(
        "ratio constant",
        outcome.ratio_is_constant,
        format!(
            "{} samples ({} degenerate), ratio {}",
            outcome.samples,
            outcome.degenerate_samples,
            outcome
                .ratio
                .as_ref()
                .map_or("undetermined".to_string(), |r| r.to_string())
        ),
    );
    report.check(
        "ratio is a rational square",
        outcome.ratio_is_square,
        outcome
            .ratio
            .as_ref()
            .map_or("no non-degenerate sample".to_string(), |r| r.to_string()),
    );
    report.attach(json!({
        "delta": delta.as_u32(),
        "samples": samples,
        "seed": seed,
        "ratio": outcome.ratio.map(|r| r.to_string()),
    }));
    report
}
