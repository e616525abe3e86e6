//! `hyper`: rational point search on one of the two sextic curves by naive
//! height (max of |numerator| and denominator of reduced `t`).

use crate::curves::{hyperelliptic_search, reference_point_lists, SexticCurve};
use crate::report::Report;
use krawtchouk_core::krawtchouk::Delta;
use krawtchouk_core::rational::Rat;
use serde_json::json;

pub fn run(delta: Delta, height: u64, quiet: bool, csv: bool) -> Report {
    let mut report = Report::new("hyper");
    let points = hyperelliptic_search(delta, height);
    if !quiet {
        if csv {
            println!("t_num,t_den,s_num,s_den");
            for (t, s) in &points {
                println!("{},{},{},{}", t.numer(), t.denom(), s.numer(), s.denom());
            }
        } else {
            for (t, s) in &points {
                println!("t = {t} -> s = {s}");
            }
        }
    }
    report.note(
        "points",
        format!("{} rational points on the delta={delta} sextic at height <= {height}", points.len()),
    );

    // At heights covering the reference lists, flag the delta-label swap:
    // the list filed under each label lies on the opposite curve.
    if height >= 14 {
        let reference = reference_point_lists();
        let own_label: &Vec<(Rat, Rat)> = &reference
            .iter()
            .find(|(d, _)| *d == delta)
            .expect("both labels present")
            .1;
        let other_label: &Vec<(Rat, Rat)> = &reference
            .iter()
            .find(|(d, _)| *d != delta)
            .expect("both labels present")
            .1;
        let curve = SexticCurve::for_delta(delta);
        let on_curve = |pts: &Vec<(Rat, Rat)>| pts.iter().all(|(t, s)| curve.value_at(t) == s * s);
        report.check(
            "label swap",
            !on_curve(own_label)
                && on_curve(other_label)
                && other_label.iter().all(|pt| points.contains(pt)),
            "the reference list filed under this delta lies on the opposite curve; \
             treating the labels as interchanged",
        );
        let extras: Vec<String> = points
            .iter()
            .filter(|pt| !other_label.contains(pt))
            .map(|(t, s)| format!("({t}, {s})"))
            .collect();
        if !extras.is_empty() {
            report.note(
                "points beyond the reference list",
                format!(
                    "{} — verified exactly on this curve but absent from the circulated lists",
                    extras.join(", ")
                ),
            );
        }
    }

    report.attach(json!({
        "delta": delta.as_u32(),
        "height": height,
        "points": points
            .iter()
            .map(|(t, s)| json!({ "t": t.to_string(), "s": s.to_string() }))
            .collect::<Vec<_>>(),
    }));
    report
}
