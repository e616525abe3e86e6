//! `verify prop-minus1`: the `t = -1` specializations of power-of-two
//! degree. For `2 <= k <= k_max`: `K_(2^k)^(-1)` carries an Eisenstein-type
//! certificate at p = 2 and has constant coefficient 1; the degree-`2^(k-1)`
//! underlying polynomial shows zero positive-root sign variations (all its
//! real roots are negative); and the monic-normalized root product is
//! `a_0/a_n = n!/2^n`, which is reported alongside the constant coefficient
//! since the two differ for a non-monic polynomial.

use crate::report::Report;
use krawtchouk_core::galois::product_of_roots_relation;
use krawtchouk_core::krawtchouk::{
    descartes_bounds, krawtchouk_poly, underlying_poly, Delta, KrawtchoukSpec, UnderlyingSpec,
};
use krawtchouk_core::newton::eisenstein_certificate;
use krawtchouk_core::primes;
use krawtchouk_core::rational::{rat, Int, Rat};
use serde_json::json;

pub fn run(k_max: u32) -> Report {
    let mut report = Report::new("verify prop-minus1");
    assert!(k_max >= 2, "the statement starts at k = 2");
    let mut rows = Vec::new();
    for k in 2..=k_max {
        let n = 1u32 << k;
        let f = krawtchouk_poly(&KrawtchoukSpec::new(n, rat(-1, 1)));
        let cert = eisenstein_certificate(&f, primes::TWO);
        report.check(
            format!("k={k} certificate"),
            cert.is_some(),
            format!("degree {n}, Eisenstein at p = 2: {cert:?}"),
        );
        report.check(
            format!("k={k} constant coefficient"),
            f.constant_coeff() == rat(1, 1),
            format!("constant = {}", f.constant_coeff()),
        );

        let m = 1u32 << (k - 1);
        let u = underlying_poly(&UnderlyingSpec::new(m, Delta::Zero, rat(-1, 1)))
            .expect("parity holds");
        let (pos, neg) = descartes_bounds(&u);
        report.check(
            format!("k={k} sign variations"),
            pos == 0 && neg == m as usize,
            format!("underlying degree {m}: positive bound {pos}, negative bound {neg}"),
        );

        let (constant, product) = product_of_roots_relation(n);
        let mut expected = Rat::from_integer(Int::from(1));
        for i in 1..=n {
            expected *= rat(i as i64, 2);
        }
        report.check(
            format!("k={k} root product"),
            constant == rat(1, 1) && product == expected,
            format!("constant coefficient {constant}, root product a_0/a_n = {product} = {n}!/2^{n}"),
        );
        rows.push(json!({
            "k": k,
            "degree": n,
            "certificate": cert.map(|c| format!("{c:?}")),
            "constant_coefficient": constant.to_string(),
            "root_product": product.to_string(),
            "positive_root_bound": pos,
        }));
    }
    report.attach(json!({ "k_max": k_max, "rows": rows }));
    report
}
