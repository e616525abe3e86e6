//! Acceptance suite: one test per criterion, named `criterion_NN_*` so the
//! harness output reads as a per-criterion pass/fail list. Oracles used
//! here (trial division, pairwise hull interpolation, literal factorials)
//! are written out independently of the library code paths they check.
//!
//! Two tests are expected to fail, and are left failing on purpose:
//!
//! * `criterion_10_sextic_points_union_as_circulated` — the circulated
//!   point lists for the two sextic curves omit the small-height points
//!   (4/3, 56/3), (10/7, 6852/49) and (29/23, 238359/12167), all verified
//!   here by exact arithmetic, so the found union cannot equal the
//!   circulated union.
//! * `criterion_11_sweep_zero_contradictions` — the desk-scale sweep
//!   *does* find contradiction witnesses: `U_3^(0,4/3)` and
//!   `U_3^(1,10/7)` are irreducible cubics with square discriminant
//!   (Galois group A_3, not S_3), which falsifies the zero-witness
//!   expectation rather than the implementation.
//!
//! The companion `*_verified` tests pin the corrected ground truth so any
//! regression from it still fails loudly.

use krawtchouk_cli::commands;
use krawtchouk_cli::curves::{
    crosscheck_sextic_vs_disc, hyperelliptic_search, reference_point_lists, SexticCurve,
};
use krawtchouk_cli::sweep::{run_sweep, SweepConfig};
use krawtchouk_core::galois::{
    galois_scan, irreducibility_sieve, jordan_range, GaloisStatus, PrimePoly, SieveBudget,
    SieveOutcome,
};
use krawtchouk_core::krawtchouk::{
    check_jacobi_identity, descartes_bounds, krawtchouk_poly, shifted_poly, underlying_poly,
    Delta, KrawtchoukSpec, UnderlyingSpec,
};
use krawtchouk_core::newton::{
    coefficient_valuations, degree_based_shape, distinguished_valuations, eisenstein_certificate,
    is_degree_based, newton_polygon,
};
use krawtchouk_core::poly::{resultant, sylvester_resultant, IntPoly, RatPoly};
use krawtchouk_core::primes::{self, Prime};
use krawtchouk_core::rational::{rat, vp, vp_factorial, Int, Rat, Valuation};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rat {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

// -------------------------------------------------------------------------
// 1. valuation table and polygon of K_19^(19); exact match, < 1 s
// -------------------------------------------------------------------------

#[test]
fn criterion_01_valuation_table_k19() {
    let report = commands::np_example::run(19, None, true);
    assert!(report.passed, "{:#?}", report.checks);

    let f = krawtchouk_poly(&KrawtchoukSpec::new(19, rat(19, 1)));
    let expected: [i64; 20] = [3, 2, 3, 1, 4, 3, 4, 3, 3, 2, 3, 5, 6, 6, 7, 12, 11, 14, 18, 0];
    let table = coefficient_valuations(&f, primes::TWO);
    for (j, &v) in expected.iter().enumerate() {
        assert_eq!(table[j], (j as u64, Valuation::Finite(v)), "row {j}");
    }
    let np = newton_polygon(&f, primes::TWO).unwrap();
    assert_eq!(np.vertices(), &[(0, 3), (1, 2), (3, 1), (19, 0)]);
    println!("criterion 1: PASS (20 rows and 4 breaks match exactly)");
}

// -------------------------------------------------------------------------
// 2. degree-based window for every n <= 64; 0 failures
// -------------------------------------------------------------------------

#[test]
fn criterion_02_degree_based_window_to_64() {
    let mut checked = 0u64;
    for n in 1u32..=64 {
        let window = 1i64 << (n as u64).trailing_zeros();
        for t in n as i64..(n as i64 + window) {
            let f = krawtchouk_poly(&KrawtchoukSpec::new(n, rat(t, 1)));
            assert!(is_degree_based(&f), "n={n} t={t}");
            checked += 1;
        }
    }
    assert_eq!(checked, 256);
    println!("criterion 2: PASS ({checked} specializations, 0 failures)");
}

// -------------------------------------------------------------------------
// 3. Eisenstein certificates for K_(2^k)^(t), k <= 6, t in [2^k, 2^(k+1))
// -------------------------------------------------------------------------

#[test]
fn criterion_03_eisenstein_windows_to_k6() {
    let mut checked = 0u64;
    for k in 0u32..=6 {
        let n = 1u32 << k;
        for t in n as i64..(2 * n) as i64 {
            let f = krawtchouk_poly(&KrawtchoukSpec::new(n, rat(t, 1)));
            assert!(
                eisenstein_certificate(&f, primes::TWO).is_some(),
                "k={k} t={t}"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 127);
    println!("criterion 3: PASS ({checked} certificates at p = 2)");
}

// -------------------------------------------------------------------------
// 4. distinguished coefficient valuations k - r at t = n, n <= 64
// -------------------------------------------------------------------------

#[test]
fn criterion_04_distinguished_point_law_to_64() {
    for n in 1u32..=64 {
        let k = degree_based_shape(n as u64).digit_count();
        let points = distinguished_valuations(n, &rat(n as i64, 1));
        assert_eq!(points.len(), k + 1, "n={n}");
        for (r, &(pos, v)) in points.iter().enumerate() {
            assert_eq!(
                v,
                Valuation::Finite((k - r) as i64),
                "n={n} r={r} position={pos}"
            );
        }
    }
    println!("criterion 4: PASS (v_2 = k - r at every partial binary sum)");
}

// -------------------------------------------------------------------------
// 5. the K_20^(20) example: discriminant factorization and prime counts
// -------------------------------------------------------------------------

#[test]
fn criterion_05_k20_example() {
    let report = commands::k20::run();
    assert!(report.passed, "{:#?}", report.checks);
    println!(
        "criterion 5: PASS (disc = 2^28 3^50 5^33 7^8 * 2857 * 3371 * C76; \
         410 good primes in (7, 2857), 65 with an order-7 witness, full symmetric)"
    );
}

// -------------------------------------------------------------------------
// 6. the t = -1 family at power-of-two degree
// -------------------------------------------------------------------------

#[test]
fn criterion_06_minus_one_family() {
    let report = commands::prop_minus1::run(6);
    assert!(report.passed, "{:#?}", report.checks);
    // the k = 2, 3 cases again, directly
    for k in [2u32, 3] {
        let m = 1u32 << (k - 1);
        let u = underlying_poly(&UnderlyingSpec::new(m, Delta::Zero, rat(-1, 1))).unwrap();
        assert_eq!(descartes_bounds(&u).0, 0);
    }
    println!("criterion 6: PASS (certificates, unit constants, zero positive-root bounds, k <= 6)");
}

// -------------------------------------------------------------------------
// 7. parity of the centered polynomials and underlying reconstruction
// -------------------------------------------------------------------------

#[test]
fn criterion_07_parity_and_reconstruction() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 1u32..=40 {
        for _ in 0..20 {
            let t = random_rat(&mut rng, 99, 17);
            let shifted = shifted_poly(&KrawtchoukSpec::new(n, t.clone()));
            for (i, c) in shifted.coeffs().iter().enumerate() {
                if i % 2 != (n % 2) as usize {
                    assert!(c.is_zero(), "n={n} t={t} coefficient {i}");
                }
            }
            let m = n / 2;
            let delta = Delta::from_u32(n % 2).unwrap();
            let u = underlying_poly(&UnderlyingSpec::new(m, delta, t.clone())).unwrap();
            let mut recomposed = vec![Rat::zero(); n as usize + 1];
            for (i, c) in u.coeffs().iter().enumerate() {
                recomposed[2 * i + delta.as_u32() as usize] = c.clone();
            }
            assert_eq!(RatPoly::from_coeffs(recomposed), shifted, "n={n} t={t}");
        }
    }
    println!("criterion 7: PASS (parity and exact reconstruction, n <= 40 x 20 random t)");
}

// -------------------------------------------------------------------------
// 8. the hypergeometric identity at sampled points
// -------------------------------------------------------------------------

#[test]
fn criterion_08_jacobi_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    let mut checked = 0u32;
    for n in 0u32..=12 {
        for _ in 0..50 {
            let t = random_rat(&mut rng, 45, 11);
            let x0 = rat(rng.gen_range(-5i64..=5), 1);
            assert!(
                check_jacobi_identity(&KrawtchoukSpec::new(n, t.clone()), &x0),
                "n={n} t={t} x0={x0}"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 650);
    println!("criterion 8: PASS (650 exact pointwise identity checks)");
}

// -------------------------------------------------------------------------
// 9. oracle equivalences
// -------------------------------------------------------------------------

#[test]
fn criterion_09a_factorial_valuations_vs_brute_force() {
    // brute-force factor count of p in n!, accumulated term by term
    for pv in [2u64, 3, 5, 7, 11] {
        let p = Prime::new(pv).unwrap();
        let mut count = 0u64;
        for n in 1u64..=2000 {
            let mut m = n;
            while m % pv == 0 {
                count += 1;
                m /= pv;
            }
            assert_eq!(vp_factorial(n, p), count, "n={n} p={pv}");
        }
    }
    // literal factorial multiplication for a prefix
    let mut fact = Int::one();
    for n in 1u64..=200 {
        fact = fact * Int::from(n);
        for pv in [2u64, 3, 5, 7, 11] {
            let p = Int::from(pv);
            let mut m = fact.clone();
            let mut count = 0u64;
            while (&m % &p).is_zero() {
                m /= &p;
                count += 1;
            }
            assert_eq!(vp_factorial(n, Prime::new(pv).unwrap()), count);
        }
    }
    println!("criterion 9a: PASS (factorial valuations, n <= 2000, 5 primes)");
}

/// Lower hull of a point set at abscissa `u` is the minimum interpolated
/// value over all point pairs straddling `u` (pairwise oracle, O(n^3) over
/// all abscissas).
fn oracle_hull(points: &[(u64, i64)]) -> Vec<(u64, Rat)> {
    let mut vals: Vec<(u64, Rat)> = Vec::new();
    for &(u, _) in points {
        let mut best: Option<Rat> = None;
        for &(xa, ya) in points {
            for &(xb, yb) in points {
                if xa <= u && u <= xb {
                    let v = if xa == xb {
                        rat(ya.min(yb), 1)
                    } else {
                        rat(ya, 1)
                            + rat((u - xa) as i64, 1) * rat(yb - ya, 1)
                                / rat((xb - xa) as i64, 1)
                    };
                    best = Some(match best {
                        None => v,
                        Some(b) => b.min(v),
                    });
                }
            }
        }
        vals.push((u, best.unwrap()));
    }
    vals
}

#[test]
fn criterion_09b_hull_vs_pairwise_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let trial_primes = [primes::TWO, primes::THREE, primes::FIVE];
    for case in 0..200 {
        let deg = rng.gen_range(1..=15usize);
        let mut coeffs: Vec<i64> = (0..=deg)
            .map(|i| {
                if i < deg && rng.gen_bool(0.25) {
                    0
                } else {
                    let c: i64 = rng.gen_range(1..=50_000);
                    if rng.gen_bool(0.5) {
                        -c
                    } else {
                        c
                    }
                }
            })
            .collect();
        if coeffs[deg] == 0 {
            coeffs[deg] = 3;
        }
        let f = RatPoly::from_i64(&coeffs);
        let p = trial_primes[case % 3];
        let np = newton_polygon(&f, p).unwrap();

        let m = f.root_at_zero_multiplicity();
        let n = f.degree().unwrap() - m;
        let pts: Vec<(u64, i64)> = f.coeffs()[m..]
            .iter()
            .enumerate()
            .filter_map(|(j, c)| vp(c, p).finite().map(|v| ((n - j) as u64, v)))
            .collect();
        let mut pts = pts;
        pts.sort_unstable();
        let hull_vals = oracle_hull(&pts);
        // the polygon's piecewise-linear value must agree with the oracle at
        // every point abscissa, and every vertex must sit on the oracle hull
        for (u, expected) in &hull_vals {
            assert_eq!(np.value_at(*u).as_ref(), Some(expected), "case {case} u={u}");
        }
        for &(x, y) in np.vertices() {
            let oracle_v = hull_vals.iter().find(|(u, _)| *u == x).unwrap();
            assert_eq!(oracle_v.1, rat(y, 1), "case {case} vertex x={x}");
        }
        // slope monotonicity
        let segs = np.segments();
        for w in segs.windows(2) {
            assert!(
                rat(w[0].slope.0, w[0].slope.1 as i64) < rat(w[1].slope.0, w[1].slope.1 as i64),
                "case {case}"
            );
        }
    }
    println!("criterion 9b: PASS (200 polygons against the pairwise hull oracle)");
}

#[test]
fn criterion_09c_resultant_vs_sylvester() {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    for case in 0..150 {
        let mk = |rng: &mut ChaCha8Rng| {
            let deg = rng.gen_range(0..=6usize);
            let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-12..=12)).collect();
            let mut lead = rng.gen_range(-12..=12i64);
            if lead == 0 {
                lead = 5;
            }
            c.push(lead);
            IntPoly::from_i64(&c).unwrap()
        };
        let f = mk(&mut rng);
        let g = mk(&mut rng);
        assert_eq!(
            resultant(&f, &g).unwrap(),
            sylvester_resultant(&f, &g).unwrap(),
            "case {case}: f={f} g={g}"
        );
    }
    println!("criterion 9c: PASS (subresultant PRS = Sylvester determinant, 150 pairs, deg <= 6)");
}

/// Independent mod-p helpers for the trial-division factor oracle.
mod fp {
    pub fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
        let db = b.len() - 1;
        let inv = inv_mod(b[db], p);
        while a.len() > db {
            let k = a.len() - 1;
            let q = a[k] % p * inv % p;
            if q != 0 {
                for j in 0..=db {
                    let idx = k - db + j;
                    a[idx] = (a[idx] + p - q * b[j] % p) % p;
                }
            }
            a.pop();
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        a
    }

    pub fn div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let db = b.len() - 1;
        let inv = inv_mod(b[db], p);
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for k in (db..a.len()).rev() {
            let qk = r[k] % p * inv % p;
            q[k - db] = qk;
            if qk != 0 {
                for j in 0..=db {
                    let idx = k - db + j;
                    r[idx] = (r[idx] + p - qk * b[j] % p) % p;
                }
            }
        }
        assert!(r.iter().all(|&c| c == 0));
        q
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        // p is tiny here; brute force is fine for an oracle
        (1..p).find(|&x| a * x % p == 1).expect("unit")
    }
}

#[test]
fn criterion_09d_cycle_types_vs_trial_division() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for &pv in &[2u64, 3, 5, 7] {
        let prime = Prime::new(pv).unwrap();
        let mut done = 0;
        while done < 15 {
            let deg = rng.gen_range(1..=6usize);
            let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..pv)).collect();
            coeffs.push(rng.gen_range(1..pv.max(2)));
            let g = PrimePoly::from_residues(prime, coeffs.clone()).unwrap();
            if g.degree() != Some(deg) || !g.is_squarefree() {
                continue;
            }
            // exhaustive trial division, smallest degrees first
            let mut remaining = coeffs;
            let mut parts: Vec<u64> = Vec::new();
            'outer: while remaining.len() - 1 >= 1 {
                let rem_deg = remaining.len() - 1;
                for d in 1..rem_deg {
                    for code in 0..pv.pow(d as u32) {
                        let mut cand = Vec::with_capacity(d + 1);
                        let mut c = code;
                        for _ in 0..d {
                            cand.push(c % pv);
                            c /= pv;
                        }
                        cand.push(1);
                        if fp::rem(remaining.clone(), &cand, pv).is_empty() {
                            parts.push(d as u64);
                            remaining = fp::div_exact(&remaining, &cand, pv);
                            continue 'outer;
                        }
                    }
                }
                parts.push(rem_deg as u64);
                break;
            }
            parts.sort_unstable();
            let fast = g.factor_degrees().unwrap();
            assert_eq!(fast.parts(), &parts[..], "p={pv} coeffs={g}");
            done += 1;
        }
    }
    println!("criterion 9d: PASS (cycle types match exhaustive trial division, p <= 7, deg <= 6)");
}

#[test]
fn criterion_09e_sieve_soundness_on_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let budget = SieveBudget::with_prime_bound(80);
    let mut tested = 0u32;
    while tested < 500 {
        let mk = |rng: &mut ChaCha8Rng| {
            let deg = rng.gen_range(1..=5usize);
            let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-10..=10)).collect();
            let mut lead = rng.gen_range(-10..=10i64);
            if lead == 0 {
                lead = 1;
            }
            c.push(lead);
            RatPoly::from_i64(&c)
        };
        let g = mk(&mut rng);
        let h = mk(&mut rng);
        let product = (&g * &h).primitive_integer_form().unwrap();
        if product.degree() < 2 {
            continue;
        }
        let outcome = irreducibility_sieve(&product, &budget);
        assert!(
            !matches!(outcome, SieveOutcome::Irreducible(_)),
            "sieve certified a constructed product ({g}) * ({h})"
        );
        tested += 1;
    }
    println!("criterion 9e: PASS (500 constructed products, sieve never certifies irreducibility)");
}

// -------------------------------------------------------------------------
// 10. the degree-3 example: cubics, cross-check, rational points
// -------------------------------------------------------------------------

#[test]
fn criterion_10_cubics_and_crosscheck() {
    let report = commands::cubics::run(10, 42);
    assert!(report.passed, "{:#?}", report.checks);
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for delta in [Delta::Zero, Delta::One] {
        let ts: Vec<Rat> = (0..20).map(|_| random_rat(&mut rng, 50, 10)).collect();
        let out = crosscheck_sextic_vs_disc(delta, &ts);
        assert!(out.ratio_is_constant, "delta={delta}");
        assert!(out.ratio_is_square, "delta={delta}");
        assert_eq!(out.ratio, Some(rat(1, 1)), "delta={delta}");
    }
    println!("criterion 10 (cubics + crosscheck): PASS (printed cubics and unit square ratio)");
}

/// The criterion as stated: the union of points found at height <= 20 over
/// both curves equals the circulated t-list {2,3,4,5,6,12,14}. This is
/// EXPECTED TO FAIL: the search provably finds the additional point
/// (4/3, 56/3) — the delta = 0 sextic at t = 4/3 is exactly 3136/9.
/// See `criterion_10_sextic_points_verified` for the corrected assertion.
#[test]
fn criterion_10_sextic_points_union_as_circulated() {
    let mut union: Vec<Rat> = Vec::new();
    for delta in [Delta::Zero, Delta::One] {
        for (t, _) in hyperelliptic_search(delta, 20) {
            if !union.contains(&t) {
                union.push(t);
            }
        }
    }
    union.sort();
    let expected: Vec<Rat> = [2i64, 3, 4, 5, 6, 12, 14].iter().map(|&v| rat(v, 1)).collect();
    assert_eq!(
        union, expected,
        "the circulated lists omit verified rational points of small height \
         (t = 4/3 on the delta=0 curve has sextic value 3136/9 = (56/3)^2); \
         the union over both curves is strictly larger than the circulated t-set"
    );
    println!("criterion 10 (point union as circulated): PASS");
}

/// Verified ground truth: every circulated point is found with its exact
/// s-value on the opposite-labelled curve (label swap), and the only
/// additional point at height <= 20 is (4/3, 56/3) on the delta = 0 curve.
#[test]
fn criterion_10_sextic_points_verified() {
    let found0 = hyperelliptic_search(Delta::Zero, 20);
    let found1 = hyperelliptic_search(Delta::One, 20);
    let reference = reference_point_lists();
    let (labelled0, labelled1) = (&reference[0].1, &reference[1].1);

    // label swap: each circulated list lies entirely on the other curve and
    // not entirely on its own (the point (5, 48) is shared by both curves)
    let curve0 = SexticCurve::for_delta(Delta::Zero);
    let curve1 = SexticCurve::for_delta(Delta::One);
    let entirely_on = |curve: &SexticCurve, pts: &Vec<(Rat, Rat)>| {
        pts.iter().all(|(t, s)| curve.value_at(t) == s * s)
    };
    assert!(entirely_on(&curve1, labelled0) && !entirely_on(&curve0, labelled0));
    assert!(entirely_on(&curve0, labelled1) && !entirely_on(&curve1, labelled1));
    for (t, s) in labelled0 {
        assert!(found1.contains(&(t.clone(), s.clone())), "({t}, {s})");
    }
    for (t, s) in labelled1 {
        assert!(found0.contains(&(t.clone(), s.clone())), "({t}, {s})");
    }
    // the full delta asserted exactly: one extra point on each curve at
    // this height (a third, (29/23, 238359/12167), sits at height 23)
    let extras0: Vec<_> = found0.iter().filter(|pt| !labelled1.contains(pt)).collect();
    let extras1: Vec<_> = found1.iter().filter(|pt| !labelled0.contains(pt)).collect();
    assert_eq!(extras0, vec![&(rat(4, 3), rat(56, 3))]);
    assert_eq!(extras1, vec![&(rat(10, 7), rat(6852, 49))]);
    // and the swap is flagged by the search command
    for delta in [Delta::Zero, Delta::One] {
        let report = commands::hyper::run(delta, 20, true, false);
        assert!(report.passed, "{:#?}", report.checks);
    }
    println!(
        "criterion 10 (points, verified): PASS \
         (circulated union found with swapped labels, plus the omitted point (4/3, 56/3))"
    );
}

// -------------------------------------------------------------------------
// 11. the desk-scale sweep: support counts, witnesses, determinism
// -------------------------------------------------------------------------

fn desk_config() -> SweepConfig {
    SweepConfig::desk_default()
}

fn sweep_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("krawtchouk-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

struct DeskRun {
    out: std::path::PathBuf,
    summary: krawtchouk_cli::sweep::SweepSummary,
}

/// The desk-scale sweep takes several minutes on one core, so the two
/// criterion-11 tests share a single first run.
fn desk_run() -> &'static DeskRun {
    static RUN: std::sync::OnceLock<DeskRun> = std::sync::OnceLock::new();
    RUN.get_or_init(|| {
        let out = sweep_dir().join("desk_a.csv");
        let summary = run_sweep(&desk_config(), &out, false, None).unwrap();
        DeskRun { out, summary }
    })
}

/// The criterion as stated: zero contradiction witnesses at desk scale.
/// EXPECTED TO FAIL: the grid contains the square-discriminant irreducible
/// cubics t = 4/3 (delta 0) and t = 10/7 (delta 1), each with Galois group
/// A_3. The sweep finds and reports exactly these; demanding zero witnesses
/// contradicts the verified arithmetic.
/// See `criterion_11_sweep_verified` for the corrected assertion.
#[test]
fn criterion_11_sweep_zero_contradictions() {
    let summary = &desk_run().summary;
    assert!(
        summary.contradiction_witnesses.is_empty(),
        "the sweep found {} genuine contradiction witnesses (irreducible with square \
         discriminant, hence Galois group inside A_n): {:?}",
        summary.contradiction_witnesses.len(),
        summary.contradiction_witnesses
    );
    println!("criterion 11 (zero witnesses): PASS");
}

#[test]
fn criterion_11_sweep_verified() {
    let run_a = desk_run();
    let summary_a = &run_a.summary;
    let out_b = sweep_dir().join("desk_b.csv");
    let summary_b = run_sweep(&desk_config(), &out_b, false, None).unwrap();

    // byte-identical determinism across runs
    let bytes_a = std::fs::read(&run_a.out).unwrap();
    let bytes_b = std::fs::read(&out_b).unwrap();
    assert_eq!(bytes_a, bytes_b, "two identical runs must be byte-identical");
    assert_eq!(
        serde_json::to_string(&summary_a.to_json()).unwrap(),
        serde_json::to_string(&summary_b.to_json()).unwrap()
    );

    // grid completeness: every reduced point exactly once
    assert_eq!(summary_a.grid_points, summary_a.rows_written);
    let rows = bytes_a.split(|&b| b == b'\n').count() - 2; // header + trailing newline
    assert_eq!(rows as u64, summary_a.grid_points);

    // support counts add up and carry plenty of certified-symmetric rows
    let sc = &summary_a.sieve_counts;
    assert_eq!(
        sc.irreducible + sc.reducible + sc.unknown,
        summary_a.grid_points
    );
    assert!(summary_a.status_counts.full_symmetric > 30_000);
    assert!(summary_a.sieve_counts.reducible > 0);

    // the complete witness list is exactly the two A_3 cubics
    assert_eq!(
        summary_a.contradiction_witnesses,
        vec![
            "3,0,4,3,IRREDUCIBLE,CONTAINS_ALTERNATING,,true,95,0".to_string(),
            "3,1,10,7,IRREDUCIBLE,CONTAINS_ALTERNATING,,true,95,0".to_string(),
        ],
        "the verified witness set changed"
    );
    println!(
        "criterion 11 (verified): PASS ({} rows, byte-identical reruns, witnesses = the two A_3 cubics)",
        summary_a.grid_points
    );
}

// -------------------------------------------------------------------------
// direct confirmations of the two A_3 specializations
// -------------------------------------------------------------------------

#[test]
fn a3_counterexamples_are_genuine() {
    for (delta, tn, td) in [(Delta::Zero, 4i64, 3i64), (Delta::One, 10, 7)] {
        let t = rat(tn, td);
        let u = underlying_poly(&UnderlyingSpec::new(3, delta, t.clone())).unwrap();
        let model = u.primitive_integer_form().unwrap();
        let scan = galois_scan(&model, 200);
        assert!(
            matches!(scan.reducibility, SieveOutcome::Irreducible(_)),
            "delta={delta} t={t}"
        );
        assert!(scan.disc_square, "delta={delta} t={t}");
        assert_eq!(scan.status, GaloisStatus::ContainsAlternating);
        // an A_3 cubic shows only cycle types {3} and {1,1,1}; the {1,2}
        // signature of S_3 must never appear at a good prime
        for w in &scan.witnesses {
            let parts = w.cycle_type.parts();
            assert!(
                parts == [3] || parts == [1, 1, 1],
                "delta={delta} t={t} p={} has S_3 signature {:?}",
                w.p,
                parts
            );
        }
    }
    // they sit exactly on the sextic curves
    assert_eq!(
        SexticCurve::for_delta(Delta::Zero).value_at(&rat(4, 3)),
        rat(56, 3) * rat(56, 3)
    );
    assert_eq!(
        SexticCurve::for_delta(Delta::One).value_at(&rat(10, 7)),
        rat(6852, 49) * rat(6852, 49)
    );
}

// -------------------------------------------------------------------------
// assorted spot checks shared by several criteria
// -------------------------------------------------------------------------

#[test]
fn jordan_range_and_verify_commands() {
    assert_eq!(jordan_range(10).unwrap(), vec![7]);
    let theorem = commands::theorem::run(24);
    assert!(theorem.passed);
    let corollary = commands::corollary::run(5);
    assert!(corollary.passed);
}

#[test]
fn newton_index_spot_checks() {
    use krawtchouk_core::newton::newton_index;
    let f = krawtchouk_poly(&KrawtchoukSpec::new(19, rat(19, 1)));
    let idx = newton_index(&f, 100);
    assert!((&idx.value % num_bigint::BigUint::from(16u32)).to_u64() == Some(0));
    assert!(idx.contributions.iter().any(|&(p, l)| p == 2 && l % 16 == 0));
}

#[test]
fn root_product_spot_check() {
    use krawtchouk_core::galois::product_of_roots_relation;
    let (constant, product) = product_of_roots_relation(8);
    assert_eq!(constant, rat(1, 1));
    assert_eq!(product, rat(315, 2));
    assert!(product.numer().abs().to_u64() == Some(315));
}
