//! p-adic Newton polygons, degree-based shape tests, Eisenstein and
//! polygon-block irreducibility certificates, and Newton indices.
//!
//! Orientation: for `f = sum_j a_j x^j` of degree `n`, the polygon is the
//! lower convex hull of the points `(n - j, v_p(a_j))` — the *leading*
//! coefficient sits at abscissa 0 and the constant coefficient at abscissa
//! `n`. Most references use the reverse; everything in this crate, including
//! the JSON output, uses this orientation consistently.

use crate::krawtchouk::{krawtchouk_poly, KrawtchoukSpec};
use crate::poly::RatPoly;
use crate::primes::{self, Prime};
use crate::rational::{vp, Rat, Valuation};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NewtonError {
    #[error("Newton polygon of the zero polynomial is undefined")]
    ZeroPolynomial,
}

/// One segment of a polygon: exact slope and horizontal run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    /// Exact slope as a reduced fraction (numerator, positive denominator).
    pub slope: (i64, u64),
    pub length: u64,
}

impl Segment {
    pub fn slope_string(&self) -> String {
        if self.slope.1 == 1 {
            format!("{}", self.slope.0)
        } else {
            format!("{}/{}", self.slope.0, self.slope.1)
        }
    }
}

/// Lower convex hull of the coefficient valuations of a polynomial, in the
/// leading-coefficient-at-zero orientation.
///
/// Zero coefficients (valuation infinity) never become hull points. A
/// polynomial divisible by `x` has its polygon taken on `f / x^m`; the
/// multiplicity `m` is reported separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    prime: Prime,
    /// Break points only (strictly increasing slopes), x strictly increasing.
    vertices: Vec<(u64, i64)>,
    root_at_zero_multiplicity: u64,
}

impl NewtonPolygon {
    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn vertices(&self) -> &[(u64, i64)] {
        &self.vertices
    }

    pub fn root_at_zero_multiplicity(&self) -> u64 {
        self.root_at_zero_multiplicity
    }

    /// Total horizontal length (degree minus the multiplicity of the root
    /// at zero).
    pub fn width(&self) -> u64 {
        self.vertices.last().unwrap().0 - self.vertices[0].0
    }

    /// Segments between consecutive breaks, left to right. Slopes are
    /// strictly increasing.
    pub fn segments(&self) -> Vec<Segment> {
        self.vertices
            .windows(2)
            .map(|w| {
                let (x0, y0) = w[0];
                let (x1, y1) = w[1];
                let run = (x1 - x0) as i64;
                let rise = y1 - y0;
                let g = rise.unsigned_abs().gcd(&(run as u64)).max(1);
                Segment {
                    slope: (rise / g as i64, run as u64 / g),
                    length: x1 - x0,
                }
            })
            .collect()
    }

    /// True iff the segment list matches the degree-based shape of the
    /// polygon's total width read as a binary expansion.
    pub fn matches_degree_based_shape(&self) -> bool {
        let n = self.width();
        if n == 0 || self.root_at_zero_multiplicity != 0 {
            return false;
        }
        let shape = degree_based_shape(n);
        self.segments() == shape.expected_segments()
    }

    /// Piecewise-linear hull value at integer abscissa `x`, as an exact
    /// rational (interpolated values between lattice vertices may be
    /// non-integral).
    pub fn value_at(&self, x: u64) -> Option<Rat> {
        use crate::rational::rat;
        for w in self.vertices.windows(2) {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            if x0 <= x && x <= x1 {
                let tnum = rat((x - x0) as i64, 1);
                let run = rat((x1 - x0) as i64, 1);
                return Some(rat(y0, 1) + tnum * rat(y1 - y0, 1) / run);
            }
        }
        if self.vertices.len() == 1 && self.vertices[0].0 == x {
            return Some(rat(self.vertices[0].1, 1));
        }
        None
    }
}

/// Newton polygon of a nonzero rational polynomial at `p`.
pub fn newton_polygon(f: &RatPoly, p: Prime) -> Result<NewtonPolygon, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    let m = f.root_at_zero_multiplicity();
    let g = f.shift_down(m);
    let n = g.degree().unwrap();
    // paper orientation: coefficient a_j at abscissa n - j
    let mut points: Vec<(u64, i64)> = Vec::new();
    for (j, c) in g.coeffs().iter().enumerate() {
        if let Valuation::Finite(v) = vp(c, p) {
            points.push(((n - j) as u64, v));
        }
    }
    points.sort_unstable();
    // monotone-chain lower hull; collinear interior points are not breaks
    let mut hull: Vec<(u64, i64)> = Vec::new();
    for &(x, y) in &points {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // keep only strict left turns (strictly increasing slopes)
            let cross = (x2 - x1) as i128 * (y - y1) as i128
                - (y2 - y1) as i128 * (x - x1) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    Ok(NewtonPolygon {
        prime: p,
        vertices: hull,
        root_at_zero_multiplicity: m as u64,
    })
}

/// The full table `(j, v_p(a_(n-j)))` for `j = 0..n`, infinities included.
pub fn coefficient_valuations(f: &RatPoly, p: Prime) -> Vec<(u64, Valuation)> {
    let n = f.degree().expect("nonzero polynomial");
    (0..=n)
        .map(|j| (j as u64, vp(&f.coeff(n - j), p)))
        .collect()
}

/// Expected polygon shape read off the binary expansion
/// `n = 2^(j_1) + ... + 2^(j_k)`: segments of length `2^(j_l)` with slopes
/// `-2^(-j_l)`, in increasing order of `j_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBasedShape {
    /// Strictly increasing exponents of the binary expansion.
    pub exponents: Vec<u32>,
}

impl DegreeBasedShape {
    pub fn expected_segments(&self) -> Vec<Segment> {
        self.exponents
            .iter()
            .map(|&j| Segment {
                slope: (-1, 1u64 << j),
                length: 1u64 << j,
            })
            .collect()
    }

    /// Number of binary digits `k`.
    pub fn digit_count(&self) -> usize {
        self.exponents.len()
    }

    /// Partial sums `sum_(l <= r) 2^(j_l)` for `r = 0..k` — the abscissas of
    /// the distinguished points.
    pub fn partial_sums(&self) -> Vec<u64> {
        let mut out = vec![0u64];
        let mut acc = 0u64;
        for &j in &self.exponents {
            acc += 1u64 << j;
            out.push(acc);
        }
        out
    }
}

pub fn degree_based_shape(n: u64) -> DegreeBasedShape {
    assert!(n >= 1, "degree-based shape needs n >= 1");
    let exponents = (0..64).filter(|&j| n & (1u64 << j) != 0).collect();
    DegreeBasedShape { exponents }
}

/// True iff the 2-adic polygon of `f` has exactly the degree-based segments
/// of `deg f`. The degree-based notion is specific to `p = 2`.
pub fn is_degree_based(f: &RatPoly) -> bool {
    match newton_polygon(f, primes::TWO) {
        Ok(np) => {
            np.root_at_zero_multiplicity() == 0
                && np.width() == f.degree().unwrap() as u64
                && np.matches_degree_based_shape()
        }
        Err(_) => false,
    }
}

/// The `k + 1` distinguished coefficient valuations of `K_n^(t)`: for
/// `r = 0..k` the pair `(sum_(l<=r) 2^(j_l), v_2 of the coefficient at that
/// abscissa)`. At `t = n` the valuation equals `k - r`.
pub fn distinguished_valuations(n: u32, t: &Rat) -> Vec<(u64, Valuation)> {
    assert!(n >= 1);
    let f = krawtchouk_poly(&KrawtchoukSpec::new(n, t.clone()));
    let shape = degree_based_shape(n as u64);
    shape
        .partial_sums()
        .into_iter()
        .map(|pos| {
            let coeff_index = n as u64 - pos;
            (pos, vp(&f.coeff(coeff_index as usize), primes::TWO))
        })
        .collect()
}

/// A classical Eisenstein certificate at `p`, on the primitive integral
/// model or on its coefficient reversal. Either form certifies
/// irreducibility over `Q` (the reversal is only attempted when the constant
/// coefficient is nonzero, so reversal preserves irreducibility).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EisensteinCertificate {
    Direct,
    Reversed,
}

pub fn eisenstein_certificate(f: &RatPoly, p: Prime) -> Option<EisensteinCertificate> {
    let n = f.degree()?;
    if n < 1 {
        return None;
    }
    let model = f.primitive_integer_form().ok()?;
    eisenstein_certificate_model(&model, p)
}

/// As [`eisenstein_certificate`], on an already-built primitive model.
pub fn eisenstein_certificate_model(
    model: &crate::poly::IntPoly,
    p: Prime,
) -> Option<EisensteinCertificate> {
    if model.degree() < 1 {
        return None;
    }
    let coeffs = model.coeffs();
    let test = |cs: &[crate::rational::Int]| -> bool {
        let p_int = crate::rational::Int::from(p.get());
        let p2 = &p_int * &p_int;
        if (cs.last().unwrap() % &p_int).is_zero() {
            return false;
        }
        if !cs[..cs.len() - 1].iter().all(|c| (c % &p_int).is_zero()) {
            return false;
        }
        !(&cs[0] % p2).is_zero()
    };
    use num_traits::Zero;
    if test(coeffs) {
        return Some(EisensteinCertificate::Direct);
    }
    if !coeffs[0].is_zero() {
        let reversed: Vec<_> = coeffs.iter().rev().cloned().collect();
        if test(&reversed) {
            return Some(EisensteinCertificate::Reversed);
        }
    }
    None
}

/// Indivisible slope blocks of a polygon: a segment of reduced slope `a/b`
/// and horizontal length `b*m` splits among factors only in multiples of
/// `b`, so it contributes `m` blocks of size `b`. A root at zero contributes
/// unit blocks.
fn chunk_multiset(np: &NewtonPolygon) -> BTreeMap<u64, u64> {
    let mut chunks: BTreeMap<u64, u64> = BTreeMap::new();
    if np.root_at_zero_multiplicity() > 0 {
        chunks.insert(1, np.root_at_zero_multiplicity());
    }
    for seg in np.segments() {
        let b = seg.slope.1;
        *chunks.entry(b).or_insert(0) += seg.length / b;
    }
    chunks
}

/// Every multiset of factor degrees achievable by a factorization of `f`
/// over `Q`, as constrained by the polygon: each degree is a sum of slope
/// blocks and every block is used exactly once. The singleton `{n}` being
/// the only member certifies irreducibility.
pub fn np_factor_constraints(np: &NewtonPolygon) -> BTreeSet<Vec<u64>> {
    type Key = Vec<(u64, u64)>;
    fn partitions(
        remaining: &Key,
        memo: &mut BTreeMap<Key, BTreeSet<Vec<u64>>>,
    ) -> BTreeSet<Vec<u64>> {
        if remaining.iter().all(|&(_, c)| c == 0) {
            let mut set = BTreeSet::new();
            set.insert(Vec::new());
            return set;
        }
        if let Some(hit) = memo.get(remaining) {
            return hit.clone();
        }
        // anchor: one copy of the largest remaining block size
        let anchor_idx = remaining.iter().rposition(|&(_, c)| c > 0).unwrap();
        let mut rest = remaining.clone();
        rest[anchor_idx].1 -= 1;
        let anchor_size = rest[anchor_idx].0;
        // enumerate every sub-multiset of `rest` to join the anchor's group
        let mut out = BTreeSet::new();
        let counts: Vec<u64> = rest.iter().map(|&(_, c)| c).collect();
        let mut pick = vec![0u64; counts.len()];
        loop {
            let group_sum: u64 = anchor_size
                + pick
                    .iter()
                    .zip(rest.iter())
                    .map(|(&k, &(sz, _))| k * sz)
                    .sum::<u64>();
            let mut leftover = rest.clone();
            for (i, &k) in pick.iter().enumerate() {
                leftover[i].1 -= k;
            }
            for partition in partitions(&leftover, memo) {
                let mut multiset = partition;
                multiset.push(group_sum);
                multiset.sort_unstable();
                out.insert(multiset);
            }
            // odometer over 0..=count per block size
            let mut i = 0;
            loop {
                if i == pick.len() {
                    memo.insert(remaining.clone(), out.clone());
                    return out;
                }
                pick[i] += 1;
                if pick[i] <= counts[i] {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
        }
    }
    let chunks: Key = chunk_multiset(np).into_iter().collect();
    let mut memo = BTreeMap::new();
    partitions(&chunks, &mut memo)
}

/// Degrees `d` with `0 < d < n` that a proper factor of `f` could have
/// according to this polygon (subset sums of the slope blocks).
pub fn proper_factor_degrees(np: &NewtonPolygon) -> BTreeSet<u64> {
    let n = np.width() + np.root_at_zero_multiplicity();
    let mut reachable = vec![false; n as usize + 1];
    reachable[0] = true;
    for (size, count) in chunk_multiset(np) {
        for _ in 0..count {
            for d in (0..=(n - size) as usize).rev() {
                if reachable[d] {
                    reachable[d + size as usize] = true;
                }
            }
        }
    }
    (1..n)
        .filter(|&d| reachable[d as usize])
        .collect()
}

/// Truncated Newton index: the lcm of the slope denominators of `NP_p(f)`
/// over all primes `p <= prime_bound`, with the contributing primes.
///
/// This is a divisor of (and lower-bound approximation to) the full Newton
/// index, which ranges over all primes; the bound is always explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonIndex {
    pub value: BigUint,
    /// `(p, lcm of slope denominators at p)` for primes that contributed
    /// a non-unit denominator.
    pub contributions: Vec<(u64, u64)>,
}

pub fn newton_index(f: &RatPoly, prime_bound: u64) -> NewtonIndex {
    assert!(prime_bound >= 2, "prime bound must be at least 2");
    assert!(
        f.degree().map_or(false, |d| d >= 1),
        "newton index needs degree >= 1"
    );
    let mut value = BigUint::one();
    let mut contributions = Vec::new();
    for p in primes::primes_up_to(prime_bound) {
        let np = newton_polygon(f, p).expect("nonzero polynomial");
        let mut local = 1u64;
        for seg in np.segments() {
            local = local.lcm(&seg.slope.1);
        }
        if local > 1 {
            contributions.push((p.get(), local));
            value = value.lcm(&BigUint::from(local));
        }
    }
    NewtonIndex {
        value,
        contributions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::krawtchouk::KrawtchoukSpec;
    use crate::rational::rat;
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k_poly(n: u32, t: i64) -> RatPoly {
        krawtchouk_poly(&KrawtchoukSpec::new(n, rat(t, 1)))
    }

    #[test]
    fn k19_breaks() {
        let np = newton_polygon(&k_poly(19, 19), primes::TWO).unwrap();
        assert_eq!(np.vertices(), &[(0, 3), (1, 2), (3, 1), (19, 0)]);
        let segs = np.segments();
        assert_eq!(segs.len(), 3);
        assert_eq!(segs[0], Segment { slope: (-1, 1), length: 1 });
        assert_eq!(segs[1], Segment { slope: (-1, 2), length: 2 });
        assert_eq!(segs[2], Segment { slope: (-1, 16), length: 16 });
    }

    #[test]
    fn constant_polygon_is_a_point() {
        let np = newton_polygon(&RatPoly::from_i64(&[12]), primes::TWO).unwrap();
        assert_eq!(np.vertices(), &[(0, 2)]);
        assert!(np.segments().is_empty());
    }

    #[test]
    fn two_point_hull() {
        let np = newton_polygon(&RatPoly::from_i64(&[4, 0, 1]), primes::TWO).unwrap();
        assert_eq!(np.vertices(), &[(0, 0), (2, 2)]);
        assert_eq!(np.segments(), vec![Segment { slope: (1, 1), length: 2 }]);
    }

    #[test]
    fn valuation_table_small() {
        let table = coefficient_valuations(&RatPoly::from_i64(&[0, 1]), primes::TWO);
        assert_eq!(
            table,
            vec![(0, Valuation::Finite(0)), (1, Valuation::Infinity)]
        );
        let table = coefficient_valuations(&RatPoly::from_i64(&[4, 2]), primes::TWO);
        assert_eq!(
            table,
            vec![(0, Valuation::Finite(1)), (1, Valuation::Finite(2))]
        );
    }

    #[test]
    fn shape_from_binary_expansion() {
        let s = degree_based_shape(19);
        assert_eq!(s.exponents, vec![0, 1, 4]);
        assert_eq!(
            s.expected_segments(),
            vec![
                Segment { slope: (-1, 1), length: 1 },
                Segment { slope: (-1, 2), length: 2 },
                Segment { slope: (-1, 16), length: 16 },
            ]
        );
        assert_eq!(s.partial_sums(), vec![0, 1, 3, 19]);

        let s = degree_based_shape(32);
        assert_eq!(s.expected_segments().len(), 1);

        let s = degree_based_shape(20);
        assert_eq!(
            s.expected_segments(),
            vec![
                Segment { slope: (-1, 4), length: 4 },
                Segment { slope: (-1, 16), length: 16 },
            ]
        );
    }

    #[test]
    fn degree_based_predicate() {
        assert!(is_degree_based(&k_poly(19, 19)));
        assert!(!is_degree_based(&RatPoly::from_i64(&[-1, 0, 1])));
        // small window sweep
        for n in 1u32..=16 {
            let j1 = (n as u64).trailing_zeros();
            for t in n as i64..(n as i64 + (1i64 << j1)) {
                assert!(is_degree_based(&k_poly(n, t)), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn distinguished_points() {
        assert_eq!(
            distinguished_valuations(19, &rat(19, 1)),
            vec![
                (0, Valuation::Finite(3)),
                (1, Valuation::Finite(2)),
                (3, Valuation::Finite(1)),
                (19, Valuation::Finite(0)),
            ]
        );
        for k in 1u32..=5 {
            let n = 1u32 << k;
            assert_eq!(
                distinguished_valuations(n, &rat(n as i64, 1)),
                vec![(0, Valuation::Finite(1)), (n as u64, Valuation::Finite(0))]
            );
        }
        assert_eq!(
            distinguished_valuations(6, &rat(6, 1)),
            vec![
                (0, Valuation::Finite(2)),
                (2, Valuation::Finite(1)),
                (6, Valuation::Finite(0)),
            ]
        );
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(
            eisenstein_certificate(&RatPoly::from_i64(&[2, 2, 1]), primes::TWO),
            Some(EisensteinCertificate::Direct)
        );
        assert_eq!(
            eisenstein_certificate(&RatPoly::from_i64(&[1, 0, 1]), primes::TWO),
            None
        );
        // 1 - 2x is certified through its reversal x - 2
        assert_eq!(
            eisenstein_certificate(&RatPoly::from_i64(&[1, -2]), primes::TWO),
            Some(EisensteinCertificate::Reversed)
        );
    }

    #[test]
    fn factor_constraints() {
        // single lattice-point-free segment: only {n}
        let np = newton_polygon(&RatPoly::from_i64(&[2, 0, 1]), primes::TWO).unwrap();
        assert_eq!(np.vertices(), &[(0, 0), (2, 1)]);
        let set = np_factor_constraints(&np);
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![vec![2]]);

        // flat polygon: all partitions of n, no information
        let np = newton_polygon(&RatPoly::from_i64(&[-1, 0, 0, 1]), primes::TWO).unwrap();
        let set = np_factor_constraints(&np);
        let expected: BTreeSet<Vec<u64>> =
            [vec![3], vec![1, 2], vec![1, 1, 1]].into_iter().collect();
        assert_eq!(set, expected);

        // block sizes 1, 2, 16 combine segment-wise
        let np = newton_polygon(&k_poly(19, 19), primes::TWO).unwrap();
        let set = np_factor_constraints(&np);
        let expected: BTreeSet<Vec<u64>> = [
            vec![19],
            vec![3, 16],
            vec![2, 17],
            vec![1, 18],
            vec![1, 2, 16],
        ]
        .into_iter()
        .collect();
        assert_eq!(set, expected);

        let proper = proper_factor_degrees(&np);
        let expected: BTreeSet<u64> = [1, 2, 3, 16, 17, 18].into_iter().collect();
        assert_eq!(proper, expected);
    }

    #[test]
    fn newton_index_examples() {
        let idx = newton_index(&k_poly(19, 19), 100);
        assert!((&idx.value % BigUint::from(16u32)).to_u64() == Some(0));
        assert_eq!(
            newton_index(&RatPoly::from_i64(&[-2, 0, 1]), 10).value,
            BigUint::from(2u32)
        );
        assert_eq!(
            newton_index(&RatPoly::from_i64(&[-1, 1]), 10).value,
            BigUint::one()
        );
    }

    #[test]
    fn twist_stability_inside_the_window() {
        // Individual intermediate valuations CAN drop as t moves through
        // the window (K_2^(3) has v_2 = 1 at the middle coefficient where
        // K_2^(2) has 2), so coefficientwise monotonicity is not the right
        // statement. What holds, and what makes the polygons identical
        // across the window, is that the distinguished coefficients keep
        // their exact valuations k - r while every other coefficient stays
        // strictly above the degree-based hull.
        use crate::rational::rat;
        for n in 1u32..=40 {
            let shape = degree_based_shape(n as u64);
            let k = shape.digit_count();
            let distinguished = shape.partial_sums();
            let hull = newton_polygon(&k_poly(n, n as i64), primes::TWO).unwrap();
            let j1 = (n as u64).trailing_zeros();
            for t in n as i64..(n as i64 + (1i64 << j1)) {
                let f = k_poly(n, t);
                for (r, &pos) in distinguished.iter().enumerate() {
                    let v = vp(&f.coeff((n as u64 - pos) as usize), primes::TWO);
                    assert_eq!(v, Valuation::Finite((k - r) as i64), "n={n} t={t} r={r}");
                }
                for u in 0..=n as u64 {
                    if distinguished.contains(&u) {
                        continue;
                    }
                    let hull_value = hull.value_at(u).unwrap();
                    match vp(&f.coeff((n as u64 - u) as usize), primes::TWO) {
                        Valuation::Infinity => {}
                        Valuation::Finite(v) => {
                            assert!(
                                rat(v, 1) > hull_value,
                                "n={n} t={t} u={u}: {v} not above {hull_value}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn root_at_zero_is_stripped() {
        // x^2 * (x + 2): polygon taken on x + 2, multiplicity 2
        let np = newton_polygon(&RatPoly::from_i64(&[0, 0, 2, 1]), primes::TWO).unwrap();
        assert_eq!(np.root_at_zero_multiplicity(), 2);
        assert_eq!(np.vertices(), &[(0, 0), (1, 1)]);
        let proper = proper_factor_degrees(&np);
        let expected: BTreeSet<u64> = [1, 2].into_iter().collect();
        assert_eq!(proper, expected);
    }

    /// Lower hull of a point set at abscissa `u` equals the minimum over all
    /// point pairs whose x-interval contains `u` of the linear interpolation
    /// — an O(n^3) oracle over all abscissas.
    fn oracle_hull_vertices(points: &[(u64, i64)]) -> Vec<(u64, i64)> {
        let interp = |a: (u64, i64), b: (u64, i64), u: u64| -> Rat {
            if a.0 == b.0 {
                return rat(a.1.min(b.1), 1);
            }
            let (lo, hi) = if a.0 < b.0 { (a, b) } else { (b, a) };
            rat(lo.1, 1)
                + rat((u - lo.0) as i64, 1) * rat(hi.1 - lo.1, 1) / rat((hi.0 - lo.0) as i64, 1)
        };
        let xs: Vec<u64> = points.iter().map(|p| p.0).collect();
        let mut hull_vals: Vec<(u64, Rat)> = Vec::new();
        for &u in &xs {
            let mut best: Option<Rat> = None;
            for a in points {
                for b in points {
                    if a.0 <= u && u <= b.0 {
                        let v = interp(*a, *b, u);
                        best = Some(match best {
                            None => v,
                            Some(cur) => cur.min(v),
                        });
                    }
                }
            }
            hull_vals.push((u, best.unwrap()));
        }
        // walk left to right keeping slope-change points
        let mut verts: Vec<(u64, Rat)> = Vec::new();
        for (u, v) in hull_vals {
            while verts.len() >= 2 {
                let (x1, y1) = verts[verts.len() - 2].clone();
                let (x2, y2) = verts[verts.len() - 1].clone();
                let lhs = (&y2 - &y1) * rat((u - x1) as i64, 1);
                let rhs = (&v - &y1) * rat((x2 - x1) as i64, 1);
                if lhs >= rhs {
                    verts.pop();
                } else {
                    break;
                }
            }
            verts.push((u, v));
        }
        verts
            .into_iter()
            .filter_map(|(x, y)| {
                use num_traits::Signed;
                if y.denom().is_one() {
                    Some((x, if y.is_negative() {
                        -(y.numer().magnitude().to_u64().unwrap() as i64)
                    } else {
                        y.numer().magnitude().to_u64().unwrap() as i64
                    }))
                } else {
                    None
                }
            })
            .collect()
    }

    #[test]
    fn hull_matches_brute_force_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let primes_set = [primes::TWO, primes::THREE, primes::FIVE];
        for case in 0..80 {
            let deg = rng.gen_range(1..=15);
            let coeffs: Vec<i64> = (0..=deg)
                .map(|i| {
                    if i < deg && rng.gen_bool(0.2) {
                        0
                    } else {
                        let c: i64 = rng.gen_range(1..=6000);
                        if rng.gen_bool(0.5) {
                            -c
                        } else {
                            c
                        }
                    }
                })
                .collect();
            let mut coeffs = coeffs;
            if coeffs[deg] == 0 {
                coeffs[deg] = 1;
            }
            let f = RatPoly::from_i64(&coeffs);
            let p = primes_set[case % 3];
            let np = newton_polygon(&f, p).unwrap();
            // rebuild the raw finite points the same way the polygon does
            let m = f.root_at_zero_multiplicity();
            let g = f.shift_down(m);
            let n = g.degree().unwrap();
            let pts: Vec<(u64, i64)> = g
                .coeffs()
                .iter()
                .enumerate()
                .filter_map(|(j, c)| vp(c, p).finite().map(|v| ((n - j) as u64, v)))
                .collect();
            let mut pts = pts;
            pts.sort_unstable();
            assert_eq!(np.vertices(), oracle_hull_vertices(&pts), "case {case}");
            // slope monotonicity + width bookkeeping
            let segs = np.segments();
            for w in segs.windows(2) {
                let s0 = rat(w[0].slope.0, w[0].slope.1 as i64);
                let s1 = rat(w[1].slope.0, w[1].slope.1 as i64);
                assert!(s0 < s1);
            }
            assert_eq!(
                np.width() + np.root_at_zero_multiplicity(),
                f.degree().unwrap() as u64
            );
        }
    }
}
