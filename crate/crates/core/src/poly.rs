//! Dense univariate polynomials over the rationals, their primitive integral
//! models, and the fraction-free resultant/discriminant machinery.
//!
//! Coefficients are stored ascending: index `j` holds the coefficient of
//! `x^j`. The zero polynomial is an empty coefficient vector; every nonzero
//! polynomial keeps its highest-index coefficient nonzero.

use crate::rational::{neg_one_pow, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation rejects the zero polynomial")]
    ZeroPolynomial,
    #[error("operation needs degree >= {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
}

/// Dense polynomial over `Q`, ascending powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn constant_coeff(&self) -> Rat {
        self.coeff(0)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(Int::from(i as u64 + 1)))
                .collect(),
        )
    }

    /// `f(b*x + a)`, exactly. Degree is preserved whenever `b != 0`.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> RatPoly {
        // Horner in the argument: acc <- acc*(b x + a) + c_i.
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            let mut next = vec![Rat::zero(); acc.coeffs.len() + 1];
            for (i, ac) in acc.coeffs.iter().enumerate() {
                next[i + 1] += ac * b;
                next[i] += ac * a;
            }
            next[0] += c;
            acc = RatPoly::from_coeffs(next);
        }
        acc
    }

    /// Monic polynomial with zero subleading coefficient: divide by the
    /// leading coefficient, then substitute `x -> x - c_{n-1}/n`.
    pub fn depress(&self) -> Result<RatPoly, PolyError> {
        let n = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        if n < 2 {
            return Err(PolyError::DegreeTooSmall { min: 2, got: n });
        }
        let lc = self.leading().unwrap().clone();
        let monic = self.scale(&lc.recip());
        let shift = -monic.coeff(n - 1) / Rat::from_integer(Int::from(n as u64));
        let out = monic.compose_linear(&shift, &Rat::one());
        debug_assert!(out.coeff(n - 1).is_zero());
        Ok(out)
    }

    /// Primitive integral model: an integer polynomial with coefficient
    /// gcd 1, plus the positive rational `scale` with `scale * model = self`.
    pub fn primitive_integer_form(&self) -> Result<IntPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut den_lcm = Int::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * Rat::from_integer(den_lcm.clone());
                debug_assert!(scaled.denom().is_one());
                scaled.numer().clone()
            })
            .collect();
        let mut content = Int::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        let coeffs: Vec<Int> = ints.iter().map(|c| c / &content).collect();
        let scale = Rat::new(content, den_lcm);
        Ok(IntPoly { coeffs, scale })
    }

    /// Quotient by `x^k`; panics if any of the dropped coefficients is
    /// nonzero (callers strip exactly the root-at-zero multiplicity).
    pub(crate) fn shift_down(&self, k: usize) -> RatPoly {
        assert!(self.coeffs[..k].iter().all(|c| c.is_zero()));
        RatPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Multiplicity of the root at zero (0 for the zero polynomial).
    pub fn root_at_zero_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

impl fmt::Display for RatPoly {
    /// Canonical textual form: every coefficient printed ascending, exact
    /// fractions as `p/q`, e.g. `1 + -2*x + 3/4*x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RatPoly::from_coeffs(out)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

/// Primitive integer polynomial together with the positive rational scale
/// relating it to its rational source: `scale * self = source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Int>,
    scale: Rat,
}

impl IntPoly {
    /// Normalize arbitrary integer coefficients: extract the content into
    /// `scale`, keep the primitive part.
    pub fn from_int_coeffs(mut coeffs: Vec<Int>) -> Result<Self, PolyError> {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut content = Int::zero();
        for c in &coeffs {
            content = content.gcd(c);
        }
        let prim: Vec<Int> = coeffs.iter().map(|c| c / &content).collect();
        Ok(IntPoly {
            coeffs: prim,
            scale: Rat::from_integer(content),
        })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self, PolyError> {
        Self::from_int_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Int {
        self.coeffs.get(j).cloned().unwrap_or_else(Int::zero)
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().unwrap()
    }

    /// The rational polynomial this model came from (`scale` applied).
    pub fn to_rat_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()) * &self.scale)
                .collect(),
        )
    }

    /// The primitive part as a rational polynomial (`scale` ignored).
    pub fn primitive_rat_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Integer-polynomial internals: pseudo-division and the subresultant PRS.
// ---------------------------------------------------------------------------

fn ztrim(v: &mut Vec<Int>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn zdeg(v: &[Int]) -> Option<usize> {
    v.len().checked_sub(1)
}

fn zcontent(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

fn zscale_div(v: &[Int], d: &Int) -> Vec<Int> {
    v.iter()
        .map(|c| {
            let (q, r) = c.div_rem(d);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Pseudo-remainder: returns `rem` with `lc(b)^(da-db+1) * a = q*b + rem`.
fn zprem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let da = zdeg(a).unwrap();
    let db = zdeg(b).unwrap();
    debug_assert!(da >= db);
    let lc_b = b.last().unwrap().clone();
    let mut r: Vec<Int> = a.to_vec();
    // one multiplication by lc(b) per step, da-db+1 steps in total; the
    // degree may drop by more than one at a time, so position k can already
    // be gone
    for k in (db..=da).rev() {
        let top = r.get(k).cloned().unwrap_or_else(Int::zero);
        for c in r.iter_mut() {
            *c *= &lc_b;
        }
        if !top.is_zero() {
            for j in 0..db {
                r[k - db + j] -= &top * &b[j];
            }
            r[k] = Int::zero();
        }
        ztrim(&mut r);
    }
    r
}

fn zpow(base: &Int, exp: usize) -> Int {
    let mut acc = Int::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Resultant of two nonzero integer polynomials via the subresultant
/// polynomial remainder sequence (fraction-free; no rational arithmetic).
fn zresultant(a_in: &[Int], b_in: &[Int]) -> Int {
    let mut a: Vec<Int> = a_in.to_vec();
    let mut b: Vec<Int> = b_in.to_vec();
    ztrim(&mut a);
    ztrim(&mut b);
    let da = zdeg(&a).expect("nonzero");
    let db = zdeg(&b).expect("nonzero");
    let mut sign = Int::one();
    if da < db {
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    // contents factor out: res(c*A, B) = c^(deg B) * res(A, B)
    let ca = zcontent(&a);
    let cb = zcontent(&b);
    let mut a = zscale_div(&a, &ca);
    let mut b = zscale_div(&b, &cb);
    let mut acc = sign * zpow(&ca, zdeg(&b).unwrap()) * zpow(&cb, zdeg(&a).unwrap());

    if zdeg(&b).unwrap() == 0 {
        return acc * zpow(&b[0], zdeg(&a).unwrap());
    }

    let mut g = Int::one();
    let mut h = Int::one();
    loop {
        let da = zdeg(&a).unwrap();
        let db = zdeg(&b).unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            acc = -acc;
        }
        let r = zprem(&a, &b);
        a = b;
        let divisor = &g * zpow(&h, delta);
        if r.is_empty() {
            // a positive-degree common factor: the resultant vanishes
            return Int::zero();
        }
        b = zscale_div(&r, &divisor);
        g = a.last().unwrap().clone();
        // h <- g^delta / h^(delta-1), exact in Z
        h = if delta == 0 {
            h
        } else {
            let num = zpow(&g, delta);
            let den = zpow(&h, delta - 1);
            let (q, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            q
        };
        if zdeg(&b).unwrap() == 0 {
            let dda = zdeg(&a).unwrap();
            // final step: res = lc(b)^(deg a) / h^(deg a - 1)
            let num = zpow(&b[0], dda);
            let den = zpow(&h, dda - 1);
            let (q, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            return acc * q;
        }
    }
}

/// Resultant of two nonzero integer polynomials (scales ignored: this is the
/// resultant of the primitive parts). Equals the Sylvester determinant.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<Int, PolyError> {
    if f.coeffs.is_empty() || g.coeffs.is_empty() {
        return Err(PolyError::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Ok(zpow(&f.coeffs[0], g.degree()));
    }
    if g.degree() == 0 {
        return Ok(zpow(&g.coeffs[0], f.degree()));
    }
    Ok(zresultant(&f.coeffs, &g.coeffs))
}

/// Sylvester-determinant route (fraction-free Bareiss elimination).
///
/// Quadratic blowup; kept as the independent reference for the subresultant
/// path at small degree.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> Result<Int, PolyError> {
    if f.coeffs.is_empty() || g.coeffs.is_empty() {
        return Err(PolyError::ZeroPolynomial);
    }
    let m = f.degree();
    let n = g.degree();
    if m == 0 {
        return Ok(zpow(&f.coeffs[0], n));
    }
    if n == 0 {
        return Ok(zpow(&g.coeffs[0], m));
    }
    let size = m + n;
    let mut mat = vec![vec![Int::zero(); size]; size];
    // n rows of f's coefficients (descending), then m rows of g's
    for row in 0..n {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    // Bareiss fraction-free elimination with row pivoting
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            let swap = (k + 1..size).find(|&r| !mat[r][k].is_zero());
            match swap {
                Some(r) => {
                    mat.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                mat[i][j] = q;
            }
            mat[i][k] = Int::zero();
        }
        prev = mat[k][k].clone();
    }
    Ok(sign * mat[size - 1][size - 1].clone())
}

/// Discriminant of an integer polynomial:
/// `(-1)^(n(n-1)/2) * res(g, g') / lc(g)` — an integer.
pub fn int_discriminant(g: &IntPoly) -> Result<Int, PolyError> {
    let n = g.degree();
    if n < 1 {
        return Err(PolyError::DegreeTooSmall { min: 1, got: n });
    }
    if n == 1 {
        return Ok(Int::one());
    }
    let deriv: Vec<Int> = g.coeffs[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c * Int::from(i as u64 + 1))
        .collect();
    let res = zresultant(&g.coeffs, &deriv);
    let (q, r) = res.div_rem(g.leading());
    debug_assert!(r.is_zero());
    Ok(neg_one_pow((n * (n - 1) / 2) as u64) * q)
}

/// Discriminant of a rational polynomial. Vanishes iff `f` has a repeated
/// root.
pub fn discriminant(f: &RatPoly) -> Result<Rat, PolyError> {
    let n = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if n < 1 {
        return Err(PolyError::DegreeTooSmall { min: 1, got: n });
    }
    let model = f.primitive_integer_form()?;
    let disc_prim = int_discriminant(&model)?;
    // disc(c*g) = c^(2n-2) * disc(g)
    let mut scale_pow = Rat::one();
    for _ in 0..2 * n - 2 {
        scale_pow *= model.scale();
    }
    Ok(Rat::from_integer(disc_prim) * scale_pow)
}
