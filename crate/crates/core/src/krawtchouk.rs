//! Construction of the Krawtchouk polynomials `K_n^(t)(x)` and their
//! centered/underlying forms.
//!
//! The binary family is used throughout (`q = 2` in the two-parameter
//! definition): `K_n^(t)(x) = sum_{j=0}^n (-2)^j binom(t-j, n-j) binom(x, j)`.
//! The general-q form `sum_j (-q)^j (q-1)^(n-j) binom(t-j, n-j) binom(x, j)`
//! is never exposed; every result here is about `q = 2`.

use crate::poly::RatPoly;
use crate::rational::{rat_binomial, rat_pow, Int, Rat};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KrawtchoukError {
    #[error("parity violated at coefficient {index} of the centered polynomial (arithmetic bug)")]
    ParityViolation { index: usize },
}

/// Degree and parameter specialization for `K_n^(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukSpec {
    pub n: u32,
    pub t: Rat,
}

impl KrawtchoukSpec {
    pub fn new(n: u32, t: Rat) -> Self {
        KrawtchoukSpec { n, t }
    }
}

/// Parity split `n = 2m + delta` of a Krawtchouk degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Delta {
    Zero,
    One,
}

impl Delta {
    pub fn as_u32(self) -> u32 {
        match self {
            Delta::Zero => 0,
            Delta::One => 1,
        }
    }

    pub fn from_u32(v: u32) -> Option<Self> {
        match v {
            0 => Some(Delta::Zero),
            1 => Some(Delta::One),
            _ => None,
        }
    }
}

impl std::fmt::Display for Delta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_u32())
    }
}

/// Specification of the underlying degree-`m` polynomial extracted from
/// `K_(2m+delta)^(t)(x + t/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderlyingSpec {
    pub m: u32,
    pub delta: Delta,
    pub t: Rat,
}

impl UnderlyingSpec {
    pub fn new(m: u32, delta: Delta, t: Rat) -> Self {
        UnderlyingSpec { m, delta, t }
    }

    /// The Krawtchouk degree `2m + delta` this underlying polynomial
    /// comes from.
    pub fn krawtchouk_degree(&self) -> u32 {
        2 * self.m + self.delta.as_u32()
    }
}

/// `K_n^(t)(x)`: degree exactly `n`, leading coefficient `(-2)^n / n!`,
/// constant coefficient `binom(t, n)`.
pub fn krawtchouk_poly(spec: &KrawtchoukSpec) -> RatPoly {
    let n = spec.n as usize;
    let mut acc = vec![Rat::zero(); n + 1];
    // binom(x, j) built incrementally: binom(x, j+1) = binom(x, j)*(x-j)/(j+1)
    let mut binom_x = RatPoly::one();
    let minus_two = Rat::from_integer(Int::from(-2));
    let mut pow_minus_two = Rat::one();
    for j in 0..=n {
        if j > 0 {
            let step = RatPoly::from_coeffs(vec![
                Rat::new(Int::from(-((j as i64) - 1)), Int::from(j as i64)),
                Rat::new(Int::one(), Int::from(j as i64)),
            ]);
            binom_x = &binom_x * &step;
            pow_minus_two *= &minus_two;
        }
        let tj = &spec.t - Rat::from_integer(Int::from(j as u64));
        let scalar = &pow_minus_two * rat_binomial(&tj, (n - j) as u32);
        if scalar.is_zero() {
            continue;
        }
        for (i, c) in binom_x.coeffs().iter().enumerate() {
            acc[i] += c * &scalar;
        }
    }
    RatPoly::from_coeffs(acc)
}

/// `P_n^(alpha,beta)(0)` evaluated from the hypergeometric sum:
/// `sum_j binom(n+alpha, n-j) binom(n+beta, j) (-1/2)^j (1/2)^(n-j)`.
pub fn jacobi_at_zero(n: u32, alpha: &Rat, beta: &Rat) -> Rat {
    let half = Rat::new(Int::one(), Int::from(2));
    let neg_half = -half.clone();
    let na = alpha + Rat::from_integer(Int::from(n));
    let nb = beta + Rat::from_integer(Int::from(n));
    let mut total = Rat::zero();
    for j in 0..=n {
        let term = rat_binomial(&na, n - j)
            * rat_binomial(&nb, j)
            * rat_pow(&neg_half, j)
            * rat_pow(&half, n - j);
        total += term;
    }
    total
}

/// Pointwise check of `K_n^(t)(x0) = 2^n P_n^(t-x0-n, x0-n)(0)`.
///
/// Exact rational evaluation at more than `n + 1` points of two degree-`n`
/// polynomials proves the identity, so sampling is as strong as a symbolic
/// check here.
pub fn check_jacobi_identity(spec: &KrawtchoukSpec, x0: &Rat) -> bool {
    let lhs = krawtchouk_poly(spec).eval(x0);
    let n_rat = Rat::from_integer(Int::from(spec.n));
    let alpha = &spec.t - x0 - &n_rat;
    let beta = x0 - &n_rat;
    let two_n = rat_pow(&Rat::from_integer(Int::from(2)), spec.n);
    lhs == two_n * jacobi_at_zero(spec.n, &alpha, &beta)
}

/// The centered polynomial `K_n^(t)(x + t/2)`: even when `n` is even, odd
/// when `n` is odd.
pub fn shifted_poly(spec: &KrawtchoukSpec) -> RatPoly {
    let half_t = &spec.t / Rat::from_integer(Int::from(2));
    krawtchouk_poly(spec).compose_linear(&half_t, &Rat::one())
}

/// The degree-`m` polynomial `U` with `U(x^2) = K_(2m)^(t)(x + t/2)` for
/// `delta = 0`, or `U(x^2) = K_(2m+1)^(t)(x + t/2) / x` for `delta = 1`.
///
/// Coefficients are read off the centered polynomial directly; the
/// discarded parity class is asserted to be identically zero.
pub fn underlying_poly(spec: &UnderlyingSpec) -> Result<RatPoly, KrawtchoukError> {
    let n = spec.krawtchouk_degree();
    let shifted = shifted_poly(&KrawtchoukSpec::new(n, spec.t.clone()));
    let offset = spec.delta.as_u32() as usize;
    let mut out = vec![Rat::zero(); spec.m as usize + 1];
    for (i, c) in shifted.coeffs().iter().enumerate() {
        if i % 2 == offset {
            out[i / 2] = c.clone();
        } else if !c.is_zero() {
            return Err(KrawtchoukError::ParityViolation { index: i });
        }
    }
    Ok(RatPoly::from_coeffs(out))
}

/// Sign-variation counts of `f(x)` and `f(-x)`: upper bounds on the number
/// of positive and negative real roots.
pub fn descartes_bounds(f: &RatPoly) -> (usize, usize) {
    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }
    let sign_of = |c: &Rat| -> i8 {
        if c.is_zero() {
            0
        } else if c > &Rat::zero() {
            1
        } else {
            -1
        }
    };
    let pos = variations(f.coeffs().iter().map(sign_of));
    let neg = variations(f.coeffs().iter().enumerate().map(|(i, c)| {
        let s = sign_of(c);
        if i % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    (pos, neg)
}
