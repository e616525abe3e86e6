//! The coefficient domain: arbitrary-precision rationals, p-adic valuations,
//! generalized binomial coefficients and exact square roots.
//!
//! `Rat` is kept in lowest terms with a positive denominator by the
//! underlying representation, so the usual invariants (gcd = 1, den >= 1,
//! zero as 0/1) hold for every value that flows through the crate.

use crate::primes::Prime;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for small rational constants, mostly in tests and tables.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// A p-adic valuation. `Infinity` is the valuation of zero and compares
/// greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_finite(self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// v_p of an integer; `Infinity` for zero.
pub fn vp_int(n: &Int, p: Prime) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let p = p.get();
    if p == 2 {
        // trailing_zeros is exact and cheap for the common p = 2 case
        return Valuation::Finite(n.trailing_zeros().unwrap() as i64);
    }
    let p = Int::from(p);
    let mut m = n.clone();
    let mut v = 0i64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, &p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        m = q;
        v += 1;
    }
}

/// v_p of a rational: v_p(numerator) - v_p(denominator); `Infinity` at zero.
/// Fully additive: vp(a*b) = vp(a) + vp(b).
pub fn vp(r: &Rat, p: Prime) -> Valuation {
    if r.is_zero() {
        return Valuation::Infinity;
    }
    let vn = vp_int(r.numer(), p).finite().unwrap();
    let vd = vp_int(r.denom(), p).finite().unwrap();
    Valuation::Finite(vn - vd)
}

/// v_p(n!) by the digit-sum form of Legendre's formula:
/// `(n - sum of base-p digits of n) / (p - 1)`.
pub fn vp_factorial(n: u64, p: Prime) -> u64 {
    let p = p.get();
    let mut digit_sum = 0u64;
    let mut m = n;
    while m > 0 {
        digit_sum += m % p;
        m /= p;
    }
    (n - digit_sum) / (p - 1)
}

/// Generalized binomial coefficient `binom(x, j) = x(x-1)...(x-j+1)/j!`
/// for rational `x`. Integer-valued whenever `x` is an integer.
pub fn rat_binomial(x: &Rat, j: u32) -> Rat {
    let mut num = Rat::one();
    let mut fact = Int::one();
    for i in 0..j {
        num *= x - Rat::from_integer(Int::from(i));
        fact *= Int::from(i + 1);
    }
    num / Rat::from_integer(fact)
}

/// `binom(n, k)` over the integers (n >= 0).
pub fn int_binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Exact integer square root test: `Some(s)` with `s*s = n`.
pub fn exact_sqrt_uint(n: &BigUint) -> Option<BigUint> {
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

/// True iff `r >= 0` and both numerator and denominator are perfect squares.
pub fn is_rational_square(r: &Rat) -> bool {
    rational_sqrt(r).is_some()
}

/// The exact nonnegative square root of `r`, when `r` is a rational square.
pub fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sn = exact_sqrt_uint(r.numer().magnitude())?;
    let sd = exact_sqrt_uint(r.denom().magnitude())?;
    Some(Rat::new(Int::from(sn), Int::from(sd)))
}

/// `(-1)^j` as an integer.
pub fn neg_one_pow(j: u64) -> Int {
    if j % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

/// `base^exp` for rational base and nonnegative exponent.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Parse helpers are deliberately absent: rationals only enter through the
/// CLI as integer pairs, never as strings.
pub fn rat_to_u64(r: &Rat) -> Option<u64> {
    if !r.denom().is_one() {
        return None;
    }
    r.numer().to_u64()
}
