//! Prime numbers as a validated domain type, plus the small sieves the rest
//! of the crate leans on.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrimeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// A prime number, validated at construction.
///
/// Taking `Prime` instead of a bare integer lets valuation and reduction
/// routines skip re-checking primality on every call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, PrimeError> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(PrimeError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub const TWO: Prime = Prime(2);
pub const THREE: Prime = Prime(3);
pub const FIVE: Prime = Prime(5);

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin over the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    // These witnesses are known to decide primality for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `p <= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<Prime> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(Prime(p as u64));
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    out
}

/// Primes in the open interval `(lo, hi)`, ascending.
pub fn primes_strictly_between(lo: u64, hi: u64) -> Vec<Prime> {
    if hi <= lo + 1 {
        return Vec::new();
    }
    primes_up_to(hi - 1)
        .into_iter()
        .filter(|p| p.get() > lo)
        .collect()
}
