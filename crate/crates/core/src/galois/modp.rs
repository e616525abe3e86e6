//! Polynomials over prime fields and distinct-degree factor multisets.
//!
//! Coefficients are `u64` residues; the modulus is restricted to `p < 2^31`
//! so dot products can accumulate in 128-bit registers without intermediate
//! reductions. Cycle types come from distinct-degree factorization driven by
//! the Frobenius matrix: one `x^p mod g` exponentiation per prime, then each
//! further Frobenius power is a matrix-vector product.

use crate::galois::GaloisError;
use crate::poly::IntPoly;
use crate::primes::Prime;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Polynomial over `F_p`, ascending residues, leading residue nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePoly {
    p: Prime,
    coeffs: Vec<u64>,
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Product of two residue vectors; accumulation never overflows because
/// `p < 2^31` is enforced at construction.
fn raw_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (k, o) in out.iter_mut().enumerate() {
        let lo = k.saturating_sub(b.len() - 1);
        let hi = k.min(a.len() - 1);
        let mut acc: u128 = 0;
        for i in lo..=hi {
            acc += a[i] as u128 * b[k - i] as u128;
        }
        *o = (acc % p as u128) as u64;
    }
    out
}

/// Remainder of `a` modulo monic-normalizable `b`.
fn raw_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    if r.len() <= db {
        return r;
    }
    let lc_inv = inv_mod(b[db], p);
    for k in (db..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        let q = (c as u128 * lc_inv as u128 % p as u128) as u64;
        for j in 0..db {
            let sub = q as u128 * b[j] as u128 % p as u128;
            let idx = k - db + j;
            r[idx] = ((r[idx] as u128 + p as u128 - sub) % p as u128) as u64;
        }
        r[k] = 0;
    }
    trim(&mut r);
    r
}

fn raw_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = if a.len() >= b.len() {
            raw_rem(&a, &b, p)
        } else {
            a.clone()
        };
        a = b;
        b = r;
    }
    // monic-normalize
    if let Some(&lc) = a.last() {
        if lc != 1 {
            let inv = inv_mod(lc, p);
            for c in a.iter_mut() {
                *c = (*c as u128 * inv as u128 % p as u128) as u64;
            }
        }
    }
    a
}

/// Exact quotient when `b | a` over `F_p`.
fn raw_div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    let mut q = vec![0u64; da - db + 1];
    let lc_inv = inv_mod(b[db], p);
    for k in (db..=da).rev() {
        let c = r[k];
        let qk = (c as u128 * lc_inv as u128 % p as u128) as u64;
        q[k - db] = qk;
        if qk != 0 {
            for j in 0..=db {
                let sub = qk as u128 * b[j] as u128 % p as u128;
                let idx = k - db + j;
                r[idx] = ((r[idx] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

impl PrimePoly {
    /// Build from raw residues (reduced mod p internally).
    pub fn from_residues(p: Prime, coeffs: Vec<u64>) -> Result<Self, GaloisError> {
        if p.get() >= 1 << 31 {
            return Err(GaloisError::PrimeTooLarge { p: p.get() });
        }
        let m = p.get();
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % m).collect();
        trim(&mut c);
        Ok(PrimePoly { p, coeffs: c })
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn derivative_raw(&self) -> Vec<u64> {
        let p = self.p.get();
        if self.coeffs.len() <= 1 {
            return Vec::new();
        }
        let mut d: Vec<u64> = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| (c as u128 * ((i as u64 + 1) % p) as u128 % p as u128) as u64)
            .collect();
        trim(&mut d);
        d
    }

    /// True iff `gcd(g, g') = 1`, with the vanishing-derivative p-th-power
    /// case treated as non-squarefree.
    pub fn is_squarefree(&self) -> bool {
        let n = self.degree().expect("squarefree test needs a nonzero polynomial");
        if n == 0 {
            return true;
        }
        let d = self.derivative_raw();
        if d.is_empty() {
            // g = h(x^p) is a p-th power up to Frobenius twisting
            return false;
        }
        raw_gcd(&self.coeffs, &d, self.p.get()).len() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p.get();
        let mut acc: u64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = ((acc as u128 * x as u128 + c as u128) % p as u128) as u64;
        }
        acc
    }

    /// Roots in `F_p` by exhaustive scan (the lifting code only calls this
    /// for small p).
    pub fn roots_mod_p(&self) -> Vec<u64> {
        (0..self.p.get()).filter(|&x| self.eval(x) == 0).collect()
    }

    /// Multiset of irreducible factor degrees, ascending, via
    /// distinct-degree factorization. Requires a squarefree input.
    ///
    /// Each distinct-degree stratum of total degree `D` at depth `d` is a
    /// product of `D/d` distinct irreducible factors, so the degree
    /// multiset is determined without splitting the strata further.
    pub fn factor_degrees(&self) -> Result<super::CycleType, GaloisError> {
        let p = self.p.get();
        let n = self
            .degree()
            .expect("factor_degrees needs a nonzero polynomial");
        assert!(n >= 1, "factor_degrees needs degree >= 1");
        if !self.is_squarefree() {
            return Err(GaloisError::NotSquarefree { p });
        }
        if n == 1 {
            return Ok(super::CycleType::from_parts(vec![1]));
        }
        // monic model g
        let mut g: Vec<u64> = self.coeffs.clone();
        let lc_inv = inv_mod(g[n], p);
        for c in g.iter_mut() {
            *c = (*c as u128 * lc_inv as u128 % p as u128) as u64;
        }

        // x^p mod g, then the Frobenius matrix column by column
        let x = vec![0u64, 1];
        let xp = {
            // square-and-multiply exponentiation of x by p modulo g
            let mut acc = vec![1u64];
            let mut base = x.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = raw_rem(&raw_mul(&acc, &base, p), &g, p);
                }
                base = raw_rem(&raw_mul(&base, &base, p), &g, p);
                e >>= 1;
            }
            acc
        };
        // frob[i] = x^(p*i) mod g as a length-n coefficient vector
        let mut frob: Vec<Vec<u64>> = Vec::with_capacity(n);
        let mut col = vec![1u64];
        for i in 0..n {
            if i > 0 {
                col = raw_rem(&raw_mul(&col, &xp, p), &g, p);
            }
            let mut padded = col.clone();
            padded.resize(n, 0);
            frob.push(padded);
        }
        let apply_frobenius = |v: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; n];
            for (i, &vi) in v.iter().enumerate() {
                if vi == 0 {
                    continue;
                }
                for (j, o) in out.iter_mut().enumerate() {
                    *o = ((*o as u128 + vi as u128 * frob[i][j] as u128) % p as u128) as u64;
                }
            }
            out
        };

        let mut parts = Vec::new();
        let mut remaining = g.clone();
        // w = x^(p^d) mod g, updated by one matrix application per depth
        let mut w = {
            let mut v = xp.clone();
            v.resize(n, 0);
            v
        };
        let mut d = 1usize;
        loop {
            let rem_deg = remaining.len() - 1;
            if rem_deg == 0 {
                break;
            }
            if 2 * d > rem_deg {
                // whatever is left is a single irreducible factor
                parts.push(rem_deg as u64);
                break;
            }
            // gcd(x^(p^d) - x, remaining)
            let mut shifted = w.clone();
            if shifted.len() < 2 {
                shifted.resize(2, 0);
            }
            shifted[1] = (shifted[1] + p - 1) % p;
            let mut shifted = shifted;
            trim(&mut shifted);
            let reduced = if shifted.len() >= remaining.len() {
                raw_rem(&shifted, &remaining, p)
            } else {
                shifted
            };
            let stratum = if reduced.is_empty() {
                remaining.clone()
            } else {
                raw_gcd(&reduced, &remaining, p)
            };
            let stratum_deg = stratum.len() - 1;
            if stratum_deg > 0 {
                debug_assert_eq!(stratum_deg % d, 0);
                for _ in 0..stratum_deg / d {
                    parts.push(d as u64);
                }
                remaining = raw_div_exact(&remaining, &stratum, p);
            }
            d += 1;
            if remaining.len() - 1 == 0 {
                break;
            }
            w = apply_frobenius(&w);
        }
        let ct = super::CycleType::from_parts(parts);
        debug_assert_eq!(ct.total(), n as u64);
        Ok(ct)
    }
}

impl std::fmt::Display for PrimePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
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
        write!(f, " (mod {})", self.p)
    }
}

/// Coefficientwise reduction of the primitive part of `f`.
///
/// Fails with `BadPrime` when `p` divides the leading coefficient (the
/// degree would drop, so the reduction carries no Frobenius information).
pub fn reduce_mod_p(f: &IntPoly, p: Prime) -> Result<PrimePoly, GaloisError> {
    if p.get() >= 1 << 31 {
        return Err(GaloisError::PrimeTooLarge { p: p.get() });
    }
    let m = crate::rational::Int::from(p.get());
    let residues: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&m);
            debug_assert!(!r.is_negative());
            r.to_u64().unwrap()
        })
        .collect();
    if residues.last() == Some(&0) {
        return Err(GaloisError::BadPrime { p: p.get() });
    }
    PrimePoly::from_residues(p, residues)
}

use num_traits::Signed;
