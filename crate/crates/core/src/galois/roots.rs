//! Complete rational-root extraction for integer polynomials.
//!
//! Divisor enumeration of the extreme coefficients is hopeless at the
//! coefficient sizes the sweeps produce, so roots are found the standard
//! computer-algebra way: reduce the squarefree part modulo a good prime,
//! Hensel-lift every residue root to enough p-adic precision, then recover
//! a rational candidate by rational reconstruction and verify it exactly.
//! Exact verification makes the output unconditionally sound; the lifting
//! bound makes it complete.

use crate::galois::modp::PrimePoly;
use crate::poly::{IntPoly, RatPoly};
use crate::primes::{self, Prime};
use crate::rational::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Monic gcd over `Q[x]` by Euclid's algorithm. Adequate for the moderate
/// degrees used here; the subresultant machinery stays reserved for
/// resultants.
pub fn rat_gcd(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = rat_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lc) = a.leading() {
        let inv = lc.clone().recip();
        a.scale(&inv)
    } else {
        a
    }
}

/// Remainder of `a` divided by nonzero `b` over `Q[x]`.
pub fn rat_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let db = b.degree().expect("division by zero polynomial");
    let lc = b.leading().unwrap().clone();
    let mut r: Vec<Rat> = a.coeffs().to_vec();
    while r.len() > db {
        let k = r.len() - 1;
        let q = r[k].clone() / &lc;
        if !q.is_zero() {
            for j in 0..db {
                let delta = &q * &b.coeffs()[j];
                r[k - db + j] -= delta;
            }
        }
        r.pop();
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
    }
    RatPoly::from_coeffs(r)
}

/// Exact quotient `a / b` over `Q[x]`; panics if the division is inexact.
pub fn rat_div_exact(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let da = a.degree().expect("zero dividend");
    let db = b.degree().expect("zero divisor");
    assert!(da >= db);
    let lc = b.leading().unwrap().clone();
    let mut r: Vec<Rat> = a.coeffs().to_vec();
    let mut q = vec![Rat::zero(); da - db + 1];
    for k in (db..=da).rev() {
        let qc = r[k].clone() / &lc;
        if !qc.is_zero() {
            for j in 0..=db {
                let delta = &qc * &b.coeffs()[j];
                r[k - db + j] -= delta;
            }
        }
        q[k - db] = qc;
    }
    assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    RatPoly::from_coeffs(q)
}

fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Rational reconstruction: the unique `u/v` with `u ≡ r*v (mod n)`,
/// `|u| <= bound`, `0 < v <= bound`, when it exists. Requires
/// `n > 2*bound^2`.
fn rational_reconstruct(r: &Int, n: &Int, bound: &Int) -> Option<(Int, Int)> {
    let mut r0 = n.clone();
    let mut t0 = Int::zero();
    let mut r1 = r.mod_floor(n);
    let mut t1 = Int::one();
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        t0 = t1;
        r1 = r2;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > *bound {
        return None;
    }
    if t1.is_negative() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

/// All rational roots of `f` (each distinct root once), ascending.
pub fn rational_roots(f: &IntPoly) -> Vec<Rat> {
    rational_roots_with_hint(f, false)
}

/// As [`rational_roots`], but a caller that already knows `f` is squarefree
/// (nonzero discriminant) can skip the gcd-based squarefree-part step.
pub fn rational_roots_with_hint(f: &IntPoly, known_squarefree: bool) -> Vec<Rat> {
    let rat_form = f.primitive_rat_poly();
    let mut roots = Vec::new();
    let zero_mult = rat_form.root_at_zero_multiplicity();
    if zero_mult > 0 {
        roots.push(Rat::zero());
    }
    let stripped = rat_form.shift_down(zero_mult);
    if stripped.degree() == Some(0) {
        roots.sort();
        return roots;
    }
    // squarefree part: h = stripped / gcd(stripped, stripped')
    let h_rat = if known_squarefree {
        stripped
    } else {
        let d = rat_gcd(&stripped, &stripped.derivative());
        if d.degree() == Some(0) {
            stripped
        } else {
            rat_div_exact(&stripped, &d)
        }
    };
    let h = h_rat.primitive_integer_form().expect("nonzero");
    let n = h.degree();
    if n == 1 {
        roots.push(Rat::new(-h.coeff(0), h.coeff(1)));
        roots.sort();
        return roots;
    }

    // coefficient bound for any primitive linear factor v*x - u:
    // v | lc, |u/v| <= 1 + max|h_i|/|lc|, hence |u|, |v| <= |lc| + max|h_i|
    let max_coeff = h
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap();
    let bound: Int = h.leading().abs() + max_coeff;

    // pick the smallest odd prime with unit leading coefficient and
    // squarefree reduction; it exists because disc(h) != 0
    let mut lift_prime: Option<(Prime, PrimePoly)> = None;
    let mut p_candidate = 3u64;
    loop {
        if primes::is_prime(p_candidate) {
            let p = Prime::new(p_candidate).unwrap();
            if let Ok(reduced) = super::modp::reduce_mod_p(&h, p) {
                if reduced.is_squarefree() {
                    lift_prime = Some((p, reduced));
                }
            }
        }
        if lift_prime.is_some() {
            break;
        }
        p_candidate += 2;
    }
    let (p, reduced) = lift_prime.unwrap();
    let p_int = Int::from(p.get());

    // target modulus p^K > 2*bound^2
    let target: Int = Int::from(2) * &bound * &bound + 1;
    // exact integer derivative of the lifted model (no re-normalization:
    // Newton steps need h' itself, not a scalar multiple)
    let deriv_coeffs: Vec<Int> = h
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Int::from(i as u64))
        .collect();
    fn eval_mod(cs: &[Int], x: &Int, m: &Int) -> Int {
        let mut acc = Int::zero();
        for c in cs.iter().rev() {
            acc = (acc * x + c).mod_floor(m);
        }
        acc
    }

    for r0 in reduced.roots_mod_p() {
        // quadratic Hensel lifting: r <- r - h(r)/h'(r) mod p^(2^i)
        let mut modulus = p_int.clone();
        let mut root = Int::from(r0);
        while modulus < target {
            modulus = &modulus * &modulus;
            let fr = eval_mod(h.coeffs(), &root, &modulus);
            let dr = eval_mod(&deriv_coeffs, &root, &modulus);
            let inv = match mod_inverse(&dr, &modulus) {
                Some(i) => i,
                // cannot happen for a squarefree reduction; bail safely
                None => break,
            };
            root = (&root - fr * inv).mod_floor(&modulus);
        }
        if modulus < target {
            continue;
        }
        if let Some((u, v)) = rational_reconstruct(&root, &modulus, &bound) {
            let candidate = Rat::new(u, v);
            if h.eval_rat(&candidate).is_zero() {
                roots.push(candidate);
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}
