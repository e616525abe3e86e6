//! Composite irreducibility sieve.
//!
//! `IRREDUCIBLE` is only ever returned with a sound certificate: a linear
//! input, a low-degree input with no rational root, an Eisenstein witness
//! (direct or reversed), a Newton polygon consisting of a single
//! indivisible slope block, an irreducible mod-p reduction, or an empty
//! intersection of feasible proper factor degrees across polygons and
//! sampled primes. `REDUCIBLE` always carries an explicit witness. Degree
//! at most 3 and repeated-factor inputs are decided exactly; everything
//! else may come back `UNKNOWN`.

use crate::galois::modp::reduce_mod_p;
use crate::galois::roots::{rat_div_exact, rat_gcd, rational_roots_with_hint};
use crate::galois::CycleType;
use crate::newton::{eisenstein_certificate_model, newton_polygon, proper_factor_degrees};
use crate::poly::{int_discriminant, IntPoly, RatPoly};
use crate::primes;
use crate::rational::{Int, Rat};
use num_traits::Zero;
use std::collections::BTreeSet;

/// Prime-sampling budget for the sieve. Both bounds are explicit; there is
/// no silent default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveBudget {
    /// Reductions mod p are sampled for all primes up to this bound.
    pub prime_bound: u64,
    /// Newton polygons (Eisenstein + slope-block constraints) are examined
    /// at all primes up to this bound.
    pub np_prime_bound: u64,
}

impl SieveBudget {
    pub fn with_prime_bound(prime_bound: u64) -> Self {
        SieveBudget {
            prime_bound,
            np_prime_bound: prime_bound.min(97),
        }
    }
}

/// Why an input is certifiably irreducible over `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Linear,
    /// Degree 2 or 3 with no rational root.
    LowDegreeNoRoot,
    Eisenstein { p: u64, reversed: bool },
    /// The polygon at `p` is a single indivisible slope block.
    PolygonBlock { p: u64 },
    IrreducibleModP { p: u64 },
    /// No proper factor degree is feasible across the examined evidence.
    FactorDegreesEmpty { primes_used: Vec<u64> },
}

impl Certificate {
    pub fn code(&self) -> &'static str {
        match self {
            Certificate::Linear => "linear",
            Certificate::LowDegreeNoRoot => "low-degree-no-root",
            Certificate::Eisenstein { reversed: false, .. } => "eisenstein",
            Certificate::Eisenstein { reversed: true, .. } => "eisenstein-reversed",
            Certificate::PolygonBlock { .. } => "polygon-block",
            Certificate::IrreducibleModP { .. } => "irreducible-mod-p",
            Certificate::FactorDegreesEmpty { .. } => "degree-set-empty",
        }
    }
}

/// An explicit reducibility witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducibleWitness {
    /// `root` is a rational root, so `x - root` divides the input.
    RationalRoot { root: Rat },
    /// `gcd(f, f')` is a proper factor (repeated-root input).
    RepeatedFactor { factor: RatPoly },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SieveOutcome {
    Irreducible(Certificate),
    Reducible(ReducibleWitness),
    Unknown,
}

impl SieveOutcome {
    pub fn code(&self) -> &'static str {
        match self {
            SieveOutcome::Irreducible(_) => "IRREDUCIBLE",
            SieveOutcome::Reducible(_) => "REDUCIBLE",
            SieveOutcome::Unknown => "UNKNOWN",
        }
    }
}

fn proper_subset_sums(parts: &[u64], n: u64) -> BTreeSet<u64> {
    let mut reachable = vec![false; n as usize + 1];
    reachable[0] = true;
    for &part in parts {
        for d in (0..=(n - part) as usize).rev() {
            if reachable[d] {
                reachable[d + part as usize] = true;
            }
        }
    }
    (1..n).filter(|&d| reachable[d as usize]).collect()
}

pub fn irreducibility_sieve(f: &IntPoly, budget: &SieveBudget) -> SieveOutcome {
    sieve_with_evidence(f, budget, None, None)
}

/// Sieve with optional pre-computed evidence, so a caller that already
/// surveyed the good primes (and the discriminant) does not pay twice.
pub(crate) fn sieve_with_evidence(
    f: &IntPoly,
    budget: &SieveBudget,
    survey: Option<&[(u64, CycleType)]>,
    disc: Option<&Int>,
) -> SieveOutcome {
    let n = f.degree();
    assert!(n >= 1, "sieve needs degree >= 1");
    if n == 1 {
        return SieveOutcome::Irreducible(Certificate::Linear);
    }

    // repeated factors make f reducible; detect via the discriminant.
    // (For degree <= 3 a vanishing discriminant forces a rational repeated
    // root, so the root test below still produces the witness.)
    let disc_is_zero = match disc {
        Some(d) => d.is_zero(),
        None => int_discriminant(f).expect("degree >= 1").is_zero(),
    };
    if disc_is_zero && n >= 4 {
        let rat_form = f.primitive_rat_poly();
        let g = rat_gcd(&rat_form, &rat_form.derivative());
        debug_assert!(g.degree().map_or(false, |d| d >= 1));
        let factor = rat_div_exact(&rat_form, &g)
            .primitive_integer_form()
            .expect("nonzero")
            .primitive_rat_poly();
        return SieveOutcome::Reducible(ReducibleWitness::RepeatedFactor { factor });
    }

    let roots = rational_roots_with_hint(f, !disc_is_zero);
    if let Some(root) = roots.first() {
        return SieveOutcome::Reducible(ReducibleWitness::RationalRoot { root: root.clone() });
    }
    if n <= 3 {
        // quadratics and cubics factor through a linear factor or not at all
        return SieveOutcome::Irreducible(Certificate::LowDegreeNoRoot);
    }

    let nn = n as u64;
    let mut feasible: BTreeSet<u64> = (1..nn).collect();
    let mut primes_used: Vec<u64> = Vec::new();
    let rat_form = f.primitive_rat_poly();

    // polygon evidence at small primes
    for p in primes::primes_up_to(budget.np_prime_bound) {
        if let Some(cert) = eisenstein_certificate_model(f, p) {
            use crate::newton::EisensteinCertificate;
            return SieveOutcome::Irreducible(Certificate::Eisenstein {
                p: p.get(),
                reversed: matches!(cert, EisensteinCertificate::Reversed),
            });
        }
        let np = newton_polygon(&rat_form, p).expect("nonzero");
        let proper = proper_factor_degrees(&np);
        if proper.is_empty() {
            return SieveOutcome::Irreducible(Certificate::PolygonBlock { p: p.get() });
        }
        let before = feasible.len();
        feasible = feasible.intersection(&proper).cloned().collect();
        if feasible.len() < before {
            primes_used.push(p.get());
        }
        if feasible.is_empty() {
            return SieveOutcome::Irreducible(Certificate::FactorDegreesEmpty { primes_used });
        }
    }

    // mod-p evidence: either the supplied survey or a fresh sample
    let mut consume = |p: u64, ct: &CycleType| -> Option<SieveOutcome> {
        if ct.parts() == [nn] {
            return Some(SieveOutcome::Irreducible(Certificate::IrreducibleModP { p }));
        }
        let proper = proper_subset_sums(ct.parts(), nn);
        let before = feasible.len();
        feasible = feasible.intersection(&proper).cloned().collect();
        if feasible.len() < before {
            primes_used.push(p);
        }
        if feasible.is_empty() {
            return Some(SieveOutcome::Irreducible(Certificate::FactorDegreesEmpty {
                primes_used: primes_used.clone(),
            }));
        }
        None
    };

    match survey {
        Some(witnesses) => {
            for (p, ct) in witnesses {
                if let Some(outcome) = consume(*p, ct) {
                    return outcome;
                }
            }
        }
        None => {
            for p in primes::primes_up_to(budget.prime_bound) {
                let reduced = match reduce_mod_p(f, p) {
                    Ok(g) => g,
                    Err(_) => continue,
                };
                if !reduced.is_squarefree() {
                    continue;
                }
                let ct = reduced.factor_degrees().expect("squarefree");
                if let Some(outcome) = consume(p.get(), &ct) {
                    return outcome;
                }
            }
        }
    }

    SieveOutcome::Unknown
}
