//! Galois-group evidence from mod-p factorizations.
//!
//! The factorization type of an integral polynomial modulo a good prime
//! (one that preserves the degree and reduces squarefree) is the cycle type
//! of a Frobenius conjugacy class in the Galois group. Sampling many primes
//! and looking for a prime-length part in Jordan's range `n/2 < l < n - 2`
//! gives a cheap, sound "contains the alternating group" certificate; the
//! discriminant square test then separates the alternating and full
//! symmetric cases.

pub mod modp;
pub mod roots;
pub mod sieve;

pub use modp::{reduce_mod_p, PrimePoly};
pub use roots::rational_roots;
pub use sieve::{irreducibility_sieve, Certificate, ReducibleWitness, SieveBudget, SieveOutcome};

use crate::krawtchouk::{krawtchouk_poly, KrawtchoukSpec};
use crate::poly::{int_discriminant, IntPoly};
use crate::primes::{self, Prime};
use crate::rational::{is_rational_square, rat, vp_int, Int, Rat, Valuation};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("prime {p} divides the leading coefficient; the reduction drops degree")]
    BadPrime { p: u64 },
    #[error("reduction mod {p} is not squarefree")]
    NotSquarefree { p: u64 },
    #[error("moduli must be below 2^31, got {p}")]
    PrimeTooLarge { p: u64 },
    #[error("Jordan's criterion needs degree >= 8, got {n}")]
    DegreeTooSmall { n: u64 },
    #[error("discriminant is zero; valuation profile undefined")]
    ZeroDiscriminant,
}

/// Sorted multiset of irreducible factor degrees mod p, read as the cycle
/// type of a Frobenius element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CycleType(Vec<u64>);

impl CycleType {
    pub fn from_parts(mut parts: Vec<u64>) -> Self {
        parts.sort_unstable();
        CycleType(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn contains_part(&self, d: u64) -> bool {
        self.0.binary_search(&d).is_ok()
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Primes strictly between `n/2` and `n - 2`. A transitive subgroup of
/// `S_n` (`n >= 8`) containing an element of such prime order contains
/// `A_n`.
pub fn jordan_range(n: u64) -> Result<Vec<u64>, GaloisError> {
    if n < 8 {
        return Err(GaloisError::DegreeTooSmall { n });
    }
    Ok(primes::primes_up_to(n - 3)
        .into_iter()
        .map(|p| p.get())
        .filter(|&p| 2 * p > n)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GaloisStatus {
    #[serde(rename = "REDUCIBLE")]
    Reducible,
    #[serde(rename = "CONTAINS_ALTERNATING")]
    ContainsAlternating,
    #[serde(rename = "FULL_SYMMETRIC")]
    FullSymmetric,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl GaloisStatus {
    pub fn code(self) -> &'static str {
        match self {
            GaloisStatus::Reducible => "REDUCIBLE",
            GaloisStatus::ContainsAlternating => "CONTAINS_ALTERNATING",
            GaloisStatus::FullSymmetric => "FULL_SYMMETRIC",
            GaloisStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl std::fmt::Display for GaloisStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// One good prime and the cycle type it exhibits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeWitness {
    pub p: u64,
    pub cycle_type: CycleType,
}

/// Optional deterministic sub-sampling of the primes below the bound, for
/// large-degree sweeps. Exhaustive sampling is the default everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeSample {
    pub count: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub prime_bound: u64,
    pub sample: Option<PrimeSample>,
}

/// Everything the prime scan learned about one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisReport {
    pub degree: usize,
    pub status: GaloisStatus,
    /// A prime in Jordan's range appearing as a cycle-type part.
    pub jordan_prime: Option<u64>,
    /// Number of primes examined (good and bad).
    pub primes_sampled: u64,
    /// Good primes with their cycle types, ascending.
    pub witnesses: Vec<PrimeWitness>,
    /// Primes skipped as bad (leading-coefficient divisors or
    /// non-squarefree reductions), ascending.
    pub skipped_primes: Vec<u64>,
    pub disc_square: bool,
    /// `(p, v_p(disc))` at the skipped primes (empty when disc = 0).
    pub disc_valuations: Vec<(u64, u64)>,
    pub reducibility: SieveOutcome,
}

impl GaloisReport {
    /// A certified-irreducible polynomial of degree >= 2 with a square
    /// discriminant has Galois group inside the alternating group, which
    /// contradicts the full-symmetric conjecture.
    pub fn contradicts_symmetric_conjecture(&self) -> bool {
        self.degree >= 2
            && self.disc_square
            && matches!(self.reducibility, SieveOutcome::Irreducible(_))
    }

    /// Count of witnesses whose cycle type contains `part`.
    pub fn witnesses_with_part(&self, part: u64) -> usize {
        self.witnesses
            .iter()
            .filter(|w| w.cycle_type.contains_part(part))
            .count()
    }
}

/// Exhaustive deterministic scan of all primes up to `prime_bound`.
pub fn galois_scan(f: &IntPoly, prime_bound: u64) -> GaloisReport {
    galois_scan_with(
        f,
        &ScanOptions {
            prime_bound,
            sample: None,
        },
    )
}

pub fn galois_scan_with(f: &IntPoly, opts: &ScanOptions) -> GaloisReport {
    let n = f.degree();
    assert!(n >= 1, "scan needs degree >= 1");
    let disc = int_discriminant(f).expect("degree >= 1");

    let mut prime_list = primes::primes_up_to(opts.prime_bound);
    if let Some(sample) = opts.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
        prime_list.shuffle(&mut rng);
        prime_list.truncate(sample.count);
        prime_list.sort_unstable();
    }
    let primes_sampled = prime_list.len() as u64;

    enum Classified {
        Good(u64, CycleType),
        Bad(u64),
    }
    let classified: Vec<Classified> = prime_list
        .par_iter()
        .map(|&p| match reduce_mod_p(f, p) {
            Ok(g) => {
                if g.is_squarefree() {
                    Classified::Good(p.get(), g.factor_degrees().expect("squarefree"))
                } else {
                    Classified::Bad(p.get())
                }
            }
            Err(_) => Classified::Bad(p.get()),
        })
        .collect();

    let mut witnesses = Vec::new();
    let mut skipped_primes = Vec::new();
    for c in classified {
        match c {
            Classified::Good(p, ct) => witnesses.push(PrimeWitness { p, cycle_type: ct }),
            Classified::Bad(p) => skipped_primes.push(p),
        }
    }

    let survey: Vec<(u64, CycleType)> = witnesses
        .iter()
        .map(|w| (w.p, w.cycle_type.clone()))
        .collect();
    let budget = SieveBudget::with_prime_bound(opts.prime_bound);
    let reducibility = sieve::sieve_with_evidence(f, &budget, Some(&survey), Some(&disc));

    let disc_square = is_rational_square(&Rat::from_integer(disc.clone()));
    let disc_valuations: Vec<(u64, u64)> = if disc.is_zero() {
        Vec::new()
    } else {
        skipped_primes
            .iter()
            .map(|&p| {
                let v = match vp_int(&disc, Prime::new(p).expect("from sieve")) {
                    Valuation::Finite(v) => v as u64,
                    Valuation::Infinity => unreachable!("disc != 0"),
                };
                (p, v)
            })
            .collect()
    };

    let jordan_prime = if n as u64 >= 8 {
        jordan_range(n as u64)
            .expect("n >= 8")
            .into_iter()
            .find(|&l| witnesses.iter().any(|w| w.cycle_type.contains_part(l)))
    } else {
        None
    };

    let certified = matches!(reducibility, SieveOutcome::Irreducible(_));
    let status = if matches!(reducibility, SieveOutcome::Reducible(_)) {
        GaloisStatus::Reducible
    } else if !certified {
        GaloisStatus::Inconclusive
    } else if n == 3 {
        // irreducible cubic: every transitive subgroup of S_3 contains A_3,
        // and the square test separates A_3 from S_3
        if disc_square {
            GaloisStatus::ContainsAlternating
        } else {
            GaloisStatus::FullSymmetric
        }
    } else if n as u64 >= 8 && jordan_prime.is_some() {
        if disc_square {
            GaloisStatus::ContainsAlternating
        } else {
            GaloisStatus::FullSymmetric
        }
    } else {
        GaloisStatus::Inconclusive
    };
    debug_assert!(!(status == GaloisStatus::FullSymmetric && disc_square));

    GaloisReport {
        degree: n,
        status,
        jordan_prime,
        primes_sampled,
        witnesses,
        skipped_primes,
        disc_square,
        disc_valuations,
        reducibility,
    }
}

/// Exact valuation profile of the discriminant at chosen primes, plus the
/// cofactor left after dividing those prime powers out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscProfile {
    pub disc: Int,
    pub valuations: Vec<(u64, u64)>,
    pub cofactor: Int,
}

pub fn disc_valuation_profile(f: &IntPoly, primes: &[Prime]) -> Result<DiscProfile, GaloisError> {
    let disc = int_discriminant(f).expect("degree >= 1");
    if disc.is_zero() {
        return Err(GaloisError::ZeroDiscriminant);
    }
    let mut cofactor = disc.clone();
    let mut valuations = Vec::new();
    for &p in primes {
        let v = match vp_int(&disc, p) {
            Valuation::Finite(v) => v as u64,
            Valuation::Infinity => unreachable!("disc != 0"),
        };
        let big_p = Int::from(p.get());
        for _ in 0..v {
            cofactor /= &big_p;
        }
        valuations.push((p.get(), v));
    }
    Ok(DiscProfile {
        disc,
        valuations,
        cofactor,
    })
}

/// The constant coefficient of `K_n^(-1)` (which is `binom(-1, n) = 1` for
/// even `n`) together with the monic-normalized root product `a_0 / a_n`.
///
/// The polynomial is not monic — its leading coefficient is `(-2)^n / n!`
/// — so the product of its roots is `a_0/a_n = n!/2^n` rather than the
/// constant coefficient itself. Both quantities are returned so callers can
/// see the distinction.
pub fn product_of_roots_relation(n: u32) -> (Rat, Rat) {
    assert!(n >= 2 && n % 2 == 0, "needs even n >= 2");
    let f = krawtchouk_poly(&KrawtchoukSpec::new(n, rat(-1, 1)));
    let constant = f.constant_coeff();
    let product = &constant / f.leading().unwrap();
    (constant, product)
}
