//! Exact-arithmetic toolkit for Krawtchouk polynomials over the rationals.
//!
//! Everything here is computed in exact arithmetic (big integers and big
//! rationals); there is no floating point anywhere. The crate provides:
//!
//! * [`rational`] — p-adic valuations, generalized binomial coefficients,
//!   exact square testing;
//! * [`poly`] — dense univariate polynomials over `Q`, primitive integral
//!   models, subresultant resultants and discriminants;
//! * [`krawtchouk`] — construction of the Krawtchouk polynomials
//!   `K_n^(t)(x)` (the `q = 2` family), their centered shifts and the
//!   degree-`m` underlying polynomials;
//! * [`newton`] — p-adic Newton polygons in the "leading coefficient at
//!   abscissa 0" orientation, degree-based shape tests, Eisenstein and
//!   polygon-block irreducibility certificates, Newton indices;
//! * [`galois`] — mod-p reduction, distinct-degree factor multisets
//!   (Frobenius cycle types), a composite irreducibility sieve, and the
//!   prime-sampling scan that assembles Galois-group evidence.

pub mod galois;
pub mod krawtchouk;
pub mod newton;
pub mod poly;
pub mod primes;
pub mod rational;

pub use poly::{IntPoly, RatPoly};
pub use primes::Prime;
pub use rational::{Int, Rat, Valuation};
