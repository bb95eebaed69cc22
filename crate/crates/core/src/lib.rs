//! Exact arithmetic for q-binomial identities, subspace counting over prime
//! fields, and the integral Cartan subalgebra of quantum sl2.
//!
//! Everything in this crate is computed exactly: coefficients are arbitrary
//! precision integers, no floating point is used anywhere, and every verifier
//! reports the two sides of an identity as canonical strings so that equality
//! of the report fields is equality of the underlying objects.
//!
//! The crate is organized bottom-up:
//!
//! * [`laurent`] — Laurent polynomials in one variable `q` over the integers,
//!   with exact division, substitution `q -> q^r`, and evaluation.
//! * [`ratfunc`] — rational functions in `q` in canonical (reduced) form, used
//!   wherever an intermediate value genuinely leaves `Z[q, q^-1]`.
//! * [`klaurent`] — Laurent polynomials in a second variable `K` whose
//!   coefficients are rational functions in `q`; the home of the Cartan oracle.
//! * [`qgauss`] — Gaussian (q-binomial) coefficients and the verifiers for the
//!   q-Pfaff–Saalschütz identity and its relatives.
//! * [`quantum`] — balanced quantum integers `{n} = (q^n - q^-n)/(q - q^-1)`,
//!   quantum binomial coefficients, and the quantum form of the identity.
//! * [`fq`] — subspaces of F_p^n in reduced row echelon form: enumeration,
//!   lattice operations, fixed subspaces and complements, counting lemmas, and
//!   the subspace-quadruple bijection that proves the identity bijectively.
//! * [`cartan`] — the integral Cartan algebra: Lusztig symbols `[K; c // t]`,
//!   expansion into `K`-Laurent form, the closed multiplication rule, and
//!   normal forms in the binomial basis.
//! * [`algebra`] — the full integral form: words in the divided powers
//!   `E^(n)`, `F^(n)`, `K^(+/-1)` and Cartan symbols, PBW straightening, and
//!   the Weyl-module oracle used to certify it.
//! * [`report`] — the `VerificationReport` record shared by all verifiers.
//! * [`grammar`] — parsers for the element and word grammars used by callers.
//!
//! The crate is `no_std` (it requires only `alloc`), so the mathematical core
//! can be embedded anywhere; IO, timing, and serialization live downstream.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod algebra;
pub mod cartan;
pub mod error;
pub mod fq;
pub mod grammar;
pub mod klaurent;
pub mod laurent;
pub mod qgauss;
pub mod quantum;
pub mod ratfunc;
pub mod report;

pub use error::Error;
pub use klaurent::KLaurent;
pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;
pub use report::VerificationReport;
