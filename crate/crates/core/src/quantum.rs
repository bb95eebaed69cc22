//! Balanced quantum integers and binomials, the bridge to Gaussian
//! coefficients, and the quantum form of the Pfaff–Saalschütz identity.
//!
//! The quantum integer is `{n} = q^(n-1) + q^(n-3) + ... + q^(1-n)`, a
//! palindromic Laurent polynomial, and the quantum binomial is
//! `{n // k} = {n}!/({k}!{n-k}!)`.  The working definition here goes through
//! the bridge
//!
//! ```text
//! {n // k} = q^(-k(n-k)) * [n // k] with q -> q^2
//! ```
//!
//! which reuses the division-free Gaussian recurrence; the factorial quotient
//! is a cross-check in the test suite.  The same convention as for Gaussian
//! coefficients applies: `{n // k} = 0` when `k < 0` or `n < k`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qgauss::QBinomTable;
use crate::report::{params, VerificationReport};

/// The quantum integer `{n} = q^(n-1) + q^(n-3) + ... + q^(1-n)`; `{0} = 0`.
pub fn quantum_int(n: u64) -> LaurentPoly {
    let n = n as i64;
    let mut out = LaurentPoly::zero();
    let mut e = n - 1;
    while e >= 1 - n {
        out += &LaurentPoly::monomial(e, BigInt::one());
        e -= 2;
    }
    out
}

/// The quantum factorial `{n}! = {n}{n-1}...{1}`; `{0}! = 1`.
pub fn quantum_factorial(n: u64) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 1..=n {
        out = &out * &quantum_int(i);
    }
    out
}

/// The quantum binomial `{n // k}` via the bridge from the Gaussian
/// coefficient (0 when `k < 0` or `n < k`).
pub fn quantum_binom(table: &mut QBinomTable, n: i64, k: i64) -> LaurentPoly {
    if k < 0 || n < k {
        return LaurentPoly::zero();
    }
    let gauss = table.binom(n, k);
    gauss
        .substitute_power(2)
        .expect("2 is positive")
        .shift(-k * (n - k))
}

/// One-off quantum binomial (builds a transient table).
pub fn quantum_binom_once(n: i64, k: i64) -> LaurentPoly {
    quantum_binom(&mut QBinomTable::new(), n, k)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg.into()))
    }
}

/// Verifies the quantum Pfaff–Saalschütz identity
///
/// ```text
/// {m // t} {m+e // s} = sum_j {t+e // j} {s-e // s-j} {m+j // s+t}
/// ```
///
/// (no power of q on the summand, unlike the Gaussian form).  The same report
/// additionally re-derives the identity from the Gaussian form through the
/// bridge: for every `j` it confirms the power-of-q cancellation
///
/// ```text
/// t(m-t) + s(m+e-s) = 2(s-j)(t+e-j) + j(t+e-j) + (s-j)(j-e) + (s+t)(m+j-s-t)
/// ```
///
/// and that each Gaussian summand at `q -> q^2` equals the quantum summand
/// shifted by that common power.  Requires `m, s, t >= 0`, `-t <= e <= s`.
pub fn verify_quantum_ps(
    table: &mut QBinomTable,
    m: i64,
    s: i64,
    t: i64,
    e: i64,
) -> Result<VerificationReport> {
    require(m >= 0 && s >= 0 && t >= 0, "m, s, t must be nonnegative")?;
    require(-t <= e && e <= s, "e must satisfy -t <= e <= s")?;
    let lhs = &quantum_binom(table, m, t) * &quantum_binom(table, m + e, s);
    let common_power = t * (m - t) + s * (m + e - s);
    let mut rhs = LaurentPoly::zero();
    let mut bridge_ok = true;
    let mut notes = Vec::new();
    for j in 0.max(e)..=(t + e).min(s) {
        let summand = &(&quantum_binom(table, t + e, j) * &quantum_binom(table, s - e, s - j))
            * &quantum_binom(table, m + j, s + t);
        rhs += &summand;
        // Exponent cancellation, literally.
        let rhs_power = 2 * (s - j) * (t + e - j)
            + j * (t + e - j)
            + (s - j) * (j - e)
            + (s + t) * (m + j - s - t);
        if rhs_power != common_power {
            bridge_ok = false;
            notes.push(format!(
                "power cancellation failed at j={j}: {rhs_power} != {common_power}"
            ));
        }
        // Gaussian summand bridged to the quantum summand.
        let gauss_summand = crate::qgauss::qps_summand(table, m, s, t, e, j);
        let bridged = gauss_summand.substitute_power(2).expect("2 is positive");
        if bridged != summand.shift(common_power) {
            bridge_ok = false;
            notes.push(format!("bridged summand mismatch at j={j}"));
        }
    }
    // The bridged left-hand sides must also agree.
    let gauss_lhs = &table.binom(m, t) * &table.binom(m + e, s);
    if gauss_lhs.substitute_power(2).expect("2 is positive") != lhs.shift(common_power) {
        bridge_ok = false;
        notes.push("bridged left-hand side mismatch".to_string());
    }
    let tag = if bridge_ok {
        "bridge=ok"
    } else {
        "bridge=FAIL"
    };
    Ok(VerificationReport::new(
        "quantum",
        params(&[("m", m), ("s", s), ("t", t), ("e", e)]),
        format!("{}; bridge=ok", lhs.canonical_string()),
        format!("{}; {}", rhs.canonical_string(), tag),
    )
    .with_notes(notes))
}

/// Verifies the shifted form of the quantum identity
///
/// ```text
/// {h+c // t} {h+b // s} = sum_i {t-c+b // i-c} {s-b+c // i-b} {h+i // t+s}
/// ```
///
/// The index is enumerated over the superset `min(0,b,c) <= i <= max(t+b,
/// s+c)`, which covers every potentially nonzero summand *including negative
/// i* (the displayed sum starts at i = 0, but for negative `b` or `c` the
/// nonzero range can start below 0 — every run records whether a nonzero
/// negative-index summand occurred).  Requires `h, s, t >= 0`, `t-c+b >= 0`,
/// `s-b+c >= 0`, `h+c >= 0`, `h+b >= 0`.
pub fn verify_quantum_ps_shifted(
    table: &mut QBinomTable,
    h: i64,
    s: i64,
    t: i64,
    b: i64,
    c: i64,
) -> Result<VerificationReport> {
    require(h >= 0 && s >= 0 && t >= 0, "h, s, t must be nonnegative")?;
    require(t - c + b >= 0, "t - c + b >= 0 required")?;
    require(s - b + c >= 0, "s - b + c >= 0 required")?;
    require(h + c >= 0 && h + b >= 0, "h+c >= 0 and h+b >= 0 required")?;
    let lhs = &quantum_binom(table, h + c, t) * &quantum_binom(table, h + b, s);
    let i_lo = 0.min(b).min(c);
    let i_hi = (t + b).max(s + c);
    let mut rhs = LaurentPoly::zero();
    let mut negative_nonzero = Vec::new();
    for i in i_lo..=i_hi {
        let summand = &(&quantum_binom(table, t - c + b, i - c)
            * &quantum_binom(table, s - b + c, i - b))
            * &quantum_binom(table, h + i, t + s);
        if i < 0 && !summand.is_zero() {
            negative_nonzero.push(i);
        }
        rhs += &summand;
    }
    let mut report = VerificationReport::new(
        "quantum-shifted",
        params(&[("h", h), ("s", s), ("t", t), ("b", b), ("c", c)]),
        lhs.canonical_string(),
        rhs.canonical_string(),
    )
    .with_note(format!("i enumerated over [{i_lo}, {i_hi}]"));
    report = if negative_nonzero.is_empty() {
        report.with_note("no nonzero summand at i < 0".to_string())
    } else {
        report.with_note(format!(
            "nonzero summands at negative indices i = {negative_nonzero:?}; the displayed i >= 0 range would drop them"
        ))
    };
    Ok(report)
}

/// Verifies the bridge between the balanced and Gaussian binomials,
///
/// ```text
/// q^(k(n-k)) * {n // k} = [n // k] with q -> q^2
/// ```
///
/// as an exact Laurent identity.  The left side goes through the factorial
/// quotient `{n}!/({k}!{n-k}!)` when `0 <= k <= n` (so the two sides come
/// from genuinely different computations); out-of-range `(n, k)` fall back
/// to the zero convention on both sides.
pub fn verify_bridge(table: &mut QBinomTable, n: i64, k: i64) -> Result<VerificationReport> {
    let lhs = if (0..=n).contains(&k) {
        let num = quantum_factorial(n as u64);
        let den = &quantum_factorial(k as u64) * &quantum_factorial((n - k) as u64);
        num.exact_div(&den)?.shift(k * (n - k))
    } else {
        LaurentPoly::zero()
    };
    let rhs = table
        .binom(n, k)
        .substitute_power(2)
        .expect("q -> q^2 is defined on every Laurent polynomial");
    Ok(VerificationReport::new(
        "quantum-bridge",
        params(&[("n", n), ("k", k)]),
        lhs.canonical_string(),
        rhs.canonical_string(),
    ))
}
