//! Exhaustive verifiers for the subspace-counting lemmas.
//!
//! Each verifier counts a family of subspaces by brute-force enumeration and
//! compares against the closed-form product of a power of `p` and Gaussian
//! binomials evaluated at `q = p`.  The report's `lhs` is always the measured
//! count and `rhs` the formula value, so a failing lemma is immediately
//! visible in the transcript.
//!
//! Covered counts, for subspaces of `F_p^n`:
//!
//! * intermediate spaces: `U <= X <= V` of fixed dimension,
//! * complements of `U` in `V`,
//! * spaces of dimension `s` meeting a fixed `U` trivially,
//! * extensions `E >= U` of fixed dimension with `E ∩ W = U`,
//! * the Vandermonde cell decomposition: `m`-spaces bucketed by the
//!   dimension of their intersection with a fixed space.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Budget, PrimeField, Subspace};
use crate::error::{Error, Result};
use crate::qgauss::q_binom;
use crate::report::VerificationReport;

/// `[n // k]` evaluated at `q = p`, as an integer.
pub(crate) fn binom_at(n: i64, k: i64, p: u64) -> BigInt {
    let value = q_binom(n, k)
        .eval_int(p as i64)
        .expect("p >= 2 is not a zero point");
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// `p^e` as a `BigInt` (`e >= 0`).
pub(crate) fn p_pow(p: u64, e: i64) -> BigInt {
    debug_assert!(e >= 0);
    BigInt::from(p).pow(e as u32)
}

fn count_report(
    suite: &str,
    params: Vec<(String, i64)>,
    measured: usize,
    formula: BigInt,
) -> VerificationReport {
    VerificationReport::new(
        suite,
        params,
        format!("count={measured}"),
        format!("count={formula}"),
    )
}

/// Counts all `k`-dimensional subspaces of `F_p^n` by direct enumeration
/// and compares with the Gaussian coefficient `[n // k]` at `q = p`.
pub fn count_subspaces(
    field: PrimeField,
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<VerificationReport> {
    let measured = super::enumerate_subspaces(field, n, k, budget)?.len();
    let formula = binom_at(n as i64, k as i64, field.p());
    Ok(count_report(
        "subspaces",
        crate::report::params(&[("n", n as i64), ("k", k as i64), ("p", field.p() as i64)]),
        measured,
        formula,
    ))
}

/// Counts the `l`-dimensional spaces `X` with `U <= X <= V` and compares
/// with `[dim V - dim U // l - dim U]` at `q = p`.
pub fn count_intermediate(
    u: &Subspace,
    v: &Subspace,
    l: usize,
    budget: &Budget,
) -> Result<VerificationReport> {
    if !v.contains(u)? {
        return Err(Error::Precondition(
            "count_intermediate: U must lie inside V".into(),
        ));
    }
    if l < u.dim() || l > v.dim() {
        return Err(Error::Precondition(format!(
            "count_intermediate: need dim U <= l <= dim V, got {} <= {l} <= {}",
            u.dim(),
            v.dim()
        )));
    }
    let measured = v
        .subspaces(l, budget)?
        .iter()
        .filter(|x| x.contains(u).expect("same ambient"))
        .count();
    let formula = binom_at(
        (v.dim() - u.dim()) as i64,
        (l - u.dim()) as i64,
        u.field().p(),
    );
    Ok(count_report(
        "count-intermediate",
        crate::report::params(&[
            ("n", v.dim() as i64),
            ("k", u.dim() as i64),
            ("l", l as i64),
            ("p", u.field().p() as i64),
        ]),
        measured,
        formula,
    ))
}

/// Counts the complements of `U` in `V` and compares with `p^(k(n-k))`,
/// `k = dim U`, `n = dim V`.
pub fn count_complements(
    u: &Subspace,
    v: &Subspace,
    budget: &Budget,
) -> Result<VerificationReport> {
    if !v.contains(u)? {
        return Err(Error::Precondition(
            "count_complements: U must lie inside V".into(),
        ));
    }
    let (n, k) = (v.dim(), u.dim());
    let measured = v
        .subspaces(n - k, budget)?
        .iter()
        .filter(|w| u.intersect(w).expect("same ambient").dim() == 0)
        .count();
    let formula = p_pow(u.field().p(), (k * (n - k)) as i64);
    Ok(count_report(
        "count-complements",
        crate::report::params(&[
            ("n", n as i64),
            ("k", k as i64),
            ("p", u.field().p() as i64),
        ]),
        measured,
        formula,
    ))
}

/// Counts the `s`-dimensional subspaces of the full ambient space meeting
/// `U` trivially, and compares with `p^(r*s) * [n-r // s]` at `q = p`,
/// `r = dim U`, `n` the ambient dimension.
///
/// The exponent is `r*s`: it is pinned here by the brute-force count (see
/// the `disjoint_exponent_is_rs` test for an instance where the otherwise
/// plausible exponent `r(n-r)` fails).
pub fn count_disjoint(u: &Subspace, s: usize, budget: &Budget) -> Result<VerificationReport> {
    let n = u.ambient();
    let r = u.dim();
    if s > n {
        return Err(Error::Precondition(format!(
            "count_disjoint: s = {s} exceeds n = {n}"
        )));
    }
    let field = u.field();
    let measured = super::enumerate_subspaces(field, n, s, budget)?
        .iter()
        .filter(|w| u.intersect(w).expect("same ambient").dim() == 0)
        .count();
    let formula = p_pow(field.p(), (r * s) as i64) * binom_at((n - r) as i64, s as i64, field.p());
    Ok(count_report(
        "count-disjoint",
        crate::report::params(&[
            ("n", n as i64),
            ("r", r as i64),
            ("s", s as i64),
            ("p", field.p() as i64),
        ]),
        measured,
        formula,
    ))
}

/// Counts the `m`-dimensional spaces `E` of the full ambient space with
/// `E >= U` and `E ∩ W = U`, and compares with
/// `p^((m-k)(l-k)) * [n-l // m-k]` at `q = p`, `k = dim U`, `l = dim W`.
pub fn count_extensions(
    u: &Subspace,
    w: &Subspace,
    m: usize,
    budget: &Budget,
) -> Result<VerificationReport> {
    if !w.contains(u)? {
        return Err(Error::Precondition(
            "count_extensions: U must lie inside W".into(),
        ));
    }
    let n = u.ambient();
    if m < u.dim() || m > n {
        return Err(Error::Precondition(format!(
            "count_extensions: need dim U <= m <= n, got {} <= {m} <= {n}",
            u.dim()
        )));
    }
    let field = u.field();
    let (k, l) = (u.dim(), w.dim());
    let measured = super::enumerate_subspaces(field, n, m, budget)?
        .iter()
        .filter(|e| {
            e.contains(u).expect("same ambient") && e.intersect(w).expect("same ambient") == *u
        })
        .count();
    let formula = p_pow(field.p(), ((m - k) * (l - k)) as i64)
        * binom_at((n - l) as i64, (m - k) as i64, field.p());
    Ok(count_report(
        "count-extensions",
        crate::report::params(&[
            ("n", n as i64),
            ("k", k as i64),
            ("l", l as i64),
            ("m", m as i64),
            ("p", field.p() as i64),
        ]),
        measured,
        formula,
    ))
}

/// The Vandermonde cell decomposition in `F_p^n`: fix the canonical
/// `(n-l)`-dimensional space `M`, bucket all `m`-dimensional spaces `W` by
/// `k = m - dim(W ∩ M)`, and compare each bucket with the summand
/// `p^(k(n-l-m+k)) * [l // k] * [n-l // m-k]` — so the buckets sum to
/// `[n // m]` exactly as the convolution identity predicts.
pub fn verify_vandermonde_count(
    field: PrimeField,
    n: usize,
    m: usize,
    l: usize,
    budget: &Budget,
) -> Result<VerificationReport> {
    if m > n || l > n {
        return Err(Error::Precondition(format!(
            "verify_vandermonde_count: need m, l <= n, got m={m} l={l} n={n}"
        )));
    }
    let full = Subspace::full(field, n);
    let fixed = full.fixed_subspace(n - l, budget)?;
    let mut measured = alloc::vec![0usize; m + 1];
    let spaces = super::enumerate_subspaces(field, n, m, budget)?;
    let total = spaces.len();
    for w in &spaces {
        let inter = w.intersect(&fixed)?.dim();
        // k = m - dim(W ∩ M); always within 0..=m.
        measured[m - inter] += 1;
    }
    let p = field.p();
    let formula: Vec<BigInt> = (0..=m as i64)
        .map(|k| {
            let exp = k * (n as i64 - l as i64 - m as i64 + k);
            if exp < 0 {
                // Whenever the exponent is negative one binomial vanishes.
                debug_assert_eq!(
                    binom_at(l as i64, k, p) * binom_at((n - l) as i64, m as i64 - k, p),
                    BigInt::from(0)
                );
                BigInt::from(0)
            } else {
                p_pow(p, exp) * binom_at(l as i64, k, p) * binom_at((n - l) as i64, m as i64 - k, p)
            }
        })
        .collect();
    let formula_total: BigInt = formula.iter().sum();
    let render =
        |counts: Vec<String>, total: String| format!("total={total}; cells=[{}]", counts.join(","));
    let lhs = render(
        measured
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{k}:{c}"))
            .collect(),
        format!("{total}"),
    );
    let rhs_total = binom_at(n as i64, m as i64, p);
    debug_assert_eq!(formula_total, rhs_total);
    let rhs = render(
        formula
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{k}:{c}"))
            .collect(),
        format!("{rhs_total}"),
    );
    Ok(VerificationReport::new(
        "vandermonde-count",
        crate::report::params(&[
            ("n", n as i64),
            ("m", m as i64),
            ("l", l as i64),
            ("p", p as i64),
        ]),
        lhs,
        rhs,
    )
    .with_note(format!("fixed (n-l)-space: {}", fixed.render())))
}
