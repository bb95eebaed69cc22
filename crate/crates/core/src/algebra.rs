//! PBW straightening for Lusztig's integral form of quantum sl2.
//!
//! The integral form is generated by divided powers `E^(n) = E^n / {n}!`,
//! `F^(n) = F^n / {n}!`, the group-likes `K^(+-1)`, and the Cartan symbols
//! `[K; c // t]`.  Any word in these generators can be rewritten into the
//! PBW basis `F^(a) [K; c // t] E^(b)` (with the Cartan part in basis `B`)
//! using five rewrite rules:
//!
//! ```text
//!   E^(n) E^(m)     = {n+m // n} E^(n+m)
//!   F^(n) F^(m)     = {n+m // n} F^(n+m)
//!   [K;c//t] E^(n)  = E^(n) [K; c+2n // t]
//!   [K;c//t] F^(n)  = F^(n) [K; c-2n // t]
//!   E^(n) F^(m)     = sum_(t=0)^(min(n,m)) F^(m-t) [K; 2t-m-n // t] E^(n-t)
//! ```
//!
//! plus the `K`-commutations `E^(n) K^a = q^(-2an) K^a E^(n)` and
//! `K^a F^(m) = q^(-2am) F^(m) K^a`.  (The last rule's summation bound
//! `t <= min(n, m)` keeps every divided-power exponent non-negative, so the
//! convention `E^(r) = 0` for `r < 0` is never exercised.)
//!
//! [`straighten`] applies these rules to a fixpoint under a configurable
//! [`Strategy`] (termination: each use of the fifth rule strictly decreases
//! the exponent-weighted count of E-before-F inversions, commutations
//! decrease a displacement measure at equal inversions, and merges shorten
//! the word), then collapses the commuting middle segment with the Cartan
//! algebra's closed-form product.
//!
//! The referee is [`weyl_action_word`] / [`weyl_action_element`]: the exact
//! action on the `(N+1)`-dimensional highest-weight module.  Those action
//! formulas are *not* taken on faith — the unit tests first establish all
//! five relations above as matrix identities (oracle soundness) before the
//! oracle is allowed to judge the straightening engine.  Agreement on
//! finitely many modules is necessary but not proven sufficient for
//! equality, so [`confluence_check`] and the Cartan oracle provide
//! independent evidence.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cartan::{normal_form, specialize, CartanElement, LusztigSymbol};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::quantum::{quantum_factorial, quantum_int};
use crate::ratfunc::RatFunc;
use crate::report::VerificationReport;

/// One generator of the integral form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    /// The divided power `E^(n)`, `n >= 1`.
    DividedE(u32),
    /// The divided power `F^(n)`, `n >= 1`.
    DividedF(u32),
    /// `K` (`+1`) or `K^-1` (`-1`).
    KPower(i8),
    /// A Cartan symbol `[K; c // t]`.
    Cartan(LusztigSymbol),
}

/// A word in the generators — the input language of the straightener.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Word {
    factors: Vec<Generator>,
}

impl Word {
    /// The empty word (the unit).
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word, validating that divided powers have exponent >= 1 and
    /// K-powers have sign +-1.
    pub fn new(factors: Vec<Generator>) -> Result<Self> {
        for g in &factors {
            match g {
                Generator::DividedE(0) | Generator::DividedF(0) => {
                    return Err(Error::Precondition(
                        "divided powers require exponent >= 1".into(),
                    ))
                }
                Generator::KPower(s) if *s != 1 && *s != -1 => {
                    return Err(Error::Precondition(format!(
                        "K-power sign must be +1 or -1, got {s}"
                    )))
                }
                _ => {}
            }
        }
        Ok(Word { factors })
    }

    /// The factor sequence.
    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// A PBW basis monomial `F^(a) [K; c // t] E^(b)` with the Cartan symbol in
/// basis `B`.  The unit Cartan part is encoded as the symbol `(0, 0)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PBWMonomial {
    /// The F-exponent `a >= 0` (`a = 0` means no F factor).
    pub a: u32,
    /// The Cartan basis symbol.
    pub sym: LusztigSymbol,
    /// The E-exponent `b >= 0`.
    pub b: u32,
}

impl PBWMonomial {
    /// Builds a monomial; panics on a non-basis Cartan symbol.
    pub fn new(a: u32, sym: LusztigSymbol, b: u32) -> Self {
        assert!(sym.is_basis(), "{sym:?} is not a basis symbol");
        PBWMonomial { a, sym, b }
    }

    /// The unit monomial.
    pub fn unit() -> Self {
        PBWMonomial::new(0, LusztigSymbol::new(0, 0), 0)
    }

    /// Re-encodes the monomial as a word (trivial factors omitted).
    pub fn to_word(&self) -> Word {
        let mut factors = Vec::new();
        if self.a > 0 {
            factors.push(Generator::DividedF(self.a));
        }
        if self.sym.t > 0 {
            factors.push(Generator::Cartan(self.sym));
        }
        if self.b > 0 {
            factors.push(Generator::DividedE(self.b));
        }
        Word { factors }
    }
}

/// An element of the integral form: a `Z[q, q^-1]`-linear combination of PBW
/// monomials, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<PBWMonomial, LaurentPoly>,
}

impl AlgebraElement {
    /// The zero element.
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    /// The unit element.
    pub fn one() -> Self {
        AlgebraElement::from_monomial(PBWMonomial::unit(), LaurentPoly::one())
    }

    /// A single monomial with the given coefficient.
    pub fn from_monomial(mono: PBWMonomial, coeff: LaurentPoly) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(mono, coeff);
        e
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of a monomial (zero when absent).
    pub fn coeff(&self, mono: PBWMonomial) -> LaurentPoly {
        self.terms
            .get(&mono)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Iterates `(monomial, coefficient)` pairs in monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (&PBWMonomial, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, mono: PBWMonomial, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    /// Sum of two elements.
    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (mono, coeff) in &other.terms {
            out.add_term(*mono, coeff.clone());
        }
        out
    }

    /// Difference of two elements.
    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    /// Multiplication by a `Z[q, q^-1]` scalar.
    pub fn scale(&self, scalar: &LaurentPoly) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (mono, coeff) in &self.terms {
            out.add_term(*mono, coeff * scalar);
        }
        out
    }

    /// Re-encodes the element as `(word, coefficient)` pairs — the inverse
    /// direction of straightening, used by the projection property.
    pub fn to_words(&self) -> Vec<(Word, LaurentPoly)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.to_word(), c.clone()))
            .collect()
    }
}

/// Redex-selection strategy for the rewriting loop.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// Leftmost redex, except that E–F resolutions anywhere in the word take
    /// priority over merges and commutations (the default).
    EfPriorityLeftmost,
    /// Plain leftmost redex.
    Leftmost,
    /// Plain rightmost redex.
    Rightmost,
}

/// Whether the adjacent pair `(a, b)` is reducible.
fn is_redex(a: &Generator, b: &Generator) -> bool {
    use Generator::*;
    matches!(
        (a, b),
        (DividedE(_), DividedE(_))
            | (DividedF(_), DividedF(_))
            | (DividedE(_), DividedF(_))
            | (DividedE(_), Cartan(_))
            | (DividedE(_), KPower(_))
            | (Cartan(_), DividedF(_))
            | (KPower(_), DividedF(_))
    )
}

fn is_ef(a: &Generator, b: &Generator) -> bool {
    matches!((a, b), (Generator::DividedE(_), Generator::DividedF(_)))
}

fn find_redex(factors: &[Generator], strategy: Strategy) -> Option<usize> {
    let redex_at = |i: usize| is_redex(&factors[i], &factors[i + 1]);
    let positions = 0..factors.len().saturating_sub(1);
    match strategy {
        Strategy::EfPriorityLeftmost => positions
            .clone()
            .find(|&i| is_ef(&factors[i], &factors[i + 1]))
            .or_else(|| positions.clone().find(|&i| redex_at(i))),
        Strategy::Leftmost => positions.clone().find(|&i| redex_at(i)),
        Strategy::Rightmost => positions.clone().rev().find(|&i| redex_at(i)),
    }
}

/// Rewrites the redex at position `i`, producing the replacement branches as
/// `(new factor sequence, scalar)` pairs.
fn apply_rule(factors: &[Generator], i: usize) -> Vec<(Vec<Generator>, LaurentPoly)> {
    use Generator::*;
    let splice = |replacement: Vec<Generator>| -> Vec<Generator> {
        let mut out = Vec::with_capacity(factors.len() + replacement.len());
        out.extend_from_slice(&factors[..i]);
        out.extend(replacement);
        out.extend_from_slice(&factors[i + 2..]);
        out
    };
    match (factors[i], factors[i + 1]) {
        (DividedE(n), DividedE(m)) => vec![(
            splice(vec![DividedE(n + m)]),
            crate::quantum::quantum_binom_once((n + m) as i64, n as i64),
        )],
        (DividedF(n), DividedF(m)) => vec![(
            splice(vec![DividedF(n + m)]),
            crate::quantum::quantum_binom_once((n + m) as i64, n as i64),
        )],
        (DividedE(n), DividedF(m)) => (0..=n.min(m))
            .map(|t| {
                let mut replacement = Vec::new();
                if m - t > 0 {
                    replacement.push(DividedF(m - t));
                }
                if t > 0 {
                    replacement.push(Cartan(LusztigSymbol::new(
                        2 * t as i64 - m as i64 - n as i64,
                        t,
                    )));
                }
                if n - t > 0 {
                    replacement.push(DividedE(n - t));
                }
                (splice(replacement), LaurentPoly::one())
            })
            .collect(),
        (DividedE(n), Cartan(sym)) => vec![(
            splice(vec![
                Cartan(LusztigSymbol::new(sym.c - 2 * n as i64, sym.t)),
                DividedE(n),
            ]),
            LaurentPoly::one(),
        )],
        (DividedE(n), KPower(a)) => vec![(
            splice(vec![KPower(a), DividedE(n)]),
            LaurentPoly::monomial(-2 * a as i64 * n as i64, BigInt::from(1)),
        )],
        (Cartan(sym), DividedF(m)) => vec![(
            splice(vec![
                DividedF(m),
                Cartan(LusztigSymbol::new(sym.c - 2 * m as i64, sym.t)),
            ]),
            LaurentPoly::one(),
        )],
        (KPower(a), DividedF(m)) => vec![(
            splice(vec![DividedF(m), KPower(a)]),
            LaurentPoly::monomial(-2 * a as i64 * m as i64, BigInt::from(1)),
        )],
        other => unreachable!("not a redex: {other:?}"),
    }
}

/// Collapses an irreducible word — shape `F^(a) (Cartan | K^(+-1))* E^(b)` —
/// into PBW monomials by multiplying out the commuting middle segment in the
/// Cartan algebra.
fn collapse(factors: &[Generator], coeff: &LaurentPoly, out: &mut AlgebraElement) {
    use Generator::*;
    let mut a = 0u32;
    let mut b = 0u32;
    let mut middle = CartanElement::one();
    for (idx, g) in factors.iter().enumerate() {
        match g {
            DividedF(n) => {
                debug_assert_eq!(idx, 0, "irreducible words have F first");
                a = *n;
            }
            DividedE(n) => {
                debug_assert_eq!(idx, factors.len() - 1, "irreducible words have E last");
                b = *n;
            }
            Cartan(sym) => middle = middle.product(&normal_form(*sym)),
            KPower(s) => middle = middle.k_multiply(*s as i32),
        }
    }
    for (sym, c) in middle.iter() {
        out.add_term(PBWMonomial::new(a, *sym, b), c * coeff);
    }
}

/// Straightens a word into the PBW basis under the default strategy.
pub fn straighten(w: &Word) -> AlgebraElement {
    straighten_with(w, Strategy::EfPriorityLeftmost)
}

/// Straightens a word under an explicit redex-selection strategy.  All
/// strategies agree on the result ([`confluence_check`]); they differ only
/// in the intermediate work.
pub fn straighten_with(w: &Word, strategy: Strategy) -> AlgebraElement {
    let mut result = AlgebraElement::zero();
    let mut pending: Vec<(Vec<Generator>, LaurentPoly)> =
        vec![(w.factors.clone(), LaurentPoly::one())];
    while let Some((factors, coeff)) = pending.pop() {
        match find_redex(&factors, strategy) {
            None => collapse(&factors, &coeff, &mut result),
            Some(i) => {
                for (replacement, scalar) in apply_rule(&factors, i) {
                    pending.push((replacement, &coeff * &scalar));
                }
            }
        }
    }
    result
}

/// A matrix over exact rational functions, row-major; `m[row][col]` is the
/// coefficient of the output basis vector `v_row` in the image of `v_col`.
pub type RatMatrix = Vec<Vec<RatFunc>>;

/// The zero matrix of size `n x n`.
fn mat_zero(n: usize) -> RatMatrix {
    vec![vec![RatFunc::zero(); n]; n]
}

/// The identity matrix of size `n x n`.
pub fn mat_identity(n: usize) -> RatMatrix {
    let mut m = mat_zero(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = RatFunc::one();
    }
    m
}

/// Matrix product.
pub fn mat_mul(x: &RatMatrix, y: &RatMatrix) -> RatMatrix {
    let n = x.len();
    let mut out = mat_zero(n);
    for r in 0..n {
        for c in 0..n {
            let mut acc = RatFunc::zero();
            for (k, yk) in y.iter().enumerate() {
                if !x[r][k].is_zero() && !yk[c].is_zero() {
                    acc = acc + &x[r][k] * &yk[c];
                }
            }
            out[r][c] = acc;
        }
    }
    out
}

/// Scales a matrix by a rational function.
pub fn mat_scale(x: &RatMatrix, s: &RatFunc) -> RatMatrix {
    x.iter()
        .map(|row| row.iter().map(|e| e * s).collect())
        .collect()
}

/// Matrix sum.
pub fn mat_add(x: &RatMatrix, y: &RatMatrix) -> RatMatrix {
    x.iter()
        .zip(y)
        .map(|(rx, ry)| rx.iter().zip(ry).map(|(a, b)| a + b).collect())
        .collect()
}

/// Canonical serialization of a matrix (rows joined by `;`, entries by `,`).
pub fn mat_canonical_string(x: &RatMatrix) -> String {
    let rows: Vec<String> = x
        .iter()
        .map(|row| {
            let entries: Vec<String> = row.iter().map(RatFunc::canonical_string).collect();
            entries.join(",")
        })
        .collect();
    rows.join(";")
}

/// The matrix of one generator on the Weyl module `V(N)` with basis
/// `v_0, ..., v_N`:
///
/// ```text
///   K v_k        = q^(N-2k) v_k
///   E v_k        = {N-k+1} v_(k-1)      F v_k = {k+1} v_(k+1)
///   [K;c//t] v_k = specialization of the symbol at K = q^(N-2k) times v_k
/// ```
///
/// Divided powers are computed structurally: the matrix power of the single
/// step divided exactly by the quantum factorial `{n}!` — not from a closed
/// binomial formula, so the oracle stays independent of the identities it
/// judges.
pub fn weyl_matrix(g: &Generator, n_weight: u32) -> RatMatrix {
    let dim = n_weight as usize + 1;
    let nw = n_weight as i64;
    match g {
        Generator::KPower(s) => {
            let mut m = mat_zero(dim);
            for (k, row) in m.iter_mut().enumerate() {
                let exp = (*s as i64) * (nw - 2 * k as i64);
                row[k] = RatFunc::from_laurent(&LaurentPoly::monomial(exp, BigInt::from(1)));
            }
            m
        }
        Generator::Cartan(sym) => {
            let mut m = mat_zero(dim);
            for (k, row) in m.iter_mut().enumerate() {
                row[k] = RatFunc::from_laurent(&specialize(*sym, nw - 2 * k as i64));
            }
            m
        }
        Generator::DividedE(n) => {
            let mut single = mat_zero(dim);
            for k in 1..dim {
                single[k - 1][k] = RatFunc::from_laurent(&quantum_int((nw - k as i64 + 1) as u64));
            }
            divided_power(&single, *n, dim)
        }
        Generator::DividedF(n) => {
            let mut single = mat_zero(dim);
            for k in 0..dim - 1 {
                single[k + 1][k] = RatFunc::from_laurent(&quantum_int(k as u64 + 1));
            }
            divided_power(&single, *n, dim)
        }
    }
}

/// `m^n / {n}!`.
fn divided_power(m: &RatMatrix, n: u32, dim: usize) -> RatMatrix {
    let mut power = mat_identity(dim);
    for _ in 0..n {
        power = mat_mul(&power, m);
    }
    let fact = RatFunc::from_laurent(&quantum_factorial(n as u64));
    let inv = fact.recip().expect("quantum factorials are nonzero");
    mat_scale(&power, &inv)
}

/// The action of a word on `V(N)`: the rightmost factor acts first, so the
/// matrix is the left-to-right product of the factor matrices.
pub fn weyl_action_word(w: &Word, n_weight: u32) -> RatMatrix {
    let mut m = mat_identity(n_weight as usize + 1);
    for g in &w.factors {
        m = mat_mul(&m, &weyl_matrix(g, n_weight));
    }
    m
}

/// The action of a straightened element on `V(N)`.
pub fn weyl_action_element(x: &AlgebraElement, n_weight: u32) -> RatMatrix {
    let mut acc = mat_zero(n_weight as usize + 1);
    for (mono, coeff) in x.iter() {
        let m = weyl_action_word(&mono.to_word(), n_weight);
        acc = mat_add(&acc, &mat_scale(&m, &RatFunc::from_laurent(coeff)));
    }
    acc
}

/// Verifies that a word and its straightened form act identically on the
/// Weyl modules `V(N)` for every `N` in `ns`.  The report's two sides are
/// the canonical per-`N` matrix serializations of the word action (lhs) and
/// the straightened action (rhs).
pub fn verify_straighten(w: &Word, ns: &[u32]) -> VerificationReport {
    let straightened = straighten(w);
    let mut lhs_parts = Vec::new();
    let mut rhs_parts = Vec::new();
    for &n in ns {
        lhs_parts.push(format!(
            "N={n}:{}",
            mat_canonical_string(&weyl_action_word(w, n))
        ));
        rhs_parts.push(format!(
            "N={n}:{}",
            mat_canonical_string(&weyl_action_element(&straightened, n))
        ));
    }
    VerificationReport::new(
        "straighten",
        crate::report::params(&[
            ("len", w.len() as i64),
            ("terms", straightened.term_count() as i64),
        ]),
        lhs_parts.join(" | "),
        rhs_parts.join(" | "),
    )
    .with_note(format!("word: {:?}", w.factors))
}

/// Straightens `w` under every given strategy and reports whether all
/// results coincide (well-definedness of the presentation).
pub fn confluence_check(w: &Word, strategies: &[Strategy]) -> bool {
    let mut results = strategies.iter().map(|s| straighten_with(w, *s));
    match results.next() {
        None => true,
        Some(first) => results.all(|r| r == first),
    }
}

/// Soundness check for the Weyl-module oracle itself on `V(N)`: every
/// rewrite rule the straightener uses — the divided-power merges, the
/// Cartan shifts past `E` and `F`, the E–F resolution sum, and the
/// `K`-commutations — must hold as a matrix identity, along with the
/// defining relation `EF - FE = (K - K^-1)/(q - q^-1)` and `K K^-1 = 1`.
/// Generator exponents and Cartan parameters range over a small fixed box.
/// Run this before trusting [`verify_straighten`]'s verdicts.
pub fn verify_weyl_relations(n_weight: u32) -> VerificationReport {
    let dim = n_weight as usize + 1;
    let mut failures: Vec<String> = Vec::new();
    let mut check = |name: String, ok: bool| {
        if !ok {
            failures.push(name);
        }
    };
    use Generator::*;
    for n in 1..=2u32 {
        for m in 1..=2u32 {
            let scalar = RatFunc::from_laurent(&crate::quantum::quantum_binom_once(
                (n + m) as i64,
                n as i64,
            ));
            for (label, lo, hi, merged) in [
                ("EE", DividedE(n), DividedE(m), DividedE(n + m)),
                ("FF", DividedF(n), DividedF(m), DividedF(n + m)),
            ] {
                let lhs = mat_mul(&weyl_matrix(&lo, n_weight), &weyl_matrix(&hi, n_weight));
                let rhs = mat_scale(&weyl_matrix(&merged, n_weight), &scalar);
                check(format!("{label}(n={n},m={m})"), lhs == rhs);
            }
        }
    }
    for c in -2..=2i64 {
        for t in 0..=2u32 {
            for n in 1..=2u32 {
                let cm = weyl_matrix(&Cartan(LusztigSymbol::new(c, t)), n_weight);
                let en = weyl_matrix(&DividedE(n), n_weight);
                let up = weyl_matrix(&Cartan(LusztigSymbol::new(c + 2 * n as i64, t)), n_weight);
                check(
                    format!("CE(c={c},t={t},n={n})"),
                    mat_mul(&cm, &en) == mat_mul(&en, &up),
                );
                let fm = weyl_matrix(&DividedF(n), n_weight);
                let down = weyl_matrix(&Cartan(LusztigSymbol::new(c - 2 * n as i64, t)), n_weight);
                check(
                    format!("CF(c={c},t={t},n={n})"),
                    mat_mul(&cm, &fm) == mat_mul(&fm, &down),
                );
            }
        }
    }
    for n in 1..=3u32 {
        for m in 1..=3u32 {
            let lhs = mat_mul(
                &weyl_matrix(&DividedE(n), n_weight),
                &weyl_matrix(&DividedF(m), n_weight),
            );
            let mut rhs = mat_zero(dim);
            for t in 0..=n.min(m) {
                let mut part = mat_identity(dim);
                if m - t > 0 {
                    part = mat_mul(&part, &weyl_matrix(&DividedF(m - t), n_weight));
                }
                part = mat_mul(
                    &part,
                    &weyl_matrix(
                        &Cartan(LusztigSymbol::new(2 * t as i64 - m as i64 - n as i64, t)),
                        n_weight,
                    ),
                );
                if n - t > 0 {
                    part = mat_mul(&part, &weyl_matrix(&DividedE(n - t), n_weight));
                }
                rhs = mat_add(&rhs, &part);
            }
            check(format!("EF(n={n},m={m})"), lhs == rhs);
        }
    }
    for a in [1i8, -1] {
        for n in 1..=2u32 {
            let scalar = RatFunc::from_laurent(&LaurentPoly::monomial(
                -2 * a as i64 * n as i64,
                BigInt::from(1),
            ));
            let ka = weyl_matrix(&KPower(a), n_weight);
            let en = weyl_matrix(&DividedE(n), n_weight);
            check(
                format!("EK(a={a},n={n})"),
                mat_mul(&en, &ka) == mat_scale(&mat_mul(&ka, &en), &scalar),
            );
            let fm = weyl_matrix(&DividedF(n), n_weight);
            check(
                format!("KF(a={a},n={n})"),
                mat_mul(&ka, &fm) == mat_scale(&mat_mul(&fm, &ka), &scalar),
            );
        }
    }
    {
        let me = weyl_matrix(&DividedE(1), n_weight);
        let mf = weyl_matrix(&DividedF(1), n_weight);
        let commutator = mat_add(
            &mat_mul(&me, &mf),
            &mat_scale(&mat_mul(&mf, &me), &-RatFunc::one()),
        );
        let mk = weyl_matrix(&KPower(1), n_weight);
        let mkinv = weyl_matrix(&KPower(-1), n_weight);
        let denom = RatFunc::from_laurent(&LaurentPoly::from_terms(&[(1, 1), (-1, -1)]));
        let rhs = mat_scale(
            &mat_add(&mk, &mat_scale(&mkinv, &-RatFunc::one())),
            &denom.recip().expect("q - q^-1 is nonzero"),
        );
        check("defining".into(), commutator == rhs);
        check("KKinv".into(), mat_mul(&mk, &mkinv) == mat_identity(dim));
    }
    let lhs = if failures.is_empty() {
        "all relations hold".into()
    } else {
        format!("failed: {}", failures.join(", "))
    };
    VerificationReport::new(
        "weyl-relations",
        crate::report::params(&[("N", n_weight as i64)]),
        lhs,
        "all relations hold".into(),
    )
    .with_note("merges, Cartan shifts, E-F sum, K-commutations, defining relation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::quantum_binom_once;

    fn e(n: u32) -> Generator {
        Generator::DividedE(n)
    }
    fn f(n: u32) -> Generator {
        Generator::DividedF(n)
    }
    fn k(s: i8) -> Generator {
        Generator::KPower(s)
    }
    fn cart(c: i64, t: u32) -> Generator {
        Generator::Cartan(LusztigSymbol::new(c, t))
    }
    fn word(factors: &[Generator]) -> Word {
        Word::new(factors.to_vec()).unwrap()
    }
    fn rf(p: &LaurentPoly) -> RatFunc {
        RatFunc::from_laurent(p)
    }
    fn mono(a: u32, c: i64, t: u32, b: u32) -> PBWMonomial {
        PBWMonomial::new(a, LusztigSymbol::new(c, t), b)
    }

    const ALL_STRATEGIES: [Strategy; 3] = [
        Strategy::EfPriorityLeftmost,
        Strategy::Leftmost,
        Strategy::Rightmost,
    ];

    // ============================================================
    // Oracle soundness: the five relations hold as matrix identities
    // BEFORE the oracle judges the straightening engine.
    // ============================================================

    #[test]
    fn oracle_divided_power_entries_are_quantum_binomials() {
        for n_weight in 0..=5u32 {
            let dim = n_weight as usize + 1;
            for r in 1..=3u32 {
                let me = weyl_matrix(&e(r), n_weight);
                let mf = weyl_matrix(&f(r), n_weight);
                for col in 0..dim {
                    for row in 0..dim {
                        // E^(r) v_k = {N-k+r // r} v_(k-r);
                        // F^(r) v_k = {k+r // r} v_(k+r).
                        let expect_e = if col >= r as usize && row == col - r as usize {
                            quantum_binom_once(n_weight as i64 - col as i64 + r as i64, r as i64)
                        } else {
                            LaurentPoly::zero()
                        };
                        let expect_f = if row == col + r as usize && row < dim {
                            quantum_binom_once(col as i64 + r as i64, r as i64)
                        } else {
                            LaurentPoly::zero()
                        };
                        assert_eq!(me[row][col], rf(&expect_e), "E^({r}) N={n_weight}");
                        assert_eq!(mf[row][col], rf(&expect_f), "F^({r}) N={n_weight}");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_defining_relation_ef_minus_fe() {
        // (EF - FE) v_k = {N-2k} v_k = (K - K^-1)/(q - q^-1) v_k.
        for n_weight in 0..=5u32 {
            let me = weyl_matrix(&e(1), n_weight);
            let mf = weyl_matrix(&f(1), n_weight);
            let commutator = mat_add(
                &mat_mul(&me, &mf),
                &mat_scale(&mat_mul(&mf, &me), &-RatFunc::one()),
            );
            let mk = weyl_matrix(&k(1), n_weight);
            let mkinv = weyl_matrix(&k(-1), n_weight);
            let denom = rf(&LaurentPoly::from_terms(&[(1, 1), (-1, -1)]));
            let rhs = mat_scale(
                &mat_add(&mk, &mat_scale(&mkinv, &-RatFunc::one())),
                &denom.recip().unwrap(),
            );
            assert_eq!(commutator, rhs, "N={n_weight}");
        }
    }

    #[test]
    fn oracle_k_is_diagonal_and_invertible() {
        for n_weight in 0..=5u32 {
            let dim = n_weight as usize + 1;
            let mk = weyl_matrix(&k(1), n_weight);
            for (row_idx, row) in mk.iter().enumerate() {
                for (col_idx, entry) in row.iter().enumerate() {
                    if row_idx == col_idx {
                        let exp = n_weight as i64 - 2 * row_idx as i64;
                        assert_eq!(*entry, rf(&LaurentPoly::monomial(exp, BigInt::from(1))));
                    } else {
                        assert!(entry.is_zero());
                    }
                }
            }
            let mkinv = weyl_matrix(&k(-1), n_weight);
            assert_eq!(mat_mul(&mk, &mkinv), mat_identity(dim));
        }
    }

    /// Relations: E-merge, F-merge, Cartan past E, Cartan past F, and the
    /// E–F straightening sum — all as matrix identities for N <= 5.
    #[test]
    fn oracle_satisfies_all_five_relations() {
        for n_weight in 0..=5u32 {
            // E^(n) E^(m) = {n+m // n} E^(n+m), and the F analogue.
            for n in 1..=2u32 {
                for m in 1..=2u32 {
                    let lhs = mat_mul(&weyl_matrix(&e(n), n_weight), &weyl_matrix(&e(m), n_weight));
                    let rhs = mat_scale(
                        &weyl_matrix(&e(n + m), n_weight),
                        &rf(&quantum_binom_once((n + m) as i64, n as i64)),
                    );
                    assert_eq!(lhs, rhs, "E-merge n={n} m={m} N={n_weight}");
                    let lhs = mat_mul(&weyl_matrix(&f(n), n_weight), &weyl_matrix(&f(m), n_weight));
                    let rhs = mat_scale(
                        &weyl_matrix(&f(n + m), n_weight),
                        &rf(&quantum_binom_once((n + m) as i64, n as i64)),
                    );
                    assert_eq!(lhs, rhs, "F-merge n={n} m={m} N={n_weight}");
                }
            }
            // [K;c//t] E^(n) = E^(n) [K;c+2n//t] and the F analogue with c-2n.
            for c in -2..=2i64 {
                for t in 0..=2u32 {
                    for n in 1..=2u32 {
                        let cm = weyl_matrix(&cart(c, t), n_weight);
                        let en = weyl_matrix(&e(n), n_weight);
                        let shifted = weyl_matrix(&cart(c + 2 * n as i64, t), n_weight);
                        assert_eq!(
                            mat_mul(&cm, &en),
                            mat_mul(&en, &shifted),
                            "Cartan-E c={c} t={t} n={n} N={n_weight}"
                        );
                        let fn_ = weyl_matrix(&f(n), n_weight);
                        let shifted = weyl_matrix(&cart(c - 2 * n as i64, t), n_weight);
                        assert_eq!(
                            mat_mul(&cm, &fn_),
                            mat_mul(&fn_, &shifted),
                            "Cartan-F c={c} t={t} n={n} N={n_weight}"
                        );
                    }
                }
            }
            // E^(n) F^(m) = sum_t F^(m-t) [K;2t-m-n//t] E^(n-t).
            for n in 1..=3u32 {
                for m in 1..=3u32 {
                    let lhs = mat_mul(&weyl_matrix(&e(n), n_weight), &weyl_matrix(&f(m), n_weight));
                    let dim = n_weight as usize + 1;
                    let mut rhs = mat_zero(dim);
                    for t in 0..=n.min(m) {
                        let mut part = mat_identity(dim);
                        if m - t > 0 {
                            part = mat_mul(&part, &weyl_matrix(&f(m - t), n_weight));
                        }
                        part = mat_mul(
                            &part,
                            &weyl_matrix(&cart(2 * t as i64 - m as i64 - n as i64, t), n_weight),
                        );
                        if n - t > 0 {
                            part = mat_mul(&part, &weyl_matrix(&e(n - t), n_weight));
                        }
                        rhs = mat_add(&rhs, &part);
                    }
                    assert_eq!(lhs, rhs, "E-F n={n} m={m} N={n_weight}");
                }
            }
            // K-commutations: E^(n) K^a = q^(-2an) K^a E^(n), and F's.
            for a in [1i8, -1] {
                for n in 1..=2u32 {
                    let en = weyl_matrix(&e(n), n_weight);
                    let ka = weyl_matrix(&k(a), n_weight);
                    let scalar = rf(&LaurentPoly::monomial(
                        -2 * a as i64 * n as i64,
                        BigInt::from(1),
                    ));
                    assert_eq!(
                        mat_mul(&en, &ka),
                        mat_scale(&mat_mul(&ka, &en), &scalar),
                        "E-K a={a} n={n} N={n_weight}"
                    );
                    let fn_ = weyl_matrix(&f(n), n_weight);
                    assert_eq!(
                        mat_mul(&ka, &fn_),
                        mat_scale(&mat_mul(&fn_, &ka), &scalar),
                        "K-F a={a} n={n} N={n_weight}"
                    );
                }
            }
        }
    }

    // ============================================================
    // The straightening engine (judged by the now-validated oracle).
    // ============================================================

    #[test]
    fn word_validation() {
        assert!(Word::new(vec![e(0)]).is_err());
        assert!(Word::new(vec![f(0)]).is_err());
        assert!(Word::new(vec![Generator::KPower(2)]).is_err());
        assert!(Word::new(vec![e(1), f(2), k(-1), cart(0, 1)]).is_ok());
    }

    #[test]
    fn straighten_frozen_e_merge() {
        // E^(1) E^(1) = (q + q^-1) E^(2).
        let result = straighten(&word(&[e(1), e(1)]));
        assert_eq!(result.term_count(), 1);
        assert_eq!(
            result.coeff(mono(0, 0, 0, 2)),
            LaurentPoly::from_terms(&[(1, 1), (1, -1)])
        );
    }

    #[test]
    fn straighten_frozen_ef() {
        // E^(1) F^(1) = F^(1) E^(1) + [K;0//1].
        let result = straighten(&word(&[e(1), f(1)]));
        assert_eq!(result.term_count(), 2);
        assert_eq!(result.coeff(mono(1, 0, 0, 1)), LaurentPoly::one());
        assert_eq!(result.coeff(mono(0, 0, 1, 0)), LaurentPoly::one());
    }

    #[test]
    fn straighten_frozen_cartan_push() {
        // A Cartan symbol left of E is already PBW-shaped:
        assert_eq!(
            straighten(&word(&[cart(0, 1), e(2)])),
            AlgebraElement::from_monomial(mono(0, 0, 1, 2), LaurentPoly::one())
        );
        // ... while E^(2) [K;4//1] = [K;0//1] E^(2) commutes E leftward:
        assert_eq!(
            straighten(&word(&[e(2), cart(4, 1)])),
            AlgebraElement::from_monomial(mono(0, 0, 1, 2), LaurentPoly::one())
        );
        // A shift landing outside B routes through the normal form.
        let result = straighten(&word(&[e(1), cart(0, 1)]));
        let expected_cartan = normal_form(LusztigSymbol::new(-2, 1));
        let mut expected = AlgebraElement::zero();
        for (sym, coeff) in expected_cartan.iter() {
            expected.add_term(PBWMonomial::new(0, *sym, 1), coeff.clone());
        }
        assert_eq!(result, expected);
    }

    #[test]
    fn straighten_unit_and_singletons() {
        assert_eq!(straighten(&Word::empty()), AlgebraElement::one());
        let result = straighten(&word(&[f(3)]));
        assert_eq!(
            result,
            AlgebraElement::from_monomial(mono(3, 0, 0, 0), LaurentPoly::one())
        );
        // K alone lands in the Cartan part: K = [K;1//1] - q^-1 [K;0//1].
        let result = straighten(&word(&[k(1)]));
        assert_eq!(result.coeff(mono(0, 1, 1, 0)), LaurentPoly::one());
        assert_eq!(
            result.coeff(mono(0, 0, 1, 0)),
            LaurentPoly::monomial(-1, BigInt::from(-1))
        );
    }

    #[test]
    fn straighten_is_a_projection() {
        // Straightening the re-encoded words of a straight element returns it.
        let samples = [
            straighten(&word(&[e(2), f(1), k(1)])),
            straighten(&word(&[f(1), cart(2, 2), e(1), e(1)])),
            straighten(&word(&[e(1), f(1), e(1)])),
        ];
        for x in &samples {
            let mut again = AlgebraElement::zero();
            for (w, coeff) in x.to_words() {
                again = again.add(&straighten(&w).scale(&coeff));
            }
            assert_eq!(&again, x);
        }
    }

    #[test]
    fn straighten_matches_oracle_on_frozen_words() {
        let words = [
            word(&[e(1), f(1)]),
            word(&[e(2), f(2)]),
            word(&[e(1), f(1), e(1)]),
            word(&[k(1), e(1), k(-1), f(2)]),
            word(&[cart(-1, 2), e(1), f(1), cart(0, 1)]),
            word(&[f(1), e(1), f(1), k(1)]),
        ];
        for w in &words {
            let report = verify_straighten(w, &[1, 2, 3]);
            assert!(report.equal, "{:?}: {report:?}", w.factors);
        }
    }

    #[test]
    fn verify_straighten_unit_word() {
        let report = verify_straighten(&Word::empty(), &[0, 1, 2]);
        assert!(report.equal);
    }

    /// Exhaustive small-word sweep: every word of length <= 2 over a
    /// generator alphabet with exponents <= 2, verified against the oracle
    /// on N in {1, 2, 3}.
    #[test]
    fn straighten_exhaustive_short_words() {
        let alphabet = [
            e(1),
            e(2),
            f(1),
            f(2),
            k(1),
            k(-1),
            cart(0, 1),
            cart(-2, 1),
            cart(1, 2),
        ];
        let mut count = 0;
        for len in 0..=2usize {
            let mut indices = vec![0usize; len];
            loop {
                let factors: Vec<Generator> = indices.iter().map(|&i| alphabet[i]).collect();
                let w = Word::new(factors).unwrap();
                let report = verify_straighten(&w, &[1, 2, 3]);
                assert!(report.equal, "{:?}", w.factors);
                count += 1;
                // Odometer over the alphabet.
                let mut pos = 0;
                loop {
                    if pos == len {
                        break;
                    }
                    indices[pos] += 1;
                    if indices[pos] < alphabet.len() {
                        break;
                    }
                    indices[pos] = 0;
                    pos += 1;
                }
                if pos == len {
                    break;
                }
            }
        }
        assert_eq!(count, 1 + 9 + 81);
    }

    #[test]
    fn confluence_on_frozen_words() {
        let words = [
            word(&[e(1), f(1), e(1)]),
            word(&[e(2), e(1), f(2)]),
            word(&[cart(0, 1), e(1), f(1), k(1)]),
            word(&[k(-1), e(1), cart(2, 1), f(1)]),
            word(&[e(1), k(1), f(1), f(1)]),
        ];
        for w in &words {
            assert!(confluence_check(w, &ALL_STRATEGIES), "{:?}", w.factors);
        }
    }

    #[test]
    fn confluence_trivial_cases() {
        assert!(confluence_check(&Word::empty(), &ALL_STRATEGIES));
        // Disjoint redexes commute.
        assert!(confluence_check(
            &word(&[e(1), e(1), f(1), f(1)]),
            &ALL_STRATEGIES
        ));
    }

    /// All final coefficients are integral by type; spot-check that the
    /// element-level action equals the word-level action entry for entry on
    /// a word exercising every rule.
    #[test]
    fn weyl_relations_reports() {
        for n_weight in 0..=5u32 {
            let r = verify_weyl_relations(n_weight);
            assert!(r.equal, "{r:?}");
        }
    }

    #[test]
    fn weyl_action_element_matches_word_action() {
        let w = word(&[e(2), cart(1, 1), f(1), k(-1), e(1)]);
        let x = straighten(&w);
        for n_weight in 0..=4u32 {
            assert_eq!(
                weyl_action_word(&w, n_weight),
                weyl_action_element(&x, n_weight),
                "N={n_weight}"
            );
        }
    }
}
