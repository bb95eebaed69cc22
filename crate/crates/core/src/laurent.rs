//! Laurent polynomials in one variable `q` with integer coefficients.
//!
//! This is the coefficient ring `Z[q, q^-1]` that every identity in this
//! crate ultimately lives in.  The representation is a sparse map from
//! exponent to nonzero coefficient, so equality of values is equality of
//! representations, and the canonical string of a value is unique.
//!
//! Provided here:
//!
//! * ring operations (`+`, `-`, `*`, negation, powers) — all exact,
//! * [`LaurentPoly::exact_div`] — division that fails loudly instead of
//!   leaving the ring,
//! * [`LaurentPoly::substitute_power`] — the substitution `q -> q^r`,
//! * [`LaurentPoly::invert_q`] — the bar involution `q -> q^-1`,
//! * [`LaurentPoly::eval`] — evaluation at a nonzero rational point,
//! * a canonical, human-readable rendering in ascending exponent order.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in `q` over the integers.
///
/// Invariant: the map never stores a zero coefficient, so two values are
/// equal as ring elements exactly when their representations are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::from_int(1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, BigInt::one())
    }

    /// The constant polynomial `n`.
    pub fn from_int(n: i64) -> Self {
        LaurentPoly::monomial(0, BigInt::from(n))
    }

    /// The constant polynomial `n`.
    pub fn from_bigint(n: BigInt) -> Self {
        LaurentPoly::monomial(0, n)
    }

    /// The monomial `coeff * q^exp`.
    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs; repeated
    /// exponents accumulate.  Convenient for literals in tests:
    /// `from_terms(&[(1, 2), (-1, -2)])` is `q^2 - q^-2`.
    pub fn from_terms(pairs: &[(i64, i64)]) -> Self {
        let mut out = LaurentPoly::zero();
        for &(coeff, exp) in pairs {
            out.add_term(exp, &BigInt::from(coeff));
        }
        out
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// The coefficient of `q^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Smallest exponent with nonzero coefficient, `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over `(exponent, coefficient)` pairs in ascending exponent
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by the monomial `q^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by an integer scalar.
    pub fn scale(&self, scalar: &BigInt) -> Self {
        if scalar.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * scalar)).collect(),
        }
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// The substitution `q -> q^r` for a positive integer `r`.
    ///
    /// This is a ring homomorphism; it is the bridge between the `q^2`-world
    /// of Gaussian binomials and the balanced world of quantum binomials.
    pub fn substitute_power(&self, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::Precondition(
                "substitute_power requires r >= 1".into(),
            ));
        }
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * i64::from(r), c.clone()))
                .collect(),
        })
    }

    /// The bar involution `q -> q^-1` (negates every exponent).
    pub fn invert_q(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact division in `Z[q, q^-1]`.
    ///
    /// Returns `Err(NotDivisible)` when the quotient would leave the ring
    /// (either a genuine polynomial remainder or a non-integer coefficient),
    /// and `Err(DivisionByZero)` for a zero divisor.  On success,
    /// `quotient * divisor == self` exactly.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Units q^e are invertible in the Laurent ring, so normalize both
        // operands to honest polynomials with nonzero constant term and divide
        // top-down; the discarded shifts are restored on the quotient.
        let a_shift = self.min_exp().expect("nonzero");
        let b_shift = divisor.min_exp().expect("nonzero");
        let mut rem = self.shift(-a_shift);
        let div = divisor.shift(-b_shift);
        let div_deg = div.max_exp().expect("nonzero");
        let div_lead = div.coeff(div_deg);
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let rem_deg = rem.max_exp().expect("nonzero");
            if rem_deg < div_deg {
                return Err(Error::NotDivisible);
            }
            let rem_lead = rem.coeff(rem_deg);
            let (c, r) = num_integer::Integer::div_rem(&rem_lead, &div_lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let step = LaurentPoly::monomial(rem_deg - div_deg, c);
            rem = &rem - &(&step * &div);
            quot = &quot + &step;
        }
        Ok(quot.shift(a_shift - b_shift))
    }

    /// Evaluates at a nonzero rational point.
    ///
    /// The point must be nonzero because Laurent polynomials may carry
    /// negative exponents; evaluating at 0 returns `Err(ZeroPoint)`.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += BigRational::from(c.clone()) * rat_pow(x, *e);
        }
        Ok(acc)
    }

    /// Evaluates at a nonzero integer point (convenience over [`eval`]).
    ///
    /// [`eval`]: LaurentPoly::eval
    pub fn eval_int(&self, x: i64) -> Result<BigRational> {
        self.eval(&BigRational::from(BigInt::from(x)))
    }

    /// The canonical string, ascending exponent order: `-q^-1 + q`,
    /// `1 + 2*q + q^2`.  `q^0` is elided and `q^1` prints as `q`.
    pub fn canonical_string(&self) -> String {
        self.render(false)
    }

    /// The same term syntax in descending exponent order: `q + q^-1`.  This
    /// is the order the element grammar uses for coefficients.
    pub fn descending_string(&self) -> String {
        self.render(true)
    }

    fn render(&self, descending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let pairs: Vec<(&i64, &BigInt)> = if descending {
            self.terms.iter().rev().collect()
        } else {
            self.terms.iter().collect()
        };
        for (i, (e, c)) in pairs.into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&term_string(*e, &mag));
        }
        out
    }
}

/// Renders `mag * q^exp` with the unit coefficient and `q^0` / `q^1`
/// conventions applied (`mag` must be positive).
fn term_string(exp: i64, mag: &BigInt) -> String {
    let var = match exp {
        0 => return mag.to_string(),
        1 => "q".to_string(),
        e => {
            let mut s = String::from("q^");
            s.push_str(&e.to_string());
            s
        }
    };
    if mag.is_one() {
        var
    } else {
        let mut s = mag.to_string();
        s.push('*');
        s.push_str(&var);
        s
    }
}

/// `x^e` for rational `x != 0` and any integer `e`.
fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= base.clone();
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

// Debug goes through Display so assertion failures show polynomials, not
// coefficient maps.
impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}
