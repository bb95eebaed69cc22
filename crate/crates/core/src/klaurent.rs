//! Laurent polynomials in the group-like variable `K` whose coefficients are
//! rational functions in `q`.
//!
//! The commutative algebra `Q(q)[K, K^-1]` is where Cartan symbols live once
//! expanded, and it is the oracle every Cartan-level identity is judged in:
//! two expressions are equal in the integral Cartan algebra exactly when
//! their expansions here agree.  Because coefficients are canonical
//! [`RatFunc`] values and zero coefficients are never stored, equality is
//! structural.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ratfunc::RatFunc;

/// An element of `Q(q)[K, K^-1]`: a finite sum of terms `f(q) * K^e`.
///
/// Invariant: no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct KLaurent {
    terms: BTreeMap<i64, RatFunc>,
}

impl KLaurent {
    /// The zero element.
    pub fn zero() -> Self {
        KLaurent {
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit.
    pub fn one() -> Self {
        KLaurent::monomial(0, RatFunc::one())
    }

    /// The monomial `coeff * K^exp`.
    pub fn monomial(exp: i64, coeff: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        KLaurent { terms }
    }

    /// A scalar (a rational function in `q` alone).
    pub fn scalar(coeff: RatFunc) -> Self {
        KLaurent::monomial(0, coeff)
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `K^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> RatFunc {
        self.terms.get(&exp).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &RatFunc)> {
        self.terms.iter()
    }

    /// Largest `|e|` over the support; 0 for the zero element.  The support
    /// of a degree-`t` Cartan symbol has radius `t`, and the radius bounds
    /// how many specializations are needed to separate two elements.
    pub fn support_radius(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.unsigned_abs())
            .max()
            .map_or(0, |r| r as i64)
    }

    fn add_term(&mut self, exp: i64, coeff: &RatFunc) {
        if coeff.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&exp) {
            Some(prev) => &prev + coeff,
            None => coeff.clone(),
        };
        if !merged.is_zero() {
            self.terms.insert(exp, merged);
        }
    }

    /// Multiplies every coefficient by a scalar rational function.
    pub fn scale(&self, scalar: &RatFunc) -> Self {
        if scalar.is_zero() {
            return KLaurent::zero();
        }
        KLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c * scalar)).collect(),
        }
    }

    /// Multiplies every coefficient by a Laurent polynomial in `q`.
    pub fn scale_laurent(&self, scalar: &LaurentPoly) -> Self {
        self.scale(&RatFunc::from_laurent(scalar))
    }

    /// Divides every coefficient by a scalar; `Err(DivisionByZero)` when the
    /// scalar is zero.
    pub fn div_scalar(&self, scalar: &RatFunc) -> Result<Self> {
        if scalar.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = scalar.recip()?;
        Ok(self.scale(&inv))
    }

    /// Substitutes `K = q^h` (and so `K^-1 = q^-h`), yielding a rational
    /// function in `q`.  This is the weight-space specialization.
    pub fn specialize_k(&self, h: i64) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (e, c) in &self.terms {
            let power = RatFunc::from_laurent(&LaurentPoly::monomial(h * e, 1.into()));
            acc = &acc + &(c * &power);
        }
        acc
    }

    /// The shift automorphism determined by `K^e -> q^(c*e) K^e` on the
    /// `K`-grading (fixing scalars).  It is an algebra automorphism for every
    /// integer `c`, and it carries the expansion of a Cartan symbol with
    /// shift 0 to the expansion of the symbol shifted by `c`.
    pub fn shift_automorphism(&self, c: i64) -> Self {
        KLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, f)| {
                    let power = RatFunc::from_laurent(&LaurentPoly::monomial(c * e, 1.into()));
                    (*e, f * &power)
                })
                .collect(),
        }
    }

    /// Canonical rendering, ascending `K`-exponent: each term prints as
    /// `(coeff)*K^e` (with `K^0` and unit coefficients elided), terms joined
    /// by ` + `.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = alloc::vec::Vec::new();
        for (e, c) in &self.terms {
            let var = match e {
                0 => String::new(),
                1 => "K".to_string(),
                -1 => "K^-1".to_string(),
                e => {
                    let mut s = String::from("K^");
                    s.push_str(&e.to_string());
                    s
                }
            };
            let part = if var.is_empty() {
                let mut s = String::from("(");
                s.push_str(&c.canonical_string());
                s.push(')');
                s
            } else if c.is_one() {
                var
            } else {
                let mut s = String::from("(");
                s.push_str(&c.canonical_string());
                s.push_str(")*");
                s.push_str(&var);
                s
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl Add for &KLaurent {
    type Output = KLaurent;
    fn add(self, rhs: &KLaurent) -> KLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &KLaurent {
    type Output = KLaurent;
    fn sub(self, rhs: &KLaurent) -> KLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Mul for &KLaurent {
    type Output = KLaurent;
    fn mul(self, rhs: &KLaurent) -> KLaurent {
        let mut out = KLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &KLaurent {
    type Output = KLaurent;
    fn neg(self) -> KLaurent {
        KLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for KLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for KLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
