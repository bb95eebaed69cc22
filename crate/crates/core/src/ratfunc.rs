//! Rational functions in `q` over the integers, kept in canonical form.
//!
//! Quantum binomial denominators like `{t}! (q - q^-1)^t` clear out of every
//! *final* value in this crate, but intermediate Cartan computations pass
//! through genuine fractions.  `RatFunc` carries those intermediates exactly:
//! a fraction `num/den` of integer polynomials reduced so that
//!
//! * `gcd(num, den) = 1` including integer content,
//! * the leading coefficient of `den` is positive,
//! * zero is exactly `0/1`.
//!
//! With that normal form, equality is structural equality — no cross
//! multiplication is ever needed to compare values.
//!
//! The gcd is the classical primitive polynomial-remainder-sequence: take
//! pseudo-remainders, strip integer content each round.  Degrees here stay
//! tiny (tens), so the simple PRS is plenty.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

// ---------------------------------------------------------------------------
// Dense integer polynomials (internal representation for RatFunc)
// ---------------------------------------------------------------------------

/// Dense polynomial in `q` over `Z`: `coeffs[i]` is the coefficient of `q^i`,
/// the leading coefficient is nonzero, and the zero polynomial is the empty
/// vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Poly {
            coeffs: vec![BigInt::one()],
        }
    }

    fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial.
    fn degree(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::from_coeffs(coeffs)
    }

    fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    fn mul_scalar(&self, s: &BigInt) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Positive gcd of all coefficients (1 for the zero polynomial, by
    /// convention, so dividing by the content is always legal).
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g.is_zero() {
            BigInt::one()
        } else {
            g
        }
    }

    /// Divides every coefficient by `d`, which must divide exactly.
    fn div_scalar_exact(&self, d: &BigInt) -> Poly {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero(), "content division must be exact");
                    q
                })
                .collect(),
        }
    }

    /// Exact polynomial division; panics in debug builds if the division is
    /// not exact.  Only called with divisors known to divide (gcd factors).
    fn div_exact(&self, divisor: &Poly) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - divisor.degree() + 1];
        while !rem.is_zero() && rem.degree() >= divisor.degree() {
            let shift = rem.degree() - divisor.degree();
            let (c, r) = rem.leading().div_rem(divisor.leading());
            debug_assert!(r.is_zero(), "gcd division must be exact");
            let mut step = vec![BigInt::zero(); shift + 1];
            step[shift] = c.clone();
            let step = Poly::from_coeffs(step);
            quot[shift] = c;
            rem = rem.sub(&step.mul(divisor));
        }
        debug_assert!(rem.is_zero(), "gcd division must leave no remainder");
        Poly::from_coeffs(quot)
    }

    /// Pseudo-remainder: the remainder of `lead(d)^(deg a - deg d + 1) * a`
    /// divided by `d`, computed without fractions.
    fn pseudo_rem(&self, divisor: &Poly) -> Poly {
        let mut rem = self.clone();
        let d_deg = divisor.degree();
        let d_lead = divisor.leading();
        while !rem.is_zero() && rem.degree() >= d_deg {
            let shift = rem.degree() - d_deg;
            let r_lead = rem.leading().clone();
            // lead(d) * rem - lead(rem) * q^shift * d kills the top term.
            let mut step = vec![BigInt::zero(); shift + 1];
            step[shift] = r_lead;
            let step = Poly::from_coeffs(step);
            rem = rem.mul_scalar(d_lead).sub(&step.mul(divisor));
        }
        rem
    }

    /// Positive-content gcd via the primitive PRS, including integer content:
    /// `gcd(a, b)` divides both and any common divisor divides it.
    fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.positive_leading();
        }
        if other.is_zero() {
            return self.positive_leading();
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.div_scalar_exact(&self.content());
        let mut b = other.div_scalar_exact(&other.content());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() {
                Poly::zero()
            } else {
                r.div_scalar_exact(&r.content())
            };
        }
        a.positive_leading().mul_scalar(&content_gcd)
    }

    fn positive_leading(&self) -> Poly {
        if self.is_zero() || !self.leading().is_negative() {
            self.clone()
        } else {
            self.neg()
        }
    }

    fn to_laurent(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out += &LaurentPoly::monomial(i as i64, c.clone());
        }
        out
    }

    fn canonical_string(&self) -> String {
        self.to_laurent().canonical_string()
    }
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

/// A rational function in `q` over the integers, in canonical reduced form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// The zero function `0/1`.
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    /// The constant function 1.
    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// The constant function `n`.
    pub fn from_int(n: i64) -> Self {
        RatFunc::from_laurent(&LaurentPoly::from_int(n))
    }

    /// Embeds a Laurent polynomial: negative powers of `q` become
    /// denominator factors `q^k`.
    pub fn from_laurent(a: &LaurentPoly) -> Self {
        if a.is_zero() {
            return RatFunc::zero();
        }
        let min = a.min_exp().expect("nonzero");
        let shift = min.min(0); // only negative exponents need clearing
        let poly_part = a.shift(-shift);
        let num_coeffs: Vec<BigInt> = {
            let deg = poly_part.max_exp().expect("nonzero");
            let mut v = vec![BigInt::zero(); (deg + 1) as usize];
            for (e, c) in poly_part.iter() {
                v[*e as usize] = c.clone();
            }
            v
        };
        let mut den = vec![BigInt::zero(); (-shift) as usize + 1];
        *den.last_mut().expect("nonempty") = BigInt::one();
        RatFunc::new_reduced(Poly::from_coeffs(num_coeffs), Poly::from_coeffs(den))
    }

    /// Builds `num/den` and reduces to canonical form.
    fn new_reduced(num: Poly, den: Poly) -> Self {
        assert!(
            !den.is_zero(),
            "rational function denominator must be nonzero"
        );
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    /// True for the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for the constant function 1.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1 *after reduction*, i.e. the value is an
    /// honest polynomial in `q` (nonnegative powers only).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The multiplicative inverse; `Err(DivisionByZero)` for zero.
    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // num and den are already coprime; only the sign needs renormalizing.
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    /// Converts back to a Laurent polynomial when the value lies in
    /// `Z[q, q^-1]`; `Err(NotDivisible)` otherwise.  This is the integrality
    /// check used after clearing quantum-factorial denominators.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        self.num.to_laurent().exact_div(&self.den.to_laurent())
    }

    /// Canonical rendering: `num` alone when the denominator is 1, otherwise
    /// `(num)/(den)` with both halves in canonical ascending order.
    pub fn canonical_string(&self) -> String {
        if self.den.is_one() {
            self.num.canonical_string()
        } else {
            let mut s = String::from("(");
            s.push_str(&self.num.canonical_string());
            s.push_str(")/(");
            s.push_str(&self.den.canonical_string());
            s.push(')');
            s
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new_reduced(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new_reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    // Division in a field is multiplication by the reciprocal.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(pairs: &[(i64, i64)]) -> RatFunc {
        RatFunc::from_laurent(&LaurentPoly::from_terms(pairs))
    }

    // ==== canonical form ====

    #[test]
    fn reduction_strips_common_factors_and_content() {
        // (2q^2 - 2) / (4q - 4) reduces to (q + 1)/2.
        let a = rf(&[(2, 2), (-2, 0)]);
        let b = rf(&[(4, 1), (-4, 0)]);
        let c = &a / &b;
        assert_eq!(c.canonical_string(), "(1 + q)/(2)");
        // Equality is structural: build the same value differently.
        let c2 = &rf(&[(1, 1), (1, 0)]) / &rf(&[(2, 0)]);
        assert_eq!(c, c2);
    }

    #[test]
    fn denominator_sign_is_normalized() {
        let a = &rf(&[(1, 0)]) / &rf(&[(-1, 1), (1, 0)]); // 1/(1 - q)
        let b = &rf(&[(-1, 0)]) / &rf(&[(1, 1), (-1, 0)]); // -1/(q - 1)
        assert_eq!(a, b);
        assert_eq!(a.canonical_string(), "(-1)/(-1 + q)");
    }

    #[test]
    fn zero_is_canonical() {
        let z = &rf(&[(1, 1)]) - &rf(&[(1, 1)]);
        assert!(z.is_zero());
        assert_eq!(z, RatFunc::zero());
        assert_eq!(z.canonical_string(), "0");
    }

    // ==== field axioms on sample values ====

    #[test]
    fn field_identities() {
        let a = &rf(&[(1, 2), (3, 0)]) / &rf(&[(1, 1), (1, 0)]);
        let b = &rf(&[(2, 1)]) / &rf(&[(1, 3), (-1, 0)]);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.recip().unwrap(), RatFunc::one());
        assert!(RatFunc::zero().recip().is_err());
    }

    // ==== Laurent round trip ====

    #[test]
    fn laurent_embedding_roundtrips() {
        let lp = LaurentPoly::from_terms(&[(3, -2), (-1, 0), (5, 4)]);
        let r = RatFunc::from_laurent(&lp);
        assert_eq!(r.to_laurent().unwrap(), lp);
        // q^-2 embeds with denominator q^2 (not "polynomial"), but stays exact.
        assert!(!r.is_polynomial());
        assert!(RatFunc::from_laurent(&LaurentPoly::one()).is_polynomial());
    }

    #[test]
    fn to_laurent_rejects_genuine_fractions() {
        let half = &RatFunc::one() / &RatFunc::from_int(2);
        assert_eq!(half.to_laurent(), Err(Error::NotDivisible));
        let pole = &RatFunc::one() / &rf(&[(1, 1), (1, 0)]);
        assert_eq!(pole.to_laurent(), Err(Error::NotDivisible));
    }

    /// The quantum-integer quotient (q^n - q^-n)/(q - q^-1) is a Laurent
    /// polynomial; its RatFunc form must convert back exactly.
    #[test]
    fn quantum_integer_quotient_is_integral() {
        let n = 5i64;
        let num = rf(&[(1, n), (-1, -n)]);
        let den = rf(&[(1, 1), (-1, -1)]);
        let q = &num / &den;
        let lp = q.to_laurent().unwrap();
        assert_eq!(
            lp,
            LaurentPoly::from_terms(&[(1, 4), (1, 2), (1, 0), (1, -2), (1, -4)])
        );
    }
}
