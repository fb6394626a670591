//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::AlgebraError;

/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        IntPolynomial::from_i64(&[0, 1])
    }

    /// `den·x − num`, the primitive linear polynomial vanishing at `q`.
    pub fn linear_root(q: &Rational) -> Self {
        IntPolynomial::new(vec![-q.numer().clone(), q.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, e: u32) -> IntPolynomial {
        (0..e).fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> IntPolynomial {
        debug_assert!(self.coeffs.iter().all(|a| (a % c).is_zero()));
        IntPolynomial::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// `x^k · self`.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Pseudo-remainder: `lc(d)^(deg self − deg d + 1) · self mod d`.
    pub fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        assert!(!d.is_zero(), "pseudo-division by zero");
        let dd = d.deg();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return self.clone();
        }
        let delta = r.len() - 1 - dd;
        for k in (0..=delta).rev() {
            let top = r[k + dd].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            if !top.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &top * dc;
                }
            }
            r.truncate(k + dd);
        }
        IntPolynomial::new(r)
    }

    /// Sign-preserving pseudo-remainder: uses `|lc(d)|` as the multiplier so
    /// the result is a positive multiple of the true remainder.
    pub fn signed_pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let r = self.pseudo_rem(d);
        let delta = self.deg() + 1 - d.deg().min(self.deg() + 1);
        if d.leading().is_negative() && delta % 2 == 1 {
            r.neg()
        } else {
            r
        }
    }

    /// Quotient of an exact division in `Z[x]`. Returns `None` when `d` does
    /// not divide `self`.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let dd = d.deg();
        if self.deg() < dd {
            return None;
        }
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (quo, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &quo * dc;
            }
            q[k] = quo;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::new(q))
    }

    /// Gcd via the subresultant remainder sequence. The result is primitive
    /// up to the gcd of the contents and has positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let (mut a, mut b) = if self.deg() >= other.deg() { (self.clone(), other.clone()) } else { (other.clone(), self.clone()) };
        let d = a.content().gcd(&b.content());
        a = a.primitive_part();
        b = b.primitive_part();
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.deg() - b.deg();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            if r.deg() == 0 {
                b = IntPolynomial::one();
                break;
            }
            a = b;
            let divisor = &g * num_traits::pow(h.clone(), delta);
            b = r.div_scalar(&divisor);
            g = a.leading();
            h = if delta == 0 {
                h
            } else {
                num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
            };
        }
        b.primitive_part().scale(&d)
    }

    /// `self(q)` computed exactly.
    pub fn eval(&self, q: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `self(p/q)` via the cleared-denominator sum
    /// `Σ c_i p^i q^(d−i)` with `q > 0`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let (p, q) = (x.numer(), x.denom());
        // Horner in homogeneous form: acc = acc·p + c_i·q^(d−i).
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        let d = self.deg();
        let mut terms = Vec::with_capacity(d + 1);
        for i in (0..=d).rev() {
            terms.push((i, qpow.clone()));
            if i > 0 {
                qpow *= q;
            }
        }
        // terms[k] = (i, q^(d−i)) for i descending.
        for (i, qp) in terms {
            acc = acc * p + &self.coeffs[i] * qp;
        }
        sign(&acc)
    }

    /// Floating-point evaluation, for display and numeric cross-checks only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }
}

pub(crate) fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn bigint_to_f64(x: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for IntPolynomial {
    type Err = AlgebraError;

    /// Comma-separated integer coefficients, low degree first.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| AlgebraError::Parse { what: "polynomial coefficients", input: s.to_string() })?;
        Ok(IntPolynomial::new(coeffs))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        // (x − 2)(x² + x − 1)² = x⁵ − 5x³ + 5x − 2
        let q = p(&[-1, 1, 1]);
        let prod = p(&[-2, 1]).mul(&q.mul(&q));
        assert_eq!(prod, p(&[-2, 5, 0, -5, 0, 1]));
        assert_eq!(prod.derivative(), p(&[5, 0, -15, 0, 5]));
        assert_eq!(prod.div_exact(&q).unwrap(), p(&[-2, 1]).mul(&q));
        assert!(prod.div_exact(&p(&[1, 1])).is_none());
    }

    #[test]
    fn gcds() {
        let q = p(&[-1, 1, 1]);
        let f = p(&[-2, 1]).mul(&q).mul(&q);
        assert_eq!(f.gcd(&f.derivative()), q);
        assert_eq!(p(&[-2, 0, 1]).gcd(&p(&[-1, 1, 1])), IntPolynomial::one());
        assert_eq!(p(&[0, 6]).gcd(&p(&[0, 0, 4])), p(&[0, 2]));
        assert_eq!(p(&[3, 3]).gcd(&IntPolynomial::zero()), p(&[3, 3]));
    }

    #[test]
    fn signs() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.sign_at(&Rational::from_integer(1.into())), -1);
        assert_eq!(f.sign_at(&Rational::new(3.into(), 2.into())), 1);
        let c5 = p(&[-2, 5, 0, -5, 0, 1]);
        assert_eq!(c5.sign_at(&Rational::from_integer(2.into())), 0);
        assert_eq!(p(&[1, -3]).sign_at(&Rational::new(1.into(), 3.into())), 0);
        assert_eq!(p(&[1, -3]).sign_at(&Rational::new((-1).into(), 3.into())), 1);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(&[-2, 5, 0, -5, 0, 1]).to_string(), "x^5 - 5x^3 + 5x - 2");
        assert_eq!("-1, 1,1".parse::<IntPolynomial>().unwrap(), p(&[-1, 1, 1]));
        assert!("1,a".parse::<IntPolynomial>().is_err());
        let json = serde_json::to_string(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(json, r#"["-1","0","1"]"#);
    }

    #[test]
    fn signed_pseudo_remainder_keeps_sign() {
        let a = p(&[1, 0, 0, 1]);
        let d = p(&[1, -2]);
        // a mod d = a(1/2) = 9/8 > 0
        let r = a.signed_pseudo_rem(&d);
        assert!(r.constant_term().is_positive());
    }
}
