//! Real algebraic numbers as (squarefree polynomial, isolating interval).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::sturm::{count_roots_closed, isolate_real_roots, rational_to_f64};
use super::{squarefree_part, IntPolynomial, Rational};
use crate::error::AlgebraError;

/// A real root of an integer polynomial.
///
/// Invariants: `poly` is squarefree and primitive with positive leading
/// coefficient. Either `lo == hi` and `poly` is the linear polynomial of that
/// rational, or `lo < hi`, `poly` is nonzero at both endpoints and has exactly
/// one root strictly between them. Such a root is never rational.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    poly: IntPolynomial,
    lo: Rational,
    hi: Rational,
}

/// Leading coefficients up to this size get an exhaustive rational-root
/// check when a root is isolated.
const RATIONAL_CHECK_LIMIT: u64 = 1 << 20;

impl AlgebraicNumber {
    pub fn from_rational(q: Rational) -> Self {
        AlgebraicNumber { poly: IntPolynomial::linear_root(&q), lo: q.clone(), hi: q }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// The unique root of `poly` in the closed interval `[lo, hi]`.
    pub fn from_interval(poly: &IntPolynomial, lo: Rational, hi: Rational) -> Result<Self, AlgebraError> {
        let s = squarefree_part(poly)?;
        let count = count_roots_closed(&s, &lo, &hi);
        if count != 1 {
            return Err(AlgebraError::NotIsolating { lo: lo.to_string(), hi: hi.to_string(), count });
        }
        if s.sign_at(&lo) == 0 {
            return Ok(Self::from_rational(lo));
        }
        if s.sign_at(&hi) == 0 {
            return Ok(Self::from_rational(hi));
        }
        Ok(Self::irrational_or_rational(s, lo, hi))
    }

    /// Builds from an open isolating interval, detecting rational roots.
    fn irrational_or_rational(poly: IntPolynomial, lo: Rational, hi: Rational) -> Self {
        let a = AlgebraicNumber { poly, lo, hi };
        if let Some(q) = a.clone().find_rational_root() {
            return Self::from_rational(q);
        }
        a
    }

    /// Any rational root `p/q` of a primitive polynomial has `q | lc`. Two
    /// distinct such rationals differ by at least `1/lc²`, so once the
    /// interval is narrower than that at most one candidate per denominator
    /// remains.
    fn find_rational_root(&mut self) -> Option<Rational> {
        let lc = self.poly.leading().abs();
        let l = lc.to_u64().filter(|&l| l <= RATIONAL_CHECK_LIMIT)?;
        let width = Rational::new(BigInt::one(), BigInt::from(l) * BigInt::from(l) + 1u32);
        self.refine_to(&width);
        if self.is_rational() {
            return Some(self.lo.clone());
        }
        for q in (1..=l).filter(|q| l % q == 0) {
            let qb = BigInt::from(q);
            let num = (&self.lo * Rational::from_integer(qb.clone())).ceil().to_integer();
            let cand = Rational::new(num, qb);
            if cand < self.hi && cand > self.lo && self.poly.sign_at(&cand) == 0 {
                return Some(cand);
            }
        }
        None
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.lo)
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_zero())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// One bisection step; may discover that the root is the midpoint.
    fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        let mid = (&self.lo + &self.hi) / Rational::from_integer(2.into());
        let s_mid = self.poly.sign_at(&mid);
        if s_mid == 0 {
            *self = Self::from_rational(mid);
            return;
        }
        if s_mid == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Bisects until the interval is no wider than `width`.
    pub fn refine_to(&mut self, width: &Rational) {
        while !self.is_rational() && &self.width() > width {
            self.bisect();
        }
    }

    /// A copy refined to width at most `width`.
    pub fn refined(&self, width: &Rational) -> Self {
        let mut a = self.clone();
        a.refine_to(width);
        a
    }

    /// True if this number is a root of `q`: equivalently `gcd(poly, q)` has
    /// a root in the isolating interval.
    pub fn is_root_of(&self, q: &IntPolynomial) -> bool {
        if q.is_zero() {
            return true;
        }
        if let Some(r) = self.as_rational() {
            return q.sign_at(r) == 0;
        }
        let g = self.poly.gcd(q);
        !g.is_constant() && count_roots_closed(&g, &self.lo, &self.hi) > 0
    }

    /// Exact equality without evaluating either number.
    pub fn alg_equal(&self, other: &AlgebraicNumber) -> bool {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => return a == b,
            (Some(_), None) | (None, Some(_)) => return false,
            (None, None) => {}
        }
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        if lo > hi {
            return false;
        }
        let g = self.poly.gcd(&other.poly);
        !g.is_constant() && count_roots_closed(&g, lo, hi) > 0
    }

    /// Sign of the number: -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        self.sign_relative_to(&Rational::zero())
    }

    /// Sign of `self − x`.
    pub fn sign_relative_to(&self, x: &Rational) -> i8 {
        if let Some(r) = self.as_rational() {
            return ordering_sign(r.cmp(x));
        }
        let mut a = self.clone();
        loop {
            if &a.lo >= x {
                return 1;
            }
            if &a.hi <= x {
                return -1;
            }
            a.bisect();
            if let Some(r) = a.as_rational() {
                return ordering_sign(r.cmp(x));
            }
        }
    }

    /// Sign of `p(self)`, decided exactly.
    pub fn sign_at(&self, p: &IntPolynomial) -> i8 {
        if let Some(r) = self.as_rational() {
            return p.sign_at(r);
        }
        if self.is_root_of(p) {
            return 0;
        }
        // p has no root at self; shrink until p has no root in the interval.
        let mut a = self.clone();
        loop {
            if count_roots_closed(p, &a.lo, &a.hi) == 0 {
                return p.sign_at(&a.lo);
            }
            a.bisect();
            if let Some(r) = a.as_rational() {
                return p.sign_at(r);
            }
        }
    }

    pub fn neg(&self) -> AlgebraicNumber {
        let coeffs: Vec<BigInt> =
            self.poly.coeffs().iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
        AlgebraicNumber { poly: IntPolynomial::new(coeffs).primitive_part(), lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    /// `Some(t)` if `self² = t` for an integer `t`.
    pub fn square_as_integer(&self) -> Option<BigInt> {
        if let Some(r) = self.as_rational() {
            let sq = r * r;
            return sq.is_integer().then(|| sq.to_integer());
        }
        let mut a = self.clone();
        loop {
            // Irrational, so the interval eventually excludes 0.
            if a.lo.is_negative() && a.hi.is_positive() {
                a.bisect();
                continue;
            }
            let (x, y) = (a.lo.abs(), a.hi.abs());
            let (s_lo, s_hi) = if x < y { (&x * &x, &y * &y) } else { (&y * &y, &x * &x) };
            let first = s_lo.ceil().to_integer();
            let last = s_hi.floor().to_integer();
            if first > last {
                return None;
            }
            if first == last {
                let x2_minus_t = IntPolynomial::new(vec![-first.clone(), BigInt::zero(), BigInt::one()]);
                return a.is_root_of(&x2_minus_t).then_some(first);
            }
            a.bisect();
        }
    }

    /// Approximation as `f64`, for display and tolerance checks.
    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return rational_to_f64(r);
        }
        let a = self;
        // Bisect in floating point, keeping the sign change bracketed.
        let (mut lo, mut hi) = (rational_to_f64(&a.lo), rational_to_f64(&a.hi));
        let s_lo = a.poly.sign_at(&a.lo);
        for _ in 0..64 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let v = a.poly.eval_f64(mid);
            if v == 0.0 {
                return mid;
            }
            if (v > 0.0) == (s_lo > 0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Exact three-way comparison.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        if self.alg_equal(other) {
            return Ordering::Equal;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }
}

fn ordering_sign(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.alg_equal(other)
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

/// Distinct real roots of `p`, ascending.
pub fn real_roots(p: &IntPolynomial) -> Result<Vec<AlgebraicNumber>, AlgebraError> {
    let s = squarefree_part(p)?;
    Ok(isolate_real_roots(&s)
        .into_iter()
        .map(|(lo, hi)| {
            if lo == hi {
                AlgebraicNumber::from_rational(lo)
            } else {
                AlgebraicNumber::irrational_or_rational(s.clone(), lo, hi)
            }
        })
        .collect())
}

/// Parses `n`, `p/q` or a finite decimal like `-1.25`.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let err = || AlgebraError::Parse { what: "rational", input: s.to_string() };
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let neg = int.starts_with('-');
        let int_val: BigInt = if int.is_empty() || int == "-" || int == "+" { BigInt::zero() } else { int.parse().map_err(|_| err())? };
        let frac_val: BigInt = frac.parse().map_err(|_| err())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = int_val.abs() * &scale + frac_val;
        let num = if neg { -mag } else { mag };
        return Ok(Rational::new(num, scale));
    }
    Ok(Rational::from_integer(t.parse().map_err(|_| err())?))
}

fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl AlgebraicNumber {
    /// Exact text form accepted by [`FromStr`]: `p/q`, or
    /// `poly:c0,c1,...;interval:lo,hi`.
    pub fn to_exact_string(&self) -> String {
        match self.as_rational() {
            Some(r) => format_rational(r),
            None => {
                let coeffs: Vec<String> = self.poly.coeffs().iter().map(|c| c.to_string()).collect();
                format!("poly:{};interval:{},{}", coeffs.join(","), format_rational(&self.lo), format_rational(&self.hi))
            }
        }
    }
}

impl FromStr for AlgebraicNumber {
    type Err = AlgebraError;

    /// Accepts a rational (`p/q`, integer, decimal) or
    /// `poly:c0,c1,...;interval:lo,hi` with coefficients low degree first.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let Some(rest) = t.strip_prefix("poly:") else {
            return Ok(Self::from_rational(parse_rational(t)?));
        };
        let err = || AlgebraError::Parse { what: "algebraic number", input: s.to_string() };
        let (coeffs, interval) = rest.split_once(';').ok_or_else(err)?;
        let interval = interval.trim().strip_prefix("interval:").ok_or_else(err)?;
        let (lo, hi) = interval.split_once(',').ok_or_else(err)?;
        let poly: IntPolynomial = coeffs.parse()?;
        let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
        if lo > hi {
            return Err(err());
        }
        Self::from_interval(&poly, lo, hi)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", format_rational(r)),
            None => write!(
                f,
                "{:.6} (root of {} in [{}, {}])",
                self.to_f64(),
                self.poly,
                format_rational(&self.lo),
                format_rational(&self.hi)
            ),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraicRepr {
    poly: IntPolynomial,
    lo: String,
    hi: String,
}

impl Serialize for AlgebraicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AlgebraicRepr { poly: self.poly.clone(), lo: format_rational(&self.lo), hi: format_rational(&self.hi) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = AlgebraicRepr::deserialize(d)?;
        let lo = parse_rational(&repr.lo).map_err(serde::de::Error::custom)?;
        let hi = parse_rational(&repr.hi).map_err(serde::de::Error::custom)?;
        AlgebraicNumber::from_interval(&repr.poly, lo, hi).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn sqrt2() -> AlgebraicNumber {
        AlgebraicNumber::from_interval(&p(&[-2, 0, 1]), q(1, 1), q(2, 1)).unwrap()
    }

    #[test]
    fn sqrt_two_refinement() {
        let r = sqrt2().refined(&q(1, 1024));
        assert!(r.width() <= q(1, 1024));
        assert!(*r.lo() >= q(14140625, 10000000) && *r.hi() <= q(14150390625, 10000000000));
        assert!((r.to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn golden_conjugate_refinement() {
        let roots = real_roots(&p(&[-1, 1, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        let r = roots[1].refined(&q(1, 16));
        assert!(*r.lo() >= q(9, 16) && *r.hi() <= q(11, 16));
        assert!((r.to_f64() - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn equality_across_representations() {
        // √2 as a root of x^4 − 4 and of x^2 − 2, with different intervals.
        let a = AlgebraicNumber::from_interval(&p(&[-4, 0, 0, 0, 1]), q(0, 1), q(3, 1)).unwrap();
        let b = sqrt2();
        assert!(a.alg_equal(&b));
        assert_ne!(a, AlgebraicNumber::from_interval(&p(&[-3, 0, 1]), q(1, 1), q(2, 1)).unwrap());
        assert_eq!(a.cmp(&AlgebraicNumber::from_integer(1)), Ordering::Greater);
        assert_eq!(b.neg().signum(), -1);
        assert!(b.neg().alg_equal(&real_roots(&p(&[-2, 0, 1])).unwrap()[0]));
    }

    #[test]
    fn rational_roots_are_exact() {
        let roots = real_roots(&p(&[1, 0, -9])).unwrap();
        assert_eq!(roots.iter().map(|r| r.as_rational().cloned()).collect::<Vec<_>>(), vec![Some(q(-1, 3)), Some(q(1, 3))]);
        let c5 = real_roots(&p(&[-2, 5, 0, -5, 0, 1])).unwrap();
        assert_eq!(c5.len(), 3);
        assert_eq!(c5[2].as_rational(), Some(&q(2, 1)));
        assert!(!c5[0].is_rational());
    }

    #[test]
    fn squares() {
        assert_eq!(sqrt2().square_as_integer(), Some(2.into()));
        assert_eq!(sqrt2().neg().square_as_integer(), Some(2.into()));
        assert_eq!(AlgebraicNumber::from_integer(-3).square_as_integer(), Some(9.into()));
        let golden = &real_roots(&p(&[-1, 1, 1])).unwrap()[1];
        assert_eq!(golden.square_as_integer(), None);
        assert_eq!(AlgebraicNumber::from_rational(q(1, 2)).square_as_integer(), None);
    }

    #[test]
    fn sign_of_polynomial_at_number() {
        let s = sqrt2();
        assert_eq!(s.sign_at(&p(&[-2, 0, 1])), 0);
        assert_eq!(s.sign_at(&p(&[-1, 1])), 1);
        assert_eq!(s.sign_at(&p(&[-3, 0, 1])), -1);
        assert_eq!(s.sign_relative_to(&q(141, 100)), 1);
    }

    #[test]
    fn parsing_and_json() {
        assert_eq!("3/6".parse::<AlgebraicNumber>().unwrap(), AlgebraicNumber::from_rational(q(1, 2)));
        assert_eq!("-1.25".parse::<AlgebraicNumber>().unwrap(), AlgebraicNumber::from_rational(q(-5, 4)));
        let s: AlgebraicNumber = "poly:-2,0,1;interval:1,2".parse().unwrap();
        assert_eq!(s, sqrt2());
        assert!("poly:-2,0,1;interval:-2,2".parse::<AlgebraicNumber>().is_err());
        assert!("poly:-2,0,1".parse::<AlgebraicNumber>().is_err());
        assert!("x".parse::<AlgebraicNumber>().is_err());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"poly":["-2","0","1"],"lo":"1","hi":"2"}"#);
        let back: AlgebraicNumber = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert_eq!(s.to_exact_string(), "poly:-2,0,1;interval:1,2");
        assert_eq!(s.to_exact_string().parse::<AlgebraicNumber>().unwrap(), s);
        assert_eq!(AlgebraicNumber::from_rational(q(-3, 2)).to_exact_string(), "-3/2");
    }
}
