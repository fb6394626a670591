//! Sturm sequences and real root isolation.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::{bigint_to_f64, sign};
use super::{IntPolynomial, Rational};

/// `p, p', -rem(p, p'), ...` with each term replaced by a positive multiple
/// (sign-correct pseudo-remainders, then primitive parts).
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Self {
        let mut seq = Vec::new();
        if p.is_zero() {
            return SturmSequence { seq };
        }
        seq.push(p.clone());
        let dp = p.derivative();
        if dp.is_zero() {
            return SturmSequence { seq };
        }
        seq.push(dp);
        loop {
            let k = seq.len();
            let r = seq[k - 2].signed_pseudo_rem(&seq[k - 1]);
            if r.is_zero() {
                break;
            }
            let c = r.content();
            seq.push(r.neg().div_scalar(&c));
        }
        SturmSequence { seq }
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|q| q.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|q| sign(&q.leading())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|q| {
            let s = sign(&q.leading());
            if q.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b || self.seq.is_empty() {
            return 0;
        }
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf().saturating_sub(self.variations_at_pos_inf())
    }
}

/// Distinct roots of `p` in `(a, b]`.
pub fn count_roots_half_open(p: &IntPolynomial, a: &Rational, b: &Rational) -> usize {
    SturmSequence::new(p).count_half_open(a, b)
}

/// Distinct roots of `p` in `[a, b]`.
pub fn count_roots_closed(p: &IntPolynomial, a: &Rational, b: &Rational) -> usize {
    if a > b {
        return 0;
    }
    let at_a = usize::from(p.sign_at(a) == 0);
    if a == b {
        return at_a;
    }
    count_roots_half_open(p, a, b) + at_a
}

/// A power of two `B` with every real root of `p` in `(-B, B)`, from the
/// Cauchy bound `1 + max |c_i / c_d|`.
pub(crate) fn root_bound(p: &IntPolynomial) -> Rational {
    let lc = p.leading().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    // 1 + ceil(max / lc) rounded up to a power of two.
    let bound = BigInt::one() + (&max + &lc - 1u32) / &lc;
    let mut b = BigInt::one();
    while b <= bound {
        b <<= 1;
    }
    Rational::from_integer(b)
}

/// Isolating intervals for the distinct real roots of `p`, ascending.
///
/// Each entry is either `(r, r)` for a root found exactly at a dyadic point,
/// or `(lo, hi)` with `lo < hi`, neither endpoint a root, and exactly one root
/// strictly between them. Endpoints are dyadic rationals.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<(Rational, Rational)> {
    if p.is_constant() {
        return Vec::new();
    }
    let sturm = SturmSequence::new(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b.clone(), sturm.count_half_open(&-b.clone(), &b))];
    let two = Rational::from_integer(2.into());
    while let Some((lo, hi, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(tighten(p, &sturm, lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        let left = sturm.count_half_open(&lo, &mid);
        // Push the right half first so the left half is processed first.
        stack.push((mid.clone(), hi, count - left));
        stack.push((lo, mid, left));
    }
    out
}

/// Given exactly one root in `(lo, hi]`, returns an interval satisfying the
/// contract of [`isolate_real_roots`].
fn tighten(p: &IntPolynomial, sturm: &SturmSequence, mut lo: Rational, mut hi: Rational) -> (Rational, Rational) {
    let two = Rational::from_integer(2.into());
    loop {
        if p.sign_at(&hi) == 0 {
            return (hi.clone(), hi);
        }
        if p.sign_at(&lo) != 0 {
            return (lo, hi);
        }
        let mid = (&lo + &hi) / &two;
        if sturm.count_half_open(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Midpoint as `f64`, for display.
pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    let (n, d) = (q.numer(), q.denom());
    let f = bigint_to_f64(n) / bigint_to_f64(d);
    if f.is_finite() {
        return f;
    }
    // Scale down huge numerators and denominators together.
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    bigint_to_f64(&(n >> shift)) / bigint_to_f64(&(d >> shift))
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

    #[test]
    fn counts() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(SturmSequence::new(&f).count_all(), 2);
        assert_eq!(count_roots_half_open(&f, &q(0, 1), &q(2, 1)), 1);
        assert_eq!(count_roots_half_open(&f, &q(-2, 1), &q(2, 1)), 2);
        let g = p(&[-1, 1]);
        assert_eq!(count_roots_half_open(&g, &q(0, 1), &q(1, 1)), 1);
        assert_eq!(count_roots_half_open(&g, &q(1, 1), &q(2, 1)), 0);
        assert_eq!(count_roots_closed(&g, &q(1, 1), &q(2, 1)), 1);
        assert_eq!(count_roots_closed(&g, &q(1, 1), &q(1, 1)), 1);
    }

    #[test]
    fn negative_leading_coefficients() {
        // −(x − 1)(x − 2)(x − 3)
        let f = p(&[6, -11, 6, -1]);
        assert_eq!(SturmSequence::new(&f).count_all(), 3);
        assert_eq!(count_roots_half_open(&f, &q(3, 2), &q(7, 2)), 2);
    }

    #[test]
    fn isolation() {
        let c5_free = p(&[-2, 1]).mul(&p(&[-1, 1, 1]));
        let roots = isolate_real_roots(&c5_free);
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[2], (q(2, 1), q(2, 1)));
        for (lo, hi) in &roots[..2] {
            assert!(lo < hi);
            assert_ne!(c5_free.sign_at(lo), 0);
            assert_ne!(c5_free.sign_at(hi), 0);
            assert_eq!(count_roots_closed(&c5_free, lo, hi), 1);
        }
        let x3 = p(&[0, -1, 0, 1]);
        let r = isolate_real_roots(&x3);
        assert_eq!(r.len(), 3);
        assert_eq!(r[1], (q(0, 1), q(0, 1)));
    }

    #[test]
    fn root_bound_is_power_of_two() {
        assert_eq!(root_bound(&p(&[-2, 0, 1])), q(4, 1));
        assert_eq!(root_bound(&p(&[-100, 1])), q(128, 1));
    }
}
