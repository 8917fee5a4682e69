//! Sturm sequences, square-free decomposition and real-root isolation.
//!
//! Sign computations run on primitive integer polynomials: remainders are
//! formed with pseudo-division by a positive multiplier and stripped of
//! their content, so no rational arithmetic happens inside the sequence.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Closed interval with rational endpoints. When produced by
/// [`isolate_real_roots`] the root lies in the half-open `(lo, hi]`, or the
/// interval is degenerate (`lo == hi`) and pins the root exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Param("interval with lo > hi".into()));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Bisect once, keeping the half that still holds the root of the
    /// square-free polynomial `p`.
    pub fn bisect(&self, p: &Polynomial) -> Interval {
        if self.is_point() {
            return self.clone();
        }
        let mid = self.midpoint();
        let at_mid = p.eval(&mid);
        if at_mid.is_zero() {
            return Interval::point(mid);
        }
        let at_hi = p.eval(&self.hi);
        if at_hi.is_zero() || at_hi.is_positive() != at_mid.is_positive() {
            Interval {
                lo: mid,
                hi: self.hi.clone(),
            }
        } else {
            Interval {
                lo: self.lo.clone(),
                hi: mid,
            }
        }
    }

    /// Bisect until the width is at most `width`.
    pub fn refine(&self, p: &Polynomial, width: &Rational) -> Interval {
        let mut iv = self.clone();
        while &iv.width() > width {
            iv = iv.bisect(p);
        }
        iv
    }
}

/// Where [`sturm_count`] looks for roots.
#[derive(Clone, Debug)]
pub enum RootRange {
    /// The whole real line.
    Whole,
    /// The half-open interval `(lo, hi]`.
    HalfOpen(Interval),
}

/// Evaluation point for sign variations.
#[derive(Clone, Debug)]
pub(crate) enum Point {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// Integer polynomial, ascending coefficients, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly(pub(crate) Vec<BigInt>);

impl IntPoly {
    pub(crate) fn from_poly(p: &Polynomial) -> Self {
        IntPoly(p.to_primitive_integer().1)
    }

    /// Like [`IntPoly::from_poly`] but keeps the sign of `p`.
    pub(crate) fn from_poly_signed(p: &Polynomial) -> Self {
        let (content, ints) = p.to_primitive_integer();
        if content.is_negative() {
            IntPoly(ints.into_iter().map(|c| -c).collect())
        } else {
            IntPoly(ints)
        }
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn leading(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    /// Divide out the (positive) content.
    pub(crate) fn primitive(mut self) -> Self {
        let g = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.0 {
                *c /= &g;
            }
        }
        self
    }

    fn derivative(&self) -> Self {
        IntPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
        .trim()
    }

    /// Remainder of `self` by `b` scaled by a positive integer:
    /// `|lc(b)|^k * self = q * b + r`.
    fn positive_prem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.leading();
        let lb_abs = lb.abs();
        let lb_sign = BigInt::from(if lb.is_negative() { -1 } else { 1 });
        let mut r = self.0.clone();
        while r.len() > db && !r.is_empty() {
            let shift = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lb_abs;
            }
            let factor = &lr * &lb_sign;
            for (i, bc) in b.0.iter().enumerate() {
                r[shift + i] -= &factor * bc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly(r).trim()
    }

    pub(crate) fn sign_at(&self, at: &Point) -> i8 {
        if self.is_zero() {
            return 0;
        }
        match at {
            Point::PosInf => sign_of(self.leading()),
            Point::NegInf => {
                let s = sign_of(self.leading());
                if self.degree().unwrap().is_multiple_of(2) {
                    s
                } else {
                    -s
                }
            }
            Point::Finite(x) => {
                // sum a_i p^i q^(n-i) has the sign of p(x) because q > 0.
                let (num, den) = (x.numer(), x.denom());
                let n = self.degree().unwrap();
                let mut acc = BigInt::zero();
                let mut qpow = BigInt::one();
                let mut qpows = Vec::with_capacity(n + 1);
                for _ in 0..=n {
                    qpows.push(qpow.clone());
                    qpow *= den;
                }
                // Homogenized Horner.
                for (i, c) in self.0.iter().enumerate().rev() {
                    acc = acc * num + c * &qpows[n - i];
                }
                sign_of(&acc)
            }
        }
    }
}

fn sign_of(x: &BigInt) -> i8 {
    match x.cmp(&BigInt::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Signed remainder sequence `a, b, -rem(a, b), ...` up to positive
/// factors. Its sign variations compute the Cauchy index of `b/a`.
pub(crate) fn signed_remainder_sequence(a: &IntPoly, b: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![a.clone()];
    if b.is_zero() {
        return seq;
    }
    seq.push(b.clone());
    loop {
        let n = seq.len();
        let r = seq[n - 2].positive_prem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        let neg = IntPoly(r.0.into_iter().map(|c| -c).collect());
        seq.push(neg.primitive());
    }
    seq
}

pub(crate) fn variations(seq: &[IntPoly], at: &Point) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(at);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm sequence of a nonzero polynomial: `p, p', -rem, ...`.
pub(crate) fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    signed_remainder_sequence(p, &p.derivative())
}

/// Number of distinct real roots of `p` in `range`.
pub fn sturm_count(p: &Polynomial, range: &RootRange) -> Result<usize> {
    Ok(SturmSequence::new(p)?.count(range))
}

/// Sturm sequence of the square-free part of a polynomial, built once and
/// reused for many counts.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    squarefree: Polynomial,
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::DegenerateInput("Sturm count of the zero polynomial".into()));
        }
        let squarefree = squarefree_part(p)?;
        let seq = sturm_sequence(&IntPoly::from_poly(&squarefree));
        Ok(SturmSequence { squarefree, seq })
    }

    pub fn squarefree(&self) -> &Polynomial {
        &self.squarefree
    }

    /// Distinct real roots in `range`.
    pub fn count(&self, range: &RootRange) -> usize {
        count_with(&self.seq, range)
    }

    /// Whether a root lies in `(lo, hi]`, or at the point itself for a
    /// degenerate interval.
    pub fn has_root_in(&self, iv: &Interval) -> bool {
        if self.squarefree.deg() == 0 {
            return false;
        }
        if iv.is_point() {
            return self.vanishes_at(&iv.lo);
        }
        self.count(&RootRange::HalfOpen(iv.clone())) > 0
    }

    pub fn vanishes_at(&self, x: &Rational) -> bool {
        self.seq.first().is_some_and(|p| p.sign_at(&Point::Finite(x.clone())) == 0)
    }

    /// Isolating intervals for every distinct real root, left to right.
    pub fn isolate(&self) -> Vec<Interval> {
        if self.squarefree.deg() == 0 {
            return Vec::new();
        }
        let bound = fujiwara_bound(&self.squarefree);
        let mut out = Vec::new();
        let lo = -bound.clone();
        let v_lo = variations(&self.seq, &Point::Finite(lo.clone()));
        let v_hi = variations(&self.seq, &Point::Finite(bound.clone()));
        bisect_isolate(&self.seq, lo, v_lo, bound, v_hi, &mut out);
        out
    }
}

/// Primitive gcd of two integer polynomials, positive leading coefficient.
pub(crate) fn primitive_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (a.clone().primitive(), b.clone().primitive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.positive_prem(&b).primitive();
        a = b;
        b = r;
    }
    if !a.is_zero() && a.leading().is_negative() {
        a = IntPoly(a.0.into_iter().map(|c| -c).collect());
    }
    a
}

fn count_with(seq: &[IntPoly], range: &RootRange) -> usize {
    let (lo, hi) = match range {
        RootRange::Whole => (Point::NegInf, Point::PosInf),
        RootRange::HalfOpen(iv) => (Point::Finite(iv.lo.clone()), Point::Finite(iv.hi.clone())),
    };
    variations(seq, &lo).saturating_sub(variations(seq, &hi))
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("square-free part of zero".into()));
    }
    if p.deg() == 0 {
        return Ok(Polynomial::one());
    }
    let g = p.gcd(&p.derivative())?;
    Ok(p.exact_div(&g)?.monic())
}

/// Yun's square-free decomposition: monic, pairwise coprime, square-free
/// factors `f_k` with `p = lc * prod f_k^k`. Only factors of positive degree
/// are returned, tagged with their multiplicity.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("square-free decomposition of zero".into()));
    }
    let mut out = Vec::new();
    if p.deg() == 0 {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp)?;
    let mut b = p.exact_div(&a0)?;
    let mut c = dp.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    loop {
        let a = b.gcd(&d)?;
        if a.deg() > 0 {
            out.push((a.clone(), k));
        }
        b = b.exact_div(&a)?;
        if b.deg() == 0 {
            break;
        }
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        k += 1;
    }
    Ok(out)
}

/// Bound `1 + max |a_i / a_d|` on the absolute value of every root.
pub fn cauchy_bound(p: &Polynomial) -> Rational {
    let lc = p.leading().abs();
    let n = p.deg();
    p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::one()
}

/// Power of two strictly above every root modulus, from Fujiwara's bound
/// `2 max_k |a_(n-k) / a_n|^(1/k)` with each k-th root rounded up to a
/// power of two through bit lengths.
pub fn fujiwara_bound(p: &Polynomial) -> Rational {
    let n = p.deg();
    let lc = p.leading().abs();
    let mut e_max: i64 = 0;
    for k in 1..=n {
        let c = &p.coeffs()[n - k];
        if c.is_zero() {
            continue;
        }
        let r = c.abs() / &lc;
        // r < 2^(bits(num) - bits(den) + 1)
        let log = r.numer().bits() as i64 - r.denom().bits() as i64 + 1;
        let e = if log <= 0 { log / k as i64 } else { (log + k as i64 - 1) / k as i64 };
        e_max = e_max.max(e);
    }
    Rational::from_integer(BigInt::one() << (e_max + 2) as usize)
}

/// One isolating interval per distinct real root of `p`, sorted
/// left to right.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("root isolation of zero".into()));
    }
    Ok(SturmSequence::new(p)?.isolate())
}

fn bisect_isolate(
    seq: &[IntPoly],
    lo: Rational,
    v_lo: usize,
    hi: Rational,
    v_hi: usize,
    out: &mut Vec<Interval>,
) {
    let count = v_lo.saturating_sub(v_hi);
    match count {
        0 => {}
        1 => out.push(Interval { lo, hi }),
        _ => {
            let mid = (&lo + &hi) / int(2);
            let v_mid = variations(seq, &Point::Finite(mid.clone()));
            bisect_isolate(seq, lo, v_lo, mid.clone(), v_mid, out);
            bisect_isolate(seq, mid, v_mid, hi, v_hi, out);
        }
    }
}

/// Cauchy index of `num/den` over the whole real line, via the signed
/// remainder sequence of `(den, num)`.
pub fn cauchy_index(num: &Polynomial, den: &Polynomial) -> Result<i64> {
    if den.is_zero() {
        return Err(Error::DegenerateInput("Cauchy index with zero denominator".into()));
    }
    let seq = signed_remainder_sequence(&IntPoly::from_poly_signed(den), &IntPoly::from_poly_signed(num));
    let lo = variations(&seq, &Point::NegInf) as i64;
    let hi = variations(&seq, &Point::PosInf) as i64;
    Ok(lo - hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn half_open(lo: i64, hi: i64) -> RootRange {
        RootRange::HalfOpen(Interval::new(int(lo), int(hi)).unwrap())
    }

    #[test]
    fn sturm_count_examples() {
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), &half_open(-2, 2)).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &RootRange::Whole).unwrap(), 0);
        let double = p(&[1, 2]).pow(2);
        assert_eq!(sturm_count(&double, &RootRange::Whole).unwrap(), 1);
        assert!(sturm_count(&Polynomial::zero(), &RootRange::Whole).is_err());
    }

    #[test]
    fn half_open_endpoints() {
        // roots at -1 and 1: (-1, 1] contains only 1
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), &half_open(-1, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), &half_open(-2, -1)).unwrap(), 1);
    }

    #[test]
    fn squarefree_examples() {
        let sq = Polynomial::linear(int(1), rat(1, 2)).pow(2);
        assert_eq!(squarefree_part(&sq).unwrap(), Polynomial::linear(int(1), rat(1, 2)));
        assert_eq!(squarefree_part(&p(&[2, 4])).unwrap(), Polynomial::linear(int(1), rat(1, 2)));
        // (x^2 + x)(x + 1) -> x^2 + x
        let a = &p(&[0, 1, 1]) * &p(&[1, 1]);
        assert_eq!(squarefree_part(&a).unwrap(), p(&[0, 1, 1]));
    }

    #[test]
    fn yun_decomposition() {
        let f = &(&p(&[1, 1]).pow(3) * &p(&[-2, 1]).pow(2)) * &p(&[5, 0, 1]);
        let dec = squarefree_decomposition(&f.scale(&int(3))).unwrap();
        assert_eq!(dec, vec![(p(&[5, 0, 1]), 1), (p(&[-2, 1]), 2), (p(&[1, 1]), 3)]);
    }

    #[test]
    fn isolation_examples() {
        let ivs = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 2);
        let neg = ivs[0].refine(&p(&[-2, 0, 1]), &rat(1, 2));
        assert!(neg.lo >= int(-2) && neg.hi <= int(-1));
        let pos = ivs[1].refine(&p(&[-2, 0, 1]), &rat(1, 2));
        assert!(pos.lo >= int(1) && pos.hi <= int(2));
        assert!(isolate_real_roots(&p(&[7])).unwrap().is_empty());
    }

    #[test]
    fn bisect_hits_exact_root() {
        let iv = Interval::new(int(-1), int(3)).unwrap();
        let q = p(&[-1, 1]);
        let r = iv.bisect(&q);
        assert!(r.is_point());
        assert_eq!(r.lo, int(1));
    }

    #[test]
    fn cauchy_index_simple_pole() {
        // 1/x jumps from -inf to +inf at 0
        assert_eq!(cauchy_index(&p(&[1]), &p(&[0, 1])).unwrap(), 1);
        assert_eq!(cauchy_index(&p(&[-1]), &p(&[0, 1])).unwrap(), -1);
        // x/(x^2+1) has no poles
        assert_eq!(cauchy_index(&p(&[0, 1]), &p(&[1, 0, 1])).unwrap(), 0);
    }

    #[test]
    fn fujiwara_bound_exceeds_roots() {
        let q = Polynomial::from_roots(&[int(100), int(-3), rat(1, 7)]);
        let b = fujiwara_bound(&q);
        assert!(b > int(100) && b <= cauchy_bound(&q) * int(4));
        assert!(fujiwara_bound(&p(&[0, 0, 0, 5])) > int(0));
        let tiny = Polynomial::from_roots(&[rat(1, 1000), rat(-1, 999)]);
        assert!(fujiwara_bound(&tiny) > rat(1, 999));
    }
}
