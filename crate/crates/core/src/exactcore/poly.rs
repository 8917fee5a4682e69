use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{factorial, format_rational, int, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Binary operations accepted by [`poly_arith`].
#[derive(Clone, Debug)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    ExactDiv,
    Gcd,
    Derivative,
    ShiftBy(Rational),
    ScaleArg(Rational),
}

/// Single dispatch point over the polynomial operations. Unary operations
/// (`Derivative`, `ShiftBy`, `ScaleArg`) ignore `b`.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    Ok(match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
        PolyOp::ExactDiv => a.exact_div(b)?,
        PolyOp::Gcd => a.gcd(b)?,
        PolyOp::Derivative => a.derivative(),
        PolyOp::ShiftBy(c) => a.shift_by(&c),
        PolyOp::ScaleArg(c) => a.scale_arg(&c),
    })
}

pub fn poly_eval(p: &Polynomial, x: &Rational) -> Rational {
    p.eval(x)
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `a*x + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Monic polynomial with the given roots (repeated roots allowed).
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(Rational::one(), -r))
    }

    /// `binom(arg, k) = arg (arg-1) ... (arg-k+1) / k!` as a polynomial in x.
    pub fn binomial(arg: &Polynomial, k: usize) -> Self {
        let mut acc = Self::one();
        for i in 0..k {
            acc = &acc * &(arg - &Self::constant(int(i as i64)));
        }
        acc.scale(&Rational::new(BigInt::one(), factorial(k)))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial reported as 0; for call sites that
    /// have already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `x ↦ p(x + c)`
    pub fn shift_by(&self, c: &Rational) -> Self {
        // Horner in the shifted variable.
        let step = Self::linear(Rational::one(), c.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * &step) + &Self::constant(a.clone())
        })
    }

    /// `x ↦ p(c x)`
    pub fn scale_arg(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Self::new(out)
    }

    /// `p(q(x))`
    pub fn compose(&self, q: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * q) + &Self::constant(a.clone())
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division. Fails on a zero divisor.
    pub fn div_rem(&self, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let db = b
            .degree()
            .ok_or_else(|| Error::DegenerateInput("division by the zero polynomial".into()))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = b.leading().recip();
        let mut quot = vec![Rational::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + db] * &lc_inv;
            if !q.is_zero() {
                for (i, bc) in b.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * bc;
                }
            }
            quot[k] = q;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn exact_div(&self, b: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Division)
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0)` is rejected.
    pub fn gcd(&self, b: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && b.is_zero() {
            return Err(Error::DegenerateInput("gcd(0, 0)".into()));
        }
        use super::sturm::{primitive_gcd, IntPoly};
        let g = primitive_gcd(&IntPoly::from_poly(self), &IntPoly::from_poly(b));
        Ok(Self::from_bigints(&g.0).monic())
    }

    /// Split into `content * primitive` where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn to_primitive_integer(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        for c in &mut ints {
            *c /= &g;
        }
        (Rational::new(g, lcm), ints)
    }

    /// Coefficient list with even powers compressed: returns `(even, odd)`
    /// such that `p(x) = even(x^2) + x * odd(x^2)`.
    pub fn even_odd_parts(&self) -> (Polynomial, Polynomial) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (Self::new(even), Self::new(odd))
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = format_rational(&mag);
            match (i, mag.is_one()) {
                (0, _) => out.push_str(&body),
                (_, true) => {}
                (_, false) if body.contains('/') => out.push_str(&format!("({body})")),
                (_, false) => out.push_str(&body),
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        let z = p(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn gcd_is_monic() {
        let a = Polynomial::new(vec![rat(-1, 4), int(0), int(1)]);
        let b = Polynomial::linear(int(1), rat(1, 2));
        assert_eq!(a.gcd(&b).unwrap(), b);
        let c = p(&[2, 4]);
        assert_eq!(a.gcd(&c).unwrap(), b);
        assert!(Polynomial::zero().gcd(&Polynomial::zero()).is_err());
        assert_eq!(Polynomial::zero().gcd(&c).unwrap(), b);
    }

    #[test]
    fn exact_div_rejects_remainder() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.exact_div(&p(&[1, 1])).unwrap(), p(&[-1, 1]));
        assert!(matches!(a.exact_div(&p(&[2, 1])), Err(Error::Division)));
    }

    #[test]
    fn shift_and_scale() {
        // (x+1)^2 shifted by -1 is x^2
        let a = p(&[1, 2, 1]);
        assert_eq!(a.shift_by(&int(-1)), p(&[0, 0, 1]));
        assert_eq!(a.scale_arg(&int(2)), p(&[1, 4, 4]));
        let ops = poly_arith(&a, &Polynomial::zero(), PolyOp::ShiftBy(int(-1))).unwrap();
        assert_eq!(ops, p(&[0, 0, 1]));
    }

    #[test]
    fn eval_examples() {
        let cube = p(&[1, 2]).pow(3);
        assert_eq!(poly_eval(&cube, &rat(-1, 2)), int(0));
        assert_eq!(poly_eval(&p(&[1, 2, 2]), &int(3)), int(25));
    }

    #[test]
    fn binomial_poly() {
        // binom(x + 2, 2) = (x+2)(x+1)/2
        let b = Polynomial::binomial(&p(&[2, 1]), 2);
        assert_eq!(b, Polynomial::new(vec![int(1), rat(3, 2), rat(1, 2)]));
    }

    #[test]
    fn display() {
        let a = Polynomial::new(vec![int(1), rat(-1, 2), int(0), int(3)]);
        assert_eq!(a.to_string(), "3x^3 - (1/2)x + 1");
    }

    #[test]
    fn primitive_integer_split() {
        let a = Polynomial::new(vec![rat(-1, 2), rat(-3, 4)]);
        let (c, ints) = a.to_primitive_integer();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(3)]);
        assert_eq!(c, rat(-1, 4));
    }
}
