use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Ratio of two polynomials in a formal parameter, kept gcd-reduced with a
/// monic denominator, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DegenerateInput("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den.leading();
        Ok(RationalFunction {
            num: num.scale(&lc.recip()),
            den: den.monic(),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `n`, or `None` at a pole.
    pub fn eval(&self, n: &Rational) -> Option<Rational> {
        let d = self.den.eval(n);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(n) / d)
        }
    }

    /// Equality by cross-multiplication, independent of normalization.
    pub fn cross_eq(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Render with integer contents pulled out, e.g.
    /// `(3n^2 + 13n + 16)/(4(n^2 + 5n + 6))`.
    pub fn to_factored_string(&self, var: &str) -> String {
        if self.num.is_zero() {
            return "0".into();
        }
        let (cn, pn) = self.num.to_primitive_integer();
        let (cd, pd) = self.den.to_primitive_integer();
        let c = cn / cd;
        let pn = Polynomial::from_bigints(&pn);
        let pd = Polynomial::from_bigints(&pd);
        let sign = if c.is_negative() { "-" } else { "" };
        let c = c.abs();
        let (cnum, cden) = (
            Rational::from_integer(c.numer().clone()),
            Rational::from_integer(c.denom().clone()),
        );
        let wrap = |p: &Polynomial| {
            let s = p.to_string_var(var);
            if p.coeffs().iter().filter(|a| !a.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        let top = match (cnum.is_one(), pn.deg() == 0) {
            (_, true) => format_rational(&cnum),
            (true, false) => wrap(&pn),
            (false, false) => format!("{}{}", format_rational(&cnum), wrap(&pn)),
        };
        let bottom = match (cden.is_one(), pd.deg() == 0) {
            (true, true) => return format!("{sign}{top}"),
            (_, true) => format_rational(&cden),
            (true, false) => wrap(&pd),
            (false, false) => format!("({}{})", format_rational(&cden), wrap(&pd)),
        };
        format!("{sign}{top}/{bottom}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_factored_string("n"))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn reduces_and_normalizes() {
        // (2n+2)/(4n^2-4) = 1/(2n-2) = (1/2)/(n-1)
        let r = RationalFunction::new(p(&[2, 2]), p(&[-4, 0, 4])).unwrap();
        assert_eq!(r.den(), &p(&[-1, 1]));
        assert_eq!(r.num(), &Polynomial::constant(rat(1, 2)));
        assert!(r.cross_eq(&RationalFunction::new(p(&[1]), p(&[-2, 2])).unwrap()));
        assert!(RationalFunction::new(p(&[1]), Polynomial::zero()).is_err());
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap(); // 1/n
        let b = RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap(); // 1/(n+1)
        let diff = &a - &b; // 1/(n(n+1))
        assert_eq!(diff, RationalFunction::new(p(&[1]), p(&[0, 1, 1])).unwrap());
        assert_eq!(diff.eval(&int(2)), Some(rat(1, 6)));
        assert_eq!(diff.eval(&int(0)), None);
        let q = (&a / &b).unwrap();
        assert_eq!(q, RationalFunction::new(p(&[1, 1]), p(&[0, 1])).unwrap());
    }

    #[test]
    fn factored_rendering() {
        let r = RationalFunction::new(p(&[16, 13, 3]), p(&[24, 20, 4])).unwrap();
        assert_eq!(r.to_factored_string("n"), "(3n^2 + 13n + 16)/(4(n^2 + 5n + 6))");
        let half = RationalFunction::constant(rat(-1, 2));
        assert_eq!(half.to_factored_string("n"), "-1/2");
        let c = RationalFunction::new(p(&[2]), p(&[0, 1])).unwrap();
        assert_eq!(c.to_factored_string("n"), "2/n");
    }
}
