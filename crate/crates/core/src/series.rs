//! δ-vectors and Ehrhart series `(Σ δ_i t^i) / (1 - t)^(d+1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcore::rational::factorial;
use crate::exactcore::{int, Polynomial, Rational};

/// Rational generating function `(Σ δ_i t^i) / (1 - t)^(dim+1)`.
///
/// `delta` is stored trimmed; comparisons pad it to `dim + 1` entries.
/// Entries are not required to be nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartData {
    pub delta: Vec<Rational>,
    pub dim: usize,
}

/// Outcome of the three algebraic reflexivity tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexivityChecks {
    /// δ_j = δ_{d-j}
    pub palindromic: bool,
    /// H(m) = (-1)^d H(-m-1)
    pub functional_eq: bool,
    /// d a_d = 2 a_{d-1}
    pub coeff_relation: bool,
}

impl ReflexivityChecks {
    pub fn all(&self) -> bool {
        self.palindromic && self.functional_eq && self.coeff_relation
    }

    pub fn consistent(&self) -> bool {
        self.palindromic == self.functional_eq && self.functional_eq == self.coeff_relation
    }
}

impl EhrhartData {
    pub fn new(delta: Vec<Rational>, dim: usize) -> Self {
        let mut delta = delta;
        while delta.last().is_some_and(Zero::is_zero) {
            delta.pop();
        }
        EhrhartData { delta, dim }
    }

    /// Numerator given as a polynomial in t.
    pub fn from_numerator(num: &Polynomial, dim: usize) -> Self {
        Self::new(num.coeffs().to_vec(), dim)
    }

    pub fn from_ints(delta: &[i64], dim: usize) -> Self {
        Self::new(delta.iter().map(|&c| int(c)).collect(), dim)
    }

    pub fn numerator(&self) -> Polynomial {
        Polynomial::new(self.delta.clone())
    }

    /// δ padded with zeros to length `dim + 1` (or longer, if the stored
    /// numerator exceeds the dimension).
    pub fn padded(&self) -> Vec<Rational> {
        let mut v = self.delta.clone();
        if v.len() < self.dim + 1 {
            v.resize(self.dim + 1, Rational::zero());
        }
        v
    }

    /// δ₀ = 1, all entries nonnegative integers, length ≤ d+1.
    pub fn is_lattice_data(&self) -> bool {
        self.delta.first().is_some_and(One::is_one)
            && self.delta.len() <= self.dim + 1
            && self
                .delta
                .iter()
                .all(|c| c.is_integer() && *c >= Rational::zero())
    }
}

/// `H(s) = Σ δ_i binom(s + d - i, d)`
pub fn delta_to_polynomial(e: &EhrhartData) -> Polynomial {
    let d = e.dim;
    if e.delta.iter().all(Zero::is_zero) {
        return Polynomial::zero();
    }
    // integer weights over a common denominator, and d! binom(s + d - i, d)
    // = (s + d - i)(s + d - i - 1)...(s + 1 - i)
    let lcm = e.delta.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut total = vec![BigInt::zero(); d + 1];
    for (i, c) in e.delta.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let weight = c.numer() * (&lcm / c.denom());
        let mut prod = vec![weight];
        for m in 0..d {
            let r = BigInt::from(d as i64 - i as i64 - m as i64);
            prod.push(BigInt::zero());
            for k in (0..prod.len()).rev() {
                let lower = if k > 0 { prod[k - 1].clone() } else { BigInt::zero() };
                prod[k] = &prod[k] * &r + lower;
            }
        }
        for (t, p) in total.iter_mut().zip(prod) {
            *t += p;
        }
    }
    let scale = Rational::new(BigInt::one(), lcm * factorial(d));
    Polynomial::new(total.into_iter().map(|c| Rational::from_integer(c) * &scale).collect())
}

/// Inverse of [`delta_to_polynomial`], with the dimension taken from the
/// degree of `h`.
pub fn polynomial_to_delta(h: &Polynomial) -> Result<EhrhartData> {
    polynomial_to_delta_dim(h, h.deg())
}

/// Multiply `Σ h(s) t^s` by `(1 - t)^(dim+1)`; every coefficient past `t^dim`
/// must vanish.
pub fn polynomial_to_delta_dim(h: &Polynomial, dim: usize) -> Result<EhrhartData> {
    let len = 2 * dim + 3;
    let values: Vec<Rational> = (0..len).map(|s| h.eval(&int(s as i64))).collect();
    let factor = one_minus_t_pow(dim + 1);
    let mut num = vec![Rational::zero(); len];
    for (k, slot) in num.iter_mut().enumerate() {
        for (i, f) in factor.coeffs().iter().enumerate().take(k + 1) {
            *slot += f * &values[k - i];
        }
    }
    if num[dim + 1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotPolynomialEhrhartForm {
            degree: h.deg(),
            dim,
        });
    }
    num.truncate(dim + 1);
    Ok(EhrhartData::new(num, dim))
}

/// `(1 - t)^k` as a polynomial in t.
pub fn one_minus_t_pow(k: usize) -> Polynomial {
    Polynomial::from_ints(&[1, -1]).pow(k as u32)
}

/// `(1 + t)^k` as a polynomial in t.
pub fn one_plus_t_pow(k: usize) -> Polynomial {
    Polynomial::from_ints(&[1, 1]).pow(k as u32)
}

/// Coefficient of `t^k`: `Σ_{i ≤ k} δ_i binom(k - i + d, d)`.
pub fn series_coefficient(e: &EhrhartData, k: usize) -> Rational {
    e.delta
        .iter()
        .enumerate()
        .take(k + 1)
        .map(|(i, c)| {
            c * Rational::from_integer(crate::exactcore::rational::binomial(
                (k - i + e.dim) as i64,
                e.dim as i64,
            ))
        })
        .sum()
}

pub fn is_palindromic(e: &EhrhartData) -> bool {
    let v = e.padded();
    let n = v.len();
    (0..n).all(|j| v[j] == v[n - 1 - j])
}

/// Evaluate the palindromic, functional-equation and coefficient tests
/// separately.
pub fn reflexivity_checks(h: &Polynomial) -> Result<ReflexivityChecks> {
    let d = h
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Param("reflexivity checks need degree >= 1".into()))?;
    let palindromic = is_palindromic(&polynomial_to_delta_dim(h, d)?);
    let reflected = h.scale_arg(&int(-1)).shift_by(&int(1));
    let functional_eq = if d % 2 == 0 {
        *h == reflected
    } else {
        *h == -&reflected
    };
    let coeff_relation = h.coeff(d) * int(d as i64) == h.coeff(d - 1) * int(2);
    Ok(ReflexivityChecks {
        palindromic,
        functional_eq,
        coeff_relation,
    })
}

/// Numerator times `(1 + t)`, dimension plus one: coning over a new
/// degree-one vertex.
pub fn extend_by_degree_one_vertex(e: &EhrhartData) -> EhrhartData {
    EhrhartData::from_numerator(&(&e.numerator() * &one_plus_t_pow(1)), e.dim + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn h33() -> Polynomial {
        Polynomial::new(vec![
            int(1),
            rat(113, 30),
            rat(23, 4),
            rat(16, 3),
            rat(9, 4),
            rat(9, 10),
        ])
    }

    #[test]
    fn delta_to_polynomial_examples() {
        assert_eq!(
            delta_to_polynomial(&EhrhartData::from_ints(&[1, 1], 1)),
            Polynomial::from_ints(&[1, 2])
        );
        assert_eq!(
            delta_to_polynomial(&EhrhartData::from_ints(&[1], 0)),
            Polynomial::one()
        );
        assert_eq!(
            delta_to_polynomial(&EhrhartData::from_ints(&[1, 13, 40, 40, 13, 1], 5)),
            h33()
        );
    }

    #[test]
    fn polynomial_to_delta_examples() {
        assert_eq!(
            polynomial_to_delta(&Polynomial::from_ints(&[1, 2])).unwrap(),
            EhrhartData::from_ints(&[1, 1], 1)
        );
        assert_eq!(
            polynomial_to_delta(&Polynomial::from_ints(&[1, 2, 2])).unwrap(),
            EhrhartData::from_ints(&[1, 2, 1], 2)
        );
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        let h = Polynomial::from_ints(&[1, 2, 2]);
        assert!(matches!(
            polynomial_to_delta_dim(&h, 1),
            Err(Error::NotPolynomialEhrhartForm { .. })
        ));
        // Larger dimension is fine: the numerator just has trailing zeros.
        let e = polynomial_to_delta_dim(&h, 3).unwrap();
        assert_eq!(delta_to_polynomial(&e), h);
    }

    #[test]
    fn series_coefficients() {
        let k22 = EhrhartData::from_numerator(
            &(&one_plus_t_pow(1) * &Polynomial::from_ints(&[1, 4, 1])),
            3,
        );
        assert_eq!(series_coefficient(&k22, 1), int(9));
        assert_eq!(series_coefficient(&k22, 0), int(1));
        let k33 = EhrhartData::from_ints(&[1, 13, 40, 40, 13, 1], 5);
        assert_eq!(series_coefficient(&k33, 1), int(19));
    }

    #[test]
    fn palindromes() {
        assert!(is_palindromic(&EhrhartData::from_ints(&[1, 2, 1], 2)));
        assert!(!is_palindromic(&EhrhartData::from_ints(&[1, 2], 2)));
        // padded comparison: (1, 1) in dimension 2 is (1, 1, 0)
        assert!(!is_palindromic(&EhrhartData::from_ints(&[1, 1], 2)));
    }

    #[test]
    fn reflexivity_of_h33() {
        let c = reflexivity_checks(&h33()).unwrap();
        assert!(c.all());
        let c = reflexivity_checks(&Polynomial::from_ints(&[1, 2, 1])).unwrap();
        assert!(c.consistent() && !c.all());
    }

    #[test]
    fn extension() {
        let point = EhrhartData::from_ints(&[1], 0);
        assert_eq!(extend_by_degree_one_vertex(&point), EhrhartData::from_ints(&[1, 1], 1));
    }
}
