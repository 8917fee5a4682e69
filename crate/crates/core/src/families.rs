//! Closed-form Ehrhart polynomials and series for every polytope family
//! handled by the crate, plus the auxiliary polynomials H^d_j, F^d_j,
//! A^d_k, B^d_k and G^d_c.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcore::rational::{binomial, binomial_rational, format_rational};
use crate::exactcore::{int, parse_rational, rat, Polynomial, Rational};
use crate::series::{
    delta_to_polynomial, one_plus_t_pow, polynomial_to_delta, polynomial_to_delta_dim,
    EhrhartData,
};

/// A member of one of the supported families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// Cross polytope Cr_d.
    Cross { d: usize },
    /// Dual of the Stasheff polytope (associahedron).
    Stasheff { d: usize },
    RootA { d: usize },
    RootB { d: usize },
    RootC { d: usize },
    RootD { d: usize },
    /// Dual of the type A root polytope.
    DualA { d: usize },
    /// `[-1, 1]^d`, the dual of the cross polytope.
    Cube { d: usize },
    /// conv(e_1, ..., e_d, -e_1 - ... - e_d), δ = (1, ..., 1).
    SimplexP { d: usize },
    /// The same simplex with numerator `t + ... + t^d` taken literally.
    SimplexPLiteral { d: usize },
    DualSimplexP { d: usize },
    K1n { n: usize },
    K2n { n: usize },
    K3n { n: usize },
    /// Bipartite graph of type (2, n) built from K_{2,m} by adding
    /// degree-one vertices.
    Bipartite2 { m: usize, n: usize },
    /// Coefficients of `(1+t)^j / (1-t)^d`.
    Hdj { d: usize, j: usize },
    Fdj { d: usize, j: usize },
    Adk { d: usize, k: usize },
    Bdk { d: usize, k: usize },
    /// `H^d_{d-1}(x) + (c-2) H^d_{d-3}(x-1)`
    Gdc { d: usize, c: Rational },
}

impl FamilyId {
    /// Check parameter ranges.
    pub fn validate(&self) -> Result<()> {
        use FamilyId::*;
        let bad = |msg: String| Err(Error::Param(msg));
        match *self {
            RootB { d } if d < 1 => bad("rootb needs d >= 1".into()),
            RootD { d } if d < 2 => bad("rootd needs d >= 2".into()),
            SimplexP { d } | SimplexPLiteral { d } if d < 1 => bad("simplexp needs d >= 1".into()),
            K2n { n } | K3n { n } if n < 1 => bad("k2n/k3n need n >= 1".into()),
            Bipartite2 { m, n } if m < 1 || m > n => bad("bip2 needs 1 <= m <= n".into()),
            Hdj { d, j } | Fdj { d, j } if j >= d => bad(format!("need 0 <= j < d, got d={d}, j={j}")),
            Adk { d, k } if 2 * k + 1 > d => bad(format!("adk needs 2k <= d-1, got d={d}, k={k}")),
            Bdk { d, k } if 2 * k + 2 > d => bad(format!("bdk needs 2k+1 <= d-1, got d={d}, k={k}")),
            Gdc { d, .. } if d < 3 => bad("g needs d >= 3".into()),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        use FamilyId::*;
        match self {
            Cross { .. } => "cross",
            Stasheff { .. } => "stasheff",
            RootA { .. } => "roota",
            RootB { .. } => "rootb",
            RootC { .. } => "rootc",
            RootD { .. } => "rootd",
            DualA { .. } => "duala",
            Cube { .. } => "cube",
            SimplexP { .. } => "simplexp",
            SimplexPLiteral { .. } => "simplexp_literal",
            DualSimplexP { .. } => "dualsimplexp",
            K1n { .. } => "k1n",
            K2n { .. } => "k2n",
            K3n { .. } => "k3n",
            Bipartite2 { .. } => "bip2",
            Hdj { .. } => "h",
            Fdj { .. } => "f",
            Adk { .. } => "a",
            Bdk { .. } => "b",
            Gdc { .. } => "g",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyId::*;
        let name = self.name();
        match self {
            Cross { d } | Stasheff { d } | RootA { d } | RootB { d } | RootC { d } | RootD { d }
            | DualA { d } | Cube { d } | SimplexP { d } | SimplexPLiteral { d }
            | DualSimplexP { d } => write!(f, "{name}:d={d}"),
            K1n { n } | K2n { n } | K3n { n } => write!(f, "{name}:n={n}"),
            Bipartite2 { m, n } => write!(f, "{name}:m={m},n={n}"),
            Hdj { d, j } | Fdj { d, j } => write!(f, "{name}:d={d},j={j}"),
            Adk { d, k } | Bdk { d, k } => write!(f, "{name}:d={d},k={k}"),
            Gdc { d, c } => write!(f, "{name}:d={d},c={}", format_rational(c)),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// `name:key=value,...`, e.g. `cross:d=5`, `g:d=9,c=30`, `bip2:m=2,n=5`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected name:key=value in {s:?}")))?;
        let mut params: Vec<(&str, &str)> = Vec::new();
        for tok in rest.split(',').filter(|t| !t.trim().is_empty()) {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad parameter token {tok:?}")))?;
            params.push((k.trim(), v.trim()));
        }
        let raw = |key: &str| -> Result<&str> {
            params
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::Parse(format!("{name}: missing parameter {key:?}")))
        };
        let num = |key: &str| -> Result<usize> {
            let v = raw(key)?;
            v.parse()
                .map_err(|_| Error::Parse(format!("{name}: {key}={v:?} is not a nonnegative integer")))
        };
        let expect = |keys: &[&str]| -> Result<()> {
            match params.iter().find(|(k, _)| !keys.contains(k)) {
                Some((k, _)) => Err(Error::Parse(format!("{name}: unexpected parameter {k:?}"))),
                None => Ok(()),
            }
        };
        use FamilyId::*;
        let id = match name.trim() {
            "cross" | "stasheff" | "roota" | "rootb" | "rootc" | "rootd" | "duala" | "cube"
            | "simplexp" | "simplexp_literal" | "dualsimplexp" => {
                expect(&["d"])?;
                let d = num("d")?;
                match name.trim() {
                    "cross" => Cross { d },
                    "stasheff" => Stasheff { d },
                    "roota" => RootA { d },
                    "rootb" => RootB { d },
                    "rootc" => RootC { d },
                    "rootd" => RootD { d },
                    "duala" => DualA { d },
                    "cube" => Cube { d },
                    "simplexp" => SimplexP { d },
                    "simplexp_literal" => SimplexPLiteral { d },
                    _ => DualSimplexP { d },
                }
            }
            "k1n" | "k2n" | "k3n" => {
                expect(&["n"])?;
                let n = num("n")?;
                match name.trim() {
                    "k1n" => K1n { n },
                    "k2n" => K2n { n },
                    _ => K3n { n },
                }
            }
            "bip2" => {
                expect(&["m", "n"])?;
                Bipartite2 {
                    m: num("m")?,
                    n: num("n")?,
                }
            }
            "h" | "hdj" => {
                expect(&["d", "j"])?;
                Hdj { d: num("d")?, j: num("j")? }
            }
            "f" | "fdj" => {
                expect(&["d", "j"])?;
                Fdj { d: num("d")?, j: num("j")? }
            }
            "a" | "adk" => {
                expect(&["d", "k"])?;
                Adk { d: num("d")?, k: num("k")? }
            }
            "b" | "bdk" => {
                expect(&["d", "k"])?;
                Bdk { d: num("d")?, k: num("k")? }
            }
            "g" | "gdc" => {
                expect(&["d", "c"])?;
                Gdc {
                    d: num("d")?,
                    c: parse_rational(raw("c")?)?,
                }
            }
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        id.validate()?;
        Ok(id)
    }
}

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn delta_from(coeffs: impl IntoIterator<Item = Rational>, dim: usize) -> EhrhartData {
    EhrhartData::new(coeffs.into_iter().collect(), dim)
}

/// `Σ_k w_k binom(x + d - k, d)` for integer weights.
fn weighted_binomial_sum(weights: &[Rational], d: usize) -> Polynomial {
    delta_to_polynomial(&EhrhartData::new(weights.to_vec(), d))
}

/// `H^d_j(x) = Σ_i binom(j, i) binom(x + d - 1 - i, d - 1)`
pub fn hdj_polynomial(d: usize, j: usize) -> Polynomial {
    let weights: Vec<Rational> = (0..=j as i64).map(|i| big(binomial(j as i64, i))).collect();
    weighted_binomial_sum(&weights, d - 1)
}

/// F^d_j: H^d_j with its trivial roots -1, ..., -(d-1-j) divided out,
/// recentred at zero.
pub fn build_f(d: usize, j: usize) -> Result<Polynomial> {
    FamilyId::Fdj { d, j }.validate()?;
    let trivial = Polynomial::from_roots(
        &(1..d - j).map(|i| int(-(i as i64))).collect::<Vec<_>>(),
    );
    let reduced = hdj_polynomial(d, j).exact_div(&trivial).map_err(|_| {
        Error::Internal(format!("H^{d}_{j} is not divisible by (x+1)...(x+{})", d - 1 - j))
    })?;
    Ok(reduced.shift_by(&rat(-(d as i64 - j as i64), 2)))
}

/// A^d_k with `F^d_{2k}(x) = A^d_k(x^2)`.
pub fn build_a(d: usize, k: usize) -> Result<Polynomial> {
    FamilyId::Adk { d, k }.validate()?;
    let (even, odd) = build_f(d, 2 * k)?.even_odd_parts();
    if !odd.is_zero() {
        return Err(Error::Internal(format!("F^{d}_{} is not even", 2 * k)));
    }
    Ok(even)
}

/// B^d_k with `F^d_{2k+1}(x) = x B^d_k(x^2)`.
pub fn build_b(d: usize, k: usize) -> Result<Polynomial> {
    FamilyId::Bdk { d, k }.validate()?;
    let (even, odd) = build_f(d, 2 * k + 1)?.even_odd_parts();
    if !even.is_zero() {
        return Err(Error::Internal(format!("F^{d}_{} is not odd", 2 * k + 1)));
    }
    Ok(odd)
}

/// `G^d_c = H^d_{d-1}(x) + (c - 2) H^d_{d-3}(x - 1)`
pub fn build_g(d: usize, c: &Rational) -> Result<Polynomial> {
    FamilyId::Gdc { d, c: c.clone() }.validate()?;
    let shifted = hdj_polynomial(d, d - 3).shift_by(&int(-1));
    Ok(&hdj_polynomial(d, d - 1) + &shifted.scale(&(c - int(2))))
}

/// Three-term form `H^d_{d-3}(x) + c H^d_{d-3}(x-1) + H^d_{d-3}(x-2)` of
/// G^d_c; an independent route to the same polynomial.
pub fn build_g_three_term(d: usize, c: &Rational) -> Result<Polynomial> {
    FamilyId::Gdc { d, c: c.clone() }.validate()?;
    let h = hdj_polynomial(d, d - 3);
    Ok(&(&h + &h.shift_by(&int(-1)).scale(c)) + &h.shift_by(&int(-2)))
}

/// Ehrhart series (δ-vector and dimension) of a family member.
pub fn family_series(id: &FamilyId) -> Result<EhrhartData> {
    id.validate()?;
    use FamilyId::*;
    Ok(match *id {
        Cross { d } => EhrhartData::from_numerator(&one_plus_t_pow(d), d),
        Stasheff { d } => {
            let (d1, di) = (d as i64 + 1, d as i64);
            let narayana = (0..=di).map(|k| {
                big(binomial(d1, k + 1) * binomial(d1, k)) / int(d1)
            });
            delta_from(narayana, d)
        }
        RootA { d } => delta_from((0..=d as i64).map(|k| big(binomial(d as i64, k).pow(2))), d),
        RootC { d } => delta_from((0..=d as i64).map(|k| big(binomial(2 * d as i64, 2 * k))), d),
        RootB { d } => root_bd_series(d, 2 * d + 1, d - 1),
        RootD { d } => root_bd_series(d, 2 * d, d - 2),
        SimplexP { d } => delta_from(std::iter::repeat_n(Rational::one(), d + 1), d),
        SimplexPLiteral { d } => delta_from(
            std::iter::once(Rational::zero()).chain(std::iter::repeat_n(Rational::one(), d)),
            d,
        ),
        K1n { n } => EhrhartData::from_numerator(&one_plus_t_pow(n), n),
        K2n { n } => bipartite2_series(n, n),
        Bipartite2 { m, n } => bipartite2_series(m, n),
        K3n { n } => {
            let ni = n as i64;
            let quartic = Polynomial::from_ints(&[1, 4 * ni, 3 * ni * ni - ni + 4, 4 * ni, 1]);
            let num = if n >= 2 {
                &one_plus_t_pow(n - 2) * &quartic
            } else {
                quartic.exact_div(&one_plus_t_pow(1)).map_err(|_| {
                    Error::Internal("K_{3,1} numerator not divisible by 1+t".into())
                })?
            };
            EhrhartData::from_numerator(&num, n + 2)
        }
        Hdj { d, j } => EhrhartData::from_numerator(&one_plus_t_pow(j), d - 1),
        DualA { .. } | Cube { .. } | DualSimplexP { .. } => {
            polynomial_to_delta(&family_polynomial(id)?)?
        }
        Gdc { d, .. } => polynomial_to_delta_dim(&family_polynomial(id)?, d - 1)?,
        Fdj { .. } | Adk { .. } | Bdk { .. } => {
            return Err(Error::Param(format!("{} has no Ehrhart series form", id.name())))
        }
    })
}

/// `Σ_k binom(top, 2k) t^k - 2d t (1+t)^power`
fn root_bd_series(d: usize, top: usize, power: usize) -> EhrhartData {
    let main = Polynomial::new(
        (0..=d as i64)
            .map(|k| big(binomial(top as i64, 2 * k)))
            .collect(),
    );
    let corr = (&Polynomial::monomial(int(2 * d as i64), 1) * &one_plus_t_pow(power)).scale(&int(1));
    EhrhartData::from_numerator(&(&main - &corr), d)
}

/// `(1+t)^(n-1) (1 + 2mt + t^2) / (1-t)^(n+2)`
fn bipartite2_series(m: usize, n: usize) -> EhrhartData {
    let q = Polynomial::from_ints(&[1, 2 * m as i64, 1]);
    EhrhartData::from_numerator(&(&one_plus_t_pow(n - 1) * &q), n + 1)
}

/// Ehrhart (or auxiliary) polynomial of a family member.
pub fn family_polynomial(id: &FamilyId) -> Result<Polynomial> {
    id.validate()?;
    use FamilyId::*;
    Ok(match *id {
        Cross { d } => {
            let w: Vec<_> = (0..=d as i64).map(|k| big(binomial(d as i64, k))).collect();
            weighted_binomial_sum(&w, d)
        }
        Stasheff { d } => {
            // (1/(d+1)) Σ binom(d+1, k+1) binom(d+1, k) binom(m+d-k, d)
            let d1 = d as i64 + 1;
            let w: Vec<_> = (0..=d as i64)
                .map(|k| big(binomial(d1, k + 1) * binomial(d1, k)))
                .collect();
            weighted_binomial_sum(&w, d).scale(&rat(1, d1))
        }
        RootA { d } => {
            let w: Vec<_> = (0..=d as i64).map(|k| big(binomial(d as i64, k).pow(2))).collect();
            weighted_binomial_sum(&w, d)
        }
        RootC { d } => {
            let w: Vec<_> = (0..=d as i64)
                .map(|k| big(binomial(2 * d as i64, 2 * k)))
                .collect();
            weighted_binomial_sum(&w, d)
        }
        DualA { d } => Polynomial::new(
            (0..=d as i64)
                .map(|i| big(binomial(d as i64 + 1, i)))
                .collect(),
        ),
        Cube { d } => Polynomial::from_ints(&[1, 2]).pow(d as u32),
        DualSimplexP { d } => {
            Polynomial::binomial(&Polynomial::from_ints(&[d as i64, d as i64 + 1]), d)
        }
        Hdj { d, j } => hdj_polynomial(d, j),
        Fdj { d, j } => build_f(d, j)?,
        Adk { d, k } => build_a(d, k)?,
        Bdk { d, k } => build_b(d, k)?,
        Gdc { d, ref c } => build_g(d, c)?,
        RootB { .. } | RootD { .. } | SimplexP { .. } | SimplexPLiteral { .. } | K1n { .. }
        | K2n { .. } | K3n { .. } | Bipartite2 { .. } => delta_to_polynomial(&family_series(id)?),
    })
}

/// Exact terminating generalized hypergeometric sum
/// `Σ_k Π(a_i)_k / Π(b_j)_k · z^k / k!`.
///
/// Some upper parameter must be a nonpositive integer `-N` with
/// `N <= terms`, so the sum is finite.
pub fn hypergeometric_sum(
    upper: &[Rational],
    lower: &[Rational],
    arg: &Rational,
    terms: usize,
) -> Result<Rational> {
    let terminates = upper.iter().any(|a| {
        a.is_integer() && *a <= Rational::zero() && -a <= int(terms as i64)
    });
    if !terminates {
        return Err(Error::Param(format!(
            "series does not terminate within {terms} terms"
        )));
    }
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=terms {
        sum += &term;
        let kk = int(k as i64);
        let num: Rational = upper.iter().map(|a| a + &kk).product();
        if num.is_zero() {
            return Ok(sum);
        }
        let den: Rational = lower.iter().map(|b| b + &kk).product();
        if den.is_zero() {
            return Err(Error::Pole { term: k + 1 });
        }
        term = term * num / den * arg / int(k as i64 + 1);
    }
    Ok(sum)
}

/// Hypergeometric evaluation of a family polynomial at a nonnegative
/// integer `m`: `binom(m+d, m) pFq(...)` for the cross, Stasheff, type A
/// and type C families, and `binom(m+d-1, d-1) 2F1(-j, -m; 1-d-m; -1)` for
/// H^d_j.
pub fn family_hypergeometric(id: &FamilyId, m: usize) -> Result<Rational> {
    id.validate()?;
    let mi = int(m as i64);
    let terms = 4 * (m + 64);
    use FamilyId::*;
    match *id {
        Cross { d } => {
            let di = int(d as i64);
            let pre = big(binomial((m + d) as i64, m as i64));
            Ok(pre * hypergeometric_sum(&[-&di, -&mi], &[-&di - &mi], &int(-1), terms)?)
        }
        Stasheff { d } => {
            let di = int(d as i64);
            let pre = big(binomial((m + d) as i64, m as i64));
            Ok(pre
                * hypergeometric_sum(
                    &[-&di - int(1), -&di, -&mi],
                    &[int(2), -&di - &mi],
                    &int(1),
                    terms,
                )?)
        }
        RootA { d } => {
            let di = int(d as i64);
            let pre = big(binomial((m + d) as i64, m as i64));
            Ok(pre * hypergeometric_sum(&[-&di, -&di, -&mi], &[int(1), -&di - &mi], &int(1), terms)?)
        }
        RootC { d } => {
            let di = int(d as i64);
            let pre = big(binomial((m + d) as i64, m as i64));
            Ok(pre
                * hypergeometric_sum(
                    &[-&di, -&mi, rat(1, 2) - &di],
                    &[rat(1, 2), -&di - &mi],
                    &int(1),
                    terms,
                )?)
        }
        Hdj { d, j } => {
            let pre = binomial_rational(&int((m + d - 1) as i64), d - 1);
            Ok(pre
                * hypergeometric_sum(
                    &[int(-(j as i64)), -&mi],
                    &[int(1 - d as i64) - &mi],
                    &int(-1),
                    terms,
                )?)
        }
        _ => Err(Error::Param(format!("{} has no hypergeometric form", id.name()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Polynomial {
        family_polynomial(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["cross:d=5", "g:d=9,c=30", "k3n:n=4", "bip2:m=2,n=5", "g:d=6,c=-3/2", "h:d=6,j=3"] {
            let id: FamilyId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!("cross:n=5".parse::<FamilyId>().is_err());
        assert!("cross".parse::<FamilyId>().is_err());
        assert!("nope:d=1".parse::<FamilyId>().is_err());
        assert!(matches!("h:d=3,j=3".parse::<FamilyId>(), Err(Error::Param(_))));
        assert!(matches!("bip2:m=3,n=2".parse::<FamilyId>(), Err(Error::Param(_))));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(fam("roota:d=2"), Polynomial::from_ints(&[1, 3, 3]));
        assert_eq!(fam("duala:d=1"), Polynomial::from_ints(&[1, 2]));
        assert_eq!(fam("duala:d=3"), Polynomial::from_ints(&[1, 4, 6, 4]));
        assert_eq!(fam("cube:d=2"), Polynomial::from_ints(&[1, 4, 4]));
        assert_eq!(
            fam("k3n:n=3"),
            Polynomial::new(vec![int(1), rat(113, 30), rat(23, 4), rat(16, 3), rat(9, 4), rat(9, 10)])
        );
    }

    #[test]
    fn series_examples() {
        let s = family_series(&FamilyId::K2n { n: 3 }).unwrap();
        let expected = &one_plus_t_pow(2) * &Polynomial::from_ints(&[1, 6, 1]);
        assert_eq!(s.numerator(), expected);
        assert_eq!(s.dim, 4);
        let s = family_series(&FamilyId::K1n { n: 1 }).unwrap();
        assert_eq!(s.numerator(), one_plus_t_pow(1));
        let s = family_series(&FamilyId::K3n { n: 3 }).unwrap();
        let expected = &one_plus_t_pow(1) * &Polynomial::from_ints(&[1, 12, 28, 12, 1]);
        assert_eq!(s.numerator(), expected);
        // K_{3,1} is the star K_{1,3}
        assert_eq!(
            family_series(&FamilyId::K3n { n: 1 }).unwrap(),
            family_series(&FamilyId::K1n { n: 3 }).unwrap()
        );
    }

    #[test]
    fn root_bd_numerators() {
        let b6 = family_series(&FamilyId::RootB { d: 6 }).unwrap();
        assert_eq!(b6, EhrhartData::from_ints(&[1, 66, 655, 1596, 1167, 226, 1], 6));
        let d6 = family_series(&FamilyId::RootD { d: 6 }).unwrap();
        assert_eq!(d6, EhrhartData::from_ints(&[1, 54, 447, 852, 447, 54, 1], 6));
    }

    #[test]
    fn g_matches_k2n() {
        for n in 1..=8 {
            let g = build_g(n + 2, &int(2 * n as i64)).unwrap();
            assert_eq!(g, fam(&format!("k2n:n={n}")));
        }
    }

    #[test]
    fn g_two_routes_agree() {
        for d in 3..=9 {
            for c in [-2, 0, 3, 17] {
                assert_eq!(build_g(d, &int(c)).unwrap(), build_g_three_term(d, &int(c)).unwrap());
            }
        }
    }

    #[test]
    fn f_base_values() {
        for d in 2..=10usize {
            let fact = big(crate::exactcore::rational::factorial(d - 1));
            assert_eq!(build_f(d, 0).unwrap(), Polynomial::constant(fact.recip()));
            assert_eq!(
                build_f(d, 1).unwrap(),
                Polynomial::monomial(int(2) / &fact, 1)
            );
        }
    }

    #[test]
    fn hdj_factorization_quotient_degree() {
        let q = hdj_polynomial(6, 3)
            .exact_div(&Polynomial::from_roots(&[int(-1), int(-2)]))
            .unwrap();
        assert_eq!(q.deg(), 3);
    }

    #[test]
    fn a61_has_nonpositive_root() {
        let a = build_a(6, 1).unwrap();
        assert_eq!(a.deg(), 1);
        let root = -a.coeff(0) / a.coeff(1);
        assert!(root <= Rational::zero());
    }

    #[test]
    fn hypergeometric_trivia() {
        assert_eq!(
            hypergeometric_sum(&[int(0), int(5)], &[int(3)], &int(7), 3).unwrap(),
            int(1)
        );
        assert!(matches!(
            hypergeometric_sum(&[int(-3)], &[int(-1)], &int(1), 5),
            Err(Error::Pole { term: 2 })
        ));
        assert!(hypergeometric_sum(&[rat(1, 2)], &[int(1)], &int(1), 5).is_err());
    }

    #[test]
    fn cross_hypergeometric_d3_m4() {
        let v = family_hypergeometric(&FamilyId::Cross { d: 3 }, 4).unwrap();
        assert_eq!(v, int(129));
        let v = family_hypergeometric(&FamilyId::RootA { d: 2 }, 2).unwrap();
        assert_eq!(v, int(19));
    }
}
