//! Exact certificates that a polynomial has all its roots on a vertical
//! line `Re z = c`, and that two such polynomials interlace along it.
//!
//! Everything is reduced to real-root questions for the line polynomial
//! `g(y) = i^(-d) f(c + iy)`, answered with Sturm sequences.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactcore::{
    cauchy_bound, cauchy_index, int, rat, squarefree_decomposition, squarefree_part, sturm_count,
    Interval, Polynomial, Rational, RootRange, SturmSequence,
};

/// The line `Re z = -1/2`.
pub fn default_center() -> Rational {
    rat(-1, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineVerdict {
    AllOnLine,
    SymmetricButOffLine,
    NotSymmetric,
}

impl LineVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            LineVerdict::AllOnLine => "AllOnLine",
            LineVerdict::SymmetricButOffLine => "SymmetricButOffLine",
            LineVerdict::NotSymmetric => "NotSymmetric",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCertificate {
    pub subject: Polynomial,
    pub line_center: Rational,
    pub verdict: LineVerdict,
    /// The line polynomial; zero when the symmetry fails.
    pub transformed: Polynomial,
    /// One half-open `(lo, hi]` or point interval per distinct real root
    /// of `transformed`, left to right.
    pub isolating: Vec<Interval>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InterlaceVerdict {
    Interlace,
    Fail,
}

impl InterlaceVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            InterlaceVerdict::Interlace => "Interlace",
            InterlaceVerdict::Fail => "Fail",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootOwner {
    /// A root `t_i` of the interlaced polynomial f.
    F,
    /// A root `s_i` of g.
    G,
}

/// One root (counted with multiplicity) in the merged ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedEntry {
    pub owner: RootOwner,
    /// 1-based rank among the roots of its owner.
    pub rank: usize,
    /// Index into [`InterlaceCertificate::slots`].
    pub slot: usize,
}

impl MergedEntry {
    pub fn label(&self) -> String {
        match self.owner {
            RootOwner::F => format!("t{}", self.rank),
            RootOwner::G => format!("s{}", self.rank),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlaceCertificate {
    pub f: Polynomial,
    pub g: Polynomial,
    pub verdict: InterlaceVerdict,
    /// Distinct roots of `f g` on the line, as isolating intervals in the
    /// line parameter, bottom to top.
    pub slots: Vec<Interval>,
    /// All roots of f and g sorted along the line; roots sharing a slot are
    /// equal.
    pub merged_ordering: Vec<MergedEntry>,
}

/// Real polynomial `g(y) = i^(-d) f(center + iy)`, `d = deg f`.
///
/// Requires `(-1)^d f(center + z) = f(center - z)`. Otherwise returns
/// `NotSymmetric` with the index of the first coefficient of
/// `f(center + z)` whose parity is wrong.
pub fn to_line_polynomial(f: &Polynomial, center: &Rational) -> Result<Polynomial> {
    let Some(d) = f.degree() else {
        return Ok(Polynomial::zero());
    };
    let q = f.shift_by(center);
    let mut out = Vec::with_capacity(d + 1);
    for (k, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            out.push(Rational::zero());
            continue;
        }
        if (d - k) % 2 == 1 {
            return Err(Error::NotSymmetric { index: k });
        }
        // i^(k-d) = (-1)^((d-k)/2)
        out.push(if ((d - k) / 2) % 2 == 0 { c.clone() } else { -c });
    }
    Ok(Polynomial::new(out))
}

/// Number of real roots of `p`, counted with multiplicity.
fn real_root_count(p: &Polynomial) -> Result<usize> {
    let mut total = 0;
    for (factor, mult) in squarefree_decomposition(p)? {
        total += mult * sturm_count(&factor, &RootRange::Whole)?;
    }
    Ok(total)
}

/// Isolating intervals for the distinct real roots of `p`, left to right.
/// Each is half-open `(lo, hi]` or a single point, so they are pairwise
/// disjoint even when neighbours share an endpoint.
pub fn disjoint_isolation(p: &Polynomial) -> Result<Vec<Interval>> {
    Ok(separate(SturmSequence::new(p)?))
}

fn separate(seq: SturmSequence) -> Vec<Interval> {
    let mut ivs = seq.isolate();
    for iv in ivs.iter_mut() {
        if !iv.is_point() && seq.vanishes_at(&iv.hi) {
            *iv = Interval::point(iv.hi.clone());
        }
    }
    ivs
}

/// Decide whether every root of `f` lies on `Re z = center`.
///
/// Total: the zero polynomial is reported as symmetric but off the line.
pub fn certify_line(f: &Polynomial, center: &Rational) -> LineCertificate {
    let mut cert = LineCertificate {
        subject: f.clone(),
        line_center: center.clone(),
        verdict: LineVerdict::NotSymmetric,
        transformed: Polynomial::zero(),
        isolating: Vec::new(),
    };
    let Ok(g) = to_line_polynomial(f, center) else {
        return cert;
    };
    cert.transformed = g.clone();
    if g.is_zero() {
        cert.verdict = LineVerdict::SymmetricButOffLine;
        return cert;
    }
    // g is a nonzero rational polynomial here, so none of these can fail.
    let real = real_root_count(&g).unwrap_or(0);
    cert.isolating = disjoint_isolation(&g).unwrap_or_default();
    cert.verdict = if real == f.deg() {
        LineVerdict::AllOnLine
    } else {
        LineVerdict::SymmetricButOffLine
    };
    cert
}

/// Certify that `f` is interlaced by `g` along `Re z = center`: with
/// roots `t_1 <= ... <= t_d` of f and `s_1 <= ... <= s_{d-1}` of g, ordered
/// by imaginary part, `t_1 <= s_1 <= t_2 <= ... <= s_{d-1} <= t_d`.
pub fn certify_interlace(
    f: &Polynomial,
    g: &Polynomial,
    center: &Rational,
) -> Result<InterlaceCertificate> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::DegenerateInput("interlacing of the zero polynomial".into()));
    };
    if df != dg + 1 {
        return Err(Error::Degree { f: df, g: dg });
    }
    let cf = certify_line(f, center);
    let cg = certify_line(g, center);
    for (name, c) in [("f", &cf), ("g", &cg)] {
        if c.verdict != LineVerdict::AllOnLine {
            return Err(Error::Precondition(format!(
                "{name} is not certified on the line (verdict {})",
                c.verdict.as_str()
            )));
        }
    }
    let (lf, lg) = (cf.transformed, cg.transformed);
    // distinct roots of f g without forming the product's derivative
    let (sf, sg) = (squarefree_part(&lf)?, squarefree_part(&lg)?);
    let union = &sf * &sg.exact_div(&sf.gcd(&sg)?)?;
    let slots = separate(SturmSequence::new(&union)?);
    let sturm_factors = |p: &Polynomial| -> Result<Vec<(SturmSequence, usize)>> {
        squarefree_decomposition(p)?
            .into_iter()
            .map(|(q, m)| Ok((SturmSequence::new(&q)?, m)))
            .collect()
    };
    let fac_f = sturm_factors(&lf)?;
    let fac_g = sturm_factors(&lg)?;
    let multiplicity = |facs: &[(SturmSequence, usize)], iv: &Interval| -> Result<usize> {
        Ok(facs
            .iter()
            .find(|(q, _)| q.has_root_in(iv))
            .map_or(0, |(_, m)| *m))
    };

    // Slot index of each t_i and s_i.
    let mut t_slots = Vec::with_capacity(df);
    let mut s_slots = Vec::with_capacity(dg);
    let mut merged = Vec::with_capacity(df + dg);
    for (slot, iv) in slots.iter().enumerate() {
        let mf = multiplicity(&fac_f, iv)?;
        let mg = multiplicity(&fac_g, iv)?;
        t_slots.extend(std::iter::repeat_n(slot, mf));
        s_slots.extend(std::iter::repeat_n(slot, mg));
    }
    if t_slots.len() != df || s_slots.len() != dg {
        return Err(Error::Internal("root multiplicities do not add up".into()));
    }
    let ok = (0..dg).all(|i| t_slots[i] <= s_slots[i] && s_slots[i] <= t_slots[i + 1]);

    for (i, &slot) in t_slots.iter().enumerate() {
        merged.push(MergedEntry { owner: RootOwner::F, rank: i + 1, slot });
    }
    for (j, &slot) in s_slots.iter().enumerate() {
        merged.push(MergedEntry { owner: RootOwner::G, rank: j + 1, slot });
    }
    // t_i before s_i before t_{i+1} on ties, so an interlacing pair reads
    // t1 s1 t2 ...
    merged.sort_by_key(|e| {
        let pos = match e.owner {
            RootOwner::F => 2 * (e.rank - 1),
            RootOwner::G => 2 * e.rank - 1,
        };
        (e.slot, pos)
    });

    Ok(InterlaceCertificate {
        f: f.clone(),
        g: g.clone(),
        verdict: if ok { InterlaceVerdict::Interlace } else { InterlaceVerdict::Fail },
        slots,
        merged_ordering: merged,
    })
}

/// Certify that `Σ λ_i g_i / lc(g_i)` interlaces `f`, after checking that
/// each `g_i` does.
pub fn check_cone_interlace(
    f: &Polynomial,
    gs: &[Polynomial],
    lambdas: &[Rational],
    center: &Rational,
) -> Result<bool> {
    if gs.len() != lambdas.len() {
        return Err(Error::Param(format!(
            "{} polynomials but {} weights",
            gs.len(),
            lambdas.len()
        )));
    }
    if lambdas.iter().any(Signed::is_negative) {
        return Err(Error::Param("cone weights must be nonnegative".into()));
    }
    if lambdas.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateInput("all cone weights are zero".into()));
    }
    let mut sum = Polynomial::zero();
    for (g, l) in gs.iter().zip(lambdas) {
        let c = certify_interlace(f, g, center)?;
        if c.verdict != InterlaceVerdict::Interlace {
            return Err(Error::Precondition("some g_i does not interlace f".into()));
        }
        sum = &sum + &g.monic().scale(l);
    }
    Ok(certify_interlace(f, &sum, center)?.verdict == InterlaceVerdict::Interlace)
}

/// Root counts of a polynomial relative to a vertical line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlaneCount {
    pub line: Rational,
    /// Roots with real part `< line`.
    pub left: usize,
    /// Roots with real part `> line`.
    pub right: usize,
}

/// Count the roots of `p` on either side of `Re z = a` by the argument
/// principle. With `p(a + iy) = U(y) + i V(y)`, the winding along the
/// line gives `left - right = ε - Ind(V/U)`, where `ε` is the sign of
/// `lc V / lc U` when `deg V - deg U` is positive and odd, and 0 otherwise.
///
/// `p` must have no root on the line.
pub fn count_roots_beside_line(p: &Polynomial, a: &Rational) -> Result<HalfPlaneCount> {
    let Some(n) = p.degree() else {
        return Err(Error::DegenerateInput("root count of the zero polynomial".into()));
    };
    let q = p.shift_by(a);
    let mut u = vec![Rational::zero(); n + 1];
    let mut v = vec![Rational::zero(); n + 1];
    for (k, c) in q.coeffs().iter().enumerate() {
        // (iy)^k = i^k y^k
        let sign = if (k / 2) % 2 == 0 { c.clone() } else { -c };
        if k % 2 == 0 {
            u[k] = sign;
        } else {
            v[k] = sign;
        }
    }
    let (u, v) = (Polynomial::new(u), Polynomial::new(v));
    let common = if u.is_zero() { v.monic() } else if v.is_zero() { u.monic() } else { u.gcd(&v)? };
    if common.deg() > 0 && sturm_count(&common, &RootRange::Whole)? > 0 {
        return Err(Error::Precondition("polynomial has a root on the line".into()));
    }
    let index = cauchy_index(&v, &u)?;
    let eps = match (u.degree(), v.degree()) {
        (Some(du), Some(dv)) if dv > du && (dv - du) % 2 == 1 => {
            if (v.leading() / u.leading()).is_positive() {
                1
            } else {
                -1
            }
        }
        _ => 0,
    };
    let diff = eps - index;
    let n = n as i64;
    if (n + diff) % 2 != 0 || diff.abs() > n {
        return Err(Error::Internal(format!("inconsistent winding {diff} for degree {n}")));
    }
    Ok(HalfPlaneCount {
        line: a.clone(),
        left: ((n + diff) / 2) as usize,
        right: ((n - diff) / 2) as usize,
    })
}

/// `f` is symmetric about `Re z = -1/2` and has at least one root with
/// real part `< -1`. A witness that f is not line-rooted even though it
/// satisfies the functional equation.
pub fn certify_root_left_of(f: &Polynomial, bound: &Rational) -> Result<bool> {
    Ok(count_roots_beside_line(f, bound)?.left > 0)
}

/// Open interval `(lo, hi)` of width at most `width` containing the
/// smallest real part among the roots of `p`, from exact half-plane counts.
pub fn leftmost_real_part(p: &Polynomial, width: &Rational) -> Result<Interval> {
    if p.degree().is_none_or(|d| d == 0) {
        return Err(Error::DegenerateInput("no roots to locate".into()));
    }
    if !width.is_positive() {
        return Err(Error::Param("width must be positive".into()));
    }
    let b = cauchy_bound(p) + int(1);
    let (mut lo, mut hi) = (-&b, b);
    let left_of = |a: &Rational| -> Result<(Rational, bool)> {
        // nudge off lines that carry a root
        let mut a = a.clone();
        let mut step = width / int(7);
        loop {
            match count_roots_beside_line(p, &a) {
                Ok(c) => return Ok((a, c.left > 0)),
                Err(Error::Precondition(_)) => {
                    a += &step;
                    step /= int(3);
                }
                Err(e) => return Err(e),
            }
        }
    };
    while &hi - &lo > *width {
        let (mid, any) = left_of(&((&lo + &hi) / int(2)))?;
        if mid <= lo || mid >= hi {
            break;
        }
        if any {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Interval::new(lo, hi)
}

/// `(x + 1/2)` as a polynomial, the factor relating consecutive
/// interlacing triples.
pub fn line_factor(center: &Rational) -> Polynomial {
    Polynomial::linear(Rational::one(), -center)
}

/// `2x + 1`
pub fn two_x_plus_one() -> Polynomial {
    Polynomial::linear(int(2), Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c() -> Rational {
        default_center()
    }

    #[test]
    fn line_polynomial_sign_convention() {
        let g = to_line_polynomial(&Polynomial::from_ints(&[1, 2]), &c()).unwrap();
        assert_eq!(g, Polynomial::from_ints(&[0, 2]));
        let g = to_line_polynomial(&Polynomial::from_ints(&[1, 2, 2]), &c()).unwrap();
        assert_eq!(g, Polynomial::new(vec![rat(-1, 2), int(0), int(2)]));
    }

    #[test]
    fn asymmetric_is_reported_with_index() {
        // x^2 + x has roots 0, -1 (symmetric about -1/2), x^2 + 2x is not
        assert!(to_line_polynomial(&Polynomial::from_ints(&[0, 1, 1]), &c()).is_ok());
        assert!(matches!(
            to_line_polynomial(&Polynomial::from_ints(&[0, 2, 1]), &c()),
            Err(Error::NotSymmetric { index: 1 })
        ));
    }

    #[test]
    fn powers_of_2x_plus_1() {
        for d in 0..8 {
            let cert = certify_line(&two_x_plus_one().pow(d), &c());
            assert_eq!(cert.verdict, LineVerdict::AllOnLine, "d = {d}");
        }
    }

    #[test]
    fn real_roots_are_off_line() {
        // x(x+1): symmetric, roots 0 and -1
        let cert = certify_line(&Polynomial::from_ints(&[0, 1, 1]), &c());
        assert_eq!(cert.verdict, LineVerdict::SymmetricButOffLine);
        assert_eq!(certify_line(&Polynomial::zero(), &c()).verdict, LineVerdict::SymmetricButOffLine);
    }

    #[test]
    fn isolating_intervals_are_disjoint() {
        let p = Polynomial::from_roots(&[int(-3), int(0), int(1), rat(1, 3), int(2)]);
        let ivs = disjoint_isolation(&p).unwrap();
        assert_eq!(ivs.len(), 5);
        for w in ivs.windows(2) {
            // (a, b] and (b, c] share no point
            assert!(w[0].hi < w[1].lo || (w[0].hi == w[1].lo && !w[1].is_point()));
        }
        let seq = SturmSequence::new(&p).unwrap();
        assert!(ivs.iter().all(|iv| seq.has_root_in(iv)));
    }

    #[test]
    fn vacuous_interlace() {
        let cert = certify_interlace(&two_x_plus_one(), &Polynomial::one(), &c()).unwrap();
        assert_eq!(cert.verdict, InterlaceVerdict::Interlace);
    }

    #[test]
    fn interlace_with_equalities() {
        // f = (2x+1)^2 interlaced by 2x+1: t1 = s1 = t2
        let f = two_x_plus_one().pow(2);
        let cert = certify_interlace(&f, &two_x_plus_one(), &c()).unwrap();
        assert_eq!(cert.verdict, InterlaceVerdict::Interlace);
        let labels: Vec<_> = cert.merged_ordering.iter().map(MergedEntry::label).collect();
        assert_eq!(labels, ["t1", "s1", "t2"]);
    }

    #[test]
    fn interlace_errors() {
        let f = two_x_plus_one();
        assert!(matches!(certify_interlace(&f, &f, &c()), Err(Error::Degree { .. })));
        let off = Polynomial::from_ints(&[0, 1, 1]);
        assert!(matches!(certify_interlace(&off, &f, &c()), Err(Error::Precondition(_))));
    }

    /// Product of `(x - c)^2 + r^2` over the given line heights `r`, with a
    /// single `(x - c)` for `r = 0`.
    fn from_heights(rs: &[i64]) -> Polynomial {
        rs.iter().fold(Polynomial::one(), |acc, &r| {
            let q = if r == 0 {
                line_factor(&c())
            } else {
                &line_factor(&c()).pow(2) + &Polynomial::constant(int(r * r))
            };
            &acc * &q
        })
    }

    #[test]
    fn non_interlacing_pair() {
        // f roots at heights ±1, ±2; g at 0, ±3: s_1 = -3 < t_1 = -2
        let f = from_heights(&[1, 2]);
        let g = from_heights(&[0, 3]);
        let cert = certify_interlace(&f, &g, &c()).unwrap();
        assert_eq!(cert.verdict, InterlaceVerdict::Fail);
        let g = from_heights(&[0, 1]);
        let cert = certify_interlace(&f, &g, &c()).unwrap();
        assert_eq!(cert.verdict, InterlaceVerdict::Interlace);
    }

    #[test]
    fn half_plane_counts() {
        let p = Polynomial::from_ints(&[1, 1]);
        let h = count_roots_beside_line(&p, &int(0)).unwrap();
        assert_eq!((h.left, h.right), (1, 0));
        let p = Polynomial::from_ints(&[-1, 1]);
        let h = count_roots_beside_line(&p, &int(0)).unwrap();
        assert_eq!((h.left, h.right), (0, 1));
        // (z+2)(z-1)(z^2 - 2z + 5): roots -2, 1, 1 ± 2i
        let p = &Polynomial::from_roots(&[int(-2), int(1)]) * &Polynomial::from_ints(&[5, -2, 1]);
        let h = count_roots_beside_line(&p, &int(0)).unwrap();
        assert_eq!((h.left, h.right), (1, 3));
        let h = count_roots_beside_line(&p, &int(2)).unwrap();
        assert_eq!((h.left, h.right), (4, 0));
        assert!(matches!(
            count_roots_beside_line(&p, &int(1)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn eight_cycle_leftmost_real_part() {
        let h = Polynomial::new(
            [(1, 1), (7, 2), (175, 36), (161, 36), (35, 18), (35, 36), (7, 36), (1, 18)]
                .iter()
                .map(|&(p, q)| rat(p, q))
                .collect(),
        );
        let iv = leftmost_real_part(&h, &rat(1, 1024)).unwrap();
        assert!(iv.hi < int(-1));
        // numeric value -1.03217
        assert!(iv.lo < rat(-103217, 100000) && iv.hi > rat(-103218, 100000));
        let iv = leftmost_real_part(&Polynomial::from_ints(&[3, 1]), &rat(1, 64)).unwrap();
        assert!(iv.lo < int(-3) && iv.hi > int(-3));
    }
}

