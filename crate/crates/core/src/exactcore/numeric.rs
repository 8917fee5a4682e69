//! Floating-point root approximations, used only for plot data and sanity
//! checks. Root multiplicities come from the exact square-free
//! decomposition; Aberth iteration runs on each square-free factor.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::poly::Polynomial;
use super::rational::to_f64;
use super::sturm::{cauchy_bound, squarefree_decomposition};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct AberthConfig {
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for AberthConfig {
    fn default() -> Self {
        AberthConfig {
            tol: 1e-12,
            max_iterations: 200,
        }
    }
}

/// All `deg p` complex roots of `p`, with multiplicity, sorted by
/// imaginary then real part.
pub fn numeric_roots(p: &Polynomial, tol: f64) -> Result<Vec<Complex64>> {
    numeric_roots_with(
        p,
        &AberthConfig {
            tol,
            ..AberthConfig::default()
        },
    )
}

pub fn numeric_roots_with(p: &Polynomial, cfg: &AberthConfig) -> Result<Vec<Complex64>> {
    if p.degree().is_none_or(|d| d == 0) {
        return Err(Error::DegenerateInput("numeric roots need degree >= 1".into()));
    }
    let mut roots = Vec::with_capacity(p.deg());
    for (factor, mult) in squarefree_decomposition(p)? {
        let found = if factor.deg() == 1 {
            let c = factor.coeffs();
            vec![Complex64::new(-to_f64(&c[0]) / to_f64(&c[1]), 0.0)]
        } else {
            aberth(&factor, cfg)?
        };
        for z in found {
            roots.extend(std::iter::repeat_n(z, mult));
        }
    }
    roots.sort_by(|a, b| a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re)));
    Ok(roots)
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut val = Complex64::new(0.0, 0.0);
    let mut der = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        der = der * z + val;
        val = val * z + c;
    }
    (val, der)
}

fn backward_scale(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs())
}

fn aberth(p: &Polynomial, cfg: &AberthConfig) -> Result<Vec<Complex64>> {
    let monic = p.monic();
    let coeffs: Vec<f64> = monic.coeffs().iter().map(to_f64).collect();
    let n = coeffs.len() - 1;
    let radius = to_f64(&cauchy_bound(&monic));
    // Equally spaced on the bounding circle; the half-step offset keeps the
    // start off the real axis.
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * (k as f64 + 0.25) / n as f64))
        .collect();

    for _ in 0..cfg.max_iterations {
        let mut converged = true;
        for k in 0..n {
            let (val, der) = horner(&coeffs, z[k]);
            if val.norm() <= cfg.tol * backward_scale(&coeffs, z[k]) {
                continue;
            }
            converged = false;
            let ratio = val / der;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
            }
        }
        if converged {
            return Ok(z);
        }
    }
    let done = z
        .iter()
        .all(|&zk| horner(&coeffs, zk).0.norm() <= cfg.tol * backward_scale(&coeffs, zk));
    if done {
        Ok(z)
    } else {
        Err(Error::Convergence {
            iterations: cfg.max_iterations,
            best: z,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{int, rat};

    #[test]
    fn double_root_is_exact() {
        let p = Polynomial::from_ints(&[1, 2]).pow(2);
        let r = numeric_roots(&p, 1e-12).unwrap();
        assert_eq!(r, vec![Complex64::new(-0.5, 0.0); 2]);
    }

    #[test]
    fn quadratic_complex_pair() {
        // 2x^2 + 2x + 1 has roots -1/2 ± i/2
        let r = numeric_roots(&Polynomial::from_ints(&[1, 2, 2]), 1e-12).unwrap();
        assert!((r[0] - Complex64::new(-0.5, -0.5)).norm() < 1e-12);
        assert!((r[1] - Complex64::new(-0.5, 0.5)).norm() < 1e-12);
    }

    #[test]
    fn rejects_constants() {
        assert!(numeric_roots(&Polynomial::constant(int(3)), 1e-12).is_err());
    }

    #[test]
    fn deterministic() {
        let p = Polynomial::new(vec![int(1), rat(43, 10), rat(481, 60), rat(33, 4), rat(37, 6)]);
        assert_eq!(numeric_roots(&p, 1e-12).unwrap(), numeric_roots(&p, 1e-12).unwrap());
    }

    #[test]
    fn convergence_error_carries_iterate() {
        let p = Polynomial::from_ints(&[1, 0, 3, 0, 1, 7]);
        let cfg = AberthConfig {
            tol: 1e-12,
            max_iterations: 1,
        };
        match numeric_roots_with(&p, &cfg) {
            Err(Error::Convergence { best, .. }) => assert_eq!(best.len(), 5),
            other => panic!("expected convergence error, got {other:?}"),
        }
    }
}
