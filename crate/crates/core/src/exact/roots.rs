//! Exact roots in ℚ(i) of polynomials over ℚ(i).
//!
//! Candidates come from a floating-point Aberth iteration on each squarefree
//! factor; every candidate is rationalized and kept only if it is an exact
//! root. Whatever is left over is returned as the residual factor.

use num_complex::Complex64;
use num_rational::BigRational;

use super::scalar::rationalize;
use super::{Polynomial, Scalar};

const MAX_DENOMINATOR: i64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// Distinct exact roots with multiplicities, in ascending scalar order.
    pub roots: Vec<(Scalar, usize)>,
    /// Monic factor with no root in ℚ(i); `1` when the split is complete.
    pub residual: Polynomial,
}

/// Squarefree decomposition by Yun's algorithm: returns `(a_i, i)` with
/// `p = lc · Π a_i^i` and the `a_i` squarefree, pairwise coprime, monic.
pub fn squarefree(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).unwrap();
    let mut c = df.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).unwrap();
        c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn to_complex(s: &Scalar) -> Complex64 {
    let (re, im) = s.to_f64_pair();
    Complex64::new(re, im)
}

fn eval_c(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Numerical approximations to all roots of a squarefree polynomial.
fn aberth(p: &Polynomial) -> Vec<Complex64> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let lc = to_complex(p.leading().unwrap());
    let coeffs: Vec<Complex64> = p.coeffs().iter().map(|c| to_complex(c) / lc).collect();
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            Complex64::from_polar(radius * 0.5 + 0.1, theta)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (pv, dpv) = eval_c(&coeffs, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let s: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[k] -= w;
            moved = moved.max(w.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn candidate(z: Complex64) -> Option<Scalar> {
    let re = rationalize(z.re, MAX_DENOMINATOR)?;
    let im = if z.im.abs() < 1e-9 {
        BigRational::from_integer(0.into())
    } else {
        rationalize(z.im, MAX_DENOMINATOR)?
    };
    Some(Scalar::new(re, im))
}

/// All roots of `p` lying in ℚ(i), with multiplicity.
pub fn exact_roots(p: &Polynomial) -> RootReport {
    let mut roots: Vec<(Scalar, usize)> = Vec::new();
    let mut residual = Polynomial::one();
    for (factor, mult) in squarefree(p) {
        let mut rest = factor.clone();
        for z in aberth(&factor) {
            let Some(r) = candidate(z) else { continue };
            if rest.eval(&r).is_zero() {
                rest = rest.exact_div(&Polynomial::linear(-&r)).unwrap();
                roots.push((r, mult));
            }
        }
        for _ in 0..mult {
            residual = &residual * &rest;
        }
    }
    roots.sort();
    RootReport {
        roots,
        residual: residual.monic(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_roots(rs: &[(Scalar, usize)]) -> Polynomial {
        rs.iter().fold(Polynomial::one(), |acc, (r, m)| {
            (0..*m).fold(acc, |a, _| &a * &Polynomial::linear(-r))
        })
    }

    #[test]
    fn rational_and_gaussian_roots() {
        let rs = vec![
            (Scalar::ratio(-11, 6), 2),
            (Scalar::zero(), 1),
            (Scalar::ratio(1, 4), 3),
            ("1/2+1*i".parse().unwrap(), 1),
        ];
        let p = from_roots(&rs).scale(&Scalar::from(7));
        let rep = exact_roots(&p);
        let mut expect = rs.clone();
        expect.sort();
        assert_eq!(rep.roots, expect);
        assert_eq!(rep.residual, Polynomial::one());
    }

    #[test]
    fn irrational_roots_stay_in_residual() {
        let p = &Polynomial::from_ints(&[-2, 0, 1]) * &Polynomial::from_ints(&[-3, 1]);
        let rep = exact_roots(&p);
        assert_eq!(rep.roots, vec![(Scalar::from(3), 1)]);
        assert_eq!(rep.residual, Polynomial::from_ints(&[-2, 0, 1]));
    }

    #[test]
    fn squarefree_parts() {
        let p = from_roots(&[(Scalar::one(), 3), (Scalar::from(2), 1)]);
        let sf = squarefree(&p);
        assert_eq!(
            sf,
            vec![
                (Polynomial::from_ints(&[-2, 1]), 1),
                (Polynomial::from_ints(&[-1, 1]), 3)
            ]
        );
    }
}
