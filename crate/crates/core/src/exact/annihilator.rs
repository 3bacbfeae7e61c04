//! Minimal constant-coefficient differential annihilators of truncated series.

use super::linalg::solve;
use super::{Parity, Polynomial, Scalar, Series};
use crate::error::{Error, Result};

/// Which polynomials `b` are admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityFilter {
    Any,
    Only(Parity),
}

impl ParityFilter {
    fn degrees(self, dmax: usize) -> Vec<usize> {
        match self {
            ParityFilter::Any => (0..=dmax).collect(),
            ParityFilter::Only(p) => (0..=dmax).filter(|&d| p.admits(d)).collect(),
        }
    }

    fn allows(self, i: usize) -> bool {
        match self {
            ParityFilter::Any => true,
            ParityFilter::Only(p) => p.admits(i),
        }
    }
}

pub const DEFAULT_MARGIN: usize = 8;

/// Searches for the monic `b` of least degree in the parity class with
/// `b(d/dx)F = 0` through the valid order of `F`.
///
/// Written with Taylor values `T_n = n!·F_n`, the condition reads
/// `Σ_i b_i T_{n+i} = 0` for every `n + deg b ≤ N`. Degrees are tried in
/// ascending order and each candidate is re-checked after the solve.
pub fn annihilator_search(
    f: &Series,
    dmax: usize,
    parity: ParityFilter,
    margin: usize,
) -> Result<Polynomial> {
    let needed = 2 * dmax + margin;
    if f.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            have: f.order(),
        });
    }
    let n = f.order();
    let taylor: Vec<Scalar> = (0..=n).map(|k| f.taylor(k).unwrap()).collect();
    for d in parity.degrees(dmax) {
        let unknowns: Vec<usize> = (0..d).filter(|&i| parity.allows(i)).collect();
        let rows: Vec<Vec<Scalar>> = (0..=n - d)
            .map(|r| unknowns.iter().map(|&i| taylor[r + i].clone()).collect())
            .collect();
        let rhs: Vec<Scalar> = (0..=n - d).map(|r| -&taylor[r + d]).collect();
        let sol = if unknowns.is_empty() {
            rhs.iter().all(Scalar::is_zero).then(Vec::new)
        } else {
            solve(&rows, &rhs)
        };
        let Some(sol) = sol else { continue };
        let mut coeffs = vec![Scalar::zero(); d + 1];
        for (&i, v) in unknowns.iter().zip(sol) {
            coeffs[i] = v;
        }
        coeffs[d] = Scalar::one();
        let b = Polynomial::new(coeffs);
        if annihilates(&b, &taylor) {
            return Ok(b);
        }
        return Err(Error::Consistency(format!(
            "annihilator candidate {} fails re-verification",
            b
        )));
    }
    Err(Error::NoAnnihilator { dmax })
}

fn annihilates(b: &Polynomial, taylor: &[Scalar]) -> bool {
    let d = b.degree().unwrap_or(0);
    (0..taylor.len() - d).all(|r| {
        b.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * &taylor[r + i])
            .sum::<Scalar>()
            .is_zero()
    })
}

/// Whether `b(d/dx)F` vanishes through the valid order.
pub fn is_annihilated(b: &Polynomial, f: &Series) -> bool {
    let taylor: Vec<Scalar> = (0..=f.order()).map(|k| f.taylor(k).unwrap()).collect();
    b.degree().unwrap_or(0) > f.order() || annihilates(b, &taylor)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosh_is_killed_by_d2_minus_one() {
        let f = Series::cosh(&Scalar::one(), 12);
        let b = annihilator_search(&f, 4, ParityFilter::Only(Parity::Even), 4).unwrap();
        assert_eq!(b, Polynomial::from_ints(&[-1, 0, 1]));
        // minimality oracle: no even polynomial of degree 0 works, since cosh ≠ 0
        assert!(!is_annihilated(&Polynomial::one(), &f));
    }

    #[test]
    fn zero_series() {
        let b = annihilator_search(&Series::zero(12), 4, ParityFilter::Any, 4).unwrap();
        assert_eq!(b, Polynomial::one());
    }

    #[test]
    fn geometric_series_has_no_annihilator() {
        let f = Series::from_fn(12, |_| Scalar::one());
        let err = annihilator_search(&f, 4, ParityFilter::Any, 4).unwrap_err();
        assert_eq!(err, Error::NoAnnihilator { dmax: 4 });
    }

    #[test]
    fn order_requirement() {
        let f = Series::cosh(&Scalar::one(), 12);
        let err = annihilator_search(&f, 4, ParityFilter::Any, DEFAULT_MARGIN).unwrap_err();
        assert_eq!(err, Error::InsufficientOrder { needed: 16, have: 12 });
    }

    #[test]
    fn exponential_with_multiplicity() {
        // x e^{2x} + 3: annihilator y (y − 2)²
        let q = crate::exact::Quasipolynomial::term(Scalar::from(2), Polynomial::x())
            .add(&crate::exact::Quasipolynomial::constant(Scalar::from(3)));
        let b = annihilator_search(&q.to_series(24), 8, ParityFilter::Any, DEFAULT_MARGIN).unwrap();
        assert_eq!(b, q.annihilator());
    }
}
