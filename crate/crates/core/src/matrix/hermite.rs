//! Explicit preimages of single matrix entries under φ_s on a finite window,
//! built by Hermite interpolation.

use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::exact::linalg::solve;
use crate::exact::{Polynomial, Scalar, TruncPoly};
use crate::involution::SignChoice;

/// The entry `coeff·u^{i0}` at position `(j0 − k, j0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTarget {
    pub j0: i64,
    pub i0: usize,
    pub k: i64,
    pub coeff: Scalar,
}

/// An anti-fixed `t^k G(D)` whose image under φ_s has, inside the window
/// `[−w, w+1]`, exactly the target entry on diagonal `k` and zeros elsewhere.
/// Entries outside the window are unconstrained.
pub fn hermite_witness(target: &WitnessTarget, s: &Scalar, m: usize, sign: SignChoice, w: i64) -> Result<DiffOp> {
    if (s + s).is_integer() {
        return Err(Error::Unsupported(format!("witness needs s outside Z/2, got {}", s)));
    }
    if target.i0 > m {
        return Err(Error::Unsupported(format!("u-power {} exceeds m = {}", target.i0, m)));
    }
    let k = target.k;
    let range = -w..=w + 1;
    if !range.contains(&target.j0) || !range.contains(&(target.j0 - k)) {
        return Err(Error::Unsupported(format!(
            "target ({}, {}) lies outside the window",
            target.j0 - k,
            target.j0
        )));
    }
    if target.coeff.is_zero() {
        return Ok(DiffOp::zero());
    }
    let half_k = Scalar::ratio(k, 2);
    let columns: Vec<i64> = range.clone().filter(|j| range.contains(&(j - k))).collect();
    let node = |j: i64| &(&half_k + s) - &Scalar::from(j);

    // The image entry is g(x_j + u)·(x_j − k/2 + u); prescribe the Taylor
    // data of g at x_{j0} so that the product is coeff·u^{i0}.
    let lin = TruncPoly::affine(m, &node(target.j0) - &half_k, Scalar::one());
    let mut mono = vec![Scalar::zero(); m + 1];
    mono[target.i0] = target.coeff.clone();
    let wanted = &TruncPoly::new(m, mono) * &lin.invert()?;

    let ncoef = 2 * columns.len() * (m + 1);
    let mut rows = Vec::with_capacity(ncoef);
    let mut rhs = Vec::with_capacity(ncoef);
    for &j in &columns {
        for (x, at_target) in [(node(j), j == target.j0), (-node(j), false)] {
            for i in 0..=m {
                let row: Vec<Scalar> = (0..ncoef)
                    .map(|d| {
                        if d < i {
                            Scalar::zero()
                        } else {
                            &Scalar::binomial(d, i) * &x.pow((d - i) as u32)
                        }
                    })
                    .collect();
                rows.push(row);
                rhs.push(if at_target { wanted.coeff(i).clone() } else { Scalar::zero() });
            }
        }
    }
    let a = solve(&rows, &rhs).ok_or_else(|| Error::Inconsistent("Hermite system is singular".into()))?;
    let a = Polynomial::new(a);
    let eps = match sign {
        SignChoice::Plus => Scalar::one(),
        SignChoice::Minus => Scalar::sign_pow(k),
    };
    let g = &a + &a.reflect().scale(&eps);
    let big_g = &g.shift(&half_k) * &Polynomial::x();
    Ok(DiffOp::term(k, big_g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{phi_map, WindowedMatrix};

    #[test]
    fn witness_hits_one_entry() {
        let s = Scalar::ratio(1, 3);
        for sign in SignChoice::BOTH {
            for (k, j0, i0, m) in [(0, 1, 0, 0), (1, 0, 1, 1), (-2, -1, 0, 1), (2, 3, 2, 2)] {
                let w = 3;
                let t = WitnessTarget { j0, i0, k, coeff: Scalar::ratio(5, 2) };
                let x = hermite_witness(&t, &s, m, sign, w).unwrap();
                let img = WindowedMatrix::from_banded(&phi_map(&x, &s, m, sign).unwrap(), w);
                let mut mono = vec![Scalar::zero(); m + 1];
                mono[i0] = t.coeff.clone();
                let expect = WindowedMatrix::unit(w, j0 - k, j0, TruncPoly::new(m, mono));
                assert_eq!(img, expect);
            }
        }
    }

    #[test]
    fn witness_rejects_half_integers() {
        let t = WitnessTarget { j0: 0, i0: 0, k: 0, coeff: Scalar::one() };
        assert!(matches!(
            hermite_witness(&t, &Scalar::half(), 0, SignChoice::Plus, 2),
            Err(Error::Unsupported(_))
        ));
        let zero = WitnessTarget { coeff: Scalar::zero(), ..t };
        assert!(hermite_witness(&zero, &Scalar::ratio(1, 3), 0, SignChoice::Plus, 2).unwrap().is_zero());
    }
}
