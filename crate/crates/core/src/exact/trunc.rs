//! The truncated ring R_m = ℚ(i)[u]/(u^{m+1}).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Polynomial, Scalar};
use crate::error::{Error, Result};

/// An element of R_m, stored densely as `m + 1` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    m: usize,
    coeffs: Vec<Scalar>,
}

impl TruncPoly {
    /// Builds from coefficients, dropping powers above `m` and padding with
    /// zeros.
    pub fn new(m: usize, mut coeffs: Vec<Scalar>) -> Self {
        coeffs.resize(m + 1, Scalar::zero());
        TruncPoly { m, coeffs }
    }

    pub fn zero(m: usize) -> Self {
        TruncPoly::new(m, Vec::new())
    }

    pub fn one(m: usize) -> Self {
        TruncPoly::constant(m, Scalar::one())
    }

    pub fn constant(m: usize, c: Scalar) -> Self {
        TruncPoly::new(m, vec![c])
    }

    /// The nilpotent generator `u` (zero when `m = 0`).
    pub fn u(m: usize) -> Self {
        TruncPoly::new(m, vec![Scalar::zero(), Scalar::one()])
    }

    /// `a + b·u`.
    pub fn affine(m: usize, a: Scalar, b: Scalar) -> Self {
        TruncPoly::new(m, vec![a, b])
    }

    pub fn from_poly(m: usize, p: &Polynomial) -> Self {
        TruncPoly::new(m, p.coeffs().iter().take(m + 1).cloned().collect())
    }

    pub fn to_poly(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> TruncPoly {
        TruncPoly {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `a(−u)`.
    pub fn reflect(&self) -> TruncPoly {
        TruncPoly {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        }
    }

    pub fn check_same(&self, other: &TruncPoly) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.m, other.m))
        }
    }

    /// Multiplicative inverse, via the recursion `b_n = −a_0^{−1} Σ_{k≥1} a_k b_{n−k}`.
    pub fn invert(&self) -> Result<TruncPoly> {
        let a0_inv = self.coeffs[0]
            .inv()
            .ok_or_else(|| Error::NotInvertible(format!("{} has zero constant term", self)))?;
        let mut b = vec![Scalar::zero(); self.m + 1];
        b[0] = a0_inv.clone();
        for n in 1..=self.m {
            let mut acc = Scalar::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &b[n - k];
            }
            b[n] = -(&acc * &a0_inv);
        }
        Ok(TruncPoly { m: self.m, coeffs: b })
    }

    pub fn pow(&self, e: usize) -> TruncPoly {
        (0..e).fold(TruncPoly::one(self.m), |acc, _| &acc * self)
    }
}

/// Inverse in R_m; errors on a non-unit.
pub fn rm_invert(a: &TruncPoly) -> Result<TruncPoly> {
    a.invert()
}

impl fmt::Debug for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]_{}", self.m)
    }
}

impl<'a, 'b> Add<&'b TruncPoly> for &'a TruncPoly {
    type Output = TruncPoly;
    fn add(self, rhs: &'b TruncPoly) -> TruncPoly {
        assert_eq!(self.m, rhs.m, "truncation orders differ");
        TruncPoly {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a, 'b> Sub<&'b TruncPoly> for &'a TruncPoly {
    type Output = TruncPoly;
    fn sub(self, rhs: &'b TruncPoly) -> TruncPoly {
        assert_eq!(self.m, rhs.m, "truncation orders differ");
        TruncPoly {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a, 'b> Mul<&'b TruncPoly> for &'a TruncPoly {
    type Output = TruncPoly;
    fn mul(self, rhs: &'b TruncPoly) -> TruncPoly {
        assert_eq!(self.m, rhs.m, "truncation orders differ");
        let mut out = vec![Scalar::zero(); self.m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(self.m + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncPoly { m: self.m, coeffs: out }
    }
}

impl Neg for &TruncPoly {
    type Output = TruncPoly;
    fn neg(self) -> TruncPoly {
        TruncPoly {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for TruncPoly {
    type Output = TruncPoly;
    fn add(self, rhs: TruncPoly) -> TruncPoly {
        &self + &rhs
    }
}

impl Sub for TruncPoly {
    type Output = TruncPoly;
    fn sub(self, rhs: TruncPoly) -> TruncPoly {
        &self - &rhs
    }
}

impl Mul for TruncPoly {
    type Output = TruncPoly;
    fn mul(self, rhs: TruncPoly) -> TruncPoly {
        &self * &rhs
    }
}

impl Neg for TruncPoly {
    type Output = TruncPoly;
    fn neg(self) -> TruncPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tp(m: usize, cs: &[i64]) -> TruncPoly {
        TruncPoly::new(m, cs.iter().map(|&c| Scalar::from(c)).collect())
    }

    #[test]
    fn geometric_inverse() {
        assert_eq!(rm_invert(&tp(2, &[1, -1])).unwrap(), tp(2, &[1, 1, 1]));
    }

    #[test]
    fn constant_inverse() {
        let inv = rm_invert(&tp(0, &[2])).unwrap();
        assert_eq!(inv.coeff(0), &Scalar::ratio(1, 2));
    }

    #[test]
    fn nilpotent_is_not_invertible() {
        assert!(matches!(rm_invert(&TruncPoly::u(3)), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn u_is_nilpotent() {
        assert!(TruncPoly::u(2).pow(3).is_zero());
        assert!(!TruncPoly::u(2).pow(2).is_zero());
    }

    fn arb_tp(m: usize) -> impl Strategy<Value = TruncPoly> {
        prop::collection::vec((-7i64..7, 1i64..4), m + 1)
            .prop_map(move |v| TruncPoly::new(m, v.into_iter().map(|(a, b)| Scalar::ratio(a, b)).collect()))
    }

    fn arb_triple() -> impl Strategy<Value = (TruncPoly, TruncPoly, TruncPoly)> {
        (0usize..5).prop_flat_map(|m| (arb_tp(m), arb_tp(m), arb_tp(m)))
    }

    proptest! {
        #[test]
        fn ring_laws((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn inverse_round_trip((a, _, _) in arb_triple()) {
            prop_assume!(a.is_unit());
            let inv = rm_invert(&a).unwrap();
            prop_assert_eq!(&a * &inv, TruncPoly::one(a.m()));
        }
    }
}
