//! Polynomials in a matrix index `j` with coefficients in R_m.

use std::fmt;

use crate::exact::{Polynomial, Scalar, TruncPoly};

/// `Σ_d c_d j^d` with `c_d ∈ R_m`; no trailing zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexPoly {
    m: usize,
    coeffs: Vec<TruncPoly>,
}

impl IndexPoly {
    pub fn new(m: usize, mut coeffs: Vec<TruncPoly>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.m() == m));
        while coeffs.last().is_some_and(TruncPoly::is_zero) {
            coeffs.pop();
        }
        IndexPoly { m, coeffs }
    }

    pub fn zero(m: usize) -> Self {
        IndexPoly { m, coeffs: Vec::new() }
    }

    pub fn constant(c: TruncPoly) -> Self {
        IndexPoly::new(c.m(), vec![c])
    }

    /// `a + b·u + e·j` with scalar `a, b, e`.
    pub fn affine(m: usize, a: Scalar, b: Scalar, e: Scalar) -> Self {
        IndexPoly::new(m, vec![TruncPoly::affine(m, a, b), TruncPoly::constant(m, e)])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[TruncPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, j: &Scalar) -> TruncPoly {
        let mut acc = TruncPoly::zero(self.m);
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(j) + c;
        }
        acc
    }

    pub fn eval_int(&self, j: i64) -> TruncPoly {
        self.eval(&Scalar::from(j))
    }

    pub fn add(&self, other: &IndexPoly) -> IndexPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IndexPoly::new(self.m, (0..n).map(|d| &self.coeff(d) + &other.coeff(d)).collect())
    }

    pub fn sub(&self, other: &IndexPoly) -> IndexPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IndexPoly::new(self.m, (0..n).map(|d| &self.coeff(d) - &other.coeff(d)).collect())
    }

    pub fn mul(&self, other: &IndexPoly) -> IndexPoly {
        if self.is_zero() || other.is_zero() {
            return IndexPoly::zero(self.m);
        }
        let mut out = vec![TruncPoly::zero(self.m); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in other.coeffs.iter().enumerate() {
                out[a + b] = &out[a + b] + &(ca * cb);
            }
        }
        IndexPoly::new(self.m, out)
    }

    pub fn scale(&self, c: &Scalar) -> IndexPoly {
        IndexPoly::new(self.m, self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn mul_trunc(&self, c: &TruncPoly) -> IndexPoly {
        IndexPoly::new(self.m, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `P(j − r)`.
    pub fn shift(&self, r: i64) -> IndexPoly {
        let lin = IndexPoly::affine(self.m, Scalar::from(-r), Scalar::zero(), Scalar::one());
        self.compose(&lin)
    }

    /// `P(q(j))` for another index polynomial `q` whose coefficients are
    /// scalars times powers of `u`.
    pub fn compose(&self, q: &IndexPoly) -> IndexPoly {
        let mut acc = IndexPoly::zero(self.m);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&IndexPoly::constant(c.clone()));
        }
        acc
    }

    /// `F(q(j))` for a scalar polynomial `F`.
    pub fn compose_poly(f: &Polynomial, q: &IndexPoly) -> IndexPoly {
        let mut acc = IndexPoly::zero(q.m);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(q).add(&IndexPoly::constant(TruncPoly::constant(q.m, c.clone())));
        }
        acc
    }

    fn coeff(&self, d: usize) -> TruncPoly {
        self.coeffs.get(d).cloned().unwrap_or_else(|| TruncPoly::zero(self.m))
    }

    /// Nested coefficient table `[j-power][u-power]`.
    pub fn to_table(&self) -> Vec<Vec<Scalar>> {
        self.coeffs.iter().map(|c| c.coeffs().to_vec()).collect()
    }

    pub fn from_table(m: usize, table: Vec<Vec<Scalar>>) -> Self {
        IndexPoly::new(m, table.into_iter().map(|r| TruncPoly::new(m, r)).collect())
    }
}

impl fmt::Debug for IndexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| format!("{}·j^{}", c, d))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_moves_the_argument() {
        // P(j) = j² + u at m=1; P(j−2) evaluated at 5 equals P(3)
        let p = IndexPoly::new(
            1,
            vec![TruncPoly::u(1), TruncPoly::zero(1), TruncPoly::one(1)],
        );
        assert_eq!(p.shift(2).eval_int(5), p.eval_int(3));
    }

    #[test]
    fn compose_linear() {
        // F(x) = x³ at s + u − j, m = 0, s = 1/4, j = 2
        let q = IndexPoly::affine(0, Scalar::ratio(1, 4), Scalar::one(), -Scalar::one());
        let f = Polynomial::monomial(3, Scalar::one());
        let v = IndexPoly::compose_poly(&f, &q).eval_int(2);
        assert_eq!(v.coeff(0), &Scalar::ratio(-7, 4).pow(3));
    }
}
