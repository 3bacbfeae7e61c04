//! Univariate polynomials over ℚ(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;

/// Parity of a polynomial or power series as a function of `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(d: usize) -> Parity {
        if d % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn admits(self, d: usize) -> bool {
        Parity::of_degree(d) == self
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// Coefficient vector indexed by degree, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Polynomial::monomial(1, Scalar::one())
    }

    pub fn monomial(d: usize, c: Scalar) -> Self {
        let mut v = vec![Scalar::zero(); d + 1];
        v[d] = c;
        Polynomial::new(v)
    }

    /// `x + a`.
    pub fn linear(a: Scalar) -> Self {
        Polynomial::new(vec![a, Scalar::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Polynomial::new(cs.iter().map(|&c| Scalar::from(c)).collect())
    }

    /// Falling factorial `x(x−1)⋯(x−l+1)`.
    pub fn falling_factorial(l: usize) -> Self {
        (0..l).fold(Polynomial::one(), |acc, i| {
            &acc * &Polynomial::linear(-Scalar::from(i as i64))
        })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// Coefficient of `x^d`, zero beyond the degree.
    pub fn coeff(&self, d: usize) -> Scalar {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
            None => Polynomial::zero(),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::from(i as i64))
                .collect(),
        )
    }

    /// Composition `self(q(x))`.
    pub fn compose(&self, q: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// `self(a·x + b)`.
    pub fn compose_linear(&self, a: &Scalar, b: &Scalar) -> Polynomial {
        self.compose(&Polynomial::new(vec![b.clone(), a.clone()]))
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: &Scalar) -> Polynomial {
        if a.is_zero() {
            return self.clone();
        }
        self.compose_linear(&Scalar::one(), a)
    }

    /// `self(−x)`.
    pub fn reflect(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    pub fn even_part(&self) -> Polynomial {
        self.parity_part(Parity::Even)
    }

    pub fn odd_part(&self) -> Polynomial {
        self.parity_part(Parity::Odd)
    }

    pub fn parity_part(&self, parity: Parity) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if parity.admits(i) { c.clone() } else { Scalar::zero() })
                .collect(),
        )
    }

    /// Whether only powers of the given parity occur. The zero polynomial has
    /// both parities.
    pub fn has_parity(&self, parity: Parity) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || parity.admits(i))
    }

    /// Euclidean division over the field ℚ(i). Panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let q = &rem[i + dd] * &lead_inv;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Exact quotient if `d` divides `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Expansion in powers of `(x − a)`: returns `g` with `self(x) = g(x − a)`.
    pub fn recenter(&self, a: &Scalar) -> Polynomial {
        self.shift(a)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})x", c)?,
                _ => write!(f, "({})x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl<'a, 'b> Add<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'b Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, 'b> Sub<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'b Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, 'b> Mul<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'b Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Polynomial::new(Vec::<Scalar>::deserialize(deserializer)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-9i64..9, 1i64..5), 0..6).prop_map(|v| {
            Polynomial::new(v.into_iter().map(|(a, b)| Scalar::ratio(a, b)).collect())
        })
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::from_ints(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn falling_factorial_values() {
        let f = Polynomial::falling_factorial(3);
        assert_eq!(f.eval(&Scalar::from(5)), Scalar::from(60));
        assert_eq!(f.eval(&Scalar::from(2)), Scalar::zero());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = Polynomial::from_ints(&[-1, 0, 1]); // x²−1
        let b = Polynomial::from_ints(&[1, 2, 1]); // (x+1)²
        assert_eq!(a.gcd(&b), Polynomial::from_ints(&[1, 1]));
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }

        #[test]
        fn shift_then_unshift(a in arb_poly(), n in -5i64..5) {
            let s = Scalar::from(n);
            prop_assert_eq!(a.shift(&s).shift(&-&s), a);
        }
    }
}
