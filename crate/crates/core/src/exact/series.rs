//! Truncated formal power series with tracked validity.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Polynomial, Scalar};
use crate::error::{Error, Result};

/// A power series known exactly through `x^order`.
///
/// Coefficients are stored densely from `x^0`. The valuation is derived: it
/// is the index of the first nonzero coefficient, or `order + 1` for a series
/// that vanishes through its order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    order: usize,
    coeffs: Vec<Scalar>,
}

impl Series {
    pub fn new(order: usize, mut coeffs: Vec<Scalar>) -> Self {
        coeffs.resize(order + 1, Scalar::zero());
        Series { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Series::new(order, vec![Scalar::one()])
    }

    pub fn from_poly(p: &Polynomial, order: usize) -> Self {
        Series::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    /// Coefficients `f(n)` for `n = 0..=order`.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Scalar) -> Self {
        Series {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// `e^{αx}`.
    pub fn exp(alpha: &Scalar, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Scalar::one();
        for n in 0..=order {
            coeffs.push(c.clone());
            c = &(&c * alpha) / &Scalar::from(n as i64 + 1);
        }
        Series { order, coeffs }
    }

    /// `cosh(αx)`.
    pub fn cosh(alpha: &Scalar, order: usize) -> Self {
        let e = Series::exp(alpha, order);
        Series::from_fn(order, |n| if n % 2 == 0 { e.coeffs[n].clone() } else { Scalar::zero() })
    }

    /// `sinh(αx)`.
    pub fn sinh(alpha: &Scalar, order: usize) -> Self {
        let e = Series::exp(alpha, order);
        Series::from_fn(order, |n| if n % 2 == 1 { e.coeffs[n].clone() } else { Scalar::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.order + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Coefficient of `x^n`; an error beyond the valid order.
    pub fn coeff(&self, n: usize) -> Result<&Scalar> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder {
            index: n,
            order: self.order,
        })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `n!·[x^n]`, the n-th derivative at zero.
    pub fn taylor(&self, n: usize) -> Result<Scalar> {
        Ok(self.coeff(n)? * &Scalar::factorial(n))
    }

    /// Restricts to a lower order. Asking for a higher order is an error.
    pub fn truncate(&self, order: usize) -> Result<Series> {
        if order > self.order {
            return Err(Error::InsufficientOrder {
                needed: order,
                have: self.order,
            });
        }
        Ok(Series::new(order, self.coeffs[..=order].to_vec()))
    }

    /// Whether two series agree through the smaller of their orders.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let n = self.order.min(other.order);
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// First index where two series differ within the common order.
    pub fn first_difference(&self, other: &Series) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order.min(other.order);
        Series::from_fn(n, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order.min(other.order);
        Series::from_fn(n, |i| &self.coeffs[i] - &other.coeffs[i])
    }

    pub fn neg(&self) -> Series {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product, valid through `min(N_F + v_G, N_G + v_F)`.
    pub fn mul(&self, other: &Series) -> Series {
        let (vf, vg) = (self.valuation(), other.valuation());
        let cap = self.order + other.order + 1;
        let n = (self.order + vg).min(other.order + vf).min(cap);
        Series::from_fn(n, |k| {
            let mut acc = Scalar::zero();
            for i in vf..=k.min(self.order) {
                let j = k - i;
                if j < vg || j > other.order {
                    continue;
                }
                acc += &self.coeffs[i] * &other.coeffs[j];
            }
            acc
        })
    }

    /// Multiplication by `x^k`, valid through `order + k`.
    pub fn shift_up(&self, k: usize) -> Series {
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series::new(self.order + k, coeffs)
    }

    /// `d/dx`; loses one order of validity.
    pub fn derivative(&self) -> Result<Series> {
        if self.order == 0 {
            return Err(Error::InsufficientOrder { needed: 1, have: 0 });
        }
        Ok(Series::from_fn(self.order - 1, |n| {
            &self.coeffs[n + 1] * &Scalar::from(n as i64 + 1)
        }))
    }

    /// `F(−x)`.
    pub fn reflect(&self) -> Series {
        Series::from_fn(self.order, |n| {
            if n % 2 == 0 {
                self.coeffs[n].clone()
            } else {
                -&self.coeffs[n]
            }
        })
    }

    /// Whether only even (or only odd) powers occur.
    pub fn has_parity(&self, parity: super::Parity) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || parity.admits(i))
    }

    pub fn parity_part(&self, parity: super::Parity) -> Series {
        Series::from_fn(self.order, |n| {
            if parity.admits(n) {
                self.coeffs[n].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn eval_zero(&self) -> &Scalar {
        &self.coeffs[0]
    }
}

/// `F / G`. With `w` the valuation of `G`, the quotient is valid through
/// `min(N_F, N_G) − w`; `F` must vanish below `x^w`.
pub fn series_divide(f: &Series, g: &Series) -> Result<Series> {
    let w = g.valuation();
    if w > g.order {
        return Err(Error::ZeroDivisor);
    }
    if let Some(index) = (0..w.min(f.order + 1)).find(|&i| !f.coeffs[i].is_zero()) {
        return Err(Error::Valuation {
            index,
            divisor_valuation: w,
        });
    }
    let n = f.order.min(g.order);
    if n < w {
        return Err(Error::InsufficientOrder { needed: w, have: n });
    }
    let order = n - w;
    let g0_inv = g.coeffs[w].inv().expect("leading coefficient is nonzero");
    let mut h: Vec<Scalar> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = f.coeffs[k + w].clone();
        for i in 1..=k {
            acc -= &g.coeffs[w + i] * &h[k - i];
        }
        h.push(&acc * &g0_inv);
    }
    Ok(Series { order, coeffs: h })
}

/// `p(d/dx + a) F`. Expanding `p(y + a) = Σ b_k y^k` gives `Σ b_k F^{(k)}`;
/// validity drops by `deg p`.
pub fn apply_p_shift_series(p: &Polynomial, a: &Scalar, f: &Series) -> Result<Series> {
    let shifted = p.shift(a);
    let Some(d) = shifted.degree() else {
        return Ok(Series::zero(f.order));
    };
    if d > f.order {
        return Err(Error::InsufficientOrder {
            needed: d,
            have: f.order,
        });
    }
    let order = f.order - d;
    Ok(Series::from_fn(order, |n| {
        let mut acc = Scalar::zero();
        for (k, b) in shifted.coeffs().iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            // n-th coefficient of F^{(k)} is f_{n+k}·(n+k)!/n!
            let mut falling = Scalar::one();
            for t in 1..=k {
                falling = &falling * &Scalar::from((n + t) as i64);
            }
            acc += &(b * &f.coeffs[n + k]) * &falling;
        }
        acc
    }))
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(order {}) [", self.order)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesWire {
    order: usize,
    valuation: usize,
    coefficients: Vec<Scalar>,
}

impl Serialize for Series {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let v = self.valuation();
        SeriesWire {
            order: self.order,
            valuation: v,
            coefficients: self.coeffs.get(v..).map(<[Scalar]>::to_vec).unwrap_or_default(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = SeriesWire::deserialize(deserializer)?;
        if w.valuation + w.coefficients.len() > w.order + 1 {
            return Err(D::Error::custom("coefficients extend beyond the order"));
        }
        let mut coeffs = vec![Scalar::zero(); w.valuation];
        coeffs.extend(w.coefficients);
        Ok(Series::new(w.order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn two_sinh_half(order: usize) -> Series {
        Series::sinh(&Scalar::half(), order).scale(&Scalar::from(2))
    }

    #[test]
    fn cosh_minus_one_over_two_sinh_half() {
        let n = 16;
        let f = Series::cosh(&Scalar::one(), n).sub(&Series::one(n));
        let q = series_divide(&f, &two_sinh_half(n)).unwrap();
        assert_eq!(q.order(), n - 1);
        // oracle: cosh x − 1 = 2 sinh²(x/2)
        assert!(q.agrees_with(&Series::sinh(&Scalar::half(), n)));
    }

    #[test]
    fn divide_zero() {
        let q = series_divide(&Series::zero(10), &two_sinh_half(10)).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn valuation_violation() {
        let err = series_divide(&Series::one(10), &two_sinh_half(10)).unwrap_err();
        assert_eq!(err, Error::Valuation { index: 0, divisor_valuation: 1 });
    }

    #[test]
    fn beyond_order_is_an_error() {
        let s = Series::one(3);
        assert!(s.coeff(3).is_ok());
        assert!(matches!(s.coeff(4), Err(Error::BeyondOrder { .. })));
    }

    #[test]
    fn p_shift_examples() {
        let x2 = Series::from_poly(&Polynomial::from_ints(&[0, 0, 1]), 8);
        let d = apply_p_shift_series(&Polynomial::x(), &Scalar::zero(), &x2).unwrap();
        assert!(d.agrees_with(&Series::from_poly(&Polynomial::from_ints(&[0, 2]), 8)));

        let p = Polynomial::from_ints(&[0, -1, 1]);
        let s = Series::sinh(&Scalar::half(), 12);
        assert!(apply_p_shift_series(&p, &Scalar::half(), &s).unwrap().is_zero());

        let one = apply_p_shift_series(&Polynomial::one(), &Scalar::from(3), &s).unwrap();
        assert_eq!(one, s);
    }

    #[test]
    fn serde_round_trip() {
        let s = Series::sinh(&Scalar::half(), 5);
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains("\"valuation\":1"));
        let back: Series = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let z: Series = serde_json::from_str(&serde_json::to_string(&Series::zero(4)).unwrap()).unwrap();
        assert_eq!(z, Series::zero(4));
    }

    fn arb_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((-6i64..6, 1i64..4), order + 1)
            .prop_map(move |v| Series::new(order, v.into_iter().map(|(a, b)| Scalar::ratio(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn divide_round_trip(f in arb_series(10), g in arb_series(10), shift in 0usize..3) {
            let g = g.shift_up(shift).truncate(10).unwrap();
            prop_assume!(!g.is_zero());
            let fg = f.mul(&g);
            let q = series_divide(&fg, &g).unwrap();
            prop_assert!(q.agrees_with(&f));
        }
    }
}
