//! Quasipolynomials `Σ_α q_α(x) e^{αx}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Parity, Polynomial, Scalar, Series};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quasipolynomial {
    terms: BTreeMap<Scalar, Polynomial>,
}

impl Quasipolynomial {
    pub fn zero() -> Self {
        Quasipolynomial::default()
    }

    /// `q(x)·e^{αx}`.
    pub fn term(alpha: Scalar, q: Polynomial) -> Self {
        let mut out = Quasipolynomial::zero();
        out.add_term(alpha, &q);
        out
    }

    /// `c·e^{αx}`.
    pub fn exp(alpha: Scalar, c: Scalar) -> Self {
        Quasipolynomial::term(alpha, Polynomial::constant(c))
    }

    pub fn constant(c: Scalar) -> Self {
        Quasipolynomial::exp(Scalar::zero(), c)
    }

    /// `q(x)·cosh(αx)`.
    pub fn cosh(alpha: &Scalar, q: &Polynomial) -> Self {
        let half = q.scale(&Scalar::half());
        let mut out = Quasipolynomial::term(alpha.clone(), half.clone());
        out.add_term(-alpha, &half);
        out
    }

    /// `q(x)·sinh(αx)`.
    pub fn sinh(alpha: &Scalar, q: &Polynomial) -> Self {
        let half = q.scale(&Scalar::half());
        let mut out = Quasipolynomial::term(alpha.clone(), half.clone());
        out.add_term(-alpha, &-&half);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Polynomial)>) -> Self {
        let mut out = Quasipolynomial::zero();
        for (a, q) in terms {
            out.add_term(a, &q);
        }
        out
    }

    pub fn add_term(&mut self, alpha: Scalar, q: &Polynomial) {
        let sum = match self.terms.get(&alpha) {
            Some(old) => old + q,
            None => q.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&alpha);
        } else {
            self.terms.insert(alpha, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Scalar, Polynomial> {
        &self.terms
    }

    pub fn multiplicity(&self, alpha: &Scalar) -> Polynomial {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Quasipolynomial) -> Quasipolynomial {
        let mut out = self.clone();
        for (a, q) in &other.terms {
            out.add_term(a.clone(), q);
        }
        out
    }

    pub fn sub(&self, other: &Quasipolynomial) -> Quasipolynomial {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Quasipolynomial {
        Quasipolynomial::from_terms(self.terms.iter().map(|(a, q)| (a.clone(), q.scale(c))))
    }

    pub fn mul(&self, other: &Quasipolynomial) -> Quasipolynomial {
        let mut out = Quasipolynomial::zero();
        for (a, q) in &self.terms {
            for (b, r) in &other.terms {
                out.add_term(a + b, &(q * r));
            }
        }
        out
    }

    /// Multiplication by a polynomial in `x`.
    pub fn mul_poly(&self, p: &Polynomial) -> Quasipolynomial {
        Quasipolynomial::from_terms(self.terms.iter().map(|(a, q)| (a.clone(), q * p)))
    }

    /// `F(−x)`: `q(x)e^{αx}` becomes `q(−x)e^{−αx}`.
    pub fn reflect(&self) -> Quasipolynomial {
        Quasipolynomial::from_terms(self.terms.iter().map(|(a, q)| (-a, q.reflect())))
    }

    pub fn has_parity(&self, parity: Parity) -> bool {
        match parity {
            Parity::Even => self.reflect() == *self,
            Parity::Odd => self.reflect() == self.scale(&-Scalar::one()),
        }
    }

    pub fn is_even(&self) -> bool {
        self.has_parity(Parity::Even)
    }

    pub fn is_odd(&self) -> bool {
        self.has_parity(Parity::Odd)
    }

    /// `(F(x) ± F(−x))/2`.
    pub fn parity_part(&self, parity: Parity) -> Quasipolynomial {
        let r = self.reflect();
        let s = match parity {
            Parity::Even => self.add(&r),
            Parity::Odd => self.sub(&r),
        };
        s.scale(&Scalar::half())
    }

    pub fn eval_zero(&self) -> Scalar {
        self.terms.values().map(|q| q.coeff(0)).sum()
    }

    pub fn derivative(&self) -> Quasipolynomial {
        Quasipolynomial::from_terms(
            self.terms
                .iter()
                .map(|(a, q)| (a.clone(), &q.derivative() + &q.scale(a))),
        )
    }

    /// Truncated Taylor series through `x^order`. The term `x^d e^{αx}`
    /// contributes `α^{n−d}/(n−d)!` to the coefficient of `x^n`.
    pub fn to_series(&self, order: usize) -> Series {
        let mut coeffs = vec![Scalar::zero(); order + 1];
        for (alpha, q) in &self.terms {
            let e = Series::exp(alpha, order);
            for (d, qd) in q.coeffs().iter().enumerate() {
                if qd.is_zero() {
                    continue;
                }
                for n in d..=order {
                    coeffs[n] += qd * &e.coeffs()[n - d];
                }
            }
        }
        Series::new(order, coeffs)
    }

    /// Largest multiplicity degree plus one, summed over exponents: the order
    /// of the minimal annihilator.
    pub fn annihilator_degree(&self) -> usize {
        self.terms.values().map(|q| q.degree().unwrap_or(0) + 1).sum()
    }

    /// The minimal annihilator `Π_α (y − α)^{deg q_α + 1}`.
    pub fn annihilator(&self) -> Polynomial {
        self.terms.iter().fold(Polynomial::one(), |acc, (a, q)| {
            let f = Polynomial::linear(-a);
            (0..=q.degree().unwrap_or(0)).fold(acc, |acc, _| &acc * &f)
        })
    }
}

/// `p(d/dx + a)` applied term by term: on `q e^{αx}` it is
/// `e^{αx} Σ c_k q^{(k)}` where `p(y + α + a) = Σ c_k y^k`.
pub fn apply_p_shift_quasi(p: &Polynomial, a: &Scalar, f: &Quasipolynomial) -> Quasipolynomial {
    let mut out = Quasipolynomial::zero();
    for (alpha, q) in &f.terms {
        let shifted = p.shift(&(alpha + a));
        let mut acc = Polynomial::zero();
        let mut dq = q.clone();
        for c in shifted.coeffs() {
            if dq.is_zero() {
                break;
            }
            acc = &acc + &dq.scale(c);
            dq = dq.derivative();
        }
        out.add_term(alpha.clone(), &acc);
    }
    out
}

impl fmt::Debug for Quasipolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, q)| format!("({})e^({}x)", q, a))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    exponent: Scalar,
    multiplicity_coefficients: Polynomial,
}

impl Serialize for Quasipolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermWire> = self
            .terms
            .iter()
            .map(|(a, q)| TermWire {
                exponent: a.clone(),
                multiplicity_coefficients: q.clone(),
            })
            .collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Quasipolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<TermWire>::deserialize(deserializer)?;
        Ok(Quasipolynomial::from_terms(
            v.into_iter().map(|t| (t.exponent, t.multiplicity_coefficients)),
        ))
    }
}
