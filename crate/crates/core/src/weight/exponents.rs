//! Exponents and multiplicities: `F = Σ q_i(x)cosh(e_i⁺x) + Σ r_j(x)sinh(e_j⁻x)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Polynomial, Quasipolynomial, Scalar};

/// The representative of `{α, −α}`: zero, or the member with positive real
/// part, or positive imaginary part on the imaginary axis. The flag is set
/// when `α` itself is not the representative.
pub fn pair_representative(alpha: &Scalar) -> (Scalar, bool) {
    if alpha.is_zero() || alpha.is_positive_half_plane() {
        (alpha.clone(), false)
    } else {
        (-alpha, true)
    }
}

/// Even-type exponents with even multiplicities and odd-type exponents
/// with odd multiplicities, keyed by pair representatives.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExponentData {
    pub even: BTreeMap<Scalar, Polynomial>,
    pub odd: BTreeMap<Scalar, Polynomial>,
}

impl ExponentData {
    pub fn is_empty(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    /// Adds `q·cosh(ex)`, normalizing the sign of `e`.
    pub fn add_even(&mut self, e: &Scalar, q: &Polynomial) {
        let (rep, _) = pair_representative(e);
        add_into(&mut self.even, rep, q);
    }

    /// Adds `r·sinh(ex)`, normalizing the signs of `e` and `r` jointly.
    pub fn add_odd(&mut self, e: &Scalar, r: &Polynomial) {
        let (rep, flipped) = pair_representative(e);
        let r = if flipped { -r } else { r.clone() };
        add_into(&mut self.odd, rep, &r);
    }

    /// `Σ q_i(0)`, which equals the central charge.
    pub fn sum_q0(&self) -> Scalar {
        self.even.values().map(|q| q.coeff(0)).sum()
    }

    pub fn to_quasipolynomial(&self) -> Quasipolynomial {
        let mut out = Quasipolynomial::zero();
        for (e, q) in &self.even {
            out = out.add(&Quasipolynomial::cosh(e, q));
        }
        for (e, r) in &self.odd {
            out = out.add(&Quasipolynomial::sinh(e, r));
        }
        out
    }

    /// All exponents, both types.
    pub fn exponents(&self) -> impl Iterator<Item = &Scalar> {
        self.even.keys().chain(self.odd.keys())
    }
}

fn add_into(map: &mut BTreeMap<Scalar, Polynomial>, key: Scalar, q: &Polynomial) {
    let sum = match map.get(&key) {
        Some(old) => old + q,
        None => q.clone(),
    };
    if sum.is_zero() {
        map.remove(&key);
    } else {
        map.insert(key, sum);
    }
}

/// Pairs `P(x)e^{αx} + P(−x)e^{−αx} = 2E(x)cosh(αx) + 2O(x)sinh(αx)` with
/// `E`, `O` the even and odd parts of `P`; the `α = 0` term is its own
/// even multiplicity.
pub fn exponent_decompose(f: &Quasipolynomial) -> Result<ExponentData> {
    if !f.is_even() {
        return Err(Error::InvalidWeight("quasipolynomial is not even".into()));
    }
    let two = Scalar::from(2);
    let mut out = ExponentData::default();
    for (alpha, p) in f.terms() {
        let (rep, flipped) = pair_representative(alpha);
        if flipped {
            continue;
        }
        if rep.is_zero() {
            out.add_even(&rep, p);
            continue;
        }
        let (e, o) = (p.even_part().scale(&two), p.odd_part().scale(&two));
        if !e.is_zero() {
            out.add_even(&rep, &e);
        }
        if !o.is_zero() {
            out.add_odd(&rep, &o);
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExponentWire {
    exponent: Scalar,
    multiplicity_coefficients: Polynomial,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExponentDataWire {
    even: Vec<ExponentWire>,
    odd: Vec<ExponentWire>,
}

impl Serialize for ExponentData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let list = |m: &BTreeMap<Scalar, Polynomial>| {
            m.iter()
                .map(|(e, q)| ExponentWire {
                    exponent: e.clone(),
                    multiplicity_coefficients: q.clone(),
                })
                .collect()
        };
        ExponentDataWire {
            even: list(&self.even),
            odd: list(&self.odd),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExponentData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = ExponentDataWire::deserialize(d)?;
        let mut out = ExponentData::default();
        for t in wire.even {
            out.add_even(&t.exponent, &t.multiplicity_coefficients);
        }
        for t in wire.odd {
            out.add_odd(&t.exponent, &t.multiplicity_coefficients);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::f_quasi;
    use super::*;
    use crate::involution::SignChoice;

    #[test]
    fn worked_exponents() {
        let w = worked(SignChoice::Plus, Scalar::one());
        let ed = exponent_decompose(&f_quasi(&w).unwrap()).unwrap();
        let expect: BTreeMap<Scalar, Polynomial> = [
            (Scalar::one(), Polynomial::one()),
            (Scalar::half(), Polynomial::one()),
            (Scalar::zero(), Polynomial::from_ints(&[-1])),
        ]
        .into_iter()
        .collect();
        assert_eq!(ed.even, expect);
        assert!(ed.odd.is_empty());
        assert_eq!(ed.sum_q0(), *w.c0());
    }

    #[test]
    fn odd_type_exponent() {
        let phi = Quasipolynomial::sinh(&Scalar::half(), &Polynomial::x());
        let ed = exponent_decompose(&phi).unwrap();
        assert!(ed.even.is_empty());
        assert_eq!(ed.odd.get(&Scalar::half()), Some(&Polynomial::x()));
        assert!(exponent_decompose(&Quasipolynomial::zero()).unwrap().is_empty());
    }

    #[test]
    fn sign_normalization() {
        let mut ed = ExponentData::default();
        ed.add_odd(&Scalar::ratio(-2, 3), &Polynomial::x());
        ed.add_even(&Scalar::complex(Scalar::zero(), Scalar::from(-1)), &Polynomial::one());
        assert_eq!(ed.odd.get(&Scalar::ratio(2, 3)), Some(&-&Polynomial::x()));
        assert!(ed.even.contains_key(&Scalar::i()));
        assert_eq!(exponent_decompose(&ed.to_quasipolynomial()).unwrap(), ed);
        let text = serde_json::to_string(&ed).unwrap();
        assert_eq!(serde_json::from_str::<ExponentData>(&text).unwrap(), ed);
    }

    #[test]
    fn odd_input_is_rejected() {
        let odd = Quasipolynomial::sinh(&Scalar::one(), &Polynomial::one());
        assert!(exponent_decompose(&odd).is_err());
    }
}
