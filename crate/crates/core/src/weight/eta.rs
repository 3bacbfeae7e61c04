//! The basis `η_i(x,s) = (x^i/i!)(e^{(s−1/2)x} + (−1)^i e^{−(s−1/2)x})/2`,
//! expansions of even quasipolynomials in it, and equivalence classes of
//! the parameters `s`.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Polynomial, Quasipolynomial, Scalar, Series};

pub fn eta_quasi(i: usize, s: &Scalar) -> Quasipolynomial {
    let beta = s - &Scalar::half();
    let mono = Polynomial::monomial(i, Scalar::factorial(i).inv().unwrap());
    if i % 2 == 0 {
        Quasipolynomial::cosh(&beta, &mono)
    } else {
        Quasipolynomial::sinh(&beta, &mono)
    }
}

pub fn eta_series(i: usize, s: &Scalar, order: usize) -> Series {
    eta_quasi(i, s).to_series(order)
}

/// Whether `s` obeys the normalization: `s ≤ 0` on ℤ, `s ≤ 1/2` on
/// ℤ + 1/2, positive imaginary part off the real line, and fractional part
/// below 1/2 otherwise.
pub fn is_canonical_s(s: &Scalar) -> bool {
    if s.is_integer() {
        return !s.re().is_positive();
    }
    if s.is_half_odd_integer() {
        return *s <= Scalar::half();
    }
    if !s.is_real() {
        return s.im().is_positive();
    }
    generic_key(s) < Scalar::half()
}

/// The canonical one of `s` and `1 − s`. When the flag is set the result
/// is `1 − s` and coefficients pick up `(−1)^i`, since
/// `η_i(x, 1 − s) = (−1)^i η_i(x, s)`.
pub fn canonical_s(s: &Scalar) -> (Scalar, bool) {
    if is_canonical_s(s) {
        (s.clone(), false)
    } else {
        (&Scalar::one() - s, true)
    }
}

/// Coefficients `a_{s,i}` of `Σ_s Σ_i a_{s,i} η_i(x,s)` over canonical `s`;
/// each vector has no trailing zeros and odd `i` never appears for
/// `s = 1/2`, where `η_i` vanishes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EtaData {
    pub coefficients: BTreeMap<Scalar, Vec<Scalar>>,
}

impl EtaData {
    /// Adds `a·η_i(x,s)` after moving `s` to its canonical value.
    pub fn add(&mut self, s: &Scalar, i: usize, a: &Scalar) {
        if *s == Scalar::half() && i % 2 == 1 {
            return;
        }
        let (s, flipped) = canonical_s(s);
        let a = if flipped && i % 2 == 1 { -a } else { a.clone() };
        let v = self.coefficients.entry(s.clone()).or_default();
        if v.len() <= i {
            v.resize(i + 1, Scalar::zero());
        }
        v[i] += &a;
        while v.last().is_some_and(Scalar::is_zero) {
            v.pop();
        }
        if v.is_empty() {
            self.coefficients.remove(&s);
        }
    }

    pub fn get(&self, s: &Scalar, i: usize) -> Scalar {
        self.coefficients
            .get(s)
            .and_then(|v| v.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// `m_s`: the largest `i` with `a_{s,i} ≠ 0`.
    pub fn m_s(&self, s: &Scalar) -> Option<usize> {
        self.coefficients.get(s).map(|v| v.len() - 1)
    }

    pub fn to_quasipolynomial(&self) -> Quasipolynomial {
        let mut out = Quasipolynomial::zero();
        for (s, v) in &self.coefficients {
            for (i, a) in v.iter().enumerate() {
                if !a.is_zero() {
                    out = out.add(&eta_quasi(i, s).scale(a));
                }
            }
        }
        out
    }

    /// The part supported on the given parameters.
    pub fn restrict<'a>(&self, ss: impl IntoIterator<Item = &'a Scalar>) -> EtaData {
        let mut out = EtaData::default();
        for s in ss {
            if let Some(v) = self.coefficients.get(s) {
                out.coefficients.insert(s.clone(), v.clone());
            }
        }
        out
    }
}

/// Expands an even quasipolynomial in the η basis. On the pair `±β` with
/// `s = β + 1/2` canonical, `P_β(x) = Σ_i a_{s,i} x^i/(2·i!)`; at `β = 0`
/// the factor 2 is absent.
pub fn eta_decompose(f: &Quasipolynomial) -> Result<EtaData> {
    if !f.is_even() {
        return Err(Error::InvalidWeight("quasipolynomial is not even".into()));
    }
    let mut out = EtaData::default();
    for (beta, p) in f.terms() {
        let s = beta + &Scalar::half();
        if !is_canonical_s(&s) {
            continue;
        }
        let weight = if beta.is_zero() { Scalar::one() } else { Scalar::from(2) };
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.add(&s, i, &(&(c * &weight) * &Scalar::factorial(i)));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Integer,
    HalfInteger,
    Generic,
}

/// A class `{s ∼ ±s′ mod ℤ}` of canonical parameters: representative `0`,
/// `1/2`, or for generic classes the member of largest real part; members
/// are `rep − k` for the listed `k ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentClass {
    pub rep: Scalar,
    pub kind: ClassKind,
    pub members: Vec<i64>,
}

impl ExponentClass {
    pub fn member_s(&self, k: i64) -> Scalar {
        &self.rep - &Scalar::from(k)
    }

    pub fn parameters(&self) -> Vec<Scalar> {
        self.members.iter().map(|&k| self.member_s(k)).collect()
    }
}

fn generic_key(s: &Scalar) -> Scalar {
    s - &Scalar::from(i64::try_from(s.floor_re()).expect("parameter fits in i64"))
}

/// Groups the parameters of `ed` into classes, integer class first, then
/// half-integer, then generic classes by fractional part.
pub fn partition_classes(ed: &EtaData) -> Vec<ExponentClass> {
    let mut integer = Vec::new();
    let mut half = Vec::new();
    let mut generic: BTreeMap<Scalar, Vec<Scalar>> = BTreeMap::new();
    for s in ed.coefficients.keys() {
        if s.is_integer() {
            integer.push(-s.to_i64().unwrap());
        } else if s.is_half_odd_integer() {
            half.push((&Scalar::half() - s).to_i64().unwrap());
        } else {
            generic.entry(generic_key(s)).or_default().push(s.clone());
        }
    }
    let mut out = Vec::new();
    for (rep, kind, mut members) in [
        (Scalar::zero(), ClassKind::Integer, integer),
        (Scalar::half(), ClassKind::HalfInteger, half),
    ] {
        if !members.is_empty() {
            members.sort();
            out.push(ExponentClass { rep, kind, members });
        }
    }
    for ss in generic.into_values() {
        let rep = ss.iter().max_by(|a, b| a.re().cmp(b.re())).unwrap().clone();
        let mut members: Vec<i64> = ss.iter().map(|s| (&rep - s).to_i64().unwrap()).collect();
        members.sort();
        out.push(ExponentClass {
            rep,
            kind: ClassKind::Generic,
            members,
        });
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EtaWire {
    s: Scalar,
    coefficients: Vec<Scalar>,
}

impl Serialize for EtaData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<EtaWire> = self
            .coefficients
            .iter()
            .map(|(s, c)| EtaWire {
                s: s.clone(),
                coefficients: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EtaData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut out = EtaData::default();
        for w in Vec::<EtaWire>::deserialize(d)? {
            for (i, a) in w.coefficients.iter().enumerate() {
                out.add(&w.s, i, a);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cosh(a: Scalar) -> Quasipolynomial {
        Quasipolynomial::cosh(&a, &Polynomial::one())
    }

    #[test]
    fn eta_examples() {
        let ed = eta_decompose(&cosh(Scalar::one())).unwrap();
        assert_eq!(ed.coefficients.len(), 1);
        assert_eq!(ed.get(&Scalar::ratio(-1, 2), 0), Scalar::one());

        let x_sinh_x = Quasipolynomial::sinh(&Scalar::one(), &Polynomial::x());
        let ed = eta_decompose(&x_sinh_x).unwrap();
        assert_eq!(ed.coefficients.len(), 1);
        assert_eq!(ed.get(&Scalar::ratio(-1, 2), 1), -Scalar::one());

        assert!(eta_decompose(&Quasipolynomial::zero()).unwrap().coefficients.is_empty());
        assert!(eta_decompose(&Quasipolynomial::sinh(&Scalar::one(), &Polynomial::one())).is_err());
    }

    #[test]
    fn eta_identities_at_special_points() {
        // η_0(x, s + 1/2) = cosh(sx)
        let s = Scalar::ratio(2, 7);
        assert_eq!(eta_quasi(0, &(&s + &Scalar::half())), cosh(s));
        for i in 0..5 {
            let t = Scalar::ratio(-3, 5);
            let lhs = eta_quasi(i, &-&t);
            let rhs = eta_quasi(i, &(&t + &Scalar::one())).scale(&Scalar::sign_pow(i as i64));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn canonical_rules() {
        for (s, ok) in [
            (Scalar::zero(), true),
            (Scalar::from(-3), true),
            (Scalar::one(), false),
            (Scalar::half(), true),
            (Scalar::ratio(-5, 2), true),
            (Scalar::ratio(3, 2), false),
            (Scalar::ratio(1, 4), true),
            (Scalar::ratio(7, 3), true),
            (Scalar::ratio(3, 4), false),
            (Scalar::ratio(-1, 4), false),
            (Scalar::complex(Scalar::half(), Scalar::one()), true),
            (Scalar::complex(Scalar::half(), Scalar::from(-1)), false),
        ] {
            assert_eq!(is_canonical_s(&s), ok, "{}", s);
            let (c, _) = canonical_s(&s);
            assert!(is_canonical_s(&c));
        }
    }

    #[test]
    fn class_examples() {
        let mut ed = EtaData::default();
        ed.add(&Scalar::ratio(-1, 2), 0, &Scalar::one());
        ed.add(&Scalar::half(), 0, &Scalar::one());
        let cl = partition_classes(&ed);
        assert_eq!(cl, vec![ExponentClass { rep: Scalar::half(), kind: ClassKind::HalfInteger, members: vec![0, 1] }]);

        let mut ed = EtaData::default();
        ed.add(&Scalar::zero(), 0, &Scalar::one());
        ed.add(&Scalar::from(-3), 1, &Scalar::one());
        let cl = partition_classes(&ed);
        assert_eq!(cl, vec![ExponentClass { rep: Scalar::zero(), kind: ClassKind::Integer, members: vec![0, 3] }]);

        let mut ed = EtaData::default();
        ed.add(&Scalar::ratio(1, 4), 0, &Scalar::one());
        ed.add(&Scalar::ratio(-7, 4), 2, &Scalar::one());
        ed.add(&Scalar::ratio(7, 3), 0, &Scalar::one());
        let cl = partition_classes(&ed);
        assert_eq!(cl.len(), 2);
        assert!(cl.contains(&ExponentClass { rep: Scalar::ratio(1, 4), kind: ClassKind::Generic, members: vec![0, 2] }));
        assert!(cl.contains(&ExponentClass { rep: Scalar::ratio(7, 3), kind: ClassKind::Generic, members: vec![0] }));
    }

    proptest! {
        #[test]
        fn eta_reflection_identity(num in -20i64..20, den in 1i64..7, i in 0usize..=4) {
            let s = Scalar::ratio(num, den);
            let lhs = eta_series(i, &-&s, 16);
            let rhs = eta_series(i, &(&s + &Scalar::one()), 16).scale(&Scalar::sign_pow(i as i64));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn decompose_round_trip(entries in proptest::collection::vec((-12i64..12, 1i64..5, 0usize..3, -4i64..5), 0..5)) {
            let mut ed = EtaData::default();
            for (num, den, i, a) in entries {
                ed.add(&Scalar::ratio(num, den), i, &Scalar::from(a));
            }
            let f = ed.to_quasipolynomial();
            prop_assert_eq!(eta_decompose(&f).unwrap(), ed);
        }
    }
}
