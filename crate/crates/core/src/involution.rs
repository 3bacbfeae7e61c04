//! The anti-involutions σ± of the subalgebra of right multiples of `p(D)`,
//! the symmetry condition on `p`, and the graded pieces of the anti-fixed
//! subalgebras.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::exact::{Parity, Polynomial, Scalar};

/// Selects σ₊ or σ₋.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignChoice {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl SignChoice {
    /// `±1`.
    pub fn value(self) -> Scalar {
        match self {
            SignChoice::Plus => Scalar::one(),
            SignChoice::Minus => -Scalar::one(),
        }
    }

    /// `(±1)^k`.
    pub fn pow(self, k: i64) -> Scalar {
        match self {
            SignChoice::Plus => Scalar::one(),
            SignChoice::Minus => Scalar::sign_pow(k),
        }
    }

    pub const BOTH: [SignChoice; 2] = [SignChoice::Plus, SignChoice::Minus];
}

impl fmt::Display for SignChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignChoice::Plus => write!(f, "+"),
            SignChoice::Minus => write!(f, "-"),
        }
    }
}

/// Tag 0 is the even polynomials, tag 1 the odd ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParityClass(pub u8);

impl ParityClass {
    /// The overline map on integers: odd `k` goes to 0, even `k` to 1.
    pub fn overline(k: i64) -> ParityClass {
        if k.rem_euclid(2) == 1 {
            ParityClass(0)
        } else {
            ParityClass(1)
        }
    }

    pub fn parity(self) -> Parity {
        if self.0 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A polynomial `p` with `p(x) = ε p(−x + c)`, `ε = (−1)^{deg p}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricP {
    p: Polynomial,
    epsilon: Scalar,
    c: Option<Scalar>,
    free_c: bool,
}

impl SymmetricP {
    pub fn p(&self) -> &Polynomial {
        &self.p
    }

    pub fn epsilon(&self) -> &Scalar {
        &self.epsilon
    }

    pub fn degree(&self) -> usize {
        self.p.degree().unwrap_or(0)
    }

    pub fn free_c(&self) -> bool {
        self.free_c
    }

    /// The center, or an error for a constant `p` whose center has not been
    /// chosen.
    pub fn c(&self) -> Result<&Scalar> {
        self.c.as_ref().ok_or(Error::FreeCenterUnset)
    }

    pub fn c_opt(&self) -> Option<&Scalar> {
        self.c.as_ref()
    }

    /// Fixes the center of a constant `p`. For nonconstant `p` the center is
    /// determined and the call errors unless `c` agrees with it.
    pub fn with_c(&self, c: Scalar) -> Result<SymmetricP> {
        if !self.free_c && self.c.as_ref() != Some(&c) {
            return Err(Error::InvalidWeight(format!(
                "center of {} is {}, not {}",
                self.p,
                self.c.as_ref().unwrap(),
                c
            )));
        }
        Ok(SymmetricP {
            c: Some(c),
            ..self.clone()
        })
    }

    /// The center, or the supplied choice when it is free.
    pub fn resolve(&self, c_choice: Option<&Scalar>) -> Result<SymmetricP> {
        match (&self.c, c_choice) {
            (Some(_), None) => Ok(self.clone()),
            (_, Some(c)) => self.with_c(c.clone()),
            (None, None) => Err(Error::FreeCenterUnset),
        }
    }

    /// Parity class of the centered cofactors in weight `k` of the
    /// anti-fixed subalgebra: `n̄` for σ₊, `overline(n+k)` for σ₋.
    pub fn component_class(&self, k: i64, sign: SignChoice) -> ParityClass {
        let n = self.degree() as i64;
        match sign {
            SignChoice::Plus => ParityClass::overline(n),
            SignChoice::Minus => ParityClass::overline(n + k),
        }
    }

    /// δ: the parity class governing the weight −1 piece.
    pub fn delta(&self, sign: SignChoice) -> ParityClass {
        let n = self.degree() as i64;
        match sign {
            SignChoice::Plus => ParityClass::overline(n),
            SignChoice::Minus => ParityClass::overline(n - 1),
        }
    }
}

/// Checks `p(x) = ε p(−x + c)`. The candidate `c = −2c_{n−1}/(n c_n)`
/// comes from comparing `x^{n−1}` coefficients; the full identity is then
/// verified. Returns `None` when it fails.
pub fn validate_symmetry(p: &Polynomial) -> Result<Option<SymmetricP>> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let epsilon = Scalar::sign_pow(n as i64);
    if n == 0 {
        return Ok(Some(SymmetricP {
            p: p.clone(),
            epsilon,
            c: None,
            free_c: true,
        }));
    }
    let c = -(&(&Scalar::from(2) * &p.coeff(n - 1)) / &(&Scalar::from(n as i64) * &p.coeff(n)));
    let mirrored = p.compose_linear(&-Scalar::one(), &c).scale(&epsilon);
    if mirrored != *p {
        return Ok(None);
    }
    Ok(Some(SymmetricP {
        p: p.clone(),
        epsilon,
        c: Some(c),
        free_c: false,
    }))
}

/// `σ±(t^k f(D)p(D)) = ε(±1)^k t^k f(−D−k+c) p(D)`.
pub fn apply_sigma(x: &DiffOp, sign: SignChoice, sp: &SymmetricP) -> Result<DiffOp> {
    if !x.central().is_zero() {
        return Err(Error::CentralNotAllowed);
    }
    let c = sp.c()?;
    let mut out = DiffOp::zero();
    for (&k, fk) in x.terms() {
        let f = fk
            .exact_div(sp.p())
            .ok_or(Error::NotInSubalgebra { weight: k })?;
        let reflected = f.compose_linear(&-Scalar::one(), &(c - &Scalar::from(k)));
        let coef = sp.epsilon() * &sign.pow(k);
        out.add_term(k, &(&reflected * sp.p()).scale(&coef));
    }
    Ok(out)
}

/// `(X − σ±X)/2`.
pub fn project_antifixed(x: &DiffOp, sign: SignChoice, sp: &SymmetricP) -> Result<DiffOp> {
    Ok(x.sub(&apply_sigma(x, sign, sp)?).scale(&Scalar::half()))
}

pub fn is_antifixed(x: &DiffOp, sign: SignChoice, sp: &SymmetricP) -> Result<bool> {
    Ok(apply_sigma(&x.non_central(), sign, sp)? == x.non_central().scale(&-Scalar::one()))
}

/// Center `(c−k)/2` of the weight-`k` cofactors.
pub fn component_center(k: i64, sp: &SymmetricP) -> Result<Scalar> {
    Ok(&(sp.c()? - &Scalar::from(k)) * &Scalar::half())
}

/// The elements `t^k (D − (c−k)/2)^d p(D)`, `d ≤ degmax` in the parity
/// class of the weight-`k` piece. Each is checked to be anti-fixed.
pub fn component_basis(k: i64, degmax: usize, sign: SignChoice, sp: &SymmetricP) -> Result<Vec<DiffOp>> {
    let class = sp.component_class(k, sign).parity();
    let center = component_center(k, sp)?;
    let y = Polynomial::linear(-&center);
    let mut out = Vec::new();
    let mut power = Polynomial::one();
    for d in 0..=degmax {
        if class.admits(d) {
            let el = DiffOp::term(k, &power * sp.p());
            if !is_antifixed(&el, sign, sp)? {
                return Err(Error::Consistency(format!(
                    "basis element {:?} is not anti-fixed",
                    el
                )));
            }
            out.push(el);
        }
        power = &power * &y;
    }
    Ok(out)
}

/// Whether every weight component of `x` has the form
/// `t^k g(D − (c−k)/2) p(D)` with `g` in the parity class of that weight.
pub fn in_component_span(x: &DiffOp, sign: SignChoice, sp: &SymmetricP) -> Result<bool> {
    for (&k, fk) in x.terms() {
        let Some(f) = fk.exact_div(sp.p()) else {
            return Ok(false);
        };
        let g = f.shift(&component_center(k, sp)?);
        if !g.has_parity(sp.component_class(k, sign).parity()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SymmetricPWire {
    p_coefficients: Polynomial,
    epsilon: Scalar,
    c: Option<Scalar>,
    free_c: bool,
}

impl Serialize for SymmetricP {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymmetricPWire {
            p_coefficients: self.p.clone(),
            epsilon: self.epsilon.clone(),
            c: self.c.clone(),
            free_c: self.free_c,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymmetricP {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = SymmetricPWire::deserialize(deserializer)?;
        let sp = validate_symmetry(&w.p_coefficients)
            .map_err(D::Error::custom)?
            .ok_or_else(|| D::Error::custom("p does not satisfy p(x) = ε p(−x + c)"))?;
        if sp.epsilon != w.epsilon || sp.free_c != w.free_c {
            return Err(D::Error::custom("epsilon or free_c disagrees with p"));
        }
        match w.c {
            Some(c) => sp.with_c(c).map_err(D::Error::custom),
            None => Ok(sp),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategies::arb_diffop;
    use proptest::prelude::*;

    fn sp(cs: &[i64]) -> SymmetricP {
        validate_symmetry(&Polynomial::from_ints(cs)).unwrap().unwrap()
    }

    fn d() -> Polynomial {
        Polynomial::x()
    }

    #[test]
    fn validate_examples() {
        let x = sp(&[0, 1]);
        assert_eq!(x.epsilon(), &-Scalar::one());
        assert_eq!(x.c().unwrap(), &Scalar::zero());

        assert!(validate_symmetry(&Polynomial::from_ints(&[0, 0, 1, 1])).unwrap().is_none());

        let one = sp(&[1]);
        assert!(one.free_c());
        assert_eq!(one.epsilon(), &Scalar::one());
        assert_eq!(one.c(), Err(Error::FreeCenterUnset));

        assert_eq!(sp(&[0, -1, 1]).c().unwrap(), &Scalar::one());
        assert_eq!(validate_symmetry(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sigma_examples() {
        let x = sp(&[0, 1]);
        let td = DiffOp::term(1, d());
        assert_eq!(apply_sigma(&td, SignChoice::Plus, &x).unwrap(), td.scale(&-Scalar::one()));
        assert_eq!(apply_sigma(&td, SignChoice::Minus, &x).unwrap(), td);
        let d3 = DiffOp::term(0, Polynomial::monomial(3, Scalar::one()));
        for s in SignChoice::BOTH {
            assert_eq!(apply_sigma(&d3, s, &x).unwrap(), d3.scale(&-Scalar::one()));
        }
        let not_multiple = DiffOp::term(2, Polynomial::one());
        assert_eq!(
            apply_sigma(&not_multiple, SignChoice::Plus, &x),
            Err(Error::NotInSubalgebra { weight: 2 })
        );
    }

    #[test]
    fn projection_examples() {
        let x = sp(&[0, 1]);
        let td = DiffOp::term(1, d());
        assert_eq!(project_antifixed(&td, SignChoice::Plus, &x).unwrap(), td);
        assert!(project_antifixed(&td, SignChoice::Minus, &x).unwrap().is_zero());
        let d2 = DiffOp::term(0, Polynomial::monomial(2, Scalar::one()));
        for s in SignChoice::BOTH {
            assert!(project_antifixed(&d2, s, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn basis_examples() {
        let x = sp(&[0, 1]);
        let b = component_basis(0, 5, SignChoice::Plus, &x).unwrap();
        let expect: Vec<DiffOp> = [1, 3, 5]
            .iter()
            .map(|&d| DiffOp::term(0, Polynomial::monomial(d, Scalar::one())))
            .collect();
        assert_eq!(b, expect);

        let b = component_basis(1, 3, SignChoice::Minus, &x).unwrap();
        let y = Polynomial::linear(Scalar::half());
        let expect = vec![
            DiffOp::term(1, &y * &d()),
            DiffOp::term(1, &(&(&y * &y) * &y) * &d()),
        ];
        assert_eq!(b, expect);

        let one = sp(&[1]).with_c(Scalar::zero()).unwrap();
        let b = component_basis(0, 4, SignChoice::Plus, &one).unwrap();
        let expect: Vec<DiffOp> = [1, 3]
            .iter()
            .map(|&d| DiffOp::term(0, Polynomial::monomial(d, Scalar::one())))
            .collect();
        assert_eq!(b, expect);
    }

    #[test]
    fn overline_convention() {
        assert_eq!(ParityClass::overline(3), ParityClass(0));
        assert_eq!(ParityClass::overline(-2), ParityClass(1));
        assert_eq!(sp(&[0, 1]).delta(SignChoice::Plus), ParityClass(0));
        assert_eq!(sp(&[0, 1]).delta(SignChoice::Minus), ParityClass(1));
    }

    fn test_ps() -> Vec<SymmetricP> {
        vec![
            sp(&[1]).with_c(Scalar::ratio(1, 3)).unwrap(),
            sp(&[0, 1]),
            sp(&[0, 0, 1]),
            sp(&[0, -1, 1]),
            sp(&[0, 0, 0, 1]),
        ]
    }

    fn times_p(x: &DiffOp, p: &SymmetricP) -> DiffOp {
        DiffOp::from_terms(x.terms().iter().map(|(k, f)| (*k, f * p.p())), Scalar::zero())
    }

    proptest! {
        #[test]
        fn anti_involution_laws(a in arb_diffop(4, 4, 2), b in arb_diffop(4, 4, 2), idx in 0usize..5) {
            let p = &test_ps()[idx];
            let (x, y) = (times_p(&a, p), times_p(&b, p));
            for s in SignChoice::BOTH {
                let sx = apply_sigma(&x, s, p).unwrap();
                prop_assert_eq!(apply_sigma(&sx, s, p).unwrap(), x.clone());
                let lhs = apply_sigma(&x.compose(&y).unwrap(), s, p).unwrap();
                let rhs = apply_sigma(&y, s, p).unwrap().compose(&sx).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn projection_lands_in_basis_span(a in arb_diffop(4, 5, 3), idx in 0usize..5) {
            let p = &test_ps()[idx];
            for s in SignChoice::BOTH {
                let pr = project_antifixed(&times_p(&a, p), s, p).unwrap();
                prop_assert!(is_antifixed(&pr, s, p).unwrap());
                prop_assert!(in_component_span(&pr, s, p).unwrap());
                prop_assert_eq!(project_antifixed(&pr, s, p).unwrap(), pr);
            }
        }

        #[test]
        fn antifixed_closed_under_bracket(a in arb_diffop(3, 4, 2), b in arb_diffop(3, 4, 2), idx in 0usize..5) {
            let p = &test_ps()[idx];
            for s in SignChoice::BOTH {
                let x = project_antifixed(&times_p(&a, p), s, p).unwrap();
                let y = project_antifixed(&times_p(&b, p), s, p).unwrap();
                prop_assert!(is_antifixed(&x.bracket_hat(&y), s, p).unwrap());
            }
        }
    }
}
