//! Regular differential operators on the circle, written `Σ_k t^k f_k(D)`
//! with `D = t·d/dt`, and the central extension by the cocycle Ψ.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Polynomial, Scalar};

/// An element `Σ_k t^k f_k(D) + c·C`. No zero cofactor is stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DiffOp {
    terms: BTreeMap<i64, Polynomial>,
    central: Scalar,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    /// `t^k f(D)`.
    pub fn term(k: i64, f: Polynomial) -> Self {
        let mut out = DiffOp::zero();
        out.add_term(k, &f);
        out
    }

    /// `c·C`.
    pub fn central_element(c: Scalar) -> Self {
        DiffOp {
            terms: BTreeMap::new(),
            central: c,
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Polynomial)>, central: Scalar) -> Self {
        let mut out = DiffOp::central_element(central);
        for (k, f) in terms {
            out.add_term(k, &f);
        }
        out
    }

    /// `L_k^l = −t^k D^l`.
    pub fn l_basis(k: i64, l: usize) -> Self {
        DiffOp::term(k, Polynomial::monomial(l, -Scalar::one()))
    }

    /// `J_k^l = −t^{k+l} ∂_t^l = −t^k D(D−1)⋯(D−l+1)`.
    pub fn j_basis(k: i64, l: usize) -> Self {
        DiffOp::term(k, -Polynomial::falling_factorial(l))
    }

    pub fn add_term(&mut self, k: i64, f: &Polynomial) {
        let sum = match self.terms.get(&k) {
            Some(old) => old + f,
            None => f.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, Polynomial> {
        &self.terms
    }

    pub fn central(&self) -> &Scalar {
        &self.central
    }

    /// Cofactor of `t^k`, zero if absent.
    pub fn cofactor(&self, k: i64) -> Polynomial {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn with_central(&self, c: Scalar) -> DiffOp {
        DiffOp {
            terms: self.terms.clone(),
            central: c,
        }
    }

    /// The element with its central part dropped.
    pub fn non_central(&self) -> DiffOp {
        self.with_central(Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_zero()
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (k, f) in &other.terms {
            out.add_term(*k, f);
        }
        out.central += &other.central;
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> DiffOp {
        DiffOp::from_terms(
            self.terms.iter().map(|(k, f)| (*k, f.scale(c))),
            &self.central * c,
        )
    }

    /// Weights present, including 0 for a nonzero central part.
    pub fn weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.terms.keys().copied().collect();
        if !self.central.is_zero() && !self.terms.contains_key(&0) {
            w.push(0);
            w.sort();
        }
        w
    }

    /// The weight of a homogeneous element. The zero element is taken to be
    /// of weight 0.
    pub fn weight_of(&self) -> Result<i64> {
        let w = self.weights();
        match w.len() {
            0 => Ok(0),
            1 => Ok(w[0]),
            _ => Err(Error::NotHomogeneous(w)),
        }
    }

    /// Associative product: `t^r f(D) · t^s g(D) = t^{r+s} f(D+s) g(D)`.
    pub fn compose(&self, other: &DiffOp) -> Result<DiffOp> {
        if !self.central.is_zero() || !other.central.is_zero() {
            return Err(Error::CentralNotAllowed);
        }
        let mut out = DiffOp::zero();
        for (r, f) in &self.terms {
            for (s, g) in &other.terms {
                out.add_term(r + s, &(&f.shift(&Scalar::from(*s)) * g));
            }
        }
        Ok(out)
    }

    /// Commutator in 𝒟, ignoring central parts:
    /// `[t^r f, t^s g] = t^{r+s}(f(D+s)g(D) − f(D)g(D+r))`.
    pub fn bracket(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (r, f) in &self.terms {
            for (s, g) in &other.terms {
                let a = &f.shift(&Scalar::from(*s)) * g;
                let b = f * &g.shift(&Scalar::from(*r));
                out.add_term(r + s, &(&a - &b));
            }
        }
        out
    }

    /// The cocycle `Ψ(t^r f, t^s g) = Σ_{−r≤m≤−1} f(m)g(m+r)` for
    /// `r = −s > 0`, extended antisymmetrically and bilinearly.
    pub fn psi_cocycle(&self, other: &DiffOp) -> Scalar {
        let mut acc = Scalar::zero();
        for (&r, f) in &self.terms {
            let Some(g) = other.terms.get(&-r) else { continue };
            if r > 0 {
                for m in -r..=-1 {
                    acc += &f.eval(&Scalar::from(m)) * &g.eval(&Scalar::from(m + r));
                }
            } else if r < 0 {
                let s = -r;
                for m in -s..=-1 {
                    acc -= &g.eval(&Scalar::from(m)) * &f.eval(&Scalar::from(m + s));
                }
            }
        }
        acc
    }

    /// Bracket in the central extension 𝒟̂.
    pub fn bracket_hat(&self, other: &DiffOp) -> DiffOp {
        self.bracket(other).with_central(self.psi_cocycle(other))
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, p)| format!("t^{}·({})", k, p))
            .collect();
        if !self.central.is_zero() {
            parts.push(format!("({})C", self.central));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    k: i64,
    f_coefficients: Polynomial,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiffOpWire {
    terms: Vec<TermWire>,
    #[serde(default)]
    central: Scalar,
}

impl Serialize for DiffOp {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiffOpWire {
            terms: self
                .terms
                .iter()
                .map(|(k, f)| TermWire {
                    k: *k,
                    f_coefficients: f.clone(),
                })
                .collect(),
            central: self.central.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DiffOp {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = DiffOpWire::deserialize(deserializer)?;
        Ok(DiffOp::from_terms(
            w.terms.into_iter().map(|t| (t.k, t.f_coefficients)),
            w.central,
        ))
    }
}
