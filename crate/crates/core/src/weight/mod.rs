//! Highest-weight functionals on the centrally extended anti-fixed
//! subalgebras: generating series, the quasifiniteness criterion, exponents,
//! matrix-algebra labels, tensor realizations and characteristic polynomials.

mod charpoly;
mod eta;
mod exponents;
mod gamma;
mod labels;
mod realize;

pub use charpoly::{char_poly_eq13, char_poly_eq24, char_poly_search, exponents_are_roots, CharPoly};
pub use eta::{
    canonical_s, eta_decompose, eta_quasi, eta_series, is_canonical_s, partition_classes, ClassKind, EtaData,
    ExponentClass,
};
pub use exponents::{exponent_decompose, pair_representative, ExponentData};
pub use gamma::{
    delta_series, f_quasi, f_series, gamma_of_weight, gamma_solve, kernel_basis, quasifinite_check,
    recover_quasipolynomial, GammaSolution, QuasifiniteVerdict,
};
pub(crate) use gamma::two_shifts_series;
pub use labels::{gamma_from_labels, matrix_labels_build, pullback, pullback_weight, MatrixLabels};
pub use realize::{realize, Realization, RealizationFactor};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Parity, Polynomial, Quasipolynomial, Scalar, Series};
use crate::involution::{validate_symmetry, SignChoice, SymmetricP};

/// How the values of λ on the weight-zero piece are given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightForm {
    /// The even quasipolynomial φ_λ with φ_λ(0) = 0.
    Closed(Quasipolynomial),
    /// The truncated label series `Δ_λ(x) = Σ Δ_l x^l/l!`.
    Series(Series),
}

/// A functional λ on the weight-zero piece of the centrally extended
/// anti-fixed subalgebra for `p` and a sign, with central charge `c0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WeightWire", into = "WeightWire")]
pub struct Weight {
    sp: SymmetricP,
    sign: SignChoice,
    c0: Scalar,
    form: WeightForm,
}

impl Weight {
    /// A weight given by φ_λ. The center of `p` must be resolved.
    pub fn closed(sp: SymmetricP, sign: SignChoice, c0: Scalar, phi: Quasipolynomial) -> Result<Weight> {
        sp.c()?;
        if !phi.is_even() {
            return Err(Error::InvalidWeight("phi is not even".into()));
        }
        if !phi.eval_zero().is_zero() {
            return Err(Error::InvalidWeight(format!("phi(0) = {}, expected 0", phi.eval_zero())));
        }
        Ok(Weight {
            sp,
            sign,
            c0,
            form: WeightForm::Closed(phi),
        })
    }

    /// A weight given by its label series; only the powers allowed by the
    /// parity of the weight-zero piece may be nonzero.
    pub fn series(sp: SymmetricP, sign: SignChoice, c0: Scalar, delta: Series) -> Result<Weight> {
        sp.c()?;
        let parity = delta_parity(&sp);
        if !delta.has_parity(parity) {
            return Err(Error::InvalidWeight(format!("delta has powers outside the {:?} class", parity)));
        }
        Ok(Weight {
            sp,
            sign,
            c0,
            form: WeightForm::Series(delta),
        })
    }

    pub fn zero(sp: SymmetricP, sign: SignChoice) -> Result<Weight> {
        Weight::closed(sp, sign, Scalar::zero(), Quasipolynomial::zero())
    }

    pub fn sp(&self) -> &SymmetricP {
        &self.sp
    }

    pub fn p(&self) -> &Polynomial {
        self.sp.p()
    }

    /// The resolved center of `p`.
    pub fn c(&self) -> &Scalar {
        self.sp.c().expect("weights carry a resolved center")
    }

    pub fn sign(&self) -> SignChoice {
        self.sign
    }

    pub fn c0(&self) -> &Scalar {
        &self.c0
    }

    pub fn form(&self) -> &WeightForm {
        &self.form
    }

    pub fn phi(&self) -> Option<&Quasipolynomial> {
        match &self.form {
            WeightForm::Closed(phi) => Some(phi),
            WeightForm::Series(_) => None,
        }
    }

    /// Parity of the label series.
    pub fn delta_parity(&self) -> Parity {
        delta_parity(&self.sp)
    }

    /// Parity class of the polynomials `b` in the weight −1 piece.
    pub fn b_parity(&self) -> Parity {
        self.sp.delta(self.sign).parity()
    }

    /// True for `p = x` (and hence `c = 0`).
    pub fn is_p_x(&self) -> bool {
        *self.sp.p() == Polynomial::x()
    }
}

/// The symmetry data of `p = x`.
pub(crate) fn sp_x() -> SymmetricP {
    validate_symmetry(&Polynomial::x()).unwrap().unwrap()
}

fn delta_parity(sp: &SymmetricP) -> Parity {
    sp.component_class(0, SignChoice::Plus).parity()
}

/// Serialized form of a weight.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightWire {
    pub p: Polynomial,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Scalar>,
    pub sign: SignChoice,
    pub c0: Scalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Quasipolynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Series>,
}

impl TryFrom<WeightWire> for Weight {
    type Error = Error;

    fn try_from(w: WeightWire) -> Result<Weight> {
        let sp = validate_symmetry(&w.p)?
            .ok_or_else(|| Error::InvalidWeight(format!("p = {} is not symmetric", w.p)))?
            .resolve(w.c.as_ref())?;
        match (w.phi, w.delta) {
            (Some(phi), None) => Weight::closed(sp, w.sign, w.c0, phi),
            (None, Some(delta)) => Weight::series(sp, w.sign, w.c0, delta),
            _ => Err(Error::Parse("a weight needs exactly one of `phi` and `delta`".into())),
        }
    }
}

impl From<Weight> for WeightWire {
    fn from(w: Weight) -> WeightWire {
        let c = w.sp.free_c().then(|| w.c().clone());
        let (phi, delta) = match w.form {
            WeightForm::Closed(phi) => (Some(phi), None),
            WeightForm::Series(d) => (None, Some(d)),
        };
        WeightWire {
            p: w.sp.p().clone(),
            c,
            sign: w.sign,
            c0: w.c0,
            phi,
            delta,
        }
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn closed_weight_invariants() {
        let odd = Quasipolynomial::sinh(&Scalar::one(), &Polynomial::one());
        assert!(matches!(
            Weight::closed(sp_x(), SignChoice::Plus, Scalar::zero(), odd),
            Err(Error::InvalidWeight(_))
        ));
        let nonzero_at_0 = Quasipolynomial::cosh(&Scalar::one(), &Polynomial::one());
        assert!(Weight::closed(sp_x(), SignChoice::Plus, Scalar::zero(), nonzero_at_0).is_err());
    }

    #[test]
    fn series_weight_parity() {
        // p = x: labels live on even l
        let bad = Series::from_poly(&Polynomial::x(), 6);
        assert!(Weight::series(sp_x(), SignChoice::Plus, Scalar::zero(), bad).is_err());
        let good = Series::from_poly(&Polynomial::from_ints(&[1, 0, 2]), 6);
        assert!(Weight::series(sp_x(), SignChoice::Plus, Scalar::zero(), good).is_ok());
    }

    #[test]
    fn weight_json_round_trip() {
        let w = worked(SignChoice::Minus, Scalar::ratio(3, 2));
        let text = serde_json::to_string(&w).unwrap();
        let back: Weight = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
        let constant_p = Weight::zero(sp_of(&Polynomial::one()).with_c(Scalar::from(2)).unwrap(), SignChoice::Plus).unwrap();
        let text = serde_json::to_string(&constant_p).unwrap();
        assert!(text.contains("\"c\":\"2\""));
        assert_eq!(serde_json::from_str::<Weight>(&text).unwrap(), constant_p);
    }
}
