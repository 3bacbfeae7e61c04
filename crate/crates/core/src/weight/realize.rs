//! Realization of a quasifinite weight for `p = x` as a tensor product over
//! classes of exponents.

use serde::{Deserialize, Serialize};

use super::eta::{eta_decompose, partition_classes, ClassKind};
use super::gamma::{f_quasi, gamma_of_weight};
use super::labels::{gamma_from_labels, matrix_labels_build, MatrixLabels};
use super::Weight;
use crate::error::{Error, Result};
use crate::exact::{Scalar, Series};

/// One tensor factor: its labels and the class it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationFactor {
    pub kind: ClassKind,
    /// Class members `s_rep − k`, listed by `k`.
    pub members: Vec<i64>,
    pub labels: MatrixLabels,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub factors: Vec<RealizationFactor>,
}

impl Realization {
    pub fn total_charge(&self) -> Scalar {
        self.factors.iter().map(|f| f.labels.c0()).sum()
    }
}

/// η-decomposes `φ_λ + cosh(x/2)c₀`, splits the parameters into classes and
/// builds labels per class. The factor charges must add up to `c₀` and the
/// factor series to Γ_λ through `order`; either failure is an error.
pub fn realize(w: &Weight, order: usize) -> Result<Realization> {
    if !w.is_p_x() {
        return Err(Error::Unsupported("realization is implemented for p = x".into()));
    }
    let ed = eta_decompose(&f_quasi(w)?)?;
    let mut factors = Vec::new();
    for class in partition_classes(&ed) {
        let labels = matrix_labels_build(&class, &ed, w.sign(), order)?;
        factors.push(RealizationFactor {
            kind: class.kind,
            members: class.members.clone(),
            labels,
        });
    }
    let out = Realization { factors };
    if out.total_charge() != *w.c0() {
        return Err(Error::Consistency(format!(
            "factor charges sum to {}, central charge is {}",
            out.total_charge(),
            w.c0()
        )));
    }
    let mut sum = Series::zero(order);
    for f in &out.factors {
        sum = sum.add(&gamma_from_labels(&f.labels, order)?);
    }
    if !sum.agrees_with(&gamma_of_weight(w, order)?) {
        return Err(Error::Consistency("factor series do not add up to Gamma".into()));
    }
    Ok(out)
}
