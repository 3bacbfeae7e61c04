//! proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::diffop::DiffOp;
use crate::exact::{Polynomial, Scalar};

pub fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(a, b)| Scalar::ratio(a, b))
}

pub fn arb_poly(maxdeg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(arb_scalar(), 0..=maxdeg + 1).prop_map(Polynomial::new)
}

/// Up to `nterms` terms `t^k f(D)` with `|k| ≤ kmax`, `deg f ≤ maxdeg`.
pub fn arb_diffop(kmax: i64, maxdeg: usize, nterms: usize) -> impl Strategy<Value = DiffOp> {
    prop::collection::vec((-kmax..=kmax, arb_poly(maxdeg)), 0..=nterms)
        .prop_map(|ts| DiffOp::from_terms(ts, Scalar::zero()))
}
