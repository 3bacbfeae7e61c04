//! The characteristic polynomial `b(x − (c+1)/2)p(x)` of a quasifinite weight,
//! computed from the annihilator of `F` and from the singular-vector
//! condition on the weight −1 piece.

use serde::Serialize;

use super::exponents::ExponentData;
use super::gamma::{delta_series, f_quasi, quasifinite_check, two_shifts_quasi};
use super::Weight;
use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::exact::linalg::solve;
use crate::exact::{Parity, Polynomial, Scalar, Series};
use crate::involution::SymmetricP;

/// The polynomial `b` and the characteristic polynomial `b(x − (c+1)/2)p(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharPoly {
    pub b: Polynomial,
    pub characteristic: Polynomial,
}

impl CharPoly {
    fn new(w: &Weight, b: Polynomial) -> Result<CharPoly> {
        let shift = -&(&(w.c() + &Scalar::one()) * &Scalar::half());
        let characteristic = &b.shift(&shift) * w.p();
        Ok(CharPoly { b, characteristic })
    }
}

/// Least monic `b` of the parity class with
/// `b(d/dx)p(d/dx+(c+1)/2)p(d/dx+(c−1)/2)F = 0`, for a closed-form weight.
pub(crate) fn min_b_exact(w: &Weight) -> Result<Polynomial> {
    let g = two_shifts_quasi(w.sp(), &f_quasi(w)?)?;
    let a = g.annihilator().monic();
    let parity = w.b_parity();
    if a.has_parity(parity) {
        Ok(a)
    } else if a.has_parity(parity.flip()) {
        Ok(&a * &Polynomial::x())
    } else {
        Err(Error::Consistency(format!("annihilator {} has no parity", a)))
    }
}

/// `b` from the annihilator of `F`: exact for a closed-form weight, a
/// bounded search for a series-form weight.
pub fn char_poly_eq13(w: &Weight, dmax: usize, margin: usize) -> Result<CharPoly> {
    let verdict = quasifinite_check(w, dmax, margin)?;
    match verdict.b {
        Some(b) => CharPoly::new(w, b),
        None => Err(Error::NoAnnihilator { dmax: verdict.dmax }),
    }
}

fn parity_index(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

/// λ on a weight-zero element, read off the labels: with the non-central
/// part `h(D)p(D)` and `H(y) = h(y + c/2)`, `λ = −Σ H_l Δ_l + ψc₀`.
fn lambda_weight_zero(w: &Weight, delta: &Series, x: &DiffOp) -> Result<Scalar> {
    if x.weights().iter().any(|&k| k != 0) {
        return Err(Error::NotHomogeneous(x.weights()));
    }
    let g = x.cofactor(0);
    let h = g
        .exact_div(w.p())
        .ok_or(Error::NotInSubalgebra { weight: 0 })?;
    let big_h = h.shift(&(w.c() * &Scalar::half()));
    let parity = w.delta_parity();
    let mut acc = x.central() * w.c0();
    for (l, hl) in big_h.coeffs().iter().enumerate() {
        if hl.is_zero() {
            continue;
        }
        if !parity.admits(l) {
            return Err(Error::NotAntiFixed { weight: 0 });
        }
        acc -= hl * &delta.taylor(l)?;
    }
    Ok(acc)
}

/// `b` from `λ([t(D−(c−1)/2)^{2k+δ}p(D), t⁻¹b(D−(c+1)/2)p(D)]) = 0` for
/// `0 ≤ k ≤ k_bound`, searched up to degree `dmax`. The labels are taken
/// through `order` or further if the brackets need it.
pub fn char_poly_eq24(w: &Weight, k_bound: usize, dmax: usize, order: usize) -> Result<CharPoly> {
    let parity = w.b_parity();
    let delta_idx = parity_index(parity);
    let n = w.sp().degree();
    let needed = 2 * k_bound + delta_idx + dmax + n;
    let delta = delta_series(w, order.max(needed))?;
    if delta.order() + 1 < needed {
        return Err(Error::InsufficientOrder {
            needed,
            have: delta.order(),
        });
    }
    let c = w.c();
    let left_shift = -&(&(c - &Scalar::one()) * &Scalar::half());
    let right_shift = -&(&(c + &Scalar::one()) * &Scalar::half());
    let powers = |a: &Scalar, e: usize| (0..e).fold(Polynomial::one(), |acc, _| &acc * &Polynomial::linear(a.clone()));
    let degrees: Vec<usize> = (0..=dmax).filter(|&i| parity.admits(i)).collect();
    // v[k][j] = λ([e_k, t⁻¹(D − (c+1)/2)^{degrees[j]} p(D)])
    let mut v = Vec::with_capacity(k_bound + 1);
    for k in 0..=k_bound {
        let e = DiffOp::term(1, &powers(&left_shift, 2 * k + delta_idx) * w.p());
        let row = degrees
            .iter()
            .map(|&i| {
                let f = DiffOp::term(-1, &powers(&right_shift, i) * w.p());
                lambda_weight_zero(w, &delta, &e.bracket_hat(&f))
            })
            .collect::<Result<Vec<_>>>()?;
        v.push(row);
    }
    for (top, &d) in degrees.iter().enumerate() {
        let rows: Vec<Vec<Scalar>> = v.iter().map(|r| r[..top].to_vec()).collect();
        let rhs: Vec<Scalar> = v.iter().map(|r| -&r[top]).collect();
        let sol = if top == 0 {
            rhs.iter().all(Scalar::is_zero).then(Vec::new)
        } else {
            solve(&rows, &rhs)
        };
        let Some(sol) = sol else { continue };
        let mut coeffs = vec![Scalar::zero(); d + 1];
        for (j, s) in sol.into_iter().enumerate() {
            coeffs[degrees[j]] = s;
        }
        coeffs[d] = Scalar::one();
        return CharPoly::new(w, Polynomial::new(coeffs));
    }
    Err(Error::NoAnnihilator { dmax })
}

/// Both routes; they must agree.
pub fn char_poly_search(w: &Weight, k_bound: usize, dmax: usize, order: usize, margin: usize) -> Result<CharPoly> {
    let a = char_poly_eq13(w, dmax, margin)?;
    let b = char_poly_eq24(w, k_bound, dmax, order)?;
    if a != b {
        return Err(Error::Consistency(format!(
            "annihilator route gives b = {}, singular-vector route gives b = {}",
            a.b, b.b
        )));
    }
    Ok(a)
}

/// Whether every exponent `e` (with multiplicity `q`) is a root of order
/// greater than `deg q` of `b(x)p(x+(c+1)/2)p(x+(c−1)/2)`.
pub fn exponents_are_roots(ed: &ExponentData, b: &Polynomial, sp: &SymmetricP) -> Result<bool> {
    let plus = &(sp.c()? + &Scalar::one()) * &Scalar::half();
    let minus = &plus - &Scalar::one();
    let r = &(b * &sp.p().shift(&plus)) * &sp.p().shift(&minus);
    let check = |e: &Scalar, q: &Polynomial| {
        let mut d = r.clone();
        for _ in 0..=q.degree().unwrap_or(0) {
            if !d.eval(e).is_zero() {
                return false;
            }
            d = d.derivative();
        }
        true
    };
    Ok(ed.even.iter().chain(ed.odd.iter()).all(|(e, q)| check(e, q)))
}
