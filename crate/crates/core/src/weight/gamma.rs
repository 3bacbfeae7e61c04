//! The generating series Δ_λ and Γ_λ, the quasifiniteness test and the
//! recovery of quasipolynomials from truncated series.

use serde::Serialize;

use super::exponents::pair_representative;
use super::{Weight, WeightForm};
use crate::error::{Error, Result};
use crate::exact::linalg::solve;
use crate::exact::{
    annihilator_search, apply_p_shift_quasi, apply_p_shift_series, exact_roots, series_divide, Parity, ParityFilter,
    Polynomial, Quasipolynomial, Scalar, Series,
};
use crate::involution::SymmetricP;

fn two_sinh_half(order: usize) -> Series {
    Series::sinh(&Scalar::half(), order).scale(&Scalar::from(2))
}

/// `(c + 1)/2`.
fn shift_plus(sp: &SymmetricP) -> Result<Scalar> {
    Ok(&(sp.c()? + &Scalar::one()) * &Scalar::half())
}

/// `Δ_λ(x) = p(d/dx + c/2)(φ_λ(x) / 2sinh(x/2))` through `x^order`. A weight
/// in series form returns its stored labels.
pub fn delta_series(w: &Weight, order: usize) -> Result<Series> {
    match w.form() {
        WeightForm::Series(d) => Ok(d.clone()),
        WeightForm::Closed(phi) => {
            let n = w.sp().degree();
            let top = order + n + 1;
            let ratio = series_divide(&phi.to_series(top), &two_sinh_half(top))?;
            let half_c = w.c() * &Scalar::half();
            apply_p_shift_series(w.p(), &half_c, &ratio)?.truncate(order)
        }
    }
}

/// An odd solution of `p(d/dx + c/2)Γ = Δ` and the odd kernel that
/// remains free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaSolution {
    pub gamma: Series,
    /// Odd parts of `x^r e^{αx}` with `p(α + c/2) = 0`, one per independent
    /// direction.
    pub kernel: Vec<Quasipolynomial>,
    /// Monic factor of `p(y + c/2)` whose roots are not in ℚ(i); `1` when
    /// the kernel list is complete.
    pub kernel_residual: Polynomial,
}

/// Solves `p(d/dx + c/2)Γ = Δ` for an odd series Γ.
///
/// With `q(y) = p(y + c/2) = Σ q_k y^k` of degree `n` and Taylor values
/// `T_l`, the equation reads `Σ_k q_k T^Γ_{l+k} = T^Δ_l`, a recursion for
/// `T^Γ_{l+n}`. The free values `T^Γ_0..T^Γ_{n−1}` are set to zero; the
/// discarded odd ones are exactly the reported kernel.
pub fn gamma_solve(delta: &Series, sp: &SymmetricP) -> Result<GammaSolution> {
    let half_c = sp.c()? * &Scalar::half();
    let q = sp.p().shift(&half_c);
    let n = q.degree().ok_or(Error::ZeroPolynomial)?;
    let qn_inv = q.leading().unwrap().inv().unwrap();
    let big_n = delta.order();
    let mut t = vec![Scalar::zero(); big_n + n + 1];
    for l in 0..=big_n {
        let mut acc = delta.taylor(l)?;
        for k in 0..n {
            let qk = q.coeff(k);
            if !qk.is_zero() {
                acc -= &qk * &t[l + k];
            }
        }
        t[l + n] = &acc * &qn_inv;
    }
    let gamma = Series::from_fn(big_n + n, |m| &t[m] / &Scalar::factorial(m));
    if !gamma.has_parity(Parity::Odd) {
        return Err(Error::Inconsistent(
            "delta is not the image of an odd series under p(d/dx + c/2)".into(),
        ));
    }
    let (kernel, kernel_residual) = kernel_basis(sp)?;
    Ok(GammaSolution {
        gamma,
        kernel,
        kernel_residual,
    })
}

/// Odd solutions of `p(d/dx + c/2)y = 0`.
pub fn kernel_basis(sp: &SymmetricP) -> Result<(Vec<Quasipolynomial>, Polynomial)> {
    let q = sp.p().shift(&(sp.c()? * &Scalar::half()));
    let report = exact_roots(&q);
    let mut out = Vec::new();
    for (alpha, mult) in &report.roots {
        if pair_representative(alpha).1 {
            continue;
        }
        for r in 0..*mult {
            let f = Quasipolynomial::term(alpha.clone(), Polynomial::monomial(r, Scalar::one())).parity_part(Parity::Odd);
            if !f.is_zero() {
                out.push(f);
            }
        }
    }
    Ok((out, report.residual))
}

/// Γ_λ for a weight: exact `φ/(2sinh(x/2))` in closed form, the canonical
/// solution of the label equation otherwise.
pub fn gamma_of_weight(w: &Weight, order: usize) -> Result<Series> {
    match w.form() {
        WeightForm::Closed(phi) => series_divide(&phi.to_series(order + 1), &two_sinh_half(order + 1)),
        WeightForm::Series(d) => Ok(gamma_solve(d, w.sp())?.gamma),
    }
}

/// `F = 2sinh(x/2)Γ_λ + cosh((c+1)x/2)c₀` as a series.
pub fn f_series(w: &Weight, gamma: &Series) -> Result<Series> {
    let order = gamma.order() + 1;
    let f = two_sinh_half(order).mul(gamma);
    let cosh = Series::cosh(&shift_plus(w.sp())?, order).scale(w.c0());
    f.add(&cosh).truncate(gamma.order())
}

/// `F = φ_λ + cosh((c+1)x/2)c₀` exactly, for a weight in closed form.
pub fn f_quasi(w: &Weight) -> Result<Quasipolynomial> {
    let phi = w
        .phi()
        .ok_or_else(|| Error::Unsupported("operation needs a weight in closed form".into()))?;
    Ok(phi.add(&Quasipolynomial::cosh(&shift_plus(w.sp())?, &Polynomial::constant(w.c0().clone()))))
}

/// `p(d/dx + (c+1)/2) p(d/dx + (c−1)/2)` applied to a series.
pub(crate) fn two_shifts_series(sp: &SymmetricP, f: &Series) -> Result<Series> {
    let plus = shift_plus(sp)?;
    let minus = &plus - &Scalar::one();
    apply_p_shift_series(sp.p(), &minus, &apply_p_shift_series(sp.p(), &plus, f)?)
}

pub(crate) fn two_shifts_quasi(sp: &SymmetricP, f: &Quasipolynomial) -> Result<Quasipolynomial> {
    let plus = shift_plus(sp)?;
    let minus = &plus - &Scalar::one();
    Ok(apply_p_shift_quasi(sp.p(), &minus, &apply_p_shift_quasi(sp.p(), &plus, f)))
}

/// Outcome of the quasifiniteness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasifiniteVerdict {
    pub quasifinite: bool,
    /// The annihilating `b` found, if any.
    pub b: Option<Polynomial>,
    /// True when the verdict is exact rather than bounded by the search.
    pub exact: bool,
    /// Degree bound actually searched (series form only).
    pub dmax: usize,
    /// Valid order of the series the search ran on (series form only).
    pub order: usize,
}

/// Decides quasifiniteness. A closed-form weight is quasifinite by
/// construction. For a series-form weight the test searches for `b` of the
/// right parity with `b(d/dx)·p(d/dx+(c+1)/2)p(d/dx+(c−1)/2)F = 0`; a
/// negative answer only holds within the reported `dmax` and order. The
/// degree bound is lowered when the series is too short for `dmax`.
pub fn quasifinite_check(w: &Weight, dmax: usize, margin: usize) -> Result<QuasifiniteVerdict> {
    match w.form() {
        WeightForm::Closed(_) => {
            let b = super::charpoly::min_b_exact(w)?;
            Ok(QuasifiniteVerdict {
                quasifinite: true,
                b: Some(b),
                exact: true,
                dmax,
                order: 0,
            })
        }
        WeightForm::Series(delta) => {
            let gamma = gamma_solve(delta, w.sp())?.gamma;
            let g = two_shifts_series(w.sp(), &f_series(w, &gamma)?)?;
            if g.order() < margin {
                return Err(Error::InsufficientOrder {
                    needed: margin,
                    have: g.order(),
                });
            }
            let dmax = dmax.min((g.order() - margin) / 2);
            let found = match annihilator_search(&g, dmax, ParityFilter::Only(w.b_parity()), margin) {
                Ok(b) => Some(b),
                Err(Error::NoAnnihilator { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(QuasifiniteVerdict {
                quasifinite: found.is_some(),
                b: found,
                exact: false,
                dmax,
                order: g.order(),
            })
        }
    }
}

/// The quasipolynomial agreeing with `f` through its order, found from a
/// minimal annihilator of degree at most `dmax` whose roots lie in ℚ(i).
pub fn recover_quasipolynomial(f: &Series, dmax: usize, margin: usize) -> Result<Quasipolynomial> {
    let b = annihilator_search(f, dmax, ParityFilter::Any, margin)?;
    let report = exact_roots(&b);
    if report.residual.degree() != Some(0) {
        return Err(Error::Unsupported(format!(
            "annihilator factor {} has roots outside Q(i)",
            report.residual
        )));
    }
    let basis: Vec<(Scalar, usize)> = report
        .roots
        .iter()
        .flat_map(|(a, m)| (0..*m).map(move |r| (a.clone(), r)))
        .collect();
    let columns: Vec<Series> = basis
        .iter()
        .map(|(a, r)| Quasipolynomial::term(a.clone(), Polynomial::monomial(*r, Scalar::one())).to_series(f.order()))
        .collect();
    let rows: Vec<Vec<Scalar>> = (0..=f.order())
        .map(|n| columns.iter().map(|c| c.coeffs()[n].clone()).collect())
        .collect();
    let sol = solve(&rows, f.coeffs()).ok_or_else(|| Error::Inconsistent("series is not the quasipolynomial its annihilator predicts".into()))?;
    let out = Quasipolynomial::from_terms(
        basis
            .into_iter()
            .zip(sol)
            .map(|((a, r), c)| (a, Polynomial::monomial(r, c))),
    );
    if !out.to_series(f.order()).agrees_with(f) {
        return Err(Error::Consistency("recovered quasipolynomial does not reproduce the series".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::exact::DEFAULT_MARGIN;
    use crate::involution::SignChoice;

    #[test]
    fn worked_delta() {
        let w = worked(SignChoice::Plus, Scalar::from(7));
        let d = delta_series(&w, 12).unwrap();
        // (1/2)cosh(x/2)
        assert_eq!(d, Series::cosh(&Scalar::half(), 12).scale(&Scalar::half()));
        assert_eq!(d.taylor(0).unwrap(), Scalar::half());
        assert_eq!(d.taylor(2).unwrap(), Scalar::ratio(1, 8));
    }

    #[test]
    fn delta_of_zero_and_kernel_case() {
        let w = Weight::zero(sp_x(), SignChoice::Minus).unwrap();
        assert!(delta_series(&w, 10).unwrap().is_zero());
        let p = Polynomial::from_ints(&[0, -1, 1]);
        let w = Weight::closed(sp_of(&p), SignChoice::Plus, Scalar::zero(), cosh_x_minus_one()).unwrap();
        assert!(delta_series(&w, 12).unwrap().is_zero());
    }

    #[test]
    fn gamma_examples() {
        let delta = Series::cosh(&Scalar::half(), 14).scale(&Scalar::half());
        let sol = gamma_solve(&delta, &sp_x()).unwrap();
        assert!(sol.gamma.agrees_with(&Series::sinh(&Scalar::half(), 15)));
        assert!(sol.kernel.is_empty());

        let sol = gamma_solve(&Series::zero(10), &sp_x()).unwrap();
        assert!(sol.gamma.is_zero());

        let sp = sp_of(&Polynomial::from_ints(&[0, -1, 1]));
        let sol = gamma_solve(&Series::zero(10), &sp).unwrap();
        assert!(sol.gamma.is_zero());
        assert_eq!(sol.kernel, vec![Quasipolynomial::sinh(&Scalar::half(), &Polynomial::one())]);
        assert_eq!(sol.kernel_residual, Polynomial::one());
    }

    #[test]
    fn gamma_rejects_wrong_parity() {
        // p = x²−x: Γ odd forces Δ odd
        let sp = sp_of(&Polynomial::from_ints(&[0, -1, 1]));
        assert!(matches!(gamma_solve(&Series::one(8), &sp), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn gamma_solves_its_equation() {
        for p in [Polynomial::from_ints(&[0, 1]), Polynomial::from_ints(&[0, -1, 1]), Polynomial::monomial(3, Scalar::one())] {
            let sp = sp_of(&p);
            let phi = Quasipolynomial::cosh(&Scalar::ratio(1, 3), &Polynomial::from_ints(&[1, 0, 2]))
                .sub(&Quasipolynomial::constant(Scalar::one()));
            let w = Weight::closed(sp.clone(), SignChoice::Plus, Scalar::one(), phi).unwrap();
            let d = delta_series(&w, 16).unwrap();
            let g = gamma_solve(&d, &sp).unwrap().gamma;
            let half_c = sp.c().unwrap() * &Scalar::half();
            assert!(apply_p_shift_series(&p, &half_c, &g).unwrap().agrees_with(&d));
        }
    }

    #[test]
    fn quasifinite_examples() {
        for c0 in [Scalar::zero(), Scalar::ratio(-5, 3)] {
            let w = worked(SignChoice::Plus, c0);
            assert!(quasifinite_check(&w, 8, DEFAULT_MARGIN).unwrap().quasifinite);
            // the same weight given by its labels
            let ws = Weight::series(sp_x(), SignChoice::Plus, w.c0().clone(), delta_series(&w, 24).unwrap()).unwrap();
            let v = quasifinite_check(&ws, 8, DEFAULT_MARGIN).unwrap();
            assert!(v.quasifinite);
            assert_eq!(v.b, Some(Polynomial::from_ints(&[0, 0, -1, 0, 1])));
        }
        let zero = Weight::zero(sp_x(), SignChoice::Plus).unwrap();
        assert!(quasifinite_check(&zero, 8, DEFAULT_MARGIN).unwrap().quasifinite);
    }

    #[test]
    fn factorial_growth_is_not_quasifinite() {
        // Γ = Σ n! x^{2n+1}, Δ = Γ'
        let gamma = Series::from_fn(25, |k| {
            if k % 2 == 1 {
                Scalar::factorial((k - 1) / 2)
            } else {
                Scalar::zero()
            }
        });
        let delta = gamma.derivative().unwrap();
        let w = Weight::series(sp_x(), SignChoice::Plus, Scalar::zero(), delta).unwrap();
        let v = quasifinite_check(&w, 8, DEFAULT_MARGIN).unwrap();
        assert!(!v.quasifinite);
        assert!(!v.exact);
    }

    #[test]
    fn recovery_of_quasipolynomials() {
        let q = Quasipolynomial::from_terms([
            (Scalar::ratio(1, 3), Polynomial::from_ints(&[1, 2])),
            (Scalar::ratio(-1, 3), Polynomial::from_ints(&[1, -2])),
            (Scalar::zero(), Polynomial::from_ints(&[-2])),
        ]);
        let back = recover_quasipolynomial(&q.to_series(24), 8, DEFAULT_MARGIN).unwrap();
        assert_eq!(back, q);
    }
}
