//! The homomorphisms φ_s from the anti-fixed subalgebras for `p = x` into
//! banded matrices over R_m, and their lift φ̂_s to the central extensions.

use super::{BandedMatrix, IndexPoly};
use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::exact::{Polynomial, Scalar, Series, TruncPoly};
use crate::involution::{apply_sigma, validate_symmetry, SignChoice, SymmetricP};

fn p_equals_x() -> SymmetricP {
    validate_symmetry(&Polynomial::x()).unwrap().unwrap()
}

/// `φ_s` without the membership check. Writing the weight-`k` cofactor as
/// `F_k(D) = f(D + k/2)·D`, the entry at `(j−k, j)` is
/// `f(−j+k/2+s+u)(−j+s+u) = F_k(s + u − j)`.
pub fn phi_map_unchecked(x: &DiffOp, s: &Scalar, m: usize) -> Result<BandedMatrix> {
    if !x.central().is_zero() {
        return Err(Error::CentralNotAllowed);
    }
    let arg = IndexPoly::affine(m, s.clone(), Scalar::one(), -Scalar::one());
    let mut out = BandedMatrix::zero(m);
    for (&k, f) in x.terms() {
        out.add_diagonal(k, &IndexPoly::compose_poly(f, &arg));
    }
    Ok(out)
}

/// `φ_s^{[m],±}` on an element that is anti-fixed for the chosen sign with
/// `p = x`.
pub fn phi_map(x: &DiffOp, s: &Scalar, m: usize, sign: SignChoice) -> Result<BandedMatrix> {
    if !x.central().is_zero() {
        return Err(Error::CentralNotAllowed);
    }
    let sp = p_equals_x();
    for (&k, f) in x.terms() {
        let term = DiffOp::term(k, f.clone());
        let fixed = apply_sigma(&term, sign, &sp).map_err(|_| Error::NotAntiFixed { weight: k })?;
        if fixed != term.scale(&-Scalar::one()) {
            return Err(Error::NotAntiFixed { weight: k });
        }
    }
    phi_map_unchecked(x, s, m)
}

/// Coefficient of `x^n` in `η_i(x, a)` with `β = a − 1/2` given as an
/// index polynomial: `β^{n−i}/((n−i)! i!)` for even `n`, zero otherwise.
fn eta_coeff(beta: &IndexPoly, i: usize, n: usize) -> IndexPoly {
    if n < i || n % 2 == 1 {
        return IndexPoly::zero(beta.m());
    }
    let mut pow = IndexPoly::constant(TruncPoly::one(beta.m()));
    for _ in 0..n - i {
        pow = pow.mul(beta);
    }
    let denom = &Scalar::factorial(n - i) * &Scalar::factorial(i);
    pow.scale(&denom.inv().unwrap())
}

/// Divides `Σ num_n x^n` by `sinh(x/2)`; the constant term must vanish.
/// Returns quotient coefficients `0..num.len()−1`.
fn divide_by_sinh_half(num: &[IndexPoly]) -> Result<Vec<IndexPoly>> {
    if !num[0].is_zero() {
        return Err(Error::Consistency("pole at x = 0 does not cancel".into()));
    }
    let n = num.len() - 1;
    let sinh = Series::sinh(&Scalar::half(), n);
    let sigma1_inv = sinh.coeff(1)?.inv().unwrap();
    let mut q: Vec<IndexPoly> = Vec::with_capacity(n);
    for t in 0..n {
        let mut acc = num[t + 1].clone();
        for k in 1..=t {
            let sk = sinh.coeff(k + 1)?;
            if !sk.is_zero() {
                acc = acc.sub(&q[t - k].scale(sk));
            }
        }
        q.push(acc.scale(&sigma1_inv));
    }
    Ok(q)
}

/// `φ̂_s(D^{2l+1})`: the diagonal part and the central `R_m` part, read off
/// from the coefficient of `x^{2l+1}` in the lift of `sinh(xD)`.
///
/// The diagonal is recomputed from the series and compared with
/// `φ_s(D^{2l+1})`; a mismatch is reported as an error.
pub fn phi_hat_deg0(l: usize, s: &Scalar, m: usize, order: usize) -> Result<(BandedMatrix, TruncPoly)> {
    let target = 2 * l + 1;
    if order < target + 1 {
        return Err(Error::InsufficientOrder {
            needed: target + 1,
            have: order,
        });
    }
    let half = Scalar::half();
    let one = TruncPoly::one(m);
    let u_pow = |i: usize| IndexPoly::constant(TruncPoly::u(m).pow(i));
    // β for a = s − j + 1, a = s − j and a = s
    let beta_hi = IndexPoly::affine(m, s + &half, Scalar::zero(), -Scalar::one());
    let beta_lo = IndexPoly::affine(m, s - &half, Scalar::zero(), -Scalar::one());
    let beta_c = IndexPoly::constant(TruncPoly::constant(m, s - &half));
    let cosh_half = Series::cosh(&half, order);

    let mut diag_num = Vec::with_capacity(order + 1);
    let mut central_num = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut d = IndexPoly::zero(m);
        let mut c = IndexPoly::constant(one.scale(cosh_half.coeff(n)?));
        for i in 0..=m {
            let ui = u_pow(i);
            d = d.add(&ui.mul(&eta_coeff(&beta_hi, i, n).sub(&eta_coeff(&beta_lo, i, n))));
            c = c.sub(&ui.mul(&eta_coeff(&beta_c, i, n)));
        }
        diag_num.push(d.scale(&half));
        central_num.push(c.scale(&half));
    }
    let diag_q = divide_by_sinh_half(&diag_num)?;
    let central_q = divide_by_sinh_half(&central_num)?;
    let fact = Scalar::factorial(target);
    let diag = BandedMatrix::diagonal(0, diag_q[target].scale(&fact));
    let central_poly = central_q[target].scale(&fact);
    if central_poly.degree().unwrap_or(0) > 0 {
        return Err(Error::Consistency("central part depends on the index".into()));
    }
    let central = central_poly
        .coeffs()
        .first()
        .cloned()
        .unwrap_or_else(|| TruncPoly::zero(m));
    let expect = phi_map_unchecked(&DiffOp::term(0, Polynomial::monomial(target, Scalar::one())), s, m)?;
    if !diag.same_as(&expect) {
        return Err(Error::Consistency(format!(
            "diagonal of the lifted D^{} disagrees with the direct image",
            target
        )));
    }
    Ok((diag, central))
}

/// `φ̂_s` on an anti-fixed element of the central extension: weight-zero
/// parts go through [`phi_hat_deg0`] and `C ↦ 1`.
pub fn phi_hat(x: &DiffOp, s: &Scalar, m: usize, sign: SignChoice, order: usize) -> Result<BandedMatrix> {
    let mut out = phi_map(&x.non_central().sub(&DiffOp::term(0, x.cofactor(0))), s, m, sign)?;
    let f0 = x.cofactor(0);
    let mut central = TruncPoly::constant(m, x.central().clone());
    for (d, a) in f0.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        if d % 2 == 0 {
            return Err(Error::NotAntiFixed { weight: 0 });
        }
        let (diag, c) = phi_hat_deg0((d - 1) / 2, s, m, order.min(d + 1))?;
        out = out.add(&diag.scale(a));
        central = &central + &c.scale(a);
    }
    Ok(out.with_central(central))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::project_antifixed;
    use crate::matrix::cocycle_c;
    use crate::strategies::arb_diffop;
    use proptest::prelude::*;

    fn d() -> Polynomial {
        Polynomial::x()
    }

    #[test]
    fn phi_of_td() {
        let s = Scalar::ratio(1, 4);
        let img = phi_map(&DiffOp::term(1, d()), &s, 0, SignChoice::Plus).unwrap();
        let expect = IndexPoly::affine(0, s.clone(), Scalar::zero(), -Scalar::one());
        assert_eq!(img, BandedMatrix::diagonal(1, expect));
    }

    #[test]
    fn phi_of_d_cubed() {
        let s = Scalar::from(3);
        let d3 = DiffOp::term(0, Polynomial::monomial(3, Scalar::one()));
        let img = phi_map(&d3, &s, 2, SignChoice::Minus).unwrap();
        let lin = IndexPoly::affine(2, s, Scalar::one(), -Scalar::one());
        assert_eq!(img, BandedMatrix::diagonal(0, lin.mul(&lin).mul(&lin)));
        assert!(phi_map(&DiffOp::zero(), &Scalar::half(), 1, SignChoice::Plus).unwrap().is_zero());
    }

    #[test]
    fn phi_rejects_non_members() {
        let d2 = DiffOp::term(0, Polynomial::monomial(2, Scalar::one()));
        assert_eq!(
            phi_map(&d2, &Scalar::half(), 0, SignChoice::Plus),
            Err(Error::NotAntiFixed { weight: 0 })
        );
    }

    #[test]
    fn lifted_d_central_term() {
        for (num, den) in [(1, 4), (0, 1), (1, 1), (7, 3)] {
            let s = Scalar::ratio(num, den);
            let (_, c) = phi_hat_deg0(0, &s, 0, 8).unwrap();
            // oracle: x-coefficient of (1/2)(cosh(x/2) − cosh((s−1/2)x))/sinh(x/2)
            let expect = &(&s * &(&Scalar::one() - &s)) * &Scalar::half();
            assert_eq!(c.coeff(0), &expect);
        }
    }

    #[test]
    fn worked_central_lift() {
        for (num, den) in [(1, 4), (3, 1), (7, 3), (-2, 5), (5, 2)] {
            let s = Scalar::ratio(num, den);
            let x = DiffOp::term(1, d());
            let y = DiffOp::term(-1, d());
            let lhs = phi_hat(&x.bracket_hat(&y), &s, 0, SignChoice::Plus, 8).unwrap();
            let (a, b) = (
                phi_map(&x, &s, 0, SignChoice::Plus).unwrap(),
                phi_map(&y, &s, 0, SignChoice::Plus).unwrap(),
            );
            let rhs = a.bracket_hat(&b).unwrap();
            assert!(lhs.same_as(&rhs));
            let ss = &s * &(&s - &Scalar::one());
            assert_eq!(cocycle_c(&a, &b).unwrap(), TruncPoly::constant(0, ss));
        }
    }

    fn x_sp() -> SymmetricP {
        p_equals_x()
    }

    fn antifixed(a: &DiffOp, sign: SignChoice) -> DiffOp {
        let times_d = DiffOp::from_terms(a.terms().iter().map(|(k, f)| (*k, f * &d())), Scalar::zero());
        project_antifixed(&times_d, sign, &x_sp()).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn homomorphism(a in arb_diffop(3, 4, 2), b in arb_diffop(3, 4, 2), si in 0usize..3, m in 0usize..3, plus in any::<bool>()) {
            let sign = if plus { SignChoice::Plus } else { SignChoice::Minus };
            let s = [Scalar::ratio(1, 4), Scalar::from(3), Scalar::ratio(7, 3)][si].clone();
            let (x, y) = (antifixed(&a, sign), antifixed(&b, sign));
            let lhs = phi_map(&x.bracket(&y), &s, m, sign).unwrap();
            let rhs = phi_map(&x, &s, m, sign).unwrap().bracket_hat(&phi_map(&y, &s, m, sign).unwrap()).unwrap();
            prop_assert!(lhs.same_as(&rhs.non_central()));
        }

        #[test]
        fn central_lift(a in crate::strategies::arb_poly(4), b in crate::strategies::arb_poly(4), k in 1i64..=3, m in 0usize..3, plus in any::<bool>()) {
            let sign = if plus { SignChoice::Plus } else { SignChoice::Minus };
            let s = Scalar::ratio(2, 7);
            let x = antifixed(&DiffOp::term(k, a), sign);
            let y = antifixed(&DiffOp::term(-k, b), sign);
            let lhs = phi_hat(&x.bracket_hat(&y), &s, m, sign, 24).unwrap();
            let rhs = phi_map(&x, &s, m, sign).unwrap().bracket_hat(&phi_map(&y, &s, m, sign).unwrap()).unwrap();
            prop_assert!(lhs.same_as(&rhs));
        }
    }
}
