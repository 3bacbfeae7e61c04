use proptest::prelude::*;

use winf_core::exact::{Polynomial, Quasipolynomial, Scalar, DEFAULT_MARGIN};
use winf_core::involution::{apply_sigma, is_antifixed, project_antifixed, validate_symmetry};
use winf_core::random;
use winf_core::verify::{random_eta_data, random_labels};
use winf_core::weight::{
    char_poly_search, eta_quasi, exponent_decompose, exponents_are_roots, f_quasi, pullback_weight, realize, Weight,
};
use winf_core::{SignChoice, SymmetricP};

fn sp(coeffs: &[i64]) -> SymmetricP {
    validate_symmetry(&Polynomial::from_ints(coeffs)).unwrap().unwrap().resolve(None).unwrap()
}

fn sign_of(b: bool) -> SignChoice {
    if b {
        SignChoice::Plus
    } else {
        SignChoice::Minus
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sigma_is_an_anti_involution(seed: u64, plus: bool, quadratic: bool) {
        let sp = if quadratic { sp(&[0, -1, 1]) } else { sp(&[0, 1]) };
        let sign = sign_of(plus);
        let mut rng = random::rng(seed);
        let a = random::multiple_of(&mut rng, sp.p(), 2, 2, 3);
        let b = random::multiple_of(&mut rng, sp.p(), 2, 2, 3);
        let sa = apply_sigma(&a, sign, &sp).unwrap();
        prop_assert_eq!(apply_sigma(&sa, sign, &sp).unwrap(), a.clone());
        let sb = apply_sigma(&b, sign, &sp).unwrap();
        prop_assert_eq!(apply_sigma(&a.bracket(&b), sign, &sp).unwrap(), sb.bracket(&sa));
    }

    #[test]
    fn antifixed_elements_close_under_bracket(seed: u64, plus: bool) {
        let sp = sp(&[0, 0, 1]);
        let sign = sign_of(plus);
        let mut rng = random::rng(seed);
        let a = project_antifixed(&random::multiple_of(&mut rng, sp.p(), 2, 2, 3), sign, &sp).unwrap();
        let b = project_antifixed(&random::multiple_of(&mut rng, sp.p(), 2, 2, 3), sign, &sp).unwrap();
        prop_assert!(is_antifixed(&a, sign, &sp).unwrap());
        prop_assert!(is_antifixed(&a.bracket(&b), sign, &sp).unwrap());
    }

    #[test]
    fn eta_reflection(i in 0usize..4, a in -5i64..=5, b in 1i64..=4) {
        let s = Scalar::ratio(a, b);
        let reflected = eta_quasi(i, &(&Scalar::one() - &s));
        let expected = if i % 2 == 0 { eta_quasi(i, &s) } else { eta_quasi(i, &s).scale(&-&Scalar::one()) };
        prop_assert_eq!(reflected, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn pulled_back_labels_realize_to_one_factor(seed: u64) {
        let mut rng = random::rng(seed);
        let (ml, sign) = random_labels(&mut rng);
        let w = pullback_weight(&ml, sign).unwrap();
        let r = realize(&w, 20).unwrap();
        prop_assert_eq!(r.factors.len(), 1);
        prop_assert_eq!(r.total_charge(), ml.c0());
    }

    #[test]
    fn exponents_are_roots_of_characteristic_polynomial(seed: u64, plus: bool) {
        let mut rng = random::rng(seed);
        let ed = random_eta_data(&mut rng);
        let f = ed.to_quasipolynomial();
        let c0 = f.eval_zero();
        let phi = f.sub(&Quasipolynomial::cosh(&Scalar::half(), &Polynomial::constant(c0.clone())));
        let w = Weight::closed(sp(&[0, 1]), sign_of(plus), c0, phi).unwrap();
        let cp = char_poly_search(&w, 6, 10, 30, DEFAULT_MARGIN).unwrap();
        let exps = exponent_decompose(&f_quasi(&w).unwrap()).unwrap();
        prop_assert!(exponents_are_roots(&exps, &cp.b, w.sp()).unwrap());
    }
}
