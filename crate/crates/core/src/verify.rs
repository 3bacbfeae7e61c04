//! Seeded randomized batteries for the algebraic identities and the
//! classification pipeline. Every battery is deterministic in its seed.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::exact::{
    annihilator_search, ParityFilter, Polynomial, Quasipolynomial, Scalar, Series, TruncPoly, DEFAULT_MARGIN,
};
use crate::involution::{
    apply_sigma, component_basis, in_component_span, is_antifixed, project_antifixed, validate_symmetry, SignChoice,
    SymmetricP,
};
use crate::matrix::{
    cocycle_c, involution_apply, membership_on_window, phi_hat, phi_map, t_conjugate, AlgebraTag, Direction,
    Involution, TVariant, WindowedMatrix,
};
use crate::random;
use crate::weight::{
    char_poly_eq13, char_poly_eq24, delta_series, eta_decompose, exponent_decompose, exponents_are_roots, f_quasi,
    f_series, gamma_from_labels, gamma_of_weight, gamma_solve, pullback_weight, quasifinite_check, realize,
    recover_quasipolynomial, EtaData, MatrixLabels, Weight,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Battery {
    AntiInvolution,
    Jacobi,
    AntifixedBasis,
    DegreeDrop,
    PhiHomomorphism,
    CentralLift,
    RhoConjugation,
    ClassicalImages,
    RoundTrip,
    LabelConsistency,
    CharPoly,
}

impl Battery {
    pub const ALL: [Battery; 11] = [
        Battery::AntiInvolution,
        Battery::Jacobi,
        Battery::AntifixedBasis,
        Battery::DegreeDrop,
        Battery::PhiHomomorphism,
        Battery::CentralLift,
        Battery::RhoConjugation,
        Battery::ClassicalImages,
        Battery::RoundTrip,
        Battery::LabelConsistency,
        Battery::CharPoly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Battery::AntiInvolution => "anti-involution",
            Battery::Jacobi => "jacobi",
            Battery::AntifixedBasis => "antifixed-basis",
            Battery::DegreeDrop => "degree-drop",
            Battery::PhiHomomorphism => "phi-homomorphism",
            Battery::CentralLift => "central-lift",
            Battery::RhoConjugation => "rho-conjugation",
            Battery::ClassicalImages => "classical-images",
            Battery::RoundTrip => "round-trip",
            Battery::LabelConsistency => "label-consistency",
            Battery::CharPoly => "char-poly",
        }
    }

    pub fn parse(s: &str) -> Option<Battery> {
        Battery::ALL.into_iter().find(|b| b.name() == s)
    }

    pub fn run(self, seed: u64) -> BatteryReport {
        let rng = &mut battery_rng(seed, self);
        let mut t = Tally::new(self);
        match self {
            Battery::AntiInvolution => anti_involution_cases(rng, &mut t, apply_sigma),
            Battery::Jacobi => jacobi(rng, &mut t),
            Battery::AntifixedBasis => antifixed_basis(rng, &mut t),
            Battery::DegreeDrop => degree_drop(rng, &mut t),
            Battery::PhiHomomorphism => phi_homomorphism(rng, &mut t),
            Battery::CentralLift => central_lift(rng, &mut t),
            Battery::RhoConjugation => rho_conjugation(&mut t),
            Battery::ClassicalImages => classical_images(rng, &mut t),
            Battery::RoundTrip => round_trip(rng, &mut t),
            Battery::LabelConsistency => label_consistency(rng, &mut t),
            Battery::CharPoly => char_poly(&mut t),
        }
        t.finish()
    }
}

impl fmt::Display for Battery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Battery {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn battery_rng(seed: u64, b: Battery) -> ChaCha8Rng {
    random::rng(seed ^ (b as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatteryReport {
    pub battery: Battery,
    pub cases: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub batteries: Vec<BatteryReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.batteries.iter().all(BatteryReport::passed)
    }
}

/// Runs the batteries in `scope` concurrently; the report keeps the order
/// of `scope`.
pub fn verify(seed: u64, scope: &[Battery]) -> VerifyReport {
    let batteries = std::thread::scope(|s| {
        let handles: Vec<_> = scope.iter().map(|&b| s.spawn(move || b.run(seed))).collect();
        handles.into_iter().map(|h| h.join().expect("battery thread panicked")).collect()
    });
    VerifyReport { seed, batteries }
}

struct Tally {
    report: BatteryReport,
}

impl Tally {
    fn new(battery: Battery) -> Self {
        Tally {
            report: BatteryReport {
                battery,
                cases: 0,
                failures: 0,
                counterexample: None,
            },
        }
    }

    /// Records one case; an `Err` counts as a failure.
    fn case(&mut self, outcome: Result<bool>, detail: impl FnOnce() -> String) {
        self.report.cases += 1;
        let why = match outcome {
            Ok(true) => return,
            Ok(false) => detail(),
            Err(e) => format!("{}: {}", detail(), e),
        };
        self.report.failures += 1;
        if self.report.counterexample.is_none() {
            self.report.counterexample = Some(why);
        }
    }

    fn finish(self) -> BatteryReport {
        self.report
    }
}

fn sym(p: &Polynomial) -> SymmetricP {
    validate_symmetry(p).unwrap().expect("symmetric test polynomial")
}

/// The symmetric polynomials exercised by the involution batteries; the
/// constant one gets the center `c`.
fn test_ps(c: &Scalar) -> Vec<SymmetricP> {
    let mut out = vec![sym(&Polynomial::one()).with_c(c.clone()).unwrap()];
    for p in [
        Polynomial::x(),
        Polynomial::monomial(2, Scalar::one()),
        Polynomial::from_ints(&[0, -1, 1]),
        Polynomial::monomial(3, Scalar::one()),
    ] {
        out.push(sym(&p));
    }
    out
}

fn random_sign<R: Rng>(rng: &mut R) -> SignChoice {
    *SignChoice::BOTH.choose(rng).unwrap()
}

/// Anti-involution laws for a candidate σ: `σ² = id` and
/// `σ(XY) = σ(Y)σ(X)` on 200 random pairs per `p` and sign, plus the
/// rejection of `x³ + x²`.
pub fn anti_involution_battery<F>(seed: u64, sigma: F) -> BatteryReport
where
    F: Fn(&DiffOp, SignChoice, &SymmetricP) -> Result<DiffOp>,
{
    let mut t = Tally::new(Battery::AntiInvolution);
    anti_involution_cases(&mut battery_rng(seed, Battery::AntiInvolution), &mut t, sigma);
    t.finish()
}

fn anti_involution_cases<F>(rng: &mut ChaCha8Rng, t: &mut Tally, sigma: F)
where
    F: Fn(&DiffOp, SignChoice, &SymmetricP) -> Result<DiffOp>,
{
    for idx in 0..5 {
        for sign in SignChoice::BOTH {
            for _ in 0..200 {
                let sp = test_ps(&random::scalar(rng)).swap_remove(idx);
                let x = random::multiple_of(rng, sp.p(), 4, 6, 3);
                let y = random::multiple_of(rng, sp.p(), 4, 6, 3);
                let outcome = (|| {
                    let (sx, sy) = (sigma(&x, sign, &sp)?, sigma(&y, sign, &sp)?);
                    let involutive = sigma(&sx, sign, &sp)? == x && sigma(&sy, sign, &sp)? == y;
                    let anti = sigma(&x.compose(&y)?, sign, &sp)? == sy.compose(&sx)?;
                    Ok(involutive && anti)
                })();
                t.case(outcome, || format!("p = {}, sign {}, X = {:?}, Y = {:?}", sp.p(), sign, x, y));
            }
        }
    }
    let bad = Polynomial::from_ints(&[0, 0, 1, 1]);
    t.case(validate_symmetry(&bad).map(|r| r.is_none()), || "x^3 + x^2 accepted as symmetric".into());
}

fn jacobi(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..200 {
        let (a, b, c) = (
            random::diffop_hat(rng, 3, 4, 3),
            random::diffop_hat(rng, 3, 4, 3),
            random::diffop_hat(rng, 3, 4, 3),
        );
        let sum = a
            .bracket_hat(&b)
            .bracket_hat(&c)
            .add(&b.bracket_hat(&c).bracket_hat(&a))
            .add(&c.bracket_hat(&a).bracket_hat(&b));
        t.case(Ok(sum.is_zero()), || format!("A = {:?}, B = {:?}, C = {:?}", a, b, c));
    }
}

fn antifixed_basis(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for idx in 0..5 {
        for sign in SignChoice::BOTH {
            for _ in 0..40 {
                let sp = test_ps(&random::scalar(rng)).swap_remove(idx);
                let a = random::multiple_of(rng, sp.p(), 4, 5, 3);
                let k = rng.gen_range(-4..=4);
                let outcome = (|| {
                    let x = project_antifixed(&a, sign, &sp)?;
                    let symmetric = a.sub(&x);
                    let basis = component_basis(k, 6, sign, &sp)?;
                    let mut y = DiffOp::zero();
                    for b in &basis {
                        y = y.add(&b.scale(&random::scalar(rng)));
                    }
                    let mut ok = is_antifixed(&x, sign, &sp)? && in_component_span(&x, sign, &sp)?;
                    ok &= is_antifixed(&y, sign, &sp)? && in_component_span(&y, sign, &sp)?;
                    for z in [&a, &symmetric] {
                        ok &= is_antifixed(z, sign, &sp)? == in_component_span(z, sign, &sp)?;
                    }
                    Ok(ok)
                })();
                t.case(outcome, || format!("p = {}, sign {}, element {:?}", sp.p(), sign, a));
            }
            let sp = test_ps(&Scalar::zero()).swap_remove(idx);
            let outcome = (|| {
                let delta = sp.delta(sign);
                let mut ok = sp.component_class(-1, sign) == delta;
                let y = Polynomial::linear(-&(&(sp.c()? + &Scalar::one()) * &Scalar::half()));
                let mut power = Polynomial::one();
                for d in 0..=6 {
                    let el = DiffOp::term(-1, &power * sp.p());
                    ok &= is_antifixed(&el, sign, &sp)? == delta.parity().admits(d);
                    power = &power * &y;
                }
                Ok(ok)
            })();
            t.case(outcome, || format!("weight -1 parity for p = {}, sign {}", sp.p(), sign));
        }
    }
}

fn degree_drop(rng: &mut ChaCha8Rng, t: &mut Tally) {
    while t.report.cases < 500 {
        let (df, dg) = (rng.gen_range(0..=5usize), rng.gen_range(0..=5usize));
        if df + dg == 0 {
            continue;
        }
        let (k, l) = (rng.gen_range(-4..=4i64), rng.gen_range(-4..=4i64));
        let f = random::poly_of_degree(rng, df);
        let g = random::poly_of_degree(rng, dg);
        let h = DiffOp::term(k, f.clone()).bracket(&DiffOp::term(l, g.clone())).cofactor(k + l);
        let full = h.degree() == Some(df + dg - 1);
        let predicted = (df as i64) * l != (dg as i64) * k;
        t.case(Ok(full == predicted), || format!("f = {}, k = {}, g = {}, l = {}, h = {}", f, k, g, l, h));
    }
}

fn sp_x() -> SymmetricP {
    sym(&Polynomial::x())
}

fn random_antifixed<R: Rng>(rng: &mut R, sign: SignChoice, kmax: i64, maxdeg: usize, nterms: usize) -> DiffOp {
    let a = random::multiple_of(rng, &Polynomial::x(), kmax, maxdeg, nterms);
    project_antifixed(&a, sign, &sp_x()).unwrap()
}

fn phi_homomorphism(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for s in [Scalar::ratio(1, 4), Scalar::from(3), Scalar::ratio(7, 3)] {
        for case in 0..100 {
            let m = case % 3;
            let sign = random_sign(rng);
            let x = random_antifixed(rng, sign, 3, 4, 2);
            let y = random_antifixed(rng, sign, 3, 4, 2);
            let outcome = (|| {
                let lhs = phi_map(&x.bracket(&y), &s, m, sign)?;
                let rhs = phi_map(&x, &s, m, sign)?.bracket_hat(&phi_map(&y, &s, m, sign)?)?;
                Ok(lhs.same_as(&rhs.non_central()))
            })();
            t.case(outcome, || format!("s = {}, m = {}, sign {}, X = {:?}, Y = {:?}", s, m, sign, x, y));
        }
    }
}

fn central_lift(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for case in 0..60 {
        let m = case % 3;
        let k = rng.gen_range(1..=3i64);
        let sign = random_sign(rng);
        let s = random::scalar(rng);
        let x = project_antifixed(&DiffOp::term(k, &random::poly(rng, 4) * &Polynomial::x()), sign, &sp_x()).unwrap();
        let y = project_antifixed(&DiffOp::term(-k, &random::poly(rng, 4) * &Polynomial::x()), sign, &sp_x()).unwrap();
        let outcome = (|| {
            let lhs = phi_hat(&x.bracket_hat(&y), &s, m, sign, 24)?;
            let rhs = phi_map(&x, &s, m, sign)?.bracket_hat(&phi_map(&y, &s, m, sign)?)?;
            Ok(lhs.same_as(&rhs))
        })();
        t.case(outcome, || format!("s = {}, m = {}, sign {}, X = {:?}, Y = {:?}", s, m, sign, x, y));
    }
    let x = DiffOp::term(1, Polynomial::x());
    let y = DiffOp::term(-1, Polynomial::x());
    for _ in 0..5 {
        let s = random::scalar(rng);
        let outcome = (|| {
            let lhs = phi_hat(&x.bracket_hat(&y), &s, 0, SignChoice::Plus, 24)?;
            let (a, b) = (phi_map(&x, &s, 0, SignChoice::Plus)?, phi_map(&y, &s, 0, SignChoice::Plus)?);
            let expect = TruncPoly::constant(0, &s * &(&s - &Scalar::one()));
            Ok(lhs.same_as(&a.bracket_hat(&b)?) && *lhs.central() == expect && cocycle_c(&a, &b)? == expect)
        })();
        t.case(outcome, || format!("[tD, t^-1 D] at s = {}", s));
    }
}

const WINDOW: i64 = 6;

fn rho_conjugation(t: &mut Tally) {
    for sign in SignChoice::BOTH {
        for m in 0..=2 {
            for i in -WINDOW..=WINDOW + 1 {
                for j in (i - 1).max(-WINDOW)..=(i + 1).min(WINDOW + 1) {
                    for l in 0..=m {
                        let e = WindowedMatrix::unit(WINDOW, i, j, TruncPoly::u(m).pow(l));
                        let outcome = (|| {
                            let lhs = involution_apply(&e, Involution::rho(sign))?;
                            let te = t_conjugate(&e, TVariant::Half, Direction::Forward);
                            let wte = involution_apply(&te, Involution::w(sign))?;
                            Ok(lhs == t_conjugate(&wte, TVariant::Half, Direction::Inverse))
                        })();
                        t.case(outcome, || format!("sign {}, m = {}, u^{} E({}, {})", sign, m, l, i, j));
                    }
                }
            }
        }
    }
}

fn classical_images(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for sign in SignChoice::BOTH {
        let targets = [
            (Scalar::half(), TVariant::Half, Direction::Inverse),
            (Scalar::zero(), TVariant::Integer, Direction::Forward),
        ];
        for (s, variant, direction) in targets {
            let tag = AlgebraTag::for_representative(&s, sign);
            for case in 0..50 {
                let m = case % 3;
                let x = random_antifixed(rng, sign, 3, 4, 3);
                let outcome = (|| {
                    let win = WindowedMatrix::from_banded(&phi_map(&x, &s, m, sign)?, WINDOW);
                    let conj = t_conjugate(&win, variant, direction);
                    let verdict = membership_on_window(&conj, tag);
                    Ok(verdict.member)
                })();
                t.case(outcome, || format!("{} image, s = {}, m = {}, X = {:?}", tag, s, m, x));
            }
        }
    }
}

const ROUND_TRIP_ORDER: usize = 24;
const ROUND_TRIP_DMAX: usize = 8;

/// Random η data: up to three classes with representatives among
/// `{0, 1/2, 1/4, 7/3}`, each with up to two members and multiplicity
/// degree at most 2, rejected until the annihilator of the sum has degree
/// at most 8.
pub fn random_eta_data<R: Rng>(rng: &mut R) -> EtaData {
    let reps = [Scalar::zero(), Scalar::half(), Scalar::ratio(1, 4), Scalar::ratio(7, 3)];
    loop {
        let nclasses = rng.gen_range(1..=3);
        let chosen: Vec<&Scalar> = reps.choose_multiple(rng, nclasses).collect();
        let mut ed = EtaData::default();
        for s in chosen {
            let mut members = vec![s.clone()];
            if rng.gen_bool(0.4) {
                members.push(s - &Scalar::from(rng.gen_range(1..=2)));
            }
            for member in members {
                let deg = rng.gen_range(0..=2);
                for i in 0..=deg {
                    ed.add(&member, i, &random::scalar(rng));
                }
            }
        }
        if ed.to_quasipolynomial().annihilator_degree() <= ROUND_TRIP_DMAX {
            return ed;
        }
    }
}

/// The `p = x` weight whose `F` is the given η sum.
fn weight_from_eta(ed: &EtaData, sign: SignChoice) -> Result<Weight> {
    let f = ed.to_quasipolynomial();
    let c0 = f.eval_zero();
    let phi = f.sub(&Quasipolynomial::cosh(&Scalar::half(), &Polynomial::constant(c0.clone())));
    Weight::closed(sp_x(), sign, c0, phi)
}

fn round_trip_case(ed: &EtaData, sign: SignChoice) -> Result<bool> {
    let w = weight_from_eta(ed, sign)?;
    // b may need one degree more than the annihilator of F to get its parity
    let long = delta_series(&w, ROUND_TRIP_ORDER + 4)?;
    let wl = Weight::series(sp_x(), sign, w.c0().clone(), long)?;
    if !quasifinite_check(&wl, ROUND_TRIP_DMAX + 2, DEFAULT_MARGIN)?.quasifinite {
        return Ok(false);
    }
    let delta = delta_series(&w, ROUND_TRIP_ORDER)?;
    let ws = Weight::series(sp_x(), sign, w.c0().clone(), delta.clone())?;
    let gamma = gamma_solve(&delta, ws.sp())?.gamma;
    let f = recover_quasipolynomial(&f_series(&ws, &gamma)?, ROUND_TRIP_DMAX, DEFAULT_MARGIN)?;
    Ok(eta_decompose(&f)? == *ed && exponent_decompose(&f)? == exponent_decompose(&f_quasi(&w)?)?)
}

/// The annihilating `b` and the exponents of `p(d+(c+1)/2)p(d+(c−1)/2)F`,
/// with `F` built from the given Γ.
fn g_invariants(w: &Weight, gamma: &Series, dmax: usize) -> Result<(Option<Polynomial>, BTreeMap<Scalar, Polynomial>)> {
    let g = crate::weight::two_shifts_series(w.sp(), &f_series(w, gamma)?)?;
    let b = match annihilator_search(&g, dmax, ParityFilter::Only(w.b_parity()), DEFAULT_MARGIN) {
        Ok(b) => Some(b),
        Err(Error::NoAnnihilator { .. }) => None,
        Err(e) => return Err(e),
    };
    let ed = exponent_decompose(&recover_quasipolynomial(&g, dmax, DEFAULT_MARGIN)?)?;
    let mut all = ed.even;
    for (e, r) in ed.odd {
        all.insert(e, r);
    }
    Ok((b, all))
}

fn kernel_case<R: Rng>(rng: &mut R, ed: &EtaData, p: &Polynomial, sign: SignChoice) -> Result<bool> {
    const DMAX: usize = 12;
    let sp = sym(p);
    let n = sp.degree();
    let f = ed.to_quasipolynomial();
    let phi = f.sub(&Quasipolynomial::constant(f.eval_zero()));
    let w = Weight::closed(sp.clone(), sign, random::scalar(rng), phi)?;
    let delta = delta_series(&w, 2 * DMAX + DEFAULT_MARGIN + n)?;
    let sol = gamma_solve(&delta, &sp)?;
    if sol.kernel.is_empty() {
        return Err(Error::Consistency(format!("no kernel for p = {}", p)));
    }
    let base = g_invariants(&w, &sol.gamma, DMAX)?;
    if base.0.is_none() {
        return Ok(false);
    }
    for k in &sol.kernel {
        let shifted = sol.gamma.add(&k.to_series(sol.gamma.order()).scale(&random::nonzero_scalar(rng)));
        if g_invariants(&w, &shifted, DMAX)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

fn round_trip(rng: &mut ChaCha8Rng, t: &mut Tally) {
    let kernel_ps = [Polynomial::from_ints(&[0, -1, 1]), Polynomial::monomial(3, Scalar::one())];
    for _ in 0..50 {
        let ed = random_eta_data(rng);
        let sign = random_sign(rng);
        t.case(round_trip_case(&ed, sign), || format!("round trip of {:?}, sign {}", ed.coefficients, sign));
        for p in &kernel_ps {
            let outcome = kernel_case(rng, &ed, p, sign);
            t.case(outcome, || format!("kernel perturbation, p = {}, eta data {:?}", p, ed.coefficients));
        }
    }
}

/// Random labels of a random tag, with the sign it needs.
pub fn random_labels<R: Rng>(rng: &mut R) -> (MatrixLabels, SignChoice) {
    let sign = random_sign(rng);
    let rep = [Scalar::zero(), Scalar::half(), Scalar::ratio(1, 4), Scalar::ratio(7, 3), Scalar::ratio(-2, 3)]
        .choose(rng)
        .unwrap()
        .clone();
    let tag = AlgebraTag::for_representative(&rep, sign);
    let kmin = if tag == AlgebraTag::Gl { -2 } else { 0 };
    loop {
        let mut h = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=4) {
            let k = rng.gen_range(kmin..=3);
            let i = rng.gen_range(0..=2usize);
            if matches!(tag, AlgebraTag::C | AlgebraTag::D) && k == 0 && i % 2 == 1 {
                continue;
            }
            h.insert((k, i), random::nonzero_scalar(rng));
        }
        if let Ok(ml) = MatrixLabels::new(tag, rep.clone(), h) {
            if !ml.h.is_empty() {
                return (ml, sign);
            }
        }
    }
}

fn label_case(ml: &MatrixLabels, sign: SignChoice) -> Result<bool> {
    let w = pullback_weight(ml, sign)?;
    let series_ok = gamma_of_weight(&w, 24)? == gamma_from_labels(ml, 24)?;
    let r = realize(&w, 24)?;
    let labels_ok = r.factors.len() == 1 && r.factors[0].labels == ml.normalized();
    Ok(series_ok && labels_ok && r.total_charge() == *w.c0())
}

fn label_consistency(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..50 {
        let (ml, sign) = random_labels(rng);
        t.case(label_case(&ml, sign), || format!("labels {:?}, sign {}", ml, sign));
    }
    // two classes at once: charges add up
    for _ in 0..20 {
        let ed = random_eta_data(rng);
        let sign = random_sign(rng);
        let outcome = (|| {
            let w = weight_from_eta(&ed, sign)?;
            Ok(realize(&w, 24)?.total_charge() == *w.c0())
        })();
        t.case(outcome, || format!("charges for {:?}, sign {}", ed.coefficients, sign));
    }
}

/// The worked weight `φ = cosh x − 1`, `c₀ = 0`, `p = x`.
pub fn worked_weight(sign: SignChoice) -> Weight {
    let phi = Quasipolynomial::cosh(&Scalar::one(), &Polynomial::one()).sub(&Quasipolynomial::constant(Scalar::one()));
    Weight::closed(sp_x(), sign, Scalar::zero(), phi).unwrap()
}

fn char_poly(t: &mut Tally) {
    for (sign, b) in [
        (SignChoice::Plus, Polynomial::from_ints(&[0, 0, -1, 0, 1])),
        (SignChoice::Minus, Polynomial::from_ints(&[0, -1, 0, 1])),
    ] {
        let w = worked_weight(sign);
        let outcome = (|| {
            let a = char_poly_eq24(&w, 6, 8, 24)?;
            let c = char_poly_eq13(&w, 8, DEFAULT_MARGIN)?;
            let ed = exponent_decompose(&f_quasi(&w)?)?;
            Ok(a.b == b && c.b == b && exponents_are_roots(&ed, &a.b, w.sp())?)
        })();
        t.case(outcome, || format!("worked weight, sign {}", sign));
    }
}
