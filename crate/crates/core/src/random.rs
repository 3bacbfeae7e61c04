//! Seeded random generators for the verification batteries.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diffop::DiffOp;
use crate::exact::{Polynomial, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `a/b`, `|a| ≤ 5`, `1 ≤ b ≤ 3`.
pub fn scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let s = scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A polynomial of degree at most `maxdeg`, possibly zero.
pub fn poly<R: Rng>(rng: &mut R, maxdeg: usize) -> Polynomial {
    let d = rng.gen_range(0..=maxdeg);
    Polynomial::new((0..=d).map(|_| scalar(rng)).collect())
}

/// A polynomial of exactly degree `d`.
pub fn poly_of_degree<R: Rng>(rng: &mut R, d: usize) -> Polynomial {
    let mut cs: Vec<Scalar> = (0..d).map(|_| scalar(rng)).collect();
    cs.push(nonzero_scalar(rng));
    Polynomial::new(cs)
}

/// A homogeneous element `t^k f(D)`.
pub fn homogeneous<R: Rng>(rng: &mut R, k: i64, maxdeg: usize) -> DiffOp {
    DiffOp::term(k, poly(rng, maxdeg))
}

/// A sum of up to `nterms` terms with `|k| ≤ kmax`, `deg f ≤ maxdeg`.
pub fn diffop<R: Rng>(rng: &mut R, kmax: i64, maxdeg: usize, nterms: usize) -> DiffOp {
    let n = rng.gen_range(1..=nterms);
    DiffOp::from_terms(
        (0..n).map(|_| (rng.gen_range(-kmax..=kmax), poly(rng, maxdeg))),
        Scalar::zero(),
    )
}

/// As [`diffop`] but with a random central part.
pub fn diffop_hat<R: Rng>(rng: &mut R, kmax: i64, maxdeg: usize, nterms: usize) -> DiffOp {
    let c = scalar(rng);
    diffop(rng, kmax, maxdeg, nterms).with_central(c)
}

/// An element of the right ideal generated by `p(D)`.
pub fn multiple_of<R: Rng>(rng: &mut R, p: &Polynomial, kmax: i64, maxdeg: usize, nterms: usize) -> DiffOp {
    let x = diffop(rng, kmax, maxdeg, nterms);
    DiffOp::from_terms(x.terms().iter().map(|(k, f)| (*k, f * p)), Scalar::zero())
}
