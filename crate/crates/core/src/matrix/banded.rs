//! Infinite matrices with finitely many nonzero diagonals over R_m, and the
//! central extension by the trace cocycle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::IndexPoly;
use crate::error::{Error, Result};
use crate::exact::{Scalar, TruncPoly};

/// `Σ_k Σ_j P_k(j) E_{j−k, j} + Σ overlay + central`.
///
/// The entry at `(i, j)` is `P_{j−i}(j) + overlay(i, j)`; a diagonal `k`
/// has weight `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct BandedMatrix {
    m: usize,
    diagonals: BTreeMap<i64, IndexPoly>,
    overlay: BTreeMap<(i64, i64), TruncPoly>,
    central: TruncPoly,
}

impl BandedMatrix {
    pub fn zero(m: usize) -> Self {
        BandedMatrix {
            m,
            diagonals: BTreeMap::new(),
            overlay: BTreeMap::new(),
            central: TruncPoly::zero(m),
        }
    }

    /// `a·E_{ij}` as a single overlay entry.
    pub fn unit(i: i64, j: i64, a: TruncPoly) -> Self {
        let mut out = BandedMatrix::zero(a.m());
        out.add_entry(i, j, &a);
        out
    }

    /// The diagonal `k` with entry polynomial `P`.
    pub fn diagonal(k: i64, p: IndexPoly) -> Self {
        let mut out = BandedMatrix::zero(p.m());
        out.add_diagonal(k, &p);
        out
    }

    pub fn central_element(c: TruncPoly) -> Self {
        let mut out = BandedMatrix::zero(c.m());
        out.central = c;
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn diagonals(&self) -> &BTreeMap<i64, IndexPoly> {
        &self.diagonals
    }

    pub fn overlay(&self) -> &BTreeMap<(i64, i64), TruncPoly> {
        &self.overlay
    }

    pub fn central(&self) -> &TruncPoly {
        &self.central
    }

    pub fn with_central(&self, c: TruncPoly) -> BandedMatrix {
        BandedMatrix {
            central: c,
            ..self.clone()
        }
    }

    pub fn non_central(&self) -> BandedMatrix {
        self.with_central(TruncPoly::zero(self.m))
    }

    pub fn add_diagonal(&mut self, k: i64, p: &IndexPoly) {
        let sum = match self.diagonals.get(&k) {
            Some(old) => old.add(p),
            None => p.clone(),
        };
        if sum.is_zero() {
            self.diagonals.remove(&k);
        } else {
            self.diagonals.insert(k, sum);
        }
    }

    pub fn add_entry(&mut self, i: i64, j: i64, a: &TruncPoly) {
        let sum = match self.overlay.get(&(i, j)) {
            Some(old) => old + a,
            None => a.clone(),
        };
        if sum.is_zero() {
            self.overlay.remove(&(i, j));
        } else {
            self.overlay.insert((i, j), sum);
        }
    }

    pub fn entry(&self, i: i64, j: i64) -> TruncPoly {
        let mut e = self
            .diagonals
            .get(&(j - i))
            .map_or_else(|| TruncPoly::zero(self.m), |p| p.eval_int(j));
        if let Some(o) = self.overlay.get(&(i, j)) {
            e = &e + o;
        }
        e
    }

    /// Weights carried by diagonals or overlay entries.
    pub fn weights(&self) -> BTreeSet<i64> {
        let mut w: BTreeSet<i64> = self.diagonals.keys().copied().collect();
        w.extend(self.overlay.keys().map(|(i, j)| j - i));
        w
    }

    /// Largest `|j − i|` among stored entries.
    pub fn bandwidth(&self) -> i64 {
        self.weights().iter().map(|k| k.abs()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.diagonals.is_empty() && self.overlay.is_empty() && self.central.is_zero()
    }

    /// Equal as matrices: overlay entries that coincide with diagonal values
    /// are folded in before comparing.
    pub fn same_as(&self, other: &BandedMatrix) -> bool {
        let d = self.sub(other);
        d.diagonals.is_empty() && d.overlay.is_empty() && d.central.is_zero()
    }

    pub fn add(&self, other: &BandedMatrix) -> BandedMatrix {
        let mut out = self.clone();
        for (k, p) in &other.diagonals {
            out.add_diagonal(*k, p);
        }
        for ((i, j), a) in &other.overlay {
            out.add_entry(*i, *j, a);
        }
        out.central = &out.central + &other.central;
        out
    }

    pub fn sub(&self, other: &BandedMatrix) -> BandedMatrix {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> BandedMatrix {
        BandedMatrix {
            m: self.m,
            diagonals: self
                .diagonals
                .iter()
                .map(|(k, p)| (*k, p.scale(c)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
            overlay: self
                .overlay
                .iter()
                .map(|(ij, a)| (*ij, a.scale(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
            central: self.central.scale(c),
        }
    }

    fn check_m(&self, other: &BandedMatrix) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.m, other.m))
        }
    }

    /// Associative product of the non-central parts.
    ///
    /// Diagonal `k` with `P` times diagonal `k'` with `Q` is diagonal `k+k'`
    /// with `P(j−k')Q(j)`; products involving overlay entries are taken
    /// entrywise.
    pub fn product(&self, other: &BandedMatrix) -> Result<BandedMatrix> {
        self.check_m(other)?;
        let mut out = BandedMatrix::zero(self.m);
        for (k, p) in &self.diagonals {
            for (k2, q) in &other.diagonals {
                out.add_diagonal(k + k2, &p.shift(*k2).mul(q));
            }
            for ((a, b), v) in &other.overlay {
                // row a of the overlay meets column a of diagonal k, at row a − k
                out.add_entry(a - k, *b, &(&p.eval_int(*a) * v));
            }
        }
        for ((a, b), v) in &self.overlay {
            for (k2, q) in &other.diagonals {
                out.add_entry(*a, b + k2, &(v * &q.eval_int(b + k2)));
            }
            for ((c, d), w) in &other.overlay {
                if b == c {
                    out.add_entry(*a, *d, &(v * w));
                }
            }
        }
        Ok(out)
    }

    /// `[A, B]` in the centrally extended algebra: `AB − BA` plus `C(A, B)`.
    pub fn bracket_hat(&self, other: &BandedMatrix) -> Result<BandedMatrix> {
        let ab = self.product(other)?;
        let ba = other.product(self)?;
        Ok(ab.sub(&ba).with_central(cocycle_c(self, other)?))
    }

    /// `ν^r`: every index shifted by `r`.
    pub fn nu_shift(&self, r: i64) -> BandedMatrix {
        BandedMatrix {
            m: self.m,
            diagonals: self.diagonals.iter().map(|(k, p)| (*k, p.shift(r))).collect(),
            overlay: self.overlay.iter().map(|((i, j), a)| ((i + r, j + r), a.clone())).collect(),
            central: self.central.clone(),
        }
    }
}

/// `C(A, B) = tr([J, A] B)` with `J = Σ_{j≤0} E_{jj}`:
/// `Σ_{k>0} [Σ_{i=1−k}^{0} A_{i,i+k}B_{i+k,i} − Σ_{i=1}^{k} A_{i,i−k}B_{i−k,i}]`.
pub fn cocycle_c(a: &BandedMatrix, b: &BandedMatrix) -> Result<TruncPoly> {
    a.check_m(b)?;
    let wb = b.weights();
    let mut acc = TruncPoly::zero(a.m);
    for k in a.weights() {
        if k == 0 || !wb.contains(&-k) {
            continue;
        }
        let kk = k.abs();
        if k > 0 {
            for i in 1 - kk..=0 {
                acc = &acc + &(&a.entry(i, i + kk) * &b.entry(i + kk, i));
            }
        } else {
            for i in 1..=kk {
                acc = &acc - &(&a.entry(i, i - kk) * &b.entry(i - kk, i));
            }
        }
    }
    Ok(acc)
}

impl fmt::Debug for BandedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BandedMatrix")
            .field("m", &self.m)
            .field("diagonals", &self.diagonals)
            .field("overlay", &self.overlay)
            .field("central", &self.central)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagonalWire {
    k: i64,
    entry_poly: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OverlayWire {
    i: i64,
    j: i64,
    coeffs: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BandedWire {
    m: usize,
    #[serde(default)]
    central_coefficients: Vec<Scalar>,
    #[serde(default)]
    diagonals: Vec<DiagonalWire>,
    #[serde(default)]
    overlay: Vec<OverlayWire>,
}

impl Serialize for BandedMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BandedWire {
            m: self.m,
            central_coefficients: self.central.coeffs().to_vec(),
            diagonals: self
                .diagonals
                .iter()
                .map(|(k, p)| DiagonalWire {
                    k: *k,
                    entry_poly: p.to_table(),
                })
                .collect(),
            overlay: self
                .overlay
                .iter()
                .map(|((i, j), a)| OverlayWire {
                    i: *i,
                    j: *j,
                    coeffs: a.coeffs().to_vec(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BandedMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = BandedWire::deserialize(deserializer)?;
        let m = w.m;
        let too_long = |v: &Vec<Scalar>| v.len() > m + 1;
        if too_long(&w.central_coefficients)
            || w.diagonals.iter().any(|d| d.entry_poly.iter().any(too_long))
            || w.overlay.iter().any(|o| too_long(&o.coeffs))
        {
            return Err(D::Error::custom(format!("more than m+1 = {} u-coefficients", m + 1)));
        }
        let mut out = BandedMatrix::central_element(TruncPoly::new(m, w.central_coefficients));
        for d in w.diagonals {
            out.add_diagonal(d.k, &IndexPoly::from_table(m, d.entry_poly));
        }
        for o in w.overlay {
            out.add_entry(o.i, o.j, &TruncPoly::new(m, o.coeffs));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(m: usize) -> TruncPoly {
        TruncPoly::one(m)
    }

    #[test]
    fn elementary_bracket() {
        let a = BandedMatrix::unit(0, 1, one(0));
        let b = BandedMatrix::unit(1, 0, one(0));
        let br = a.bracket_hat(&b).unwrap();
        let expect = BandedMatrix::unit(0, 0, one(0))
            .sub(&BandedMatrix::unit(1, 1, one(0)))
            .with_central(one(0));
        assert_eq!(br, expect);
    }

    #[test]
    fn bracket_with_u_weights() {
        let u = TruncPoly::u(2);
        let a = BandedMatrix::unit(0, 1, u.clone());
        let b = BandedMatrix::unit(1, 0, u.clone());
        let br = a.bracket_hat(&b).unwrap();
        assert_eq!(br.central(), &(&u * &u));
    }

    #[test]
    fn diagonal_matrices_commute() {
        let p = IndexPoly::affine(1, Scalar::from(2), Scalar::one(), Scalar::from(-3));
        let q = IndexPoly::affine(1, Scalar::ratio(1, 2), Scalar::zero(), Scalar::one());
        let br = BandedMatrix::diagonal(0, p)
            .bracket_hat(&BandedMatrix::diagonal(0, q))
            .unwrap();
        assert!(br.is_zero());
    }

    #[test]
    fn cocycle_antisymmetry_and_mismatch() {
        let a = BandedMatrix::unit(0, 1, one(0));
        let b = BandedMatrix::unit(1, 0, one(0));
        assert_eq!(cocycle_c(&a, &b).unwrap(), one(0));
        assert_eq!(cocycle_c(&b, &a).unwrap(), -&one(0));
        let c = BandedMatrix::unit(1, 0, one(1));
        assert_eq!(cocycle_c(&a, &c), Err(Error::OrderMismatch(0, 1)));
    }

    #[test]
    fn nu_examples() {
        let e00 = BandedMatrix::unit(0, 0, one(0));
        assert_eq!(e00.nu_shift(1), BandedMatrix::unit(1, 1, one(0)));
        assert_eq!(e00.nu_shift(0), e00);
        let u = TruncPoly::u(1);
        assert_eq!(BandedMatrix::unit(-1, 2, u.clone()).nu_shift(1), BandedMatrix::unit(0, 3, u));
    }

    #[test]
    fn diagonal_and_overlay_products_agree_with_entries() {
        let p = IndexPoly::affine(0, Scalar::from(1), Scalar::zero(), Scalar::from(2));
        let a = BandedMatrix::diagonal(1, p);
        let b = BandedMatrix::unit(3, -1, one(0));
        let ab = a.product(&b).unwrap();
        // (AB)_{2,−1} = A_{2,3}·1 = P(3) = 7
        assert_eq!(ab.entry(2, -1), TruncPoly::constant(0, Scalar::from(7)));
        let ba = b.product(&a).unwrap();
        // (BA)_{3,0} = B_{3,−1}·A_{−1,0} = P(0) = 1
        assert_eq!(ba.entry(3, 0), one(0));
    }

    #[test]
    fn serde_round_trip() {
        let p = IndexPoly::affine(1, Scalar::from(1), Scalar::half(), Scalar::from(2));
        let x = BandedMatrix::diagonal(-2, p)
            .add(&BandedMatrix::unit(0, 4, TruncPoly::u(1)))
            .with_central(TruncPoly::one(1));
        let text = serde_json::to_string(&x).unwrap();
        let back: BandedMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
    }
}
