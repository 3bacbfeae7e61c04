//! Dense finite windows of matrices, the automorphism T, the involutions
//! w± and ρ±, and membership in the classical subalgebras.

use std::fmt;

use super::BandedMatrix;
use crate::error::{Error, Result};
use crate::exact::{rm_invert, Scalar, TruncPoly};
use crate::involution::SignChoice;

/// Entries `(i, j)` for `i, j ∈ [−W, W+1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct WindowedMatrix {
    m: usize,
    w: i64,
    entries: Vec<Vec<TruncPoly>>,
}

impl WindowedMatrix {
    pub fn zero(m: usize, w: i64) -> Self {
        let n = (2 * w + 2) as usize;
        WindowedMatrix {
            m,
            w,
            entries: vec![vec![TruncPoly::zero(m); n]; n],
        }
    }

    pub fn from_banded(a: &BandedMatrix, w: i64) -> Self {
        let mut out = WindowedMatrix::zero(a.m(), w);
        for i in out.range() {
            for j in out.range() {
                out.set(i, j, a.entry(i, j));
            }
        }
        out
    }

    /// `a·E_{ij}`.
    pub fn unit(w: i64, i: i64, j: i64, a: TruncPoly) -> Self {
        let mut out = WindowedMatrix::zero(a.m(), w);
        out.set(i, j, a);
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn half_width(&self) -> i64 {
        self.w
    }

    pub fn range(&self) -> std::ops::RangeInclusive<i64> {
        -self.w..=self.w + 1
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        self.range().contains(&i) && self.range().contains(&j)
    }

    fn idx(&self, i: i64) -> usize {
        (i + self.w) as usize
    }

    pub fn get(&self, i: i64, j: i64) -> &TruncPoly {
        &self.entries[self.idx(i)][self.idx(j)]
    }

    pub fn set(&mut self, i: i64, j: i64, a: TruncPoly) {
        let (a_i, a_j) = (self.idx(i), self.idx(j));
        self.entries[a_i][a_j] = a;
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (i64, i64, &TruncPoly)> + '_ {
        self.range().flat_map(move |i| {
            self.range()
                .filter_map(move |j| Some((i, j, self.get(i, j))).filter(|t| !t.2.is_zero()))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero().next().is_none()
    }

    pub fn add(&self, other: &WindowedMatrix) -> WindowedMatrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &WindowedMatrix) -> WindowedMatrix {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &WindowedMatrix, f: impl Fn(&TruncPoly, &TruncPoly) -> TruncPoly) -> WindowedMatrix {
        assert_eq!((self.m, self.w), (other.m, other.w));
        let mut out = self.clone();
        for i in self.range() {
            for j in self.range() {
                out.set(i, j, f(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    /// Product truncated to the window. Entries are exact only where the
    /// intermediate sum stays inside; see [`WindowedMatrix::agrees_inside`].
    pub fn product(&self, other: &WindowedMatrix) -> WindowedMatrix {
        let mut out = WindowedMatrix::zero(self.m, self.w);
        for i in self.range() {
            for l in self.range() {
                let mut acc = TruncPoly::zero(self.m);
                for j in self.range() {
                    let a = self.get(i, j);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * other.get(j, l));
                }
                out.set(i, l, acc);
            }
        }
        out
    }

    pub fn commutator(&self, other: &WindowedMatrix) -> WindowedMatrix {
        self.product(other).sub(&other.product(self))
    }

    /// Equality on indices at distance at least `margin` from the boundary.
    pub fn agrees_inside(&self, other: &WindowedMatrix, margin: i64) -> bool {
        let inner = -self.w + margin..=self.w + 1 - margin;
        inner.clone().all(|i| inner.clone().all(|j| self.get(i, j) == other.get(i, j)))
    }

    /// Entrywise map `(i, j, a) ↦ a'` placed at `target(i, j)`.
    fn remap(
        &self,
        target: impl Fn(i64, i64) -> (i64, i64),
        f: impl Fn(i64, i64, &TruncPoly) -> Result<TruncPoly>,
    ) -> Result<WindowedMatrix> {
        let mut out = WindowedMatrix::zero(self.m, self.w);
        for (i, j, a) in self.nonzero() {
            let (ti, tj) = target(i, j);
            if !out.contains(ti, tj) {
                return Err(Error::Inconclusive(i, j));
            }
            let v = &out.get(ti, tj).clone() + &f(i, j, a)?;
            out.set(ti, tj, v);
        }
        Ok(out)
    }
}

impl fmt::Debug for WindowedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Window(m={}, W={}) {{", self.m, self.w)?;
        for (i, j, a) in self.nonzero() {
            write!(f, " ({},{}): {}", i, j, a)?;
        }
        write!(f, " }}")
    }
}

/// The two conjugating automorphisms: half-integer factors `u − (k+1/2)`
/// or integer factors `u − k` with `k ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TVariant {
    Half,
    Integer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Scaling factor of `E_{i,j}` under T: `Π_{k=i}^{j−1} f_k` for `i < j`,
/// the inverse of `Π_{k=j}^{i−1} f_k` for `i > j`.
pub fn t_factor(variant: TVariant, m: usize, i: i64, j: i64) -> TruncPoly {
    let factor = |k: i64| -> Option<TruncPoly> {
        match variant {
            TVariant::Half => Some(TruncPoly::affine(m, -(&Scalar::from(k) + &Scalar::half()), Scalar::one())),
            TVariant::Integer => {
                (k != 0).then(|| TruncPoly::affine(m, Scalar::from(-k), Scalar::one()))
            }
        }
    };
    let prod = |lo: i64, hi: i64| {
        (lo..hi)
            .filter_map(factor)
            .fold(TruncPoly::one(m), |acc, f| &acc * &f)
    };
    match i.cmp(&j) {
        std::cmp::Ordering::Equal => TruncPoly::one(m),
        std::cmp::Ordering::Less => prod(i, j),
        std::cmp::Ordering::Greater => rm_invert(&prod(j, i)).expect("factors are units"),
    }
}

pub fn t_conjugate(a: &WindowedMatrix, variant: TVariant, direction: Direction) -> WindowedMatrix {
    let mut out = a.clone();
    for i in a.range() {
        for j in a.range() {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            let f = match direction {
                Direction::Forward => t_factor(variant, a.m, i, j),
                Direction::Inverse => t_factor(variant, a.m, j, i),
            };
            out.set(i, j, e * &f);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    WPlus,
    WMinus,
    RhoPlus,
    RhoMinus,
}

impl Involution {
    pub fn w(sign: SignChoice) -> Involution {
        match sign {
            SignChoice::Plus => Involution::WPlus,
            SignChoice::Minus => Involution::WMinus,
        }
    }

    pub fn rho(sign: SignChoice) -> Involution {
        match sign {
            SignChoice::Plus => Involution::RhoPlus,
            SignChoice::Minus => Involution::RhoMinus,
        }
    }
}

/// `ρ±(f E_{ij}) = (∓1)^{i+j} f(−u) E_{1−j,1−i}` and
/// `w±(f E_{ij}) = (±1)^{i+j} (−u+1/2−i)(−u+1/2−j)^{−1} f(−u) E_{1−j,1−i}`.
pub fn involution_apply(a: &WindowedMatrix, which: Involution) -> Result<WindowedMatrix> {
    let m = a.m;
    let half_minus = |i: i64| TruncPoly::affine(m, &Scalar::half() - &Scalar::from(i), -Scalar::one());
    a.remap(
        |i, j| (1 - j, 1 - i),
        |i, j, f| {
            let fr = f.reflect();
            Ok(match which {
                Involution::RhoPlus => fr.scale(&Scalar::sign_pow(i + j)),
                Involution::RhoMinus => fr,
                Involution::WPlus | Involution::WMinus => {
                    let sign = if which == Involution::WPlus {
                        Scalar::one()
                    } else {
                        Scalar::sign_pow(i + j)
                    };
                    let ratio = &half_minus(i) * &rm_invert(&half_minus(j))?;
                    (&ratio * &fr).scale(&sign)
                }
            })
        },
    )
}

/// The subalgebras of the matrix algebra cut out by the displayed symmetry
/// conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    Gl,
    C,
    D,
    LPlus,
    LMinus,
}

impl AlgebraTag {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::Gl => "gl",
            AlgebraTag::C => "c",
            AlgebraTag::D => "d",
            AlgebraTag::LPlus => "L+",
            AlgebraTag::LMinus => "L-",
        }
    }

    pub fn parse(s: &str) -> Option<AlgebraTag> {
        [AlgebraTag::Gl, AlgebraTag::C, AlgebraTag::D, AlgebraTag::LPlus, AlgebraTag::LMinus]
            .into_iter()
            .find(|t| t.name() == s)
    }

    /// Tag for a class representative: 1/2 gives c/d, 0 gives ℒ±.
    pub fn for_representative(s: &Scalar, sign: SignChoice) -> AlgebraTag {
        if s.is_zero() {
            match sign {
                SignChoice::Plus => AlgebraTag::LPlus,
                SignChoice::Minus => AlgebraTag::LMinus,
            }
        } else if *s == Scalar::half() {
            match sign {
                SignChoice::Plus => AlgebraTag::C,
                SignChoice::Minus => AlgebraTag::D,
            }
        } else {
            AlgebraTag::Gl
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for AlgebraTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> serde::Deserialize<'de> for AlgebraTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        AlgebraTag::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("unknown algebra tag {:?}", s)))
    }
}

/// Outcome of a membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// First failing position `(i, j)` and its mirror, when not a member.
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub at: (i64, i64),
    pub mirror: (i64, i64),
    pub rule: &'static str,
}

/// A single symmetry rule at `(i, j)`: the entry must equal
/// `factor · A_{mirror}(−u)`.
struct Rule {
    mirror: (i64, i64),
    factor: TruncPoly,
    name: &'static str,
}

fn rule_at(tag: AlgebraTag, m: usize, i: i64, j: i64) -> Option<Rule> {
    let s = |x: Scalar| TruncPoly::constant(m, x);
    match tag {
        AlgebraTag::Gl => None,
        AlgebraTag::C => Some(Rule {
            mirror: (1 - j, 1 - i),
            factor: s(Scalar::sign_pow(i + j + 1)),
            name: "A_ij(u) = (-1)^(i+j+1) A_(1-j,1-i)(-u)",
        }),
        AlgebraTag::D => Some(Rule {
            mirror: (1 - j, 1 - i),
            factor: s(-Scalar::one()),
            name: "A_ij(u) = -A_(1-j,1-i)(-u)",
        }),
        AlgebraTag::LPlus | AlgebraTag::LMinus => {
            // (∓1) is −1 for ℒ₊ and +1 for ℒ₋
            let mp = |e: i64| {
                if tag == AlgebraTag::LPlus {
                    Scalar::sign_pow(e)
                } else {
                    Scalar::one()
                }
            };
            let u = TruncPoly::u(m);
            if j == 0 && i != 0 {
                if i < 0 {
                    Some(Rule {
                        mirror: (0, -i),
                        factor: u.scale(&mp(-i)),
                        name: "A_(-i,0)(u) = (-+1)^i u A_(0,i)(-u)",
                    })
                } else {
                    Some(Rule {
                        mirror: (0, -i),
                        factor: u.scale(&-mp(i)),
                        name: "A_(i,0)(u) = -(-+1)^i u A_(0,-i)(-u)",
                    })
                }
            } else if i == 0 && j != 0 {
                None
            } else if i * j > 0 || (i == 0 && j == 0) {
                Some(Rule {
                    mirror: (-j, -i),
                    factor: s(-mp(i + j)),
                    name: "A_ij(u) = -(-+1)^(i+j) A_(-j,-i)(-u)",
                })
            } else {
                Some(Rule {
                    mirror: (-j, -i),
                    factor: s(mp(i + j)),
                    name: "A_ij(u) = (-+1)^(i+j) A_(-j,-i)(-u)",
                })
            }
        }
    }
}

fn check_rules(a: &WindowedMatrix, tag: AlgebraTag) -> Membership {
    for i in a.range() {
        for j in a.range() {
            let Some(rule) = rule_at(tag, a.m, i, j) else { continue };
            let (mi, mj) = rule.mirror;
            if !a.contains(mi, mj) {
                continue;
            }
            let rhs = &rule.factor * &a.get(mi, mj).reflect();
            if *a.get(i, j) != rhs {
                return Membership {
                    member: false,
                    violation: Some(Violation {
                        at: (i, j),
                        mirror: rule.mirror,
                        rule: rule.name,
                    }),
                };
            }
        }
    }
    Membership {
        member: true,
        violation: None,
    }
}

/// Membership of a finitely supported matrix. Every nonzero entry must lie
/// strictly inside the window, otherwise the answer is inconclusive.
pub fn classical_membership(a: &WindowedMatrix, tag: AlgebraTag) -> Result<Membership> {
    for (i, j, _) in a.nonzero() {
        let edge = |x: i64| x == -a.w || x == a.w + 1;
        if edge(i) || edge(j) {
            return Err(Error::Inconclusive(i, j));
        }
    }
    Ok(check_rules(a, tag))
}

/// Membership restricted to the window: every rule whose two positions
/// both lie in the window is checked. Suited to windows of infinite banded
/// matrices.
pub fn membership_on_window(a: &WindowedMatrix, tag: AlgebraTag) -> Membership {
    check_rules(a, tag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(m: usize) -> TruncPoly {
        TruncPoly::one(m)
    }

    #[test]
    fn t_examples() {
        let w = 3;
        let e11 = WindowedMatrix::unit(w, 1, 1, one(1));
        assert_eq!(t_conjugate(&e11, TVariant::Half, Direction::Forward), e11);

        let e01 = WindowedMatrix::unit(w, 0, 1, one(1));
        let t = t_conjugate(&e01, TVariant::Half, Direction::Forward);
        assert_eq!(t.get(0, 1), &TruncPoly::affine(1, -Scalar::half(), Scalar::one()));

        let e10 = WindowedMatrix::unit(w, 1, 0, one(1));
        let t = t_conjugate(&e10, TVariant::Half, Direction::Forward);
        assert_eq!(t.get(1, 0), &TruncPoly::affine(1, Scalar::from(-2), Scalar::from(-4)));
    }

    #[test]
    fn t_round_trip() {
        for variant in [TVariant::Half, TVariant::Integer] {
            let mut a = WindowedMatrix::zero(2, 3);
            for i in a.range() {
                for j in a.range() {
                    a.set(i, j, TruncPoly::affine(2, Scalar::from(i), Scalar::from(j)));
                }
            }
            let back = t_conjugate(&t_conjugate(&a, variant, Direction::Forward), variant, Direction::Inverse);
            assert_eq!(back, a);
        }
    }

    #[test]
    fn rho_examples() {
        let u = TruncPoly::u(1);
        let a = WindowedMatrix::unit(3, 0, 1, u.clone());
        assert_eq!(involution_apply(&a, Involution::RhoPlus).unwrap(), a);

        let e00 = WindowedMatrix::unit(3, 0, 0, one(1));
        let r = involution_apply(&e00, Involution::RhoMinus).unwrap();
        assert_eq!(r, WindowedMatrix::unit(3, 1, 1, one(1)));
    }

    #[test]
    fn w_at_m_zero() {
        for (i, j) in [(0, 1), (2, -1), (-1, -1)] {
            let e = WindowedMatrix::unit(3, i, j, one(0));
            for (which, sign) in [(Involution::WPlus, Scalar::one()), (Involution::WMinus, Scalar::sign_pow(i + j))] {
                let got = involution_apply(&e, which).unwrap();
                let ratio = &(&Scalar::half() - &Scalar::from(i)) / &(&Scalar::half() - &Scalar::from(j));
                let expect = WindowedMatrix::unit(3, 1 - j, 1 - i, TruncPoly::constant(0, &sign * &ratio));
                assert_eq!(got, expect);
            }
        }
    }

    #[test]
    fn membership_examples() {
        let e01 = WindowedMatrix::unit(3, 0, 1, one(1));
        assert!(classical_membership(&e01, AlgebraTag::C).unwrap().member);
        let d = classical_membership(&e01, AlgebraTag::D).unwrap();
        assert!(!d.member);
        assert_eq!(d.violation.unwrap().at, (0, 1));

        let u = TruncPoly::u(1);
        let mut a = WindowedMatrix::unit(3, 0, 0, u.clone());
        a.set(1, 1, u);
        assert!(classical_membership(&a, AlgebraTag::D).unwrap().member);

        let edge = WindowedMatrix::unit(3, 4, 4, one(0));
        assert_eq!(classical_membership(&edge, AlgebraTag::C), Err(Error::Inconclusive(4, 4)));
    }

    #[test]
    fn rho_t_intertwining_on_low_weights() {
        for sign in SignChoice::BOTH {
            for m in 0..=2 {
                let w = 3;
                for i in -w..=w + 1 {
                    for j in (i - 1).max(-w)..=(i + 1).min(w + 1) {
                        for l in 0..=m {
                            let e = WindowedMatrix::unit(w, i, j, TruncPoly::u(m).pow(l));
                            let lhs = involution_apply(&e, Involution::rho(sign)).unwrap();
                            let te = t_conjugate(&e, TVariant::Half, Direction::Forward);
                            let wte = involution_apply(&te, Involution::w(sign)).unwrap();
                            let rhs = t_conjugate(&wte, TVariant::Half, Direction::Inverse);
                            assert_eq!(lhs, rhs, "sign {} m {} E({},{}) u^{}", sign, m, i, j, l);
                        }
                    }
                }
            }
        }
    }
}
